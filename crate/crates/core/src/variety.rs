//! Brute-force point enumeration over small prime fields. This gives
//! Groebner-independent *evidence* for variety-level claims; every
//! consumer must label results from here as evidence, not proof.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ring::Polynomial;

const POINT_BUDGET: u64 = 10_000_000;
const ALLOWED_PRIMES: [u64; 4] = [2, 3, 5, 7];

/// A point of affine space over the prime field `F_q`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FieldPoint {
    pub q: u64,
    pub coordinates: Vec<u64>,
}

/// A polynomial with coefficients reduced mod `q`, flattened for fast
/// evaluation.
struct ModPoly {
    terms: Vec<(Vec<u32>, u64)>,
}

impl ModPoly {
    fn reduce(f: &Polynomial, q: u64) -> Result<ModPoly> {
        let cleared = f.cleared_denominators();
        if !cleared.has_integer_coefficients() {
            return Err(Error::InvalidInput(
                "generator has non-integral coefficients after clearing".into(),
            ));
        }
        let mut terms = Vec::with_capacity(cleared.num_terms());
        for (m, c) in cleared.terms() {
            let numer: &BigInt = c.numer();
            let qi = BigInt::from(q);
            let mut r = numer % &qi;
            if r.is_negative() {
                r += &qi;
            }
            let r = r.to_u64().expect("residue fits");
            if r != 0 {
                terms.push((m.exps().to_vec(), r));
            }
        }
        Ok(ModPoly { terms })
    }

    fn eval(&self, point: &[u64], q: u64) -> u64 {
        let mut acc = 0u64;
        for (exps, c) in &self.terms {
            let mut term = *c;
            for (x, &e) in point.iter().zip(exps) {
                for _ in 0..e {
                    term = term * x % q;
                }
            }
            acc = (acc + term) % q;
        }
        acc
    }
}

fn check_budget(ideal: &Ideal, q: u64) -> Result<()> {
    if !ALLOWED_PRIMES.contains(&q) {
        return Err(Error::InvalidInput(format!(
            "field size {q} not in the allowed prime list {ALLOWED_PRIMES:?}"
        )));
    }
    let points = (q as f64).powi(ideal.num_vars() as i32);
    if points > POINT_BUDGET as f64 {
        return Err(Error::Budget(format!(
            "{q}^{} exceeds the {POINT_BUDGET}-point budget",
            ideal.num_vars()
        )));
    }
    Ok(())
}

/// All points of `F_q^{num_vars}` where every generator vanishes, in
/// lexicographic coordinate order.
pub fn variety_points(ideal: &Ideal, q: u64) -> Result<Vec<FieldPoint>> {
    check_budget(ideal, q)?;
    let gens: Vec<ModPoly> = ideal
        .generators()
        .iter()
        .map(|g| ModPoly::reduce(g, q))
        .collect::<Result<_>>()?;
    let nv = ideal.num_vars();
    let mut out = Vec::new();
    let mut point = vec![0u64; nv];
    loop {
        if gens.iter().all(|g| g.eval(&point, q) == 0) {
            out.push(FieldPoint {
                q,
                coordinates: point.clone(),
            });
        }
        // odometer increment, last coordinate fastest
        let mut pos = nv;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            point[pos] += 1;
            if point[pos] < q {
                break;
            }
            point[pos] = 0;
        }
    }
}

/// Pointwise equality `V(I) = V(P_1) ∪ ... ∪ V(P_k)` over `F_q`. Returns
/// the first mismatching point in enumeration order, if any.
pub fn variety_union_equal(
    ideal: &Ideal,
    primes: &[Ideal],
    q: u64,
) -> Result<(bool, Option<FieldPoint>)> {
    check_budget(ideal, q)?;
    let gens: Vec<ModPoly> = ideal
        .generators()
        .iter()
        .map(|g| ModPoly::reduce(g, q))
        .collect::<Result<_>>()?;
    let prime_gens: Vec<Vec<ModPoly>> = primes
        .iter()
        .map(|p| {
            p.generators()
                .iter()
                .map(|g| ModPoly::reduce(g, q))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;

    let nv = ideal.num_vars();
    let mut point = vec![0u64; nv];
    loop {
        let in_v = gens.iter().all(|g| g.eval(&point, q) == 0);
        let in_union = prime_gens
            .iter()
            .any(|p| p.iter().all(|g| g.eval(&point, q) == 0));
        if in_v != in_union {
            return Ok((
                false,
                Some(FieldPoint {
                    q,
                    coordinates: point,
                }),
            ));
        }
        let mut pos = nv;
        loop {
            if pos == 0 {
                return Ok((true, None));
            }
            pos -= 1;
            point[pos] += 1;
            if point[pos] < q {
                break;
            }
            point[pos] = 0;
        }
    }
}

/// Evaluate a polynomial at a point mod `q` (used by consistency tests).
pub fn eval_mod(f: &Polynomial, point: &[u64], q: u64) -> Result<u64> {
    if point.len() != f.num_vars() {
        return Err(Error::RingMismatch {
            expected: f.num_vars(),
            found: point.len(),
        });
    }
    Ok(ModPoly::reduce(f, q)?.eval(point, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;
    use crate::text::parse;
    use proptest::prelude::*;

    #[test]
    fn conic_point_count_over_f2() {
        let ring = PolyRing::new(3);
        let ideal = Ideal::new(3, vec![parse("x1*x3 - x2^2", &ring).unwrap()]);
        let pts = variety_points(&ideal, 2).unwrap();
        assert_eq!(pts.len(), 4);
    }

    #[test]
    fn degenerate_ideals() {
        let ring = PolyRing::new(3);
        assert_eq!(variety_points(&Ideal::zero(3), 3).unwrap().len(), 27);
        let vars = Ideal::new(3, (0..3).map(|i| ring.var(i)).collect());
        let pts = variety_points(&vars, 5).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(pts[0].coordinates.iter().all(|&c| c == 0));
    }

    #[test]
    fn budget_and_prime_checks() {
        assert!(variety_points(&Ideal::zero(3), 4).is_err());
        assert!(variety_points(&Ideal::zero(16), 7).is_err());
    }

    #[test]
    fn containment_is_monotone_on_varieties() {
        // I ⊆ J forces V(I) ⊇ V(J); the path ideal sits inside the full
        // minor ideal
        use crate::graph::LabeledGraph;
        use crate::scroll::{scroll_edge_ideal, scroll_full_ideal};
        let path = scroll_edge_ideal(&LabeledGraph::path(4));
        let full = scroll_full_ideal(4).unwrap();
        for q in [2, 3] {
            let vp = variety_points(&path, q).unwrap();
            let vf = variety_points(&full, q).unwrap();
            assert!(vf.iter().all(|p| vp.contains(p)), "q = {q}");
            assert!(vf.len() < vp.len(), "strict for the path at q = {q}");
        }
    }

    #[test]
    fn union_mismatch_reports_witness() {
        // V(x1*x2) != V(x1): the first mismatch has x1 nonzero, x2 zero
        let ring = PolyRing::new(2);
        let product = Ideal::new(2, vec![ring.var(0).mul(&ring.var(1)).unwrap()]);
        let first = Ideal::new(2, vec![ring.var(0)]);
        let (equal, witness) =
            variety_union_equal(&product, std::slice::from_ref(&first), 3).unwrap();
        assert!(!equal);
        assert_eq!(witness.unwrap().coordinates, vec![1, 0]);
        let second = Ideal::new(2, vec![ring.var(1)]);
        let (equal, _) = variety_union_equal(&product, &[first, second], 3).unwrap();
        assert!(equal);
    }

    proptest! {
        // ring homomorphism: evaluation commutes with + and *
        #[test]
        fn evaluation_is_a_homomorphism(
            a_terms in proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -4i64..5), 0..5),
            b_terms in proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -4i64..5), 0..5),
            point in proptest::collection::vec(0u64..5, 3),
        ) {
            use crate::ring::{Coefficient, Monomial, Polynomial};
            let q = 5u64;
            let f = Polynomial::from_terms(3, a_terms.into_iter().map(|(e, c)| (Monomial::new(e), Coefficient::from_integer(c.into()))));
            let g = Polynomial::from_terms(3, b_terms.into_iter().map(|(e, c)| (Monomial::new(e), Coefficient::from_integer(c.into()))));
            let sum = f.add(&g).unwrap();
            let prod = f.mul(&g).unwrap();
            let ef = eval_mod(&f, &point, q).unwrap();
            let eg = eval_mod(&g, &point, q).unwrap();
            prop_assert_eq!(eval_mod(&sum, &point, q).unwrap(), (ef + eg) % q);
            prop_assert_eq!(eval_mod(&prod, &point, q).unwrap(), ef * eg % q);
        }
    }
}
