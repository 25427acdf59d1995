//! Hilbert series of monomial quotients, Krull dimension (computed two
//! ways and cross-checked), Cohen-Macaulay certification via explicit
//! variable regular sequences, and regularity through the reduced
//! Hilbert numerator.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::groebner::{buchberger, initial_ideal};
use crate::monomial_ideal::{binomial, MonomialIdeal};
use crate::ring::{Monomial, MonomialOrder};
use crate::scroll::scroll_edge_ideal;

/// Dense univariate integer polynomial in `t`, little-endian.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly(Vec<i128>);

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    pub fn from_coeffs(c: Vec<i128>) -> Self {
        let mut p = IntPoly(c);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i128 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn eval_at_one(&self) -> i128 {
        self.0.iter().sum()
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.0.len().max(other.0.len());
        let mut out = vec![0i128; len];
        for (i, item) in out.iter_mut().enumerate() {
            *item = self.coeff(i) - other.coeff(i);
        }
        IntPoly::from_coeffs(out)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0i128; k];
        out.extend_from_slice(&self.0);
        IntPoly(out)
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: usize) -> IntPoly {
        let mut c = vec![0i128; k + 1];
        c[0] = 1;
        c[k] = -1;
        IntPoly(c)
    }

    /// Exact division by `1 - t`; `None` when the division has a remainder.
    pub fn div_one_minus_t(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        // p(t) = (1 - t) q(t): q_i = p_0 + p_1 + ... + p_i (prefix sums),
        // exact iff the full sum vanishes
        if self.eval_at_one() != 0 {
            return None;
        }
        let mut q = Vec::with_capacity(self.0.len() - 1);
        let mut acc = 0i128;
        for i in 0..self.0.len() - 1 {
            acc += self.0[i];
            q.push(acc);
        }
        Some(IntPoly::from_coeffs(q))
    }

    /// Coefficients of `self / (1-t)^e` as a power series, up to degree `d`.
    /// The coefficient of `t^m` in `(1-t)^{-e}` is `binomial(e-1+m, m)`.
    pub fn series_coeffs(&self, e: usize, d: usize) -> Vec<i128> {
        let mut out = vec![0i128; d + 1];
        for (i, item) in out.iter_mut().enumerate() {
            let mut acc = 0i128;
            for (j, c) in self.0.iter().enumerate() {
                if j > i {
                    break;
                }
                let m = (i - j) as u64;
                let binom = if e == 0 {
                    u64::from(m == 0)
                } else {
                    binomial(e as u64 - 1 + m, m)
                };
                acc += c * binom as i128;
            }
            *item = acc;
        }
        out
    }

    pub fn to_display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let body = match i {
                0 => format!("{mag}"),
                1 if mag == 1 => "t".to_string(),
                1 => format!("{mag}*t"),
                _ if mag == 1 => format!("t^{i}"),
                _ => format!("{mag}*t^{i}"),
            };
            if parts.is_empty() {
                parts.push(if c < 0 { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {}", if c < 0 { "-" } else { "+" }, body));
            }
        }
        parts.join(" ")
    }
}

/// The Hilbert series of a graded quotient written over a power of
/// `(1 - t)`: `numerator / (1 - t)^denominator_exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: IntPoly,
    pub denominator_exponent: usize,
}

impl HilbertSeries {
    pub fn degree(&self) -> usize {
        self.numerator.degree()
    }
}

/// Hilbert numerator `K(t)` of a monomial quotient over the full power
/// `(1-t)^{num_vars}`, by splitting on the lexicographically largest
/// minimal generator: with `J = (J', m)`,
/// `K(J) = K(J') - t^{deg m} K(J' : m)`. Memoized on the canonical
/// minimal generating set.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> IntPoly {
    let mut memo: HashMap<Vec<Monomial>, IntPoly> = HashMap::new();
    numerator_rec(ideal, &mut memo)
}

fn numerator_rec(ideal: &MonomialIdeal, memo: &mut HashMap<Vec<Monomial>, IntPoly>) -> IntPoly {
    let gens = ideal.min_gens();
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.iter().any(|m| m.is_one()) {
        return IntPoly::zero();
    }
    if gens.len() == 1 {
        return IntPoly::one_minus_t_pow(gens[0].degree() as usize);
    }
    if let Some(hit) = memo.get(gens) {
        return hit.clone();
    }
    // pairwise coprime generators form a complete intersection
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.coprime(b)));
    let result = if coprime {
        gens.iter().fold(IntPoly::one(), |acc, m| {
            acc.mul(&IntPoly::one_minus_t_pow(m.degree() as usize))
        })
    } else {
        let split = gens.last().expect("nonempty").clone();
        let rest: Vec<Monomial> = gens[..gens.len() - 1].to_vec();
        let without = MonomialIdeal::new(ideal.num_vars(), rest.clone());
        let colon = MonomialIdeal::new(
            ideal.num_vars(),
            rest.iter().map(|g| {
                Monomial::new(
                    g.exps()
                        .iter()
                        .zip(split.exps())
                        .map(|(&a, &b)| a.saturating_sub(b))
                        .collect(),
                )
            }),
        );
        let k_without = numerator_rec(&without, memo);
        let k_colon = numerator_rec(&colon, memo);
        k_without.sub(&k_colon.shift(split.degree() as usize))
    };
    memo.insert(gens.to_vec(), result.clone());
    result
}

/// Krull dimension of the quotient by a monomial ideal, computed both
/// from the pole order of the Hilbert series and combinatorially from
/// variable subsets; the two must agree.
pub fn krull_dim_monomial(ideal: &MonomialIdeal) -> Result<usize> {
    let nv = ideal.num_vars();
    let combinatorial = ideal.quotient_dim_combinatorial();
    let mut k = hilbert_numerator(ideal);
    let pole = if k.is_zero() {
        // unit ideal: zero ring
        0
    } else {
        let mut multiplicity = 0usize;
        while let Some(q) = k.div_one_minus_t() {
            multiplicity += 1;
            k = q;
            if multiplicity > nv {
                break;
            }
        }
        nv - multiplicity
    };
    if combinatorial != pole {
        return Err(Error::Inconsistency(format!(
            "Krull dimension mismatch: combinatorial {combinatorial} vs pole order {pole}"
        )));
    }
    Ok(combinatorial)
}

/// Reduce `K(t)/(1-t)^{num_vars}` to `P(t)/(1-t)^dim`; the division must
/// be exact and `P(1)` nonzero.
pub fn reduced_series(ideal: &MonomialIdeal) -> Result<HilbertSeries> {
    let nv = ideal.num_vars();
    let dim = krull_dim_monomial(ideal)?;
    let mut p = hilbert_numerator(ideal);
    for _ in 0..(nv - dim) {
        p = p.div_one_minus_t().ok_or_else(|| {
            Error::Inconsistency("Hilbert numerator not divisible by (1 - t)^codim".into())
        })?;
    }
    if p.eval_at_one() == 0 {
        return Err(Error::Inconsistency(
            "reduced Hilbert numerator vanishes at t = 1".into(),
        ));
    }
    Ok(HilbertSeries {
        numerator: p,
        denominator_exponent: dim,
    })
}

/// Whether `x_v` is a nonzerodivisor on the quotient by a monomial ideal:
/// `(J : x_v) = J`, with the colon computed on minimal generators.
pub fn is_regular_on_monomial_quotient(ideal: &MonomialIdeal, v: usize) -> bool {
    ideal.colon_var(v) == *ideal
}

/// Outcome of the blockwise Cohen-Macaulay certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CmCertificate {
    /// The distinguished variables form a regular sequence cutting the
    /// initial quotient down to an Artinian ring; depth >= dim follows.
    Certified { regular_vars: Vec<usize> },
    /// The certificate does not apply; the quotient may or may not be
    /// Cohen-Macaulay.
    Unavailable { reason: String },
}

impl CmCertificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, CmCertificate::Certified { .. })
    }
}

/// Blockwise Cohen-Macaulay certificate for the revlex initial quotient
/// of a closed labeling.
///
/// Per connected component with vertex span `[u, v]` the distinguished
/// variables are `x_u` and `x_{v+1}`. The certificate demands that the
/// initial ideal splits as the sum of the per-component initial ideals
/// with pairwise disjoint supports, that every distinguished variable
/// avoids those supports (hence the set is a regular sequence), and that
/// killing the distinguished variables leaves an Artinian quotient. That
/// forces depth >= dim for the initial quotient; Cohen-Macaulayness of
/// the original quotient is then inherited along the flat degeneration
/// (recorded as an assumption of the pipeline, not re-proved here).
pub fn certify_cm(g: &LabeledGraph) -> Result<CmCertificate> {
    if !g.is_closed_labeling() {
        return Err(Error::NotClosed);
    }
    let n = g.num_vertices();
    let nv = n + 1;
    let full_init = initial_ideal(&buchberger(
        &scroll_edge_ideal(g),
        MonomialOrder::GradedRevLex,
    ));

    let components = g.connected_components();
    let mut component_sum = MonomialIdeal::zero(nv);
    let mut seen_support: BTreeSet<usize> = BTreeSet::new();
    let mut distinguished: BTreeSet<usize> = BTreeSet::new();
    for block in &components {
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(i, _)| block.contains(&i))
            .collect();
        let sub = LabeledGraph::from_edges(n, &edges).expect("subgraph of a simple graph");
        let init = initial_ideal(&buchberger(
            &scroll_edge_ideal(&sub),
            MonomialOrder::GradedRevLex,
        ));
        let support = init.support();
        if !seen_support.is_disjoint(&support) {
            return Ok(CmCertificate::Unavailable {
                reason: format!(
                    "initial supports of components overlap near block {:?}",
                    block
                ),
            });
        }
        seen_support.extend(support.iter().copied());
        component_sum = component_sum.sum(&init);
        let u = *block.first().expect("blocks are nonempty");
        let v = *block.last().expect("blocks are nonempty");
        distinguished.insert(u - 1); // x_u
        distinguished.insert(v); // x_{v+1}
    }

    if component_sum != full_init {
        return Ok(CmCertificate::Unavailable {
            reason: "initial ideal is not the sum of the component initial ideals".into(),
        });
    }
    for &var in &distinguished {
        if seen_support.contains(&var) {
            return Ok(CmCertificate::Unavailable {
                reason: format!(
                    "distinguished variable x{} meets the initial support",
                    var + 1
                ),
            });
        }
        debug_assert!(is_regular_on_monomial_quotient(&full_init, var));
    }
    if !full_init.quotient_is_artinian_after(&distinguished) {
        return Ok(CmCertificate::Unavailable {
            reason: "quotient by the distinguished variables is not Artinian".into(),
        });
    }
    // regular sequence length equals the dimension exactly
    let dim = krull_dim_monomial(&full_init)?;
    if distinguished.len() != dim {
        return Err(Error::Inconsistency(format!(
            "certificate length {} differs from dimension {dim}",
            distinguished.len()
        )));
    }
    Ok(CmCertificate::Certified {
        regular_vars: distinguished.into_iter().collect(),
    })
}

/// Castelnuovo-Mumford regularity of the quotient by the edge ideal of a
/// closed labeling, as the degree of the reduced Hilbert numerator of the
/// revlex initial ideal. Refuses without a Cohen-Macaulay certificate.
pub fn regularity_cm(g: &LabeledGraph) -> Result<usize> {
    match certify_cm(g)? {
        CmCertificate::Certified { .. } => {}
        CmCertificate::Unavailable { reason } => return Err(Error::UncertifiedCm(reason)),
    }
    let init = initial_ideal(&buchberger(
        &scroll_edge_ideal(g),
        MonomialOrder::GradedRevLex,
    ));
    Ok(reduced_series(&init)?.degree())
}

/// Regularity from an already-computed monomial initial ideal (used to
/// compare the predicted and the computed route).
pub fn regularity_of_initial(init: &MonomialIdeal) -> Result<usize> {
    Ok(reduced_series(init)?.degree())
}

/// Comparison of the certified regularity against the maximal clique
/// count (summed over components, which is just the global count).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityBound {
    pub regularity: usize,
    pub clique_count: usize,
    pub ok: bool,
}

pub fn regularity_bound_check(g: &LabeledGraph) -> Result<RegularityBound> {
    let reg = regularity_cm(g)?;
    let r = g.maximal_cliques()?.len();
    Ok(RegularityBound {
        regularity: reg,
        clique_count: r,
        ok: reg <= r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::clique_intervals;
    use crate::scroll::predicted_initial_ideal;

    fn squares_ideal(n: usize) -> MonomialIdeal {
        // (x2^2, ..., xn^2) in n + 1 variables
        MonomialIdeal::new(
            n + 1,
            (1..n).map(|i| {
                let mut e = vec![0u32; n + 1];
                e[i] = 2;
                Monomial::new(e)
            }),
        )
    }

    #[test]
    fn numerator_examples() {
        assert_eq!(hilbert_numerator(&MonomialIdeal::zero(5)), IntPoly::one());
        // principal (x1^2): 1 - t^2
        let principal = MonomialIdeal::new(3, vec![Monomial::new(vec![2, 0, 0])]);
        assert_eq!(
            hilbert_numerator(&principal),
            IntPoly::one_minus_t_pow(2)
        );
        // complete intersection of quadrics: (1 - t^2)^{n-1}
        for n in 2..=6 {
            let expected = (1..n).fold(IntPoly::one(), |acc, _| {
                acc.mul(&IntPoly::one_minus_t_pow(2))
            });
            assert_eq!(hilbert_numerator(&squares_ideal(n)), expected);
        }
    }

    #[test]
    fn series_matches_standard_monomial_counts() {
        // the expanded series of K(t)/(1-t)^nv counts standard monomials
        let ideals = vec![
            MonomialIdeal::zero(4),
            squares_ideal(4),
            MonomialIdeal::interval_square(5, 1, 4),
            MonomialIdeal::new(
                5,
                vec![
                    Monomial::new(vec![0, 1, 1, 0, 0]),
                    Monomial::new(vec![0, 0, 1, 1, 0]),
                    Monomial::new(vec![1, 0, 0, 2, 0]),
                ],
            ),
        ];
        for ideal in &ideals {
            let k = hilbert_numerator(ideal);
            let series = k.series_coeffs(ideal.num_vars(), 6);
            for d in 0..=6u32 {
                assert_eq!(
                    series[d as usize],
                    ideal.standard_monomials_of_degree(d) as i128,
                    "degree {d} of {:?}",
                    ideal.min_gens()
                );
            }
        }
    }

    #[test]
    fn dimensions_cross_check() {
        assert_eq!(krull_dim_monomial(&MonomialIdeal::zero(6)).unwrap(), 6);
        assert_eq!(krull_dim_monomial(&squares_ideal(5)).unwrap(), 2);
        // predicted initial quotient of a connected closed graph has dim 2
        let g = LabeledGraph::from_cliques(6, &[(1, 4), (3, 5), (4, 6)]).unwrap();
        let init = predicted_initial_ideal(&clique_intervals(&g).unwrap(), 6);
        assert_eq!(krull_dim_monomial(&init).unwrap(), 2);
    }

    #[test]
    fn reduced_series_examples() {
        // line graph: P = (1 + t)^{n-1} over (1-t)^2
        let series = reduced_series(&squares_ideal(4)).unwrap();
        assert_eq!(series.denominator_exponent, 2);
        assert_eq!(series.numerator.coeffs(), &[1, 3, 3, 1]);
        // zero ideal: P = 1
        let zero = reduced_series(&MonomialIdeal::zero(4)).unwrap();
        assert_eq!(zero.numerator, IntPoly::one());
        assert_eq!(zero.denominator_exponent, 4);
    }

    #[test]
    fn remark_family_series() {
        // consecutive cliques [a_i, a_{i+1}]: P = prod (1 + (a_{i+1} - a_i) t)
        let cuts = [1usize, 3, 4, 7]; // cliques [1,3], [3,4], [4,7] on n = 7
        let cliques: Vec<(usize, usize)> = cuts.windows(2).map(|w| (w[0], w[1])).collect();
        let g = LabeledGraph::from_cliques(7, &cliques).unwrap();
        let init = predicted_initial_ideal(&clique_intervals(&g).unwrap(), 7);
        let series = reduced_series(&init).unwrap();
        let expected = cuts
            .windows(2)
            .fold(IntPoly::one(), |acc, w| {
                acc.mul(&IntPoly::from_coeffs(vec![1, (w[1] - w[0]) as i128]))
            });
        assert_eq!(series.numerator, expected);
        assert_eq!(series.degree(), cliques.len());
    }

    #[test]
    fn variable_regularity() {
        let squares = squares_ideal(4);
        assert!(is_regular_on_monomial_quotient(&squares, 0)); // x1
        assert!(is_regular_on_monomial_quotient(&squares, 4)); // x5
        assert!(!is_regular_on_monomial_quotient(&squares, 1)); // x2^2 in J
        assert!(is_regular_on_monomial_quotient(&MonomialIdeal::zero(3), 1));
    }

    #[test]
    fn cm_certificates() {
        // connected closed graphs certify with exactly (x1, x_{n+1})
        let g = LabeledGraph::from_cliques(5, &[(1, 3), (2, 5)]).unwrap();
        match certify_cm(&g).unwrap() {
            CmCertificate::Certified { regular_vars } => assert_eq!(regular_vars, vec![0, 5]),
            other => panic!("expected certificate, got {other:?}"),
        }
        assert!(certify_cm(&LabeledGraph::complete(6)).unwrap().is_certified());
        // two disjoint edges: blockwise certificate
        let disc = LabeledGraph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        match certify_cm(&disc).unwrap() {
            CmCertificate::Certified { regular_vars } => {
                assert_eq!(regular_vars, vec![0, 2, 4])
            }
            other => panic!("expected certificate, got {other:?}"),
        }
        // interleaved components: certificate legitimately unavailable
        let skew = LabeledGraph::from_edges(3, &[(1, 3)]).unwrap();
        assert!(!certify_cm(&skew).unwrap().is_certified());
        assert!(matches!(regularity_cm(&skew), Err(Error::UncertifiedCm(_))));
        // non-closed labelings are refused outright
        let star = LabeledGraph::from_edges(6, &[(1, 2), (2, 3), (2, 4), (4, 5), (4, 6)]).unwrap();
        assert!(matches!(certify_cm(&star), Err(Error::NotClosed)));
    }

    #[test]
    fn regularity_examples() {
        // three overlapping cliques on [6]: regularity 2, strictly below r = 3
        let g = LabeledGraph::from_cliques(6, &[(1, 4), (3, 5), (4, 6)]).unwrap();
        assert_eq!(regularity_cm(&g).unwrap(), 2);
        let bound = regularity_bound_check(&g).unwrap();
        assert_eq!((bound.regularity, bound.clique_count, bound.ok), (2, 3, true));
        // complete graph: regularity 1 = r
        assert_eq!(regularity_cm(&LabeledGraph::complete(5)).unwrap(), 1);
        // any two-clique closed graph: regularity 2
        for cliques in [[(1, 2), (2, 5)], [(1, 3), (2, 5)], [(1, 4), (4, 5)]] {
            let g = LabeledGraph::from_cliques(5, &cliques).unwrap();
            assert_eq!(regularity_cm(&g).unwrap(), 2);
        }
    }

    #[test]
    fn regularity_route_invariance() {
        // predicted and computed initial ideals give the same regularity
        use crate::graph::{enumerate_graphs, GraphFilter};
        for g in enumerate_graphs(5, GraphFilter::ConnectedClosed).unwrap() {
            let predicted = predicted_initial_ideal(&clique_intervals(&g).unwrap(), 5);
            let via_predicted = regularity_of_initial(&predicted).unwrap();
            let via_computed = regularity_cm(&g).unwrap();
            assert_eq!(via_predicted, via_computed, "graph {:?}", g.edges());
        }
    }

    #[test]
    fn artinian_truncation_of_connected_closed() {
        // for connected closed G, the quotient by the initial ideal plus
        // (x1, x_{n+1}) vanishes in every degree above the clique count
        use crate::graph::{enumerate_graphs, GraphFilter};
        for g in enumerate_graphs(5, GraphFilter::ConnectedClosed).unwrap() {
            let n = g.num_vertices();
            let init = initial_ideal(&buchberger(
                &scroll_edge_ideal(&g),
                MonomialOrder::GradedRevLex,
            ));
            let killed = init.sum(&MonomialIdeal::new(
                n + 1,
                [
                    Monomial::var(n + 1, 0),
                    Monomial::var(n + 1, n),
                ],
            ));
            let r = g.maximal_cliques().unwrap().len();
            for d in (r + 1)..=(r + 3) {
                assert_eq!(killed.standard_monomials_of_degree(d as u32), 0);
            }
        }
    }
}
