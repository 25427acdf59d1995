//! Buchberger's algorithm, normal forms, reduced Groebner bases and the
//! ideal operations built on them (membership, equality, elimination,
//! intersection, saturation, radical membership, graded dimensions).

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::monomial_ideal::{count_monomials_of_degree, MonomialIdeal};
use crate::ring::{Coefficient, Monomial, MonomialOrder, PolyRing, Polynomial};

/// An ideal given by a deterministic list of nonzero generators.
/// The empty list is legal and denotes the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    num_vars: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(num_vars: usize, generators: Vec<Polynomial>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            num_vars,
            generators,
        }
    }

    pub fn zero(num_vars: usize) -> Self {
        Ideal {
            num_vars,
            generators: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }
}

/// A reduced Groebner basis: monic elements, no term of any element
/// divisible by the leading monomial of another, sorted descending by
/// leading monomial. Unique per (ideal, order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    num_vars: usize,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(self.order).expect("nonzero"))
            .collect()
    }

    /// True when the basis generates the unit ideal.
    pub fn is_unit_ideal(&self) -> bool {
        self.elements
            .iter()
            .any(|g| g.num_terms() == 1 && g.leading_monomial(self.order).unwrap().is_one())
    }
}

/// S-polynomial `(lcm/lt f) f - (lcm/lt g) g` of the monic forms of `f`, `g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: MonomialOrder) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput("s_polynomial of the zero polynomial"));
    }
    let f = f.make_monic(ord)?;
    let g = g.make_monic(ord)?;
    let lm_f = f.leading_monomial(ord)?;
    let lm_g = g.leading_monomial(ord)?;
    let lcm = lm_f.lcm(&lm_g);
    let uf = lcm.checked_div(&lm_f).expect("lcm divisible");
    let ug = lcm.checked_div(&lm_g).expect("lcm divisible");
    let one = Coefficient::one();
    f.mul_term(&uf, &one).sub(&g.mul_term(&ug, &one))
}

/// Remainder of multivariate division of `f` by `basis` under `ord`.
///
/// No term of the remainder is divisible by any basis leading monomial,
/// and `f - remainder` lies in the ideal generated by `basis`. The empty
/// basis returns `f` unchanged. Reduction always rewrites the largest
/// reducible term by the first eligible divisor, so the result is
/// deterministic for a fixed basis order.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: MonomialOrder) -> Polynomial {
    normal_form_with_quotients(f, basis, ord).0
}

/// Normal form plus the division record: returns `(r, q)` with
/// `f = sum q_i * basis_i + r` exactly.
pub fn normal_form_with_quotients(
    f: &Polynomial,
    basis: &[Polynomial],
    ord: MonomialOrder,
) -> (Polynomial, Vec<Polynomial>) {
    let nv = f.num_vars();
    let mut quotients = vec![Polynomial::zero(nv); basis.len()];
    let mut remainder = Polynomial::zero(nv);
    let mut work = f.clone();

    let leads: Vec<(Monomial, Coefficient)> = basis
        .iter()
        .map(|b| b.leading_term(ord).expect("basis elements must be nonzero"))
        .collect();

    'outer: while !work.is_zero() {
        let (lm, lc) = work.leading_term(ord).expect("nonzero");
        for (i, (blm, blc)) in leads.iter().enumerate() {
            if let Some(q) = lm.checked_div(blm) {
                let qc = &lc / blc;
                quotients[i] = quotients[i]
                    .add(&Polynomial::from_term(nv, q.clone(), qc.clone()))
                    .expect("same ring");
                work = work.sub(&basis[i].mul_term(&q, &qc)).expect("same ring");
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        remainder = remainder
            .add(&Polynomial::from_term(nv, lm.clone(), lc.clone()))
            .expect("same ring");
        work = work
            .sub(&Polynomial::from_term(nv, lm, lc))
            .expect("same ring");
    }
    (remainder, quotients)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    ord: MonomialOrder,
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Pair {}
impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Pair {
    // BinaryHeap is a max-heap; reverse so the minimal lcm pops first
    // (normal selection strategy), tie-broken by order then indices.
    fn cmp(&self, other: &Self) -> Ordering {
        let deg = self.lcm.degree().cmp(&other.lcm.degree());
        let by_mono = deg.then_with(|| self.ord.compare(&self.lcm, &other.lcm));
        by_mono
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
            .reverse()
    }
}

/// Buchberger's algorithm; returns the reduced Groebner basis.
///
/// Pair selection is by minimal lcm degree; pairs with coprime leading
/// monomials are skipped (the product criterion). The final basis is
/// minimized, fully autoreduced and sorted descending by leading
/// monomial, so the output is the unique reduced basis of the ideal.
pub fn buchberger(ideal: &Ideal, ord: MonomialOrder) -> GroebnerBasis {
    let nv = ideal.num_vars();
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in ideal.generators() {
        let monic = g.make_monic(ord).expect("generators are nonzero");
        if !basis.contains(&monic) {
            basis.push(monic);
        }
    }

    let mut heap: BinaryHeap<Pair> = BinaryHeap::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            push_pair(&mut heap, &basis, i, j, ord);
        }
    }

    while let Some(Pair { i, j, lcm, .. }) = heap.pop() {
        let lm_i = basis[i].leading_monomial(ord).unwrap();
        let lm_j = basis[j].leading_monomial(ord).unwrap();
        if lm_i.coprime(&lm_j) {
            continue; // product criterion
        }
        debug_assert_eq!(lcm, lm_i.lcm(&lm_j));
        let s = s_polynomial(&basis[i], &basis[j], ord).expect("nonzero basis");
        let r = normal_form(&s, &basis, ord);
        if !r.is_zero() {
            let r = r.make_monic(ord).unwrap();
            let new_idx = basis.len();
            basis.push(r);
            for k in 0..new_idx {
                push_pair(&mut heap, &basis, k, new_idx, ord);
            }
        }
    }

    reduce_basis(&mut basis, ord);
    GroebnerBasis {
        num_vars: nv,
        order: ord,
        elements: basis,
    }
}

fn push_pair(heap: &mut BinaryHeap<Pair>, basis: &[Polynomial], i: usize, j: usize, ord: MonomialOrder) {
    let lcm = basis[i]
        .leading_monomial(ord)
        .unwrap()
        .lcm(&basis[j].leading_monomial(ord).unwrap());
    heap.push(Pair { i, j, lcm, ord });
}

/// Minimize (drop elements whose leading monomial another divides) and
/// autoreduce to the unique reduced basis.
fn reduce_basis(basis: &mut Vec<Polynomial>, ord: MonomialOrder) {
    // minimal generating set of the leading-term ideal
    let mut keep: Vec<Polynomial> = Vec::new();
    let mut sorted = std::mem::take(basis);
    sorted.sort_by(|a, b| {
        ord.compare(
            &a.leading_monomial(ord).unwrap(),
            &b.leading_monomial(ord).unwrap(),
        )
    });
    for g in sorted {
        let lm = g.leading_monomial(ord).unwrap();
        if !keep
            .iter()
            .any(|h| h.leading_monomial(ord).unwrap().divides(&lm))
        {
            keep.push(g);
        }
    }
    // tail-reduce every element against the others until stable
    loop {
        let mut changed = false;
        for i in 0..keep.len() {
            let others: Vec<Polynomial> = keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let reduced = normal_form(&keep[i], &others, ord);
            let reduced = reduced.make_monic(ord).expect("reduced GB element vanished");
            if reduced != keep[i] {
                keep[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    keep.sort_by(|a, b| {
        ord.compare(
            &b.leading_monomial(ord).unwrap(),
            &a.leading_monomial(ord).unwrap(),
        )
    });
    *basis = keep;
}

/// Buchberger criterion on the generators as given: true iff every
/// pairwise S-polynomial reduces to zero modulo the generator list.
pub fn is_groebner(ideal: &Ideal, ord: MonomialOrder) -> bool {
    let gens = ideal.generators();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let lm_i = gens[i].leading_monomial(ord).unwrap();
            let lm_j = gens[j].leading_monomial(ord).unwrap();
            if lm_i.coprime(&lm_j) {
                continue;
            }
            let s = s_polynomial(&gens[i], &gens[j], ord).expect("nonzero");
            if !normal_form(&s, gens, ord).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Leading monomials of a reduced basis as a monomial ideal.
pub fn initial_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(gb.num_vars(), gb.leading_monomials())
}

/// Ideal membership via normal form against a Groebner basis.
pub fn ideal_member(f: &Polynomial, gb: &GroebnerBasis) -> Result<bool> {
    if f.num_vars() != gb.num_vars() {
        return Err(Error::RingMismatch {
            expected: gb.num_vars(),
            found: f.num_vars(),
        });
    }
    Ok(normal_form(f, gb.elements(), gb.order()).is_zero())
}

/// Ideal equality through uniqueness of the reduced Groebner basis.
pub fn ideal_equal(lhs: &Ideal, rhs: &Ideal, ord: MonomialOrder) -> Result<bool> {
    if lhs.num_vars() != rhs.num_vars() {
        return Err(Error::RingMismatch {
            expected: lhs.num_vars(),
            found: rhs.num_vars(),
        });
    }
    Ok(buchberger(lhs, ord).elements() == buchberger(rhs, ord).elements())
}

/// Generators of `I` intersected with the subring that omits the first
/// `k` variables: basis elements of an elimination-order Groebner basis
/// that avoid those variables.
pub fn eliminate(ideal: &Ideal, k: usize) -> Ideal {
    let gb = buchberger(ideal, MonomialOrder::Elimination(k));
    let kept: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter(|g| g.terms().all(|(m, _)| m.exps()[..k].iter().all(|&e| e == 0)))
        .cloned()
        .collect();
    Ideal::new(ideal.num_vars(), kept)
}

/// Move an ideal into the ring with the auxiliary variable prepended.
fn extend_ideal(ideal: &Ideal) -> Vec<Polynomial> {
    ideal
        .generators()
        .iter()
        .map(|g| g.extend_with_aux())
        .collect()
}

/// Project an elimination result (free of the auxiliary variable) back
/// to the base ring.
fn contract_ideal(ideal: &Ideal, base_vars: usize, base_order: MonomialOrder) -> Ideal {
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.drop_aux().expect("eliminated variable still present"))
        .collect();
    gens.sort_by(|a, b| {
        base_order.compare(
            &b.leading_monomial(base_order).unwrap(),
            &a.leading_monomial(base_order).unwrap(),
        )
    });
    Ideal::new(base_vars, gens)
}

/// Intersection `I ∩ J` via `t*I + (1-t)*J` and elimination of `t`.
pub fn intersect(lhs: &Ideal, rhs: &Ideal) -> Result<Ideal> {
    if lhs.num_vars() != rhs.num_vars() {
        return Err(Error::RingMismatch {
            expected: lhs.num_vars(),
            found: rhs.num_vars(),
        });
    }
    let nv = lhs.num_vars();
    let ext = PolyRing::new(nv + 1);
    let t = ext.var(0);
    let one_minus_t = ext.one().sub(&t)?;
    let mut gens = Vec::new();
    for g in extend_ideal(lhs) {
        gens.push(t.mul(&g)?);
    }
    for g in extend_ideal(rhs) {
        gens.push(one_minus_t.mul(&g)?);
    }
    let eliminated = eliminate(&Ideal::new(nv + 1, gens), 1);
    Ok(contract_ideal(&eliminated, nv, MonomialOrder::GradedRevLex))
}

/// Saturation `I : f^∞` via `I + (t*f - 1)` and elimination of `t`.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroInput("saturation by the zero polynomial"));
    }
    if f.num_vars() != ideal.num_vars() {
        return Err(Error::RingMismatch {
            expected: ideal.num_vars(),
            found: f.num_vars(),
        });
    }
    let nv = ideal.num_vars();
    let ext = PolyRing::new(nv + 1);
    let t = ext.var(0);
    let mut gens = extend_ideal(ideal);
    gens.push(t.mul(&f.extend_with_aux())?.sub(&ext.one())?);
    let eliminated = eliminate(&Ideal::new(nv + 1, gens), 1);
    Ok(contract_ideal(&eliminated, nv, MonomialOrder::GradedRevLex))
}

/// Radical membership `f ∈ √I` by checking whether `I + (t*f - 1)` is
/// the unit ideal in the extended ring.
pub fn radical_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroInput("radical membership of the zero polynomial"));
    }
    if f.num_vars() != ideal.num_vars() {
        return Err(Error::RingMismatch {
            expected: ideal.num_vars(),
            found: f.num_vars(),
        });
    }
    let nv = ideal.num_vars();
    let ext = PolyRing::new(nv + 1);
    let t = ext.var(0);
    let mut gens = extend_ideal(ideal);
    gens.push(t.mul(&f.extend_with_aux())?.sub(&ext.one())?);
    let gb = buchberger(&Ideal::new(nv + 1, gens), MonomialOrder::GradedRevLex);
    Ok(gb.is_unit_ideal())
}

/// Dimension of the degree-`d` graded piece of the ideal: all monomials
/// of degree `d` minus the standard monomials of the initial ideal.
pub fn graded_dim_ideal(ideal: &Ideal, d: u32, ord: MonomialOrder) -> u64 {
    if ideal.is_zero_ideal() {
        return 0;
    }
    let init = initial_ideal(&buchberger(ideal, ord));
    count_monomials_of_degree(ideal.num_vars(), d) - init.standard_monomials_of_degree(d)
}
