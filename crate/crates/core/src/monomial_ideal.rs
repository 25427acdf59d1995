//! Monomial ideals given by their unique minimal generating set.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ring::Monomial;

/// A monomial ideal, stored as the divisibility antichain of minimal
/// generators (the unique minimal generating set).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    num_vars: usize,
    min_gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Build from an arbitrary generating set; redundant generators are
    /// dropped and the result is sorted canonically.
    pub fn new(num_vars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let set: BTreeSet<Monomial> = gens.into_iter().collect();
        let mut min: Vec<Monomial> = Vec::new();
        for m in set.iter().rev() {
            if !set.iter().any(|g| g != m && g.divides(m)) {
                min.push(m.clone());
            }
        }
        MonomialIdeal {
            num_vars,
            min_gens: min,
        }
    }

    pub fn zero(num_vars: usize) -> Self {
        MonomialIdeal {
            num_vars,
            min_gens: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn min_gens(&self) -> &[Monomial] {
        &self.min_gens
    }

    pub fn is_zero(&self) -> bool {
        self.min_gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.min_gens.iter().any(|g| g.divides(m))
    }

    /// Sum of two monomial ideals.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(
            self.num_vars,
            self.min_gens
                .iter()
                .chain(other.min_gens.iter())
                .cloned(),
        )
    }

    /// Colon ideal `(self : x_v)`, computed on minimal generators.
    pub fn colon_var(&self, v: usize) -> MonomialIdeal {
        let gens = self.min_gens.iter().map(|m| {
            let mut exps = m.exps().to_vec();
            if exps[v] > 0 {
                exps[v] -= 1;
            }
            Monomial::new(exps)
        });
        MonomialIdeal::new(self.num_vars, gens)
    }

    /// The radical: squarefree parts of the minimal generators.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.min_gens.iter().map(|m| {
            Monomial::new(m.exps().iter().map(|&e| u32::min(e, 1)).collect())
        });
        MonomialIdeal::new(self.num_vars, gens)
    }

    /// Variables occurring in some minimal generator.
    pub fn support(&self) -> BTreeSet<usize> {
        self.min_gens
            .iter()
            .flat_map(|m| m.support())
            .collect()
    }

    /// Primary test in the restricted sense used for sums of squares of
    /// variable intervals: the radical must be the prime generated by
    /// exactly the support variables.
    pub fn is_primary_support_prime(&self) -> bool {
        let rad = self.radical();
        let support = self.support();
        rad.min_gens.len() == support.len()
            && rad
                .min_gens
                .iter()
                .all(|m| m.degree() == 1 && support.contains(&m.support()[0]))
    }

    /// Krull dimension of the quotient by this ideal: the largest size of
    /// a variable subset containing no generator's support.
    pub fn quotient_dim_combinatorial(&self) -> usize {
        let nv = self.num_vars;
        if self.is_zero() {
            return nv;
        }
        if self.min_gens.iter().any(|m| m.is_one()) {
            // unit ideal: the quotient is the zero ring
            return 0;
        }
        assert!(nv <= 30, "combinatorial dimension limited to small rings");
        let supports: Vec<u32> = self
            .min_gens
            .iter()
            .map(|m| {
                m.support()
                    .into_iter()
                    .fold(0u32, |acc, i| acc | (1 << i))
            })
            .collect();
        let mut best = 0usize;
        for subset in 0u32..(1 << nv) {
            let size = subset.count_ones() as usize;
            if size <= best {
                continue;
            }
            if supports.iter().all(|s| s & !subset != 0) {
                best = size;
            }
        }
        best
    }

    /// Count monomials of total degree `d` not lying in the ideal.
    pub fn standard_monomials_of_degree(&self, d: u32) -> u64 {
        let mut count = 0u64;
        let mut exps = vec![0u32; self.num_vars];
        self.count_standard(0, d, &mut exps, &mut count);
        count
    }

    fn count_standard(&self, pos: usize, remaining: u32, exps: &mut Vec<u32>, count: &mut u64) {
        if pos + 1 == self.num_vars {
            exps[pos] = remaining;
            let m = Monomial::new(exps.clone());
            if !self.contains(&m) {
                *count += 1;
            }
            exps[pos] = 0;
            return;
        }
        for e in 0..=remaining {
            exps[pos] = e;
            self.count_standard(pos + 1, remaining - e, exps, count);
        }
        exps[pos] = 0;
    }

    /// Whether the quotient by `self + (variables in kill)` is Artinian:
    /// every surviving variable must carry a pure power.
    pub fn quotient_is_artinian_after(&self, kill: &BTreeSet<usize>) -> bool {
        for v in 0..self.num_vars {
            if kill.contains(&v) {
                continue;
            }
            let has_pure_power = self
                .min_gens
                .iter()
                .any(|m| m.exp(v) > 0 && m.support() == vec![v]);
            if !has_pure_power {
                return false;
            }
        }
        true
    }

    /// Generators of the square `(x_a, ..., x_b)^2` for 0-based variable
    /// indices `a..=b`.
    pub fn interval_square(num_vars: usize, a: usize, b: usize) -> MonomialIdeal {
        let mut gens = Vec::new();
        for u in a..=b {
            for v in u..=b {
                let mut exps = vec![0u32; num_vars];
                exps[u] += 1;
                exps[v] += 1;
                gens.push(Monomial::new(exps));
            }
        }
        MonomialIdeal::new(num_vars, gens)
    }
}

/// All exponent vectors of total degree `d` in `num_vars` variables,
/// in lexicographic order.
pub fn monomials_of_degree(num_vars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; num_vars];
    fn rec(pos: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == exps.len() {
            exps[pos] = remaining;
            out.push(Monomial::new(exps.clone()));
            exps[pos] = 0;
            return;
        }
        for e in (0..=remaining).rev() {
            exps[pos] = e;
            rec(pos + 1, remaining - e, exps, out);
        }
        exps[pos] = 0;
    }
    rec(0, d, &mut exps, &mut out);
    out
}

/// Number of monomials of total degree `d` in `num_vars` variables.
pub fn count_monomials_of_degree(num_vars: usize, d: u32) -> u64 {
    binomial((num_vars as u64) + (d as u64) - 1, d as u64)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * ((n - i) as u128) / ((i + 1) as u128);
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// Error-checked constructor used where generators must be monomial.
pub fn require_var_range(num_vars: usize, v: usize) -> Result<()> {
    if v >= num_vars {
        return Err(Error::InvalidInput(format!(
            "variable index {v} out of range for {num_vars} variables"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mon(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn minimal_generators_form_antichain() {
        let j = MonomialIdeal::new(
            3,
            vec![mon(&[2, 0, 0]), mon(&[2, 1, 0]), mon(&[0, 1, 1])],
        );
        assert_eq!(j.min_gens().len(), 2);
        assert!(j.contains(&mon(&[2, 1, 0])));
        assert!(!j.contains(&mon(&[1, 1, 0])));
    }

    #[test]
    fn dimension_of_simple_quotients() {
        // (x1*x2): cover {1} or {2}, dim = 2 of 3 vars
        let j = MonomialIdeal::new(3, vec![mon(&[1, 1, 0])]);
        assert_eq!(j.quotient_dim_combinatorial(), 2);
        assert_eq!(MonomialIdeal::zero(4).quotient_dim_combinatorial(), 4);
    }

    #[test]
    fn standard_monomial_counts() {
        // K[x,y]/(x^2): degree-d standard monomials are y^d and x*y^{d-1}
        let j = MonomialIdeal::new(2, vec![mon(&[2, 0])]);
        assert_eq!(j.standard_monomials_of_degree(0), 1);
        assert_eq!(j.standard_monomials_of_degree(3), 2);
        assert_eq!(count_monomials_of_degree(2, 3), 4);
    }

    #[test]
    fn interval_square_min_gens() {
        // (x2, x3)^2 in 4 vars: x2^2, x2*x3, x3^2
        let j = MonomialIdeal::interval_square(4, 1, 2);
        assert_eq!(j.min_gens().len(), 3);
        assert!(j.is_primary_support_prime());
    }

    #[test]
    fn colon_by_variable() {
        let j = MonomialIdeal::new(3, vec![mon(&[2, 0, 0]), mon(&[1, 1, 0])]);
        let c = j.colon_var(0);
        assert_eq!(
            c.min_gens(),
            &[mon(&[1, 0, 0]), mon(&[0, 1, 0])]
        );
    }
}
