//! Exact multivariate polynomial arithmetic over the rationals, together
//! with the monomial orders used by the Groebner engine.
//!
//! A ring always has a fixed number of variables with a fixed order
//! `x1 > x2 > ... > xk`; no coefficient is ever stored as zero.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient; the field the engine works over.
pub type Coefficient = BigRational;

/// A polynomial ring with a fixed, ordered list of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    num_vars: usize,
    var_names: Vec<String>,
}

impl PolyRing {
    /// Ring with variables named `x1 .. xk`.
    pub fn new(num_vars: usize) -> Self {
        assert!(num_vars >= 2, "a ring needs at least two variables");
        PolyRing {
            num_vars,
            var_names: (1..=num_vars).map(|i| format!("x{i}")).collect(),
        }
    }

    /// Ring for a graph on `n` vertices: `n + 1` variables `x1 .. x{n+1}`.
    pub fn for_vertices(n: usize) -> Self {
        PolyRing::new(n + 1)
    }

    /// Same ring with one auxiliary variable `t` prepended at index 0.
    /// Used by intersection, saturation and radical membership.
    pub fn with_aux_var(&self) -> Self {
        let mut names = Vec::with_capacity(self.num_vars + 1);
        names.push("t".to_string());
        names.extend(self.var_names.iter().cloned());
        PolyRing {
            num_vars: self.num_vars + 1,
            var_names: names,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn var_name(&self, idx: usize) -> &str {
        &self.var_names[idx]
    }

    /// The variable `x{idx+1}` as a polynomial (0-based index).
    pub fn var(&self, idx: usize) -> Polynomial {
        assert!(idx < self.num_vars);
        Polynomial::from_term(
            self.num_vars,
            Monomial::var(self.num_vars, idx),
            Coefficient::one(),
        )
    }

    pub fn constant(&self, c: Coefficient) -> Polynomial {
        Polynomial::from_term(self.num_vars, Monomial::one(self.num_vars), c)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(Coefficient::one())
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.num_vars)
    }
}

/// A monomial as a dense exponent vector; the vector length must match
/// the ambient ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
        }
    }

    pub fn var(num_vars: usize, idx: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[idx] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn exp(&self, idx: usize) -> u32 {
        self.exps[idx]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, or `None` when the division is not exact.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&divisor.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// A total order on monomials of one ring.
///
/// `GradedRevLex` compares total degree first; on equal degrees the
/// monomial whose last nonzero entry of the exponent difference is
/// negative is the larger one. `Elimination(k)` ranks any monomial
/// involving the first `k` variables above any monomial that avoids
/// them (block order, graded revlex inside each block).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    GradedRevLex,
    Lex,
    Elimination(usize),
}

impl MonomialOrder {
    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Ordering {
        debug_assert_eq!(u.exps.len(), v.exps.len());
        match self {
            MonomialOrder::GradedRevLex => grevlex(&u.exps, &v.exps),
            MonomialOrder::Lex => lex(&u.exps, &v.exps),
            MonomialOrder::Elimination(k) => {
                grevlex(&u.exps[..*k], &v.exps[..*k]).then_with(|| grevlex(&u.exps[*k..], &v.exps[*k..]))
            }
        }
    }
}

fn lex(u: &[u32], v: &[u32]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn grevlex(u: &[u32], v: &[u32]) -> Ordering {
    let du: u32 = u.iter().sum();
    let dv: u32 = v.iter().sum();
    match du.cmp(&dv) {
        Ordering::Equal => {
            for (a, b) in u.iter().zip(v).rev() {
                // last nonzero entry of u - v negative <=> u greater
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

/// Compare two monomials under `ord`, checking they live in the same ring.
pub fn monomial_compare(u: &Monomial, v: &Monomial, ord: MonomialOrder) -> Result<Ordering> {
    if u.num_vars() != v.num_vars() {
        return Err(Error::RingMismatch {
            expected: u.num_vars(),
            found: v.num_vars(),
        });
    }
    Ok(ord.compare(u, v))
}

/// A multivariate polynomial with exact rational coefficients.
///
/// Terms are stored in a canonical map keyed by exponent vector; no zero
/// coefficient is ever kept. Values are immutable in the algebraic sense:
/// all operations build new polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    num_vars: usize,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl Polynomial {
    pub fn zero(num_vars: usize) -> Self {
        Polynomial {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_term(num_vars: usize, m: Monomial, c: Coefficient) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            debug_assert_eq!(m.num_vars(), num_vars);
            terms.insert(m, c);
        }
        Polynomial { num_vars, terms }
    }

    pub fn from_terms(num_vars: usize, it: impl IntoIterator<Item = (Monomial, Coefficient)>) -> Self {
        let mut p = Polynomial::zero(num_vars);
        for (m, c) in it {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Coefficient {
        self.terms.get(m).cloned().unwrap_or_else(Coefficient::zero)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::RingMismatch {
                expected: self.num_vars,
                found: other.num_vars,
            });
        }
        Ok(())
    }

    fn add_term(&mut self, m: &Monomial, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(m);
                }
            }
            None => {
                self.terms.insert(m.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, &(-c.clone()));
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.num_vars);
        }
        Polynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// Multiply by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.num_vars);
        }
        Polynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(self.num_vars);
        for (m, c) in &self.terms {
            for (mm, cc) in &other.terms {
                out.add_term(&m.mul(mm), &(c * cc));
            }
        }
        Ok(out)
    }

    /// The order-maximal term. Fails on the zero polynomial.
    pub fn leading_term(&self, ord: MonomialOrder) -> Result<(Monomial, Coefficient)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.compare(a, b))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroInput("leading_term of the zero polynomial"))
    }

    pub fn leading_monomial(&self, ord: MonomialOrder) -> Result<Monomial> {
        Ok(self.leading_term(ord)?.0)
    }

    /// Divide by the leading coefficient so the leading term becomes 1.
    pub fn make_monic(&self, ord: MonomialOrder) -> Result<Polynomial> {
        let (_, lc) = self.leading_term(ord)?;
        Ok(self.scale(&(Coefficient::one() / lc)))
    }

    /// Terms sorted descending under `ord`.
    pub fn sorted_terms(&self, ord: MonomialOrder) -> Vec<(Monomial, Coefficient)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        v.sort_by(|(a, _), (b, _)| ord.compare(b, a));
        v
    }

    /// Shift every exponent vector right by one slot (prepend a fresh
    /// variable with exponent 0); maps into the `with_aux_var` ring.
    pub fn extend_with_aux(&self) -> Polynomial {
        Polynomial {
            num_vars: self.num_vars + 1,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = Vec::with_capacity(m.exps.len() + 1);
                    exps.push(0);
                    exps.extend_from_slice(&m.exps);
                    (Monomial::new(exps), c.clone())
                })
                .collect(),
        }
    }

    /// Inverse of `extend_with_aux` for polynomials free of the auxiliary
    /// variable; `None` when the first variable occurs.
    pub fn drop_aux(&self) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.exps[0] != 0 {
                return None;
            }
            terms.insert(Monomial::new(m.exps[1..].to_vec()), c.clone());
        }
        Some(Polynomial {
            num_vars: self.num_vars - 1,
            terms,
        })
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// Clear denominators: the smallest positive integer multiple with
    /// integer coefficients. Returns self unchanged when already integral.
    pub fn cleared_denominators(&self) -> Polynomial {
        use num_bigint::BigInt;
        use num_integer::Integer;
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        if l.is_one() {
            return self.clone();
        }
        self.scale(&Coefficient::from_integer(l))
    }
}

/// Render with terms sorted descending under `ord`, coefficients as
/// reduced fractions; matches the text grammar accepted by `parse`.
pub fn render(f: &Polynomial, ring: &PolyRing, ord: MonomialOrder) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in f.sorted_terms(ord).into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let coeff_part = if abs.is_one() && !m.is_one() {
            None
        } else {
            Some(abs.to_string())
        };
        let mut factors = Vec::new();
        if let Some(c) = coeff_part {
            factors.push(c);
        }
        for (idx, &e) in m.exps().iter().enumerate() {
            if e == 1 {
                factors.push(ring.var_name(idx).to_string());
            } else if e > 1 {
                factors.push(format!("{}^{}", ring.var_name(idx), e));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}
