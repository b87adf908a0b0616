use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::colour::MAX_N;

/// A monomial `a_0^{e_0} ... a_{n-1}^{e_{n-1}}` with signed exponents.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial([i16; MAX_N]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_N]);

    /// `a_i^e`.
    pub fn var(i: usize, e: i16) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[i] = e;
        m
    }

    pub fn from_exps(exps: &[i16]) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[..exps.len()].copy_from_slice(exps);
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> i16 {
        self.0[i]
    }

    /// The first `n` exponents.
    pub fn exps(&self, n: usize) -> &[i16] {
        &self.0[..n]
    }

    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        let mut m = self;
        for (a, b) in m.0.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        m
    }

    pub fn inv(self) -> Monomial {
        let mut m = self;
        for a in m.0.iter_mut() {
            *a = -*a;
        }
        m
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    /// Sum of all exponents.
    pub fn degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }
}

/// A Laurent polynomial in `a_0, ..., a_{n-1}` with exact integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> LaurentPoly {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> LaurentPoly {
        LaurentPoly::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> LaurentPoly {
        LaurentPoly::term(nvars, Monomial::ONE, c)
    }

    pub fn term(nvars: usize, m: Monomial, c: BigInt) -> LaurentPoly {
        let mut p = LaurentPoly::zero(nvars);
        p.add_term(m, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, BigInt> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant coefficient if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_term_ref(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &LaurentPoly) {
        for (m, c) in &other.terms {
            self.add_term_ref(*m, c);
        }
    }

    pub fn sub_assign(&mut self, other: &LaurentPoly) {
        for (m, c) in &other.terms {
            self.add_term(*m, -c);
        }
    }

    /// `self += a * b`.
    pub fn add_product(&mut self, a: &LaurentPoly, b: &LaurentPoly) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(*mb), ca * cb);
            }
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars.max(other.nvars));
        out.add_product(self, other);
        out
    }

    /// `self * c * m`.
    pub fn scaled(&self, m: Monomial, c: &BigInt) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.mul(m), v * c);
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        self.scaled(Monomial::ONE, &-BigInt::one())
    }

    /// Applies `f` to every monomial, collecting like terms.
    pub fn map_monomials(&self, nvars: usize, f: impl Fn(Monomial) -> Monomial) -> LaurentPoly {
        let mut out = LaurentPoly::zero(nvars);
        for (m, c) in &self.terms {
            out.add_term_ref(f(*m), c);
        }
        out
    }

    /// Sum of all coefficients (every variable set to 1).
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Whether every coefficient is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| *c >= BigInt::zero())
    }

    /// Terms in ascending monomial order.
    pub fn to_vec(&self) -> Vec<(Monomial, BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c.clone())).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for i in 0..self.nvars {
                match m.exp(i) {
                    0 => {}
                    1 => write!(f, "*a{i}")?,
                    e => write!(f, "*a{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut p = LaurentPoly::term(2, Monomial::var(0, 1), BigInt::from(3));
        p.add_term(Monomial::var(0, 1), BigInt::from(-3));
        assert!(p.is_zero());
    }

    #[test]
    fn product_of_inverse_monomials() {
        let x = LaurentPoly::term(2, Monomial::var(1, 2), BigInt::from(2));
        let y = LaurentPoly::term(2, Monomial::var(1, -2), BigInt::from(5));
        assert_eq!(x.mul(&y), LaurentPoly::constant(2, BigInt::from(10)));
    }
}
