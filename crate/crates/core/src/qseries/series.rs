use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::{LaurentPoly, Monomial};
use crate::error::{Error, Result};

/// Order of a series that is an exact (finite) Laurent polynomial in `q`.
pub const EXACT: i64 = i64::MAX / 4;

#[inline]
fn shift_order(order: i64, by: i64) -> i64 {
    if order >= EXACT {
        EXACT
    } else {
        order + by
    }
}

/// A Laurent series in `q` with [`LaurentPoly`] coefficients, known exactly
/// through `q^order`.
///
/// Coefficients are stored for exponents `low .. low + coeffs.len()`; all
/// other exponents up to `order` are zero. Products track precision: if `A`
/// is known through `q^{N_A}` with valuation `v_A` and likewise for `B`, then
/// `AB` is known through `q^{min(N_A + v_B, N_B + v_A)}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries {
    nvars: usize,
    low: i64,
    order: i64,
    coeffs: Vec<LaurentPoly>,
}

/// A coefficient where two series disagree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mismatch {
    pub q: i64,
    pub monomial: Monomial,
    pub expected: BigInt,
    pub actual: BigInt,
}

impl QSeries {
    pub fn zero(nvars: usize, order: i64) -> QSeries {
        let mut s = QSeries { nvars, low: 0, order, coeffs: Vec::new() };
        s.normalize();
        s
    }

    pub fn one(nvars: usize, order: i64) -> QSeries {
        QSeries::term(nvars, Monomial::ONE, BigInt::one(), 0, order)
    }

    /// `c * m * q^e`, known through `q^order`.
    pub fn term(nvars: usize, m: Monomial, c: BigInt, e: i64, order: i64) -> QSeries {
        let mut s = QSeries { nvars, low: e, order, coeffs: vec![LaurentPoly::term(nvars, m, c)] };
        s.normalize();
        s
    }

    /// A univariate series from integer coefficients starting at `q^low`.
    pub fn from_ints(low: i64, coeffs: &[i64], order: i64) -> QSeries {
        let coeffs = coeffs.iter().map(|&c| LaurentPoly::constant(0, BigInt::from(c))).collect();
        let mut s = QSeries { nvars: 0, low, order, coeffs };
        s.normalize();
        s
    }

    /// A series from coefficients starting at `q^low`.
    pub fn from_coeffs(nvars: usize, low: i64, coeffs: Vec<LaurentPoly>, order: i64) -> QSeries {
        let mut s = QSeries { nvars, low, order, coeffs };
        s.normalize();
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order >= EXACT
    }

    /// Lowest exponent with a non-zero coefficient, or `order + 1` for a
    /// series that is zero as far as it is known.
    pub fn valuation(&self) -> i64 {
        self.low
    }

    /// Highest stored exponent, if any.
    pub fn degree(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.low + self.coeffs.len() as i64 - 1)
        }
    }

    fn normalize(&mut self) {
        if self.order < EXACT {
            let keep = (self.order - self.low + 1).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(LaurentPoly::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = if self.order >= EXACT { 0 } else { self.order + 1 };
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
    }

    /// Coefficient of `q^e`, `None` beyond the known order.
    pub fn coeff(&self, e: i64) -> Option<LaurentPoly> {
        if e > self.order {
            return None;
        }
        Some(self.coeff_ref(e).cloned().unwrap_or_else(|| LaurentPoly::zero(self.nvars)))
    }

    /// Stored coefficient of `q^e`, `None` when it is zero or unknown.
    pub fn coeff_ref(&self, e: i64) -> Option<&LaurentPoly> {
        if e < self.low {
            return None;
        }
        self.coeffs.get((e - self.low) as usize)
    }

    /// Non-zero coefficients in increasing `q` order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> {
        let low = self.low;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (low + i as i64, c))
    }

    /// Constant coefficients of a univariate series for `q^0 ..= q^upto`.
    pub fn to_ints(&self, upto: i64) -> Vec<BigInt> {
        (0..=upto)
            .map(|e| self.coeff_ref(e).map(LaurentPoly::eval_ones).unwrap_or_default())
            .collect()
    }

    /// Drops everything above `q^order`.
    pub fn truncate(&self, order: i64) -> QSeries {
        let mut s = self.clone();
        s.order = s.order.min(order);
        s.normalize();
        s
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let order = self.order.min(other.order);
        let nvars = self.nvars.max(other.nvars);
        if self.coeffs.is_empty() && other.coeffs.is_empty() {
            return QSeries::zero(nvars, order);
        }
        let low = match (self.coeffs.is_empty(), other.coeffs.is_empty()) {
            (true, _) => other.low,
            (_, true) => self.low,
            _ => self.low.min(other.low),
        };
        let high = self.degree().into_iter().chain(other.degree()).max().unwrap().min(order);
        if high < low {
            return QSeries::zero(nvars, order);
        }
        let mut coeffs = vec![LaurentPoly::zero(nvars); (high - low + 1) as usize];
        for (e, c) in self.iter().chain(other.iter()) {
            if e <= high {
                coeffs[(e - low) as usize].add_assign(c);
            }
        }
        QSeries::from_coeffs(nvars, low, coeffs, order)
    }

    pub fn neg(&self) -> QSeries {
        self.scale(Monomial::ONE, &-BigInt::one(), 0)
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    /// `self * c * m * q^e`.
    pub fn scale(&self, m: Monomial, c: &BigInt, e: i64) -> QSeries {
        let coeffs = self.coeffs.iter().map(|p| p.scaled(m, c)).collect();
        QSeries::from_coeffs(self.nvars, self.low + e, coeffs, shift_order(self.order, e))
    }

    /// `self * q^e`.
    pub fn shift(&self, e: i64) -> QSeries {
        let mut s = self.clone();
        s.low += e;
        s.order = shift_order(s.order, e);
        s.normalize();
        s
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let nvars = self.nvars.max(other.nvars);
        let order = shift_order(self.order, other.low).min(shift_order(other.order, self.low));
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return QSeries::zero(nvars, order);
        }
        let low = self.low + other.low;
        let full_high = self.degree().unwrap() + other.degree().unwrap();
        let high = full_high.min(order);
        if high < low {
            return QSeries::zero(nvars, order);
        }
        let mut coeffs = vec![LaurentPoly::zero(nvars); (high - low + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = self.low + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                let e = ea + other.low + j as i64;
                if e > high {
                    break;
                }
                if !b.is_zero() {
                    coeffs[(e - low) as usize].add_product(a, b);
                }
            }
        }
        QSeries::from_coeffs(nvars, low, coeffs, order)
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> QSeries {
        let mut out = QSeries::one(self.nvars, EXACT);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `1 / self` through `q^order`, for a series whose lowest coefficient is
    /// `±1` at `q^0`.
    pub fn reciprocal(&self, order: i64) -> Result<QSeries> {
        let order = order.min(self.order);
        if self.coeffs.is_empty() || self.low != 0 {
            return Err(Error::NotInvertible);
        }
        let a0 = self.coeffs[0].as_constant().ok_or(Error::NotInvertible)?;
        if a0.abs() != BigInt::one() {
            return Err(Error::NotInvertible);
        }
        let len = (order + 1).max(0) as usize;
        let mut b: Vec<LaurentPoly> = Vec::with_capacity(len);
        for e in 0..len {
            let mut acc = if e == 0 { LaurentPoly::one(self.nvars) } else { LaurentPoly::zero(self.nvars) };
            for k in 1..=e.min(self.coeffs.len().saturating_sub(1)) {
                let ak = &self.coeffs[k];
                if ak.is_zero() || b[e - k].is_zero() {
                    continue;
                }
                let prod = ak.mul(&b[e - k]);
                acc.sub_assign(&prod);
            }
            b.push(acc.scaled(Monomial::ONE, &a0));
        }
        Ok(QSeries::from_coeffs(self.nvars, 0, b, order))
    }

    /// Applies `f` to every colour monomial.
    pub fn map_monomials(&self, nvars: usize, f: impl Fn(Monomial) -> Monomial) -> QSeries {
        let coeffs = self.coeffs.iter().map(|p| p.map_monomials(nvars, &f)).collect();
        QSeries::from_coeffs(nvars, self.low, coeffs, self.order)
    }

    /// Substitutes `q -> q^{q_scale}` and `a_i -> q^{shifts[i]}`, giving a
    /// univariate series known through `q^order`.
    ///
    /// The caller must guarantee that no term above `q^{self.order()}` maps
    /// to an exponent at most `order`.
    pub fn specialise(&self, q_scale: i64, shifts: &[i64], order: i64) -> QSeries {
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        for (e, p) in self.iter() {
            for (m, c) in p.terms() {
                let x: i64 = shifts.iter().enumerate().map(|(i, s)| s * m.exp(i) as i64).sum();
                terms.push((q_scale * e + x, c.clone()));
            }
        }
        if terms.is_empty() {
            return QSeries::zero(0, order);
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap().min(order);
        if high < low {
            return QSeries::zero(0, order);
        }
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            if e <= high {
                coeffs[(e - low) as usize] += c;
            }
        }
        let coeffs = coeffs.into_iter().map(|c| LaurentPoly::constant(0, c)).collect();
        QSeries::from_coeffs(0, low, coeffs, order)
    }

    /// `q -> 1/q` for an exact Laurent polynomial.
    pub fn invert_q(&self) -> Result<QSeries> {
        if !self.is_exact() {
            return Err(Error::InvalidArgument("q -> 1/q needs an exact polynomial"));
        }
        let Some(high) = self.degree() else { return Ok(self.clone()) };
        let coeffs = self.coeffs.iter().rev().cloned().collect();
        Ok(QSeries::from_coeffs(self.nvars, -high, coeffs, EXACT))
    }

    /// First coefficient through `q^upto` where `self` (expected) and `other`
    /// (actual) differ. Both must be known through `q^upto`.
    pub fn first_difference(&self, other: &QSeries, upto: i64) -> Result<Option<Mismatch>> {
        if self.order < upto || other.order < upto {
            return Err(Error::InvalidArgument("series not known to the requested order"));
        }
        let from = self.low.min(other.low);
        let nvars = self.nvars.max(other.nvars);
        let zero = LaurentPoly::zero(nvars);
        for e in from..=upto {
            let a = self.coeff_ref(e).unwrap_or(&zero);
            let b = other.coeff_ref(e).unwrap_or(&zero);
            if a != b {
                let mut d = a.clone();
                d.sub_assign(b);
                let (m, _) = d.terms().next().map(|(m, c)| (*m, c.clone())).unwrap();
                return Ok(Some(Mismatch { q: e, monomial: m, expected: a.coeff(&m), actual: b.coeff(&m) }));
            }
        }
        Ok(None)
    }

    /// Adds `c * m` to the coefficient of `q^e` (ignored above the order).
    pub fn add_to_coeff(&mut self, e: i64, m: Monomial, c: BigInt) {
        if e > self.order || c.is_zero() {
            return;
        }
        if self.coeffs.is_empty() {
            self.low = e;
        }
        if e < self.low {
            let pad = (self.low - e) as usize;
            let mut v = vec![LaurentPoly::zero(self.nvars); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = e;
        }
        let idx = (e - self.low) as usize;
        if idx >= self.coeffs.len() {
            self.coeffs.resize(idx + 1, LaurentPoly::zero(self.nvars));
        }
        self.coeffs[idx].add_term(m, c);
        self.normalize();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries, upto: i64) -> Vec<i64> {
        s.to_ints(upto).iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn product_tracks_negative_valuation() {
        // (1 + q^{-2}) * (1 + q + q^2 + ... known through q^10)
        let a = QSeries::from_ints(-2, &[1, 0, 1], EXACT);
        let b = QSeries::from_ints(0, &[1; 11], 10);
        let p = a.mul(&b);
        assert_eq!(p.order(), 8);
        assert_eq!(p.valuation(), -2);
        assert_eq!(ints(&p, 3), vec![2, 2, 2, 2]);
    }

    #[test]
    fn reciprocal_of_one_minus_q() {
        let s = QSeries::from_ints(0, &[1, -1], EXACT);
        let r = s.reciprocal(6).unwrap();
        assert_eq!(ints(&r, 6), vec![1; 7]);
        assert!(QSeries::from_ints(0, &[2, 1], EXACT).reciprocal(4).is_err());
    }

    #[test]
    fn invert_q_reverses() {
        let s = QSeries::from_ints(1, &[1, 2, 3], EXACT);
        let r = s.invert_q().unwrap();
        assert_eq!(r.valuation(), -3);
        assert_eq!(r.coeff(-3).unwrap().eval_ones(), BigInt::from(3));
    }
}
