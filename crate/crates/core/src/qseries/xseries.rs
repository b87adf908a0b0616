use alloc::collections::BTreeMap;

use num_bigint::BigInt;

use super::laurent::Monomial;
use super::series::QSeries;

/// A Laurent polynomial in an auxiliary variable `x` with [`QSeries`]
/// coefficients, keeping only exponents in `[-window, window]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XSeries {
    nvars: usize,
    order: i64,
    window: i32,
    terms: BTreeMap<i32, QSeries>,
}

impl XSeries {
    pub fn one(nvars: usize, order: i64, window: i32) -> XSeries {
        let mut terms = BTreeMap::new();
        terms.insert(0, QSeries::one(nvars, order));
        XSeries { nvars, order, window, terms }
    }

    pub fn window(&self) -> i32 {
        self.window
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: i32) -> QSeries {
        self.terms.get(&k).cloned().unwrap_or_else(|| QSeries::zero(self.nvars, self.order))
    }

    /// The constant term `[x^0]`.
    pub fn constant_term(&self) -> QSeries {
        self.coeff(0)
    }

    /// Multiplies by `1 + c * x^dx * m * q^dq`.
    pub fn mul_binomial(&mut self, dx: i32, m: Monomial, c: &BigInt, dq: i64) {
        let mut shifted: BTreeMap<i32, QSeries> = BTreeMap::new();
        for (&k, s) in &self.terms {
            let k2 = k + dx;
            if k2.abs() > self.window {
                continue;
            }
            let t = s.scale(m, c, dq);
            if t.degree().is_some() {
                shifted.insert(k2, t);
            }
        }
        for (k, t) in shifted {
            let entry = self.terms.entry(k).or_insert_with(|| QSeries::zero(self.nvars, self.order));
            *entry = entry.add(&t);
        }
    }

    pub fn mul(&self, other: &XSeries) -> XSeries {
        let mut terms: BTreeMap<i32, QSeries> = BTreeMap::new();
        let order = self.order.min(other.order);
        let window = self.window.min(other.window);
        for (&i, a) in &self.terms {
            for (&j, b) in &other.terms {
                let k = i + j;
                if k.abs() > window {
                    continue;
                }
                let p = a.mul(b);
                let entry = terms.entry(k).or_insert_with(|| QSeries::zero(self.nvars, order));
                *entry = entry.add(&p);
            }
        }
        XSeries { nvars: self.nvars, order, window, terms }
    }
}
