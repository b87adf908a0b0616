use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::{LaurentPoly, Monomial};
use super::series::{QSeries, EXACT};
use super::xseries::XSeries;
use crate::error::{Error, Result};

/// `c * m * q^e`, the argument of a q-Pochhammer symbol.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QTerm {
    pub coeff: BigInt,
    pub mono: Monomial,
    pub qpow: i64,
}

impl QTerm {
    pub fn new(coeff: i64, mono: Monomial, qpow: i64) -> QTerm {
        QTerm { coeff: BigInt::from(coeff), mono, qpow }
    }

    /// `q^e`.
    pub fn q(qpow: i64) -> QTerm {
        QTerm::new(1, Monomial::ONE, qpow)
    }
}

/// `(a; q^step)_len`, or the infinite product when `len` is `None`, known
/// through `q^order`.
pub fn pochhammer(a: &QTerm, step: i64, len: Option<u64>, nvars: usize, order: i64) -> Result<QSeries> {
    if len.is_none() && step <= 0 {
        return Err(Error::InvalidArgument("an infinite product needs a positive step"));
    }
    let exponent = |k: u64| a.qpow + k as i64 * step;
    let headroom: i64 = {
        let mut h = 0;
        let mut k = 0u64;
        while len.map_or(true, |l| k < l) && exponent(k) < 0 {
            h -= exponent(k);
            k += 1;
        }
        h
    };
    let target = if order >= EXACT { EXACT } else { order + headroom };
    let mut out = QSeries::one(nvars, target);
    let neg = -a.coeff.clone();
    let mut k = 0u64;
    while len.map_or(true, |l| k < l) {
        let e = exponent(k);
        if e > target && len.is_none() {
            break;
        }
        let mut factor = LaurentPoly::one(nvars);
        let mut coeffs = vec![];
        if e == 0 {
            factor.add_term(a.mono, neg.clone());
            coeffs.push(factor);
            out = out.mul(&QSeries::from_coeffs(nvars, 0, coeffs, EXACT));
        } else {
            let lowest = e.min(0);
            let width = e.unsigned_abs() as usize + 1;
            coeffs.resize(width, LaurentPoly::zero(nvars));
            let (one_at, a_at) = if e > 0 { (0, width - 1) } else { (width - 1, 0) };
            coeffs[one_at] = LaurentPoly::one(nvars);
            coeffs[a_at] = LaurentPoly::term(nvars, a.mono, neg.clone());
            out = out.mul(&QSeries::from_coeffs(nvars, lowest, coeffs, EXACT));
        }
        k += 1;
    }
    if order < EXACT {
        out = out.truncate(order);
    }
    Ok(out)
}

/// `1 / (a; q^step)_len` through `q^order`.
pub fn inv_pochhammer(a: &QTerm, step: i64, len: Option<u64>, nvars: usize, order: i64) -> Result<QSeries> {
    pochhammer(a, step, len, nvars, order)?.reciprocal(order)
}

/// `(q; q)_∞` through `q^order`.
pub fn euler(nvars: usize, order: i64) -> QSeries {
    pochhammer(&QTerm::q(1), 1, None, nvars, order).expect("positive step")
}

/// `1 / (q; q)_∞` through `q^order`.
pub fn inv_euler(nvars: usize, order: i64) -> QSeries {
    euler(nvars, order).reciprocal(order).expect("constant term 1")
}

/// `1 / (q; q)_k` through `q^order`.
pub fn inv_qfactorial(k: u64, nvars: usize, order: i64) -> QSeries {
    inv_pochhammer(&QTerm::q(1), 1, Some(k), nvars, order).expect("constant term 1")
}

/// Gaussian binomial coefficient as an exact univariate polynomial.
///
/// It is zero when `k < 0` or `k > n`, except that `[-1, 0] = 1`.
pub fn qbinom(n: i64, k: i64) -> QSeries {
    if k == 0 && n == -1 {
        return QSeries::one(0, EXACT);
    }
    if k < 0 || k > n {
        return QSeries::zero(0, EXACT);
    }
    let coeffs = qbinom_coeffs(n as usize, k as usize);
    let coeffs = coeffs.into_iter().map(|c| LaurentPoly::constant(0, c)).collect();
    QSeries::from_coeffs(0, 0, coeffs, EXACT)
}

fn qbinom_coeffs(n: usize, k: usize) -> Vec<BigInt> {
    // row[j] holds [i, j] while i runs up to n; [i, j] = [i-1, j-1] + q^j [i-1, j]
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let jmax = i.min(k);
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(jmax + 1);
        for j in 0..=jmax {
            let len = j * (i - j) + 1;
            let mut c = vec![BigInt::zero(); len];
            if j >= 1 {
                for (d, v) in row[j - 1].iter().enumerate() {
                    c[d] += v;
                }
            }
            if j < row.len() && j < i {
                for (d, v) in row[j].iter().enumerate() {
                    c[d + j] += v;
                }
            }
            next.push(c);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// `g_{u,v}(q; x_1, ..., x_v)`.
pub fn g(u: usize, v: usize, x: &[i64]) -> Result<QSeries> {
    if u > v {
        return Err(Error::InvalidArgument("g needs u <= v"));
    }
    if x.len() != v {
        return Err(Error::InvalidArgument("g needs exactly v arguments"));
    }
    if v > 30 {
        return Err(Error::InvalidArgument("g is limited to v <= 30"));
    }
    let base = (u * v + u * u.saturating_sub(1) / 2) as i64;
    let mut out = QSeries::zero(0, EXACT);
    for mask in 0u32..(1u32 << v) {
        if mask.count_ones() as usize != u {
            continue;
        }
        let mut e = base;
        let mut prefix = 0i64;
        for (k, &xk) in x.iter().enumerate() {
            e += (xk - 1) * prefix;
            prefix += ((mask >> k) & 1) as i64;
        }
        out.add_to_coeff(e, Monomial::ONE, BigInt::one());
    }
    Ok(out)
}

/// Multiplies `x` by `(-z x^{dx} q^{start}; q)_∞` truncated to the window,
/// factor by factor.
fn mul_infinite_binomials(x: &mut XSeries, dx: i32, z: Monomial, start: i64, order: i64) {
    let one = BigInt::one();
    let mut e = start;
    while e <= order {
        x.mul_binomial(dx, z, &one, e);
        e += 1;
    }
}

/// `[x^0] ∏_i (−x a_i q; q)_∞ (−x^{-1} a_i^{-1}; q)_∞` through `q^order`.
pub fn constant_term_product(n: usize, order: i64) -> QSeries {
    let window = (order + 1) as i32;
    let mut x = XSeries::one(n, order, window);
    for i in 0..n {
        mul_infinite_binomials(&mut x, 1, Monomial::var(i, 1), 1, order);
        mul_infinite_binomials(&mut x, -1, Monomial::var(i, -1), 0, order);
    }
    x.constant_term()
}

/// Compares `(−x a q; q)_∞ (−x^{-1} a^{-1}; q)_∞ (q; q)_∞` with
/// `Σ_k x^k a^k q^{k(k+1)/2}` through `q^order`, on every power of `x`.
pub fn jacobi_triple_product_check(a: Monomial, nvars: usize, order: i64) -> bool {
    jacobi_triple_product_sides(a, nvars, order).is_some_and(|(l, r)| l == r)
}

/// Both sides of the triple product, as lists of `x`-coefficients.
pub fn jacobi_triple_product_sides(
    a: Monomial,
    nvars: usize,
    order: i64,
) -> Option<(Vec<QSeries>, Vec<QSeries>)> {
    let window = (order + 1) as i32;
    let mut x = XSeries::one(nvars, order, window);
    mul_infinite_binomials(&mut x, 1, a, 1, order);
    mul_infinite_binomials(&mut x, -1, a.inv(), 0, order);
    let e = euler(nvars, order);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for k in -window..=window {
        left.push(x.coeff(k).mul(&e));
        let mut r = QSeries::zero(nvars, order);
        let qpow = (k as i64) * (k as i64 + 1) / 2;
        let mut m = Monomial::ONE;
        for _ in 0..k.abs() {
            m = if k > 0 { m.mul(a) } else { m.mul(a.inv()) };
        }
        r.add_to_coeff(qpow, m, BigInt::one());
        right.push(r);
    }
    Some((left, right))
}

/// The integer vectors `(s_1, ..., s_{n-1})` (with `s_n = 0`) for which
/// `M = Σ s_i (s_i − s_{i+1})` is at most `bound`, with their `M`.
pub fn quadratic_form_points(n: usize, bound: i64) -> Vec<(Vec<i64>, i64)> {
    let mut out = Vec::new();
    if n <= 1 {
        out.push((Vec::new(), 0));
        return out;
    }
    let mut s = vec![0i64; n];
    fn rec(i: usize, s: &mut Vec<i64>, bound: i64, out: &mut Vec<(Vec<i64>, i64)>) {
        if i == 0 {
            let n = s.len();
            let m: i64 = (0..n - 1).map(|j| s[j] * (s[j] - s[j + 1])).sum();
            if m <= bound {
                out.push((s[..n - 1].to_vec(), m));
            }
            return;
        }
        // index i-1 holds s_i; ((i+1) s_i − i s_{i+1})^2 ≤ 2 i (i+1) M
        let ii = i as i64;
        let next = s[i];
        let lim = 2 * ii * (ii + 1) * bound;
        let mut r = 0i64;
        while (r + 1) * (r + 1) <= lim {
            r += 1;
        }
        let lo = (ii * next - r).div_euclid(ii + 1) - 1;
        let hi = (ii * next + r).div_euclid(ii + 1) + 1;
        for v in lo..=hi {
            let d = (ii + 1) * v - ii * next;
            if d * d <= lim {
                s[i - 1] = v;
                rec(i - 1, s, bound, out);
            }
        }
        s[i - 1] = 0;
    }
    rec(n - 1, &mut s, bound, &mut out);
    out
}

/// The Jacobi-sum form
/// `(q;q)_∞^{-n} Σ a_0^{-s_1} ∏ a_i^{s_i − s_{i+1}} q^{s_i(s_i − s_{i+1})}`.
pub fn main2_jacobi_form(n: usize, order: i64) -> QSeries {
    let mut sum = QSeries::zero(n, order);
    for (s, m) in quadratic_form_points(n, order) {
        let mut exps = vec![0i16; n];
        if n > 1 {
            exps[0] = -s[0] as i16;
            for i in 1..n {
                let si = s[i - 1];
                let next = if i < n - 1 { s[i] } else { 0 };
                exps[i] = (si - next) as i16;
            }
        }
        sum.add_to_coeff(m, Monomial::from_exps(&exps), BigInt::one());
    }
    let inv = inv_euler(n, order);
    sum.mul(&inv.pow(n as u32)).truncate(order)
}

/// The sum-of-products form of the same series, summed over
/// `0 ≤ r_j ≤ j − 1` (so `r_1 = 0`) with `r_n = 0`.
pub fn main2_product_form(n: usize, order: i64) -> Result<QSeries> {
    let mut rs: Vec<Vec<i64>> = vec![vec![]];
    for j in 1..n {
        let mut next = Vec::new();
        for r in &rs {
            for v in 0..j as i64 {
                let mut r2 = r.clone();
                r2.push(v);
                next.push(r2);
            }
        }
        rs = next;
    }
    let mut headroom_max = 0i64;
    let mut plans = Vec::new();
    for r in rs {
        let r_at = |i: usize| -> i64 { if i >= 1 && i < n { r[i - 1] } else { 0 } };
        let mut prefactor_q = 0i64;
        let mut prefactor = vec![0i16; n];
        let mut factors = Vec::new();
        let mut headroom = 0i64;
        for i in 1..n {
            let (ri, rn) = (r_at(i), r_at(i + 1));
            prefactor_q += ri * (ri - rn);
            prefactor[i] += (ri - rn) as i16;
            let ii = i as i64;
            let step = ii * (ii + 1);
            let mut big_a = vec![0i16; n];
            big_a[i] = i as i16;
            for l in 0..i {
                big_a[l] -= 1;
            }
            let a = Monomial::from_exps(&big_a);
            let e_plus = step / 2 + (ii + 1) * ri - ii * rn;
            let e_minus = step / 2 - (ii + 1) * ri + ii * rn;
            for e in [e_plus, e_minus] {
                let mut k = e;
                while k < 0 {
                    headroom -= k;
                    k += step;
                }
            }
            factors.push((QTerm::new(-1, a, e_plus), step));
            factors.push((QTerm::new(-1, a.inv(), e_minus), step));
        }
        if prefactor_q < 0 {
            headroom -= prefactor_q;
        }
        headroom_max = headroom_max.max(headroom);
        plans.push((prefactor_q, Monomial::from_exps(&prefactor), factors, headroom));
    }
    let work = order + headroom_max;
    let mut sum = QSeries::zero(n, work);
    for (pq, pm, factors, _) in plans {
        let mut term = QSeries::term(n, pm, BigInt::one(), pq, work);
        for (a, step) in factors {
            term = term.mul(&pochhammer(&a, step, None, n, work)?);
        }
        sum = sum.add(&term);
    }
    let mut pref = inv_euler(n, work);
    for i in 1..n as i64 {
        let s = i * (i + 1);
        pref = pref.mul(&pochhammer(&QTerm::q(s), s, None, n, work)?).mul(&inv_euler(n, work));
    }
    let out = sum.mul(&pref);
    if out.order() < order {
        return Err(Error::InvalidArgument("insufficient precision in the product form"));
    }
    Ok(out.truncate(order))
}

/// An affine substitution `q -> q^{q_scale}`, `a_i -> q^{shifts[i]}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dilation {
    pub q_scale: i64,
    pub shifts: Vec<i64>,
}

impl Dilation {
    /// `q -> q^n`, `a_i -> q^{-i}`.
    pub fn principal(n: usize) -> Dilation {
        Dilation { q_scale: n as i64, shifts: (0..n as i64).map(|i| -i).collect() }
    }
}

/// Applies a dilation to a series. Each term `q^m a^e` must map to an
/// exponent at least `m`, so the result is known through the same order.
pub fn dilate(series: &QSeries, d: &Dilation) -> QSeries {
    series.specialise(d.q_scale, &d.shifts, series.order())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries, upto: i64) -> Vec<i64> {
        s.to_ints(upto).iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn partition_numbers() {
        assert_eq!(ints(&inv_euler(0, 9), 9), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn pentagonal() {
        assert_eq!(ints(&euler(0, 12), 12), vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
    }

    #[test]
    fn empty_pochhammer() {
        let p = pochhammer(&QTerm::new(1, Monomial::var(0, 1), 0), 1, Some(0), 1, 5).unwrap();
        assert_eq!(p, QSeries::one(1, 5));
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(ints(&qbinom(4, 2), 4), vec![1, 1, 2, 1, 1]);
        assert_eq!(qbinom(3, -1), QSeries::zero(0, EXACT));
        assert_eq!(qbinom(7, 0), QSeries::one(0, EXACT));
        assert_eq!(qbinom(-1, 0), QSeries::one(0, EXACT));
        assert_eq!(qbinom(2, 3), QSeries::zero(0, EXACT));
    }

    #[test]
    fn g_examples() {
        assert_eq!(g(0, 0, &[]).unwrap(), QSeries::one(0, EXACT));
        for x in 0..3 {
            assert_eq!(g(1, 1, &[x]).unwrap(), QSeries::from_ints(1, &[1], EXACT));
        }
        assert!(g(2, 1, &[0]).is_err());
    }

    #[test]
    fn triple_product() {
        assert!(jacobi_triple_product_check(Monomial::ONE, 0, 0));
        assert!(jacobi_triple_product_check(Monomial::var(0, 1), 1, 10));
    }

    #[test]
    fn negative_start_pochhammer() {
        // (-q^{-1}; q)_∞ = (1 + q^{-1})(-1; q)_∞ ... compare against the product with one factor pulled out
        let a = pochhammer(&QTerm::new(-1, Monomial::ONE, -1), 1, None, 0, 8).unwrap();
        let b = pochhammer(&QTerm::new(-1, Monomial::ONE, 0), 1, None, 0, 10).unwrap();
        let c = QSeries::from_ints(-1, &[1, 1], EXACT).mul(&b);
        assert!(a.order() >= 8);
        assert_eq!(a.first_difference(&c, 8).unwrap(), None);
    }

    #[test]
    fn constant_term_n1() {
        let s = constant_term_product(1, 10);
        assert_eq!(ints(&s, 10), ints(&inv_euler(0, 10), 10));
    }

    #[test]
    fn main2_forms_agree() {
        for n in 1..=3 {
            let ct = constant_term_product(n, 8);
            let jf = main2_jacobi_form(n, 8);
            let pf = main2_product_form(n, 8).unwrap();
            assert_eq!(ct.first_difference(&jf, 8).unwrap(), None, "n={n} jacobi");
            assert_eq!(ct.first_difference(&pf, 8).unwrap(), None, "n={n} product");
        }
    }
}
