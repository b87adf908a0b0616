//! Colours `a_i b_k`, the difference functions between them and the
//! `delta`/`gamma` parameter tables of the Capparelli-type families.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported number of colour symbols `n`.
pub const MAX_N: usize = 16;

/// A colour `a_i b_k`.
///
/// `Free(i)` is `a_i b_i`, `Bound(i, k)` is `a_i b_k` with `i != k`, and
/// `Sentinel` is the boundary value `a∞b∞` placed after the last part.
/// The derived ordering is only a storage order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Colour {
    Free(u8),
    Bound(u8, u8),
    Sentinel,
}

impl Colour {
    /// The colour `a_i b_k`, free when `i == k`.
    pub const fn new(i: u8, k: u8) -> Colour {
        if i == k {
            Colour::Free(i)
        } else {
            Colour::Bound(i, k)
        }
    }

    /// The a-index, `None` for the sentinel.
    pub const fn a(self) -> Option<u8> {
        match self {
            Colour::Free(i) | Colour::Bound(i, _) => Some(i),
            Colour::Sentinel => None,
        }
    }

    /// The b-index, `None` for the sentinel.
    pub const fn b(self) -> Option<u8> {
        match self {
            Colour::Free(i) | Colour::Bound(_, i) => Some(i),
            Colour::Sentinel => None,
        }
    }

    /// Both indices of a non-sentinel colour.
    pub fn indices(self) -> Result<(u8, u8)> {
        match self {
            Colour::Free(i) => Ok((i, i)),
            Colour::Bound(i, k) => Ok((i, k)),
            Colour::Sentinel => Err(Error::UnexpectedSentinel),
        }
    }

    pub const fn is_free(self) -> bool {
        matches!(self, Colour::Free(_))
    }

    pub const fn is_bound(self) -> bool {
        matches!(self, Colour::Bound(_, _))
    }

    pub const fn is_sentinel(self) -> bool {
        matches!(self, Colour::Sentinel)
    }

    /// Checks that the colour is a real colour with indices below `n`
    /// (and that a bound colour really has distinct indices).
    pub fn check(self, n: usize) -> Result<()> {
        match self {
            Colour::Sentinel => Err(Error::UnexpectedSentinel),
            Colour::Bound(i, k) if i == k => Err(Error::Parse(format!("a{i}b{k} is not bound"))),
            c => {
                let (i, k) = c.indices()?;
                if (i as usize) < n && (k as usize) < n {
                    Ok(())
                } else {
                    Err(Error::ColourOutOfRange { colour: c, n })
                }
            }
        }
    }

    /// Dense index `a * n + b`, used for lookup tables.
    #[inline]
    pub fn code(self, n: usize) -> usize {
        match self {
            Colour::Free(i) => i as usize * n + i as usize,
            Colour::Bound(i, k) => i as usize * n + k as usize,
            Colour::Sentinel => n * n,
        }
    }

    /// Inverse of [`Colour::code`].
    pub fn from_code(code: usize, n: usize) -> Colour {
        Colour::new((code / n) as u8, (code % n) as u8)
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colour::Free(i) => write!(f, "a{i}b{i}"),
            Colour::Bound(i, k) => write!(f, "a{i}b{k}"),
            Colour::Sentinel => f.write_str("a∞b∞"),
        }
    }
}

impl FromStr for Colour {
    type Err = Error;

    fn from_str(s: &str) -> Result<Colour> {
        let s = s.trim();
        let bad = || Error::Parse(format!("expected a colour like a1b2, got {s:?}"));
        let rest = s.strip_prefix('a').ok_or_else(bad)?;
        let (i, k) = rest.split_once('b').ok_or_else(bad)?;
        let i: u8 = i.parse().map_err(|_| bad())?;
        let k: u8 = k.parse().map_err(|_| bad())?;
        if i as usize >= MAX_N || k as usize >= MAX_N {
            return Err(bad());
        }
        Ok(Colour::new(i, k))
    }
}

/// All `n^2` colours in code order.
pub fn all_colours(n: usize) -> Vec<Colour> {
    (0..n * n).map(|c| Colour::from_code(c, n)).collect()
}

#[inline]
fn chi(b: bool) -> i32 {
    b as i32
}

#[inline]
pub(crate) fn delta_raw(i: u8, k: u8, i2: u8, k2: u8) -> u8 {
    (chi(i >= i2) - chi(i == k && k == i2) + chi(k <= k2) - chi(k == i2 && i2 == k2)) as u8
}

#[inline]
pub(crate) fn delta_prime_raw(i: u8, k: u8, i2: u8, k2: u8) -> u8 {
    (chi(i >= i2) + chi(k <= k2)) as u8
}

/// The minimal difference `Δ`.
pub fn delta(c1: Colour, c2: Colour) -> Result<u8> {
    match (c1, c2) {
        (Colour::Sentinel, Colour::Sentinel) => Err(Error::SentinelPair),
        (Colour::Sentinel, _) | (_, Colour::Sentinel) => Ok(1),
        _ => {
            let (i, k) = c1.indices()?;
            let (i2, k2) = c2.indices()?;
            Ok(delta_raw(i, k, i2, k2))
        }
    }
}

/// `Δ′(a_i b_k, a_i' b_k') = χ(i ≥ i') + χ(k ≤ k')`.
pub fn delta_prime(c1: Colour, c2: Colour) -> Result<u8> {
    let (i, k) = c1.indices()?;
    let (i2, k2) = c2.indices()?;
    Ok(delta_prime_raw(i, k, i2, k2))
}

/// `Δ″ = 2 − Δ′`.
pub fn delta_double_prime(c1: Colour, c2: Colour) -> Result<u8> {
    Ok(2 - delta_prime(c1, c2)?)
}

/// Which difference function to use.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Metric {
    Delta,
    DeltaPrime,
    DeltaDoublePrime,
}

impl Metric {
    pub fn eval(self, c1: Colour, c2: Colour) -> Result<u8> {
        match self {
            Metric::Delta => delta(c1, c2),
            Metric::DeltaPrime => delta_prime(c1, c2),
            Metric::DeltaDoublePrime => delta_double_prime(c1, c2),
        }
    }

    /// Difference between `c` and the next colour, the sentinel when `next`
    /// is `None`. Every metric takes the value 1 against the sentinel.
    pub fn between(self, c: Colour, next: Option<Colour>) -> Result<u8> {
        match next {
            Some(d) if !c.is_sentinel() && !d.is_sentinel() => self.eval(c, d),
            Some(Colour::Sentinel) | None if c.is_sentinel() => Err(Error::SentinelPair),
            _ => Ok(1),
        }
    }
}

/// The two built-in choices of `(δ, γ)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Variant {
    /// `δ₁(a_k b_ℓ) = 1 + min{k, ℓ}` and its `γ₁`.
    MeurmanPrimc,
    /// `δ₂(a_k b_ℓ) = max{k, ℓ}` and its `γ₂`.
    Alt,
}

/// The difference `Δ₁` or `Δ₂` describing the built-in Capparelli-type families.
pub fn delta_variant(variant: Variant, c1: Colour, c2: Colour) -> Result<u8> {
    let (i1, k1) = c1.indices()?;
    let (i2, k2) = c2.indices()?;
    for c in [c1, c2] {
        if c == Colour::Free(0) {
            return Err(Error::ExcludedColour(c));
        }
    }
    let exception = match variant {
        Variant::MeurmanPrimc => {
            (i1 == k1 && c1 == c2 && i1 > 0)
                || (i1 == k1 && i1 > 0 && i2 >= i1 && k2 + 1 == i1)
                || (i2 == k2 && i2 > 0 && i1 + 1 == i2 && k1 >= i2)
        }
        Variant::Alt => {
            (i1 == k1 && c1 == c2 && i1 > 0)
                || (i1 == k1 && i2 == i1 && i1 > k2)
                || (i2 == k2 && k1 == i2 && i2 > i1)
        }
    };
    if exception {
        Ok(1)
    } else {
        Ok(delta_raw(i1, k1, i2, k2))
    }
}

/// The three cases of Condition 2 for an ordered pair of bound colours.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GammaCase {
    /// `max{k1, ℓ2} < min{k2, ℓ1}`.
    Interval,
    /// `k1 > ℓ1`, `k2 > ℓ2` with `{ℓ2+1..k2} \ {ℓ1+1..k1}` non-empty.
    BothDescending,
    /// `k1 < ℓ1`, `k2 < ℓ2` with `{k1+1..ℓ1} \ {k2+1..ℓ2}` non-empty.
    BothAscending,
}

/// The case of Condition 2 that applies to `(a_{k1} b_{l1}, a_{k2} b_{l2})`
/// together with the admissible values of `γ`, or `None` when `γ` is not
/// required there.
pub fn gamma_domain(k1: u8, l1: u8, k2: u8, l2: u8) -> Option<(GammaCase, Vec<u8>)> {
    if k1 == l1 || k2 == l2 {
        return None;
    }
    let lo = k1.max(l2);
    let hi = k2.min(l1);
    if lo < hi {
        return Some((GammaCase::Interval, (lo + 1..=hi).collect()));
    }
    if k1 > l1 && k2 > l2 {
        let set: Vec<u8> = (l2 + 1..=k2).filter(|x| !(l1 + 1..=k1).contains(x)).collect();
        if !set.is_empty() {
            return Some((GammaCase::BothDescending, set));
        }
    }
    if k1 < l1 && k2 < l2 {
        let set: Vec<u8> = (k1 + 1..=l1).filter(|x| !(k2 + 1..=l2).contains(x)).collect();
        if !set.is_empty() {
            return Some((GammaCase::BothAscending, set));
        }
    }
    None
}

/// One failed check of Conditions 1 and 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TableViolation {
    DeltaMissing(Colour),
    DeltaOutOfRange { colour: Colour, value: u8 },
    GammaMissing(Colour, Colour),
    GammaOutOfRange { first: Colour, second: Colour, value: u8 },
    GammaNotRequired(Colour, Colour),
}

impl fmt::Display for TableViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableViolation::DeltaMissing(c) => write!(f, "delta({c}) is missing"),
            TableViolation::DeltaOutOfRange { colour, value } => {
                write!(f, "delta({colour}) = {value} breaks Condition 1")
            }
            TableViolation::GammaMissing(c1, c2) => write!(f, "gamma({c1}, {c2}) is missing"),
            TableViolation::GammaOutOfRange { first, second, value } => {
                write!(f, "gamma({first}, {second}) = {value} breaks Condition 2")
            }
            TableViolation::GammaNotRequired(c1, c2) => {
                write!(f, "gamma({c1}, {c2}) is given but not defined by Condition 2")
            }
        }
    }
}

/// A choice of functions `δ` on bound colours and `γ` on pairs of bound colours.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaGammaTable {
    n: usize,
    delta: Vec<Option<u8>>,
    gamma: Vec<Option<u8>>,
}

impl DeltaGammaTable {
    /// An empty table, to be filled with [`set_delta`](Self::set_delta) and
    /// [`set_gamma`](Self::set_gamma). Nothing is validated.
    pub fn empty(n: usize) -> Result<DeltaGammaTable> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidN(n));
        }
        Ok(DeltaGammaTable { n, delta: vec![None; n * n], gamma: vec![None; n * n * n * n] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set_delta(&mut self, c: Colour, value: u8) -> Result<()> {
        c.check(self.n)?;
        if !c.is_bound() {
            return Err(Error::InvalidTable(format!("delta is only defined on bound colours, not {c}")));
        }
        let code = c.code(self.n);
        self.delta[code] = Some(value);
        Ok(())
    }

    pub fn set_gamma(&mut self, c1: Colour, c2: Colour, value: u8) -> Result<()> {
        c1.check(self.n)?;
        c2.check(self.n)?;
        if !c1.is_bound() || !c2.is_bound() {
            return Err(Error::InvalidTable(format!(
                "gamma is only defined on bound colours, not ({c1}, {c2})"
            )));
        }
        let idx = self.pair_index(c1, c2);
        self.gamma[idx] = Some(value);
        Ok(())
    }

    fn pair_index(&self, c1: Colour, c2: Colour) -> usize {
        c1.code(self.n) * self.n * self.n + c2.code(self.n)
    }

    /// `δ(c)` for a bound colour.
    #[inline]
    pub fn delta(&self, c: Colour) -> Option<u8> {
        if !c.is_bound() {
            return None;
        }
        self.delta.get(c.code(self.n)).copied().flatten()
    }

    /// `γ(c1, c2)` where defined.
    #[inline]
    pub fn gamma(&self, c1: Colour, c2: Colour) -> Option<u8> {
        if !c1.is_bound() || !c2.is_bound() {
            return None;
        }
        self.gamma.get(self.pair_index(c1, c2)).copied().flatten()
    }

    /// Defined `δ` entries in code order.
    pub fn delta_entries(&self) -> impl Iterator<Item = (Colour, u8)> + '_ {
        self.delta
            .iter()
            .enumerate()
            .filter_map(move |(code, v)| v.map(|v| (Colour::from_code(code, self.n), v)))
    }

    /// Defined `γ` entries in code order.
    pub fn gamma_entries(&self) -> impl Iterator<Item = (Colour, Colour, u8)> + '_ {
        let nn = self.n * self.n;
        self.gamma.iter().enumerate().filter_map(move |(idx, v)| {
            v.map(|v| (Colour::from_code(idx / nn, self.n), Colour::from_code(idx % nn, self.n), v))
        })
    }

    /// Every violated entry of Conditions 1 and 2.
    pub fn validate(&self) -> Vec<TableViolation> {
        let n = self.n as u8;
        let mut out = Vec::new();
        for k in 0..n {
            for l in 0..n {
                if k == l {
                    continue;
                }
                let c = Colour::Bound(k, l);
                match self.delta(c) {
                    None => out.push(TableViolation::DeltaMissing(c)),
                    Some(v) if !(k.min(l) < v && v <= k.max(l)) => {
                        out.push(TableViolation::DeltaOutOfRange { colour: c, value: v })
                    }
                    _ => {}
                }
            }
        }
        for c1 in all_colours(self.n).into_iter().filter(|c| c.is_bound()) {
            for c2 in all_colours(self.n).into_iter().filter(|c| c.is_bound()) {
                let (k1, l1) = (c1.a().unwrap(), c1.b().unwrap());
                let (k2, l2) = (c2.a().unwrap(), c2.b().unwrap());
                match (gamma_domain(k1, l1, k2, l2), self.gamma(c1, c2)) {
                    (Some(_), None) => out.push(TableViolation::GammaMissing(c1, c2)),
                    (Some((_, allowed)), Some(v)) if !allowed.contains(&v) => {
                        out.push(TableViolation::GammaOutOfRange { first: c1, second: c2, value: v })
                    }
                    (None, Some(_)) => out.push(TableViolation::GammaNotRequired(c1, c2)),
                    _ => {}
                }
            }
        }
        out
    }

    /// Validates the table, turning the violation list into an error.
    pub fn validated(self) -> Result<DeltaGammaTable> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            let msg: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
            Err(Error::InvalidTable(msg.join("; ")))
        }
    }
}

/// The built-in tables `(δ₁, γ₁)` and `(δ₂, γ₂)`.
pub fn builtin_delta_gamma(variant: Variant, n: usize) -> Result<DeltaGammaTable> {
    if n < 2 {
        return Err(Error::InvalidN(n));
    }
    let mut t = DeltaGammaTable::empty(n)?;
    let n8 = n as u8;
    for k in 0..n8 {
        for l in 0..n8 {
            if k != l {
                let v = match variant {
                    Variant::MeurmanPrimc => 1 + k.min(l),
                    Variant::Alt => k.max(l),
                };
                t.set_delta(Colour::Bound(k, l), v)?;
            }
        }
    }
    for c1 in all_colours(n).into_iter().filter(|c| c.is_bound()) {
        for c2 in all_colours(n).into_iter().filter(|c| c.is_bound()) {
            let (k1, l1) = (c1.a().unwrap(), c1.b().unwrap());
            let (k2, l2) = (c2.a().unwrap(), c2.b().unwrap());
            let Some((case, set)) = gamma_domain(k1, l1, k2, l2) else { continue };
            let v = match (variant, case) {
                (Variant::MeurmanPrimc, GammaCase::Interval) => 1 + k1.max(l2),
                (Variant::MeurmanPrimc, GammaCase::BothDescending) => {
                    if set.contains(&(l2 + 1)) {
                        l2 + 1
                    } else {
                        k2
                    }
                }
                (Variant::MeurmanPrimc, GammaCase::BothAscending) => {
                    if set.contains(&(k1 + 1)) {
                        k1 + 1
                    } else {
                        l1
                    }
                }
                (Variant::Alt, GammaCase::Interval) => k2.min(l1),
                (Variant::Alt, GammaCase::BothDescending) => {
                    if set.contains(&k2) {
                        k2
                    } else {
                        l2 + 1
                    }
                }
                (Variant::Alt, GammaCase::BothAscending) => {
                    if set.contains(&l1) {
                        l1
                    } else {
                        k1 + 1
                    }
                }
            };
            t.set_gamma(c1, c2, v)?;
        }
    }
    Ok(t)
}

/// Row and column order of the difference matrices.
///
/// For `n = 2` and `n = 3` this is the order in which the matrices are
/// usually printed. For other `n` the colours are sorted by a-index
/// descending, then b-index ascending; this is a convention.
pub fn colour_order(n: usize) -> Vec<Colour> {
    let c = |i, k| Colour::new(i, k);
    match n {
        2 => vec![c(1, 0), c(0, 0), c(1, 1), c(0, 1)],
        3 => vec![c(2, 0), c(2, 1), c(1, 0), c(0, 0), c(2, 2), c(1, 1), c(0, 1), c(1, 2), c(0, 2)],
        _ => {
            let mut v = all_colours(n);
            v.sort_by_key(|c| (core::cmp::Reverse(c.a().unwrap()), c.b().unwrap()));
            v
        }
    }
}

/// A square matrix of differences with its row/column labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaMatrix {
    pub order: Vec<Colour>,
    pub rows: Vec<Vec<u8>>,
}

/// The full difference matrix for `metric` over the `n^2` colours.
pub fn build_delta_matrix(n: usize, metric: Metric) -> Result<DeltaMatrix> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidN(n));
    }
    let order = colour_order(n);
    let mut rows = Vec::with_capacity(order.len());
    for &c1 in &order {
        let mut row = Vec::with_capacity(order.len());
        for &c2 in &order {
            row.push(metric.eval(c1, c2)?);
        }
        rows.push(row);
    }
    Ok(DeltaMatrix { order, rows })
}

/// Dense `Δ` lookup by colour code, used in hot loops.
#[derive(Clone, Debug)]
pub(crate) struct DeltaLookup {
    n: usize,
    values: Vec<u8>,
}

impl DeltaLookup {
    pub(crate) fn new(n: usize) -> DeltaLookup {
        let nn = n * n;
        let mut values = vec![0; nn * nn];
        for a in 0..nn {
            for b in 0..nn {
                let (i, k) = (a / n, a % n);
                let (i2, k2) = (b / n, b % n);
                values[a * nn + b] = delta_raw(i as u8, k as u8, i2 as u8, k2 as u8);
            }
        }
        DeltaLookup { n, values }
    }

    #[inline]
    pub(crate) fn get(&self, c1: Colour, c2: Colour) -> u8 {
        let nn = self.n * self.n;
        self.values[c1.code(self.n) * nn + c2.code(self.n)]
    }
}
