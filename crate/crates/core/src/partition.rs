//! Coloured partitions, membership in `P_n`, `C_n(δ, γ)` and `P^0`,
//! minimal partitions and kernels.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::colour::{gamma_domain, Colour, DeltaGammaTable, DeltaLookup, GammaCase, Metric};
use crate::error::{Error, Result};
use crate::qseries::{g, inv_qfactorial, qbinom, Monomial, QSeries};
use crate::sequence::{reduce, ColourSequence, KernelStructure, SiteClass};

/// A part `size_{colour}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Part {
    pub size: u32,
    pub colour: Colour,
}

impl Part {
    pub const fn new(size: u32, colour: Colour) -> Part {
        Part { size, colour }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.size, self.colour)
    }
}

impl FromStr for Part {
    type Err = Error;

    fn from_str(s: &str) -> Result<Part> {
        let s = s.trim();
        let open = s.find('[').ok_or_else(|| Error::Parse(format!("missing '[' in part {s:?}")))?;
        if !s.ends_with(']') {
            return Err(Error::Parse(format!("missing ']' in part {s:?}")));
        }
        let size: u32 = s[..open].trim().parse().map_err(|_| Error::Parse(format!("bad part size in {s:?}")))?;
        if size == 0 {
            return Err(Error::Parse(format!("part sizes must be positive: {s:?}")));
        }
        let colour: Colour = s[open + 1..s.len() - 1].parse()?;
        if colour.is_sentinel() {
            return Err(Error::UnexpectedSentinel);
        }
        Ok(Part { size, colour })
    }
}

/// Parts listed from largest to smallest.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ColouredPartition(Vec<Part>);

impl ColouredPartition {
    pub fn new(parts: Vec<Part>) -> Result<ColouredPartition> {
        for (j, p) in parts.iter().enumerate() {
            if p.size == 0 || p.colour.is_sentinel() {
                return Err(Error::NotAPartition { index: j });
            }
            if j > 0 && parts[j - 1].size < p.size {
                return Err(Error::NotAPartition { index: j });
            }
        }
        Ok(ColouredPartition(parts))
    }

    pub fn empty() -> ColouredPartition {
        ColouredPartition(Vec::new())
    }

    pub fn parts(&self) -> &[Part] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<Part> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|p| p.size as u64).sum()
    }

    pub fn colours(&self) -> ColourSequence {
        ColourSequence::new(self.0.iter().map(|p| p.colour).collect()).expect("no sentinel in a partition")
    }

    /// `∏ a_i a_k^{-1}` over the parts coloured `a_i b_k`.
    pub fn monomial(&self) -> Monomial {
        self.0.iter().fold(Monomial::ONE, |m, p| m.mul(colour_monomial(p.colour)))
    }
}

/// `a_i a_k^{-1}` for the colour `a_i b_k`.
pub fn colour_monomial(c: Colour) -> Monomial {
    match c {
        Colour::Bound(i, k) => Monomial::var(i as usize, 1).mul(Monomial::var(k as usize, -1)),
        _ => Monomial::ONE,
    }
}

impl fmt::Display for ColouredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (j, p) in self.0.iter().enumerate() {
            if j > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for ColouredPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<ColouredPartition> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(ColouredPartition::empty());
        }
        let parts = s.split('+').map(str::parse).collect::<Result<Vec<Part>>>()?;
        ColouredPartition::new(parts)
    }
}

/// A family of coloured partitions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MembershipSpec {
    /// Generalised Primc partitions with `n^2` colours.
    Pn(usize),
    /// Generalised Capparelli partitions for a `(δ, γ)` table.
    Cn(DeltaGammaTable),
    /// Classical partitions, every part coloured `a0b0`.
    P0,
}

impl MembershipSpec {
    /// Number of colour indices.
    pub fn n(&self) -> usize {
        match self {
            MembershipSpec::Pn(n) => *n,
            MembershipSpec::Cn(t) => t.n(),
            MembershipSpec::P0 => 1,
        }
    }

    /// Colours a member may use.
    pub fn colours(&self) -> Vec<Colour> {
        match self {
            MembershipSpec::Pn(n) => crate::colour::all_colours(*n),
            MembershipSpec::Cn(t) => {
                crate::colour::all_colours(t.n()).into_iter().filter(|&c| c != Colour::Free(0)).collect()
            }
            MembershipSpec::P0 => vec![Colour::Free(0)],
        }
    }
}

/// The forbidden patterns, named by the part that is removed in the
/// bijection (the free part in the middle).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Pattern {
    /// `p_{a_ib_i} + p_{a_ib_i}`.
    RepeatedFree,
    /// `p_{a_{k1}b_{l1}} + p_{a_ib_i} + p_{a_{k2}b_{l2}}` with `i = γ`.
    Between,
    /// `(p+u) + p_{a_ib_i} + p_{a_{k2}b_{l2}}`, `u ≥ 2` or no left part.
    LeftGap,
    /// `(p+1)_{a_{k1}b_{l1}} + p_{a_ib_i} + p_{a_{k2}b_{l2}}`, `k1 ≤ l1`.
    LeftStep,
    /// `(p+1)_{a_{k1}b_{l1}} + p_{a_ib_i} + p_{a_{k2}b_{l2}}`, `k1 > l1`, `i = γ`.
    LeftStepGamma,
    /// `p_{a_{k1}b_{l1}} + p_{a_ib_i} + (p−u)`, `u ≥ 2` or no right part.
    RightGap,
    /// `(p+1)_{a_{k1}b_{l1}} + (p+1)_{a_ib_i} + p_{a_{k2}b_{l2}}`, `k2 ≥ l2`.
    RightStep,
    /// `(p+1)_{a_{k1}b_{l1}} + (p+1)_{a_ib_i} + p_{a_{k2}b_{l2}}`, `k2 < l2`, `i = γ`.
    RightStepGamma,
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Pattern::RepeatedFree => "repeated free colour",
            Pattern::Between => "free colour gamma(c1, c2) between two equal bound parts",
            Pattern::LeftGap => "free colour delta(c) left of a descending bound part, gap >= 2 on the left",
            Pattern::LeftStep => "free colour delta(c) left of a descending bound part, step 1 on the left",
            Pattern::LeftStepGamma => "free colour gamma(c1, c2) left of a descending bound part, step 1 on the left",
            Pattern::RightGap => "free colour delta(c) right of an ascending bound part, gap >= 2 on the right",
            Pattern::RightStep => "free colour delta(c) right of an ascending bound part, step 1 on the right",
            Pattern::RightStepGamma => "free colour gamma(c1, c2) right of an ascending bound part, step 1 on the right",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ViolationKind {
    /// `λ_j − λ_{j+1} < Δ(c_j, c_{j+1})`.
    Difference { required: u8, actual: u32 },
    /// A colour the family does not allow.
    Colour(Colour),
    /// A forbidden pattern centred on the part.
    Pattern(Pattern),
}

/// The first reason a partition is not in a family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Violation {
    /// 0-based index of the offending part.
    pub index: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ViolationKind::Difference { required, actual } => write!(
                f,
                "parts {} and {} differ by {actual}, need at least {required}",
                self.index + 1,
                self.index + 2
            ),
            ViolationKind::Colour(c) => write!(f, "part {} has colour {c}, not allowed here", self.index + 1),
            ViolationKind::Pattern(p) => write!(f, "part {} is the centre of a forbidden pattern: {p}", self.index + 1),
        }
    }
}

fn same_size_bound(p: Option<Part>, size: u32) -> Option<(u8, u8)> {
    match p {
        Some(Part { size: s, colour: Colour::Bound(k, l) }) if s == size => Some((k, l)),
        _ => None,
    }
}

fn gamma_matches(table: &DeltaGammaTable, l: Colour, r: Colour, case: GammaCase, i: u8) -> bool {
    let (Ok((k1, l1)), Ok((k2, l2))) = (l.indices(), r.indices()) else { return false };
    match gamma_domain(k1, l1, k2, l2) {
        Some((c, _)) if c == case => table.gamma(l, r) == Some(i),
        _ => false,
    }
}

/// The forbidden pattern of a `C_n(δ, γ)` table centred on `centre`, given
/// its neighbours (`None` at either end of the partition).
pub fn forbidden_centre(
    left: Option<Part>,
    centre: Part,
    right: Option<Part>,
    table: &DeltaGammaTable,
) -> Option<Pattern> {
    let Colour::Free(i) = centre.colour else { return None };
    if i == 0 {
        return None;
    }
    if left == Some(centre) || right == Some(centre) {
        return Some(Pattern::RepeatedFree);
    }
    let p = centre.size;
    match (same_size_bound(left, p), same_size_bound(right, p)) {
        (Some((k1, l1)), Some((k2, l2))) => {
            let (lc, rc) = (Colour::Bound(k1, l1), Colour::Bound(k2, l2));
            gamma_matches(table, lc, rc, GammaCase::Interval, i).then_some(Pattern::Between)
        }
        (None, Some((k2, l2))) if k2 > l2 && left.map_or(true, |l| l.size != p) => {
            let rc = Colour::Bound(k2, l2);
            let l = match left {
                Some(l) if l.size == p + 1 => l,
                _ => return (table.delta(rc) == Some(i)).then_some(Pattern::LeftGap),
            };
            let (k1, l1) = l.colour.indices().ok()?;
            if k1 <= l1 {
                (table.delta(rc) == Some(i)).then_some(Pattern::LeftStep)
            } else {
                gamma_matches(table, l.colour, rc, GammaCase::BothDescending, i).then_some(Pattern::LeftStepGamma)
            }
        }
        (Some((k1, l1)), None) if k1 < l1 && right.map_or(true, |r| r.size != p) => {
            let lc = Colour::Bound(k1, l1);
            let r = match right {
                Some(r) if r.size + 1 == p => r,
                _ => return (table.delta(lc) == Some(i)).then_some(Pattern::RightGap),
            };
            let (k2, l2) = r.colour.indices().ok()?;
            if k2 >= l2 {
                (table.delta(lc) == Some(i)).then_some(Pattern::RightStep)
            } else {
                gamma_matches(table, lc, r.colour, GammaCase::BothAscending, i).then_some(Pattern::RightStepGamma)
            }
        }
        _ => None,
    }
}

fn check_colours(p: &ColouredPartition, n: usize) -> Result<()> {
    for part in p.parts() {
        part.colour.check(n)?;
    }
    Ok(())
}

fn first_difference_violation(p: &ColouredPartition) -> Option<Violation> {
    for (j, w) in p.parts().windows(2).enumerate() {
        let required = crate::colour::delta(w[0].colour, w[1].colour).expect("checked colours");
        let actual = w[0].size - w[1].size;
        if actual < required as u32 {
            return Some(Violation { index: j, kind: ViolationKind::Difference { required, actual } });
        }
    }
    None
}

/// The first violation of membership, or `None` for a member.
pub fn membership_violation(p: &ColouredPartition, spec: &MembershipSpec) -> Result<Option<Violation>> {
    match spec {
        MembershipSpec::P0 => Ok(p
            .parts()
            .iter()
            .position(|q| q.colour != Colour::Free(0))
            .map(|index| Violation { index, kind: ViolationKind::Colour(p.parts()[index].colour) })),
        MembershipSpec::Pn(n) => {
            check_colours(p, *n)?;
            Ok(first_difference_violation(p))
        }
        MembershipSpec::Cn(table) => {
            check_colours(p, table.n())?;
            if let Some(index) = p.parts().iter().position(|q| q.colour == Colour::Free(0)) {
                return Ok(Some(Violation { index, kind: ViolationKind::Colour(Colour::Free(0)) }));
            }
            if let Some(v) = first_difference_violation(p) {
                return Ok(Some(v));
            }
            let parts = p.parts();
            for j in 0..parts.len() {
                let left = j.checked_sub(1).map(|k| parts[k]);
                let right = parts.get(j + 1).copied();
                if let Some(pat) = forbidden_centre(left, parts[j], right, table) {
                    return Ok(Some(Violation { index: j, kind: ViolationKind::Pattern(pat) }));
                }
            }
            Ok(None)
        }
    }
}

pub fn is_member(p: &ColouredPartition, spec: &MembershipSpec) -> Result<bool> {
    Ok(membership_violation(p, spec)?.is_none())
}

/// `|min_d(C)| = Σ_k k d(c_k, c_{k+1})` with the sentinel after the last colour.
pub fn minimal_weight(c: &[Colour], metric: Metric) -> Result<u64> {
    let mut w = 0u64;
    for k in 0..c.len() {
        let d = metric.between(c[k], c.get(k + 1).copied())?;
        w += (k as u64 + 1) * d as u64;
    }
    Ok(w)
}

/// The partition of least weight with colour sequence `c` whose
/// consecutive differences are at least `metric`.
pub fn minimal_partition(c: &ColourSequence, metric: Metric) -> Result<ColouredPartition> {
    let mut sizes = vec![0u32; c.len()];
    let mut acc = 0u32;
    for k in (0..c.len()).rev() {
        acc += metric.between(c[k], c.get(k + 1).copied())? as u32;
        sizes[k] = acc;
    }
    ColouredPartition::new(sizes.into_iter().zip(c.iter()).map(|(size, &colour)| Part { size, colour }).collect())
}

/// The reduction of the colour sequence of `p`.
pub fn kernel_of(p: &ColouredPartition) -> ColourSequence {
    reduce(&p.colours())
}

/// `|min_Δ(S(n_1, ..., n_{s+t}))|` from the kernel and the counts alone.
pub fn minimal_weight_after_insertion(ks: &KernelStructure, counts: &[usize]) -> Result<u64> {
    let sites = ks.sites();
    if counts.len() != sites.len() {
        return Err(Error::LengthMismatch { expected: sites.len(), actual: counts.len() });
    }
    let mut w = minimal_weight(ks.kernel(), Metric::Delta)?;
    // r = #({j, ..., s+t} ∩ (N ⊔ T_0 ⊔ S_1))
    let mut r = 0u64;
    for (j, site) in sites.iter().enumerate().rev() {
        let inserted = counts[j] > 0;
        r += (site.class != SiteClass::Type1 || inserted) as u64;
        if inserted {
            if site.class == SiteClass::Type1 {
                w += site.colours_to_the_left() as u64;
            }
            w += counts[j] as u64 * r;
        }
    }
    Ok(w)
}

/// Which kernel generating function to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KernelGf {
    /// Minimal partitions under `Δ` with `s + m` parts (no `1/(q;q)` factor).
    MinimalDelta,
    /// Minimal partitions under `Δ″`.
    MinimalDeltaDoublePrime,
    /// Minimal partitions under `Δ′`.
    MinimalDeltaPrime,
    /// All of `P_n` with the kernel and `s + m` parts.
    Delta,
    /// Coloured Frobenius partitions with the kernel and `s + m` columns.
    Frobenius,
}

/// Closed form of a kernel generating function, known through `q^order`.
/// `ks` must be the structure of its kernel under `Δ`.
pub fn kernel_gf_formula(ks: &KernelStructure, m: usize, kind: KernelGf, order: i64) -> Result<QSeries> {
    let s = ks.s() as i64;
    let t = ks.t();
    let m_ = m as i64;
    let min_s = minimal_weight(ks.kernel(), Metric::Delta)? as i64;
    let t0 = ks.type0_per_span().into_iter().map(|x| x as i64).collect::<Vec<_>>();
    let t1: Vec<i64> = t0.iter().map(|x| 2 - x).collect();
    let mut sum = QSeries::zero(0, crate::qseries::EXACT);
    for u in 0..=t {
        let ui = u as i64;
        let (shift, gx) = match kind {
            KernelGf::MinimalDelta | KernelGf::Delta => (min_s + m_ + ui * (s - t as i64), &t0),
            KernelGf::MinimalDeltaDoublePrime => (s * (s + 1) - min_s + m_ + ui * (s - t as i64), &t1),
            KernelGf::MinimalDeltaPrime | KernelGf::Frobenius => {
                (min_s + m_ * (s + m_ + 1) - ui * (t as i64 + m_), &t0)
            }
        };
        let term = g(u, t, gx)?.mul(&qbinom(s + m_ - 1, m_ - ui)).shift(shift);
        sum = sum.add(&term);
    }
    let len = (s + m_) as u64;
    let out = match kind {
        KernelGf::Delta => sum.mul(&inv_qfactorial(len, 0, order)),
        KernelGf::Frobenius => {
            let inv = inv_qfactorial(len, 0, order);
            sum.mul(&inv).mul(&inv)
        }
        _ => sum,
    };
    Ok(out.truncate(order))
}

/// Depth-first enumeration of the members of `spec` whose total cost is at
/// most `max_cost`, where a part costs `cost(size, colour) ≥ size` and the
/// cost is non-decreasing in the size. Every member is visited exactly once,
/// with its parts from largest to smallest and its total cost.
pub fn for_each_member_with_cost<C, F>(spec: &MembershipSpec, max_cost: u64, cost: C, mut f: F) -> Result<()>
where
    C: Fn(u32, Colour) -> u64,
    F: FnMut(&[Part], u64),
{
    let n = spec.n();
    if n == 0 || n > crate::colour::MAX_N {
        return Err(Error::InvalidN(n));
    }
    let colours = spec.colours();
    let lookup = DeltaLookup::new(n);
    let table = match spec {
        MembershipSpec::Cn(t) => Some(t),
        _ => None,
    };
    let mut dfs = Dfs { colours: &colours, lookup: &lookup, table, cost: &cost, max_cost, stack: Vec::new() };
    f(&[], 0);
    dfs.extend(max_cost, &mut f);
    Ok(())
}

struct Dfs<'a, C> {
    colours: &'a [Colour],
    lookup: &'a DeltaLookup,
    table: Option<&'a DeltaGammaTable>,
    cost: &'a C,
    max_cost: u64,
    stack: Vec<Part>,
}

impl<C: Fn(u32, Colour) -> u64> Dfs<'_, C> {
    fn extend<F: FnMut(&[Part], u64)>(&mut self, budget: u64, f: &mut F) {
        let last = self.stack.last().copied();
        for &c in self.colours {
            let max_size = match last {
                None => u32::MAX,
                Some(p) => match p.size.checked_sub(self.lookup.get(p.colour, c) as u32) {
                    Some(m) => m,
                    None => continue,
                },
            };
            let mut size = 1u32;
            while size <= max_size {
                let w = (self.cost)(size, c);
                if w > budget {
                    break;
                }
                let part = Part { size, colour: c };
                if let Some(table) = self.table {
                    let len = self.stack.len();
                    if len > 0 {
                        let left = len.checked_sub(2).map(|k| self.stack[k]);
                        if forbidden_centre(left, self.stack[len - 1], Some(part), table).is_some() {
                            size += 1;
                            continue;
                        }
                    }
                }
                self.stack.push(part);
                let emit = match self.table {
                    Some(table) => {
                        let len = self.stack.len();
                        let left = len.checked_sub(2).map(|k| self.stack[k]);
                        forbidden_centre(left, part, None, table).is_none()
                    }
                    None => true,
                };
                if emit {
                    f(&self.stack, self.max_cost - (budget - w));
                }
                self.extend(budget - w, f);
                self.stack.pop();
                size += 1;
            }
        }
    }
}

/// Visits every member of weight at most `max_weight`.
pub fn for_each_member<F: FnMut(&[Part])>(spec: &MembershipSpec, max_weight: u64, mut f: F) -> Result<()> {
    for_each_member_with_cost(spec, max_weight, |size, _| size as u64, |parts, _| f(parts))
}

/// Every member of weight at most `max_weight`, sorted by weight and then
/// lexicographically by `(size, colour code)` from the largest part.
pub fn enumerate(spec: &MembershipSpec, max_weight: u64) -> Result<Vec<ColouredPartition>> {
    let n = spec.n();
    let mut out = Vec::new();
    for_each_member(spec, max_weight, |parts| out.push(ColouredPartition(parts.to_vec())))?;
    out.sort_by_cached_key(|p| {
        (p.weight(), p.parts().iter().map(|q| (q.size, q.colour.code(n))).collect::<Vec<_>>())
    });
    Ok(out)
}

/// Text form of a list of partitions, one per line.
pub fn format_list(list: &[ColouredPartition]) -> String {
    let mut s = String::new();
    for p in list {
        s.push_str(&p.to_string());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour::{builtin_delta_gamma, Variant};
    use crate::sequence::kernel_structure;

    fn part(s: &str) -> ColouredPartition {
        s.parse().unwrap()
    }

    fn seq(s: &str) -> ColourSequence {
        s.parse().unwrap()
    }

    #[test]
    fn weight_44_example() {
        let p = part("9[a1b0]+8[a0b0]+7[a2b2]+6[a1b1]+6[a1b1]+4[a0b1]+3[a1b2]+1[a0b2]");
        assert_eq!(p.weight(), 44);
        assert!(is_member(&p, &MembershipSpec::Pn(3)).unwrap());
        let min = minimal_partition(&p.colours(), Metric::Delta).unwrap();
        assert_eq!(min, p);
        assert_eq!(p.to_string(), "9[a1b0]+8[a0b0]+7[a2b2]+6[a1b1]+6[a1b1]+4[a0b1]+3[a1b2]+1[a0b2]");
    }

    #[test]
    fn ex_min() {
        let min = minimal_partition(&seq("a2b2,a1b0,a0b2,a1b0,a2b1"), Metric::Delta).unwrap();
        assert_eq!(min, part("5[a2b2]+4[a1b0]+2[a0b2]+2[a1b0]+1[a2b1]"));
    }

    #[test]
    fn empty_cases() {
        let e = ColouredPartition::empty();
        assert_eq!(e.to_string(), "0");
        assert_eq!(part("0"), e);
        for spec in [MembershipSpec::Pn(3), MembershipSpec::P0] {
            assert!(is_member(&e, &spec).unwrap());
        }
        assert_eq!(minimal_partition(&ColourSequence::empty(), Metric::Delta).unwrap(), e);
    }

    #[test]
    fn forbidden_pattern_example() {
        let t = builtin_delta_gamma(Variant::MeurmanPrimc, 3).unwrap();
        let p = part("3[a1b0]+2[a2b2]+2[a2b0]");
        assert!(is_member(&p, &MembershipSpec::Pn(3)).unwrap());
        let v = membership_violation(&p, &MembershipSpec::Cn(t)).unwrap().unwrap();
        assert_eq!(v.index, 1);
        assert!(matches!(v.kind, ViolationKind::Pattern(_)));
    }

    #[test]
    fn colour_out_of_range() {
        assert!(is_member(&part("2[a2b0]"), &MembershipSpec::Pn(2)).is_err());
    }

    #[test]
    fn kernel_of_a0b0_run() {
        assert_eq!(kernel_of(&part("4[a0b0]+4[a0b0]")), seq("a0b0"));
    }

    #[test]
    fn p0_counts_are_partition_numbers() {
        let mut counts = [0u32; 11];
        for_each_member(&MembershipSpec::P0, 10, |p| counts[p.iter().map(|q| q.size as usize).sum::<usize>()] += 1)
            .unwrap();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn p2_small_weights() {
        let list = enumerate(&MembershipSpec::Pn(2), 2).unwrap();
        assert_eq!(list.iter().filter(|p| p.weight() == 1).count(), 4);
        for p in &list {
            assert!(is_member(p, &MembershipSpec::Pn(2)).unwrap());
        }
    }

    #[test]
    fn insertion_formula_matches_direct() {
        let ks = kernel_structure(&seq("a2b2,a1b0,a0b2,a1b0,a2b1")).unwrap();
        let sites = ks.sites().len();
        for pattern in 0..(1usize << sites) {
            let counts: Vec<usize> = (0..sites).map(|j| ((pattern >> j) & 1) * (1 + j % 2)).collect();
            let c = crate::sequence::insert(&ks, &counts).unwrap();
            assert_eq!(
                minimal_weight_after_insertion(&ks, &counts).unwrap(),
                minimal_weight(&c, Metric::Delta).unwrap()
            );
        }
    }

    #[test]
    fn empty_kernel_formula() {
        let ks = kernel_structure(&ColourSequence::empty()).unwrap();
        assert_eq!(kernel_gf_formula(&ks, 0, KernelGf::Delta, 10).unwrap().to_ints(10)[0], 1.into());
        assert_eq!(kernel_gf_formula(&ks, 0, KernelGf::Delta, 10).unwrap(), QSeries::one(0, 10));
        assert_eq!(kernel_gf_formula(&ks, 2, KernelGf::Delta, 10).unwrap(), QSeries::zero(0, 10));
    }
}
