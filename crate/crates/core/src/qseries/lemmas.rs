//! Exact checks of the q-binomial identities behind the kernel generating
//! function, over finite parameter grids.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::products::{g, inv_qfactorial, qbinom};
use super::series::{QSeries, EXACT};
use crate::colour::{Colour, Metric};
use crate::partition::{kernel_gf_formula, minimal_weight, minimal_weight_after_insertion, KernelGf};
use crate::sequence::{insert, kernel_structure, reduced_sequences, KernelStructure, SiteClass};

/// Outcome of one identity over its grid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub instances: u64,
    /// Total number of failing instances.
    pub failed: u64,
    /// The first few failing instances.
    pub failures: Vec<String>,
}

impl LemmaCheck {
    fn new(name: &'static str) -> LemmaCheck {
        LemmaCheck { name, instances: 0, failed: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(what());
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LemmaReport {
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(LemmaCheck::passed)
    }
}

/// Grid for the exhaustive check of the minimal weight after insertion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct InsertionGrid {
    pub max_len: usize,
    pub max_n: usize,
    pub max_count: usize,
    /// Only the kernels of exactly this length use `long_count` as the
    /// bound on the counts, when set.
    pub long: Option<(usize, usize)>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SuiteConfig {
    /// Multiply one side of every identity by `q` (a negative control).
    pub corrupt: bool,
    /// Largest kernel length for the kernel-level checks (over `n = 3`).
    pub kernel_len: usize,
    /// Largest `m` for the kernel-level checks.
    pub kernel_m: usize,
    pub insertion: Option<InsertionGrid>,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig { corrupt: false, kernel_len: 3, kernel_m: 4, insertion: None }
    }
}

fn bump(s: QSeries, corrupt: bool) -> QSeries {
    if corrupt {
        s.shift(1)
    } else {
        s
    }
}

fn qb(n: i64, k: i64) -> QSeries {
    qbinom(n, k)
}

fn mono(e: i64) -> QSeries {
    QSeries::one(0, EXACT).shift(e)
}

fn zero() -> QSeries {
    QSeries::zero(0, EXACT)
}

/// Every vector in `0..=bound` of length `len`.
fn grid(len: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Weakly increasing `0 = x_0 ≤ x_1 ≤ ... ≤ x_t` with `x_t ≤ top`
/// (or `x_t = top` when `fixed_end`), returned without `x_0`.
fn chains(t: usize, top: i64, fixed_end: bool) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..t {
        let mut next = Vec::new();
        for c in &out {
            let lo = c.last().copied().unwrap_or(0);
            for x in lo..=top {
                let mut d = c.clone();
                d.push(x);
                next.push(d);
            }
        }
        out = next;
    }
    if fixed_end {
        out.retain(|c| c.last().copied().unwrap_or(0) == top);
    }
    out
}

/// `g_{u,v}(q^{-1}; 2 − x) = q^{−u(2v+u−1)} g_{u,v}(q; x)`.
pub fn check_g_symmetry(corrupt: bool) -> LemmaCheck {
    let mut c = LemmaCheck::new("g_uv symmetry");
    for v in 0..=4usize {
        for x in grid(v, 2) {
            let y: Vec<i64> = x.iter().map(|a| 2 - a).collect();
            for u in 0..=v {
                let ui = u as i64;
                let lhs = g(u, v, &y).unwrap().invert_q().unwrap();
                let rhs = bump(g(u, v, &x).unwrap().shift(-ui * (2 * v as i64 + ui - 1)), corrupt);
                c.record(lhs == rhs, || format!("u={u} v={v} x={x:?}"));
            }
        }
    }
    c
}

/// `1/(q;q)_{s+m} = Σ_{m'} q^{(m'−u)(s+m')} / (q;q)_{s+m'} [m−u, m'−u]`
/// through `q^order`.
pub fn check_inverse_qfactorial(corrupt: bool, order: i64) -> LemmaCheck {
    let mut c = LemmaCheck::new("inverse (q;q) expansion");
    for s in 1..=6i64 {
        for m in 0..=6i64 {
            for u in 0..=m {
                let lhs = inv_qfactorial((s + m) as u64, 0, order);
                let mut rhs = QSeries::zero(0, order);
                for mp in u..=m {
                    let t = inv_qfactorial((s + mp) as u64, 0, order).mul(&qb(m - u, mp - u)).shift((mp - u) * (s + mp));
                    rhs = rhs.add(&t.truncate(order));
                }
                let rhs = bump(rhs, corrupt).truncate(order);
                let ok = lhs.first_difference(&rhs, order).is_ok_and(|d| d.is_none());
                c.record(ok, || format!("s={s} m={m} u={u}"));
            }
        }
    }
    c
}

/// `q^m [m + Σℓ − 1, m] = q^m Σ_x ∏_r q^{ℓ_r x_{r−1}} [x_r − x_{r−1} + ℓ_r − 1, x_r − x_{r−1}]`.
pub fn check_chain_sum(corrupt: bool) -> LemmaCheck {
    let mut c = LemmaCheck::new("q-binomial chain sum");
    for t in 0..=3usize {
        for l in grid(t, 3) {
            for m in 0..=6i64 {
                let lsum: i64 = l.iter().sum();
                let lhs = qb(m + lsum - 1, m).shift(m);
                let mut rhs = zero();
                for x in chains(t, m, true) {
                    let mut term = mono(m);
                    let mut prev = 0;
                    for (r, &xr) in x.iter().enumerate() {
                        let d = xr - prev;
                        term = term.mul(&qb(d + l[r] - 1, d)).shift(l[r] * prev);
                        prev = xr;
                    }
                    rhs = rhs.add(&term);
                }
                if t == 0 && m != 0 {
                    // no chain ends at m
                    rhs = zero();
                }
                let rhs = bump(rhs, corrupt);
                c.record(lhs == rhs, || format!("t={t} l={l:?} m={m}"));
            }
        }
    }
    c
}

/// `Σ_{|A| = a} q^{Σ_{j∈A} #{j' < j : j' ∉ A}} = [a+b, a]`.
pub fn check_lattice_paths(corrupt: bool) -> LemmaCheck {
    let mut c = LemmaCheck::new("q-binomial as lattice paths");
    for a in 0..=5u32 {
        for b in 0..=5u32 {
            let mut lhs = zero();
            for set in 0u32..(1 << (a + b)) {
                if set.count_ones() != a {
                    continue;
                }
                let mut e = 0i64;
                let mut outside = 0i64;
                for j in 0..a + b {
                    if set >> j & 1 == 1 {
                        e += outside;
                    } else {
                        outside += 1;
                    }
                }
                lhs = lhs.add(&mono(e));
            }
            let rhs = bump(qb((a + b) as i64, a as i64), corrupt);
            c.record(lhs == rhs, || format!("a={a} b={b}"));
        }
    }
    c
}

/// `[a+b, c] = Σ_{a'} [a, a'] [b, c−a'] q^{a'(b−c+a')}`.
pub fn check_vandermonde(corrupt: bool) -> LemmaCheck {
    let mut c = LemmaCheck::new("q-Vandermonde");
    for a in 0..=6i64 {
        for b in 0..=6i64 {
            for cc in 0..=6i64 {
                let lhs = qb(a + b, cc);
                let mut rhs = zero();
                for ap in 0..=a {
                    rhs = rhs.add(&qb(a, ap).mul(&qb(b, cc - ap)).shift(ap * (b - cc + ap)));
                }
                let rhs = bump(rhs, corrupt);
                c.record(lhs == rhs, || format!("a={a} b={b} c={cc}"));
            }
        }
    }
    c
}

/// The left side of the `G_t` expansion, `G_t(q; x; m)`.
pub fn gt_lhs(x: &[i64], m: i64) -> QSeries {
    let t = x.len();
    let mut sum = zero();
    for ms in chains(t, m, true) {
        for k in product_ranges(&x.iter().map(|xu| 2 - xu).collect::<Vec<_>>()) {
            let mut term = mono(0);
            let mut prev = 0;
            for u in 0..t {
                let (ku, xu, mu) = (k[u], x[u], ms[u]);
                let d = mu - prev;
                let e = ku * (u as i64 + 1 - 2 + ku + xu) + (ku + xu) * prev;
                term = term.mul(&qb(2 - xu, ku)).mul(&qb(d + xu - 1, d - ku)).shift(e);
                prev = mu;
            }
            sum = sum.add(&term);
        }
    }
    if t == 0 && m != 0 {
        return zero();
    }
    sum
}

/// Every vector `k` with `0 ≤ k_u ≤ bounds[u]`.
fn product_ranges(bounds: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b.max(-1)).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// `G_t(q; x; m) = Σ_v g_{v,t}(q; x) [m + t − 1, m − v]`.
pub fn check_gt_expansion(corrupt: bool) -> LemmaCheck {
    let mut c = LemmaCheck::new("G_t expansion in g_{v,t}");
    for t in 0..=2usize {
        for x in grid(t, 2) {
            for m in 0..=5i64 {
                let lhs = gt_lhs(&x, m);
                let mut rhs = zero();
                for v in 0..=t {
                    rhs = rhs.add(&g(v, t, &x).unwrap().mul(&qb(m + t as i64 - 1, m - v as i64)));
                }
                let rhs = bump(rhs, corrupt);
                c.record(lhs == rhs, || format!("t={t} x={x:?} m={m}"));
            }
        }
    }
    c
}

/// Site bookkeeping of a kernel.
struct Kernel {
    ks: KernelStructure,
    min: i64,
    n_neutral: i64,
    n_type0: i64,
    /// `|T_0^u|` and the site indices of `T_1^u`, per subsequence.
    t0: Vec<i64>,
    t1: Vec<Vec<usize>>,
}

impl Kernel {
    fn new(ks: KernelStructure) -> Kernel {
        let t = ks.t();
        let mut t1 = vec![Vec::new(); t];
        for (j, s) in ks.sites().iter().enumerate() {
            if let (SiteClass::Type1, Some(u)) = (s.class, s.owner) {
                t1[u].push(j);
            }
        }
        Kernel {
            min: minimal_weight(ks.kernel(), Metric::Delta).unwrap() as i64,
            n_neutral: ks.count(SiteClass::Neutral) as i64,
            n_type0: ks.count(SiteClass::Type0) as i64,
            t0: ks.type0_per_span().into_iter().map(|x| x as i64).collect(),
            t1,
            ks,
        }
    }

    /// Direct `Σ_1` from its definition, for the inserted type-1 sites `s1`.
    fn sigma1_direct(&self, s1: &[usize]) -> i64 {
        let sites = self.ks.sites();
        let counted = |j: usize| sites[j].class != SiteClass::Type1 || s1.contains(&j);
        s1.iter()
            .map(|&j| sites[j].colours_to_the_left() as i64 + (j..sites.len()).filter(|&k| counted(k)).count() as i64)
            .sum()
    }

    /// `Σ_1` in closed form.
    fn sigma1_formula(&self, s1: &[usize]) -> i64 {
        let t = self.t0.len();
        let per: Vec<Vec<usize>> =
            (0..t).map(|u| self.t1[u].iter().copied().filter(|j| s1.contains(j)).collect()).collect();
        let mut total = 0;
        for u in 0..t {
            let tail: i64 = (u..t).map(|v| self.t0[v] + per[v].len() as i64).sum();
            let lead = self.n_neutral + u as i64 + tail;
            total += lead * per[u].len() as i64;
            for &j in &per[u] {
                total += self.t1[u].iter().filter(|&&jp| jp < j && !per[u].contains(&jp)).count() as i64;
            }
        }
        total
    }
}

/// Counts vectors over `sites` summing to `m`.
fn compositions(sites: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; sites];
    fn rec(j: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if j + 1 == cur.len() {
            cur[j] = left;
            out.push(cur.clone());
            return;
        }
        for x in 0..=left {
            cur[j] = x;
            rec(j + 1, left - x, cur, out);
        }
        cur[j] = 0;
    }
    if sites == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, m, &mut cur, &mut out);
    out
}

/// The kernel-level identities for every reduced sequence over `n = 3` of
/// length at most `max_len` and every `m ≤ max_m`.
pub fn check_kernel_identities(corrupt: bool, max_len: usize, max_m: usize) -> Vec<LemmaCheck> {
    let mut sigma = LemmaCheck::new("Sigma_1 sum");
    let mut h = LemmaCheck::new("H_{S,S1} sum");
    let mut gs = LemmaCheck::new("G_{S,m} closed form");
    let mut gros = LemmaCheck::new("nested q-binomial sum");
    let mut main = LemmaCheck::new("minimal kernel formula");
    for s in reduced_sequences(3, max_len) {
        let k = Kernel::new(kernel_structure(&s).unwrap());
        let sites = k.ks.sites().len();
        let t = k.t0.len();
        let t1_all: Vec<usize> = k.t1.iter().flatten().copied().collect();
        // every subset of T_1
        let subsets: Vec<Vec<usize>> = (0u32..(1 << t1_all.len()))
            .map(|mask| t1_all.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &j)| j).collect())
            .collect();
        for s1 in &subsets {
            let direct = k.sigma1_direct(s1);
            let formula = k.sigma1_formula(s1) + corrupt as i64;
            sigma.record(direct == formula, || format!("S={s} S1={s1:?}: {direct} vs {formula}"));
        }
        for m in 0..=max_m {
            let mi = m as i64;
            let mut g_direct = zero();
            let mut h_direct = vec![zero(); subsets.len()];
            for counts in compositions(sites, m) {
                let c = insert(&k.ks, &counts).unwrap();
                let w = minimal_weight(&c, Metric::Delta).unwrap() as i64;
                g_direct.add_to_coeff(w, Default::default(), 1.into());
                let support: Vec<usize> = t1_all.iter().copied().filter(|&j| counts[j] > 0).collect();
                let idx = subsets.iter().position(|x| *x == support).unwrap();
                h_direct[idx].add_to_coeff(w, Default::default(), 1.into());
            }
            for (s1, hd) in subsets.iter().zip(&h_direct) {
                let n1 = s1.len() as i64;
                let hf = qb(mi - 1 + k.n_neutral + k.n_type0, mi - n1).shift(k.min + k.sigma1_formula(s1) + mi - n1);
                let hf = bump(hf, corrupt);
                h.record(*hd == hf, || format!("S={s} m={m} S1={s1:?}"));
            }
            let bounds: Vec<i64> = k.t1.iter().map(|v| v.len() as i64).collect();
            let mut gf = zero();
            for kv in product_ranges(&bounds) {
                let ksum: i64 = kv.iter().sum();
                let mut e = k.min + mi - ksum;
                for u in 0..t {
                    let tail: i64 = (u..t).map(|v| k.t0[v] + kv[v]).sum();
                    e += kv[u] * (k.n_neutral + u as i64 + tail);
                }
                let mut term = qb(mi - 1 + k.n_neutral + k.n_type0, mi - ksum).shift(e);
                for u in 0..t {
                    term = term.mul(&qb(bounds[u], kv[u]));
                }
                gf = gf.add(&term);

                // the rewriting of q^{m − Σk} [m − 1 + |N| + |T_0|, m − Σk]
                let lhs = qb(mi - 1 + k.n_neutral + k.n_type0, mi - ksum).shift(mi - ksum);
                let mut pre = mi;
                for u in 0..t {
                    let tail: i64 = (u + 1..t).map(|v| kv[v] + k.t0[v]).sum();
                    pre -= kv[u] * (1 + k.n_neutral + tail);
                }
                let mut rhs = zero();
                for ms in chains(t, mi, false) {
                    let mut term = mono(pre);
                    let mut prev = 0;
                    for u in 0..t {
                        let d = ms[u] - prev;
                        term = term.mul(&qb(d + k.t0[u] - 1, d - kv[u])).shift((kv[u] + k.t0[u]) * prev);
                        prev = ms[u];
                    }
                    let mt = prev;
                    term = term.mul(&qb(mi - mt + k.n_neutral - 1, mi - mt)).shift(k.n_neutral * mt);
                    rhs = rhs.add(&term);
                }
                let rhs = bump(rhs, corrupt);
                gros.record(lhs == rhs, || format!("S={s} m={m} k={kv:?}"));
            }
            let gf = bump(gf, corrupt);
            gs.record(g_direct == gf, || format!("S={s} m={m}"));
            let formula = bump(kernel_gf_formula(&k.ks, m, KernelGf::MinimalDelta, EXACT).unwrap(), corrupt);
            main.record(g_direct == formula, || format!("S={s} m={m}"));
        }
    }
    vec![sigma, h, gs, gros, main]
}

/// The closed-form minimal weight after insertion against the weight of
/// the minimal partition of the inserted sequence.
pub fn check_insertion_weights(corrupt: bool, grid: InsertionGrid) -> LemmaCheck {
    let mut c = LemmaCheck::new("minimal weight after insertion");
    for n in 1..=grid.max_n {
        let lookup = crate::colour::DeltaLookup::new(n);
        for s in reduced_sequences(n, grid.max_len) {
            let ks = kernel_structure(&s).unwrap();
            let bound = match grid.long {
                Some((len, b)) if len == s.len() => b,
                _ => grid.max_count,
            };
            // the colour of every slot of S(n_1, ..., n_{s+t}), left to right;
            // kernel slots always occur once
            let mut slots: Vec<(Colour, Option<usize>)> = Vec::new();
            let mut j = 0;
            for (i, &col) in s.iter().enumerate() {
                if let Some(site) = ks.sites().get(j) {
                    if site.position == crate::sequence::SitePosition::Left(i) {
                        slots.push((site.colour, Some(j)));
                        j += 1;
                    }
                }
                slots.push((col, None));
                slots.push((ks.sites()[j].colour, Some(j)));
                j += 1;
            }
            let sites = ks.sites().len();
            let mut counts = vec![0usize; sites];
            loop {
                // direct: sizes from the right, each size the running sum of differences
                let mut w = 0u64;
                let mut size = 0u64;
                let mut next: Option<Colour> = None;
                for &(col, site) in slots.iter().rev() {
                    let mult = site.map_or(1, |j| counts[j]) as u64;
                    if mult == 0 {
                        continue;
                    }
                    size += match next {
                        None => 1,
                        Some(nx) => lookup.get(col, nx) as u64,
                    };
                    w += size * mult;
                    next = Some(col);
                }
                let f = minimal_weight_after_insertion(&ks, &counts).unwrap() + corrupt as u64;
                c.record(w == f, || format!("S={s} counts={counts:?}: direct {w}, formula {f}"));
                // next counts vector
                let mut k = 0;
                while k < sites && counts[k] == bound {
                    counts[k] = 0;
                    k += 1;
                }
                if k == sites {
                    break;
                }
                counts[k] += 1;
            }
        }
    }
    c
}

/// Runs every check.
pub fn qbinom_lemma_suite(config: &SuiteConfig) -> LemmaReport {
    let corrupt = config.corrupt;
    let mut checks = vec![
        check_g_symmetry(corrupt),
        check_inverse_qfactorial(corrupt, 20),
        check_chain_sum(corrupt),
        check_lattice_paths(corrupt),
        check_vandermonde(corrupt),
        check_gt_expansion(corrupt),
    ];
    checks.extend(check_kernel_identities(corrupt, config.kernel_len, config.kernel_m));
    if let Some(grid) = config.insertion {
        checks.push(check_insertion_weights(corrupt, grid));
    }
    LemmaReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_instances() {
        let report = qbinom_lemma_suite(&SuiteConfig { kernel_len: 1, kernel_m: 2, ..Default::default() });
        for c in &report.checks {
            assert!(c.passed(), "{} {:?}", c.name, c.failures);
            assert!(c.instances > 0, "{}", c.name);
        }
    }

    #[test]
    fn corruption_is_detected() {
        let report =
            qbinom_lemma_suite(&SuiteConfig { corrupt: true, kernel_len: 1, kernel_m: 2, ..Default::default() });
        for c in &report.checks {
            assert!(!c.passed(), "{}", c.name);
        }
    }

    #[test]
    fn insertion_small_grid() {
        let grid = InsertionGrid { max_len: 2, max_n: 3, max_count: 2, long: None };
        let c = check_insertion_weights(false, grid);
        assert!(c.passed(), "{:?}", c.failures);
    }
}
