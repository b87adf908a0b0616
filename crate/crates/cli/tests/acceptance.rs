//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line.

use std::time::{Duration, Instant};

use ncolour::claims::{verify, verify_kernels, Claim, VerifyOptions};
use ncolour::table::TableChoice;
use ncolour::VerificationReport;
use ncolour_core::bijection::phi;
use ncolour_core::colour::{all_colours, builtin_delta_gamma, delta, delta_double_prime};
use ncolour_core::partition::{for_each_member, is_member, minimal_weight, ColouredPartition, MembershipSpec, Part};
use ncolour_core::sequence::{insertion_difference, kernel_structure, kernel_structure_with, reduced_sequences, SiteClass};
use ncolour_core::{Colour, ColourSequence, Metric, Variant};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn run(n: usize, title: &str, limit: Option<Duration>, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut out = body();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            out.ok = false;
            out.detail.push_str(&format!("; over the {:?} limit", limit));
        }
    }
    println!(
        "{} criterion {n}: {title} ({:.2}s) {}",
        if out.ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        out.detail
    );
    out.ok
}

fn claim(c: Claim, n: usize, order: Option<i64>, table: TableChoice) -> VerificationReport {
    let opts = VerifyOptions { n: Some(n), order, table, ..VerifyOptions::default() };
    verify(c, &opts).unwrap_or_else(|e| panic!("{} n={n}: {e}", c.name()))
}

/// Runs every report, collecting the failures.
fn all_pass(reports: Vec<VerificationReport>) -> Outcome {
    let terms: u64 = reports.iter().map(|r| r.checked_terms).sum();
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    Outcome {
        ok: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} runs, {terms} terms", reports.len())
        } else {
            failed.join("\n")
        },
    }
}

fn tables() -> [TableChoice; 2] {
    [TableChoice::MeurmanPrimc, TableChoice::Alt]
}

fn criterion_1() -> Outcome {
    let all = claim(Claim::PrimcKernel, 3, Some(8), TableChoice::MeurmanPrimc);
    let mut long: Vec<ColourSequence> = reduced_sequences(3, 4)
        .into_iter()
        .filter(|s| s.len() == 4 && minimal_weight(s, Metric::Delta).unwrap() <= 9)
        .collect();
    long.sort_by_key(|s| s.to_string());
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let sample: Vec<ColourSequence> = long.choose_multiple(&mut rng, 24).cloned().collect();
    let sampled = verify_kernels(3, &sample, 8, false).unwrap();
    let mut o = all_pass(vec![all, sampled]);
    o.detail.push_str(&format!(", {} of {} length-4 kernels sampled", sample.len(), long.len()));
    o
}

fn criterion_2() -> Outcome {
    all_pass(vec![
        claim(Claim::Primc, 2, Some(14), TableChoice::MeurmanPrimc),
        claim(Claim::Primc, 3, Some(10), TableChoice::MeurmanPrimc),
    ])
}

fn criterion_3() -> Outcome {
    let mut v = Vec::new();
    for t in tables() {
        v.push(claim(Claim::Capparelli, 2, Some(12), t.clone()));
        v.push(claim(Claim::Capparelli, 3, Some(9), t));
    }
    all_pass(v)
}

fn criterion_4() -> Outcome {
    let mut v = Vec::new();
    for n in 2..=4 {
        v.push(claim(Claim::PrimcSpec, n, Some(20), TableChoice::MeurmanPrimc));
        for t in tables() {
            v.push(claim(Claim::CapSpec, n, Some(20), t));
        }
    }
    all_pass(v)
}

fn criterion_5() -> Outcome {
    all_pass((1..=4).map(|n| claim(Claim::Main2, n, Some(15), TableChoice::MeurmanPrimc)).collect())
}

fn criterion_6() -> Outcome {
    all_pass(vec![
        claim(Claim::CapparelliClassical, 2, Some(40), TableChoice::MeurmanPrimc),
        claim(Claim::PrimcNondilated, 2, Some(12), TableChoice::MeurmanPrimc),
        claim(Claim::CapparelliAag, 2, Some(12), TableChoice::MeurmanPrimc),
    ])
}

fn golden_example() -> bool {
    let t = builtin_delta_gamma(Variant::MeurmanPrimc, 3).unwrap();
    let p = |s: &str| -> ColouredPartition { s.parse().unwrap() };
    let lambda = p("8[a1b1]+6[a0b2]+6[a2b2]+5[a0b1]+5[a1b0]+4[a0b0]+4[a0b0]+3[a0b2]+3[a1b1]+3[a1b1]+3[a1b0]\
                    +2[a2b2]+2[a2b2]+2[a2b2]+2[a2b0]+1[a0b0]");
    let pair = phi(&lambda, &t).unwrap();
    pair.mu == p("8[a1b1]+6[a0b2]+5[a0b1]+5[a1b0]+3[a0b2]+3[a1b0]+2[a2b0]")
        && pair.nu == p("6[a0b0]+4[a0b0]+4[a0b0]+3[a0b0]+3[a0b0]+2[a0b0]+2[a0b0]+2[a0b0]+1[a0b0]")
}

fn criterion_7() -> Outcome {
    let mut v = Vec::new();
    for t in tables() {
        v.push(claim(Claim::Bijection, 2, Some(14), t.clone()));
        v.push(claim(Claim::Bijection, 3, Some(10), t));
    }
    let mut o = all_pass(v);
    if !golden_example() {
        o.ok = false;
        o.detail.push_str("; worked example differs");
    } else {
        o.detail.push_str(", worked example matches");
    }
    o
}

fn criterion_8() -> Outcome {
    let r = claim(Claim::QbinomLemmas, 3, None, TableChoice::MeurmanPrimc);
    let mut o = all_pass(vec![r]);
    o.detail.push_str(" (length-4 insertion grid limited to counts <= 1)");
    o
}

/// Tally of one structural statement.
#[derive(Default)]
struct Tally {
    instances: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        }
    }
}

fn ix(c: Colour) -> (u8, u8) {
    c.indices().unwrap()
}

fn bound(n: usize) -> Vec<Colour> {
    all_colours(n).into_iter().filter(|c| c.is_bound()).collect()
}

fn in_range(x: u8, lo: u8, hi: u8) -> bool {
    lo < x && x <= hi
}

fn triangle(t: &mut Tally, n: usize) {
    let cs = all_colours(n);
    for &a in &cs {
        for &b in &cs {
            for &c in &cs {
                let ok = delta(a, c).unwrap() <= delta(a, b).unwrap() + delta(b, c).unwrap();
                t.check(ok, || format!("triangle {a} {b} {c}"));
            }
        }
    }
}

fn zero_characterisation(t: &mut Tally, n: usize) {
    for c in all_colours(n) {
        for d in all_colours(n) {
            let ((i, j), (k, l)) = (ix(c), ix(d));
            let predicted = (c == d && c.is_free())
                || (c.is_bound() && d.is_free() && i < k && k <= j)
                || (c.is_free() && d.is_bound() && l < i && i <= k)
                || (c.is_bound() && d.is_bound() && i < k && j > l);
            t.check((delta(c, d).unwrap() == 0) == predicted, || format!("Delta({c}, {d})"));
        }
    }
}

/// Shape of a run of equal-size parts: `Some(true)` for a valid case 1,
/// `Some(false)` for a valid case 2, `None` if neither.
fn run_shape(run: &[Colour]) -> Option<bool> {
    let free: Vec<usize> = (0..run.len()).filter(|&i| run[i].is_free()).collect();
    let bounds: Vec<(u8, u8)> = run.iter().filter(|c| c.is_bound()).map(|&c| ix(c)).collect();
    let monotone = bounds.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 > w[1].1);
    if !monotone {
        return None;
    }
    if free.is_empty() {
        let switches = bounds.windows(2).filter(|w| w[0].0 < w[0].1 && w[1].0 > w[1].1).count();
        let all_gt = bounds.iter().all(|&(k, l)| k > l);
        let all_lt = bounds.iter().all(|&(k, l)| k < l);
        return (all_gt || all_lt || switches == 1).then_some(false);
    }
    let (first, last) = (free[0], *free.last().unwrap());
    if free.len() != last - first + 1 || run[first..=last].iter().any(|&c| c != run[first]) {
        return None;
    }
    let (f, _) = ix(run[first]);
    let left_ok = first == 0 || {
        let (k, l) = ix(run[first - 1]);
        k < f && f <= l
    };
    let right_ok = last + 1 == run.len() || {
        let (k, l) = ix(run[last + 1]);
        f <= k && f > l
    };
    (left_ok && right_ok).then_some(true)
}

fn runs_in_members(t: &mut Tally) {
    for_each_member(&MembershipSpec::Pn(4), 10, |parts| {
        let mut i = 0;
        while i < parts.len() {
            let mut j = i;
            while j + 1 < parts.len() && parts[j + 1].size == parts[i].size {
                j += 1;
            }
            let run: Vec<Colour> = parts[i..=j].iter().map(|p| p.colour).collect();
            t.check(run_shape(&run).is_some(), || format!("run {run:?}"));
            i = j + 1;
        }
    })
    .unwrap();
}

/// Every chain with consecutive differences 0, bound colours only.
fn bound_zero_chains(n: usize) -> Vec<Vec<Colour>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<Colour>> = bound(n).into_iter().map(|c| vec![c]).collect();
    while let Some(ch) = stack.pop() {
        for c in bound(n) {
            if delta(*ch.last().unwrap(), c).unwrap() == 0 {
                let mut next = ch.clone();
                next.push(c);
                stack.push(next);
            }
        }
        out.push(ch);
    }
    out
}

fn zero_chain(c: &[Colour]) -> bool {
    c.windows(2).all(|w| delta(w[0], w[1]).unwrap() == 0)
}

fn insertion_sites(t: &mut Tally, n: usize) {
    for ch in bound_zero_chains(n) {
        t.check(run_shape(&ch) == Some(false), || format!("chain {ch:?} not in case 2"));
        let b: Vec<(u8, u8)> = ch.iter().map(|&c| ix(c)).collect();
        let s = ch.len();
        for pos in 0..=s {
            for k in 0..n as u8 {
                let mut ins = ch.clone();
                ins.insert(pos, Colour::Free(k));
                let actual = zero_chain(&ins);
                let predicted = if b.iter().all(|&(k1, l1)| k1 > l1) {
                    pos == 0 && in_range(k, b[0].1, b[0].0)
                } else if b.iter().all(|&(k1, l1)| k1 < l1) {
                    pos == s && in_range(k, b[s - 1].0, b[s - 1].1)
                } else {
                    pos > 0
                        && pos < s
                        && b[pos - 1].0 < b[pos - 1].1
                        && b[pos].0 > b[pos].1
                        && b[pos - 1].0.max(b[pos].1) < k
                        && k <= b[pos - 1].1.min(b[pos].0)
                };
                t.check(actual == predicted, || format!("insert a{k}b{k} at {pos} in {ch:?}"));
                if actual {
                    t.check(run_shape(&ins) == Some(true), || format!("{ins:?} not in case 1"));
                }
            }
        }
    }
}

fn parts(spec: &[(u32, Colour, usize)]) -> ColouredPartition {
    let v = spec.iter().flat_map(|&(s, c, r)| std::iter::repeat(Part::new(s, c)).take(r)).collect();
    ColouredPartition::new(v).unwrap()
}

fn adjacent_insertions(t: &mut Tally, n: usize) {
    let spec = MembershipSpec::Pn(n);
    let member = |p: &ColouredPartition| is_member(p, &spec).unwrap();
    for c1 in bound(n) {
        for c2 in bound(n) {
            let ((k1, l1), (k2, l2)) = (ix(c1), ix(c2));
            let cond = k1 < k2 || l1 > l2;
            for p in 1..=2u32 {
                if k1 < l1 && k2 > l2 {
                    for i in k1 + 1..=l1 {
                        for j in l2 + 1..=k2 {
                            for (ri, rj) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 2)] {
                                let lam = parts(&[
                                    (p + 1, c1, 1),
                                    (p + 1, Colour::Free(i), ri),
                                    (p, Colour::Free(j), rj),
                                    (p, c2, 1),
                                ]);
                                t.check(member(&lam), || format!("two-sided insertion {lam}"));
                            }
                        }
                    }
                }
                for i in 0..n as u8 {
                    for r in 0..=2 {
                        if k1 > l1 && k2 > l2 {
                            let lam = parts(&[(p + 1, c1, 1), (p, Colour::Free(i), r), (p, c2, 1)]);
                            let pred = cond && (r == 0 || (in_range(i, l2, k2) && !in_range(i, l1, k1)));
                            t.check(member(&lam) == pred, || format!("descending pair {lam}"));
                        }
                        if k1 < l1 && k2 < l2 {
                            let lam = parts(&[(p + 1, c1, 1), (p + 1, Colour::Free(i), r), (p, c2, 1)]);
                            let pred = cond && (r == 0 || (in_range(i, k1, l1) && !in_range(i, k2, l2)));
                            t.check(member(&lam) == pred, || format!("ascending pair {lam}"));
                        }
                    }
                }
            }
        }
    }
}

fn double_prime(t: &mut Tally, n: usize) {
    let d2 = |a: Colour, b: Colour| delta_double_prime(a, b).unwrap() as i32;
    for i in 0..n as u8 {
        for k in 0..n as u8 {
            t.check(d2(Colour::Free(i), Colour::Free(k)) == (i != k) as i32, || format!("free a{i}b{i} a{k}b{k}"));
        }
    }
    for c in bound(n) {
        for d in bound(n) {
            let ((_, j), (k, _)) = (ix(c), ix(d));
            if j == k {
                let f = Colour::Free(k);
                t.check(d2(c, f) + d2(f, d) == d2(c, d), || format!("primary {c} {d}"));
                continue;
            }
            for f in [Colour::Free(k), Colour::Free(j)] {
                let dd = insertion_difference(Metric::DeltaDoublePrime, c, f, d).unwrap();
                let dt = insertion_difference(Metric::Delta, c, f, d).unwrap();
                t.check((0..=1).contains(&dd) && dd == 1 - dt, || format!("secondary {c} {f} {d}: {dd} vs {dt}"));
            }
        }
    }
    for s in reduced_sequences(n, 3) {
        let a = kernel_structure(&s).unwrap();
        let b = kernel_structure_with(&s, Metric::DeltaDoublePrime).unwrap();
        let flipped = a.sites().iter().zip(b.sites()).all(|(x, y)| {
            x.position == y.position
                && match x.class {
                    SiteClass::Neutral => y.class == SiteClass::Neutral,
                    SiteClass::Type0 => y.class == SiteClass::Type1,
                    SiteClass::Type1 => y.class == SiteClass::Type0,
                }
        });
        t.check(flipped && a.sites().len() == b.sites().len(), || format!("site classes of {s}"));
    }
}

fn criterion_9() -> Outcome {
    let mut suites: Vec<(&str, Tally)> = Vec::new();
    let mut add = |name, f: &dyn Fn(&mut Tally)| {
        let mut t = Tally::default();
        f(&mut t);
        suites.push((name, t));
    };
    add("triangle", &|t| (1..=4).for_each(|n| triangle(t, n)));
    add("Delta = 0", &|t| (1..=4).for_each(|n| zero_characterisation(t, n)));
    add("equal-size runs", &runs_in_members);
    add("insertion into runs", &|t| (1..=4).for_each(|n| insertion_sites(t, n)));
    add("adjacent sizes", &|t| (1..=4).for_each(|n| adjacent_insertions(t, n)));
    add("Delta''", &|t| (1..=4).for_each(|n| double_prime(t, n)));
    let ok = suites.iter().all(|(_, t)| t.failures.is_empty());
    let detail = suites
        .iter()
        .map(|(name, t)| {
            let mut s = format!("{name}: {}", t.instances);
            if !t.failures.is_empty() {
                s.push_str(&format!(" FAILED {:?}", t.failures));
            }
            s
        })
        .collect::<Vec<_>>()
        .join(", ");
    Outcome { ok, detail }
}

fn main() {
    let results = [
        run(1, "kernel identity, n=3", Some(Duration::from_secs(60)), criterion_1),
        run(2, "P_n against the constant term", None, criterion_2),
        run(3, "(q;q) F_n = C_n, both tables", None, criterion_3),
        run(4, "principal specialisations", Some(Duration::from_secs(10)), criterion_4),
        run(5, "constant term = Jacobi form = products", None, criterion_5),
        run(6, "classical identities", None, criterion_6),
        run(7, "bijection", None, criterion_7),
        run(8, "q-binomial lemma suite", None, criterion_8),
        run(9, "structural properties, n <= 4", Some(Duration::from_secs(30)), criterion_9),
    ];
    let failed: Vec<usize> = (1..=9).filter(|&i| !results[i - 1]).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
