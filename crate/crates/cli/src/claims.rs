//! The `verify` claims: each compares an enumeration against a series, or
//! two series forms, coefficient by coefficient.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use ncolour_core::bijection::{phi, phi_inverse, PartitionPair};
use ncolour_core::frobenius::{bound_monomial, for_each_frobenius, Entry};
use ncolour_core::partition::{
    colour_monomial, for_each_member, for_each_member_with_cost, is_member, kernel_gf_formula, minimal_weight,
    ColouredPartition, KernelGf, MembershipSpec, Part,
};
use ncolour_core::qseries::lemmas::{qbinom_lemma_suite, InsertionGrid, SuiteConfig};
use ncolour_core::qseries::{
    constant_term_product, dilate, euler, inv_euler, inv_pochhammer, main2_jacobi_form, main2_product_form,
    pochhammer, quadratic_form_points, Dilation, Monomial, QSeries, QTerm,
};
use ncolour_core::sequence::{kernel_structure, reduce, reduced_sequences};
use ncolour_core::{Colour, ColourSequence, DeltaGammaTable, Metric};

use crate::oracles::{capparelli_c, capparelli_d, partition_numbers, regular_partitions};
use crate::report::{MismatchReport, Parameters, Status, VerificationReport, SCHEMA_VERSION};
use crate::table::TableChoice;
use crate::CliError;

/// Enumerations whose estimated node count exceeds this are refused
/// unless forced.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, clap::ValueEnum)]
pub enum Claim {
    PrimcKernel,
    Primc,
    Capparelli,
    Main2,
    PrimcSpec,
    CapSpec,
    PrimcNondilated,
    CapparelliAag,
    CapparelliClassical,
    PrimcDilated,
    QbinomLemmas,
    Bijection,
    PnFnBound,
}

impl Claim {
    pub const ALL: [Claim; 13] = [
        Claim::PrimcKernel,
        Claim::Primc,
        Claim::Capparelli,
        Claim::Main2,
        Claim::PrimcSpec,
        Claim::CapSpec,
        Claim::PrimcNondilated,
        Claim::CapparelliAag,
        Claim::CapparelliClassical,
        Claim::PrimcDilated,
        Claim::QbinomLemmas,
        Claim::Bijection,
        Claim::PnFnBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::PrimcKernel => "primc-kernel",
            Claim::Primc => "primc",
            Claim::Capparelli => "capparelli",
            Claim::Main2 => "main2",
            Claim::PrimcSpec => "primc-spec",
            Claim::CapSpec => "cap-spec",
            Claim::PrimcNondilated => "primc-nondilated",
            Claim::CapparelliAag => "capparelli-aag",
            Claim::CapparelliClassical => "capparelli-classical",
            Claim::PrimcDilated => "primc-dilated",
            Claim::QbinomLemmas => "qbinom-lemmas",
            Claim::Bijection => "bijection",
            Claim::PnFnBound => "pn-fn-bound",
        }
    }

    fn default_n(self) -> usize {
        match self {
            Claim::PrimcKernel | Claim::QbinomLemmas => 3,
            _ => 2,
        }
    }

    /// The desk-scale bound used when none is given: a truncation order,
    /// or for `primc-kernel` the number of q-powers past `|min_Δ(S)|`, or
    /// for `bijection` the largest weight.
    pub fn default_order(self, n: usize) -> i64 {
        let by_n = |a: i64, b: i64, c: i64| match n {
            0..=2 => a,
            3 => b,
            _ => c,
        };
        match self {
            Claim::PrimcKernel => 8,
            Claim::Primc => by_n(14, 10, 7),
            Claim::Capparelli => by_n(12, 9, 7),
            Claim::Main2 => 15,
            Claim::PrimcSpec | Claim::CapSpec => 20,
            Claim::PrimcNondilated | Claim::CapparelliAag => 12,
            Claim::CapparelliClassical => 40,
            Claim::PrimcDilated => 15,
            Claim::QbinomLemmas => 0,
            Claim::Bijection => by_n(14, 10, 6),
            Claim::PnFnBound => by_n(12, 12, 7),
        }
    }

    fn uses_table(self) -> bool {
        matches!(self, Claim::Capparelli | Claim::CapSpec | Claim::Bijection)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyOptions {
    pub n: Option<usize>,
    pub order: Option<i64>,
    pub table: TableChoice,
    /// Perturb one coefficient (or one check) so the claim must fail.
    pub corrupt: bool,
    pub force: bool,
    pub budget: u128,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            n: None,
            order: None,
            table: TableChoice::MeurmanPrimc,
            corrupt: false,
            force: false,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Accumulates comparisons; only the first mismatch is kept.
struct Check {
    terms: u64,
    mismatch: Option<MismatchReport>,
    corrupt: bool,
    notes: Vec<String>,
}

impl Check {
    fn new(corrupt: bool) -> Check {
        Check { terms: 0, mismatch: None, corrupt, notes: Vec::new() }
    }

    fn take_corruption(&mut self) -> bool {
        std::mem::replace(&mut self.corrupt, false)
    }

    /// Compares through `q^upto`, monomials included.
    fn series(&mut self, context: &str, expected: &QSeries, actual: &QSeries, upto: i64) -> Result<(), CliError> {
        let mut actual = actual.clone();
        if self.take_corruption() {
            let e = actual.valuation().min(upto).max(expected.valuation().min(upto));
            actual.add_to_coeff(e, Monomial::ONE, BigInt::one());
        }
        let lo = expected.valuation().min(actual.valuation()).min(upto);
        for e in lo..=upto {
            let mut monos: HashSet<Monomial> = HashSet::new();
            for s in [expected, &actual] {
                if let Some(p) = s.coeff_ref(e) {
                    monos.extend(p.terms().map(|(m, _)| *m));
                }
            }
            self.terms += monos.len().max(1) as u64;
        }
        if self.mismatch.is_none() {
            if let Some(m) = expected.first_difference(&actual, upto)? {
                let nvars = expected.nvars().max(actual.nvars());
                self.mismatch = Some(MismatchReport::from_series(context, &m, nvars));
            }
        }
        Ok(())
    }

    /// Compares integer sequences indexed by the power of `q`.
    fn counts(&mut self, context: &str, expected: &[u64], actual: &[u64]) -> Result<(), CliError> {
        let to = |v: &[u64]| {
            let v: Vec<i64> = v.iter().map(|&x| x as i64).collect();
            QSeries::from_ints(0, &v, v.len() as i64 - 1)
        };
        let upto = expected.len().min(actual.len()) as i64 - 1;
        self.series(context, &to(expected), &to(actual), upto)
    }

    /// A check that is not a series comparison.
    fn fact(&mut self, ok: bool, what: impl FnOnce() -> MismatchReport) {
        self.terms += 1;
        let ok = ok && !self.take_corruption();
        if !ok && self.mismatch.is_none() {
            self.mismatch = Some(what());
        }
    }

    fn failed(&self) -> bool {
        self.mismatch.is_some()
    }
}

/// Rough number of DFS nodes for enumerating `P_n` (or a subset of it)
/// through weight `w`: `n^2` times the number of members.
pub fn estimate_pn_nodes(n: usize, w: u64) -> u128 {
    let w = w as i64;
    let mut theta = QSeries::zero(0, w);
    for (_, e) in quadratic_form_points(n, w) {
        theta.add_to_coeff(e, Monomial::ONE, BigInt::one());
    }
    let gf = theta.mul(&inv_euler(0, w).pow(n as u32)).truncate(w);
    let members: u128 = gf.to_ints(w).iter().map(|c| c.to_u128().unwrap_or(u128::MAX)).fold(0, u128::saturating_add);
    members.saturating_mul((n * n) as u128)
}

fn estimate(claim: Claim, n: usize, order: i64) -> u128 {
    let w = order.max(0) as u64;
    let sum = |v: Vec<u64>| v.iter().map(|&x| x as u128).sum::<u128>();
    let nn = (n * n) as u128;
    match claim {
        Claim::PrimcKernel => 2 * estimate_pn_nodes(n, w + kernel_min_bound(n, kernel_len(n))),
        Claim::Primc | Claim::Capparelli | Claim::PnFnBound | Claim::PrimcNondilated | Claim::CapparelliAag => {
            2 * estimate_pn_nodes(n, w)
        }
        Claim::Bijection => 3 * estimate_pn_nodes(n, w),
        Claim::PrimcSpec | Claim::PrimcDilated => nn * sum(partition_numbers(w as usize)),
        Claim::CapSpec => nn * sum(regular_partitions(n, w as usize)),
        Claim::CapparelliClassical => nn * sum(capparelli_d(w as usize)),
        Claim::Main2 | Claim::QbinomLemmas => 0,
    }
}

fn kernel_len(n: usize) -> usize {
    if n <= 3 {
        3
    } else {
        2
    }
}

fn kernel_min_bound(n: usize, len: usize) -> u64 {
    reduced_sequences(n, len).iter().map(|s| minimal_weight(s, Metric::Delta).unwrap()).max().unwrap_or(0)
}

/// Runs one claim.
pub fn verify(claim: Claim, opts: &VerifyOptions) -> Result<VerificationReport, CliError> {
    let start = Instant::now();
    let n = opts.n.unwrap_or(claim.default_n());
    let order = opts.order.unwrap_or(claim.default_order(n));
    if n == 0 || n > 8 {
        return Err(CliError::Usage(format!("n = {n} is out of range (1..=8)")));
    }
    if order < 0 {
        return Err(CliError::Usage("bounds must be non-negative".into()));
    }
    match claim {
        Claim::PrimcNondilated | Claim::CapparelliAag | Claim::CapparelliClassical if n != 2 => {
            return Err(CliError::Usage(format!("{} is a statement about n = 2", claim.name())));
        }
        Claim::PrimcDilated if !(2..=3).contains(&n) => {
            return Err(CliError::Usage("primc-dilated is stated for n = 2 and n = 3".into()));
        }
        Claim::Capparelli | Claim::CapSpec | Claim::Bijection if n < 2 => {
            return Err(CliError::Usage("delta/gamma tables need n >= 2".into()));
        }
        _ => {}
    }
    let est = estimate(claim, n, order);
    if est > opts.budget && !opts.force {
        return Err(CliError::Budget { estimate: est, budget: opts.budget });
    }
    let table = if claim.uses_table() { Some(opts.table.resolve(n)?) } else { None };
    let mut ck = Check::new(opts.corrupt);
    let mut params = Parameters { n, order: Some(order), max_weight: None, table: None };
    match claim {
        Claim::PrimcKernel => {
            let kernels = reduced_sequences(n, kernel_len(n));
            ck.notes.push(format!("{} reduced kernels of length <= {}", kernels.len(), kernel_len(n)));
            kernel_identity(&mut ck, n, &kernels, order as u64)?;
        }
        Claim::Primc => primc(&mut ck, n, order)?,
        Claim::Capparelli => capparelli(&mut ck, table.as_ref().unwrap(), order)?,
        Claim::Main2 => main2(&mut ck, n, order)?,
        Claim::PrimcSpec => primc_spec(&mut ck, n, order)?,
        Claim::CapSpec => cap_spec(&mut ck, table.as_ref().unwrap(), order)?,
        Claim::PrimcNondilated => primc_nondilated(&mut ck, order)?,
        Claim::CapparelliAag => capparelli_aag(&mut ck, order)?,
        Claim::CapparelliClassical => capparelli_classical(&mut ck, order)?,
        Claim::PrimcDilated => primc_dilated(&mut ck, n, order)?,
        Claim::QbinomLemmas => {
            params.order = None;
            lemmas(&mut ck)?
        }
        Claim::Bijection => {
            params.order = None;
            params.max_weight = Some(order as u64);
            bijection(&mut ck, table.as_ref().unwrap(), order as u64)?;
        }
        Claim::PnFnBound => pn_fn_bound(&mut ck, n, order)?,
    }
    if claim.uses_table() {
        params.table = Some(opts.table.to_string());
    }
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        claim: claim.name().to_string(),
        parameters: params,
        status: if ck.failed() { Status::Fail } else { Status::Pass },
        checked_terms: ck.terms,
        mismatch: ck.mismatch,
        wall_time_ms: start.elapsed().as_secs_f64() * 1000.0,
        notes: ck.notes,
    })
}

fn weight(parts: &[Part]) -> i64 {
    parts.iter().map(|p| p.size as i64).sum()
}

/// `Σ q^{|λ|} m(λ)` over the members of `spec` up to `order`.
fn member_series(spec: &MembershipSpec, nvars: usize, order: i64, mono: impl Fn(&[Part]) -> Monomial) -> Result<QSeries, CliError> {
    let mut s = QSeries::zero(nvars, order);
    for_each_member(spec, order as u64, |parts| s.add_to_coeff(weight(parts), mono(parts), BigInt::one()))?;
    Ok(s)
}

fn colour_mono(parts: &[Part]) -> Monomial {
    parts.iter().fold(Monomial::ONE, |m, p| m.mul(colour_monomial(p.colour)))
}

fn column_colours<'a>(t: &'a [Entry], b: &'a [Entry]) -> impl Iterator<Item = Colour> + 'a {
    t.iter().zip(b).map(|(x, y)| Colour::new(x.index, y.index))
}

fn frob_weight(t: &[Entry], b: &[Entry]) -> i64 {
    (t.len() + t.iter().chain(b).map(|e| e.value as usize).sum::<usize>()) as i64
}

/// `Σ q^{|F|} m(F)` over `F_n` up to `order`.
fn frobenius_series(n: usize, nvars: usize, order: i64, mono: impl Fn(&[Entry], &[Entry]) -> Monomial) -> Result<QSeries, CliError> {
    let mut s = QSeries::zero(nvars, order);
    for_each_frobenius(n, order as u64, |t, b| s.add_to_coeff(frob_weight(t, b), mono(t, b), BigInt::one()))?;
    Ok(s)
}

fn frob_colour_mono(t: &[Entry], b: &[Entry]) -> Monomial {
    column_colours(t, b).fold(Monomial::ONE, |m, c| m.mul(colour_monomial(c)))
}

/// The kernel-level identity for an explicit list of kernels, through
/// `q^{|min_Δ(S)| + extra}` for each kernel `S`.
pub fn verify_kernels(n: usize, kernels: &[ColourSequence], extra: u64, corrupt: bool) -> Result<VerificationReport, CliError> {
    let start = Instant::now();
    let mut ck = Check::new(corrupt);
    kernel_identity(&mut ck, n, kernels, extra)?;
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        claim: Claim::PrimcKernel.name().to_string(),
        parameters: Parameters { n, order: Some(extra as i64), max_weight: None, table: None },
        status: if ck.failed() { Status::Fail } else { Status::Pass },
        checked_terms: ck.terms,
        mismatch: ck.mismatch,
        wall_time_ms: start.elapsed().as_secs_f64() * 1000.0,
        notes: vec![format!("{} kernels", kernels.len())],
    })
}

/// Brute force over `P_n` and `F_n` against both closed forms.
fn kernel_identity(ck: &mut Check, n: usize, kernels: &[ColourSequence], extra: u64) -> Result<(), CliError> {
    let mins: Vec<u64> = kernels.iter().map(|s| minimal_weight(s, Metric::Delta)).collect::<Result<_, _>>()?;
    let index: HashMap<&ColourSequence, usize> = kernels.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let top = mins.iter().max().map_or(0, |m| m + extra);
    let tally = |counts: &mut Vec<Vec<u64>>, colours: Vec<Colour>, w: u64| {
        let ker = reduce(&ColourSequence::new(colours).expect("no sentinel"));
        if let Some(&i) = index.get(&ker) {
            if w <= mins[i] + extra {
                counts[i][(w - mins[i]) as usize] += 1;
            }
        }
    };
    let mut p_counts = vec![vec![0u64; extra as usize + 1]; kernels.len()];
    for_each_member(&MembershipSpec::Pn(n), top, |parts| {
        tally(&mut p_counts, parts.iter().map(|p| p.colour).collect(), weight(parts) as u64)
    })?;
    let mut f_counts = vec![vec![0u64; extra as usize + 1]; kernels.len()];
    for_each_frobenius(n, top, |t, b| tally(&mut f_counts, column_colours(t, b).collect(), frob_weight(t, b) as u64))?;
    for (i, s) in kernels.iter().enumerate() {
        let ks = kernel_structure(s)?;
        let upto = (mins[i] + extra) as i64;
        let brute = QSeries::from_ints(mins[i] as i64, &p_counts[i].iter().map(|&x| x as i64).collect::<Vec<_>>(), upto);
        let frob = QSeries::from_ints(mins[i] as i64, &f_counts[i].iter().map(|&x| x as i64).collect::<Vec<_>>(), upto);
        let mut delta = QSeries::zero(0, upto);
        let mut frob_formula = QSeries::zero(0, upto);
        for m in 0..=extra as usize {
            delta = delta.add(&kernel_gf_formula(&ks, m, KernelGf::Delta, upto)?);
            frob_formula = frob_formula.add(&kernel_gf_formula(&ks, m, KernelGf::Frobenius, upto)?);
        }
        let name = if s.is_empty() { "()".to_string() } else { s.to_string() };
        ck.series(&format!("kernel {name}: Frobenius enumeration"), &brute, &frob, upto)?;
        ck.series(&format!("kernel {name}: P_n formula"), &brute, &delta, upto)?;
        ck.series(&format!("kernel {name}: F_n formula"), &brute, &frob_formula, upto)?;
    }
    Ok(())
}

fn primc(ck: &mut Check, n: usize, order: i64) -> Result<(), CliError> {
    let expected = constant_term_product(n, order);
    let p = member_series(&MembershipSpec::Pn(n), n, order, colour_mono)?;
    ck.series("P_n enumeration vs constant term", &expected, &p, order)?;
    let f = frobenius_series(n, n, order, frob_colour_mono)?;
    ck.series("F_n enumeration vs constant term", &expected, &f, order)
}

fn capparelli(ck: &mut Check, table: &DeltaGammaTable, order: i64) -> Result<(), CliError> {
    let n = table.n();
    let c = member_series(&MembershipSpec::Cn(table.clone()), n, order, colour_mono)?;
    let f = frobenius_series(n, n, order, frob_colour_mono)?;
    let e = euler(n, order);
    ck.series("(q;q)_inf * F_n enumeration vs C_n enumeration", &e.mul(&f).truncate(order), &c, order)?;
    let ct = e.mul(&constant_term_product(n, order)).truncate(order);
    ck.series("(q;q)_inf * constant term vs C_n enumeration", &ct, &c, order)
}

fn main2(ck: &mut Check, n: usize, order: i64) -> Result<(), CliError> {
    let ct = constant_term_product(n, order);
    ck.series("Jacobi-sum form", &ct, &main2_jacobi_form(n, order), order)?;
    ck.series("product form", &ct, &main2_product_form(n, order)?, order)
}

/// `n k − i + j` for a part `k` of colour `a_i b_j`.
fn principal_cost(n: usize) -> impl Fn(u32, Colour) -> u64 {
    move |size, c| {
        let (i, j) = c.indices().expect("real colour");
        (n as u64 * size as u64 + j as u64) - i as u64
    }
}

/// Counts by total cost of the members of `spec`.
fn cost_counts(spec: &MembershipSpec, order: u64, cost: impl Fn(u32, Colour) -> u64) -> Result<Vec<u64>, CliError> {
    let mut v = vec![0u64; order as usize + 1];
    for_each_member_with_cost(spec, order, cost, |_, c| v[c as usize] += 1)?;
    Ok(v)
}

fn primc_spec(ck: &mut Check, n: usize, order: i64) -> Result<(), CliError> {
    let p = partition_numbers(order as usize);
    let enumerated = cost_counts(&MembershipSpec::Pn(n), order as u64, principal_cost(n))?;
    ck.counts("dilated P_n enumeration vs p(m)", &p, &enumerated)?;
    let series = dilate(&constant_term_product(n, order), &Dilation::principal(n));
    let oracle = QSeries::from_ints(0, &p.iter().map(|&x| x as i64).collect::<Vec<_>>(), order);
    ck.series("dilated constant term vs p(m)", &oracle, &series, order)
}

fn cap_spec(ck: &mut Check, table: &DeltaGammaTable, order: i64) -> Result<(), CliError> {
    let n = table.n();
    let r = regular_partitions(n, order as usize);
    let enumerated = cost_counts(&MembershipSpec::Cn(table.clone()), order as u64, principal_cost(n))?;
    ck.counts("dilated C_n enumeration vs n-regular partitions", &r, &enumerated)?;
    let series = dilate(&euler(n, order).mul(&constant_term_product(n, order)).truncate(order), &Dilation::principal(n));
    let oracle = QSeries::from_ints(0, &r.iter().map(|&x| x as i64).collect::<Vec<_>>(), order);
    ck.series("dilated (q;q)_inf * constant term vs n-regular partitions", &oracle, &series, order)
}

// a = a1b0, c = a1b1, d = a0b1 as variables 0, 1, 2
fn acd_monomial(parts: &[Part]) -> Monomial {
    parts.iter().fold(Monomial::ONE, |m, p| match p.colour {
        Colour::Bound(1, 0) => m.mul(Monomial::var(0, 1)),
        Colour::Free(1) => m.mul(Monomial::var(1, 1)),
        Colour::Bound(0, 1) => m.mul(Monomial::var(2, 1)),
        _ => m,
    })
}

fn primc_nondilated(ck: &mut Check, order: i64) -> Result<(), CliError> {
    let (a, c, d) = (Monomial::var(0, 1), Monomial::var(1, 1), Monomial::var(2, 1));
    let product = pochhammer(&QTerm::new(-1, a, 1), 2, None, 3, order)?
        .mul(&pochhammer(&QTerm::new(-1, d, 1), 2, None, 3, order)?)
        .mul(&inv_euler(3, order))
        .mul(&inv_pochhammer(&QTerm::new(1, c, 1), 2, None, 3, order)?)
        .truncate(order);
    let p = member_series(&MembershipSpec::Pn(2), 3, order, acd_monomial)?;
    ck.series("P_2 enumeration (a, c, d tracked) vs product", &product, &p, order)
}

fn capparelli_aag(ck: &mut Check, order: i64) -> Result<(), CliError> {
    // a and d only, as variables 0 and 2
    let (a, d) = (Monomial::var(0, 1), Monomial::var(2, 1));
    let product = pochhammer(&QTerm::new(-1, Monomial::ONE, 1), 1, None, 3, order)?
        .mul(&pochhammer(&QTerm::new(-1, a, 1), 2, None, 3, order)?)
        .mul(&pochhammer(&QTerm::new(-1, d, 1), 2, None, 3, order)?)
        .truncate(order);
    let spec = MembershipSpec::Cn(ncolour_core::colour::builtin_delta_gamma(ncolour_core::Variant::MeurmanPrimc, 2)?);
    let mono = |parts: &[Part]| {
        parts.iter().fold(Monomial::ONE, |m, p| match p.colour {
            Colour::Bound(1, 0) => m.mul(a),
            Colour::Bound(0, 1) => m.mul(d),
            _ => m,
        })
    };
    let c = member_series(&spec, 3, order, mono)?;
    ck.series("C_2 enumeration (a, d tracked) vs product", &product, &c, order)
}

fn capparelli_classical(ck: &mut Check, order: i64) -> Result<(), CliError> {
    let spec = MembershipSpec::Cn(ncolour_core::colour::builtin_delta_gamma(ncolour_core::Variant::MeurmanPrimc, 2)?);
    // k_a -> 3k - 1, k_c -> 3k, k_d -> 3k + 1
    let cost = |size: u32, c: Colour| {
        let k = 3 * size as u64;
        match c {
            Colour::Bound(1, 0) => k - 1,
            Colour::Bound(0, 1) => k + 1,
            _ => k,
        }
    };
    let dilated = cost_counts(&spec, order as u64, cost)?;
    let d = capparelli_d(order as usize);
    ck.counts("D(m) vs dilated C_2 enumeration", &d, &dilated)?;
    ck.counts("D(m) vs C(m)", &d, &capparelli_c(order as usize))
}

/// The part maps `k -> q_scale k + shift` listed with Primc's identities.
fn primc_dilation_table(n: usize) -> Vec<(Colour, i64)> {
    let c = Colour::new;
    match n {
        2 => vec![(c(1, 0), -1), (c(0, 0), 0), (c(1, 1), 0), (c(0, 1), 1)],
        _ => vec![
            (c(2, 0), -2),
            (c(2, 1), -1),
            (c(1, 0), -1),
            (c(0, 0), 0),
            (c(1, 1), 0),
            (c(2, 2), 0),
            (c(0, 1), 1),
            (c(1, 2), 1),
            (c(0, 2), 2),
        ],
    }
}

fn primc_dilated(ck: &mut Check, n: usize, order: i64) -> Result<(), CliError> {
    let map: HashMap<Colour, i64> = primc_dilation_table(n).into_iter().collect();
    let cost = |size: u32, c: Colour| (n as i64 * size as i64 + map[&c]) as u64;
    let enumerated = cost_counts(&MembershipSpec::Pn(n), order as u64, cost)?;
    ck.counts("dilated P_n enumeration vs p(m)", &partition_numbers(order as usize), &enumerated)
}

fn lemmas(ck: &mut Check) -> Result<(), CliError> {
    let config = SuiteConfig {
        corrupt: ck.take_corruption(),
        kernel_len: 3,
        kernel_m: 4,
        insertion: Some(InsertionGrid { max_len: 4, max_n: 4, max_count: 3, long: Some((4, 1)) }),
    };
    let report = qbinom_lemma_suite(&config);
    for c in &report.checks {
        ck.terms += c.instances;
        ck.notes.push(format!("{}: {} instances, {} failed", c.name, c.instances, c.failed));
        if !c.passed() && ck.mismatch.is_none() {
            let first = c.failures.first().cloned().unwrap_or_default();
            ck.mismatch = Some(MismatchReport::other(format!("{} at {first}", c.name), "both sides equal", "sides differ"));
        }
    }
    Ok(())
}

fn bound_colour_counts(p: &ColouredPartition) -> Vec<(Colour, usize)> {
    let mut m: HashMap<Colour, usize> = HashMap::new();
    for q in p.parts().iter().filter(|q| q.colour.is_bound()) {
        *m.entry(q.colour).or_default() += 1;
    }
    let mut v: Vec<_> = m.into_iter().collect();
    v.sort();
    v
}

fn sorted_sizes<'a>(parts: impl Iterator<Item = &'a Part>) -> Vec<u32> {
    let mut v: Vec<u32> = parts.map(|p| p.size).collect();
    v.sort_unstable();
    v
}

fn bijection(ck: &mut Check, table: &DeltaGammaTable, max_weight: u64) -> Result<(), CliError> {
    let n = table.n();
    let cn = MembershipSpec::Cn(table.clone());
    let w = max_weight as usize;
    let mut p_counts = vec![0u64; w + 1];
    let mut failure: Option<CliError> = None;
    for_each_member(&MembershipSpec::Pn(n), max_weight, |parts| {
        if failure.is_some() {
            return;
        }
        let lambda = ColouredPartition::new(parts.to_vec()).expect("member");
        p_counts[lambda.weight() as usize] += 1;
        let pair = match phi(&lambda, table) {
            Ok(p) => p,
            Err(e) => {
                ck.fact(false, || MismatchReport::other(format!("phi({lambda})"), "an image", e.to_string()));
                return;
            }
        };
        let in_cn = is_member(&pair.mu, &cn).unwrap_or(false);
        let in_p0 = is_member(&pair.nu, &MembershipSpec::P0).unwrap_or(false);
        ck.fact(in_cn && in_p0, || MismatchReport::other(format!("phi({lambda})"), "mu in C_n, nu in P^0", pair_text(&pair)));
        let conserved = pair.mu.weight() + pair.nu.weight() == lambda.weight()
            && pair.mu.len() + pair.nu.len() == lambda.len()
            && sorted_sizes(pair.mu.parts().iter().chain(pair.nu.parts())) == sorted_sizes(lambda.parts().iter())
            && bound_colour_counts(&pair.mu) == bound_colour_counts(&lambda);
        ck.fact(conserved, || MismatchReport::other(format!("conservation for {lambda}"), "conserved", pair_text(&pair)));
        match phi_inverse(&pair, table) {
            Ok(back) => ck.fact(back == lambda, || {
                MismatchReport::other(format!("inverse of phi({lambda})"), lambda.to_string(), back.to_string())
            }),
            Err(e) => failure = Some(e.into()),
        }
    })?;
    if let Some(e) = failure {
        ck.fact(false, || MismatchReport::other("phi_inverse", "an inverse image", e.to_string()));
    }
    // the other direction, over C_n x P^0
    let mut c_counts = vec![0u64; w + 1];
    let mut mus: Vec<ColouredPartition> = Vec::new();
    for_each_member(&cn, max_weight, |parts| {
        c_counts[weight(parts) as usize] += 1;
        mus.push(ColouredPartition::new(parts.to_vec()).expect("member"));
    })?;
    let mut nus: Vec<Vec<ColouredPartition>> = vec![Vec::new(); w + 1];
    for_each_member(&MembershipSpec::P0, max_weight, |parts| {
        nus[weight(parts) as usize].push(ColouredPartition::new(parts.to_vec()).expect("member"))
    })?;
    for mu in &mus {
        for nu in nus.iter().take(w - mu.weight() as usize + 1).flatten() {
            let pair = PartitionPair { mu: mu.clone(), nu: nu.clone() };
            match phi_inverse(&pair, table).and_then(|l| phi(&l, table)) {
                Ok(back) => ck.fact(back == pair, || MismatchReport::other("phi of inverse", pair_text(&pair), pair_text(&back))),
                Err(e) => ck.fact(false, || MismatchReport::other(format!("inverse of {}", pair_text(&pair)), "a partition", e.to_string())),
            }
        }
    }
    // |P_n(m)| = Σ |C_n(m')| p(m − m')
    let p = partition_numbers(w);
    let product: Vec<u64> = (0..=w).map(|m| (0..=m).map(|k| c_counts[k] * p[m - k]).sum()).collect();
    ck.counts("|P_n| vs |C_n x P^0| by weight", &p_counts, &product)?;
    Ok(())
}

fn pair_text(p: &PartitionPair) -> String {
    format!("({}, {})", p.mu, p.nu)
}

fn pn_fn_bound(ck: &mut Check, n: usize, order: i64) -> Result<(), CliError> {
    let nvars = 2 * n;
    let p = member_series(&MembershipSpec::Pn(n), nvars, order, |parts| bound_monomial(parts.iter().map(|q| q.colour), n))?;
    let f = frobenius_series(n, nvars, order, |t, b| bound_monomial(column_colours(t, b), n))?;
    ck.series("bound-colour statistics, P_n vs F_n", &p, &f, order)
}
