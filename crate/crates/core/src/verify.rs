//! Cross-check harness: numeric spectrum vs. exact characteristic
//! polynomial vs. closed forms, plus the union, edge-deletion, path and
//! even-cycle energy identities and the integer-energy witness table.
//!
//! Failures never abort a sweep. Each check becomes a [`VerdictRecord`] and
//! the [`Report`] counts the records that violate a threshold.

use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::{
    closed_charpoly, closed_energy, even_cycle_energy, path_graph_energy, reference_charpoly,
    CharpolySource,
};
use crate::error::{Error, Result};
use crate::graph::{delete_edge, disjoint_union, generate, FamilySpec, Graph};
use crate::matrix::{Spectrum, DEFAULT_TOL};
use crate::poly::RatPoly;
use crate::spectral::{charpoly_exact, graph_energy, randic_energy, randic_spectrum};

/// Default energy tolerance of a verification run.
pub const DEFAULT_VERIFY_TOL: f64 = 1e-9;
/// Tolerance of the trace, Frobenius, bound, symmetry and top-eigenvalue checks.
pub const SPECTRAL_TOL: f64 = 1e-9;
/// Bound on `|p_exact(ρ)|` at every numeric eigenvalue.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-6;
pub const DEFAULT_WITNESS_MAX: usize = 20;
pub const UNION_PAIRS: usize = 50;
pub const UNION_SEED: u64 = 0x5eed_2024;

/// Which identity a record checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Closed-form charpoly and energy of a family member.
    Theorem,
    /// `RE(P_n) = 2 + ½E(P_{n-2})`.
    PathLemma,
    /// Trigonometric formula for `RE(C_{2h})`.
    EvenCycleLemma,
    /// `RE(P_n - e) = RE(P_r) + RE(P_s)`.
    PathSplit,
    /// `RE(C_n - e) = RE(P_n)`.
    CycleMinusEdge,
    /// `RE(S_n - e) = RE(S_{n-1}) = 2`.
    StarMinusEdge,
    /// Energy of a disjoint union is the sum of the energies.
    UnionAdditivity,
    /// A graph whose Randić energy is the integer `m`.
    Witness,
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq)]
pub struct VerdictRecord {
    pub check: CheckKind,
    pub spec: FamilySpec,
    pub label: String,
    /// Position of the deleted edge for [`CheckKind::PathSplit`].
    pub split: Option<usize>,
    /// Exact coefficient equality with the reference polynomial.
    pub charpoly_match: bool,
    /// `None` when no reference energy exists for the parameters.
    pub energy_abs_err: Option<f64>,
    pub max_root_residual: f64,
    /// Only filled for bipartite graphs.
    pub spectrum_sym_err: Option<f64>,
    pub trace_err: f64,
    pub frobenius_err: f64,
    /// `max(0, max|ρ| - 1)`.
    pub bound_excess: f64,
    /// `|ρ_1 - 1|`, connected graphs with an edge only.
    pub top_eigen_err: Option<f64>,
    pub energy_numeric: f64,
    pub energy_reference: Option<f64>,
    pub elapsed: Duration,
    pub notes: String,
    /// Set when a computation failed; such a record never passes.
    pub errored: bool,
}

impl VerdictRecord {
    fn failed(check: CheckKind, spec: FamilySpec, label: String, err: &Error) -> Self {
        VerdictRecord {
            check,
            spec,
            label,
            split: None,
            charpoly_match: false,
            energy_abs_err: None,
            max_root_residual: f64::NAN,
            spectrum_sym_err: None,
            trace_err: f64::NAN,
            frobenius_err: f64::NAN,
            bound_excess: f64::NAN,
            top_eigen_err: None,
            energy_numeric: f64::NAN,
            energy_reference: None,
            elapsed: Duration::ZERO,
            notes: err.to_string(),
            errored: true,
        }
    }

    /// True iff every threshold holds. `tol` applies to the energy error.
    pub fn passes(&self, tol: f64) -> bool {
        let within = |x: f64, t: f64| x < t;
        !self.errored
            && self.charpoly_match
            && self.energy_abs_err.is_none_or(|e| within(e, tol))
            && within(self.max_root_residual, ROOT_RESIDUAL_TOL)
            && self.spectrum_sym_err.is_none_or(|e| within(e, SPECTRAL_TOL))
            && within(self.trace_err, SPECTRAL_TOL)
            && within(self.frobenius_err, SPECTRAL_TOL)
            && self.bound_excess <= SPECTRAL_TOL
            && self.top_eigen_err.is_none_or(|e| within(e, SPECTRAL_TOL))
    }
}

/// Spectral measurements shared by every check.
struct Measured {
    spectrum: Spectrum,
    exact: RatPoly,
    max_root_residual: f64,
    spectrum_sym_err: Option<f64>,
    trace_err: f64,
    frobenius_err: f64,
    bound_excess: f64,
    top_eigen_err: Option<f64>,
}

fn measure(g: &Graph) -> Result<Measured> {
    let spectrum = randic_spectrum(g, DEFAULT_TOL)?;
    let exact = charpoly_exact(g);
    let max_root_residual = spectrum
        .values()
        .iter()
        .map(|&r| exact.eval_f64(r).abs())
        .fold(0.0, f64::max);
    let expected_sq: f64 = g
        .edges()
        .map(|(u, v)| 2.0 / (g.degree(u) * g.degree(v)) as f64)
        .sum();
    let max_abs = spectrum
        .values()
        .iter()
        .map(|x| x.abs())
        .fold(0.0, f64::max);
    let has_edge = g.edge_count() > 0;
    Ok(Measured {
        max_root_residual,
        spectrum_sym_err: g.is_bipartite().then(|| spectrum.symmetry_error()),
        trace_err: spectrum.sum().abs(),
        frobenius_err: (spectrum.sum_squares() - expected_sq).abs(),
        bound_excess: (max_abs - 1.0).max(0.0),
        top_eigen_err: (has_edge && g.is_connected())
            .then(|| (spectrum.max().unwrap_or(0.0) - 1.0).abs()),
        spectrum,
        exact,
    })
}

struct CheckInput {
    check: CheckKind,
    spec: FamilySpec,
    label: String,
    split: Option<usize>,
}

/// `build` yields the graph under test, its reference polynomial, an
/// optional reference energy and free-form notes; the numeric side is
/// measured here.
fn run_check<F>(input: CheckInput, build: F) -> VerdictRecord
where
    F: FnOnce() -> Result<(Graph, RatPoly, Option<f64>, String)>,
{
    let start = Instant::now();
    let CheckInput {
        check,
        spec,
        label,
        split,
    } = input;
    let outcome = build().and_then(|(g, reference, reference_energy, notes)| {
        let m = measure(&g)?;
        Ok((m, reference, reference_energy, notes))
    });
    match outcome {
        Ok((m, reference, reference_energy, notes)) => {
            let energy_numeric = m.spectrum.energy();
            VerdictRecord {
                check,
                spec,
                label,
                split,
                charpoly_match: m.exact == reference,
                energy_abs_err: reference_energy.map(|e| (energy_numeric - e).abs()),
                max_root_residual: m.max_root_residual,
                spectrum_sym_err: m.spectrum_sym_err,
                trace_err: m.trace_err,
                frobenius_err: m.frobenius_err,
                bound_excess: m.bound_excess,
                top_eigen_err: m.top_eigen_err,
                energy_numeric,
                energy_reference: reference_energy,
                elapsed: start.elapsed(),
                notes,
                errored: false,
            }
        }
        Err(e) => {
            let mut r = VerdictRecord::failed(check, spec, label, &e);
            r.split = split;
            r.elapsed = start.elapsed();
            r
        }
    }
}

/// Closed form vs. exact charpoly vs. numeric spectrum for one family member.
pub fn verify_instance(spec: &FamilySpec, tol: f64) -> VerdictRecord {
    let mut record = run_check(
        CheckInput {
            check: CheckKind::Theorem,
            spec: *spec,
            label: spec.label(),
            split: None,
        },
        || {
            let g = generate(spec)?;
            let (reference, source) = reference_charpoly(spec)?;
            let energy = closed_energy(spec).ok();
            let mut notes = Vec::new();
            if source == CharpolySource::SmallCase {
                notes.push("below the theorem domain; charpoly checked against the exact route only");
            }
            if energy.is_none() {
                notes.push("no closed-form energy for these parameters");
            }
            Ok((g, reference, energy, notes.join("; ")))
        },
    );
    if !record.errored && !record.passes(tol) && record.notes.is_empty() {
        record.notes = "threshold violated".into();
    }
    record
}

/// `|RE(g1 ∪ g2) - RE(g1) - RE(g2)| < tol`.
pub fn check_union_additivity(g1: &Graph, g2: &Graph, tol: f64) -> Result<bool> {
    let union = randic_energy(&disjoint_union(g1, g2), DEFAULT_TOL)?;
    let parts = randic_energy(g1, DEFAULT_TOL)? + randic_energy(g2, DEFAULT_TOL)?;
    Ok((union - parts).abs() < tol)
}

fn path(n: usize) -> Result<Graph> {
    generate(&FamilySpec::path(n))
}

fn path_split_record(n: usize, r: usize) -> VerdictRecord {
    let s = n - r;
    run_check(
        CheckInput {
            check: CheckKind::PathSplit,
            spec: FamilySpec::path(n).minus_edge(),
            label: format!("P_{n}-e = P_{r} ∪ P_{s}"),
            split: Some(r),
        },
        || {
            let g = delete_edge(&path(n)?, r - 1, r)?;
            let (pr, ps) = (path(r)?, path(s)?);
            let reference = charpoly_exact(&pr) * charpoly_exact(&ps);
            let energy = randic_energy(&pr, DEFAULT_TOL)? + randic_energy(&ps, DEFAULT_TOL)?;
            Ok((g, reference, Some(energy), String::new()))
        },
    )
}

fn cycle_minus_edge_record(n: usize) -> VerdictRecord {
    let spec = FamilySpec::cycle(n).minus_edge();
    run_check(
        CheckInput {
            check: CheckKind::CycleMinusEdge,
            spec,
            label: format!("C_{n}-e vs P_{n}"),
            split: None,
        },
        || {
            let g = generate(&spec)?;
            let p = path(n)?;
            let energy = randic_energy(&p, DEFAULT_TOL)?;
            Ok((g, charpoly_exact(&p), Some(energy), String::new()))
        },
    )
}

fn star_minus_edge_record(n: usize) -> VerdictRecord {
    let spec = FamilySpec::star(n).minus_edge();
    run_check(
        CheckInput {
            check: CheckKind::StarMinusEdge,
            spec,
            label: format!("S_{n}-e vs S_{} ∪ K_1", n - 1),
            split: None,
        },
        || {
            let g = generate(&spec)?;
            // S_n - e = S_{n-1} plus an isolated vertex
            let reference = closed_charpoly(&FamilySpec::star(n - 1))?.shift(1);
            Ok((g, reference, Some(2.0), String::new()))
        },
    )
}

fn path_lemma_record(n: usize) -> VerdictRecord {
    let spec = FamilySpec::path(n);
    run_check(
        CheckInput {
            check: CheckKind::PathLemma,
            spec,
            label: format!("RE(P_{n}) vs 2+½E(P_{})", n - 2),
            split: None,
        },
        || {
            let g = generate(&spec)?;
            let reference = closed_charpoly(&spec)?;
            let analytic = path_graph_energy(n - 2);
            let numeric = graph_energy(&path(n - 2)?, DEFAULT_TOL)?;
            let re = randic_energy(&g, DEFAULT_TOL)?;
            // Report against whichever route of E(P_{n-2}) is further away.
            let worse = [analytic, numeric]
                .into_iter()
                .map(|e| 2.0 + 0.5 * e)
                .max_by(|a, b| (a - re).abs().total_cmp(&(b - re).abs()))
                .unwrap();
            let notes = format!("E(P_{}) analytic {analytic:.15}, numeric {numeric:.15}", n - 2);
            Ok((g, reference, Some(worse), notes))
        },
    )
}

fn even_cycle_lemma_record(h: usize) -> VerdictRecord {
    let spec = FamilySpec::cycle(2 * h);
    run_check(
        CheckInput {
            check: CheckKind::EvenCycleLemma,
            spec,
            label: format!("RE(C_{}) vs trigonometric formula", 2 * h),
            split: None,
        },
        || {
            let g = generate(&spec)?;
            let reference = closed_charpoly(&spec)?;
            let lemma = even_cycle_energy(h)?;
            Ok((g, reference, Some(lemma), String::new()))
        },
    )
}

fn witness_spec(m: usize) -> FamilySpec {
    if m == 2 {
        FamilySpec::complete(2)
    } else {
        FamilySpec::friendship(m - 1)
    }
}

fn witness_record(m: usize) -> VerdictRecord {
    let spec = witness_spec(m);
    run_check(
        CheckInput {
            check: CheckKind::Witness,
            spec,
            label: format!("RE({}) = {m}", spec.label()),
            split: None,
        },
        || {
            let g = generate(&spec)?;
            let reference = closed_charpoly(&spec)?;
            Ok((g, reference, Some(m as f64), String::new()))
        },
    )
}

/// For each `2 <= m <= m_max`, a graph with `RE = m` (`K_2`, then
/// `F_{m-1}`) and its computed energy.
pub fn integer_energy_witnesses(m_max: usize) -> Result<Vec<(usize, FamilySpec, f64)>> {
    if m_max < 2 {
        return Err(Error::Domain(format!("witness table needs m_max >= 2, got {m_max}")));
    }
    (2..=m_max)
        .map(|m| {
            let spec = witness_spec(m);
            Ok((m, spec, randic_energy(&generate(&spec)?, DEFAULT_TOL)?))
        })
        .collect()
}

fn deletion_records(max_n: usize) -> Vec<VerdictRecord> {
    let mut jobs: Vec<Box<dyn Fn() -> VerdictRecord + Send + Sync>> = Vec::new();
    for n in 2..=max_n {
        for r in 1..n {
            jobs.push(Box::new(move || path_split_record(n, r)));
        }
    }
    for n in 3..=max_n {
        jobs.push(Box::new(move || cycle_minus_edge_record(n)));
    }
    for n in 3..=max_n {
        jobs.push(Box::new(move || star_minus_edge_record(n)));
    }
    jobs.par_iter().map(|job| job()).collect()
}

/// Edge-deletion identities for paths (every split), cycles and stars up
/// to `max_n` vertices.
pub fn check_edge_deletion_lemmas(tol: f64, max_n: usize) -> Result<Report> {
    if max_n < 4 {
        return Err(Error::Domain(format!("edge-deletion sweep needs max_n >= 4, got {max_n}")));
    }
    let start = Instant::now();
    Ok(Report::new(tol, deletion_records(max_n), start.elapsed()))
}

/// The fixed family pool unions are drawn from.
pub fn union_pool() -> Vec<FamilySpec> {
    let mut pool = Vec::new();
    pool.extend((1..=8).map(FamilySpec::path));
    pool.extend((3..=8).map(FamilySpec::cycle));
    pool.extend((2..=8).map(FamilySpec::star));
    pool.extend((1..=7).map(FamilySpec::complete));
    for m in 1..=4 {
        pool.extend((1..=4).map(|n| FamilySpec::complete_bipartite(m, n)));
    }
    pool.extend((1..=4).map(FamilySpec::friendship));
    pool.extend((1..=3).map(FamilySpec::dutch4));
    pool.extend((3..=6).map(|n| FamilySpec::complete(n).minus_edge()));
    pool.extend((3..=6).map(|n| FamilySpec::star(n).minus_edge()));
    pool
}

/// `count` pairs sampled with replacement from [`union_pool`].
pub fn union_pairs(count: usize, seed: u64) -> Vec<(FamilySpec, FamilySpec)> {
    let pool = union_pool();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = *pool.choose(&mut rng).expect("pool is non-empty");
            let b = *pool.choose(&mut rng).expect("pool is non-empty");
            (a, b)
        })
        .collect()
}

fn union_record(a: FamilySpec, b: FamilySpec) -> VerdictRecord {
    run_check(
        CheckInput {
            check: CheckKind::UnionAdditivity,
            spec: a,
            label: format!("{} ∪ {}", a.label(), b.label()),
            split: None,
        },
        || {
            let (ga, gb) = (generate(&a)?, generate(&b)?);
            let reference = charpoly_exact(&ga) * charpoly_exact(&gb);
            let energy = randic_energy(&ga, DEFAULT_TOL)? + randic_energy(&gb, DEFAULT_TOL)?;
            Ok((disjoint_union(&ga, &gb), reference, Some(energy), String::new()))
        },
    )
}

/// Parameters of a full verification run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub tol: f64,
    pub witness_max: usize,
    pub union_pairs: usize,
    pub union_seed: u64,
}

impl VerifyConfig {
    pub fn new(max_n: usize, tol: f64) -> Self {
        VerifyConfig {
            max_n,
            tol,
            witness_max: DEFAULT_WITNESS_MAX,
            union_pairs: UNION_PAIRS,
            union_seed: UNION_SEED,
        }
    }
}

/// Every family member the sweep covers, in report order.
pub fn sweep_specs(max_n: usize) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    specs.extend((2..=max_n).map(FamilySpec::path));
    specs.extend((3..=max_n).map(FamilySpec::cycle));
    specs.extend((2..=max_n).map(FamilySpec::star));
    specs.extend((2..=max_n.min(30)).map(FamilySpec::complete));
    for m in 2..=12 {
        specs.extend((m..=12).map(|n| FamilySpec::complete_bipartite(m, n)));
    }
    specs.extend((2..=12).map(FamilySpec::friendship));
    specs.extend((2..=12).map(FamilySpec::dutch4));
    specs.extend((3..=30).map(|n| FamilySpec::complete(n).minus_edge()));
    for m in 2..=10 {
        specs.extend((m..=10).map(|n| FamilySpec::complete_bipartite(m, n).minus_edge()));
    }
    specs
}

/// Runs the family sweep, all identity checks and the witness table.
pub fn verify_all(max_n: usize, tol: f64) -> Result<Report> {
    verify_with(&VerifyConfig::new(max_n, tol))
}

pub fn verify_with(config: &VerifyConfig) -> Result<Report> {
    if config.max_n < 5 {
        return Err(Error::Domain(format!(
            "verification sweep needs max_n >= 5, got {}",
            config.max_n
        )));
    }
    if !(config.tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {}", config.tol)));
    }
    if config.witness_max < 2 {
        return Err(Error::Domain(format!(
            "witness table needs m_max >= 2, got {}",
            config.witness_max
        )));
    }
    let start = Instant::now();
    let tol = config.tol;
    let mut records: Vec<VerdictRecord> = sweep_specs(config.max_n)
        .par_iter()
        .map(|spec| verify_instance(spec, tol))
        .collect();
    records.extend(
        (5..=config.max_n)
            .into_par_iter()
            .map(path_lemma_record)
            .collect::<Vec<_>>(),
    );
    records.extend(
        (2..=(config.max_n / 2).max(2))
            .into_par_iter()
            .map(even_cycle_lemma_record)
            .collect::<Vec<_>>(),
    );
    records.extend(deletion_records(config.max_n));
    records.extend(
        union_pairs(config.union_pairs, config.union_seed)
            .into_par_iter()
            .map(|(a, b)| union_record(a, b))
            .collect::<Vec<_>>(),
    );
    records.extend(
        (2..=config.witness_max)
            .into_par_iter()
            .map(witness_record)
            .collect::<Vec<_>>(),
    );
    Ok(Report::new(tol, records, start.elapsed()))
}

/// Aggregated verification outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub tolerance: f64,
    pub records: Vec<VerdictRecord>,
    pub elapsed: Duration,
    pub generated_at: SystemTime,
}

/// `{"pass": .., "fail": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    meta: MetaJson,
    tolerance: f64,
    summary: Summary,
    records: Vec<RecordJson<'a>>,
}

/// Everything run-dependent lives here so that two reports can be compared
/// byte-for-byte once this key is removed.
#[derive(Serialize)]
struct MetaJson {
    tool: &'static str,
    version: &'static str,
    generated_unix_secs: u64,
    elapsed_ms: u128,
}

#[derive(Serialize)]
struct RecordJson<'a> {
    check: CheckKind,
    label: &'a str,
    family: &'static str,
    n: usize,
    m: Option<usize>,
    minus_edge: bool,
    split: Option<usize>,
    charpoly_match: bool,
    energy_abs_err: Option<f64>,
    max_root_residual: f64,
    spectrum_sym_err: Option<f64>,
    trace_err: f64,
    frobenius_err: f64,
    bound_excess: f64,
    top_eigen_err: Option<f64>,
    energy_numeric: f64,
    energy_reference: Option<f64>,
    pass: bool,
    notes: &'a str,
}

impl Report {
    pub fn new(tolerance: f64, records: Vec<VerdictRecord>, elapsed: Duration) -> Self {
        Report {
            tolerance,
            records,
            elapsed,
            generated_at: SystemTime::now(),
        }
    }

    pub fn summary(&self) -> Summary {
        let pass = self.records.iter().filter(|r| r.passes(self.tolerance)).count();
        Summary {
            pass,
            fail: self.records.len() - pass,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerdictRecord> {
        self.records.iter().filter(|r| !r.passes(self.tolerance))
    }

    pub fn records_of(&self, kind: CheckKind) -> impl Iterator<Item = &VerdictRecord> {
        self.records.iter().filter(move |r| r.check == kind)
    }

    pub fn to_json_string(&self) -> String {
        let records = self
            .records
            .iter()
            .map(|r| RecordJson {
                check: r.check,
                label: &r.label,
                family: r.spec.family.name(),
                n: r.spec.n,
                m: r.spec.m,
                minus_edge: r.spec.minus_edge,
                split: r.split,
                charpoly_match: r.charpoly_match,
                energy_abs_err: r.energy_abs_err,
                max_root_residual: r.max_root_residual,
                spectrum_sym_err: r.spectrum_sym_err,
                trace_err: r.trace_err,
                frobenius_err: r.frobenius_err,
                bound_excess: r.bound_excess,
                top_eigen_err: r.top_eigen_err,
                energy_numeric: r.energy_numeric,
                energy_reference: r.energy_reference,
                pass: r.passes(self.tolerance),
                notes: &r.notes,
            })
            .collect();
        let json = ReportJson {
            meta: MetaJson {
                tool: env!("CARGO_PKG_NAME"),
                version: env!("CARGO_PKG_VERSION"),
                generated_unix_secs: self
                    .generated_at
                    .duration_since(UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0),
                elapsed_ms: self.elapsed.as_millis(),
            },
            tolerance: self.tolerance,
            summary: self.summary(),
            records,
        };
        let mut out = serde_json::to_string_pretty(&json).expect("report serializes");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn friendship_instance() {
        let r = verify_instance(&FamilySpec::friendship(5), DEFAULT_VERIFY_TOL);
        assert!(r.charpoly_match);
        assert!(r.energy_abs_err.unwrap() < 1e-9);
        assert_eq!(r.energy_reference, Some(6.0));
        assert!(r.passes(DEFAULT_VERIFY_TOL), "{r:?}");
    }

    #[test]
    fn k2_instance() {
        let r = verify_instance(&FamilySpec::complete(2), DEFAULT_VERIFY_TOL);
        assert!(r.charpoly_match);
        assert!((r.energy_numeric - 2.0).abs() < 1e-12);
        assert_eq!(
            closed_charpoly(&FamilySpec::complete(2)).unwrap(),
            RatPoly::from_ints([-1, 0, 1])
        );
    }

    #[test]
    fn dutch4_instance() {
        let r = verify_instance(&FamilySpec::dutch4(3), DEFAULT_VERIFY_TOL);
        assert!(r.passes(DEFAULT_VERIFY_TOL));
        assert!((r.energy_reference.unwrap() - 4.82842712474619).abs() < 1e-12);
        assert!(r.spectrum_sym_err.is_some());
    }

    #[test]
    fn invalid_spec_becomes_failed_record() {
        let r = verify_instance(&FamilySpec::friendship(2).minus_edge(), DEFAULT_VERIFY_TOL);
        assert!(r.errored);
        assert!(!r.passes(DEFAULT_VERIFY_TOL));
        assert!(r.notes.contains("unsupported"), "{}", r.notes);
    }

    #[test]
    fn small_case_instance_has_no_energy_reference() {
        let r = verify_instance(&FamilySpec::path(2), DEFAULT_VERIFY_TOL);
        assert!(r.charpoly_match);
        assert!(r.energy_abs_err.is_none());
        assert!(r.passes(DEFAULT_VERIFY_TOL));
    }

    #[test]
    fn union_examples() {
        let g = |s| generate(&s).unwrap();
        let tol = DEFAULT_VERIFY_TOL;
        assert!(check_union_additivity(&g(FamilySpec::path(2)), &g(FamilySpec::path(3)), tol).unwrap());
        assert!(
            check_union_additivity(&g(FamilySpec::complete(3)), &g(FamilySpec::complete(1)), tol)
                .unwrap()
        );
        let f2 = g(FamilySpec::friendship(2));
        assert!(check_union_additivity(&f2, &f2, tol).unwrap());
        let both = randic_energy(&disjoint_union(&f2, &f2), DEFAULT_TOL).unwrap();
        assert!((both - 6.0).abs() < 1e-9);
    }

    #[test]
    fn deletion_examples() {
        let report = check_edge_deletion_lemmas(DEFAULT_VERIFY_TOL, 6).unwrap();
        assert_eq!(report.summary().fail, 0);
        let split = report
            .records_of(CheckKind::PathSplit)
            .find(|r| r.spec.n == 5 && r.split == Some(2))
            .unwrap();
        assert!((split.energy_numeric - 4.0).abs() < 1e-9);
        let c4 = report
            .records_of(CheckKind::CycleMinusEdge)
            .find(|r| r.spec.n == 4)
            .unwrap();
        assert!((c4.energy_numeric - 3.0).abs() < 1e-9);
        let s6 = report
            .records_of(CheckKind::StarMinusEdge)
            .find(|r| r.spec.n == 6)
            .unwrap();
        assert!(s6.charpoly_match);
        assert!((s6.energy_numeric - 2.0).abs() < 1e-9);
        assert!(check_edge_deletion_lemmas(DEFAULT_VERIFY_TOL, 3).is_err());
    }

    #[test]
    fn witness_table() {
        let table = integer_energy_witnesses(7).unwrap();
        assert_eq!(table.len(), 6);
        assert_eq!(table[0].1, FamilySpec::complete(2));
        assert_eq!(table[1].1, FamilySpec::friendship(2));
        assert_eq!(table[5].1, FamilySpec::friendship(6));
        for (m, _, re) in table {
            assert!((re - m as f64).abs() < 1e-9);
        }
        assert!(integer_energy_witnesses(1).is_err());
    }

    #[test]
    fn union_sampling_is_seeded() {
        assert_eq!(union_pairs(10, 7), union_pairs(10, 7));
        assert_ne!(union_pairs(10, 7), union_pairs(10, 8));
    }

    #[test]
    fn small_sweep() {
        let report = verify_all(5, DEFAULT_VERIFY_TOL).unwrap();
        assert!(report.records.len() >= 20);
        assert_eq!(report.summary().fail, 0, "{:?}", report.failures().next());
        let p5 = report
            .records_of(CheckKind::Theorem)
            .find(|r| r.spec == FamilySpec::path(5))
            .unwrap();
        assert!(p5.charpoly_match);
        assert!(verify_all(4, DEFAULT_VERIFY_TOL).is_err());
    }
}
