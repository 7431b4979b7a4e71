//! Closed-form Randić characteristic polynomials and energies of the named
//! families, together with the tridiagonal determinant sequence `Λ_k` they
//! are written in.
//!
//! `Λ_k` is the determinant of the `k×k` tridiagonal matrix with `λ` on the
//! diagonal and `-1/2` beside it:
//!
//! ```text
//! Λ_{-1} = 0,  Λ_0 = 1,  Λ_k = λ·Λ_{k-1} - ¼·Λ_{k-2}
//! ```
//!
//! which gives `Λ_1 = λ` and `Λ_2 = λ² - ¼`. The two backward seeds let the
//! small members of the path and cycle formulas use the same code path.
//!
//! Every evaluator enforces its own parameter domain and returns
//! [`Error::Domain`] outside it; [`small_case_charpoly`] fills the gaps from
//! the exact route instead of extrapolating a formula.

use std::f64::consts::{PI, SQRT_2};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::{generate, Family, FamilySpec};
use crate::poly::{frac, RatPoly};
use crate::spectral::charpoly_exact;

/// Lazily extended, thread-safe cache of `Λ_k`, stored from `k = -1`.
#[derive(Debug)]
pub struct LambdaSeq {
    cache: RwLock<Vec<RatPoly>>,
}

impl Default for LambdaSeq {
    fn default() -> Self {
        LambdaSeq {
            cache: RwLock::new(vec![RatPoly::zero(), RatPoly::one()]),
        }
    }
}

impl LambdaSeq {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, k: i64) -> Result<RatPoly> {
        if k < -1 {
            return Err(Error::Domain(format!("Λ_k is defined for k >= -1, got {k}")));
        }
        let idx = (k + 1) as usize;
        if let Some(p) = self.cache.read().expect("Λ cache poisoned").get(idx) {
            return Ok(p.clone());
        }
        let mut cache = self.cache.write().expect("Λ cache poisoned");
        let quarter = frac(1, 4);
        while cache.len() <= idx {
            let len = cache.len();
            let next = &cache[len - 1].shift(1) - &cache[len - 2].scale(&quarter);
            cache.push(next);
        }
        Ok(cache[idx].clone())
    }
}

fn lambda_seq() -> &'static LambdaSeq {
    static SEQ: OnceLock<LambdaSeq> = OnceLock::new();
    SEQ.get_or_init(LambdaSeq::new)
}

/// `Λ_k` for `k >= -1`.
pub fn lambda_poly(k: i64) -> Result<RatPoly> {
    lambda_seq().get(k)
}

/// Chebyshev polynomial of the second kind, `U_0 = 1`, `U_1 = 2λ`,
/// `U_k = 2λU_{k-1} - U_{k-2}`. Kept separate from [`LambdaSeq`] so that
/// `Λ_k = U_k / 2^k` is a genuine cross-check.
pub fn cheb_u(k: usize) -> RatPoly {
    static CACHE: OnceLock<RwLock<Vec<RatPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        RwLock::new(vec![RatPoly::from_ints([1]), RatPoly::from_ints([0, 2])])
    });
    if let Some(p) = cache.read().expect("U cache poisoned").get(k) {
        return p.clone();
    }
    let mut cache = cache.write().expect("U cache poisoned");
    let two_x = RatPoly::from_ints([0, 2]);
    while cache.len() <= k {
        let len = cache.len();
        let next = &(&two_x * &cache[len - 1]) - &cache[len - 2];
        cache.push(next);
    }
    cache[k].clone()
}

fn lam(k: usize) -> RatPoly {
    lambda_poly(k as i64).expect("k >= 0")
}

fn q(p: i64, d: usize) -> BigRational {
    frac(p, d as i64)
}

fn x_minus(root: BigRational) -> RatPoly {
    RatPoly::linear_factor(root)
}

/// `λ² - c`.
fn square_minus(c: BigRational) -> RatPoly {
    RatPoly::from_coeffs(vec![-c, frac(0, 1), frac(1, 1)])
}

fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

fn parts(spec: &FamilySpec) -> (usize, usize) {
    (spec.m_or_zero(), spec.n)
}

/// Checks that `spec` lies inside the hypotheses of its characteristic
/// polynomial theorem. The error message names the violated bound.
pub fn theorem_domain(spec: &FamilySpec) -> Result<()> {
    spec.validate()?;
    let n = spec.n;
    let need = |ok: bool, msg: &str| if ok { Ok(()) } else { Err(domain(msg)) };
    match (spec.family, spec.minus_edge) {
        (Family::Path, false) => need(n >= 5, "path theorem requires n >= 5"),
        (Family::Cycle, false) => need(n >= 3, "cycle theorem requires n >= 3"),
        (Family::Star, false) => need(n >= 2, "star theorem requires n >= 2"),
        (Family::Complete, false) => need(n >= 2, "complete-graph theorem requires n >= 2"),
        (Family::CompleteBipartite, false) => {
            let (m, n) = parts(spec);
            need(m >= 2 && n >= 2, "complete bipartite theorem requires m, n >= 2")
        }
        (Family::Friendship, false) => need(n >= 2, "friendship theorem requires n >= 2"),
        (Family::Dutch4, false) => need(n >= 2, "Dutch windmill theorem requires n >= 2"),
        (Family::Complete, true) => need(n >= 3, "K_n - e theorem requires n >= 3"),
        (Family::CompleteBipartite, true) => {
            let (m, n) = parts(spec);
            need(m >= 2 && n >= 2, "K_{m,n} - e theorem requires m, n >= 2")
        }
        (f, true) => Err(domain(format!(
            "no closed-form characteristic polynomial for {f} minus an edge"
        ))),
    }
}

/// The closed-form Randić characteristic polynomial, fully expanded.
pub fn closed_charpoly(spec: &FamilySpec) -> Result<RatPoly> {
    theorem_domain(spec)?;
    let n = spec.n;
    let quarter = frac(1, 4);
    let half = frac(1, 2);
    let one = frac(1, 1);
    let poly = match (spec.family, spec.minus_edge) {
        // (λ² - 1)(λΛ_{n-3} - ¼Λ_{n-4})
        (Family::Path, false) => {
            square_minus(one) * (&lam(n - 3).shift(1) - &lam(n - 4).scale(&quarter))
        }
        // λΛ_{n-1} - ½Λ_{n-2} - (½)^{n-1}
        (Family::Cycle, false) => {
            let tail = BigRational::new(BigInt::from(1), BigInt::from(2).pow(n as u32 - 1));
            &(&lam(n - 1).shift(1) - &lam(n - 2).scale(&half)) - &RatPoly::constant(tail)
        }
        // λ^{n-2}(λ² - 1)
        (Family::Star, false) => square_minus(one).shift(n - 2),
        // (λ - 1)(λ + 1/(n-1))^{n-1}
        (Family::Complete, false) => x_minus(one) * x_minus(-q(1, n - 1)).pow(n - 1),
        // λ^{m+n-2}(λ² - 1)
        (Family::CompleteBipartite, false) => {
            let (m, n) = parts(spec);
            square_minus(one).shift(m + n - 2)
        }
        // (λ² - ¼)^{n-1}(λ - 1)(λ + ½)²
        (Family::Friendship, false) => {
            square_minus(quarter).pow(n - 1) * x_minus(one) * x_minus(-half).pow(2)
        }
        // λ^{n+1}(λ² - ½)^{n-1}(λ² - 1)
        (Family::Dutch4, false) => (square_minus(half).pow(n - 1) * square_minus(one)).shift(n + 1),
        // λ(λ - 1)(λ + 2/(n-1))(λ + 1/(n-1))^{n-3}
        (Family::Complete, true) => {
            (x_minus(one) * x_minus(-q(2, n - 1)) * x_minus(-q(1, n - 1)).pow(n - 3)).shift(1)
        }
        // λ^{m+n-4}(λ² - 1)(λ² - 1/(mn))
        (Family::CompleteBipartite, true) => {
            let (m, n) = parts(spec);
            (square_minus(one) * square_minus(q(1, m * n))).shift(m + n - 4)
        }
        _ => unreachable!("excluded by theorem_domain"),
    };
    debug_assert_eq!(poly.degree(), Some(spec.vertex_count()));
    Ok(poly)
}

/// Exact characteristic polynomial computed from the generated graph; used
/// below the theorem domains (e.g. `P_2`..`P_4`, `S_2-e`). Agrees with
/// [`closed_charpoly`] wherever both apply.
pub fn small_case_charpoly(spec: &FamilySpec) -> Result<RatPoly> {
    Ok(charpoly_exact(&generate(spec)?))
}

/// Where a reference characteristic polynomial came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharpolySource {
    Theorem,
    SmallCase,
}

/// The closed form where a theorem applies, the exact small case otherwise.
pub fn reference_charpoly(spec: &FamilySpec) -> Result<(RatPoly, CharpolySource)> {
    match closed_charpoly(spec) {
        Ok(p) => Ok((p, CharpolySource::Theorem)),
        Err(Error::Domain(_)) => Ok((small_case_charpoly(spec)?, CharpolySource::SmallCase)),
        Err(e) => Err(e),
    }
}

/// An energy value with a readable exact form such as `2+3·√2`.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyForm {
    pub value: f64,
    pub form: String,
}

/// `E(P_k) = Σ_{j=1..k} 2|cos(jπ/(k+1))|`, from the analytic path spectrum.
pub fn path_graph_energy(k: usize) -> f64 {
    (1..=k)
        .map(|j| 2.0 * (j as f64 * PI / (k + 1) as f64).cos().abs())
        .sum()
}

/// `Σ_k |cos(2πk/n)|`, the Randić energy of `C_n` from its analytic
/// spectrum (`R(C_n) = A/2`).
pub fn cycle_energy_analytic(n: usize) -> f64 {
    (0..n)
        .map(|k| (2.0 * PI * k as f64 / n as f64).cos().abs())
        .sum()
}

/// `RE(C_{2h}) = 2 sin((⌊h/2⌋ + ½)π/h) / sin(π/2h)` for `h >= 2`.
pub fn even_cycle_energy(h: usize) -> Result<f64> {
    if h < 2 {
        return Err(domain(format!("even-cycle formula requires h >= 2, got {h}")));
    }
    let h_f = h as f64;
    Ok(2.0 * (((h / 2) as f64 + 0.5) * PI / h_f).sin() / (PI / (2.0 * h_f)).sin())
}

/// `RE(P_n) = 2 + ½E(P_{n-2})` for `n >= 3`.
pub fn path_energy_from_lemma(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(domain(format!("path energy lemma requires n >= 3, got {n}")));
    }
    Ok(2.0 + 0.5 * path_graph_energy(n - 2))
}

pub fn closed_energy_form(spec: &FamilySpec) -> Result<EnergyForm> {
    spec.validate()?;
    let n = spec.n;
    let exact =
        |value: f64, form: &str| -> Result<EnergyForm> { Ok(EnergyForm { value, form: form.into() }) };
    let need = |ok: bool, msg: &str| if ok { Ok(()) } else { Err(domain(msg)) };
    match (spec.family, spec.minus_edge) {
        (Family::Path, false) => Ok(EnergyForm {
            value: path_energy_from_lemma(n)?,
            form: format!("2+½·E(P_{})", n - 2),
        }),
        (Family::Cycle, false) if n % 2 == 0 => Ok(EnergyForm {
            value: even_cycle_energy(n / 2)?,
            form: format!("2·sin(({}+½)π/{h})/sin(π/{})", (n / 2) / 2, n, h = n / 2),
        }),
        (Family::Cycle, false) => Ok(EnergyForm {
            value: cycle_energy_analytic(n),
            form: format!("Σ_k |cos(2πk/{n})|"),
        }),
        (Family::Star, false) => {
            need(n >= 2, "star energy requires n >= 2")?;
            exact(2.0, "2")
        }
        (Family::Complete, false) => {
            need(n >= 2, "complete-graph energy requires n >= 2")?;
            exact(2.0, "2")
        }
        (Family::CompleteBipartite, false) => {
            let (m, n) = parts(spec);
            need(m >= 2 && n >= 2, "complete bipartite energy requires m, n >= 2")?;
            exact(2.0, "2")
        }
        (Family::Friendship, false) => {
            need(n >= 2, "friendship energy requires n >= 2")?;
            Ok(EnergyForm {
                value: (n + 1) as f64,
                form: format!("{}", n + 1),
            })
        }
        (Family::Dutch4, false) => {
            need(n >= 2, "Dutch windmill energy requires n >= 2")?;
            Ok(EnergyForm {
                value: 2.0 + (n - 1) as f64 * SQRT_2,
                form: format!("2+{}·√2", n - 1),
            })
        }
        (Family::Complete, true) => {
            need(n >= 3, "K_n - e energy requires n >= 3")?;
            exact(2.0, "2")
        }
        (Family::CompleteBipartite, true) => {
            let (m, n) = parts(spec);
            need(m >= 2 && n >= 2, "K_{m,n} - e energy requires m, n >= 2")?;
            Ok(EnergyForm {
                value: 2.0 + 2.0 / ((m * n) as f64).sqrt(),
                form: format!("2+2/√{}", m * n),
            })
        }
        (f, true) => Err(domain(format!("no closed-form energy for {f} minus an edge"))),
    }
}

/// The closed-form Randić energy as a number.
pub fn closed_energy(spec: &FamilySpec) -> Result<f64> {
    closed_energy_form(spec).map(|e| e.value)
}

/// Characteristic polynomial and energy of a family member, both closed-form.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm {
    pub family: FamilySpec,
    pub charpoly: RatPoly,
    pub energy: EnergyForm,
}

pub fn closed_form(spec: &FamilySpec) -> Result<ClosedForm> {
    Ok(ClosedForm {
        family: *spec,
        charpoly: closed_charpoly(spec)?,
        energy: closed_energy_form(spec)?,
    })
}
