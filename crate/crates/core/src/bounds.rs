//! Closed-form evaluators for the eigenvalue lower bounds on the distance-k
//! chromatic, quantum and vector chromatic numbers.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{spectral_params, Polynomial, SpectralParams, Spectrum};

/// Which bound a [`BoundReport`] carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Hoffman,
    ClassicKappa,
    HoffmanType,
    UnifiedKappa,
    VectorR,
}

/// A computed lower bound with its witnessing polynomial.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub kind: BoundKind,
    /// The bound before rounding (equals `lower_bound` for κ kinds).
    pub raw: f64,
    /// Integer lower bound: ⌈raw − 1e−9⌉, or κ+1 for κ kinds.
    pub lower_bound: usize,
    /// Witness polynomial.
    pub witness: Polynomial,
    /// κ value for κ-kind bounds.
    pub kappa: Option<usize>,
    /// Distance parameter the bound applies to.
    pub k: usize,
}

/// Ceiling with 1e−9 slack so 5.0000000001 does not round to 6.
pub fn ceil_slack(x: f64) -> usize {
    let c = (x - 1e-9).ceil();
    if c < 1.0 {
        1
    } else {
        c as usize
    }
}

/// Relative slack used for all threshold tests involving p(λ_1).
fn slack(p_lambda1: f64) -> f64 {
    1e-9 * p_lambda1.abs().max(1.0)
}

/// Check the Theorem 3.3 hypothesis p(λ_1) ≥ Λ(p).
fn check_hypothesis(params: &SpectralParams) -> Result<()> {
    if params.p_lambda1 < params.big_lambda - slack(params.p_lambda1) {
        return Err(Error::Hypothesis(format!(
            "p(lambda_1) = {} < Lambda(p) = {}",
            params.p_lambda1, params.big_lambda
        )));
    }
    Ok(())
}

/// The classical Hoffman bound χ(G) ≥ 1 − λ_1/λ_n.
pub fn hoffman_bound(spec: &Spectrum) -> Result<BoundReport> {
    let lam1 = spec.lambda1();
    let lamn = *spec.eigenvalues.last().expect("non-empty spectrum");
    if lamn >= 0.0 {
        return Err(Error::Degenerate(format!(
            "Hoffman bound needs lambda_n < 0, got {lamn} (empty graph?)"
        )));
    }
    let raw = 1.0 - lam1 / lamn;
    Ok(BoundReport {
        kind: BoundKind::Hoffman,
        raw,
        lower_bound: ceil_slack(raw),
        witness: Polynomial::x(),
        kappa: None,
        k: 1,
    })
}

/// κ(p): the smallest κ ≥ 0 with (κ+1)·W(p) ≥ p(λ_1) + Σ_{i=1}^{κ} of the κ
/// smallest values among {p(λ_i) : i ∈ [2, n]}. Requires the hypothesis
/// p(λ_1) ≥ Λ(p); the threshold test accepts with 1e−9-relative slack only
/// (slack can weaken the resulting bound, never overstate it).
pub fn kappa_of(p: &Polynomial, g: &Graph, spec: &Spectrum) -> Result<usize> {
    let params = spectral_params(g, p, spec);
    kappa_from_params(&params, g.n())
}

/// As [`kappa_of`] but from precomputed spectral parameters.
pub fn kappa_from_params(params: &SpectralParams, n: usize) -> Result<usize> {
    check_hypothesis(params)?;
    let eps = slack(params.p_lambda1);
    let mut ascending: Vec<f64> = params.images[1..].to_vec();
    ascending.sort_by(f64::total_cmp);
    let mut sum = params.p_lambda1;
    for kappa in 0..n {
        if sum <= (kappa as f64 + 1.0) * params.big_w + eps {
            return Ok(kappa);
        }
        if kappa < n - 1 {
            sum += ascending[kappa];
        }
    }
    // The trace argument guarantees the inequality holds by κ = n−1.
    Ok(n - 1)
}

/// Unified κ bound: χ_kq(G) ≥ κ(p) + 1 for any p of degree ≤ k with
/// p(λ_1) ≥ Λ(p).
pub fn unified_kappa_bound(g: &Graph, p: &Polynomial, spec: &Spectrum, k: usize) -> Result<BoundReport> {
    assert!(p.degree_bound() <= k, "polynomial degree exceeds distance parameter");
    let kappa = kappa_of(p, g, spec)?;
    Ok(BoundReport {
        kind: BoundKind::UnifiedKappa,
        raw: (kappa + 1) as f64,
        lower_bound: kappa + 1,
        witness: p.clone(),
        kappa: Some(kappa),
        k,
    })
}

/// Hoffman-type bound: χ_k(G) ≥ (p(λ_1) − λ(p)) / (W(p) − λ(p)).
pub fn hoffman_type_bound(g: &Graph, p: &Polynomial, spec: &Spectrum, k: usize) -> Result<BoundReport> {
    let params = spectral_params(g, p, spec);
    check_hypothesis(&params)?;
    let denom = params.big_w - params.small_lambda;
    if denom.abs() <= 1e-12 * params.p_lambda1.abs().max(1.0) {
        return Err(Error::Degenerate("W(p) = lambda(p): Hoffman-type denominator vanishes".into()));
    }
    let raw = (params.p_lambda1 - params.small_lambda) / denom;
    Ok(BoundReport {
        kind: BoundKind::HoffmanType,
        raw,
        lower_bound: ceil_slack(raw),
        witness: p.clone(),
        kappa: None,
        k,
    })
}

/// Vector chromatic bound: χ_kv(G) ≥ (p(λ_1) − λ(p)) / (R(p) − λ(p)).
pub fn vector_r_bound(g: &Graph, p: &Polynomial, spec: &Spectrum, k: usize) -> Result<BoundReport> {
    let params = spectral_params(g, p, spec);
    let denom = params.r_p - params.small_lambda;
    if denom.abs() <= 1e-12 * params.p_lambda1.abs().max(1.0) {
        return Err(Error::Degenerate("R(p) = lambda(p): vector bound denominator vanishes".into()));
    }
    let raw = (params.p_lambda1 - params.small_lambda) / denom;
    Ok(BoundReport {
        kind: BoundKind::VectorR,
        raw,
        lower_bound: ceil_slack(raw),
        witness: p.clone(),
        kappa: None,
        k,
    })
}

/// The classical κ bound (Theorem 1.1): χ(G) ≥ 1 + κ with p = x.
pub fn classic_kappa_bound(g: &Graph, spec: &Spectrum) -> Result<BoundReport> {
    let p = Polynomial::x();
    let kappa = kappa_of(&p, g, spec)?;
    Ok(BoundReport {
        kind: BoundKind::ClassicKappa,
        raw: (kappa + 1) as f64,
        lower_bound: kappa + 1,
        witness: p,
        kappa: Some(kappa),
        k: 1,
    })
}
