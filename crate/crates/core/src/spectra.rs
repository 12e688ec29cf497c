//! Symmetric eigendecomposition (cyclic Jacobi), matrix polynomials and the
//! spectral parameters W(p), w(p), Λ(p), λ(p), R(p).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default eigenvector residual tolerance.
pub const DEFAULT_EIGEN_TOL: f64 = 1e-8;

/// Maximum number of cyclic Jacobi sweeps before giving up.
const MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a connected graph's adjacency matrix.
#[derive(Clone, Debug)]
pub struct Spectrum {
    /// All eigenvalues, sorted descending (λ_1 ≥ … ≥ λ_n).
    pub eigenvalues: Vec<f64>,
    /// Distinct eigenvalues θ_0 > … > θ_d with multiplicities.
    pub distinct: Vec<(f64, usize)>,
    /// Unit-norm Perron eigenvector (all entries strictly positive).
    pub perron: Vec<f64>,
    /// Residual tolerance the decomposition was computed to.
    pub residual_tol: f64,
}

impl Spectrum {
    /// Largest eigenvalue λ_1.
    pub fn lambda1(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Number of distinct non-principal eigenvalues (d in θ_0..θ_d).
    pub fn d(&self) -> usize {
        self.distinct.len() - 1
    }
}

/// A real polynomial a_0 + a_1 x + … + a_k x^k stored by coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    /// Coefficients a_0..a_k (a_j multiplies x^j).
    pub coefficients: Vec<f64>,
}

impl Polynomial {
    pub fn new(coefficients: Vec<f64>) -> Self {
        assert!(!coefficients.is_empty(), "polynomial needs at least one coefficient");
        Polynomial { coefficients }
    }

    /// The monomial x.
    pub fn x() -> Self {
        Polynomial::new(vec![0.0, 1.0])
    }

    /// Degree bound k (length − 1; trailing zeros are not stripped).
    pub fn degree_bound(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Horner evaluation at a scalar.
    pub fn eval(&self, x: f64) -> f64 {
        let mut r = 0.0;
        for &c in self.coefficients.iter().rev() {
            r = r * x + c;
        }
        r
    }
}

/// Eigendecompose the adjacency matrix of a connected graph with cyclic
/// Jacobi rotations. `tol` bounds the per-pair eigenvector residuals.
pub fn eigendecompose(g: &Graph, tol: f64) -> Result<Spectrum> {
    assert!(tol > 0.0, "tolerance must be positive");
    if !g.is_connected() {
        return Err(Error::Disconnected("eigendecompose"));
    }
    let n = g.n();
    let mut a = g.adjacency_matrix();
    let norm_a = frobenius(&a, n);
    // Eigenvector matrix, columns are eigenvectors.
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let target = 1e-12 * norm_a.max(1e-300);
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_frobenius(&a, n);
        if off <= target || n == 1 {
            break;
        }
        if sweeps >= MAX_SWEEPS {
            return Err(Error::EigenNonConvergence { residual: off, sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                jacobi_rotate(&mut a, &mut v, n, p, q);
            }
        }
    }

    // Extract and sort eigenpairs descending by eigenvalue.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].partial_cmp(&a[i * n + i]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let mut perron: Vec<f64> = (0..n).map(|r| v[r * n + order[0]]).collect();
    // Sign-normalize so the max-magnitude entry is positive, then check
    // Perron positivity (guaranteed for connected graphs).
    let mut max_idx = 0;
    for (i, &x) in perron.iter().enumerate() {
        if x.abs() > perron[max_idx].abs() {
            max_idx = i;
        }
    }
    if perron[max_idx] < 0.0 {
        for x in &mut perron {
            *x = -*x;
        }
    }
    debug_assert!(perron.iter().all(|&x| x > 0.0), "Perron vector must be positive");

    // Group distinct eigenvalues with a relative gap threshold.
    let gap = 1e-8 * norm_a.max(1.0);
    let mut distinct: Vec<(f64, usize)> = Vec::new();
    for &val in &eigenvalues {
        match distinct.last_mut() {
            Some((theta, mult)) if (*theta - val).abs() <= gap => *mult += 1,
            _ => distinct.push((val, 1)),
        }
    }
    Ok(Spectrum { eigenvalues, distinct, perron, residual_tol: tol })
}

fn frobenius(a: &[f64], n: usize) -> f64 {
    a.iter().take(n * n).map(|x| x * x).sum::<f64>().sqrt()
}

fn off_diagonal_frobenius(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// One Jacobi rotation annihilating entry (p, q), updating A and V.
fn jacobi_rotate(a: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    let t = if theta >= 0.0 {
        1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for i in 0..n {
        let aip = a[i * n + p];
        let aiq = a[i * n + q];
        a[i * n + p] = c * aip - s * aiq;
        a[i * n + q] = s * aip + c * aiq;
    }
    for j in 0..n {
        let apj = a[p * n + j];
        let aqj = a[q * n + j];
        a[p * n + j] = c * apj - s * aqj;
        a[q * n + j] = s * apj + c * aqj;
    }
    for i in 0..n {
        let vip = v[i * n + p];
        let viq = v[i * n + q];
        v[i * n + p] = c * vip - s * viq;
        v[i * n + q] = s * vip + c * viq;
    }
}

/// Evaluate p(A) by Horner's rule on matrices (so integral coefficients give
/// exactly integral entries).
pub fn matrix_polynomial(g: &Graph, p: &Polynomial) -> Vec<f64> {
    let n = g.n();
    let a = g.adjacency_matrix();
    let k = p.degree_bound();
    // B = a_k I, then repeatedly B = A B + a_j I.
    let mut b = vec![0.0; n * n];
    for i in 0..n {
        b[i * n + i] = p.coefficients[k];
    }
    for j in (0..k).rev() {
        let mut next = mat_mul(&a, &b, n);
        for i in 0..n {
            next[i * n + i] += p.coefficients[j];
        }
        b = next;
    }
    b
}

fn mat_mul(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut c = vec![0.0; n * n];
    for i in 0..n {
        for l in 0..n {
            let ail = a[i * n + l];
            if ail == 0.0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += ail * b[l * n + j];
            }
        }
    }
    c
}

/// Diagonals of A^0..A^k, row j holding ((A^j)_{00}, …, (A^j)_{n-1,n-1}).
/// These are the data BILP 3.1 and the LP encoders consume.
pub fn diagonal_powers(g: &Graph, k: usize) -> Vec<Vec<f64>> {
    let n = g.n();
    let a = g.adjacency_matrix();
    let mut out = Vec::with_capacity(k + 1);
    out.push(vec![1.0; n]);
    let mut m = {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    };
    for _ in 0..k {
        m = mat_mul(&m, &a, n);
        out.push((0..n).map(|i| m[i * n + i]).collect());
    }
    out
}

/// The paper's spectral parameters for one (graph, polynomial) pair.
#[derive(Clone, Debug)]
pub struct SpectralParams {
    /// p(λ_1).
    pub p_lambda1: f64,
    /// W(p): maximum diagonal entry of p(A).
    pub big_w: f64,
    /// w(p): minimum diagonal entry of p(A).
    pub small_w: f64,
    /// Λ(p): maximum of p(λ_i) over i ∈ [2, n].
    pub big_lambda: f64,
    /// λ(p): minimum of p(λ_i) over i ∈ [2, n].
    pub small_lambda: f64,
    /// R(p): Perron-weighted average of the diagonal of p(A).
    pub r_p: f64,
    /// Diagonal entries p(A)_{vv}.
    pub diag: Vec<f64>,
    /// Images p(λ_i) for all i (descending eigenvalue order).
    pub images: Vec<f64>,
}

/// Compute all spectral parameters. Λ and λ range over the non-principal
/// eigenvalues only; R uses the (unit-norm) Perron weights.
pub fn spectral_params(g: &Graph, p: &Polynomial, spec: &Spectrum) -> SpectralParams {
    let pa = matrix_polynomial(g, p);
    let n = g.n();
    let diag: Vec<f64> = (0..n).map(|i| pa[i * n + i]).collect();
    let images: Vec<f64> = spec.eigenvalues.iter().map(|&l| p.eval(l)).collect();
    let big_w = diag.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let small_w = diag.iter().cloned().fold(f64::INFINITY, f64::min);
    let (big_lambda, small_lambda) = if n > 1 {
        (
            images[1..].iter().cloned().fold(f64::NEG_INFINITY, f64::max),
            images[1..].iter().cloned().fold(f64::INFINITY, f64::min),
        )
    } else {
        // Single vertex: no non-principal eigenvalues; use p(λ_1) so the
        // hypothesis p(λ_1) ≥ Λ(p) holds vacuously.
        (images[0], images[0])
    };
    let r_p: f64 = diag.iter().zip(&spec.perron).map(|(&d, &nu)| d * nu * nu).sum();
    SpectralParams {
        p_lambda1: images[0],
        big_w,
        small_w,
        big_lambda,
        small_lambda,
        r_p,
        diag,
        images,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    fn residuals_ok(g: &Graph, spec: &Spectrum) {
        // Verify λ_1/perron pair residual directly.
        let n = g.n();
        let a = g.adjacency_matrix();
        let mut res = 0.0f64;
        for i in 0..n {
            let mut av = 0.0;
            for j in 0..n {
                av += a[i * n + j] * spec.perron[j];
            }
            res += (av - spec.lambda1() * spec.perron[i]).powi(2);
        }
        assert!(res.sqrt() <= 1e-10, "perron residual {}", res.sqrt());
    }

    #[test]
    fn complete_graph_spectrum() {
        let spec = eigendecompose(&Graph::complete(6), 1e-8).unwrap();
        assert_close(spec.eigenvalues[0], 5.0, 1e-10);
        for i in 1..6 {
            assert_close(spec.eigenvalues[i], -1.0, 1e-10);
        }
        assert_eq!(spec.distinct.len(), 2);
        assert_eq!(spec.distinct[0].1, 1);
        assert_eq!(spec.distinct[1].1, 5);
        // Perron vector of K_n is uniform.
        for &x in &spec.perron {
            assert_close(x, (1.0f64 / 6.0).sqrt(), 1e-10);
        }
    }

    #[test]
    fn petersen_spectrum() {
        let g = crate::catalog::named_graph("petersen").unwrap();
        let spec = eigendecompose(&g, 1e-8).unwrap();
        // Textbook spectrum {3, 1^5, (-2)^4}.
        assert_eq!(spec.distinct.len(), 3);
        assert_close(spec.distinct[0].0, 3.0, 1e-8);
        assert_close(spec.distinct[1].0, 1.0, 1e-8);
        assert_close(spec.distinct[2].0, -2.0, 1e-8);
        assert_eq!((spec.distinct[0].1, spec.distinct[1].1, spec.distinct[2].1), (1, 5, 4));
        residuals_ok(&g, &spec);
    }

    #[test]
    fn complete_bipartite_spectrum() {
        for n in 2..=4usize {
            let spec = eigendecompose(&Graph::complete_bipartite(n, n), 1e-8).unwrap();
            assert_close(spec.eigenvalues[0], n as f64, 1e-9);
            assert_close(*spec.eigenvalues.last().unwrap(), -(n as f64), 1e-9);
            for i in 1..2 * n - 1 {
                assert_close(spec.eigenvalues[i], 0.0, 1e-9);
            }
        }
    }

    #[test]
    fn trace_identities() {
        let mut rng = crate::random::SplitMix64::new(7);
        for trial in 0..20 {
            let n = 5 + trial % 8;
            let g = loop {
                let g = crate::random::erdos_renyi(n, 0.5, rng.next_u64());
                if g.is_connected() {
                    break g;
                }
            };
            let spec = eigendecompose(&g, 1e-8).unwrap();
            let trace: f64 = spec.eigenvalues.iter().sum();
            assert!(trace.abs() <= 1e-7, "eigenvalue sum {trace}");
            // Random polynomial of degree <= 4: sum of images equals trace of p(A).
            let coeffs: Vec<f64> = (0..5).map(|_| rng.next_f64() * 4.0 - 2.0).collect();
            let p = Polynomial::new(coeffs);
            let params = spectral_params(&g, &p, &spec);
            let t1: f64 = params.diag.iter().sum();
            let t2: f64 = params.images.iter().sum();
            assert!((t1 - t2).abs() <= 1e-7, "trace identity {t1} vs {t2}");
        }
    }

    #[test]
    fn matrix_polynomial_examples() {
        // p = x reproduces the adjacency matrix.
        let g = Graph::cycle(5);
        let pa = matrix_polynomial(&g, &Polynomial::x());
        assert_eq!(pa, g.adjacency_matrix());
        // p = x^2 on the claw K_{1,3} (center 3): diagonal (1,1,1,3).
        let claw = Graph::from_edges(4, &[(0, 3), (1, 3), (2, 3)]);
        let pa = matrix_polynomial(&claw, &Polynomial::new(vec![0.0, 0.0, 1.0]));
        assert_eq!(pa[0], 1.0);
        assert_eq!(pa[3 * 4 + 3], 3.0);
        assert_eq!(pa[1], 1.0); // leaves at distance 2
        // p = x^2 - x on C_5: diagonal 2, -1 on edges, 1 at distance 2.
        let p = Polynomial::new(vec![0.0, -1.0, 1.0]);
        let pa = matrix_polynomial(&Graph::cycle(5), &p);
        for i in 0..5 {
            assert_eq!(pa[i * 5 + i], 2.0);
        }
        assert_eq!(pa[1], -1.0); // edge (0,1)
        assert_eq!(pa[2], 1.0); // distance 2 (0,2)
    }

    #[test]
    fn polynomial_sparsity() {
        // Entry (v,w) of p(A) vanishes whenever d(v,w) > deg p.
        let mut rng = crate::random::SplitMix64::new(3);
        for _ in 0..10 {
            let g = loop {
                let g = crate::random::erdos_renyi(9, 0.3, rng.next_u64());
                if g.is_connected() {
                    break g;
                }
            };
            let dist = crate::metrics::distance_matrix(&g);
            for k in 1..=3usize {
                let coeffs: Vec<f64> = (0..=k).map(|_| rng.next_f64() * 2.0 - 1.0).collect();
                let pa = matrix_polynomial(&g, &Polynomial::new(coeffs));
                for u in 0..9 {
                    for v in 0..9 {
                        if dist.get(u, v) as usize > k {
                            assert!(pa[u * 9 + v].abs() <= 1e-9);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn params_on_star_and_regular() {
        // p = x: zero diagonal everywhere.
        let g = crate::catalog::named_graph("petersen").unwrap();
        let spec = eigendecompose(&g, 1e-8).unwrap();
        let params = spectral_params(&g, &Polynomial::x(), &spec);
        assert_eq!((params.big_w, params.small_w, params.r_p), (0.0, 0.0, 0.0));
        assert_close(params.big_lambda, 1.0, 1e-8);
        assert_close(params.small_lambda, -2.0, 1e-8);
        // p = x^2 on a 3-regular graph: W = w = R = 3.
        let p2 = Polynomial::new(vec![0.0, 0.0, 1.0]);
        let params = spectral_params(&g, &p2, &spec);
        assert_close(params.big_w, 3.0, 1e-9);
        assert_close(params.small_w, 3.0, 1e-9);
        assert_close(params.r_p, 3.0, 1e-9);
        // p = x^2 on the claw: W = 3, w = 1. Perron weights are 1/2 on the
        // center and 1/6 per leaf, so R = 3*(1/2) + 1*(3*(1/6)) = 2.
        let claw = Graph::from_edges(4, &[(0, 3), (1, 3), (2, 3)]);
        let spec = eigendecompose(&claw, 1e-8).unwrap();
        let params = spectral_params(&claw, &p2, &spec);
        assert_close(params.big_w, 3.0, 1e-9);
        assert_close(params.small_w, 1.0, 1e-9);
        assert_close(params.r_p, 2.0, 1e-9);
    }

    #[test]
    fn chain_lambda_r_w() {
        // λ(p) ≤ R(p) ≤ W(p) on random connected graphs and polynomials.
        let mut rng = crate::random::SplitMix64::new(11);
        for _ in 0..50 {
            let n = 4 + (rng.next_below(6));
            let g = loop {
                let g = crate::random::erdos_renyi(n, 0.5, rng.next_u64());
                if g.is_connected() {
                    break g;
                }
            };
            let spec = eigendecompose(&g, 1e-8).unwrap();
            let deg = 1 + rng.next_below(3);
            let coeffs: Vec<f64> = (0..=deg).map(|_| rng.next_f64() * 4.0 - 2.0).collect();
            let params = spectral_params(&g, &Polynomial::new(coeffs), &spec);
            // R is a weighted average of the diagonal, so R <= W always.
            assert!(params.r_p <= params.big_w + 1e-9);
            assert!(params.small_w <= params.big_w);
            assert!(params.small_lambda <= params.big_lambda);
            // lambda(p) <= R(p) needs the hypothesis p(lambda_1) >= Lambda(p)
            // (R averages over all images including p(lambda_1)).
            if params.p_lambda1 >= params.big_lambda - 1e-9 {
                assert!(params.small_lambda <= params.r_p + 1e-9);
            }
        }
    }

    #[test]
    fn truncated_prism_eigenvalue() {
        // The catalog fixture must contain the eigenvalue (1 - sqrt 13)/2.
        let g = crate::catalog::named_graph("truncated_prism").unwrap();
        assert_eq!((g.n(), g.edge_count()), (18, 27));
        assert!((0..18).all(|v| g.degree(v) == 3));
        let spec = eigendecompose(&g, 1e-8).unwrap();
        let target = (1.0 - 13.0f64.sqrt()) / 2.0;
        assert!(
            spec.eigenvalues.iter().any(|&l| (l - target).abs() <= 1e-8),
            "missing eigenvalue {target}"
        );
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(eigendecompose(&g, 1e-8).is_err());
    }
}
