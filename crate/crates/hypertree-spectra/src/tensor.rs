//! Floating-point adjacency-tensor application, NQZ power iteration for the
//! spectral radius, residual certification and the Perron-vector quotient
//! identities.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::hypergraph::Hypergraph;
use crate::matching::matching_polynomial;
use crate::poly::rational_to_f64;
use crate::spectrum::spectral_radius_exact;
use num_rational::BigRational;

#[derive(Clone, Debug)]
pub struct EigenPair {
    pub lambda: f64,
    /// Strictly positive, normalized to max entry 1, indexed in vertex order.
    pub x: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

fn vertex_index(h: &Hypergraph) -> BTreeMap<usize, usize> {
    h.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect()
}

/// y_v = sum over edges at v of the product of the other k-1 coordinates.
/// Summation order is fixed (edges sorted, then vertices) so serial results
/// are bit-deterministic.
pub fn apply_adjacency(h: &Hypergraph, x: &[f64]) -> Result<Vec<f64>, Error> {
    if x.len() != h.vertex_count() {
        return Err(Error::Degenerate(format!(
            "vector length {} != vertex count {}",
            x.len(),
            h.vertex_count()
        )));
    }
    let index = vertex_index(h);
    let mut y = vec![0.0; x.len()];
    for e in h.edges() {
        for &v in e {
            let mut prod = 1.0;
            for &w in e {
                if w != v {
                    prod *= x[index[&w]];
                }
            }
            y[index[&v]] += prod;
        }
    }
    Ok(y)
}

/// Max-norm eigen-equation defect max_v |lambda x_v^(k-1) - y_v|.
pub fn residual(h: &Hypergraph, lambda: f64, x: &[f64]) -> Result<f64, Error> {
    let y = apply_adjacency(h, x)?;
    let k = h.k();
    Ok(x.iter()
        .zip(&y)
        .map(|(xv, yv)| (lambda * xv.powi(k as i32 - 1) - yv).abs())
        .fold(0.0, f64::max))
}

/// NQZ power iteration from the all-ones start: monotone ratio bounds
/// converge to the spectral radius of a connected hypergraph.
pub fn nqz_spectral_radius(
    h: &Hypergraph,
    tol: f64,
    max_iter: usize,
) -> Result<EigenPair, Error> {
    if !h.is_connected() || h.edge_count() == 0 {
        return Err(Error::Disconnected);
    }
    let n = h.vertex_count();
    let k1 = h.k() as f64 - 1.0;
    let mut x = vec![1.0; n];
    let mut upper = f64::INFINITY;
    let mut lower = 0.0f64;
    for iter in 1..=max_iter {
        let y = apply_adjacency(h, &x)?;
        let ratios: Vec<f64> = x
            .iter()
            .zip(&y)
            .map(|(xv, yv)| yv / xv.powf(k1))
            .collect();
        let hi = ratios.iter().copied().fold(f64::MIN, f64::max);
        let lo = ratios.iter().copied().fold(f64::MAX, f64::min);
        // bounds are monotone: upper non-increasing, lower non-decreasing
        upper = upper.min(hi);
        lower = lower.max(lo);
        if upper - lower < tol {
            let lambda = (lower * upper).sqrt();
            let max = x.iter().copied().fold(f64::MIN, f64::max);
            let x: Vec<f64> = x.iter().map(|v| v / max).collect();
            let residual = residual(h, lambda, &x)?;
            return Ok(EigenPair {
                lambda,
                x,
                residual,
                iterations: iter,
            });
        }
        // x <- normalize(y^(1/(k-1)))
        let mut next: Vec<f64> = y.iter().map(|v| v.powf(1.0 / k1)).collect();
        let max = next.iter().copied().fold(f64::MIN, f64::max);
        for v in &mut next {
            *v /= max;
        }
        x = next;
    }
    Err(Error::NoConvergence {
        iters: max_iter,
        lo: lower,
        hi: upper,
    })
}

#[derive(Clone, Debug)]
pub struct EdgeIdentity {
    pub edge: Vec<usize>,
    /// Perron product prod_{w in e \ u} x_w with x rescaled so x_u = 1.
    pub perron_product: f64,
    /// phi_{T-e}(rho) / phi_{T-u}(rho) evaluated exactly at the rational
    /// midpoint of the isolating interval.
    pub quotient: f64,
    pub defect: f64,
}

#[derive(Clone, Debug)]
pub struct PerronIdentityReport {
    pub vertex: usize,
    pub rho: f64,
    pub edges: Vec<EdgeIdentity>,
    /// |rho - sum of the per-edge products|.
    pub closure_defect: f64,
    pub passed: bool,
}

/// Checks the Perron-vector quotient identities at the vertex u: each edge
/// product equals phi_{T-e}(rho)/phi_{T-u}(rho), and the products sum to rho.
pub fn perron_identity_check(
    t: &Hypergraph,
    u: usize,
    tol: f64,
) -> Result<PerronIdentityReport, Error> {
    if !t.is_hypertree() {
        return Err(Error::NotHypertree);
    }
    if !t.has_vertex(u) {
        return Err(Error::UnknownVertex(u));
    }
    let pair = nqz_spectral_radius(t, tol * 1e-4, 100_000)?;
    let mut interval = spectral_radius_exact(t, &crate::spectrum::default_width())?;
    interval.refine(&crate::spectrum::width(12));
    let rho_exact: BigRational = interval.midpoint();
    let index = vertex_index(t);
    let xu = pair.x[index[&u]];
    let phi_minus_u = matching_polynomial(&t.delete_vertex(u)?)?.polynomial;
    let denom = phi_minus_u.eval(&rho_exact);
    if rational_to_f64(&denom).abs() < 1e-12 {
        return Err(Error::NearZeroDenominator);
    }
    let mut edges = Vec::new();
    let mut sum = 0.0;
    for e in t.incident_edges(u) {
        let e = e.clone();
        let mut prod = 1.0;
        for &w in &e {
            if w != u {
                prod *= pair.x[index[&w]];
            }
        }
        // rescale so x_u = 1
        let prod = prod / xu.powi(t.k() as i32 - 1);
        let phi_minus_e = matching_polynomial(&t.remove_edge_induced(&e)?)?.polynomial;
        let quotient = rational_to_f64(&(phi_minus_e.eval(&rho_exact) / &denom));
        sum += prod;
        edges.push(EdgeIdentity {
            defect: (prod - quotient).abs(),
            edge: e,
            perron_product: prod,
            quotient,
        });
    }
    let rho = rational_to_f64(&rho_exact);
    let closure_defect = (rho - sum).abs();
    let passed = edges.iter().all(|e| e.defect < tol) && closure_defect < tol;
    Ok(PerronIdentityReport {
        vertex: u,
        rho,
        edges,
        closure_defect,
        passed,
    })
}
