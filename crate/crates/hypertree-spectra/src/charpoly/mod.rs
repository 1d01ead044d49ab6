//! Independent exact computation of the characteristic polynomial of a
//! hypergraph adjacency tensor: rational-point evaluation through quotient
//! rings and multiplication-matrix determinants, interpolation, square-free
//! decomposition and multiplicity extraction.

pub mod groebner;
pub mod multipoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::Error;
use crate::hypergraph::Hypergraph;
use crate::poly::{interpolate, sturm_chain, RootInterval, UniPoly};
use crate::spectrum::{default_width, spectral_radius_exact};
use groebner::{determinant, multiplication_matrix, quotient_ring, GroebnerOutcome};
use multipoly::{Monomial, MultiPoly};

pub const DEFAULT_DEGREE_GUARD: u64 = 500;

#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub degree_guard: u64,
    /// Abort when more than this fraction of attempted sample points is bad.
    pub max_bad_fraction: f64,
    pub parallel: bool,
    pub extra_consistency_points: usize,
    /// Soft guard: abort the run when a single point evaluation exceeds this.
    pub timeout_per_point_ms: Option<u64>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            degree_guard: DEFAULT_DEGREE_GUARD,
            max_bad_fraction: 0.5,
            parallel: true,
            extra_consistency_points: 0,
            timeout_per_point_ms: None,
        }
    }
}

/// The eigen-system f_v for v in V \ {u} at a fixed rational lambda, with
/// x_u substituted by 1. Returns the polynomials and the variable roster.
pub fn eigen_system(
    h: &Hypergraph,
    lambda: &BigRational,
    u: usize,
) -> (Vec<MultiPoly>, Vec<usize>) {
    let roster: Vec<usize> = h.vertices().iter().copied().filter(|&v| v != u).collect();
    let index: BTreeMap<usize, usize> = roster.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nvars = roster.len();
    let k = h.k();
    let mut system = Vec::with_capacity(nvars);
    for &v in &roster {
        let mut f = MultiPoly::zero(nvars);
        f.add_term(
            Monomial(monomial_power(nvars, index[&v], (k - 1) as u32)),
            lambda.clone(),
        );
        for e in h.incident_edges(v) {
            let mut exps = vec![0u32; nvars];
            for &w in e {
                if w != v && w != u {
                    exps[index[&w]] += 1;
                }
            }
            f.add_term(Monomial(exps), -BigRational::one());
        }
        system.push(f);
    }
    (system, roster)
}

fn monomial_power(nvars: usize, i: usize, e: u32) -> Vec<u32> {
    let mut v = vec![0u32; nvars];
    v[i] = e;
    v
}

/// f_u = lambda - sum over edges at u of the product of the other k-1
/// variables (x_u = 1).
fn pivot_polynomial(
    h: &Hypergraph,
    lambda: &BigRational,
    u: usize,
    roster: &[usize],
) -> MultiPoly {
    let index: BTreeMap<usize, usize> = roster.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nvars = roster.len();
    let mut f = MultiPoly::constant(nvars, lambda.clone());
    for e in h.incident_edges(u) {
        let mut exps = vec![0u32; nvars];
        for &w in e {
            if w != u {
                exps[index[&w]] += 1;
            }
        }
        f.add_term(Monomial(exps), -BigRational::one());
    }
    f
}

/// Value of the characteristic polynomial at one rational point, or the
/// reason the point must be skipped. `dimension` is the quotient dimension
/// observed at the outermost Poisson step.
pub enum PointValue {
    Good {
        value: BigRational,
        dimension: usize,
    },
    Bad(String),
}

/// Expected quotient dimension (k-1)^(n-1) at the outermost step.
pub fn expected_dimension(k: usize, n: usize) -> BigInt {
    BigInt::from(k as u64 - 1).pow(n as u32 - 1)
}

/// Characteristic-polynomial value at lambda via the Poisson recursion:
/// disjoint unions split multiplicatively with resultant block exponents,
/// a single vertex contributes lambda, and a connected piece reduces by
/// value(H - u)^(k-1) * det(m_{f_u}) on the quotient ring at u.
pub fn charpoly_value(h: &Hypergraph, lambda: &BigRational) -> PointValue {
    match charpoly_value_inner(h, lambda) {
        Ok((value, dimension)) => PointValue::Good { value, dimension },
        Err(reason) => PointValue::Bad(reason),
    }
}

fn charpoly_value_inner(
    h: &Hypergraph,
    lambda: &BigRational,
) -> Result<(BigRational, usize), String> {
    let n = h.vertex_count();
    if n == 0 {
        return Ok((BigRational::one(), 0));
    }
    let components = h.connected_components();
    if components.len() > 1 {
        let k = h.k() as u64;
        let mut value = BigRational::one();
        let mut dim = 0usize;
        for comp in &components {
            let (v, d) = charpoly_value_inner(comp, lambda)?;
            let exponent = (k - 1).pow((n - comp.vertex_count()) as u32);
            if v.is_zero() {
                // zero to a positive power: the product is zero
                return Ok((BigRational::zero(), d));
            }
            value *= pow_rational(&v, exponent);
            dim = dim.max(d);
        }
        return Ok((value, dim));
    }
    if n == 1 && h.edge_count() == 0 {
        return Ok((lambda.clone(), 1));
    }
    let u = h.max_degree_vertex().expect("nonempty hypergraph");
    let (sub_value, _) = charpoly_value_inner(&h.delete_vertex(u).expect("vertex exists"), lambda)?;
    if sub_value.is_zero() {
        // Poisson requires Res of the leading forms, i.e. the value on H - u,
        // to be nonzero
        return Err(format!("vanishing reduced resultant at pivot {}", u));
    }
    let (system, roster) = eigen_system(h, lambda, u);
    let q = match quotient_ring(&system, roster.len()) {
        GroebnerOutcome::ZeroDimensional(q) => q,
        GroebnerOutcome::BadPoint(msg) => return Err(msg),
    };
    let expected = expected_dimension(h.k(), n);
    if BigInt::from(q.dimension()) != expected {
        return Err(format!(
            "quotient dimension {} != expected {}",
            q.dimension(),
            expected
        ));
    }
    let f_u = pivot_polynomial(h, lambda, u, &roster);
    let det = determinant(&multiplication_matrix(&q, &f_u));
    let value = pow_rational(&sub_value, h.k() as u64 - 1) * det;
    Ok((value, q.dimension()))
}

fn pow_rational(v: &BigRational, e: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = v.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * &base;
        }
    }
    acc
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SampleRecord {
    pub lambda: String,
    pub value: Option<String>,
    pub skipped: Option<String>,
    pub dimension: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct CharPolyResult {
    pub polynomial: UniPoly,
    pub degree: u64,
    pub leading_coefficient: BigInt,
    pub sample_log: Vec<SampleRecord>,
}

/// Sample schedule 1, -1, 2, -2, ... (zero excluded: it degenerates the
/// leading forms and is guaranteed bad).
fn schedule(i: usize) -> BigRational {
    let v = (i / 2 + 1) as i64;
    let s = if i.is_multiple_of(2) { v } else { -v };
    BigRational::from_integer(BigInt::from(s))
}

pub fn charpoly_degree(h: &Hypergraph) -> BigInt {
    let n = h.vertex_count();
    if n == 0 {
        return BigInt::zero();
    }
    BigInt::from(n as u64) * BigInt::from(h.k() as u64 - 1).pow(n as u32 - 1)
}

/// Full evaluation-interpolation oracle: samples good points until
/// degree + 1 values are collected, interpolates exactly, and asserts
/// integrality, monicity and the exact degree n(k-1)^(n-1).
pub fn charpoly(h: &Hypergraph, config: &OracleConfig) -> Result<CharPolyResult, Error> {
    h.validate()?;
    let degree_big = charpoly_degree(h);
    let guard = BigInt::from(config.degree_guard);
    if degree_big > guard {
        let degree = u64::try_from(&degree_big).unwrap_or(u64::MAX);
        return Err(Error::DegreeGuard {
            degree,
            guard: config.degree_guard,
        });
    }
    let degree = u64::try_from(&degree_big).expect("guard-checked degree fits u64");
    let needed = degree as usize + 1;

    let mut log: Vec<SampleRecord> = Vec::new();
    let mut good: Vec<(BigRational, BigRational)> = Vec::new();
    let mut next = 0usize;
    let mut bad = 0usize;
    while good.len() < needed {
        let batch: Vec<usize> = (next..next + (needed - good.len())).collect();
        next = batch.last().unwrap() + 1;
        let eval_one = |i: usize| {
            let l = schedule(i);
            let start = std::time::Instant::now();
            let v = charpoly_value(h, &l);
            (l, v, start.elapsed().as_millis() as u64)
        };
        let evaluated: Vec<(BigRational, PointValue, u64)> = if config.parallel {
            batch.par_iter().map(|&i| eval_one(i)).collect()
        } else {
            batch.iter().map(|&i| eval_one(i)).collect()
        };
        if let Some(limit) = config.timeout_per_point_ms {
            if let Some(slow) = evaluated.iter().map(|(_, _, ms)| *ms).max() {
                if slow > limit {
                    return Err(Error::Timeout(slow));
                }
            }
        }
        let evaluated: Vec<(BigRational, PointValue)> =
            evaluated.into_iter().map(|(l, v, _)| (l, v)).collect();
        for (l, outcome) in evaluated {
            match outcome {
                PointValue::Good { value, dimension } => {
                    log.push(SampleRecord {
                        lambda: l.to_string(),
                        value: Some(value.to_string()),
                        skipped: None,
                        dimension: Some(dimension),
                    });
                    good.push((l, value));
                }
                PointValue::Bad(reason) => {
                    bad += 1;
                    log.push(SampleRecord {
                        lambda: l.to_string(),
                        value: None,
                        skipped: Some(reason),
                        dimension: None,
                    });
                }
            }
        }
        let attempts = good.len() + bad;
        if attempts >= 8 && (bad as f64) > config.max_bad_fraction * attempts as f64 {
            return Err(Error::TooManyBadPoints { bad, attempts });
        }
    }
    let poly = interpolate(&good)?;
    if !poly.is_integral() {
        return Err(Error::Degenerate(
            "interpolated characteristic polynomial is not integral".into(),
        ));
    }
    if poly.degree() != Some(degree as usize) || !poly.leading().is_one() {
        return Err(Error::Degenerate(format!(
            "interpolated polynomial has degree {:?}, leading {}; expected monic degree {}",
            poly.degree(),
            poly.leading(),
            degree
        )));
    }
    // optional consistency check at fresh points
    for j in 0..config.extra_consistency_points {
        let l = schedule(next + j);
        if let PointValue::Good { value, .. } = charpoly_value(h, &l) {
            if poly.eval(&l) != value {
                return Err(Error::Degenerate(format!(
                    "consistency failure at lambda = {}",
                    l
                )));
            }
        }
    }
    Ok(CharPolyResult {
        polynomial: poly,
        degree,
        leading_coefficient: BigInt::one(),
        sample_log: log,
    })
}

/// Multiplicity of the root isolated by `rho` in the square-free
/// decomposition of the characteristic polynomial.
pub fn algebraic_multiplicity(c: &CharPolyResult, rho: &RootInterval) -> Result<usize, Error> {
    let decomposition = c.polynomial.squarefree_decomposition();
    let chains: Vec<_> = decomposition
        .iter()
        .map(|(g, _)| sturm_chain(g))
        .collect();
    let mut rho = rho.clone();
    for _ in 0..256 {
        let holders: Vec<usize> = decomposition
            .iter()
            .enumerate()
            .filter(|(i, _)| crate::poly::count_roots(&chains[*i], &rho.lo, &rho.hi) >= 1)
            .map(|(i, _)| i)
            .collect();
        match holders.len() {
            0 => return Err(Error::NoFactorContainsRoot),
            1 => return Ok(decomposition[holders[0]].1),
            _ => {
                let w = rho.width() / BigRational::from_integer(BigInt::from(2));
                rho.refine(&w);
            }
        }
    }
    Err(Error::NoFactorContainsRoot)
}

#[derive(Clone, Debug)]
pub struct MultiplicityReport {
    pub charpoly: CharPolyResult,
    pub squarefree: Vec<(UniPoly, usize)>,
    pub rho: RootInterval,
    pub measured_am: usize,
    pub predicted_am: BigInt,
    pub matched: bool,
}

/// Predicted algebraic multiplicity k^(m(k-2)).
pub fn predicted_multiplicity(k: usize, m: usize) -> BigInt {
    BigInt::from(k as u64).pow((m * (k - 2)) as u32)
}

/// Full pipeline: oracle characteristic polynomial, exact spectral radius
/// from the matching polynomial, measured multiplicity, and the comparison
/// against k^(m(k-2)).
pub fn verify_hypertree_multiplicity(
    t: &Hypergraph,
    config: &OracleConfig,
) -> Result<MultiplicityReport, Error> {
    if !t.is_hypertree() {
        return Err(Error::NotHypertree);
    }
    if t.edge_count() == 0 {
        return Err(Error::Degenerate(
            "edgeless hypertree: spectral radius 0 is the full lambda factor".into(),
        ));
    }
    let c = charpoly(t, config)?;
    let rho = spectral_radius_exact(t, &default_width())?;
    let measured = algebraic_multiplicity(&c, &rho)?;
    let predicted = predicted_multiplicity(t.k(), t.edge_count());
    let matched = BigInt::from(measured) == predicted;
    let squarefree = c.polynomial.squarefree_decomposition();
    Ok(MultiplicityReport {
        charpoly: c,
        squarefree,
        rho,
        measured_am: measured,
        predicted_am: predicted,
        matched,
    })
}

#[derive(Clone, Debug)]
pub struct PendantGrowthReport {
    pub base: MultiplicityReport,
    pub extended: MultiplicityReport,
    pub ratio_expected: BigInt,
    pub matched: bool,
}

/// Attach a pendant edge at u (k-1 fresh vertices).
pub fn with_pendant_edge(t: &Hypergraph, u: usize) -> Result<Hypergraph, Error> {
    if !t.has_vertex(u) {
        return Err(Error::UnknownVertex(u));
    }
    let next = t.vertices().iter().max().map_or(0, |&v| v + 1);
    let mut vertices = t.vertices().to_vec();
    let mut edge = vec![u];
    for i in 0..t.k() - 1 {
        vertices.push(next + i);
        edge.push(next + i);
    }
    let mut edges = t.edges().to_vec();
    edges.push(edge);
    Hypergraph::new(t.k(), vertices, edges)
}

/// Measured am must multiply by exactly k^(k-2) when a pendant edge is
/// added at u.
pub fn pendant_growth_check(
    t: &Hypergraph,
    u: usize,
    config: &OracleConfig,
) -> Result<PendantGrowthReport, Error> {
    if t.edge_count() == 0 {
        return Err(Error::Degenerate(
            "pendant growth from an edgeless hypertree is skipped".into(),
        ));
    }
    let base = verify_hypertree_multiplicity(t, config)?;
    let extended = verify_hypertree_multiplicity(&with_pendant_edge(t, u)?, config)?;
    let ratio_expected = BigInt::from(t.k() as u64).pow((t.k() - 2) as u32);
    let matched = BigInt::from(extended.measured_am)
        == &ratio_expected * BigInt::from(base.measured_am);
    Ok(PendantGrowthReport {
        base,
        extended,
        ratio_expected,
        matched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{loose_path, single_edge, Hypergraph};

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn eigen_system_single_edge() {
        let h = single_edge(3).unwrap();
        let (system, roster) = eigen_system(&h, &r(2), 2);
        assert_eq!(roster, vec![0, 1]);
        // {2 x0^2 - x1, 2 x1^2 - x0}
        let mut f0 = MultiPoly::zero(2);
        f0.add_term(Monomial(vec![2, 0]), r(2));
        f0.add_term(Monomial(vec![0, 1]), r(-1));
        let mut f1 = MultiPoly::zero(2);
        f1.add_term(Monomial(vec![0, 2]), r(2));
        f1.add_term(Monomial(vec![1, 0]), r(-1));
        assert_eq!(system, vec![f0, f1]);
    }

    #[test]
    fn eigen_system_isolated_only() {
        let h = Hypergraph::new(3, vec![0], vec![]).unwrap();
        let (system, roster) = eigen_system(&h, &r(5), 0);
        assert!(system.is_empty() && roster.is_empty());
    }

    #[test]
    fn eigen_system_loose_path() {
        let h = loose_path(3, 2).unwrap();
        let (system, roster) = eigen_system(&h, &r(1), 4);
        assert_eq!(roster, vec![0, 1, 2, 3]);
        assert_eq!(system.len(), 4);
        // far-edge polynomials for vertices 2 and 3 contain the substituted 1:
        // f_2 has the term -x3 (from edge {2,3,4} with x4 = 1)
        let f2 = &system[2];
        assert!(f2.terms.contains_key(&Monomial(vec![0, 0, 0, 1])));
    }

    #[test]
    fn value_examples() {
        let h = single_edge(3).unwrap();
        // phi(lambda) = lambda^3 (lambda^3 - 1)^3 at 2: 8 * 343 = 2744
        match charpoly_value(&h, &r(2)) {
            PointValue::Good { value, dimension } => {
                assert_eq!(value, r(2744));
                assert_eq!(dimension, 4);
            }
            PointValue::Bad(msg) => panic!("{}", msg),
        }
        // rho = 1 is a root
        match charpoly_value(&h, &r(1)) {
            PointValue::Good { value, .. } => assert_eq!(value, r(0)),
            PointValue::Bad(msg) => panic!("{}", msg),
        }
        // single vertex base case
        let point = Hypergraph::new(3, vec![0], vec![]).unwrap();
        match charpoly_value(&point, &r(5)) {
            PointValue::Good { value, .. } => assert_eq!(value, r(5)),
            PointValue::Bad(msg) => panic!("{}", msg),
        }
    }

    #[test]
    fn charpoly_single_edge() {
        let h = single_edge(3).unwrap();
        let c = charpoly(&h, &OracleConfig::default()).unwrap();
        assert_eq!(c.degree, 12);
        // lambda^3 (lambda^3 - 1)^3 expanded
        let expected = UniPoly::from_ints(&[0, 0, 0, 1])
            .mul(&UniPoly::from_ints(&[-1, 0, 0, 1]).pow(3));
        assert_eq!(c.polynomial, expected);
        // extra evaluation identity at fresh points
        for l in [4i64, -5, 7] {
            match charpoly_value(&h, &r(l)) {
                PointValue::Good { value, .. } => assert_eq!(c.polynomial.eval(&r(l)), value),
                PointValue::Bad(msg) => panic!("{}", msg),
            }
        }
    }

    #[test]
    fn charpoly_single_vertex() {
        let point = Hypergraph::new(3, vec![0], vec![]).unwrap();
        let c = charpoly(&point, &OracleConfig::default()).unwrap();
        assert_eq!(c.polynomial, UniPoly::from_ints(&[0, 1]));
    }

    #[test]
    fn degree_guard() {
        let h = loose_path(3, 3).unwrap(); // degree 7 * 2^6 = 448
        let config = OracleConfig {
            degree_guard: 400,
            ..OracleConfig::default()
        };
        assert!(matches!(
            charpoly(&h, &config),
            Err(Error::DegreeGuard { degree: 448, guard: 400 })
        ));
    }

    #[test]
    fn multiplicity_synthetic() {
        // (x-1)^9 (x+1) around 1 gives multiplicity 9
        let p = UniPoly::from_ints(&[-1, 1]).pow(9).mul(&UniPoly::from_ints(&[1, 1]));
        let c = CharPolyResult {
            degree: 10,
            leading_coefficient: BigInt::one(),
            sample_log: vec![],
            polynomial: p,
        };
        let iv = RootInterval {
            lo: BigRational::new(BigInt::from(9), BigInt::from(10)),
            hi: BigRational::new(BigInt::from(11), BigInt::from(10)),
            poly: UniPoly::from_ints(&[-1, 1]),
        };
        assert_eq!(algebraic_multiplicity(&c, &iv).unwrap(), 9);
    }

    #[test]
    fn verify_single_edge_k3() {
        let report =
            verify_hypertree_multiplicity(&single_edge(3).unwrap(), &OracleConfig::default())
                .unwrap();
        assert_eq!(report.measured_am, 3);
        assert_eq!(report.predicted_am, BigInt::from(3));
        assert!(report.matched);
    }

    #[test]
    fn determinism_under_sampling() {
        let h = single_edge(3).unwrap();
        let serial = OracleConfig {
            parallel: false,
            ..OracleConfig::default()
        };
        let a = charpoly(&h, &OracleConfig::default()).unwrap();
        let b = charpoly(&h, &serial).unwrap();
        assert_eq!(a.polynomial, b.polynomial);
    }
}
