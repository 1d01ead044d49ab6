//! Matching-count vectors and matching polynomials, by brute force and by
//! the union/vertex recurrences with canonical-key memoization.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::Error;
use crate::hypergraph::Hypergraph;
use crate::poly::UniPoly;

const BRUTE_FORCE_EDGE_GUARD: usize = 20;

/// Matching counts m_0..m_M plus the matching polynomial
/// sum_t (-1)^t m_t x^(|V| - t k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingSummary {
    pub counts: Vec<u64>,
    pub vertex_count: usize,
    pub k: usize,
    pub polynomial: UniPoly,
}

impl MatchingSummary {
    fn from_counts(counts: Vec<u64>, vertex_count: usize, k: usize) -> Self {
        let mut poly = UniPoly::zero();
        for (t, &m) in counts.iter().enumerate() {
            let sign: i64 = if t % 2 == 0 { 1 } else { -1 };
            let c = BigRational::from_integer(BigInt::from(m) * sign);
            poly = poly.add(&UniPoly::monomial(c, vertex_count - t * k));
        }
        MatchingSummary {
            counts,
            vertex_count,
            k,
            polynomial: poly,
        }
    }

    fn from_polynomial(poly: UniPoly, vertex_count: usize, k: usize) -> Self {
        let mut counts = Vec::new();
        let mut t = 0usize;
        loop {
            if t * k > vertex_count {
                break;
            }
            let c = poly.coeff(vertex_count - t * k);
            let m = c.abs().numer().try_into().unwrap_or(u64::MAX);
            counts.push(m);
            t += 1;
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        MatchingSummary {
            counts,
            vertex_count,
            k,
            polynomial: poly,
        }
    }

    /// Matching number M.
    pub fn matching_number(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }
}

/// Enumerates all edge subsets and counts the pairwise-disjoint ones by size.
pub fn matching_counts_bruteforce(h: &Hypergraph) -> Result<MatchingSummary, Error> {
    let m = h.edge_count();
    if m > BRUTE_FORCE_EDGE_GUARD {
        return Err(Error::EdgeGuard(m));
    }
    let mut counts = vec![0u64; m + 1];
    'subset: for mask in 0u32..(1u32 << m) {
        let mut used: Vec<usize> = Vec::new();
        for i in 0..m {
            if mask & (1 << i) != 0 {
                for v in &h.edges()[i] {
                    if used.contains(v) {
                        continue 'subset;
                    }
                }
                used.extend(h.edges()[i].iter().copied());
            }
        }
        counts[mask.count_ones() as usize] += 1;
    }
    while counts.last() == Some(&0) && counts.len() > 1 {
        counts.pop();
    }
    Ok(MatchingSummary::from_counts(counts, h.vertex_count(), h.k()))
}

fn global_cache() -> &'static Mutex<HashMap<Vec<u8>, UniPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<u8>, UniPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Matching polynomial via the vertex recurrence
/// phi_H = x phi_{H-u} - sum_{e in E_u} phi_{H-e}, pivoting on a
/// maximum-degree vertex and memoizing on the hyperforest canonical key.
/// Falls back to brute force for non-forest inputs.
pub fn matching_polynomial(h: &Hypergraph) -> Result<MatchingSummary, Error> {
    if !h.is_hyperforest() {
        return matching_counts_bruteforce(h);
    }
    let poly = recurse(h, &mut PivotMax)?;
    Ok(MatchingSummary::from_polynomial(poly, h.vertex_count(), h.k()))
}

/// Pivot selection for the recurrence; correctness is pivot-independent.
pub trait PivotRule {
    fn pick(&mut self, h: &Hypergraph) -> usize;
}

pub struct PivotMax;
impl PivotRule for PivotMax {
    fn pick(&mut self, h: &Hypergraph) -> usize {
        h.max_degree_vertex().expect("nonempty hypergraph")
    }
}

/// Smallest-id vertex with positive degree; used by the pivot-independence test.
pub struct PivotMinId;
impl PivotRule for PivotMinId {
    fn pick(&mut self, h: &Hypergraph) -> usize {
        h.vertices()
            .iter()
            .copied()
            .find(|&v| h.degree(v) > 0)
            .expect("some vertex has an edge")
    }
}

pub fn matching_polynomial_with_pivot(
    h: &Hypergraph,
    rule: &mut dyn PivotRule,
) -> Result<MatchingSummary, Error> {
    if !h.is_hyperforest() {
        return matching_counts_bruteforce(h);
    }
    let poly = recurse_uncached(h, rule)?;
    Ok(MatchingSummary::from_polynomial(poly, h.vertex_count(), h.k()))
}

fn recurse(h: &Hypergraph, rule: &mut dyn PivotRule) -> Result<UniPoly, Error> {
    if h.edge_count() == 0 {
        return Ok(UniPoly::monomial(num_traits::One::one(), h.vertex_count()));
    }
    let key = h.canonical_key()?;
    if let Some(p) = global_cache().lock().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let poly = expand(h, rule, true)?;
    global_cache().lock().unwrap().insert(key, poly.clone());
    Ok(poly)
}

fn recurse_uncached(h: &Hypergraph, rule: &mut dyn PivotRule) -> Result<UniPoly, Error> {
    if h.edge_count() == 0 {
        return Ok(UniPoly::monomial(num_traits::One::one(), h.vertex_count()));
    }
    expand(h, rule, false)
}

fn expand(h: &Hypergraph, rule: &mut dyn PivotRule, cached: bool) -> Result<UniPoly, Error> {
    let step = |g: &Hypergraph, rule: &mut dyn PivotRule| {
        if cached {
            recurse(g, rule)
        } else {
            recurse_uncached(g, rule)
        }
    };
    let u = rule.pick(h);
    let lam = UniPoly::monomial(num_traits::One::one(), 1);
    let mut poly = lam.mul(&step(&h.delete_vertex(u)?, rule)?);
    let incident: Vec<Vec<usize>> = h.incident_edges(u).into_iter().cloned().collect();
    for e in incident {
        poly = poly.sub(&step(&h.remove_edge_induced(&e)?, rule)?);
    }
    Ok(poly)
}

/// Factor phi(x) = x^r q(x^k): returns (r, q) with q monic of degree M.
pub fn z_reduction(s: &MatchingSummary) -> (usize, UniPoly) {
    let big_m = s.matching_number();
    let r = s.vertex_count - big_m * s.k;
    let mut q = UniPoly::zero();
    for (t, &m) in s.counts.iter().enumerate() {
        let sign: i64 = if t % 2 == 0 { 1 } else { -1 };
        let c = BigRational::from_integer(BigInt::from(m) * sign);
        q = q.add(&UniPoly::monomial(c, big_m - t));
    }
    (r, q)
}
