//! Distinct-eigenvalue enumeration through induced-subtree matching
//! polynomials, and exact spectral-radius isolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::hypergraph::Hypergraph;
use crate::matching::{matching_polynomial, z_reduction};
use crate::poly::{isolate_real_roots, RootInterval, UniPoly};

pub fn width(pow10: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(pow10))
}

/// Default isolation width 10^-12.
pub fn default_width() -> BigRational {
    width(12)
}

/// Per-subtree root data: the z-polynomial q with phi = x^r q(x^k),
/// isolating intervals for its positive real roots, and degree-defect
/// counts for the roots that are not isolated.
#[derive(Clone, Debug)]
pub struct SubtreeRoots {
    pub key: Vec<u8>,
    pub vertices: Vec<usize>,
    pub r: usize,
    pub q: UniPoly,
    pub positive_z_roots: Vec<RootInterval>,
    pub negative_real_z_roots: usize,
    pub nonreal_z_roots: usize,
}

#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub subtree_roots: Vec<SubtreeRoots>,
    /// Deduplicated nonnegative real eigenvalues, ascending; zero is an
    /// exact point interval when present.
    pub real_eigenvalues: Vec<RootInterval>,
    pub has_zero: bool,
    pub spectral_radius: RootInterval,
}

/// All distinct real eigenvalues of a hypertree via the induced-subtree
/// matching-polynomial characterization.
pub fn distinct_real_eigenvalues(t: &Hypergraph) -> Result<SpectrumReport, Error> {
    if !t.is_hypertree() {
        return Err(Error::NotHypertree);
    }
    let catalog = t.enumerate_induced_subtrees()?;
    let mut subtree_roots = Vec::new();
    let mut has_zero = false;
    // radical of the product of all distinct q polynomials; its positive
    // roots are exactly the distinct positive z-values across subtrees
    let mut product = UniPoly::one();
    let mut seen_q: Vec<UniPoly> = Vec::new();
    for entry in &catalog.entries {
        let summary = matching_polynomial(&entry.subtree)?;
        let (r, q) = z_reduction(&summary);
        if r > 0 || q.coeff(0).is_zero() {
            has_zero = true;
        }
        let q_sf = if q.degree().is_none_or(|d| d == 0) {
            UniPoly::one()
        } else {
            q.squarefree_part()
        };
        let all = isolate_real_roots(&q_sf)?;
        let deg = q_sf.degree().unwrap_or(0);
        let positive: Vec<RootInterval> = all
            .into_iter()
            .filter(|iv| iv.hi.is_positive())
            .filter(|iv| {
                // drop an interval whose root is <= 0: root in (lo, hi],
                // so positive iff q_sf has a sign change over (max(lo,0), hi]
                let chain = crate::poly::sturm_chain(&q_sf);
                let lo = if iv.lo.is_negative() { BigRational::zero() } else { iv.lo.clone() };
                crate::poly::count_roots(&chain, &lo, &iv.hi) == 1
            })
            .collect();
        let real_total = isolate_real_roots(&q_sf)?.len();
        let negative_real = real_total - positive.len();
        if !seen_q.contains(&q_sf) {
            seen_q.push(q_sf.clone());
            product = product.mul(&q_sf);
        }
        subtree_roots.push(SubtreeRoots {
            key: entry.key.clone(),
            vertices: entry.vertices.clone(),
            r,
            q,
            positive_z_roots: positive,
            negative_real_z_roots: negative_real,
            nonreal_z_roots: deg - real_total,
        });
    }
    let radical = if product.degree().is_none_or(|d| d == 0) {
        UniPoly::one()
    } else {
        product.squarefree_part()
    };
    // lambda-eigenvalues: positive real roots of radical(x^k), plus zero
    let lambda_poly = radical.compose_power(t.k());
    let mut eigen: Vec<RootInterval> = isolate_real_roots(&lambda_poly)?
        .into_iter()
        .filter(|iv| iv.hi.is_positive() && root_is_positive(iv))
        .collect();
    let w = default_width();
    for iv in &mut eigen {
        iv.refine(&w);
    }
    eigen.sort_by(|a, b| a.lo.cmp(&b.lo));
    if has_zero {
        eigen.insert(0, RootInterval::exact(BigRational::zero(), UniPoly::from_ints(&[0, 1])));
    }
    let spectral_radius = if t.edge_count() == 0 {
        RootInterval::exact(BigRational::zero(), UniPoly::from_ints(&[0, 1]))
    } else {
        eigen.last().cloned().expect("edged hypertree has a positive eigenvalue")
    };
    Ok(SpectrumReport {
        subtree_roots,
        real_eigenvalues: eigen,
        has_zero,
        spectral_radius,
    })
}

fn root_is_positive(iv: &RootInterval) -> bool {
    if !iv.lo.is_negative() {
        return true;
    }
    let chain = crate::poly::sturm_chain(&iv.poly);
    crate::poly::count_roots(&chain, &BigRational::zero(), &iv.hi) == 1
}

/// The largest real root of the matching polynomial of T, isolated to the
/// requested width. This is rho(T) since the spectral radius of every
/// proper subtree is strictly smaller.
pub fn spectral_radius_exact(t: &Hypergraph, w: &BigRational) -> Result<RootInterval, Error> {
    if !t.is_hypertree() {
        return Err(Error::NotHypertree);
    }
    if t.edge_count() == 0 {
        return Ok(RootInterval::exact(BigRational::zero(), UniPoly::from_ints(&[0, 1])));
    }
    let phi = matching_polynomial(t)?.polynomial;
    let sf = phi.squarefree_part();
    let mut roots = isolate_real_roots(&sf)?;
    let mut top = roots.pop().ok_or(Error::Degenerate("no real root".into()))?;
    top.refine(w);
    Ok(top)
}

#[derive(Clone, Debug)]
pub struct MonotonicityEntry {
    pub vertices: Vec<usize>,
    pub rho_subtree: RootInterval,
    pub separated: bool,
}

#[derive(Clone, Debug)]
pub struct MonotonicityReport {
    pub rho: RootInterval,
    pub entries: Vec<MonotonicityEntry>,
    pub all_separated: bool,
}

/// Verifies rho(S) < rho(T) with strict interval separation for every
/// proper induced subtree S with at least one edge.
pub fn subtree_monotonicity_check(
    t: &Hypergraph,
    separation: &BigRational,
) -> Result<MonotonicityReport, Error> {
    let w = separation / BigRational::from_integer(BigInt::from(4));
    let rho = spectral_radius_exact(t, &w)?;
    let catalog = t.enumerate_induced_subtrees()?;
    let mut entries = Vec::new();
    for entry in &catalog.entries {
        if entry.subtree.edge_count() == 0 || entry.vertices.len() == t.vertex_count() {
            continue;
        }
        let rho_s = spectral_radius_exact(&entry.subtree, &w)?;
        let separated = &rho.lo - &rho_s.hi >= *separation;
        entries.push(MonotonicityEntry {
            vertices: entry.vertices.clone(),
            rho_subtree: rho_s,
            separated,
        });
    }
    let all = entries.iter().all(|e| e.separated);
    Ok(MonotonicityReport {
        rho,
        entries,
        all_separated: all,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{hyperstar, loose_path, single_edge};
    use crate::poly::rational_to_f64;

    fn approx(iv: &RootInterval) -> f64 {
        rational_to_f64(&iv.midpoint())
    }

    #[test]
    fn single_edge_spectrum() {
        let report = distinct_real_eigenvalues(&single_edge(3).unwrap()).unwrap();
        assert!(report.has_zero);
        assert_eq!(report.real_eigenvalues.len(), 2);
        assert!((approx(&report.real_eigenvalues[1]) - 1.0).abs() < 1e-9);
        assert!((approx(&report.spectral_radius) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn loose_path_spectrum() {
        let report = distinct_real_eigenvalues(&loose_path(3, 2).unwrap()).unwrap();
        // {0, 1, 2^(1/3)}
        assert_eq!(report.real_eigenvalues.len(), 3);
        assert!((approx(&report.real_eigenvalues[1]) - 1.0).abs() < 1e-9);
        assert!((approx(&report.real_eigenvalues[2]) - 2f64.powf(1.0 / 3.0)).abs() < 1e-9);
    }

    #[test]
    fn hyperstar_spectrum() {
        let report = distinct_real_eigenvalues(&hyperstar(3, 3).unwrap()).unwrap();
        // {0, 1, 2^(1/3), 3^(1/3)}
        assert_eq!(report.real_eigenvalues.len(), 4);
        let expected = [1.0, 2f64.powf(1.0 / 3.0), 3f64.powf(1.0 / 3.0)];
        for (iv, e) in report.real_eigenvalues[1..].iter().zip(expected) {
            assert!((approx(iv) - e).abs() < 1e-9);
        }
    }

    #[test]
    fn spectral_radius_examples() {
        let w = default_width();
        let iv = spectral_radius_exact(&single_edge(3).unwrap(), &w).unwrap();
        assert!((approx(&iv) - 1.0).abs() < 1e-10);
        let iv = spectral_radius_exact(&loose_path(3, 2).unwrap(), &w).unwrap();
        assert!((approx(&iv) - 2f64.powf(1.0 / 3.0)).abs() < 1e-10);
        let iv = spectral_radius_exact(&hyperstar(3, 3).unwrap(), &w).unwrap();
        assert!((approx(&iv) - 3f64.powf(1.0 / 3.0)).abs() < 1e-10);
    }

    #[test]
    fn spectral_radius_edgeless() {
        let point = crate::hypergraph::Hypergraph::new(3, vec![0], vec![]).unwrap();
        let iv = spectral_radius_exact(&point, &default_width()).unwrap();
        assert!(iv.hi.is_zero());
    }

    #[test]
    fn monotonicity_examples() {
        let sep = width(10);
        let r = subtree_monotonicity_check(&loose_path(3, 2).unwrap(), &sep).unwrap();
        assert!(r.all_separated);
        assert_eq!(r.entries.len(), 2); // the two single-edge subtrees
        let r = subtree_monotonicity_check(&hyperstar(3, 3).unwrap(), &sep).unwrap();
        assert!(r.all_separated);
        // single edge: vacuous
        let r = subtree_monotonicity_check(&single_edge(3).unwrap(), &sep).unwrap();
        assert!(r.entries.is_empty() && r.all_separated);
    }

    #[test]
    fn loose_path_radius_grows_with_m() {
        let w = width(10);
        let mut last = spectral_radius_exact(&loose_path(3, 1).unwrap(), &w).unwrap();
        for m in 2..=5 {
            let cur = spectral_radius_exact(&loose_path(3, m).unwrap(), &w).unwrap();
            assert!(approx(&cur) > approx(&last));
            last = cur;
        }
    }
}
