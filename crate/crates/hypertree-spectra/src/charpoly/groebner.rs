//! Buchberger's algorithm (degrevlex, full reduction) and the quotient-ring
//! machinery: standard monomials and multiplication matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::multipoly::{Monomial, MultiPoly};

/// Reduced Groebner basis plus the standard-monomial basis of the quotient
/// ring, when the ideal is zero-dimensional.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    pub groebner_basis: Vec<MultiPoly>,
    pub standard_monomials: Vec<Monomial>,
    pub nvars: usize,
}

impl QuotientRing {
    pub fn dimension(&self) -> usize {
        self.standard_monomials.len()
    }
}

/// Outcome of a quotient-ring computation at one sample point.
pub enum GroebnerOutcome {
    ZeroDimensional(QuotientRing),
    /// The ideal is not zero-dimensional (some variable has no pure-power
    /// leading monomial) or is the whole ring in a degenerate way.
    BadPoint(String),
}

pub fn buchberger(system: &[MultiPoly], nvars: usize) -> Vec<MultiPoly> {
    let mut basis: Vec<MultiPoly> = system
        .iter()
        .filter(|p| !p.is_zero())
        .map(MultiPoly::monic)
        .collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (lmi, _) = basis[i].leading().unwrap();
        let (lmj, _) = basis[j].leading().unwrap();
        if lmi.coprime(lmj) {
            continue; // first Buchberger criterion
        }
        let l = lmi.lcm(lmj);
        let s = basis[i]
            .mul_term(&l.div(lmi), &BigRational::one())
            .sub(&basis[j].mul_term(&l.div(lmj), &BigRational::one()));
        let r = s.normal_form(&basis);
        if !r.is_zero() {
            let r = r.monic();
            let idx = basis.len();
            for t in 0..idx {
                pairs.push((t, idx));
            }
            basis.push(r);
        }
    }
    reduce_basis(basis, nvars)
}

fn reduce_basis(mut basis: Vec<MultiPoly>, nvars: usize) -> Vec<MultiPoly> {
    // minimal: drop elements whose leading monomial is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lmi = basis[i].leading().unwrap().0.clone();
        for j in 0..basis.len() {
            if i != j && keep[j] {
                let lmj = basis[j].leading().unwrap().0.clone();
                if lmj.divides(&lmi) && (lmi != lmj || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let minimal: Vec<MultiPoly> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    // fully reduce each element against the others
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| if j != i { Some(g.clone()) } else { None })
            .collect();
        let r = minimal[i].normal_form(&others);
        if !r.is_zero() {
            reduced.push(r.monic());
        }
    }
    if reduced.is_empty() {
        reduced.push(MultiPoly::zero(nvars));
    }
    reduced.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    reduced
}

/// Builds the quotient ring for a (possibly empty) polynomial system.
/// An empty system over zero variables yields dimension 1 with basis {1}.
pub fn quotient_ring(system: &[MultiPoly], nvars: usize) -> GroebnerOutcome {
    if system.iter().all(|p| p.is_zero()) && nvars == 0 {
        return GroebnerOutcome::ZeroDimensional(QuotientRing {
            groebner_basis: vec![],
            standard_monomials: vec![Monomial::one(0)],
            nvars: 0,
        });
    }
    let basis = buchberger(system, nvars);
    if basis.len() == 1 && basis[0].is_zero() {
        return GroebnerOutcome::BadPoint("zero ideal (positive-dimensional)".into());
    }
    // 1 in the ideal: empty variety, dimension 0 monomials
    if basis.iter().any(|g| g.leading().is_some_and(|(m, _)| m.is_one())) {
        return GroebnerOutcome::BadPoint("ideal is the whole ring (empty variety)".into());
    }
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading().unwrap().0.clone())
        .collect();
    // zero-dimensionality: every variable needs a pure-power leading monomial
    let mut caps = vec![0u32; nvars];
    for (i, slot) in caps.iter_mut().enumerate() {
        let mut cap: Option<u32> = None;
        for lm in &leads {
            if lm.0.iter().enumerate().all(|(j, &e)| j == i || e == 0) && lm.0[i] > 0 {
                cap = Some(cap.map_or(lm.0[i], |c| c.min(lm.0[i])));
            }
        }
        match cap {
            Some(c) => *slot = c,
            None => {
                return GroebnerOutcome::BadPoint(format!(
                    "not zero-dimensional: no pure power of variable {} in the leading ideal",
                    i
                ))
            }
        }
    }
    // standard monomials live below the caps
    let mut standard = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial(exps.clone());
        if !leads.iter().any(|lm| lm.divides(&m)) {
            standard.push(m);
        }
        // odometer over the cap box
        let mut i = 0;
        loop {
            if i == nvars {
                standard.sort();
                return GroebnerOutcome::ZeroDimensional(QuotientRing {
                    groebner_basis: basis,
                    standard_monomials: standard,
                    nvars,
                });
            }
            exps[i] += 1;
            if exps[i] < caps[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Matrix of the multiply-by-f map on the quotient ring, expressed on the
/// standard-monomial basis. Entry (i, j) is the coefficient of standard
/// monomial i in NF(f * standard monomial j).
pub fn multiplication_matrix(q: &QuotientRing, f: &MultiPoly) -> Vec<Vec<BigRational>> {
    let d = q.dimension();
    let index: std::collections::HashMap<&Monomial, usize> = q
        .standard_monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut matrix = vec![vec![BigRational::zero(); d]; d];
    for (j, s) in q.standard_monomials.iter().enumerate() {
        let prod = f.mul_term(s, &BigRational::one());
        let nf = prod.normal_form(&q.groebner_basis);
        for (m, c) in &nf.terms {
            let i = *index
                .get(m)
                .expect("normal form stays inside the standard-monomial span");
            matrix[i][j] = c.clone();
        }
    }
    matrix
}

/// Exact determinant of a rational matrix: clear denominators per row, then
/// fraction-free Bareiss elimination over the integers.
pub fn determinant(matrix: &[Vec<BigRational>]) -> BigRational {
    let n = matrix.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut scale = BigRational::one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in matrix {
        let mut denom = BigInt::one();
        for c in row {
            denom = num_integer::lcm(denom, c.denom().clone());
        }
        scale /= BigRational::from_integer(denom.clone());
        m.push(
            row.iter()
                .map(|c| c.numer() * (&denom / c.denom()))
                .collect(),
        );
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for p in 0..n - 1 {
        if m[p][p].is_zero() {
            match (p + 1..n).find(|&r| !m[r][p].is_zero()) {
                Some(r) => {
                    m.swap(p, r);
                    sign = -sign;
                }
                None => return BigRational::zero(),
            }
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let v = (&m[p][p] * &m[i][j] - &m[i][p] * &m[p][j]) / &prev;
                m[i][j] = v;
            }
            m[i][p] = BigInt::zero();
        }
        prev = m[p][p].clone();
    }
    BigRational::from_integer(sign * m[n - 1][n - 1].clone()) * scale
}
