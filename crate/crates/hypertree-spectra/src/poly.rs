//! Exact univariate polynomial arithmetic over arbitrary-precision rationals:
//! gcd, square-free decomposition, Sturm real-root isolation, evaluation and
//! Newton interpolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::Error;

/// Dense univariate polynomial with exact rational coefficients,
/// lowest degree first. The coefficient vector never has a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "x^{}", i)?;
            } else {
                write!(f, "{}*x^{}", c, i)?;
            }
        }
        Ok(())
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(rat(1))
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// x^d with coefficient c.
    pub fn monomial(c: BigRational, d: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); d + 1];
        coeffs[d] = c;
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from small integer coefficients, lowest first.
    pub fn from_ints(cs: &[i64]) -> Self {
        UniPoly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> BigRational {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by x^d.
    pub fn shift(&self, d: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, mut e: u64) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rational_to_f64(c);
        }
        acc
    }

    /// Substitute x^k for x: p(x) -> p(x^k).
    pub fn compose_power(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let lc = self.leading();
        self.scale(&(BigRational::one() / lc))
    }

    /// Quotient and remainder with deg(r) < deg(d).
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        let lc = d.leading();
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lc;
            quot[i - dd] = q.clone();
            for (j, c) in d.coeffs.iter().enumerate() {
                let t = &q * c;
                rem[i - dd + j] -= t;
            }
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Clear denominators and content: primitive integer coefficients with
    /// positive leading coefficient, together with the rational factor removed.
    pub fn primitive_integer(&self) -> (Vec<BigInt>, BigRational) {
        if self.is_zero() {
            return (vec![], BigRational::one());
        }
        let mut denom = BigInt::one();
        for c in &self.coeffs {
            denom = num_integer::lcm(denom, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = num_integer::gcd(content, c.clone());
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        let factor = BigRational::new(content, denom);
        (prim, factor)
    }

    pub fn from_integer_coeffs(cs: Vec<BigInt>) -> Self {
        UniPoly::from_coeffs(cs.into_iter().map(BigRational::from_integer).collect())
    }

    /// Monic gcd, computed by a primitive PRS over the integers.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (mut a, _) = self.primitive_integer();
        let (mut b, _) = other.primitive_integer();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = pseudo_rem_int(&a, &b);
            if r.is_empty() {
                return UniPoly::from_integer_coeffs(b).monic();
            }
            a = b;
            b = primitive_part(r);
        }
    }

    /// Yun's square-free decomposition: self = lead * prod g_i^i with the g_i
    /// monic, square-free and pairwise coprime. Returns (g_i, i) pairs with
    /// deg(g_i) > 0, ascending in i.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        assert!(!self.is_zero(), "square-free decomposition of zero");
        if self.degree() == Some(0) {
            return vec![];
        }
        let p = self.monic();
        let dp = p.derivative();
        let g = p.gcd(&dp);
        let mut c = p.div_exact(&g);
        let mut d = dp.div_exact(&g).sub(&c.derivative());
        let mut out = Vec::new();
        let mut i = 1usize;
        while c.degree().is_some_and(|dg| dg > 0) {
            let gi = c.gcd(&d);
            let c_next = c.div_exact(&gi);
            d = d.div_exact(&gi).sub(&c_next.derivative());
            if gi.degree().is_some_and(|dg| dg > 0) {
                out.push((gi.monic(), i));
            }
            c = c_next;
            i += 1;
        }
        out
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree_part(&self) -> UniPoly {
        let mut out = UniPoly::one();
        for (g, _) in self.squarefree_decomposition() {
            out = out.mul(&g);
        }
        out
    }
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = num_integer::gcd(content, c.clone());
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    v.into_iter().map(|c| c / &content).collect()
}

/// Pseudo-remainder of integer polynomials (lowest degree first), trimmed.
fn pseudo_rem_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc = b.last().unwrap().clone();
    let mut r: Vec<BigInt> = a.to_vec();
    while r.len() > db {
        let rd = r.len() - 1;
        let coef = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= &lc;
        }
        for j in 0..=db {
            r[rd - db + j] -= &coef * &b[j];
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    r
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // fall back to a scaled division for out-of-range numerator/denominator
        let s: BigInt = BigInt::from(1u64) << 200u32;
        let scaled = (r.numer() * &s) / r.denom();
        scaled.to_f64().map(|v| v / 2f64.powi(200)).unwrap_or(f64::NAN)
    })
}

/// Exact Newton interpolation through points with distinct abscissas.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<UniPoly, Error> {
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i].0 == points[j].0 {
                return Err(Error::RepeatedAbscissa(points[i].0.to_string()));
            }
        }
    }
    if points.is_empty() {
        return Ok(UniPoly::zero());
    }
    // divided differences
    let n = points.len();
    let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    let mut coeffs = vec![table[0].clone()];
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = &points[i].0 - &points[i - level].0;
            table[i] = (&table[i] - &table[i - 1]) / dx;
        }
        coeffs.push(table[level].clone());
    }
    // expand the Newton form
    let mut result = UniPoly::zero();
    let mut basis = UniPoly::one();
    for (i, c) in coeffs.into_iter().enumerate() {
        result = result.add(&basis.scale(&c));
        if i + 1 < n {
            let lin = UniPoly::from_coeffs(vec![-points[i].0.clone(), BigRational::one()]);
            basis = basis.mul(&lin);
        }
    }
    Ok(result)
}

/// Isolating interval for one real root of a square-free polynomial:
/// the root lies in (lo, hi].
#[derive(Clone, Debug)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub poly: UniPoly,
}

impl RootInterval {
    pub fn exact(point: BigRational, poly: UniPoly) -> Self {
        let lo = &point - BigRational::new(BigInt::one(), BigInt::from(u64::MAX));
        RootInterval { lo, hi: point, poly }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        *x > self.lo && *x <= self.hi
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.midpoint())
    }

    /// Bisect until the interval is narrower than `width`.
    pub fn refine(&mut self, width: &BigRational) {
        let chain = sturm_chain(&self.poly);
        while self.width() > *width {
            let mid = self.midpoint();
            if count_roots(&chain, &self.lo, &mid) == 1 {
                self.hi = mid;
            } else {
                self.lo = mid;
            }
        }
    }
}

/// Sturm chain of p (p need not be square-free; the chain ends at the gcd).
pub fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let r = chain[n - 2].div_rem(&chain[n - 1]).1;
        if r.is_zero() {
            return chain;
        }
        // normalize to primitive integer coefficients to keep sizes in
        // check; the scale factor must stay positive or the sign sequence
        // (and with it the root count) is corrupted
        let (prim, factor) = r.neg().primitive_integer();
        let mut next = UniPoly::from_integer_coeffs(prim);
        if factor.is_negative() {
            next = next.neg();
        }
        chain.push(next);
    }
}

fn sign_variations(chain: &[UniPoly], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots in (a, b].
pub fn count_roots(chain: &[UniPoly], a: &BigRational, b: &BigRational) -> usize {
    sign_variations(chain, a) - sign_variations(chain, b)
}

/// Cauchy bound: every real root lies in (-B, B].
pub fn root_bound(p: &UniPoly) -> BigRational {
    let lc = p.leading();
    let mut maxr = BigRational::zero();
    for c in p.coeffs() {
        let r = (c / &lc).abs();
        if r > maxr {
            maxr = r;
        }
    }
    maxr + BigRational::one()
}

/// Isolate every real root of a square-free polynomial in (lo, hi].
/// Intervals are returned sorted ascending.
pub fn sturm_isolate(
    p: &UniPoly,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<Vec<RootInterval>, Error> {
    if p.is_zero() {
        return Err(Error::NotSquareFree);
    }
    if p.gcd(&p.derivative()).degree() != Some(0) {
        return Err(Error::NotSquareFree);
    }
    let chain = sturm_chain(p);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        match count_roots(&chain, &a, &b) {
            0 => {}
            1 => out.push(RootInterval {
                lo: a,
                hi: b,
                poly: p.clone(),
            }),
            _ => {
                let m = (&a + &b) / rat(2);
                stack.push((a, m.clone()));
                stack.push((m, b));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(out)
}

/// Isolate all real roots of a square-free polynomial.
pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<RootInterval>, Error> {
    if p.degree().is_none_or(|d| d == 0) {
        return Ok(vec![]);
    }
    let b = root_bound(p);
    sturm_isolate(p, &(-&b), &b)
}

#[derive(Serialize, Deserialize, Debug)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

impl UniPoly {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    if c.denom().is_one() {
                        c.numer().to_string()
                    } else {
                        format!("{}/{}", c.numer(), c.denom())
                    }
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self, Error> {
        let mut coeffs = Vec::with_capacity(j.coeffs.len());
        for s in &j.coeffs {
            coeffs.push(parse_rational(s)?);
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let parse_int = |t: &str| {
        t.parse::<BigInt>()
            .map_err(|_| Error::BadNumber(t.to_string()))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::BadNumber(s.to_string()));
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}
