//! Hilbert series of monomial ideals, and from them the dimension and
//! multiplicity of a tangent cone.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::groebner::{buchberger, tangent_cone, Budget, GroebnerBasis, GroebnerError, TangentConeIdeal};
use crate::polyring::{Monomial, MonomialOrder};

/// Hilbert series `numerator(t) / (1 - t)^n` of `k[x_1..x_n] / I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub nvars: usize,
    /// Coefficients of the unreduced numerator, lowest power first.
    pub numerator: Vec<BigInt>,
    /// Numerator after cancelling every `(1 - t)` factor; the series equals
    /// `reduced(t) / (1 - t)^dim`.
    pub reduced: Vec<BigInt>,
    /// Krull dimension of the quotient; `None` when the quotient is zero
    /// (unit ideal).
    pub dim: Option<usize>,
    /// `reduced(1)`: the degree, or multiplicity, of the quotient. Zero for
    /// the unit ideal.
    pub degree: u64,
    /// Hilbert polynomial coefficients in `s`, constant term first.
    pub hilbert_polynomial: Vec<BigRational>,
}

impl HilbertData {
    /// Dimension of the degree-`k` part of the quotient.
    pub fn hilbert_function(&self, k: usize) -> BigInt {
        let n = self.nvars;
        if n == 0 {
            return self.numerator.get(k).cloned().unwrap_or_default();
        }
        let mut total = BigInt::zero();
        for (j, c) in self.numerator.iter().enumerate() {
            if j > k || c.is_zero() {
                continue;
            }
            total += c * binomial(BigInt::from(k - j + n - 1), BigInt::from(n - 1));
        }
        total
    }

    /// Evaluates the Hilbert polynomial at `s`.
    pub fn hilbert_polynomial_at(&self, s: i64) -> BigRational {
        let s = BigRational::from_integer(BigInt::from(s));
        self.hilbert_polynomial
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &s + c)
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.dim.is_none()
    }
}

/// Removes non-minimal and duplicate generators; output sorted.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Minimal monomial generators of the leading-term ideal.
pub fn leading_ideal(gb: &GroebnerBasis) -> Vec<Monomial> {
    minimalize(&gb.leading_monomials())
}

fn poly_add(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn one_minus_t_pow(d: u32) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); d as usize + 1];
    v[0] += 1;
    v[d as usize] -= 1;
    v
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Numerator of the Hilbert series via the pivot recursion
/// `N(I) = N(I + p) + t^deg(p) N(I : p)`.
fn numerator(gens: Vec<Monomial>) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![BigInt::zero()];
    }
    let n = gens[0].nvars();
    // variable shared by the most generators
    let (pivot_var, count) = (0..n)
        .map(|i| (i, gens.iter().filter(|m| m.exponents()[i] > 0).count()))
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .unwrap();
    if count <= 1 {
        // pairwise coprime
        return trim(
            gens.iter()
                .fold(vec![BigInt::one()], |acc, m| poly_mul(&acc, &one_minus_t_pow(m.degree()))),
        );
    }
    let e = gens
        .iter()
        .map(|m| m.exponents()[pivot_var])
        .filter(|&x| x > 0)
        .min()
        .unwrap();
    let p = Monomial::var(n, pivot_var, e);

    let mut sum_gens = gens.clone();
    sum_gens.push(p.clone());
    let sum = numerator(minimalize(&sum_gens));

    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut ex = m.exponents().to_vec();
            ex[pivot_var] = ex[pivot_var].saturating_sub(e);
            Monomial::from_exponents(ex)
        })
        .collect();
    let quot = numerator(minimalize(&colon));

    let mut out = sum;
    poly_add(&mut out, &quot, e as usize);
    trim(out)
}

fn eval_at_one(v: &[BigInt]) -> BigInt {
    v.iter().sum()
}

/// Divides by `(1 - t)`; requires `v(1) = 0`.
fn divide_one_minus_t(v: &[BigInt]) -> Vec<BigInt> {
    let mut q = Vec::with_capacity(v.len().saturating_sub(1));
    let mut acc = BigInt::zero();
    for c in &v[..v.len() - 1] {
        acc += c;
        q.push(acc.clone());
    }
    if q.is_empty() {
        q.push(BigInt::zero());
    }
    trim(q)
}

fn rational_poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `binomial(s - i + d - 1, d - 1)` as a polynomial in `s`.
fn shifted_binomial(i: usize, d: usize) -> Vec<BigRational> {
    let mut p = vec![BigRational::one()];
    let mut fact = BigInt::one();
    for j in 1..d {
        // factor (s - i + j)
        let c = BigRational::from_integer(BigInt::from(j as i64 - i as i64));
        p = rational_poly_mul(&p, &[c, BigRational::one()]);
        fact *= j;
    }
    let f = BigRational::from_integer(fact);
    p.into_iter().map(|c| c / &f).collect()
}

/// Hilbert data of `k[x_1..x_n] / (gens)` for monomial generators.
pub fn hilbert_series(gens: &[Monomial], n: usize) -> HilbertData {
    let gens = minimalize(gens);
    let numer = numerator(gens);
    if numer.iter().all(|c| c.is_zero()) {
        return HilbertData {
            nvars: n,
            numerator: numer,
            reduced: vec![BigInt::zero()],
            dim: None,
            degree: 0,
            hilbert_polynomial: vec![BigRational::zero()],
        };
    }
    let mut reduced = numer.clone();
    let mut cancelled = 0;
    while eval_at_one(&reduced).is_zero() {
        reduced = divide_one_minus_t(&reduced);
        cancelled += 1;
    }
    let dim = n - cancelled;
    let h1 = eval_at_one(&reduced);
    debug_assert!(h1.is_positive());
    let mut hp = vec![BigRational::zero()];
    if dim >= 1 {
        for (i, c) in reduced.iter().enumerate() {
            let term: Vec<BigRational> = shifted_binomial(i, dim)
                .into_iter()
                .map(|x| x * BigRational::from_integer(c.clone()))
                .collect();
            if hp.len() < term.len() {
                hp.resize(term.len(), BigRational::zero());
            }
            for (k, x) in term.into_iter().enumerate() {
                hp[k] += x;
            }
        }
        while hp.len() > 1 && hp.last().is_some_and(|c| c.is_zero()) {
            hp.pop();
        }
    }
    HilbertData {
        nvars: n,
        numerator: numer,
        reduced,
        dim: Some(dim),
        degree: h1.to_u64().expect("degree fits in u64"),
        hilbert_polynomial: hp,
    }
}

/// Hilbert data of a tangent cone, read from its grevlex leading ideal.
pub fn cone_hilbert(cone: &TangentConeIdeal) -> HilbertData {
    hilbert_series(&leading_ideal(&cone.basis), cone.nvars())
}

/// Dimension and multiplicity of a homogeneous ideal given by generators.
pub fn homogeneous_dimension(
    gens: &[crate::polyring::Polynomial],
    budget: Budget,
) -> Result<HilbertData, GroebnerError> {
    let n = gens.first().ok_or(GroebnerError::ZeroGenerator)?.nvars();
    let gb = buchberger(gens, MonomialOrder::Grevlex, budget)?;
    Ok(hilbert_series(&leading_ideal(&gb), n))
}

/// Affine dimension `d` of the tangent cone and multiplicity `mu` of the
/// germ defined by `gens`.
pub fn germ_multiplicity(
    gens: &[crate::polyring::Polynomial],
    budget: Budget,
) -> Result<(usize, u64), GroebnerError> {
    let cone = tangent_cone(gens, budget)?;
    let h = cone_hilbert(&cone);
    let d = h.dim.ok_or(GroebnerError::UnitIdeal)?;
    Ok((d, h.degree))
}
