//! Exact multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] stores its terms as a strictly descending list under a
//! single [`MonomialOrder`]. Exponents are dense vectors: the rings handled
//! here have a handful of variables, so dense storage keeps comparisons and
//! divisibility tests simple.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// Shared, immutable list of variable names.
pub type VarList = Arc<[String]>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
}

/// Builds a shared variable list from names.
pub fn var_list<S: AsRef<str>>(names: &[S]) -> VarList {
    names.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into()
}

/// Converts an integer to a coefficient.
pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds the coefficient `num/den`.
pub fn ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = exp;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Monomial orders. Variable index 0 is the largest variable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    /// Graded lexicographic.
    Grlex,
    /// Pure lexicographic.
    Lex,
    /// Total degree first, then a larger exponent of variable 0 wins, then
    /// grevlex on the remaining variables. On polynomials homogenized with
    /// variable 0 this selects lowest-degree terms of the dehomogenization.
    DistinguishedFirst,
}

fn grevlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::Grlex => a.degree().cmp(&b.degree()).then_with(|| ea.cmp(eb)),
            MonomialOrder::Grevlex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| grevlex_tail(ea, eb)),
            MonomialOrder::DistinguishedFirst => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| ea.first().cmp(&eb.first()))
                .then_with(|| grevlex_tail(&ea[1.min(ea.len())..], &eb[1.min(eb.len())..])),
        }
    }

    pub fn is_graded(&self) -> bool {
        !matches!(self, MonomialOrder::Lex)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Grlex => "grlex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::DistinguishedFirst => "graded-distinguished-first",
        };
        f.write_str(s)
    }
}

/// A polynomial in canonical form: no zero coefficients, no repeated
/// monomials, terms strictly descending under `order`.
#[derive(Clone, Debug)]
pub struct Polynomial {
    vars: VarList,
    order: MonomialOrder,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(vars: VarList, order: MonomialOrder) -> Self {
        Polynomial {
            vars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(vars: VarList, order: MonomialOrder, c: Coeff) -> Self {
        let n = vars.len();
        Self::from_terms(vars, order, [(Monomial::one(n), c)])
    }

    pub fn one(vars: VarList, order: MonomialOrder) -> Self {
        Self::constant(vars, order, Coeff::one())
    }

    /// The variable with the given index.
    pub fn var(vars: VarList, order: MonomialOrder, index: usize) -> Self {
        let n = vars.len();
        Self::from_terms(vars, order, [(Monomial::var(n, index, 1), Coeff::one())])
    }

    /// Collects arbitrary terms into canonical form.
    pub fn from_terms<I>(vars: VarList, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), vars.len());
            if c.is_zero() {
                continue;
            }
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { vars, order, terms }
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(Monomial, Coeff)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    /// Maximum total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Minimum total degree of a term; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    /// Re-sorts the terms under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            vars: self.vars.clone(),
            order,
            terms,
        }
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch {
                left: self.vars.join(","),
                right: other.vars.join(","),
            })
        }
    }

    /// Brings `other` into this polynomial's order if needed.
    fn aligned<'a>(&self, other: &'a Polynomial) -> std::borrow::Cow<'a, Polynomial> {
        if other.order == self.order {
            std::borrow::Cow::Borrowed(other)
        } else {
            std::borrow::Cow::Owned(other.with_order(self.order))
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let other = self.aligned(other);
        Ok(self.merge(&other, |c| c.clone()))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let other = self.aligned(other);
        Ok(self.merge(&other, |c| -c))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.vars.clone(), self.order));
        }
        let mut acc: HashMap<Monomial, Coeff> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Coeff::zero) += ca * cb;
            }
        }
        Ok(Polynomial::from_terms(self.vars.clone(), self.order, acc))
    }

    /// Sorted merge of two term lists; `map` is applied to coefficients of
    /// the right operand.
    fn merge(&self, other: &Polynomial, map: impl Fn(&Coeff) -> Coeff) -> Polynomial {
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), map(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + map(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), map(c))));
        Polynomial {
            vars: self.vars.clone(),
            order,
            terms: out,
        }
    }

    /// `self - c * m * g`, with `g` already in this ring and order.
    pub fn sub_scaled_shifted(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.order, g.order);
        let shifted = Polynomial {
            vars: self.vars.clone(),
            order: self.order,
            terms: g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).collect(),
        };
        self.merge(&shifted, |x| -x)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars.clone(), self.order);
        }
        Polynomial {
            vars: self.vars.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars.clone(), self.order);
        }
        Polynomial {
            vars: self.vars.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(x, y)| (x.mul(m), y * c))
                .collect(),
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.vars.clone(), self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `index`.
    pub fn derivative(&self, index: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[index];
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] -= 1;
            Some((Monomial::from_exponents(exps), c * coeff(e as i64)))
        });
        Polynomial::from_terms(self.vars.clone(), self.order, terms)
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.nvars(), "point dimension mismatch");
        let mut total = Coeff::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Substitutes `value` for variable `index`; the variable list is kept.
    pub fn substitute(&self, index: usize, value: &Coeff) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = m.exponents().to_vec();
            let e = std::mem::replace(&mut exps[index], 0);
            (
                Monomial::from_exponents(exps),
                c * num_traits::pow(value.clone(), e as usize),
            )
        });
        Polynomial::from_terms(self.vars.clone(), self.order, terms)
    }

    /// Moves the polynomial into another ring. `mapping[i]` is the new index
    /// of variable `i`; variables of the target ring not hit by the mapping
    /// do not occur.
    pub fn remap(&self, vars: VarList, order: MonomialOrder, mapping: &[usize]) -> Polynomial {
        assert_eq!(mapping.len(), self.nvars());
        let n = vars.len();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0; n];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[mapping[i]] += e;
            }
            (Monomial::from_exponents(exps), c.clone())
        });
        Polynomial::from_terms(vars, order, terms)
    }

    /// Indices of the variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exponents()[i] > 0))
            .collect()
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if !self.same_ring(other) || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl Eq for Polynomial {}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl<'a> $trait<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                self.$try(rhs).expect("polynomials from different rings")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_coeff(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, &e) in vars.iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Output is accepted by the ideal-file parser.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&format_coeff(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", format_coeff(&abs))?;
                }
                write_monomial(f, &self.vars, m)?;
            }
        }
        Ok(())
    }
}

/// Quotients and remainder of multivariate division.
#[derive(Clone, Debug)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Multivariate division of `f` by `divisors` under `order`.
///
/// At each step the first divisor (in list order) whose leading monomial
/// divides the current leading monomial is used; otherwise that term moves
/// to the remainder. Afterwards `f = sum(q_i * d_i) + r` and no monomial of
/// `r` is divisible by any leading monomial of a divisor.
pub fn divide(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: MonomialOrder,
) -> Result<Division, PolyError> {
    let mut p = f.with_order(order);
    let divs: Vec<Polynomial> = divisors
        .iter()
        .map(|d| {
            p.check_ring(d)?;
            if d.is_zero() {
                return Err(PolyError::ZeroDivisor);
            }
            Ok(d.with_order(order))
        })
        .collect::<Result<_, _>>()?;
    let vars = p.vars.clone();
    let mut quotient_terms: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); divs.len()];
    let mut remainder = Vec::new();
    while let Some((lm, lc)) = p.leading_term().cloned() {
        let hit = divs.iter().enumerate().find_map(|(i, d)| {
            let (dm, dc) = d.leading_term().expect("nonzero divisor");
            dm.quotient_of(&lm).map(|q| (i, q, &lc / dc))
        });
        match hit {
            Some((i, q, c)) => {
                p = p.sub_scaled_shifted(&c, &q, &divs[i]);
                quotient_terms[i].push((q, c));
            }
            None => {
                remainder.push((lm, lc));
                p.terms.remove(0);
            }
        }
    }
    Ok(Division {
        quotients: quotient_terms
            .into_iter()
            .map(|t| Polynomial::from_terms(vars.clone(), order, t))
            .collect(),
        remainder: Polynomial {
            vars,
            order,
            terms: remainder,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (Polynomial, Polynomial) {
        let v = var_list(&["x", "y"]);
        (
            Polynomial::var(v.clone(), MonomialOrder::Grevlex, 0),
            Polynomial::var(v, MonomialOrder::Grevlex, 1),
        )
    }

    #[test]
    fn additive_inverse_is_zero() {
        let (x, _) = xy();
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn coefficients_collect() {
        let (x, y) = xy();
        let sum = &(&x.pow(2) + &y) + &y;
        assert_eq!(sum.to_string(), "x^2 + 2*y");
    }

    #[test]
    fn cancellation() {
        let (x, y) = xy();
        let f = &x.pow(2) - &y.pow(3);
        assert_eq!((&f + &y.pow(3)), x.pow(2));
    }

    #[test]
    fn products() {
        let (x, y) = xy();
        let one = Polynomial::one(x.vars().clone(), MonomialOrder::Grevlex);
        let f = &x.pow(2) - &y.pow(3);
        assert_eq!(&f * &one, f);
        assert_eq!(&(&x + &y) * &(&x - &y), &x.pow(2) - &y.pow(2));
        let q = &x.pow(2) + &y.pow(2);
        assert_eq!((&q * &q).to_string(), "x^4 + 2*x^2*y^2 + y^4");
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let (x, _) = xy();
        let z = Polynomial::var(var_list(&["z"]), MonomialOrder::Grevlex, 0);
        assert!(matches!(
            x.try_add(&z),
            Err(PolyError::VariableMismatch { .. })
        ));
        assert!(x.try_mul(&z).is_err());
    }

    #[test]
    fn division_examples() {
        let (x, y) = xy();
        let d = divide(&(&x.pow(2) * &y), &[x.pow(2)], MonomialOrder::Grevlex).unwrap();
        assert_eq!(d.quotients[0], y);
        assert!(d.remainder.is_zero());

        let one = Polynomial::one(x.vars().clone(), MonomialOrder::Grevlex);
        let f = &x.pow(2) + &one;
        let d = divide(&f, &[y.clone()], MonomialOrder::Grevlex).unwrap();
        assert!(d.quotients[0].is_zero());
        assert_eq!(d.remainder, f);

        let f = &(&x.pow(2) * &y) + &(&x * &y.pow(2));
        let g = &(&x * &y) - &one;
        let d = divide(&f, &[g], MonomialOrder::Grevlex).unwrap();
        assert_eq!(d.remainder, &x + &y);
        assert_eq!(d.quotients[0], &x + &y);
    }

    #[test]
    fn orders_compare_as_expected() {
        let m = |e: &[u32]| Monomial::from_exponents(e.to_vec());
        // x^2 vs y^3: graded orders prefer the higher degree, lex prefers x.
        assert_eq!(
            MonomialOrder::Grevlex.cmp(&m(&[2, 0]), &m(&[0, 3])),
            Ordering::Less
        );
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[2, 0]), &m(&[0, 3])),
            Ordering::Greater
        );
        // grevlex vs grlex differ on x*z vs y^2 in three variables
        assert_eq!(
            MonomialOrder::Grlex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::Grevlex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
        // distinguished variable wins within a degree
        assert_eq!(
            MonomialOrder::DistinguishedFirst.cmp(&m(&[2, 0, 0]), &m(&[0, 2, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn derivative_and_eval() {
        let (x, y) = xy();
        let f = &(&x.pow(2) * &y) - &y.pow(3);
        assert_eq!(f.derivative(0), &(&x * &y) * &Polynomial::constant(x.vars().clone(), MonomialOrder::Grevlex, coeff(2)));
        assert_eq!(f.eval(&[coeff(2), coeff(1)]), coeff(3));
        assert_eq!(f.substitute(1, &coeff(1)), &x.pow(2) - &Polynomial::one(x.vars().clone(), MonomialOrder::Grevlex));
    }

    #[test]
    fn display_signs_and_fractions() {
        let (x, y) = xy();
        let f = &(-&x.pow(2)) + &y.scale(&ratio(1, 2));
        assert_eq!(f.to_string(), "-x^2 + 1/2*y");
        assert_eq!(Polynomial::zero(x.vars().clone(), MonomialOrder::Grevlex).to_string(), "0");
    }
}
