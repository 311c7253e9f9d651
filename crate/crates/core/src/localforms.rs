//! Order of vanishing, initial parts and the conic blow-up of a polynomial.

use num_traits::Zero;
use thiserror::Error;

use crate::polyring::{Coeff, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalFormError {
    #[error("the zero polynomial has no initial part")]
    ZeroPolynomial,
}

/// Lowest total degree `mu` of a polynomial together with the sum of its
/// terms of that degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialForm {
    pub mu: u32,
    pub init: Polynomial,
}

pub fn initial_part(f: &Polynomial) -> Result<InitialForm, LocalFormError> {
    let mu = f.min_degree().ok_or(LocalFormError::ZeroPolynomial)?;
    let terms = f
        .terms()
        .iter()
        .filter(|(m, _)| m.degree() == mu)
        .cloned();
    Ok(InitialForm {
        mu,
        init: Polynomial::from_terms(f.vars().clone(), f.order(), terms),
    })
}

/// `f(eps * X) / eps^mu(f)` for a fixed rational `eps`.
///
/// The division is carried out termwise, so `eps = 0` is allowed and yields
/// the initial part.
pub fn conic_blowup(f: &Polynomial, eps: &Coeff) -> Result<Polynomial, LocalFormError> {
    let mu = f.min_degree().ok_or(LocalFormError::ZeroPolynomial)?;
    let terms = f.terms().iter().filter_map(|(m, c)| {
        let shift = (m.degree() - mu) as usize;
        if shift > 0 && eps.is_zero() {
            return None;
        }
        Some((m.clone(), c * num_traits::pow(eps.clone(), shift)))
    });
    Ok(Polynomial::from_terms(f.vars().clone(), f.order(), terms))
}
