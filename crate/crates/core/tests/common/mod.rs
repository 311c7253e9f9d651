#![allow(dead_code)]

use std::collections::BTreeSet;

use germ_bounds::hilbert::hilbert_series;
use germ_bounds::parser::parse_ideal;
use germ_bounds::polyring::{var_list, Coeff, Monomial, MonomialOrder, Polynomial, VarList};
use num_bigint::BigInt;
use proptest::prelude::*;

pub const WORKED_EXAMPLE: &str = "vars x, y, z;
x*(x - z^3)*(x - 2*z^2);
y*(y - z^3)*(y - 2*z^2);
(x + y)*(x + y - z^3);
";

pub fn ideal(text: &str) -> Vec<Polynomial> {
    parse_ideal(text).unwrap().generators
}

pub fn poly(vars: &str, text: &str) -> Polynomial {
    ideal(&format!("vars {vars};\n{text};")).remove(0)
}

pub fn ring(n: usize) -> VarList {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    var_list(&names)
}

fn small_coeff() -> impl Strategy<Value = Coeff> {
    (-9i64..=9, 1i64..=4).prop_map(|(a, b)| Coeff::new(BigInt::from(a), BigInt::from(b)))
}

fn monomial(n: usize, max_deg: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..=max_deg, n).prop_map(move |mut e| {
        // scale down until the total degree fits
        while e.iter().sum::<u32>() > max_deg {
            let i = e.iter().position(|&x| x > 0).unwrap();
            e[i] -= 1;
        }
        Monomial::from_exponents(e)
    })
}

/// Polynomial in `vars` with at most `max_terms` terms of degree at most
/// `max_deg`.
pub fn polynomial(vars: VarList, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = vars.len();
    prop::collection::vec((monomial(n, max_deg), small_coeff()), 0..=max_terms)
        .prop_map(move |terms| Polynomial::from_terms(vars.clone(), MonomialOrder::Grevlex, terms))
}

pub fn nonzero_polynomial(vars: VarList, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    polynomial(vars, max_deg, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

/// Three polynomials in a common ring with 1 to 4 variables.
pub fn poly_triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    (1usize..=4).prop_flat_map(|n| {
        let v = ring(n);
        (
            polynomial(v.clone(), 6, 8),
            polynomial(v.clone(), 6, 8),
            polynomial(v, 6, 8),
        )
    })
}

pub fn any_order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Grevlex),
        Just(MonomialOrder::Grlex),
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::DistinguishedFirst),
    ]
}

/// A polynomial and one to three nonzero divisors in a common ring.
pub fn division_case() -> impl Strategy<Value = (Polynomial, Vec<Polynomial>, MonomialOrder)> {
    (1usize..=3).prop_flat_map(|n| {
        let v = ring(n);
        (
            polynomial(v.clone(), 6, 8),
            prop::collection::vec(nonzero_polynomial(v, 3, 4), 1..=3),
            any_order(),
        )
    })
}

pub fn nonzero_pair() -> impl Strategy<Value = (Polynomial, Polynomial)> {
    (1usize..=4).prop_flat_map(|n| {
        let v = ring(n);
        (nonzero_polynomial(v.clone(), 6, 8), nonzero_polynomial(v, 6, 8))
    })
}

/// Monomial ideal generators in 1 to 3 variables.
pub fn monomial_ideal() -> impl Strategy<Value = (usize, Vec<Monomial>)> {
    (1usize..=3).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(prop::collection::vec(0u32..=4, n).prop_map(Monomial::from_exponents), 0..=5),
        )
    })
}

/// Number of degree-`k` monomials in `n` variables outside the ideal,
/// by enumeration.
pub fn standard_monomials(n: usize, gens: &[Monomial], k: u32) -> u64 {
    fn rec(n: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in 0..=k {
            prefix.push(e);
            rec(n, k - e, prefix, out);
            prefix.pop();
        }
    }
    let mut all = Vec::new();
    rec(n, k, &mut Vec::new(), &mut all);
    let distinct: BTreeSet<Vec<u32>> = all.into_iter().collect();
    distinct
        .into_iter()
        .filter(|e| {
            let m = Monomial::from_exponents(e.clone());
            !gens.iter().any(|g| g.divides(&m))
        })
        .count() as u64
}

/// Checks the Hilbert function against enumeration in degrees 0..=10.
pub fn hilbert_matches_enumeration(n: usize, gens: &[Monomial]) -> Result<(), String> {
    let h = hilbert_series(gens, n);
    for k in 0..=10u32 {
        let expected = standard_monomials(n, gens, k);
        let got = h.hilbert_function(k as usize);
        if got != BigInt::from(expected) {
            return Err(format!("degree {k}: series gives {got}, enumeration gives {expected}"));
        }
    }
    Ok(())
}
