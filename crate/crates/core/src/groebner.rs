//! Buchberger's algorithm and the tangent cone of an ideal at the origin.
//!
//! The tangent cone is computed by homogenizing with a fresh variable `w`,
//! running Buchberger under [`MonomialOrder::DistinguishedFirst`] (degree,
//! then the `w`-exponent, then grevlex), and setting `w = 1`. The result is a
//! standard basis for the local degree order, so the initial parts of its
//! elements generate the ideal of initial forms.

use thiserror::Error;

use crate::localforms::initial_part;
use crate::polyring::{Monomial, MonomialOrder, PolyError, Polynomial, VarList};

/// Name of the homogenizing variable; not a valid identifier in ideal files.
pub const HOMOGENIZING_VAR: &str = "@w";

pub const DEFAULT_PAIR_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("resource limit exceeded: more than {limit} S-pair reductions")]
    ResourceLimit { limit: u64 },
    #[error("the ideal contains a unit at the origin; the germ is empty")]
    UnitIdeal,
    #[error("generator list is empty or contains the zero polynomial")]
    ZeroGenerator,
    #[error(transparent)]
    Ring(#[from] PolyError),
}

/// Limits on the work Buchberger may do.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_pair_reductions: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pair_reductions: DEFAULT_PAIR_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(max_pair_reductions: u64) -> Self {
        Budget {
            max_pair_reductions,
        }
    }
}

/// A reduced Gröbner basis: monic elements sorted by ascending leading
/// monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub basis: Vec<Polynomial>,
    pub source: Vec<Polynomial>,
    /// Number of S-pairs that were actually reduced.
    pub pair_reductions: u64,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.iter().any(|g| g.is_unit())
    }

    /// Normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        normal_form(&f.with_order(self.order), &self.basis)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Checks the S-pair criterion for every pair and that every source
    /// generator reduces to zero.
    pub fn verify(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in (i + 1)..self.basis.len() {
                let s = s_polynomial(&self.basis[i], &self.basis[j]);
                if !normal_form(&s, &self.basis).is_zero() {
                    return false;
                }
            }
        }
        self.source.iter().all(|g| self.contains(g))
    }

    /// No term of any element is divisible by another element's leading
    /// monomial, and every element is monic.
    pub fn is_reduced(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, g)| {
            g.leading_coeff().is_some_and(|c| *c == num_traits::One::one())
                && self.basis.iter().enumerate().all(|(j, h)| {
                    i == j || {
                        let lm = h.leading_monomial().expect("nonzero");
                        g.terms().iter().all(|(m, _)| !lm.divides(m))
                    }
                })
        })
    }
}

/// The S-polynomial of two nonzero polynomials in the same order.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&l).unwrap(), &fc.recip());
    let b = g.mul_term(&gm.quotient_of(&l).unwrap(), &gc.recip());
    &a - &b
}

/// Full reduction of `f` by `basis` (all in the same order). Divisors are
/// tried in list order.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let order = f.order();
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((lm, lc)) = p.leading_term().cloned() {
        let hit = basis.iter().find_map(|g| {
            let (gm, gc) = g.leading_term()?;
            gm.quotient_of(&lm).map(|q| (q, &lc / gc, g))
        });
        match hit {
            Some((q, c, g)) => p = p.sub_scaled_shifted(&c, &q, g),
            None => {
                p.pop_leading();
                rem.push((lm, lc));
            }
        }
    }
    Polynomial::from_terms(f.vars().clone(), order, rem)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are selected by the normal strategy (smallest lcm under `order`,
/// ties broken by index); the product and chain criteria discard pairs.
/// Exceeding the budget is an error, never a truncated result.
pub fn buchberger(
    gens: &[Polynomial],
    order: MonomialOrder,
    budget: Budget,
) -> Result<GroebnerBasis, GroebnerError> {
    let first = gens.first().ok_or(GroebnerError::ZeroGenerator)?;
    for g in gens {
        if g.is_zero() {
            return Err(GroebnerError::ZeroGenerator);
        }
        if !g.same_ring(first) {
            return Err(PolyError::VariableMismatch {
                left: first.vars().join(","),
                right: g.vars().join(","),
            }
            .into());
        }
    }
    let source: Vec<Polynomial> = gens.iter().map(|g| g.with_order(order)).collect();

    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut reductions = 0u64;

    let add = |basis: &mut Vec<Polynomial>, pairs: &mut Vec<Pair>, h: Polynomial| {
        let h = h.monic();
        let lm = h.leading_monomial().unwrap().clone();
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let l = g.leading_monomial().unwrap().lcm(&lm);
            pairs.push(Pair { i, j, lcm: l });
        }
        basis.push(h);
    };

    for g in &source {
        let h = normal_form(g, &basis);
        if !h.is_zero() {
            add(&mut basis, &mut pairs, h);
        }
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                order
                    .cmp(&pa.lcm, &pb.lcm)
                    .then(pa.j.cmp(&pb.j))
                    .then(pa.i.cmp(&pb.i))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        let (i, j) = (pair.i, pair.j);
        let lmi = basis[i].leading_monomial().unwrap();
        let lmj = basis[j].leading_monomial().unwrap();
        if lmi.is_coprime(lmj) {
            continue;
        }
        let pending = |a: usize, b: usize| {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            pairs.iter().any(|p| p.i == a && p.j == b)
        };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&pair.lcm)
                && !pending(i, k)
                && !pending(j, k)
        });
        if chain {
            continue;
        }
        if reductions >= budget.max_pair_reductions {
            return Err(GroebnerError::ResourceLimit {
                limit: budget.max_pair_reductions,
            });
        }
        reductions += 1;
        let s = s_polynomial(&basis[i], &basis[j]);
        let h = normal_form(&s, &basis);
        if !h.is_zero() {
            add(&mut basis, &mut pairs, h);
        }
    }

    Ok(GroebnerBasis {
        order,
        basis: reduce_basis(basis, order),
        source,
        pair_reductions: reductions,
    })
}

/// Minimalizes and interreduces a Gröbner basis.
fn reduce_basis(basis: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let hm = h.leading_monomial().unwrap();
            k != idx && hm.divides(lm) && (hm != lm || k < idx)
        });
        if !redundant {
            minimal.push(g.monic());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, g)| g.clone())
            .collect();
        reduced.push(normal_form(&minimal[idx], &others).monic());
    }
    reduced.sort_by(|a, b| {
        order.cmp(
            a.leading_monomial().unwrap(),
            b.leading_monomial().unwrap(),
        )
    });
    reduced
}

/// Generators of the ideal of initial forms `Init(I)`.
#[derive(Clone, Debug)]
pub struct TangentConeIdeal {
    /// Reduced grevlex Gröbner basis of the initial forms; every element is
    /// homogeneous.
    pub generators: Vec<Polynomial>,
    /// The same basis with its bookkeeping.
    pub basis: GroebnerBasis,
    /// Local standard basis of the input ideal (dehomogenized).
    pub standard_basis: Vec<Polynomial>,
}

impl TangentConeIdeal {
    pub fn nvars(&self) -> usize {
        self.basis.source[0].nvars()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    pub fn vars(&self) -> &VarList {
        self.basis.source[0].vars()
    }
}

fn homogenizing_ring(vars: &VarList) -> VarList {
    std::iter::once(HOMOGENIZING_VAR.to_string())
        .chain(vars.iter().cloned())
        .collect::<Vec<_>>()
        .into()
}

/// Homogenizes `f` to its total degree with a new leading variable.
pub fn homogenize(f: &Polynomial, ring: &VarList) -> Polynomial {
    let d = f.total_degree().unwrap_or(0);
    let terms = f.terms().iter().map(|(m, c)| {
        let mut e = Vec::with_capacity(m.nvars() + 1);
        e.push(d - m.degree());
        e.extend_from_slice(m.exponents());
        (Monomial::from_exponents(e), c.clone())
    });
    Polynomial::from_terms(ring.clone(), MonomialOrder::DistinguishedFirst, terms)
}

/// Sets the leading (homogenizing) variable to one.
pub fn dehomogenize(f: &Polynomial, vars: &VarList, order: MonomialOrder) -> Polynomial {
    let terms = f.terms().iter().map(|(m, c)| {
        (
            Monomial::from_exponents(m.exponents()[1..].to_vec()),
            c.clone(),
        )
    });
    Polynomial::from_terms(vars.clone(), order, terms)
}

/// Computes generators of the tangent cone ideal of `gens` at the origin.
pub fn tangent_cone(gens: &[Polynomial], budget: Budget) -> Result<TangentConeIdeal, GroebnerError> {
    let first = gens.first().ok_or(GroebnerError::ZeroGenerator)?;
    if gens.iter().any(|g| g.is_zero()) {
        return Err(GroebnerError::ZeroGenerator);
    }
    let vars = first.vars().clone();
    let ring = homogenizing_ring(&vars);
    let homogenized: Vec<Polynomial> = gens
        .iter()
        .map(|g| {
            if !g.same_ring(first) {
                return Err(GroebnerError::from(PolyError::VariableMismatch {
                    left: vars.join(","),
                    right: g.vars().join(","),
                }));
            }
            Ok(homogenize(g, &ring))
        })
        .collect::<Result<_, _>>()?;
    let hgb = buchberger(&homogenized, MonomialOrder::DistinguishedFirst, budget)?;

    let mut standard_basis = Vec::with_capacity(hgb.basis.len());
    let mut initial_forms = Vec::with_capacity(hgb.basis.len());
    for g in &hgb.basis {
        let f = dehomogenize(g, &vars, MonomialOrder::Grevlex);
        let ini = initial_part(&f).expect("dehomogenized basis element is nonzero");
        if ini.mu == 0 {
            return Err(GroebnerError::UnitIdeal);
        }
        initial_forms.push(ini.init.monic());
        standard_basis.push(f);
    }
    let remaining = Budget::new(
        budget
            .max_pair_reductions
            .saturating_sub(hgb.pair_reductions)
            .max(1),
    );
    let basis = buchberger(&initial_forms, MonomialOrder::Grevlex, remaining)?;
    Ok(TangentConeIdeal {
        generators: basis.basis.clone(),
        basis,
        standard_basis,
    })
}
