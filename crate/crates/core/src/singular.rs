//! Singular locus of the tangent cone by the Jacobian criterion.

use num_integer::binomial;
use rayon::prelude::*;
use thiserror::Error;

use crate::groebner::{buchberger, Budget, GroebnerError, TangentConeIdeal};
use crate::hilbert::{hilbert_series, leading_ideal};
use crate::polyring::{MonomialOrder, Polynomial};

/// Largest admissible `binom(#gens, c) * binom(n, c)`.
pub const MAX_MINOR_COUNT: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingularError {
    #[error("minor size {c} is out of range 1..={max}")]
    MinorSize { c: usize, max: usize },
    #[error("resource limit exceeded: {count} Jacobian minors (limit {MAX_MINOR_COUNT})")]
    TooManyMinors { count: u64 },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

#[derive(Clone, Debug)]
pub struct SingularLocusData {
    /// Cone generators followed by the nonzero Jacobian minors.
    pub sing_ideal_gens: Vec<Polynomial>,
    /// Affine dimension of the singular locus over the algebraic closure;
    /// `-1` when it is empty.
    pub s: i64,
    pub empty: bool,
}

fn combinations(n: usize, c: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..c).collect();
    if c > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = c;
        while i > 0 && cur[i - 1] == n - c + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..c {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Determinant by cofactor expansion along the first row.
fn determinant(m: &[Vec<&Polynomial>], cols: &[usize]) -> Polynomial {
    let row = m.len() - cols.len();
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = m[row][cols[0]].scale(&crate::polyring::coeff(0));
    for (i, &c) in cols.iter().enumerate() {
        let entry = m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &determinant(m, &rest);
        acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// All nonzero `c x c` minors of the Jacobian matrix of `gens`.
pub fn jacobian_minors(gens: &[Polynomial], c: usize) -> Result<Vec<Polynomial>, SingularError> {
    let n = gens.first().map_or(0, |g| g.nvars());
    let max = gens.len().min(n);
    if c == 0 || c > max {
        return Err(SingularError::MinorSize { c, max });
    }
    let count = binomial(gens.len() as u64, c as u64).saturating_mul(binomial(n as u64, c as u64));
    if count > MAX_MINOR_COUNT {
        return Err(SingularError::TooManyMinors { count });
    }
    let jac: Vec<Vec<Polynomial>> = gens
        .iter()
        .map(|g| (0..n).map(|j| g.derivative(j)).collect())
        .collect();
    let row_sets = combinations(gens.len(), c);
    let col_sets = combinations(n, c);
    let tasks: Vec<(&Vec<usize>, &Vec<usize>)> = row_sets
        .iter()
        .flat_map(|r| col_sets.iter().map(move |cs| (r, cs)))
        .collect();
    let minors: Vec<Polynomial> = tasks
        .par_iter()
        .map(|(rows, cols)| {
            let sub: Vec<Vec<&Polynomial>> = rows.iter().map(|&r| jac[r].iter().collect()).collect();
            determinant(&sub, cols)
        })
        .filter(|p| !p.is_zero())
        .collect();
    Ok(minors)
}

/// Dimension of the singular locus of the cone `V(cone)` of dimension `d`
/// in affine `n`-space.
pub fn singular_dimension(
    cone: &TangentConeIdeal,
    n: usize,
    d: usize,
    budget: Budget,
) -> Result<SingularLocusData, SingularError> {
    let c = n - d;
    let mut gens = cone.generators.clone();
    gens.extend(jacobian_minors(&cone.generators, c)?);
    let gb = buchberger(&gens, MonomialOrder::Grevlex, budget)?;
    let h = hilbert_series(&leading_ideal(&gb), n);
    let (s, empty) = match h.dim {
        Some(s) => (s as i64, false),
        None => (-1, true),
    };
    Ok(SingularLocusData {
        sing_ideal_gens: gens,
        s,
        empty,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::tangent_cone;
    use crate::hilbert::cone_hilbert;
    use crate::parser::parse_ideal;

    fn ideal(text: &str) -> Vec<Polynomial> {
        parse_ideal(text).unwrap().generators
    }

    fn sing(text: &str) -> SingularLocusData {
        let cone = tangent_cone(&ideal(text), Budget::default()).unwrap();
        let h = cone_hilbert(&cone);
        singular_dimension(&cone, cone.nvars(), h.dim.unwrap(), Budget::default()).unwrap()
    }

    #[test]
    fn minors_of_a_square() {
        let m = jacobian_minors(&ideal("vars x,y,z; z^2;"), 1).unwrap();
        assert_eq!(m, ideal("vars x,y,z; 2*z;"));
    }

    #[test]
    fn minors_are_the_gradient() {
        let m = jacobian_minors(&ideal("vars x,y; x^2 + y^2;"), 1).unwrap();
        assert_eq!(m, ideal("vars x,y; 2*x; 2*y;"));
    }

    #[test]
    fn constant_jacobian() {
        let m = jacobian_minors(&ideal("vars x,y; x; y;"), 2).unwrap();
        assert_eq!(m.len(), 1);
        assert!(m[0].is_unit());
    }

    #[test]
    fn three_by_three_determinant() {
        let m = jacobian_minors(&ideal("vars x,y,z; x*y; y*z; x*z;"), 3).unwrap();
        // det [[y,x,0],[0,z,y],[z,0,x]] = 2xyz
        assert_eq!(m, ideal("vars x,y,z; 2*x*y*z;"));
    }

    #[test]
    fn minor_size_out_of_range() {
        assert!(matches!(
            jacobian_minors(&ideal("vars x,y; x;"), 2),
            Err(SingularError::MinorSize { .. })
        ));
    }

    #[test]
    fn double_plane_is_singular_everywhere() {
        let s = sing("vars x,y,z; z^2;");
        assert_eq!((s.s, s.empty), (2, false));
    }

    #[test]
    fn squared_quadric_cone() {
        let s = sing("vars x,y,z; (x^2+y^2)^2;");
        assert_eq!(s.s, 2);
    }

    #[test]
    fn smooth_cone_has_empty_singular_locus() {
        let s = sing("vars x,y; x + y^2;");
        assert!(s.empty);
        assert_eq!(s.s, -1);
    }

    #[test]
    fn full_rank_quadric_is_singular_at_the_vertex() {
        let s = sing("vars x,y,z; x^2 + y^2 - z^2;");
        assert_eq!(s.s, 0);
    }

    #[test]
    fn permutation_invariance() {
        let a = sing("vars x,y,z; x^2 - y*z + z^3;");
        let b = sing("vars z,x,y; x^2 - y*z + z^3;");
        assert_eq!(a.s, b.s);
    }
}
