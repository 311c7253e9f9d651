//! Counter-example families and the product/embedding transformations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::parser::IdealFile;
use crate::polyring::{coeff, ratio, var_list, Coeff, MonomialOrder, Polynomial, VarList};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("plane configuration is not in general position")]
    NotGeneralPosition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    G { l: usize },
    F { n: usize, l: usize },
    LinearUnion { n: usize, d: usize, k: usize, l: usize },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<IdealFile, FamilyError> {
        let gens = match *self {
            FamilySpec::G { l } => vec![family_g(l)?],
            FamilySpec::F { n, l } => vec![family_f(n, l)?],
            FamilySpec::LinearUnion { n, d, k, l } => family_linear_union(n, d, k, l)?,
        };
        let vars = gens[0].vars().clone();
        Ok(IdealFile::new(vars, gens))
    }
}

fn ring(names: &[&str]) -> VarList {
    var_list(names)
}

fn v(vars: &VarList, i: usize) -> Polynomial {
    Polynomial::var(vars.clone(), MonomialOrder::Grevlex, i)
}

fn c(vars: &VarList, value: Coeff) -> Polynomial {
    Polynomial::constant(vars.clone(), MonomialOrder::Grevlex, value)
}

/// `(x^2 + y^2 - z^4)^2 + prod_{i=0}^{2l-1} (y - (2i - 2l + 1)/(2l) z^2)`.
pub fn family_g(l: usize) -> Result<Polynomial, FamilyError> {
    if l < 2 {
        return Err(FamilyError::OutOfRange(format!("g needs l >= 2, got {l}")));
    }
    let vars = ring(&["x", "y", "z"]);
    let (x, y, z) = (v(&vars, 0), v(&vars, 1), v(&vars, 2));
    let z2 = z.pow(2);
    let quartic = (&(&x.pow(2) + &y.pow(2)) - &z.pow(4)).pow(2);
    let mut prod = c(&vars, coeff(1));
    for i in 0..2 * l {
        let a = ratio(2 * i as i64 - 2 * l as i64 + 1, 2 * l as i64);
        prod = &prod * &(&y - &z2.scale(&a));
    }
    Ok(&quartic + &prod)
}

/// `prod_{r=0}^{2l-1} (x - r y) + z^2 + sum_i t_i^4` in `n` variables.
pub fn family_f(n: usize, l: usize) -> Result<Polynomial, FamilyError> {
    if n < 3 || l < 2 {
        return Err(FamilyError::OutOfRange(format!(
            "f needs n >= 3 and l >= 2, got n={n}, l={l}"
        )));
    }
    let mut names: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
    names.extend((1..=n - 3).map(|i| format!("t{i}")));
    let vars = var_list(&names);
    let (x, y, z) = (v(&vars, 0), v(&vars, 1), v(&vars, 2));
    let mut f = c(&vars, coeff(1));
    for r in 0..2 * l {
        f = &f * &(&x - &y.scale(&coeff(r as i64)));
    }
    f = &f + &z.pow(2);
    for i in 3..n {
        f = &f + &v(&vars, i).pow(4);
    }
    Ok(f)
}

/// First of `w`, `w1`, `w2`, ... not already a variable.
fn fresh_name(vars: &VarList) -> String {
    std::iter::once("w".to_string())
        .chain((1..).map(|i| format!("w{i}")))
        .find(|name| !vars.iter().any(|v| v == name))
        .expect("infinitely many candidates")
}

fn extend_ring(gens: &[Polynomial]) -> (VarList, Vec<Polynomial>) {
    let old = gens[0].vars().clone();
    let mut names: Vec<String> = old.to_vec();
    names.push(fresh_name(&old));
    let vars = var_list(&names);
    let mapping: Vec<usize> = (0..old.len()).collect();
    let moved = gens
        .iter()
        .map(|g| g.remap(vars.clone(), g.order(), &mapping))
        .collect();
    (vars, moved)
}

/// Product with a line: the same generators with one more, unconstrained,
/// variable.
pub fn transform_product(gens: &[Polynomial]) -> Vec<Polynomial> {
    extend_ring(gens).1
}

/// Embedding into a hyperplane: the same generators plus the new variable.
pub fn transform_embed(gens: &[Polynomial]) -> Vec<Polynomial> {
    let (vars, mut moved) = extend_ring(gens);
    let w = Polynomial::var(vars.clone(), gens[0].order(), vars.len() - 1);
    moved.push(w);
    moved
}

/// Coefficient rows of linear forms `sum_j t^j x_j`.
fn vandermonde_rows(ts: impl Iterator<Item = i64>, n: usize) -> Vec<Vec<BigRational>> {
    ts.map(|t| {
        (0..n)
            .map(|j| BigRational::from_integer(BigInt::from(t).pow(j as u32)))
            .collect()
    })
    .collect()
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][col].clone();
        for i in r + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] / &pivot;
            for j in col..ncols {
                let sub = &factor * &m[r][j];
                m[i][j] -= sub;
            }
        }
        r += 1;
    }
    r
}

fn linear_form(vars: &VarList, row: &[BigRational]) -> Polynomial {
    let mut f = Polynomial::zero(vars.clone(), MonomialOrder::Grevlex);
    for (j, a) in row.iter().enumerate() {
        f = &f + &v(vars, j).scale(a);
    }
    f
}

/// Planes of the linear union: the `d`-plane `V` first, then the `l`
/// planes `W_i` of dimension `n - k`, each as the rows of its equations.
pub fn linear_union_planes(
    n: usize,
    d: usize,
    k: usize,
    l: usize,
) -> Result<Vec<Vec<Vec<BigRational>>>, FamilyError> {
    if d == 0 || d >= n || k == 0 || k >= n || n - k >= d {
        return Err(FamilyError::OutOfRange(format!(
            "linear union needs 0 < n-k < d < n, got n={n}, d={d}, k={k}"
        )));
    }
    let mut next = 1i64;
    let mut take = |count: usize| {
        let ts = next..next + count as i64;
        next += count as i64;
        vandermonde_rows(ts, n)
    };
    let mut planes = vec![take(n - d)];
    for _ in 0..l {
        planes.push(take(k));
    }
    for (i, a) in planes.iter().enumerate() {
        for b in &planes[i + 1..] {
            let joint: Vec<Vec<BigRational>> = a.iter().chain(b.iter()).cloned().collect();
            if rank(&joint) != (a.len() + b.len()).min(n) {
                return Err(FamilyError::NotGeneralPosition);
            }
        }
    }
    Ok(planes)
}

/// Product of the linear ideals of a `d`-plane and `l` planes of dimension
/// `n - k`, all through the origin and pairwise in general position.
pub fn family_linear_union(n: usize, d: usize, k: usize, l: usize) -> Result<Vec<Polynomial>, FamilyError> {
    let planes = linear_union_planes(n, d, k, l)?;
    let names: Vec<String> = if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    };
    let vars = var_list(&names);
    let mut product = vec![c(&vars, BigRational::one())];
    for plane in &planes {
        let forms: Vec<Polynomial> = plane.iter().map(|row| linear_form(&vars, row)).collect();
        product = product
            .iter()
            .flat_map(|p| forms.iter().map(move |f| p * f))
            .collect();
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localforms::initial_part;
    use crate::parser::parse_ideal;

    fn poly(vars: &str, text: &str) -> Polynomial {
        parse_ideal(&format!("vars {vars};\n{text};")).unwrap().generators.remove(0)
    }

    #[test]
    fn g_two_expansion() {
        let g = family_g(2).unwrap();
        let expected = poly(
            "x,y,z",
            "(x^2+y^2-z^4)^2 + (y+3/4*z^2)*(y+1/4*z^2)*(y-1/4*z^2)*(y-3/4*z^2)",
        );
        assert_eq!(g, expected);
        assert_eq!(initial_part(&g).unwrap().mu, 4);
    }

    #[test]
    fn g_initial_part_for_larger_l() {
        for l in 3..=5 {
            let ini = initial_part(&family_g(l).unwrap()).unwrap();
            assert_eq!(ini.init, poly("x,y,z", "(x^2+y^2)^2"));
        }
    }

    #[test]
    fn f_examples() {
        let f = family_f(3, 2).unwrap();
        assert_eq!(f, poly("x,y,z", "x*(x-y)*(x-2*y)*(x-3*y) + z^2"));
        let f4 = family_f(4, 3).unwrap();
        assert_eq!(f4.vars().to_vec(), vec!["x", "y", "z", "t1"]);
        assert_eq!(initial_part(&f4).unwrap().init, poly("x,y,z,t1", "z^2"));
        assert_eq!(f4.total_degree(), Some(6));
    }

    #[test]
    fn parameter_checks() {
        assert!(family_g(1).is_err());
        assert!(family_f(2, 2).is_err());
        assert!(family_f(3, 1).is_err());
        assert!(family_linear_union(3, 1, 2, 2).is_err());
    }

    #[test]
    fn transformations() {
        let g = vec![poly("x,y,z", "z^2")];
        let p = transform_product(&g);
        assert_eq!(p, vec![poly("x,y,z,w", "z^2")]);
        let e = transform_embed(&g);
        assert_eq!(e, vec![poly("x,y,z,w", "z^2"), poly("x,y,z,w", "w")]);
        let twice = transform_embed(&transform_product(&g));
        assert_eq!(twice[0].vars().to_vec(), vec!["x", "y", "z", "w", "w1"]);
    }

    #[test]
    fn linear_union_shape() {
        let gens = family_linear_union(3, 2, 2, 4).unwrap();
        assert_eq!(gens.len(), 16);
        assert!(gens.iter().all(|g| g.is_homogeneous() && g.total_degree() == Some(5)));
        let plane = family_linear_union(3, 2, 2, 0).unwrap();
        assert_eq!(plane, vec![poly("x,y,z", "x + y + z")]);
    }

    #[test]
    fn rank_examples() {
        let r = |rows: &[&[i64]]| {
            rank(
                &rows
                    .iter()
                    .map(|row| row.iter().map(|&a| BigRational::from_integer(a.into())).collect())
                    .collect::<Vec<_>>(),
            )
        };
        assert_eq!(r(&[&[1, 2], &[2, 4]]), 1);
        assert_eq!(r(&[&[0, 1], &[1, 0]]), 2);
    }
}
