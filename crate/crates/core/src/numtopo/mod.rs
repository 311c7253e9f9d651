//! Counting connected components of plane sections of a real hypersurface
//! inside a box.
//!
//! The polynomial is restricted to two free variables by exact substitution,
//! rescaled to the unit square and expanded in the Bernstein basis. A
//! quadtree then discards every cell whose Bernstein enclosure excludes zero.
//! A surviving finest-level cell is refined locally until it either shows
//! both signs at sub-cell corners or is shown to be free of zeros. The
//! remaining cells are grouped into classes of cells that touch along an
//! edge or at a corner.

mod bernstein;
mod count;
mod interval;

pub use bernstein::{bernstein_coefficients, DenseBivariate, Patch};
pub use count::{
    count_components, write_cells_csv, ComponentCount, CountStatus, OccupiedCell, AUTO_MAX_DEPTH,
    AUTO_MIN_DEPTH, DEFAULT_LEAF_BUDGET,
};
pub use interval::Interval;

use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::polyring::{Coeff, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumTopoError {
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("a section needs exactly 2 free variables, found {0}")]
    FreeVariables(usize),
    #[error("box is empty")]
    EmptyBox,
    #[error("resolution must be positive")]
    BadResolution,
    #[error("resource limit exceeded: more than {limit} occupied leaf cells")]
    LeafBudget { limit: u64 },
}

/// Requested fineness of the quadtree.
#[derive(Clone, Debug, PartialEq)]
pub enum Resolution {
    /// Largest admissible cell side, in the box's own coordinates.
    Width(f64),
    /// Number of halvings of the box.
    Depth(u32),
    /// Refine until the count settles.
    Auto,
}

/// A two-dimensional section of `{f = 0}` inside an axis-parallel box.
#[derive(Clone, Debug)]
pub struct SectionSpec {
    pub f: Polynomial,
    pub fixed: Vec<(String, Coeff)>,
    /// Indices of the two free variables in `f`'s ring.
    pub free: [usize; 2],
    /// `[xmin, xmax, ymin, ymax]` for the first and second free variable.
    pub rect: [Coeff; 4],
    pub resolution: Resolution,
    pub leaf_budget: u64,
}

impl SectionSpec {
    pub fn new(
        f: Polynomial,
        fixed: Vec<(String, Coeff)>,
        rect: [Coeff; 4],
        resolution: Resolution,
    ) -> Result<Self, NumTopoError> {
        for (name, _) in &fixed {
            if !f.vars().iter().any(|v| v == name) {
                return Err(NumTopoError::UnknownVariable(name.clone()));
            }
        }
        let free: Vec<usize> = (0..f.nvars())
            .filter(|&i| !fixed.iter().any(|(name, _)| *name == f.vars()[i]))
            .collect();
        if free.len() != 2 {
            return Err(NumTopoError::FreeVariables(free.len()));
        }
        if rect[0] >= rect[1] || rect[2] >= rect[3] {
            return Err(NumTopoError::EmptyBox);
        }
        match resolution {
            Resolution::Width(w) if !(w > 0.0 && w.is_finite()) => {
                return Err(NumTopoError::BadResolution)
            }
            _ => {}
        }
        Ok(SectionSpec {
            f,
            fixed,
            free: [free[0], free[1]],
            rect,
            resolution,
            leaf_budget: DEFAULT_LEAF_BUDGET,
        })
    }

    pub fn with_leaf_budget(mut self, budget: u64) -> Self {
        self.leaf_budget = budget;
        self
    }

    pub fn free_names(&self) -> [&str; 2] {
        [&self.f.vars()[self.free[0]], &self.f.vars()[self.free[1]]]
    }

    /// Section polynomial in box coordinates `(u, v)` on the unit square.
    pub fn restricted(&self) -> DenseBivariate {
        let mut g = self.f.clone();
        for (name, value) in &self.fixed {
            let idx = g.vars().iter().position(|v| v == name).expect("validated");
            g = g.substitute(idx, value);
        }
        let [a, b] = self.free;
        let deg = |idx: usize| g.terms().iter().map(|(m, _)| m.exponents()[idx]).max().unwrap_or(0) as usize;
        let (du, dv) = (deg(a), deg(b));
        let mut out = DenseBivariate::zero(du, dv);
        let wx = &self.rect[1] - &self.rect[0];
        let wy = &self.rect[3] - &self.rect[2];
        let ex = affine_powers(&self.rect[0], &wx, du);
        let ey = affine_powers(&self.rect[2], &wy, dv);
        for (m, c) in g.terms() {
            let (p, q) = (m.exponents()[a] as usize, m.exponents()[b] as usize);
            for (s, xs) in ex[p].iter().enumerate() {
                if xs.is_zero() {
                    continue;
                }
                let cx = c * xs;
                for (t, yt) in ey[q].iter().enumerate() {
                    if !yt.is_zero() {
                        out.coeffs[s][t] += &cx * yt;
                    }
                }
            }
        }
        out
    }

    /// Number of halvings needed for `resolution`; `None` in auto mode.
    pub fn depth(&self) -> Option<u32> {
        match self.resolution {
            Resolution::Depth(d) => Some(d),
            Resolution::Auto => None,
            Resolution::Width(w) => {
                let span = self.span();
                let mut d = 0;
                while span / 2f64.powi(d as i32) > w && d < 40 {
                    d += 1;
                }
                Some(d)
            }
        }
    }

    fn span(&self) -> f64 {
        let wx = (&self.rect[1] - &self.rect[0]).to_f64().unwrap_or(f64::INFINITY);
        let wy = (&self.rect[3] - &self.rect[2]).to_f64().unwrap_or(f64::INFINITY);
        wx.max(wy)
    }
}

/// Coefficients of `(x0 + w u)^p` in `u`, for `p = 0..=deg`.
fn affine_powers(x0: &Coeff, w: &Coeff, deg: usize) -> Vec<Vec<Coeff>> {
    (0..=deg)
        .map(|p| {
            (0..=p)
                .map(|s| {
                    let b = Coeff::from_integer(binomial(p as u64, s as u64).into());
                    b * num_traits::pow(x0.clone(), p - s) * num_traits::pow(w.clone(), s)
                })
                .collect()
        })
        .collect()
}

/// Encloses the range of a polynomial in at most two variables over the
/// cell `cell[0] x cell[1]`, by nested Horner evaluation.
pub fn interval_eval(f: &Polynomial, cell: &[Interval; 2]) -> Interval {
    assert!(f.nvars() <= 2, "interval_eval takes a polynomial in at most 2 variables");
    let exp = |m: &crate::polyring::Monomial, i: usize| m.exponents().get(i).copied().unwrap_or(0) as usize;
    let dx = f.terms().iter().map(|(m, _)| exp(m, 0)).max().unwrap_or(0);
    let dy = f.terms().iter().map(|(m, _)| exp(m, 1)).max().unwrap_or(0);
    let mut rows = vec![vec![Interval::point(0.0); dy + 1]; dx + 1];
    for (m, c) in f.terms() {
        rows[exp(m, 0)][exp(m, 1)] = Interval::from_rational(c);
    }
    let horner = |coeffs: &[Interval], x: Interval| {
        coeffs
            .iter()
            .rev()
            .fold(Interval::point(0.0), |acc, c| acc * x + *c)
    };
    let inner: Vec<Interval> = rows.iter().map(|row| horner(row, cell[1])).collect();
    horner(&inner, cell[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_ideal;
    use crate::polyring::{coeff, ratio};

    fn poly(vars: &str, text: &str) -> Polynomial {
        parse_ideal(&format!("vars {vars};\n{text};")).unwrap().generators.remove(0)
    }

    #[test]
    fn interval_eval_examples() {
        let cell = [Interval::new(1.0, 2.0), Interval::new(0.0, 1.0)];
        assert_eq!(interval_eval(&poly("x,y", "x"), &cell), Interval::new(1.0, 2.0));
        let r = interval_eval(&poly("x,y", "x^2 - y"), &[Interval::new(0.0, 1.0), Interval::new(0.0, 1.0)]);
        assert!(r.lo <= -1.0 && r.hi >= 1.0);
        let five = poly("x,y", "5");
        assert_eq!(interval_eval(&five, &cell), Interval::point(5.0));
    }

    #[test]
    fn restriction_to_the_unit_square() {
        let f = poly("x,y,z", "x^2 + y^2 - z");
        let spec = SectionSpec::new(
            f,
            vec![("z".into(), coeff(1))],
            [coeff(-2), coeff(2), coeff(0), coeff(1)],
            Resolution::Depth(3),
        )
        .unwrap();
        let p = spec.restricted();
        // at u = 1/2, v = 1: x = 0, y = 1
        assert_eq!(p.eval(&ratio(1, 2), &coeff(1)), coeff(0));
        assert_eq!(p.eval(&coeff(0), &coeff(0)), coeff(3));
    }

    #[test]
    fn spec_validation() {
        let f = poly("x,y,z", "x + y + z");
        let unit = [coeff(0), coeff(1), coeff(0), coeff(1)];
        assert_eq!(
            SectionSpec::new(f.clone(), vec![], unit.clone(), Resolution::Auto).unwrap_err(),
            NumTopoError::FreeVariables(3)
        );
        assert_eq!(
            SectionSpec::new(f.clone(), vec![("q".into(), coeff(0))], unit.clone(), Resolution::Auto)
                .unwrap_err(),
            NumTopoError::UnknownVariable("q".into())
        );
        let flat = [coeff(0), coeff(0), coeff(0), coeff(1)];
        assert_eq!(
            SectionSpec::new(f.clone(), vec![("z".into(), coeff(0))], flat, Resolution::Auto).unwrap_err(),
            NumTopoError::EmptyBox
        );
        let spec = SectionSpec::new(f, vec![("z".into(), coeff(0))], unit, Resolution::Width(1.0 / 64.0)).unwrap();
        assert_eq!(spec.depth(), Some(6));
        assert_eq!(spec.free_names(), ["x", "y"]);
    }
}
