//! Bivariate Bernstein patches on the unit square.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::Zero;

use super::interval::Interval;
use crate::polyring::Coeff;

/// Dense bivariate polynomial `sum c[i][j] u^i v^j` with exact coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseBivariate {
    pub coeffs: Vec<Vec<Coeff>>,
}

impl DenseBivariate {
    pub fn zero(deg_u: usize, deg_v: usize) -> Self {
        DenseBivariate {
            coeffs: vec![vec![Coeff::zero(); deg_v + 1]; deg_u + 1],
        }
    }

    pub fn deg_u(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn deg_v(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn eval(&self, u: &Coeff, v: &Coeff) -> Coeff {
        self.coeffs.iter().rev().fold(Coeff::zero(), |acc, row| {
            let inner = row.iter().rev().fold(Coeff::zero(), |a, c| a * v + c);
            acc * u + inner
        })
    }
}

fn rational_binomial(n: usize, k: usize) -> BigRational {
    BigRational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// Exact Bernstein coefficients of degree `(deg_u, deg_v)` on `[0,1]^2`.
pub fn bernstein_coefficients(p: &DenseBivariate) -> Vec<Vec<Coeff>> {
    let (m, n) = (p.deg_u(), p.deg_v());
    let mut b = vec![vec![Coeff::zero(); n + 1]; m + 1];
    for (i, row) in b.iter_mut().enumerate() {
        for (j, out) in row.iter_mut().enumerate() {
            let mut acc = Coeff::zero();
            for a in 0..=i {
                let wa = rational_binomial(i, a) / rational_binomial(m, a);
                for bb in 0..=j {
                    let c = &p.coeffs[a][bb];
                    if c.is_zero() {
                        continue;
                    }
                    let wb = rational_binomial(j, bb) / rational_binomial(n, bb);
                    acc += &wa * &wb * c;
                }
            }
            *out = acc;
        }
    }
    b
}

/// Interval Bernstein coefficients stored row-major, `u` index first.
#[derive(Clone, Debug)]
pub struct Patch {
    pub m: usize,
    pub n: usize,
    pub b: Vec<Interval>,
}

/// Splits `b[start], b[start+stride], ...` (length `len`) at `1/2`.
fn split_line(src: &[Interval], start: usize, stride: usize, len: usize, left: &mut [Interval], right: &mut [Interval]) {
    let mut w: Vec<Interval> = (0..len).map(|k| src[start + k * stride]).collect();
    let deg = len - 1;
    left[start] = w[0];
    right[start + deg * stride] = w[deg];
    for r in 1..=deg {
        for k in 0..=deg - r {
            w[k] = w[k].midpoint_with(&w[k + 1]);
        }
        left[start + r * stride] = w[0];
        right[start + (deg - r) * stride] = w[deg - r];
    }
}

impl Patch {
    pub fn from_exact(b: &[Vec<Coeff>]) -> Self {
        let m = b.len() - 1;
        let n = b[0].len() - 1;
        Patch {
            m,
            n,
            b: b.iter().flatten().map(Interval::from_rational).collect(),
        }
    }

    fn at(&self, i: usize, j: usize) -> Interval {
        self.b[i * (self.n + 1) + j]
    }

    /// Enclosure of the polynomial over the patch's square.
    pub fn range(&self) -> Interval {
        self.b[1..].iter().fold(self.b[0], |acc, x| acc.hull(x))
    }

    /// Exact-up-to-rounding values at the corners `(0,0), (1,0), (0,1), (1,1)`.
    pub fn corners(&self) -> [Interval; 4] {
        [
            self.at(0, 0),
            self.at(self.m, 0),
            self.at(0, self.n),
            self.at(self.m, self.n),
        ]
    }

    fn split_u(&self) -> (Patch, Patch) {
        let mut l = self.clone();
        let mut r = self.clone();
        let stride = self.n + 1;
        for j in 0..=self.n {
            split_line(&self.b, j, stride, self.m + 1, &mut l.b, &mut r.b);
        }
        (l, r)
    }

    fn split_v(&self) -> (Patch, Patch) {
        let mut l = self.clone();
        let mut r = self.clone();
        for i in 0..=self.m {
            split_line(&self.b, i * (self.n + 1), 1, self.n + 1, &mut l.b, &mut r.b);
        }
        (l, r)
    }

    /// Quadrants in the order `(0,0), (1,0), (0,1), (1,1)` of `(u, v)` halves.
    pub fn subdivide(&self) -> [Patch; 4] {
        let (ul, ur) = self.split_u();
        let (a, c) = ul.split_v();
        let (b, d) = ur.split_v();
        [a, b, c, d]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{coeff, ratio};

    fn dense(rows: &[&[i64]]) -> DenseBivariate {
        DenseBivariate {
            coeffs: rows.iter().map(|r| r.iter().map(|&c| coeff(c)).collect()).collect(),
        }
    }

    #[test]
    fn coefficients_of_uv() {
        let b = bernstein_coefficients(&dense(&[&[0, 0], &[0, 1]]));
        assert_eq!(b, vec![vec![coeff(0), coeff(0)], vec![coeff(0), coeff(1)]]);
    }

    #[test]
    fn square_has_a_negative_middle_coefficient() {
        // (2u - 1)^2 = 1 - 4u + 4u^2
        let b = bernstein_coefficients(&dense(&[&[1], &[-4], &[4]]));
        assert_eq!(b, vec![vec![coeff(1)], vec![coeff(-1)], vec![coeff(1)]]);
    }

    #[test]
    fn subdivision_matches_exact_values() {
        let p = dense(&[&[1, -2, 1], &[3, 0, 0], &[-5, 1, 0]]);
        let patch = Patch::from_exact(&bernstein_coefficients(&p));
        let kids = patch.subdivide();
        let half = ratio(1, 2);
        let corners = [
            (coeff(0), coeff(0)),
            (half.clone(), coeff(0)),
            (coeff(0), half.clone()),
            (half.clone(), half.clone()),
        ];
        for (kid, (u0, v0)) in kids.iter().zip(corners) {
            let c = kid.corners();
            let pts = [
                (u0.clone(), v0.clone()),
                (&u0 + &half, v0.clone()),
                (u0.clone(), &v0 + &half),
                (&u0 + &half, &v0 + &half),
            ];
            for (iv, (u, v)) in c.iter().zip(pts) {
                let exact = Interval::from_rational(&p.eval(&u, &v));
                assert!(iv.lo <= exact.hi && exact.lo <= iv.hi);
            }
        }
    }

    #[test]
    fn degree_zero_direction() {
        let p = dense(&[&[0], &[1]]);
        let patch = Patch::from_exact(&bernstein_coefficients(&p));
        let kids = patch.subdivide();
        assert_eq!(kids[1].range().lo, 0.5);
    }
}
