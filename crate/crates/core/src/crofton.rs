//! Unit-ball volumes and the Cauchy-Crofton matrix relating polar invariants
//! to local Lipschitz-Killing invariants.

use std::f64::consts::PI;
use std::fmt;

/// Volume of the unit ball in `R^k`.
///
/// Even dimensions use `pi^m / m!`, odd ones `2^(2m+1) m! pi^m / (2m+1)!`.
pub fn ball_volume(k: usize) -> f64 {
    let m = k / 2;
    let pi_m = PI.powi(m as i32);
    if k % 2 == 0 {
        pi_m / factorial(m)
    } else {
        2f64.powi(2 * m as i32 + 1) * factorial(m) * pi_m / factorial(2 * m + 1)
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

fn binom(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Upper-triangular `n x n` matrix with unit diagonal, indexed from 1.
#[derive(Clone, Debug, PartialEq)]
pub struct CroftonMatrix {
    pub n: usize,
    entries: Vec<Vec<f64>>,
}

impl CroftonMatrix {
    /// Entry `M_{i,j}` with `1 <= i, j <= n`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(
            (1..=self.n).contains(&i) && (1..=self.n).contains(&j),
            "index ({i},{j}) outside 1..={}",
            self.n
        );
        self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.entries
    }
}

pub fn crofton_matrix(n: usize) -> CroftonMatrix {
    assert!(n >= 1, "crofton matrix needs n >= 1");
    let a = ball_volume;
    let mut entries = vec![vec![0.0; n]; n];
    for i in 1..=n {
        entries[i - 1][i - 1] = 1.0;
        for j in i + 1..=n {
            let first = a(j) / (a(j - i) * a(i)) * binom(j, i);
            let second = a(j - 1) / (a(j - 1 - i) * a(i)) * binom(j - 1, i);
            entries[i - 1][j - 1] = first - second;
        }
    }
    CroftonMatrix { n, entries }
}

/// Formats a real with 12 significant digits, trailing zeros removed.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{:.11e}", x);
    let v: f64 = s.parse().expect("formatted float parses");
    let exp = v.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let t = format!("{:.*}", decimals, v);
        if t.contains('.') {
            t.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            t
        }
    } else {
        s
    }
}

/// Rounds to 12 significant digits.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.11e}", x).parse().expect("formatted float parses")
}

impl fmt::Display for CroftonMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&x| format_sig12(x)).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "{}", line.join("  "))?;
        }
        Ok(())
    }
}
