//! Quadtree search and grouping of occupied cells.

use std::io::{self, Write};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_traits::ToPrimitive;
use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Serialize;

use super::bernstein::{bernstein_coefficients, Patch};
use super::{NumTopoError, SectionSpec};

pub const DEFAULT_LEAF_BUDGET: u64 = 10_000_000;
pub const AUTO_MIN_DEPTH: u32 = 4;
pub const AUTO_MAX_DEPTH: u32 = 20;
/// Levels of the quadtree explored in parallel.
const PARALLEL_LEVELS: u32 = 6;
/// Extra levels used to confirm or discard a finest-level cell.
const VERIFY_LEVELS: u32 = 10;
const VERIFY_NODES: u32 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountStatus {
    /// Every class is known to contain a zero, and distinct classes are
    /// separated by cells free of zeros, so `count` components exist.
    CertifiedLowerBound,
    Heuristic,
}

/// Finest-level cell `(i, j)` of a `2^depth x 2^depth` grid on the box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OccupiedCell {
    pub i: u32,
    pub j: u32,
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct ComponentCount {
    pub count: usize,
    /// Classes that provably contain a zero of the section.
    pub certified: usize,
    pub status: CountStatus,
    /// Quadtree nodes visited, over all depths tried.
    pub cells_examined: u64,
    pub depth: u32,
    /// `(depth, count)` for every depth tried, in order.
    pub history: Vec<(u32, usize)>,
    pub occupied: Vec<OccupiedCell>,
}

#[derive(Clone, Copy, Debug)]
struct Leaf {
    i: u32,
    j: u32,
    pos: bool,
    neg: bool,
}

struct Search {
    depth: u32,
    budget: u64,
    nodes: AtomicU64,
    leaves: AtomicU64,
    aborted: AtomicBool,
}

/// Refines a finest-level cell until it shows both signs at sub-cell
/// corners or every sub-cell is free of zeros. Returns `false` when the
/// cell provably contains no zero.
fn verify(patch: &Patch, levels: u32, signs: &mut (bool, bool), nodes: &mut u32) -> bool {
    if !patch.range().contains_zero() {
        return false;
    }
    for c in patch.corners() {
        signs.0 |= c.is_positive();
        signs.1 |= c.is_negative();
    }
    if (signs.0 && signs.1) || levels == 0 || *nodes == 0 {
        return true;
    }
    *nodes -= 1;
    let mut kept = false;
    for kid in patch.subdivide().iter() {
        if verify(kid, levels - 1, signs, nodes) {
            kept = true;
            if signs.0 && signs.1 {
                return true;
            }
        }
    }
    kept
}

fn explore(patch: &Patch, i: u32, j: u32, level: u32, s: &Search) -> Vec<Leaf> {
    s.nodes.fetch_add(1, Ordering::Relaxed);
    if s.aborted.load(Ordering::Relaxed) || !patch.range().contains_zero() {
        return Vec::new();
    }
    if level == s.depth {
        if s.leaves.fetch_add(1, Ordering::Relaxed) >= s.budget {
            s.aborted.store(true, Ordering::Relaxed);
        }
        let mut signs = (false, false);
        let mut nodes = VERIFY_NODES;
        let kept = verify(patch, VERIFY_LEVELS, &mut signs, &mut nodes);
        s.nodes.fetch_add((VERIFY_NODES - nodes) as u64, Ordering::Relaxed);
        if !kept {
            return Vec::new();
        }
        return vec![Leaf {
            i,
            j,
            pos: signs.0,
            neg: signs.1,
        }];
    }
    let kids = patch.subdivide();
    let offsets = [(0, 0), (1, 0), (0, 1), (1, 1)];
    let visit = |(kid, (di, dj)): (&Patch, &(u32, u32))| explore(kid, 2 * i + di, 2 * j + dj, level + 1, s);
    if level < PARALLEL_LEVELS {
        kids.par_iter()
            .zip(offsets.par_iter())
            .map(visit)
            .collect::<Vec<_>>()
            .concat()
    } else {
        kids.iter().zip(offsets.iter()).flat_map(visit).collect()
    }
}

/// Groups cells sharing an edge or a corner.
fn classify(mut leaves: Vec<Leaf>) -> (Vec<OccupiedCell>, usize, usize) {
    leaves.sort_by_key(|l| (l.i, l.j));
    let find = |i: u32, j: u32| leaves.binary_search_by_key(&(i, j), |l| (l.i, l.j)).ok();
    let mut uf = UnionFind::<usize>::new(leaves.len());
    for (a, l) in leaves.iter().enumerate() {
        let neighbours = [
            (l.i, l.j.wrapping_add(1)),
            (l.i + 1, l.j.wrapping_sub(1)),
            (l.i + 1, l.j),
            (l.i + 1, l.j.wrapping_add(1)),
        ];
        for (ni, nj) in neighbours {
            if let Some(b) = find(ni, nj) {
                uf.union(a, b);
            }
        }
    }
    let mut class_of_root = std::collections::HashMap::new();
    let mut signs: Vec<(bool, bool)> = Vec::new();
    let cells = leaves
        .iter()
        .enumerate()
        .map(|(a, l)| {
            let root = uf.find(a);
            let next = class_of_root.len();
            let class = *class_of_root.entry(root).or_insert(next);
            if class == signs.len() {
                signs.push((false, false));
            }
            signs[class].0 |= l.pos;
            signs[class].1 |= l.neg;
            OccupiedCell { i: l.i, j: l.j, class }
        })
        .collect();
    let certified = signs.iter().filter(|(p, n)| *p && *n).count();
    (cells, signs.len(), certified)
}

struct Run {
    cells: Vec<OccupiedCell>,
    count: usize,
    certified: usize,
    nodes: u64,
}

fn run(root: &Patch, depth: u32, budget: u64) -> Result<Run, NumTopoError> {
    let search = Search {
        depth,
        budget,
        nodes: AtomicU64::new(0),
        leaves: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
    };
    let leaves = explore(root, 0, 0, 0, &search);
    if search.aborted.load(Ordering::Relaxed) {
        return Err(NumTopoError::LeafBudget { limit: budget });
    }
    let (cells, count, certified) = classify(leaves);
    Ok(Run {
        cells,
        count,
        certified,
        nodes: search.nodes.load(Ordering::Relaxed),
    })
}

/// Counts the connected pieces of `{f = 0}` in the section box.
///
/// In auto mode the depth grows from [`AUTO_MIN_DEPTH`] until three
/// successive depths give the same fully certified count, or
/// [`AUTO_MAX_DEPTH`] is reached.
pub fn count_components(spec: &SectionSpec) -> Result<ComponentCount, NumTopoError> {
    let root = Patch::from_exact(&bernstein_coefficients(&spec.restricted()));
    let depths: Vec<u32> = match spec.depth() {
        Some(d) => vec![d],
        None => (AUTO_MIN_DEPTH..=AUTO_MAX_DEPTH).collect(),
    };
    let mut history = Vec::new();
    let mut examined = 0;
    let mut last = None;
    let mut streak = 0;
    for &d in &depths {
        let r = run(&root, d, spec.leaf_budget)?;
        examined += r.nodes;
        let settled = r.certified == r.count;
        streak = match history.last() {
            Some(&(_, c)) if c == r.count && settled => streak + 1,
            _ if settled => 1,
            _ => 0,
        };
        history.push((d, r.count));
        last = Some((d, r));
        if streak >= 3 {
            break;
        }
    }
    let (depth, r) = last.expect("at least one depth");
    Ok(ComponentCount {
        count: r.count,
        certified: r.certified,
        status: if r.certified == r.count {
            CountStatus::CertifiedLowerBound
        } else {
            CountStatus::Heuristic
        },
        cells_examined: examined,
        depth,
        history,
        occupied: r.cells,
    })
}

/// Writes the occupied cells as `xmin,xmax,ymin,ymax,class` rows in the
/// box's coordinates.
pub fn write_cells_csv<W: Write>(spec: &SectionSpec, result: &ComponentCount, mut out: W) -> io::Result<()> {
    let f = |c: &crate::polyring::Coeff| c.to_f64().unwrap_or(f64::NAN);
    let (x0, x1, y0, y1) = (f(&spec.rect[0]), f(&spec.rect[1]), f(&spec.rect[2]), f(&spec.rect[3]));
    let n = 2f64.powi(result.depth as i32);
    let (hx, hy) = ((x1 - x0) / n, (y1 - y0) / n);
    let [a, b] = spec.free_names();
    writeln!(out, "{a}_min,{a}_max,{b}_min,{b}_max,class")?;
    for c in &result.occupied {
        let (xi, yj) = (x0 + hx * c.i as f64, y0 + hy * c.j as f64);
        writeln!(out, "{},{},{},{},{}", xi, xi + hx, yj, yj + hy, c.class)?;
    }
    Ok(())
}
