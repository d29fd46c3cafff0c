use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::BoundsError;
use crate::distance::{diameter, distance_matrix};
use crate::exact::distinct_eigenvalue_count;
use crate::graph::Graph;

pub const MIN_TREE_ORDER: usize = 2;
pub const MAX_TREE_ORDER: usize = 12;

/// Center vertices of a tree: one or two, found by peeling leaves.
fn centers(t: &Graph) -> Vec<usize> {
    let n = t.order();
    let mut deg = t.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(t: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut children: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| rooted_code(t, w, Some(v)))
        .collect();
    children.sort_unstable();
    format!("({})", children.concat())
}

/// Parenthesis encoding of a tree rooted at its center; for a bicentral
/// tree the smaller of the two rootings. Equal codes exactly when the trees
/// are isomorphic.
pub fn tree_canonical_code(t: &Graph) -> Result<String, BoundsError> {
    if !t.is_tree() {
        return Err(BoundsError::NotATree);
    }
    Ok(centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c, None))
        .min()
        .expect("a tree has a center"))
}

/// One tree per isomorphism class on `n` vertices, ordered by canonical
/// code. Built by attaching a leaf to every vertex of every tree on
/// `n − 1` vertices and keeping the first tree seen for each code.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, BoundsError> {
    if !(MIN_TREE_ORDER..=MAX_TREE_ORDER).contains(&n) {
        return Err(BoundsError::TreeOrder {
            n,
            min: MIN_TREE_ORDER,
            max: MAX_TREE_ORDER,
        });
    }
    let mut level = vec![Graph::new(2, [(0, 1)]).expect("K_2")];
    for m in 3..=n {
        let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
        for t in &level {
            for v in 0..m - 1 {
                let grown = Graph::new(m, t.edges().iter().copied().chain([(v, m - 1)]))
                    .expect("leaf attachment");
                let code = tree_canonical_code(&grown)?;
                seen.entry(code).or_insert(grown);
            }
        }
        level = seen.into_values().collect();
    }
    Ok(level)
}

/// Distinct distance eigenvalue count of a tree compared with its diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeBoundRecord {
    pub q_d: usize,
    pub diam: usize,
    /// `q_D >= diam + 1`
    pub strong_holds: bool,
    /// `q_D >= floor(diam / 2)`
    pub weak_holds: bool,
    /// `q_D >= ceil(diam / 2)`, tracked but not asserted
    pub ceil_holds: bool,
}

pub fn check_tree_bounds(t: &Graph) -> Result<TreeBoundRecord, BoundsError> {
    if !t.is_tree() {
        return Err(BoundsError::NotATree);
    }
    let d = distance_matrix(t).map_err(|_| BoundsError::NotATree)?;
    let q_d = distinct_eigenvalue_count(&d).map_err(|e| BoundsError::Linalg(e.to_string()))?;
    let diam = diameter(t).map_err(|_| BoundsError::NotATree)?;
    Ok(TreeBoundRecord {
        q_d,
        diam,
        strong_holds: q_d > diam,
        weak_holds: q_d >= diam / 2,
        ceil_holds: q_d >= diam.div_ceil(2),
    })
}

/// Per-order tally of bound violations over all trees of that order.
/// Violating trees are kept as edge lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeOrderSummary {
    pub order: usize,
    pub trees: usize,
    pub strong_violations: usize,
    pub weak_violations: usize,
    pub ceil_violations: usize,
    pub counterexamples: Vec<Vec<(usize, usize)>>,
}

pub fn summarize_order(n: usize) -> Result<TreeOrderSummary, BoundsError> {
    let trees = enumerate_trees(n)?;
    let records = trees
        .par_iter()
        .map(check_tree_bounds)
        .collect::<Result<Vec<_>, _>>()?;
    let mut summary = TreeOrderSummary {
        order: n,
        trees: trees.len(),
        strong_violations: 0,
        weak_violations: 0,
        ceil_violations: 0,
        counterexamples: Vec::new(),
    };
    for (t, r) in trees.iter().zip(&records) {
        summary.strong_violations += usize::from(!r.strong_holds);
        summary.weak_violations += usize::from(!r.weak_holds);
        summary.ceil_violations += usize::from(!r.ceil_holds);
        if !r.strong_holds || !r.weak_holds {
            summary.counterexamples.push(t.edges().to_vec());
        }
    }
    Ok(summary)
}

/// Summaries for every order from 2 through `max_order`.
pub fn verify_trees(max_order: usize) -> Result<Vec<TreeOrderSummary>, BoundsError> {
    if !(MIN_TREE_ORDER..=MAX_TREE_ORDER).contains(&max_order) {
        return Err(BoundsError::TreeOrder {
            n: max_order,
            min: MIN_TREE_ORDER,
            max: MAX_TREE_ORDER,
        });
    }
    (MIN_TREE_ORDER..=max_order).map(summarize_order).collect()
}
