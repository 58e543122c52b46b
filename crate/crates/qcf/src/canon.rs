//! Exact canonical forms for small graphs.
//!
//! The key is the minimum upper-triangle bit string of the adjacency
//! matrix over all vertex relabelings compatible with the stable
//! neighborhood-refinement coloring. Two graphs get equal keys exactly
//! when they are isomorphic: the key encodes a relabeled copy of the
//! graph, and the restricted permutation set corresponds across any
//! isomorphism because the refinement coloring is isomorphism-invariant.
//!
//! Intended for the enumeration scale; the search is exponential in the
//! worst case, so orders above the ceiling are rejected.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard default for the exact search. Overridable per call.
pub const DEFAULT_CANON_CEILING: usize = 12;

/// Total-order isomorphism key: order followed by the packed canonical
/// upper triangle (column-major), most significant bit first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Hex rendering of (n, bits), stable across runs; used in reports.
    pub fn to_hex(&self) -> String {
        format!("{:02x}:{:032x}", self.n, self.bits)
    }

    /// Rebuild the canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> (127 - bit_index(i, j)) & 1 == 1 {
                    g.add_edge(i, j).expect("triangle bits are loop-free");
                }
            }
        }
        g
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

/// Upper-triangle position of pair (i, j), i < j, column-major.
fn bit_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with_ceiling(g, DEFAULT_CANON_CEILING)
}

pub fn canonical_form_with_ceiling(g: &Graph, ceiling: usize) -> Result<CanonicalForm> {
    let n = g.n();
    if n > ceiling.min(16) {
        return Err(Error::Capacity(format!(
            "canonical form needs n <= {}, got {n}",
            ceiling.min(16)
        )));
    }
    if n <= 1 {
        return Ok(CanonicalForm { n, bits: 0 });
    }

    let cells = refined_cells(g);
    let mut search = Search {
        g,
        n,
        cells,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.dfs(0, 0);
    Ok(CanonicalForm {
        n,
        bits: search.best.expect("search places all vertices"),
    })
}

/// Iterated neighborhood refinement. Returns the stable cells ordered by
/// an isomorphism-invariant signature; vertices within a cell are the
/// branch candidates of the canonical search.
fn refined_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        // signature: own color + sorted neighbor colors
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<usize> = g.neighbors(v).iter().map(|&u| color[u]).collect();
                nc.sort_unstable();
                (color[v], nc)
            })
            .collect();
        let mut sorted: Vec<(usize, Vec<usize>)> = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .drain(..)
            .map(|s| sorted.binary_search(&s).expect("own signature present"))
            .collect();
        let stable = {
            let old_count = {
                let mut c = color.clone();
                c.sort_unstable();
                c.dedup();
                c.len()
            };
            old_count == sorted.len()
        };
        color = next;
        if stable {
            break;
        }
    }
    let cell_count = color.iter().max().map_or(0, |&c| c + 1);
    let mut cells = vec![Vec::new(); cell_count];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    cells: Vec<Vec<usize>>,
    placed: Vec<usize>,
    used: Vec<bool>,
    best: Option<u128>,
}

impl Search<'_> {
    /// Branch-and-bound over cell-respecting placements, minimizing the
    /// packed bit string. Every node compares its prefix against the
    /// live incumbent: a greater prefix can never reach the minimum, a
    /// smaller or equal one might (the incumbent may still improve
    /// inside a sibling subtree, so only Greater prunes).
    fn dfs(&mut self, pos: usize, key: u128) {
        if pos == self.n {
            if self.best.is_none_or(|b| key < b) {
                self.best = Some(key);
            }
            return;
        }
        let cell_idx = self.cell_of_position(pos);
        // candidates: snapshot to sidestep the borrow during recursion
        let candidates: Vec<usize> = self.cells[cell_idx]
            .iter()
            .copied()
            .filter(|&v| !self.used[v])
            .collect();
        for v in candidates {
            let mut col = 0u128;
            for (i, &u) in self.placed.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    col |= 1 << (127 - bit_index(i, pos));
                }
            }
            let new_key = key | col;
            if let Some(b) = self.best {
                let t = (pos + 1) * pos / 2;
                let mask = if t == 0 { 0 } else { !0u128 << (128 - t) };
                if (new_key & mask) > (b & mask) {
                    continue;
                }
            }
            self.used[v] = true;
            self.placed.push(v);
            self.dfs(pos + 1, new_key);
            self.placed.pop();
            self.used[v] = false;
        }
    }

    fn cell_of_position(&self, pos: usize) -> usize {
        let mut acc = 0;
        for (i, cell) in self.cells.iter().enumerate() {
            acc += cell.len();
            if pos < acc {
                return i;
            }
        }
        unreachable!("position beyond vertex count")
    }
}
