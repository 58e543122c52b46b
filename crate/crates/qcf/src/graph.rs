//! Simple undirected graphs: construction, named families, graph algebra
//! (disjoint union, join, copies), and the structural predicates used by
//! the verification suite.
//!
//! Vertices are labeled `0..n`. The adjacency is kept as sorted neighbor
//! lists; graphs are immutable after construction except through the
//! explicit edit methods.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Build from an edge list. Rejects loops, out-of-range endpoints and
    /// duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidParameter(format!(
                "edge ({u},{v}) out of range for order {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("self-loop at {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::InvalidParameter(format!("duplicate edge ({u},{v})"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos_v = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos_v, u);
                Ok(())
            }
        }
    }

    /// Remove an edge; no-op if absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if let Ok(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].remove(pos);
            let pos_v = self.adj[v].binary_search(&u).unwrap();
            self.adj[v].remove(pos_v);
        }
    }

    /// Edges as (u, v) with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).min().unwrap_or(0)
    }

    /// Degree sequence, descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(|a| a.len()).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    /// Two-coloring if the graph is bipartite, one color per vertex
    /// (component by component), else `None`.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True iff no two distinct vertices have two or more common neighbors
    /// (equivalently: no 4-cycle subgraph).
    pub fn is_c4_free(&self) -> bool {
        for u in 0..self.n {
            for &w in &self.adj[u] {
                // count via sorted-list intersection, pair (u,v) through w
                for &v in &self.adj[w] {
                    if v <= u {
                        continue;
                    }
                    // u and v share neighbor w; a second common neighbor closes a C4
                    if common_neighbor_count(&self.adj[u], &self.adj[v]) >= 2 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// m - n + number of components.
    pub fn cyclomatic_number(&self) -> usize {
        self.m() + self.component_count() - self.n
    }

    /// Connected with exactly n + k - 1 edges.
    pub fn is_k_cyclic(&self, k: usize) -> bool {
        self.is_connected() && self.m() + 1 == self.n + k
    }

    /// Relabel: vertex v becomes perm[v].
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![Vec::new(); self.n];
        for u in 0..self.n {
            let mut row: Vec<usize> = self.adj[u].iter().map(|&v| perm[v]).collect();
            row.sort_unstable();
            adj[perm[u]] = row;
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n`.
    pub fn union(&self, other: &Graph) -> Graph {
        let mut adj = self.adj.clone();
        for row in &other.adj {
            adj.push(row.iter().map(|&v| v + self.n).collect());
        }
        Graph {
            n: self.n + other.n,
            adj,
        }
    }

    /// Disjoint union plus all cross edges.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.union(other);
        for u in 0..self.n {
            for v in self.n..g.n {
                g.add_edge(u, v).expect("cross edges are fresh");
            }
        }
        g
    }

    /// k disjoint copies of self.
    pub fn copies(&self, k: usize) -> Graph {
        assert!(k >= 1, "need at least one copy");
        let mut g = self.clone();
        for _ in 1..k {
            g = g.union(self);
        }
        g
    }
}

fn common_neighbor_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// The four standard families addressable from the constructor DSL.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Star,
    Cycle,
    Complete,
}

pub fn build_named(family: Family, n: usize) -> Result<Graph> {
    match family {
        Family::Path => path(n),
        Family::Star => star(n),
        Family::Cycle => cycle(n),
        Family::Complete => complete(n),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    require_order(n)?;
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// Star with center 0.
pub fn star(n: usize) -> Result<Graph> {
    require_order(n)?;
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    require_order(n)?;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

fn require_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter("order must be positive".into()))
    } else {
        Ok(())
    }
}

/// The conjectured-extremal k-cyclic family: a hub (vertex 0) joined to k
/// disjoint edges and n-2k-1 isolated vertices. Connected, C4-free,
/// m = n+k-1, hub degree n-1.
///
/// Layout: hub 0; matched pairs (1,2), (3,4), ..., (2k-1, 2k); pendants
/// 2k+1..n.
pub fn extremal_kcyclic(n: usize, k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if n < 2 * k + 1 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2k+1, got n={n}, k={k}"
        )));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    for i in 0..k {
        edges.push((2 * i + 1, 2 * i + 2));
    }
    Graph::from_edges(n, &edges)
}

/// Tag for the two C4-free graphs with maximum degree n-2 in each cyclic
/// class: the detached vertex hangs off a pendant neighbor of the hub (A)
/// or off a triangle vertex (B).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Variant {
    A,
    B,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variant::A => write!(f, "A"),
            Variant::B => write!(f, "B"),
        }
    }
}

/// The two unicyclic C4-free graphs with maximum degree n-2.
///
/// Hub 0 carries one triangle {0,1,2} and pendants 3..n-1; vertex n-1 is
/// attached to pendant-neighbor 3 (variant A) or to triangle vertex 1
/// (variant B).
pub fn unicyclic_delta_n2(n: usize, variant: Variant) -> Result<Graph> {
    if n < 6 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 6 for the unicyclic family, got {n}"
        )));
    }
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for p in 3..n - 1 {
        edges.push((0, p));
    }
    edges.push(match variant {
        Variant::A => (3, n - 1),
        Variant::B => (1, n - 1),
    });
    Graph::from_edges(n, &edges)
}

/// The two bicyclic C4-free graphs with maximum degree n-2.
///
/// Hub 0 carries two triangles {0,1,2} and {0,3,4} plus pendants 5..n-1;
/// vertex n-1 is attached to pendant-neighbor 5 (variant A) or to triangle
/// vertex 1 (variant B).
pub fn bicyclic_delta_n2(n: usize, variant: Variant) -> Result<Graph> {
    if n < 8 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 8 for the bicyclic family, got {n}"
        )));
    }
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)];
    for p in 5..n - 1 {
        edges.push((0, p));
    }
    edges.push(match variant {
        Variant::A => (5, n - 1),
        Variant::B => (1, n - 1),
    });
    Graph::from_edges(n, &edges)
}

/// Parse the plain text format: first line "n m", then m lines "u v".
pub fn parse_text(input: &str) -> Result<Graph> {
    let mut lines = input.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph text".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = parse_field(it.next(), "n")?;
    let m: usize = parse_field(it.next(), "m")?;
    let mut g = Graph::empty(n);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {m} edge lines")))?;
        let mut it = line.split_whitespace();
        let u: usize = parse_field(it.next(), "u")?;
        let v: usize = parse_field(it.next(), "v")?;
        g.add_edge(u, v)
            .map_err(|e| Error::Parse(format!("bad edge line {line:?}: {e}")))?;
    }
    Ok(g)
}

pub fn write_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_field(field: Option<&str>, name: &str) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse(format!("missing field {name}")))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad field {name}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        let s5 = star(5).unwrap();
        assert_eq!(s5.degree_sequence(), vec![4, 1, 1, 1, 1]);

        let c6 = cycle(6).unwrap();
        assert_eq!(c6.n(), 6);
        assert_eq!(c6.m(), 6);
        assert!(c6.degree_sequence().iter().all(|&d| d == 2));

        let k4 = complete(4).unwrap();
        assert_eq!(k4.m(), 6);
        assert!(k4.degree_sequence().iter().all(|&d| d == 3));

        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert_eq!(path(1).unwrap().m(), 0);
    }

    #[test]
    fn algebra() {
        let k1 = complete(1).unwrap();
        let k2 = complete(2).unwrap();

        // friendship graph: hub joined to two disjoint edges
        let f2 = k1.join(&k2.copies(2));
        assert_eq!(f2.n(), 5);
        assert_eq!(f2.m(), 6);

        let two_k2 = k2.union(&k2);
        assert_eq!(two_k2.n(), 4);
        assert_eq!(two_k2.m(), 2);
        assert_eq!(two_k2.component_count(), 2);

        let iso3 = k1.copies(3);
        assert_eq!(iso3.n(), 3);
        assert_eq!(iso3.m(), 0);

        // join(K_1, X) has a vertex of degree |V(X)|
        let x = path(4).unwrap();
        let joined = k1.join(&x);
        assert_eq!(joined.degree(0), 4);
    }

    #[test]
    fn extremal_family() {
        let g = extremal_kcyclic(5, 1).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 5);
        assert_eq!(g.degree_sequence(), vec![4, 2, 2, 1, 1]);

        let g = extremal_kcyclic(7, 2).unwrap();
        assert_eq!(g.m(), 8); // n + k - 1
        assert_eq!(g.degree_sequence(), vec![6, 2, 2, 2, 2, 1, 1]);

        let g = extremal_kcyclic(6, 1).unwrap();
        assert!(g.is_c4_free());
        assert_eq!(g.cyclomatic_number(), 1);
        assert!(g.is_k_cyclic(1));
        assert_eq!(g.max_degree(), 5);

        assert!(extremal_kcyclic(4, 2).is_err());
        assert!(extremal_kcyclic(5, 0).is_err());
        // n = 2k+1 (friendship graph) is constructible
        assert_eq!(extremal_kcyclic(5, 2).unwrap().m(), 6);
    }

    #[test]
    fn delta_n2_variants() {
        let a = unicyclic_delta_n2(6, Variant::A).unwrap();
        assert_eq!(a.degree_sequence(), vec![4, 2, 2, 2, 1, 1]);
        assert!(a.is_k_cyclic(1));
        assert!(a.is_c4_free());

        let b = unicyclic_delta_n2(6, Variant::B).unwrap();
        assert_eq!(b.degree_sequence(), vec![4, 3, 2, 1, 1, 1]);
        assert!(b.is_k_cyclic(1));
        assert!(b.is_c4_free());

        let a7 = unicyclic_delta_n2(7, Variant::A).unwrap();
        assert_eq!(a7.max_degree(), 5);
        assert_eq!(a7.m(), 7);

        assert!(unicyclic_delta_n2(5, Variant::A).is_err());

        let ba = bicyclic_delta_n2(8, Variant::A).unwrap();
        assert_eq!(ba.m(), 9);
        assert_eq!(ba.degree_sequence(), vec![6, 2, 2, 2, 2, 2, 1, 1]);
        assert!(ba.is_c4_free());

        let bb = bicyclic_delta_n2(8, Variant::B).unwrap();
        assert_eq!(bb.degree_sequence(), vec![6, 3, 2, 2, 2, 1, 1, 1]);

        let bb9 = bicyclic_delta_n2(9, Variant::B).unwrap();
        assert_eq!(bb9.max_degree(), 7);
        assert_eq!(bb9.cyclomatic_number(), 2);

        assert!(bicyclic_delta_n2(7, Variant::B).is_err());
    }

    #[test]
    fn c4_detection() {
        assert!(!cycle(4).unwrap().is_c4_free());
        assert!(extremal_kcyclic(7, 2).unwrap().is_c4_free());

        // K_{2,3} contains C_4
        let k1 = complete(1).unwrap();
        let k23 = k1.copies(2).join(&k1.copies(3));
        assert!(!k23.is_c4_free());

        assert!(cycle(5).unwrap().is_c4_free());
        assert!(complete(3).unwrap().is_c4_free());
        assert!(!complete(4).unwrap().is_c4_free());
    }

    /// Brute-force 4-cycle search over all ordered 4-subsets.
    fn has_c4_brute(g: &Graph) -> bool {
        let n = g.n();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if a < b && a < c && a < d && b != c && c != d && b != d
                            && g.has_edge(a, b)
                            && g.has_edge(b, c)
                            && g.has_edge(c, d)
                            && g.has_edge(d, a)
                        {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn c4_free_matches_brute_force() {
        // every graph on 5 vertices
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            assert_eq!(g.is_c4_free(), !has_c4_brute(&g), "mask {mask}");
        }
    }

    #[test]
    fn cyclomatic_and_k_cyclic() {
        assert_eq!(cycle(5).unwrap().cyclomatic_number(), 1);
        assert!(cycle(5).unwrap().is_k_cyclic(1));
        assert_eq!(path(7).unwrap().cyclomatic_number(), 0);
        assert_eq!(star(6).unwrap().cyclomatic_number(), 0);
        assert!(extremal_kcyclic(8, 3).unwrap().is_k_cyclic(3));
        // disconnected: never k-cyclic
        let g = complete(3).unwrap().union(&complete(3).unwrap());
        assert_eq!(g.cyclomatic_number(), 2);
        assert!(!g.is_k_cyclic(2));
    }

    #[test]
    fn text_roundtrip() {
        let g = extremal_kcyclic(7, 2).unwrap();
        let txt = write_text(&g);
        let h = parse_text(&txt).unwrap();
        assert_eq!(g, h);

        assert!(parse_text("").is_err());
        assert!(parse_text("2 1\n0 0\n").is_err());
        assert!(parse_text("2 2\n0 1\n0 1\n").is_err());
        assert!(parse_text("3 1\n0 5\n").is_err());
    }

    #[test]
    fn bipartition_basics() {
        assert!(path(5).unwrap().is_bipartite());
        assert!(cycle(6).unwrap().is_bipartite());
        assert!(!cycle(5).unwrap().is_bipartite());
        assert!(!extremal_kcyclic(6, 1).unwrap().is_bipartite());
    }
}
