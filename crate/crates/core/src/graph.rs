//! Undirected simple graphs on at most 64 vertices, one `u64` bitset per vertex.

use crate::error::{Error, Result};

/// Maximum supported order; a vertex set fits in one machine word.
pub const MAX_ORDER: usize = 64;

/// Iterate the set bits of a word as vertex indices.
pub(crate) fn bits(word: u64) -> BitIter {
    BitIter(word)
}

pub(crate) struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// An undirected simple graph with `1 <= n <= 64` vertices labeled `0..n`.
///
/// `adj[v]` is the open neighborhood of `v` as a bitset. No self-loops,
/// symmetric adjacency, and no bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(
            (1..=MAX_ORDER).contains(&n),
            "order {n} out of range 1..=64"
        );
        Graph { n, adj: vec![0; n] }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        let mask = mask_below(n);
        for v in 0..n {
            g.adj[v] = mask & !(1 << v);
        }
        g
    }

    /// The path `P_n` with edges `i ~ i+1`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 0..n.saturating_sub(1) {
            g.insert_edge(i, i + 1);
        }
        g
    }

    /// The cycle `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.insert_edge(0, n - 1);
        g
    }

    /// The star `K_{1,n-1}` with center 0 (requires `n >= 2`).
    pub fn star(n: usize) -> Graph {
        assert!(n >= 2, "a star needs at least 2 vertices");
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert_edge(0, v);
        }
        g
    }

    /// The complete bipartite graph `K_{a,b}`, side `a` labeled first.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::join(&Graph::empty(a), &Graph::empty(b)).expect("order checked by caller")
    }

    /// Build a graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Precondition(format!(
                "order {n} out of range 1..=64"
            )));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Precondition(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Copy of `self` with the edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u] &= !(1u64 << v);
        g.adj[v] &= !(1u64 << u);
        g
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Open neighborhood of `v` as a bitset.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]` as a bitset.
    pub fn closed_neighborhood(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !mask_below(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// All-ones bitset over the vertex set.
    pub fn vertex_mask(&self) -> u64 {
        mask_below(self.n)
    }

    /// True iff one BFS from vertex 0 reaches all `n` vertices.
    pub fn is_connected(&self) -> bool {
        let mut seen: u64 = 1;
        let mut frontier: u64 = 1;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertex_mask()
    }

    /// The complement graph: `uv` is an edge iff it is not an edge of `self`.
    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| mask & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// The join `g1 v g2`: disjoint union plus all cross edges.
    /// Vertices of `g1` keep their labels; `g2` is shifted by `g1.order()`.
    pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
        let mut g = Graph::disjoint_union(g1, g2)?;
        let n1 = g1.n;
        let left = mask_below(n1);
        let right = mask_below(g.n) & !left;
        for v in 0..n1 {
            g.adj[v] |= right;
        }
        for v in n1..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// The disjoint union `g1 + g2`, with `g2` labels shifted by `g1.order()`.
    pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
        let n = g1.n + g2.n;
        if n > MAX_ORDER {
            return Err(Error::OrderOverflow(n));
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&g1.adj);
        adj.extend(g2.adj.iter().map(|w| w << g1.n));
        Ok(Graph { n, adj })
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Bitset of all vertices `< n`.
pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
