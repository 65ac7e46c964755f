//! All-pairs shortest-path distances by per-vertex BFS over bitset frontiers.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Hop distances between all vertex pairs.
///
/// Unreachable pairs hold the sentinel value `n`, strictly larger than any
/// real distance in a graph of order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    /// The sentinel stored for unreachable pairs.
    pub fn sentinel(&self) -> u32 {
        self.n as u32
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// Row of distances from `u`.
    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Eccentricity of `u`; the sentinel if some vertex is unreachable.
    pub fn eccentricity(&self, u: usize) -> u32 {
        *self.row(u).iter().max().unwrap()
    }

    /// Largest finite pairwise distance, or `None` if the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let max = self.d.iter().copied().max().unwrap();
        (max < self.sentinel() || self.n == 1).then_some(if self.n == 1 { 0 } else { max })
    }

    pub fn is_connected(&self) -> bool {
        self.diameter().is_some()
    }
}

/// BFS-exact hop distances for every vertex pair.
pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let sentinel = n as u32;
    let mut d = vec![sentinel; n * n];
    for src in 0..n {
        let row = &mut d[src * n..(src + 1) * n];
        let mut seen: u64 = 1 << src;
        let mut frontier: u64 = seen;
        let mut depth = 0u32;
        row[src] = 0;
        while frontier != 0 {
            depth += 1;
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= g.neighbors(v);
            }
            frontier = next & !seen;
            seen |= next;
            for v in bits(frontier) {
                row[v] = depth;
            }
        }
    }
    DistanceMatrix { n, d }
}

/// Diameter of a connected graph; errors on disconnected input.
pub fn diameter(g: &Graph) -> Result<u32> {
    distances(g).diameter().ok_or(Error::Disconnected)
}
