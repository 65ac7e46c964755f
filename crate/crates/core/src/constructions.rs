//! Constructive partition builders: augmenting a resolving partition into a
//! resolving-dominating one at the cost of one extra part, the degree-k
//! fusion partition with `n - k` parts, and the explicit 3-part partitions
//! of paths and cycles.

use crate::distance::distances;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::partition::{is_dominating, is_rd, is_resolving, Partition};

/// Which pairing rule the fusion construction used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FusionTag {
    /// At least k non-leaf outer vertices: pair them with neighbors of u.
    ManyNonleaf,
    /// A matching over non-adjacent (neighbor, leaf) pairs, possibly padded
    /// with non-leaf pairs.
    Matched,
    /// deg(u) = k with all outer vertices leaves, saturated by a matching.
    MatchedDegenerate,
    /// All distance-2 leaves hang on one neighbor of u; u itself is paired.
    CommonSupport,
}

/// The case taken by [`fusion_partition`], with the vertex pairs it chose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionCase {
    pub tag: FusionTag,
    pub pairs: Vec<(usize, usize)>,
}

/// Turn a resolving partition into a resolving-dominating one.
///
/// Returns the input unchanged when it already dominates. Otherwise the
/// vertices whose closed neighborhood sits inside their own part are split
/// off: per connected component of that set, singletons move whole and
/// larger components contribute one color class of a BFS spanning tree
/// (the class of the minimum-index root). The result has one extra part
/// and is verified to resolve and dominate before being returned.
pub fn rd_augment(g: &Graph, p: &Partition) -> Result<Partition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    if n < 3 {
        return Err(Error::Precondition(format!(
            "augmentation needs at least 3 vertices, got {n}"
        )));
    }
    if p.n() != n {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {n}",
            p.n()
        )));
    }
    let dm = distances(g);
    if !is_resolving(&dm, p) {
        return Err(Error::Precondition(
            "input partition is not resolving".into(),
        ));
    }
    if is_dominating(&dm, p) {
        return Ok(p.clone());
    }

    // Vertices with no neighbor outside their own part.
    let mut undominated = 0u64;
    for v in 0..n {
        let own = p.part_bits(p.part_of(v));
        if g.closed_neighborhood(v) & !own == 0 {
            undominated |= 1 << v;
        }
    }
    debug_assert!(undominated != 0);

    // One color class per connected component of the induced subgraph.
    let mut moved = 0u64;
    let mut todo = undominated;
    while todo != 0 {
        let root = todo.trailing_zeros() as usize;
        let mut even = 1u64 << root;
        let mut seen = even;
        let mut frontier = even;
        let mut depth = 0usize;
        while frontier != 0 {
            depth += 1;
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= g.neighbors(v) & undominated;
            }
            frontier = next & !seen;
            seen |= frontier;
            if depth.is_multiple_of(2) {
                even |= frontier;
            }
        }
        // Singleton components move whole; larger ones move the root's class.
        moved |= even;
        todo &= !seen;
    }

    let mut assign: Vec<usize> = (0..n).map(|v| p.part_of(v)).collect();
    for v in bits(moved) {
        assign[v] = p.k();
    }
    for j in 0..p.k() {
        if p.part_bits(j) & !moved == 0 {
            return Err(Error::InternalInvariant(format!(
                "augmentation would empty part {j}"
            )));
        }
    }
    // Every moved vertex keeps a neighbor in what remains of its old part.
    for v in bits(moved) {
        let own = p.part_bits(p.part_of(v));
        if g.neighbors(v) & own & !moved == 0 {
            return Err(Error::InternalInvariant(format!(
                "vertex {v} lost all neighbors in its original part"
            )));
        }
    }
    let out = Partition::from_assignment(&assign)?;
    if !is_rd(&dm, &out) {
        return Err(Error::InternalInvariant(
            "augmented partition fails the resolving-dominating predicates".into(),
        ));
    }
    Ok(out)
}

/// Maximum bipartite matching by augmenting paths, scanning the left side
/// in index order. `adj[z]` holds the right-side candidates of `z` as bits.
/// Returns `match_of_left[z] = Some(right)` for matched left vertices.
fn max_matching(left: usize, right: usize, adj: &[u64]) -> Vec<Option<usize>> {
    let mut match_of_right: Vec<Option<usize>> = vec![None; right];

    fn augment(
        z: usize,
        adj: &[u64],
        match_of_right: &mut [Option<usize>],
        visited: &mut u64,
    ) -> bool {
        for x in bits(adj[z] & !*visited) {
            *visited |= 1 << x;
            if match_of_right[x].is_none()
                || augment(match_of_right[x].unwrap(), adj, match_of_right, visited)
            {
                match_of_right[x] = Some(z);
                return true;
            }
        }
        false
    }

    for z in 0..left {
        let mut visited = 0u64;
        augment(z, adj, &mut match_of_right, &mut visited);
    }
    let mut match_of_left = vec![None; left];
    for (x, m) in match_of_right.iter().enumerate() {
        if let Some(z) = *m {
            match_of_left[z] = Some(x);
        }
    }
    match_of_left
}

/// Build a resolving-dominating partition with exactly `n - k` parts
/// around a vertex `u` of degree between `k` and `n - k - 1`.
pub fn fusion_partition(g: &Graph, u: usize, k: usize) -> Result<Partition> {
    fusion_partition_with_case(g, u, k).map(|(p, _)| p)
}

/// As [`fusion_partition`], also reporting which pairing rule applied.
pub fn fusion_partition_with_case(
    g: &Graph,
    u: usize,
    k: usize,
) -> Result<(Partition, FusionCase)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let d = g.degree(u);
    if k < 2 {
        return Err(Error::Precondition(format!("k >= 2 required, got k={k}")));
    }
    if n < 2 * k + 1 {
        return Err(Error::Precondition(format!(
            "n >= 2k+1 required, got n={n}, k={k}"
        )));
    }
    if d < k {
        return Err(Error::Precondition(format!(
            "k <= deg(u) required, got deg({u})={d}, k={k}"
        )));
    }
    if d > n - k - 1 {
        return Err(Error::Precondition(format!(
            "deg(u) <= n-k-1 required, got deg({u})={d}, n-k-1={}",
            n - k - 1
        )));
    }

    let dm = distances(g);
    let nbrs: Vec<usize> = bits(g.neighbors(u)).collect();
    // Leaves at distance 2 from u, and all remaining outer vertices.
    let mut leaves = Vec::new();
    let mut outer = Vec::new();
    for v in 0..n {
        match dm.dist(u, v) {
            0 | 1 => {}
            2 if g.is_leaf(v) => leaves.push(v),
            _ => outer.push(v),
        }
    }
    let c = outer.len();
    debug_assert_eq!(leaves.len() + c, n - d - 1);

    let (pairs, tag) = if c >= k {
        let pairs: Vec<(usize, usize)> = nbrs
            .iter()
            .copied()
            .zip(outer.iter().copied())
            .take(k)
            .collect();
        (pairs, FusionTag::ManyNonleaf)
    } else {
        let h = k - c;
        // Bipartite graph on N(u) x leaves joining non-adjacent pairs.
        let h_adj: Vec<u64> = leaves
            .iter()
            .map(|&z| {
                let mut mask = 0u64;
                for (i, &x) in nbrs.iter().enumerate() {
                    if !g.has_edge(z, x) {
                        mask |= 1 << i;
                    }
                }
                mask
            })
            .collect();
        // Every leaf set of size below k must see at least that many
        // neighbor candidates; each leaf alone already sees d-1 of them.
        // Checked exhaustively at desk scale; the matching saturation
        // checks below cover larger inputs.
        for w in 1u64..(1u64 << leaves.len().min(20)) {
            let size = w.count_ones() as usize;
            if size > k - 1 {
                continue;
            }
            let seen = bits(w).fold(0u64, |acc, zi| acc | h_adj[zi]);
            if (seen.count_ones() as usize) < size {
                return Err(Error::InternalInvariant(format!(
                    "matching precondition failed for a leaf set of size {size}"
                )));
            }
        }
        let match_of_leaf = max_matching(leaves.len(), nbrs.len(), &h_adj);
        let matched: Vec<(usize, usize)> = match_of_leaf
            .iter()
            .enumerate()
            .filter_map(|(zi, m)| m.map(|xi| (nbrs[xi], leaves[zi])))
            .collect();

        if h < k {
            if matched.len() < h {
                return Err(Error::InternalInvariant(format!(
                    "matching saturates {} leaves, needed {h}",
                    matched.len()
                )));
            }
            let mut pairs: Vec<(usize, usize)> = matched[..h].to_vec();
            let used: u64 = pairs.iter().fold(0, |acc, &(x, _)| acc | 1 << x);
            let free = nbrs.iter().copied().filter(|&x| used & (1 << x) == 0);
            pairs.extend(free.zip(outer.iter().copied()));
            debug_assert_eq!(pairs.len(), k);
            (pairs, FusionTag::Matched)
        } else if matched.len() >= k {
            let tag = if d == k {
                FusionTag::MatchedDegenerate
            } else {
                FusionTag::Matched
            };
            (matched[..k].to_vec(), tag)
        } else {
            // deg(u) = k and no saturating matching: every leaf must hang
            // on one common support vertex; pair u with a leaf instead.
            if d != k {
                return Err(Error::InternalInvariant(format!(
                    "matching saturates {} leaves, needed {k} with deg(u)={d}",
                    matched.len()
                )));
            }
            let support = bits(g.neighbors(leaves[0])).next().unwrap();
            if leaves.iter().any(|&z| g.neighbors(z) != 1u64 << support) {
                return Err(Error::InternalInvariant(
                    "unsaturated matching without a common support vertex".into(),
                ));
            }
            let mut pairs = vec![(u, leaves[0])];
            let others = nbrs.iter().copied().filter(|&x| x != support);
            pairs.extend(others.zip(leaves[1..].iter().copied()));
            debug_assert_eq!(pairs.len(), k);
            (pairs, FusionTag::CommonSupport)
        }
    };

    let mut assign: Vec<usize> = (0..n).collect();
    for &(a, b) in &pairs {
        assign[b] = assign[a];
    }
    let partition = Partition::from_assignment(&assign)?;
    if partition.k() != n - k {
        return Err(Error::InternalInvariant(format!(
            "fusion produced {} parts, expected {}",
            partition.k(),
            n - k
        )));
    }
    if !is_rd(&dm, &partition) {
        return Err(Error::InternalInvariant(
            "fusion partition fails the resolving-dominating predicates".into(),
        ));
    }
    Ok((partition, FusionCase { tag, pairs }))
}

/// The explicit 3-part resolving-dominating partition of a path or cycle
/// labeled consecutively from 0: `{0} | odds | evens>0` for paths and odd
/// cycles, `{0,1} | evens>1 | odds>1` for even cycles.
pub fn path_cycle_partition(n: usize, cycle: bool) -> Result<Partition> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "need at least 3 vertices, got {n}"
        )));
    }
    let assign: Vec<usize> = if cycle && n.is_multiple_of(2) {
        (0..n)
            .map(|v| match v {
                0 | 1 => 0,
                v if v % 2 == 0 => 1,
                _ => 2,
            })
            .collect()
    } else {
        (0..n)
            .map(|v| match v {
                0 => 0,
                v if v % 2 == 1 => 1,
                _ => 2,
            })
            .collect()
    };
    Partition::from_assignment(&assign)
}
