//! Deterministic generators for every named graph family: classical graphs,
//! the extremal families of the characterization results, the 17-member
//! atlas of graphs whose minimum resolving-dominating partition has n-2
//! parts, and the two-parameter caterpillar.

use std::str::FromStr;

use crate::enumeration::are_isomorphic;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{is_resolving, partitions_into, Partition};

/// A named family with its size parameters.
///
/// Textual form: `path:9`, `h11:8`, `caterpillar:2,3`, `complete_bipartite:2,5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    /// `K_{n-2} v empty(2)`.
    CompleteSplit(usize),
    /// `K_1 v (K_1 + K_{n-2})`: a universal vertex over a clique plus one leaf.
    SplitPlusLeaf(usize),
    /// Atlas member `H_i` (1 <= i <= 17) of order `n >= 7`.
    H(u8, usize),
    /// Spine of k vertices, one leg leaf per spine vertex, h extra leaves
    /// on the first spine vertex; order `2k + h`.
    Caterpillar(usize, usize),
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let bad = || Error::Family(format!("cannot parse `{s}`"));
        let (name, params) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let one = || {
            if nums.len() == 1 {
                Ok(nums[0])
            } else {
                Err(bad())
            }
        };
        let two = || {
            if nums.len() == 2 {
                Ok((nums[0], nums[1]))
            } else {
                Err(bad())
            }
        };
        let name = name.trim().to_ascii_lowercase();
        if let Some(idx) = name.strip_prefix('h') {
            if let Ok(i) = idx.parse::<u8>() {
                if !(1..=17).contains(&i) {
                    return Err(Error::Family(format!(
                        "atlas families are h1..h17, got h{i}"
                    )));
                }
                return Ok(FamilySpec::H(i, one()?));
            }
        }
        match name.as_str() {
            "path" => Ok(FamilySpec::Path(one()?)),
            "cycle" => Ok(FamilySpec::Cycle(one()?)),
            "complete" => Ok(FamilySpec::Complete(one()?)),
            "star" => Ok(FamilySpec::Star(one()?)),
            "complete_bipartite" => two().map(|(a, b)| FamilySpec::CompleteBipartite(a, b)),
            "complete_split" => Ok(FamilySpec::CompleteSplit(one()?)),
            "split_plus_leaf" => Ok(FamilySpec::SplitPlusLeaf(one()?)),
            "caterpillar" => two().map(|(h, k)| FamilySpec::Caterpillar(h, k)),
            _ => Err(Error::Family(format!("unknown family `{name}`"))),
        }
    }
}

fn need(cond: bool, msg: String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Family(msg))
    }
}

/// Generate the graph of a family spec with its frozen vertex labeling:
/// main clique or twin block first, attachment vertices next, leaves last.
pub fn generate(spec: FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    match spec {
        Path(n) => {
            need(
                (1..=64).contains(&n),
                format!("path needs 1 <= n <= 64, got {n}"),
            )?;
            Ok(Graph::path(n))
        }
        Cycle(n) => {
            need(
                (3..=64).contains(&n),
                format!("cycle needs 3 <= n <= 64, got {n}"),
            )?;
            Ok(Graph::cycle(n))
        }
        Complete(n) => {
            need(
                (1..=64).contains(&n),
                format!("complete needs 1 <= n <= 64, got {n}"),
            )?;
            Ok(Graph::complete(n))
        }
        Star(n) => {
            need(
                (2..=64).contains(&n),
                format!("star needs 2 <= n <= 64, got {n}"),
            )?;
            Ok(Graph::star(n))
        }
        CompleteBipartite(a, b) => {
            need(
                a >= 1 && b >= 1 && a + b <= 64,
                format!("complete_bipartite needs positive sides, got ({a},{b})"),
            )?;
            Ok(Graph::complete_bipartite(a, b))
        }
        CompleteSplit(n) => {
            need(
                (3..=64).contains(&n),
                format!("complete_split needs n >= 3, got {n}"),
            )?;
            Graph::join(&Graph::complete(n - 2), &Graph::empty(2))
        }
        SplitPlusLeaf(n) => {
            need(
                (3..=64).contains(&n),
                format!("split_plus_leaf needs n >= 3, got {n}"),
            )?;
            let inner = Graph::disjoint_union(&Graph::complete(n - 2), &Graph::empty(1))?;
            Graph::join(&inner, &Graph::empty(1))
        }
        H(i, n) => {
            need(
                (1..=17).contains(&i),
                format!("atlas families are h1..h17, got h{i}"),
            )?;
            need(
                (7..=64).contains(&n),
                format!("h{i} needs 7 <= n <= 64, got {n}"),
            )?;
            atlas_member(i, n)
        }
        Caterpillar(h, k) => {
            need(
                h >= 1 && k >= 1 && 2 * k + h <= 64,
                format!("caterpillar needs h, k >= 1, got ({h},{k})"),
            )?;
            caterpillar(h, k)
        }
    }
}

fn atlas_member(i: u8, n: usize) -> Result<Graph> {
    let clique = Graph::complete;
    let ind = Graph::empty;
    let union = Graph::disjoint_union;
    let join = Graph::join;
    match i {
        1 => join(&clique(n - 3), &union(&clique(2), &ind(1))?),
        2 => join(&clique(n - 3), &ind(3)),
        3 => join(&clique(n - 4), &Graph::cycle(4)),
        4 => join(&clique(n - 4), &Graph::path(4)),
        5 => join(&clique(n - 4), &union(&clique(2), &clique(2))?),
        6 => Ok(Graph::complete_bipartite(2, n - 2)),
        7 => join(&ind(n - 2), &clique(2)),
        8 => join(&union(&clique(n - 3), &ind(1))?, &clique(2)),
        9 => join(&union(&clique(n - 3), &ind(1))?, &ind(2)),
        10 => join(&union(&clique(n - 3), &clique(2))?, &ind(1)),
        11 => {
            // Clique 0..n-4 (n-3 vertices); x1 = n-3, x2 = n-2, u = n-1.
            // x2 covers the whole clique, x1 misses clique vertex 0,
            // u hangs on x1 and x2.
            let mut g = Graph::disjoint_union(&Graph::complete(n - 3), &Graph::empty(3))?;
            let (x1, x2, u) = (n - 3, n - 2, n - 1);
            for q in 0..n - 3 {
                g.insert_edge(x2, q);
                if q != 0 {
                    g.insert_edge(x1, q);
                }
            }
            g.insert_edge(x1, x2);
            g.insert_edge(u, x1);
            g.insert_edge(u, x2);
            Ok(g)
        }
        12 => join(&union(&ind(n - 3), &clique(2))?, &ind(1)),
        13 => join(&union(&clique(n - 3), &ind(2))?, &ind(1)),
        14 => {
            // Universal vertex v = n-1 over a near-clique plus the leaf u = n-2.
            let near = Graph::complete(n - 2).without_edge(0, 1);
            join(&union(&near, &ind(1))?, &ind(1))
        }
        15 => {
            // Clique 0..n-4 (n-3 vertices); w = n-3 and v = n-2 cover it;
            // u = n-1 hangs on w.
            let mut g = Graph::disjoint_union(&Graph::complete(n - 3), &Graph::empty(3))?;
            let (w, v, u) = (n - 3, n - 2, n - 1);
            for q in 0..n - 3 {
                g.insert_edge(w, q);
                g.insert_edge(v, q);
            }
            g.insert_edge(u, w);
            Ok(g)
        }
        16 => {
            // Clique 0..n-4 (n-3 vertices); x = n-3 covers it;
            // path x - w - u on n-2, n-1.
            let mut g = Graph::disjoint_union(&Graph::complete(n - 3), &Graph::empty(3))?;
            let (x, w, u) = (n - 3, n - 2, n - 1);
            for q in 0..n - 3 {
                g.insert_edge(x, q);
            }
            g.insert_edge(x, w);
            g.insert_edge(w, u);
            Ok(g)
        }
        17 => {
            // Leaves 0..n-4 on x = n-3; path x - w - u on n-2, n-1.
            let mut g = Graph::empty(n);
            let (x, w, u) = (n - 3, n - 2, n - 1);
            for z in 0..n - 3 {
                g.insert_edge(x, z);
            }
            g.insert_edge(x, w);
            g.insert_edge(w, u);
            Ok(g)
        }
        _ => unreachable!("index validated by caller"),
    }
}

fn caterpillar(h: usize, k: usize) -> Result<Graph> {
    // Spine 0..k, leg leaf k+i on spine vertex i, extra leaves 2k.. on spine 0.
    let n = 2 * k + h;
    let mut g = Graph::path(k);
    g = Graph::disjoint_union(&g, &Graph::empty(k + h))?;
    for i in 0..k {
        g.insert_edge(i, k + i);
    }
    for j in 0..h {
        g.insert_edge(0, 2 * k + j);
    }
    debug_assert_eq!(g.order(), n);
    Ok(g)
}

/// The 17 atlas members at order `n`, pairwise non-isomorphic and connected.
pub fn lambda_family(n: usize) -> Result<Vec<Graph>> {
    if n < 7 {
        return Err(Error::Family(format!("the atlas needs n >= 7, got {n}")));
    }
    let graphs: Vec<Graph> = (1..=17)
        .map(|i| atlas_member(i, n))
        .collect::<Result<_>>()?;
    for (i, g) in graphs.iter().enumerate() {
        if !g.is_connected() {
            return Err(Error::InternalInvariant(format!(
                "atlas member h{} of order {n} is disconnected",
                i + 1
            )));
        }
    }
    if n <= 10 {
        for i in 0..graphs.len() {
            for j in (i + 1)..graphs.len() {
                if are_isomorphic(&graphs[i], &graphs[j])? {
                    return Err(Error::InternalInvariant(format!(
                        "atlas members h{} and h{} coincide at order {n}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
    }
    Ok(graphs)
}

/// The three graphs that admit a resolving partition three parts below
/// their order, witnessing the strict gap between the two partition
/// parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnownPartitionFamily {
    H12,
    H17,
    /// The complement of `H16`.
    H16Complement,
}

/// A resolving `(n-3)`-partition of the chosen family member, found by
/// bounded search in restricted-growth order (deterministic, so the
/// returned partition is stable and can serve as a golden fixture).
pub fn known_partition(family: KnownPartitionFamily, n: usize) -> Result<Partition> {
    let g = match family {
        KnownPartitionFamily::H12 => atlas_member(12, n)?,
        KnownPartitionFamily::H17 => atlas_member(17, n)?,
        KnownPartitionFamily::H16Complement => atlas_member(16, n)?.complement(),
    };
    if n < 7 {
        return Err(Error::Family(format!(
            "known partitions need n >= 7, got {n}"
        )));
    }
    let dm = crate::distance::distances(&g);
    partitions_into(n, n - 3)?
        .find(|p| is_resolving(&dm, p))
        .ok_or_else(|| {
            Error::InternalInvariant(format!(
                "no resolving {}-partition found for {family:?} at order {n}",
                n - 3
            ))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::diameter;
    use crate::solvers::{compute_all, dominating_partition_dimension, rd_number};
    use crate::twins::{twin_sets, TwinKind};

    #[test]
    fn spec_parsing() {
        assert_eq!("path:9".parse::<FamilySpec>().unwrap(), FamilySpec::Path(9));
        assert_eq!("h11:8".parse::<FamilySpec>().unwrap(), FamilySpec::H(11, 8));
        assert_eq!(
            "caterpillar:2,3".parse::<FamilySpec>().unwrap(),
            FamilySpec::Caterpillar(2, 3)
        );
        assert_eq!(
            "complete_bipartite:2,5".parse::<FamilySpec>().unwrap(),
            FamilySpec::CompleteBipartite(2, 5)
        );
        assert!("h18:8".parse::<FamilySpec>().is_err());
        assert!("h3".parse::<FamilySpec>().is_err());
        assert!("widget:4".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn atlas_orders_and_connectivity() {
        for n in [7, 8] {
            for g in lambda_family(n).unwrap() {
                assert_eq!(g.order(), n);
                assert!(g.is_connected());
            }
        }
    }

    #[test]
    fn h2_is_a_join_of_k4_and_three_isolated() {
        let g = generate(FamilySpec::H(2, 7)).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.edge_count(), 6 + 12);
        assert_eq!(
            g,
            Graph::join(&Graph::complete(4), &Graph::empty(3)).unwrap()
        );
    }

    #[test]
    fn atlas_twin_structure() {
        let n = 7;
        let has = |i: u8, kind: TwinKind, size: usize| {
            let g = atlas_member(i, n).unwrap();
            assert!(
                twin_sets(&g)
                    .sets
                    .iter()
                    .any(|s| s.kind == kind && s.len() == size),
                "h{i}: expected a {kind:?} twin set of size {size}, got {:?}",
                twin_sets(&g).sets
            );
        };
        for i in [6, 7] {
            has(i, TwinKind::Independent, n - 2);
        }
        for i in [1, 2, 8, 9, 10, 13, 15, 16] {
            has(i, TwinKind::Clique, n - 3);
        }
        for i in [12, 17] {
            has(i, TwinKind::Leaves, n - 3);
        }
        for i in [3, 4, 5, 11, 14] {
            has(i, TwinKind::Clique, n - 4);
        }
    }

    #[test]
    fn atlas_diameters() {
        for i in 1..=17u8 {
            let g = atlas_member(i, 7).unwrap();
            let want = if i >= 15 { 3 } else { 2 };
            assert_eq!(diameter(&g).unwrap(), want, "h{i}");
        }
    }

    #[test]
    fn complement_of_h15_is_h17() {
        for n in 7..=10 {
            let h15 = atlas_member(15, n).unwrap();
            let h17 = atlas_member(17, n).unwrap();
            assert!(are_isomorphic(&h15.complement(), &h17).unwrap(), "n={n}");
        }
    }

    #[test]
    fn caterpillar_orders_and_values() {
        let g = generate(FamilySpec::Caterpillar(2, 3)).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(dominating_partition_dimension(&g).unwrap().0, 4);
        assert_eq!(rd_number(&g).unwrap().0, 5);
    }

    #[test]
    fn atlas_eta_p_spot_checks() {
        // Two members of the order-7 atlas, one with the strict gap.
        let r = compute_all(&atlas_member(6, 7).unwrap()).unwrap();
        assert_eq!((r.beta_p, r.eta_p), (5, 5));
        let r = compute_all(&atlas_member(12, 7).unwrap()).unwrap();
        assert_eq!((r.beta_p, r.eta_p), (4, 5));
    }

    #[test]
    fn known_partitions_resolve_with_three_parts_spared() {
        use KnownPartitionFamily::*;
        for family in [H12, H17, H16Complement] {
            for n in [7, 8] {
                let p = known_partition(family, n).unwrap();
                assert_eq!(p.k(), n - 3, "{family:?} n={n}");
            }
        }
    }

    #[test]
    fn known_partition_golden_fixtures() {
        use KnownPartitionFamily::*;
        let found: Vec<String> = [H12, H17, H16Complement]
            .iter()
            .map(|&f| known_partition(f, 7).unwrap().to_string())
            .collect();
        // Frozen after the first verified run; any valid witness proves the
        // same bound, this pins the deterministic search result.
        assert_eq!(found[0], "0,4|1,5|2,6|3");
        assert_eq!(found[1], "0,4,5|1,6|2|3");
        assert_eq!(found[2], "0,4,6|1,5|2|3");
    }
}
