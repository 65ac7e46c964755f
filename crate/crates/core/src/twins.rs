//! Maximal twin sets: vertices with equal open or closed neighborhoods.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// How the members of a twin set relate to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinKind {
    /// `N(u) = N(v)` for all members; the set induces an empty graph.
    Independent,
    /// `N[u] = N[v]` for all members; the set induces a complete graph.
    Clique,
    /// Independent twins that are all leaves hanging from one support vertex.
    Leaves,
}

/// One maximal twin set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinSet {
    pub members: Vec<usize>,
    pub kind: TwinKind,
}

impl TwinSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// All maximal twin sets of `g`, ordered by smallest member.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwinSetReport {
    pub sets: Vec<TwinSet>,
}

/// Group vertices into maximal twin sets of cardinality >= 2.
///
/// Open-neighborhood classes are independent sets; closed-neighborhood
/// classes induce cliques. An independent class of leaves (all of degree 1,
/// necessarily sharing one support vertex) is tagged [`TwinKind::Leaves`].
pub fn twin_sets(g: &Graph) -> TwinSetReport {
    let n = g.order();
    let mut open: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    let mut closed: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        open.entry(g.neighbors(v)).or_default().push(v);
        closed.entry(g.closed_neighborhood(v)).or_default().push(v);
    }

    let mut sets = Vec::new();
    for members in open.into_values().filter(|m| m.len() >= 2) {
        let kind = if members.iter().all(|&v| g.degree(v) == 1) {
            TwinKind::Leaves
        } else {
            TwinKind::Independent
        };
        sets.push(TwinSet { members, kind });
    }
    for members in closed.into_values().filter(|m| m.len() >= 2) {
        sets.push(TwinSet {
            members,
            kind: TwinKind::Clique,
        });
    }
    sets.sort_by_key(|s| s.members[0]);
    TwinSetReport { sets }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::distances;

    #[test]
    fn star_has_one_leaves_set() {
        let report = twin_sets(&Graph::star(7));
        assert_eq!(report.sets.len(), 1);
        let set = &report.sets[0];
        assert_eq!(set.kind, TwinKind::Leaves);
        assert_eq!(set.members, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn complete_bipartite_has_two_independent_sets() {
        let report = twin_sets(&Graph::complete_bipartite(2, 5));
        assert_eq!(report.sets.len(), 2);
        assert_eq!(report.sets[0].kind, TwinKind::Independent);
        assert_eq!(report.sets[0].members.len(), 2);
        assert_eq!(report.sets[1].kind, TwinKind::Independent);
        assert_eq!(report.sets[1].members.len(), 5);
    }

    #[test]
    fn path_has_no_twins() {
        assert!(twin_sets(&Graph::path(5)).sets.is_empty());
    }

    #[test]
    fn complete_graph_is_one_clique_set() {
        let report = twin_sets(&Graph::complete(4));
        assert_eq!(report.sets.len(), 1);
        assert_eq!(report.sets[0].kind, TwinKind::Clique);
        assert_eq!(report.sets[0].members, vec![0, 1, 2, 3]);
    }

    #[test]
    fn twins_are_equidistant_from_everything_else() {
        let graphs = [
            Graph::star(6),
            Graph::complete_bipartite(3, 4),
            Graph::complete(5),
            crate::graph6::parse_graph6("DQc").unwrap(),
        ];
        for g in &graphs {
            let dm = distances(g);
            for set in twin_sets(g).sets {
                for (i, &w1) in set.members.iter().enumerate() {
                    for &w2 in &set.members[i + 1..] {
                        for x in 0..g.order() {
                            if x != w1 && x != w2 {
                                assert_eq!(dm.dist(w1, x), dm.dist(w2, x));
                            }
                        }
                    }
                }
            }
        }
    }
}
