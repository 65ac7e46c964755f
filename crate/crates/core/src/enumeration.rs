//! Canonical forms by pruned permutation search, isomorphism testing, and
//! exhaustive generation of pairwise non-isomorphic connected graphs of
//! small order, plus graph6 corpus ingestion.

use std::collections::BTreeSet;
use std::io::BufRead;
use std::path::Path;

use crate::distance::distances;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// Orders above this are rejected: the canonizer is a permutation search.
pub const MAX_CANONICAL_ORDER: usize = 10;

/// The lexicographically minimal upper-triangle adjacency bitstring over
/// all vertex permutations, column-major. Equal forms mean isomorphic
/// graphs. At most 45 bits for n <= 10, kept left-aligned in a word so
/// that integer order equals bitstring order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    bits: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The triangle bits as a 0/1 string, for reports and debugging.
    pub fn bit_string(&self) -> String {
        let t = self.order() * (self.order() - 1) / 2;
        (0..t)
            .map(|i| {
                if self.bits >> (63 - i) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    /// Rebuild the canonically labeled graph this form encodes.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n);
        let mut idx = 0;
        for col in 1..n {
            for row in 0..col {
                if self.bits >> (63 - idx) & 1 == 1 {
                    g.insert_edge(row, col);
                }
                idx += 1;
            }
        }
        g
    }
}

/// Backtracking state for the minimal-bitstring search.
struct Canonizer<'a> {
    g: &'a Graph,
    n: usize,
    order: Vec<usize>,
    placed: Vec<usize>,
    best_bits: u64,
    best_perm: Vec<usize>,
    have_best: bool,
}

impl Canonizer<'_> {
    /// Extend the partial labeling at `pos`; `cur` holds the `nbits`
    /// triangle bits fixed so far, left-aligned. A branch survives while
    /// its prefix is no larger than the same-length prefix of the best
    /// complete string found so far.
    fn descend(&mut self, pos: usize, used: u64, cur: u64, nbits: u32) {
        if pos == self.n {
            if !self.have_best || cur < self.best_bits {
                self.best_bits = cur;
                self.best_perm = self.placed.clone();
                self.have_best = true;
            }
            return;
        }
        for i in 0..self.n {
            let v = self.order[i];
            if used & (1 << v) != 0 {
                continue;
            }
            if pos == 0 {
                self.placed[0] = v;
                self.descend(1, 1 << v, cur, nbits);
                continue;
            }
            // Column bits: adjacency of v to each already placed vertex.
            let mut chunk = 0u64;
            for &w in &self.placed[..pos] {
                chunk = (chunk << 1) | self.g.has_edge(w, v) as u64;
            }
            let new_nbits = nbits + pos as u32;
            let new_cur = cur | (chunk << (64 - new_nbits));
            if self.have_best {
                let mask = !0u64 << (64 - new_nbits);
                if new_cur & mask > self.best_bits & mask {
                    continue;
                }
            }
            self.placed[pos] = v;
            self.descend(pos + 1, used | (1 << v), new_cur, new_nbits);
        }
    }
}

fn canonical(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::CanonicalOrder(n));
    }
    if n == 1 {
        return Ok((CanonicalForm { n: 1, bits: 0 }, vec![0]));
    }
    // Candidate order: degree, then sorted neighbor degrees, then index.
    // Low-degree vertices early tend to reach small bitstrings first.
    let mut keys: Vec<(usize, Vec<usize>, usize)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = crate::graph::bits(g.neighbors(v))
                .map(|w| g.degree(w))
                .collect();
            nd.sort_unstable();
            (g.degree(v), nd, v)
        })
        .collect();
    keys.sort();
    let order: Vec<usize> = keys.into_iter().map(|(_, _, v)| v).collect();

    let mut c = Canonizer {
        g,
        n,
        order,
        placed: vec![0; n],
        best_bits: 0,
        best_perm: Vec::new(),
        have_best: false,
    };
    c.descend(0, 0, 0, 0);
    // placed[pos] = original vertex; invert to a relabeling map.
    let mut perm = vec![0usize; n];
    for (pos, &v) in c.best_perm.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((
        CanonicalForm {
            n: n as u8,
            bits: c.best_bits,
        },
        perm,
    ))
}

/// Minimal bitstring over all relabelings; deterministic.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical(g).map(|(f, _)| f)
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, perm) = canonical(g)?;
    Ok(g.relabel(&perm))
}

/// Canonical-form equality with fast rejection on the order, the degree
/// multiset and the distance multiset.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let degrees = |g: &Graph| {
        let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g1) != degrees(g2) {
        return Ok(false);
    }
    let dist_multiset = |g: &Graph| {
        let dm = distances(g);
        let mut all: Vec<u32> = (0..g.order()).flat_map(|u| dm.row(u).to_vec()).collect();
        all.sort_unstable();
        all
    };
    if dist_multiset(g1) != dist_multiset(g2) {
        return Ok(false);
    }
    Ok(canonical_form(g1)? == canonical_form(g2)?)
}

/// Exactly one representative per isomorphism class of connected graphs of
/// order `n`, sorted by canonical form. Built by vertex augmentation from
/// the classes one order below, deduplicated on canonical forms.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if !(2..=8).contains(&n) {
        return Err(Error::UnsupportedOrder(n));
    }
    let mut reps = vec![Graph::complete(2)];
    for m in 3..=n {
        let mut forms: BTreeSet<CanonicalForm> = BTreeSet::new();
        for parent in &reps {
            let spread = Graph::disjoint_union(parent, &Graph::empty(1))?;
            for nb in 1u64..(1 << (m - 1)) {
                let mut child = spread.clone();
                for w in crate::graph::bits(nb) {
                    child.insert_edge(m - 1, w);
                }
                forms.insert(canonical_form(&child)?);
            }
        }
        reps = forms.iter().map(CanonicalForm::to_graph).collect();
    }
    Ok(reps)
}

/// One parsed graph from a corpus file.
#[derive(Clone, Debug)]
pub struct IngestedGraph {
    /// 1-based line number in the source.
    pub line: usize,
    pub text: String,
    pub graph: Graph,
}

/// Result of scanning a corpus: parsed graphs plus per-line diagnostics.
#[derive(Clone, Debug, Default)]
pub struct IngestReport {
    pub graphs: Vec<IngestedGraph>,
    pub diagnostics: Vec<(usize, String)>,
    pub skipped_disconnected: usize,
}

/// Parse a stream of graph6 lines; parse errors are collected per line,
/// not fatal. With `connected_only`, disconnected graphs are counted and
/// dropped.
pub fn ingest_reader<R: BufRead>(reader: R, connected_only: bool) -> Result<IngestReport> {
    let mut report = IngestReport::default();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim_end_matches(['\r', '\n']);
        if text.is_empty() {
            continue;
        }
        match parse_graph6(text) {
            Ok(graph) => {
                if connected_only && !graph.is_connected() {
                    report.skipped_disconnected += 1;
                } else {
                    report.graphs.push(IngestedGraph {
                        line: i + 1,
                        text: text.to_string(),
                        graph,
                    });
                }
            }
            Err(e) => report.diagnostics.push((i + 1, e.to_string())),
        }
    }
    Ok(report)
}

/// [`ingest_reader`] over a file path.
pub fn ingest_corpus(path: &Path, connected_only: bool) -> Result<IngestReport> {
    let file = std::fs::File::open(path)?;
    ingest_reader(std::io::BufReader::new(file), connected_only)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::emit_graph6;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn canonical_form_is_a_class_function() {
        let mut rng = StdRng::seed_from_u64(7);
        let samples = [
            Graph::path(6),
            Graph::cycle(7),
            Graph::star(6),
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6)])
                .unwrap(),
        ];
        for g in &samples {
            let form = canonical_form(g).unwrap();
            let mut perm: Vec<usize> = (0..g.order()).collect();
            for _ in 0..100 {
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.relabel(&perm)).unwrap(), form);
            }
        }
    }

    #[test]
    fn canonical_graph_reproduces_its_form() {
        let g = Graph::from_edges(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5)]).unwrap();
        let cg = canonical_graph(&g).unwrap();
        assert_eq!(canonical_form(&cg).unwrap(), canonical_form(&g).unwrap());
        assert_eq!(canonical_form(&cg).unwrap().to_graph(), cg);
    }

    #[test]
    fn distinguishes_star_from_path() {
        assert_ne!(
            canonical_form(&Graph::star(4)).unwrap(),
            canonical_form(&Graph::path(4)).unwrap()
        );
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5);
        assert_eq!(
            canonical_form(&c5).unwrap(),
            canonical_form(&c5.complement()).unwrap()
        );
        assert!(are_isomorphic(&c5, &c5.complement()).unwrap());
    }

    #[test]
    fn order_guard() {
        assert!(canonical_form(&Graph::path(11)).is_err());
        assert!(are_isomorphic(&Graph::path(11), &Graph::path(11).clone()).is_err());
    }

    #[test]
    fn reversed_path_is_isomorphic() {
        let p = Graph::path(5);
        let rev: Vec<usize> = (0..5).rev().collect();
        assert!(are_isomorphic(&p, &p.relabel(&rev)).unwrap());
    }

    #[test]
    fn atlas_members_twelve_and_seventeen_differ() {
        // Same order and a twin set of leaves each, but diameters 2 and 3.
        let h12 = crate::families::generate(crate::families::FamilySpec::H(12, 7)).unwrap();
        let h17 = crate::families::generate(crate::families::FamilySpec::H(17, 7)).unwrap();
        assert!(!are_isomorphic(&h12, &h17).unwrap());
    }

    #[test]
    fn connected_class_counts() {
        assert_eq!(enumerate_connected(2).unwrap().len(), 1);
        assert_eq!(enumerate_connected(3).unwrap().len(), 2);
        assert_eq!(enumerate_connected(4).unwrap().len(), 6);
        assert_eq!(enumerate_connected(5).unwrap().len(), 21);
        assert_eq!(enumerate_connected(6).unwrap().len(), 112);
        assert!(enumerate_connected(1).is_err());
        assert!(enumerate_connected(9).is_err());
    }

    #[test]
    fn order_seven_count_regression() {
        assert_eq!(enumerate_connected(7).unwrap().len(), 853);
    }

    #[test]
    fn matches_labeled_brute_force_up_to_five() {
        for n in 2..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let mut forms = BTreeSet::new();
            for mask in 0u64..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                if g.is_connected() {
                    forms.insert(canonical_form(&g).unwrap());
                }
            }
            let enumerated: BTreeSet<CanonicalForm> = enumerate_connected(n)
                .unwrap()
                .iter()
                .map(|g| canonical_form(g).unwrap())
                .collect();
            assert_eq!(forms, enumerated, "n={n}");
        }
    }

    #[test]
    fn enumeration_yields_connected_canonically_sorted_graphs() {
        let reps = enumerate_connected(6).unwrap();
        let forms: Vec<CanonicalForm> = reps.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert!(forms.windows(2).all(|w| w[0] < w[1]));
        assert!(reps.iter().all(Graph::is_connected));
    }

    #[test]
    fn ingest_collects_errors_per_line() {
        let data = "A_\nbogus line\nD??\n";
        let report = ingest_reader(data.as_bytes(), false).unwrap();
        assert_eq!(report.graphs.len(), 2);
        assert_eq!(report.diagnostics.len(), 1);
        assert_eq!(report.diagnostics[0].0, 2);
        assert_eq!(report.graphs[1].line, 3);
    }

    #[test]
    fn ingest_connectivity_filter() {
        // D?? is the empty graph on 5 vertices: disconnected.
        let data = "A_\nD??\n";
        let report = ingest_reader(data.as_bytes(), true).unwrap();
        assert_eq!(report.graphs.len(), 1);
        assert_eq!(report.skipped_disconnected, 1);
    }

    #[test]
    fn ingest_roundtrips_the_order_five_classes() {
        let reps = enumerate_connected(5).unwrap();
        let corpus: String = reps.iter().map(|g| emit_graph6(g) + "\n").collect();
        let report = ingest_reader(corpus.as_bytes(), true).unwrap();
        assert_eq!(report.graphs.len(), 21);
        let forms: BTreeSet<CanonicalForm> = report
            .graphs
            .iter()
            .map(|ig| canonical_form(&ig.graph).unwrap())
            .collect();
        let want: BTreeSet<CanonicalForm> =
            reps.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms, want);
    }
}
