//! Exact solvers for the six parameters: partition dimension, dominating
//! partition dimension, metric dimension, domination number, resolving
//! domination number and partition domination number. All searches are
//! deterministic: cardinality ascending, candidates in lexicographic order,
//! first success wins.

use serde::Serialize;

use crate::constructions::rd_augment;
use crate::distance::{distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::partition::{is_dominating, is_rd, is_resolving, partitions_into, Partition};
use crate::twins::{twin_sets, TwinKind};

/// The computed parameter bundle for one graph, with optimal witnesses.
#[derive(Clone, Debug, Serialize)]
pub struct ParamRecord {
    pub graph6: String,
    pub n: usize,
    pub diam: usize,
    pub beta_p: usize,
    pub eta_p: usize,
    pub beta: usize,
    pub gamma: usize,
    pub eta: usize,
    pub gamma_p: usize,
    pub beta_p_partition: Partition,
    pub eta_p_partition: Partition,
    pub beta_set: Vec<usize>,
    pub gamma_set: Vec<usize>,
    pub eta_set: Vec<usize>,
}

impl ParamRecord {
    pub const CSV_HEADER: &'static str = "graph6,n,diam,beta_p,eta_p,beta,gamma,eta,gamma_p";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.graph6,
            self.n,
            self.diam,
            self.beta_p,
            self.eta_p,
            self.beta,
            self.gamma,
            self.eta,
            self.gamma_p
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Subsets of `{0..n}` of fixed size in lexicographic order.
struct LexSubsets {
    n: usize,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

fn lex_subsets(n: usize, m: usize) -> LexSubsets {
    LexSubsets {
        n,
        idx: (0..m).collect(),
        started: false,
        done: m > n,
    }
}

impl Iterator for LexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.idx.clone());
        }
        let m = self.idx.len();
        let mut i = m;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.idx[i] < self.n - m + i {
                self.idx[i] += 1;
                for j in (i + 1)..m {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(self.idx.clone());
            }
        }
    }
}

/// True iff the distance vectors to `set` separate every vertex pair.
pub fn is_resolving_set(dm: &DistanceMatrix, set: &[usize]) -> bool {
    let n = dm.order();
    let mut vecs: Vec<Vec<u32>> = (0..n)
        .map(|v| set.iter().map(|&s| dm.dist(v, s)).collect())
        .collect();
    vecs.sort_unstable();
    !vecs.windows(2).any(|w| w[0] == w[1])
}

/// True iff every vertex outside `set` has a neighbor in it.
pub fn is_dominating_set(g: &Graph, set: &[usize]) -> bool {
    let covered = set
        .iter()
        .fold(0u64, |acc, &v| acc | g.closed_neighborhood(v));
    covered == g.vertex_mask()
}

fn ensure_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

fn ensure_nontrivial_connected(g: &Graph) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::TrivialGraph);
    }
    ensure_connected(g)
}

/// Lower bounds on the two partition parameters extracted from twin sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwinBound {
    pub beta_p: usize,
    pub eta_p: usize,
}

/// Twin-set lower bounds: an independent twin set of size m forces m parts,
/// a clique twin set forces m+1, and a set of m twin leaves forces m+1
/// parts in any resolving-dominating partition. Proper subsets of the
/// vertex set only; both bounds default to 2.
pub fn twin_lower_bound(g: &Graph) -> TwinBound {
    let n = g.order();
    let mut beta_p = 2usize;
    let mut eta_p = 2usize;
    for set in twin_sets(g).sets {
        // A twin set equal to the whole vertex set is shrunk by one so the
        // bound still applies to a proper subset.
        let m = if set.len() == n {
            set.len() - 1
        } else {
            set.len()
        };
        if m < 2 {
            continue;
        }
        match set.kind {
            TwinKind::Independent => beta_p = beta_p.max(m),
            TwinKind::Clique => beta_p = beta_p.max(m + 1),
            TwinKind::Leaves => {
                beta_p = beta_p.max(m);
                eta_p = eta_p.max(m + 1);
            }
        }
    }
    TwinBound {
        beta_p,
        eta_p: eta_p.max(beta_p),
    }
}

fn partition_dimension_inner(g: &Graph, dm: &DistanceMatrix) -> (usize, Partition) {
    let n = g.order();
    let k0 = twin_lower_bound(g).beta_p;
    for k in k0..=n {
        for p in partitions_into(n, k).expect("k in range") {
            if is_resolving(dm, &p) {
                let diam = dm.diameter().expect("connected") as usize;
                assert!(
                    k + diam <= n + 1,
                    "partition dimension {k} exceeds the order-diameter bound"
                );
                return (k, p);
            }
        }
    }
    unreachable!("the all-singletons partition resolves every connected graph")
}

/// Smallest k admitting a resolving k-partition, with the first witness in
/// restricted-growth order. Search starts at the twin lower bound.
pub fn partition_dimension(g: &Graph) -> Result<(usize, Partition)> {
    ensure_nontrivial_connected(g)?;
    let dm = distances(g);
    Ok(partition_dimension_inner(g, &dm))
}

fn eta_p_from_beta_p(
    g: &Graph,
    dm: &DistanceMatrix,
    beta_p: usize,
    first_resolving: &Partition,
) -> Result<(usize, Partition)> {
    // Scan every minimum resolving partition for a dominating one.
    for p in partitions_into(g.order(), beta_p).expect("k in range") {
        if is_dominating(dm, &p) && is_resolving(dm, &p) {
            return Ok((beta_p, p));
        }
    }
    // None dominates: one extra part always suffices, constructively.
    let augmented = rd_augment(g, first_resolving)?;
    if augmented.k() != beta_p + 1 || !is_rd(dm, &augmented) {
        return Err(Error::InternalInvariant(
            "augmentation did not yield a resolving-dominating partition one part larger".into(),
        ));
    }
    Ok((beta_p + 1, augmented))
}

/// Smallest k admitting a resolving-dominating k-partition, with witness.
///
/// Strategy: compute the partition dimension first and scan all resolving
/// partitions of that size for a dominating one; otherwise the answer is
/// one larger, witnessed by [`rd_augment`].
pub fn dominating_partition_dimension(g: &Graph) -> Result<(usize, Partition)> {
    ensure_nontrivial_connected(g)?;
    let dm = distances(g);
    let (beta_p, witness) = partition_dimension_inner(g, &dm);
    eta_p_from_beta_p(g, &dm, beta_p, &witness)
}

fn metric_dimension_inner(dm: &DistanceMatrix) -> (usize, Vec<usize>) {
    let n = dm.order();
    if n == 1 {
        return (0, Vec::new());
    }
    for m in 1..n {
        for set in lex_subsets(n, m) {
            if is_resolving_set(dm, &set) {
                return (m, set);
            }
        }
    }
    unreachable!("any n-1 vertices resolve a connected graph")
}

/// Smallest resolving set, by increasing-cardinality lexicographic search.
pub fn metric_dimension(g: &Graph) -> Result<(usize, Vec<usize>)> {
    ensure_connected(g)?;
    let dm = distances(g);
    Ok(metric_dimension_inner(&dm))
}

/// Smallest dominating set, by increasing-cardinality search with a
/// closed-neighborhood bitset cover test.
pub fn domination_number(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.order();
    for m in 1..=n {
        for set in lex_subsets(n, m) {
            if is_dominating_set(g, &set) {
                return (m, set);
            }
        }
    }
    unreachable!("the whole vertex set dominates")
}

fn rd_number_inner(
    g: &Graph,
    dm: &DistanceMatrix,
    beta: usize,
    gamma: usize,
) -> (usize, Vec<usize>) {
    let n = g.order();
    let lo = beta.max(gamma).max(1);
    for m in lo..=n {
        for set in lex_subsets(n, m) {
            if is_dominating_set(g, &set) && is_resolving_set(dm, &set) {
                assert!(
                    m <= gamma + beta,
                    "resolving domination number escaped its sandwich"
                );
                return (m, set);
            }
        }
    }
    unreachable!("the whole vertex set is resolving and dominating")
}

/// Smallest set that is simultaneously resolving and dominating.
pub fn rd_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    ensure_connected(g)?;
    let dm = distances(g);
    let (beta, _) = metric_dimension_inner(&dm);
    let (gamma, _) = domination_number(g);
    Ok(rd_number_inner(g, &dm, beta, gamma))
}

fn gamma_p_inner(g: &Graph, dm: &DistanceMatrix, gamma_set: &[usize]) -> usize {
    // A single part can never sit at distance exactly 1 from its own
    // vertices, so two parts are necessary; a minimum dominating set and
    // its complement always suffice.
    let n = g.order();
    let d_mask = gamma_set.iter().fold(0u64, |acc, &v| acc | 1 << v);
    assert!(
        d_mask != g.vertex_mask(),
        "a minimum dominating set of a non-trivial graph is proper"
    );
    let assign: Vec<usize> = (0..n)
        .map(|v| usize::from(d_mask & (1 << v) == 0))
        .collect();
    let p = Partition::from_assignment(&assign).expect("two nonempty parts");
    assert!(
        is_dominating(dm, &p),
        "minimum dominating set does not split into a dominating partition"
    );
    2
}

/// Minimum number of parts in a dominating partition; always 2 for a
/// connected graph on at least two vertices.
pub fn partition_domination_number(g: &Graph) -> Result<usize> {
    ensure_nontrivial_connected(g)?;
    let dm = distances(g);
    let (_, gamma_set) = domination_number(g);
    Ok(gamma_p_inner(g, &dm, &gamma_set))
}

/// `n <= k (d^{k-1} - (d-1)^{k-1})` with k parts over diameter d.
pub(crate) fn counting_bound_holds(n: usize, k: usize, d: usize) -> bool {
    debug_assert!(k >= 2 && d >= 1);
    let e = (k - 1) as u32;
    match ((d as u128).checked_pow(e), ((d - 1) as u128).checked_pow(e)) {
        (Some(b), Some(s)) => match (k as u128).checked_mul(b - s) {
            Some(rhs) => n as u128 <= rhs,
            None => true,
        },
        // An overflowing count certainly exceeds n <= 64.
        _ => true,
    }
}

/// Compute all six parameters plus the diameter, assert every recorded
/// inequality between them, and validate the witnesses.
pub fn compute_all(g: &Graph) -> Result<ParamRecord> {
    ensure_nontrivial_connected(g)?;
    let n = g.order();
    let dm = distances(g);
    let diam = dm.diameter().expect("connected") as usize;

    let (beta_p, beta_p_partition) = partition_dimension_inner(g, &dm);
    let (eta_p, eta_p_partition) = eta_p_from_beta_p(g, &dm, beta_p, &beta_p_partition)?;
    let (beta, beta_set) = metric_dimension_inner(&dm);
    let (gamma, gamma_set) = domination_number(g);
    let (eta, eta_set) = rd_number_inner(g, &dm, beta, gamma);
    let gamma_p = gamma_p_inner(g, &dm, &gamma_set);

    assert!(beta_p <= eta_p && eta_p <= beta_p + 1);
    assert!(beta_p <= beta + 1);
    assert!(beta_p + diam <= n + 1);
    assert!(gamma.max(beta) <= eta && eta <= gamma + beta);
    assert!(eta_p <= eta + 1);
    assert!(eta_p + diam <= n + 2);
    assert_eq!(gamma_p, 2);
    assert!(counting_bound_holds(n, eta_p, diam));

    assert!(is_resolving(&dm, &beta_p_partition));
    assert!(is_rd(&dm, &eta_p_partition));
    assert!(is_resolving_set(&dm, &beta_set));
    assert!(is_dominating_set(g, &gamma_set));
    assert!(is_resolving_set(&dm, &eta_set) && is_dominating_set(g, &eta_set));

    Ok(ParamRecord {
        graph6: emit_graph6(g),
        n,
        diam,
        beta_p,
        eta_p,
        beta,
        gamma,
        eta,
        gamma_p,
        beta_p_partition,
        eta_p_partition,
        beta_set,
        gamma_set,
        eta_set,
    })
}
