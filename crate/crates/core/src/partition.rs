//! Vertex partitions, the distance vector r(u|P), resolving/dominating
//! predicates, and duplicate-free enumeration of all k-block set partitions
//! in restricted-growth order.

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::bits;

/// The vector of distances from a vertex to each part, in part order.
/// Exactly one entry is 0: the part containing the vertex.
pub type DistanceVector = Vec<u32>;

/// An ordered sequence of disjoint nonempty vertex sets covering `{0..n}`.
///
/// Stored label-canonically: part indices appear in first-occurrence order
/// over vertices `0..n` (restricted-growth form), so equal values represent
/// equal unordered set partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    assign: Vec<u8>,
    parts: Vec<u64>,
}

impl Partition {
    /// Build from a per-vertex part assignment; labels are canonicalized.
    pub fn from_assignment(assign: &[usize]) -> Result<Partition> {
        let n = assign.len();
        if n == 0 || n > 64 {
            return Err(Error::InvalidPartition(format!(
                "vertex count {n} out of range 1..=64"
            )));
        }
        let mut relabel: Vec<Option<u8>> = vec![None; n];
        let mut canon = Vec::with_capacity(n);
        let mut parts: Vec<u64> = Vec::new();
        for (v, &raw) in assign.iter().enumerate() {
            if raw >= n {
                return Err(Error::InvalidPartition(format!(
                    "part index {raw} out of range at vertex {v}"
                )));
            }
            let label = *relabel[raw].get_or_insert_with(|| {
                parts.push(0);
                (parts.len() - 1) as u8
            });
            canon.push(label);
            parts[label as usize] |= 1 << v;
        }
        Ok(Partition {
            assign: canon,
            parts,
        })
    }

    /// Build from explicit parts over vertices `0..n`.
    pub fn from_parts(n: usize, part_lists: &[Vec<usize>]) -> Result<Partition> {
        if n == 0 || n > 64 {
            return Err(Error::InvalidPartition(format!(
                "vertex count {n} out of range 1..=64"
            )));
        }
        let mut assign = vec![usize::MAX; n];
        for (j, part) in part_lists.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::InvalidPartition(format!("part {j} is empty")));
            }
            for &v in part {
                if v >= n {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} out of range 0..{n}"
                    )));
                }
                if assign[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in more than one part"
                    )));
                }
                assign[v] = j;
            }
        }
        if let Some(v) = assign.iter().position(|&a| a == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} is not covered by any part"
            )));
        }
        Partition::from_assignment(&assign)
    }

    /// Parse the textual notation: parts separated by `|`, vertices by `,`,
    /// e.g. `0|1,3|2,4`. Must cover `0..n` exactly.
    pub fn parse(text: &str, n: usize) -> Result<Partition> {
        let mut part_lists = Vec::new();
        for chunk in text.split('|') {
            let mut part = Vec::new();
            for tok in chunk.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(Error::InvalidPartition(format!(
                        "empty vertex token in `{text}`"
                    )));
                }
                let v: usize = tok.parse().map_err(|_| {
                    Error::InvalidPartition(format!("`{tok}` is not a vertex index"))
                })?;
                part.push(v);
            }
            part_lists.push(part);
        }
        Partition::from_parts(n, &part_lists)
    }

    /// The all-singletons partition of `{0..n}`.
    pub fn singletons(n: usize) -> Partition {
        let assign: Vec<usize> = (0..n).collect();
        Partition::from_assignment(&assign).expect("identity assignment is valid")
    }

    pub(crate) fn from_rgs(rgs: &[u8], k: usize) -> Partition {
        let mut parts = vec![0u64; k];
        for (v, &label) in rgs.iter().enumerate() {
            parts[label as usize] |= 1 << v;
        }
        Partition {
            assign: rgs.to_vec(),
            parts,
        }
    }

    /// Number of parts.
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.assign.len()
    }

    /// Index of the part containing `v`.
    pub fn part_of(&self, v: usize) -> usize {
        self.assign[v] as usize
    }

    /// Part `j` as a bitset.
    pub fn part_bits(&self, j: usize) -> u64 {
        self.parts[j]
    }

    /// Parts as bitsets, in canonical order.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Members of part `j` in increasing order.
    pub fn part_members(&self, j: usize) -> Vec<usize> {
        bits(self.parts[j]).collect()
    }

    /// Split off the given vertices from their part into a fresh part.
    /// Used to test that refinements of resolving partitions stay resolving.
    pub fn split_off(&self, vertices: u64) -> Result<Partition> {
        let homes: Vec<usize> = bits(vertices).map(|v| self.part_of(v)).collect();
        match homes.as_slice() {
            [] => return Err(Error::InvalidPartition("nothing to split off".into())),
            [first, rest @ ..] if rest.iter().all(|h| h == first) => {
                if self.parts[*first] == vertices {
                    return Err(Error::InvalidPartition(format!(
                        "splitting would empty part {first}"
                    )));
                }
            }
            _ => {
                return Err(Error::InvalidPartition(
                    "split vertices span more than one part".into(),
                ))
            }
        }
        let mut assign: Vec<usize> = self.assign.iter().map(|&a| a as usize).collect();
        let fresh = self.k();
        for v in bits(vertices) {
            assign[v] = fresh;
        }
        Partition::from_assignment(&assign)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (j, &part) in self.parts.iter().enumerate() {
            if j > 0 {
                f.write_str("|")?;
            }
            for (i, v) in bits(part).enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// `d(u, S) = min { d(u, w) : w in S }`; zero iff `u` is in `S`.
pub fn dist_to_part(dm: &DistanceMatrix, u: usize, part: u64) -> Result<u32> {
    if part == 0 {
        return Err(Error::EmptyPart);
    }
    let row = dm.row(u);
    Ok(bits(part).map(|w| row[w]).min().unwrap())
}

/// The distance vector `r(u|P) = (d(u,S_1), ..., d(u,S_k))`.
pub fn distance_vector(dm: &DistanceMatrix, u: usize, p: &Partition) -> DistanceVector {
    p.parts()
        .iter()
        .map(|&part| dist_to_part(dm, u, part).expect("partition parts are nonempty"))
        .collect()
}

/// Pack a distance vector into a word for fast intra-part duplicate scans.
/// Possible whenever every entry fits in `bits_per` bits and `k * bits_per <= 64`.
fn packed_vector(dm: &DistanceMatrix, u: usize, p: &Partition, bits_per: u32) -> u64 {
    let row = dm.row(u);
    let mut packed = 0u64;
    for &part in p.parts() {
        let d = bits(part).map(|w| row[w]).min().unwrap();
        packed = (packed << bits_per) | d as u64;
    }
    packed
}

/// True iff all `n` distance vectors are pairwise distinct.
///
/// Vertices in different parts always differ at the zero entry, so only
/// intra-part collisions are scanned, with an early abort on the first one.
pub fn is_resolving(dm: &DistanceMatrix, p: &Partition) -> bool {
    let bits_per = usize::BITS - dm.order().leading_zeros(); // entries are <= n
    let k = p.k() as u32;
    if k * bits_per <= 64 {
        let mut seen: Vec<u64> = Vec::with_capacity(dm.order());
        for j in 0..p.k() {
            let part = p.part_bits(j);
            if part.count_ones() < 2 {
                continue;
            }
            seen.clear();
            seen.extend(bits(part).map(|u| packed_vector(dm, u, p, bits_per)));
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
        }
        true
    } else {
        let mut seen: Vec<DistanceVector> = Vec::with_capacity(dm.order());
        for j in 0..p.k() {
            let part = p.part_bits(j);
            if part.count_ones() < 2 {
                continue;
            }
            seen.clear();
            seen.extend(bits(part).map(|u| distance_vector(dm, u, p)));
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
        }
        true
    }
}

/// True iff every vertex has some part at distance exactly 1,
/// i.e. a neighbor outside its own part.
pub fn is_dominating(dm: &DistanceMatrix, p: &Partition) -> bool {
    let n = dm.order();
    (0..n).all(|v| {
        let own = p.part_of(v);
        let row = dm.row(v);
        (0..n).any(|w| row[w] == 1 && p.part_of(w) != own)
    })
}

/// Both resolving and dominating.
pub fn is_rd(dm: &DistanceMatrix, p: &Partition) -> bool {
    is_dominating(dm, p) && is_resolving(dm, p)
}

/// Stream of every set partition of `{0..n}` with exactly `k` blocks,
/// each exactly once, in restricted-growth lexicographic order.
///
/// The stream is a value: clone it to fork, or resume from a saved string
/// with [`KPartitions::starting_at`] for deterministic work splitting.
#[derive(Clone, Debug)]
pub struct KPartitions {
    n: usize,
    k: usize,
    rgs: Vec<u8>,
    started: bool,
    done: bool,
}

/// All partitions of `{0..n}` into exactly `k` nonempty blocks.
pub fn partitions_into(n: usize, k: usize) -> Result<KPartitions> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::PartCountOutOfRange { n, k });
    }
    Ok(KPartitions {
        n,
        k,
        rgs: vec![0; n],
        started: false,
        done: false,
    })
}

impl KPartitions {
    /// Resume the stream from a given restricted-growth string: the next
    /// item yielded is the successor of `rgs`.
    pub fn starting_at(n: usize, k: usize, rgs: &[u8]) -> Result<KPartitions> {
        let mut it = partitions_into(n, k)?;
        if rgs.len() != n {
            return Err(Error::InvalidPartition(format!(
                "restricted-growth string has length {}, expected {n}",
                rgs.len()
            )));
        }
        it.rgs.copy_from_slice(rgs);
        it.started = true;
        Ok(it)
    }

    /// The current restricted-growth string (valid after the first `next`).
    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    /// Lexicographically first k-block string: zeros, then a ramp to k-1.
    fn first(&mut self) {
        let ramp = self.k - 1;
        for i in 0..self.n {
            self.rgs[i] = (i + ramp).saturating_sub(self.n - 1) as u8;
        }
    }

    /// Advance to the successor string, or mark the stream done.
    fn succ(&mut self) {
        let k = self.k as u8;
        let n = self.n;
        // Prefix maxima: max_before[i] = max(rgs[0..i]).
        let mut max_before = vec![0u8; n];
        for i in 1..n {
            max_before[i] = max_before[i - 1].max(self.rgs[i - 1]);
        }
        for i in (1..n).rev() {
            let v = self.rgs[i] + 1;
            if v >= k || v > max_before[i] + 1 {
                continue;
            }
            // Remaining positions must still be able to reach value k-1.
            let reached = max_before[i].max(v);
            let missing = (k - 1 - reached) as usize;
            if missing > n - 1 - i {
                continue;
            }
            self.rgs[i] = v;
            // Minimal suffix: zeros, then a ramp introducing the missing values.
            for j in (i + 1)..n {
                self.rgs[j] = if j >= n - missing {
                    reached + (j + missing + 1 - n) as u8
                } else {
                    0
                };
            }
            return;
        }
        self.done = true;
    }
}

impl Iterator for KPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.first();
            self.started = true;
        } else {
            self.succ();
            if self.done {
                return None;
            }
        }
        Some(Partition::from_rgs(&self.rgs, self.k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::distances;
    use crate::graph::Graph;
    use std::collections::HashSet;

    #[test]
    fn canonical_labels_follow_first_occurrence() {
        let p = Partition::from_assignment(&[2, 0, 2, 1]).unwrap();
        assert_eq!(p.to_string(), "0,2|1|3");
        let q = Partition::parse("1,3|0,2", 4).unwrap();
        assert_eq!(q.to_string(), "0,2|1,3");
        assert_eq!(q.part_of(0), 0);
    }

    #[test]
    fn parse_rejects_bad_text() {
        assert!(Partition::parse("0|1|1", 3).is_err());
        assert!(Partition::parse("0|2", 3).is_err());
        assert!(Partition::parse("0||1", 2).is_err());
        assert!(Partition::parse("0|x", 2).is_err());
        assert!(Partition::parse("0|1,5", 3).is_err());
    }

    #[test]
    fn dist_to_part_examples() {
        let p4 = Graph::path(4);
        let dm = distances(&p4);
        assert_eq!(dist_to_part(&dm, 0, 0b1100).unwrap(), 2);
        assert_eq!(dist_to_part(&dm, 2, 0b0100).unwrap(), 0);
        assert!(dist_to_part(&dm, 0, 0).is_err());
        let k5 = distances(&Graph::complete(5));
        assert_eq!(dist_to_part(&k5, 0, 0b110).unwrap(), 1);
    }

    #[test]
    fn distance_vector_on_p5() {
        // Path 0-1-2-3-4 with parts {0}, {1,3}, {2,4}: r(2) = (2,1,0).
        let dm = distances(&Graph::path(5));
        let p = Partition::parse("0|1,3|2,4", 5).unwrap();
        assert_eq!(distance_vector(&dm, 2, &p), vec![2, 1, 0]);
        assert_eq!(distance_vector(&dm, 0, &p), vec![0, 1, 2]);
    }

    #[test]
    fn resolving_examples() {
        let p5 = distances(&Graph::path(5));
        assert!(is_resolving(
            &p5,
            &Partition::parse("0|1,3|2,4", 5).unwrap()
        ));
        let k3 = distances(&Graph::complete(3));
        assert!(!is_resolving(&k3, &Partition::parse("0|1,2", 3).unwrap()));
        assert!(is_resolving(&k3, &Partition::singletons(3)));
    }

    #[test]
    fn dominating_examples() {
        let star = distances(&Graph::star(4));
        // Parts {center, leaf1}, {leaf2}, {leaf3}: leaf1 has no part at distance 1.
        assert!(!is_dominating(
            &star,
            &Partition::parse("0,1|2|3", 4).unwrap()
        ));
        assert!(is_dominating(
            &star,
            &Partition::parse("0|1,2|3", 4).unwrap()
        ));
        let k4 = distances(&Graph::complete(4));
        assert!(is_dominating(&k4, &Partition::singletons(4)));
    }

    #[test]
    fn rd_examples() {
        let p5 = distances(&Graph::path(5));
        assert!(is_rd(&p5, &Partition::parse("0|1,3|2,4", 5).unwrap()));
        let c6 = distances(&Graph::cycle(6));
        assert!(is_rd(&c6, &Partition::parse("0,1|3,5|2,4", 6).unwrap()));
        let k2 = distances(&Graph::complete(2));
        assert!(!is_rd(&k2, &Partition::parse("0,1", 2).unwrap()));
    }

    #[test]
    fn three_into_two() {
        let got: Vec<String> = partitions_into(3, 2)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(got, vec!["0,1|2", "0,2|1", "0|1,2"]);
    }

    #[test]
    fn all_singletons_is_unique() {
        assert_eq!(partitions_into(4, 4).unwrap().count(), 1);
        assert_eq!(partitions_into(4, 1).unwrap().count(), 1);
        assert!(partitions_into(4, 5).is_err());
        assert!(partitions_into(4, 0).is_err());
    }

    fn bell(n: usize) -> u64 {
        // Bell triangle recurrence; Bell(n) is the last entry of row n.
        let mut row = vec![1u64];
        for _ in 1..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                next.push(next.last().unwrap() + x);
            }
            row = next;
        }
        *row.last().unwrap()
    }

    #[test]
    fn stream_lengths_sum_to_bell_numbers() {
        for n in 1..=10 {
            let total: usize = (1..=n)
                .map(|k| partitions_into(n, k).unwrap().count())
                .sum();
            assert_eq!(total as u64, bell(n), "n={n}");
        }
        assert_eq!(
            (1..=7usize)
                .map(|k| partitions_into(7, k).unwrap().count())
                .sum::<usize>(),
            877
        );
    }

    #[test]
    fn wide_partitions_use_the_general_vector_path() {
        // 22 vertices need 5 bits per entry, so 13 parts exceed the packed
        // word; both code paths must agree with a direct pairwise scan.
        let g = Graph::cycle(22);
        let dm = distances(&g);
        for k in [12usize, 13, 14] {
            let assign: Vec<usize> = (0..22).map(|v| v % k).collect();
            let p = Partition::from_assignment(&assign).unwrap();
            let vecs: Vec<Vec<u32>> = (0..22).map(|u| distance_vector(&dm, u, &p)).collect();
            let mut naive = true;
            for u in 0..22 {
                for v in (u + 1)..22 {
                    naive &= vecs[u] != vecs[v];
                }
            }
            assert_eq!(is_resolving(&dm, &p), naive, "k={k}");
        }
    }

    #[test]
    fn stream_is_canonical_and_duplicate_free() {
        for n in 1..=8 {
            for k in 1..=n {
                let mut seen = HashSet::new();
                let mut prev: Option<Vec<u8>> = None;
                for p in partitions_into(n, k).unwrap() {
                    assert_eq!(p.k(), k);
                    let rgs: Vec<u8> = (0..n).map(|v| p.part_of(v) as u8).collect();
                    // Restricted growth: each label at most one past the prefix max.
                    let mut max = 0u8;
                    assert_eq!(rgs[0], 0);
                    for &x in &rgs {
                        assert!(x <= max + 1 || x == 0);
                        max = max.max(x);
                    }
                    if let Some(prev) = &prev {
                        assert!(prev < &rgs, "not strictly increasing at n={n} k={k}");
                    }
                    prev = Some(rgs.clone());
                    assert!(seen.insert(rgs), "duplicate at n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn stream_resumes_from_saved_string() {
        let all: Vec<Partition> = partitions_into(6, 3).unwrap().collect();
        let mut head = partitions_into(6, 3).unwrap();
        for _ in 0..10 {
            head.next();
        }
        let resumed: Vec<Partition> = KPartitions::starting_at(6, 3, head.rgs())
            .unwrap()
            .collect();
        assert_eq!(resumed, all[10..].to_vec());
    }

    #[test]
    fn split_off_validations() {
        let p = Partition::parse("0,1,2|3,4", 5).unwrap();
        assert_eq!(p.split_off(0b00011).unwrap().to_string(), "0,1|2|3,4");
        assert!(p.split_off(0).is_err());
        assert!(p.split_off(0b11000).is_err(), "would empty part 1");
        assert!(p.split_off(0b01001).is_err(), "spans two parts");
    }

    #[test]
    fn refinement_of_resolving_stays_resolving() {
        let graphs = [Graph::path(6), Graph::cycle(7), Graph::star(5)];
        for g in &graphs {
            let dm = distances(g);
            for p in partitions_into(g.order(), 3).unwrap() {
                if !is_resolving(&dm, &p) {
                    continue;
                }
                for j in 0..p.k() {
                    let part = p.part_bits(j);
                    if part.count_ones() >= 2 {
                        let lowest = 1u64 << part.trailing_zeros();
                        let refined = p.split_off(lowest).unwrap();
                        assert!(is_resolving(&dm, &refined));
                    }
                }
            }
        }
    }

    #[test]
    fn singleton_partition_resolves_and_dominates_connected_graphs() {
        for g in [Graph::path(5), Graph::cycle(6), Graph::complete(4)] {
            let dm = distances(&g);
            let p = Partition::singletons(g.order());
            assert!(is_resolving(&dm, &p));
            assert!(is_dominating(&dm, &p));
        }
    }
}
