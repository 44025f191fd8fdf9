//! The domination order on coefficient vectors and its pair taxonomy.
//!
//! For two vectors `a`, `b` of equal length let `r` and `s` be the first and
//! last indices where they differ. `a` is below `b` in the first-difference
//! order when `a[r] < b[r]`, and in the last-difference order when
//! `a[s] < b[s]`. Pairs that are not componentwise comparable split into
//! type 1 (the two orders disagree) and type 2 (they agree, yet some middle
//! entry goes the other way).

use std::cmp::Ordering;
use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::coeffs::{laplacian_coefficients, CoeffVector};
use crate::enumerate::enumerate_trees;
use crate::error::{Error, Result};
use crate::SizeLimit;

/// Which side of a dominated pair is the smaller one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    /// The first vector is below the second.
    FirstBelow,
    /// The first vector is above the second.
    FirstAbove,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PairTag {
    Equal,
    Dominates(Direction),
    IncomparableType1,
    IncomparableType2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PairClass {
    pub tag: PairTag,
    /// First index where the vectors differ.
    pub r: Option<usize>,
    /// Last index where the vectors differ.
    pub s: Option<usize>,
    /// Comparison of the first vector against the second at `r`.
    #[serde(skip)]
    pub at_r: Ordering,
    /// Comparison of the first vector against the second at `s`.
    #[serde(skip)]
    pub at_s: Ordering,
}

impl PairClass {
    pub fn is_incomparable(&self) -> bool {
        matches!(
            self.tag,
            PairTag::IncomparableType1 | PairTag::IncomparableType2
        )
    }

    /// The pair with its two sides swapped.
    pub fn reversed(&self) -> PairClass {
        let tag = match self.tag {
            PairTag::Dominates(Direction::FirstBelow) => PairTag::Dominates(Direction::FirstAbove),
            PairTag::Dominates(Direction::FirstAbove) => PairTag::Dominates(Direction::FirstBelow),
            other => other,
        };
        PairClass {
            tag,
            r: self.r,
            s: self.s,
            at_r: self.at_r.reverse(),
            at_s: self.at_s.reverse(),
        }
    }
}

pub(crate) fn classify_slices<T: Ord>(a: &[T], b: &[T]) -> PairClass {
    let mut r = None;
    let mut s = None;
    let (mut below, mut above) = (false, false);
    for (k, (x, y)) in a.iter().zip(b).enumerate() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => below = true,
            Ordering::Greater => above = true,
        }
        r.get_or_insert(k);
        s = Some(k);
    }
    let (Some(ri), Some(si)) = (r, s) else {
        return PairClass {
            tag: PairTag::Equal,
            r,
            s,
            at_r: Ordering::Equal,
            at_s: Ordering::Equal,
        };
    };
    let at_r = a[ri].cmp(&b[ri]);
    let at_s = a[si].cmp(&b[si]);
    let tag = match (below, above) {
        (true, false) => PairTag::Dominates(Direction::FirstBelow),
        (false, true) => PairTag::Dominates(Direction::FirstAbove),
        _ if at_r != at_s => PairTag::IncomparableType1,
        _ => PairTag::IncomparableType2,
    };
    PairClass {
        tag,
        r,
        s,
        at_r,
        at_s,
    }
}

/// Classifies a pair of coefficient vectors.
pub fn classify(a: &CoeffVector, b: &CoeffVector) -> Result<PairClass> {
    if a.values().len() != b.values().len() {
        return Err(Error::LengthMismatch {
            left: a.values().len(),
            right: b.values().len(),
        });
    }
    Ok(classify_slices(a.values(), b.values()))
}

/// Counters over unordered pairs. All fields are plain sums, so partial
/// counts merge in any order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PairCounts {
    pub pairs: u64,
    pub equal: u64,
    pub dominated: u64,
    pub type1: u64,
    pub type2: u64,
}

impl PairCounts {
    fn record(&mut self, tag: PairTag) {
        self.pairs += 1;
        match tag {
            PairTag::Equal => self.equal += 1,
            PairTag::Dominates(_) => self.dominated += 1,
            PairTag::IncomparableType1 => self.type1 += 1,
            PairTag::IncomparableType2 => self.type2 += 1,
        }
    }

    fn merge(mut self, other: PairCounts) -> PairCounts {
        self.pairs += other.pairs;
        self.equal += other.equal;
        self.dominated += other.dominated;
        self.type1 += other.type1;
        self.type2 += other.type2;
        self
    }
}

fn count_rows<T: Ord + Sync>(flat: &[T], stride: usize) -> PairCounts {
    let rows = flat.len() / stride;
    (0..rows)
        .into_par_iter()
        .map(|i| {
            let a = &flat[i * stride..(i + 1) * stride];
            let mut counts = PairCounts::default();
            for j in i + 1..rows {
                let b = &flat[j * stride..(j + 1) * stride];
                counts.record(classify_slices(a, b).tag);
            }
            counts
        })
        .reduce(PairCounts::default, PairCounts::merge)
}

/// Classifies every unordered pair of equal-length vectors. Work is spread
/// over the rayon pool; the result does not depend on the schedule.
pub fn classify_vectors(vectors: &[CoeffVector]) -> Result<PairCounts> {
    let Some(first) = vectors.first() else {
        return Ok(PairCounts::default());
    };
    let stride = first.values().len();
    if let Some(bad) = vectors.iter().find(|v| v.values().len() != stride) {
        return Err(Error::LengthMismatch {
            left: stride,
            right: bad.values().len(),
        });
    }
    let packed: Option<Vec<Vec<u64>>> = vectors.iter().map(CoeffVector::to_u64s).collect();
    Ok(match packed {
        Some(rows) => count_rows(&rows.concat(), stride),
        None => {
            let flat: Vec<_> = vectors
                .iter()
                .flat_map(|v| v.values().iter().cloned())
                .collect();
            count_rows(&flat, stride)
        }
    })
}

/// One row of the incomparable-pairs table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    pub n: usize,
    pub trees: u64,
    pub type1: u64,
    pub type2: u64,
    pub incomparable: u64,
    /// Percentage of incomparable pairs in hundredths of a percent,
    /// rounded half up.
    #[serde(rename = "percent", serialize_with = "serialize_percent")]
    pub percent_hundredths: u64,
    /// Pairs with identical coefficient vectors. Not part of any other column.
    pub cospectral: u64,
}

fn serialize_percent<S: Serializer>(v: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&format_args!("{}.{:02}", v / 100, v % 100))
}

impl ClassificationRow {
    pub const CSV_HEADER: &'static str = "n,trees,type1,type2,incomparable,percent";

    pub fn from_counts(n: usize, trees: u64, counts: &PairCounts) -> Self {
        let incomparable = counts.type1 + counts.type2;
        let pairs = trees * trees.saturating_sub(1) / 2;
        let percent_hundredths = if pairs == 0 {
            0
        } else {
            let (num, den) = (
                20_000u128 * incomparable as u128 + pairs as u128,
                2 * pairs as u128,
            );
            (num / den) as u64
        };
        ClassificationRow {
            n,
            trees,
            type1: counts.type1,
            type2: counts.type2,
            incomparable,
            percent_hundredths,
            cospectral: counts.equal,
        }
    }

    pub fn percent(&self) -> String {
        format!(
            "{}.{:02}",
            self.percent_hundredths / 100,
            self.percent_hundredths % 100
        )
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n,
            self.trees,
            self.type1,
            self.type2,
            self.incomparable,
            self.percent()
        )
    }
}

fn all_vectors(n: usize) -> Result<Vec<CoeffVector>> {
    let trees: Vec<_> = enumerate_trees(n)?.collect();
    Ok(trees.par_iter().map(laplacian_coefficients).collect())
}

/// Enumerates every tree on `n` vertices and classifies all unordered pairs.
pub fn classify_all(n: usize, limit: SizeLimit) -> Result<ClassificationRow> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "pair classification needs n >= 3, got {n}"
        )));
    }
    limit.check(n)?;
    let vectors = all_vectors(n)?;
    let counts = classify_vectors(&vectors)?;
    Ok(ClassificationRow::from_counts(
        n,
        vectors.len() as u64,
        &counts,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PosetStats {
    pub n: usize,
    pub trees: usize,
    /// Distinct coefficient vectors (cospectral trees collapsed).
    pub elements: usize,
    /// Number of elements in a longest strictly increasing chain.
    pub longest_chain: usize,
    pub max_antichain: usize,
}

/// Chain and antichain sizes of the domination order on `n`-vertex trees.
pub fn poset_stats(n: usize, limit: SizeLimit) -> Result<PosetStats> {
    limit.check(n)?;
    let vectors = all_vectors(n)?;
    let (elements, longest_chain, max_antichain) = poset_of(&vectors);
    Ok(PosetStats {
        n,
        trees: vectors.len(),
        elements,
        longest_chain,
        max_antichain,
    })
}

/// Returns `(distinct elements, longest chain, maximum antichain)`.
pub fn poset_of(vectors: &[CoeffVector]) -> (usize, usize, usize) {
    let mut elems: Vec<&CoeffVector> = vectors.iter().collect();
    elems.sort_by(|a, b| a.values().cmp(b.values()));
    elems.dedup();
    // strict domination strictly increases the entry sum, so sorting by sum
    // gives a linear extension
    elems.sort_by_cached_key(|v| v.values().iter().sum::<num_bigint::BigUint>());
    let m = elems.len();
    let below: Vec<Vec<usize>> = (0..m)
        .into_par_iter()
        .map(|i| {
            (i + 1..m)
                .filter(|&j| elems[i].strictly_dominated_by(elems[j]))
                .collect()
        })
        .collect();

    let mut chain = vec![1usize; m];
    for i in 0..m {
        for &j in &below[i] {
            chain[j] = chain[j].max(chain[i] + 1);
        }
    }
    let longest = chain.into_iter().max().unwrap_or(0);

    // Dilworth: minimum chain cover = m - maximum matching in the split graph
    let antichain = m - hopcroft_karp(m, &below);
    (m, longest, antichain)
}

/// Maximum matching in a bipartite graph with `n` vertices per side, `adj[u]`
/// listing right-side neighbors of left vertex `u`.
pub(crate) fn hopcroft_karp(n: usize, adj: &[Vec<usize>]) -> usize {
    const NIL: usize = usize::MAX;
    let mut pair_left = vec![NIL; n];
    let mut pair_right = vec![NIL; n];
    let mut dist = vec![0usize; n];
    let mut matched = 0;
    loop {
        // layer free left vertices
        let mut queue = VecDeque::new();
        for u in 0..n {
            if pair_left[u] == NIL {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = pair_right[v];
                if w == NIL {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            return matched;
        }
        let mut next_edge = vec![0usize; n];
        for u in 0..n {
            if pair_left[u] == NIL
                && augment(
                    u,
                    adj,
                    &mut pair_left,
                    &mut pair_right,
                    &mut dist,
                    &mut next_edge,
                )
            {
                matched += 1;
            }
        }
    }
}

fn augment(
    root: usize,
    adj: &[Vec<usize>],
    pair_left: &mut [usize],
    pair_right: &mut [usize],
    dist: &mut [usize],
    next_edge: &mut [usize],
) -> bool {
    const NIL: usize = usize::MAX;
    // iterative DFS along the BFS layers
    let mut stack = vec![root];
    let mut via: Vec<usize> = Vec::new();
    while let Some(&u) = stack.last() {
        if next_edge[u] == adj[u].len() {
            dist[u] = usize::MAX;
            stack.pop();
            via.pop();
            continue;
        }
        let v = adj[u][next_edge[u]];
        next_edge[u] += 1;
        let w = pair_right[v];
        if w == NIL {
            via.push(v);
            for (&l, &r) in stack.iter().zip(&via) {
                pair_left[l] = r;
                pair_right[r] = l;
            }
            return true;
        }
        if dist[w] == dist[u].wrapping_add(1) {
            stack.push(w);
            via.push(v);
        }
    }
    false
}
