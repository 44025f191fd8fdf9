//! Exhaustive generation of free trees.
//!
//! Trees are produced as canonical level sequences rooted at a center, by the
//! Wright–Richmond–Odlyzko–McKay successor rule on top of the Beyer–Hedetniemi
//! rooted-tree successor. Each isomorphism class appears exactly once and the
//! order is fixed: it starts at the path and ends at the star.

use crate::error::{Error, Result};
use crate::tree::{Tree, Vertex};

/// Structural filters supported by [`enumerate_filtered`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreePredicate {
    Diameter(usize),
    MaxDegree(usize),
    PerfectMatching,
    /// Starlike with exactly `k` legs. For `k >= 3` this is a single vertex of
    /// degree `k` and every other vertex of degree at most two; for `k = 2`
    /// the members are the paths.
    Starlike(usize),
}

impl TreePredicate {
    pub fn matches(&self, t: &Tree) -> bool {
        match *self {
            TreePredicate::Diameter(d) => t.diameter() == d,
            TreePredicate::MaxDegree(delta) => t.max_degree() == delta,
            TreePredicate::PerfectMatching => t.has_perfect_matching(),
            TreePredicate::Starlike(k) => starlike_legs(t).is_some_and(|legs| legs.len() == k),
        }
    }
}

/// Leg lengths (longest first) of a starlike tree with at least three legs.
/// Paths are starlike with one or two legs depending on the chosen root; they
/// report two legs here, rooted at a center.
pub fn starlike_legs(t: &Tree) -> Option<Vec<usize>> {
    let branching: Vec<Vertex> = (0..t.n()).filter(|&v| t.degree(v) >= 3).collect();
    let root = match branching.as_slice() {
        [] if t.n() >= 3 => t.centers()[0],
        [] => return None,
        [v] => *v,
        _ => return None,
    };
    let mut legs: Vec<usize> = t.pendant_paths(root).iter().map(Vec::len).collect();
    legs.sort_unstable_by(|a, b| b.cmp(a));
    Some(legs)
}

/// Streams every free tree on `n` vertices exactly once.
#[derive(Clone, Debug)]
pub struct FreeTrees {
    n: usize,
    state: State,
}

#[derive(Clone, Debug)]
enum State {
    Small(Option<Tree>),
    Layout(Option<Vec<usize>>),
}

pub fn enumerate_trees(n: usize) -> Result<FreeTrees> {
    if n == 0 {
        return Err(Error::Domain("tree enumeration needs n >= 1".into()));
    }
    let state = match n {
        1 => State::Small(Some(Tree::single_vertex())),
        2 => State::Small(Some(Tree::new(2, vec![(0, 1)]).unwrap())),
        _ => {
            // the path, rooted at its center
            let mut layout: Vec<usize> = (0..=n / 2).collect();
            layout.extend(1..n.div_ceil(2));
            State::Layout(Some(layout))
        }
    };
    Ok(FreeTrees { n, state })
}

/// The subset of [`enumerate_trees`] satisfying `predicate`, in the same order.
pub fn enumerate_filtered(
    n: usize,
    predicate: TreePredicate,
) -> Result<impl Iterator<Item = Tree>> {
    Ok(enumerate_trees(n)?.filter(move |t| predicate.matches(t)))
}

impl FreeTrees {
    pub fn n(&self) -> usize {
        self.n
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        match &mut self.state {
            State::Small(t) => t.take(),
            State::Layout(slot) => {
                let candidate = slot.take()?;
                let layout = next_free(candidate);
                *slot = next_rooted(&layout, None);
                Some(layout_to_tree(&layout))
            }
        }
    }
}

/// Beyer–Hedetniemi successor of a rooted level sequence. `p` overrides the
/// position that gets incremented.
fn next_rooted(levels: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = p.unwrap_or_else(|| {
        let mut p = levels.len() - 1;
        while levels[p] == 1 {
            p -= 1;
        }
        p
    });
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while levels[q] != levels[p] - 1 {
        q -= 1;
    }
    let mut out = levels.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits off the first subtree of the root. Returns it (levels shifted up
/// by one) and the remaining tree.
fn split(levels: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = levels
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &l)| l == 1)
        .map_or(levels.len(), |(i, _)| i);
    let left = levels[1..m].iter().map(|l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&levels[m..]);
    (left, rest)
}

/// Advances to the first rooted sequence at or after `candidate` that is the
/// canonical centered representative of a free tree.
fn next_free(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split(&candidate);
    let left_height = left.iter().max().copied().unwrap_or(0);
    let rest_height = rest.iter().max().copied().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid
        && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
    {
        valid = false;
    }
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p)).expect("p > 0");
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let h = new_left.iter().max().copied().unwrap_or(0);
        let len = next.len();
        for (slot, level) in next[len - (h + 1)..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    next
}

fn layout_to_tree(levels: &[usize]) -> Tree {
    let mut last_at: Vec<Vertex> = vec![0; levels.len() + 1];
    let mut parents = vec![None; levels.len()];
    for (v, &l) in levels.iter().enumerate() {
        if l > 0 {
            parents[v] = Some(last_at[l - 1]);
        }
        last_at[l] = v;
    }
    Tree::from_parents(&parents).expect("level sequence encodes a tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use std::collections::BTreeSet;

    #[test]
    fn small_counts() {
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(enumerate_trees(i + 1).unwrap().count(), e, "n = {}", i + 1);
        }
    }

    #[test]
    fn zero_is_rejected() {
        assert!(enumerate_trees(0).is_err());
    }

    #[test]
    fn starts_at_path_ends_at_star() {
        let all: Vec<_> = enumerate_trees(7).unwrap().collect();
        assert!(all.first().unwrap().is_path());
        assert_eq!(all.last().unwrap().max_degree(), 6);
    }

    #[test]
    fn filters() {
        let d7: Vec<_> = enumerate_filtered(8, TreePredicate::Diameter(7))
            .unwrap()
            .collect();
        assert_eq!(d7.len(), 1);
        assert!(d7[0].is_path());
        let s8: Vec<_> = enumerate_filtered(8, TreePredicate::MaxDegree(7))
            .unwrap()
            .collect();
        assert_eq!(s8.len(), 1);
        let brute = enumerate_trees(8)
            .unwrap()
            .filter(|t| t.has_perfect_matching())
            .count();
        assert_eq!(
            enumerate_filtered(8, TreePredicate::PerfectMatching)
                .unwrap()
                .count(),
            brute
        );
    }

    #[test]
    fn starlike_predicate() {
        // starlike trees with 3 legs on 8 vertices: partitions of 7 into 3 parts
        assert_eq!(
            enumerate_filtered(8, TreePredicate::Starlike(3))
                .unwrap()
                .count(),
            4
        );
        assert_eq!(
            enumerate_filtered(8, TreePredicate::Starlike(2))
                .unwrap()
                .count(),
            1
        );
        let t: Tree = "7 0 1 1 2 0 3 0 4 4 5 5 6".parse().unwrap();
        assert_eq!(starlike_legs(&t), Some(vec![3, 2, 1]));
    }

    #[test]
    fn emitted_classes_are_distinct() {
        for n in 1..=12 {
            let codes: BTreeSet<_> = enumerate_trees(n)
                .unwrap()
                .map(|t| canonical_code(&t))
                .collect();
            assert_eq!(codes.len(), enumerate_trees(n).unwrap().count(), "n = {n}");
        }
    }

    #[test]
    fn deterministic_order() {
        let a: Vec<_> = enumerate_trees(10).unwrap().collect();
        let b: Vec<_> = enumerate_trees(10).unwrap().collect();
        assert_eq!(a, b);
    }
}
