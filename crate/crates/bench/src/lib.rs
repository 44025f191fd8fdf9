//! Shared fixtures for the criterion benchmarks.

use treelap::{enumerate_trees, Tree};

/// Every free tree on `n` vertices.
pub fn all_trees(n: usize) -> Vec<Tree> {
    enumerate_trees(n).expect("n >= 1").collect()
}

/// A deterministic spread of `count` trees on `n` vertices taken from the
/// enumeration order.
pub fn sample_trees(n: usize, count: usize) -> Vec<Tree> {
    let all = all_trees(n);
    let step = (all.len() / count.max(1)).max(1);
    all.into_iter().step_by(step).take(count).collect()
}
