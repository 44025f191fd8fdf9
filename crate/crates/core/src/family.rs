//! Named tree families.
//!
//! Labeling is deterministic. Families with a natural spine (path,
//! caterpillars, brooms) label the spine `0..=d` in order and number the
//! attachments afterwards in increasing order of their attachment point.
//! Starlike families put the root at `0` and lay the legs out one after
//! another, each leg numbered outward from the root.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::{Tree, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FamilySpec {
    /// Path `P_n`.
    Path(usize),
    /// Star `S_n`: center `0`, leaves `1..n`.
    Star(usize),
    /// Caterpillar `C(a_1, ..., a_{d-1})`: spine `v_0..v_d` with `a_i`
    /// pendant vertices at `v_i`.
    Caterpillar(Vec<usize>),
    /// `C_{n,d}`: all `n - d - 1` pendant vertices at spine vertex `floor(d/2)`.
    CatNd { n: usize, d: usize },
    /// Broom `B_{n,Δ}`: a star `S_{Δ+1}` with a path of length `n - Δ - 1`
    /// hanging from one of its leaves.
    Broom { n: usize, max_degree: usize },
    /// Starlike `T(n_1, ..., n_k)`: legs of the given lengths joined at a root.
    Starlike(Vec<usize>),
    /// Starlike tree on `n` vertices with `k` legs whose lengths differ by at
    /// most one (longest legs first).
    BalancedStarlike { n: usize, legs: usize },
    /// `A_{n,Δ}`: a root carrying one pendant edge, `Δ - 2` pendant paths of
    /// length two and one path of length `n - 2Δ + 2`. Has a perfect
    /// matching and maximum degree `Δ`.
    PerfectMatching { n: usize, max_degree: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Tree> {
        build_family(self)
    }
}

fn domain(msg: String) -> Error {
    Error::Domain(msg)
}

fn spine_with_pendants(spine_len: usize, pendants: &[(Vertex, usize)]) -> Result<Tree> {
    let mut edges: Vec<(Vertex, Vertex)> = (1..spine_len).map(|v| (v - 1, v)).collect();
    let mut next = spine_len;
    for &(at, count) in pendants {
        for _ in 0..count {
            edges.push((at, next));
            next += 1;
        }
    }
    Tree::new(next, edges)
}

fn starlike(legs: &[usize]) -> Result<Tree> {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::new(next, edges)
}

/// Leg lengths of the balanced starlike tree, longest first.
pub fn balanced_legs(n: usize, legs: usize) -> Vec<usize> {
    let (q, r) = ((n - 1) / legs, (n - 1) % legs);
    (0..legs).map(|i| q + usize::from(i < r)).collect()
}

pub fn build_family(spec: &FamilySpec) -> Result<Tree> {
    match *spec {
        FamilySpec::Path(n) => {
            if n == 0 {
                return Err(domain("path needs n >= 1".into()));
            }
            spine_with_pendants(n, &[])
        }
        FamilySpec::Star(n) => {
            if n == 0 {
                return Err(domain("star needs n >= 1".into()));
            }
            Tree::new(n, (1..n).map(|v| (0, v)).collect())
        }
        FamilySpec::Caterpillar(ref a) => {
            let d = a.len() + 1;
            let pendants: Vec<_> = a.iter().enumerate().map(|(i, &c)| (i + 1, c)).collect();
            spine_with_pendants(d + 1, &pendants)
        }
        FamilySpec::CatNd { n, d } => {
            if n < 3 || d < 2 || d > n - 1 {
                return Err(domain(format!(
                    "C_(n,d) needs n >= 3 and 2 <= d <= n-1, got n={n}, d={d}"
                )));
            }
            spine_with_pendants(d + 1, &[(d / 2, n - d - 1)])
        }
        FamilySpec::Broom { n, max_degree } => {
            if n < 3 || max_degree < 2 || max_degree > n - 1 {
                return Err(domain(format!(
                    "broom needs n >= 3 and 2 <= Δ <= n-1, got n={n}, Δ={max_degree}"
                )));
            }
            // spine: one star leaf, the star center, then the handle
            spine_with_pendants(n - max_degree + 2, &[(1, max_degree - 2)])
        }
        FamilySpec::Starlike(ref legs) => {
            if legs.is_empty() || legs.contains(&0) {
                return Err(domain(format!(
                    "starlike legs must be nonempty and >= 1, got {legs:?}"
                )));
            }
            starlike(legs)
        }
        FamilySpec::BalancedStarlike { n, legs } => {
            if legs == 0 || legs > n.saturating_sub(1) {
                return Err(domain(format!(
                    "balanced starlike needs 1 <= k <= n-1, got n={n}, k={legs}"
                )));
            }
            starlike(&balanced_legs(n, legs))
        }
        FamilySpec::PerfectMatching { n, max_degree } => {
            if n < 2 || n % 2 == 1 || max_degree < 2 || max_degree > n / 2 {
                return Err(domain(format!(
                    "A_(n,Δ) needs even n >= 2 and 2 <= Δ <= n/2, got n={n}, Δ={max_degree}"
                )));
            }
            if n == 2 {
                return Err(domain("A_(n,Δ) needs n >= 4".into()));
            }
            let mut legs = vec![n - 2 * max_degree + 2];
            legs.extend(std::iter::repeat_n(2, max_degree - 2));
            legs.push(1);
            starlike(&legs)
        }
    }
}
