//! Exact Laplacian coefficients of trees and the partial orders they induce.
//!
//! The Laplacian coefficients `c_0, ..., c_n` of an `n`-vertex tree are the
//! absolute values of the coefficients of `det(xI - L)`. For trees they equal
//! the matching numbers of the subdivision graph, which is how the default
//! engine computes them; a second engine goes through fraction-free
//! determinants and interpolation and serves as a cross-check.
//!
//! Besides the two engines the crate provides free-tree enumeration, canonical
//! forms, the coefficient-monotone tree transformations, the domination order
//! with its pair taxonomy, and a handful of extremal constructions built on
//! top of them.

pub mod analysis;
pub mod canon;
pub mod coeffs;
pub mod enumerate;
mod error;
pub mod family;
pub mod order;
pub mod transform;
pub mod tree;

pub use canon::{canonical_code, is_isomorphic, CanonicalCode};
pub use coeffs::{
    coeffs_via_charpoly, coeffs_via_matchings, laplacian_coefficients, matchings,
    path_matching_count, CoeffVector, MatchingVector,
};
pub use enumerate::{enumerate_filtered, enumerate_trees, FreeTrees, TreePredicate};
pub use error::{Error, Result};
pub use family::{build_family, FamilySpec};
pub use order::{classify, classify_all, poset_stats, ClassificationRow, PairClass, PairTag};
pub use transform::{
    delta_transform, path_shift, pendant_slide, two_edge_shift, verify_monotonicity,
    MonotonicityReport, Theorem, TransformKind, TransformStep,
};
pub use tree::{Tree, Vertex};

/// Upper bound on `n` accepted by the expensive exhaustive routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeLimit {
    pub max_n: usize,
}

impl SizeLimit {
    /// Default guard for routines quadratic in the number of trees.
    pub const PAIRWISE: SizeLimit = SizeLimit { max_n: 14 };
    /// Default guard for routines linear in the number of trees.
    pub const PER_TREE: SizeLimit = SizeLimit { max_n: 20 };

    pub const fn unbounded() -> Self {
        SizeLimit { max_n: usize::MAX }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::TooLarge {
                n,
                limit: self.max_n,
            })
        } else {
            Ok(())
        }
    }
}
