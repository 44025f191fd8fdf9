//! Constructions and checks assembled from the lower layers: the star-to-path
//! domination chain, extremal sweeps over tree classes, closed forms for the
//! diameter `n - 3` pair, and the second-extremal checks.

mod chain;
mod closed_form;
mod extremal;
mod second;

pub use chain::{build_chain, chain_length, chain_length_full_sum, ChainCheck, DominationChain};
pub use closed_form::{
    closed_form_c, closed_form_vector, crossing_analysis, d_minus_3_tree, identify_d_minus_3,
    quartic_nk, quartic_root, quartic_x, ClosedFormTree, CrossingReport, Identification,
    QuarticRoot, X0,
};
pub use extremal::{extremal_sweep, ExtremalReport, KExtremum, Mode, TreeClass, Winner};
pub use second::{second_extremal_check, SecondExtremalReport};

use rayon::prelude::*;

use crate::enumerate::enumerate_trees;
use crate::error::Result;
use crate::tree::Tree;

const CHUNK: usize = 4096;

/// Runs `keep` over every tree on `n` vertices in parallel chunks and hands
/// the kept results to `sink` in enumeration order.
pub(crate) fn stream_trees<T, F, S>(n: usize, keep: F, mut sink: S) -> Result<()>
where
    T: Send,
    F: Fn(&Tree) -> Option<T> + Sync,
    S: FnMut(Tree, T),
{
    let mut trees = enumerate_trees(n)?;
    loop {
        let chunk: Vec<Tree> = trees.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return Ok(());
        }
        let kept: Vec<Option<T>> = chunk.par_iter().map(&keep).collect();
        for (t, k) in chunk.into_iter().zip(kept) {
            if let Some(k) = k {
                sink(t, k);
            }
        }
    }
}
