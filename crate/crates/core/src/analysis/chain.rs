use serde::Serialize;

use crate::canon::is_isomorphic;
use crate::coeffs::laplacian_coefficients;
use crate::error::{Error, Result};
use crate::family::{build_family, FamilySpec};
use crate::transform::{pendant_slide, TransformKind, TransformStep};
use crate::tree::{Tree, Vertex};

/// `S_n = T_0, T_1, ..., T_m = P_n`, each tree obtained from the previous one
/// by a single pendant slide.
#[derive(Clone, Debug, Serialize)]
pub struct DominationChain {
    pub n: usize,
    pub trees: Vec<Tree>,
    pub steps: Vec<TransformStep>,
}

/// Outcome of checking a chain against its defining properties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCheck {
    pub starts_at_star: bool,
    pub ends_at_path: bool,
    /// Indices `i` where `T_i` is not strictly dominated by `T_(i+1)`.
    pub non_strict_steps: Vec<usize>,
}

impl ChainCheck {
    pub fn holds(&self) -> bool {
        self.starts_at_star && self.ends_at_path && self.non_strict_steps.is_empty()
    }
}

impl DominationChain {
    /// Number of steps `m`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn check(&self) -> ChainCheck {
        let star = build_family(&FamilySpec::Star(self.n)).expect("n >= 1");
        let path = build_family(&FamilySpec::Path(self.n)).expect("n >= 1");
        let coeffs: Vec<_> = self.trees.iter().map(laplacian_coefficients).collect();
        ChainCheck {
            starts_at_star: self.trees.first().is_some_and(|t| is_isomorphic(t, &star)),
            ends_at_path: self.trees.last().is_some_and(|t| is_isomorphic(t, &path)),
            non_strict_steps: coeffs
                .windows(2)
                .enumerate()
                .filter(|(_, w)| !w[0].strictly_dominated_by(&w[1]))
                .map(|(i, _)| i)
                .collect(),
        }
    }
}

/// Steps taken by [`build_chain`]: `sum_{d=2}^{n-2} floor(d/2)`, which is
/// `floor((n-1)/2) * floor((n-2)/2)`.
pub fn chain_length(n: usize) -> usize {
    if n < 3 {
        return 0;
    }
    ((n - 1) / 2) * ((n - 2) / 2)
}

/// `sum_{d=2}^{n-1} floor(d/2) = floor((n-1)^2 / 4)`, the count obtained when
/// the diameter also runs through `n - 1`.
pub fn chain_length_full_sum(n: usize) -> usize {
    if n < 3 {
        return 0;
    }
    (n - 1) * (n - 1) / 4
}

/// Builds the chain from `S_n = C_{n,2}` to `P_n = C_{n,n-1}`.
///
/// For each `d` in `2..=n-2`, one pendant vertex at the center `v_{d/2}` of
/// `C_{n,d}` is slid along the spine one vertex at a time until it hangs
/// from `v_0`, where it extends the spine. That takes `floor(d/2)` slides and
/// yields `C_{n,d+1}`. Each slide undoes a δ-transformation at the pendant's
/// new neighbor.
pub fn build_chain(n: usize) -> Result<DominationChain> {
    if n < 3 {
        return Err(Error::Domain(format!("the chain needs n >= 3, got {n}")));
    }
    let mut t = build_family(&FamilySpec::CatNd { n, d: 2 })?;
    let mut spine: Vec<Vertex> = vec![0, 1, 2];
    let mut trees = vec![t.clone()];
    let mut steps = Vec::new();
    for d in 2..=n - 2 {
        let center = spine[d / 2];
        let leaf = t
            .neighbors(center)
            .iter()
            .copied()
            .filter(|v| !spine.contains(v))
            .max()
            .expect("C_(n,d) with d < n-1 has a pendant at its center");
        for i in (0..d / 2).rev() {
            let next = pendant_slide(&t, leaf, spine[i])?;
            steps.push(TransformStep {
                kind: TransformKind::PendantSlide,
                site: vec![leaf, spine[i + 1], spine[i]],
                before: t,
                after: next.clone(),
            });
            trees.push(next.clone());
            t = next;
        }
        spine.insert(0, leaf);
        // keep the remaining pendants at index floor((d+1)/2)
        if spine.iter().position(|&v| v == center) != Some(d.div_ceil(2)) {
            spine.reverse();
        }
    }
    Ok(DominationChain { n, trees, steps })
}
