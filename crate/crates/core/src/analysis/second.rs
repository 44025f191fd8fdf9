use serde::Serialize;

use super::stream_trees;
use crate::coeffs::{laplacian_coefficients, CoeffVector};
use crate::error::{Error, Result};
use crate::family::{build_family, FamilySpec};
use crate::tree::Tree;
use crate::SizeLimit;

#[derive(Clone, Debug, Serialize)]
pub struct SecondExtremalReport {
    pub n: usize,
    pub trees: u64,
    /// Trees other than the star not dominating `C_{n,3}`.
    pub caterpillar_violations: Vec<Tree>,
    /// Trees other than the path not dominated by `B_{n,3}`.
    pub broom_violations: Vec<Tree>,
    /// `C_{n,2} <= C_{n,3} <= ... <= C_{n,n-1}`.
    pub caterpillar_chain: bool,
    /// `B_{n,n-1} <= B_{n,n-2} <= ... <= B_{n,2}`.
    pub broom_chain: bool,
    /// `A(n,n/2) <= ... <= A(n,2)`; `None` for odd `n`.
    pub a_chain: Option<bool>,
}

impl SecondExtremalReport {
    pub fn holds(&self) -> bool {
        self.caterpillar_violations.is_empty()
            && self.broom_violations.is_empty()
            && self.caterpillar_chain
            && self.broom_chain
            && self.a_chain != Some(false)
    }
}

fn monotone(specs: impl Iterator<Item = FamilySpec>) -> Result<bool> {
    let vectors: Vec<CoeffVector> = specs
        .map(|s| build_family(&s).map(|t| laplacian_coefficients(&t)))
        .collect::<Result<_>>()?;
    Ok(vectors.windows(2).all(|w| w[0].dominated_by(&w[1])))
}

/// Checks over all trees on `n >= 4` vertices that `C_{n,3}` sits directly
/// above the star and `B_{n,3}` directly below the path, and that the
/// caterpillar, broom and `A` families are monotone chains.
pub fn second_extremal_check(n: usize, limit: SizeLimit) -> Result<SecondExtremalReport> {
    if n < 4 {
        return Err(Error::Domain(format!(
            "second-extremal check needs n >= 4, got {n}"
        )));
    }
    limit.check(n)?;
    let c3 = laplacian_coefficients(&build_family(&FamilySpec::CatNd { n, d: 3 })?);
    let b3 = laplacian_coefficients(&build_family(&FamilySpec::Broom { n, max_degree: 3 })?);
    let mut trees = 0;
    let mut caterpillar_violations = Vec::new();
    let mut broom_violations = Vec::new();
    stream_trees(
        n,
        |t| {
            let c = laplacian_coefficients(t);
            let is_star = t.max_degree() == n - 1;
            Some((
                !is_star && !c3.dominated_by(&c),
                !t.is_path() && !c.dominated_by(&b3),
            ))
        },
        |t, (cat_bad, broom_bad)| {
            trees += 1;
            match (cat_bad, broom_bad) {
                (true, true) => {
                    caterpillar_violations.push(t.clone());
                    broom_violations.push(t);
                }
                (true, false) => caterpillar_violations.push(t),
                (false, true) => broom_violations.push(t),
                (false, false) => {}
            }
        },
    )?;
    let a_chain = if n.is_multiple_of(2) {
        Some(monotone((2..=n / 2).rev().map(|max_degree| {
            FamilySpec::PerfectMatching { n, max_degree }
        }))?)
    } else {
        None
    };
    Ok(SecondExtremalReport {
        n,
        trees,
        caterpillar_violations,
        broom_violations,
        caterpillar_chain: monotone((2..n).map(|d| FamilySpec::CatNd { n, d }))?,
        broom_chain: monotone(
            (2..n)
                .rev()
                .map(|max_degree| FamilySpec::Broom { n, max_degree }),
        )?,
        a_chain,
    })
}
