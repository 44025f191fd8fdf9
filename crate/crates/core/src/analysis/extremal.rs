use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use super::stream_trees;
use crate::canon::{canonical_code, CanonicalCode};
use crate::coeffs::{laplacian_coefficients, CoeffVector};
use crate::enumerate::starlike_legs;
use crate::error::{Error, Result};
use crate::tree::Tree;
use crate::SizeLimit;

/// Tree classes swept by [`extremal_sweep`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeClass {
    Diameter(usize),
    MaxDegree(usize),
    /// Starlike trees with exactly this many legs.
    Starlike(usize),
    /// Trees with a perfect matching and this maximum degree.
    PerfectMatchingMaxDegree(usize),
}

impl TreeClass {
    pub fn contains(&self, t: &Tree) -> bool {
        match *self {
            TreeClass::Diameter(d) => t.diameter() == d,
            TreeClass::MaxDegree(delta) => t.max_degree() == delta,
            TreeClass::Starlike(k) => starlike_legs(t).is_some_and(|l| l.len() == k),
            TreeClass::PerfectMatchingMaxDegree(delta) => {
                t.max_degree() == delta && t.has_perfect_matching()
            }
        }
    }
}

impl fmt::Display for TreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeClass::Diameter(d) => write!(f, "diameter={d}"),
            TreeClass::MaxDegree(d) => write!(f, "max_degree={d}"),
            TreeClass::Starlike(k) => write!(f, "starlike={k}"),
            TreeClass::PerfectMatchingMaxDegree(d) => write!(f, "perfect_matching,max_degree={d}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Min,
    Max,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "min" => Ok(Mode::Min),
            "max" => Ok(Mode::Max),
            _ => Err(Error::Domain(format!("mode must be min or max, got {s:?}"))),
        }
    }
}

impl Mode {
    /// Whether `candidate` beats `incumbent`.
    fn better(self, candidate: &BigUint, incumbent: &BigUint) -> Ordering {
        match self {
            Mode::Min => incumbent.cmp(candidate),
            Mode::Max => candidate.cmp(incumbent),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Winner {
    pub code: CanonicalCode,
    pub tree: Tree,
}

impl Winner {
    fn of(tree: Tree) -> Winner {
        Winner {
            code: canonical_code(&tree),
            tree,
        }
    }
}

/// Extremal value of `c_k` over the class and the classes attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KExtremum {
    pub k: usize,
    #[serde(serialize_with = "crate::coeffs::as_decimal")]
    pub value: BigUint,
    /// Number of isomorphism classes attaining `value`.
    pub count: u64,
    /// The first attaining classes in enumeration order, at most
    /// [`ExtremalReport::WINNER_CAP`] of them.
    pub winners: Vec<Winner>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub class: TreeClass,
    pub mode: Mode,
    /// Isomorphism classes in the tree class.
    pub members: u64,
    /// One entry per `k = 0..=n`; empty when the class is.
    pub per_k: Vec<KExtremum>,
    /// The componentwise extreme vector, if the class is nonempty.
    pub extreme: Option<CoeffVector>,
    /// Classes whose whole vector equals `extreme`.
    pub simultaneous: Vec<Winner>,
}

impl ExtremalReport {
    pub const WINNER_CAP: usize = 16;

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    /// The unique simultaneous extremal class, if there is exactly one.
    pub fn unique_simultaneous(&self) -> Option<&Winner> {
        match self.simultaneous.as_slice() {
            [w] => Some(w),
            _ => None,
        }
    }
}

/// Enumerates the class and finds, for each `k`, the extreme value of `c_k`
/// and the trees attaining it, plus every tree that is extreme for all `k`
/// at once.
pub fn extremal_sweep(
    n: usize,
    class: TreeClass,
    mode: Mode,
    limit: SizeLimit,
) -> Result<ExtremalReport> {
    limit.check(n)?;
    let mut members = 0u64;
    let mut per_k: Vec<KExtremum> = Vec::new();
    let mut extreme: Option<Vec<BigUint>> = None;
    let mut simultaneous: Vec<Winner> = Vec::new();
    stream_trees(
        n,
        |t| class.contains(t).then(|| laplacian_coefficients(t)),
        |t, c| {
            members += 1;
            let values = c.values();
            if per_k.is_empty() {
                per_k = values
                    .iter()
                    .enumerate()
                    .map(|(k, v)| KExtremum {
                        k,
                        value: v.clone(),
                        count: 0,
                        winners: Vec::new(),
                    })
                    .collect();
            }
            for (slot, v) in per_k.iter_mut().zip(values) {
                match mode.better(v, &slot.value) {
                    Ordering::Less => continue,
                    Ordering::Greater => {
                        slot.value = v.clone();
                        slot.count = 0;
                        slot.winners.clear();
                    }
                    Ordering::Equal => {}
                }
                slot.count += 1;
                if slot.winners.len() < ExtremalReport::WINNER_CAP {
                    slot.winners.push(Winner::of(t.clone()));
                }
            }
            // trees equal to the running extreme vector; the survivors at the
            // end are exactly those equal to the final one
            let merged: Vec<BigUint> = match &extreme {
                None => values.to_vec(),
                Some(e) => e
                    .iter()
                    .zip(values)
                    .map(|(a, b)| {
                        if mode.better(b, a) == Ordering::Greater {
                            b.clone()
                        } else {
                            a.clone()
                        }
                    })
                    .collect(),
            };
            if extreme.as_ref() != Some(&merged) {
                simultaneous.clear();
            }
            if merged.as_slice() == values {
                simultaneous.push(Winner::of(t));
            }
            extreme = Some(merged);
        },
    )?;
    Ok(ExtremalReport {
        n,
        class,
        mode,
        members,
        per_k,
        extreme: extreme.map(CoeffVector::new),
        simultaneous,
    })
}
