//! Laplacian coefficient vectors and matching numbers.
//!
//! Two independent engines compute the same vector: [`coeffs_via_matchings`]
//! counts matchings of the subdivision graph with a rooted dynamic program,
//! [`coeffs_via_charpoly`] expands `det(xI - L)` exactly.

mod charpoly;
mod matching;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::tree::Tree;

pub use charpoly::{coeffs_via_charpoly, laplacian_characteristic_polynomial};
pub use matching::matchings;

/// The Laplacian coefficients `c_0..=c_n` of an `n`-vertex tree, stored
/// as nonnegative integers: `det(xI - L) = sum (-1)^k c_k x^(n-k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffVector {
    c: Vec<BigUint>,
}

impl CoeffVector {
    pub fn new(c: Vec<BigUint>) -> Self {
        assert!(!c.is_empty(), "a coefficient vector holds at least c_0");
        CoeffVector { c }
    }

    pub fn from_u64s(values: &[u64]) -> Self {
        CoeffVector::new(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    /// Vertex count of the tree the vector belongs to.
    pub fn n(&self) -> usize {
        self.c.len() - 1
    }

    pub fn get(&self, k: usize) -> &BigUint {
        &self.c[k]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.c
    }

    /// The vector as machine words, if every entry fits.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.c.iter().map(ToPrimitive::to_u64).collect()
    }

    /// `self <= other` componentwise (the domination order).
    pub fn dominated_by(&self, other: &CoeffVector) -> bool {
        self.c.len() == other.c.len() && self.c.iter().zip(&other.c).all(|(a, b)| a <= b)
    }

    /// Dominated with at least one strict inequality.
    pub fn strictly_dominated_by(&self, other: &CoeffVector) -> bool {
        self.dominated_by(other) && self != other
    }
}

/// Comma-separated decimal entries, `c_0` first.
impl fmt::Display for CoeffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.c.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Serialize for CoeffVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `m[k]` is the number of `k`-edge matchings. Trailing zeros are trimmed, so
/// the length is one more than the matching number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingVector {
    m: Vec<BigUint>,
}

impl MatchingVector {
    pub(crate) fn new(mut m: Vec<BigUint>) -> Self {
        while m.len() > 1 && m.last().is_some_and(Zero::is_zero) {
            m.pop();
        }
        MatchingVector { m }
    }

    /// `m_k`, zero past the largest matching.
    pub fn get(&self, k: usize) -> BigUint {
        self.m.get(k).cloned().unwrap_or_default()
    }

    pub fn values(&self) -> &[BigUint] {
        &self.m
    }

    /// Total number of matchings (the Hosoya index).
    pub fn total(&self) -> BigUint {
        self.m.iter().sum()
    }
}

/// Serializes big integers as decimal strings.
pub(crate) fn as_decimal<T: fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Coefficient vector through the subdivision-graph identity
/// `c_k(T) = m_k(S(T))`.
pub fn coeffs_via_matchings(t: &Tree) -> CoeffVector {
    let m = matchings(&t.subdivision());
    CoeffVector::new((0..=t.n()).map(|k| m.get(k)).collect())
}

/// The default engine.
pub fn laplacian_coefficients(t: &Tree) -> CoeffVector {
    coeffs_via_matchings(t)
}

/// Binomial coefficient with the convention `C(a, b) = 0` unless `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 || a < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut r = BigUint::one();
    for i in 0..b {
        r = r * BigUint::from((a - i) as u64) / BigUint::from((i + 1) as u64);
    }
    r
}

/// Number of `k`-matchings of the path on `n` vertices, `C(n - k, k)`.
pub fn path_matching_count(n: u64, k: u64) -> BigUint {
    binomial(n as i64 - k as i64, k as i64)
}
