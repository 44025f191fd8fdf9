//! Closed forms for two trees of diameter `n - 3` and the point where their
//! coefficients cross.
//!
//! With the spine `v_0 .. v_{n-3}`:
//! * `T1` carries a pendant path of two vertices at `v_2`;
//! * `T2` carries one leaf at `v_1` and one at `v_{n-4}`;
//! * `T3` carries two leaves at `v_1`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::canon::is_isomorphic;
use crate::coeffs::{binomial, laplacian_coefficients, CoeffVector};
use crate::enumerate::{enumerate_filtered, TreePredicate};
use crate::error::{Error, Result};
use crate::tree::Tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClosedFormTree {
    T1,
    T2,
    T3,
}

/// `(coefficient, top offset, bottom offset)`: the term
/// `coefficient * C(2n - top - k, k - bottom)`.
type Term = (u32, i64, i64);

const T1_TERMS: [Term; 9] = [
    (6, 9, 2),
    (8, 9, 1),
    (1, 9, 0),
    (11, 8, 3),
    (21, 8, 2),
    (6, 7, 4),
    (20, 7, 3),
    (1, 6, 5),
    (5, 6, 4),
];

const T2_TERMS: [Term; 15] = [
    (1, 11, 2),
    (2, 11, 1),
    (1, 11, 0),
    (4, 10, 3),
    (12, 10, 2),
    (8, 10, 1),
    (6, 9, 4),
    (24, 9, 3),
    (22, 9, 2),
    (4, 8, 5),
    (20, 8, 4),
    (24, 8, 3),
    (1, 7, 6),
    (6, 7, 5),
    (9, 7, 4),
];

/// `c_k` of `T1` or `T2` on `n` vertices from the binomial sums, with
/// `C(a, b) = 0` outside `0 <= b <= a`. `T3` has no closed form and yields an
/// error.
pub fn closed_form_c(which: ClosedFormTree, n: u64, k: u64) -> Result<BigUint> {
    let terms: &[Term] = match which {
        ClosedFormTree::T1 => &T1_TERMS,
        ClosedFormTree::T2 => &T2_TERMS,
        ClosedFormTree::T3 => return Err(Error::Domain("no closed form for T3".into())),
    };
    let (n, k) = (n as i64, k as i64);
    Ok(terms
        .iter()
        .map(|&(c, top, bottom)| binomial(2 * n - top - k, k - bottom) * c)
        .sum())
}

pub fn closed_form_vector(which: ClosedFormTree, n: usize) -> Result<CoeffVector> {
    let c = (0..=n as u64)
        .map(|k| closed_form_c(which, n as u64, k))
        .collect::<Result<_>>()?;
    Ok(CoeffVector::new(c))
}

/// The tree `which` on `n >= 8` vertices, labeled spine first.
pub fn d_minus_3_tree(which: ClosedFormTree, n: usize) -> Result<Tree> {
    if n < 8 {
        return Err(Error::Domain(format!(
            "the diameter n-3 trees need n >= 8, got {n}"
        )));
    }
    let d = n - 3;
    let mut edges: Vec<(usize, usize)> = (1..=d).map(|v| (v - 1, v)).collect();
    let (a, b) = (n - 2, n - 1);
    match which {
        ClosedFormTree::T1 => edges.extend([(2, a), (a, b)]),
        ClosedFormTree::T2 => edges.extend([(1, a), (d - 1, b)]),
        ClosedFormTree::T3 => edges.extend([(1, a), (1, b)]),
    }
    Tree::new(n, edges)
}

/// Result of locating the closed-form trees among all trees of diameter
/// `n - 3`.
#[derive(Clone, Debug, Serialize)]
pub struct Identification {
    pub n: usize,
    pub candidates: usize,
    /// Trees whose vector equals the `T1` closed form.
    pub t1: Vec<Tree>,
    pub t2: Vec<Tree>,
    /// Greatest element among the trees lying strictly below `T2` at every
    /// `2 <= k <= n - 2`, if such a greatest element exists.
    pub t3: Option<Tree>,
}

impl Identification {
    /// Whether each identified shape is the unique match and isomorphic to
    /// the fixture.
    pub fn matches_fixtures(&self) -> bool {
        let fixture = |w| d_minus_3_tree(w, self.n).expect("n >= 8");
        let single = |v: &[Tree], w| v.len() == 1 && is_isomorphic(&v[0], &fixture(w));
        single(&self.t1, ClosedFormTree::T1)
            && single(&self.t2, ClosedFormTree::T2)
            && self
                .t3
                .as_ref()
                .is_some_and(|t| is_isomorphic(t, &fixture(ClosedFormTree::T3)))
    }
}

/// Searches all trees of diameter `n - 3` for the closed-form trees.
pub fn identify_d_minus_3(n: usize) -> Result<Identification> {
    if n < 8 {
        return Err(Error::Domain(format!(
            "the diameter n-3 trees need n >= 8, got {n}"
        )));
    }
    let v1 = closed_form_vector(ClosedFormTree::T1, n)?;
    let v2 = closed_form_vector(ClosedFormTree::T2, n)?;
    let all: Vec<(Tree, CoeffVector)> = enumerate_filtered(n, TreePredicate::Diameter(n - 3))?
        .map(|t| {
            let c = laplacian_coefficients(&t);
            (t, c)
        })
        .collect();
    let pick = |v: &CoeffVector| {
        all.iter()
            .filter(|(_, c)| c == v)
            .map(|(t, _)| t.clone())
            .collect()
    };
    let below: Vec<&(Tree, CoeffVector)> = all
        .iter()
        .filter(|(_, c)| (2..=n - 2).all(|k| c.get(k) < v2.get(k)) && c.dominated_by(&v2))
        .collect();
    let t3 = below
        .iter()
        .find(|(_, c)| below.iter().all(|(_, o)| o.dominated_by(c)))
        .map(|(t, _)| t.clone());
    Ok(Identification {
        n,
        candidates: all.len(),
        t1: pick(&v1),
        t2: pick(&v2),
        t3,
    })
}

/// `P(n, k)`; for `2 <= k <= n - 2` its sign is the sign of
/// `c_k(T2) - c_k(T1)`.
pub fn quartic_nk(n: i128, k: i128) -> i128 {
    -408 - 788 * k - 120 * k.pow(2) - 13 * k.pow(3)
        + 3 * k.pow(4)
        + 844 * n
        + 639 * k * n
        + 81 * k.pow(2) * n
        - 4 * k.pow(3) * n
        - 466 * n.pow(2)
        - 186 * k * n.pow(2)
        - 6 * k.pow(2) * n.pow(2)
        + 104 * n.pow(3)
        + 16 * k * n.pow(3)
        - 8 * n.pow(4)
}

/// `P(x) = 3x^4 - 4x^3 - 6x^2 + 16x - 8`, the limit of `P(n, xn) / n^4`.
pub fn quartic_x(x: f64) -> f64 {
    (((3.0 * x - 4.0) * x - 6.0) * x + 16.0) * x - 8.0
}

/// Reference value of the positive root of `P(x)`.
pub const X0: f64 = 0.771748;

/// A dyadic bracket `[lo, hi] / 2^bits` around the positive root of `P(x)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuarticRoot {
    #[serde(serialize_with = "crate::coeffs::as_decimal")]
    pub lo: BigInt,
    #[serde(serialize_with = "crate::coeffs::as_decimal")]
    pub hi: BigInt,
    pub bits: u32,
    pub estimate: f64,
}

impl QuarticRoot {
    pub fn width(&self) -> f64 {
        2f64.powi(-(self.bits as i32))
    }
}

/// `2^(4 bits) * P(m / 2^bits)`, exact.
fn scaled_p(m: &BigInt, bits: u32) -> BigInt {
    let s = BigInt::one() << bits;
    let m2 = m * m;
    let s2 = &s * &s;
    3 * &m2 * &m2 - 4 * &m2 * m * &s - 6 * &m2 * &s2 + 16 * m * &s2 * &s - 8 * &s2 * &s2
}

/// Bisects `P` on `[0, 1]`, where `P(0) = -8 < 0 < 1 = P(1)`, deciding every
/// sign exactly.
pub fn quartic_root(bits: u32) -> QuarticRoot {
    let mut lo = BigInt::zero();
    let mut hi = BigInt::one();
    for b in 1..=bits {
        lo <<= 1;
        hi <<= 1;
        let mid: BigInt = (&lo + &hi) >> 1;
        if scaled_p(&mid, b).is_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let scale = 2f64.powi(bits as i32);
    let to_f = |v: &BigInt| v.to_string().parse::<f64>().unwrap_or(f64::NAN) / scale;
    let estimate = (to_f(&lo) + to_f(&hi)) / 2.0;
    QuarticRoot {
        lo,
        hi,
        bits,
        estimate,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossingReport {
    pub n: usize,
    /// Smallest `k` in `2..=n-2` with `c_k(T2) > c_k(T1)`.
    pub k_star: Option<usize>,
    /// Number of sign changes of `c_k(T2) - c_k(T1)` over `2..=n-2`, ignoring
    /// zeros.
    pub sign_changes: usize,
    pub ratio: Option<f64>,
    pub x0: f64,
}

/// Compares the closed forms of `T2` and `T1` for every `k` and the
/// positive root of `P(x)`.
pub fn crossing_analysis(n: usize) -> Result<CrossingReport> {
    if n < 8 {
        return Err(Error::Domain(format!(
            "crossing analysis needs n >= 8, got {n}"
        )));
    }
    let mut signs = Vec::new();
    for k in 2..=n as u64 - 2 {
        let a = BigInt::from(closed_form_c(ClosedFormTree::T2, n as u64, k)?);
        let b = BigInt::from(closed_form_c(ClosedFormTree::T1, n as u64, k)?);
        signs.push((k as usize, (a - b).signum()));
    }
    let k_star = signs.iter().find(|(_, s)| s.is_positive()).map(|&(k, _)| k);
    let nonzero: Vec<_> = signs.iter().filter(|(_, s)| !s.is_zero()).collect();
    let sign_changes = nonzero.windows(2).filter(|w| w[0].1 != w[1].1).count();
    Ok(CrossingReport {
        n,
        k_star,
        sign_changes,
        ratio: k_star.map(|k| k as f64 / n as f64),
        x0: quartic_root(48).estimate,
    })
}
