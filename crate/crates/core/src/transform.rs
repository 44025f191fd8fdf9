//! Coefficient-monotone tree edits and an exhaustive checker for them.
//!
//! * δ-transformation at a branching vertex `v` whose other branches are all
//!   pendant paths: all but one of those paths are re-hung at the remaining
//!   neighbor `w`. Every `c_k` weakly decreases when `v` is a branching vertex
//!   furthest from the center.
//! * Pendant-path shift `G(p, q) -> G(p + 1, q - 1)` for two pendant paths
//!   at one vertex with `p >= q >= 1`. Every `c_k` weakly increases.
//! * Two-edge shift `G(p, q) -> G(p + 2, q - 2)` with `p >= q >= 2`; weakly
//!   increases every `c_k` and keeps a perfect matching.
//! * Pendant slide: a leaf moves to a neighbor of its current attachment
//!   vertex. Used by the star-to-path chain.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeffs::{laplacian_coefficients, CoeffVector};
use crate::enumerate::enumerate_trees;
use crate::error::{Error, Result};
use crate::family::{build_family, FamilySpec};
use crate::tree::{Tree, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformKind {
    Delta,
    PathShift,
    TwoEdgeShift,
    PendantSlide,
}

/// One edit together with the trees on either side of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformStep {
    pub kind: TransformKind,
    /// Vertices locating the edit; see the constructing function.
    pub site: Vec<Vertex>,
    pub before: Tree,
    pub after: Tree,
}

fn precondition(msg: String) -> Error {
    Error::Precondition(msg)
}

fn check_vertex(t: &Tree, v: Vertex) -> Result<()> {
    if v >= t.n() {
        return Err(precondition(format!(
            "vertex {v} not in a tree on {} vertices",
            t.n()
        )));
    }
    Ok(())
}

fn longest_first(paths: &mut [Vec<Vertex>]) {
    paths.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
}

/// The local structure a δ-transformation needs at `v`.
struct DeltaSite {
    w: Vertex,
    paths: Vec<Vec<Vertex>>,
}

fn delta_site(t: &Tree, v: Vertex) -> Result<DeltaSite> {
    check_vertex(t, v)?;
    if t.degree(v) < 3 {
        return Err(precondition(format!(
            "vertex {v} has degree {} < 3",
            t.degree(v)
        )));
    }
    let mut paths = t.pendant_paths(v);
    let others: Vec<Vertex> = t
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&u| !paths.iter().any(|p| p[0] == u))
        .collect();
    match others.as_slice() {
        [w] => Ok(DeltaSite { w: *w, paths }),
        [] => {
            // starlike around v: the longest leg plays the role of w's side
            longest_first(&mut paths);
            let w = paths.remove(0)[0];
            Ok(DeltaSite { w, paths })
        }
        _ => Err(precondition(format!(
            "vertex {v} has {} neighbors that do not start pendant paths",
            others.len()
        ))),
    }
}

fn apply_delta(t: &Tree, v: Vertex, site: &DeltaSite, keep: Vertex) -> Result<Tree> {
    let moved: Vec<Vertex> = site
        .paths
        .iter()
        .map(|p| p[0])
        .filter(|&s| s != keep)
        .collect();
    let remove: Vec<_> = moved.iter().map(|&s| (v, s)).collect();
    let add: Vec<_> = moved.iter().map(|&s| (site.w, s)).collect();
    t.rewire(&remove, &add)
}

/// δ-transformation at `v`, keeping the longest pendant path at `v` (lowest
/// first vertex on ties) and moving the others to `w`.
///
/// `w` is the unique neighbor of `v` not starting a pendant path. If every
/// neighbor starts one (a starlike tree centered at `v`), the longest leg is
/// taken as `w`'s side; that case lies outside the monotonicity theorem.
pub fn delta_transform(t: &Tree, v: Vertex) -> Result<Tree> {
    let mut site = delta_site(t, v)?;
    longest_first(&mut site.paths);
    let keep = site.paths[0][0];
    apply_delta(t, v, &site, keep)
}

/// δ-transformation at `v` leaving the pendant path that starts at `keep`.
pub fn delta_transform_keeping(t: &Tree, v: Vertex, keep: Vertex) -> Result<Tree> {
    let site = delta_site(t, v)?;
    if !site.paths.iter().any(|p| p[0] == keep) {
        return Err(precondition(format!(
            "{keep} does not start a movable pendant path at {v}"
        )));
    }
    apply_delta(t, v, &site, keep)
}

pub fn delta_step(t: &Tree, v: Vertex) -> Result<TransformStep> {
    let after = delta_transform(t, v)?;
    Ok(TransformStep {
        kind: TransformKind::Delta,
        site: vec![v],
        before: t.clone(),
        after,
    })
}

/// Pendant paths at `w` selected for a shift: the long path `p` and the short
/// path `q`, each listed from `w` outward.
fn shift_pair(
    t: &Tree,
    w: Vertex,
    long: Vertex,
    short: Vertex,
    min_short: usize,
) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    check_vertex(t, w)?;
    if long == short {
        return Err(precondition("the two pendant paths must differ".into()));
    }
    let p = t
        .pendant_path(w, long)
        .ok_or_else(|| precondition(format!("{long} does not start a pendant path at {w}")))?;
    let q = t
        .pendant_path(w, short)
        .ok_or_else(|| precondition(format!("{short} does not start a pendant path at {w}")))?;
    if p.len() < q.len() {
        return Err(precondition(format!("p = {} < q = {}", p.len(), q.len())));
    }
    if q.len() < min_short {
        return Err(precondition(format!("q = {} < {min_short}", q.len())));
    }
    Ok((p, q))
}

fn default_pair(t: &Tree, w: Vertex, min_short: usize) -> Result<(Vertex, Vertex)> {
    check_vertex(t, w)?;
    let mut paths = t.pendant_paths(w);
    longest_first(&mut paths);
    let Some(long) = paths.first().map(|p| p[0]) else {
        return Err(precondition(format!("no pendant path at {w}")));
    };
    let short = paths[1..]
        .iter()
        .filter(|q| q.len() >= min_short)
        .min_by(|a, b| a.len().cmp(&b.len()).then(a[0].cmp(&b[0])))
        .map(|q| q[0])
        .ok_or_else(|| {
            precondition(format!(
                "no second pendant path of length >= {min_short} at {w}"
            ))
        })?;
    Ok((long, short))
}

/// Moves the last `count` vertices of `q` to the end of `p`.
fn move_tail(t: &Tree, w: Vertex, p: &[Vertex], q: &[Vertex], count: usize) -> Result<Tree> {
    let first_moved = q.len() - count;
    let anchor = if first_moved == 0 {
        w
    } else {
        q[first_moved - 1]
    };
    t.rewire(
        &[(anchor, q[first_moved])],
        &[(*p.last().unwrap(), q[first_moved])],
    )
}

/// `G(p, q) -> G(p + 1, q - 1)` using the pendant paths starting at `long`
/// and `short`.
pub fn path_shift_between(t: &Tree, w: Vertex, long: Vertex, short: Vertex) -> Result<Tree> {
    let (p, q) = shift_pair(t, w, long, short, 1)?;
    move_tail(t, w, &p, &q, 1)
}

/// `G(p, q) -> G(p + 1, q - 1)` at `w` with `p` the longest pendant path and
/// `q` the shortest of the others (lowest first vertex on ties).
pub fn path_shift(t: &Tree, w: Vertex) -> Result<Tree> {
    let (long, short) = default_pair(t, w, 1)?;
    path_shift_between(t, w, long, short)
}

/// `G(p, q) -> G(p + 2, q - 2)` using the pendant paths starting at `long`
/// and `short`.
pub fn two_edge_shift_between(t: &Tree, w: Vertex, long: Vertex, short: Vertex) -> Result<Tree> {
    let (p, q) = shift_pair(t, w, long, short, 2)?;
    move_tail(t, w, &p, &q, 2)
}

/// `G(p, q) -> G(p + 2, q - 2)` at `w` with `p` the longest pendant path and
/// `q` the shortest other one of length at least two.
pub fn two_edge_shift(t: &Tree, w: Vertex) -> Result<Tree> {
    let (long, short) = default_pair(t, w, 2)?;
    two_edge_shift_between(t, w, long, short)
}

/// Moves `leaf` from its neighbor to `to`, which must be adjacent to that
/// neighbor.
pub fn pendant_slide(t: &Tree, leaf: Vertex, to: Vertex) -> Result<Tree> {
    check_vertex(t, leaf)?;
    check_vertex(t, to)?;
    if t.degree(leaf) != 1 {
        return Err(precondition(format!("{leaf} is not a leaf")));
    }
    let from = t.neighbors(leaf)[0];
    if to == leaf || !t.has_edge(from, to) {
        return Err(precondition(format!(
            "{to} is not adjacent to {from}, the neighbor of {leaf}"
        )));
    }
    t.rewire(&[(from, leaf)], &[(to, leaf)])
}

/// The monotonicity statements the checker knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    Delta,
    PathShift,
    TwoEdgeShift,
    Majorization,
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Theorem> {
        match s.replace('-', "_").as_str() {
            "delta" => Ok(Theorem::Delta),
            "path_shift" => Ok(Theorem::PathShift),
            "two_edge_shift" => Ok(Theorem::TwoEdgeShift),
            "majorization" => Ok(Theorem::Majorization),
            _ => Err(Error::Domain(format!(
                "unknown theorem {s:?} (expected delta, path_shift, two_edge_shift or majorization)"
            ))),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Delta => "delta",
            Theorem::PathShift => "path_shift",
            Theorem::TwoEdgeShift => "two_edge_shift",
            Theorem::Majorization => "majorization",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub before: Tree,
    pub after: Tree,
    pub site: Vec<Vertex>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotonicityReport {
    pub theorem: Theorem,
    pub n_max: usize,
    /// Trees (or starlike leg vectors) examined.
    pub inputs: u64,
    /// Transformation instances compared.
    pub instances: u64,
    pub violations: Vec<Violation>,
}

impl MonotonicityReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// First index where `low <= high` fails.
fn first_break(low: &CoeffVector, high: &CoeffVector) -> Option<usize> {
    low.values()
        .iter()
        .zip(high.values())
        .position(|(a, b)| a > b)
}

struct Outcome {
    instances: u64,
    violations: Vec<Violation>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            instances: 0,
            violations: Vec::new(),
        }
    }

    /// Records one instance where `low` must be dominated by `high`.
    fn expect_below(
        &mut self,
        before: &Tree,
        after: Tree,
        site: Vec<Vertex>,
        low: &CoeffVector,
        high: &CoeffVector,
    ) {
        self.instances += 1;
        if let Some(k) = first_break(low, high) {
            self.violations.push(Violation {
                before: before.clone(),
                after,
                site,
                detail: format!("c_{k}: {} > {}", low.get(k), high.get(k)),
            });
        }
    }
}

/// Branching vertices at maximum distance from the center of `t`.
pub fn furthest_branching(t: &Tree) -> Vec<Vertex> {
    let centers = t.centers();
    let dist: Vec<usize> = (0..t.n())
        .map(|v| centers.iter().map(|&c| t.distances(c)[v]).min().unwrap())
        .collect();
    let branching: Vec<Vertex> = (0..t.n()).filter(|&v| t.degree(v) >= 3).collect();
    let Some(far) = branching.iter().map(|&v| dist[v]).max() else {
        return Vec::new();
    };
    branching.into_iter().filter(|&v| dist[v] == far).collect()
}

fn check_delta(t: &Tree) -> Outcome {
    let mut out = Outcome::new();
    let before = laplacian_coefficients(t);
    for v in furthest_branching(t) {
        let Ok(site) = delta_site(t, v) else { continue };
        // the hypothesis needs a genuine inner neighbor w
        if t.pendant_path(v, site.w).is_some() {
            continue;
        }
        for keep in site.paths.iter().map(|p| p[0]) {
            let after = apply_delta(t, v, &site, keep).expect("site checked");
            let ca = laplacian_coefficients(&after);
            if after.pendant_count() != t.pendant_count() {
                out.violations.push(Violation {
                    before: t.clone(),
                    after: after.clone(),
                    site: vec![v, keep],
                    detail: "pendant vertex count changed".into(),
                });
            }
            out.expect_below(t, after, vec![v, keep], &ca, &before);
        }
    }
    out
}

fn check_shift(t: &Tree, min_short: usize) -> Outcome {
    let mut out = Outcome::new();
    if min_short == 2 && !t.has_perfect_matching() {
        return out;
    }
    let before = laplacian_coefficients(t);
    for w in 0..t.n() {
        let paths = t.pendant_paths(w);
        for p in &paths {
            for q in &paths {
                if p[0] == q[0] || p.len() < q.len() || q.len() < min_short {
                    continue;
                }
                let after = move_tail(t, w, p, q, min_short).expect("pendant paths checked");
                let site = vec![w, p[0], q[0]];
                if min_short == 2 && !after.has_perfect_matching() {
                    out.violations.push(Violation {
                        before: t.clone(),
                        after: after.clone(),
                        site: site.clone(),
                        detail: "perfect matching lost".into(),
                    });
                }
                let ca = laplacian_coefficients(&after);
                out.expect_below(t, after, site, &before, &ca);
            }
        }
    }
    out
}

/// Nonincreasing compositions of `total` into exactly `parts` positive parts.
pub fn partitions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, parts: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = cap.min(rem.saturating_sub(parts - 1));
        for x in (1..=hi).rev() {
            if x * parts < rem {
                break;
            }
            cur.push(x);
            rec(rem - x, parts - 1, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 && total >= parts {
        rec(total, parts, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Whether the nonincreasing vector `q` majorizes `p`: equal totals and every
/// prefix sum of `q` at least the matching prefix sum of `p`.
pub fn majorizes(q: &[usize], p: &[usize]) -> bool {
    if q.len() != p.len() || q.iter().sum::<usize>() != p.iter().sum::<usize>() {
        return false;
    }
    let (mut sq, mut sp) = (0, 0);
    q.iter().zip(p).all(|(a, b)| {
        sq += a;
        sp += b;
        sq >= sp
    })
}

fn check_majorization(n: usize) -> (u64, Outcome) {
    let mut out = Outcome::new();
    let mut inputs = 0;
    for k in 2..n {
        let legs = partitions(n - 1, k);
        inputs += legs.len() as u64;
        let built: Vec<(Tree, CoeffVector)> = legs
            .par_iter()
            .map(|l| {
                let t = build_family(&FamilySpec::Starlike(l.clone())).expect("legs are positive");
                let c = laplacian_coefficients(&t);
                (t, c)
            })
            .collect();
        for (i, p) in legs.iter().enumerate() {
            for (j, q) in legs.iter().enumerate() {
                if i != j && majorizes(q, p) {
                    let (tp, cp) = &built[i];
                    let (tq, cq) = &built[j];
                    out.expect_below(tp, tq.clone(), vec![], cp, cq);
                }
            }
        }
    }
    (inputs, out)
}

/// Applies every legal instance of `theorem` to every input on at most
/// `n_max` vertices and reports each broken inequality.
///
/// For the δ-transformation only branching vertices furthest from the center
/// are used, and every choice of the path left behind is tried. The shifts
/// try every ordered pair of pendant paths at every vertex; the two-edge
/// shift is restricted to trees with a perfect matching. Majorization
/// compares all starlike trees with the same number of legs.
pub fn verify_monotonicity(theorem: Theorem, n_max: usize) -> MonotonicityReport {
    let mut report = MonotonicityReport {
        theorem,
        n_max,
        inputs: 0,
        instances: 0,
        violations: Vec::new(),
    };
    for n in 1..=n_max {
        if theorem == Theorem::Majorization {
            let (inputs, out) = check_majorization(n);
            report.inputs += inputs;
            report.instances += out.instances;
            report.violations.extend(out.violations);
            continue;
        }
        if theorem == Theorem::TwoEdgeShift && n % 2 == 1 {
            continue;
        }
        let trees: Vec<Tree> = enumerate_trees(n).expect("n >= 1").collect();
        report.inputs += trees.len() as u64;
        let outcomes: Vec<Outcome> = trees
            .par_iter()
            .map(|t| match theorem {
                Theorem::Delta => check_delta(t),
                Theorem::PathShift => check_shift(t, 1),
                Theorem::TwoEdgeShift => check_shift(t, 2),
                Theorem::Majorization => unreachable!(),
            })
            .collect();
        for o in outcomes {
            report.instances += o.instances;
            report.violations.extend(o.violations);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    fn fam(spec: FamilySpec) -> Tree {
        build_family(&spec).unwrap()
    }

    fn below(a: &Tree, b: &Tree) -> bool {
        laplacian_coefficients(a).dominated_by(&laplacian_coefficients(b))
    }

    #[test]
    fn delta_moves_pendant_inward() {
        // path 0..4 with leaf 5 at 1; δ at 1 keeps the leg {0}... both legs have
        // length 1, so the lower label 0 stays and 5 moves to w = 2
        let t: Tree = "6 0 1 1 2 2 3 3 4 1 5".parse().unwrap();
        let after = delta_transform(&t, 1).unwrap();
        assert!(after.has_edge(2, 5) && !after.has_edge(1, 5));
        assert_eq!(after.pendant_count(), t.pendant_count());
        assert!(below(&after, &t));
    }

    #[test]
    fn delta_on_starlike_center() {
        let t = fam(FamilySpec::Starlike(vec![1, 1, 2]));
        let after = delta_transform(&t, 0).unwrap();
        assert!(below(&after, &t));
        assert!(is_isomorphic(&after, &t));
    }

    #[test]
    fn delta_rejects_degree_two() {
        let t = fam(FamilySpec::Path(5));
        assert!(matches!(
            delta_transform(&t, 2),
            Err(Error::Precondition(_))
        ));
        // two inner neighbors: spine 0..6 with leaves at 3 and 1 and 5
        let t: Tree = "9 0 1 1 2 2 3 3 4 4 5 5 6 1 7 5 8".parse().unwrap();
        assert!(delta_transform(&t, 3).is_err());
    }

    #[test]
    fn delta_keeping_choice() {
        let t: Tree = "7 0 1 1 2 2 3 3 4 1 5 5 6".parse().unwrap();
        // at 1: pendant paths {0} and {5,6}, w = 2
        let kept_long = delta_transform(&t, 1).unwrap();
        assert!(kept_long.has_edge(2, 0));
        let kept_short = delta_transform_keeping(&t, 1, 0).unwrap();
        assert!(kept_short.has_edge(2, 5));
        assert!(delta_transform_keeping(&t, 1, 2).is_err());
    }

    #[test]
    fn path_shift_broom_to_path() {
        let b = fam(FamilySpec::Broom {
            n: 6,
            max_degree: 3,
        });
        let after = path_shift(&b, 1).unwrap();
        assert!(after.is_path());
        assert!(below(&b, &after));
    }

    #[test]
    fn path_shift_balanced_spider() {
        let t = fam(FamilySpec::Starlike(vec![2, 2]));
        let after = path_shift(&t, 0).unwrap();
        let mut legs: Vec<_> = after.pendant_paths(0).iter().map(Vec::len).collect();
        legs.sort_unstable();
        assert_eq!(legs, vec![1, 3]);
        assert!(below(&t, &after));
    }

    #[test]
    fn path_shift_needs_two_paths() {
        let t = fam(FamilySpec::Path(4));
        assert!(path_shift(&t, 0).is_err());
        assert!(path_shift_between(&t, 1, 2, 2).is_err());
        // q longer than p
        let s = fam(FamilySpec::Starlike(vec![3, 1]));
        assert!(path_shift_between(&s, 0, 4, 1).is_err());
    }

    #[test]
    fn two_edge_shift_examples() {
        let a = fam(FamilySpec::PerfectMatching {
            n: 12,
            max_degree: 3,
        });
        let after = two_edge_shift(&a, 0).unwrap();
        assert!(after.is_path() && after.n() == 12);
        assert!(below(&a, &after));
        let t = fam(FamilySpec::Starlike(vec![2, 2]));
        let p = two_edge_shift(&t, 0).unwrap();
        assert!(p.is_path());
        assert!(below(&t, &p));
        let a10 = fam(FamilySpec::PerfectMatching {
            n: 10,
            max_degree: 4,
        });
        assert!(two_edge_shift(&a10, 0).unwrap().has_perfect_matching());
        let s = fam(FamilySpec::Starlike(vec![3, 1]));
        assert!(two_edge_shift(&s, 0).is_err());
    }

    #[test]
    fn slide() {
        let t = fam(FamilySpec::CatNd { n: 6, d: 3 });
        // spine 0..3, pendants 4, 5 at 1
        let after = pendant_slide(&t, 5, 0).unwrap();
        assert!(after.has_edge(0, 5));
        assert!(pendant_slide(&t, 5, 3).is_err());
        assert!(pendant_slide(&t, 1, 0).is_err());
    }

    #[test]
    fn theorem_names() {
        assert_eq!(
            "two-edge-shift".parse::<Theorem>().unwrap(),
            Theorem::TwoEdgeShift
        );
        assert_eq!(Theorem::PathShift.to_string(), "path_shift");
        assert!("sigma".parse::<Theorem>().is_err());
    }

    #[test]
    fn partitions_and_majorization() {
        assert_eq!(
            partitions(7, 3),
            vec![vec![5, 1, 1], vec![4, 2, 1], vec![3, 3, 1], vec![3, 2, 2]]
        );
        assert!(partitions(2, 3).is_empty());
        assert!(majorizes(&[5, 1, 1], &[3, 2, 2]));
        assert!(!majorizes(&[3, 2, 2], &[5, 1, 1]));
        assert!(majorizes(&[3, 3, 1], &[3, 2, 2]));
        assert!(!majorizes(&[3, 3], &[3, 2]));
    }

    #[test]
    fn small_verification_runs_are_clean() {
        for theorem in [
            Theorem::Delta,
            Theorem::PathShift,
            Theorem::TwoEdgeShift,
            Theorem::Majorization,
        ] {
            let r = verify_monotonicity(theorem, 8);
            assert!(r.is_clean(), "{theorem}: {:?}", r.violations.first());
            assert!(r.instances > 0, "{theorem}");
        }
    }
}
