use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::MatchingVector;
use crate::tree::Tree;

type Poly = Vec<BigUint>;

fn add(a: &[BigUint], b: &[BigUint]) -> Poly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

fn mul(a: &[BigUint], b: &[BigUint]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Matching numbers of a tree by a two-state rooted DP.
///
/// For every vertex `v` we keep the matching generating polynomials of its
/// subtree with `v` left free and with `v` covered. Children are folded in one
/// at a time, so each product is bounded by the sizes merged so far.
pub fn matchings(t: &Tree) -> MatchingVector {
    let n = t.n();
    let (parent, order) = t.rooted(0);
    let mut free: Vec<Poly> = vec![vec![BigUint::one()]; n];
    let mut covered: Vec<Poly> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let Some(p) = parent[v] else { continue };
        let child_free = std::mem::take(&mut free[v]);
        let child_any = add(&child_free, &std::mem::take(&mut covered[v]));
        // edge p-v in the matching: p was free, v is free, shift by one edge
        let mut through = vec![BigUint::zero()];
        through.extend(mul(&free[p], &child_free));
        let keep = mul(&covered[p], &child_any);
        covered[p] = add(&keep, &through);
        free[p] = mul(&free[p], &child_any);
    }
    let root = order[0];
    MatchingVector::new(add(&free[root], &covered[root]))
}
