//! Canonical forms for free trees.
//!
//! The tree is rooted at its centroid and encoded bottom-up as a balanced
//! parenthesis string with children sorted (AHU encoding). A tree with two
//! centroids takes the smaller of the two rooted encodings.

use std::fmt;

use serde::Serialize;

use crate::tree::{Tree, Vertex};

/// Isomorphism-class key. Equal codes if and only if the trees are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // only ASCII parentheses are ever stored
        f.write_str(std::str::from_utf8(&self.0).unwrap())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Vertices whose removal leaves no component larger than `n / 2`.
pub fn centroids(t: &Tree) -> Vec<Vertex> {
    let n = t.n();
    let (parent, order) = t.rooted(0);
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            size[p] += size[v];
        }
    }
    let mut out: Vec<Vertex> = (0..n)
        .filter(|&v| {
            let up = n - size[v];
            let down = t
                .neighbors(v)
                .iter()
                .filter(|&&w| parent[w] == Some(v))
                .map(|&w| size[w]);
            down.chain(std::iter::once(up)).all(|s| 2 * s <= n)
        })
        .collect();
    out.sort_unstable();
    out
}

/// AHU encoding of `t` rooted at `root`.
pub fn rooted_code(t: &Tree, root: Vertex) -> Vec<u8> {
    let (parent, order) = t.rooted(root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); t.n()];
    let mut kids: Vec<Vec<Vec<u8>>> = vec![Vec::new(); t.n()];
    for &v in order.iter().rev() {
        let mut children = std::mem::take(&mut kids[v]);
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        match parent[v] {
            Some(p) => kids[p].push(code),
            None => codes[v] = code,
        }
    }
    std::mem::take(&mut codes[root])
}

pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let code = centroids(t)
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .unwrap();
    CanonicalCode(code)
}

pub fn is_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.n() == b.n() && canonical_code(a) == canonical_code(b)
}
