#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use treelap::Tree;

/// Decodes a Prüfer sequence over `0..n`.
pub fn from_pruefer(n: usize, seq: &[usize]) -> Tree {
    assert!(n >= 2 && seq.len() == n - 2);
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::new(n, edges).unwrap()
}

pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Tree {
    if n == 1 {
        return Tree::single_vertex();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    from_pruefer(n, &seq)
}

pub fn relabel(t: &Tree, perm: &[usize]) -> Tree {
    Tree::new(
        t.n(),
        t.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect(),
    )
    .unwrap()
}

pub fn random_relabel<R: Rng>(t: &Tree, rng: &mut R) -> Tree {
    let mut perm: Vec<usize> = (0..t.n()).collect();
    perm.shuffle(rng);
    relabel(t, &perm)
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn edge_set(t: &Tree) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = t
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    e.sort_unstable();
    e
}

/// Whether some vertex bijection maps `a` onto `b`, by trying them all.
pub fn brute_isomorphic(a: &Tree, b: &Tree) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let target = edge_set(b);
    let mut found = false;
    for_each_permutation(a.n(), |p| {
        if !found && edge_set(&relabel(a, p)) == target {
            found = true;
        }
    });
    found
}

/// Number of automorphisms, by trying every permutation.
pub fn brute_automorphisms(t: &Tree) -> u64 {
    let own = edge_set(t);
    let mut count = 0;
    for_each_permutation(t.n(), |p| {
        if edge_set(&relabel(t, p)) == own {
            count += 1;
        }
    });
    count
}

/// Number of `k`-edge matchings of `t` for every `k`, by subset enumeration.
pub fn brute_matchings(t: &Tree) -> Vec<u64> {
    let e = t.edges();
    let mut counts = vec![0u64; t.n() / 2 + 1];
    for mask in 0u64..(1 << e.len()) {
        let mut used = vec![false; t.n()];
        let mut ok = true;
        for (i, &(u, v)) in e.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used[u] || used[v] {
                    ok = false;
                    break;
                }
                used[u] = true;
                used[v] = true;
            }
        }
        if ok {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

/// All perfect matchings, as sorted edge lists, by subset enumeration.
pub fn brute_perfect_matchings(t: &Tree) -> Vec<Vec<(usize, usize)>> {
    let e = edge_set(t);
    let mut out = Vec::new();
    if t.n() % 2 == 1 {
        return out;
    }
    for mask in 0u64..(1 << e.len()) {
        if mask.count_ones() as usize != t.n() / 2 {
            continue;
        }
        let mut used = vec![false; t.n()];
        let chosen: Vec<_> = (0..e.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| e[i])
            .collect();
        if chosen.iter().all(|&(u, v)| {
            let fresh = !used[u] && !used[v];
            used[u] = true;
            used[v] = true;
            fresh
        }) {
            out.push(chosen);
        }
    }
    out
}

pub fn brute_wiener(t: &Tree) -> u64 {
    (0..t.n())
        .map(|v| t.distances(v).iter().map(|&d| d as u64).sum::<u64>())
        .sum::<u64>()
        / 2
}
