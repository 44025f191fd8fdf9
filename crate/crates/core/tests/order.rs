use std::cmp::Ordering;

use treelap::order::{classify_vectors, poset_of, Direction};
use treelap::{
    classify, classify_all, enumerate_trees, laplacian_coefficients, poset_stats,
    ClassificationRow, CoeffVector, PairTag, SizeLimit,
};

fn vectors(n: usize) -> Vec<CoeffVector> {
    enumerate_trees(n)
        .unwrap()
        .map(|t| laplacian_coefficients(&t))
        .collect()
}

#[test]
fn table_rows_through_twelve() {
    let expected = [
        "3,1,0,0,0,0.00",
        "4,2,0,0,0,0.00",
        "5,3,0,0,0,0.00",
        "6,6,0,0,0,0.00",
        "7,11,0,0,0,0.00",
        "8,23,7,0,7,2.77",
        "9,47,56,0,56,5.18",
        "10,106,476,5,481,8.64",
        "11,235,2786,22,2808,10.21",
        "12,551,18857,230,19087,12.60",
    ];
    for (i, line) in expected.iter().enumerate() {
        let row = classify_all(i + 3, SizeLimit::PAIRWISE).unwrap();
        assert_eq!(row.csv_line(), *line);
    }
    assert_eq!(
        ClassificationRow::CSV_HEADER,
        "n,trees,type1,type2,incomparable,percent"
    );
}

/// Straight from the definitions: incomparable pairs split by whether the
/// first and last differing coefficients disagree in direction.
fn naive_counts(vs: &[CoeffVector]) -> (u64, u64, u64) {
    let (mut t1, mut t2, mut eq) = (0, 0, 0);
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let (a, b) = (vs[i].values(), vs[j].values());
            let diff: Vec<usize> = (0..a.len()).filter(|&k| a[k] != b[k]).collect();
            if diff.is_empty() {
                eq += 1;
                continue;
            }
            let le = a.iter().zip(b).all(|(x, y)| x <= y);
            let ge = a.iter().zip(b).all(|(x, y)| x >= y);
            if le || ge {
                continue;
            }
            let (r, s) = (diff[0], *diff.last().unwrap());
            if (a[r] < b[r]) != (a[s] < b[s]) {
                t1 += 1;
            } else {
                t2 += 1;
            }
        }
    }
    (t1, t2, eq)
}

#[test]
fn parallel_counts_match_naive_definition() {
    for n in 3..=11 {
        let vs = vectors(n);
        let counts = classify_vectors(&vs).unwrap();
        let (t1, t2, eq) = naive_counts(&vs);
        assert_eq!(
            (counts.type1, counts.type2, counts.equal),
            (t1, t2, eq),
            "n = {n}"
        );
    }
}

#[test]
fn witness_pair_at_eight() {
    let a = CoeffVector::from_u64s(&[1, 14, 75, 196, 267, 190, 65, 8, 0]);
    let b = CoeffVector::from_u64s(&[1, 14, 74, 190, 259, 188, 66, 8, 0]);
    let vs = vectors(8);
    assert_eq!(vs.len(), 23);
    assert_eq!(vs.iter().filter(|v| **v == a).count(), 1);
    assert_eq!(vs.iter().filter(|v| **v == b).count(), 1);
    let c = classify(&a, &b).unwrap();
    assert_eq!(c.tag, PairTag::IncomparableType1);
    assert_eq!((c.r, c.s), (Some(2), Some(6)));
    assert_eq!((c.at_r, c.at_s), (Ordering::Greater, Ordering::Less));
    assert_eq!(classify(&b, &a).unwrap(), c.reversed());
    assert_eq!(classify_vectors(&vs).unwrap().type1, 7);
}

#[test]
fn classify_edge_cases() {
    let p4 = CoeffVector::from_u64s(&[1, 6, 10, 4, 0]);
    let s4 = CoeffVector::from_u64s(&[1, 6, 9, 4, 0]);
    assert_eq!(
        classify(&s4, &p4).unwrap().tag,
        PairTag::Dominates(Direction::FirstBelow)
    );
    assert_eq!(
        classify(&p4, &s4).unwrap().tag,
        PairTag::Dominates(Direction::FirstAbove)
    );
    assert_eq!(classify(&p4, &p4).unwrap().tag, PairTag::Equal);
    assert!(classify(&p4, &CoeffVector::from_u64s(&[1, 2, 0])).is_err());
}

fn longest_chain_naive(vs: &[&CoeffVector]) -> usize {
    // memoized longest path in the strict-domination DAG
    fn depth(i: usize, vs: &[&CoeffVector], memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(d) = memo[i] {
            return d;
        }
        let d = 1
            + (0..vs.len())
                .filter(|&j| vs[i].strictly_dominated_by(vs[j]))
                .map(|j| depth(j, vs, memo))
                .max()
                .unwrap_or(0);
        memo[i] = Some(d);
        d
    }
    let mut memo = vec![None; vs.len()];
    (0..vs.len())
        .map(|i| depth(i, vs, &mut memo))
        .max()
        .unwrap_or(0)
}

/// Largest set of pairwise incomparable vectors, by Bron–Kerbosch on the
/// incomparability graph.
fn max_antichain_naive(vs: &[&CoeffVector]) -> usize {
    let m = vs.len();
    let incomparable =
        |i: usize, j: usize| !vs[i].dominated_by(vs[j]) && !vs[j].dominated_by(vs[i]);
    let adj: Vec<Vec<bool>> = (0..m)
        .map(|i| (0..m).map(|j| i != j && incomparable(i, j)).collect())
        .collect();
    fn bk(r: usize, p: Vec<usize>, x: Vec<usize>, adj: &[Vec<bool>], best: &mut usize) {
        if p.is_empty() && x.is_empty() {
            *best = (*best).max(r);
            return;
        }
        if r + p.len() <= *best {
            return;
        }
        let mut p = p;
        let mut x = x;
        while let Some(v) = p.pop() {
            let np = p.iter().copied().filter(|&u| adj[v][u]).collect();
            let nx = x.iter().copied().filter(|&u| adj[v][u]).collect();
            bk(r + 1, np, nx, adj, best);
            x.push(v);
        }
    }
    let mut best = 0;
    bk(0, (0..m).collect(), Vec::new(), &adj, &mut best);
    best
}

#[test]
fn poset_against_brute_force() {
    for n in 1..=9 {
        let vs = vectors(n);
        let mut distinct: Vec<&CoeffVector> = vs.iter().collect();
        distinct.sort_by(|a, b| a.values().cmp(b.values()));
        distinct.dedup();
        let (elements, longest, antichain) = poset_of(&vs);
        assert_eq!(elements, distinct.len());
        assert_eq!(longest, longest_chain_naive(&distinct), "n = {n}");
        assert_eq!(antichain, max_antichain_naive(&distinct), "n = {n}");
    }
}

#[test]
fn poset_examples() {
    let s4 = poset_stats(4, SizeLimit::PAIRWISE).unwrap();
    assert_eq!((s4.longest_chain, s4.max_antichain), (2, 1));
    let s7 = poset_stats(7, SizeLimit::PAIRWISE).unwrap();
    assert_eq!(
        (s7.elements, s7.longest_chain, s7.max_antichain),
        (11, 11, 1)
    );
    assert!(poset_stats(10, SizeLimit::PAIRWISE).unwrap().max_antichain >= 2);
    assert!(poset_stats(15, SizeLimit::PAIRWISE).is_err());
}
