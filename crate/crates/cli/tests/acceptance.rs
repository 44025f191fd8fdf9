//! Acceptance checks, one test per requirement. Each prints a single
//! `[PASS]` or `[FAIL]` line (visible with `--nocapture`) followed by the
//! details of any failure.

use std::process::Command;

use num_bigint::BigUint;
use treelap::analysis::{
    build_chain, chain_length, chain_length_full_sum, closed_form_vector, crossing_analysis,
    extremal_sweep, identify_d_minus_3, quartic_root, second_extremal_check, ClosedFormTree, Mode,
    TreeClass,
};
use treelap::order::classify_vectors;
use treelap::{
    build_family, classify, coeffs_via_charpoly, coeffs_via_matchings, enumerate_trees,
    is_isomorphic, laplacian_coefficients, CoeffVector, FamilySpec, PairTag, SizeLimit, Tree,
};

fn verdict(label: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("[PASS] {label}");
    } else {
        println!("[FAIL] {label}");
        for f in failures {
            println!("       {f}");
        }
    }
    assert!(failures.is_empty(), "{label}: {}", failures.join("; "));
}

fn treelap(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_treelap"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

fn family(spec: FamilySpec) -> Tree {
    build_family(&spec).expect("valid family parameters")
}

#[test]
fn table_of_incomparable_pairs() {
    let expected = "\
n,trees,type1,type2,incomparable,percent
3,1,0,0,0,0.00
4,2,0,0,0,0.00
5,3,0,0,0,0.00
6,6,0,0,0,0.00
7,11,0,0,0,0.00
8,23,7,0,7,2.77
9,47,56,0,56,5.18
10,106,476,5,481,8.64
11,235,2786,22,2808,10.21
12,551,18857,230,19087,12.60
";
    let (code, out) = treelap(&["table1", "--max-n", "12", "--format", "csv"]);
    let mut failures = Vec::new();
    if code != 0 {
        failures.push(format!("exit status {code}"));
    }
    for (want, got) in expected.lines().zip(out.lines()) {
        if want != got {
            failures.push(format!("expected {want:?}, got {got:?}"));
        }
    }
    if out.lines().count() != expected.lines().count() {
        failures.push(format!(
            "{} lines instead of {}",
            out.lines().count(),
            expected.lines().count()
        ));
    }
    verdict("incomparable-pair table for n = 3..12", &failures);
}

#[test]
fn dual_engine_oracle() {
    let mut failures = Vec::new();
    let mut total = 0;
    for n in 1..=10u64 {
        for t in enumerate_trees(n as usize).unwrap() {
            total += 1;
            let c = coeffs_via_matchings(&t);
            if c != coeffs_via_charpoly(&t) {
                failures.push(format!("engines disagree on {t}"));
            }
            let b = |x: u64| BigUint::from(x);
            let nu = n as usize;
            let mut ok = c.get(0) == &b(1) && c.get(nu) == &b(0);
            if n >= 2 {
                ok &= c.get(1) == &b(2 * (n - 1))
                    && c.get(nu - 1) == &b(n)
                    && c.get(nu - 2) == &b(t.wiener())
                    && c.get(2) + b(t.zagreb() / 2) == b(2 * n * n + 3) - b(5 * n);
            }
            if !ok {
                failures.push(format!("identity fails on {t}: {c}"));
            }
        }
    }
    if total != 201 {
        failures.push(format!("{total} trees instead of 201"));
    }
    verdict(
        "two coefficient engines agree with all identities for n <= 10",
        &failures,
    );
}

#[test]
fn eight_vertex_witness_pair() {
    let a = CoeffVector::from_u64s(&[1, 14, 75, 196, 267, 190, 65, 8, 0]);
    let b = CoeffVector::from_u64s(&[1, 14, 74, 190, 259, 188, 66, 8, 0]);
    let vectors: Vec<CoeffVector> = enumerate_trees(8)
        .unwrap()
        .map(|t| laplacian_coefficients(&t))
        .collect();
    let mut failures = Vec::new();
    if vectors.len() != 23 {
        failures.push(format!("{} trees on 8 vertices", vectors.len()));
    }
    let mut pairs = 0;
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            let (x, y) = (&vectors[i], &vectors[j]);
            if (x == &a && y == &b) || (x == &b && y == &a) {
                pairs += 1;
            }
        }
    }
    if pairs != 1 {
        failures.push(format!("{pairs} pairs carry the two vectors"));
    }
    let tag = classify(&a, &b).unwrap().tag;
    if tag != PairTag::IncomparableType1 {
        failures.push(format!("classified as {tag:?}"));
    }
    let type1 = classify_vectors(&vectors).unwrap().type1;
    if type1 != 7 {
        failures.push(format!("{type1} type-1 pairs instead of 7"));
    }
    verdict(
        "witness pair on 8 vertices is incomparable of type 1",
        &failures,
    );
}

#[test]
fn monotonicity_theorems() {
    let mut failures = Vec::new();
    for (theorem, n) in [
        ("delta", "10"),
        ("path_shift", "10"),
        ("two_edge_shift", "12"),
        ("majorization", "12"),
    ] {
        let (code, out) = treelap(&["verify", "--theorem", theorem, "--max-n", n]);
        if code != 0 || !out.lines().any(|l| l == "violations: 0") {
            failures.push(format!("{theorem} up to n = {n}: exit {code}\n{out}"));
        }
    }
    verdict("transformation theorems hold exhaustively", &failures);
}

#[test]
fn extremal_families() {
    let mut failures = Vec::new();
    let mut check = |n: usize, class: TreeClass, mode: Mode, expected: Tree, name: String| {
        let r = extremal_sweep(n, class, mode, SizeLimit::PER_TREE).unwrap();
        if !r
            .simultaneous
            .iter()
            .any(|w| is_isomorphic(&w.tree, &expected))
        {
            let found = if r.simultaneous.is_empty() {
                "no simultaneous extremum".to_string()
            } else {
                format!("simultaneous extremum {}", r.simultaneous[0].tree)
            };
            failures.push(format!(
                "{name} is not the per-k {mode:?} over {class} at n = {n} ({found})"
            ));
        }
    };
    for n in 3..=12 {
        for d in 2..n {
            check(
                n,
                TreeClass::Diameter(d),
                Mode::Min,
                family(FamilySpec::CatNd { n, d }),
                format!("C({n},{d})"),
            );
        }
        for delta in 2..n {
            let broom = family(FamilySpec::Broom {
                n,
                max_degree: delta,
            });
            check(
                n,
                TreeClass::MaxDegree(delta),
                Mode::Max,
                broom,
                format!("B({n},{delta})"),
            );
        }
        for k in 3..n {
            let s = family(FamilySpec::BalancedStarlike { n, legs: k });
            check(
                n,
                TreeClass::Starlike(k),
                Mode::Min,
                s,
                format!("balanced starlike ({n},{k})"),
            );
        }
        if n % 2 == 0 && n >= 4 {
            for delta in 2..=n / 2 {
                let a = family(FamilySpec::PerfectMatching {
                    n,
                    max_degree: delta,
                });
                check(
                    n,
                    TreeClass::PerfectMatchingMaxDegree(delta),
                    Mode::Min,
                    a,
                    format!("A({n},{delta})"),
                );
            }
        }
    }
    verdict(
        "caterpillar, broom, balanced starlike and A families are extremal for n <= 12",
        &failures,
    );
}

#[test]
fn star_to_path_chain() {
    let mut failures = Vec::new();
    for n in 5..=20 {
        let chain = build_chain(n).unwrap();
        let check = chain.check();
        if !check.starts_at_star || !check.ends_at_path {
            failures.push(format!("n = {n}: wrong endpoints"));
        }
        if !check.non_strict_steps.is_empty() {
            failures.push(format!(
                "n = {n}: non-strict steps {:?}",
                check.non_strict_steps
            ));
        }
        if chain.len() != chain_length_full_sum(n) {
            failures.push(format!(
                "n = {n}: {} steps, expected floor((n-1)^2/4) = {} (floor((n-1)/2)*floor((n-2)/2) = {})",
                chain.len(),
                chain_length_full_sum(n),
                chain_length(n)
            ));
        }
    }
    verdict("star-to-path chain for n = 5..20", &failures);
}

#[test]
fn closed_forms_and_crossing() {
    let mut failures = Vec::new();
    for n in 9..=14 {
        let id = identify_d_minus_3(n).unwrap();
        if !id.matches_fixtures() {
            failures.push(format!(
                "n = {n}: search found {} T1 and {} T2 candidates",
                id.t1.len(),
                id.t2.len()
            ));
            continue;
        }
        let (t1, t2) = (&id.t1[0], &id.t2[0]);
        if laplacian_coefficients(t1) != closed_form_vector(ClosedFormTree::T1, n).unwrap()
            || laplacian_coefficients(t2) != closed_form_vector(ClosedFormTree::T2, n).unwrap()
        {
            failures.push(format!("n = {n}: closed form differs from the tree"));
        }
        if t2.zagreb() as i64 - t1.zagreb() as i64 != 2 {
            failures.push(format!(
                "n = {n}: Zagreb difference {}",
                t2.zagreb() as i64 - t1.zagreb() as i64
            ));
        }
        if t2.wiener() as i64 - t1.wiener() as i64 != 2 * n as i64 - 14 {
            failures.push(format!(
                "n = {n}: Wiener difference {}",
                t2.wiener() as i64 - t1.wiener() as i64
            ));
        }
    }
    let x0 = quartic_root(48).estimate;
    if (x0 - 0.771748).abs() > 1e-6 {
        failures.push(format!("root {x0}"));
    }
    let r = crossing_analysis(200).unwrap();
    match r.k_star {
        Some(k) if (k as f64 / 200.0 - x0).abs() <= 0.05 => {}
        other => failures.push(format!("n = 200: k* = {other:?}")),
    }
    verdict(
        "closed forms, index differences and crossing point",
        &failures,
    );
}

#[test]
fn second_extremal_and_family_chains() {
    let mut failures = Vec::new();
    for n in 4..=12 {
        let r = second_extremal_check(n, SizeLimit::PER_TREE).unwrap();
        if !r.caterpillar_violations.is_empty() {
            failures.push(format!(
                "n = {n}: C(n,3) not below {}",
                r.caterpillar_violations[0]
            ));
        }
        if !r.broom_violations.is_empty() {
            failures.push(format!(
                "n = {n}: B(n,3) not above {}",
                r.broom_violations[0]
            ));
        }
        if !r.caterpillar_chain || !r.broom_chain || r.a_chain == Some(false) {
            failures.push(format!("n = {n}: family chain not monotone"));
        }
    }
    verdict(
        "second-extremal trees and family chains for n <= 12",
        &failures,
    );
}
