use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufReader};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde::Serialize;
use treelap::analysis::{
    build_chain, chain_length, chain_length_full_sum, closed_form_c, crossing_analysis,
    extremal_sweep, ClosedFormTree, ExtremalReport,
};
use treelap::order::Direction;
use treelap::tree::read_trees;
use treelap::{
    classify, classify_all, coeffs_via_charpoly, enumerate_trees, laplacian_coefficients,
    poset_stats, verify_monotonicity, ClassificationRow, CoeffVector, PairClass, PairTag,
    SizeLimit, Tree, TreePredicate,
};

use crate::args::{Cli, Command, Engine, Format};
use crate::Report;

pub fn execute(cli: &Cli) -> Result<Report> {
    let guard = |limit: SizeLimit| {
        if cli.force {
            SizeLimit::unbounded()
        } else {
            limit
        }
    };
    let pairwise = guard(SizeLimit::PAIRWISE);
    let per_tree = guard(SizeLimit::PER_TREE);
    let format = cli.format;
    match &cli.command {
        Command::Coeffs { input, engine } => coeffs(read_input(input)?, *engine, format),
        Command::Compare { input } => compare(read_input(input)?, format),
        Command::Enumerate {
            n,
            diameter,
            max_degree,
            perfect_matching,
            starlike,
        } => {
            per_tree.check(*n)?;
            let mut predicates = Vec::new();
            predicates.extend(diameter.map(TreePredicate::Diameter));
            predicates.extend(max_degree.map(TreePredicate::MaxDegree));
            if *perfect_matching {
                predicates.push(TreePredicate::PerfectMatching);
            }
            predicates.extend(starlike.map(TreePredicate::Starlike));
            let trees: Vec<Tree> = enumerate_trees(*n)?
                .filter(|t| predicates.iter().all(|p| p.matches(t)))
                .collect();
            match format {
                Format::Json => json(&trees).map(Report::ok),
                _ => Ok(Report::ok(lines(trees.iter()))),
            }
        }
        Command::ClassifyPairs { n } => {
            let row = classify_all(*n, pairwise)?;
            match format {
                Format::Json => json(&row).map(Report::ok),
                _ => Ok(Report::ok(table_csv(&[row]))),
            }
        }
        Command::Table1 { min_n, max_n } => {
            pairwise.check(*max_n)?;
            let rows = (*min_n..=*max_n)
                .map(|n| classify_all(n, pairwise))
                .collect::<Result<Vec<_>, _>>()?;
            match format {
                Format::Json => json(&rows).map(Report::ok),
                _ => Ok(Report::ok(table_csv(&rows))),
            }
        }
        Command::Chain { n, verify } => chain(*n, *verify, format),
        Command::Verify { theorem, max_n } => {
            per_tree.check(*max_n)?;
            let report = verify_monotonicity(*theorem, *max_n);
            let body = match format {
                Format::Json => json(&report)?,
                Format::Csv => format!(
                    "theorem,max_n,inputs,instances,violations\n{},{},{},{},{}\n",
                    report.theorem,
                    report.n_max,
                    report.inputs,
                    report.instances,
                    report.violations.len()
                ),
                Format::Text => {
                    let mut s = format!(
                        "theorem: {}\nmax n: {}\ninputs: {}\ninstances: {}\nviolations: {}\n",
                        report.theorem,
                        report.n_max,
                        report.inputs,
                        report.instances,
                        report.violations.len()
                    );
                    for v in &report.violations {
                        let _ = writeln!(
                            s,
                            "violation at {:?}: {} -> {}: {}",
                            v.site, v.before, v.after, v.detail
                        );
                    }
                    s
                }
            };
            Ok(Report {
                body,
                clean: report.is_clean(),
            })
        }
        Command::Extremal { n, class, mode } => {
            let report = extremal_sweep(*n, *class, *mode, per_tree)?;
            match format {
                Format::Json => json(&report).map(Report::ok),
                Format::Csv => Ok(Report::ok(extremal_csv(&report))),
                Format::Text => Ok(Report::ok(extremal_text(&report))),
            }
        }
        Command::ClosedForm { n, k } => closed_form(*n, *k, format),
        Command::Crossing { n } => {
            let r = crossing_analysis(*n)?;
            let k_star = r
                .k_star
                .map_or_else(|| "none".to_string(), |k| k.to_string());
            let ratio = r
                .ratio
                .map_or_else(|| "none".to_string(), |x| format!("{x:.6}"));
            let body = match format {
                Format::Json => json(&r)?,
                Format::Csv => format!(
                    "n,k_star,ratio,x0,sign_changes\n{},{},{},{:.9},{}\n",
                    r.n, k_star, ratio, r.x0, r.sign_changes
                ),
                Format::Text => format!(
                    "n: {}\nk*: {}\nk*/n: {}\nx0: {:.9}\nsign changes: {}\n",
                    r.n, k_star, ratio, r.x0, r.sign_changes
                ),
            };
            Ok(Report::ok(body))
        }
        Command::PosetStats { n } => {
            let s = poset_stats(*n, pairwise)?;
            let body = match format {
                Format::Json => json(&s)?,
                _ => format!(
                    "n,trees,elements,longest_chain,max_antichain\n{},{},{},{},{}\n",
                    s.n, s.trees, s.elements, s.longest_chain, s.max_antichain
                ),
            };
            Ok(Report::ok(body))
        }
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn lines<T: std::fmt::Display>(items: impl Iterator<Item = T>) -> String {
    items.fold(String::new(), |mut s, x| {
        let _ = writeln!(s, "{x}");
        s
    })
}

/// Quotes a CSV field if it contains a comma.
fn field(s: impl ToString) -> String {
    let s = s.to_string();
    if s.contains(',') {
        format!("\"{s}\"")
    } else {
        s
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<Vec<Tree>> {
    let trees = match path {
        Some(p) => {
            let file = File::open(p).with_context(|| format!("cannot open {}", p.display()))?;
            read_trees(BufReader::new(file))?
        }
        None => read_trees(io::stdin().lock())?,
    };
    Ok(trees)
}

fn table_csv(rows: &[ClassificationRow]) -> String {
    let mut s = format!("{}\n", ClassificationRow::CSV_HEADER);
    for r in rows {
        let _ = writeln!(s, "{}", r.csv_line());
    }
    s
}

#[derive(Serialize)]
struct TreeCoeffs<'a> {
    tree: &'a Tree,
    coeffs: &'a CoeffVector,
}

fn coeffs(trees: Vec<Tree>, engine: Engine, format: Format) -> Result<Report> {
    let vectors: Vec<CoeffVector> = trees
        .par_iter()
        .map(|t| match engine {
            Engine::Matchings => laplacian_coefficients(t),
            Engine::Charpoly => coeffs_via_charpoly(t),
        })
        .collect();
    let body = match format {
        Format::Json => {
            let rows: Vec<_> = trees
                .iter()
                .zip(&vectors)
                .map(|(tree, coeffs)| TreeCoeffs { tree, coeffs })
                .collect();
            json(&rows)?
        }
        _ => lines(vectors.iter()),
    };
    Ok(Report::ok(body))
}

fn relation(class: &PairClass) -> &'static str {
    match class.tag {
        PairTag::Equal => "equal",
        PairTag::Dominates(Direction::FirstBelow) => "first_below",
        PairTag::Dominates(Direction::FirstAbove) => "first_above",
        PairTag::IncomparableType1 => "incomparable_type1",
        PairTag::IncomparableType2 => "incomparable_type2",
    }
}

#[derive(Serialize)]
struct Comparison<'a> {
    first: &'a CoeffVector,
    second: &'a CoeffVector,
    relation: &'static str,
    r: Option<usize>,
    s: Option<usize>,
}

fn compare(trees: Vec<Tree>, format: Format) -> Result<Report> {
    let [a, b, ..] = trees.as_slice() else {
        bail!("compare needs two trees, got {}", trees.len());
    };
    let (ca, cb) = (laplacian_coefficients(a), laplacian_coefficients(b));
    let class = classify(&ca, &cb)?;
    let c = Comparison {
        first: &ca,
        second: &cb,
        relation: relation(&class),
        r: class.r,
        s: class.s,
    };
    let opt = |x: Option<usize>| x.map_or_else(String::new, |v| v.to_string());
    let body = match format {
        Format::Json => json(&c)?,
        Format::Csv => format!("relation,r,s\n{},{},{}\n", c.relation, opt(c.r), opt(c.s)),
        Format::Text => {
            let mut s = format!(
                "first:    {}\nsecond:   {}\nrelation: {}\n",
                ca, cb, c.relation
            );
            if let (Some(r), Some(last)) = (c.r, c.s) {
                let _ = writeln!(s, "differ:   k = {r} .. {last}");
            }
            s
        }
    };
    Ok(Report::ok(body))
}

#[derive(Serialize)]
struct ChainSummary {
    n: usize,
    steps: usize,
    floor_product: usize,
    floor_square: usize,
    starts_at_star: bool,
    ends_at_path: bool,
    non_strict_steps: Vec<usize>,
}

#[derive(Serialize)]
struct ChainOutput<'a> {
    trees: &'a [Tree],
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<ChainSummary>,
}

fn chain(n: usize, verify: bool, format: Format) -> Result<Report> {
    let chain = build_chain(n)?;
    let summary = verify.then(|| {
        let check = chain.check();
        ChainSummary {
            n,
            steps: chain.len(),
            floor_product: chain_length(n),
            floor_square: chain_length_full_sum(n),
            starts_at_star: check.starts_at_star,
            ends_at_path: check.ends_at_path,
            non_strict_steps: check.non_strict_steps,
        }
    });
    let clean = summary
        .as_ref()
        .is_none_or(|s| s.starts_at_star && s.ends_at_path && s.non_strict_steps.is_empty());
    let body = match format {
        Format::Json => json(&ChainOutput {
            trees: &chain.trees,
            check: summary,
        })?,
        Format::Csv => {
            let mut s = String::from("index,tree\n");
            for (i, t) in chain.trees.iter().enumerate() {
                let _ = writeln!(s, "{i},{t}");
            }
            s
        }
        Format::Text => {
            let mut s = lines(chain.trees.iter());
            if let Some(c) = &summary {
                let yes = |b: bool| if b { "yes" } else { "no" };
                let _ = writeln!(s, "# n = {}, steps = {}", c.n, c.steps);
                let _ = writeln!(
                    s,
                    "# floor((n-1)/2)*floor((n-2)/2) = {}, floor((n-1)^2/4) = {}",
                    c.floor_product, c.floor_square
                );
                let _ = writeln!(
                    s,
                    "# starts at star: {}, ends at path: {}, strict steps: {}/{}",
                    yes(c.starts_at_star),
                    yes(c.ends_at_path),
                    c.steps - c.non_strict_steps.len(),
                    c.steps
                );
            }
            s
        }
    };
    Ok(Report { body, clean })
}

fn extremal_text(r: &ExtremalReport) -> String {
    let mut s = format!(
        "n: {}\nclass: {}\nmode: {:?}\nmembers: {}\n",
        r.n, r.class, r.mode, r.members
    );
    if r.is_empty() {
        s.push_str("class is empty\n");
        return s;
    }
    for e in &r.per_k {
        let _ = writeln!(s, "k={} value={} classes={}", e.k, e.value, e.count);
        for w in &e.winners {
            let _ = writeln!(s, "  {} {}", w.code, w.tree);
        }
        if e.count as usize > e.winners.len() {
            let _ = writeln!(s, "  ... {} more", e.count as usize - e.winners.len());
        }
    }
    let _ = writeln!(s, "simultaneous: {}", r.simultaneous.len());
    for w in &r.simultaneous {
        let _ = writeln!(s, "  {} {}", w.code, w.tree);
    }
    s
}

fn extremal_csv(r: &ExtremalReport) -> String {
    let mut s = String::from("k,value,classes,code,tree\n");
    for e in &r.per_k {
        for w in &e.winners {
            let _ = writeln!(s, "{},{},{},{},{}", e.k, e.value, e.count, w.code, w.tree);
        }
    }
    if let Some(extreme) = &r.extreme {
        for w in &r.simultaneous {
            let _ = writeln!(
                s,
                "all,{},{},{},{}",
                field(extreme),
                r.simultaneous.len(),
                w.code,
                w.tree
            );
        }
    }
    s
}

#[derive(Serialize)]
struct ClosedFormRow {
    n: u64,
    k: u64,
    t1: String,
    t2: String,
}

fn closed_form(n: u64, k: Option<u64>, format: Format) -> Result<Report> {
    if n < 8 {
        bail!("closed forms need n >= 8, got {n}");
    }
    let ks: Vec<u64> = match k {
        Some(k) if k > n => bail!("k must lie in 0..={n}, got {k}"),
        Some(k) => vec![k],
        None => (0..=n).collect(),
    };
    let rows = ks
        .into_iter()
        .map(|k| {
            Ok(ClosedFormRow {
                n,
                k,
                t1: closed_form_c(ClosedFormTree::T1, n, k)?.to_string(),
                t2: closed_form_c(ClosedFormTree::T2, n, k)?.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let body = match format {
        Format::Json => json(&rows)?,
        Format::Csv => {
            let mut s = String::from("n,k,t1,t2\n");
            for r in &rows {
                let _ = writeln!(s, "{},{},{},{}", r.n, r.k, r.t1, r.t2);
            }
            s
        }
        Format::Text => lines(
            rows.iter()
                .map(|r| format!("k={} T1={} T2={}", r.k, r.t1, r.t2)),
        ),
    };
    Ok(Report::ok(body))
}
