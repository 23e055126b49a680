//! Verification suites: the library's exhaustive invariants packaged as
//! named, bounded checks with one report line per case.
//!
//! `--max` caps the case sizes; every suite also enforces its own exhaustive
//! bound so runtimes stay predictable.

use std::collections::{BTreeMap, BTreeSet};

use clap::ValueEnum;
use num_bigint::BigUint;

use catalan_spitzer::action::{orbit_series, PermClass};
use catalan_spitzer::fstree::FsTree;
use catalan_spitzer::lattice::{
    enumerate_bridges, enumerate_catalan, fuss_catalan, steps_above_axis, up_steps_below_axis,
};
use catalan_spitzer::series::{
    block_deletion_expansion, continuant_matrix, continuant_ones, continuant_poly,
    continued_fraction_t2, flajolet_series, q_vs_continuant_check, random_positive_rationals,
    t_series, type_count,
};
use catalan_spitzer::spitzer::{path_type, reconstruct, short_csp, TypeVector};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    ChungFeller,
    Huq,
    Raney,
    Injectivity,
    FsCharacterization,
    TypeOracle,
    Continuant,
    OrbitGenfun,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::ChungFeller => "chung-feller",
            Suite::Huq => "huq",
            Suite::Raney => "raney",
            Suite::Injectivity => "injectivity",
            Suite::FsCharacterization => "fs-characterization",
            Suite::TypeOracle => "type-oracle",
            Suite::Continuant => "continuant",
            Suite::OrbitGenfun => "orbit-genfun",
            Suite::All => "all",
        }
    }
}

pub struct Outcome {
    pub lines: Vec<String>,
    pub failure: Option<String>,
}

impl Outcome {
    fn pass(lines: Vec<String>) -> Outcome {
        Outcome {
            lines,
            failure: None,
        }
    }
}

pub fn run_suite(suite: Suite, max: usize, threads: usize) -> Outcome {
    match suite {
        Suite::ChungFeller => chung_feller(max),
        Suite::Huq => huq(max),
        Suite::Raney => raney(max),
        Suite::Injectivity => injectivity(max),
        Suite::FsCharacterization => fs_characterization(max),
        Suite::TypeOracle => type_oracle(max),
        Suite::Continuant => continuant(max),
        Suite::OrbitGenfun => orbit_genfun(max, threads),
        Suite::All => {
            let mut lines = Vec::new();
            for sub in [
                Suite::ChungFeller,
                Suite::Huq,
                Suite::Raney,
                Suite::Injectivity,
                Suite::FsCharacterization,
                Suite::TypeOracle,
                Suite::Continuant,
                Suite::OrbitGenfun,
            ] {
                let outcome = run_suite(sub, max, threads);
                lines.extend(outcome.lines);
                if let Some(failure) = outcome.failure {
                    return Outcome {
                        lines,
                        failure: Some(failure),
                    };
                }
                lines.push(format!("suite {}: ok", sub.name()));
            }
            Outcome::pass(lines)
        }
    }
}

fn chung_feller(max: usize) -> Outcome {
    let mut lines = Vec::new();
    for n in 0..=max.min(8) {
        let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
        for bridge in enumerate_bridges(n, 2) {
            let above = match steps_above_axis(&bridge) {
                Ok(v) => v,
                Err(e) => return fail(lines, e.to_string()),
            };
            *histogram.entry(above).or_default() += 1;
        }
        let expected = fuss_catalan(n as u64, 2);
        for r in 0..=n {
            let got = histogram.get(&(2 * r)).copied().unwrap_or(0);
            if BigUint::from(got) != expected {
                return fail(
                    lines,
                    format!(
                        "chung-feller n={n}: class 2r={} has {got} bridges, expected {expected}",
                        2 * r
                    ),
                );
            }
        }
        if histogram.len() != n + 1 {
            return fail(lines, format!("chung-feller n={n}: unexpected odd class"));
        }
        lines.push(format!(
            "chung-feller n={n}: ok ({} classes x {expected} bridges)",
            n + 1
        ));
    }
    Outcome::pass(lines)
}

fn huq(max: usize) -> Outcome {
    let mut lines = Vec::new();
    for (k, cap) in [(2u32, 6usize), (3, 4), (4, 3)] {
        for n in 0..=max.min(cap) {
            let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
            for bridge in enumerate_bridges(n, k) {
                let below = match up_steps_below_axis(&bridge) {
                    Ok(v) => v,
                    Err(e) => return fail(lines, e.to_string()),
                };
                *histogram.entry(below).or_default() += 1;
            }
            let expected = fuss_catalan(n as u64, k);
            for r in 0..=(k as usize - 1) * n {
                let got = histogram.get(&r).copied().unwrap_or(0);
                if BigUint::from(got) != expected {
                    return fail(
                        lines,
                        format!(
                            "huq k={k} n={n}: class r={r} has {got} bridges, expected {expected}"
                        ),
                    );
                }
            }
            lines.push(format!(
                "huq k={k} n={n}: ok ({} classes x {expected} bridges)",
                (k as usize - 1) * n + 1
            ));
        }
    }
    Outcome::pass(lines)
}

fn raney_universe(max: usize) -> Vec<(u32, usize)> {
    let mut cases = Vec::new();
    for n in 0..=max.min(10) {
        cases.push((2u32, n));
    }
    for k in [3u32, 4] {
        for n in 0..=max.min(5) {
            cases.push((k, n));
        }
    }
    cases
}

fn raney(max: usize) -> Outcome {
    let mut lines = Vec::new();
    for (k, n) in raney_universe(max) {
        let count = enumerate_catalan(n, k).count();
        let expected = fuss_catalan(n as u64, k);
        if BigUint::from(count) != expected {
            return fail(
                lines,
                format!("raney k={k} n={n}: enumerated {count}, expected {expected}"),
            );
        }
        lines.push(format!("raney k={k} n={n}: ok ({count} paths)"));
    }
    Outcome::pass(lines)
}

fn injectivity(max: usize) -> Outcome {
    let mut lines = Vec::new();
    for (k, n) in raney_universe(max) {
        let mut seen = BTreeSet::new();
        for path in enumerate_catalan(n, k) {
            let short = match short_csp(&path) {
                Ok(s) => s,
                Err(e) => return fail(lines, e.to_string()),
            };
            match reconstruct(&short, k) {
                Ok(back) if back == path => {}
                Ok(back) => {
                    return fail(
                        lines,
                        format!("injectivity k={k} n={n}: {path} -> {short} -> {back}"),
                    )
                }
                Err(e) => {
                    return fail(
                        lines,
                        format!(
                            "injectivity k={k} n={n}: {path} -> {short} not reconstructible: {e}"
                        ),
                    )
                }
            }
            if !seen.insert(short.values().to_vec()) {
                return fail(
                    lines,
                    format!("injectivity k={k} n={n}: duplicate short permutation {short}"),
                );
            }
        }
        lines.push(format!(
            "injectivity k={k} n={n}: ok ({} round trips)",
            seen.len()
        ));
    }
    Outcome::pass(lines)
}

fn each_permutation(n: usize, mut f: impl FnMut(&[u32])) {
    let mut vals: Vec<u32> = (1..=n as u32).collect();
    loop {
        f(&vals);
        let Some(i) = (1..vals.len()).rev().find(|&i| vals[i - 1] < vals[i]) else {
            return;
        };
        let mut j = vals.len() - 1;
        while vals[j] <= vals[i - 1] {
            j -= 1;
        }
        vals.swap(i - 1, j);
        vals[i..].reverse();
    }
}

fn fs_characterization(max: usize) -> Outcome {
    let mut lines = Vec::new();
    let mut cases: Vec<(u32, usize)> = (0..=max.min(8)).map(|n| (2u32, n)).collect();
    for k in [3u32, 4] {
        for n in 0..=max.min(8) / (k as usize - 1) {
            cases.push((k, n));
        }
    }
    for (k, n) in cases {
        let m = (k as usize - 1) * n;
        let image: BTreeSet<Vec<u32>> = enumerate_catalan(n, k)
            .map(|p| short_csp(&p).expect("catalan path").values().to_vec())
            .collect();
        let mut characterized: BTreeSet<Vec<u32>> = BTreeSet::new();
        each_permutation(m, |w| {
            let word: Vec<i64> = w.iter().map(|&v| i64::from(v)).collect();
            let tree = FsTree::build(&word).expect("distinct letters");
            if tree.is_levelwise_numbered().expect("labels 1..n") && tree.k_condition(k) {
                characterized.insert(w.to_vec());
            }
        });
        if image != characterized {
            return fail(
                lines,
                format!(
                    "fs-characterization k={k} n={n}: image has {} permutations, characterization {}",
                    image.len(),
                    characterized.len()
                ),
            );
        }
        if BigUint::from(image.len()) != fuss_catalan(n as u64, k) {
            return fail(
                lines,
                format!("fs-characterization k={k} n={n}: cardinality is not Fuss-Catalan"),
            );
        }
        lines.push(format!(
            "fs-characterization k={k} n={n}: ok ({} permutations)",
            image.len()
        ));
    }
    Outcome::pass(lines)
}

fn type_oracle(max: usize) -> Outcome {
    let mut lines = Vec::new();
    let point_cap = max.min(9);
    for k in [2u32, 3] {
        for n in 0.. {
            let points = k as usize * n + 1;
            if points > point_cap {
                break;
            }
            let mut census: BTreeMap<TypeVector, u64> = BTreeMap::new();
            for path in enumerate_catalan(n, k) {
                let tv = path_type(&path.augment().expect("catalan path")).expect("augmented");
                *census.entry(tv).or_default() += 1;
            }
            let r = (k as usize - 1) * n + 1;
            let series = t_series(k, r, points as u32);
            for (tv, &count) in &census {
                if type_count(tv, k) != BigUint::from(count) {
                    return fail(
                        lines,
                        format!("type-oracle k={k} n={n}: recurrence disagrees on {tv}"),
                    );
                }
                let mut exps = vec![0u32; r];
                for (j, &c) in tv.counts().iter().enumerate() {
                    exps[j] = c as u32;
                }
                if series.coeff(&exps) != BigUint::from(count).into() {
                    return fail(
                        lines,
                        format!("type-oracle k={k} n={n}: series coefficient disagrees on {tv}"),
                    );
                }
            }
            lines.push(format!(
                "type-oracle k={k} n={n}: ok ({} types, {} paths)",
                census.len(),
                census.values().sum::<u64>()
            ));
        }
    }
    Outcome::pass(lines)
}

fn continuant(max: usize) -> Outcome {
    let mut lines = Vec::new();
    for k in 2..=4u32 {
        for n in 0..=max.min(10) {
            let recurrence = continuant_poly(k, n);
            if continuant_matrix(k, n)[0] != recurrence {
                return fail(
                    lines,
                    format!("continuant k={k} n={n}: matrix form differs"),
                );
            }
            if block_deletion_expansion(k, n) != recurrence {
                return fail(
                    lines,
                    format!("continuant k={k} n={n}: block-deletion form differs"),
                );
            }
        }
        lines.push(format!("continuant k={k}: ok (three symbolic forms agree)"));
    }
    let fib: Vec<String> = (0..=6).map(|n| continuant_ones(2, n).to_string()).collect();
    if fib.join(",") != "1,1,2,3,5,8,13" {
        return fail(lines, format!("continuant ones k=2: got {}", fib.join(",")));
    }
    let narayana: Vec<String> = (0..=8).map(|n| continuant_ones(3, n).to_string()).collect();
    if narayana.join(",") != "1,1,1,2,3,4,6,9,13" {
        return fail(
            lines,
            format!("continuant ones k=3: got {}", narayana.join(",")),
        );
    }
    lines.push("continuant ones: ok (1,1,2,3,5,8,13 and 1,1,1,2,3,4,6,9,13)".into());
    for k in [2u32, 3, 4] {
        for r in 1..=max.min(8) {
            let samples = random_positive_rationals(0x5eed ^ u64::from(k) ^ (r as u64) << 8, 20, r);
            if !q_vs_continuant_check(k, r, &samples) {
                return fail(
                    lines,
                    format!("continuant k={k} r={r}: root-of-unity identity off by more than 1e-9"),
                );
            }
        }
        lines.push(format!(
            "continuant q-identity k={k}: ok (r<=8, 20 points each)"
        ));
    }
    for r in 1..=5usize {
        if continued_fraction_t2(r, 8) != t_series(2, r, 8) {
            return fail(lines, format!("continued fraction r={r} differs from T_2"));
        }
    }
    for d in 1..=8u32 {
        if flajolet_series(d) != t_series(2, d as usize, d) {
            return fail(lines, format!("flajolet depth {d} differs from T_2"));
        }
    }
    lines.push("continuant fractions: ok (continued-fraction and nested forms match T_2)".into());
    Outcome::pass(lines)
}

fn orbit_genfun(max: usize, threads: usize) -> Outcome {
    let mut lines = Vec::new();
    let short_cap = max.min(9);
    let short = match orbit_series(&PermClass::short_csp(), short_cap, threads) {
        Ok(s) => s,
        Err(e) => return fail(lines, e.to_string()),
    };
    for n in 1..=short_cap {
        let expected = fuss_catalan(n as u64 - 1, 2);
        if short.o.coeff(n).to_string() != expected.to_string() {
            return fail(
                lines,
                format!("orbit-genfun short-csp n={n}: O_n != C_(n-1)"),
            );
        }
    }
    lines.push(format!(
        "orbit-genfun short-csp: ok (O_n = C_(n-1) for n<={short_cap}; closed forms asserted)"
    ));
    lines.push("O(x,y) short-csp:".into());
    for n in 1..=short_cap {
        lines.push(format!("  x^{n}: {}", short.oxy.coeff(n)));
    }
    let all_cap = max.min(8);
    let all = match orbit_series(&PermClass::all(), all_cap, threads) {
        Ok(s) => s,
        Err(e) => return fail(lines, e.to_string()),
    };
    lines.push(format!(
        "orbit-genfun all: ok (closed forms asserted for n<={all_cap})"
    ));
    lines.push("O(x,y) all:".into());
    for n in 1..=all_cap {
        lines.push(format!("  x^{n}: {}", all.oxy.coeff(n)));
    }
    Outcome::pass(lines)
}

fn fail(lines: Vec<String>, message: String) -> Outcome {
    Outcome {
        lines,
        failure: Some(message),
    }
}
