//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::Instant;

use braidforge::counting::{self, SClosedForm};
use braidforge::garside;
use braidforge::graph::{self, Planarity};
use braidforge::simple;
use braidforge::verify;
use braidforge::word;
use braidforge::Canonicalizer;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T: std::fmt::Display>(err: T) -> String {
    err.to_string()
}

fn positive_three_braids() -> Result<String, String> {
    let mut canon = Canonicalizer::default();
    let (all, _) = verify::brute_force_3_braids(8, &mut canon).map_err(e)?;
    for (k, &count) in all.iter().enumerate() {
        ensure(
            count == counting::fib(k + 3) - 1,
            format!("k = {k}: {count}"),
        )?;
    }
    ensure(all[..6] == [1, 2, 4, 7, 12, 20], "series prefix")?;
    Ok(format!("{all:?}"))
}

fn delta_free_three_braids() -> Result<String, String> {
    let mut canon = Canonicalizer::default();
    let (_, free) = verify::brute_force_3_braids(8, &mut canon).map_err(e)?;
    let series: Vec<u128> = counting::delta_free_3_series(9)
        .iter()
        .map(|c| c.try_into().expect("small"))
        .collect();
    ensure(free == series, format!("{free:?} vs {series:?}"))?;
    ensure(free[..6] == [1, 2, 4, 6, 10, 16], "series prefix")?;
    let printed_wrong = (1..=8).any(|k| counting::delta_free_3_printed(k) != Some(free[k]));
    let corrected_right = (1..=8).all(|k| counting::delta_free_3_closed(k) == free[k]);
    ensure(printed_wrong && corrected_right, "erratum not confirmed")?;
    Ok(format!("{free:?}; printed index erratum confirmed"))
}

fn divisors() -> Result<String, String> {
    let mut canon = Canonicalizer::default();
    for n in 2..=5 {
        let oracle = garside::divisors_oracle(n, &mut canon).map_err(e)?;
        ensure(
            oracle == garside::divisor_set(n).map_err(e)?,
            format!("oracle n = {n}"),
        )?;
    }
    let d = counting::d_table(10);
    for n in 2..=10 {
        let forms = garside::enumerate_divisors(n).map_err(e)?;
        let mut profile = vec![0u64; n * (n - 1) / 2 + 1];
        for f in &forms {
            profile[f.len()] += 1;
        }
        let poly: Vec<u64> = counting::divisor_poly(n)
            .map_err(e)?
            .coefficients()
            .iter()
            .map(|c| c.try_into().expect("small"))
            .collect();
        ensure(profile == poly, format!("profile n = {n}"))?;
        ensure(
            forms.len() as u64 == (1..=n as u64).product::<u64>(),
            format!("n! at n = {n}"),
        )?;
        ensure(
            counting::is_symmetric(&d[n]) && counting::is_unimodal(&d[n]),
            format!("row shape n = {n}"),
        )?;
    }
    Ok("oracle n = 2..5, profiles and n! for n <= 10".into())
}

fn square_free() -> Result<String, String> {
    let mut canon = Canonicalizer::default();
    let mut checked = 0;
    for (n, len) in [(3, 3), (4, 6)] {
        let divs = garside::divisor_set(n).map_err(e)?;
        for w in word::enumerate_words_up_to(n, len).map_err(e)? {
            let sf = garside::is_square_free(&w, &mut canon).map_err(e)?;
            let dv = divs.contains(&canon.canonical_form(&w).map_err(e)?);
            ensure(sf == dv, format!("disagreement at {w}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} words"))
}

fn simple_counts() -> Result<String, String> {
    for n in 1..=12 {
        let size = simple::enumerate_simple(n).map_err(e)?.len() as u128;
        ensure(size == counting::fib(2 * n - 1), format!("n = {n}: {size}"))?;
    }
    let s = counting::s_table(10);
    let printed: [&[u128]; 5] = [&[1], &[1, 1], &[1, 2, 2], &[1, 3, 5, 4], &[1, 4, 9, 12, 8]];
    for n in 1..=5 {
        ensure(s[n] == printed[n - 1], format!("triangle row {n}"))?;
    }
    for n in 2..=10 {
        ensure(
            s[n][n - 1] == 1 << (n - 2),
            format!("last coefficient n = {n}"),
        )?;
    }
    ensure(
        s == counting::s_table_short_recurrence(10),
        "recurrences disagree",
    )?;
    let matches = |form: SClosedForm| {
        (form.min_strands()..=10)
            .all(|n| form.evaluate(n).ok() == Some(s[n][form.column(n)] as i128))
    };
    ensure(
        !matches(SClosedForm::Degree2Printed),
        "printed s_(n,2) unexpectedly matches",
    )?;
    ensure(matches(SClosedForm::Degree2), "corrected s_(n,2)")?;
    ensure(
        matches(SClosedForm::Degree3) && matches(SClosedForm::Degree4),
        "i = 3, 4 forms",
    )?;
    Ok("F_(2n-1) for n <= 12; triangle verbatim; s_(n,2) erratum confirmed".into())
}

fn polynomiality() -> Result<String, String> {
    for i in 0..=4 {
        let profile = counting::s_polynomiality(i, counting::stable_range(i)).map_err(e)?;
        ensure(profile.is_monic_degree(), format!("i = {i}"))?;
    }
    Ok("i = 0..4".into())
}

fn conjugacy() -> Result<String, String> {
    for n in 1..=8 {
        let mut by_len: BTreeMap<usize, BTreeSet<Vec<usize>>> = BTreeMap::new();
        for b in simple::enumerate_simple(n).map_err(e)? {
            by_len
                .entry(b.len())
                .or_default()
                .insert(simple::conjugacy_representative(&b).parts().to_vec());
        }
        let grouped: Vec<u128> = (0..n)
            .map(|i| by_len.get(&i).map_or(0, |s| s.len() as u128))
            .collect();
        ensure(
            grouped == counting::c_table(n),
            format!("n = {n}: {grouped:?}"),
        )?;
    }
    let mut canon = Canonicalizer::default();
    let mut misses = Vec::new();
    for n in 1..=4 {
        for b in simple::enumerate_simple(n).map_err(e)? {
            if simple::conjugacy_witness(&b, verify::WITNESS_MAX_LEN, &mut canon)
                .map_err(e)?
                .is_none()
            {
                misses.push(b.to_string());
            }
        }
    }
    if misses.is_empty() {
        Ok("c_(n,i) for n <= 8; all witnesses found".into())
    } else {
        Ok(format!(
            "c_(n,i) for n <= 8; warning: no witness for {misses:?}"
        ))
    }
}

fn graph_structure() -> Result<String, String> {
    let mut canon = Canonicalizer::default();
    let mut sizes = Vec::new();
    for n in 2..=8 {
        let g = graph::build_graph_with(n, &mut canon).map_err(e)?;
        ensure(
            g.vertex_count() as u128 == counting::fib(2 * n - 1),
            format!("vertices n = {n}"),
        )?;
        ensure(
            g.edge_count() as u128 == graph::edge_count_formula(n),
            format!("edges n = {n}"),
        )?;
        ensure(graph::is_connected(&g), format!("connected n = {n}"))?;
        ensure(
            g.level_sizes().len() == n && graph::is_n_partite_by_levels(&g),
            format!("levels n = {n}"),
        )?;
        ensure(
            (0..g.vertex_count()).all(|v| g.up_degree(v) == n - 1 - g.level(v)),
            format!("up-degree n = {n}"),
        )?;
        sizes.push(g.vertex_count());
    }
    Ok(format!("vertex counts {sizes:?}"))
}

fn planarity() -> Result<String, String> {
    let mut canon = Canonicalizer::default();
    let mut kinds = Vec::new();
    for n in 2..=8 {
        let g = graph::build_graph_with(n, &mut canon).map_err(e)?;
        let p = graph::is_planar(&g);
        ensure(
            p.certificate_holds(g.undirected()),
            format!("certificate n = {n}"),
        )?;
        match p {
            Planarity::Planar(emb) => {
                ensure(n <= 6, format!("n = {n} reported planar"))?;
                ensure(
                    emb.is_valid_planar_embedding(g.undirected()),
                    format!("Euler n = {n}"),
                )?;
            }
            Planarity::NonPlanar(w) => {
                ensure(n >= 7, format!("n = {n} reported nonplanar"))?;
                kinds.push(format!("n={n}:{}", w.kind));
            }
        }
    }
    let g7 = graph::build_graph_with(7, &mut canon).map_err(e)?;
    ensure(graph::verify_drawn_k33(&g7).map_err(e)?.holds, "drawn K3,3")?;
    Ok(format!(
        "planar for n <= 6; {}; drawn K3,3 present",
        kinds.join(", ")
    ))
}

fn determinism() -> Result<String, String> {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_braidforge"))
            .args(["verify", "--scope", "all"])
            .output()
            .map_err(e)
    };
    let a = run()?;
    let b = run()?;
    ensure(
        a.status.success() && b.status.success(),
        "verify exited nonzero",
    )?;
    ensure(a.stdout == b.stdout, "reports differ")?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

const CRITERIA: &[(&str, Check)] = &[
    (
        "positive 3-braids: b_k = F_(k+3) - 1",
        positive_three_braids,
    ),
    (
        "delta-free 3-braids series and index erratum",
        delta_free_three_braids,
    ),
    ("divisors: oracle, profile, shape, n!", divisors),
    ("square-free iff divisor", square_free),
    (
        "simple braids: counts, triangle, recurrences, closed forms",
        simple_counts,
    ),
    ("polynomiality of s_(n,i)", polynomiality),
    ("conjugacy classes and witnesses", conjugacy),
    ("simple graph structure", graph_structure),
    ("planarity dichotomy and drawn K3,3", planarity),
    ("determinism of verify --scope all", determinism),
];

fn main() {
    let mut failed = 0;
    for (i, (name, check)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
