//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Runs without the libtest harness so the lines always print.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use codegree::analysis::{
    check_lemma22, thm12_certificate, thm13_predicates, thm23_scan, verify_counterexample,
    Thm12Outcome, Verdict,
};
use codegree::chartab::char_table;
use codegree::cli::build;
use codegree::permgroup::{derived_subgroup, Group, DEFAULT_ORDER_CAP};
use codegree::pseudoalg::{
    abelian_pseudo, prime_power_spectrum, pseudo_algebra, pseudo_algebra_of, pseudo_equal,
    reconstruct_abelian, AbelianType,
};
use codegree::Error;

use common::*;

type Outcome = Result<String, String>;

const WITNESS_PSEUDO: &str = "(1,1) (2,7) (4,8) (8,16)";

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn group(spec: &str) -> Result<Group, String> {
    build(spec, DEFAULT_ORDER_CAP).map_err(|e| format!("{spec}: {e}"))
}

fn bin(args: &[&str]) -> Result<(i32, String, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_codegree"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    Ok((
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        elapsed,
    ))
}

fn witness_specs() -> Vec<String> {
    let path = data_path("c128.cat");
    [
        "smallgroup-128-755",
        "smallgroup-128-756",
        "smallgroup-128-773",
    ]
    .iter()
    .map(|n| format!("file:{path}#{n}"))
    .collect()
}

fn abelian_pseudo_line() -> Outcome {
    let (code, out, t) = bin(&["pseudo", "abelian:2:[3,1,1]"])?;
    ensure(code == 0, format!("exit {code}"))?;
    ensure(out == format!("{WITNESS_PSEUDO}\n"), format!("got {out:?}"))?;
    ensure(t < Duration::from_secs(1), format!("took {t:?}"))?;
    Ok(format!("`{}` in {t:.2?}", out.trim_end()))
}

fn counterexample_witnesses() -> Outcome {
    let target: AbelianType = "2:[3,1,1]".parse().unwrap();
    let mut notes = Vec::new();
    for spec in witness_specs() {
        let (code, out, t) = bin(&["check", "counterexample", &spec, "--against", "2:[3,1,1]"])?;
        ensure(
            code == 0 && out.contains(" PASS — "),
            format!("{spec}: {out}"),
        )?;
        ensure(t < Duration::from_secs(30), format!("{spec} took {t:?}"))?;
        let g = group(&spec)?;
        let table = char_table(&g).map_err(|e| e.to_string())?;
        let pseudo = pseudo_algebra_of(&table);
        ensure(
            pseudo.to_string() == WITNESS_PSEUDO,
            format!("{}: C(G) = {pseudo}", g.name()),
        )?;
        ensure(g.order() == 128 && target.order() == 32, "orders")?;
        ensure(
            table.degree_set() == [1, 2, 4],
            format!("cd = {:?}", table.degree_set()),
        )?;
        let r = verify_counterexample(&g, &target).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::Pass, r.to_string())?;
        notes.push(format!("{} {t:.2?}", g.name()));
    }
    Ok(format!(
        "|G| = 128 ≠ 32 = |A|, cd(G) = {{1,2,4}}, C(G) = C(A): {}",
        notes.join(", ")
    ))
}

fn lemma22_counts() -> Outcome {
    let target: AbelianType = "2:[3,1,1]".parse().unwrap();
    let feasible = codegree::analysis::lemma22_feasible_orders(2, 5, 32);
    ensure(feasible == [128], format!("feasible orders {feasible:?}"))?;
    let mut notes = Vec::new();
    for spec in witness_specs() {
        let g = group(&spec)?;
        let table = char_table(&g).map_err(|e| e.to_string())?;
        let index = derived_subgroup(&g).index() as u64;
        let r = index.trailing_zeros();
        ensure(index == 1 << r, "|G:G′| not a power of 2")?;
        let k1 = 32 - (1u64 << r) - (1u64 << (r - 2));
        let k2 = 1u64 << (r - 2);
        let seen = (table.degree_count(2) as u64, table.degree_count(4) as u64);
        ensure(
            seen == (k1, k2),
            format!("{}: counts {seen:?} vs ({k1}, {k2})", g.name()),
        )?;
        let out = check_lemma22(&g, &target).map_err(|e| e.to_string())?;
        ensure(out.report.verdict == Verdict::Pass, out.report.to_string())?;
        notes.push(format!("{} r={r} k1={k1} k2={k2}", g.name()));
    }
    Ok(format!("feasible orders [128]; {}", notes.join(", ")))
}

fn constructor_specs() -> Vec<String> {
    let mut specs: Vec<String> = (1..=64).map(|n| format!("cyclic:{n}")).collect();
    specs.extend((3..=40).map(|n| format!("dihedral:{n}")));
    for s in [
        "cyclic:128",
        "cyclic:243",
        "cyclic:256",
        "dihedral:64",
        "dihedral:128",
        "dihedral:256",
        "ut3:2",
        "ut3:3",
        "ut3:5",
        "ut3:7",
        "abelian:2:[1,1,1,1,1,1,1,1,1]",
        "abelian:[8,8,8]",
        "abelian:[4,6,10]",
        "dihedral:4*dihedral:4",
        "dihedral:4*ut3:2*cyclic:8",
        "ut3:3*cyclic:9",
        "ut3:3*ut3:3",
        "dihedral:3*dihedral:3*dihedral:3",
        "dihedral:5*cyclic:50",
        "dihedral:6*abelian:3:[2,1]",
    ] {
        specs.push(s.to_string());
    }
    specs
}

fn table_invariants() -> Outcome {
    let mut groups: Vec<Group> = Vec::new();
    for file in CATALOGS {
        groups.extend(catalog(file).groups);
    }
    for s in constructor_specs() {
        groups.push(group(&s)?);
    }
    let n = groups.len();
    let failures: Vec<String> = groups
        .par_iter()
        .filter(|g| g.order() <= 512)
        .filter_map(|g| {
            let check = || -> Result<(), String> {
                let t = char_table(g).map_err(|e| e.to_string())?;
                let sq: u64 = t.irreducibles().iter().map(|c| c.degree * c.degree).sum();
                ensure(sq == g.order() as u64, "Σχ(1)² ≠ |G|")?;
                t.check_row_orthogonality().map_err(|e| e.to_string())?;
                t.check_column_orthogonality().map_err(|e| e.to_string())?;
                ensure(t.len() == g.class_count(), "#irreducibles ≠ k(G)")?;
                ensure(
                    t.degree_count(1) == derived_subgroup(g).index(),
                    "#linear ≠ |G:G′|",
                )?;
                Ok(())
            };
            check().err().map(|e| format!("{}: {e}", g.name()))
        })
        .collect();
    ensure(failures.is_empty(), failures.join("; "))?;
    Ok(format!(
        "{n} groups: Σχ(1)², both orthogonality relations, k(G), |G:G′|"
    ))
}

fn abelian_oracle() -> Outcome {
    let types: Vec<AbelianType> = (1..=256).flat_map(abelian_types_of_order).collect();
    let failures: Vec<String> = types
        .par_iter()
        .filter_map(|t| {
            let check = || -> Result<(), String> {
                let g = abelian_spec(t)
                    .build(DEFAULT_ORDER_CAP)
                    .map_err(|e| e.to_string())?;
                let table = char_table(&g).map_err(|e| e.to_string())?;
                let mut dixon = Vec::new();
                for chi in table.irreducibles() {
                    let mut row = Vec::new();
                    for v in &chi.values {
                        ensure(
                            v.terms().len() == 1 && v.terms()[0].1 == 1,
                            "non-monomial value",
                        )?;
                        row.push(v.terms()[0].0 as u64);
                    }
                    dixon.push(row);
                }
                let mut direct = direct_linear_rows(&g, &t.cyclic_factors(), table.exponent());
                dixon.sort();
                direct.sort();
                ensure(dixon == direct, "table differs from direct construction")?;
                ensure(
                    pseudo_algebra_of(&table) == abelian_pseudo(t),
                    "C(G) ≠ formula",
                )
            };
            check().err().map(|e| format!("{t}: {e}"))
        })
        .collect();
    ensure(failures.is_empty(), failures.join("; "))?;
    Ok(format!("{} abelian groups of order ≤ 256", types.len()))
}

fn reconstruction_round_trip() -> Outcome {
    let mut count = 0;
    for p in [2u64, 3, 5] {
        let mut per_prime = 0;
        for w in 0..=6 {
            for part in partitions(w) {
                let t = if w == 0 {
                    AbelianType::trivial()
                } else {
                    AbelianType::p_group(p, part).unwrap()
                };
                let back =
                    reconstruct_abelian(&abelian_pseudo(&t)).map_err(|e| format!("{t}: {e}"))?;
                ensure(back == t, format!("{t} came back as {back}"))?;
                per_prime += 1;
            }
        }
        ensure(per_prime == 30, format!("p = {p}: {per_prime} types"))?;
        count += per_prime;
    }
    Ok(format!("{count} types (30 per prime, weights 0..6)"))
}

fn thm23_desk_scan() -> Outcome {
    let cat = catalog("two_groups_le64.cat");
    let mut notes = Vec::new();
    for n in 2..=5 {
        let scan = thm23_scan(&cat.groups, 2, n).map_err(|e| e.to_string())?;
        ensure(scan.violations.is_empty(), scan.report.to_string())?;
        notes.push(format!(
            "n={n}: {} matched, {} metacyclic",
            scan.matched.len(),
            scan.metacyclic_matched.len()
        ));
    }
    Ok(format!(
        "{} groups, 0 violations; {}",
        cat.len(),
        notes.join(", ")
    ))
}

fn same_order_collision() -> Outcome {
    let d8 = group("dihedral:4")?;
    let q8 = group(&format!("file:{}#q8", data_path("named.cat")))?;
    let (pd, pq) = (
        pseudo_algebra(&d8).map_err(|e| e.to_string())?,
        pseudo_algebra(&q8).map_err(|e| e.to_string())?,
    );
    ensure(pseudo_equal(&pd, &pq), format!("{pd} vs {pq}"))?;
    let (sd, sq) = (element_order_counts(&d8), element_order_counts(&q8));
    ensure(sd != sq, "element-order statistics agree")?;
    Ok(format!("C = {pd} for both; order counts {sd:?} vs {sq:?}"))
}

fn qian_instances() -> Outcome {
    let mut checked = 0;
    for file in CATALOGS {
        for g in &catalog(file).groups {
            let p = pseudo_algebra(g).map_err(|e| e.to_string())?;
            if let Some(q) = prime_power_spectrum(&p) {
                ensure(
                    g.prime_power().map(|x| x.0) == Some(q),
                    format!("{}: spectrum {q}, |G| = {}", g.name(), g.order()),
                )?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} catalog groups, 0 violations"))
}

fn hypothesis_guards() -> Outcome {
    let ut = group("ut3:3")?;
    ensure(
        matches!(thm12_certificate(&ut, 3, 3), Err(Error::HypothesisUnmet(_))),
        "ut3:3 should not meet the hypothesis",
    )?;
    let pr = thm13_predicates(&ut).map_err(|e| e.to_string())?;
    ensure(
        pr.metacyclic_maximal_subgroup && pr.derived_two_generated && pr.derived_abelian,
        format!("{pr:?}"),
    )?;
    let (code, out, _) = bin(&["check", "thm12", "ut3:3", "--p", "3", "--n", "3"])?;
    ensure(code == 0 && out.contains(" N/A — "), out)?;
    let a = group("abelian:3:[3,1]")?;
    let cert = thm12_certificate(&a, 3, 3).map_err(|e| e.to_string())?;
    ensure(
        cert.outcome == Thm12Outcome::IsomorphicToA,
        format!("{cert:?}"),
    )?;
    Ok("thm12 N/A on ut3:3; ut3:3 predicates all true; C27×C3 isomorphic-to-A".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 pseudo-line", abelian_pseudo_line),
        ("2 counterexample", counterexample_witnesses),
        ("3 degree-counts", lemma22_counts),
        ("4 table-invariants", table_invariants),
        ("5 abelian-oracle", abelian_oracle),
        ("6 reconstruction", reconstruction_round_trip),
        ("7 metacyclic-scan", thm23_desk_scan),
        ("8 same-order-collision", same_order_collision),
        ("9 prime-power-spectrum", qian_instances),
        ("G hypothesis-guards", hypothesis_guards),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("ACCEPT {name} PASS — {detail} [{t:.2?}]"),
            Err(detail) => {
                failed += 1;
                println!("ACCEPT {name} FAIL — {detail} [{t:.2?}]");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
