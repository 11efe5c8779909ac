//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 on usage,
//! parse or computation errors.

mod catalog;
mod spec;

pub use catalog::{load_catalog, parse_catalog, Catalog, CatalogEntry};
pub use spec::{build, GroupSpec};

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::analysis::{
    check_lemma21, check_lemma22, counting_identity_of, thm12_certificate, thm23_scan,
    verify_counterexample, Report, Verdict,
};
use crate::chartab::char_table;
use crate::error::{Error, Result};
use crate::permgroup::{Group, DEFAULT_ORDER_CAP};
use crate::pseudoalg::{
    abelian_pseudo, pseudo_algebra, pseudo_equal, reconstruct_abelian, AbelianType, PseudoAlgebra,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Parser, Debug)]
#[command(
    name = "codegree",
    version,
    about = "Character tables, codegrees and pseudo-algebras of finite permutation groups"
)]
pub struct Cli {
    /// Largest group order that will be built.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    pub cap: usize,
    /// `text` for people, `machine` for JSON.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Catalog file for `search`, `check thm23` and `check catalog`.
    #[arg(long, global = true)]
    pub catalog: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the irreducible character table.
    Table { group: String },
    /// Print the pseudo-algebra C(G) as (codegree,multiplicity) pairs.
    Pseudo { group: String },
    /// Compare the pseudo-algebras of two groups.
    Compare { first: String, second: String },
    /// Run a structural check.
    #[command(subcommand)]
    Check(CheckCommand),
    /// List catalog groups whose pseudo-algebra equals C(SPEC).
    Search {
        /// Group spec, or an abelian type such as `2:[3,1,1]`.
        #[arg(long)]
        against: String,
    },
    /// Recover the abelian group type from a pseudo-algebra, e.g. "(1,1) (2,3)".
    Reconstruct {
        #[arg(required = true, num_args = 1..)]
        pairs: Vec<String>,
    },
}

#[derive(Args, Debug)]
pub struct AgainstArgs {
    pub group: String,
    /// Abelian type such as `2:[3,1,1]`.
    #[arg(long)]
    pub against: String,
}

#[derive(Args, Debug)]
pub struct PnArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub n: u32,
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// Nonabelian G with C(G) = C(A): |cd(G)| ≥ 3 and no two-degree solution.
    Lemma21(AgainstArgs),
    /// Nonabelian G with C(G) = C(A) and cd(G) = {1,p,p²}: order and degree counts.
    Lemma22(AgainstArgs),
    /// C(G) = C(A) while |G| ≠ |A|.
    Counterexample(AgainstArgs),
    /// Structure of G with C(G) = C(C_{p^n} × C_p).
    Thm12 {
        group: String,
        #[command(flatten)]
        pn: PnArgs,
    },
    /// Scan the catalog for metacyclic G with C(G) = C(C_{p^n} × C_p).
    Thm23 {
        #[command(flatten)]
        pn: PnArgs,
    },
    /// |G| = Σ χ(1)² and the number of linear characters is |G:G′|.
    Counting { group: String },
    /// Recompute every `expect pseudo` line of the catalog.
    Catalog,
}

struct Output {
    lines: Vec<String>,
    json: serde_json::Value,
    failed: bool,
}

impl Output {
    fn reports(reports: Vec<Report>) -> Output {
        Output {
            lines: reports.iter().map(ToString::to_string).collect(),
            failed: reports.iter().any(|r| r.verdict == Verdict::Fail),
            json: serde_json::to_value(&reports).expect("reports serialise"),
        }
    }

    fn plain(lines: Vec<String>, json: impl Serialize) -> Output {
        Output {
            lines,
            json: serde_json::to_value(json).expect("output serialises"),
            failed: false,
        }
    }
}

/// An abelian type, written either as `2:[3,1,1]` or as any abelian group spec.
fn parse_type(s: &str) -> Result<AbelianType> {
    if let Ok(t) = s.parse::<AbelianType>() {
        return Ok(t);
    }
    s.parse::<GroupSpec>()?
        .abelian_type()?
        .ok_or_else(|| Error::Parse(format!("{s:?} is not an abelian type")))
}

/// `C(A)` for a target given as an abelian type or as any group spec.
fn target_pseudo(s: &str, cap: usize) -> Result<(String, PseudoAlgebra)> {
    if let Ok(t) = parse_type(s) {
        return Ok((t.to_string(), abelian_pseudo(&t)));
    }
    let g = build(s, cap)?;
    let p = pseudo_algebra(&g)?;
    Ok((g.name().to_string(), p))
}

fn require_catalog(cli: &Cli) -> Result<Catalog> {
    let path = cli
        .catalog
        .as_deref()
        .ok_or_else(|| Error::Parse("this command needs --catalog FILE".into()))?;
    load_catalog(path, cli.cap)
}

fn table_output(group: &Group) -> Result<Output> {
    let table = char_table(group)?;
    let classes = table.classes();
    let e = table.exponent();
    let orders: Vec<u64> = classes
        .reps()
        .iter()
        .map(|&r| group.element_order(r))
        .collect();
    let rows: Vec<Vec<String>> = table
        .irreducibles()
        .iter()
        .map(|chi| chi.values.iter().map(ToString::to_string).collect())
        .collect();
    let codegrees: Vec<u64> = table
        .irreducibles()
        .iter()
        .map(|chi| crate::pseudoalg::codegree(&table, chi))
        .collect();
    let kernels: Vec<u64> = table
        .irreducibles()
        .iter()
        .map(|chi| table.kernel_order(chi))
        .collect();

    let lead = |a: &str, b: String, c: String, d: String| vec![a.to_string(), b, c, d];
    let mut grid: Vec<Vec<String>> = vec![
        lead("class", "deg".into(), "|ker|".into(), "cod".into()),
        lead("size", String::new(), String::new(), String::new()),
        lead("order", String::new(), String::new(), String::new()),
    ];
    for c in 0..classes.len() {
        grid[0].push((c + 1).to_string());
        grid[1].push(classes.sizes()[c].to_string());
        grid[2].push(orders[c].to_string());
    }
    for (i, (chi, row)) in table.irreducibles().iter().zip(&rows).enumerate() {
        let mut line = lead(
            &format!("X.{}", i + 1),
            chi.degree.to_string(),
            kernels[i].to_string(),
            codegrees[i].to_string(),
        );
        line.extend(row.iter().cloned());
        grid.push(line);
    }
    let widths: Vec<usize> = (0..grid[0].len())
        .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut lines = vec![format!(
        "group {}  order {}  classes {}  z = exp(2πi/{e})",
        group.name(),
        group.order(),
        classes.len()
    )];
    for row in &grid {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(c, (cell, &w))| {
                if c == 0 {
                    format!("{cell:<w$}")
                } else {
                    format!("{cell:>w$}")
                }
            })
            .collect();
        lines.push(cells.join("  ").trim_end().to_string());
    }
    let json = json!({
        "group": group.name(),
        "order": group.order(),
        "exponent": e,
        "classes": classes.sizes().iter().zip(&orders)
            .map(|(s, o)| json!({"size": s, "element_order": o}))
            .collect::<Vec<_>>(),
        "characters": table.irreducibles().iter().zip(&rows).zip(codegrees.iter().zip(&kernels))
            .map(|((chi, row), (cod, ker))| json!({
                "degree": chi.degree, "kernel_order": ker, "codegree": cod, "values": row,
            }))
            .collect::<Vec<_>>(),
    });
    Ok(Output {
        lines,
        json,
        failed: false,
    })
}

fn pseudo_json(name: &str, order: usize, p: &PseudoAlgebra) -> serde_json::Value {
    json!({"group": name, "order": order, "pseudo": p.pairs()})
}

fn execute(cli: &Cli) -> Result<Output> {
    let cap = cli.cap;
    match &cli.command {
        Command::Table { group } => table_output(&build(group, cap)?),
        Command::Pseudo { group } => {
            let g = build(group, cap)?;
            let p = pseudo_algebra(&g)?;
            Ok(Output::plain(
                vec![p.to_string()],
                pseudo_json(g.name(), g.order(), &p),
            ))
        }
        Command::Compare { first, second } => {
            let (a, b) = (build(first, cap)?, build(second, cap)?);
            let (pa, pb) = (pseudo_algebra(&a)?, pseudo_algebra(&b)?);
            let equal = pseudo_equal(&pa, &pb);
            let verdict = if equal { "EQUAL" } else { "DIFFERENT" };
            Ok(Output::plain(
                vec![
                    format!("{} |G| = {}: {pa}", a.name(), a.order()),
                    format!("{} |G| = {}: {pb}", b.name(), b.order()),
                    verdict.to_string(),
                ],
                json!({
                    "first": pseudo_json(a.name(), a.order(), &pa),
                    "second": pseudo_json(b.name(), b.order(), &pb),
                    "equal": equal,
                }),
            ))
        }
        Command::Reconstruct { pairs } => {
            let p: PseudoAlgebra = pairs.join(" ").parse()?;
            match reconstruct_abelian(&p) {
                Ok(t) => Ok(Output::plain(
                    vec![t.to_string()],
                    json!({"pseudo": p.pairs(), "type": t.to_string(), "order": t.order()}),
                )),
                Err(Error::NotAbelianRealizable(why)) => Ok(Output {
                    lines: vec![format!("NONE — {why}")],
                    json: json!({"pseudo": p.pairs(), "type": null, "reason": why}),
                    failed: true,
                }),
                Err(e) => Err(e),
            }
        }
        Command::Search { against } => {
            let (target, target_pseudo) = target_pseudo(against, cap)?;
            let catalog = require_catalog(cli)?;
            let mut hits = catalog
                .groups
                .par_iter()
                .filter(|g| g.class_count() as u64 == target_pseudo.total())
                .map(|g| {
                    let equal = pseudo_equal(&pseudo_algebra(g)?, &target_pseudo);
                    Ok(equal.then(|| (g.name().to_string(), g.order())))
                })
                .filter_map(|r: Result<_>| r.transpose())
                .collect::<Result<Vec<(String, usize)>>>()?;
            hits.sort();
            let lines = hits
                .iter()
                .map(|(n, o)| format!("MATCH {n} order {o}"))
                .chain([format!(
                    "{} of {} groups match {target_pseudo}",
                    hits.len(),
                    catalog.len()
                )])
                .collect();
            let json = json!({
                "against": target,
                "pseudo": target_pseudo.pairs(),
                "checked": catalog.len(),
                "matches": hits.iter().map(|(n, o)| json!({"group": n, "order": o})).collect::<Vec<_>>(),
            });
            Ok(Output::plain(lines, json))
        }
        Command::Check(check) => execute_check(cli, check).map(Output::reports),
    }
}

fn execute_check(cli: &Cli, check: &CheckCommand) -> Result<Vec<Report>> {
    let cap = cli.cap;
    let against = |args: &AgainstArgs| -> Result<(Group, AbelianType)> {
        Ok((build(&args.group, cap)?, parse_type(&args.against)?))
    };
    Ok(match check {
        CheckCommand::Lemma21(args) => {
            let (g, t) = against(args)?;
            vec![check_lemma21(&g, &t)?]
        }
        CheckCommand::Lemma22(args) => {
            let (g, t) = against(args)?;
            vec![check_lemma22(&g, &t)?.report]
        }
        CheckCommand::Counterexample(args) => {
            let (g, t) = against(args)?;
            vec![verify_counterexample(&g, &t)?]
        }
        CheckCommand::Thm12 { group, pn } => {
            let g = build(group, cap)?;
            match thm12_certificate(&g, pn.p, pn.n) {
                Ok(cert) => vec![cert.to_report(g.name())],
                Err(Error::HypothesisUnmet(why)) => vec![Report {
                    check: "thm12".into(),
                    group: g.name().into(),
                    verdict: Verdict::NotApplicable,
                    detail: why,
                }],
                Err(e) => return Err(e),
            }
        }
        CheckCommand::Thm23 { pn } => {
            let catalog = require_catalog(cli)?;
            vec![thm23_scan(&catalog.groups, pn.p, pn.n)?.report]
        }
        CheckCommand::Counting { group } => {
            let g = build(group, cap)?;
            vec![counting_identity_of(&char_table(&g)?)]
        }
        CheckCommand::Catalog => {
            let catalog = require_catalog(cli)?;
            catalog_expectations(&catalog)?
        }
    })
}

/// One report per entry with an `expect pseudo` line.
pub fn catalog_expectations(catalog: &Catalog) -> Result<Vec<Report>> {
    catalog
        .entries
        .par_iter()
        .zip(&catalog.groups)
        .filter_map(|(entry, g)| {
            let (expected, line) = entry.expected_pseudo.as_ref()?;
            Some(pseudo_algebra(g).map(|got| {
                let ok = pseudo_equal(&got, expected);
                Report {
                    check: "catalog".into(),
                    group: g.name().into(),
                    verdict: if ok { Verdict::Pass } else { Verdict::Fail },
                    detail: if ok {
                        format!("C(G) = {got}")
                    } else {
                        format!(
                            "{}:{line}: expected {expected}, computed {got}",
                            catalog.path
                        )
                    },
                }
            }))
        })
        .collect()
}

/// Parses `args` (program name first), runs the command and writes its output
/// to `out`, errors to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let written = match cli.format {
                Format::Text => output.lines.iter().try_for_each(|l| writeln!(out, "{l}")),
                Format::Machine => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&output.json).expect("json renders")
                ),
            };
            if written.is_err() {
                return 2;
            }
            i32::from(output.failed)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
