//! Instance checks for the structural statements about pseudo-algebras of
//! `p`-groups.
//!
//! Every checker first tests its hypotheses. Inputs that fail them get a
//! [`Verdict::NotApplicable`] report, never a pass or a fail. A failing
//! report on an input that does meet the hypotheses means either a
//! counterexample to the statement or a bug here, and is reported as such.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chartab::{char_table, CharTable};
use crate::error::{Error, Result};
use crate::permgroup::{
    center, derived_subgroup, frattini_of_p_group, frattini_subgroup, is_metacyclic,
    maximal_subgroups_of_normal, prime_power_decomposition, quotient_group, Group, Subgroup,
};
use crate::pseudoalg::{
    abelian_pseudo, pseudo_algebra_of, pseudo_equal, reconstruct_abelian, AbelianType,
    PseudoAlgebra,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "N/A",
        })
    }
}

/// One line of checker output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub group: String,
    pub verdict: Verdict,
    pub detail: String,
}

impl Report {
    fn new(check: &str, group: &str, verdict: Verdict, detail: impl Into<String>) -> Report {
        Report {
            check: check.to_string(),
            group: group.to_string(),
            verdict,
            detail: detail.into(),
        }
    }

    fn verdict_if(check: &str, group: &str, ok: bool, detail: impl Into<String>) -> Report {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        Report::new(check, group, verdict, detail)
    }
}

/// `CHECK <name> <group> PASS|FAIL|N/A — <detail>`
impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CHECK {} {} {} — {}",
            self.check, self.group, self.verdict, self.detail
        )
    }
}

fn log_base(p: u64, n: u64) -> Option<u32> {
    let mut k = 0;
    let mut x = 1u64;
    while x < n {
        x = x.checked_mul(p)?;
        k += 1;
    }
    (x == n).then_some(k)
}

fn fmt_set(values: &[u64]) -> String {
    let inner: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// Checks `|cd(G)| ≥ 3` for nonabelian `G` sharing its pseudo-algebra with the
/// abelian `p`-group of type `target`, and that the two-degree counting
/// identity `p^{n-r} - 1 = (p^{a-r} - 1) p^{2e}` has no solution for `G`.
pub fn check_lemma21(group: &Group, target: &AbelianType) -> Result<Report> {
    const NAME: &str = "lemma21";
    let name = group.name();
    let Some(p) = target.single_prime() else {
        return Ok(Report::new(
            NAME,
            name,
            Verdict::NotApplicable,
            "target is not a nontrivial p-group type",
        ));
    };
    if group.is_abelian() {
        return Ok(Report::new(
            NAME,
            name,
            Verdict::NotApplicable,
            "G is abelian",
        ));
    }
    let table = char_table(group)?;
    let pseudo = pseudo_algebra_of(&table);
    let target_pseudo = abelian_pseudo(target);
    if !pseudo_equal(&pseudo, &target_pseudo) {
        return Ok(Report::new(
            NAME,
            name,
            Verdict::NotApplicable,
            format!("C(G) = {pseudo} differs from C(A) = {target_pseudo}"),
        ));
    }
    let cd = table.degree_set();
    let Some(n) = log_base(p, group.order() as u64) else {
        return Ok(Report::new(
            NAME,
            name,
            Verdict::Fail,
            format!("|G| = {} is not a power of {p}", group.order()),
        ));
    };
    let a = log_base(p, target.order()).expect("target is a p-group");
    let r = log_base(p, table.degree_count(1) as u64).expect("linear characters of a p-group");
    let identity_solvable = (1..=n).any(|e| {
        let lhs = (p as i128).pow(n - r) - 1;
        let rhs = ((p as i128).pow(a.saturating_sub(r)) - 1) * (p as i128).pow(2 * e);
        a > r && lhs == rhs
    });
    let ok = cd.len() >= 3 && !identity_solvable;
    Ok(Report::verdict_if(
        NAME,
        name,
        ok,
        format!(
            "cd(G) = {}, |cd(G)| = {}, n = {n}, r = {r}, a = {a}, two-degree identity {}",
            fmt_set(&cd),
            cd.len(),
            if identity_solvable {
                "solvable"
            } else {
                "unsolvable"
            }
        ),
    ))
}

/// Orders among `p^{a+1}, p^{a+2}, p^{a+3}` passing `(p² - 1) | (|G| - k)`.
pub fn lemma22_feasible_orders(p: u64, a: u32, k: u64) -> Vec<u64> {
    (a + 1..=a + 3)
        .map(|e| p.pow(e))
        .filter(|&order| order >= k && (order - k) % (p * p - 1) == 0)
        .collect()
}

/// Closed-form degree counts for a nonabelian `G` with `cd(G) = {1, p, p²}`
/// sharing its pseudo-algebra with an abelian group of order `p^a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma22Prediction {
    pub p: u64,
    pub a: u32,
    /// `|G : G′| = p^r`
    pub r: u32,
    pub predicted_order: u64,
    /// Number of irreducibles of degree `p`.
    pub k1: u64,
    /// Number of irreducibles of degree `p²`.
    pub k2: u64,
}

impl Lemma22Prediction {
    /// `None` when `r < 2` or `k1` would be negative.
    pub fn new(p: u64, a: u32, r: u32) -> Option<Lemma22Prediction> {
        if r < 2 {
            return None;
        }
        let k2 = p.pow(r - 2);
        let k1 = p.pow(a).checked_sub(p.pow(r))?.checked_sub(k2)?;
        Some(Lemma22Prediction {
            p,
            a,
            r,
            predicted_order: p.pow(a + 2),
            k1,
            k2,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma22Outcome {
    pub report: Report,
    pub prediction: Option<Lemma22Prediction>,
    /// Degree-`p` and degree-`p²` counts read from the table.
    pub observed: Option<(u64, u64)>,
}

/// Checks `p = 2`, `|G| = 2^{a+2}` and the degree counts `k₁`, `k₂`.
pub fn check_lemma22(group: &Group, target: &AbelianType) -> Result<Lemma22Outcome> {
    const NAME: &str = "lemma22";
    let name = group.name();
    let na = |detail: String| Lemma22Outcome {
        report: Report::new(NAME, name, Verdict::NotApplicable, detail),
        prediction: None,
        observed: None,
    };
    let Some(p) = target.single_prime() else {
        return Ok(na("target is not a nontrivial p-group type".into()));
    };
    if group.is_abelian() {
        return Ok(na("G is abelian".into()));
    }
    let table = char_table(group)?;
    let cd = table.degree_set();
    if cd != [1, p, p * p] {
        return Ok(na(format!(
            "cd(G) = {} is not {{1,{p},{}}}",
            fmt_set(&cd),
            p * p
        )));
    }
    let pseudo = pseudo_algebra_of(&table);
    let target_pseudo = abelian_pseudo(target);
    if !pseudo_equal(&pseudo, &target_pseudo) {
        return Ok(na(format!(
            "C(G) = {pseudo} differs from C(A) = {target_pseudo}"
        )));
    }
    let a = log_base(p, target.order()).expect("target is a p-group");
    let linear = table.degree_count(1) as u64;
    let observed = (
        table.degree_count(p) as u64,
        table.degree_count(p * p) as u64,
    );
    let Some(r) = log_base(p, linear) else {
        return Ok(Lemma22Outcome {
            report: Report::new(
                NAME,
                name,
                Verdict::Fail,
                format!("|G:G′| = {linear} is not a power of {p}"),
            ),
            prediction: None,
            observed: Some(observed),
        });
    };
    let prediction = Lemma22Prediction::new(p, a, r);
    let ok = match &prediction {
        Some(pr) => {
            p == 2 && group.order() as u64 == pr.predicted_order && observed == (pr.k1, pr.k2)
        }
        None => false,
    };
    let detail = match &prediction {
        Some(pr) => format!(
            "p = {p}, a = {a}, r = {r}, |G| = {} (predicted {}), k1 = {} (predicted {}), k2 = {} (predicted {})",
            group.order(),
            pr.predicted_order,
            observed.0,
            pr.k1,
            observed.1,
            pr.k2
        ),
        None => format!("p = {p}, a = {a}, r = {r}: closed forms undefined"),
    };
    Ok(Lemma22Outcome {
        report: Report::verdict_if(NAME, name, ok, detail),
        prediction,
        observed: Some(observed),
    })
}

/// Passes when `C(G) = C(A)` for `A` of type `target` while `|G| ≠ |A|`.
pub fn verify_counterexample(group: &Group, target: &AbelianType) -> Result<Report> {
    let table = char_table(group)?;
    let pseudo = pseudo_algebra_of(&table);
    let target_pseudo = abelian_pseudo(target);
    let equal = pseudo_equal(&pseudo, &target_pseudo);
    let orders_differ = group.order() as u64 != target.order();
    Ok(Report::verdict_if(
        "counterexample",
        group.name(),
        equal && orders_differ,
        format!(
            "C(G) = {pseudo} {} C(A) = {target_pseudo}; |G| = {}, |A| = {}; cd(G) = {}",
            if equal { "equals" } else { "differs from" },
            group.order(),
            target.order(),
            fmt_set(&table.degree_set())
        ),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Thm12Outcome {
    IsomorphicToA,
    Case2,
    Violated,
}

impl fmt::Display for Thm12Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Thm12Outcome::IsomorphicToA => "isomorphic-to-A",
            Thm12Outcome::Case2 => "case-2",
            Thm12Outcome::Violated => "violated",
        })
    }
}

/// Facts checked for a nonabelian `G` with `C(G) = C(C_{p^n} × C_p)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm12Details {
    pub p: u64,
    pub n: u32,
    pub order: u64,
    pub abelian: bool,
    pub reconstructed: Option<String>,
    pub abelianization_index: u64,
    pub center_cyclic: bool,
    /// Maximal subgroups of `G′` that are normal in `G`.
    pub normal_maximal_in_derived: usize,
    pub quotient_order: Option<u64>,
    pub quotient_exponent: Option<u64>,
    pub quotient_abelian: Option<bool>,
    /// Sufficient conditions for `G ≅ A`; any of them on a nonabelian `G`
    /// rules out the exceptional case.
    pub predicates: Option<Thm13Predicates>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm12Certificate {
    pub outcome: Thm12Outcome,
    pub details: Thm12Details,
}

impl Thm12Certificate {
    pub fn to_report(&self, group: &str) -> Report {
        let d = &self.details;
        let verdict = match self.outcome {
            Thm12Outcome::Violated => Verdict::Fail,
            _ => Verdict::Pass,
        };
        let detail = if d.abelian {
            format!(
                "{}: G abelian of type {}",
                self.outcome,
                d.reconstructed.as_deref().unwrap_or("?")
            )
        } else {
            format!(
                "{}: |G:G′| = {}, p = {}, Z(G) {}, normal maximal subgroups of G′: {}, |G/X| = {}, exp(G/X) = {}, G/X {}{}",
                self.outcome,
                d.abelianization_index,
                d.p,
                if d.center_cyclic { "cyclic" } else { "noncyclic" },
                d.normal_maximal_in_derived,
                d.quotient_order.map_or("-".into(), |x| x.to_string()),
                d.quotient_exponent.map_or("-".into(), |x| x.to_string()),
                match d.quotient_abelian {
                    Some(true) => "abelian",
                    Some(false) => "nonabelian",
                    None => "-",
                },
                match &d.predicates {
                    Some(pr) => format!(
                        "; metacyclic maximal subgroup {}, G′ two-generated {}, G′ abelian {}",
                        pr.metacyclic_maximal_subgroup, pr.derived_two_generated, pr.derived_abelian
                    ),
                    None => String::new(),
                }
            )
        };
        Report::new("thm12", group, verdict, detail)
    }
}

/// Structural certificate for `G` with `C(G) = C(C_{p^n} × C_p)`, `n ≥ 3`:
/// either `G ≅ A`, or every condition of the exceptional case holds.
pub fn thm12_certificate(group: &Group, p: u64, n: u32) -> Result<Thm12Certificate> {
    if n < 3 {
        return Err(Error::HypothesisUnmet(format!("n = {n} < 3")));
    }
    let target = AbelianType::p_group(p, vec![n, 1])?;
    let table = char_table(group)?;
    let pseudo = pseudo_algebra_of(&table);
    if !pseudo_equal(&pseudo, &abelian_pseudo(&target)) {
        return Err(Error::HypothesisUnmet(format!(
            "C(G) = {pseudo} differs from C({target})"
        )));
    }
    let mut details = Thm12Details {
        p,
        n,
        order: group.order() as u64,
        abelian: group.is_abelian(),
        ..Thm12Details::default()
    };
    if details.abelian {
        let rebuilt = reconstruct_abelian(&pseudo).ok();
        details.reconstructed = rebuilt.as_ref().map(ToString::to_string);
        let outcome = if rebuilt.as_ref() == Some(&target) {
            Thm12Outcome::IsomorphicToA
        } else {
            Thm12Outcome::Violated
        };
        return Ok(Thm12Certificate { outcome, details });
    }

    let derived = derived_subgroup(group);
    details.abelianization_index = derived.index() as u64;
    details.center_cyclic = center(group).is_cyclic();
    let is_p_group = log_base(p, group.order() as u64).is_some();
    let mut case2 =
        is_p_group && p > 2 && details.abelianization_index == p * p && !details.center_cyclic;
    if is_p_group {
        let normal: Vec<Subgroup<'_>> = maximal_subgroups_of_normal(group, &derived)?
            .into_iter()
            .filter(|m| m.normal_in_group)
            .map(|m| m.subgroup)
            .collect();
        details.normal_maximal_in_derived = normal.len();
        if let [x] = normal.as_slice() {
            let quotient = quotient_group(group, x)?;
            details.quotient_order = Some(quotient.order() as u64);
            details.quotient_exponent = Some(quotient.exponent());
            details.quotient_abelian = Some(quotient.is_abelian());
            case2 &= quotient.order() as u64 == p.pow(3)
                && quotient.exponent() == p
                && !quotient.is_abelian();
        } else {
            case2 = false;
        }
        let predicates = thm13_predicates(group)?;
        case2 &= !predicates.any();
        details.predicates = Some(predicates);
    }
    let outcome = if case2 {
        Thm12Outcome::Case2
    } else {
        Thm12Outcome::Violated
    };
    Ok(Thm12Certificate { outcome, details })
}

/// The three sufficient conditions for `G ≅ A`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm13Predicates {
    pub metacyclic_maximal_subgroup: bool,
    pub derived_two_generated: bool,
    pub derived_abelian: bool,
}

impl Thm13Predicates {
    pub fn any(&self) -> bool {
        self.metacyclic_maximal_subgroup || self.derived_two_generated || self.derived_abelian
    }
}

/// Evaluates the predicates on a group of prime-power order.
pub fn thm13_predicates(group: &Group) -> Result<Thm13Predicates> {
    let (p, _) = group
        .prime_power()
        .ok_or(Error::NotPrimePower(group.order()))?;
    let whole = Subgroup::whole(group);
    let metacyclic_maximal_subgroup = maximal_subgroups_of_normal(group, &whole)?
        .iter()
        .any(|m| is_metacyclic(&m.subgroup.to_group("M")));
    let derived = derived_subgroup(group);
    let rank = if derived.is_trivial() {
        0
    } else {
        let phi = frattini_of_p_group(&derived, p);
        log_base(p, (derived.order() / phi.order()) as u64).expect("elementary abelian quotient")
    };
    Ok(Thm13Predicates {
        metacyclic_maximal_subgroup,
        derived_two_generated: rank <= 2,
        derived_abelian: derived.is_abelian(),
    })
}

/// Result of scanning a catalog for metacyclic groups with `C(G) = C(C_{p^n} × C_p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm23Scan {
    pub checked: usize,
    /// Groups whose pseudo-algebra equals the target's.
    pub matched: Vec<String>,
    /// Matched groups that are metacyclic.
    pub metacyclic_matched: Vec<String>,
    /// Metacyclic matches that are not abelian of the target type.
    pub violations: Vec<String>,
    pub report: Report,
}

pub fn thm23_scan(catalog: &[Group], p: u64, n: u32) -> Result<Thm23Scan> {
    let target = AbelianType::p_group(p, vec![n, 1])?;
    let target_pseudo = abelian_pseudo(&target);
    let per_group: Vec<Result<Option<(bool, bool)>>> = catalog
        .par_iter()
        .map(|g| {
            // Σ m = k(G) gives a cheap filter before any table is built.
            if g.class_count() as u64 != target_pseudo.total() {
                return Ok(None);
            }
            let pseudo = pseudo_algebra_of(&char_table(g)?);
            if !pseudo_equal(&pseudo, &target_pseudo) {
                return Ok(None);
            }
            if !is_metacyclic(g) {
                return Ok(Some((false, false)));
            }
            let fine =
                g.is_abelian() && reconstruct_abelian(&pseudo).ok().as_ref() == Some(&target);
            Ok(Some((true, !fine)))
        })
        .collect();
    let mut matched = Vec::new();
    let mut metacyclic_matched = Vec::new();
    let mut violations = Vec::new();
    for (g, r) in catalog.iter().zip(per_group) {
        if let Some((metacyclic, violated)) = r? {
            matched.push(g.name().to_string());
            if metacyclic {
                metacyclic_matched.push(g.name().to_string());
            }
            if violated {
                violations.push(g.name().to_string());
            }
        }
    }
    let report = Report::verdict_if(
        "thm23",
        &format!("{target}"),
        violations.is_empty(),
        format!(
            "{} groups checked, {} with C(G) = C(A), {} of them metacyclic, {} violations{}",
            catalog.len(),
            matched.len(),
            metacyclic_matched.len(),
            violations.len(),
            if violations.is_empty() {
                String::new()
            } else {
                format!(": {}", violations.join(","))
            }
        ),
    );
    Ok(Thm23Scan {
        checked: catalog.len(),
        matched,
        metacyclic_matched,
        violations,
        report,
    })
}

/// `|G| = Σ χ(1)²` and `#linear characters = |G : G′|`.
pub fn counting_identity(group: &Group) -> Result<Report> {
    let table = char_table(group)?;
    Ok(counting_identity_of(&table))
}

pub fn counting_identity_of(table: &CharTable<'_>) -> Report {
    let group = table.group();
    let sum: u64 = table
        .irreducibles()
        .iter()
        .map(|c| c.degree * c.degree)
        .sum();
    let linear = table.degree_count(1);
    let index = derived_subgroup(group).index();
    let mut counts: Vec<(u64, usize)> = Vec::new();
    for d in table.degree_set() {
        counts.push((d, table.degree_count(d)));
    }
    let terms: Vec<String> = counts
        .iter()
        .map(|&(d, c)| format!("{c}·{}", d * d))
        .collect();
    Report::verdict_if(
        "counting",
        group.name(),
        sum == group.order() as u64 && linear == index,
        format!(
            "|G| = {} = {} = {sum}; linear characters {linear}, |G:G′| = {index}",
            group.order(),
            terms.join(" + ")
        ),
    )
}

/// Whether `G/Φ(G)` has order `p²` and exponent `p`.
pub fn frattini_quotient_check(group: &Group, p: u64) -> Result<bool> {
    if group.order() == 1 {
        return Ok(false);
    }
    match prime_power_decomposition(group.order() as u64) {
        Some((q, _)) if q == p => {}
        _ => return Err(Error::NotPrimePower(group.order())),
    }
    let phi = frattini_subgroup(group);
    let quotient = quotient_group(group, &phi)?;
    Ok(quotient.order() as u64 == p * p && quotient.exponent() == p)
}

/// `C(G)` together with the table it came from.
pub fn pseudo_and_table(group: &Group) -> Result<(CharTable<'_>, PseudoAlgebra)> {
    let table = char_table(group)?;
    let pseudo = pseudo_algebra_of(&table);
    Ok((table, pseudo))
}
