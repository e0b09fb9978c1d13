//! Deciding the labeling predicates for a fully labeled graph.
//!
//! The predicates form a chain, each adding one requirement to the previous:
//!
//! | predicate | requirement                                                  |
//! |-----------|--------------------------------------------------------------|
//! | IASL      | vertex labels pairwise distinct                              |
//! | IASI      | induced edge labels `f(u) + f(v)` pairwise distinct          |
//! | IASSL     | vertex and edge labels together are exactly `P(X) - {∅}`    |
//! | IASSI     | additionally no set is both a vertex label and an edge label |
//!
//! IASGL sits beside the chain: an IASI whose edge labels are exactly
//! `P(X) - {∅, {0}}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::{classify_powerset, DEFAULT_CLASSIFY_LIMIT};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::sets::{mask_cmp, LabelSet, MaskAlgebra};

/// Widest ground set the cover check will allocate a presence table for.
pub const MAX_VERIFY_WIDTH: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Predicate {
    Iasl,
    Iasi,
    Iasgl,
    Iassl,
    Iassi,
}

impl Predicate {
    pub fn as_str(self) -> &'static str {
        match self {
            Predicate::Iasl => "iasl",
            Predicate::Iasi => "iasi",
            Predicate::Iasgl => "iasgl",
            Predicate::Iassl => "iassl",
            Predicate::Iassi => "iassi",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "iasl" => Ok(Predicate::Iasl),
            "iasi" => Ok(Predicate::Iasi),
            "iasgl" => Ok(Predicate::Iasgl),
            "iassl" => Ok(Predicate::Iassl),
            "iassi" => Ok(Predicate::Iassi),
            other => Err(Error::Domain(format!("unknown predicate {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

/// Whether a finding checks a claim as literally stated, or a corrected
/// restatement that is actually provable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    Check,
    Restated,
    Literal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub name: String,
    pub kind: FindingKind,
    pub outcome: Outcome,
    pub detail: String,
}

impl Finding {
    fn new(name: &str, kind: FindingKind, outcome: Outcome, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            kind,
            outcome,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub is_iasl: bool,
    pub is_iasi: bool,
    pub is_iasgl: bool,
    pub is_iassl: bool,
    pub is_iassi: bool,
    /// Distinct sets that are both a vertex label and an edge label.
    pub kappa: usize,
    pub missing_sets: Vec<LabelSet>,
    pub duplicate_fstar: Vec<LabelSet>,
    pub escaped_sets: Vec<LabelSet>,
    pub findings: Vec<Finding>,
}

impl VerificationReport {
    pub fn holds(&self, predicate: Predicate) -> bool {
        match predicate {
            Predicate::Iasl => self.is_iasl,
            Predicate::Iasi => self.is_iasi,
            Predicate::Iasgl => self.is_iasgl,
            Predicate::Iassl => self.is_iassl,
            Predicate::Iassi => self.is_iassi,
        }
    }

    pub fn finding(&self, name: &str) -> Option<&Finding> {
        self.findings.iter().find(|f| f.name == name)
    }
}

fn duplicates<'a>(items: impl IntoIterator<Item = &'a LabelSet>) -> Vec<LabelSet> {
    let mut counts: BTreeMap<&LabelSet, usize> = BTreeMap::new();
    for l in items {
        *counts.entry(l).or_default() += 1;
    }
    counts
        .into_iter()
        .filter(|&(_, c)| c > 1)
        .map(|(l, _)| l.clone())
        .collect()
}

fn list(sets: &[LabelSet]) -> String {
    sets.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Injectivity of the vertex labeling.
pub fn check_iasl(g: &LabeledGraph) -> Result<(bool, Vec<Finding>)> {
    let labels = g.complete_labels()?;
    let dup = duplicates(labels.iter().copied());
    let ok = dup.is_empty();
    let detail = if ok { String::new() } else { format!("repeated vertex labels: {}", list(&dup)) };
    Ok((
        ok,
        vec![Finding::new("vertex-labels-injective", FindingKind::Check, Outcome::from_bool(ok), detail)],
    ))
}

/// IASL plus injectivity of the induced edge labeling.
pub fn check_iasi(g: &LabeledGraph) -> Result<(bool, Vec<Finding>)> {
    let (iasl, mut findings) = check_iasl(g)?;
    let image = g.f_star_image()?;
    let dup = duplicates(image.edge_part.iter().map(|(_, l)| l));
    let ok = dup.is_empty();
    let detail = if ok { String::new() } else { format!("repeated edge labels: {}", list(&dup)) };
    findings.push(Finding::new("edge-labels-injective", FindingKind::Check, Outcome::from_bool(ok), detail));
    Ok((iasl && ok, findings))
}

/// Full report; `is_iassl` is the IASSL decision.
pub fn check_iassl(g: &LabeledGraph) -> Result<VerificationReport> {
    verify(g)
}

/// Full report; `is_iassi` is the IASSI decision.
pub fn check_iassi(g: &LabeledGraph) -> Result<VerificationReport> {
    verify(g)
}

pub fn check_iasgl(g: &LabeledGraph) -> Result<bool> {
    let (iasi, _) = check_iasi(g)?;
    if !iasi {
        return Ok(false);
    }
    let x = g.ground();
    let image = g.f_star_image()?;
    let zero = x.label(&[0]).ok();
    let edge_sets: BTreeSet<&LabelSet> = image.edge_part.iter().map(|(_, l)| l).collect();
    let all_inside = edge_sets.iter().all(|l| x.contains_set(l));
    let no_zero = zero.as_ref().is_none_or(|z| !edge_sets.contains(z));
    let target = x.powerset_size() - usize::from(x.contains_zero());
    Ok(all_inside && no_zero && edge_sets.len() == target)
}

/// Number of distinct sets occurring both as a vertex label and as an edge
/// label.
pub fn compute_kappa(g: &LabeledGraph) -> Result<usize> {
    let image = g.f_star_image()?;
    Ok(kappa_of(&image.vertex_part, &image.edge_part))
}

fn kappa_of<K, E>(vertices: &[(K, LabelSet)], edges: &[(E, LabelSet)]) -> usize {
    let vs: BTreeSet<&LabelSet> = vertices.iter().map(|(_, l)| l).collect();
    let es: BTreeSet<&LabelSet> = edges.iter().map(|(_, l)| l).collect();
    vs.intersection(&es).count()
}

/// Evaluates every predicate at once. Requires `0 ∈ X`.
pub fn verify(g: &LabeledGraph) -> Result<VerificationReport> {
    let x = g.ground();
    if !x.contains_zero() {
        return Err(Error::Domain(format!("sequential labelings need 0 in X, got {x}")));
    }
    if x.len() > MAX_VERIFY_WIDTH {
        return Err(Error::Capacity {
            what: "|X| for verification",
            actual: x.len(),
            limit: MAX_VERIFY_WIDTH,
        });
    }
    let (is_iasi, mut findings) = check_iasi(g)?;
    let is_iasl = findings[0].outcome == Outcome::Pass;
    let image = g.f_star_image()?;
    let combined = image.combined();

    let alg = MaskAlgebra::new(x)?;
    let mut present = vec![false; 1usize << x.len()];
    let mut escaped = BTreeSet::new();
    for l in &combined {
        match x.mask_of(l) {
            Some(m) => present[m as usize] = true,
            None => {
                escaped.insert((*l).clone());
            }
        }
    }
    let mut missing: Vec<u32> = (1..=alg.full()).filter(|&m| !present[m as usize]).collect();
    missing.sort_by(|&a, &b| mask_cmp(a, b));
    let missing_sets: Vec<LabelSet> = missing.iter().map(|&m| x.set_of_mask(m)).collect();
    let escaped_sets: Vec<LabelSet> = escaped.into_iter().collect();
    let duplicate_fstar = duplicates(combined.iter().copied());

    let covers = missing_sets.is_empty() && escaped_sets.is_empty();
    findings.push(Finding::new(
        "fstar-covers-powerset",
        FindingKind::Check,
        Outcome::from_bool(covers),
        if covers {
            String::new()
        } else {
            format!("missing: [{}] escaped: [{}]", list(&missing_sets), list(&escaped_sets))
        },
    ));
    let is_iassl = is_iasi && covers;
    let fstar_injective = duplicate_fstar.is_empty();
    findings.push(Finding::new(
        "fstar-injective",
        FindingKind::Check,
        Outcome::from_bool(fstar_injective),
        if fstar_injective { String::new() } else { format!("repeated: {}", list(&duplicate_fstar)) },
    ));
    let is_iassi = is_iassl && fstar_injective;
    let is_iasgl = check_iasgl(g)?;
    let kappa = kappa_of(&image.vertex_part, &image.edge_part);

    let mut report = VerificationReport {
        n_vertices: g.graph().vertex_count(),
        n_edges: g.graph().edge_count(),
        is_iasl,
        is_iasi,
        is_iasgl,
        is_iassl,
        is_iassi,
        kappa,
        missing_sets,
        duplicate_fstar,
        escaped_sets,
        findings,
    };
    if is_iassl {
        let structural = structural_findings(g, &report)?;
        report.findings.extend(structural);
    }
    Ok(report)
}

/// Structural consequences of being an IASSL, as named findings.
///
/// Fails with a precondition error unless `g` is an IASSL.
pub fn structural_audit(g: &LabeledGraph) -> Result<Vec<Finding>> {
    let report = verify(g)?;
    if !report.is_iassl {
        return Err(Error::Precondition("structural audit needs an IASSL".into()));
    }
    structural_findings(g, &report)
}

fn structural_findings(g: &LabeledGraph, report: &VerificationReport) -> Result<Vec<Finding>> {
    use FindingKind::{Literal, Restated};
    use Outcome::NotApplicable;

    let x = g.ground();
    let graph = g.graph();
    let labels = g.complete_labels()?;
    let zero = x.label(&[0])?;
    let n = graph.vertex_count();
    let connected = graph.is_connected();
    // the standing convention for pendant claims: at least one edge, no isolated vertices
    let no_isolated = n >= 2 && graph.isolated_count() == 0;
    let pendants = graph.pendant_count();
    let rho_prime = if x.len() <= DEFAULT_CLASSIFY_LIMIT {
        Some(classify_powerset(x)?.rho_prime())
    } else {
        None
    };
    let small_singletons: Vec<LabelSet> = (0..2)
        .filter_map(|k| x.nth_nonzero(k))
        .map(|v| x.label(&[v]))
        .collect::<Result<_>>()?;
    let image = g.f_star_image()?;

    let mut out = Vec::new();

    out.push(if connected {
        let ok = labels.iter().any(|l| **l == zero);
        Finding::new("zero-vertex-when-connected", Restated, Outcome::from_bool(ok), "")
    } else {
        Finding::new("zero-vertex-when-connected", Restated, NotApplicable, "graph is disconnected")
    });

    let bad: Vec<String> = image
        .edge_part
        .iter()
        .filter(|((u, v), l)| {
            *labels[*u] != zero && *labels[*v] != zero && small_singletons.contains(l)
        })
        .map(|((u, v), l)| format!("{u}-{v}={l}"))
        .collect();
    out.push(if small_singletons.is_empty() {
        Finding::new("no-small-singleton-edge-between-nonzero", Restated, NotApplicable, "X = {0}")
    } else {
        Finding::new(
            "no-small-singleton-edge-between-nonzero",
            Restated,
            Outcome::from_bool(bad.is_empty()),
            bad.join(" "),
        )
    });

    let xmax = x.max_value();
    let bad: Vec<String> = (0..n)
        .filter(|&v| labels[v].contains(xmax))
        .filter(|&v| {
            let d = graph.degree(v);
            d > 1 || (d == 1 && graph.neighbors(v).any(|w| *labels[w] != zero))
        })
        .map(|v| format!("vertex {v} {} degree {}", labels[v], graph.degree(v)))
        .collect();
    out.push(Finding::new(
        "max-element-vertices-hang-off-zero",
        Restated,
        Outcome::from_bool(bad.is_empty()),
        bad.join("; "),
    ));

    let pendant_finding = |name: &str, kind: FindingKind, need: Option<usize>| match need {
        Some(need) if no_isolated => Finding::new(
            name,
            kind,
            Outcome::from_bool(pendants >= need),
            format!("pendants {pendants}, required {need}"),
        ),
        Some(_) => Finding::new(name, kind, NotApplicable, "graph has isolated vertices"),
        None => Finding::new(name, kind, NotApplicable, "ground set too wide to classify"),
    };
    out.push(pendant_finding(
        "pendants-at-least-rho-prime-minus-one",
        Restated,
        rho_prime.map(|r| r.saturating_sub(1)),
    ));

    out.push(if report.is_iassi {
        let bad: Vec<String> = (0..n)
            .filter(|&v| *labels[v] == zero && !graph.is_isolated(v))
            .map(|v| format!("vertex {v}"))
            .collect();
        Finding::new(
            "zero-vertex-isolated-when-injective",
            Restated,
            Outcome::from_bool(bad.is_empty()),
            bad.join(" "),
        )
    } else {
        Finding::new("zero-vertex-isolated-when-injective", Restated, NotApplicable, "f* not injective")
    });

    out.push(pendant_finding("pendants-at-least-rho-prime", Literal, rho_prime));

    let bad: Vec<String> = image
        .edge_part
        .iter()
        .filter(|(_, l)| small_singletons.contains(l))
        .map(|((u, v), l)| format!("{u}-{v}={l}"))
        .collect();
    out.push(if !connected || small_singletons.is_empty() {
        Finding::new("no-small-singleton-edge", Literal, NotApplicable, "needs a connected graph and a non-zero element")
    } else {
        Finding::new("no-small-singleton-edge", Literal, Outcome::from_bool(bad.is_empty()), bad.join(" "))
    });

    Ok(out)
}
