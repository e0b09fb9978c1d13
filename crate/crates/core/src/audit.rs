//! Evaluates the structural claims about IASSL / IASSI graphs on every
//! instance reachable at desk scale and reports where they hold.
//!
//! The corpus has three parts:
//!
//! * the deterministic constructions for every ground set in range;
//! * every IASSL labeling of every graph with at most `nmax` vertices over
//!   every ground set in range (found by exhaustive search), grouped into
//!   cells, one per (graph, X);
//! * every IASGL in range, found by a separate exhaustive enumeration.
//!
//! Claims that fail as literally stated are also audited in a corrected,
//! restated form. A claim whose hypothesis no instance meets is VACUOUS.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::classify_powerset;
use crate::construct::{construct, Mode};
use crate::error::{Error, Result};
use crate::families::{all_graphs, MAX_ENUMERATED_ORDER};
use crate::graph::{Graph, LabeledGraph};
use crate::search::{find_labelings, ground_sets, SearchOptions, HARD_MAX_GROUND};
use crate::sets::{GroundSet, LabelSet, MaskAlgebra};
use crate::verify::{verify, Predicate, VerificationReport};

pub const MAX_WITNESSES: usize = 3;
/// Audits enumerate every labeling, so they stay below the search default.
pub const MAX_AUDIT_GROUND: usize = 4;
/// Cells with more IASSL labelings than this are truncated (and say so).
pub const MAX_SOLUTIONS_PER_CELL: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditBounds {
    /// Largest element of X.
    pub xmax: u32,
    /// Largest |X|.
    pub xsize: usize,
    /// Largest vertex count of searched graphs.
    pub nmax: usize,
}

impl Default for AuditBounds {
    fn default() -> Self {
        Self {
            xmax: 4,
            xsize: 3,
            nmax: 5,
        }
    }
}

impl AuditBounds {
    fn check(&self) -> Result<()> {
        if self.xsize > MAX_AUDIT_GROUND {
            return Err(Error::Capacity {
                what: "|X| for audits",
                actual: self.xsize,
                limit: MAX_AUDIT_GROUND,
            });
        }
        if self.nmax > MAX_ENUMERATED_ORDER {
            return Err(Error::Capacity {
                what: "vertex count for audits",
                actual: self.nmax,
                limit: MAX_ENUMERATED_ORDER,
            });
        }
        Ok(())
    }

    pub fn ground_sets(&self) -> Vec<GroundSet> {
        ground_sets(self.xsize, self.xmax)
    }
}

/// A fully labeled graph with its verification report.
#[derive(Clone, Debug)]
pub struct Instance {
    pub source: String,
    pub graph: LabeledGraph,
    pub report: VerificationReport,
    pub rho: usize,
    pub rho_prime: usize,
}

impl Instance {
    pub fn new(source: impl Into<String>, graph: LabeledGraph) -> Result<Self> {
        let report = verify(&graph)?;
        let class = classify_powerset(graph.ground())?;
        Ok(Self {
            source: source.into(),
            graph,
            report,
            rho: class.rho(),
            rho_prime: class.rho_prime(),
        })
    }

    fn labels(&self) -> Vec<&LabelSet> {
        self.graph.complete_labels().expect("instances are fully labeled")
    }

    fn g(&self) -> &Graph {
        self.graph.graph()
    }

    fn x(&self) -> &GroundSet {
        self.graph.ground()
    }

    fn is_zero(&self, l: &LabelSet) -> bool {
        l.len() == 1 && l.min_member() == 0
    }
}

/// All IASSL labelings of one graph over one ground set.
#[derive(Clone, Debug)]
pub struct Cell {
    pub name: String,
    pub graph: Graph,
    pub ground: GroundSet,
    pub iassl: Vec<Instance>,
    pub truncated: bool,
}

impl Cell {
    fn solutions(&self, predicate: Predicate) -> impl Iterator<Item = &Instance> {
        self.iassl.iter().filter(move |i| i.report.holds(predicate))
    }

    fn rho_prime(&self) -> usize {
        classify_powerset(&self.ground).map_or(0, |c| c.rho_prime())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub instances: Vec<Instance>,
    pub cells: Vec<Cell>,
    pub graceful: Vec<Instance>,
}

impl Corpus {
    /// A corpus of hand-picked instances, with no cells or IASGL enumeration.
    pub fn from_instances(instances: Vec<Instance>) -> Self {
        Self {
            instances,
            ..Self::default()
        }
    }

    pub fn collect(bounds: &AuditBounds) -> Result<Self> {
        bounds.check()?;
        let grounds = bounds.ground_sets();

        let built: Vec<Vec<Instance>> = grounds
            .par_iter()
            .map(|x| {
                [Mode::Iassl, Mode::Iassi]
                    .into_iter()
                    .map(|mode| {
                        let t = construct(x, mode)?;
                        Instance::new(format!("construct-{} {x}", mode.predicate()), t.graph)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let mut instances: Vec<Instance> = built.into_iter().flatten().collect();

        let mut graphs = Vec::new();
        for n in 1..=bounds.nmax {
            graphs.extend(all_graphs(n)?);
        }
        let jobs: Vec<_> = graphs.iter().flat_map(|g| grounds.iter().map(move |x| (g, x))).collect();
        let opts = SearchOptions {
            cap: std::num::NonZeroUsize::new(MAX_SOLUTIONS_PER_CELL),
            max_ground: HARD_MAX_GROUND,
            max_vertices: MAX_ENUMERATED_ORDER,
            ..SearchOptions::new(Predicate::Iassl).all()
        };
        let cells: Vec<Cell> = jobs
            .par_iter()
            .map(|(ng, x)| {
                let r = find_labelings(&ng.graph, x, &opts)?;
                let iassl = r
                    .solutions
                    .into_iter()
                    .enumerate()
                    .map(|(i, labels)| {
                        let lg = LabeledGraph::with_labels(ng.graph.clone(), (*x).clone(), labels)?;
                        Instance::new(format!("search {} {x} #{i}", ng.name), lg)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Cell {
                    name: ng.name.clone(),
                    graph: ng.graph.clone(),
                    ground: (*x).clone(),
                    iassl,
                    truncated: !r.exhausted,
                })
            })
            .collect::<Result<_>>()?;
        for cell in &cells {
            instances.extend(cell.iassl.iter().cloned());
        }

        let graceful_jobs: Vec<_> = graphs
            .iter()
            .flat_map(|g| grounds.iter().map(move |x| (g, x)))
            .filter(|(g, x)| g.graph.edge_count() + 1 == x.powerset_size())
            .collect();
        let graceful: Vec<Vec<Instance>> = graceful_jobs
            .par_iter()
            .map(|(ng, x)| {
                graceful_labelings(&ng.graph, x)?
                    .into_iter()
                    .enumerate()
                    .map(|(i, labels)| {
                        let lg = LabeledGraph::with_labels(ng.graph.clone(), (*x).clone(), labels)?;
                        Instance::new(format!("iasgl {} {x} #{i}", ng.name), lg)
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;

        Ok(Self {
            instances,
            cells,
            graceful: graceful.into_iter().flatten().collect(),
        })
    }
}

/// Every IASGL of `g` over `x`: injective vertex labels whose edge sums are
/// pairwise distinct subsets of X other than `{0}`. Only meaningful when `g`
/// has exactly `2^|X| - 2` edges.
fn graceful_labelings(g: &Graph, x: &GroundSet) -> Result<Vec<Vec<LabelSet>>> {
    let alg = MaskAlgebra::new(x)?;
    let candidates = alg.canonical_masks();
    let n = g.vertex_count();
    let mut assign = vec![0u32; n];
    let mut used_v = BTreeSet::new();
    let mut used_e = BTreeSet::new();
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn go(
        v: usize,
        g: &Graph,
        alg: &MaskAlgebra,
        candidates: &[u32],
        assign: &mut Vec<u32>,
        used_v: &mut BTreeSet<u32>,
        used_e: &mut BTreeSet<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if v == g.vertex_count() {
            out.push(assign.clone());
            return;
        }
        for &c in candidates {
            if used_v.contains(&c) {
                continue;
            }
            let mut sums = Vec::new();
            let mut ok = true;
            for w in g.neighbors(v).filter(|&w| w < v) {
                match alg.sum(c, assign[w]) {
                    Some(s) if s != alg.zero() && !used_e.contains(&s) && !sums.contains(&s) => sums.push(s),
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            assign[v] = c;
            used_v.insert(c);
            used_e.extend(sums.iter().copied());
            go(v + 1, g, alg, candidates, assign, used_v, used_e, out);
            for s in &sums {
                used_e.remove(s);
            }
            used_v.remove(&c);
        }
    }

    go(0, g, &alg, &candidates, &mut assign, &mut used_v, &mut used_e, &mut out);
    Ok(out
        .into_iter()
        .map(|sol| sol.into_iter().map(|m| x.set_of_mask(m)).collect())
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    /// The claim as literally stated.
    Literal,
    /// A corrected form that desk checks support.
    Restated,
    /// A bookkeeping identity, not a structural claim.
    Sanity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Confirmed,
    Discrepant,
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub source: String,
    pub detail: String,
    /// Unlabeled for claims refuted by the absence of any labeling.
    pub graph: LabeledGraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub statement: String,
    pub form: Form,
    pub instances_tested: usize,
    pub passes: usize,
    pub failures: usize,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub ground_sets: usize,
    pub instances: usize,
    pub cells: usize,
    pub truncated_cells: usize,
    pub iasgl_instances: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub bounds: AuditBounds,
    pub corpus: CorpusSummary,
    pub claims: Vec<ClaimRecord>,
}

impl AuditReport {
    pub fn claim(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.id == id)
    }
}

type Outcome = Option<std::result::Result<(), String>>;

enum Test {
    /// Over every labeled instance.
    Instance(fn(&Instance) -> Outcome),
    /// Over the IASGL enumeration.
    Graceful(fn(&Instance) -> Outcome),
    /// "No graph of this kind has a labeling satisfying `predicate`", over cells.
    Absent {
        predicate: Predicate,
        applies: fn(&Graph) -> bool,
    },
    /// "A graph with exactly ρ′ isolated vertices has an IASSI", over cells.
    IsolatedConverse,
}

struct ClaimDef {
    id: &'static str,
    statement: &'static str,
    form: Form,
    test: Test,
}

fn check(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    Some(if ok { Ok(()) } else { Err(detail()) })
}

fn iassl(i: &Instance) -> bool {
    i.report.is_iassl
}

fn connected_iassl(i: &Instance) -> bool {
    i.report.is_iassl && i.g().is_connected() && i.g().vertex_count() >= 2
}

fn identity_derivation(i: &Instance) -> Outcome {
    if !iassl(i) {
        return None;
    }
    let (n, m, k) = (i.report.n_vertices, i.report.n_edges, i.report.kappa);
    let want = i.x().powerset_size();
    check(n + m - k == want, || format!("n_V+|E|-κ = {}+{}-{} = {} ≠ {want}", n, m, k, n + m - k))
}

fn identity_printed(i: &Instance) -> Outcome {
    if !iassl(i) {
        return None;
    }
    let (n, m, k) = (i.report.n_vertices, i.report.n_edges, i.report.kappa);
    let rhs = (i.x().powerset_size() + 1) as i64 - (1 + k) as i64;
    check((n + m) as i64 == rhs, || format!("n_V+|E| = {} but 2^|X|-(1+κ) = {rhs} with κ = {k}", n + m))
}

fn kappa_parity(i: &Instance) -> Outcome {
    if !iassl(i) {
        return None;
    }
    let (n, m, k) = (i.report.n_vertices, i.report.n_edges, i.report.kappa);
    check(((n + m) % 2 == 0) == (k % 2 == 1), || format!("n_V+|E| = {}, κ = {k}", n + m))
}

fn inclusion_exclusion(i: &Instance) -> Outcome {
    let image = i.graph.f_star_image().ok()?;
    let vs: BTreeSet<&LabelSet> = image.vertex_part.iter().map(|(_, l)| l).collect();
    let es: BTreeSet<&LabelSet> = image.edge_part.iter().map(|(_, l)| l).collect();
    let union = vs.union(&es).count();
    let inter = vs.intersection(&es).count();
    check(union + inter == vs.len() + es.len(), || {
        format!("|∪| = {union}, |V| = {}, |E| = {}, |∩| = {inter}", vs.len(), es.len())
    })
}

fn vertices_at_least_rho(i: &Instance) -> Outcome {
    if !iassl(i) {
        return None;
    }
    let n = i.report.n_vertices;
    check(n >= i.rho, || format!("n_V = {n} < ρ = {}", i.rho))
}

fn zero_vertex_present(i: &Instance) -> Outcome {
    if !iassl(i) {
        return None;
    }
    check(i.labels().iter().any(|l| i.is_zero(l)), || "no vertex labeled {0}".into())
}

fn pendants_literal(i: &Instance) -> Outcome {
    if !connected_iassl(i) {
        return None;
    }
    let p = i.g().pendant_count();
    check(p >= i.rho_prime, || format!("pendants {p} < ρ′ = {}", i.rho_prime))
}

fn pendants_restated(i: &Instance) -> Outcome {
    if !connected_iassl(i) {
        return None;
    }
    let p = i.g().pendant_count();
    let need = i.rho_prime.saturating_sub(1);
    check(p >= need, || format!("pendants {p} < ρ′-1 = {need}"))
}

fn some_pendant_literal(i: &Instance) -> Outcome {
    if !iassl(i) {
        return None;
    }
    check(i.g().pendant_count() > 0, || format!("no pendant among {} vertices", i.report.n_vertices))
}

fn some_pendant_restated(i: &Instance) -> Outcome {
    if !connected_iassl(i) || i.x().len() < 2 {
        return None;
    }
    check(i.g().pendant_count() > 0, || "no pendant".into())
}

fn small_singletons(x: &GroundSet) -> Vec<LabelSet> {
    (0..2)
        .filter_map(|k| x.nth_nonzero(k))
        .map(|v| x.label(&[v]).expect("element of X"))
        .collect()
}

fn singleton_edges(i: &Instance, between_nonzero: bool) -> Vec<String> {
    let small = small_singletons(i.x());
    let labels = i.labels();
    i.g()
        .edges()
        .filter(|&(u, v)| !between_nonzero || (!i.is_zero(labels[u]) && !i.is_zero(labels[v])))
        .filter_map(|e| {
            let l = i.graph.induced_edge_label(e).ok()?;
            small.contains(&l).then(|| format!("edge {}-{} labeled {l}", e.0, e.1))
        })
        .collect()
}

fn singleton_edge_literal(i: &Instance) -> Outcome {
    if !connected_iassl(i) || i.x().len() < 3 {
        return None;
    }
    let bad = singleton_edges(i, false);
    check(bad.is_empty(), || bad.join("; "))
}

fn singleton_edge_restated(i: &Instance) -> Outcome {
    if !iassl(i) || i.x().len() < 2 {
        return None;
    }
    let bad = singleton_edges(i, true);
    check(bad.is_empty(), || bad.join("; "))
}

fn max_element_vertices(i: &Instance, strict: bool) -> Vec<String> {
    let labels = i.labels();
    let top = i.x().max_value();
    (0..labels.len())
        .filter(|&v| labels[v].contains(top))
        .filter(|&v| {
            let d = i.g().degree(v);
            let on_zero = i.g().neighbors(v).all(|w| i.is_zero(labels[w]));
            !(on_zero && (d == 1 || (!strict && d == 0)))
        })
        .map(|v| format!("vertex {v} {} has degree {}", labels[v], i.g().degree(v)))
        .collect()
}

fn max_element_literal(i: &Instance) -> Outcome {
    if !connected_iassl(i) {
        return None;
    }
    let bad = max_element_vertices(i, true);
    check(bad.is_empty(), || bad.join("; "))
}

fn max_element_restated(i: &Instance) -> Outcome {
    if !iassl(i) || i.x().len() < 2 {
        return None;
    }
    let bad = max_element_vertices(i, false);
    check(bad.is_empty(), || bad.join("; "))
}

fn zero_isolated_when_injective(i: &Instance) -> Outcome {
    if !i.report.is_iassi {
        return None;
    }
    let labels = i.labels();
    let bad: Vec<String> = (0..labels.len())
        .filter(|&v| i.is_zero(labels[v]) && !i.g().is_isolated(v))
        .map(|v| format!("vertex {v} labeled {{0}} has degree {}", i.g().degree(v)))
        .collect();
    check(bad.is_empty(), || bad.join("; "))
}

fn tree_order(i: &Instance) -> Outcome {
    if !iassl(i) || !i.g().is_tree() {
        return None;
    }
    let n = i.report.n_vertices;
    let want = 1usize << (i.x().len() - 1);
    check(n == want, || format!("tree with n_V = {n}, 2^(|X|-1) = {want}"))
}

fn iasgl_implies_iassl(i: &Instance) -> Outcome {
    if !i.report.is_iasgl {
        return None;
    }
    check(i.report.is_iassl, || format!("missing {:?}", i.report.missing_sets))
}

fn iassi_isolated_literal(i: &Instance) -> Outcome {
    if !i.report.is_iassi {
        return None;
    }
    let iso = i.g().isolated_count();
    check(iso == i.rho_prime, || format!("{iso} isolated vertices, ρ′ = {}", i.rho_prime))
}

fn iassi_b_family_isolated(i: &Instance) -> Outcome {
    if !i.report.is_iassi {
        return None;
    }
    let class = classify_powerset(i.x()).ok()?;
    let labels = i.labels();
    let bad: Vec<String> = (0..labels.len())
        .filter(|&v| class.b_family().contains(labels[v]) && !i.g().is_isolated(v))
        .map(|v| format!("vertex {v} labeled {} has degree {}", labels[v], i.g().degree(v)))
        .collect();
    check(bad.is_empty(), || bad.join("; "))
}

fn constructed(i: &Instance, mode: Mode) -> Outcome {
    let prefix = format!("construct-{} ", mode.predicate());
    if !i.source.starts_with(&prefix) {
        return None;
    }
    check(i.report.holds(mode.predicate()), || "construction does not verify".into())
}

fn claims() -> Vec<ClaimDef> {
    use Form::{Literal, Restated, Sanity};
    let c = |id, statement, form, test| ClaimDef {
        id,
        statement,
        form,
        test,
    };
    vec![
        c("identity-derivation", "For an IASSL, n_V + |E| - κ = 2^|X| - 1.", Restated, Test::Instance(identity_derivation)),
        c("identity-printed", "For an IASSL, m + n = 2^|X| - (1 + κ).", Literal, Test::Instance(identity_printed)),
        c("kappa-parity", "For an IASSL, κ is odd iff |V| and |E| have the same parity.", Literal, Test::Instance(kappa_parity)),
        c(
            "inclusion-exclusion",
            "|f(V) ∪ f⁺(E)| = |f(V)| + |f⁺(E)| - |f(V) ∩ f⁺(E)|.",
            Sanity,
            Test::Instance(inclusion_exclusion),
        ),
        c("vertices-at-least-rho", "A graph with an IASSL has at least ρ vertices.", Literal, Test::Instance(vertices_at_least_rho)),
        c("zero-vertex-present", "In an IASSL, {0} is the label of some vertex.", Literal, Test::Instance(zero_vertex_present)),
        c(
            "pendants-at-least-rho-prime",
            "A connected IASSL graph has at least ρ′ pendant vertices.",
            Literal,
            Test::Instance(pendants_literal),
        ),
        c(
            "pendants-at-least-rho-prime-minus-one",
            "A connected IASSL graph has at least ρ′ - 1 pendant vertices.",
            Restated,
            Test::Instance(pendants_restated),
        ),
        c("some-pendant", "Every graph with an IASSL has a pendant vertex.", Literal, Test::Instance(some_pendant_literal)),
        c(
            "some-pendant-connected",
            "Every connected IASSL graph over |X| >= 2 has a pendant vertex.",
            Restated,
            Test::Instance(some_pendant_restated),
        ),
        c(
            "no-small-singleton-edge",
            "In a connected IASSL graph no edge is labeled {x₁} or {x₂}, the two smallest non-zero elements.",
            Literal,
            Test::Instance(singleton_edge_literal),
        ),
        c(
            "no-small-singleton-edge-between-nonzero",
            "In an IASSL no edge joining two vertices other than {0} is labeled {x₁} or {x₂}.",
            Restated,
            Test::Instance(singleton_edge_restated),
        ),
        c(
            "max-element-vertices",
            "In a connected IASSL graph every vertex whose label contains max(X) is a pendant on the {0} vertex.",
            Literal,
            Test::Instance(max_element_literal),
        ),
        c(
            "max-element-vertices-any",
            "In an IASSL every vertex whose label contains max(X) is isolated or a pendant on the {0} vertex.",
            Restated,
            Test::Instance(max_element_restated),
        ),
        c(
            "zero-vertex-isolated-when-injective",
            "If f* is injective, a vertex labeled {0} is isolated.",
            Literal,
            Test::Instance(zero_isolated_when_injective),
        ),
        c(
            "no-iassl-cycle",
            "No cycle admits an IASSL.",
            Literal,
            Test::Absent {
                predicate: Predicate::Iassl,
                applies: Graph::is_cycle,
            },
        ),
        c(
            "no-iassl-complete",
            "No complete graph K_n with n >= 2 admits an IASSL.",
            Literal,
            Test::Absent {
                predicate: Predicate::Iassl,
                applies: |g| g.vertex_count() >= 2 && g.is_complete(),
            },
        ),
        c(
            "no-iasl-complete-bipartite",
            "No complete bipartite graph K_m,n admits an IASL.",
            Literal,
            Test::Absent {
                predicate: Predicate::Iasl,
                applies: Graph::is_complete_bipartite,
            },
        ),
        c(
            "no-iassl-complete-bipartite",
            "No complete bipartite graph K_m,n admits an IASSL.",
            Restated,
            Test::Absent {
                predicate: Predicate::Iassl,
                applies: Graph::is_complete_bipartite,
            },
        ),
        c(
            "no-connected-iassi",
            "No connected graph admits an IASSI.",
            Literal,
            Test::Absent {
                predicate: Predicate::Iassi,
                applies: Graph::is_connected,
            },
        ),
        c(
            "no-connected-iassi-nontrivial",
            "No connected graph on at least 2 vertices admits an IASSI.",
            Restated,
            Test::Absent {
                predicate: Predicate::Iassi,
                applies: |g| g.vertex_count() >= 2 && g.is_connected(),
            },
        ),
        c("tree-order", "A tree with an IASSL has 2^(|X|-1) vertices.", Literal, Test::Instance(tree_order)),
        c("iasgl-implies-iassl", "Every IASGL is an IASSL.", Literal, Test::Graceful(iasgl_implies_iassl)),
        c(
            "iassi-isolated-count",
            "A graph with an IASSI has exactly ρ′ isolated vertices.",
            Literal,
            Test::Instance(iassi_isolated_literal),
        ),
        c(
            "iassi-b-family-isolated",
            "In an IASSI every vertex labeled by a set in the B-family is isolated, so there are at least ρ′ isolated vertices.",
            Restated,
            Test::Instance(iassi_b_family_isolated),
        ),
        c(
            "iassi-isolated-converse",
            "A graph with exactly ρ′ isolated vertices admits an IASSI.",
            Literal,
            Test::IsolatedConverse,
        ),
        c(
            "iassl-existence",
            "Every ground set containing 0 has a graph with an IASSL.",
            Literal,
            Test::Instance(|i| constructed(i, Mode::Iassl)),
        ),
        c(
            "iassi-existence",
            "Every ground set containing 0 has a graph with an IASSI.",
            Literal,
            Test::Instance(|i| constructed(i, Mode::Iassi)),
        ),
    ]
}

pub fn claim_ids() -> Vec<&'static str> {
    claims().iter().map(|c| c.id).collect()
}

/// The first `|V|` subsets of X in canonical order; always an IASL when it exists.
fn injective_labeling(g: &Graph, x: &GroundSet) -> Option<LabeledGraph> {
    let alg = MaskAlgebra::new(x).ok()?;
    let masks = alg.canonical_masks();
    if g.vertex_count() > masks.len() {
        return None;
    }
    let labels = masks[..g.vertex_count()].iter().map(|&m| x.set_of_mask(m)).collect();
    LabeledGraph::with_labels(g.clone(), x.clone(), labels).ok()
}

#[derive(Default)]
struct Tally {
    tested: usize,
    passes: usize,
    witnesses: Vec<Witness>,
    failures: usize,
}

impl Tally {
    fn record(&mut self, outcome: Option<std::result::Result<(), (String, String, LabeledGraph)>>) {
        match outcome {
            None => {}
            Some(Ok(())) => {
                self.tested += 1;
                self.passes += 1;
            }
            Some(Err((source, detail, graph))) => {
                self.tested += 1;
                self.failures += 1;
                if self.witnesses.len() < MAX_WITNESSES {
                    self.witnesses.push(Witness { source, detail, graph });
                }
            }
        }
    }
}

fn evaluate(def: &ClaimDef, corpus: &Corpus) -> ClaimRecord {
    let mut t = Tally::default();
    let on_instance = |t: &mut Tally, f: fn(&Instance) -> Outcome, i: &Instance| {
        t.record(f(i).map(|r| r.map_err(|d| (i.source.clone(), d, i.graph.clone()))));
    };
    match &def.test {
        Test::Instance(f) => corpus.instances.iter().for_each(|i| on_instance(&mut t, *f, i)),
        Test::Graceful(f) => corpus.graceful.iter().for_each(|i| on_instance(&mut t, *f, i)),
        Test::Absent { predicate, applies } => {
            for cell in corpus.cells.iter().filter(|c| applies(&c.graph)) {
                let found = match predicate {
                    Predicate::Iasl => injective_labeling(&cell.graph, &cell.ground)
                        .map(|g| (format!("{} {}", cell.name, cell.ground), g)),
                    p => cell.solutions(*p).next().map(|i| (i.source.clone(), i.graph.clone())),
                };
                t.record(Some(match found {
                    None => Ok(()),
                    Some((source, graph)) => Err((source, format!("{} has an {predicate}", cell.name), graph)),
                }));
            }
        }
        Test::IsolatedConverse => {
            for cell in &corpus.cells {
                let rho_prime = cell.rho_prime();
                if cell.graph.isolated_count() != rho_prime || cell.truncated {
                    continue;
                }
                t.record(Some(if cell.solutions(Predicate::Iassi).next().is_some() {
                    Ok(())
                } else {
                    Err((
                        format!("{} {}", cell.name, cell.ground),
                        format!("{rho_prime} isolated vertices but no IASSI"),
                        LabeledGraph::new(cell.graph.clone(), cell.ground.clone()),
                    ))
                }));
            }
        }
    }
    let verdict = if t.tested == 0 {
        Verdict::Vacuous
    } else if t.failures > 0 {
        Verdict::Discrepant
    } else {
        Verdict::Confirmed
    };
    ClaimRecord {
        id: def.id.to_string(),
        statement: def.statement.to_string(),
        form: def.form,
        instances_tested: t.tested,
        passes: t.passes,
        failures: t.failures,
        verdict,
        witnesses: t.witnesses,
    }
}

/// One claim over a corpus; `None` for an unknown id.
pub fn audit_claim(id: &str, corpus: &Corpus) -> Option<ClaimRecord> {
    claims().iter().find(|c| c.id == id).map(|c| evaluate(c, corpus))
}

pub fn audit_identity(corpus: &Corpus) -> Vec<ClaimRecord> {
    ["identity-derivation", "identity-printed"]
        .iter()
        .filter_map(|id| audit_claim(id, corpus))
        .collect()
}

pub fn audit_parity(corpus: &Corpus) -> Option<ClaimRecord> {
    audit_claim("kappa-parity", corpus)
}

pub fn audit_tree_order(corpus: &Corpus) -> Option<ClaimRecord> {
    audit_claim("tree-order", corpus)
}

pub fn audit_corpus(bounds: AuditBounds, corpus: &Corpus) -> AuditReport {
    let defs = claims();
    let records = defs.par_iter().map(|d| evaluate(d, corpus)).collect();
    AuditReport {
        bounds,
        corpus: CorpusSummary {
            ground_sets: bounds.ground_sets().len(),
            instances: corpus.instances.len(),
            cells: corpus.cells.len(),
            truncated_cells: corpus.cells.iter().filter(|c| c.truncated).count(),
            iasgl_instances: corpus.graceful.len(),
        },
        claims: records,
    }
}

pub fn run_full_audit(bounds: AuditBounds) -> Result<AuditReport> {
    let corpus = Corpus::collect(&bounds)?;
    Ok(audit_corpus(bounds, &corpus))
}

/// Re-derives a witness from scratch: the labeling satisfies what the claim
/// assumes and the claim fails on it.
pub fn recheck_witness(claim_id: &str, w: &Witness) -> Result<bool> {
    let defs = claims();
    let def = defs
        .iter()
        .find(|c| c.id == claim_id)
        .ok_or_else(|| Error::Domain(format!("unknown claim {claim_id:?}")))?;
    let g = &w.graph;
    Ok(match &def.test {
        Test::Instance(f) | Test::Graceful(f) => {
            let i = Instance::new(w.source.clone(), g.clone())?;
            matches!(f(&i), Some(Err(_)))
        }
        Test::Absent { predicate, applies } => applies(g.graph()) && verify(g)?.holds(*predicate),
        Test::IsolatedConverse => {
            let opts = SearchOptions {
                max_ground: HARD_MAX_GROUND,
                max_vertices: MAX_ENUMERATED_ORDER,
                ..SearchOptions::new(Predicate::Iassi)
            };
            let r = find_labelings(g.graph(), g.ground(), &opts)?;
            let rho_prime = classify_powerset(g.ground())?.rho_prime();
            !r.found() && r.exhausted && g.graph().isolated_count() == rho_prime
        }
    })
}

/// Per-claim verdicts, for quick summaries.
pub fn verdicts(report: &AuditReport) -> BTreeMap<&str, Verdict> {
    report.claims.iter().map(|c| (c.id.as_str(), c.verdict)).collect()
}
