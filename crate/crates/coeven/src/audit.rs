//! Bound checks and corpus audits.
//!
//! Every inequality relating the co-even domination number of a graph to
//! that of its one-element modifications is evaluated here on concrete
//! (graph, element) instances, with exact integer arithmetic (window
//! midpoints are exact halves, never floats). Violations are first-class
//! results rather than errors: the harness reports what is true on the
//! corpus, and one of the audited bounds — the edge-contraction upper
//! bound — really is refuted, starting with K3.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::domination::coeven_domination_number;
use crate::graph::{Edge, Element, Graph, GraphError, VertexId};
use crate::graph6::emit_graph6;
use crate::transform::{contract_edge, contract_vertex, remove_edge, remove_vertex};

/// An exact half-integer: the value `twice / 2`. Serializes as an integer
/// when integral, else as the exact decimal (x.5 is exact in JSON).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub fn from_int(v: i64) -> HalfInt {
        HalfInt { twice: 2 * v }
    }

    /// The value `numerator / 2`.
    pub fn halves(numerator: i64) -> HalfInt {
        HalfInt { twice: numerator }
    }

    pub fn twice(&self) -> i64 {
        self.twice
    }

    pub fn le_int(&self, v: usize) -> bool {
        self.twice <= 2 * v as i64
    }

    pub fn ge_int(&self, v: usize) -> bool {
        self.twice >= 2 * v as i64
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}", self.twice as f64 / 2.0)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.twice % 2 == 0 {
            serializer.serialize_i64(self.twice / 2)
        } else {
            serializer.serialize_f64(self.twice as f64 / 2.0)
        }
    }
}

/// The checks the audit runs, also the `--op` vocabulary of the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    VertexRemoval,
    EdgeRemoval,
    VertexContraction,
    EdgeContraction,
    VertexCorollary,
    EdgeCorollary,
    Additivity,
}

impl CheckKind {
    pub fn tag(&self) -> &'static str {
        match self {
            CheckKind::VertexRemoval => "vertex-removal",
            CheckKind::EdgeRemoval => "edge-removal",
            CheckKind::VertexContraction => "vertex-contraction",
            CheckKind::EdgeContraction => "edge-contraction",
            CheckKind::VertexCorollary => "vertex-corollary",
            CheckKind::EdgeCorollary => "edge-corollary",
            CheckKind::Additivity => "additivity",
        }
    }

    pub fn is_transform(&self) -> bool {
        matches!(
            self,
            CheckKind::VertexRemoval
                | CheckKind::EdgeRemoval
                | CheckKind::VertexContraction
                | CheckKind::EdgeContraction
        )
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for CheckKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vertex-removal" => Ok(CheckKind::VertexRemoval),
            "edge-removal" => Ok(CheckKind::EdgeRemoval),
            "vertex-contraction" => Ok(CheckKind::VertexContraction),
            "edge-contraction" => Ok(CheckKind::EdgeContraction),
            "vertex-corollary" => Ok(CheckKind::VertexCorollary),
            "edge-corollary" => Ok(CheckKind::EdgeCorollary),
            "additivity" => Ok(CheckKind::Additivity),
            other => Err(format!("unknown operation `{other}`")),
        }
    }
}

/// How a recorded value sits against its window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    UpperEquality,
    LowerEquality,
    MidEquality,
    BaseEquality,
    UpperViolation,
    LowerViolation,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Relation::UpperEquality => "upper-equality",
            Relation::LowerEquality => "lower-equality",
            Relation::MidEquality => "mid-equality",
            Relation::BaseEquality => "base-equality",
            Relation::UpperViolation => "upper-violation",
            Relation::LowerViolation => "lower-violation",
        };
        f.write_str(tag)
    }
}

impl std::str::FromStr for Relation {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "upper-equality" => Ok(Relation::UpperEquality),
            "lower-equality" => Ok(Relation::LowerEquality),
            "mid-equality" => Ok(Relation::MidEquality),
            "base-equality" => Ok(Relation::BaseEquality),
            "upper-violation" => Ok(Relation::UpperViolation),
            "lower-violation" => Ok(Relation::LowerViolation),
            other => Err(format!("unknown relation `{other}`")),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AuditError {
    #[error("graph on {n} vertices exceeds the solver cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("operation {operation} expects a {expected} element")]
    ElementMismatch {
        operation: CheckKind,
        expected: &'static str,
    },
    #[error("relation {relation} is not meaningful for operation {operation}")]
    InvalidQuery {
        operation: CheckKind,
        relation: Relation,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One evaluated inequality on one (graph, element) instance.
///
/// For the four modifications the window brackets `transformed_value`; for
/// the combined corollary windows and additivity it brackets `base_value`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BoundCheck {
    pub operation: CheckKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<Element>,
    /// Co-even domination number of the graph itself.
    pub base_value: usize,
    /// Co-even domination number after the modification (for additivity,
    /// the sum over connected components).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transformed_value: Option<usize>,
    /// Corollary checks carry both one-element results instead.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub removal_value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contraction_value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub lower: HalfInt,
    pub upper: HalfInt,
    pub holds_lower: bool,
    pub holds_upper: bool,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.holds_lower && self.holds_upper
    }

    /// The value the window is judged against.
    fn judged_value(&self) -> usize {
        match self.operation {
            CheckKind::VertexCorollary | CheckKind::EdgeCorollary | CheckKind::Additivity => {
                self.base_value
            }
            _ => self.transformed_value.expect("transform checks carry it"),
        }
    }
}

/// A (graph, element, relation) instance recorded by a sharpness search or
/// a violation sweep, with the full check embedded.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct WitnessRecord {
    /// graph6 encoding of the unmodified graph.
    pub graph: String,
    pub relation: Relation,
    pub check: BoundCheck,
}

fn solve_value(g: &Graph) -> usize {
    coeven_domination_number(g).value
}

fn expect_vertex(op: CheckKind, element: Element) -> Result<VertexId, AuditError> {
    match element {
        Element::Vertex(v) => Ok(v),
        Element::Edge(_) => Err(AuditError::ElementMismatch {
            operation: op,
            expected: "vertex",
        }),
    }
}

fn expect_edge(op: CheckKind, element: Element) -> Result<Edge, AuditError> {
    match element {
        Element::Edge(e) => Ok(e),
        Element::Vertex(_) => Err(AuditError::ElementMismatch {
            operation: op,
            expected: "edge",
        }),
    }
}

/// Evaluate the window of one modification on one element, with
/// `base = gamma_coe(G)` supplied by the caller.
fn transform_check(
    g: &Graph,
    base: usize,
    element: Element,
    op: CheckKind,
) -> Result<BoundCheck, AuditError> {
    let b = base as i64;
    let (transformed, degree, lower, upper) = match op {
        CheckKind::VertexRemoval | CheckKind::VertexContraction => {
            let v = expect_vertex(op, element)?;
            let t = if op == CheckKind::VertexRemoval {
                remove_vertex(g, v)?
            } else {
                contract_vertex(g, v)?
            };
            let deg = g.degree(v)? as i64;
            (
                solve_value(&t.graph),
                Some(deg as usize),
                b - deg - 1,
                b + deg - 1,
            )
        }
        CheckKind::EdgeRemoval => {
            let e = expect_edge(op, element)?;
            let t = remove_edge(g, e)?;
            (solve_value(&t.graph), None, b - 2, b + 2)
        }
        CheckKind::EdgeContraction => {
            let e = expect_edge(op, element)?;
            let t = contract_edge(g, e)?;
            (solve_value(&t.graph), None, b - 2, b)
        }
        _ => unreachable!("transform_check only handles the four modifications"),
    };
    let lower = HalfInt::from_int(lower);
    let upper = HalfInt::from_int(upper);
    Ok(BoundCheck {
        operation: op,
        element: Some(element),
        base_value: base,
        transformed_value: Some(transformed),
        removal_value: None,
        contraction_value: None,
        degree,
        lower,
        upper,
        holds_lower: lower.le_int(transformed),
        holds_upper: upper.ge_int(transformed),
    })
}

/// Combined window from removal and contraction of one element, bracketing
/// the base value: the midpoint of the two results, widened by deg(v) + 1
/// for a vertex and by [-1, +2] for an edge. Midpoints stay exact halves.
fn corollary_check(
    g: &Graph,
    base: usize,
    element: Element,
    removal_value: usize,
    contraction_value: usize,
) -> Result<BoundCheck, AuditError> {
    let sum = (removal_value + contraction_value) as i64;
    let (op, degree, lower, upper) = match element {
        Element::Vertex(v) => {
            let deg = g.degree(v)? as i64;
            (
                CheckKind::VertexCorollary,
                Some(deg as usize),
                HalfInt::halves(sum - 2 * deg + 2),
                HalfInt::halves(sum + 2 * deg + 2),
            )
        }
        Element::Edge(_) => (
            CheckKind::EdgeCorollary,
            None,
            HalfInt::halves(sum - 2),
            HalfInt::halves(sum + 4),
        ),
    };
    Ok(BoundCheck {
        operation: op,
        element: Some(element),
        base_value: base,
        transformed_value: None,
        removal_value: Some(removal_value),
        contraction_value: Some(contraction_value),
        degree,
        lower,
        upper,
        holds_lower: lower.le_int(base),
        holds_upper: upper.ge_int(base),
    })
}

/// Window of one modification (or the combined corollary window) on one
/// element.
pub fn check_operation_bounds(
    g: &Graph,
    element: Element,
    op: CheckKind,
) -> Result<BoundCheck, AuditError> {
    let base = solve_value(g);
    match op {
        _ if op.is_transform() => transform_check(g, base, element, op),
        CheckKind::VertexCorollary => {
            let v = expect_vertex(op, element)?;
            let a = solve_value(&remove_vertex(g, v)?.graph);
            let b = solve_value(&contract_vertex(g, v)?.graph);
            corollary_check(g, base, element, a, b)
        }
        CheckKind::EdgeCorollary => {
            let e = expect_edge(op, element)?;
            let a = solve_value(&remove_edge(g, e)?.graph);
            let b = solve_value(&contract_edge(g, e)?.graph);
            corollary_check(g, base, element, a, b)
        }
        CheckKind::Additivity => Ok(check_additivity(g)),
        _ => unreachable!(),
    }
}

/// Equality of the co-even domination number with its sum over connected
/// components.
pub fn check_additivity(g: &Graph) -> BoundCheck {
    let base = solve_value(g);
    let sum: usize = g
        .component_masks()
        .into_iter()
        .map(|m| solve_value(&g.induced(m).0))
        .sum();
    let window = HalfInt::from_int(sum as i64);
    BoundCheck {
        operation: CheckKind::Additivity,
        element: None,
        base_value: base,
        transformed_value: Some(sum),
        removal_value: None,
        contraction_value: None,
        degree: None,
        lower: window,
        upper: window,
        holds_lower: window.le_int(base),
        holds_upper: window.ge_int(base),
    }
}

/// Every check on one graph: per vertex removal, contraction and the
/// combined window; per edge the same; additivity last. Vertices ascending,
/// then edges in lexicographic order.
pub fn audit_graph(g: &Graph, cap: usize) -> Result<Vec<BoundCheck>, AuditError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(AuditError::CapExceeded { n, cap });
    }
    let base = solve_value(g);
    let mut out = Vec::new();
    for v in g.vertices() {
        let element = Element::Vertex(v);
        let removal = transform_check(g, base, element, CheckKind::VertexRemoval)?;
        let contraction = transform_check(g, base, element, CheckKind::VertexContraction)?;
        let a = removal.transformed_value.unwrap();
        let b = contraction.transformed_value.unwrap();
        out.push(removal);
        out.push(contraction);
        out.push(corollary_check(g, base, element, a, b)?);
    }
    for e in g.edges() {
        let element = Element::Edge(e);
        let removal = transform_check(g, base, element, CheckKind::EdgeRemoval)?;
        let contraction = transform_check(g, base, element, CheckKind::EdgeContraction)?;
        let a = removal.transformed_value.unwrap();
        let b = contraction.transformed_value.unwrap();
        out.push(removal);
        out.push(contraction);
        out.push(corollary_check(g, base, element, a, b)?);
    }
    out.push(check_additivity(g));
    Ok(out)
}

/// Does `check` sit in `relation` to its window?
pub fn relation_achieved(check: &BoundCheck, relation: Relation) -> bool {
    let value = check.judged_value();
    match relation {
        Relation::UpperEquality => check.upper.twice() == 2 * value as i64,
        Relation::LowerEquality => check.lower.twice() == 2 * value as i64,
        Relation::BaseEquality => value == check.base_value,
        // only meaningful for edge contraction: one below the base value
        Relation::MidEquality => value as i64 == check.base_value as i64 - 1,
        Relation::UpperViolation => !check.holds_upper,
        Relation::LowerViolation => !check.holds_lower,
    }
}

fn validate_query(op: CheckKind, relation: Relation) -> Result<(), AuditError> {
    if !op.is_transform() || (relation == Relation::MidEquality && op != CheckKind::EdgeContraction)
    {
        return Err(AuditError::InvalidQuery {
            operation: op,
            relation,
        });
    }
    Ok(())
}

/// All witnesses of `relation` under `op` on one graph, elements in
/// deterministic order.
pub fn graph_witnesses(
    g: &Graph,
    op: CheckKind,
    relation: Relation,
) -> Result<Vec<WitnessRecord>, AuditError> {
    validate_query(op, relation)?;
    let g6 = emit_graph6(g).map_err(|_| AuditError::CapExceeded {
        n: g.vertex_count(),
        cap: crate::graph6::MAX_GRAPH6_VERTICES,
    })?;
    let base = solve_value(g);
    let elements: Vec<Element> = match op {
        CheckKind::VertexRemoval | CheckKind::VertexContraction => {
            g.vertices().map(Element::Vertex).collect()
        }
        _ => g.edges().into_iter().map(Element::Edge).collect(),
    };
    let mut out = Vec::new();
    for element in elements {
        let check = transform_check(g, base, element, op)?;
        if relation_achieved(&check, relation) {
            out.push(WitnessRecord {
                graph: g6.clone(),
                relation,
                check,
            });
        }
    }
    Ok(out)
}

/// Scan a stream of graphs for witnesses, preserving stream order, stopping
/// after `limit` records when given.
pub fn witness_search<I>(
    graphs: I,
    op: CheckKind,
    relation: Relation,
    limit: Option<usize>,
) -> Result<Vec<WitnessRecord>, AuditError>
where
    I: IntoIterator<Item = Graph>,
{
    validate_query(op, relation)?;
    let mut out = Vec::new();
    for g in graphs {
        if limit.is_some_and(|l| out.len() >= l) {
            break;
        }
        for w in graph_witnesses(&g, op, relation)? {
            out.push(w);
            if limit.is_some_and(|l| out.len() >= l) {
                break;
            }
        }
    }
    Ok(out)
}

/// Per-window tallies of one corpus audit.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: u64,
    pub held: u64,
    pub violated: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusError {
    /// Zero-based position in the input stream.
    pub index: usize,
    pub message: String,
}

/// Aggregated outcome of auditing a stream of graphs. Tallies are keyed by
/// `operation:side`; merging is associative, the violation list is sorted
/// by (graph order, graph6 encoding, element) regardless of schedule.
#[derive(Debug, Clone, Default, Serialize)]
pub struct AuditSummary {
    pub tallies: BTreeMap<String, Tally>,
    pub violations: Vec<WitnessRecord>,
    pub errors: Vec<CorpusError>,
}

impl AuditSummary {
    pub fn record(&mut self, g6: &str, check: &BoundCheck) {
        let op = check.operation.tag();
        for (side, holds, relation) in [
            ("lower", check.holds_lower, Relation::LowerViolation),
            ("upper", check.holds_upper, Relation::UpperViolation),
        ] {
            let tally = self.tallies.entry(format!("{op}:{side}")).or_default();
            tally.checked += 1;
            if holds {
                tally.held += 1;
            } else {
                tally.violated += 1;
                self.violations.push(WitnessRecord {
                    graph: g6.to_string(),
                    relation,
                    check: check.clone(),
                });
            }
        }
    }

    pub fn record_error(&mut self, index: usize, message: String) {
        self.errors.push(CorpusError { index, message });
    }

    pub fn merge(&mut self, other: AuditSummary) {
        for (key, t) in other.tallies {
            let tally = self.tallies.entry(key).or_default();
            tally.checked += t.checked;
            tally.held += t.held;
            tally.violated += t.violated;
        }
        self.violations.extend(other.violations);
        self.errors.extend(other.errors);
    }

    /// Sort the violation list into its canonical order. graph6 strings sort
    /// by graph order first because the header byte encodes n.
    pub fn finish(&mut self) {
        self.violations
            .sort_by(|a, b| (&a.graph, &a.check, a.relation).cmp(&(&b.graph, &b.check, b.relation)));
        self.errors.sort_by_key(|e| e.index);
    }

    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }
}

/// Audit a whole stream; malformed entries are recorded and skipped, the
/// audit continues.
pub fn audit_corpus<I, E>(graphs: I, cap: usize) -> AuditSummary
where
    I: IntoIterator<Item = Result<Graph, E>>,
    E: fmt::Display,
{
    let mut summary = AuditSummary::default();
    for (index, item) in graphs.into_iter().enumerate() {
        match item {
            Err(e) => summary.record_error(index, e.to_string()),
            Ok(g) => match audit_graph(&g, cap) {
                Err(e) => summary.record_error(index, e.to_string()),
                Ok(checks) => {
                    let g6 = emit_graph6(&g).expect("within cap implies within graph6 range");
                    for check in &checks {
                        summary.record(&g6, check);
                    }
                }
            },
        }
    }
    summary.finish();
    summary
}
