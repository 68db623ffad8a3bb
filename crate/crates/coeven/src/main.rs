//! Command-line harness: graph6 lines in, JSON lines out.
//!
//! Exit status is the strongest condition met: 1 for any error, 2 when an
//! audit found violations, 0 otherwise.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use coeven::{
    audit_graph, check_operation_bounds, coeven_domination_number, domination_number,
    edge_contraction_lift, edge_removal_lift, emit_graph6, enumerate_labeled, gnp, graph_witnesses,
    parse_graph6, strip_file_header, vertex_contraction_lift, vertex_removal_lift, AuditSummary,
    BoundCheck, CandidateCert, CheckKind, Edge, Element, Graph, LiftDirection, Relation,
    TransformResult, VertexId, DEFAULT_SOLVER_CAP,
};

#[derive(Parser)]
#[command(
    name = "coeven",
    about = "Exact co-even domination solver and bound-audit harness",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Input file of graph6 lines, `-` for stdin
    #[arg(short, long, default_value = "-")]
    input: String,
    /// Output file, stdout when omitted
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Args)]
struct CorpusArgs {
    /// Solver cap: refuse graphs with more vertices
    #[arg(long, default_value_t = DEFAULT_SOLVER_CAP)]
    cap: usize,
    /// Worker threads for corpus processing
    #[arg(short, long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy)]
struct ElementArgs {
    vertex: Option<VertexId>,
    edge: Option<(VertexId, VertexId)>,
}

#[derive(Subcommand)]
enum Command {
    /// Solve gamma and gamma_coe for each input graph
    Solve {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Apply one modification to each input graph
    Transform {
        #[command(flatten)]
        io: IoArgs,
        /// vertex-removal | edge-removal | vertex-contraction | edge-contraction
        #[arg(long)]
        op: CheckKind,
        #[arg(long)]
        vertex: Option<VertexId>,
        /// Edge as `u,v`
        #[arg(long, value_parser = parse_edge_arg)]
        edge: Option<(VertexId, VertexId)>,
    },
    /// Lift the optimal certificate across one modification
    Lift {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        op: CheckKind,
        #[arg(long)]
        vertex: Option<VertexId>,
        #[arg(long, value_parser = parse_edge_arg)]
        edge: Option<(VertexId, VertexId)>,
        #[arg(long)]
        direction: LiftDirection,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Check every window on each input graph (exit 2 when violated)
    Audit {
        #[command(flatten)]
        io: IoArgs,
        /// Restrict to one check kind
        #[arg(long)]
        op: Option<CheckKind>,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Search input graphs for elements achieving a relation
    Witness {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        op: CheckKind,
        #[arg(long)]
        relation: Relation,
        /// Stop after this many records
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Generate graph6 corpora
    Gen {
        /// `all` for exhaustive labeled enumeration, `gnp` for random graphs
        #[arg(long)]
        model: String,
        #[arg(long)]
        n: usize,
        /// Edge probability for gnp
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of gnp samples (seeds seed, seed+1, ...)
        #[arg(long, default_value_t = 1)]
        limit: usize,
        #[arg(short, long)]
        output: Option<String>,
    },
}

fn parse_edge_arg(s: &str) -> Result<(VertexId, VertexId), String> {
    let (u, v) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `u,v`, got `{s}`"))?;
    let u = u.trim().parse().map_err(|e| format!("bad vertex `{u}`: {e}"))?;
    let v = v.trim().parse().map_err(|e| format!("bad vertex `{v}`: {e}"))?;
    if u == v {
        return Err("edge endpoints must differ".into());
    }
    Ok((u, v))
}

fn element_for(g: &Graph, op: CheckKind, args: ElementArgs) -> anyhow::Result<Element> {
    match op {
        CheckKind::VertexRemoval | CheckKind::VertexContraction => {
            let v = args
                .vertex
                .with_context(|| format!("--vertex required for {op}"))?;
            if v >= g.vertex_count() {
                bail!("vertex {v} out of range for a graph on {} vertices", g.vertex_count());
            }
            Ok(Element::Vertex(v))
        }
        CheckKind::EdgeRemoval | CheckKind::EdgeContraction => {
            let (u, v) = args.edge.with_context(|| format!("--edge required for {op}"))?;
            Ok(Element::Edge(Edge::new(u, v)?))
        }
        _ => unreachable!("callers reject non-transform operations first"),
    }
}

/// One processed input line: its JSON output lines plus status flags.
#[derive(Default)]
struct LineOutcome {
    lines: Vec<String>,
    violation: bool,
    error: bool,
}

#[derive(Serialize)]
struct ErrorLine<'a> {
    line: usize,
    error: &'a str,
}

fn error_outcome(line_no: usize, message: &str) -> LineOutcome {
    LineOutcome {
        lines: vec![serde_json::to_string(&ErrorLine {
            line: line_no,
            error: message,
        })
        .expect("serializable")],
        violation: false,
        error: true,
    }
}

/// Read graph6 lines, hand each to `work`, write outputs in input order.
/// Blank lines and the optional `>>graph6<<` header are skipped. With
/// `jobs > 1` lines are processed in parallel chunks.
fn drive<F>(io: &IoArgs, jobs: usize, work: F) -> anyhow::Result<(bool, bool)>
where
    F: Fn(usize, Graph) -> LineOutcome + Sync,
{
    let reader: Box<dyn Read> = if io.input == "-" {
        Box::new(io::stdin().lock())
    } else {
        Box::new(File::open(&io.input).with_context(|| format!("cannot open {}", io.input))?)
    };
    let mut writer = open_output(io.output.as_deref())?;

    let handle = |line_no: usize, raw: &str| -> Option<LineOutcome> {
        let line = strip_file_header(raw.trim_end_matches(['\r', '\n']));
        if line.is_empty() {
            return None; // blank line or a bare file header
        }
        Some(match parse_graph6(line) {
            Ok(g) => work(line_no, g),
            Err(e) => error_outcome(line_no, &e.to_string()),
        })
    };

    let mut any_violation = false;
    let mut any_error = false;
    let mut processed = 0u64;
    let mut emit = |outcome: Option<LineOutcome>, writer: &mut dyn Write| -> anyhow::Result<()> {
        if let Some(out) = outcome {
            any_violation |= out.violation;
            any_error |= out.error;
            for l in out.lines {
                writeln!(writer, "{l}")?;
            }
        }
        processed += 1;
        if processed % 100_000 == 0 {
            eprintln!("{processed} lines processed");
        }
        Ok(())
    };

    let lines = BufReader::new(reader).lines();
    if jobs <= 1 {
        for (idx, line) in lines.enumerate() {
            let line = line.context("read error")?;
            emit(handle(idx + 1, &line), &mut writer)?;
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .context("cannot build worker pool")?;
        let mut numbered = lines.enumerate();
        loop {
            let chunk: Vec<(usize, String)> = numbered
                .by_ref()
                .take(4096)
                .map(|(idx, l)| Ok((idx + 1, l?)))
                .collect::<Result<_, io::Error>>()?;
            if chunk.is_empty() {
                break;
            }
            let outcomes: Vec<Option<LineOutcome>> = pool.install(|| {
                use rayon::prelude::*;
                chunk
                    .par_iter()
                    .map(|(no, line)| handle(*no, line))
                    .collect()
            });
            for outcome in outcomes {
                emit(outcome, &mut writer)?;
            }
        }
    }
    writer.flush()?;
    Ok((any_violation, any_error))
}

fn open_output(path: Option<&str>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {p}"))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

#[derive(Serialize)]
struct SolveLine {
    n: usize,
    gamma: usize,
    gamma_coe: usize,
    certificate: Vec<VertexId>,
}

#[derive(Serialize)]
struct TransformLine<'a> {
    input: &'a str,
    operation: CheckKind,
    element: Element,
    output: String,
    mapping: &'a [Option<VertexId>],
    merged_into: Option<VertexId>,
}

#[derive(Serialize)]
struct LiftLine<'a> {
    input: &'a str,
    operation: CheckKind,
    element: Element,
    direction: LiftDirection,
    certificate: Vec<VertexId>,
    candidate: &'a CandidateCert,
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("record types serialize")
}

fn run_solve(io: &IoArgs, corpus: &CorpusArgs) -> anyhow::Result<ExitCode> {
    let status = drive(io, corpus.jobs, |line_no, g| {
        if g.vertex_count() > corpus.cap {
            return error_outcome(
                line_no,
                &format!(
                    "graph on {} vertices exceeds the solver cap {}",
                    g.vertex_count(),
                    corpus.cap
                ),
            );
        }
        let gamma = domination_number(&g);
        let coe = coeven_domination_number(&g);
        LineOutcome {
            lines: vec![json_line(&SolveLine {
                n: g.vertex_count(),
                gamma: gamma.value,
                gamma_coe: coe.value,
                certificate: coe.certificate,
            })],
            ..Default::default()
        }
    })?;
    Ok(exit_code(status))
}

fn run_transform(io: &IoArgs, op: CheckKind, args: ElementArgs) -> anyhow::Result<ExitCode> {
    if !op.is_transform() {
        bail!("transform expects one of the four modification operations, got {op}");
    }
    let status = drive(io, 1, |line_no, g| {
        let run = || -> anyhow::Result<(Element, TransformResult)> {
            let element = element_for(&g, op, args)?;
            let t = match (op, element) {
                (CheckKind::VertexRemoval, Element::Vertex(v)) => coeven::remove_vertex(&g, v)?,
                (CheckKind::VertexContraction, Element::Vertex(v)) => {
                    coeven::contract_vertex(&g, v)?
                }
                (CheckKind::EdgeRemoval, Element::Edge(e)) => coeven::remove_edge(&g, e)?,
                (CheckKind::EdgeContraction, Element::Edge(e)) => coeven::contract_edge(&g, e)?,
                _ => unreachable!(),
            };
            Ok((element, t))
        };
        match run() {
            Err(e) => error_outcome(line_no, &format!("{e:#}")),
            Ok((element, t)) => {
                let input = emit_graph6(&g).expect("input was parsed from graph6");
                LineOutcome {
                    lines: vec![json_line(&TransformLine {
                        input: &input,
                        operation: op,
                        element,
                        output: emit_graph6(&t.graph).expect("transform shrinks or keeps n"),
                        mapping: &t.mapping,
                        merged_into: t.merged_into,
                    })],
                    ..Default::default()
                }
            }
        }
    })?;
    Ok(exit_code(status))
}

fn run_lift(
    io: &IoArgs,
    op: CheckKind,
    args: ElementArgs,
    direction: LiftDirection,
    corpus: &CorpusArgs,
) -> anyhow::Result<ExitCode> {
    if !op.is_transform() {
        bail!("lift expects one of the four modification operations, got {op}");
    }
    let status = drive(io, corpus.jobs, |line_no, g| {
        let run = || -> anyhow::Result<(Element, Vec<VertexId>, CandidateCert)> {
            if g.vertex_count() > corpus.cap {
                bail!(
                    "graph on {} vertices exceeds the solver cap {}",
                    g.vertex_count(),
                    corpus.cap
                );
            }
            let element = element_for(&g, op, args)?;
            // the lifted certificate is the optimal one on the source side
            let source = match direction {
                LiftDirection::Forward => g.clone(),
                LiftDirection::Backward => match (op, element) {
                    (CheckKind::VertexRemoval, Element::Vertex(v)) => {
                        coeven::remove_vertex(&g, v)?.graph
                    }
                    (CheckKind::VertexContraction, Element::Vertex(v)) => {
                        coeven::contract_vertex(&g, v)?.graph
                    }
                    (CheckKind::EdgeRemoval, Element::Edge(e)) => coeven::remove_edge(&g, e)?.graph,
                    (CheckKind::EdgeContraction, Element::Edge(e)) => {
                        coeven::contract_edge(&g, e)?.graph
                    }
                    _ => unreachable!(),
                },
            };
            let certificate = coeven_domination_number(&source).certificate;
            let cert = match (op, element) {
                (CheckKind::VertexRemoval, Element::Vertex(v)) => {
                    vertex_removal_lift(&g, v, &certificate, direction)?
                }
                (CheckKind::VertexContraction, Element::Vertex(v)) => {
                    vertex_contraction_lift(&g, v, &certificate, direction)?
                }
                (CheckKind::EdgeRemoval, Element::Edge(e)) => {
                    edge_removal_lift(&g, e, &certificate, direction)?
                }
                (CheckKind::EdgeContraction, Element::Edge(e)) => {
                    edge_contraction_lift(&g, e, &certificate, direction)?
                }
                _ => unreachable!(),
            };
            Ok((element, certificate, cert))
        };
        match run() {
            Err(e) => error_outcome(line_no, &format!("{e:#}")),
            Ok((element, certificate, candidate)) => {
                let input = emit_graph6(&g).expect("parsed from graph6");
                LineOutcome {
                    lines: vec![json_line(&LiftLine {
                        input: &input,
                        operation: op,
                        element,
                        direction,
                        certificate,
                        candidate: &candidate,
                    })],
                    ..Default::default()
                }
            }
        }
    })?;
    Ok(exit_code(status))
}

fn run_audit(io: &IoArgs, op: Option<CheckKind>, corpus: &CorpusArgs) -> anyhow::Result<ExitCode> {
    let summary = std::sync::Mutex::new(AuditSummary::default());
    let status = drive(io, corpus.jobs, |line_no, g| {
        let checks: Result<Vec<BoundCheck>, _> = match op {
            None => audit_graph(&g, corpus.cap),
            Some(kind) => {
                if g.vertex_count() > corpus.cap {
                    Err(coeven::AuditError::CapExceeded {
                        n: g.vertex_count(),
                        cap: corpus.cap,
                    })
                } else {
                    audit_one_kind(&g, kind)
                }
            }
        };
        match checks {
            Err(e) => {
                summary.lock().unwrap().record_error(line_no, e.to_string());
                error_outcome(line_no, &e.to_string())
            }
            Ok(checks) => {
                let g6 = emit_graph6(&g).expect("parsed from graph6");
                let mut s = summary.lock().unwrap();
                for c in &checks {
                    s.record(&g6, c);
                }
                LineOutcome {
                    violation: checks.iter().any(|c| !c.holds()),
                    lines: checks.iter().map(json_line).collect(),
                    error: false,
                }
            }
        }
    })?;
    let mut summary = summary.into_inner().unwrap();
    summary.finish();
    eprintln!("{}", json_line(&summary.tallies));
    Ok(exit_code(status))
}

/// All checks of one kind on one graph, elements in deterministic order.
fn audit_one_kind(g: &Graph, kind: CheckKind) -> Result<Vec<BoundCheck>, coeven::AuditError> {
    match kind {
        CheckKind::Additivity => Ok(vec![coeven::check_additivity(g)]),
        CheckKind::VertexRemoval | CheckKind::VertexContraction | CheckKind::VertexCorollary => g
            .vertices()
            .map(|v| check_operation_bounds(g, Element::Vertex(v), kind))
            .collect(),
        _ => g
            .edges()
            .into_iter()
            .map(|e| check_operation_bounds(g, Element::Edge(e), kind))
            .collect(),
    }
}

fn run_witness(
    io: &IoArgs,
    op: CheckKind,
    relation: Relation,
    limit: Option<usize>,
    corpus: &CorpusArgs,
) -> anyhow::Result<ExitCode> {
    // validate the query before touching the input
    coeven::witness_search(Vec::<Graph>::new(), op, relation, None)
        .map_err(|e| anyhow::anyhow!(e.to_string()))?;
    // an early stop is inherently sequential; ignore --jobs when limited
    let jobs = if limit.is_some() { 1 } else { corpus.jobs };
    let emitted = std::sync::atomic::AtomicUsize::new(0);
    let status = drive(io, jobs, |line_no, g| {
        if limit.is_some_and(|l| emitted.load(std::sync::atomic::Ordering::SeqCst) >= l) {
            return LineOutcome::default();
        }
        if g.vertex_count() > corpus.cap {
            return error_outcome(
                line_no,
                &format!(
                    "graph on {} vertices exceeds the solver cap {}",
                    g.vertex_count(),
                    corpus.cap
                ),
            );
        }
        match graph_witnesses(&g, op, relation) {
            Err(e) => error_outcome(line_no, &e.to_string()),
            Ok(mut records) => {
                if let Some(l) = limit {
                    let used = emitted.fetch_add(records.len(), std::sync::atomic::Ordering::SeqCst);
                    records.truncate(l.saturating_sub(used));
                }
                LineOutcome {
                    lines: records.iter().map(json_line).collect(),
                    ..Default::default()
                }
            }
        }
    })?;
    Ok(exit_code(status))
}

fn run_gen(
    model: &str,
    n: usize,
    p: f64,
    seed: u64,
    limit: usize,
    output: Option<&str>,
) -> anyhow::Result<ExitCode> {
    let mut writer = open_output(output)?;
    match model {
        "all" => {
            for g in enumerate_labeled(n)? {
                writeln!(writer, "{}", emit_graph6(&g)?)?;
            }
        }
        "gnp" => {
            for i in 0..limit {
                let g = gnp(n, p, seed + i as u64)?;
                writeln!(writer, "{}", emit_graph6(&g)?)?;
            }
        }
        other => bail!("unknown model `{other}` (all|gnp)"),
    }
    writer.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn exit_code((violation, error): (bool, bool)) -> ExitCode {
    if error {
        ExitCode::from(1)
    } else if violation {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve { io, corpus } => run_solve(io, corpus),
        Command::Transform { io, op, vertex, edge } => run_transform(
            io,
            *op,
            ElementArgs {
                vertex: *vertex,
                edge: *edge,
            },
        ),
        Command::Lift {
            io,
            op,
            vertex,
            edge,
            direction,
            corpus,
        } => run_lift(
            io,
            *op,
            ElementArgs {
                vertex: *vertex,
                edge: *edge,
            },
            *direction,
            corpus,
        ),
        Command::Audit { io, op, corpus } => run_audit(io, *op, corpus),
        Command::Witness {
            io,
            op,
            relation,
            limit,
            corpus,
        } => run_witness(io, *op, *relation, *limit, corpus),
        Command::Gen {
            model,
            n,
            p,
            seed,
            limit,
            output,
        } => run_gen(model, *n, *p, *seed, *limit, output.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
