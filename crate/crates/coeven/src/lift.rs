//! Certificate lifting across the four graph modifications.
//!
//! Each lift takes a co-even dominating set on one side of a modification
//! and builds the candidate set the constructive bound argument prescribes
//! on the other side, together with the size ceiling that argument claims.
//! Whether the candidate really is co-even dominating is then *checked*,
//! never assumed: for vertex removal, edge removal and vertex contraction
//! the construction is sound and `valid` always comes back true, but for
//! edge contraction a shared neighbour of the endpoints loses a degree and
//! can flip parity outside the candidate, so `valid` may honestly be false.

use serde::Serialize;

use crate::domination::is_coeven_dominating_set;
use crate::graph::{Edge, Graph, GraphError, VertexId};
use crate::transform::{contract_edge, contract_vertex, remove_edge, remove_vertex, TransformResult};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LiftError {
    #[error("certificate is not a co-even dominating set of the {side} graph")]
    InvalidCertificate { side: &'static str },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which way the certificate travels: `Forward` lifts a certificate of G to
/// the modified graph, `Backward` lifts one of the modified graph to G.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiftDirection {
    Forward,
    Backward,
}

impl std::str::FromStr for LiftDirection {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "forward" => Ok(LiftDirection::Forward),
            "backward" => Ok(LiftDirection::Backward),
            other => Err(format!("unknown direction `{other}` (forward|backward)")),
        }
    }
}

/// Which branch of the constructive case split produced the candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiftCase {
    I,
    Ii,
    Iii,
    Backward,
}

/// A candidate certificate produced by a lift, with its verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateCert {
    /// Sorted vertex set in the target graph's labels.
    pub vertex_set: Vec<VertexId>,
    /// Result of the co-even dominating predicate on the target graph.
    pub valid: bool,
    /// The size ceiling the construction claims.
    pub claimed_bound: i64,
    /// `|vertex_set| <= claimed_bound`.
    pub within_bound: bool,
    pub proof_case: LiftCase,
}

fn require_coeven(g: &Graph, set: &[VertexId], side: &'static str) -> Result<(), LiftError> {
    if is_coeven_dominating_set(g, set)? {
        Ok(())
    } else {
        Err(LiftError::InvalidCertificate { side })
    }
}

fn finish(target: &Graph, mut candidate: Vec<VertexId>, claimed_bound: i64, case: LiftCase) -> CandidateCert {
    candidate.sort_unstable();
    candidate.dedup();
    let valid = is_coeven_dominating_set(target, &candidate).expect("candidate ids are in range");
    CandidateCert {
        within_bound: candidate.len() as i64 <= claimed_bound,
        vertex_set: candidate,
        valid,
        claimed_bound,
        proof_case: case,
    }
}

/// Old ids whose image under `t` lies in `set`.
fn unmap(t: &TransformResult, set: &[VertexId]) -> Vec<VertexId> {
    t.preimage(set)
}

/// Lift a certificate across vertex removal.
///
/// Forward: every neighbour of `v` joins the set and `v` itself drops out,
/// a set of size at most |D| + deg(v) - 1. Backward: the closed
/// neighbourhood of `v` joins, at most |D| + deg(v) + 1.
pub fn vertex_removal_lift(
    g: &Graph,
    v: VertexId,
    certificate: &[VertexId],
    direction: LiftDirection,
) -> Result<CandidateCert, LiftError> {
    let t = remove_vertex(g, v)?;
    let deg = g.degree(v).expect("checked by transform") as i64;
    vertex_lift(g, v, deg, t, certificate, direction)
}

/// Lift a certificate across vertex contraction. Same set algebra as
/// vertex removal, with the clique on N(v) underneath; the case split runs
/// on the parity of deg(v) in the reverse order.
pub fn vertex_contraction_lift(
    g: &Graph,
    v: VertexId,
    certificate: &[VertexId],
    direction: LiftDirection,
) -> Result<CandidateCert, LiftError> {
    let t = contract_vertex(g, v)?;
    let deg = g.degree(v).expect("checked by transform") as i64;
    let mut cert = vertex_lift(g, v, deg, t, certificate, direction)?;
    if direction == LiftDirection::Forward {
        cert.proof_case = match cert.proof_case {
            // odd degree leads the case split here
            LiftCase::Iii => LiftCase::I,
            LiftCase::Ii => LiftCase::Ii,
            LiftCase::I => LiftCase::Iii,
            LiftCase::Backward => LiftCase::Backward,
        };
    }
    Ok(cert)
}

fn vertex_lift(
    g: &Graph,
    v: VertexId,
    deg: i64,
    t: TransformResult,
    certificate: &[VertexId],
    direction: LiftDirection,
) -> Result<CandidateCert, LiftError> {
    match direction {
        LiftDirection::Forward => {
            require_coeven(g, certificate, "original")?;
            let in_cert = certificate.contains(&v);
            let case = if deg % 2 == 1 {
                LiftCase::Iii
            } else if in_cert {
                LiftCase::Ii
            } else {
                LiftCase::I
            };
            let mut cand: Vec<VertexId> = certificate.to_vec();
            cand.extend(g.neighborhood(v, false).expect("in range"));
            cand.retain(|&x| x != v);
            Ok(finish(
                &t.graph,
                t.map_set(&cand),
                certificate.len() as i64 + deg - 1,
                case,
            ))
        }
        LiftDirection::Backward => {
            require_coeven(&t.graph, certificate, "transformed")?;
            let mut cand = unmap(&t, certificate);
            cand.extend(g.neighborhood(v, true).expect("in range"));
            Ok(finish(
                g,
                cand,
                certificate.len() as i64 + deg + 1,
                LiftCase::Backward,
            ))
        }
    }
}

/// Lift a certificate across edge removal.
///
/// Forward: the endpoints join the set (they are the only vertices whose
/// parity changed), at most |D| plus the number of endpoints previously
/// outside. Backward: the endpoints join, at most |D| + 2.
pub fn edge_removal_lift(
    g: &Graph,
    e: Edge,
    certificate: &[VertexId],
    direction: LiftDirection,
) -> Result<CandidateCert, LiftError> {
    let t = remove_edge(g, e)?;
    let (u, v) = e.endpoints();
    match direction {
        LiftDirection::Forward => {
            require_coeven(g, certificate, "original")?;
            let inside = [u, v]
                .iter()
                .filter(|x| certificate.contains(x))
                .count();
            let case = match inside {
                0 => LiftCase::I,
                1 => LiftCase::Ii,
                _ => LiftCase::Iii,
            };
            let mut cand = certificate.to_vec();
            cand.extend([u, v]);
            Ok(finish(
                &t.graph,
                cand,
                certificate.len() as i64 + (2 - inside as i64),
                case,
            ))
        }
        LiftDirection::Backward => {
            require_coeven(&t.graph, certificate, "transformed")?;
            let mut cand = certificate.to_vec();
            cand.extend([u, v]);
            Ok(finish(g, cand, certificate.len() as i64 + 2, LiftCase::Backward))
        }
    }
}

/// Lift a certificate across edge contraction.
///
/// Forward: the certificate is pushed through the merge; the merge vertex
/// stands in whenever an endpoint was inside, giving ceilings |D| (at most
/// one endpoint inside) or |D| - 1 (both inside). Backward: the merge
/// vertex is replaced by both endpoints, ceiling |D| + 2. In each direction
/// a common neighbour of the endpoints can flip parity outside the
/// candidate, so `valid` is reported, not presumed.
pub fn edge_contraction_lift(
    g: &Graph,
    e: Edge,
    certificate: &[VertexId],
    direction: LiftDirection,
) -> Result<CandidateCert, LiftError> {
    let t = contract_edge(g, e)?;
    let (u, v) = e.endpoints();
    let w = t.merged_into.expect("edge contraction always merges");
    match direction {
        LiftDirection::Forward => {
            require_coeven(g, certificate, "original")?;
            let inside = [u, v]
                .iter()
                .filter(|x| certificate.contains(x))
                .count();
            let (case, bound) = match inside {
                0 => (LiftCase::I, certificate.len() as i64),
                1 => (LiftCase::Ii, certificate.len() as i64),
                _ => (LiftCase::Iii, certificate.len() as i64 - 1),
            };
            Ok(finish(&t.graph, t.map_set(certificate), bound, case))
        }
        LiftDirection::Backward => {
            require_coeven(&t.graph, certificate, "transformed")?;
            let kept: Vec<VertexId> = certificate.iter().copied().filter(|&x| x != w).collect();
            let mut cand = unmap(&t, &kept);
            cand.extend([u, v]);
            Ok(finish(g, cand, certificate.len() as i64 + 2, LiftCase::Backward))
        }
    }
}
