//! Executable checks of the structural results on concrete graphs and
//! drawings.
//!
//! Every check has a hypothesis; when it does not hold the check is
//! reported as not applicable, never as passed. Failed checks carry one
//! witness per offending configuration.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::drawing::{validate_drawing, Crossing, CycleInPlane, DrawingData, OnePlaneDrawing, Violation};
use crate::graph::{Edge, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "n/a",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    /// For failures, one entry per violation; passing checks may carry
    /// supporting evidence.
    pub witnesses: Vec<String>,
}

impl Check {
    fn not_applicable(name: &'static str) -> Self {
        Check {
            name,
            status: Status::NotApplicable,
            witnesses: Vec::new(),
        }
    }

    /// Fails with the given violations, passes when there are none.
    fn from_violations(name: &'static str, witnesses: Vec<String>) -> Self {
        let status = if witnesses.is_empty() { Status::Pass } else { Status::Fail };
        Check { name, status, witnesses }
    }

    fn verdict(name: &'static str, ok: bool, witness: String) -> Self {
        Check {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            witnesses: vec![witness],
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub checks: Vec<Check>,
}

impl AuditReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn merge(&mut self, other: AuditReport) {
        self.checks.extend(other.checks);
    }

    /// One `check status [witness]` line per check, or per witness of a
    /// failed check.
    pub fn machine_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for c in &self.checks {
            match (c.status, c.witnesses.as_slice()) {
                (Status::Fail, ws) if !ws.is_empty() => {
                    out.extend(ws.iter().map(|w| format!("{} fail {w}", c.name)));
                }
                (_, [w, ..]) => out.push(format!("{} {} {w}", c.name, c.status.label())),
                _ => out.push(format!("{} {}", c.name, c.status.label())),
            }
        }
        out
    }

    pub fn render_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:width$}  {:4}", c.name, c.status.label()));
            match c.status {
                Status::Fail => out.push_str(&format!("  {} violation(s)", c.witnesses.len())),
                _ => {
                    if let Some(w) = c.witnesses.first() {
                        out.push_str(&format!("  {w}"));
                    }
                }
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("drawing is of a different graph")]
    BaseMismatch,
    #[error("assumed connectivity {assumed} exceeds the actual connectivity {actual}")]
    KappaTooHigh { assumed: usize, actual: usize },
    #[error("unknown mutation operator {0:?}")]
    UnknownOperator(String),
    #[error("operator {0} does not apply to this drawing")]
    Inapplicable(&'static str),
}

pub const MAX_DEGREE_10: &str = "max-degree-at-most-10";
pub const MAX_DEGREE_8: &str = "max-degree-at-most-8-if-6-connected";
pub const CONNECTIVITY_6: &str = "connectivity-at-most-6";
pub const CLAW_IF_7_CONNECTED: &str = "claw-if-7-connected";

/// The degree and connectivity bounds for claw-free 1-plane graphs, and the
/// induced claw forced by connectivity 7. All need a drawing.
pub fn audit_theorems(g: &Graph, drawing: Option<&OnePlaneDrawing>) -> Result<AuditReport, AuditError> {
    if let Some(d) = drawing {
        if d.base() != g {
            return Err(AuditError::BaseMismatch);
        }
    }
    let drawn = drawing.is_some();
    let claw = g.find_induced_claw();
    let claw_free = claw.is_none();
    let kappa = g.vertex_connectivity();
    let delta = g.max_degree();
    let top = g.vertices().max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
    let degree_witness = match top {
        Some(v) => format!("d({})={delta}", g.name(v)),
        None => "empty".to_string(),
    };

    let mut checks = Vec::new();
    checks.push(if claw_free && drawn {
        Check::verdict(MAX_DEGREE_10, delta <= 10, degree_witness.clone())
    } else {
        Check::not_applicable(MAX_DEGREE_10)
    });
    checks.push(if claw_free && drawn && kappa >= 6 {
        Check::verdict(MAX_DEGREE_8, delta <= 8, degree_witness)
    } else {
        Check::not_applicable(MAX_DEGREE_8)
    });
    checks.push(if claw_free && drawn {
        Check::verdict(CONNECTIVITY_6, kappa <= 6, format!("kappa={kappa}"))
    } else {
        Check::not_applicable(CONNECTIVITY_6)
    });
    checks.push(if drawn && kappa >= 7 {
        match claw {
            Some(w) => Check::verdict(CLAW_IF_7_CONNECTED, true, w.render(g)),
            None => Check::verdict(CLAW_IF_7_CONNECTED, false, format!("kappa={kappa} and no claw")),
        }
    } else {
        Check::not_applicable(CLAW_IF_7_CONNECTED)
    });
    Ok(AuditReport { checks })
}

fn check_assumed(d: &OnePlaneDrawing, assumed_kappa: usize) -> Result<(), AuditError> {
    let actual = d.base().vertex_connectivity();
    if assumed_kappa > actual {
        return Err(AuditError::KappaTooHigh {
            assumed: assumed_kappa,
            actual,
        });
    }
    Ok(())
}

pub const FAKE_TRIANGLES: &str = "fake-triangles-nonseparating";
pub const TYPE_I_FOUR_CYCLES: &str = "type-i-4-cycles-nonseparating";
pub const ALL_TRIANGLES: &str = "triangles-nonseparating";

/// Non-separating cycles of the planarization: triangles through one fake
/// vertex at connectivity 4, type-I 4-cycles at 6, every triangle at 7.
pub fn audit_lemma3(d: &OnePlaneDrawing, assumed_kappa: usize) -> Result<AuditReport, AuditError> {
    check_assumed(d, assumed_kappa)?;
    Ok(audit_lemma3_unchecked(d, assumed_kappa))
}

/// [`audit_lemma3`] without verifying the assumed connectivity; used to
/// show that the checks fire on drawings that lack it.
pub fn audit_lemma3_unchecked(d: &OnePlaneDrawing, assumed_kappa: usize) -> AuditReport {
    let p = d.planarize();
    let separating = |cycles: Vec<Vec<Vertex>>| -> Vec<String> {
        cycles
            .into_iter()
            .filter_map(|c| {
                let cycle = match CycleInPlane::new(&p, c.clone()) {
                    Ok(cycle) => cycle,
                    Err(e) => return Some(format!("{} ({e})", p.render(&c))),
                };
                match p.is_separating_cycle(&cycle) {
                    Ok(false) => None,
                    Ok(true) => Some(p.render(&c)),
                    Err(e) => Some(format!("{} ({e})", p.render(&c))),
                }
            })
            .collect()
    };
    let mut checks = Vec::new();
    checks.push(if assumed_kappa >= 4 {
        Check::from_violations(FAKE_TRIANGLES, separating(p.fake_triangles().iter().map(|t| t.to_vec()).collect()))
    } else {
        Check::not_applicable(FAKE_TRIANGLES)
    });
    checks.push(if assumed_kappa >= 6 {
        Check::from_violations(
            TYPE_I_FOUR_CYCLES,
            separating(p.type_i_four_cycles().iter().map(|t| t.to_vec()).collect()),
        )
    } else {
        Check::not_applicable(TYPE_I_FOUR_CYCLES)
    });
    checks.push(if assumed_kappa >= 7 {
        Check::from_violations(ALL_TRIANGLES, separating(p.triangles().iter().map(|t| t.to_vec()).collect()))
    } else {
        Check::not_applicable(ALL_TRIANGLES)
    });
    AuditReport { checks }
}

pub const CHORD_AVOIDS_SPOKES: &str = "chord-avoids-inner-spokes";
pub const CHORD_AVOIDS_NEIGHBORHOOD: &str = "chord-avoids-inner-neighborhood";
pub const FAR_NEIGHBORS: &str = "far-rotation-neighbors-nonadjacent";
pub const SECOND_NEIGHBOR_CHORD: &str = "second-neighbor-chord-crosses-spoke";

/// Rotation constraints at each vertex `u`.
///
/// For neighbors `x`, `y` of `u` with at least two edges of `u` strictly
/// between them (on either side, counter-clockwise from `x` to `y`), the
/// edge `xy` crosses none of those edges (connectivity 4) and no edge at
/// their far ends (connectivity 6). At connectivity 7 and vertices of
/// degree `k >= 7`, rotation positions `3..=k-3` apart are non-adjacent and
/// a chord `u_i u_{i+2}` crosses `u u_{i+1}`.
pub fn audit_propositions(d: &OnePlaneDrawing, assumed_kappa: usize) -> Result<AuditReport, AuditError> {
    check_assumed(d, assumed_kappa)?;
    Ok(audit_propositions_unchecked(d, assumed_kappa))
}

/// [`audit_propositions`] without verifying the assumed connectivity.
pub fn audit_propositions_unchecked(d: &OnePlaneDrawing, assumed_kappa: usize) -> AuditReport {
    let g = d.base();
    let name = |v: Vertex| g.name(v);
    let edge = |e: Edge| format!("{}-{}", name(e.0), name(e.1));
    let mut spokes = Vec::new();
    let mut neighborhood = Vec::new();
    let mut far = Vec::new();
    let mut second = Vec::new();

    for u in g.vertices() {
        let rot = d.rotation_at(u);
        let k = rot.len();
        for i in 0..k {
            for j in 0..k {
                let gap = (j + k - i) % k;
                if i == j || gap < 3 {
                    continue;
                }
                let (x, y) = (rot[i], rot[j]);
                let Some(partner) = g.has_edge(x, y).then(|| d.crossing_partner((x, y))).flatten() else {
                    continue;
                };
                let between: Vec<Vertex> = (1..gap).map(|s| rot[(i + s) % k]).collect();
                let config = || {
                    format!(
                        "u={} x={} y={} between=[{}] crosses {}",
                        name(u),
                        name(x),
                        name(y),
                        g.render(&between),
                        edge(partner)
                    )
                };
                let spoke = (partner.0 == u && between.contains(&partner.1))
                    || (partner.1 == u && between.contains(&partner.0));
                if spoke {
                    spokes.push(config());
                }
                if between.contains(&partner.0) || between.contains(&partner.1) {
                    neighborhood.push(config());
                }
            }
        }
        if k >= 7 {
            for i in 0..k {
                for j in i + 1..k {
                    if (3..=k - 3).contains(&(j - i)) && g.has_edge(rot[i], rot[j]) {
                        far.push(format!(
                            "u={} u{}={} u{}={} adjacent",
                            name(u),
                            i + 1,
                            name(rot[i]),
                            j + 1,
                            name(rot[j])
                        ));
                    }
                }
                let (a, mid, b) = (rot[i], rot[(i + 1) % k], rot[(i + 2) % k]);
                if g.has_edge(a, b) && !d.crossing_partner((a, b)).is_some_and(|p| norm_eq(p, (u, mid))) {
                    second.push(format!(
                        "u={} chord {}-{} misses spoke {}-{}",
                        name(u),
                        name(a),
                        name(b),
                        name(u),
                        name(mid)
                    ));
                }
            }
        }
    }

    let mut checks = Vec::new();
    checks.push(if assumed_kappa >= 4 {
        Check::from_violations(CHORD_AVOIDS_SPOKES, spokes)
    } else {
        Check::not_applicable(CHORD_AVOIDS_SPOKES)
    });
    checks.push(if assumed_kappa >= 6 {
        Check::from_violations(CHORD_AVOIDS_NEIGHBORHOOD, neighborhood)
    } else {
        Check::not_applicable(CHORD_AVOIDS_NEIGHBORHOOD)
    });
    if assumed_kappa >= 7 {
        checks.push(Check::from_violations(FAR_NEIGHBORS, far));
        checks.push(Check::from_violations(SECOND_NEIGHBOR_CHORD, second));
    } else {
        checks.push(Check::not_applicable(FAR_NEIGHBORS));
        checks.push(Check::not_applicable(SECOND_NEIGHBOR_CHORD));
    }
    AuditReport { checks }
}

fn norm_eq(a: Edge, b: Edge) -> bool {
    a == b || (a.0 == b.1 && a.1 == b.0)
}

/// Mutation operators for negative tests, in a fixed order.
pub const OPERATORS: [&str; 7] = [
    "break-alternation",
    "cross-adjacent",
    "cross-twice",
    "drop-rotation-entry",
    "duplicate-rotation-entry",
    "scramble-rotation",
    "identity",
];

/// Deterministically damages a valid drawing. Each operator targets one
/// drawing convention; `identity` returns the data unchanged.
pub fn mutate(d: &OnePlaneDrawing, operator: &str, seed: u64) -> Result<DrawingData, AuditError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut data = d.data().clone();
    let g = d.base();
    let edges = g.edges();
    let shares = |e: Edge, f: Edge| e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1;
    match operator {
        "identity" => {}
        "break-alternation" => {
            if data.crossings.is_empty() {
                return Err(AuditError::Inapplicable("break-alternation"));
            }
            let i = rng.gen_range(0..data.crossings.len());
            let p = rng.gen_range(0..4);
            data.fake_rotations[i].swap(p, (p + 1) % 4);
        }
        "cross-adjacent" => {
            let pairs: Vec<(Edge, Edge)> = edges
                .iter()
                .enumerate()
                .flat_map(|(i, &e)| edges[i + 1..].iter().filter(move |&&f| shares(e, f)).map(move |&f| (e, f)))
                .collect();
            let &(e, f) = pairs.choose(&mut rng).ok_or(AuditError::Inapplicable("cross-adjacent"))?;
            push_crossing(&mut data, e, f);
        }
        "cross-twice" => {
            let options: Vec<(Edge, Vec<Edge>)> = edges
                .iter()
                .map(|&e| (e, edges.iter().copied().filter(|&f| !shares(e, f)).collect::<Vec<_>>()))
                .filter(|(_, free)| free.len() >= 2)
                .collect();
            let (e, free) = options.choose(&mut rng).ok_or(AuditError::Inapplicable("cross-twice"))?;
            let picked: Vec<&Edge> = free.choose_multiple(&mut rng, 2).collect();
            push_crossing(&mut data, *e, *picked[0]);
            push_crossing(&mut data, *e, *picked[1]);
        }
        "drop-rotation-entry" | "duplicate-rotation-entry" => {
            let candidates: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
            let &v = candidates.choose(&mut rng).ok_or(AuditError::Inapplicable("rotation entry"))?;
            let i = rng.gen_range(0..data.rotations[v].len());
            if operator == "drop-rotation-entry" {
                data.rotations[v].remove(i);
            } else {
                let w = data.rotations[v][i];
                data.rotations[v].insert(i, w);
            }
        }
        "scramble-rotation" => {
            let mut vertices: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
            vertices.shuffle(&mut rng);
            let mut found = false;
            'search: for v in vertices {
                let k = data.rotations[v].len();
                let mut swaps: Vec<(usize, usize)> = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect();
                swaps.shuffle(&mut rng);
                for (a, b) in swaps {
                    data.rotations[v].swap(a, b);
                    let report = validate_drawing(&data);
                    if report.violations.iter().any(|x| matches!(x, Violation::Euler { .. })) {
                        found = true;
                        break 'search;
                    }
                    data.rotations[v].swap(a, b);
                }
            }
            if !found {
                return Err(AuditError::Inapplicable("scramble-rotation"));
            }
        }
        other => return Err(AuditError::UnknownOperator(other.to_string())),
    }
    Ok(data)
}

/// Adds a crossing with an alternating end order.
fn push_crossing(data: &mut DrawingData, e: Edge, f: Edge) {
    data.crossings.push(Crossing::new(e, f));
    data.fake_rotations.push(vec![e.0, f.0, e.1, f.1]);
}

/// Random claw-free graphs on at most `max_n` vertices, certified 1-planar
/// by the oracle, with the oracle's drawing. Graphs the oracle refutes or
/// cannot settle within `node_limit` are skipped.
pub fn sample_certified(
    count: usize,
    max_n: usize,
    node_limit: u64,
    seed: u64,
) -> Vec<(Graph, OnePlaneDrawing)> {
    use crate::oracle::{find_with_threads, Budget, OracleOutcome};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=max_n);
        let p: f64 = rng.gen_range(0.2..0.9);
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    edges.push((names[a].clone(), names[b].clone()));
                }
            }
        }
        let g = Graph::new(&names, &edges).expect("simple by construction");
        if !g.is_claw_free() {
            continue;
        }
        let report = find_with_threads(&g, Budget::new(usize::MAX, node_limit), 1);
        if let OracleOutcome::Witness(d) = report.outcome {
            out.push((g, d));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::oracle::{find_one_planar_drawing, Budget};

    fn k5() -> OnePlaneDrawing {
        let g = families::complete(5);
        find_one_planar_drawing(&g, Budget::default()).witness().unwrap().clone()
    }

    #[test]
    fn claw_is_not_applicable_everywhere() {
        let g = families::star(3);
        let (d, _) = OnePlaneDrawing::realize(g.clone(), &[]).unwrap();
        let r = audit_theorems(&g, Some(&d)).unwrap();
        assert!(r.checks.iter().all(|c| c.status == Status::NotApplicable));
    }

    #[test]
    fn no_drawing_means_not_applicable() {
        let g = families::complete(4);
        let r = audit_theorems(&g, None).unwrap();
        assert!(r.checks.iter().all(|c| c.status == Status::NotApplicable));
    }

    #[test]
    fn k5_theorems_hold() {
        let d = k5();
        let r = audit_theorems(d.base(), Some(&d)).unwrap();
        assert_eq!(r.get(MAX_DEGREE_10).unwrap().status, Status::Pass);
        assert_eq!(r.get(CONNECTIVITY_6).unwrap().status, Status::Pass);
        assert_eq!(r.get(MAX_DEGREE_8).unwrap().status, Status::NotApplicable);
        let lemma = audit_lemma3(&d, 4).unwrap();
        assert!(!lemma.has_failures());
        assert!(matches!(audit_lemma3(&d, 5), Err(AuditError::KappaTooHigh { assumed: 5, actual: 4 })));
    }

    #[test]
    fn mutations_are_detected() {
        let d = k5();
        for op in OPERATORS {
            for seed in 0..5 {
                let data = mutate(&d, op, seed).unwrap();
                let report = validate_drawing(&data);
                if op == "identity" {
                    assert_eq!(&data, d.data());
                    assert!(report.is_valid());
                } else {
                    assert!(!report.is_valid(), "{op} seed {seed}");
                }
            }
        }
        let alt = validate_drawing(&mutate(&d, "break-alternation", 1).unwrap());
        assert_eq!(alt.count("alternation"), 1);
        let adj = validate_drawing(&mutate(&d, "cross-adjacent", 7).unwrap());
        assert!(adj.count("adjacent-edge-crossing") >= 1);
        assert!(mutate(&d, "nope", 0).is_err());
    }

    #[test]
    fn mutation_is_deterministic() {
        let d = k5();
        for op in OPERATORS {
            assert_eq!(mutate(&d, op, 3).unwrap(), mutate(&d, op, 3).unwrap());
        }
    }
}
