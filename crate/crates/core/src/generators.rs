//! The extremal graphs and families, each with a 1-plane drawing.
//!
//! Each figure graph is stored as its edge list and crossing pairs. The
//! rotation systems are recovered by embedding the planarization; for the
//! figure graphs the planarization is 3-connected, so this is the drawing of
//! the figure up to reflection.

use thiserror::Error;

use crate::drawing::{Crossing, OnePlaneDrawing};
use crate::graph::{families, Graph};

/// Invariants a fixture is expected to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claims {
    pub delta: usize,
    pub kappa: usize,
    pub claw_free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
    pub drawing: OnePlaneDrawing,
    pub claims: Claims,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("parameter {name} must be at least 1")]
    ZeroParameter { name: &'static str },
    #[error("unknown fixture {0:?}")]
    Unknown(String),
}

const H0_EDGES: &[(&str, &str)] = &[
    ("s", "s'"), ("s", "t"), ("s", "u"), ("s", "x"), ("s", "y"), ("s", "z"),
    ("s'", "t'"), ("s'", "u"), ("s'", "x'"), ("s'", "y'"), ("s'", "z'"),
    ("t", "t'"), ("t", "u"), ("t", "x"), ("t", "y"), ("t", "z"),
    ("t'", "u"), ("t'", "x'"), ("t'", "y'"), ("t'", "z'"),
    ("u", "x"), ("u", "x'"), ("u", "y"), ("u", "y'"), ("u", "z"), ("u", "z'"),
    ("x", "y"), ("x", "z"), ("x'", "y'"), ("x'", "z'"), ("y", "z"), ("y'", "z'"),
];
const H0_CROSSINGS: &[[&str; 4]] = &[
    ["s", "x", "u", "y"],
    ["s", "z", "t", "y"],
    ["s'", "x'", "u", "y'"],
    ["s'", "z'", "t'", "y'"],
    ["t", "x", "u", "z"],
    ["t'", "x'", "u", "z'"],
];

// `u` has degree 10; `v` is where the path of G_k is attached.
const G1_EDGES: &[(&str, &str)] = &[
    ("a", "d"), ("a", "e"), ("a", "f"), ("a", "u"), ("a", "v"),
    ("b", "c"), ("b", "g"), ("b", "h"), ("b", "i"), ("b", "u"),
    ("c", "g"), ("c", "h"), ("c", "i"), ("c", "u"),
    ("d", "e"), ("d", "f"), ("d", "u"), ("d", "v"),
    ("e", "f"), ("e", "u"), ("e", "v"), ("f", "u"), ("f", "v"),
    ("g", "h"), ("g", "i"), ("g", "u"), ("h", "i"), ("h", "u"), ("i", "u"), ("u", "v"),
];
const G1_CROSSINGS: &[[&str; 4]] = &[
    ["a", "e", "d", "v"],
    ["a", "f", "d", "u"],
    ["b", "h", "g", "u"],
    ["b", "i", "c", "g"],
    ["c", "h", "i", "u"],
    ["e", "u", "f", "v"],
];

const FIG1_LEFT_EDGES: &[(&str, &str)] = &[
    ("a", "b"), ("a", "c"), ("a", "d"), ("a", "e"), ("a", "f"), ("a", "g"), ("a", "h"), ("a", "i"),
    ("b", "c"), ("b", "d"), ("b", "e"), ("b", "f"), ("b", "j"),
    ("c", "d"), ("c", "g"), ("c", "i"), ("c", "j"),
    ("d", "f"), ("d", "i"), ("d", "j"),
    ("e", "f"), ("e", "g"), ("e", "h"), ("e", "j"),
    ("f", "h"), ("f", "j"), ("g", "h"), ("g", "i"), ("g", "j"),
    ("h", "i"), ("h", "j"), ("i", "j"),
];
const FIG1_LEFT_CROSSINGS: &[[&str; 4]] = &[
    ["a", "d", "b", "c"],
    ["a", "f", "b", "e"],
    ["a", "h", "e", "g"],
    ["a", "i", "c", "g"],
    ["b", "j", "d", "f"],
    ["c", "j", "d", "i"],
    ["e", "j", "f", "h"],
    ["g", "j", "h", "i"],
];

const FIG1_RIGHT_EDGES: &[(&str, &str)] = &[
    ("a", "b"), ("a", "c"), ("a", "d"), ("a", "e"), ("a", "f"), ("a", "g"), ("a", "h"), ("a", "i"),
    ("b", "c"), ("b", "d"), ("b", "e"), ("b", "f"), ("b", "j"),
    ("c", "d"), ("c", "g"), ("c", "i"), ("c", "j"),
    ("d", "f"), ("d", "i"), ("d", "j"),
    ("e", "f"), ("e", "g"), ("e", "h"), ("e", "k"),
    ("f", "h"), ("f", "i"), ("f", "j"), ("f", "k"),
    ("g", "h"), ("g", "i"), ("g", "k"), ("h", "i"), ("h", "k"),
    ("i", "j"), ("i", "k"), ("j", "k"),
];
const FIG1_RIGHT_CROSSINGS: &[[&str; 4]] = &[
    ["a", "d", "b", "c"],
    ["a", "f", "b", "e"],
    ["a", "h", "e", "g"],
    ["a", "i", "c", "g"],
    ["b", "j", "d", "f"],
    ["c", "j", "d", "i"],
    ["e", "k", "f", "h"],
    ["f", "i", "j", "k"],
    ["g", "k", "h", "i"],
];

const FIG5_II_EDGES: &[(&str, &str)] = &[
    ("a", "b"), ("a", "c"), ("a", "d"), ("a", "e"), ("a", "f"), ("a", "g"),
    ("b", "c"), ("b", "d"), ("b", "e"), ("b", "f"),
    ("c", "d"), ("c", "e"),
    ("d", "e"), ("d", "f"), ("d", "g"), ("d", "h"), ("d", "i"),
    ("e", "f"), ("e", "g"), ("e", "h"),
    ("f", "g"), ("f", "h"), ("f", "i"),
    ("g", "h"), ("g", "i"), ("h", "i"),
];
const FIG5_II_CROSSINGS: &[[&str; 4]] = &[
    ["a", "d", "b", "f"],
    ["a", "g", "e", "f"],
    ["b", "e", "c", "d"],
    ["d", "g", "e", "h"],
    ["d", "i", "f", "h"],
];

/// Found by the exhaustive oracle (`oneplanar oracle` on the graph with a
/// raised node limit); the lower bound `24 - 3*8 + 6` makes six optimal.
const K2222_CROSSINGS: &[[&str; 4]] = &[
    ["p0_0", "p1_1", "p2_0", "p3_0"],
    ["p0_0", "p2_1", "p1_0", "p3_0"],
    ["p0_0", "p3_1", "p1_0", "p2_0"],
    ["p0_1", "p1_0", "p2_1", "p3_1"],
    ["p0_1", "p2_0", "p1_1", "p3_1"],
    ["p0_1", "p3_0", "p1_1", "p2_1"],
];

fn named_graph(edges: &[(&str, &str)]) -> Graph {
    let mut names: Vec<&str> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    names.sort_unstable();
    names.dedup();
    Graph::new(&names, edges).expect("static edge list is simple")
}

fn crossings_by_name(g: &Graph, list: &[[String; 4]]) -> Vec<Crossing> {
    let ix = |s: &str| g.index_of(s).expect("crossing names a vertex");
    let mut out: Vec<Crossing> = list
        .iter()
        .map(|[a, b, c, d]| Crossing::new((ix(a), ix(b)), (ix(c), ix(d))))
        .collect();
    out.sort_unstable();
    out
}

/// Draws `graph` with exactly the named crossings.
fn draw(name: &str, graph: Graph, crossings: &[[String; 4]], claims: Claims) -> Fixture {
    let list = crossings_by_name(&graph, crossings);
    let (drawing, dissolved) =
        OnePlaneDrawing::realize(graph.clone(), &list).expect("fixture planarization is planar");
    assert!(dissolved.is_empty(), "{name}: crossing dissolved by the embedding");
    Fixture {
        name: name.to_string(),
        graph,
        drawing,
        claims,
    }
}

fn owned(list: &[[&str; 4]]) -> Vec<[String; 4]> {
    list.iter().map(|c| c.map(String::from)).collect()
}

fn from_tables(name: &str, edges: &[(&str, &str)], crossings: &[[&str; 4]], claims: Claims) -> Fixture {
    draw(name, named_graph(edges), &owned(crossings), claims)
}

/// 3-connected, maximum degree 10 at `u`.
pub fn gen_h0() -> Fixture {
    glue_h0_chain(1).expect("m = 1")
}

/// `m` copies of H0, copy `i + 1` glued onto copy `i` by identifying its
/// outer triangle `x' y' z'` with the inner triangle `x y z` of copy `i`.
/// Copy 1 keeps the plain names; copy `i >= 2` suffixes its own vertices
/// with `_i`. The new copy sits inside the triangle it is glued to.
pub fn glue_h0_chain(m: usize) -> Result<Fixture, GenError> {
    if m == 0 {
        return Err(GenError::ZeroParameter { name: "m" });
    }
    let rename = |v: &str, copy: usize| -> String {
        let base = v.trim_end_matches('\'');
        let outer = v.ends_with('\'') && matches!(base, "x" | "y" | "z");
        match (copy, outer) {
            (1, _) => v.to_string(),
            (2, true) => base.to_string(),
            (_, true) => format!("{base}_{}", copy - 1),
            _ => format!("{v}_{copy}"),
        }
    };
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut crossings: Vec<[String; 4]> = Vec::new();
    for copy in 1..=m {
        for &(a, b) in H0_EDGES {
            let e = (rename(a, copy), rename(b, copy));
            // copy i's x'y', y'z', z'x' coincide with copy i-1's xy, yz, zx
            if !edges.iter().any(|f| (f.0 == e.0 && f.1 == e.1) || (f.0 == e.1 && f.1 == e.0)) {
                edges.push(e);
            }
        }
        for c in H0_CROSSINGS {
            crossings.push(c.map(|v| rename(v, copy)));
        }
    }
    let refs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let graph = named_graph(&refs);
    let name = if m == 1 { "h0".to_string() } else { format!("h0-chain-{m}") };
    Ok(draw(
        &name,
        graph,
        &crossings,
        Claims {
            delta: 10,
            kappa: 3,
            claw_free: true,
        },
    ))
}

/// The degree-10 graph with a cut vertex. Connectivity 1 is computed, not
/// taken from a caption.
pub fn gen_g1() -> Fixture {
    gen_gk(1).expect("k = 1")
}

/// G1 with a path on `k` vertices whose end is identified with `v`; the new
/// vertices are `p1, ..., p{k-1}`.
pub fn gen_gk(k: usize) -> Result<Fixture, GenError> {
    if k == 0 {
        return Err(GenError::ZeroParameter { name: "k" });
    }
    let path: Vec<String> = (1..k).map(|i| format!("p{i}")).collect();
    let mut edges: Vec<(&str, &str)> = G1_EDGES.to_vec();
    let mut prev = "v";
    for p in &path {
        edges.push((prev, p.as_str()));
        prev = p.as_str();
    }
    let name = if k == 1 { "g1".to_string() } else { format!("g{k}") };
    Ok(draw(
        &name,
        named_graph(&edges),
        &owned(G1_CROSSINGS),
        Claims {
            delta: 10,
            kappa: 1,
            claw_free: true,
        },
    ))
}

pub fn gen_fig1_left() -> Fixture {
    from_tables(
        "fig1-left",
        FIG1_LEFT_EDGES,
        FIG1_LEFT_CROSSINGS,
        Claims {
            delta: 8,
            kappa: 6,
            claw_free: true,
        },
    )
}

pub fn gen_fig1_right() -> Fixture {
    from_tables(
        "fig1-right",
        FIG1_RIGHT_EDGES,
        FIG1_RIGHT_CROSSINGS,
        Claims {
            delta: 8,
            kappa: 6,
            claw_free: true,
        },
    )
}

/// K_{2,2,2,2}, the complement of a perfect matching on 8 vertices.
pub fn gen_k2222() -> Fixture {
    draw(
        "k2222",
        families::complete_multipartite(&[2, 2, 2, 2]),
        &owned(K2222_CROSSINGS),
        Claims {
            delta: 6,
            kappa: 6,
            claw_free: true,
        },
    )
}

/// 4-connected with maximum degree 8.
pub fn gen_fig5_ii() -> Fixture {
    from_tables(
        "fig5-ii",
        FIG5_II_EDGES,
        FIG5_II_CROSSINGS,
        Claims {
            delta: 8,
            kappa: 4,
            claw_free: true,
        },
    )
}

/// Names of the fixture corpus, in a fixed order.
pub fn catalog() -> Vec<&'static str> {
    vec![
        "h0",
        "h0-chain-2",
        "h0-chain-3",
        "h0-chain-4",
        "g1",
        "g2",
        "g3",
        "g4",
        "g5",
        "fig1-left",
        "fig1-right",
        "k2222",
        "fig5-ii",
    ]
}

/// Builds a fixture by catalog name; `h0-chain-M` and `gK` accept any
/// positive parameter.
pub fn by_name(name: &str) -> Result<Fixture, GenError> {
    let unknown = || GenError::Unknown(name.to_string());
    match name {
        "h0" => Ok(gen_h0()),
        "g1" => Ok(gen_g1()),
        "fig1-left" => Ok(gen_fig1_left()),
        "fig1-right" => Ok(gen_fig1_right()),
        "k2222" => Ok(gen_k2222()),
        "fig5-ii" => Ok(gen_fig5_ii()),
        _ => {
            if let Some(m) = name.strip_prefix("h0-chain-") {
                glue_h0_chain(m.parse().map_err(|_| unknown())?)
            } else if let Some(k) = name.strip_prefix('g') {
                gen_gk(k.parse().map_err(|_| unknown())?)
            } else {
                Err(unknown())
            }
        }
    }
}

/// Every catalog fixture.
pub fn corpus() -> Vec<Fixture> {
    catalog()
        .into_iter()
        .map(|n| by_name(n).expect("catalog names resolve"))
        .collect()
}
