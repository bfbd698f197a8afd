//! Line-oriented text format for graphs and drawings, plus DOT export.
//!
//! ```text
//! graph k4
//! v a
//! v b
//! e a b
//! x a c b d
//! rot a : b c d
//! xrot a c b d : a b c d
//! end
//! ```
//!
//! `x a b c d` declares that edge `ab` crosses edge `cd`. `rot v : ...` lists
//! the neighbors of `v` counter-clockwise; a crossed edge is named by its far
//! endpoint. `xrot` gives the cyclic order of the four edge-ends at a
//! crossing. Blank lines and `#` comments are ignored.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::drawing::{Crossing, DrawingData, OnePlaneDrawing, Violation};
use crate::graph::{is_valid_token, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

fn fail<T>(line: usize, reason: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        reason: reason.into(),
    })
}

/// A parsed file whose drawing block, if any, has not been validated.
#[derive(Debug, Clone)]
pub struct RawFile {
    pub name: String,
    pub graph: Graph,
    pub drawing: Option<DrawingData>,
    lines: DrawingLines,
}

/// Source lines of the drawing statements, for error reporting.
#[derive(Debug, Clone, Default)]
struct DrawingLines {
    crossings: Vec<usize>,
    fake_rotations: Vec<usize>,
    rotations: HashMap<Vertex, usize>,
    end: usize,
}

impl DrawingLines {
    fn of(&self, v: &Violation) -> usize {
        let at = |list: &Vec<usize>, i: usize| list.get(i).copied().unwrap_or(self.end);
        match v {
            Violation::UnknownEdge { crossing, .. }
            | Violation::AdjacentCrossing { crossing }
            | Violation::Alternation { crossing } => at(&self.crossings, *crossing),
            Violation::FakeRotationMismatch { crossing } => match self.fake_rotations.get(*crossing) {
                Some(&line) if line > 0 => line,
                _ => at(&self.crossings, *crossing),
            },
            Violation::RotationMismatch { vertex } => self.rotations.get(vertex).copied().unwrap_or(self.end),
            Violation::CrossedTwice { .. } | Violation::Euler { .. } => self.end,
        }
    }
}

/// A parsed file with a validated drawing, if one was given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub name: String,
    pub graph: Graph,
    pub drawing: Option<OnePlaneDrawing>,
}

#[derive(PartialEq, PartialOrd)]
enum Section {
    Vertices,
    Edges,
    Drawing,
}

/// Parses the file structure and names; drawing conventions are not checked.
pub fn parse_raw(text: &str) -> Result<RawFile, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let Some((first, header)) = lines.next() else {
        return fail(1, "empty file");
    };
    let name = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["graph", name] if is_valid_token(name) => name.to_string(),
        ["graph", name] => return fail(first, format!("invalid graph name {name:?}")),
        _ => return fail(first, "expected `graph <name>`"),
    };

    let mut section = Section::Vertices;
    let mut names: Vec<String> = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut edge_seen: HashMap<(String, String), usize> = HashMap::new();
    let mut crossings: Vec<(usize, [String; 4])> = Vec::new();
    let mut rotations: Vec<(usize, String, Vec<String>)> = Vec::new();
    let mut fake: Vec<(usize, [String; 4], Vec<String>)> = Vec::new();
    let mut end = None;

    let known = |seen: &HashMap<String, usize>, line: usize, t: &str| -> Result<(), ParseError> {
        if seen.contains_key(t) {
            Ok(())
        } else {
            fail(line, format!("unknown vertex {t}"))
        }
    };

    for (line, content) in lines.by_ref() {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let enter = |section: &mut Section, next: Section| -> Result<(), ParseError> {
            if *section > next {
                return fail(line, format!("`{}` out of order", tokens[0]));
            }
            *section = next;
            Ok(())
        };
        match tokens[0] {
            "v" => {
                enter(&mut section, Section::Vertices)?;
                let [_, v] = tokens[..] else {
                    return fail(line, "expected `v <token>`");
                };
                if !is_valid_token(v) {
                    return fail(line, format!("invalid vertex token {v:?}"));
                }
                if let Some(prev) = seen.insert(v.to_string(), line) {
                    return fail(line, format!("duplicate vertex {v} (first on line {prev})"));
                }
                names.push(v.to_string());
            }
            "e" => {
                enter(&mut section, Section::Edges)?;
                let [_, a, b] = tokens[..] else {
                    return fail(line, "expected `e <token> <token>`");
                };
                known(&seen, line, a)?;
                known(&seen, line, b)?;
                if a == b {
                    return fail(line, format!("self-loop at {a}"));
                }
                let key = if a < b { (a.to_string(), b.to_string()) } else { (b.to_string(), a.to_string()) };
                if let Some(prev) = edge_seen.insert(key, line) {
                    return fail(line, format!("duplicate edge {a} {b} (first on line {prev})"));
                }
                edges.push((a.to_string(), b.to_string()));
            }
            "x" => {
                enter(&mut section, Section::Drawing)?;
                let [_, a, b, c, d] = tokens[..] else {
                    return fail(line, "expected `x <a> <b> <c> <d>`");
                };
                for t in [a, b, c, d] {
                    known(&seen, line, t)?;
                }
                crossings.push((line, [a, b, c, d].map(String::from)));
            }
            "rot" => {
                enter(&mut section, Section::Drawing)?;
                if tokens.len() < 3 || tokens[2] != ":" {
                    return fail(line, "expected `rot <v> : <neighbors>`");
                }
                known(&seen, line, tokens[1])?;
                for t in &tokens[3..] {
                    known(&seen, line, t)?;
                }
                if rotations.iter().any(|(_, v, _)| v == tokens[1]) {
                    return fail(line, format!("second rotation for {}", tokens[1]));
                }
                rotations.push((line, tokens[1].to_string(), tokens[3..].iter().map(|s| s.to_string()).collect()));
            }
            "xrot" => {
                enter(&mut section, Section::Drawing)?;
                if tokens.len() != 10 || tokens[5] != ":" {
                    return fail(line, "expected `xrot <a> <b> <c> <d> : <p> <q> <r> <s>`");
                }
                for t in tokens[1..5].iter().chain(&tokens[6..]) {
                    known(&seen, line, t)?;
                }
                let key = [tokens[1], tokens[2], tokens[3], tokens[4]].map(String::from);
                fake.push((line, key, tokens[6..].iter().map(|s| s.to_string()).collect()));
            }
            "end" => {
                if tokens.len() != 1 {
                    return fail(line, "unexpected tokens after `end`");
                }
                end = Some(line);
                break;
            }
            other => return fail(line, format!("unknown statement {other:?}")),
        }
    }
    let Some(end) = end else {
        let last = text.lines().count().max(1);
        return fail(last, "missing `end`");
    };
    if let Some((line, _)) = lines.next() {
        return fail(line, "content after `end`");
    }

    let graph = Graph::new(&names, &edges).map_err(|e| ParseError {
        line: end,
        reason: e.to_string(),
    })?;
    let idx = |t: &str| graph.index_of(t).expect("checked above");

    let has_drawing = !crossings.is_empty() || !rotations.is_empty() || !fake.is_empty();
    let mut record = DrawingLines {
        end,
        ..Default::default()
    };
    let drawing = if has_drawing {
        let mut list = Vec::new();
        for (line, [a, b, c, d]) in &crossings {
            let (a, b, c, d) = (idx(a), idx(b), idx(c), idx(d));
            if a == b || c == d {
                return fail(*line, "crossing names a self-loop");
            }
            let cr = Crossing::new((a, b), (c, d));
            if list.contains(&cr) {
                return fail(*line, "duplicate crossing");
            }
            list.push(cr);
            record.crossings.push(*line);
        }
        let mut fake_rotations = vec![Vec::new(); list.len()];
        record.fake_rotations = vec![0; list.len()];
        for (line, [a, b, c, d], order) in &fake {
            let cr = Crossing::new((idx(a), idx(b)), (idx(c), idx(d)));
            let Some(i) = list.iter().position(|&x| x == cr) else {
                return fail(*line, "xrot for an undeclared crossing");
            };
            if record.fake_rotations[i] != 0 {
                return fail(*line, "second xrot for the same crossing");
            }
            record.fake_rotations[i] = *line;
            fake_rotations[i] = order.iter().map(|t| idx(t)).collect();
        }
        let mut rots = vec![Vec::new(); graph.n()];
        for (line, v, order) in &rotations {
            let v = idx(v);
            record.rotations.insert(v, *line);
            rots[v] = order.iter().map(|t| idx(t)).collect();
        }
        Some(DrawingData {
            base: graph.clone(),
            crossings: list,
            rotations: rots,
            fake_rotations,
        })
    } else {
        None
    };
    Ok(RawFile {
        name,
        graph,
        drawing,
        lines: record,
    })
}

impl RawFile {
    /// Source line blamed for a drawing violation.
    pub fn line_of(&self, v: &Violation) -> usize {
        self.lines.of(v)
    }

    /// Validates the drawing block; the first violation becomes the error.
    pub fn into_validated(self) -> Result<GraphFile, ParseError> {
        let drawing = match self.drawing {
            None => None,
            Some(data) => {
                let report = crate::drawing::validate_drawing(&data);
                if let Some(v) = report.violations.first() {
                    return fail(self.lines.of(v), format!("{}: {}", v.class(), v.witness(&data)));
                }
                Some(OnePlaneDrawing::new(data).expect("validated"))
            }
        };
        Ok(GraphFile {
            name: self.name,
            graph: self.graph,
            drawing,
        })
    }
}

pub fn parse(text: &str) -> Result<GraphFile, ParseError> {
    parse_raw(text)?.into_validated()
}

pub fn parse_graph_file(text: &str) -> Result<Graph, ParseError> {
    parse_raw(text).map(|f| f.graph)
}

/// Parses a file that must carry a valid drawing. A file without a drawing
/// block is accepted only for edgeless graphs.
pub fn parse_drawing_file(text: &str) -> Result<OnePlaneDrawing, ParseError> {
    let file = parse(text)?;
    match file.drawing {
        Some(d) => Ok(d),
        None if file.graph.e() == 0 => {
            let (d, _) = OnePlaneDrawing::realize(file.graph, &[]).expect("edgeless graph");
            Ok(d)
        }
        None => fail(text.lines().count().max(1), "no drawing block"),
    }
}

/// Canonical serialization: vertices and edges sorted, crossings sorted,
/// every cyclic order starting at its smallest vertex.
pub fn serialize(name: &str, graph: &Graph, drawing: Option<&OnePlaneDrawing>) -> String {
    let mut out = String::new();
    let nm = |v: Vertex| graph.name(v);
    writeln!(out, "graph {name}").unwrap();
    for v in graph.vertices() {
        writeln!(out, "v {}", nm(v)).unwrap();
    }
    for &(a, b) in graph.edges() {
        writeln!(out, "e {} {}", nm(a), nm(b)).unwrap();
    }
    if let Some(d) = drawing {
        for c in d.crossings() {
            writeln!(out, "x {}", c.render(graph)).unwrap();
        }
        for v in graph.vertices() {
            let rot = d.rotation_at(v);
            if rot.is_empty() {
                continue;
            }
            let list: Vec<&str> = rot.iter().map(|&w| nm(w)).collect();
            writeln!(out, "rot {} : {}", nm(v), list.join(" ")).unwrap();
        }
        for (i, c) in d.crossings().iter().enumerate() {
            let list: Vec<&str> = d.fake_rotation(i).iter().map(|&w| nm(w)).collect();
            writeln!(out, "xrot {} : {}", c.render(graph), list.join(" ")).unwrap();
        }
    }
    out.push_str("end\n");
    out
}

pub fn serialize_file(file: &GraphFile) -> String {
    serialize(&file.name, &file.graph, file.drawing.as_ref())
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz export: true vertices as nodes, crossings as diamond nodes with
/// each crossed edge split in two.
pub fn to_dot(name: &str, graph: &Graph, drawing: Option<&OnePlaneDrawing>) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {{", dot_id(name)).unwrap();
    for v in graph.vertices() {
        writeln!(out, "  {};", dot_id(graph.name(v))).unwrap();
    }
    let crossings = drawing.map(|d| d.crossings()).unwrap_or(&[]);
    let crossing_id = |c: &Crossing| {
        let [a, b, x, y] = c.endpoints().map(|v| graph.name(v));
        dot_id(&format!("({a}-{b}|{x}-{y})"))
    };
    for c in crossings {
        writeln!(out, "  {} [shape=diamond, label=\"\", width=0.15, height=0.15];", crossing_id(c)).unwrap();
    }
    for &(a, b) in graph.edges() {
        match crossings.iter().find(|c| c.contains((a, b))) {
            Some(c) => {
                let x = crossing_id(c);
                writeln!(out, "  {} -- {};", dot_id(graph.name(a)), x).unwrap();
                writeln!(out, "  {} -- {};", x, dot_id(graph.name(b))).unwrap();
            }
            None => writeln!(out, "  {} -- {};", dot_id(graph.name(a)), dot_id(graph.name(b))).unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const K4_CROSSED: &str = "graph k4\nv a\nv b\nv c\nv d\ne a b\ne a c\ne a d\ne b c\ne b d\ne c d\n\
x a c b d\nrot a : b c d\nrot b : a c d\nrot c : a b d\nrot d : a b c\nxrot a c b d : a b c d\nend\n";

    #[test]
    fn minimal_path() {
        let g = parse_graph_file("graph t\nv a\nv b\ne a b\nend").unwrap();
        assert_eq!((g.n(), g.e()), (2, 1));
    }

    #[test]
    fn adjacent_crossing_is_reported_with_line() {
        let text = "graph t\nv a\nv b\nv c\ne a b\ne a c\nx a b a c\nend\n";
        let err = parse_drawing_file(text).unwrap_err();
        assert_eq!(err.line, 7);
        assert!(err.reason.starts_with("adjacent-edge-crossing"), "{err}");
    }

    #[test]
    fn syntax_errors_carry_lines() {
        assert_eq!(parse_raw("").unwrap_err().line, 1);
        assert_eq!(parse_raw("graph g\nv a\nv a\nend").unwrap_err().line, 3);
        assert_eq!(parse_raw("graph g\nv a\ne a b\nend").unwrap_err().line, 3);
        assert_eq!(parse_raw("graph g\nv a\nv b\ne a b\nv c\nend").unwrap_err().line, 5);
        assert_eq!(parse_raw("graph g\nv a\n").unwrap_err().line, 2);
        assert_eq!(parse_raw("graph g\nend\nv a").unwrap_err().line, 3);
        assert_eq!(parse_raw("graph g\nfoo\nend").unwrap_err().line, 2);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# leading\ngraph g # name\n\nv a\nv b # second\ne a b\nend\n# trailing\n";
        let f = parse(text).unwrap();
        assert_eq!(serialize_file(&f), "graph g\nv a\nv b\ne a b\nend\n");
    }

    #[test]
    fn drawing_round_trip() {
        let f = parse(K4_CROSSED).unwrap();
        let d = f.drawing.as_ref().unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(serialize_file(&f), K4_CROSSED);
    }

    #[test]
    fn canonicalization_sorts_everything() {
        let text = "graph k4\nv d\nv c\nv b\nv a\ne d c\ne c a\ne b a\ne d a\ne d b\ne c b\n\
x b d a c\nrot d : b c a\nrot c : d a b\nrot b : c d a\nrot a : c d b\nxrot d b c a : c d a b\nend\n";
        let f = parse(text).unwrap();
        assert_eq!(serialize_file(&f), K4_CROSSED);
    }

    #[test]
    fn dot_marks_crossings() {
        let f = parse(K4_CROSSED).unwrap();
        let dot = to_dot(&f.name, &f.graph, f.drawing.as_ref());
        assert!(dot.contains("\"(a-c|b-d)\" [shape=diamond"));
        assert!(dot.contains("\"a\" -- \"(a-c|b-d)\";"));
        assert!(dot.contains("\"a\" -- \"b\";"));
    }
}
