//! Combinatorial 1-plane drawings.
//!
//! A drawing is a base graph, a set of crossing pairs, a counter-clockwise
//! rotation at every true vertex and a cyclic order of the four edge-ends at
//! every crossing. Edge-ends are always named by their true endpoint, so a
//! crossed edge `ab` appears as `b` in the rotation of `a` even though in the
//! planarization `a` is adjacent to a fake vertex.
//!
//! Embeddings live on the sphere: there is no outer face, and the two sides
//! of a cycle are reported as side A (left of the traversal direction) and
//! side B.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, Vertex};
use crate::planarity::{self, Rotation};

/// Two crossing edges, each stored smaller endpoint first, `first < second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Crossing {
    pub first: Edge,
    pub second: Edge,
}

fn norm(e: Edge) -> Edge {
    if e.0 <= e.1 {
        e
    } else {
        (e.1, e.0)
    }
}

impl Crossing {
    pub fn new(e: Edge, f: Edge) -> Self {
        let (e, f) = (norm(e), norm(f));
        if e <= f {
            Crossing { first: e, second: f }
        } else {
            Crossing { first: f, second: e }
        }
    }

    /// `[a, b, c, d]` for edges `ab` and `cd`.
    pub fn endpoints(&self) -> [Vertex; 4] {
        [self.first.0, self.first.1, self.second.0, self.second.1]
    }

    pub fn contains(&self, e: Edge) -> bool {
        let e = norm(e);
        self.first == e || self.second == e
    }

    /// The edge of this crossing incident to `v`, if any.
    pub fn edge_at(&self, v: Vertex) -> Option<Edge> {
        if self.first.0 == v || self.first.1 == v {
            Some(self.first)
        } else if self.second.0 == v || self.second.1 == v {
            Some(self.second)
        } else {
            None
        }
    }

    pub fn render(&self, g: &Graph) -> String {
        format!(
            "{} {} {} {}",
            g.name(self.first.0),
            g.name(self.first.1),
            g.name(self.second.0),
            g.name(self.second.1)
        )
    }
}

fn other_end(e: Edge, v: Vertex) -> Vertex {
    if e.0 == v {
        e.1
    } else {
        e.0
    }
}

/// Raw, possibly invalid, drawing data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrawingData {
    pub base: Graph,
    pub crossings: Vec<Crossing>,
    /// Counter-clockwise neighbor order at each true vertex.
    pub rotations: Vec<Vec<Vertex>>,
    /// Cyclic order of the four edge-ends at each crossing, parallel to
    /// `crossings`.
    pub fake_rotations: Vec<Vec<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A crossing names a pair that is not an edge of the base graph.
    UnknownEdge { crossing: usize, edge: Edge },
    AdjacentCrossing { crossing: usize },
    CrossedTwice { edge: Edge },
    RotationMismatch { vertex: Vertex },
    FakeRotationMismatch { crossing: usize },
    Alternation { crossing: usize },
    /// The planarization's rotation system is not a sphere embedding.
    Euler {
        vertices: usize,
        edges: usize,
        faces: usize,
        components: usize,
    },
}

impl Violation {
    pub fn class(&self) -> &'static str {
        match self {
            Violation::UnknownEdge { .. } => "unknown-edge",
            Violation::AdjacentCrossing { .. } => "adjacent-edge-crossing",
            Violation::CrossedTwice { .. } => "crossed-twice",
            Violation::RotationMismatch { .. } => "rotation-mismatch",
            Violation::FakeRotationMismatch { .. } => "fake-rotation-mismatch",
            Violation::Alternation { .. } => "alternation",
            Violation::Euler { .. } => "euler",
        }
    }

    /// Locating witness with vertex names.
    pub fn witness(&self, d: &DrawingData) -> String {
        let g = &d.base;
        let crossing = |i: usize| {
            d.crossings
                .get(i)
                .map(|c| c.render(g))
                .unwrap_or_else(|| format!("#{i}"))
        };
        match self {
            Violation::UnknownEdge { crossing: i, edge } => {
                format!("{} edge {} {}", crossing(*i), g.name(edge.0), g.name(edge.1))
            }
            Violation::AdjacentCrossing { crossing: i }
            | Violation::FakeRotationMismatch { crossing: i }
            | Violation::Alternation { crossing: i } => crossing(*i),
            Violation::CrossedTwice { edge } => format!("{} {}", g.name(edge.0), g.name(edge.1)),
            Violation::RotationMismatch { vertex } => g.name(*vertex).to_string(),
            Violation::Euler {
                vertices,
                edges,
                faces,
                components,
            } => format!("V={vertices} E={edges} F={faces} C={components}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, class: &str) -> usize {
        self.violations.iter().filter(|v| v.class() == class).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("invalid drawing: {}", .0.violations.iter().map(|v| v.class()).collect::<Vec<_>>().join(", "))]
    Invalid(ValidationReport),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("planarization is not planar")]
    NotPlanar,
}

/// Checks every drawing convention and reports each violation.
///
/// The Euler check needs a well-formed rotation system, so it only runs
/// when every local check passes.
pub fn validate_drawing(d: &DrawingData) -> ValidationReport {
    let g = &d.base;
    let n = g.n();
    let mut violations = Vec::new();

    let mut uses: BTreeMap<Edge, usize> = BTreeMap::new();
    for (i, c) in d.crossings.iter().enumerate() {
        for e in [c.first, c.second] {
            let known = e.0 < n && e.1 < n && e.0 != e.1 && g.has_edge(e.0, e.1);
            if !known {
                violations.push(Violation::UnknownEdge { crossing: i, edge: e });
            }
            *uses.entry(e).or_default() += 1;
        }
        let [a, b, x, y] = c.endpoints();
        if a == x || a == y || b == x || b == y {
            violations.push(Violation::AdjacentCrossing { crossing: i });
        }
    }
    for (&e, &count) in &uses {
        if count > 1 {
            violations.push(Violation::CrossedTwice { edge: e });
        }
    }

    for v in 0..n {
        let mut got = d.rotations.get(v).cloned().unwrap_or_default();
        got.sort_unstable();
        if got != g.neighbors(v) {
            violations.push(Violation::RotationMismatch { vertex: v });
        }
    }

    for (i, c) in d.crossings.iter().enumerate() {
        let Some(order) = d.fake_rotations.get(i) else {
            violations.push(Violation::FakeRotationMismatch { crossing: i });
            continue;
        };
        let mut got = order.clone();
        got.sort_unstable();
        let mut want = c.endpoints().to_vec();
        want.sort_unstable();
        if got != want || want.windows(2).any(|w| w[0] == w[1]) {
            violations.push(Violation::FakeRotationMismatch { crossing: i });
            continue;
        }
        if !alternates(order, c) {
            violations.push(Violation::Alternation { crossing: i });
        }
    }
    if d.fake_rotations.len() > d.crossings.len() {
        for i in d.crossings.len()..d.fake_rotations.len() {
            violations.push(Violation::FakeRotationMismatch { crossing: i });
        }
    }

    if violations.is_empty() {
        let p = PlaneGraph::build(d);
        if !p.euler_check() {
            violations.push(Violation::Euler {
                vertices: p.n(),
                edges: p.edge_count(),
                faces: p.face_count(),
                components: p.component_count(),
            });
        }
    }
    ValidationReport { violations }
}

/// True when the ends of the crossing's two edges interleave in `order`.
fn alternates(order: &[Vertex], c: &Crossing) -> bool {
    let pos = |v: Vertex| order.iter().position(|&x| x == v).expect("endpoint present");
    let (p, q) = (pos(c.first.0), pos(c.first.1));
    (p + 4 - q) % 4 == 2
}

fn rotate_to_min(list: &mut [Vertex]) {
    if let Some((i, _)) = list.iter().enumerate().min_by_key(|(_, &v)| v) {
        list.rotate_left(i);
    }
}

/// A validated 1-plane drawing, stored canonically: crossings sorted, every
/// cyclic order starting at its smallest entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePlaneDrawing {
    data: DrawingData,
}

impl OnePlaneDrawing {
    pub fn new(mut data: DrawingData) -> Result<Self, DrawingError> {
        let report = validate_drawing(&data);
        if !report.is_valid() {
            return Err(DrawingError::Invalid(report));
        }
        let mut order: Vec<usize> = (0..data.crossings.len()).collect();
        order.sort_by_key(|&i| data.crossings[i]);
        data.crossings = order.iter().map(|&i| data.crossings[i]).collect();
        data.fake_rotations = order.iter().map(|&i| data.fake_rotations[i].clone()).collect();
        data.rotations.resize(data.base.n(), Vec::new());
        for r in data.rotations.iter_mut().chain(data.fake_rotations.iter_mut()) {
            rotate_to_min(r);
        }
        Ok(OnePlaneDrawing { data })
    }

    /// Builds the drawing of `base` whose crossings are exactly `crossings`
    /// by embedding the planarization. Crossings whose embedded fake vertex
    /// does not alternate are dissolved: the two edges only touch there and
    /// can be separated locally. Returns the drawing and the dissolved pairs.
    pub fn realize(base: Graph, crossings: &[Crossing]) -> Result<(Self, Vec<Crossing>), DrawingError> {
        let n = base.n();
        let mut crossed: HashMap<Edge, usize> = HashMap::new();
        for (i, c) in crossings.iter().enumerate() {
            crossed.insert(c.first, i);
            crossed.insert(c.second, i);
        }
        let mut edges: Vec<Edge> = base
            .edges()
            .iter()
            .copied()
            .filter(|e| !crossed.contains_key(e))
            .collect();
        for (i, c) in crossings.iter().enumerate() {
            for v in c.endpoints() {
                edges.push((v, n + i));
            }
        }
        let rot = planarity::planar_embedding(n + crossings.len(), &edges).ok_or(DrawingError::NotPlanar)?;
        let rotations: Vec<Vec<Vertex>> = (0..n)
            .map(|v| {
                rot[v]
                    .iter()
                    .map(|&w| {
                        if w < n {
                            w
                        } else {
                            other_end(crossings[w - n].edge_at(v).expect("incident"), v)
                        }
                    })
                    .collect()
            })
            .collect();
        let mut kept = Vec::new();
        let mut kept_rot = Vec::new();
        let mut dissolved = Vec::new();
        for (i, c) in crossings.iter().enumerate() {
            if alternates(&rot[n + i], c) {
                kept.push(*c);
                kept_rot.push(rot[n + i].clone());
            } else {
                dissolved.push(*c);
            }
        }
        let drawing = OnePlaneDrawing::new(DrawingData {
            base,
            crossings: kept,
            rotations,
            fake_rotations: kept_rot,
        })?;
        Ok((drawing, dissolved))
    }

    pub fn data(&self) -> &DrawingData {
        &self.data
    }

    pub fn into_data(self) -> DrawingData {
        self.data
    }

    pub fn base(&self) -> &Graph {
        &self.data.base
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.data.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.data.crossings.len()
    }

    /// Counter-clockwise neighbor indices at `v`.
    pub fn rotation_at(&self, v: Vertex) -> &[Vertex] {
        &self.data.rotations[v]
    }

    pub fn fake_rotation(&self, i: usize) -> &[Vertex] {
        &self.data.fake_rotations[i]
    }

    /// The crossing that involves edge `e`, if it is crossed.
    pub fn crossing_of(&self, e: Edge) -> Option<usize> {
        self.data.crossings.iter().position(|c| c.contains(e))
    }

    /// The edge crossing `e`, if any.
    pub fn crossing_partner(&self, e: Edge) -> Option<Edge> {
        let e = norm(e);
        self.crossing_of(e).map(|i| {
            let c = self.data.crossings[i];
            if c.first == e {
                c.second
            } else {
                c.first
            }
        })
    }

    /// Rotation at the named vertex, as names.
    pub fn rotation(&self, vertex: &str) -> Result<Vec<String>, GraphError> {
        let v = self
            .base()
            .index_of(vertex)
            .ok_or_else(|| GraphError::UnknownVertex(vertex.to_string()))?;
        Ok(self.data.rotations[v]
            .iter()
            .map(|&w| self.base().name(w).to_string())
            .collect())
    }

    pub fn planarize(&self) -> PlaneGraph {
        PlaneGraph::build(&self.data)
    }

    /// Drawing of the subgraph induced by the named vertices. A crossing
    /// survives iff all four of its endpoints are kept.
    pub fn restrict<S: AsRef<str>>(&self, subset: &[S]) -> Result<OnePlaneDrawing, DrawingError> {
        let g = self.base();
        let mut keep = Vec::with_capacity(subset.len());
        for s in subset {
            let s = s.as_ref();
            keep.push(
                g.index_of(s)
                    .ok_or_else(|| GraphError::UnknownVertex(s.to_string()))?,
            );
        }
        Ok(self.restrict_indices(&keep))
    }

    pub fn restrict_indices(&self, keep: &[Vertex]) -> OnePlaneDrawing {
        let g = self.base();
        let sub = g.induced_by_indices(keep);
        let mut map = vec![usize::MAX; g.n()];
        for v in g.vertices() {
            if let Some(i) = sub.index_of(g.name(v)) {
                map[v] = i;
            }
        }
        let kept = |v: Vertex| map[v] != usize::MAX;
        let mut rotations = vec![Vec::new(); sub.n()];
        for v in g.vertices().filter(|&v| kept(v)) {
            rotations[map[v]] = self.data.rotations[v]
                .iter()
                .filter(|&&w| kept(w))
                .map(|&w| map[w])
                .collect();
        }
        let mut crossings = Vec::new();
        let mut fake_rotations = Vec::new();
        for (i, c) in self.data.crossings.iter().enumerate() {
            if c.endpoints().iter().all(|&v| kept(v)) {
                crossings.push(Crossing::new(
                    (map[c.first.0], map[c.first.1]),
                    (map[c.second.0], map[c.second.1]),
                ));
                fake_rotations.push(self.data.fake_rotations[i].iter().map(|&v| map[v]).collect());
            }
        }
        OnePlaneDrawing::new(DrawingData {
            base: sub,
            crossings,
            rotations,
            fake_rotations,
        })
        .expect("restriction of a valid drawing is valid")
    }
}

/// The planarization of a drawing: every crossing becomes a degree-4 fake
/// vertex. Vertex `base.n() + i` is the fake vertex of crossing `i`.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    n_true: usize,
    names: Vec<String>,
    crossings: Vec<Crossing>,
    rotation: Rotation,
    faces: Vec<Vec<Vertex>>,
    components: usize,
}

impl PlaneGraph {
    fn build(d: &DrawingData) -> PlaneGraph {
        let g = &d.base;
        let n = g.n();
        let mut crossed: HashMap<Edge, usize> = HashMap::new();
        for (i, c) in d.crossings.iter().enumerate() {
            crossed.insert(c.first, i);
            crossed.insert(c.second, i);
        }
        let mut rotation: Rotation = (0..n)
            .map(|v| {
                d.rotations[v]
                    .iter()
                    .map(|&w| match crossed.get(&norm((v, w))) {
                        Some(&i) => n + i,
                        None => w,
                    })
                    .collect()
            })
            .collect();
        rotation.extend(d.fake_rotations.iter().cloned());
        let mut names: Vec<String> = g.names().to_vec();
        names.extend(d.crossings.iter().map(|c| {
            format!(
                "({}-{}|{}-{})",
                g.name(c.first.0),
                g.name(c.first.1),
                g.name(c.second.0),
                g.name(c.second.1)
            )
        }));
        let faces = planarity::trace_faces(&rotation);
        let mut p = PlaneGraph {
            n_true: n,
            names,
            crossings: d.crossings.clone(),
            rotation,
            faces,
            components: 0,
        };
        p.components = p.count_components();
        p
    }

    /// Plane graph without crossings, from a rotation system on named vertices.
    pub fn from_rotation(names: Vec<String>, rotation: Rotation) -> PlaneGraph {
        let faces = planarity::trace_faces(&rotation);
        let mut p = PlaneGraph {
            n_true: names.len(),
            names,
            crossings: Vec::new(),
            rotation,
            faces,
            components: 0,
        };
        p.components = p.count_components();
        p
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn true_count(&self) -> usize {
        self.n_true
    }

    pub fn fake_count(&self) -> usize {
        self.n() - self.n_true
    }

    pub fn is_fake(&self, v: Vertex) -> bool {
        v >= self.n_true
    }

    /// The crossing a fake vertex stands for.
    pub fn crossing(&self, v: Vertex) -> Option<&Crossing> {
        v.checked_sub(self.n_true).and_then(|i| self.crossings.get(i))
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn render(&self, vs: &[Vertex]) -> String {
        vs.iter().map(|&v| self.name(v)).collect::<Vec<_>>().join(" ")
    }

    /// Counter-clockwise neighbors of `v`.
    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotation[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rotation[u].contains(&v)
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = (0..self.n())
            .flat_map(|u| self.rotation[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Faces as closed walks; consecutive entries (cyclically) are darts.
    pub fn faces(&self) -> &[Vec<Vertex>] {
        &self.faces
    }

    /// Face count as in a single plane drawing: components share one outer
    /// face.
    pub fn face_count(&self) -> usize {
        let isolated = self.rotation.iter().filter(|r| r.is_empty()).count();
        (self.faces.len() + isolated + 1).saturating_sub(self.components)
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    /// `V - E + F = 1 + C`.
    pub fn euler_check(&self) -> bool {
        planarity::euler_holds(&self.rotation)
    }

    fn count_components(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut count = 0;
        for r in 0..n {
            if seen[r] {
                continue;
            }
            count += 1;
            seen[r] = true;
            let mut stack = vec![r];
            while let Some(x) = stack.pop() {
                for &y in &self.rotation[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    /// The two sides of a cycle: side A holds the vertices to the left of
    /// the traversal direction, side B those to the right.
    pub fn cycle_sides(&self, cycle: &CycleInPlane) -> Result<(Vec<Vertex>, Vec<Vertex>), SideError> {
        if self.components > 1 {
            return Err(SideError::Disconnected);
        }
        let c = &cycle.0;
        let k = c.len();
        let n = self.n();
        let mut on_cycle = vec![false; n];
        for &v in c {
            on_cycle[v] = true;
        }
        // side label per vertex: Some(true) = A, Some(false) = B
        let mut label: Vec<Option<bool>> = vec![None; n];
        let mut seeds = Vec::new();
        for i in 0..k {
            let v = c[i];
            let prev = c[(i + k - 1) % k];
            let next = c[(i + 1) % k];
            let rot = &self.rotation[v];
            let d = rot.len();
            let start = rot.iter().position(|&w| w == next).expect("cycle edge");
            // ccw after `next` until `prev`: left side
            let mut left = true;
            for step in 1..d {
                let w = rot[(start + step) % d];
                if w == prev {
                    left = false;
                    continue;
                }
                if !on_cycle[w] {
                    seeds.push((w, left));
                }
            }
        }
        for (w, side) in seeds {
            match label[w] {
                None => label[w] = Some(side),
                Some(s) if s != side => return Err(SideError::Inconsistent { vertex: w }),
                Some(_) => {}
            }
        }
        // propagate over components of P - V(C)
        let mut seen = vec![false; n];
        for root in 0..n {
            if on_cycle[root] || seen[root] {
                continue;
            }
            let mut comp = vec![root];
            seen[root] = true;
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &y in &self.rotation[x] {
                    if !on_cycle[y] && !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            let mut side = None;
            for &x in &comp {
                if let Some(s) = label[x] {
                    match side {
                        None => side = Some(s),
                        Some(t) if t != s => return Err(SideError::Inconsistent { vertex: x }),
                        Some(_) => {}
                    }
                }
            }
            let side = side.ok_or(SideError::Disconnected)?;
            for &x in &comp {
                label[x] = Some(side);
            }
        }
        let a = (0..n).filter(|&v| label[v] == Some(true)).collect();
        let b = (0..n).filter(|&v| label[v] == Some(false)).collect();
        Ok((a, b))
    }

    pub fn is_separating_cycle(&self, cycle: &CycleInPlane) -> Result<bool, SideError> {
        let (a, b) = self.cycle_sides(cycle)?;
        Ok(!a.is_empty() && !b.is_empty())
    }

    /// All 3-cycles with exactly one fake vertex, as `[fake, a, b]` with
    /// `a < b`, sorted.
    pub fn fake_triangles(&self) -> Vec<[Vertex; 3]> {
        let mut out = Vec::new();
        for x in self.n_true..self.n() {
            let mut nb: Vec<Vertex> = self.rotation[x].clone();
            nb.sort_unstable();
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    if self.has_edge(nb[i], nb[j]) {
                        out.push([x, nb[i], nb[j]]);
                    }
                }
            }
        }
        out
    }

    /// All 3-cycles, as sorted triples in lexicographic order.
    pub fn triangles(&self) -> Vec<[Vertex; 3]> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            for &c in &self.rotation[b] {
                if c > b && self.has_edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Type-I 4-cycles `x y c z` with `c` the only fake vertex: the two
    /// cycle edges at `c` are halves of different crossing edges, so both
    /// crossing edges continue to endpoints off the cycle. When `y` and `z`
    /// are the two ends of one crossed edge the cycle is the other
    /// configuration and is excluded. Returned as `[x, y, c, z]` with
    /// `y < z`, sorted by `(c, y, z, x)`.
    pub fn type_i_four_cycles(&self) -> Vec<[Vertex; 4]> {
        let mut out = Vec::new();
        for c in self.n_true..self.n() {
            let crossing = self.crossings[c - self.n_true];
            let mut nb = self.rotation[c].clone();
            nb.sort_unstable();
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    let (y, z) = (nb[i], nb[j]);
                    let ey = crossing.edge_at(y).expect("fake neighbor is an endpoint");
                    let ez = crossing.edge_at(z).expect("fake neighbor is an endpoint");
                    if ey == ez {
                        continue;
                    }
                    let (fy, fz) = (other_end(ey, y), other_end(ez, z));
                    for &x in &self.rotation[y] {
                        if self.is_fake(x) || x == z || !self.has_edge(x, z) {
                            continue;
                        }
                        debug_assert!(![y, z, x].contains(&fy) && ![y, z, x].contains(&fz));
                        out.push([x, y, c, z]);
                    }
                }
            }
        }
        out.sort_unstable_by_key(|&[x, y, c, z]| (c, y, z, x));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SideError {
    #[error("a component touches both sides of the cycle at vertex {vertex}")]
    Inconsistent { vertex: Vertex },
    #[error("cycle sides need a connected plane graph")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("cycle needs at least three vertices")]
    TooShort,
    #[error("vertex {0} repeats on the cycle")]
    Repeated(Vertex),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(Vertex, Vertex),
    #[error("vertex {0} out of range")]
    OutOfRange(Vertex),
}

/// A simple cycle of a [`PlaneGraph`], as a cyclic vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleInPlane(Vec<Vertex>);

impl CycleInPlane {
    pub fn new(p: &PlaneGraph, vertices: Vec<Vertex>) -> Result<Self, CycleError> {
        if vertices.len() < 3 {
            return Err(CycleError::TooShort);
        }
        let mut seen = vec![false; p.n()];
        for &v in &vertices {
            if v >= p.n() {
                return Err(CycleError::OutOfRange(v));
            }
            if seen[v] {
                return Err(CycleError::Repeated(v));
            }
            seen[v] = true;
        }
        let k = vertices.len();
        for i in 0..k {
            let (a, b) = (vertices[i], vertices[(i + 1) % k]);
            if !p.has_edge(a, b) {
                return Err(CycleError::NotAdjacent(a, b));
            }
        }
        Ok(CycleInPlane(vertices))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }
}

impl fmt::Display for CycleInPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn k4_plane() -> OnePlaneDrawing {
        let (d, dissolved) = OnePlaneDrawing::realize(families::complete(4), &[]).unwrap();
        assert!(dissolved.is_empty());
        d
    }

    /// K5 with the single crossing v0v2 x v1v3.
    pub(crate) fn k5_one_crossing() -> OnePlaneDrawing {
        let (d, dissolved) =
            OnePlaneDrawing::realize(families::complete(5), &[Crossing::new((0, 2), (1, 3))]).unwrap();
        assert!(dissolved.is_empty());
        d
    }

    #[test]
    fn plane_k4_accepted() {
        let d = k4_plane();
        assert_eq!(d.crossing_count(), 0);
        let p = d.planarize();
        assert_eq!(p.faces().len(), 4);
        assert!(p.euler_check());
        assert_eq!(p.fake_count(), 0);
        assert!(p.fake_triangles().is_empty());
        assert!(p.type_i_four_cycles().is_empty());
    }

    #[test]
    fn adjacent_crossing_rejected() {
        let mut data = k4_plane().into_data();
        data.crossings.push(Crossing::new((0, 1), (0, 2)));
        data.fake_rotations.push(vec![1, 0, 2, 0]);
        let report = validate_drawing(&data);
        assert_eq!(report.count("adjacent-edge-crossing"), 1);
        assert!(matches!(OnePlaneDrawing::new(data), Err(DrawingError::Invalid(_))));
    }

    #[test]
    fn k5_drawing_planarizes() {
        let d = k5_one_crossing();
        assert!(validate_drawing(d.data()).is_valid());
        let p = d.planarize();
        assert_eq!(p.n(), 6);
        assert_eq!(p.edge_count(), 12);
        assert!(p.euler_check());
        assert_eq!(p.degree(5), 4);
    }

    #[test]
    fn plane_c4_has_two_faces() {
        let (d, _) = OnePlaneDrawing::realize(families::cycle(4), &[]).unwrap();
        assert_eq!(d.planarize().faces().len(), 2);
    }

    #[test]
    fn k4_outer_triangle_sides() {
        let d = k4_plane();
        let p = d.planarize();
        let cycle = CycleInPlane::new(&p, vec![0, 1, 2]).unwrap();
        let (a, b) = p.cycle_sides(&cycle).unwrap();
        let mut all = a.clone();
        all.extend(&b);
        assert_eq!(all, vec![3]);
        assert!(!p.is_separating_cycle(&cycle).unwrap());
        for face in p.faces() {
            let c = CycleInPlane::new(&p, face.clone()).unwrap();
            assert!(!p.is_separating_cycle(&c).unwrap());
        }
    }

    #[test]
    fn cycle_validation() {
        let p = k4_plane().planarize();
        assert_eq!(CycleInPlane::new(&p, vec![0, 1]), Err(CycleError::TooShort));
        assert_eq!(CycleInPlane::new(&p, vec![0, 1, 0]), Err(CycleError::Repeated(0)));
        let p = k5_one_crossing().planarize();
        // v0 v2 is crossed, so not a planarization edge
        assert_eq!(CycleInPlane::new(&p, vec![0, 2, 4]), Err(CycleError::NotAdjacent(0, 2)));
    }

    #[test]
    fn k5_fake_triangles() {
        let p = k5_one_crossing().planarize();
        // fake vertex 5 is adjacent to v0..v3; v0v1, v1v2, v2v3, v3v0 are
        // uncrossed edges between ends of different crossing edges
        assert_eq!(
            p.fake_triangles(),
            vec![[5, 0, 1], [5, 0, 3], [5, 1, 2], [5, 2, 3]]
        );
    }

    #[test]
    fn restrict_examples() {
        let d = k5_one_crossing();
        let all: Vec<String> = d.base().names().to_vec();
        assert_eq!(d.restrict(&all).unwrap(), d);
        // drop v3: edge v1v3 disappears, the crossing dissolves
        let r = d.restrict(&["v0", "v1", "v2", "v4"]).unwrap();
        assert_eq!(r.crossing_count(), 0);
        assert_eq!(r.base().e(), 6);
        assert!(r.planarize().euler_check());
        let empty: [&str; 0] = [];
        let r = d.restrict(&empty).unwrap();
        assert_eq!(r.base().n(), 0);
        assert!(d.restrict(&["zz"]).is_err());
    }

    #[test]
    fn rotation_lookup() {
        let (d, _) = OnePlaneDrawing::realize(families::star(3), &[]).unwrap();
        assert_eq!(d.rotation("l0").unwrap(), vec!["c".to_string()]);
        assert_eq!(d.rotation("c").unwrap().len(), 3);
        assert!(d.rotation("nope").is_err());
    }

    #[test]
    fn non_planar_crossing_set_rejected() {
        assert!(matches!(
            OnePlaneDrawing::realize(families::complete(5), &[]),
            Err(DrawingError::NotPlanar)
        ));
    }
}
