//! Simple undirected graphs and the purely graph-theoretic invariants used
//! throughout the crate: degrees, complements, induced subgraphs, line
//! graphs, claws, triangles, bipartiteness and vertex connectivity.
//!
//! Vertices carry opaque ASCII tokens. A [`Graph`] always stores its
//! vertices in lexicographic token order, so vertex indices, iteration and
//! every "first witness" tie-break follow that order.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// Index of a vertex inside a [`Graph`].
pub type Vertex = usize;

/// An undirected edge stored with its smaller endpoint first.
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid vertex token {0:?}")]
    InvalidToken(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("self-loop at {0}")]
    SelfLoop(String),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
}

/// Returns true when `token` can name a vertex: nonempty printable ASCII
/// without whitespace, not starting with `#`, and not the separator `:`.
pub fn is_valid_token(token: &str) -> bool {
    !token.is_empty()
        && token != ":"
        && !token.starts_with('#')
        && token.bytes().all(|b| b.is_ascii_graphic())
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    adj: Vec<Vec<Vertex>>,
    matrix: Vec<bool>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.names)
            .field(
                "edges",
                &self
                    .edges
                    .iter()
                    .map(|&(u, v)| format!("{}-{}", self.names[u], self.names[v]))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl Graph {
    /// Builds a graph from vertex tokens and token pairs.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self, GraphError> {
        let mut names: Vec<String> = Vec::with_capacity(vertices.len());
        for v in vertices {
            let v = v.as_ref();
            if !is_valid_token(v) {
                return Err(GraphError::InvalidToken(v.to_string()));
            }
            names.push(v.to_string());
        }
        let mut sorted = names.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0].clone()));
        }
        let index: HashMap<String, Vertex> =
            sorted.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = *index
                .get(a)
                .ok_or_else(|| GraphError::UnknownVertex(a.to_string()))?;
            let v = *index
                .get(b)
                .ok_or_else(|| GraphError::UnknownVertex(b.to_string()))?;
            if u == v {
                return Err(GraphError::SelfLoop(a.to_string()));
            }
            pairs.push((u, v));
        }
        Self::from_index_edges(sorted, &pairs)
    }

    /// Builds a graph on `names` (which must already be sorted and distinct)
    /// from index pairs.
    pub(crate) fn from_index_edges(names: Vec<String>, pairs: &[Edge]) -> Result<Self, GraphError> {
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]));
        let n = names.len();
        let mut matrix = vec![false; n * n];
        let mut adj = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                return Err(GraphError::SelfLoop(names[a].clone()));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if matrix[u * n + v] {
                return Err(GraphError::DuplicateEdge(names[u].clone(), names[v].clone()));
            }
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
            adj[u].push(v);
            adj[v].push(u);
            edges.push((u, v));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        edges.sort_unstable();
        let index = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Ok(Graph {
            names,
            index,
            adj,
            matrix,
            edges,
        })
    }

    /// Builds a graph with names sorted afresh, remapping index pairs.
    pub(crate) fn from_unsorted(names: Vec<String>, pairs: &[Edge]) -> Result<Self, GraphError> {
        let mut order: Vec<usize> = (0..names.len()).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let mut rank = vec![0; names.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let sorted: Vec<String> = order.iter().map(|&i| names[i].clone()).collect();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0].clone()));
        }
        let remapped: Vec<Edge> = pairs.iter().map(|&(a, b)| (rank[a], rank[b])).collect();
        Self::from_index_edges(sorted, &remapped)
    }

    pub fn empty() -> Self {
        Self::from_index_edges(Vec::new(), &[]).expect("empty graph")
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn e(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, token: &str) -> Option<Vertex> {
        self.index.get(token).copied()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges in lexicographic order, smaller endpoint first.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.matrix[u * self.n() + v]
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    /// Maximum degree; 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    pairs.push((u, v));
                }
            }
        }
        Self::from_index_edges(self.names.clone(), &pairs).expect("complement is simple")
    }

    /// The subgraph induced by the named vertices.
    pub fn induced_subgraph<S: AsRef<str>>(&self, subset: &[S]) -> Result<Graph, GraphError> {
        let mut keep = Vec::with_capacity(subset.len());
        for s in subset {
            let s = s.as_ref();
            keep.push(
                self.index_of(s)
                    .ok_or_else(|| GraphError::UnknownVertex(s.to_string()))?,
            );
        }
        Ok(self.induced_by_indices(&keep))
    }

    /// The subgraph induced by a set of vertex indices; duplicates are ignored.
    pub fn induced_by_indices(&self, subset: &[Vertex]) -> Graph {
        let mut keep = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let pairs: Vec<Edge> = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_index[u] != usize::MAX && new_index[v] != usize::MAX)
            .map(|&(u, v)| (new_index[u], new_index[v]))
            .collect();
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        Self::from_index_edges(names, &pairs).expect("induced subgraph is simple")
    }

    /// Line graph. Each vertex is named `a-b` after the edge it represents.
    pub fn line_graph(&self) -> Graph {
        let names: Vec<String> = self
            .edges
            .iter()
            .map(|&(u, v)| format!("{}-{}", self.names[u], self.names[v]))
            .collect();
        let mut pairs = Vec::new();
        for v in self.vertices() {
            let incident: Vec<usize> = self
                .adj[v]
                .iter()
                .map(|&w| self.edge_index(v, w).expect("edge exists"))
                .collect();
            for i in 0..incident.len() {
                for j in i + 1..incident.len() {
                    pairs.push((incident[i], incident[j]));
                }
            }
        }
        Self::from_unsorted(names, &pairs).expect("line graph is simple")
    }

    /// The first induced claw: smallest center, then the lexicographically
    /// smallest sorted leaf triple.
    pub fn find_induced_claw(&self) -> Option<ClawWitness> {
        for center in self.vertices() {
            let nb = &self.adj[center];
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &c in &nb[j + 1..] {
                        if !self.has_edge(a, c) && !self.has_edge(b, c) {
                            return Some(ClawWitness {
                                center,
                                leaves: [a, b, c],
                            });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_induced_claw().is_none()
    }

    /// The lexicographically first triangle, if any.
    pub fn find_triangle(&self) -> Option<[Vertex; 3]> {
        for &(a, b) in &self.edges {
            for &c in &self.adj[b] {
                if c > b && self.has_edge(a, c) {
                    return Some([a, b, c]);
                }
            }
        }
        None
    }

    /// Two-colours the graph or exhibits an odd cycle.
    pub fn bipartition(&self) -> Bipartiteness {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for root in self.vertices() {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("coloured");
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return Bipartiteness::OddCycle(odd_cycle(&parent, &depth, u, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartiteness::Bipartite(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartiteness::Bipartite(_))
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn component_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut count = 0;
        for root in 0..n {
            if seen[root] {
                continue;
            }
            count += 1;
            seen[root] = true;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Vertex connectivity: `n - 1` for complete graphs, otherwise the
    /// minimum over non-adjacent pairs of the number of internally
    /// vertex-disjoint paths (Menger), found by unit-capacity max-flow on
    /// the vertex-split digraph.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.n();
        if n <= 1 {
            return 0;
        }
        if self.e() == n * (n - 1) / 2 {
            return n - 1;
        }
        if !self.is_connected() {
            return 0;
        }
        let mut net = SplitNetwork::new(self);
        let mut best = self.min_degree();
        for s in 0..n {
            for t in s + 1..n {
                if self.has_edge(s, t) {
                    continue;
                }
                let flow = net.max_flow(s, t, best);
                best = best.min(flow);
                if best == 0 {
                    return 0;
                }
            }
        }
        best
    }

    /// Renders a vertex set as space-separated tokens.
    pub fn render(&self, vs: &[Vertex]) -> String {
        vs.iter()
            .map(|&v| self.names[v].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn odd_cycle(parent: &[usize], depth: &[usize], u: Vertex, w: Vertex) -> Vec<Vertex> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Unit-capacity flow network with every vertex split into an in/out pair.
struct SplitNetwork {
    n: usize,
    // arcs: (to, capacity); arc i ^ 1 is the reverse of arc i
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    base_cap: Vec<u32>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut net = SplitNetwork {
            n,
            head: vec![Vec::new(); 2 * n],
            to: Vec::new(),
            cap: Vec::new(),
            base_cap: Vec::new(),
        };
        // v_in = v, v_out = v + n
        for v in 0..n {
            net.add_arc(v, v + n, 1);
        }
        for &(u, v) in g.edges() {
            net.add_arc(u + n, v, 1);
            net.add_arc(v + n, u, 1);
        }
        net.base_cap = net.cap.clone();
        net
    }

    fn add_arc(&mut self, a: usize, b: usize, c: u32) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// Internally disjoint s-t paths, stopping early once `limit` is reached.
    fn max_flow(&mut self, s: Vertex, t: Vertex, limit: usize) -> usize {
        self.cap.copy_from_slice(&self.base_cap);
        let source = s + self.n;
        let sink = t;
        let mut flow = 0;
        let mut pred = vec![usize::MAX; 2 * self.n];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            'bfs: while let Some(x) = queue.pop_front() {
                for &arc in &self.head[x] {
                    let y = self.to[arc];
                    if self.cap[arc] > 0 && pred[y] == usize::MAX && y != source {
                        pred[y] = arc;
                        if y == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut y = sink;
            while y != source {
                let arc = pred[y];
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                y = self.to[arc ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// An induced `K_{1,3}`: a center adjacent to three pairwise non-adjacent leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClawWitness {
    pub center: Vertex,
    pub leaves: [Vertex; 3],
}

impl ClawWitness {
    /// Checks the witness against a host graph.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let [a, b, c] = self.leaves;
        self.leaves.iter().all(|&l| g.has_edge(self.center, l))
            && !g.has_edge(a, b)
            && !g.has_edge(a, c)
            && !g.has_edge(b, c)
    }

    pub fn render(&self, g: &Graph) -> String {
        format!("{} {}", g.name(self.center), g.render(&self.leaves))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Side assignment per vertex; either side may be empty.
    Bipartite(Vec<bool>),
    /// Vertices of an odd cycle in traversal order.
    OddCycle(Vec<Vertex>),
}

/// Small named graph families used by tests, generators and the CLI.
pub mod families {
    use super::Graph;

    fn numbered(prefix: &str, n: usize) -> Vec<String> {
        let width = n.saturating_sub(1).to_string().len();
        (0..n).map(|i| format!("{prefix}{i:0width$}")).collect()
    }

    fn build(names: Vec<String>, pairs: Vec<(usize, usize)>) -> Graph {
        Graph::from_unsorted(names, &pairs).expect("family graphs are simple")
    }

    pub fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        build(numbered("v", n), pairs)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        build(numbered("v", n), (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    pub fn path(n: usize) -> Graph {
        build(
            numbered("v", n),
            (1..n).map(|i| (i - 1, i)).collect(),
        )
    }

    /// `K_{1,k}` with center `c` and leaves `l0..`.
    pub fn star(k: usize) -> Graph {
        let mut names = vec!["c".to_string()];
        names.extend(numbered("l", k));
        build(names, (1..=k).map(|i| (0, i)).collect())
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut names = numbered("a", a);
        names.extend(numbered("b", b));
        let mut pairs = Vec::new();
        for i in 0..a {
            for j in 0..b {
                pairs.push((i, a + j));
            }
        }
        build(names, pairs)
    }

    /// Complete multipartite graph with the given part sizes. Vertex `p<i>_<j>`
    /// is the j-th member of part i.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let mut names = Vec::new();
        let mut part_of = Vec::new();
        for (i, &size) in parts.iter().enumerate() {
            for j in 0..size {
                names.push(format!("p{i}_{j}"));
                part_of.push(i);
            }
        }
        let mut pairs = Vec::new();
        for u in 0..names.len() {
            for v in u + 1..names.len() {
                if part_of[u] != part_of[v] {
                    pairs.push((u, v));
                }
            }
        }
        build(names, pairs)
    }
}
