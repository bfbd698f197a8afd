//! Planarity testing with embedding extraction.
//!
//! Each biconnected block is embedded with the Demoucron–Malgrange–Pertuiset
//! face-insertion algorithm; block rotations are then concatenated at cut
//! vertices, which places every block inside a single corner of the others.
//! Quadratic per block, which is ample at the sizes used here (planarizations
//! of graphs with at most a few dozen vertices).
//!
//! Rotations follow the crate-wide convention: `rot[v]` lists the neighbors
//! of `v` counter-clockwise, and the face to the left of the dart `u -> v`
//! continues with `v -> w` where `w` precedes `u` in `rot[v]`.

/// Rotation system on vertices `0..n`.
pub type Rotation = Vec<Vec<usize>>;

/// Returns a planar rotation system for the simple graph on `0..n` with the
/// given edges, or `None` if the graph is not planar.
pub fn planar_embedding(n: usize, edges: &[(usize, usize)]) -> Option<Rotation> {
    PlanarityTester::new().embedding(n, edges)
}

pub fn is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    PlanarityTester::new().is_planar(n, edges)
}

const NONE: usize = usize::MAX;

/// Planarity tester that keeps its working buffers between calls.
#[derive(Default)]
pub struct PlanarityTester {
    n: usize,
    off: Vec<usize>,
    nbr: Vec<usize>,
    disc: Vec<usize>,
    low: Vec<usize>,
    frames: Vec<(usize, usize, usize)>,
    edge_stack: Vec<(usize, usize)>,
    /// Sorted vertex lists of the blocks, back to back.
    block_vertices: Vec<usize>,
    /// Per block: range into `block_vertices` and edge count.
    block_ranges: Vec<(usize, usize, usize)>,
    in_block: Vec<bool>,
    /// Row 0: embedded vertices. Row `1 + v`: embedded neighbors of `v`.
    emb: Sets,
    face_sets: Sets,
    faces: Vec<Vec<usize>>,
    spare: Vec<Vec<usize>>,
    frags: Vec<Fragment>,
    frag_inner: Vec<usize>,
    frag_att: Vec<u64>,
    owner: Vec<usize>,
    pred: Vec<usize>,
    queue: Vec<usize>,
    path: Vec<usize>,
}

/// A bridge of the embedded subgraph: a chord between embedded vertices or
/// a component of the rest, with its attachment set stored separately.
struct Fragment {
    chord: Option<(usize, usize)>,
    first_attachment: usize,
}

impl PlanarityTester {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_planar(&mut self, n: usize, edges: &[(usize, usize)]) -> bool {
        self.run(n, edges, None)
    }

    pub fn embedding(&mut self, n: usize, edges: &[(usize, usize)]) -> Option<Rotation> {
        let mut rot = vec![Vec::new(); n];
        self.run(n, edges, Some(&mut rot)).then_some(rot)
    }

    fn run(&mut self, n: usize, edges: &[(usize, usize)], mut rot: Option<&mut Rotation>) -> bool {
        if n >= 3 && edges.len() > 3 * n - 6 {
            return false;
        }
        self.load(n, edges);
        self.find_blocks();
        for b in 0..self.block_ranges.len() {
            let (start, end, edge_count) = self.block_ranges[b];
            if edge_count == 1 {
                if let Some(rot) = rot.as_deref_mut() {
                    let (u, v) = (self.block_vertices[start], self.block_vertices[start + 1]);
                    rot[u].push(v);
                    rot[v].push(u);
                }
                continue;
            }
            if !self.embed_block(start, end, edge_count) {
                return false;
            }
            if let Some(rot) = rot.as_deref_mut() {
                self.append_rotation(start, end, rot);
            }
        }
        true
    }

    fn load(&mut self, n: usize, edges: &[(usize, usize)]) {
        self.n = n;
        self.off.clear();
        self.off.resize(n + 1, 0);
        for &(u, v) in edges {
            self.off[u + 1] += 1;
            self.off[v + 1] += 1;
        }
        for i in 0..n {
            self.off[i + 1] += self.off[i];
        }
        self.nbr.clear();
        self.nbr.resize(2 * edges.len(), 0);
        self.pred.clear();
        self.pred.extend_from_slice(&self.off[..n]);
        for &(u, v) in edges {
            self.nbr[self.pred[u]] = v;
            self.pred[u] += 1;
            self.nbr[self.pred[v]] = u;
            self.pred[v] += 1;
        }
        for v in 0..n {
            self.nbr[self.off[v]..self.off[v + 1]].sort_unstable();
        }
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbr[self.off[v]..self.off[v + 1]]
    }

    /// Tarjan's biconnected components, emitted in a deterministic order.
    fn find_blocks(&mut self) {
        let n = self.n;
        self.disc.clear();
        self.disc.resize(n, NONE);
        self.low.clear();
        self.low.resize(n, 0);
        self.block_vertices.clear();
        self.block_ranges.clear();
        self.edge_stack.clear();
        let mut time = 0;
        for root in 0..n {
            if self.disc[root] != NONE || self.off[root] == self.off[root + 1] {
                continue;
            }
            self.disc[root] = time;
            self.low[root] = time;
            time += 1;
            // frames: (vertex, parent, next position in `nbr`)
            self.frames.clear();
            self.frames.push((root, NONE, self.off[root]));
            while let Some(&(v, parent, pos)) = self.frames.last() {
                if pos < self.off[v + 1] {
                    self.frames.last_mut().expect("frame").2 += 1;
                    let w = self.nbr[pos];
                    if self.disc[w] == NONE {
                        self.edge_stack.push((v, w));
                        self.disc[w] = time;
                        self.low[w] = time;
                        time += 1;
                        self.frames.push((w, v, self.off[w]));
                    } else if w != parent && self.disc[w] < self.disc[v] {
                        self.edge_stack.push((v, w));
                        self.low[v] = self.low[v].min(self.disc[w]);
                    }
                    continue;
                }
                self.frames.pop();
                if parent == NONE {
                    continue;
                }
                self.low[parent] = self.low[parent].min(self.low[v]);
                if self.low[v] < self.disc[parent] {
                    continue;
                }
                let start = self.block_vertices.len();
                let mut count = 0;
                while let Some(e) = self.edge_stack.pop() {
                    self.block_vertices.extend([e.0, e.1]);
                    count += 1;
                    if e == (parent, v) {
                        break;
                    }
                }
                let list = &mut self.block_vertices[start..];
                list.sort_unstable();
                let mut kept = 0;
                for r in 0..list.len() {
                    if r == 0 || list[r] != list[kept - 1] {
                        list[kept] = list[r];
                        kept += 1;
                    }
                }
                self.block_vertices.truncate(start + kept);
                self.block_ranges.push((start, start + kept, count));
            }
        }
    }

    fn take_vec(&mut self) -> Vec<usize> {
        let mut v = self.spare.pop().unwrap_or_default();
        v.clear();
        v
    }

    /// Demoucron–Malgrange–Pertuiset on one 2-connected block. Edges of the
    /// graph between two block vertices always belong to the block.
    fn embed_block(&mut self, start: usize, end: usize, edge_count: usize) -> bool {
        let m = end - start;
        if edge_count > 3 * m - 6 {
            return false;
        }
        let n = self.n;
        self.in_block.clear();
        self.in_block.resize(n, false);
        for i in start..end {
            self.in_block[self.block_vertices[i]] = true;
        }
        self.emb.reset(n + 1, n);
        self.spare.append(&mut self.faces);

        let mut cycle = self.take_vec();
        self.initial_cycle(self.block_vertices[start], &mut cycle);
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            self.emb.insert(0, a);
            self.emb.insert(1 + a, b);
            self.emb.insert(1 + b, a);
        }
        let mut embedded = cycle.len();
        let mut back = self.take_vec();
        back.extend(cycle.iter().rev());
        self.face_sets.reset(2, n);
        for &v in &cycle {
            self.face_sets.insert(0, v);
            self.face_sets.insert(1, v);
        }
        self.faces.push(cycle);
        self.faces.push(back);

        while embedded < edge_count {
            self.collect_fragments(start, end);
            let words = self.emb.words;
            let mut choice: Option<(usize, usize)> = None;
            for fi in 0..self.frags.len() {
                let att = &self.frag_att[fi * words..(fi + 1) * words];
                let mut first = NONE;
                let mut count = 0;
                for f in 0..self.faces.len() {
                    if subset(att, self.face_sets.row(f)) {
                        count += 1;
                        if first == NONE {
                            first = f;
                        } else {
                            break;
                        }
                    }
                }
                match count {
                    0 => return false,
                    1 => {
                        choice = Some((fi, first));
                        break;
                    }
                    _ => {
                        if choice.is_none() {
                            choice = Some((fi, first));
                        }
                    }
                }
            }
            let (fi, face_idx) = choice.expect("a fragment remains");
            self.fragment_path(fi);
            for i in 1..self.path.len() {
                let (a, b) = (self.path[i - 1], self.path[i]);
                self.emb.insert(1 + a, b);
                self.emb.insert(1 + b, a);
                embedded += 1;
            }
            for i in 0..self.path.len() {
                self.emb.insert(0, self.path[i]);
            }
            self.split_face(face_idx);
        }
        true
    }

    /// A cycle through `s` and its first block neighbor `t`: a BFS path from
    /// `t` to `s` that avoids the edge `ts`.
    fn initial_cycle(&mut self, s: usize, out: &mut Vec<usize>) {
        let t = *self
            .neighbors(s)
            .iter()
            .find(|&&y| self.in_block[y])
            .expect("block vertex has a neighbor");
        self.pred.clear();
        self.pred.resize(self.n, NONE);
        self.pred[t] = t;
        self.queue.clear();
        self.queue.push(t);
        let mut head = 0;
        'bfs: while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for k in self.off[x]..self.off[x + 1] {
                let y = self.nbr[k];
                if !self.in_block[y] || (x == t && y == s) || self.pred[y] != NONE {
                    continue;
                }
                self.pred[y] = x;
                if y == s {
                    break 'bfs;
                }
                self.queue.push(y);
            }
        }
        out.push(s);
        let mut x = self.pred[s];
        while x != t {
            out.push(x);
            x = self.pred[x];
        }
        out.push(t);
    }

    fn collect_fragments(&mut self, start: usize, end: usize) {
        let words = self.emb.words;
        self.frags.clear();
        self.frag_inner.clear();
        self.frag_att.clear();
        for i in start..end {
            let u = self.block_vertices[i];
            if !self.emb.contains(0, u) {
                continue;
            }
            for k in self.off[u]..self.off[u + 1] {
                let v = self.nbr[k];
                if v > u && self.in_block[v] && self.emb.contains(0, v) && !self.emb.contains(1 + u, v) {
                    let base = self.frag_att.len();
                    self.frag_att.resize(base + words, 0);
                    self.frag_att[base + u / 64] |= 1 << (u % 64);
                    self.frag_att[base + v / 64] |= 1 << (v % 64);
                    self.frags.push(Fragment {
                        chord: Some((u, v)),
                        first_attachment: u,
                    });
                }
            }
        }
        self.owner.clear();
        self.owner.resize(self.n, NONE);
        for i in start..end {
            let root = self.block_vertices[i];
            if self.emb.contains(0, root) || self.owner[root] != NONE {
                continue;
            }
            let id = self.frags.len();
            self.owner[root] = id;
            let base = self.frag_att.len();
            self.frag_att.resize(base + words, 0);
            let mut first = NONE;
            let mut k = self.frag_inner.len();
            self.frag_inner.push(root);
            while k < self.frag_inner.len() {
                let x = self.frag_inner[k];
                k += 1;
                for p in self.off[x]..self.off[x + 1] {
                    let y = self.nbr[p];
                    if !self.in_block[y] {
                        continue;
                    }
                    if self.emb.contains(0, y) {
                        self.frag_att[base + y / 64] |= 1 << (y % 64);
                        first = first.min(y);
                    } else if self.owner[y] == NONE {
                        self.owner[y] = id;
                        self.frag_inner.push(y);
                    }
                }
            }
            self.frags.push(Fragment {
                chord: None,
                first_attachment: first,
            });
        }
    }

    /// Fills `path` with a path through fragment `fi` between two distinct
    /// attachment vertices.
    fn fragment_path(&mut self, fi: usize) {
        self.path.clear();
        if let Some((a, b)) = self.frags[fi].chord {
            self.path.extend([a, b]);
            return;
        }
        let a = self.frags[fi].first_attachment;
        self.pred.clear();
        self.pred.resize(self.n, NONE);
        self.queue.clear();
        for k in self.off[a]..self.off[a + 1] {
            let y = self.nbr[k];
            if self.owner[y] == fi && !self.emb.contains(0, y) {
                self.pred[y] = a;
                self.queue.push(y);
            }
        }
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for k in self.off[x]..self.off[x + 1] {
                let y = self.nbr[k];
                if !self.in_block[y] {
                    continue;
                }
                if self.emb.contains(0, y) {
                    if y != a {
                        self.path.push(y);
                        let mut z = x;
                        while z != a {
                            self.path.push(z);
                            z = self.pred[z];
                        }
                        self.path.push(a);
                        self.path.reverse();
                        return;
                    }
                } else if self.pred[y] == NONE {
                    self.pred[y] = x;
                    self.queue.push(y);
                }
            }
        }
        unreachable!("fragments of a 2-connected block have two attachments")
    }

    /// Splits face `idx` along `path`, whose endpoints lie on it.
    fn split_face(&mut self, idx: usize) {
        let mut f1 = self.take_vec();
        let mut f2 = self.take_vec();
        let face = &self.faces[idx];
        let path = &self.path;
        let (a, b) = (path[0], path[path.len() - 1]);
        let len = face.len();
        let ia = face.iter().position(|&v| v == a).expect("a on face");
        let ib = face.iter().position(|&v| v == b).expect("b on face");
        let inner = &path[1..path.len() - 1];

        let mut i = ia;
        loop {
            f1.push(face[i]);
            if i == ib {
                break;
            }
            i = (i + 1) % len;
        }
        f1.extend(inner.iter().rev());
        let mut i = ib;
        loop {
            f2.push(face[i]);
            if i == ia {
                break;
            }
            i = (i + 1) % len;
        }
        f2.extend(inner.iter());

        self.face_sets.clear_row(idx);
        for &v in &f1 {
            self.face_sets.insert(idx, v);
        }
        let row = self.face_sets.push_row();
        for &v in &f2 {
            self.face_sets.insert(row, v);
        }
        let old = std::mem::replace(&mut self.faces[idx], f1);
        self.spare.push(old);
        self.faces.push(f2);
    }

    /// Appends the block's rotations, read off its faces, to `rot`.
    fn append_rotation(&self, start: usize, end: usize, rot: &mut Rotation) {
        let mut succ = std::collections::HashMap::new();
        for face in &self.faces {
            let k = face.len();
            for i in 0..k {
                succ.insert((face[i], face[(i + 1) % k]), face[(i + k - 1) % k]);
            }
        }
        for &v in &self.block_vertices[start..end] {
            let degree = self.neighbors(v).iter().filter(|&&y| self.in_block[y]).count();
            let first = *self.neighbors(v).iter().find(|&&y| self.in_block[y]).expect("neighbor");
            let mut x = first;
            let before = rot[v].len();
            loop {
                rot[v].push(x);
                x = succ[&(v, x)];
                if x == first {
                    break;
                }
                assert!(rot[v].len() - before <= degree, "face structure is inconsistent");
            }
            assert_eq!(rot[v].len() - before, degree, "face structure is inconsistent");
        }
    }
}

/// Word-packed vertex sets over a fixed universe.
#[derive(Default)]
struct Sets {
    words: usize,
    data: Vec<u64>,
}

impl Sets {
    fn reset(&mut self, count: usize, universe: usize) {
        self.words = universe.div_ceil(64).max(1);
        self.data.clear();
        self.data.resize(count * self.words, 0);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    fn insert(&mut self, i: usize, v: usize) {
        self.data[i * self.words + v / 64] |= 1 << (v % 64);
    }

    fn contains(&self, i: usize, v: usize) -> bool {
        self.data[i * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    fn clear_row(&mut self, i: usize) {
        self.data[i * self.words..(i + 1) * self.words].fill(0);
    }

    fn push_row(&mut self) -> usize {
        self.data.resize(self.data.len() + self.words, 0);
        self.data.len() / self.words - 1
    }
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Traces the faces of a rotation system as closed vertex walks.
/// Isolated vertices contribute no walk.
pub fn trace_faces(rot: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = rot.len();
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + rot[v].len();
    }
    let darts = offset[n];
    // position of u in rot[v]
    let mut pos = std::collections::HashMap::with_capacity(darts);
    for v in 0..n {
        for (i, &u) in rot[v].iter().enumerate() {
            pos.insert((v, u), i);
        }
    }
    let mut used = vec![false; darts];
    let mut faces = Vec::new();
    for v in 0..n {
        for i in 0..rot[v].len() {
            if used[offset[v] + i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut ai) = (v, i);
            while !used[offset[a] + ai] {
                used[offset[a] + ai] = true;
                face.push(a);
                let b = rot[a][ai];
                let Some(&j) = pos.get(&(b, a)) else {
                    return faces;
                };
                let deg = rot[b].len();
                ai = (j + deg - 1) % deg;
                a = b;
            }
            faces.push(face);
        }
    }
    faces
}

/// Euler's relation for a rotation system on a possibly disconnected graph:
/// `V - E + F = 1 + C`, counting faces as in a single plane drawing (one
/// shared outer face, one face for an otherwise empty plane).
pub fn euler_holds(rot: &[Vec<usize>]) -> bool {
    let n = rot.len();
    let half_edges: usize = rot.iter().map(Vec::len).sum();
    if half_edges % 2 == 1 {
        return false;
    }
    let e = half_edges / 2;
    let traced = trace_faces(rot).len();
    let isolated = rot.iter().filter(|r| r.is_empty()).count();
    let c = components(rot);
    // every component traces its own outer face; they merge into one
    let faces = (traced + isolated + 1).saturating_sub(c);
    n + faces == 1 + c + e
}

fn components(rot: &[Vec<usize>]) -> usize {
    let n = rot.len();
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
            for &y in &rot[x] {
                if y < n && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}
