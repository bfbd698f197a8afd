#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use oneplanar::format::{self, GraphFile};
use oneplanar::graph::Graph;
use rand::Rng;

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture_text(name: &str) -> String {
    let path = fixtures_dir().join(format!("{name}.opg"));
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn load_fixture(name: &str) -> GraphFile {
    format::parse(&fixture_text(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn negative_text(name: &str) -> String {
    let path = fixtures_dir().join("negative").join(format!("{name}.opg"));
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Graph on `v0 .. v{n-1}` with one edge per set bit of `mask`, pairs in
/// lexicographic index order.
pub fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if mask[bit] {
                edges.push((names[a].clone(), names[b].clone()));
            }
            bit += 1;
        }
    }
    Graph::new(&names, &edges).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mask: Vec<bool> = (0..n * n.saturating_sub(1) / 2).map(|_| rng.gen_bool(p)).collect();
    graph_from_mask(n, &mask)
}

/// The same graph with vertex `i` renamed to `names[perm[i]]`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let names: Vec<String> = (0..g.n()).map(|i| format!("w{}", perm[i])).collect();
    let edges: Vec<(String, String)> = g
        .edges()
        .iter()
        .map(|&(a, b)| (names[a].clone(), names[b].clone()))
        .collect();
    Graph::new(&names, &edges).unwrap()
}

fn connected_without(g: &Graph, removed: u32) -> bool {
    let n = g.n();
    let Some(start) = (0..n).find(|&v| removed >> v & 1 == 0) else {
        return true;
    };
    let mut seen = removed | 1 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen.count_ones() as usize == n
}

/// Smallest vertex cut found by trying every subset in order of size;
/// `n - 1` when no cut leaves two or more vertices disconnected.
pub fn brute_force_connectivity(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    for size in 0..n.saturating_sub(1) {
        for removed in 0u32..1 << n {
            if removed.count_ones() as usize == size && !connected_without(g, removed) {
                return size;
            }
        }
    }
    n.saturating_sub(1)
}

fn count_faces(n: usize, rot: &[Vec<usize>]) -> usize {
    let pos = |v: usize, w: usize| rot[v].iter().position(|&x| x == w).unwrap();
    let mut used: Vec<Vec<bool>> = (0..n).map(|v| vec![false; rot[v].len()]).collect();
    let mut faces = 0;
    for v in 0..n {
        for i in 0..rot[v].len() {
            if used[v][i] {
                continue;
            }
            faces += 1;
            let (mut a, mut j) = (v, i);
            while !used[a][j] {
                used[a][j] = true;
                let b = rot[a][j];
                let k = rot[b].len();
                j = (pos(b, a) + 1) % k;
                a = b;
            }
        }
    }
    faces
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Number of rotation systems [`brute_force_planar`] would enumerate.
pub fn rotation_system_count(g: &Graph) -> u64 {
    g.vertices()
        .map(|v| (1..g.degree(v).max(1) as u64).product::<u64>())
        .fold(1u64, |a, b| a.saturating_mul(b))
}

/// Planarity by enumerating every rotation system and looking for one whose
/// face count satisfies Euler's formula on each nontrivial component.
pub fn brute_force_planar(g: &Graph) -> bool {
    let n = g.n();
    let e = g.e();
    if e == 0 {
        return true;
    }
    let touched = g.vertices().filter(|&v| g.degree(v) > 0).count();
    let comps = g.component_count() - (n - touched);
    let target = e + 2 * comps - touched;
    let choices: Vec<Vec<Vec<usize>>> = g
        .vertices()
        .map(|v| {
            let nb = g.neighbors(v);
            if nb.is_empty() {
                return vec![Vec::new()];
            }
            permutations(&nb[1..])
                .into_iter()
                .map(|mut p| {
                    p.insert(0, nb[0]);
                    p
                })
                .collect()
        })
        .collect();
    let mut idx = vec![0; n];
    loop {
        let rot: Vec<Vec<usize>> = (0..n).map(|v| choices[v][idx[v]].clone()).collect();
        if count_faces(n, &rot) == target {
            return true;
        }
        let mut v = 0;
        loop {
            if v == n {
                return false;
            }
            idx[v] += 1;
            if idx[v] < choices[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}
