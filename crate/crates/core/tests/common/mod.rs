#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use vjpoly::{IntPoly, MultiGraph, PhiString, VertexJoinTree};

/// Random tree on `n` vertices with shuffled labels and edge orientations.
pub fn random_tree_edges<R: Rng>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..n)
        .map(|v| {
            let (a, b) = (label[rng.gen_range(0..v)], label[v]);
            if rng.gen_bool(0.5) {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    edges.shuffle(rng);
    edges
}

/// Random vertex join tree. `kind` 0 forces no joins and 1 a single joined
/// vertex; anything else draws every multiplicity from `0..=max_mult`.
pub fn random_vjt<R: Rng>(rng: &mut R, max_n: usize, max_mult: u32, kind: usize) -> VertexJoinTree {
    let n = rng.gen_range(1..=max_n);
    let edges = random_tree_edges(rng, n);
    let mut mult = vec![0u32; n];
    match kind {
        0 => {}
        1 => mult[rng.gen_range(0..n)] = rng.gen_range(1..=max_mult),
        _ => mult.iter_mut().for_each(|m| *m = rng.gen_range(0..=max_mult)),
    }
    VertexJoinTree::new(n, edges, mult).unwrap()
}

/// Caterpillar: a spine path of `n / 2` vertices with the remaining vertices
/// hung on random spine vertices; multiplicities uniform in `0..=2`.
pub fn caterpillar<R: Rng>(rng: &mut R, n: usize) -> VertexJoinTree {
    let spine = n / 2;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    edges.extend((spine..n).map(|v| (rng.gen_range(0..spine), v)));
    let mult = (0..n).map(|_| rng.gen_range(0..=2)).collect();
    VertexJoinTree::new(n, edges, mult).unwrap()
}

/// Non-crossing chords of a convex `n`-gon: a random subset of the chords of
/// a random triangulation.
fn random_chords<R: Rng>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    let mut chords = Vec::new();
    let mut stack = vec![(0, n - 1)];
    while let Some((i, j)) = stack.pop() {
        if j - i < 2 {
            continue;
        }
        let k = rng.gen_range(i + 1..j);
        for (a, b) in [(i, k), (k, j)] {
            if b - a >= 2 {
                if rng.gen_bool(0.5) {
                    chords.push((a, b));
                }
                stack.push((a, b));
            }
        }
    }
    chords
}

/// Edges of a biconnected outerplanar block on `n >= 2` vertices, with
/// random parallel copies (at most `max_copies` per edge).
fn random_block<R: Rng>(rng: &mut R, n: usize, max_copies: usize) -> Vec<(usize, usize)> {
    let simple: Vec<(usize, usize)> = if n == 2 {
        vec![(0, 1), (0, 1)]
    } else {
        let mut e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        e.extend(random_chords(rng, n));
        e
    };
    let mut edges = Vec::new();
    for (u, v) in simple {
        let copies = if rng.gen_bool(0.25) { rng.gen_range(1..=max_copies) } else { 1 };
        edges.extend(std::iter::repeat_n((u, v), copies));
    }
    edges
}

/// Builder that places components into one vertex range.
struct Assembly {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Assembly {
    /// Adds `block` on `size` fresh vertices, or glues its vertex 0 onto
    /// `glue` if given. Returns the global ids of the block's vertices.
    fn add(&mut self, size: usize, block: Vec<(usize, usize)>, glue: Option<usize>) -> Vec<usize> {
        let ids: Vec<usize> = (0..size)
            .map(|i| match (i, glue) {
                (0, Some(g)) => g,
                _ => {
                    self.n += 1;
                    self.n - 1
                }
            })
            .collect();
        self.edges.extend(block.into_iter().map(|(u, v)| (ids[u], ids[v])));
        ids
    }
}

/// Random outerplanar multigraph. `kind` selects the shape: 0..=3 a single
/// block, 4 a disconnected union, 5 blocks linked by a bridge, 6 blocks
/// sharing cut vertices, 7 a tree. Every kind then gets up to two loops.
pub fn random_outerplanar<R: Rng>(rng: &mut R, kind: usize) -> MultiGraph {
    let mut a = Assembly { n: 0, edges: Vec::new() };
    match kind {
        0..=3 => {
            let n = rng.gen_range(3..=10);
            a.add(n, random_block(rng, n, 3), None);
        }
        4 => {
            for _ in 0..2 {
                let n = rng.gen_range(2..=5);
                a.add(n, random_block(rng, n, 3), None);
            }
            if rng.gen_bool(0.5) {
                a.n += 1;
            }
        }
        5 => {
            let n1 = rng.gen_range(2..=5);
            let first = a.add(n1, random_block(rng, n1, 2), None);
            if rng.gen_bool(0.5) {
                let n2 = rng.gen_range(2..=5);
                let second = a.add(n2, random_block(rng, n2, 2), None);
                a.edges.push((first[rng.gen_range(0..n1)], second[rng.gen_range(0..n2)]));
            } else {
                let leaf = a.n;
                a.n += 1;
                a.edges.push((first[rng.gen_range(0..n1)], leaf));
            }
        }
        6 => {
            let n1 = rng.gen_range(3..=5);
            let first = a.add(n1, random_block(rng, n1, 2), None);
            for _ in 0..rng.gen_range(1..=2) {
                let n2 = rng.gen_range(2..=4);
                let at = first[rng.gen_range(0..n1)];
                a.add(n2, random_block(rng, n2, 3), Some(at));
            }
        }
        _ => {
            let n = rng.gen_range(2..=7);
            a.n = n;
            a.edges = random_tree_edges(rng, n);
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        if a.n > 0 {
            let v = rng.gen_range(0..a.n);
            a.edges.push((v, v));
        }
    }
    relabel(rng, a.n, a.edges)
}

/// Applies a random vertex permutation and edge order.
pub fn relabel<R: Rng>(rng: &mut R, n: usize, edges: Vec<(usize, usize)>) -> MultiGraph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    edges.shuffle(rng);
    MultiGraph::new(n, edges).unwrap()
}

pub fn random_phi<R: Rng>(rng: &mut R, max_len: usize, max_entry: u32) -> PhiString {
    let n = rng.gen_range(1..=max_len);
    PhiString::new((0..n).map(|_| rng.gen_range(0..=max_entry)).collect()).unwrap()
}

/// All phi-strings of length `1..=max_len` with entries in `0..=max_entry`.
pub fn all_phis(max_len: usize, max_entry: u32) -> Vec<PhiString> {
    let mut out = Vec::new();
    for n in 1..=max_len {
        let mut v = vec![0u32; n];
        loop {
            out.push(PhiString::new(v.clone()).unwrap());
            let mut i = 0;
            while i < n && v[i] == max_entry {
                v[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            v[i] += 1;
        }
    }
    out
}

pub fn is_rotation(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|r| a[r..].iter().chain(&a[..r]).eq(b)))
}

/// Checks that `p` looks like the chromatic polynomial of a loopless graph on
/// `n` vertices: degree `n`, monic, zero constant term, alternating signs.
pub fn chromatic_shape(p: &IntPoly, n: usize) -> Result<(), String> {
    if p.degree() != Some(n) {
        return Err(format!("degree {:?}, expected {n}", p.degree()));
    }
    if !p.leading_coeff().is_some_and(|c| *c == 1.into()) {
        return Err("not monic".into());
    }
    if n > 0 && p.coeff(0) != 0.into() {
        return Err("nonzero constant term".into());
    }
    for (k, c) in p.coeffs().iter().enumerate() {
        let sign_ok = if (n - k).is_multiple_of(2) { *c >= 0.into() } else { *c <= 0.into() };
        if !sign_ok {
            return Err(format!("coefficient of t^{k} has the wrong sign"));
        }
    }
    Ok(())
}

/// `F(G, 2)` is 1 exactly when every vertex has even degree.
pub fn parity_value(g: &MultiGraph) -> i64 {
    if (0..g.vertex_count()).all(|v| g.degree(v).is_multiple_of(2)) {
        1
    } else {
        0
    }
}
