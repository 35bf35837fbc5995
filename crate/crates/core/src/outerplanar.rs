//! Outerplanar multigraphs: outer-cycle recognition, the dual vertex join
//! tree, and flow polynomials through the planar duality `F(G) = P(G*) / t`.
//!
//! A biconnected outerplanar graph is a polygon with non-crossing chords.
//! Its bounded faces are the regions cut out by the chords; the outer face
//! becomes the apex of the dual, so the dual is a tree of bounded faces plus
//! an apex joined once per outer-cycle edge.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;
use crate::polyring::{chromatic_cycle, IntPoly};
use crate::vjtree::{chromatic_vjtree, VertexJoinTree};

/// Hamiltonian outer cycle of a biconnected outerplanar multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterCycle {
    /// Vertices in cyclic order.
    pub order: Vec<usize>,
    /// Simple edges not on the cycle, as `(min, max)` pairs.
    pub chords: Vec<(usize, usize)>,
    /// Multiplicity of each simple edge, keyed by `(min, max)`.
    pub parallel_count: BTreeMap<(usize, usize), usize>,
    /// Number of loops removed.
    pub loop_count: usize,
}

impl OuterCycle {
    fn count(&self, u: usize, v: usize) -> usize {
        self.parallel_count[&key(u, v)]
    }
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

pub fn find_outer_cycle(g: &MultiGraph) -> Result<OuterCycle> {
    let n = g.vertex_count();
    let mut parallel_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut loop_count = 0;
    for &(u, v) in g.edges() {
        if u == v {
            loop_count += 1;
        } else {
            *parallel_count.entry(key(u, v)).or_insert(0) += 1;
        }
    }

    if n == 2 {
        return match parallel_count.get(&(0, 1)) {
            Some(&k) if k >= 2 => Ok(OuterCycle {
                order: vec![0, 1],
                chords: Vec::new(),
                parallel_count,
                loop_count,
            }),
            Some(_) => Err(Error::NotBiconnected("single edge is a bridge".into())),
            None => Err(Error::NotBiconnected("graph is disconnected".into())),
        };
    }
    if n < 2 {
        return Err(Error::NotBiconnected(format!("{n} vertices")));
    }

    let simple = MultiGraph::new(n, parallel_count.keys().copied().collect())?;
    let blocks = simple.blocks();
    if blocks.len() != 1 || blocks[0].len() != simple.edge_count() {
        return Err(Error::NotBiconnected(format!(
            "{} blocks in the underlying simple graph",
            blocks.len()
        )));
    }
    if simple.components().len() != 1 {
        return Err(Error::NotBiconnected("graph is disconnected".into()));
    }

    let order = degree2_eliminate(n, parallel_count.keys().copied())?;

    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut on_cycle = BTreeSet::new();
    for i in 0..n {
        let e = key(order[i], order[(i + 1) % n]);
        if !parallel_count.contains_key(&e) {
            return Err(Error::NotOuterplanar(format!(
                "cycle step {}-{} is not an edge",
                e.0, e.1
            )));
        }
        on_cycle.insert(e);
    }
    let chords: Vec<(usize, usize)> = parallel_count
        .keys()
        .filter(|e| !on_cycle.contains(e))
        .copied()
        .collect();
    check_laminar(&chords, &pos)?;

    Ok(OuterCycle { order, chords, parallel_count, loop_count })
}

/// Repeatedly removes the smallest degree-2 vertex, linking its neighbours,
/// until a triangle remains; then reinserts vertices in reverse to recover the
/// Hamiltonian cycle.
fn degree2_eliminate(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> Result<Vec<usize>> {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (u, v) in edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    let mut alive = n;
    let mut removed = vec![false; n];
    let mut candidates: BTreeSet<usize> = (0..n).filter(|&v| adj[v].len() == 2).collect();
    let mut eliminated = Vec::with_capacity(n);

    while alive > 3 {
        let Some(v) = candidates.pop_first() else {
            return Err(Error::NotOuterplanar("no vertex of degree 2 left".into()));
        };
        if removed[v] || adj[v].len() != 2 {
            continue;
        }
        let mut it = adj[v].iter().copied();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        adj[a].remove(&v);
        adj[b].remove(&v);
        adj[v].clear();
        adj[a].insert(b);
        adj[b].insert(a);
        removed[v] = true;
        alive -= 1;
        eliminated.push((v, a, b));
        for x in [a, b] {
            if adj[x].len() == 2 {
                candidates.insert(x);
            } else {
                candidates.remove(&x);
            }
        }
    }

    let rest: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    if rest.iter().any(|&v| adj[v].len() != 2) {
        return Err(Error::NotOuterplanar("elimination did not end in a triangle".into()));
    }
    let (mut next, mut prev) = (vec![usize::MAX; n], vec![usize::MAX; n]);
    for i in 0..3 {
        next[rest[i]] = rest[(i + 1) % 3];
        prev[rest[(i + 1) % 3]] = rest[i];
    }
    for &(v, a, b) in eliminated.iter().rev() {
        let (x, y) = if next[a] == b {
            (a, b)
        } else if next[b] == a {
            (b, a)
        } else {
            return Err(Error::NotOuterplanar(format!(
                "vertex {v} cannot be reinserted between {a} and {b}"
            )));
        };
        next[x] = v;
        prev[v] = x;
        next[v] = y;
        prev[y] = v;
    }

    let mut order = Vec::with_capacity(n);
    let mut v = 0;
    loop {
        order.push(v);
        v = next[v];
        if v == 0 {
            break;
        }
    }
    if order.len() != n {
        return Err(Error::NotOuterplanar("cycle does not visit every vertex".into()));
    }
    Ok(order)
}

fn check_laminar(chords: &[(usize, usize)], pos: &[usize]) -> Result<()> {
    let mut intervals: Vec<(usize, usize)> = chords
        .iter()
        .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .collect();
    intervals.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut stack: Vec<usize> = Vec::new();
    for (i, j) in intervals {
        while stack.last().is_some_and(|&top| top <= i) {
            stack.pop();
        }
        if let Some(&top) = stack.last() {
            if j > top {
                return Err(Error::NotOuterplanar("chords cross".into()));
            }
        }
        stack.push(j);
    }
    Ok(())
}

/// Bounded faces of the polygon-with-chords structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLayout {
    /// Parent face and the chord shared with it; `None` for the face on the
    /// closing cycle edge `order[n-1]`-`order[0]`.
    pub parent: Vec<Option<(usize, (usize, usize))>>,
    /// Face owning cycle edge `order[k]`-`order[k+1]` (cyclically).
    pub owner: Vec<usize>,
    /// Number of sides of each face in the underlying simple graph.
    pub sizes: Vec<usize>,
}

/// Faces found by a stack sweep over the cyclic order. Requires at least
/// three vertices.
pub fn face_layout(oc: &OuterCycle) -> FaceLayout {
    let n = oc.order.len();
    let mut pos = vec![0; n];
    for (i, &v) in oc.order.iter().enumerate() {
        pos[v] = i;
    }
    let mut intervals: Vec<(usize, usize, (usize, usize))> = oc
        .chords
        .iter()
        .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v]), (u, v)))
        .collect();
    intervals.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));

    let mut parent = vec![None];
    let mut sizes = vec![0];
    let mut owner = vec![0; n];
    let mut stack = vec![(0usize, n - 1)];
    let mut next = 0;
    for (k, slot) in owner.iter_mut().enumerate().take(n - 1) {
        while stack.last().unwrap().1 <= k {
            stack.pop();
        }
        while next < intervals.len() && intervals[next].0 == k {
            let (_, j, chord) = intervals[next];
            let p = stack.last().unwrap().0;
            let f = parent.len();
            parent.push(Some((p, chord)));
            sizes.push(1);
            sizes[p] += 1;
            stack.push((f, j));
            next += 1;
        }
        *slot = stack.last().unwrap().0;
    }
    for &f in &owner {
        sizes[f] += 1;
    }
    FaceLayout { parent, owner, sizes }
}

/// Dual of the multigraph behind `oc`, with the outer face as apex. Returns
/// the tree and the number of loops that were stripped.
pub fn build_dual(oc: &OuterCycle) -> (VertexJoinTree, usize) {
    let n = oc.order.len();
    let mut edges = Vec::new();
    let mut mult: Vec<u32> = Vec::new();

    // Each extra parallel copy of an outer edge adds a digon face stacked
    // between the face and the apex.
    let hang_digons = |face: usize, k: usize, edges: &mut Vec<_>, mult: &mut Vec<u32>| {
        if k == 1 {
            mult[face] += 1;
            return;
        }
        let mut prev = face;
        for _ in 0..k - 1 {
            let d = mult.len();
            mult.push(0);
            edges.push((prev, d));
            prev = d;
        }
        mult[prev] += 1;
    };

    if n == 2 {
        let k = oc.count(oc.order[0], oc.order[1]);
        if k == 2 {
            mult.push(2);
        } else {
            mult.push(1);
            hang_digons(0, k - 1, &mut edges, &mut mult);
        }
    } else {
        let layout = face_layout(oc);
        let faces = layout.sizes.len();
        mult = vec![0; faces];
        for (f, p) in layout.parent.iter().enumerate() {
            if let Some((p, (u, v))) = *p {
                let mut prev = p;
                for _ in 1..oc.count(u, v) {
                    let d = mult.len();
                    mult.push(0);
                    edges.push((prev, d));
                    prev = d;
                }
                edges.push((prev, f));
            }
        }
        for (k, &f) in layout.owner.iter().enumerate() {
            let c = oc.count(oc.order[k], oc.order[(k + 1) % n]);
            hang_digons(f, c, &mut edges, &mut mult);
        }
    }
    let tree = VertexJoinTree::new(mult.len(), edges, mult)
        .expect("dual of an outer cycle is a tree");
    (tree, oc.loop_count)
}

/// Flow polynomial of an outerplanar multigraph.
pub fn flow_outerplanar(g: &MultiGraph) -> Result<IntPoly> {
    let loops = g.loop_count();
    let loopless: Vec<usize> = (0..g.edge_count())
        .filter(|&e| g.edges()[e].0 != g.edges()[e].1)
        .collect();
    let (h, _) = g.edge_subgraph(&loopless);
    let mut result = IntPoly::linear(-1).pow(loops as u32);
    if h.has_bridge() {
        // Still certify outerplanarity of the bridgeless blocks.
        for block in h.blocks().into_iter().filter(|b| b.len() > 1) {
            find_outer_cycle(&h.edge_subgraph(&block).0)?;
        }
        return Ok(IntPoly::zero());
    }
    let t = IntPoly::t();
    for block in h.blocks() {
        let (b, _) = h.edge_subgraph(&block);
        let oc = find_outer_cycle(&b)?;
        let (dual, _) = build_dual(&oc);
        result = result.mul(&chromatic_vjtree(&dual)?.exact_div(&t)?);
    }
    Ok(result)
}

/// Chromatic polynomial of a biconnected outerplanar block from its face
/// sizes: the faces are glued along single edges.
fn chromatic_block(oc: &OuterCycle) -> Result<IntPoly> {
    if oc.order.len() == 2 {
        return chromatic_cycle(2);
    }
    let sizes = face_layout(oc).sizes;
    let edge = chromatic_cycle(2)?;
    let mut p = IntPoly::one();
    for &s in &sizes {
        p = p.mul(&chromatic_cycle(s)?);
    }
    p.exact_div(&edge.pow(sizes.len() as u32 - 1))
}

/// Chromatic polynomial of an outerplanar multigraph, built from its
/// biconnected blocks.
pub fn chromatic_outerplanar(g: &MultiGraph) -> Result<IntPoly> {
    if g.has_loop() {
        return Ok(IntPoly::zero());
    }
    let t = IntPoly::t();
    let mut p = IntPoly::one();
    let blocks = g.blocks();
    for block in &blocks {
        let (b, _) = g.edge_subgraph(block);
        let q = if b.vertex_count() == 2 {
            chromatic_cycle(2)?
        } else {
            chromatic_block(&find_outer_cycle(&b)?)?
        };
        p = p.mul(&q);
    }
    // Blocks of a component meet in single vertices; isolated vertices
    // contribute t each.
    let components = g.components().len() as u32;
    p.mul(&t.pow(components)).exact_div(&t.pow(blocks.len() as u32))
}
