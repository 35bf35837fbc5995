//! Chromatic polynomials of trees joined to an extra apex vertex.
//!
//! A [`VertexJoinTree`] is a tree on `0..n` plus an implicit apex joined to
//! each tree vertex by `mult[v]` parallel edges. Its chromatic polynomial is
//! computed by a bottom-up sweep over a rooted copy of the tree: every node
//! `a` carries the pair `(P(T_a), P(H_a))`, where `T_a` is the subtree below
//! `a` together with the apex and `H_a` is `T_a` with `a` identified with the
//! apex. Children fold into their parent through gluing along the apex (for
//! `H_a`) or along the edge `a`-apex (for `T_a`).

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;
use crate::polyring::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexJoinTree {
    n: usize,
    edges: Vec<(usize, usize)>,
    mult: Vec<u32>,
}

impl VertexJoinTree {
    /// Validates that `edges` form a spanning tree of `0..n`. `mult` must
    /// have one entry per tree vertex.
    pub fn new(n: usize, edges: Vec<(usize, usize)>, mult: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTree("a tree needs at least one vertex".into()));
        }
        if mult.len() != n {
            return Err(Error::InvalidSize { min: n, got: mult.len() });
        }
        if edges.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "expected {} edges for {n} vertices, got {}",
                n - 1,
                edges.len()
            )));
        }
        let mut dsu = Dsu::new(n);
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, count: n });
                }
            }
            if !dsu.union(u, v) {
                return Err(Error::InvalidTree(format!("edge {u}-{v} closes a cycle")));
            }
        }
        Ok(VertexJoinTree { n, edges, mult })
    }

    /// Builds the tree from `(vertex, multiplicity)` pairs; repeated vertices
    /// add up.
    pub fn with_joins(n: usize, edges: Vec<(usize, usize)>, joins: &[(usize, u32)]) -> Result<Self> {
        let mut mult = vec![0u32; n];
        for &(v, m) in joins {
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, count: n });
            }
            mult[v] += m;
        }
        Self::new(n, edges, mult)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    pub fn multiplicity(&self, v: usize) -> u32 {
        self.mult[v]
    }

    /// Whether `v` is joined to the apex at least once.
    pub fn is_joined(&self, v: usize) -> bool {
        self.mult[v] > 0
    }

    /// Size of the underlying set of joined vertices.
    pub fn join_count(&self) -> usize {
        self.mult.iter().filter(|&&m| m > 0).count()
    }

    /// Id the apex receives in [`VertexJoinTree::realize`].
    pub fn apex(&self) -> usize {
        self.n
    }

    /// The explicit multigraph: tree edges first, then one edge `(v, apex)`
    /// per unit of multiplicity, in vertex order.
    pub fn realize(&self) -> MultiGraph {
        let mut edges = self.edges.clone();
        for (v, &m) in self.mult.iter().enumerate() {
            edges.extend(std::iter::repeat_n((v, self.n), m as usize));
        }
        MultiGraph::new(self.n + 1, edges).expect("tree endpoints are validated")
    }

    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

/// Clamps every multiplicity to at most one; parallel joins do not change
/// the chromatic polynomial.
pub fn reduce_multiplicities(t: &VertexJoinTree) -> VertexJoinTree {
    VertexJoinTree {
        n: t.n,
        edges: t.edges.clone(),
        mult: t.mult.iter().map(|&m| m.min(1)).collect(),
    }
}

/// Closed forms for fewer than two joined vertices: with none the apex is
/// isolated, with one the whole graph is a tree on `n + 1` vertices.
pub fn chromatic_small_s(t: &VertexJoinTree) -> Option<IntPoly> {
    let n = t.n as u32;
    let tm1 = IntPoly::linear(-1);
    match t.join_count() {
        0 => Some(IntPoly::monomial(2).mul(&tm1.pow(n - 1))),
        1 => Some(IntPoly::t().mul(&tm1.pow(n))),
        _ => None,
    }
}

/// Result of pruning the tree down to the part that lies on cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeReduction {
    /// Number of bridges in the joined graph.
    pub bridges: usize,
    /// Original ids of the pruned vertices, ascending.
    pub removed: Vec<usize>,
    /// Remaining tree, renumbered.
    pub core: VertexJoinTree,
    /// `core_to_original[i]` is the original id of core vertex `i`.
    pub core_to_original: Vec<usize>,
}

/// Repeatedly prunes unjoined leaves. With at least two joined vertices the
/// survivors are the minimal subtree spanning all joined vertices, every
/// pruned tree edge is a bridge and every surviving edge lies on a cycle
/// through the apex.
pub fn strip_bridges(t: &VertexJoinTree) -> BridgeReduction {
    let adj = t.neighbours();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; t.n];
    let mut queue: VecDeque<usize> = (0..t.n)
        .filter(|&v| degree[v] <= 1 && !t.is_joined(v))
        .collect();
    let mut remaining = t.n;
    while let Some(v) = queue.pop_front() {
        if !alive[v] || remaining == 1 {
            continue;
        }
        alive[v] = false;
        remaining -= 1;
        for &w in &adj[v] {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] <= 1 && !t.is_joined(w) {
                    queue.push_back(w);
                }
            }
        }
    }

    let core_to_original: Vec<usize> = (0..t.n).filter(|&v| alive[v]).collect();
    let removed: Vec<usize> = (0..t.n).filter(|&v| !alive[v]).collect();
    let mut index = vec![usize::MAX; t.n];
    for (i, &v) in core_to_original.iter().enumerate() {
        index[v] = i;
    }
    let edges = t
        .edges
        .iter()
        .filter(|&&(u, v)| alive[u] && alive[v])
        .map(|&(u, v)| (index[u], index[v]))
        .collect();
    let mult = core_to_original.iter().map(|&v| t.mult[v]).collect();
    BridgeReduction {
        bridges: removed.len(),
        removed,
        core: VertexJoinTree { n: core_to_original.len(), edges, mult },
        core_to_original,
    }
}

/// `(P(T_a), P(H_a))` for one node of the sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeState {
    pub pt: IntPoly,
    pub ph: IntPoly,
}

/// A rooted, levelled copy of a core tree.
#[derive(Clone, Debug)]
pub struct LeveledTree {
    pub root: usize,
    /// Distance from the root.
    pub level: Vec<usize>,
    pub parent: Vec<Option<usize>>,
    /// Children of each vertex, ascending by id.
    pub children: Vec<Vec<usize>>,
    /// Vertices of each level, ascending by id.
    pub levels: Vec<Vec<usize>>,
    pub node_state: Vec<Option<NodeState>>,
}

impl LeveledTree {
    /// Deepest level index.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }
}

/// Roots `core` at its smallest joined vertex (vertex 0 if none is joined).
pub fn build_leveled(core: &VertexJoinTree) -> LeveledTree {
    let root = (0..core.n).find(|&v| core.is_joined(v)).unwrap_or(0);
    build_leveled_with_root(core, root).expect("root is a vertex of the core")
}

pub fn build_leveled_with_root(core: &VertexJoinTree, root: usize) -> Result<LeveledTree> {
    if root >= core.n {
        return Err(Error::InvalidVertex { vertex: root, count: core.n });
    }
    let adj = core.neighbours();
    let mut level = vec![usize::MAX; core.n];
    let mut parent = vec![None; core.n];
    let mut children = vec![Vec::new(); core.n];
    let mut levels: Vec<Vec<usize>> = Vec::new();
    level[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        if levels.len() <= level[v] {
            levels.push(Vec::new());
        }
        levels[level[v]].push(v);
        for &w in &adj[v] {
            if level[w] == usize::MAX {
                level[w] = level[v] + 1;
                parent[w] = Some(v);
                children[v].push(w);
                queue.push_back(w);
            }
        }
    }
    for l in &mut levels {
        l.sort_unstable();
    }
    Ok(LeveledTree {
        root,
        level,
        parent,
        children,
        levels,
        node_state: vec![None; core.n],
    })
}

/// Runs the level-by-level sweep and returns `P(T_root)`, the chromatic
/// polynomial of the core joined to the apex. Every node keeps its state.
pub fn sweep(lt: &mut LeveledTree, core: &VertexJoinTree) -> Result<IntPoly> {
    run_sweep(lt, core, true)
}

/// Like [`sweep`], but drops each child's state once its parent is done, so
/// at most one frontier of polynomials is alive at a time.
pub fn sweep_streaming(lt: &mut LeveledTree, core: &VertexJoinTree) -> Result<IntPoly> {
    run_sweep(lt, core, false)
}

fn run_sweep(lt: &mut LeveledTree, core: &VertexJoinTree, retain: bool) -> Result<IntPoly> {
    let t = IntPoly::t();
    let edge = t.mul(&IntPoly::linear(-1));

    for depth in (0..lt.levels.len()).rev() {
        for &a in &lt.levels[depth] {
            let kids = &lt.children[a];
            let state = if kids.is_empty() {
                // T_a is either the edge a-apex or two isolated vertices; H_a
                // is a single vertex.
                NodeState {
                    pt: if core.is_joined(a) {
                        edge.clone()
                    } else {
                        IntPoly::monomial(2)
                    },
                    ph: t.clone(),
                }
            } else {
                let mut children = Vec::with_capacity(kids.len());
                for &c in kids {
                    let child = if retain {
                        lt.node_state[c].clone()
                    } else {
                        lt.node_state[c].take()
                    }
                    .expect("children are processed one level earlier");
                    children.push((c, child));
                }
                // Gluing k pieces divides by t^(k-1) (along the apex) and by
                // (t(t-1))^(k-1) (along the edge a-apex). Every piece is
                // itself divisible once, so all but the largest piece are
                // divided before multiplying.
                let anchor = (0..children.len())
                    .max_by_key(|&i| (children[i].1.pt.degree(), std::cmp::Reverse(i)))
                    .unwrap();
                let mut h_factors = Vec::with_capacity(children.len());
                let mut t_factors = Vec::with_capacity(children.len());
                for (i, (c, child)) in children.into_iter().enumerate() {
                    let NodeState { pt, ph } = child;
                    let (mut h, mut tt) = if core.is_joined(c) {
                        // H~_c = T_c and T~_c = T_c plus a triangle on c-apex.
                        let mut tt = pt.clone();
                        tt.mul_linear_assign(-2);
                        (pt, tt)
                    } else {
                        // H~_c = T_c + c-apex = T_c - H_c, and
                        // T~_c = (t-2) P(T_c) + P(H_c) = (t-1) P(T_c) - P(H~_c).
                        let mut h = ph;
                        h.rsub_assign(&pt);
                        let mut tt = pt;
                        tt.mul_linear_assign(-1);
                        tt -= &h;
                        (h, tt)
                    };
                    if i != anchor {
                        h = h.exact_div(&t)?;
                        tt = tt.exact_div(&edge)?;
                    }
                    h_factors.push(h);
                    t_factors.push(tt);
                }
                let ph = IntPoly::product(h_factors);
                let p1 = IntPoly::product(t_factors);
                let mut pt = p1;
                if !core.is_joined(a) {
                    pt += &ph;
                }
                NodeState { pt, ph }
            };
            lt.node_state[a] = Some(state);
        }
    }
    Ok(lt.node_state[lt.root].as_ref().expect("root processed").pt.clone())
}

/// Chromatic polynomial of the joined graph: reduce multiplicities, handle
/// fewer than two joins in closed form, strip bridges, sweep the core and
/// restore one factor `(t - 1)` per bridge.
pub fn chromatic_vjtree(t: &VertexJoinTree) -> Result<IntPoly> {
    let reduced = reduce_multiplicities(t);
    if let Some(p) = chromatic_small_s(&reduced) {
        return Ok(p);
    }
    let reduction = strip_bridges(&reduced);
    let mut lt = build_leveled(&reduction.core);
    let mut p = sweep_streaming(&mut lt, &reduction.core)?;
    for _ in 0..reduction.bridges {
        p.mul_linear_assign(-1);
    }
    Ok(p)
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
