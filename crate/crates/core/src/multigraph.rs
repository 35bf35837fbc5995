//! Undirected multigraphs with loops and parallel edges.
//!
//! Edges are identified by their position in the edge list, which stays
//! stable for the lifetime of a value; derived graphs renumber explicitly.

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, count: n });
                }
            }
        }
        Ok(MultiGraph { n, edges })
    }

    pub fn edgeless(n: usize) -> Self {
        MultiGraph { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<(usize, usize)> {
        self.edges.get(e).copied().ok_or(Error::InvalidEdge {
            edge: e,
            count: self.edges.len(),
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::InvalidVertex { vertex: x, count: self.n });
            }
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    /// Adds a vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|(u, v)| u == v)
    }

    /// Incidence lists: for each vertex, `(neighbour, edge id)` in edge order.
    /// A loop appears twice in its vertex's list.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        adj
    }

    /// Edge ids whose removal disconnects their component, ascending.
    pub fn bridges(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .blocks()
            .into_iter()
            .filter(|b| b.len() == 1)
            .map(|b| b[0])
            .collect();
        out.sort_unstable();
        out
    }

    pub fn has_bridge(&self) -> bool {
        self.blocks().iter().any(|b| b.len() == 1)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Biconnected blocks as sorted lists of edge ids. Loops belong to no
    /// block; a block with a single edge is a bridge.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        const NONE: usize = usize::MAX;
        let adj = self.adjacency();
        let mut disc = vec![NONE; self.n];
        let mut low = vec![0usize; self.n];
        let mut time = 0usize;
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut blocks = Vec::new();

        struct Frame {
            v: usize,
            parent_edge: usize,
            next: usize,
        }

        for root in 0..self.n {
            if disc[root] != NONE {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut stack = vec![Frame { v: root, parent_edge: NONE, next: 0 }];
            while let Some(frame) = stack.last_mut() {
                let v = frame.v;
                if frame.next < adj[v].len() {
                    let (w, e) = adj[v][frame.next];
                    frame.next += 1;
                    if e == frame.parent_edge || w == v {
                        continue;
                    }
                    if disc[w] == NONE {
                        edge_stack.push(e);
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push(Frame { v: w, parent_edge: e, next: 0 });
                    } else if disc[w] < disc[v] {
                        edge_stack.push(e);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    let done = stack.pop().unwrap();
                    if let Some(parent) = stack.last() {
                        let u = parent.v;
                        low[u] = low[u].min(low[done.v]);
                        if low[done.v] >= disc[u] {
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push(e);
                                if e == done.parent_edge {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks
    }

    /// Identifies `u` and `v`, deleting every edge between them. The merged
    /// vertex takes id `min(u, v)`; ids above `max(u, v)` shift down by one.
    pub fn contract(&self, u: usize, v: usize) -> Result<MultiGraph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfContract(u));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| !((a == u && b == v) || (a == v && b == u)))
            .map(|&(a, b)| (merge_id(a, keep, gone), merge_id(b, keep, gone)))
            .collect();
        Ok(MultiGraph { n: self.n - 1, edges })
    }

    /// Contracts the single edge `e`: its endpoints merge (renumbered as in
    /// [`MultiGraph::contract`]) and any other edge between them becomes a
    /// loop. Contracting a loop deletes it.
    pub fn contract_edge(&self, e: usize) -> Result<MultiGraph> {
        let (u, v) = self.edge(e)?;
        if u == v {
            return self.delete_edge(e);
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &(a, b))| (merge_id(a, keep, gone), merge_id(b, keep, gone)))
            .collect();
        Ok(MultiGraph { n: self.n - 1, edges })
    }

    pub fn delete_edge(&self, e: usize) -> Result<MultiGraph> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(MultiGraph { n: self.n, edges })
    }

    /// The subgraph formed by the given edges, with vertices renumbered in
    /// order of first appearance. Also returns the new-to-old vertex map.
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> (MultiGraph, Vec<usize>) {
        let mut map = vec![usize::MAX; self.n];
        let mut back = Vec::new();
        let mut edges = Vec::with_capacity(edge_ids.len());
        for &e in edge_ids {
            let (u, v) = self.edges[e];
            for x in [u, v] {
                if map[x] == usize::MAX {
                    map[x] = back.len();
                    back.push(x);
                }
            }
            edges.push((map[u], map[v]));
        }
        (MultiGraph { n: back.len(), edges }, back)
    }

    /// The subgraph induced by `vertices` (in the given order).
    pub fn induced(&self, vertices: &[usize]) -> MultiGraph {
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            map[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| map[a] != usize::MAX && map[b] != usize::MAX)
            .map(|&(a, b)| (map[a], map[b]))
            .collect();
        MultiGraph { n: vertices.len(), edges }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::InvalidVertex { vertex: v, count: self.n });
        }
        Ok(())
    }
}

fn merge_id(x: usize, keep: usize, gone: usize) -> usize {
    match x.cmp(&gone) {
        std::cmp::Ordering::Equal => keep,
        std::cmp::Ordering::Greater => x - 1,
        std::cmp::Ordering::Less => x,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> MultiGraph {
        MultiGraph::new(n, edges.to_vec()).unwrap()
    }

    fn cycle(n: usize) -> MultiGraph {
        g(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    #[test]
    fn rejects_out_of_range_endpoints() {
        assert_eq!(
            MultiGraph::new(2, vec![(0, 2)]),
            Err(Error::InvalidVertex { vertex: 2, count: 2 })
        );
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(g(3, &[(0, 1), (1, 2)]).bridges(), vec![0, 1]);
        assert!(cycle(4).bridges().is_empty());
        assert_eq!(g(3, &[(0, 1), (0, 1), (1, 2)]).bridges(), vec![2]);
    }

    #[test]
    fn loops_are_never_bridges() {
        assert!(g(1, &[(0, 0)]).bridges().is_empty());
        assert_eq!(g(2, &[(0, 0), (0, 1), (1, 1)]).bridges(), vec![1]);
    }

    #[test]
    fn blocks_of_bowtie() {
        let bowtie = g(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let mut blocks = bowtie.blocks();
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(bowtie.bridges().is_empty());
    }

    #[test]
    fn component_examples() {
        assert_eq!(MultiGraph::edgeless(3).components(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(g(4, &[(0, 2), (1, 3)]).components(), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(cycle(5).components().len(), 1);
    }

    #[test]
    fn contract_examples() {
        let tri = cycle(3);
        let c = tri.contract(0, 1).unwrap();
        assert_eq!(c.vertex_count(), 2);
        assert_eq!(c.edges(), &[(0, 1), (1, 0)]);

        let pair = g(2, &[(0, 1), (1, 0)]);
        let c = pair.contract(1, 0).unwrap();
        assert_eq!(c.vertex_count(), 1);
        assert_eq!(c.edge_count(), 0);

        let path = g(3, &[(0, 1), (1, 2)]);
        let c = path.contract(0, 2).unwrap();
        assert_eq!(c.vertex_count(), 2);
        assert_eq!(c.edges(), &[(0, 1), (1, 0)]);
    }

    #[test]
    fn contract_errors() {
        let tri = cycle(3);
        assert_eq!(tri.contract(1, 1), Err(Error::SelfContract(1)));
        assert_eq!(tri.contract(0, 3), Err(Error::InvalidVertex { vertex: 3, count: 3 }));
    }

    #[test]
    fn contract_renumbers_above_removed_vertex() {
        let path = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let c = path.contract(3, 1).unwrap();
        assert_eq!(c.edges(), &[(0, 1), (1, 2), (2, 1), (1, 3)]);
    }

    #[test]
    fn contract_edge_turns_parallels_into_loops() {
        let pair = g(3, &[(0, 1), (1, 0), (1, 2)]);
        let c = pair.contract_edge(0).unwrap();
        assert_eq!(c.edges(), &[(0, 0), (0, 1)]);
    }

    #[test]
    fn delete_examples() {
        let pair = g(2, &[(0, 1), (0, 1)]);
        assert_eq!(pair.delete_edge(0).unwrap().edge_count(), 1);
        let k2 = g(2, &[(0, 1)]);
        let d = k2.delete_edge(0).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count()), (2, 0));
        let l = g(1, &[(0, 0)]).delete_edge(0).unwrap();
        assert!(!l.has_loop());
        assert_eq!(k2.delete_edge(1), Err(Error::InvalidEdge { edge: 1, count: 1 }));
    }

    #[test]
    fn deleting_a_bridge_splits_a_component() {
        let h = g(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 4), (4, 5), (5, 3)]);
        let before = h.components().len();
        let bridges = h.bridges();
        assert_eq!(bridges, vec![3]);
        for e in 0..h.edge_count() {
            let after = h.delete_edge(e).unwrap().components().len();
            assert_eq!(after == before + 1, bridges.contains(&e), "edge {e}");
        }
    }

    #[test]
    fn degree_counts_loops_twice() {
        let h = g(2, &[(0, 0), (0, 1)]);
        assert_eq!(h.degree(0), 3);
        assert_eq!(h.degree(1), 1);
    }
}
