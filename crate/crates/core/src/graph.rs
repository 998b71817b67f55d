//! Undirected backbone graph: adjacency, reachability, hop distances and the
//! combinatorial (all-pairs BFS) Wiener index.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::float::Float;
use crate::grid::GridVertex;

/// Undirected simple graph over backbone devices, with an optional 3-D grid
/// position per node. Vertex indices are `0..node_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackboneGraph {
    node_count: usize,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    coords: Vec<GridVertex>,
}

impl BackboneGraph {
    /// Build a graph from an edge list. Coordinates default to the origin;
    /// use [`BackboneGraph::with_coords`] when geometry matters.
    pub fn new(node_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_coords(node_count, edges, vec![GridVertex::ORIGIN; node_count])
    }

    /// Build a graph with one grid position per node.
    pub fn with_coords(
        node_count: usize,
        edges: &[(usize, usize)],
        coords: Vec<GridVertex>,
    ) -> Result<Self> {
        if node_count == 0 {
            return Err(Error::Domain("graph must have at least one node".into()));
        }
        if coords.len() != node_count {
            return Err(Error::Domain(format!(
                "expected {} coordinates, got {}",
                node_count,
                coords.len()
            )));
        }
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u >= node_count || v >= node_count {
                return Err(Error::Domain(format!(
                    "edge ({u}, {v}) out of range for {node_count} nodes"
                )));
            }
            if u == v {
                return Err(Error::Domain(format!("self-loop at node {u}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adjacency = vec![Vec::new(); node_count];
        for &(u, v) in &set {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self { node_count, edges: set, adjacency, coords })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as canonical `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn coord(&self, v: usize) -> GridVertex {
        self.coords[v]
    }

    pub fn coords(&self) -> &[GridVertex] {
        &self.coords
    }

    /// Copy of this graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        edges.push((u, v));
        Self::with_coords(self.node_count, &edges, self.coords.clone())
    }

    /// True iff all nodes are reachable from node 0.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.node_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.node_count
    }

    /// Hop distances from `source`; `None` for unreachable nodes.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.node_count];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Exact Wiener index: half the sum of all pairwise hop distances,
    /// computed by all-pairs breadth-first search. Independent of the
    /// spectral route and used as its oracle.
    pub fn wiener_bfs<T: Float>(&self) -> Result<T> {
        let mut total: u64 = 0;
        for s in 0..self.node_count {
            for d in self.bfs_distances(s) {
                match d {
                    Some(h) => total += h as u64,
                    None => return Err(Error::Disconnected),
                }
            }
        }
        // Each unordered pair counted twice.
        Ok(T::from_u64(total / 2).expect("wiener sum fits scalar"))
    }

    /// Serialize in the edge-list text format: header `n=<count>`, then one
    /// `u v` pair per line in canonical order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n={}", self.node_count);
        for (u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parse the edge-list text format produced by [`Self::to_edge_list`].
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let n: usize = header
            .trim()
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse(format!("expected `n=<count>` header, got `{header}`")))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad node count: {e}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .ok_or_else(|| Error::Parse(format!("bad edge line `{line}`")))?
                .parse()
                .map_err(|e| Error::Parse(format!("bad vertex in `{line}`: {e}")))?;
            let v: usize = it
                .next()
                .ok_or_else(|| Error::Parse(format!("bad edge line `{line}`")))?
                .parse()
                .map_err(|e| Error::Parse(format!("bad vertex in `{line}`: {e}")))?;
            if it.next().is_some() {
                return Err(Error::Parse(format!("trailing tokens in `{line}`")));
            }
            edges.push((u, v));
        }
        Self::new(n, &edges)
    }
}

/// The ten-node, twelve-link reference backbone used across the test suite.
pub fn ten_node_backbone() -> BackboneGraph {
    BackboneGraph::new(
        10,
        &[
            (0, 1),
            (0, 5),
            (0, 6),
            (1, 2),
            (2, 3),
            (2, 7),
            (3, 4),
            (4, 7),
            (4, 9),
            (5, 6),
            (7, 8),
            (8, 9),
        ],
    )
    .expect("static edge list is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_node_is_connected() {
        let g = BackboneGraph::new(1, &[]).unwrap();
        assert!(g.is_connected());
    }

    #[test]
    fn two_isolated_nodes_are_not_connected() {
        let g = BackboneGraph::new(2, &[]).unwrap();
        assert!(!g.is_connected());
    }

    #[test]
    fn reference_backbone_is_connected() {
        let g = ten_node_backbone();
        assert_eq!(g.node_count(), 10);
        assert_eq!(g.edge_count(), 12);
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_self_loops_and_out_of_range() {
        assert!(BackboneGraph::new(3, &[(0, 0)]).is_err());
        assert!(BackboneGraph::new(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = BackboneGraph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn wiener_bfs_path3() {
        let g = BackboneGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let w: f64 = g.wiener_bfs().unwrap();
        assert_eq!(w, 4.0);
    }

    #[test]
    fn wiener_bfs_triangle() {
        let g = BackboneGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let w: f64 = g.wiener_bfs().unwrap();
        assert_eq!(w, 3.0);
    }

    #[test]
    fn wiener_bfs_rejects_disconnected() {
        let g = BackboneGraph::new(2, &[]).unwrap();
        assert!(matches!(g.wiener_bfs::<f64>(), Err(Error::Disconnected)));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = ten_node_backbone();
        let text = g.to_edge_list();
        assert!(text.starts_with("n=10\n"));
        let back = BackboneGraph::from_edge_list(&text).unwrap();
        assert_eq!(g, back);
    }
}
