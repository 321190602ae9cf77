use crate::error::{Error, Result};
use crate::point_set::{PointSet, MAX_POINTS};

/// Simple undirected graph on vertices 0..n-1, stored as adjacency bitmasks.
/// No loops, no multi-edges. Equality is labeled equality (same n, same edges).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<PointSet>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        Ok(Graph {
            n,
            adj: vec![PointSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::PointOutOfRange(u));
            }
            if v >= n {
                return Err(Error::PointOutOfRange(v));
            }
            if u == v {
                return Err(Error::SamePoint(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n).unwrap();
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adding an existing edge is a no-op; loops are rejected by assertion.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> PointSet {
        self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> PointSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as (u, v) pairs with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn is_clique(&self, s: PointSet) -> bool {
        s.iter().all(|u| s.without(u).is_subset(self.adj[u]))
    }

    /// A clique is maximal when no outside vertex is adjacent to all of it.
    pub fn is_maximal_clique(&self, s: PointSet) -> bool {
        !s.is_empty()
            && self.is_clique(s)
            && (self.vertices() - s)
                .iter()
                .all(|v| !s.is_subset(self.adj[v]))
    }

    /// All maximal cliques, sorted; plain recursive Bron-Kerbosch, desk scale.
    pub fn maximal_cliques(&self) -> Vec<PointSet> {
        let mut out = Vec::new();
        self.bron_kerbosch(PointSet::EMPTY, self.vertices(), PointSet::EMPTY, &mut out);
        out.sort();
        out
    }

    fn bron_kerbosch(&self, r: PointSet, mut p: PointSet, mut x: PointSet, out: &mut Vec<PointSet>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        while let Some(v) = p.first() {
            self.bron_kerbosch(r.with(v), p & self.adj[v], x & self.adj[v], out);
            p.remove(v);
            x.insert(v);
        }
    }

    /// Subgraph induced by `s`, relabeled to 0..|s|-1; returns the new-to-old map.
    pub fn induced(&self, s: PointSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let mut g = Graph::new(map.len()).unwrap();
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, map)
    }
}

/// Hypergraph on vertices 0..n-1. Hyperedges may repeat and, unlike the usual
/// convention, may be empty: the clique-to-hyperedge construction genuinely
/// produces an empty hyperedge for a clique all of whose vertices are
/// simplicial, and the line graph treats it as an isolated vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hypergraph {
    n: usize,
    hyperedges: Vec<PointSet>,
}

impl Hypergraph {
    pub fn new(n: usize, hyperedges: Vec<PointSet>) -> Result<Hypergraph> {
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        let full = PointSet::full(n);
        for e in &hyperedges {
            if !e.is_subset(full) {
                return Err(Error::PointOutOfRange(e.minus(full).first().unwrap()));
            }
        }
        Ok(Hypergraph { n, hyperedges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperedges(&self) -> &[PointSet] {
        &self.hyperedges
    }

    /// Largest hyperedge size; 0 for an empty edge list.
    pub fn rank(&self) -> usize {
        self.hyperedges.iter().map(|e| e.len()).max().unwrap_or(0)
    }
}
