//! Posets, the five poset-derived graphs, and the bridge to finite
//! topologies.
//!
//! The bridge is the Alexandrov correspondence in minimal-set form: a poset
//! is stored by its up-sets, and the up-set table of a poset is literally a
//! valid minimal-set table (reflexivity gives x in up(x), transitivity gives
//! downward coherence). Under it x <= y exactly when m(y) is a subset of
//! m(x), the orientation the topology-to-poset round trip uses; with this
//! convention the five poset graphs coincide with G_1 .. G_4 of the bridged
//! topology as labeled graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::point_set::PointSet;
use crate::topology::FiniteTopology;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    n: usize,
    up: Vec<PointSet>, // up[x] = {y : x <= y}, including x
}

impl Poset {
    pub fn from_up_sets(n: usize, up: Vec<PointSet>) -> Result<Poset> {
        // reflexivity + transitivity are the topology invariants
        let t = FiniteTopology::from_min_sets(n, up)?;
        Poset::from_topology(&t)
    }

    /// Reflexive-transitive closure of the given strict relations, with
    /// antisymmetry validated afterwards.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Poset> {
        let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for &(x, y) in relations {
            if x >= n {
                return Err(Error::PointOutOfRange(x));
            }
            if y >= n {
                return Err(Error::PointOutOfRange(y));
            }
            up[x].insert(y);
        }
        loop {
            let mut changed = false;
            for x in 0..n {
                let grown = up[x].iter().fold(up[x], |acc, y| acc | up[y]);
                if grown != up[x] {
                    up[x] = grown;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if up[x].contains(y) && up[y].contains(x) {
                    return Err(Error::PosetCycle(x, y));
                }
            }
        }
        Ok(Poset { n, up })
    }

    pub fn chain(n: usize) -> Poset {
        Poset {
            n,
            up: (0..n).map(|x| (x..n).collect()).collect(),
        }
    }

    pub fn antichain(n: usize) -> Poset {
        Poset {
            n,
            up: (0..n).map(PointSet::singleton).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn up_set(&self, x: usize) -> PointSet {
        self.up[x]
    }

    pub fn down_set(&self, x: usize) -> PointSet {
        (0..self.n).filter(|&a| self.up[a].contains(x)).collect()
    }

    /// Hasse cover pairs (x, y): x < y with nothing strictly between.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.up[x].iter() {
                if y == x {
                    continue;
                }
                let between = (self.up[x] & self.down_set(y)).without(x).without(y);
                if between.is_empty() {
                    out.push((x, y));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Edge xy whenever x and y are comparable.
    pub fn comparability_graph(&self) -> Graph {
        self.build(|x, y| self.le(x, y) || self.le(y, x))
    }

    /// Edge xy whenever some z lies above both.
    pub fn upper_bound_graph(&self) -> Graph {
        self.build(|x, y| (0..self.n).any(|z| self.le(x, z) && self.le(y, z)))
    }

    // Witness pattern shared by the closed upper-bound variants: a lower
    // bound a of x together with b above both a and y.
    fn lower_witness(&self, x: usize, y: usize) -> bool {
        (0..self.n).any(|a| {
            self.le(a, x) && (0..self.n).any(|b| self.le(a, b) && self.le(y, b))
        })
    }

    /// Edge xy whenever the witness pattern holds in both directions.
    pub fn half_closed_ub_graph(&self) -> Graph {
        self.build(|x, y| self.lower_witness(x, y) && self.lower_witness(y, x))
    }

    /// Edge xy whenever the witness pattern holds in at least one direction.
    pub fn fully_closed_ub_graph(&self) -> Graph {
        self.build(|x, y| self.lower_witness(x, y) || self.lower_witness(y, x))
    }

    /// Edge xy whenever lower bounds a of x and b of y share an upper bound.
    pub fn extended_closed_ub_graph(&self) -> Graph {
        self.build(|x, y| {
            (0..self.n).any(|a| {
                self.le(a, x)
                    && (0..self.n).any(|b| {
                        self.le(b, y) && (0..self.n).any(|c| self.le(a, c) && self.le(b, c))
                    })
            })
        })
    }

    fn build<F: Fn(usize, usize) -> bool>(&self, adj: F) -> Graph {
        let mut g = Graph::new(self.n).unwrap();
        for x in 0..self.n {
            for y in x + 1..self.n {
                if adj(x, y) {
                    g.add_edge(x, y);
                }
            }
        }
        g
    }

    /// The Alexandrov topology with m(x) = up(x).
    pub fn to_topology(&self) -> FiniteTopology {
        FiniteTopology::from_min_sets(self.n, self.up.clone()).unwrap()
    }

    /// Containment order of the minimal sets: x <= y iff m(y) ⊆ m(x), which
    /// makes up(x) = m(x) verbatim. Fails when two minimal sets coincide
    /// (antisymmetry would break); distinguish first.
    pub fn from_topology(t: &FiniteTopology) -> Result<Poset> {
        if let Some((x, y)) = t.first_equal_pair() {
            return Err(Error::NonDistinctMinSets(x, y));
        }
        Ok(Poset {
            n: t.n(),
            up: t.min_sets().to_vec(),
        })
    }
}

const ORIENTATION_LIMIT: usize = 10;

struct OrientState {
    out: Vec<PointSet>, // oriented u -> v
}

impl OrientState {
    fn oriented(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v) || self.out[v].contains(u)
    }

    /// Orient u -> v and chase the transitivity consequences; false on
    /// contradiction (reverse already set, or a required edge is missing).
    fn orient(&mut self, g: &Graph, u: usize, v: usize) -> bool {
        if self.out[v].contains(u) {
            return false;
        }
        if self.out[u].contains(v) {
            return true;
        }
        self.out[u].insert(v);
        // u -> v -> w forces u -> w
        for w in self.out[v].iter().collect::<Vec<_>>() {
            if w == u || !g.has_edge(u, w) || !self.orient(g, u, w) {
                return false;
            }
        }
        // w -> u -> v forces w -> v
        for w in (0..g.n()).filter(|&w| self.out[w].contains(u)).collect::<Vec<_>>() {
            if w == v || !g.has_edge(w, v) || !self.orient(g, w, v) {
                return false;
            }
        }
        true
    }
}

fn orient_backtrack(g: &Graph, edges: &[(usize, usize)], state: &OrientState) -> Option<Vec<PointSet>> {
    let next = edges.iter().find(|&&(u, v)| !state.oriented(u, v));
    let Some(&(u, v)) = next else {
        return Some(state.out.clone());
    };
    for (a, b) in [(u, v), (v, u)] {
        let mut trial = OrientState {
            out: state.out.clone(),
        };
        if trial.orient(g, a, b) {
            if let Some(res) = orient_backtrack(g, edges, &trial) {
                return Some(res);
            }
        }
    }
    None
}

/// A transitive orientation of g, as directed pairs, or None when g is not a
/// comparability graph. Backtracking over edge orientations with forcing
/// propagation; guarded to desk-scale graphs.
pub fn transitive_orientation(g: &Graph) -> Result<Option<Vec<(usize, usize)>>> {
    if g.n() > ORIENTATION_LIMIT {
        return Err(Error::TooLarge {
            what: "graph for transitive orientation",
            got: g.n(),
            limit: ORIENTATION_LIMIT,
        });
    }
    let edges = g.edges();
    let state = OrientState {
        out: vec![PointSet::EMPTY; g.n()],
    };
    let Some(out) = orient_backtrack(g, &edges, &state) else {
        return Ok(None);
    };
    // final transitivity sweep; the propagation makes this a no-op
    for u in 0..g.n() {
        for v in out[u].iter() {
            for w in out[v].iter() {
                assert!(u != w && out[u].contains(w), "forcing left a broken triple");
            }
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..g.n())
        .flat_map(|u| out[u].iter().map(move |v| (u, v)))
        .collect();
    pairs.sort_unstable();
    Ok(Some(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::separation::separation_graph;
    use crate::axiom::Axiom;

    fn vee() -> Poset {
        // a < b, a < c with a = 0
        Poset::from_relations(3, &[(0, 1), (0, 2)]).unwrap()
    }

    fn wedge() -> Poset {
        // b < a, c < a with a = 0
        Poset::from_relations(3, &[(1, 0), (2, 0)]).unwrap()
    }

    #[test]
    fn relation_closure_and_cycles() {
        let p = Poset::from_relations(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.le(0, 2));
        assert_eq!(p.cover_relations(), vec![(0, 1), (1, 2)]);
        assert!(matches!(
            Poset::from_relations(2, &[(0, 1), (1, 0)]),
            Err(Error::PosetCycle(0, 1))
        ));
    }

    #[test]
    fn comparability_examples() {
        assert_eq!(Poset::chain(3).comparability_graph(), Graph::complete(3));
        assert_eq!(Poset::antichain(4).comparability_graph().edge_count(), 0);
        assert_eq!(
            vee().comparability_graph().edges(),
            vec![(0, 1), (0, 2)]
        );
    }

    #[test]
    fn upper_bound_examples() {
        // V-shape: no common upper bound for the two maxima
        assert_eq!(vee().upper_bound_graph().edges(), vec![(0, 1), (0, 2)]);
        // wedge: top is a common upper bound of the two minima
        assert_eq!(wedge().upper_bound_graph(), Graph::complete(3));
        assert_eq!(Poset::antichain(3).upper_bound_graph().edge_count(), 0);
    }

    #[test]
    fn closed_upper_bound_examples() {
        assert_eq!(wedge().half_closed_ub_graph(), Graph::complete(3));
        assert_eq!(Poset::antichain(3).half_closed_ub_graph().edge_count(), 0);
        assert_eq!(Poset::antichain(3).fully_closed_ub_graph().edge_count(), 0);
        assert_eq!(Poset::chain(3).fully_closed_ub_graph(), Graph::complete(3));
        assert_eq!(Poset::chain(3).extended_closed_ub_graph(), Graph::complete(3));
        assert_eq!(Poset::antichain(3).extended_closed_ub_graph().edge_count(), 0);

        // fence u <= x1 >= x2 <= v: the one-sided witness exists only from v,
        // so the conjunctive graph misses uv and the disjunctive one has it
        let zig = Poset::from_relations(4, &[(0, 1), (2, 1), (2, 3)]).unwrap();
        assert!(!zig.half_closed_ub_graph().has_edge(0, 3));
        assert!(zig.fully_closed_ub_graph().has_edge(0, 3));

        // double fence u <= x1 >= x2 <= x3 >= x4... the W poset: end maxima
        // joined only in the extended graph
        let w = Poset::from_relations(5, &[(1, 0), (1, 2), (3, 2), (3, 4)]).unwrap();
        assert!(!w.fully_closed_ub_graph().has_edge(0, 4));
        assert!(w.extended_closed_ub_graph().has_edge(0, 4));
    }

    #[test]
    fn bridge_round_trip() {
        let p = vee();
        let t = p.to_topology();
        // up-sets become minimal sets verbatim
        assert_eq!(t.min_set(0).iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(t.min_set(1).iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(Poset::from_topology(&t).unwrap(), p);
        assert_eq!(
            separation_graph(&t, Axiom::T1),
            p.comparability_graph()
        );

        assert_eq!(Poset::antichain(3).to_topology(), FiniteTopology::discrete(3));
        assert_eq!(
            Poset::from_topology(&FiniteTopology::discrete(3)).unwrap(),
            Poset::antichain(3)
        );
        let nested = Poset::chain(3).to_topology();
        assert_eq!(nested.height(), 3);

        assert!(matches!(
            Poset::from_topology(&FiniteTopology::indiscrete(2)),
            Err(Error::NonDistinctMinSets(0, 1))
        ));
    }

    #[test]
    fn fence_topology_bridges_to_fence_poset() {
        let t = FiniteTopology::from_min_sets(
            5,
            vec![
                [0].into_iter().collect(),
                [0, 1, 2].into_iter().collect(),
                [2].into_iter().collect(),
                [2, 3, 4].into_iter().collect(),
                [4].into_iter().collect(),
            ],
        )
        .unwrap();
        let p = Poset::from_topology(&t).unwrap();
        // m(0) ⊂ m(1) means 1 <= 0: the comparable pairs are the fence rails
        assert_eq!(p.cover_relations(), vec![(1, 0), (1, 2), (3, 2), (3, 4)]);
        assert_eq!(p.comparability_graph(), separation_graph(&t, Axiom::T1));
    }

    #[test]
    fn orientation_examples() {
        let c4 = Graph::cycle(4);
        let o = transitive_orientation(&c4).unwrap();
        assert!(o.is_some());

        assert!(transitive_orientation(&Graph::cycle(5)).unwrap().is_none());
        assert!(transitive_orientation(&Graph::complete(3)).unwrap().is_some());
        assert!(transitive_orientation(&Graph::complete(11)).is_err());
    }

    #[test]
    fn orientation_is_transitive_by_triple_scan() {
        // bipartite graphs are comparability graphs
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        for g in [
            Graph::cycle(4),
            Graph::complete(4),
            Graph::path(5),
            Graph::cycle(6),
            Graph::path(7),
            k33,
        ] {
            let o = transitive_orientation(&g).unwrap().unwrap();
            let has = |a: usize, b: usize| o.contains(&(a, b));
            for &(a, b) in &o {
                for &(c, d) in &o {
                    if b == c {
                        assert!(has(a, d), "missing {a}->{d}");
                    }
                }
            }
            // orientation covers every edge exactly once
            assert_eq!(o.len(), g.edge_count());
        }
    }
}
