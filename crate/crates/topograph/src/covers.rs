//! Certificate structures and constructions for the T2 and T3' graph
//! classes: simplicial clique covers and their round trip with two-layer
//! topologies, clique cover graphs and hypergraph line graphs, criticality
//! via anchored stars, and universe covers with their three-layer round trip.

use crate::axiom::Axiom;
use crate::error::{Error, Result};
use crate::graph::{Graph, Hypergraph};
use crate::normalize::{distinguish_min_sets, reduce_height_2, reduce_height_3};
use crate::oracle::is_connected;
use crate::point_set::PointSet;
use crate::separation::separation_graph;
use crate::topology::FiniteTopology;

pub const CRITICALITY_EDGE_LIMIT: usize = 20;

/// An edge clique cover, optionally with one distinguished simplicial vertex
/// per clique.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliqueCover {
    pub cliques: Vec<PointSet>,
    pub witnesses: Option<Vec<usize>>,
}

/// Sun, planets, and moons of one universe.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Universe {
    pub sun: usize,
    pub planets: PointSet,
    pub moons: PointSet,
}

impl Universe {
    pub fn vertex_set(&self) -> PointSet {
        self.planets | self.moons | PointSet::singleton(self.sun)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniverseCover {
    pub universes: Vec<Universe>,
}

/// One anchoring: a new center joined to a maximal clique of the graph so
/// far, plus at least one new leaf hanging off the center.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AnchorStep {
    pub center: usize,
    pub clique: Vec<usize>,
    pub leaves: Vec<usize>,
}

/// Witness that a graph is critical: the irreducible core (a single vertex,
/// or the two ends of a lone edge) plus the anchoring steps in construction
/// order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub base: Vec<usize>,
    pub steps: Vec<AnchorStep>,
}

/// Vertices whose closed neighborhood induces a clique.
pub fn simplicial_vertices(g: &Graph) -> PointSet {
    (0..g.n())
        .filter(|&v| g.is_clique(g.closed_neighborhood(v)))
        .collect()
}

/// Membership test for the T2 class: every edge must lie inside the closed
/// neighborhood of some simplicial vertex, which is exactly the existence of
/// a clique edge cover in which every clique contains a simplicial vertex.
pub fn is_edge_simplicial(g: &Graph) -> bool {
    let simp = simplicial_vertices(g);
    g.edges().iter().all(|&(u, v)| {
        simp.iter()
            .any(|w| g.closed_neighborhood(w).contains(u) && g.closed_neighborhood(w).contains(v))
    })
}

/// The greedy certificate: closed neighborhoods of the simplicial vertices,
/// deduplicated (adjacent simplicial vertices share their closed
/// neighborhood). Some exactly when the graph is edge-simplicial.
pub fn greedy_simplicial_cover(g: &Graph) -> Option<CliqueCover> {
    let mut cliques: Vec<PointSet> = Vec::new();
    let mut witnesses: Vec<usize> = Vec::new();
    for v in simplicial_vertices(g).iter() {
        let c = g.closed_neighborhood(v);
        if !cliques.contains(&c) {
            cliques.push(c);
            witnesses.push(v);
        }
    }
    let covered = |u: usize, v: usize| cliques.iter().any(|c| c.contains(u) && c.contains(v));
    if g.edges().iter().all(|&(u, v)| covered(u, v)) {
        Some(CliqueCover {
            cliques,
            witnesses: Some(witnesses),
        })
    } else {
        None
    }
}

/// Full validation of a cover against its graph. Witness conditions, when
/// witnesses are present: one per clique, pairwise distinct, member of its
/// clique, simplicial in g, and pairwise non-adjacent (the two-layer
/// construction needs an independent witness layer).
pub fn validate_clique_cover(g: &Graph, c: &CliqueCover) -> Result<()> {
    let full = g.vertices();
    for clique in &c.cliques {
        if !clique.is_subset(full) {
            return Err(Error::InvalidCover(format!(
                "clique {clique:?} leaves the vertex set"
            )));
        }
        if !g.is_clique(*clique) {
            return Err(Error::InvalidCover(format!(
                "{clique:?} does not induce a clique"
            )));
        }
    }
    for (u, v) in g.edges() {
        if !c.cliques.iter().any(|cl| cl.contains(u) && cl.contains(v)) {
            return Err(Error::InvalidCover(format!("edge ({u}, {v}) is not covered")));
        }
    }
    if let Some(w) = &c.witnesses {
        if w.len() != c.cliques.len() {
            return Err(Error::InvalidCover(format!(
                "{} witnesses for {} cliques",
                w.len(),
                c.cliques.len()
            )));
        }
        let simp = simplicial_vertices(g);
        for (i, &wi) in w.iter().enumerate() {
            if !c.cliques[i].contains(wi) {
                return Err(Error::InvalidCover(format!(
                    "witness {wi} is not in clique {i}"
                )));
            }
            if !simp.contains(wi) {
                return Err(Error::InvalidCover(format!("witness {wi} is not simplicial")));
            }
            for &wj in &w[i + 1..] {
                if wi == wj {
                    return Err(Error::InvalidCover(format!("witness {wi} repeats")));
                }
                if g.has_edge(wi, wj) {
                    return Err(Error::InvalidCover(format!(
                        "witnesses {wi} and {wj} are adjacent"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// G_2 of the topology together with its canonical simplicial cover: the
/// closed neighborhoods of the layer-1 points of the normalized (distinct
/// minimal sets, height at most 2) topology, witnessed by those points.
/// Emits one clique per layer-1 point even when fewer would cover.
pub fn cover_from_topology(t: &FiniteTopology) -> (Graph, CliqueCover) {
    let norm = reduce_height_2(&distinguish_min_sets(t));
    let g = separation_graph(&norm, Axiom::T2);
    let layer1: Vec<usize> = (0..norm.n())
        .filter(|&v| norm.min_set(v) == PointSet::singleton(v))
        .collect();
    let cover = CliqueCover {
        cliques: layer1.iter().map(|&v| g.closed_neighborhood(v)).collect(),
        witnesses: Some(layer1),
    };
    debug_assert!(validate_clique_cover(&g, &cover).is_ok());
    (g, cover)
}

/// The two-layer topology of a witnessed cover: witnesses get singleton
/// minimal sets, every other vertex gets itself plus its witness neighbors.
/// G_2 of the result is the covered graph, labeled.
pub fn topology_from_cover(g: &Graph, c: &CliqueCover) -> Result<FiniteTopology> {
    validate_clique_cover(g, c)?;
    let Some(witnesses) = &c.witnesses else {
        return Err(Error::InvalidCover(
            "the two-layer construction needs simplicial witnesses".into(),
        ));
    };
    let layer1: PointSet = witnesses.iter().copied().collect();
    let min_sets = (0..g.n())
        .map(|u| {
            if layer1.contains(u) {
                PointSet::singleton(u)
            } else {
                (g.neighbors(u) & layer1).with(u)
            }
        })
        .collect();
    FiniteTopology::from_min_sets(g.n(), min_sets)
}

/// Intersection graph of the cover: one vertex per clique, an edge wherever
/// two cliques share a vertex. Assumes c covers E(g).
pub fn clique_cover_graph(_g: &Graph, c: &CliqueCover) -> Graph {
    let k = c.cliques.len();
    let mut h = Graph::new(k).unwrap();
    for i in 0..k {
        for j in i + 1..k {
            if !(c.cliques[i] & c.cliques[j]).is_empty() {
                h.add_edge(i, j);
            }
        }
    }
    h
}

/// The hypergraph of a maximal-clique simplicial cover: vertices are the
/// non-simplicial vertices of g, one hyperedge per clique (its non-simplicial
/// part; possibly empty). Returns the hypergraph and the new-to-old vertex
/// map. Its line graph is the clique cover graph.
pub fn hypergraph_from_cover(g: &Graph, c: &CliqueCover) -> Result<(Hypergraph, Vec<usize>)> {
    validate_clique_cover(g, c)?;
    if c.witnesses.is_none() {
        return Err(Error::InvalidCover(
            "the hypergraph construction needs simplicial witnesses".into(),
        ));
    }
    for clique in &c.cliques {
        if !g.is_maximal_clique(*clique) {
            return Err(Error::InvalidCover(format!(
                "{clique:?} is not a maximal clique"
            )));
        }
    }
    for (i, a) in c.cliques.iter().enumerate() {
        if c.cliques[i + 1..].contains(a) {
            return Err(Error::InvalidCover(format!("clique {a:?} repeats")));
        }
    }
    let simp = simplicial_vertices(g);
    let map: Vec<usize> = (g.vertices() - simp).iter().collect();
    let old_to_new: Vec<Option<usize>> = {
        let mut v = vec![None; g.n()];
        for (new, &old) in map.iter().enumerate() {
            v[old] = Some(new);
        }
        v
    };
    let hyperedges = c
        .cliques
        .iter()
        .map(|cl| (*cl - simp).iter().map(|v| old_to_new[v].unwrap()).collect())
        .collect();
    Ok((Hypergraph::new(map.len(), hyperedges)?, map))
}

/// Intersection graph of the hyperedges; empty hyperedges give isolated
/// vertices.
pub fn line_graph(k: &Hypergraph) -> Graph {
    let m = k.hyperedges().len();
    let mut g = Graph::new(m).expect("line graph needs at most 64 hyperedges");
    for i in 0..m {
        for j in i + 1..m {
            if !(k.hyperedges()[i] & k.hyperedges()[j]).is_empty() {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Anchor a star: add a center adjacent to every vertex of a maximal clique
/// of g, plus t >= 1 fresh leaves adjacent only to the center. The center
/// becomes vertex n, the leaves n+1 .. n+t.
pub fn anchor_star(g: &Graph, clique: PointSet, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::EmptyStar);
    }
    if !g.is_maximal_clique(clique) {
        return Err(Error::NotMaximalClique);
    }
    let n = g.n();
    let mut out = Graph::new(n + 1 + t)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for v in clique.iter() {
        out.add_edge(n, v);
    }
    for leaf in n + 1..=n + t {
        out.add_edge(n, leaf);
    }
    Ok(out)
}

/// Criticality for the T2 class: the graph is edge-simplicial and removing
/// any nonempty edge set either disconnects it or leaves the class.
/// Exhaustive over the 2^|E| - 1 nonempty subsets.
pub fn is_g2_critical(g: &Graph) -> Result<bool> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let edges = g.edges();
    if edges.len() > CRITICALITY_EDGE_LIMIT {
        return Err(Error::TooLarge {
            what: "edge set for the criticality sweep",
            got: edges.len(),
            limit: CRITICALITY_EDGE_LIMIT,
        });
    }
    if !is_edge_simplicial(g) {
        return Ok(false);
    }
    for mask in 1u32..(1u32 << edges.len()) {
        let mut h = g.clone();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask & (1 << i) != 0 {
                h.remove_edge(u, v);
            }
        }
        if is_connected(&h) && is_edge_simplicial(&h) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn degree_within(g: &Graph, alive: PointSet, v: usize) -> usize {
    (g.neighbors(v) & alive).len()
}

/// Peel anchored stars in reverse, collecting steps until a single vertex
/// remains. Tries every center and, when all neighbors are leaves, every
/// choice of the one kept as the anchored clique.
fn peel(g: &Graph, alive: PointSet, steps: &mut Vec<AnchorStep>) -> bool {
    if alive.len() == 1 {
        return true;
    }
    for x in alive.iter() {
        let nb = g.neighbors(x) & alive;
        let leaves: PointSet = nb.iter().filter(|&y| degree_within(g, alive, y) == 1).collect();
        let core = nb - leaves;
        let candidates: Vec<(PointSet, PointSet)> = if !core.is_empty() {
            if leaves.is_empty() || !g.is_clique(core) {
                continue;
            }
            vec![(core, leaves)]
        } else {
            // every neighbor is a pendant: one of them must have been the
            // anchored K_1
            leaves
                .iter()
                .filter(|_| leaves.len() >= 2)
                .map(|y| (PointSet::singleton(y), leaves.without(y)))
                .collect()
        };
        for (clique, leaf_set) in candidates {
            let rest = alive.without(x) - leaf_set;
            let (sub, map) = g.induced(rest);
            let relabeled: PointSet = clique
                .iter()
                .map(|v| map.iter().position(|&o| o == v).unwrap())
                .collect();
            if !sub.is_maximal_clique(relabeled) {
                continue;
            }
            steps.push(AnchorStep {
                center: x,
                clique: clique.iter().collect(),
                leaves: leaf_set.iter().collect(),
            });
            if peel(g, rest, steps) {
                return true;
            }
            steps.pop();
        }
    }
    false
}

/// Reverse-peel a connected graph into anchoring steps down to a single
/// vertex; a lone edge is its own irreducible core. None when no peel order
/// exists (equivalently, when the graph is not critical).
pub fn decompose_critical(g: &Graph) -> Option<Decomposition> {
    if !is_connected(g) {
        return None;
    }
    if g.n() == 2 && g.edge_count() == 1 {
        return Some(Decomposition {
            base: vec![0, 1],
            steps: Vec::new(),
        });
    }
    let mut steps = Vec::new();
    if peel(g, g.vertices(), &mut steps) {
        let remaining = steps
            .iter()
            .fold(g.vertices(), |acc, s| {
                s.leaves.iter().fold(acc.without(s.center), |a, &l| a.without(l))
            });
        steps.reverse();
        Some(Decomposition {
            base: vec![remaining.first().unwrap()],
            steps,
        })
    } else {
        None
    }
}

/// Rebuild a graph from its decomposition, validating each step (clique
/// present and maximal at its stage, fresh center and leaves). None when the
/// decomposition is malformed.
pub fn replay_decomposition(n: usize, d: &Decomposition) -> Option<Graph> {
    let mut g = Graph::new(n).ok()?;
    let mut alive: PointSet = d.base.iter().copied().collect();
    if d.base.iter().any(|&v| v >= n) || alive.len() != d.base.len() {
        return None;
    }
    match d.base.len() {
        1 => {}
        2 => g.add_edge(d.base[0], d.base[1]),
        _ => return None,
    }
    for step in &d.steps {
        let clique: PointSet = step.clique.iter().copied().collect();
        let fresh: Vec<usize> = std::iter::once(step.center)
            .chain(step.leaves.iter().copied())
            .collect();
        if step.leaves.is_empty()
            || !clique.is_subset(alive)
            || fresh.iter().any(|&v| v >= n || alive.contains(v))
        {
            return None;
        }
        let (sub, map) = g.induced(alive);
        let relabeled: PointSet = clique
            .iter()
            .map(|v| map.iter().position(|&o| o == v).unwrap())
            .collect();
        if !sub.is_maximal_clique(relabeled) {
            return None;
        }
        for v in clique.iter() {
            g.add_edge(step.center, v);
        }
        for &leaf in &step.leaves {
            if alive.contains(leaf) || leaf == step.center {
                return None;
            }
            g.add_edge(step.center, leaf);
        }
        alive = alive.with(step.center) | step.leaves.iter().copied().collect();
    }
    (alive == PointSet::full(n)).then_some(g)
}

/// Check the four universe conditions on the induced subgraph; errors when
/// the parts overlap or leave the vertex set.
pub fn is_universe(g: &Graph, u: &Universe) -> Result<bool> {
    let sun = PointSet::singleton(u.sun);
    if !(sun | u.planets | u.moons).is_subset(g.vertices()) {
        return Err(Error::OverlappingParts);
    }
    if !(sun & u.planets).is_empty()
        || !(sun & u.moons).is_empty()
        || !(u.planets & u.moons).is_empty()
    {
        return Err(Error::OverlappingParts);
    }
    // (1) the sun sees every planet and moon
    let others = u.planets | u.moons;
    if !others.is_subset(g.neighbors(u.sun)) {
        return Ok(false);
    }
    // (2) the planets form a clique
    if !g.is_clique(u.planets) {
        return Ok(false);
    }
    // (3) every moon has a planet neighbor
    if !u
        .moons
        .iter()
        .all(|m| !(g.neighbors(m) & u.planets).is_empty())
    {
        return Ok(false);
    }
    // (4) moons are adjacent exactly when they share a planet neighbor
    for x in u.moons.iter() {
        for y in u.moons.iter().filter(|&y| y > x) {
            let shared = !(g.neighbors(x) & g.neighbors(y) & u.planets).is_empty();
            if g.has_edge(x, y) != shared {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// G_3' of the topology together with one universe per layer-1 point of the
/// normalized (distinct minimal sets, height at most 3) topology: the point
/// is the sun, the vertices whose minimal set contains it are its planets,
/// its remaining neighbors are the moons.
pub fn universe_cover_from_topology(t: &FiniteTopology) -> (Graph, UniverseCover) {
    let norm = reduce_height_3(&distinguish_min_sets(t), Axiom::T3Prime).unwrap();
    let g = separation_graph(&norm, Axiom::T3Prime);
    let universes = (0..norm.n())
        .filter(|&v| norm.min_set(v) == PointSet::singleton(v))
        .map(|v| {
            let planets: PointSet = (0..norm.n())
                .filter(|&u| u != v && norm.min_set(u).contains(v))
                .collect();
            Universe {
                sun: v,
                planets,
                moons: g.neighbors(v) - planets,
            }
        })
        .collect();
    let cover = UniverseCover { universes };
    debug_assert!(validate_universe_cover(&g, &cover).is_ok());
    (g, cover)
}

/// The two cover-level conditions plus per-universe validity and edge
/// coverage.
pub fn validate_universe_cover(g: &Graph, uc: &UniverseCover) -> Result<()> {
    let mut suns = PointSet::EMPTY;
    let mut planets = PointSet::EMPTY;
    for u in &uc.universes {
        if !is_universe(g, u)? {
            return Err(Error::InvalidUniverseCover {
                condition: "universe",
                detail: format!("parts at sun {} do not induce a universe", u.sun),
            });
        }
        if suns.contains(u.sun) {
            return Err(Error::InvalidUniverseCover {
                condition: "1",
                detail: format!("sun {} repeats", u.sun),
            });
        }
        suns.insert(u.sun);
        planets = planets | u.planets;
    }
    if !(suns & planets).is_empty() || (suns | planets) != g.vertices() {
        return Err(Error::InvalidUniverseCover {
            condition: "1",
            detail: format!("suns {suns:?} and planets {planets:?} do not partition the vertices"),
        });
    }
    for x in suns.iter() {
        for y in suns.iter().filter(|&y| y > x) {
            let common = g.neighbors(x) & g.neighbors(y) & planets;
            if !common.is_empty() && !g.has_edge(x, y) {
                return Err(Error::InvalidUniverseCover {
                    condition: "2",
                    detail: format!(
                        "suns {x} and {y} share planet neighbor {} but are not adjacent",
                        common.first().unwrap()
                    ),
                });
            }
        }
    }
    for (a, b) in g.edges() {
        if !uc.universes.iter().any(|u| {
            let vs = u.vertex_set();
            vs.contains(a) && vs.contains(b)
        }) {
            return Err(Error::InvalidUniverseCover {
                condition: "coverage",
                detail: format!("edge ({a}, {b}) lies in no universe"),
            });
        }
    }
    Ok(())
}

/// The three-layer topology of a universe cover: suns get singletons; a
/// planet whose moon-neighbors inside each of its universes are all suns
/// gets itself plus its suns; any other planet additionally absorbs the
/// moons of its universes. G_3' of the result is the covered graph.
pub fn topology_from_universe_cover(g: &Graph, uc: &UniverseCover) -> Result<FiniteTopology> {
    validate_universe_cover(g, uc)?;
    let suns: PointSet = uc.universes.iter().map(|u| u.sun).collect();
    let universes_of = |v: usize| -> Vec<&Universe> {
        uc.universes.iter().filter(|u| u.planets.contains(v)).collect()
    };
    let min_sets: Vec<PointSet> = (0..g.n())
        .map(|v| {
            if suns.contains(v) {
                return PointSet::singleton(v);
            }
            let mine = universes_of(v);
            let deep = mine
                .iter()
                .any(|u| !(g.neighbors(v) & u.moons).is_subset(suns));
            let mut m = PointSet::singleton(v);
            for u in mine {
                m.insert(u.sun);
                if deep {
                    m = m | u.moons;
                }
            }
            m
        })
        .collect();
    FiniteTopology::from_min_sets(g.n(), min_sets).map_err(|e| Error::InvalidUniverseCover {
        condition: "construction",
        detail: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(points: &[usize]) -> PointSet {
        points.iter().copied().collect()
    }

    fn fence5() -> FiniteTopology {
        FiniteTopology::from_min_sets(
            5,
            vec![ps(&[0]), ps(&[0, 1, 2]), ps(&[2]), ps(&[2, 3, 4]), ps(&[4])],
        )
        .unwrap()
    }

    #[test]
    fn simplicial_examples() {
        assert_eq!(simplicial_vertices(&Graph::complete(4)), PointSet::full(4));
        assert_eq!(simplicial_vertices(&Graph::path(3)), ps(&[0, 2]));
        assert_eq!(simplicial_vertices(&Graph::cycle(4)), PointSet::EMPTY);
    }

    #[test]
    fn edge_simplicial_examples() {
        assert!(is_edge_simplicial(&Graph::complete(4)));
        assert!(!is_edge_simplicial(&Graph::cycle(4)));
        assert!(!is_edge_simplicial(&Graph::cycle(5)));
        assert!(is_edge_simplicial(&Graph::path(3)));
        // P4 has simplicial endpoints but its middle edge is uncovered
        assert!(!is_edge_simplicial(&Graph::path(4)));
        assert!(greedy_simplicial_cover(&Graph::path(4)).is_none());
        let c = greedy_simplicial_cover(&Graph::path(3)).unwrap();
        assert!(validate_clique_cover(&Graph::path(3), &c).is_ok());
    }

    #[test]
    fn cover_from_fence() {
        let (g, c) = cover_from_topology(&fence5());
        assert_eq!(
            g.edges(),
            vec![(0, 1), (1, 2), (1, 3), (2, 3), (3, 4)]
        );
        assert_eq!(c.witnesses.as_deref(), Some(&[0, 2, 4][..]));
        assert_eq!(
            c.cliques,
            vec![ps(&[0, 1]), ps(&[1, 2, 3]), ps(&[3, 4])]
        );
        assert!(validate_clique_cover(&g, &c).is_ok());
    }

    #[test]
    fn cover_from_indiscrete_and_discrete() {
        let (g, c) = cover_from_topology(&FiniteTopology::indiscrete(3));
        assert_eq!(g, Graph::complete(3));
        assert!(validate_clique_cover(&g, &c).is_ok());

        let (g, c) = cover_from_topology(&FiniteTopology::discrete(3));
        assert_eq!(g.edge_count(), 0);
        assert_eq!(c.cliques.len(), 3); // one singleton clique per point
        assert!(validate_clique_cover(&g, &c).is_ok());
    }

    #[test]
    fn two_layer_construction() {
        // single edge, either endpoint as witness
        let k2 = Graph::complete(2);
        let t = topology_from_cover(
            &k2,
            &CliqueCover {
                cliques: vec![ps(&[0, 1])],
                witnesses: Some(vec![0]),
            },
        )
        .unwrap();
        assert_eq!(t.min_sets(), &[ps(&[0]), ps(&[0, 1])]);

        // triangle with one witness
        let k3 = Graph::complete(3);
        let t = topology_from_cover(
            &k3,
            &CliqueCover {
                cliques: vec![ps(&[0, 1, 2])],
                witnesses: Some(vec![1]),
            },
        )
        .unwrap();
        assert_eq!(t.height(), 2);
        assert_eq!(separation_graph(&t, Axiom::T2), k3);

        // mutually adjacent witnesses are rejected
        let bad = CliqueCover {
            cliques: vec![ps(&[0, 1]), ps(&[1, 2]), ps(&[0, 2])],
            witnesses: Some(vec![0, 1, 2]),
        };
        assert!(matches!(
            topology_from_cover(&k3, &bad),
            Err(Error::InvalidCover(_))
        ));
    }

    #[test]
    fn cover_graph_and_line_graph() {
        // disjoint cliques: empty cover graph
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let c = greedy_simplicial_cover(&g).unwrap();
        assert_eq!(clique_cover_graph(&g, &c).edge_count(), 0);

        // two triangles sharing one vertex
        let bow = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let c = greedy_simplicial_cover(&bow).unwrap();
        assert_eq!(c.cliques.len(), 2);
        assert_eq!(clique_cover_graph(&bow, &c), Graph::complete(2));
        let (k, map) = hypergraph_from_cover(&bow, &c).unwrap();
        assert_eq!(map, vec![2]); // the shared vertex is the only non-simplicial one
        assert_eq!(line_graph(&k), Graph::complete(2));

        // a single clique: one empty hyperedge, line graph K1
        let k3 = Graph::complete(3);
        let c = CliqueCover {
            cliques: vec![ps(&[0, 1, 2])],
            witnesses: Some(vec![0]),
        };
        let (k, map) = hypergraph_from_cover(&k3, &c).unwrap();
        assert!(map.is_empty());
        assert_eq!(k.hyperedges(), &[PointSet::EMPTY]);
        assert_eq!(line_graph(&k).n(), 1);

        // star hypergraph: all hyperedges through one vertex
        let star = Hypergraph::new(3, vec![ps(&[0, 1]), ps(&[0, 2]), ps(&[0])]).unwrap();
        assert_eq!(line_graph(&star), Graph::complete(3));
    }

    #[test]
    fn anchoring() {
        let k1 = Graph::new(1).unwrap();
        let p3 = anchor_star(&k1, ps(&[0]), 1).unwrap();
        assert!(crate::oracle::are_isomorphic(&p3, &Graph::path(3)).unwrap().is_some());

        assert!(matches!(anchor_star(&k1, ps(&[0]), 0), Err(Error::EmptyStar)));
        let k3 = Graph::complete(3);
        assert!(matches!(
            anchor_star(&k3, ps(&[0, 1]), 1),
            Err(Error::NotMaximalClique)
        ));

        // anchor again onto a maximal K2 of the path
        let bigger = anchor_star(&p3, ps(&[0, 1]), 2).unwrap();
        assert_eq!(bigger.n(), 6);
        assert!(is_g2_critical(&bigger).unwrap());
    }

    #[test]
    fn criticality_examples() {
        assert!(is_g2_critical(&Graph::complete(2)).unwrap());
        assert!(is_g2_critical(&Graph::path(3)).unwrap());
        assert!(!is_g2_critical(&Graph::complete(3)).unwrap());
        assert!(is_g2_critical(&Graph::new(1).unwrap()).unwrap()); // K1, vacuously
        let disconnected = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(is_g2_critical(&disconnected), Err(Error::Disconnected)));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_critical(&Graph::path(3)).unwrap();
        assert_eq!(d.steps.len(), 1);
        assert_eq!(replay_decomposition(3, &d).unwrap(), Graph::path(3));

        assert!(decompose_critical(&Graph::complete(3)).is_none());

        let d = decompose_critical(&Graph::complete(2)).unwrap();
        assert!(d.steps.is_empty());
        assert_eq!(d.base, vec![0, 1]);
        assert_eq!(replay_decomposition(2, &d).unwrap(), Graph::complete(2));

        // triangle with a pendant peels to K2 only, so it does not decompose
        let tri_pendant = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert!(decompose_critical(&tri_pendant).is_none());
        assert!(!is_g2_critical(&tri_pendant).unwrap());
    }

    #[test]
    fn universe_examples() {
        // a clique is a universe with no moons
        let k4 = Graph::complete(4);
        assert!(is_universe(
            &k4,
            &Universe { sun: 0, planets: ps(&[1, 2, 3]), moons: PointSet::EMPTY }
        )
        .unwrap());

        // sun 0, planets {1,2}, moons {3,4,5}: moons adjacent iff they share
        // a planet neighbor
        let g = Graph::from_edges(
            6,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                (1, 2),
                (1, 3), (1, 4), (3, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let u = Universe { sun: 0, planets: ps(&[1, 2]), moons: ps(&[3, 4, 5]) };
        assert!(is_universe(&g, &u).unwrap());

        // a moon with no planet neighbor fails condition (3)
        let mut g2 = g.clone();
        g2.remove_edge(2, 5);
        assert!(!is_universe(&g2, &u).unwrap());

        // overlapping parts are an error
        assert!(matches!(
            is_universe(&g, &Universe { sun: 0, planets: ps(&[0, 1]), moons: PointSet::EMPTY }),
            Err(Error::OverlappingParts)
        ));
    }

    #[test]
    fn universe_cover_of_fence() {
        let (g, uc) = universe_cover_from_topology(&fence5());
        assert_eq!(g.edge_count(), 7);
        assert_eq!(uc.universes.len(), 3);
        let suns: Vec<usize> = uc.universes.iter().map(|u| u.sun).collect();
        assert_eq!(suns, vec![0, 2, 4]);
        assert!(validate_universe_cover(&g, &uc).is_ok());

        let rebuilt = topology_from_universe_cover(&g, &uc).unwrap();
        assert_eq!(separation_graph(&rebuilt, Axiom::T3Prime), g);
        // here the round trip even rebuilds the identical topology
        assert_eq!(rebuilt, fence5());
    }

    #[test]
    fn universe_cover_trivial_cases() {
        let (g, uc) = universe_cover_from_topology(&FiniteTopology::indiscrete(4));
        assert_eq!(g, Graph::complete(4));
        assert_eq!(uc.universes.len(), 1);

        let (g, uc) = universe_cover_from_topology(&FiniteTopology::discrete(3));
        assert_eq!(g.edge_count(), 0);
        assert_eq!(uc.universes.len(), 3);
        for u in &uc.universes {
            assert!(u.planets.is_empty() && u.moons.is_empty());
        }
    }

    #[test]
    fn single_universe_over_a_clique() {
        let k4 = Graph::complete(4);
        let uc = UniverseCover {
            universes: vec![Universe { sun: 2, planets: ps(&[0, 1, 3]), moons: PointSet::EMPTY }],
        };
        let t = topology_from_universe_cover(&k4, &uc).unwrap();
        assert_eq!(t.height(), 2);
        assert_eq!(separation_graph(&t, Axiom::T3Prime), k4);
    }

    #[test]
    fn universe_cover_condition_2_violation() {
        // two suns sharing a planet neighbor without being adjacent
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let uc = UniverseCover {
            universes: vec![
                Universe { sun: 0, planets: ps(&[1]), moons: PointSet::EMPTY },
                Universe { sun: 2, planets: ps(&[1]), moons: PointSet::EMPTY },
            ],
        };
        let err = validate_universe_cover(&g, &uc).unwrap_err();
        assert!(matches!(err, Error::InvalidUniverseCover { condition: "2", .. }));
    }
}
