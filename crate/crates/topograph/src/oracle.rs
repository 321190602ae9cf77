//! Brute-force graph oracles backing the verification suites: reachability,
//! exact chromatic number, and isomorphism by pruned permutation search.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::point_set::PointSet;

pub const CHROMATIC_LIMIT: usize = 12;
pub const ISOMORPHISM_LIMIT: usize = 10;

/// Connected components as vertex sets, ordered by least member.
pub fn components(g: &Graph) -> Vec<PointSet> {
    let mut seen = PointSet::EMPTY;
    let mut out = Vec::new();
    for v in 0..g.n() {
        if seen.contains(v) {
            continue;
        }
        let mut comp = PointSet::singleton(v);
        loop {
            let grown = comp
                .iter()
                .fold(comp, |acc, u| acc | g.neighbors(u));
            if grown == comp {
                break;
            }
            comp = grown;
        }
        seen = seen | comp;
        out.push(comp);
    }
    out
}

/// Graphs on zero or one vertex count as connected.
pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// BFS distance; None when u and v lie in different components.
pub fn distance(g: &Graph, u: usize, v: usize) -> Option<usize> {
    if u == v {
        return Some(0);
    }
    let mut frontier = PointSet::singleton(u);
    let mut seen = frontier;
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let next = frontier
            .iter()
            .fold(PointSet::EMPTY, |acc, w| acc | g.neighbors(w))
            - seen;
        if next.contains(v) {
            return Some(d);
        }
        seen = seen | next;
        frontier = next;
    }
    None
}

fn colorable(g: &Graph, k: usize, colors: &mut [usize], v: usize, used: usize) -> bool {
    if v == g.n() {
        return true;
    }
    // symmetry break: a fresh color may only be the next unused one
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|u| u >= v || colors[u] != c) {
            colors[v] = c;
            if colorable(g, k, colors, v + 1, used.max(c + 1)) {
                return true;
            }
        }
    }
    false
}

/// Exact chromatic number by branch and bound; guarded to small graphs.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() > CHROMATIC_LIMIT {
        return Err(Error::TooLarge {
            what: "graph for exact coloring",
            got: g.n(),
            limit: CHROMATIC_LIMIT,
        });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    for k in 1..=g.n() {
        let mut colors = vec![usize::MAX; g.n()];
        if colorable(g, k, &mut colors, 0, 0) {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

fn extend_mapping(
    g: &Graph,
    h: &Graph,
    map: &mut Vec<usize>,
    used: &mut PointSet,
) -> bool {
    let v = map.len();
    if v == g.n() {
        return true;
    }
    for w in 0..h.n() {
        if used.contains(w) || g.degree(v) != h.degree(w) {
            continue;
        }
        if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
            map.push(w);
            used.insert(w);
            if extend_mapping(g, h, map, used) {
                return true;
            }
            map.pop();
            used.remove(w);
        }
    }
    false
}

/// Isomorphism witness (g-vertex -> h-vertex) or None, by backtracking with
/// degree pruning; guarded to small graphs.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    let limit = ISOMORPHISM_LIMIT;
    if g.n() > limit || h.n() > limit {
        return Err(Error::TooLarge {
            what: "graph for isomorphism search",
            got: g.n().max(h.n()),
            limit,
        });
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(None);
    }
    let mut map = Vec::with_capacity(g.n());
    let mut used = PointSet::EMPTY;
    if extend_mapping(g, h, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity_and_distance() {
        let p5 = Graph::path(5);
        assert!(is_connected(&p5));
        assert_eq!(distance(&p5, 0, 4), Some(4));
        assert_eq!(distance(&Graph::complete(4), 1, 3), Some(1));

        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_connected(&two));
        assert_eq!(distance(&two, 0, 3), None);
        assert_eq!(components(&two).len(), 2);
    }

    #[test]
    fn distance_triangle_inequality() {
        let g = Graph::cycle(6);
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(distance(&g, u, v), distance(&g, v, u));
                for w in 0..6 {
                    let (a, b, c) = (
                        distance(&g, u, v).unwrap(),
                        distance(&g, u, w).unwrap(),
                        distance(&g, w, v).unwrap(),
                    );
                    assert!(a <= b + c);
                }
            }
        }
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::complete(3)).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(6)).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::new(4).unwrap()).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::new(0).unwrap()).unwrap(), 0);
        assert!(chromatic_number(&Graph::complete(13)).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let g = Graph::cycle(5);
        let id = are_isomorphic(&g, &g).unwrap().unwrap();
        assert_eq!(id, vec![0, 1, 2, 3, 4]);

        assert!(are_isomorphic(&Graph::path(3), &Graph::complete(3))
            .unwrap()
            .is_none());

        // C6 and K_{3,3}: same degree sequence, not isomorphic
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        let c6_plus = Graph::cycle(6);
        assert!(are_isomorphic(&c6_plus, &k33).unwrap().is_none());

        // relabeled path is found
        let p = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let w = are_isomorphic(&Graph::path(4), &p).unwrap().unwrap();
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(Graph::path(4).has_edge(u, v), p.has_edge(w[u], w[v]));
                }
            }
        }
    }
}
