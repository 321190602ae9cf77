//! The two faces of T_i-separation for finite topologies.
//!
//! [`separated`] quantifies over open and closed sets exactly as the
//! separation axioms are stated; it is the slow oracle. [`adjacent`] uses the
//! minimal-set formulas; it is the fast path used by the graph builders. The
//! two agree on every finite topology (`adjacent == !separated`), and the
//! exhaustive suites cross-check them pair by pair. Both deliberately stay in
//! the crate forever.

use crate::axiom::Axiom;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::point_set::PointSet;
use crate::topology::FiniteTopology;

/// Literal transcription of the T_i-separation conditions. Quantifies over
/// the full open-set family (and the closed sets, where the axiom asks for
/// them), so the cost is exponential in n; use only at desk scale.
pub fn separated(t: &FiniteTopology, x: usize, y: usize, axiom: Axiom) -> Result<bool> {
    if x == y {
        return Err(Error::SamePoint(x));
    }
    let opens = t.open_sets();
    let full = t.full_set();
    let closeds: Vec<PointSet> = opens.iter().map(|&u| full - u).collect();

    // One-sided regular separation: a closed set J containing `a`, an open
    // superset of J, and an open neighborhood of `b` disjoint from it.
    let one_sided = |a: usize, b: usize| -> bool {
        for &j in closeds.iter().filter(|j| j.contains(a)) {
            for &uj in opens.iter().filter(|u| j.is_subset(**u)) {
                if opens
                    .iter()
                    .any(|&ub| ub.contains(b) && (uj & ub).is_empty())
                {
                    return true;
                }
            }
        }
        false
    };

    let sep = match axiom {
        Axiom::T0 => opens.iter().any(|u| u.contains(x) != u.contains(y)),
        Axiom::T1 => {
            opens.iter().any(|u| u.contains(x) && !u.contains(y))
                && opens.iter().any(|u| u.contains(y) && !u.contains(x))
        }
        Axiom::T2 => opens.iter().any(|&ux| {
            ux.contains(x)
                && opens
                    .iter()
                    .any(|&uy| uy.contains(y) && (ux & uy).is_empty())
        }),
        Axiom::T3Prime => one_sided(x, y) || one_sided(y, x),
        Axiom::T3DoublePrime => one_sided(x, y) && one_sided(y, x),
        Axiom::T4 => {
            let mut found = false;
            'outer: for &j in closeds.iter().filter(|j| j.contains(x)) {
                for &uj in opens.iter().filter(|u| j.is_subset(**u)) {
                    for &k in closeds.iter().filter(|k| k.contains(y)) {
                        for &uk in opens.iter().filter(|u| k.is_subset(**u)) {
                            if (uj & uk).is_empty() {
                                found = true;
                                break 'outer;
                            }
                        }
                    }
                }
            }
            found
        }
    };
    Ok(sep)
}

/// T_i-adjacency via the minimal-set formulas; equivalent to not being
/// T_i-separated.
pub fn adjacent(t: &FiniteTopology, x: usize, y: usize, axiom: Axiom) -> Result<bool> {
    if x == y {
        return Err(Error::SamePoint(x));
    }
    let mx = t.min_set(x);
    let my = t.min_set(y);
    let adj = match axiom {
        Axiom::T0 => mx == my,
        Axiom::T1 => mx.is_subset(my) || my.is_subset(mx),
        Axiom::T2 => !(mx & my).is_empty(),
        Axiom::T3Prime => {
            let mlx = t.min_set_of(t.point_closure(x));
            let mly = t.min_set_of(t.point_closure(y));
            !(mx & mly).is_empty() && !(mlx & my).is_empty()
        }
        Axiom::T3DoublePrime => {
            let mlx = t.min_set_of(t.point_closure(x));
            let mly = t.min_set_of(t.point_closure(y));
            !(mx & mly).is_empty() || !(mlx & my).is_empty()
        }
        Axiom::T4 => {
            let mlx = t.min_set_of(t.point_closure(x));
            let mly = t.min_set_of(t.point_closure(y));
            !(mlx & mly).is_empty()
        }
    };
    Ok(adj)
}

/// G_i(t): vertex set is the ground set, an edge wherever the pair is
/// T_i-adjacent (equivalently, not T_i-separated).
pub fn separation_graph(t: &FiniteTopology, axiom: Axiom) -> Graph {
    let mut g = Graph::new(t.n()).unwrap();
    for x in 0..t.n() {
        for y in x + 1..t.n() {
            if adjacent(t, x, y, axiom).unwrap() {
                g.add_edge(x, y);
            }
        }
    }
    g
}

/// The six graphs in axiom order, with the edge-monotonicity chain
/// re-checked; a violation would be an implementation bug.
pub fn graph_chain(t: &FiniteTopology) -> Result<[Graph; 6]> {
    let graphs: Vec<Graph> = Axiom::ALL
        .iter()
        .map(|&a| separation_graph(t, a))
        .collect();
    for w in 0..5 {
        let (lo, hi) = (&graphs[w], &graphs[w + 1]);
        for v in 0..t.n() {
            if !lo.neighbors(v).is_subset(hi.neighbors(v)) {
                return Err(Error::ChainViolation(Axiom::ALL[w], Axiom::ALL[w + 1]));
            }
        }
    }
    Ok(graphs.try_into().unwrap())
}
