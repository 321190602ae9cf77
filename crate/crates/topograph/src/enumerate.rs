//! Exhaustive generators for the desk-scale sweeps: every labeled finite
//! topology (equivalently, every preorder) and every labeled poset on a small
//! ground set, plus the independent subset-family counting oracle and a
//! brute-force class-membership search.
//!
//! A finite topology is determined by its minimal-set mapping, and a mapping
//! x -> m(x) is valid iff x is in m(x) and membership is downward coherent;
//! reading m(x) as the set of predecessors of x, those two conditions say
//! exactly "reflexive and transitive". The generator therefore walks every
//! candidate mapping in lexicographic order and keeps the coherent ones,
//! which enumerates each labeled topology exactly once.

use crate::axiom::Axiom;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::point_set::PointSet;
use crate::separation::separation_graph;
use crate::topology::FiniteTopology;

pub const ENUMERATION_LIMIT: usize = 5;
pub const FAMILY_FILTER_LIMIT: usize = 4;
pub const MEMBERSHIP_LIMIT: usize = 5;

/// Insert a bit for point `x` into a mask over the other n-1 points.
fn spread(digit: u64, x: usize) -> PointSet {
    let low = digit & ((1u64 << x) - 1);
    let high = digit >> x;
    PointSet::from_bits((high << (x + 1)) | (1u64 << x) | low)
}

/// Lazy, deterministic stream of every labeled topology on n points.
/// Candidates are indexed by one digit per point (the candidate minimal set),
/// with point 0 the most significant digit, so failures are reproducible by
/// position in the stream.
pub struct Topologies {
    n: usize,
    digits: Vec<u64>,
    radix: u64,
    done: bool,
}

impl Topologies {
    fn coherent(&self, min_sets: &[PointSet]) -> bool {
        min_sets
            .iter()
            .all(|m| m.iter().all(|y| min_sets[y].is_subset(*m)))
    }

    fn advance(&mut self) {
        for i in (0..self.n).rev() {
            self.digits[i] += 1;
            if self.digits[i] < self.radix {
                return;
            }
            self.digits[i] = 0;
        }
        self.done = true;
    }
}

impl Iterator for Topologies {
    type Item = FiniteTopology;

    fn next(&mut self) -> Option<FiniteTopology> {
        if self.n == 0 {
            if self.done {
                return None;
            }
            self.done = true;
            return Some(FiniteTopology::discrete(0));
        }
        while !self.done {
            let min_sets: Vec<PointSet> = self
                .digits
                .iter()
                .enumerate()
                .map(|(x, &d)| spread(d, x))
                .collect();
            self.advance();
            if self.coherent(&min_sets) {
                return Some(FiniteTopology::from_min_sets(self.n, min_sets).unwrap());
            }
        }
        None
    }
}

pub fn all_topologies(n: usize) -> Result<Topologies> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what: "ground set for topology enumeration",
            got: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(Topologies {
        n,
        digits: vec![0; n],
        radix: 1u64 << n.saturating_sub(1),
        done: false,
    })
}

/// Every labeled poset: the topologies whose minimal sets are pairwise
/// distinct (distinctness is antisymmetry of the specialization preorder).
pub fn all_posets(n: usize) -> Result<impl Iterator<Item = crate::poset::Poset>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what: "ground set for poset enumeration",
            got: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(all_topologies(n)?
        .filter(|t| t.has_distinct_min_sets())
        .map(|t| crate::poset::Poset::from_topology(&t).unwrap()))
}

/// Independent counting oracle: walk all 2^(2^n) subset families and count
/// those containing the empty and full sets and closed under pairwise unions
/// and intersections. Cross-checks the preorder enumerator.
pub fn count_topologies_via_families(n: usize) -> Result<u64> {
    if n > FAMILY_FILTER_LIMIT {
        return Err(Error::TooLarge {
            what: "ground set for the subset-family filter",
            got: n,
            limit: FAMILY_FILTER_LIMIT,
        });
    }
    let subsets = 1usize << n;
    let full = subsets - 1;
    let mut count = 0u64;
    for fam in 0u64..(1u64 << subsets) {
        if fam & 1 == 0 || fam & (1u64 << full) == 0 {
            continue; // must contain the empty and full sets
        }
        let members: Vec<usize> = (0..subsets).filter(|&s| fam & (1u64 << s) != 0).collect();
        let mut ok = true;
        'pairs: for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if fam & (1u64 << (a | b)) == 0 || fam & (1u64 << (a & b)) == 0 {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            count += 1;
        }
    }
    Ok(count)
}

/// Search every topology on |V(g)| points for one whose G_a equals g as a
/// labeled graph. Labeled enumeration covers all isomorphs, so no extra
/// permutation search is needed.
pub fn membership(g: &Graph, axiom: Axiom) -> Result<Option<FiniteTopology>> {
    if g.n() > MEMBERSHIP_LIMIT {
        return Err(Error::TooLarge {
            what: "graph for membership search",
            got: g.n(),
            limit: MEMBERSHIP_LIMIT,
        });
    }
    Ok(all_topologies(g.n())?.find(|t| separation_graph(t, axiom) == *g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::is_edge_simplicial;

    #[test]
    fn topology_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| all_topologies(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 29, 355]);
        assert!(all_topologies(6).is_err());
    }

    #[test]
    fn family_filter_counts() {
        assert_eq!(count_topologies_via_families(2).unwrap(), 4);
        assert_eq!(count_topologies_via_families(3).unwrap(), 29);
        assert!(count_topologies_via_families(5).is_err());
    }

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| all_posets(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 3, 19, 219]);
    }

    #[test]
    fn streamed_topologies_are_valid_and_distinct() {
        let all: Vec<FiniteTopology> = all_topologies(3).unwrap().collect();
        for t in &all {
            // re-validate through the public constructor
            assert!(FiniteTopology::from_min_sets(3, t.min_sets().to_vec()).is_ok());
        }
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn membership_examples() {
        let c4 = Graph::cycle(4);
        assert!(membership(&c4, Axiom::T1).unwrap().is_some());
        assert!(membership(&c4, Axiom::T2).unwrap().is_none());
        assert!(!is_edge_simplicial(&c4));

        let empty = Graph::new(3).unwrap();
        let w = membership(&empty, Axiom::T4).unwrap().unwrap();
        assert_eq!(w, FiniteTopology::discrete(3));
    }

    #[test]
    fn membership_is_self_witnessing() {
        for t in all_topologies(3).unwrap() {
            for a in Axiom::ALL {
                let g = separation_graph(&t, a);
                assert!(membership(&g, a).unwrap().is_some());
            }
        }
    }
}
