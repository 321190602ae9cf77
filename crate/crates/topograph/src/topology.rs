use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::point_set::{PointSet, MAX_POINTS};
use std::collections::BTreeSet;

/// A finite topology on points 0..n-1, canonically represented by its
/// minimal-set mapping: `min_sets[x]` is m(x), the smallest open set
/// containing x. The open sets are exactly the unions of minimal sets
/// together with the empty set.
///
/// Invariants (checked on construction):
/// - x is a member of m(x),
/// - downward coherence: y in m(x) implies m(y) is a subset of m(x).
///
/// These two imply that the family of unions of minimal sets plus the empty
/// set contains the full ground set and is closed under unions and
/// intersections, so they characterize finite topologies.
///
/// Equality is labeled equality: same n and identical minimal sets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteTopology {
    n: usize,
    min_sets: Vec<PointSet>,
}

/// Label origin of a point of an incidence topology.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IncPoint {
    Vertex(usize),
    Edge(usize, usize),
}

fn validate_min_sets(n: usize, min_sets: &[PointSet]) -> Result<()> {
    if n > MAX_POINTS {
        return Err(Error::TooManyPoints(n));
    }
    assert_eq!(min_sets.len(), n);
    let full = PointSet::full(n);
    for (x, &m) in min_sets.iter().enumerate() {
        if !m.is_subset(full) {
            return Err(Error::PointOutOfRange(m.minus(full).first().unwrap()));
        }
        if !m.contains(x) {
            return Err(Error::InvalidBase(format!(
                "point {x} is not in its own minimal set {m:?}"
            )));
        }
    }
    for x in 0..n {
        for y in min_sets[x].iter() {
            if !min_sets[y].is_subset(min_sets[x]) {
                return Err(Error::InvalidBase(format!(
                    "downward coherence fails for pair ({y}, {x}): {:?} is not a subset of {:?}",
                    min_sets[y], min_sets[x]
                )));
            }
        }
    }
    Ok(())
}

impl FiniteTopology {
    pub fn from_min_sets(n: usize, min_sets: Vec<PointSet>) -> Result<FiniteTopology> {
        validate_min_sets(n, &min_sets)?;
        Ok(FiniteTopology { n, min_sets })
    }

    /// Build from an explicit minimal base: `owner[x]` names the base set
    /// that is m(x). Every base set must be owned by at least one point.
    pub fn from_minimal_base(n: usize, base: &[PointSet], owner: &[usize]) -> Result<FiniteTopology> {
        if owner.len() != n {
            return Err(Error::InvalidBase(format!(
                "owner map has {} entries for {n} points",
                owner.len()
            )));
        }
        let mut used = vec![false; base.len()];
        let mut min_sets = Vec::with_capacity(n);
        for (x, &i) in owner.iter().enumerate() {
            let Some(&s) = base.get(i) else {
                return Err(Error::InvalidBase(format!(
                    "owner of point {x} names base set {i}, but the base has {} sets",
                    base.len()
                )));
            };
            used[i] = true;
            min_sets.push(s);
        }
        if let Some(i) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidBase(format!(
                "base set {i} ({:?}) is not the minimal set of any point",
                base[i]
            )));
        }
        FiniteTopology::from_min_sets(n, min_sets)
    }

    /// The topology generated by an arbitrary family of sets: closes under
    /// unions and intersections, adjoins the empty and full sets, and reads
    /// off m(x) as the intersection of all generators containing x.
    pub fn from_open_sets(n: usize, family: &[PointSet]) -> Result<FiniteTopology> {
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        let full = PointSet::full(n);
        for s in family {
            if !s.is_subset(full) {
                return Err(Error::PointOutOfRange(s.minus(full).first().unwrap()));
            }
        }
        let min_sets = (0..n)
            .map(|x| {
                family
                    .iter()
                    .filter(|s| s.contains(x))
                    .fold(full, |acc, &s| acc & s)
            })
            .collect();
        // Intersections of generators are coherent by construction.
        Ok(FiniteTopology { n, min_sets })
    }

    pub fn discrete(n: usize) -> FiniteTopology {
        FiniteTopology {
            n,
            min_sets: (0..n).map(PointSet::singleton).collect(),
        }
    }

    pub fn indiscrete(n: usize) -> FiniteTopology {
        FiniteTopology {
            n,
            min_sets: vec![PointSet::full(n); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn min_set(&self, x: usize) -> PointSet {
        self.min_sets[x]
    }

    pub fn min_sets(&self) -> &[PointSet] {
        &self.min_sets
    }

    /// m(S): the smallest open superset of `s`, which is the union of the
    /// minimal sets of its members; m of the empty set is empty.
    pub fn min_set_of(&self, s: PointSet) -> PointSet {
        s.iter()
            .fold(PointSet::EMPTY, |acc, a| acc | self.min_sets[a])
    }

    /// The closure of the singleton {x}: the complement of the union of all
    /// open sets avoiding x, computed as {y : m(x) is a subset of m(y)}.
    pub fn point_closure(&self, x: usize) -> PointSet {
        (0..self.n)
            .filter(|&y| self.min_sets[x].is_subset(self.min_sets[y]))
            .collect()
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        s.iter().all(|y| self.min_sets[y].is_subset(s))
    }

    pub fn is_closed(&self, k: PointSet) -> bool {
        self.is_open(self.full_set() - k)
    }

    /// Every open set (the empty set included), in ascending mask order.
    /// Exponential in general; meant for desk-scale ground sets.
    pub fn open_sets(&self) -> Vec<PointSet> {
        let mut seen = BTreeSet::new();
        seen.insert(PointSet::EMPTY);
        let mut work = vec![PointSet::EMPTY];
        while let Some(s) = work.pop() {
            for x in 0..self.n {
                let t = s | self.min_sets[x];
                if seen.insert(t) {
                    work.push(t);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Subspace topology on the nonempty set `s`, relabeled to 0..|s|-1;
    /// also returns the new-to-old point map.
    pub fn subspace(&self, s: PointSet) -> Result<(FiniteTopology, Vec<usize>)> {
        if s.is_empty() {
            return Err(Error::EmptySubspace);
        }
        if !s.is_subset(self.full_set()) {
            return Err(Error::PointOutOfRange(s.minus(self.full_set()).first().unwrap()));
        }
        let map: Vec<usize> = s.iter().collect();
        let old_to_new: Vec<Option<usize>> = {
            let mut v = vec![None; self.n];
            for (new, &old) in map.iter().enumerate() {
                v[old] = Some(new);
            }
            v
        };
        // m restricted to S is S intersect m(x); intersection commutes with
        // the defining intersection over open supersets.
        let min_sets = map
            .iter()
            .map(|&old| {
                (self.min_sets[old] & s)
                    .iter()
                    .map(|p| old_to_new[p].unwrap())
                    .collect()
            })
            .collect();
        Ok((FiniteTopology { n: map.len(), min_sets }, map))
    }

    /// The incidence topology of a graph: one point per vertex and per edge,
    /// edge points minimal, each vertex point covering its incident edges.
    /// Returns the topology and the point-labeling map (vertex points first,
    /// then edge points in sorted edge order).
    pub fn incidence(h: &Graph) -> Result<(FiniteTopology, Vec<IncPoint>)> {
        let edges = h.edges();
        let n = h.n() + edges.len();
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        let mut labels: Vec<IncPoint> = (0..h.n()).map(IncPoint::Vertex).collect();
        labels.extend(edges.iter().map(|&(u, v)| IncPoint::Edge(u, v)));
        let mut min_sets = vec![PointSet::EMPTY; n];
        for (v, m) in min_sets.iter_mut().enumerate().take(h.n()) {
            m.insert(v);
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            let e = h.n() + i;
            min_sets[e] = PointSet::singleton(e);
            min_sets[u].insert(e);
            min_sets[v].insert(e);
        }
        Ok((FiniteTopology { n, min_sets }, labels))
    }

    pub fn first_equal_pair(&self) -> Option<(usize, usize)> {
        for x in 0..self.n {
            for y in x + 1..self.n {
                if self.min_sets[x] == self.min_sets[y] {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn has_distinct_min_sets(&self) -> bool {
        self.first_equal_pair().is_none()
    }

    /// Height: the longest run of distinct points with nested minimal sets.
    pub fn height(&self) -> usize {
        self.longest_chain().len()
    }

    /// One maximum-length chain (v1, .., vh) with m(v1) ⊆ ... ⊆ m(vh),
    /// lexicographically least among the maximum chains.
    ///
    /// Points with equal minimal sets form classes; a maximum chain walks a
    /// path in the strict-containment DAG of classes and uses every member
    /// of each class it visits, so the search runs over classes.
    pub fn longest_chain(&self) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        let mut class_values: Vec<PointSet> = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.n {
            match class_values.iter().position(|&v| v == self.min_sets[x]) {
                Some(i) => members[i].push(x),
                None => {
                    class_values.push(self.min_sets[x]);
                    members.push(vec![x]);
                }
            }
        }
        let k = class_values.len();
        // memo[i]: best chain starting at class i and going upward.
        let mut memo: Vec<Option<Vec<usize>>> = vec![None; k];
        fn best(
            i: usize,
            class_values: &[PointSet],
            members: &[Vec<usize>],
            memo: &mut Vec<Option<Vec<usize>>>,
        ) -> Vec<usize> {
            if let Some(c) = &memo[i] {
                return c.clone();
            }
            let mut cont: Option<Vec<usize>> = None;
            for j in 0..class_values.len() {
                if i != j && class_values[i].is_subset(class_values[j]) {
                    let c = best(j, class_values, members, memo);
                    let better = match &cont {
                        None => true,
                        Some(old) => c.len() > old.len() || (c.len() == old.len() && c < *old),
                    };
                    if better {
                        cont = Some(c);
                    }
                }
            }
            let mut chain = members[i].clone();
            if let Some(c) = cont {
                chain.extend(c);
            }
            memo[i] = Some(chain.clone());
            chain
        }
        let mut result: Vec<usize> = Vec::new();
        for i in 0..k {
            let c = best(i, &class_values, &members, &mut memo);
            if c.len() > result.len() || (c.len() == result.len() && c < result) {
                result = c;
            }
        }
        result
    }
}
