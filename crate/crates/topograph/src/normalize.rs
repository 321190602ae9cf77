//! The three graph-preserving topology transforms: split equal minimal sets
//! (preserves G_i for i >= 1), reduce height to 2 (preserves G_2), reduce
//! height to 3 (preserves G_3', G_3'', G_4). All three are idempotent and
//! return the canonical minimal-set representation.

use crate::axiom::Axiom;
use crate::error::{Error, Result};
use crate::point_set::PointSet;
use crate::topology::FiniteTopology;

/// Repeatedly pick the least pair x < y with m(x) = m(y) and adjoin the open
/// set m(x) minus {y}. Adjoining that set shrinks the minimal set of every
/// point of the class of x except y itself and touches nothing else, so the
/// update is applied directly to the minimal-set table.
pub fn distinguish_min_sets(t: &FiniteTopology) -> FiniteTopology {
    let mut min_sets = t.min_sets().to_vec();
    loop {
        let mut pair = None;
        'scan: for x in 0..t.n() {
            for y in x + 1..t.n() {
                if min_sets[x] == min_sets[y] {
                    pair = Some((x, y));
                    break 'scan;
                }
            }
        }
        let Some((x, y)) = pair else { break };
        let class_value = min_sets[x];
        for (v, m) in min_sets.iter_mut().enumerate() {
            if *m == class_value && v != y {
                m.remove(y);
            }
        }
    }
    FiniteTopology::from_min_sets(t.n(), min_sets).expect("splitting a class keeps coherence")
}

fn least_chain(t: &FiniteTopology, len: usize) -> Option<Vec<usize>> {
    fn rec(t: &FiniteTopology, len: usize, chain: &mut Vec<usize>) -> bool {
        if chain.len() == len {
            return true;
        }
        for v in 0..t.n() {
            if chain.contains(&v) {
                continue;
            }
            if let Some(&last) = chain.last() {
                if !t.min_set(last).is_subset(t.min_set(v)) {
                    continue;
                }
            }
            chain.push(v);
            if rec(t, len, chain) {
                return true;
            }
            chain.pop();
        }
        false
    }
    let mut chain = Vec::with_capacity(len);
    rec(t, len, &mut chain).then_some(chain)
}

/// One chain-shortening edit: remove `v2` from every open set that contains
/// `v3` and (when given) does not contain `v4`, then regenerate the topology
/// from the edited family.
fn chain_edit(t: &FiniteTopology, v2: usize, v3: usize, v4: Option<usize>) -> FiniteTopology {
    let edited: Vec<PointSet> = t
        .open_sets()
        .into_iter()
        .map(|u| {
            if u.contains(v3) && v4.is_none_or(|v| !u.contains(v)) {
                u.without(v2)
            } else {
                u
            }
        })
        .collect();
    FiniteTopology::from_open_sets(t.n(), &edited).unwrap()
}

/// Shorten every 3-chain until the height is at most 2; G_2 is preserved.
///
/// The chain edits assume distinct minimal sets (with an equal pair the
/// literal edit can strip a point of all its neighborhoods), so the
/// distinguishing transform is interleaved whenever equal pairs are present;
/// it preserves G_2 as well. Under distinctness every edit strictly shrinks
/// the minimal-set table, which bounds the loop.
pub fn reduce_height_2(t: &FiniteTopology) -> FiniteTopology {
    let mut cur = t.clone();
    while cur.height() > 2 {
        if !cur.has_distinct_min_sets() {
            cur = distinguish_min_sets(&cur);
            continue;
        }
        let chain = least_chain(&cur, 3).expect("height > 2 guarantees a 3-chain");
        cur = chain_edit(&cur, chain[1], chain[2], None);
    }
    cur
}

/// Shorten every 4-chain until the height is at most 3; G_a is preserved for
/// the regular and normal axioms. The axiom is a contract marker only: the
/// edit itself does not depend on it.
pub fn reduce_height_3(t: &FiniteTopology, axiom: Axiom) -> Result<FiniteTopology> {
    if !matches!(axiom, Axiom::T3Prime | Axiom::T3DoublePrime | Axiom::T4) {
        return Err(Error::AxiomOutOfRange(axiom));
    }
    let mut cur = t.clone();
    while cur.height() > 3 {
        if !cur.has_distinct_min_sets() {
            cur = distinguish_min_sets(&cur);
            continue;
        }
        let chain = least_chain(&cur, 4).expect("height > 3 guarantees a 4-chain");
        cur = chain_edit(&cur, chain[1], chain[2], Some(chain[3]));
    }
    Ok(cur)
}
