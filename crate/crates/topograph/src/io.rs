//! External formats: the minimal-base and open-set-family JSON forms for
//! topologies, graph/poset/cover JSON, and DOT emission. All emitters sort
//! their output for diff stability, and every format round-trips through its
//! own parser.

use crate::covers::{CliqueCover, Universe, UniverseCover};
use crate::error::{Error, Result};
use crate::graph::{Graph, Hypergraph};
use crate::point_set::PointSet;
use crate::poset::Poset;
use crate::topology::FiniteTopology;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Human-readable point labels; internally everything is 0-based indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelTable(Vec<String>);

impl LabelTable {
    pub fn new(labels: Vec<String>) -> Result<LabelTable> {
        for (i, a) in labels.iter().enumerate() {
            if labels[i + 1..].contains(a) {
                return Err(Error::Parse(format!("label {a:?} repeats")));
            }
        }
        Ok(LabelTable(labels))
    }

    /// "0", "1", .. as default labels.
    pub fn default_for(n: usize) -> LabelTable {
        LabelTable((0..n).map(|i| i.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Parse(format!("unknown label {label:?}")))
    }

    fn set_to_labels(&self, s: PointSet) -> Vec<String> {
        s.iter().map(|i| self.0[i].clone()).collect()
    }

    fn labels_to_set(&self, labels: &[String]) -> Result<PointSet> {
        let mut s = PointSet::EMPTY;
        for l in labels {
            s.insert(self.index_of(l)?);
        }
        Ok(s)
    }
}

fn resolve_labels(n: usize, labels: Option<Vec<String>>) -> Result<LabelTable> {
    match labels {
        None => Ok(LabelTable::default_for(n)),
        Some(l) => {
            if l.len() != n {
                return Err(Error::Parse(format!("{} labels for {n} points", l.len())));
            }
            LabelTable::new(l)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TopologyJson {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    min: BTreeMap<String, Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct OpensJson {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    opens: Vec<Vec<String>>,
}

pub fn topology_to_json(t: &FiniteTopology, labels: &LabelTable) -> String {
    let min = (0..t.n())
        .map(|x| (labels.label(x).to_string(), labels.set_to_labels(t.min_set(x))))
        .collect();
    serde_json::to_string_pretty(&TopologyJson {
        n: t.n(),
        labels: Some(labels.labels().to_vec()),
        min,
    })
    .unwrap()
}

/// Accepts both the minimal-base form ("min") and the open-set-family form
/// ("opens").
pub fn topology_from_json(s: &str) -> Result<(FiniteTopology, LabelTable)> {
    let value: serde_json::Value =
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    if value.get("min").is_some() {
        let file: TopologyJson =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        let labels = resolve_labels(file.n, file.labels)?;
        let mut min_sets = vec![PointSet::EMPTY; file.n];
        let mut seen = vec![false; file.n];
        for (point, members) in &file.min {
            let x = labels.index_of(point)?;
            min_sets[x] = labels.labels_to_set(members)?;
            seen[x] = true;
        }
        if let Some(x) = seen.iter().position(|&b| !b) {
            return Err(Error::Parse(format!(
                "no minimal set given for point {:?}",
                labels.label(x)
            )));
        }
        Ok((FiniteTopology::from_min_sets(file.n, min_sets)?, labels))
    } else if value.get("opens").is_some() {
        let file: OpensJson =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        let labels = resolve_labels(file.n, file.labels)?;
        let family = file
            .opens
            .iter()
            .map(|o| labels.labels_to_set(o))
            .collect::<Result<Vec<_>>>()?;
        Ok((FiniteTopology::from_open_sets(file.n, &family)?, labels))
    } else {
        Err(Error::Parse(
            "expected a \"min\" or \"opens\" field in the topology file".into(),
        ))
    }
}

pub fn opens_to_json(t: &FiniteTopology, labels: &LabelTable) -> String {
    let opens = t
        .open_sets()
        .into_iter()
        .map(|s| labels.set_to_labels(s))
        .collect();
    serde_json::to_string_pretty(&OpensJson {
        n: t.n(),
        labels: Some(labels.labels().to_vec()),
        opens,
    })
    .unwrap()
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    edges: Vec<(String, String)>,
}

pub fn graph_to_json(g: &Graph, labels: &LabelTable) -> String {
    let mut edges: Vec<(String, String)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (labels.label(u).to_string(), labels.label(v).to_string());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    edges.sort();
    serde_json::to_string_pretty(&GraphJson {
        n: g.n(),
        labels: Some(labels.labels().to_vec()),
        edges,
    })
    .unwrap()
}

pub fn graph_from_json(s: &str) -> Result<(Graph, LabelTable)> {
    let file: GraphJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let labels = resolve_labels(file.n, file.labels)?;
    let edges = file
        .edges
        .iter()
        .map(|(a, b)| Ok((labels.index_of(a)?, labels.index_of(b)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok((Graph::from_edges(file.n, &edges)?, labels))
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    cover: Vec<(String, String)>,
}

/// Hasse cover relations; the transitive closure is taken on load and
/// antisymmetry validated.
pub fn poset_from_json(s: &str) -> Result<(Poset, LabelTable)> {
    let file: PosetJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let labels = resolve_labels(file.n, file.labels)?;
    let relations = file
        .cover
        .iter()
        .map(|(a, b)| Ok((labels.index_of(a)?, labels.index_of(b)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok((Poset::from_relations(file.n, &relations)?, labels))
}

pub fn poset_to_json(p: &Poset, labels: &LabelTable) -> String {
    let mut cover: Vec<(String, String)> = p
        .cover_relations()
        .into_iter()
        .map(|(x, y)| (labels.label(x).to_string(), labels.label(y).to_string()))
        .collect();
    cover.sort();
    serde_json::to_string_pretty(&PosetJson {
        n: p.n(),
        labels: Some(labels.labels().to_vec()),
        cover,
    })
    .unwrap()
}

#[derive(Serialize, Deserialize)]
struct CliqueCoverJson {
    cliques: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
}

pub fn clique_cover_to_json(c: &CliqueCover, labels: &LabelTable) -> String {
    serde_json::to_string_pretty(&CliqueCoverJson {
        cliques: c.cliques.iter().map(|s| labels.set_to_labels(*s)).collect(),
        witness: c
            .witnesses
            .as_ref()
            .map(|w| w.iter().map(|&v| labels.label(v).to_string()).collect()),
    })
    .unwrap()
}

pub fn clique_cover_from_json(s: &str, labels: &LabelTable) -> Result<CliqueCover> {
    let file: CliqueCoverJson =
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(CliqueCover {
        cliques: file
            .cliques
            .iter()
            .map(|c| labels.labels_to_set(c))
            .collect::<Result<Vec<_>>>()?,
        witnesses: match file.witness {
            None => None,
            Some(w) => Some(
                w.iter()
                    .map(|l| labels.index_of(l))
                    .collect::<Result<Vec<_>>>()?,
            ),
        },
    })
}

#[derive(Serialize, Deserialize)]
struct UniverseJson {
    sun: String,
    planets: Vec<String>,
    moons: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct UniverseCoverJson {
    universes: Vec<UniverseJson>,
}

pub fn universe_cover_to_json(uc: &UniverseCover, labels: &LabelTable) -> String {
    serde_json::to_string_pretty(&UniverseCoverJson {
        universes: uc
            .universes
            .iter()
            .map(|u| UniverseJson {
                sun: labels.label(u.sun).to_string(),
                planets: labels.set_to_labels(u.planets),
                moons: labels.set_to_labels(u.moons),
            })
            .collect(),
    })
    .unwrap()
}

pub fn universe_cover_from_json(s: &str, labels: &LabelTable) -> Result<UniverseCover> {
    let file: UniverseCoverJson =
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(UniverseCover {
        universes: file
            .universes
            .iter()
            .map(|u| {
                Ok(Universe {
                    sun: labels.index_of(&u.sun)?,
                    planets: labels.labels_to_set(&u.planets)?,
                    moons: labels.labels_to_set(&u.moons)?,
                })
            })
            .collect::<Result<Vec<_>>>()?,
    })
}

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    hyperedges: Vec<Vec<String>>,
}

pub fn hypergraph_to_json(k: &Hypergraph, labels: &LabelTable) -> String {
    serde_json::to_string_pretty(&HypergraphJson {
        n: k.n(),
        labels: Some(labels.labels().to_vec()),
        hyperedges: k
            .hyperedges()
            .iter()
            .map(|e| labels.set_to_labels(*e))
            .collect(),
    })
    .unwrap()
}

pub fn hypergraph_from_json(s: &str) -> Result<(Hypergraph, LabelTable)> {
    let file: HypergraphJson =
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let labels = resolve_labels(file.n, file.labels)?;
    let hyperedges = file
        .hyperedges
        .iter()
        .map(|e| labels.labels_to_set(e))
        .collect::<Result<Vec<_>>>()?;
    Ok((Hypergraph::new(file.n, hyperedges)?, labels))
}

/// Undirected DOT with quoted labels; vertices and edges sorted
/// lexicographically for diff stability.
pub fn graph_to_dot(g: &Graph, labels: &LabelTable, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    let mut verts: Vec<&str> = (0..g.n()).map(|v| labels.label(v)).collect();
    verts.sort();
    for v in verts {
        out.push_str(&format!("  \"{v}\";\n"));
    }
    let mut edges: Vec<(String, String)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (labels.label(u).to_string(), labels.label(v).to_string());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    edges.sort();
    for (a, b) in edges {
        out.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axiom::Axiom;
    use crate::separation::separation_graph;

    fn fence5_labeled() -> (FiniteTopology, LabelTable) {
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
        let labels =
            LabelTable::new(vec!["1".into(), "2".into(), "3".into(), "4".into(), "5".into()])
                .unwrap();
        (t, labels)
    }

    #[test]
    fn topology_round_trip() {
        let (t, labels) = fence5_labeled();
        let json = topology_to_json(&t, &labels);
        let (t2, l2) = topology_from_json(&json).unwrap();
        assert_eq!(t, t2);
        assert_eq!(labels, l2);
    }

    #[test]
    fn opens_form_parses() {
        let json = r#"{"n": 3, "opens": [["0"], ["0", "1"]]}"#;
        let (t, _) = topology_from_json(json).unwrap();
        assert_eq!(t.min_set(2), PointSet::full(3));
        let (t2, _) =
            topology_from_json(&opens_to_json(&t, &LabelTable::default_for(3))).unwrap();
        assert_eq!(t, t2);
    }

    #[test]
    fn graph_round_trip_and_dot() {
        let (t, labels) = fence5_labeled();
        let g = separation_graph(&t, Axiom::T2);
        let json = graph_to_json(&g, &labels);
        let (g2, _) = graph_from_json(&json).unwrap();
        assert_eq!(g, g2);

        let dot = graph_to_dot(&g, &labels, "G_t2");
        assert!(dot.starts_with("graph G_t2 {"));
        assert!(dot.contains("\"2\" -- \"4\";"));
        assert_eq!(dot.matches(" -- ").count(), g.edge_count());
    }

    #[test]
    fn poset_round_trip() {
        let p = Poset::from_relations(4, &[(0, 1), (1, 2), (0, 3)]).unwrap();
        let labels = LabelTable::default_for(4);
        let (p2, _) = poset_from_json(&poset_to_json(&p, &labels)).unwrap();
        assert_eq!(p, p2);
    }

    #[test]
    fn cover_round_trips() {
        let labels = LabelTable::default_for(5);
        let c = CliqueCover {
            cliques: vec![[0, 1].into_iter().collect(), [1, 2, 3].into_iter().collect()],
            witnesses: Some(vec![0, 2]),
        };
        let c2 = clique_cover_from_json(&clique_cover_to_json(&c, &labels), &labels).unwrap();
        assert_eq!(c, c2);

        let uc = UniverseCover {
            universes: vec![Universe {
                sun: 0,
                planets: [1, 2].into_iter().collect(),
                moons: [3].into_iter().collect(),
            }],
        };
        let uc2 =
            universe_cover_from_json(&universe_cover_to_json(&uc, &labels), &labels).unwrap();
        assert_eq!(uc, uc2);

        let k = Hypergraph::new(3, vec![[0, 1].into_iter().collect(), PointSet::EMPTY]).unwrap();
        let (k2, _) = hypergraph_from_json(&hypergraph_to_json(&k, &LabelTable::default_for(3)))
            .unwrap();
        assert_eq!(k, k2);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(topology_from_json("{"), Err(Error::Parse(_))));
        assert!(matches!(
            topology_from_json(r#"{"n": 1}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            graph_from_json(r#"{"n": 2, "edges": [["0", "7"]]}"#),
            Err(Error::Parse(_))
        ));
        // duplicate labels rejected
        assert!(matches!(
            graph_from_json(r#"{"n": 2, "labels": ["a", "a"], "edges": []}"#),
            Err(Error::Parse(_))
        ));
    }
}
