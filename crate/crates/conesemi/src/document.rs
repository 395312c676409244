//! JSON documents: the input format read by `analyze` and the forest format
//! written by `forest --format json`.
//!
//! Vectors are plain integer arrays.

use std::collections::BTreeMap;
use std::sync::Arc;

use conesemi_core::{CSemigroup, Class, Cone, Forest, TermOrder, Tree, Vector};
use serde::{Deserialize, Serialize};

use crate::{parse, CliError};

pub type Coords = Vec<u32>;

pub fn coords(v: &Vector) -> Coords {
    v.coords().to_vec()
}

pub fn vector(c: &[u32]) -> Result<Vector, CliError> {
    Ok(Vector::new(c)?)
}

fn vectors(cs: &[Coords]) -> Result<Vec<Vector>, CliError> {
    cs.iter().map(|c| vector(c)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeDoc {
    pub generators: Vec<Coords>,
}

impl ConeDoc {
    pub fn from_cone(c: &Cone) -> Self {
        ConeDoc { generators: c.generators().iter().map(coords).collect() }
    }

    pub fn to_cone(&self) -> Result<Arc<Cone>, CliError> {
        let gens = vectors(&self.generators)?;
        let dim = gens.first().map(Vector::dim).ok_or_else(|| CliError::Input("cone has no generators".into()))?;
        Ok(Arc::new(Cone::new(dim, &gens)?))
    }
}

/// `k` may be given once or as a list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum KField {
    One(Coords),
    Many(Vec<Coords>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDoc {
    pub cone: ConeDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gaps: Option<Vec<Coords>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<KField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
}

/// A parsed [`InputDoc`].
pub struct Input {
    pub semigroup: CSemigroup,
    pub ks: Vec<Vector>,
    pub order: Option<TermOrder>,
}

impl InputDoc {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn resolve(&self) -> Result<Input, CliError> {
        let cone = self.cone.to_cone()?;
        let gaps = vectors(self.gaps.as_deref().unwrap_or_default())?;
        let semigroup = CSemigroup::from_gaps(cone, &gaps)?;
        let ks = match &self.k {
            None => Vec::new(),
            Some(KField::One(k)) => vec![vector(k)?],
            Some(KField::Many(ks)) => vectors(ks)?,
        };
        let order = self.order.as_deref().map(parse::order).transpose()?;
        Ok(Input { semigroup, ks, order })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDoc {
    pub gaps: Vec<Coords>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDoc {
    pub id: usize,
    pub gaps: Vec<Coords>,
    pub beta: Option<Coords>,
    pub parent_id: Option<usize>,
    pub genus: usize,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDoc {
    pub root: RootDoc,
    pub nodes: Vec<NodeDoc>,
}

/// Node ids run over the whole forest in breadth-first order, tree by tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestDoc {
    pub cone: ConeDoc,
    pub k: Coords,
    pub order: String,
    pub trees: Vec<TreeDoc>,
}

impl ForestDoc {
    pub fn from_forest(f: &Forest) -> Result<Self, CliError> {
        let mut next = 0;
        let mut trees = Vec::with_capacity(f.trees().len());
        for t in f.trees() {
            let offset = next;
            let mut nodes = Vec::with_capacity(t.len());
            for n in t.nodes() {
                nodes.push(NodeDoc {
                    id: next,
                    gaps: n.semigroup.gaps().iter().map(coords).collect(),
                    beta: n.beta.as_ref().map(coords),
                    parent_id: n.parent.map(|p| p + offset),
                    genus: n.semigroup.genus(),
                    class: f.class_of(&n.semigroup)?.as_str().to_owned(),
                });
                next += 1;
            }
            let root = RootDoc { gaps: t.root().semigroup.gaps().iter().map(coords).collect() };
            trees.push(TreeDoc { root, nodes });
        }
        Ok(ForestDoc { cone: ConeDoc::from_cone(f.cone()), k: coords(&f.k()), order: f.order().to_string(), trees })
    }

    /// Rebuilds the forest, revalidating every semigroup and checking the
    /// recorded genus and class against recomputed ones.
    pub fn to_forest(&self) -> Result<Forest, CliError> {
        let cone = self.cone.to_cone()?;
        let k = vector(&self.k)?;
        let order = parse::order(&self.order)?;
        let mut trees = Vec::with_capacity(self.trees.len());
        let mut next = 0;
        for t in &self.trees {
            let offset = next;
            let mut local: BTreeMap<usize, usize> = BTreeMap::new();
            let mut parts = Vec::with_capacity(t.nodes.len());
            for (i, n) in t.nodes.iter().enumerate() {
                if n.id != next {
                    return Err(CliError::Input(format!("node id {} out of sequence, expected {next}", n.id)));
                }
                next += 1;
                local.insert(n.id, i);
                let s = CSemigroup::from_gaps(cone.clone(), &vectors(&n.gaps)?)?;
                if s.genus() != n.genus {
                    return Err(CliError::Input(format!(
                        "node {}: genus {} recorded, {} found",
                        n.id,
                        n.genus,
                        s.genus()
                    )));
                }
                let parent = match n.parent_id {
                    None => None,
                    Some(p) => Some(*local.get(&p).ok_or_else(|| {
                        CliError::Input(format!("node {}: parent {p} is not an earlier node of the same tree", n.id))
                    })?),
                };
                let beta = n.beta.as_deref().map(vector).transpose()?;
                parts.push((s, beta, parent));
            }
            if t.nodes.first().is_some_and(|n| n.gaps != t.root.gaps) {
                return Err(CliError::Input(format!(
                    "tree starting at node {offset}: root gaps differ from first node"
                )));
            }
            trees.push(Tree::from_parts(parts)?);
        }
        let forest = Forest::from_trees(cone, k, order, trees)?;
        for (n, s) in self.trees.iter().flat_map(|t| &t.nodes).zip(forest.semigroups()) {
            let class: Class = forest.class_of(s)?;
            if class.as_str() != n.class {
                return Err(CliError::Input(format!("node {}: class {} recorded, {class} found", n.id, n.class)));
            }
        }
        Ok(forest)
    }

    pub fn node_count(&self) -> usize {
        self.trees.iter().map(|t| t.nodes.len()).sum()
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }
}

/// A list of semigroups, as printed by `ei`, `irreducible` and `oracle`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupDoc {
    pub gaps: Vec<Coords>,
    pub genus: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Coords>,
}

impl SemigroupDoc {
    pub fn new(s: &CSemigroup, beta: Option<&Vector>) -> Self {
        SemigroupDoc { gaps: s.gaps().iter().map(coords).collect(), genus: s.genus(), beta: beta.map(coords) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use conesemi_core::forest::build_forest;

    #[test]
    fn input_forms() {
        let doc = InputDoc::from_json(r#"{"cone":{"generators":[[1,0],[0,1]]},"gaps":[[1,0]],"k":[2,0]}"#).unwrap();
        let input = doc.resolve().unwrap();
        assert_eq!(input.semigroup.genus(), 1);
        assert_eq!(input.ks.len(), 1);
        assert!(input.order.is_none());

        let doc = InputDoc::from_json(r#"{"cone":{"generators":[[1]]},"k":[[3],[4]],"order":"lex"}"#).unwrap();
        let input = doc.resolve().unwrap();
        assert!(input.semigroup.is_whole_cone());
        assert_eq!(input.ks.len(), 2);

        assert!(InputDoc::from_json(r#"{"cone":{"generators":[[1]]},"gap":[]}"#).is_err());
        assert!(InputDoc::from_json(r#"{"cone":{"generators":[[1.5]]}}"#).is_err());
        let open = InputDoc::from_json(r#"{"cone":{"generators":[[1]]},"gaps":[[2]]}"#).unwrap();
        assert!(open.resolve().is_err());
    }

    #[test]
    fn forest_round_trip() {
        let cone = Arc::new(Cone::orthant(2).unwrap());
        let f = build_forest(&cone, &Vector::new(&[2, 3]).unwrap(), &TermOrder::grlex()).unwrap();
        let doc = ForestDoc::from_forest(&f).unwrap();
        assert_eq!(doc.node_count(), 13);
        assert_eq!(doc.trees.len(), 12);
        let ids: Vec<usize> = doc.trees.iter().flat_map(|t| t.nodes.iter().map(|n| n.id)).collect();
        assert_eq!(ids, (0..13).collect::<Vec<_>>());
        let text = doc.to_json().unwrap();
        let back = ForestDoc::from_json(&text).unwrap().to_forest().unwrap();
        assert_eq!(ForestDoc::from_forest(&back).unwrap(), doc);

        let mut bad = doc.clone();
        bad.trees[0].nodes[0].class = "OTHER".into();
        assert!(bad.to_forest().is_err());
    }
}
