//! JSON model format.
//!
//! ```json
//! {"states": ["1","2"], "relations": [[["1","2"]]], "valuation": {"q": ["1"]}, "poison": [[]]}
//! ```
//!
//! `relations` defaults to a single empty relation and `poison` to empty sets.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::model::KripkeModel;
use super::stateset::StateSet;
use crate::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    states: Vec<String>,
    #[serde(default)]
    relations: Vec<Vec<(String, String)>>,
    #[serde(default)]
    valuation: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    poison: Vec<Vec<String>>,
}

/// Parses a model, re-indexing states densely in declaration order.
pub fn load_model(text: &str) -> Result<KripkeModel> {
    let file: ModelFile = serde_json::from_str(text)
        .map_err(|e| Error::model(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    from_file(&file)
}

fn from_file(file: &ModelFile) -> Result<KripkeModel> {
    if file.states.is_empty() {
        return Err(Error::model("states", "model must have ≥1 state"));
    }
    let mut index = HashMap::new();
    for (i, name) in file.states.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(Error::model(
                format!("states[{i}]"),
                format!("duplicate state name {name:?}"),
            ));
        }
    }
    let lookup = |name: &str, location: String| {
        index
            .get(name)
            .copied()
            .ok_or_else(|| Error::model(location, format!("unknown state {name:?}")))
    };

    let relation_count = file.relations.len().max(1);
    if !file.poison.is_empty() && file.poison.len() != relation_count {
        return Err(Error::model(
            "poison",
            format!(
                "expected {relation_count} poison sets (one per relation), got {}",
                file.poison.len()
            ),
        ));
    }
    let mut model = KripkeModel::with_names(file.states.clone(), relation_count)?;
    for (i, rel) in file.relations.iter().enumerate() {
        for (j, (a, b)) in rel.iter().enumerate() {
            let a = lookup(a, format!("relations[{i}][{j}][0]"))?;
            let b = lookup(b, format!("relations[{i}][{j}][1]"))?;
            model.add_edge(i, a, b)?;
        }
    }
    for (atom, names) in &file.valuation {
        let mut set = StateSet::EMPTY;
        for (j, name) in names.iter().enumerate() {
            set.insert(lookup(name, format!("valuation.{atom}[{j}]"))?);
        }
        model.set_atom(atom.clone(), set)?;
    }
    for (i, names) in file.poison.iter().enumerate() {
        let mut set = StateSet::EMPTY;
        for (j, name) in names.iter().enumerate() {
            set.insert(lookup(name, format!("poison[{i}][{j}]"))?);
        }
        model.set_poison_base(i, set)?;
    }
    Ok(model)
}

/// Canonical rendering: edges sorted by (source, target), sets in state order.
pub fn save_model(model: &KripkeModel) -> String {
    let mut out = serde_json::to_string(&to_file(model)).expect("model serializes");
    out.push('\n');
    out
}

fn to_file(model: &KripkeModel) -> ModelFile {
    let names = |set: StateSet| -> Vec<String> { set.iter().map(|s| model.name(s).to_string()).collect() };
    ModelFile {
        states: model.names().to_vec(),
        relations: (0..model.relation_count())
            .map(|i| {
                model
                    .edges(i)
                    .map(|(a, b)| (model.name(a).to_string(), model.name(b).to_string()))
                    .collect()
            })
            .collect(),
        valuation: model.atoms().map(|(k, set)| (k.to_string(), names(set))).collect(),
        poison: model.poison_bases().iter().map(|&s| names(s)).collect(),
    }
}

/// Serializes in the model file format (canonical form).
impl Serialize for KripkeModel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        to_file(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for KripkeModel {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let file = ModelFile::deserialize(deserializer)?;
        from_file(&file).map_err(serde::de::Error::custom)
    }
}
