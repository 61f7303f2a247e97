//! Group definition files and the compiled-in groups.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

use super::group::{group_from_cayley, named_group_from_permutations, named_group_from_quaternions, FiniteGroup};
use super::permutation::Permutation;
use super::quaternion::Quaternion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Quaternion,
    Permutation,
    Cayley,
}

/// On-disk group definition.
///
/// Quaternion generators are four rational strings; permutation generators are image
/// lists; for `cayley` the generators field carries the rows of the multiplication table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupDefinition {
    pub kind: GroupKind,
    pub generators: Vec<Vec<Value>>,
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generator_names: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn value_as_string(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::InvalidInput(format!("expected a rational, found {other}"))),
    }
}

fn value_as_index(v: &Value) -> Result<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| Error::InvalidInput(format!("expected a non-negative integer, found {v}")))
}

impl GroupDefinition {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("group definition: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("definition serializes")
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        if !self.generator_names.is_empty() && self.generator_names.len() != self.generators.len() {
            return Err(Error::InvalidInput("generator_names must match generators".into()));
        }
        match self.kind {
            GroupKind::Quaternion => {
                let gens = self
                    .generators
                    .iter()
                    .map(|g| {
                        let parts: Vec<String> = g.iter().map(value_as_string).collect::<Result<_>>()?;
                        Quaternion::parse(&parts)
                    })
                    .collect::<Result<Vec<_>>>()?;
                named_group_from_quaternions(&self.name, &gens, &self.generator_names, cap)
            }
            GroupKind::Permutation => {
                let gens = self
                    .generators
                    .iter()
                    .map(|g| Permutation::new(g.iter().map(value_as_index).collect::<Result<_>>()?))
                    .collect::<Result<Vec<_>>>()?;
                named_group_from_permutations(&self.name, &gens, &self.generator_names, cap)
            }
            GroupKind::Cayley => {
                let table: Vec<Vec<usize>> = self
                    .generators
                    .iter()
                    .map(|row| row.iter().map(value_as_index).collect::<Result<_>>())
                    .collect::<Result<_>>()?;
                group_from_cayley(&self.name, &table, self.labels.as_deref())
            }
        }
    }
}

pub const BUILTIN_NAMES: [&str; 5] = ["Q8", "2T", "Z2", "Z3", "Z4"];

pub fn builtin_definition(name: &str) -> Result<GroupDefinition> {
    let text = match name {
        "Q8" => include_str!("../../data/groups/Q8.json"),
        "2T" => include_str!("../../data/groups/2T.json"),
        "Z2" => include_str!("../../data/groups/Z2.json"),
        "Z3" => include_str!("../../data/groups/Z3.json"),
        "Z4" => include_str!("../../data/groups/Z4.json"),
        other => return Err(Error::UnknownName(other.to_string())),
    };
    GroupDefinition::from_json(text)
}

/// A compiled-in group, built once and shared.
pub fn builtin_group(name: &str) -> Result<Arc<FiniteGroup>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<FiniteGroup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().expect("builtin cache").get(name) {
        return Ok(g.clone());
    }
    let g = Arc::new(builtin_definition(name)?.build(super::group::DEFAULT_CAP)?);
    cache.lock().expect("builtin cache").insert(name.to_string(), g.clone());
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_build() {
        let orders: Vec<usize> = BUILTIN_NAMES.iter().map(|n| builtin_group(n).unwrap().order()).collect();
        assert_eq!(orders, vec![8, 24, 2, 3, 4]);
        let t = builtin_group("2T").unwrap();
        assert_eq!(t.label(t.generator_by_name("w").unwrap()), "(-1+i+j+k)/2");
        assert!(matches!(builtin_group("A5"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn definition_roundtrip_is_byte_identical() {
        for name in BUILTIN_NAMES {
            let def = builtin_definition(name).unwrap();
            let text = def.to_json();
            assert_eq!(GroupDefinition::from_json(&text).unwrap().to_json(), text);
        }
    }

    #[test]
    fn cayley_definition() {
        let text = r#"{"kind":"cayley","generators":[[0,1],[1,0]],"name":"Z2","labels":["e","s"]}"#;
        let g = GroupDefinition::from_json(text).unwrap().build(100).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.labels(), &["e".to_string(), "s".to_string()]);
    }

    #[test]
    fn bad_definitions() {
        let text = r#"{"kind":"quaternion","generators":[["1","x","0","0"]],"name":"bad"}"#;
        assert!(GroupDefinition::from_json(text).unwrap().build(100).is_err());
        let text = r#"{"kind":"quaternion","generators":[["2","0","0","0"]],"name":"inf"}"#;
        assert_eq!(
            GroupDefinition::from_json(text).unwrap().build(100).unwrap_err(),
            Error::CapExceeded { cap: 100 }
        );
        assert!(GroupDefinition::from_json("{}").is_err());
    }
}
