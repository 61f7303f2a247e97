//! Serializable overview of a group: order, classes, center and generators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::group::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSummary {
    pub name: String,
    pub element: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub size: usize,
    pub order: usize,
    pub representative: String,
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub group: String,
    pub order: usize,
    pub exponent: usize,
    pub abelian: bool,
    pub center: Vec<String>,
    pub generators: Vec<GeneratorSummary>,
    pub classes: Vec<ClassSummary>,
}

impl GroupSummary {
    pub fn of(g: &FiniteGroup) -> Self {
        let names = g.generator_names();
        let generators = g
            .generators()
            .iter()
            .enumerate()
            .map(|(n, &x)| GeneratorSummary {
                name: names.get(n).cloned().unwrap_or_else(|| format!("g{}", n + 1)),
                element: g.label(x).to_string(),
            })
            .collect();
        GroupSummary {
            group: g.name().to_string(),
            order: g.order(),
            exponent: g.exponent(),
            abelian: g.is_abelian(),
            center: g.center().iter().map(|&x| g.label(x).to_string()).collect(),
            generators,
            classes: g
                .classes()
                .iter()
                .map(|c| ClassSummary {
                    size: c.size(),
                    order: c.order,
                    representative: g.label(c.representative).to_string(),
                    elements: c.members.iter().map(|&x| g.label(x).to_string()).collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("group summary: {e}")))
    }

    /// Class table in the layout Size | Elements | Order, followed by the center and
    /// generators.
    pub fn to_text(&self) -> String {
        let elements: Vec<String> = self.classes.iter().map(|c| c.elements.join(", ")).collect();
        let ew = elements.iter().map(|e| e.chars().count()).max().unwrap_or(0).max("Elements".len());
        let mut out = format!("{} (order {}, exponent {})\n", self.group, self.order, self.exponent);
        out.push_str(&format!("Size  {:<ew$}  Order\n", "Elements"));
        out.push_str(&format!("{}\n", "-".repeat(6 + ew + 7)));
        for (c, e) in self.classes.iter().zip(&elements) {
            let pad = ew - e.chars().count();
            out.push_str(&format!("{:>4}  {e}{}  {:>5}\n", c.size, " ".repeat(pad), c.order));
        }
        out.push_str(&format!("center: {}\n", self.center.join(", ")));
        let gens: Vec<String> = self.generators.iter().map(|g| format!("{} = {}", g.name, g.element)).collect();
        out.push_str(&format!("generators: {}\n", gens.join(", ")));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::builtin_group;

    #[test]
    fn two_t_summary() {
        let s = GroupSummary::of(&builtin_group("2T").unwrap());
        assert_eq!(s.classes.len(), 7);
        assert_eq!(s.center, vec!["1", "-1"]);
        assert_eq!(s.classes[2].elements.len(), 6);
        assert_eq!(GroupSummary::from_json(&s.to_json()).unwrap().to_json(), s.to_json());
        assert!(s.to_text().contains("   6  "));
    }
}
