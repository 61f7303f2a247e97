use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::groupcore::FiniteGroup;

use super::table::{CharacterTable, TableField};
use super::{complex_character_table, real_character_table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DivisionRing {
    Real,
    Complex,
    Quaternion,
}

impl DivisionRing {
    pub fn symbol(self) -> &'static str {
        match self {
            DivisionRing::Real => "ℝ",
            DivisionRing::Complex => "ℂ",
            DivisionRing::Quaternion => "ℍ",
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            DivisionRing::Real => "R",
            DivisionRing::Complex => "C",
            DivisionRing::Quaternion => "H",
        }
    }

    /// Dimension over ℝ.
    pub fn real_dim(self) -> usize {
        match self {
            DivisionRing::Real => 1,
            DivisionRing::Complex => 2,
            DivisionRing::Quaternion => 4,
        }
    }
}

/// `M_size(ring)`, with its dimension over the base field of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WedderburnBlock {
    pub size: usize,
    pub ring: DivisionRing,
    pub dim: usize,
}

impl WedderburnBlock {
    fn name(&self, ring: &str) -> String {
        if self.size == 1 {
            ring.to_string()
        } else {
            format!("M{}({ring})", self.size)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedderburnStructure {
    /// Base field: `real` for ℝG, `complex` for ℂG.
    pub field: TableField,
    pub blocks: Vec<WedderburnBlock>,
}

impl WedderburnStructure {
    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.blocks.iter().map(|b| b.dim).sum()
    }

    /// Plain-letter rendering, e.g. `4R + H`.
    pub fn ascii(&self) -> String {
        self.render(|b| b.name(b.ring.ascii()))
    }

    fn render(&self, name: impl Fn(&WedderburnBlock) -> String) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.blocks.len() {
            let run = self.blocks[i..].iter().take_while(|b| **b == self.blocks[i]).count();
            let n = name(&self.blocks[i]);
            parts.push(if run > 1 { format!("{run}{n}") } else { n });
            i += run;
        }
        parts.join(" + ")
    }
}

impl fmt::Display for WedderburnStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|b| b.name(b.ring.symbol())))
    }
}

/// Blocks of ℝG read off a real table: degree d real-type rows give M_d(ℝ), complex-type
/// rows of degree 2d give M_d(ℂ), quaternionic rows of degree 4m give M_m(ℍ).
pub fn wedderburn_from_table(ct: &CharacterTable) -> WedderburnStructure {
    let mut blocks: Vec<WedderburnBlock> = match ct.field {
        TableField::Complex => {
            ct.degrees().into_iter().map(|d| WedderburnBlock { size: d, ring: DivisionRing::Complex, dim: d * d }).collect()
        }
        TableField::Real => ct
            .degrees()
            .into_iter()
            .zip(&ct.fs)
            .map(|(deg, fs)| {
                let (ring, size) = match fs {
                    1 => (DivisionRing::Real, deg),
                    0 => (DivisionRing::Complex, deg / 2),
                    _ => (DivisionRing::Quaternion, deg / 4),
                };
                WedderburnBlock { size, ring, dim: size * size * ring.real_dim() }
            })
            .collect(),
    };
    blocks.sort_by_key(|b| (b.dim, b.ring, b.size));
    WedderburnStructure { field: ct.field, blocks }
}

pub fn real_wedderburn(g: &FiniteGroup) -> Result<WedderburnStructure> {
    Ok(wedderburn_from_table(&real_character_table(&complex_character_table(g)?)?))
}

pub fn complex_wedderburn(g: &FiniteGroup) -> Result<WedderburnStructure> {
    Ok(wedderburn_from_table(&complex_character_table(g)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::builtin_group;

    #[test]
    fn known_structures() {
        let q8 = builtin_group("Q8").unwrap();
        let t = builtin_group("2T").unwrap();
        let z3 = builtin_group("Z3").unwrap();
        assert_eq!(real_wedderburn(&q8).unwrap().to_string(), "4ℝ + ℍ");
        assert_eq!(real_wedderburn(&q8).unwrap().ascii(), "4R + H");
        let r = real_wedderburn(&t).unwrap();
        assert_eq!(r.to_string(), "ℝ + ℂ + ℍ + M2(ℂ) + M3(ℝ)");
        assert_eq!(r.dims(), vec![1, 2, 4, 8, 9]);
        assert_eq!(complex_wedderburn(&t).unwrap().to_string(), "3ℂ + 3M2(ℂ) + M3(ℂ)");
        assert_eq!(complex_wedderburn(&q8).unwrap().to_string(), "4ℂ + M2(ℂ)");
        assert_eq!(real_wedderburn(&z3).unwrap().to_string(), "ℝ + ℂ");
        assert_eq!(complex_wedderburn(&z3).unwrap().to_string(), "3ℂ");
    }
}
