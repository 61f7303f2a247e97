use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::cycarith::{int, Cyc, Rational};
use crate::error::{Error, Result};

/// Whether a table describes complex or real irreducibles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableField {
    Complex,
    Real,
}

impl fmt::Display for TableField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableField::Complex => "complex",
            TableField::Real => "real",
        })
    }
}

/// A class function: one value per column of its table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    pub values: Vec<Cyc>,
}

impl Character {
    pub fn new(values: Vec<Cyc>) -> Self {
        Character { values }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Character { values: values.iter().map(|&v| Cyc::from_int(v)).collect() }
    }

    /// Value at the identity column.
    pub fn degree(&self) -> &Cyc {
        &self.values[0]
    }

    /// Degree as a count; `None` if it is not a non-negative rational integer.
    pub fn degree_usize(&self) -> Option<usize> {
        let r = self.degree().as_rational()?;
        if !r.denom().to_usize().is_some_and(|d| d == 1) {
            return None;
        }
        r.numer().to_usize()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pointwise product: the character of the tensor product.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Character { values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect() })
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Character { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() })
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Character { values: self.values.iter().map(|v| v.scale(k)).collect() }
    }

    pub fn conj(&self) -> Self {
        Character { values: self.values.iter().map(Cyc::conj).collect() }
    }

    pub fn is_real(&self) -> bool {
        self.values.iter().all(|v| v.conj() == *v)
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::NotAClassFunction(format!(
                "length {} against length {}",
                self.len(),
                other.len()
            )));
        }
        Ok(())
    }
}

/// One column of a table: a conjugacy class, or for real tables the union of a class
/// with its inverse class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub rep: usize,
    pub label: String,
    pub size: usize,
    pub order: usize,
    pub members: Vec<usize>,
    /// Column holding the inverses of this column's elements.
    pub inverse: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub field: TableField,
    pub group_name: String,
    pub group_order: usize,
    pub classes: Vec<ClassInfo>,
    /// Column of each group element.
    pub class_of: Vec<usize>,
    pub irreducibles: Vec<Character>,
    /// Frobenius–Schur indicator of each row's complex constituent.
    pub fs: Vec<i8>,
    /// Indices into the complex table of each row's constituents (a row's own index for
    /// complex tables).
    pub constituents: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.irreducibles.iter().map(|c| c.degree_usize().expect("irreducible degree")).collect()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn row_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn character(&self, label: &str) -> Result<&Character> {
        self.row_by_label(label)
            .map(|i| &self.irreducibles[i])
            .ok_or_else(|| Error::UnknownName(label.to_string()))
    }

    /// Value of a class function of this table at a group element.
    pub fn evaluate<'a>(&self, chi: &'a Character, element: usize) -> &'a Cyc {
        &chi.values[self.class_of[element]]
    }

    /// `(1/|G|) Σ_C |C| a(C) conj(b(C))`
    pub fn inner_product(&self, a: &Character, b: &Character) -> Result<Cyc> {
        if a.len() != self.classes.len() || b.len() != self.classes.len() {
            return Err(Error::NotAClassFunction(format!(
                "table has {} columns, characters have {} and {}",
                self.classes.len(),
                a.len(),
                b.len()
            )));
        }
        let mut acc = Cyc::zero();
        for ((x, y), c) in a.values.iter().zip(&b.values).zip(&self.classes) {
            acc += &(x * &y.conj()).scale(&int(c.size as i64));
        }
        Ok(acc.scale(&Rational::new(1.into(), (self.group_order as i64).into())))
    }

    /// Row orthogonality: the Gram matrix of the rows is diagonal with the row norms
    /// 1 (complex rows), or 1, 2, 4 by real, complex and quaternionic type (real rows).
    pub fn check_row_orthogonality(&self) -> Result<()> {
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate() {
                let ip = self.inner_product(a, b)?;
                let expected = if i == j { Cyc::from_int(self.expected_norm(i)) } else { Cyc::zero() };
                if ip != expected {
                    return Err(Error::InternalInconsistency(format!(
                        "rows {i} and {j} have inner product {ip}, expected {expected}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `Σ_χ χ(C) conj(χ(D)) = δ_CD |G|/|C|` over the rows, complex tables only.
    pub fn check_column_orthogonality(&self) -> Result<()> {
        if self.field != TableField::Complex {
            return Ok(());
        }
        let k = self.classes.len();
        for c in 0..k {
            for d in 0..k {
                let mut acc = Cyc::zero();
                for chi in &self.irreducibles {
                    acc += &(&chi.values[c] * &chi.values[d].conj());
                }
                let expected = if c == d {
                    Cyc::from_frac(self.group_order as i64, self.classes[c].size as i64)
                } else {
                    Cyc::zero()
                };
                if acc != expected {
                    return Err(Error::InternalInconsistency(format!("columns {c} and {d} not orthogonal")));
                }
            }
        }
        Ok(())
    }

    /// The squared norm a row has when the table is correct.
    pub fn expected_norm(&self, row: usize) -> i64 {
        match self.field {
            TableField::Complex => 1,
            TableField::Real => match self.fs[row] {
                1 => 1,
                0 => 2,
                _ => 4,
            },
        }
    }
}

/// Labels by degree, disambiguated by type suffix (`H`, `C`) and then by letters.
pub(crate) fn make_labels(degrees: &[usize], suffixes: &[&str]) -> Vec<String> {
    let base: Vec<String> = degrees.iter().map(ToString::to_string).collect();
    let count = |s: &str, v: &[String]| v.iter().filter(|x| *x == s).count();
    let typed: Vec<String> = base
        .iter()
        .zip(suffixes)
        .map(|(b, s)| if count(b, &base) > 1 { format!("{b}{s}") } else { b.clone() })
        .collect();
    let mut seen: std::collections::HashMap<String, usize> = Default::default();
    typed
        .iter()
        .map(|t| {
            if count(t, &typed) > 1 {
                let n = seen.entry(t.clone()).or_insert(0);
                let label = format!("{t}{}", (b'a' + *n as u8) as char);
                *n += 1;
                label
            } else {
                t.clone()
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_disambiguation() {
        assert_eq!(make_labels(&[1, 2, 3, 4, 4], &["", "", "", "H", "C"]), vec!["1", "2", "3", "4H", "4C"]);
        assert_eq!(make_labels(&[1, 1, 1, 1, 4], &["", "", "", "", "H"]), vec!["1a", "1b", "1c", "1d", "4"]);
        assert_eq!(make_labels(&[1, 1, 2], &["", "C", "C"]), vec!["1", "1C", "2"]);
    }
}
