use std::fmt;

use crate::cycarith::Rational;
use crate::error::{Error, Result};

use super::table::{Character, CharacterTable};

/// Multiplicity of each row of a table in some class function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorDecomposition {
    pub multiplicities: Vec<usize>,
    pub labels: Vec<String>,
    pub degrees: Vec<usize>,
}

impl TensorDecomposition {
    /// Row labels with repetition, in table order.
    pub fn terms(&self) -> Vec<&str> {
        self.multiplicities
            .iter()
            .zip(&self.labels)
            .flat_map(|(&m, l)| std::iter::repeat_n(l.as_str(), m))
            .collect()
    }

    /// Labels run together with the plus signs left out, e.g. `11113333`.
    pub fn compact(&self) -> String {
        self.terms().concat()
    }

    pub fn total_degree(&self) -> usize {
        self.multiplicities.iter().zip(&self.degrees).map(|(m, d)| m * d).sum()
    }

    pub fn multiplicity(&self, label: &str) -> usize {
        self.labels.iter().position(|l| l == label).map_or(0, |i| self.multiplicities[i])
    }
}

impl fmt::Display for TensorDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&terms.join("+"))
    }
}

/// Writes a class function as a non-negative integer combination of the table's rows.
pub fn decompose(chi: &Character, ct: &CharacterTable) -> Result<TensorDecomposition> {
    let mut multiplicities = Vec::with_capacity(ct.len());
    for (i, row) in ct.irreducibles.iter().enumerate() {
        let ip = ct.inner_product(chi, row)?;
        let m = ip.scale(&Rational::new(1.into(), ct.expected_norm(i).into()));
        let m = m
            .as_rational()
            .filter(|r| r.is_integer())
            .and_then(|r| num_traits::ToPrimitive::to_i64(&r.to_integer()))
            .filter(|&m| m >= 0)
            .ok_or_else(|| Error::NotAClassFunction(format!("multiplicity of row {} is not a natural number", ct.labels[i])))?;
        multiplicities.push(m as usize);
    }
    let out = TensorDecomposition { multiplicities, labels: ct.labels.clone(), degrees: ct.degrees() };
    if chi.degree_usize() != Some(out.total_degree()) {
        return Err(Error::NotAClassFunction("decomposition does not account for the whole degree".into()));
    }
    Ok(out)
}

pub fn tensor_decompose(a: &Character, b: &Character, ct: &CharacterTable) -> Result<TensorDecomposition> {
    decompose(&a.product(b)?, ct)
}

/// Decomposes the tensor product of two rows given by label.
pub fn tensor_by_label(a: &str, b: &str, ct: &CharacterTable) -> Result<TensorDecomposition> {
    tensor_decompose(ct.character(a)?, ct.character(b)?, ct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartheory::{complex_character_table, real_character_table};
    use crate::groupcore::builtin_group;

    #[test]
    fn two_t_entries() {
        let ct = real_character_table(&complex_character_table(&builtin_group("2T").unwrap()).unwrap()).unwrap();
        // the 2-dimensional row is trivial on i, so its square keeps two trivial summands
        assert_eq!(tensor_by_label("2", "2", &ct).unwrap().compact(), "112");
        assert_eq!(tensor_by_label("2", "3", &ct).unwrap().compact(), "33");
        assert_eq!(tensor_by_label("3", "3", &ct).unwrap().compact(), "1233");
        assert_eq!(tensor_by_label("4C", "4C", &ct).unwrap().compact(), "1123333");
        assert_eq!(tensor_by_label("4H", "4H", &ct).unwrap().compact(), "11113333");
        assert_eq!(tensor_by_label("4H", "4C", &ct).unwrap().compact(), "223333");
        assert_eq!(tensor_by_label("1", "3", &ct).unwrap().to_string(), "3");
    }

    #[test]
    fn non_character_rejected() {
        let ct = complex_character_table(&builtin_group("Q8").unwrap()).unwrap();
        let half = Character::from_ints(&[1, 0, 0, 0, 0]);
        assert!(matches!(decompose(&half, &ct), Err(Error::NotAClassFunction(_))));
    }
}
