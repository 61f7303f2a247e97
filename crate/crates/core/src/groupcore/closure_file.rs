//! Generator sets for matrix closures, written in terms of quaternion actions on ℍ = ℝ⁴.
//!
//! Each generator is one of
//! `{"left": q}` (x ↦ qx), `{"right": q}` (x ↦ xq), `{"conjugate": q}` (x ↦ qxq⁻¹),
//! `"bar"` (x ↦ x̄) or `{"matrix": rows}`. Quaternion coordinates are field elements, so a
//! rational string or an 8-coordinate array.

use serde::{Deserialize, Serialize};

use crate::cycarith::{Cyc, CycMatrix};
use crate::error::{Error, Result};

use super::closure::{matrix_group_closure, MatrixGroup};
use super::quaternion::Quaternion;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosureGenerator {
    Left([Cyc; 4]),
    Right([Cyc; 4]),
    Conjugate([Cyc; 4]),
    Bar,
    Matrix(CycMatrix),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureSet {
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    /// Order this set is known to close to, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_order: Option<usize>,
    pub generators: Vec<ClosureGenerator>,
}

/// Left-multiplication matrix of a + bi + cj + dk on the basis 1, i, j, k.
fn left_of(q: &[Cyc; 4]) -> CycMatrix {
    combine(q, |u| u.left_matrix())
}

fn right_of(q: &[Cyc; 4]) -> CycMatrix {
    combine(q, |u| u.right_matrix())
}

fn combine(q: &[Cyc; 4], action: impl Fn(&Quaternion) -> CycMatrix) -> CycMatrix {
    let units = [Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()];
    units.iter().zip(q).fold(CycMatrix::zeros(4, 4), |acc, (u, c)| acc.plus(&action(u).scale(c)))
}

impl ClosureGenerator {
    pub fn left(q: &Quaternion) -> Self {
        ClosureGenerator::Left(q.coords().map(|x| Cyc::from_rational(x.clone())))
    }

    pub fn right(q: &Quaternion) -> Self {
        ClosureGenerator::Right(q.coords().map(|x| Cyc::from_rational(x.clone())))
    }

    pub fn matrix(&self) -> Result<CycMatrix> {
        match self {
            ClosureGenerator::Left(q) => Ok(left_of(q)),
            ClosureGenerator::Right(q) => Ok(right_of(q)),
            ClosureGenerator::Conjugate(q) => {
                let r = right_of(q);
                let r_inv = r.inverse().ok_or(Error::NotInvertible)?;
                Ok(left_of(q).matmul(&r_inv))
            }
            ClosureGenerator::Bar => {
                let mut m = CycMatrix::identity(4).negated();
                m.set(0, 0, Cyc::one());
                Ok(m)
            }
            ClosureGenerator::Matrix(m) => Ok(m.clone()),
        }
    }
}

impl ClosureSet {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("closure file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("closure set serializes")
    }

    pub fn matrices(&self) -> Result<Vec<CycMatrix>> {
        self.generators.iter().map(ClosureGenerator::matrix).collect()
    }

    pub fn close(&self, cap: usize) -> Result<MatrixGroup> {
        matrix_group_closure(&self.matrices()?, cap)
    }
}

pub const BUILTIN_CLOSURE_SETS: [&str; 4] = ["lr-2T", "f4-conj-bar", "f4-conj", "lr-2O"];

pub fn builtin_closure_set(name: &str) -> Result<ClosureSet> {
    let text = match name {
        "lr-2T" => include_str!("../../data/closure/lr-2T.json"),
        "f4-conj-bar" => include_str!("../../data/closure/f4-conj-bar.json"),
        "f4-conj" => include_str!("../../data/closure/f4-conj.json"),
        "lr-2O" => include_str!("../../data/closure/lr-2O.json"),
        other => return Err(Error::UnknownName(other.to_string())),
    };
    ClosureSet::from_json(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::io::builtin_group;
    use crate::groupcore::Payload;

    #[test]
    fn actions_match_quaternion_products() {
        let w = Quaternion::w();
        assert_eq!(ClosureGenerator::left(&w).matrix().unwrap(), w.left_matrix());
        assert_eq!(ClosureGenerator::right(&w).matrix().unwrap(), w.right_matrix());
        let q = Quaternion::from_ints(1, 1, 0, 0);
        let conj = ClosureGenerator::Conjugate(q.coords().map(|x| Cyc::from_rational(x.clone()))).matrix().unwrap();
        // conjugation by 1+i: i ↦ i, j ↦ k, k ↦ −j
        let expected = CycMatrix::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        assert_eq!(conj, expected);
        assert_eq!(ClosureGenerator::Bar.matrix().unwrap().matmul(&ClosureGenerator::Bar.matrix().unwrap()), CycMatrix::identity(4));
    }

    #[test]
    fn lr_2t_file_matches_full_generator_list() {
        let set = builtin_closure_set("lr-2T").unwrap();
        let g = builtin_group("2T").unwrap();
        let mut all = Vec::new();
        for x in 0..g.order() {
            let Payload::Quaternion(q) = g.payload(x) else { unreachable!() };
            all.push(q.left_matrix());
            all.push(q.right_matrix());
        }
        let full = matrix_group_closure(&all, 10_000).unwrap();
        let from_file = set.close(10_000).unwrap();
        assert_eq!(full.order, 288);
        assert_eq!(from_file.order, 288);
        let mut a = full.elements;
        let mut b = from_file.elements;
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn builtin_sets_parse_and_roundtrip() {
        for name in BUILTIN_CLOSURE_SETS {
            let set = builtin_closure_set(name).unwrap();
            assert_eq!(set.name, name);
            assert_eq!(ClosureSet::from_json(&set.to_json()).unwrap(), set);
        }
    }

    #[test]
    fn candidate_orders() {
        for name in BUILTIN_CLOSURE_SETS {
            let set = builtin_closure_set(name).unwrap();
            assert_eq!(Some(set.close(10_000).unwrap().order), set.expected_order, "{name}");
        }
        let set = builtin_closure_set("lr-2O").unwrap();
        let ClosureGenerator::Left(q) = &set.generators[2] else { unreachable!() };
        assert_eq!(q[0], Cyc::sqrt2().scale(&crate::cycarith::rational(1, 2)));
    }
}
