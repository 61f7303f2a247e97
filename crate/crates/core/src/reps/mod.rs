//! Matrix representations: the built-in irreducibles of 2T, homomorphism checks,
//! characters, equivalence and the regular representation.
//!
//! Matrices act on row vectors from the right, so a representation satisfies
//! ρ(a)ρ(b) = ρ(ab) with the group's own product.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::chartheory::{Character, CharacterTable};
use crate::cycarith::{Cyc, CycMatrix};
use crate::error::{Error, Result};
use crate::groupcore::{builtin_group, FiniteGroup};

pub const BUILTIN_REPS: [&str; 6] = ["2T.1", "2T.2", "2T.3", "2T.4H", "2T.4H_complex", "2T.4C"];

#[derive(Clone, Debug)]
pub struct MatrixRep {
    group: Arc<FiniteGroup>,
    name: String,
    dim: usize,
    generator_names: Vec<String>,
    generator_images: Vec<CycMatrix>,
    /// Images of every element, or `None` when two words for one element disagree.
    images: Option<Vec<CycMatrix>>,
}

impl MatrixRep {
    /// A representation given by images of named group generators. The names must cover
    /// a generating set; the images are extended along words in them.
    pub fn new(group: Arc<FiniteGroup>, name: &str, generators: Vec<(String, CycMatrix)>) -> Result<Self> {
        let dim = generators.first().map(|(_, m)| m.rows()).unwrap_or(1);
        for (gname, m) in &generators {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!("image of {gname} is {}×{}", m.rows(), m.cols())));
            }
            if group.generator_by_name(gname).is_none() {
                return Err(Error::UnknownName(gname.clone()));
            }
        }
        let elements: Vec<usize> =
            generators.iter().map(|(n, _)| group.generator_by_name(n).expect("checked above")).collect();
        if group.subgroup_generated(&elements).len() != group.order() {
            return Err(Error::InvalidInput(format!("generators {:?} do not generate {}", generators.iter().map(|g| &g.0).collect::<Vec<_>>(), group.name())));
        }
        let (generator_names, generator_images): (Vec<String>, Vec<CycMatrix>) = generators.into_iter().unzip();
        let images = extend(&group, &elements, &generator_images, dim);
        Ok(MatrixRep { group, name: name.to_string(), dim, generator_names, generator_images, images })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> impl Iterator<Item = (&str, &CycMatrix)> {
        self.generator_names.iter().map(String::as_str).zip(&self.generator_images)
    }

    /// Image of a group element, if the extension is consistent.
    pub fn image(&self, x: usize) -> Result<&CycMatrix> {
        self.images.as_ref().map(|m| &m[x]).ok_or(Error::NotAHomomorphism)
    }

    /// Replaces one generator image (test hook for corrupted inputs).
    pub fn with_generator(&self, name: &str, m: CycMatrix) -> Result<Self> {
        let gens = self
            .generator_names
            .iter()
            .zip(&self.generator_images)
            .map(|(n, img)| (n.clone(), if n == name { m.clone() } else { img.clone() }))
            .collect();
        MatrixRep::new(self.group.clone(), &self.name, gens)
    }

    /// Complex entries a+bi replaced by real blocks [[a,−b],[b,a]].
    pub fn realify(&self) -> Result<Self> {
        let gens = self.generator_names.iter().cloned().zip(self.generator_images.iter().map(CycMatrix::realify)).collect();
        MatrixRep::new(self.group.clone(), &format!("{}_real", self.name), gens)
    }

    pub fn to_json(&self) -> String {
        RepJson {
            group: self.group.name().to_string(),
            dim: self.dim,
            generators: self.generators().map(|(n, m)| (n.to_string(), m.clone())).collect(),
        }
        .to_json()
    }

    /// Reads a representation of a compiled-in group.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw = RepJson::from_json(text)?;
        let group = builtin_group(&raw.group)?;
        Self::from_json_model(raw, group)
    }

    pub fn from_json_in(text: &str, group: Arc<FiniteGroup>) -> Result<Self> {
        Self::from_json_model(RepJson::from_json(text)?, group)
    }

    fn from_json_model(raw: RepJson, group: Arc<FiniteGroup>) -> Result<Self> {
        if raw.group != group.name() {
            return Err(Error::WrongGroup(format!("representation of {} read into {}", raw.group, group.name())));
        }
        let rep = MatrixRep::new(group, "", raw.generators.into_iter().collect())?;
        if rep.dim != raw.dim {
            return Err(Error::DimensionMismatch(format!("declared dimension {} but matrices are {}", raw.dim, rep.dim)));
        }
        Ok(rep)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub group: String,
    pub dim: usize,
    pub generators: BTreeMap<String, CycMatrix>,
}

impl RepJson {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("representation: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("representation serializes")
    }
}

/// Breadth-first extension ρ(x·s) = ρ(x)ρ(s); `None` if some element gets two images.
fn extend(g: &FiniteGroup, gens: &[usize], images: &[CycMatrix], dim: usize) -> Option<Vec<CycMatrix>> {
    let mut out: HashMap<usize, CycMatrix> = HashMap::new();
    out.insert(g.identity(), CycMatrix::identity(dim));
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for (s, m) in gens.iter().zip(images) {
            let y = g.mul(x, *s);
            let candidate = out[&x].matmul(m);
            match out.get(&y) {
                Some(existing) if *existing != candidate => return None,
                Some(_) => {}
                None => {
                    out.insert(y, candidate);
                    queue.push_back(y);
                }
            }
        }
    }
    Some((0..g.order()).map(|x| out.remove(&x).expect("generators generate")).collect())
}

/// Whether ρ(x)ρ(y) = ρ(xy) for all x, y.
pub fn verify_homomorphism(r: &MatrixRep) -> bool {
    let Some(images) = &r.images else {
        return false;
    };
    let g = &r.group;
    (0..g.order()).all(|x| (0..g.order()).all(|y| images[x].matmul(&images[y]) == images[g.mul(x, y)]))
}

/// Traces at the group's conjugacy-class representatives.
pub fn rep_character(r: &MatrixRep) -> Result<Character> {
    if !verify_homomorphism(r) {
        return Err(Error::NotAHomomorphism);
    }
    Ok(Character::new(r.group.classes().iter().map(|c| r.image(c.representative).expect("verified").trace()).collect()))
}

/// Traces at the columns of a table of the rep's group (complex or real).
pub fn rep_character_on(r: &MatrixRep, ct: &CharacterTable) -> Result<Character> {
    if !verify_homomorphism(r) {
        return Err(Error::NotAHomomorphism);
    }
    if ct.group_order != r.group.order() || ct.group_name != r.group.name() {
        return Err(Error::WrongGroup(format!("table of {} for a representation of {}", ct.group_name, r.group.name())));
    }
    Ok(Character::new(ct.classes.iter().map(|c| r.image(c.rep).expect("verified").trace()).collect()))
}

/// Equal characters; complex reps should be realified before comparing with real ones.
pub fn reps_equivalent(a: &MatrixRep, b: &MatrixRep) -> Result<bool> {
    if a.group.name() != b.group.name() || a.group.labels() != b.group.labels() {
        return Err(Error::WrongGroup(format!("{} against {}", a.group.name(), b.group.name())));
    }
    Ok(rep_character(a)? == rep_character(b)?)
}

/// Permutation matrices of right multiplication: row x of ρ(g) has its 1 in column xg.
pub fn regular_representation(group: &Arc<FiniteGroup>) -> Result<MatrixRep> {
    let n = group.order();
    let matrix = |g: usize| {
        let mut m = CycMatrix::zeros(n, n);
        for x in 0..n {
            m.set(x, group.mul(x, g), Cyc::one());
        }
        m
    };
    let gens: Vec<(String, CycMatrix)> = if group.generator_names().len() == group.generators().len() {
        group.generator_names().iter().zip(group.generators()).map(|(name, &g)| (name.clone(), matrix(g))).collect()
    } else {
        Vec::new()
    };
    if gens.is_empty() {
        // groups without named generators: use every element image directly
        let images: Vec<CycMatrix> = (0..n).map(matrix).collect();
        return Ok(MatrixRep {
            group: group.clone(),
            name: format!("{}.regular", group.name()),
            dim: n,
            generator_names: Vec::new(),
            generator_images: Vec::new(),
            images: Some(images),
        });
    }
    MatrixRep::new(group.clone(), &format!("{}.regular", group.name()), gens)
}

fn m(rows: &[&[Cyc]]) -> CycMatrix {
    CycMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
}

fn ints(rows: &[&[i64]]) -> CycMatrix {
    CycMatrix::from_ints(rows)
}

fn frac(n: i64, d: i64) -> Cyc {
    Cyc::from_frac(n, d)
}

/// Generator images of the built-in representations of 2T.
fn builtin_generators(name: &str) -> Result<Vec<(String, CycMatrix)>> {
    let (i, w) = match name {
        "2T.1" => (ints(&[&[1]]), ints(&[&[1]])),
        "2T.2" => {
            let r3 = Cyc::sqrt3().scale(&crate::cycarith::rational(1, 2));
            let half = frac(-1, 2);
            (ints(&[&[1, 0], &[0, 1]]), m(&[&[half.clone(), r3.clone()], &[-&r3, half]]))
        }
        "2T.3" => (ints(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]), ints(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])),
        "2T.4H" => (right_i(), ints(&[&[-1, 1, 1, 1], &[-1, -1, -1, 1], &[-1, 1, -1, -1], &[-1, -1, 1, -1]]).scale(&frac(1, 2))),
        "2T.4H_complex" => {
            let i = Cyc::i();
            let one = Cyc::one();
            (
                m(&[&[i.clone(), Cyc::zero()], &[Cyc::zero(), -&i]]),
                m(&[&[&i - &one, &i + &one], &[&i - &one, -&(&i + &one)]]).scale(&frac(1, 2)),
            )
        }
        "2T.4C" => {
            let a = &Cyc::one() + &Cyc::sqrt3();
            let b = &Cyc::one() - &Cyc::sqrt3();
            let (na, nb) = (-&a, -&b);
            let w = m(&[
                &[a.clone(), nb.clone(), nb.clone(), na.clone()],
                &[b.clone(), a.clone(), a.clone(), nb.clone()],
                &[a.clone(), nb.clone(), b.clone(), a.clone()],
                &[b.clone(), a.clone(), na, b.clone()],
            ]);
            (right_i(), w.scale(&frac(1, 4)))
        }
        other => return Err(Error::UnknownName(other.to_string())),
    };
    Ok(vec![("i".to_string(), i), ("w".to_string(), w)])
}

fn right_i() -> CycMatrix {
    ints(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]])
}

pub fn builtin_rep(name: &str) -> Result<MatrixRep> {
    let gens = builtin_generators(name)?;
    MatrixRep::new(builtin_group("2T")?, name, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartheory::{complex_character_table, real_character_table};

    #[test]
    fn builtins_are_representations() {
        for name in BUILTIN_REPS {
            let r = builtin_rep(name).unwrap();
            assert!(verify_homomorphism(&r), "{name}");
        }
        assert!(matches!(builtin_rep("2T.5"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn characters_match_tables() {
        let g = builtin_group("2T").unwrap();
        let ct = complex_character_table(&g).unwrap();
        let rt = real_character_table(&ct).unwrap();
        assert_eq!(rep_character(&builtin_rep("2T.3").unwrap()).unwrap(), Character::from_ints(&[3, 3, -1, 0, 0, 0, 0]));
        assert_eq!(rep_character_on(&builtin_rep("2T.4H").unwrap(), &rt).unwrap(), Character::from_ints(&[4, -4, 0, -2, 2]));
        assert_eq!(rep_character_on(&builtin_rep("2T.4C").unwrap(), &rt).unwrap(), Character::from_ints(&[4, -4, 0, 1, -1]));
        assert_eq!(rep_character_on(&builtin_rep("2T.2").unwrap(), &rt).unwrap(), Character::from_ints(&[2, 2, 2, -1, -1]));
        assert!(rep_character(&builtin_rep("2T.1").unwrap()).unwrap().values.iter().all(|v| *v == Cyc::one()));
    }

    #[test]
    fn equivalence() {
        let h = builtin_rep("2T.4H").unwrap();
        let hc = builtin_rep("2T.4H_complex").unwrap().realify().unwrap();
        assert!(reps_equivalent(&h, &hc).unwrap());
        assert!(!reps_equivalent(&h, &builtin_rep("2T.4C").unwrap()).unwrap());
        assert!(reps_equivalent(&h, &h).unwrap());
    }

    #[test]
    fn probes() {
        let r3 = builtin_rep("2T.3").unwrap();
        let wt = r3.generators().find(|(n, _)| *n == "w").unwrap().1.transpose();
        // i ↦ ρ(i), w ↦ ρ(w)⁻¹ factors through the automorphism of A4 inverting the
        // 3-cycle and fixing the double transposition, so it is again a representation
        assert!(verify_homomorphism(&r3.with_generator("w", wt).unwrap()));
        let r2 = builtin_rep("2T.2").unwrap();
        let mut w = r2.generators().find(|(n, _)| *n == "w").unwrap().1.clone();
        let flipped = -w.get(0, 1);
        w.set(0, 1, flipped);
        assert!(!verify_homomorphism(&r2.with_generator("w", w).unwrap()));
    }

    #[test]
    fn regular() {
        let q8 = builtin_group("Q8").unwrap();
        let r = regular_representation(&q8).unwrap();
        assert!(verify_homomorphism(&r));
        assert_eq!(rep_character(&r).unwrap(), Character::from_ints(&[8, 0, 0, 0, 0]));
    }

    #[test]
    fn json_roundtrip() {
        let r = builtin_rep("2T.4C").unwrap();
        let text = r.to_json();
        let back = MatrixRep::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert!(reps_equivalent(&r, &back).unwrap());
    }
}
