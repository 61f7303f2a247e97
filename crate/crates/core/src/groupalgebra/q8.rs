//! The basis {1a, 1b, 1c, 1d, t, x, y, z} of ℚQ8: the four one-dimensional
//! components and the differences `q - (-q)` spanning the quaternionic block.

use crate::cycarith::{Cyc, Matrix, Rational};
use crate::error::{Error, Result};
use crate::groupcore::{FiniteGroup, Quaternion};

use super::element::AlgebraElement;

pub const BASIS_NAMES: [&str; 8] = ["1a", "1b", "1c", "1d", "t", "x", "y", "z"];

/// Signs (λ_i, λ_j) of i and j in 1a..1d.
const SIGNS: [(i64, i64); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

/// Normalizing divisors: 1a..1d by 8, t..z by 2.
const NORMS: [i64; 8] = [8, 8, 8, 8, 2, 2, 2, 2];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumNumbers {
    pub charge: Rational,
    pub weak_isospin: Rational,
}

impl QuantumNumbers {
    /// Charge (λ_j − λ_i)/2, weak isospin λ_j/2.
    pub fn from_signs(lambda_i: i64, lambda_j: i64) -> Self {
        QuantumNumbers {
            charge: Rational::new((lambda_j - lambda_i).into(), 2.into()),
            weak_isospin: Rational::new(lambda_j.into(), 2.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q8Decomposition {
    /// Coordinates against the unnormalized vectors 1a..1d, t..z.
    pub raw: Vec<Rational>,
    /// Coordinates against 1a/8..1d/8, t/2..z/2.
    pub normalized: Vec<Rational>,
    /// (charge, isospin) of 1a..1d.
    pub quantum_numbers: Vec<QuantumNumbers>,
}

struct Q8Elements {
    plus: [usize; 4],
    minus: [usize; 4],
}

fn q8_elements(g: &FiniteGroup) -> Result<Q8Elements> {
    let wrong = || Error::WrongGroup(format!("{} is not the quaternion group Q8", g.name()));
    if g.order() != 8 {
        return Err(wrong());
    }
    let units = [Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()];
    let mut plus = [0; 4];
    let mut minus = [0; 4];
    for (n, q) in units.iter().enumerate() {
        plus[n] = g.find_quaternion(q).ok_or_else(wrong)?;
        minus[n] = g.find_quaternion(&q.neg()).ok_or_else(wrong)?;
    }
    Ok(Q8Elements { plus, minus })
}

/// The raw basis vectors as columns of an 8×8 matrix over group-element coordinates.
fn basis_matrix(g: &FiniteGroup) -> Result<Matrix<Rational>> {
    let el = q8_elements(g)?;
    let mut m = Matrix::<Rational>::zeros(8, 8);
    let one = Rational::from_integer(1.into());
    for (col, &(li, lj)) in SIGNS.iter().enumerate() {
        let sign = [1, li, lj, li * lj];
        for u in 0..4 {
            let v = Rational::from_integer(sign[u].into());
            m.set(el.plus[u], col, v.clone());
            m.set(el.minus[u], col, v);
        }
    }
    for u in 0..4 {
        m.set(el.plus[u], 4 + u, one.clone());
        m.set(el.minus[u], 4 + u, -one.clone());
    }
    Ok(m)
}

/// The raw basis vector called `name` (one of [`BASIS_NAMES`]).
pub fn q8_basis_vector(g: &std::sync::Arc<FiniteGroup>, name: &str) -> Result<AlgebraElement> {
    let col = BASIS_NAMES.iter().position(|n| *n == name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
    let m = basis_matrix(g)?;
    let coeffs = (0..8).map(|r| Cyc::from_rational(m.get(r, col).clone())).collect();
    AlgebraElement::from_coeffs(g.clone(), coeffs)
}

pub fn q8_decompose(a: &AlgebraElement) -> Result<Q8Decomposition> {
    let g = a.group();
    let m = basis_matrix(g)?;
    let rhs: Vec<Rational> = a
        .coeffs()
        .iter()
        .map(|c| c.as_rational().cloned().ok_or_else(|| Error::InvalidInput("coefficients must be rational".into())))
        .collect::<Result<_>>()?;
    let sol = m
        .solve(&Matrix::new(8, 1, rhs))
        .ok_or_else(|| Error::InternalInconsistency("Q8 basis change is singular".into()))?;
    let raw: Vec<Rational> = (0..8).map(|r| sol.get(r, 0).clone()).collect();
    let normalized = raw.iter().zip(NORMS).map(|(c, n)| c * Rational::from_integer(n.into())).collect();
    Ok(Q8Decomposition {
        raw,
        normalized,
        quantum_numbers: SIGNS.iter().map(|&(li, lj)| QuantumNumbers::from_signs(li, lj)).collect(),
    })
}

/// Inverse of [`q8_decompose`] on raw coordinates.
pub fn q8_reconstruct(g: &std::sync::Arc<FiniteGroup>, raw: &[Rational]) -> Result<AlgebraElement> {
    if raw.len() != 8 {
        return Err(Error::DimensionMismatch(format!("{} coordinates, expected 8", raw.len())));
    }
    let m = basis_matrix(g)?;
    let v = m.matmul(&Matrix::new(8, 1, raw.to_vec()));
    AlgebraElement::from_coeffs(g.clone(), (0..8).map(|r| Cyc::from_rational(v.get(r, 0).clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycarith::rational;
    use crate::groupcore::builtin_group;

    #[test]
    fn basis_change() {
        let g = builtin_group("Q8").unwrap();
        assert_eq!(basis_matrix(&g).unwrap().rank(), 8);
        let d = q8_decompose(&AlgebraElement::one(&g)).unwrap();
        let eighth = rational(1, 8);
        let half = rational(1, 2);
        let zero = rational(0, 1);
        assert_eq!(d.raw, vec![eighth.clone(), eighth.clone(), eighth.clone(), eighth, half, zero.clone(), zero.clone(), zero]);
        assert_eq!(d.normalized[..5], vec![rational(1, 1); 5][..]);
        let c = q8_decompose(&q8_basis_vector(&g, "1c").unwrap()).unwrap();
        assert_eq!(c.raw[2], rational(1, 1));
        assert_eq!(c.quantum_numbers[2], QuantumNumbers { charge: rational(1, 1), weak_isospin: rational(1, 2) });
    }

    #[test]
    fn wrong_group() {
        let g = builtin_group("Z4").unwrap();
        assert!(matches!(q8_decompose(&AlgebraElement::one(&g)), Err(Error::WrongGroup(_))));
    }
}
