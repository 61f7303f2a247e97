use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cycarith::{format_rational, int, parse_rational, rational, Cyc, CycMatrix, Rational};
use crate::error::{Error, Result};

/// The quaternion `a + b·i + c·j + d·k` with rational coordinates.
///
/// Ordering is lexicographic on `(a, b, c, d)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quaternion {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Quaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(int(a), int(b), int(c), int(d))
    }

    /// `(a + b·i + c·j + d·k) / den`
    pub fn from_frac(a: i64, b: i64, c: i64, d: i64, den: i64) -> Self {
        Self::new(rational(a, den), rational(b, den), rational(c, den), rational(d, den))
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    /// `(−1 + i + j + k)/2`, of order 3.
    pub fn w() -> Self {
        Self::from_frac(-1, 1, 1, 1, 2)
    }

    /// `(−1 − i − j − k)/2`, the quaternion conjugate of `w`.
    pub fn v() -> Self {
        Self::from_frac(-1, -1, -1, -1, 2)
    }

    pub fn coords(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn from_coords(c: [Rational; 4]) -> Self {
        let [a, b, c, d] = c;
        Self::new(a, b, c, d)
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|x| x.is_zero())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    pub fn norm(&self) -> Rational {
        self.coords().iter().map(|x| *x * *x).fold(Rational::zero(), |acc, v| acc + v)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.a * r, &self.b * r, &self.c * r, &self.d * r)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }

    /// Hamilton product with ij = k, jk = i, ki = j.
    pub fn mul(&self, o: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Self::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(self.conj().scale(&n.recip()))
    }

    /// Parses four rational strings `[a, b, c, d]`.
    pub fn parse<S: AsRef<str>>(parts: &[S]) -> Result<Self> {
        if parts.len() != 4 {
            return Err(Error::InvalidInput(format!("quaternion needs 4 coordinates, got {}", parts.len())));
        }
        let c: Vec<Rational> = parts.iter().map(|s| parse_rational(s.as_ref())).collect::<Result<_>>()?;
        Ok(Self::from_coords([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]))
    }

    pub fn to_strings(&self) -> [String; 4] {
        self.coords().map(format_rational)
    }

    /// Matrix of `x ↦ self·x` on the basis 1, i, j, k (column vectors).
    pub fn left_matrix(&self) -> CycMatrix {
        self.action_matrix(|basis| self.mul(basis))
    }

    /// Matrix of `x ↦ x·self` on the basis 1, i, j, k (column vectors).
    pub fn right_matrix(&self) -> CycMatrix {
        self.action_matrix(|basis| basis.mul(self))
    }

    fn action_matrix(&self, act: impl Fn(&Quaternion) -> Quaternion) -> CycMatrix {
        let basis = [Self::one(), Self::i(), Self::j(), Self::k()];
        let mut m = CycMatrix::zeros(4, 4);
        for (col, e) in basis.iter().enumerate() {
            let image = act(e);
            for (row, x) in image.coords().iter().enumerate() {
                m.set(row, col, Cyc::from_rational((*x).clone()));
            }
        }
        m
    }
}

/// Written over a common denominator, e.g. `-1`, `1+i`, `(-1+i+j+k)/2`.
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.coords().iter().fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let mut out = String::new();
        for (x, unit) in self.coords().iter().zip(["", "i", "j", "k"]) {
            let n = x.numer() * (&den / x.denom());
            if n.is_zero() {
                continue;
            }
            let sign = if n.is_negative() { "-" } else if out.is_empty() { "" } else { "+" };
            let mag = n.abs();
            out.push_str(sign);
            if !(mag.is_one() && !unit.is_empty()) {
                out.push_str(&mag.to_string());
            }
            out.push_str(unit);
        }
        if out.is_empty() {
            out.push('0');
        }
        if den.is_one() {
            f.write_str(&out)
        } else {
            write!(f, "({out})/{den}")
        }
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quaternion({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_rules() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let m1 = Quaternion::one().neg();
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        assert_eq!(i.mul(&i), m1);
        assert_eq!(j.mul(&j), m1);
        assert_eq!(k.mul(&k), m1);
        assert_eq!(j.mul(&i), k.neg());
    }

    #[test]
    fn w_has_order_three() {
        let w = Quaternion::w();
        assert_eq!(w.mul(&w).mul(&w), Quaternion::one());
        assert_eq!(w.conj(), Quaternion::v());
        assert_eq!(w.mul(&Quaternion::v()), Quaternion::one());
    }

    #[test]
    fn norm_is_multiplicative() {
        let p = Quaternion::from_frac(1, 2, -3, 4, 5);
        let q = Quaternion::from_ints(2, 0, 1, -1);
        assert_eq!(p.mul(&q).norm(), p.norm() * q.norm());
    }

    #[test]
    fn labels() {
        assert_eq!(Quaternion::w().to_string(), "(-1+i+j+k)/2");
        assert_eq!(Quaternion::one().neg().to_string(), "-1");
        assert_eq!(Quaternion::i().neg().to_string(), "-i");
        assert_eq!(Quaternion::from_ints(1, 1, 0, 0).to_string(), "1+i");
        assert_eq!(Quaternion::from_ints(0, 0, 0, 0).to_string(), "0");
    }

    #[test]
    fn action_matrices_compose() {
        let p = Quaternion::w();
        let q = Quaternion::j();
        assert_eq!(p.left_matrix().matmul(&q.left_matrix()), p.mul(&q).left_matrix());
        // right action reverses order: x·q·p
        assert_eq!(p.right_matrix().matmul(&q.right_matrix()), q.mul(&p).right_matrix());
    }

    #[test]
    fn parse_w() {
        assert_eq!(Quaternion::parse(&["-1/2", "1/2", "1/2", "1/2"]).unwrap(), Quaternion::w());
        assert!(Quaternion::parse(&["1", "2"]).is_err());
        assert_eq!(Quaternion::from_ints(0, 0, 0, 0).inverse(), Err(Error::NotInvertible));
    }
}
