//! Elements of the cyclotomic field Q(ζ) with ζ = exp(iπ/12), a primitive 24th root of unity.
//!
//! Values are stored in the power basis 1, ζ, …, ζ⁷ and reduced eagerly modulo the
//! cyclotomic polynomial Φ₂₄(x) = x⁸ − x⁴ + 1, so equality is coordinate equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::{format_rational, int, parse_rational, rational, rational_to_f64, Rational};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Degree of Q(ζ₂₄) over Q.
pub const DEGREE: usize = 8;

/// An exact element of Q(ζ₂₄).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyc {
    coeffs: [Rational; DEGREE],
}

/// Folds x^k for k ≥ 8 back below degree 8 using x⁸ = x⁴ − 1.
fn reduce(buf: &mut [Rational]) -> [Rational; DEGREE] {
    for k in (DEGREE..buf.len()).rev() {
        if buf[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut buf[k], Rational::zero());
        buf[k - 4] += &c;
        buf[k - 8] -= &c;
    }
    std::array::from_fn(|k| std::mem::replace(&mut buf[k], Rational::zero()))
}

impl Cyc {
    pub fn zero() -> Self {
        Cyc { coeffs: std::array::from_fn(|_| Rational::zero()) }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut c = Self::zero();
        c.coeffs[0] = r;
        c
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(rational(n, d))
    }

    /// Builds from power-basis coordinates, which must already be reduced (degree < 8).
    pub fn from_coeffs(coeffs: [Rational; DEGREE]) -> Self {
        Cyc { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational; DEGREE] {
        &self.coeffs
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(24) as usize;
        let mut buf: Vec<Rational> = vec![Rational::zero(); 24];
        buf[k] = Rational::one();
        Cyc { coeffs: reduce(&mut buf) }
    }

    /// A primitive n-th root of unity exp(2πi/n), for n dividing 24.
    pub fn root_of_unity(n: usize) -> Self {
        assert!(n > 0 && 24 % n == 0, "{n} does not divide 24");
        Self::zeta_pow((24 / n) as i64)
    }

    pub fn i() -> Self {
        Self::zeta_pow(6)
    }

    pub fn omega() -> Self {
        Self::zeta_pow(8)
    }

    pub fn sqrt2() -> Self {
        &Self::zeta_pow(3) + &Self::zeta_pow(-3)
    }

    pub fn sqrt3() -> Self {
        &Self::zeta_pow(2) + &Self::zeta_pow(-2)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    pub fn is_integer(&self) -> bool {
        self.as_rational().is_some_and(|r| r.denom().is_one())
    }

    /// The automorphism ζ ↦ ζ^m (m coprime to 24).
    pub fn galois(&self, m: i64) -> Self {
        let mut acc = Self::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += &Self::zeta_pow(k as i64 * m).scale(c);
            }
        }
        acc
    }

    /// Complex conjugation, the automorphism ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        self.galois(-1)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyc { coeffs: std::array::from_fn(|k| if self.coeffs[k].is_zero() { Rational::zero() } else { &self.coeffs[k] * r }) }
    }

    /// Multiplicative inverse, by solving the 8×8 rational system for multiplication by `self`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let mut m = Matrix::<Rational>::zeros(DEGREE, DEGREE);
        for j in 0..DEGREE {
            let col = self * &Self::zeta_pow(j as i64);
            for i in 0..DEGREE {
                m.set(i, j, col.coeffs[i].clone());
            }
        }
        let mut rhs = Matrix::<Rational>::zeros(DEGREE, 1);
        rhs.set(0, 0, Rational::one());
        let x = m
            .solve(&rhs)
            .ok_or_else(|| Error::InternalInconsistency("multiplication map singular".into()))?;
        Ok(Cyc { coeffs: std::array::from_fn(|i| x.get(i, 0).clone()) })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Approximate complex value for display. Never used in decisions.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = k as f64 * std::f64::consts::PI / 12.0;
            let v = rational_to_f64(c);
            re += v * angle.cos();
            im += v * angle.sin();
        }
        (re, im)
    }

    /// Coordinates as rational strings, the serialized form.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    pub fn from_strings<S: AsRef<str>>(parts: &[S]) -> Result<Self> {
        if parts.len() != DEGREE {
            return Err(Error::InvalidInput(format!(
                "cyclotomic scalar needs {DEGREE} coordinates, got {}",
                parts.len()
            )));
        }
        let mut coeffs: [Rational; DEGREE] = std::array::from_fn(|_| Rational::zero());
        for (c, s) in coeffs.iter_mut().zip(parts) {
            *c = parse_rational(s.as_ref())?;
        }
        Ok(Cyc { coeffs })
    }

    /// Coordinates in the basis 1, √2, √3, √6, i, i√2, i√3, i√6.
    fn radical_coords(&self) -> Vec<Rational> {
        let basis = radical_basis();
        let mut m = Matrix::<Rational>::zeros(DEGREE, DEGREE);
        for (j, b) in basis.iter().enumerate() {
            for i in 0..DEGREE {
                m.set(i, j, b.coeffs[i].clone());
            }
        }
        let rhs = Matrix::from_rows(self.coeffs.iter().map(|c| vec![c.clone()]).collect());
        let x = m.solve(&rhs).expect("radical basis spans Q(ζ24)");
        (0..DEGREE).map(|i| x.get(i, 0).clone()).collect()
    }
}

fn radical_basis() -> &'static [Cyc; DEGREE] {
    static BASIS: OnceLock<[Cyc; DEGREE]> = OnceLock::new();
    BASIS.get_or_init(|| {
        let (r2, r3, i) = (Cyc::sqrt2(), Cyc::sqrt3(), Cyc::i());
        let r6 = &r2 * &r3;
        [
            Cyc::one(),
            r2.clone(),
            r3.clone(),
            r6.clone(),
            i.clone(),
            &i * &r2,
            &i * &r3,
            &i * &r6,
        ]
    })
}

const RADICAL_NAMES: [&str; DEGREE] = ["", "√2", "√3", "√6", "i", "i√2", "i√3", "i√6"];

impl super::field::Field for Cyc {
    fn zero() -> Self {
        Cyc::zero()
    }
    fn one() -> Self {
        Cyc::one()
    }
    fn is_zero(&self) -> bool {
        Cyc::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl<'a> Add<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn add(self, rhs: &Cyc) -> Cyc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Cyc> for Cyc {
    fn add_assign(&mut self, rhs: &Cyc) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl<'a> Sub<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &Cyc) -> Cyc {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&Cyc> for Cyc {
    fn sub_assign(&mut self, rhs: &Cyc) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl<'a> Mul<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &Cyc) -> Cyc {
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        let mut buf: Vec<Rational> = vec![Rational::zero(); 2 * DEGREE - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    buf[i + j] += a * b;
                }
            }
        }
        Cyc { coeffs: reduce(&mut buf) }
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc { coeffs: std::array::from_fn(|k| -&self.coeffs[k]) }
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

impl From<i64> for Cyc {
    fn from(n: i64) -> Self {
        Cyc::from_int(n)
    }
}

impl From<Rational> for Cyc {
    fn from(r: Rational) -> Self {
        Cyc::from_rational(r)
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({})", self)
    }
}

fn format_term(coeff: &Rational, name: &str) -> String {
    if name.is_empty() {
        return format_rational(coeff);
    }
    let num = coeff.numer();
    let den = coeff.denom();
    let sign = if num.sign() == num_bigint::Sign::Minus { "-" } else { "" };
    let abs = num.magnitude();
    let head = if abs.is_one() { format!("{sign}{name}") } else { format!("{sign}{abs}{name}") };
    if den.is_one() {
        head
    } else {
        format!("{head}/{den}")
    }
}

/// Human-readable form: cube roots of unity by name, everything else over 1, √2, √3, √6 and i.
impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return f.write_str(&format_rational(r));
        }
        let w = Cyc::omega();
        let wb = w.conj();
        for (v, name) in [(&w, "ω"), (&wb, "ω̄")] {
            if self == v {
                return write!(f, "{name}");
            }
            if *self == -v {
                return write!(f, "-{name}");
            }
        }
        let mut out = String::new();
        for (c, name) in self.radical_coords().iter().zip(RADICAL_NAMES) {
            if c.is_zero() {
                continue;
            }
            let term = format_term(c, name);
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        f.write_str(&out)
    }
}

impl Serialize for Cyc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyc {
    /// Accepts the 8-coordinate array, or a bare rational string as shorthand.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CycVisitor;

        impl<'de> Visitor<'de> for CycVisitor {
            type Value = Cyc;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of 8 rational strings or a rational string")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Cyc, E> {
                parse_rational(v).map(Cyc::from_rational).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Cyc, E> {
                Ok(Cyc::from_int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Cyc, E> {
                i64::try_from(v).map(Cyc::from_int).map_err(E::custom)
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Cyc, A::Error> {
                let mut parts: Vec<String> = Vec::with_capacity(DEGREE);
                while let Some(s) = seq.next_element::<String>()? {
                    parts.push(s);
                }
                Cyc::from_strings(&parts).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_any(CycVisitor)
    }
}
