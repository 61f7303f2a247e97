use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cycarith::{format_rational, Cyc, Rational};
use crate::error::{Error, Result};
use crate::groupcore::{builtin_group, FiniteGroup};

/// Coefficient ring of a group-algebra element; ordered so that `max` is the join.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    Int,
    Rat,
    Cyc,
}

impl Ring {
    /// Smallest ring holding every coefficient.
    pub fn of(coeffs: &[Cyc]) -> Ring {
        if coeffs.iter().all(Cyc::is_integer) {
            Ring::Int
        } else if coeffs.iter().all(Cyc::is_rational) {
            Ring::Rat
        } else {
            Ring::Cyc
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::Int => "int",
            Ring::Rat => "rat",
            Ring::Cyc => "cyc",
        })
    }
}

/// An element of kG: one coefficient per group element in canonical order.
#[derive(Clone)]
pub struct AlgebraElement {
    group: Arc<FiniteGroup>,
    ring: Ring,
    coeffs: Vec<Cyc>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement {}

fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || (a.name() == b.name() && a.labels() == b.labels())
}

impl AlgebraElement {
    /// Checks that the coefficients fit `ring`.
    pub fn new(group: Arc<FiniteGroup>, ring: Ring, coeffs: Vec<Cyc>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                group.order()
            )));
        }
        if Ring::of(&coeffs) > ring {
            return Err(Error::InvalidInput(format!("coefficients do not lie in the {ring} ring")));
        }
        Ok(AlgebraElement { group, ring, coeffs })
    }

    /// Ring inferred from the coefficients.
    pub fn from_coeffs(group: Arc<FiniteGroup>, coeffs: Vec<Cyc>) -> Result<Self> {
        let ring = Ring::of(&coeffs);
        Self::new(group, ring, coeffs)
    }

    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        AlgebraElement { group: group.clone(), ring: Ring::Int, coeffs: vec![Cyc::zero(); group.order()] }
    }

    /// The identity `e` of the algebra.
    pub fn one(group: &Arc<FiniteGroup>) -> Self {
        Self::basis(group, group.identity())
    }

    pub fn basis(group: &Arc<FiniteGroup>, x: usize) -> Self {
        let mut a = Self::zero(group);
        a.coeffs[x] = Cyc::one();
        a
    }

    /// Sum of the listed group elements.
    pub fn sum_of(group: &Arc<FiniteGroup>, elements: &[usize]) -> Self {
        let mut a = Self::zero(group);
        for &x in elements {
            a.coeffs[x] += &Cyc::one();
        }
        a
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeffs(&self) -> &[Cyc] {
        &self.coeffs
    }

    pub fn coeff(&self, x: usize) -> &Cyc {
        &self.coeffs[x]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyc::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Cyc::is_integer)
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::WrongGroup(format!("{} against {}", self.group.name(), other.group.name())))
        }
    }

    fn with(&self, coeffs: Vec<Cyc>, ring: Ring) -> Self {
        let ring = ring.max(Ring::of(&coeffs));
        AlgebraElement { group: self.group.clone(), ring, coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(self.with(coeffs, self.ring.max(other.ring)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(self.with(coeffs, self.ring.max(other.ring)))
    }

    pub fn neg(&self) -> Self {
        self.with(self.coeffs.iter().map(|c| -c).collect(), self.ring)
    }

    pub fn scale(&self, k: &Cyc) -> Self {
        self.with(self.coeffs.iter().map(|c| c * k).collect(), self.ring)
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        self.with(self.coeffs.iter().map(|c| c.scale(k)).collect(), self.ring)
    }

    /// Convolution product `(Σ a_x x)(Σ b_y y) = Σ a_x b_y (xy)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let n = self.group.order();
        let mut out = vec![Cyc::zero(); n];
        for (x, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let row = self.group.cayley_row(x);
            for (y, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[row[y]] += &(a * b);
                }
            }
        }
        Ok(self.with(out, self.ring.max(other.ring)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.group);
        for _ in 0..k {
            acc = acc.mul(self).expect("same group");
        }
        acc
    }

    /// The group element this is, if it is a single basis vector with coefficient 1.
    pub fn as_group_element(&self) -> Option<usize> {
        let mut found = None;
        for (x, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if found.is_some() || *c != Cyc::one() {
                return None;
            }
            found = Some(x);
        }
        found
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            group: &'a str,
            ring: Ring,
            coeffs: Vec<Value>,
        }
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|c| match (self.ring, c.as_rational()) {
                (Ring::Cyc, _) | (_, None) => serde_json::to_value(c).expect("scalar serializes"),
                (_, Some(r)) => Value::String(format_rational(r)),
            })
            .collect();
        let out = Out { group: self.group.name(), ring: self.ring, coeffs };
        serde_json::to_string_pretty(&out).expect("element serializes")
    }

    /// Reads an element of the given group.
    pub fn from_json_in(text: &str, group: &Arc<FiniteGroup>) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            group: String,
            ring: Ring,
            coeffs: Vec<Cyc>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("algebra element: {e}")))?;
        if raw.group != group.name() {
            return Err(Error::WrongGroup(format!("element of {} read into {}", raw.group, group.name())));
        }
        Self::new(group.clone(), raw.ring, raw.coeffs)
    }

    /// Reads an element whose group is one of the compiled-in groups.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("algebra element: {e}")))?;
        let name = v
            .get("group")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::InvalidInput("algebra element without a group".into()))?;
        Self::from_json_in(text, &builtin_group(name)?)
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({}, {}, {})", self.group.name(), self.ring, self)
    }
}

/// Terms `c·x` in canonical element order, with `e` for the identity.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (x, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = if x == self.group.identity() { "e" } else { self.group.label(x) };
            let text = c.to_string();
            let (sign, body) = match text.strip_prefix('-') {
                Some(rest) if c.is_rational() => ("-", rest.to_string()),
                _ => ("+", text),
            };
            let coef = if body == "1" {
                String::new()
            } else if c.is_rational() {
                format!("{body}·")
            } else {
                format!("({body})·")
            };
            match (first, sign) {
                (true, "-") => write!(f, "-{coef}{name}")?,
                (true, _) => write!(f, "{coef}{name}")?,
                (false, s) => write!(f, " {s} {coef}{name}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_convolution() {
        let g = builtin_group("Q8").unwrap();
        let e = AlgebraElement::one(&g);
        let i = AlgebraElement::basis(&g, g.generator_by_name("i").unwrap());
        assert_eq!(e.mul(&i).unwrap(), i);
        let minus_one = i.mul(&i).unwrap();
        let half = Rational::new(1.into(), 2.into());
        let p = e.add(&minus_one).unwrap().scale_rational(&half);
        assert_eq!(p.mul(&p).unwrap(), p);
        assert_eq!(p.ring(), Ring::Rat);
        assert_eq!(minus_one.ring(), Ring::Int);
    }

    #[test]
    fn json_roundtrip() {
        let g = builtin_group("Z3").unwrap();
        let a = AlgebraElement::from_coeffs(g.clone(), vec![Cyc::from_frac(2, 3), Cyc::from_frac(-1, 3), Cyc::omega()])
            .unwrap();
        let text = a.to_json();
        let b = AlgebraElement::from_json(&text).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.to_json(), text);
        assert!(AlgebraElement::new(g, Ring::Int, vec![Cyc::from_frac(1, 2), Cyc::zero(), Cyc::zero()]).is_err());
    }

    #[test]
    fn display() {
        let g = builtin_group("Z3").unwrap();
        let a = AlgebraElement::from_coeffs(g.clone(), vec![Cyc::from_frac(2, 3), Cyc::from_frac(-1, 3), Cyc::from_frac(-1, 3)])
            .unwrap();
        assert!(a.to_string().starts_with("2/3·e - 1/3·"));
        assert_eq!(AlgebraElement::zero(&g).to_string(), "0");
    }
}
