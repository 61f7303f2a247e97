//! Parser for group-algebra expressions such as `(e+i^2)(3e-i-j-k)/8`.
//!
//! Juxtaposition and `*` multiply, `/n` divides by a rational constant, `x^n` takes
//! powers (negative powers only of group elements). Names resolve to `e`, generator
//! names, element labels, and in quaternion groups to `1, i, j, k, w, v` with
//! `w = (-1+i+j+k)/2` and `v` its conjugate. An unknown name made of known one-letter
//! names is read as their product.

use std::sync::Arc;

use crate::cycarith::{parse_rational, Cyc};
use crate::error::{Error, Result};
use crate::groupcore::{FiniteGroup, Payload, Quaternion};

use super::element::AlgebraElement;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Name(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(chars[start..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Name(chars[start..i].iter().collect()));
        } else if "+-*/^()·".contains(c) {
            out.push(Tok::Sym(if c == '·' { '*' } else { c }));
            i += 1;
        } else if c == '−' {
            out.push(Tok::Sym('-'));
            i += 1;
        } else {
            return Err(Error::InvalidInput(format!("unexpected character {c:?} in expression")));
        }
    }
    Ok(out)
}

/// Looks up a group element by name.
pub fn resolve_element(g: &FiniteGroup, name: &str) -> Option<usize> {
    if name == "e" {
        return Some(g.identity());
    }
    if let Some(x) = g.generator_by_name(name) {
        return Some(x);
    }
    if let Some(x) = g.find_label(name) {
        return Some(x);
    }
    if !matches!(g.payload(g.identity()), Payload::Quaternion(_)) {
        return None;
    }
    let q = match name {
        "1" => Quaternion::one(),
        "i" => Quaternion::i(),
        "j" => Quaternion::j(),
        "k" => Quaternion::k(),
        "w" => Quaternion::w(),
        "v" => Quaternion::v(),
        _ => return None,
    };
    g.find_quaternion(&q)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    group: &'a Arc<FiniteGroup>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<AlgebraElement> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Name(_) | Tok::Sym('(')))
    }

    fn term(&mut self) -> Result<AlgebraElement> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?)?;
            } else if self.eat('/') {
                let Some(Tok::Num(n)) = self.peek().cloned() else {
                    return Err(Error::InvalidInput("division needs a number".into()));
                };
                self.pos += 1;
                let d = parse_rational(&n)?;
                acc = acc.scale(&Cyc::from_rational(d).inv()?);
            } else if self.starts_factor() {
                acc = acc.mul(&self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<AlgebraElement> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let Some(Tok::Num(n)) = self.peek().cloned() else {
            return Err(Error::InvalidInput("exponent must be an integer".into()));
        };
        self.pos += 1;
        let k: u32 = n.parse().map_err(|_| Error::InvalidInput(format!("exponent {n} too large")))?;
        if negative {
            let x = base
                .as_group_element()
                .ok_or_else(|| Error::InvalidInput("negative powers need a group element".into()))?;
            return Ok(AlgebraElement::basis(self.group, self.group.pow(x, -i64::from(k))));
        }
        Ok(base.pow(k))
    }

    fn atom(&mut self) -> Result<AlgebraElement> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(AlgebraElement::one(self.group).scale(&Cyc::from_rational(parse_rational(&n)?)))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                if let Some(x) = resolve_element(self.group, &name) {
                    return Ok(AlgebraElement::basis(self.group, x));
                }
                // run-together single letters: `iw` is i·w
                let mut x = self.group.identity();
                for c in name.chars() {
                    let y = resolve_element(self.group, &c.to_string()).ok_or_else(|| Error::UnknownName(name.clone()))?;
                    x = self.group.mul(x, y);
                }
                Ok(AlgebraElement::basis(self.group, x))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::InvalidInput("unbalanced parentheses".into()));
                }
                Ok(inner)
            }
            other => Err(Error::InvalidInput(format!("unexpected {other:?} in expression"))),
        }
    }
}

pub fn parse_element(group: &Arc<FiniteGroup>, text: &str) -> Result<AlgebraElement> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0, group };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::InvalidInput(format!("trailing input in {text:?}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::builtin_group;

    #[test]
    fn projection_table_expressions() {
        let g = builtin_group("2T").unwrap();
        let minus_one = g.find_quaternion(&Quaternion::one().neg()).unwrap();
        let a = parse_element(&g, "(e+i^2)/2").unwrap();
        assert_eq!(a.coeff(g.identity()), &Cyc::from_frac(1, 2));
        assert_eq!(a.coeff(minus_one), &Cyc::from_frac(1, 2));
        // read literally, `-iv` subtracts the order-6 element iv rather than adding the
        // order-3 element -iv; the two readings agree on the fermionic half
        let literal = parse_element(&g, "w+iw+jw+kw+v-iv-jv-kv").unwrap();
        let order3: Vec<usize> = (0..g.order()).filter(|&x| g.element_order(x) == 3).collect();
        let s = AlgebraElement::sum_of(&g, &order3);
        assert_ne!(literal, s);
        let fermion = parse_element(&g, "e-i^2").unwrap();
        assert_eq!(fermion.mul(&literal).unwrap(), fermion.mul(&s).unwrap());
        assert_eq!(parse_element(&g, "w^-1").unwrap(), parse_element(&g, "v").unwrap());
        assert_eq!(parse_element(&g, "2e - 3e").unwrap(), parse_element(&g, "-e").unwrap());
    }

    #[test]
    fn errors() {
        let g = builtin_group("Q8").unwrap();
        assert!(matches!(parse_element(&g, "q"), Err(Error::UnknownName(_))));
        assert!(parse_element(&g, "(e+i").is_err());
        assert!(parse_element(&g, "e/0").is_err());
        assert!(parse_element(&g, "(e+i)^-1").is_err());
    }
}
