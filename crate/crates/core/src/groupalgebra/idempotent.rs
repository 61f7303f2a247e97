use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::chartheory::{
    complex_character_table, wedderburn_from_table, CharacterTable, TableField, WedderburnBlock,
};
use crate::cycarith::{Cyc, Matrix, Rational};
use crate::error::{Error, Result};
use crate::groupcore::FiniteGroup;

use super::element::AlgebraElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdempotentReport {
    pub idempotent: bool,
    pub central: bool,
}

/// `e_χ = (d/(⟨χ,χ⟩|G|)) Σ_g χ(g⁻¹) g` for every row of `ct`, in row order.
///
/// For a real table the rows are sums over conjugate pairs or doubled quaternionic
/// characters; dividing by the row norm gives the sum of the complex idempotents.
pub fn central_idempotents(ct: &CharacterTable, group: &Arc<FiniteGroup>) -> Result<Vec<AlgebraElement>> {
    if ct.group_order != group.order() || ct.class_of.len() != group.order() {
        return Err(Error::WrongGroup(format!("table of {} used with {}", ct.group_name, group.name())));
    }
    ct.irreducibles
        .iter()
        .enumerate()
        .map(|(row, chi)| {
            let scale = Rational::new(1.into(), (ct.expected_norm(row) * group.order() as i64).into());
            let factor = chi.degree().scale(&scale);
            let coeffs = (0..group.order())
                .map(|x| &factor * &chi.values[ct.class_of[group.inv(x)]])
                .collect();
            AlgebraElement::from_coeffs(group.clone(), coeffs)
        })
        .collect()
}

/// A central idempotent together with the table row and Wedderburn block it cuts out.
#[derive(Clone, Debug)]
pub struct BlockIdempotent {
    pub label: String,
    pub block: WedderburnBlock,
    pub element: AlgebraElement,
}

pub fn block_idempotents(ct: &CharacterTable, group: &Arc<FiniteGroup>) -> Result<Vec<BlockIdempotent>> {
    let elements = central_idempotents(ct, group)?;
    // blocks in row order rather than sorted
    let blocks: Vec<WedderburnBlock> = (0..ct.len())
        .map(|r| {
            let single = CharacterTable {
                irreducibles: vec![ct.irreducibles[r].clone()],
                fs: vec![ct.fs[r]],
                labels: vec![ct.labels[r].clone()],
                constituents: vec![ct.constituents[r].clone()],
                ..ct.clone()
            };
            wedderburn_from_table(&single).blocks[0]
        })
        .collect();
    Ok(elements
        .into_iter()
        .zip(blocks)
        .zip(&ct.labels)
        .map(|((element, block), label)| BlockIdempotent { label: label.clone(), block, element })
        .collect())
}

pub fn verify_idempotent(a: &AlgebraElement) -> IdempotentReport {
    let g = a.group();
    let idempotent = a.mul(a).map(|sq| sq == *a).unwrap_or(false);
    let central = (0..g.order()).all(|x| {
        let b = AlgebraElement::basis(g, x);
        a.mul(&b).ok() == b.mul(a).ok()
    });
    IdempotentReport { idempotent, central }
}

/// Dimension of the right ideal `a·kG`, i.e. the rank of `x ↦ a·x`.
pub fn block_dimension(a: &AlgebraElement) -> Result<usize> {
    if !verify_idempotent(a).idempotent {
        return Err(Error::NotIdempotent);
    }
    let g = a.group();
    let n = g.order();
    let columns: Vec<AlgebraElement> =
        (0..n).map(|x| a.mul(&AlgebraElement::basis(g, x))).collect::<Result<_>>()?;
    if a.coeffs().iter().all(Cyc::is_rational) {
        let data = (0..n)
            .flat_map(|r| columns.iter().map(move |c| c.coeff(r).as_rational().expect("rational").clone()))
            .collect();
        Ok(Matrix::<Rational>::new(n, n, data).rank())
    } else {
        let data = (0..n).flat_map(|r| columns.iter().map(move |c| c.coeff(r).clone())).collect();
        Ok(Matrix::<Cyc>::new(n, n, data).rank())
    }
}

/// Galois orbits of the complex irreducibles under `ζ ↦ ζ^m`, `gcd(m, 24) = 1`: the
/// simple components of ℚG.
pub fn rational_blocks(ct: &CharacterTable) -> Vec<Vec<usize>> {
    let mut seen = vec![false; ct.len()];
    let mut orbits = Vec::new();
    for i in 0..ct.len() {
        if seen[i] {
            continue;
        }
        let mut orbit = BTreeSet::new();
        for m in [1, 5, 7, 11, 13, 17, 19, 23] {
            let image: Vec<Cyc> = ct.irreducibles[i].values.iter().map(|v| v.galois(m)).collect();
            if let Some(j) = ct.irreducibles.iter().position(|c| c.values == image) {
                orbit.insert(j);
            }
        }
        for &j in &orbit {
            seen[j] = true;
        }
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}

/// Every idempotent of ℚG for abelian G: all sums of primitive rational idempotents,
/// ordered by subset bitmask (so `0` comes first and `e` last).
pub fn enumerate_idempotents_commutative(group: &Arc<FiniteGroup>) -> Result<Vec<AlgebraElement>> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let ct = complex_character_table(group)?;
    let complex = central_idempotents(&ct, group)?;
    let primitive: Vec<AlgebraElement> = rational_blocks(&ct)
        .iter()
        .map(|orbit| {
            orbit.iter().try_fold(AlgebraElement::zero(group), |acc, &i| acc.add(&complex[i]))
        })
        .collect::<Result<_>>()?;
    let b = primitive.len();
    if b > 16 {
        return Err(Error::InvalidInput(format!("{b} rational blocks is too many to enumerate")));
    }
    (0u32..1 << b)
        .map(|mask| {
            (0..b)
                .filter(|i| mask & (1 << i) != 0)
                .try_fold(AlgebraElement::zero(group), |acc, i| acc.add(&primitive[i]))
        })
        .collect()
}

/// Idempotents of ℤG for abelian G: those rational idempotents with integer coefficients.
pub fn integral_idempotent_check(group: &Arc<FiniteGroup>) -> Result<Vec<AlgebraElement>> {
    Ok(enumerate_idempotents_commutative(group)?.into_iter().filter(AlgebraElement::is_integral).collect())
}

/// Real-block idempotents of a group, with labels.
pub fn real_block_idempotents(group: &Arc<FiniteGroup>) -> Result<Vec<BlockIdempotent>> {
    let ct = crate::chartheory::character_table(group, TableField::Real)?;
    block_idempotents(&ct, group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartheory::DivisionRing;
    use crate::groupalgebra::parse_element;
    use crate::groupcore::builtin_group;

    #[test]
    fn two_t_blocks_match_expressions() {
        let g = builtin_group("2T").unwrap();
        let blocks = real_block_idempotents(&g).unwrap();
        let expected = [
            ("(e+i^2)(e+i)(e+j)(e+w+v)/24", 1, DivisionRing::Real),
            ("(e+i^2)(e+i)(e+j)(2e-w-v)/24", 2, DivisionRing::Complex),
            ("(e+i^2)(3e-i-j-k)/8", 9, DivisionRing::Real),
            ("(e-i^2)(2e-s)/12", 4, DivisionRing::Quaternion),
            ("(e-i^2)(4e+s)/12", 8, DivisionRing::Complex),
        ];
        let s = "(w+iw+jw+kw+v-iv-jv-kv)";
        for (b, (text, dim, ring)) in blocks.iter().zip(expected) {
            let a = parse_element(&g, &text.replace('s', s)).unwrap();
            assert_eq!(a, b.element, "{text}");
            assert_eq!(verify_idempotent(&a), IdempotentReport { idempotent: true, central: true });
            assert_eq!(block_dimension(&a).unwrap(), dim);
            assert_eq!(b.block.ring, ring);
        }
    }

    #[test]
    fn z3_toy() {
        let g = builtin_group("Z3").unwrap();
        let all = enumerate_idempotents_commutative(&g).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all.contains(&parse_element(&g, "(e+v+w)/3").unwrap()));
        assert!(all.contains(&parse_element(&g, "(2e-v-w)/3").unwrap()));
        let integral = integral_idempotent_check(&g).unwrap();
        assert_eq!(integral, vec![AlgebraElement::zero(&g), AlgebraElement::one(&g)]);
        let z2 = builtin_group("Z2").unwrap();
        assert_eq!(enumerate_idempotents_commutative(&z2).unwrap().len(), 4);
        assert_eq!(integral_idempotent_check(&z2).unwrap().len(), 2);
        assert!(matches!(enumerate_idempotents_commutative(&builtin_group("Q8").unwrap()), Err(Error::NotAbelian)));
    }

    #[test]
    fn non_idempotent() {
        let g = builtin_group("Q8").unwrap();
        let a = parse_element(&g, "e+i").unwrap();
        assert!(!verify_idempotent(&a).idempotent);
        assert!(matches!(block_dimension(&a), Err(Error::NotIdempotent)));
    }
}
