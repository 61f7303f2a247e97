//! Operators X ↦ A·X·B on 2×2 complex matrices, the gamma matrices built from them,
//! Clifford relations, and real Lie closures.

use serde::Serialize;

use crate::cycarith::{Cyc, CycMatrix, Matrix, Rational};
use crate::error::{Error, Result};
use crate::groupcore::{group_from_matrices, FiniteGroup, DEFAULT_CAP};

/// The map X ↦ A·X·B, kept both as the pair (A, B) and as a 4×4 matrix acting on the
/// row-major coordinates (X11, X12, X21, X22).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LROperator {
    pub left: CycMatrix,
    pub right: CycMatrix,
    pub realized: CycMatrix,
}

pub fn lr_operator(left: &CycMatrix, right: &CycMatrix) -> Result<LROperator> {
    if left.rows() != 2 || left.cols() != 2 || right.rows() != 2 || right.cols() != 2 {
        return Err(Error::DimensionMismatch("left and right factors must be 2×2".into()));
    }
    Ok(LROperator { left: left.clone(), right: right.clone(), realized: left.kron(&right.transpose()) })
}

impl LROperator {
    pub fn apply(&self, x: &CycMatrix) -> CycMatrix {
        self.left.matmul(x).matmul(&self.right)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &LROperator) -> LROperator {
        LROperator {
            left: self.left.matmul(&other.left),
            right: other.right.matmul(&self.right),
            realized: self.realized.matmul(&other.realized),
        }
    }

    pub fn scale(&self, k: &Cyc) -> LROperator {
        LROperator { left: self.left.scale(k), right: self.right.clone(), realized: self.realized.scale(k) }
    }
}

fn mat2(a: Cyc, b: Cyc, c: Cyc, d: Cyc) -> CycMatrix {
    CycMatrix::from_rows(vec![vec![a, b], vec![c, d]])
}

/// Pauli matrices σ1, σ2, σ3.
pub fn pauli(n: usize) -> CycMatrix {
    let (o, z, i) = (Cyc::one(), Cyc::zero(), Cyc::i());
    match n {
        1 => mat2(z.clone(), o.clone(), o, z),
        2 => mat2(z.clone(), -&i, i, z),
        3 => mat2(o.clone(), z.clone(), z, -&o),
        _ => CycMatrix::identity(2),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaSet {
    pub gammas: Vec<LROperator>,
}

impl GammaSet {
    /// γ_S for the index set S, multiplied in increasing index order; γ_∅ = 1.
    pub fn product(&self, indices: &[usize]) -> LROperator {
        let id = CycMatrix::identity(2);
        indices.iter().fold(lr_operator(&id, &id).expect("2×2"), |acc, &k| acc.compose(&self.gammas[k]))
    }
}

/// γ0 = (1, σ1), γ1 = (σ1, iσ2), γ2 = (σ2, iσ2), γ3 = (σ3, iσ2).
pub fn paper_gammas() -> GammaSet {
    let isigma2 = pauli(2).scale(&Cyc::i());
    let pairs = [
        (CycMatrix::identity(2), pauli(1)),
        (pauli(1), isigma2.clone()),
        (pauli(2), isigma2.clone()),
        (pauli(3), isigma2),
    ];
    GammaSet { gammas: pairs.iter().map(|(a, b)| lr_operator(a, b).expect("2×2")).collect() }
}

/// Checks γμγν + γνγμ = 2ημν with η diagonal ±1 and returns the diagonal.
pub fn clifford_verify(gs: &GammaSet) -> Result<Vec<i8>> {
    let n = gs.gammas.first().map_or(0, |g| g.realized.rows());
    let id = CycMatrix::identity(n);
    let mut signature = Vec::with_capacity(gs.gammas.len());
    for (mu, a) in gs.gammas.iter().enumerate() {
        for (nu, b) in gs.gammas.iter().enumerate().skip(mu) {
            let anti = a.realized.matmul(&b.realized).plus(&b.realized.matmul(&a.realized));
            if mu != nu {
                if !anti.is_zero() {
                    return Err(Error::NotClifford { mu, nu });
                }
                continue;
            }
            let square = a.realized.matmul(&a.realized);
            if square == id {
                signature.push(1);
            } else if square == id.negated() {
                signature.push(-1);
            } else {
                return Err(Error::NotClifford { mu, nu });
            }
        }
    }
    Ok(signature)
}

/// Group generated by the right-hand operators iγ0 = (1, iσ1) and iγ1γ2γ3 = (1, iσ2).
pub fn right_mult_group(gs: &GammaSet) -> Result<FiniteGroup> {
    if gs.gammas.len() != 4 {
        return Err(Error::InvalidInput("four gamma matrices expected".into()));
    }
    let i = Cyc::i();
    let a = gs.gammas[0].scale(&i);
    let b = gs.product(&[1, 2, 3]).scale(&i);
    operator_group(&[a, b])
}

/// Closure of realized operators as a finite matrix group.
pub fn operator_group(ops: &[LROperator]) -> Result<FiniteGroup> {
    if ops.is_empty() {
        return group_from_matrices(&[CycMatrix::identity(4)], DEFAULT_CAP);
    }
    let gens: Vec<CycMatrix> = ops.iter().map(|o| o.realized.clone()).collect();
    group_from_matrices(&gens, DEFAULT_CAP)
}

/// Matrix entries written out as rational coordinates, 8 per entry.
fn rational_coords(m: &CycMatrix) -> Vec<Rational> {
    m.entries().iter().flat_map(|c| c.coeffs().iter().cloned()).collect()
}

/// Incrementally maintained row-reduced basis of a subspace.
struct Span<F: crate::cycarith::Field> {
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: crate::cycarith::Field> Span<F> {
    fn new() -> Self {
        Span { rows: Vec::new(), pivots: Vec::new() }
    }

    /// Adds `v` if independent; returns whether it was.
    fn insert(&mut self, mut v: Vec<F>) -> bool {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = x.minus(&f.times(r));
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse().expect("nonzero pivot");
        let v: Vec<F> = v.iter().map(|x| x.times(&inv)).collect();
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if !r.is_zero() {
                        *x = x.minus(&f.times(r));
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Basis of the smallest ℚ-subspace containing the generators and closed under
/// [a, b] = ab − ba. Entries are expanded into their 8 rational coordinates, so this is
/// the real Lie algebra the generators span.
pub fn lie_closure(generators: &[CycMatrix]) -> Vec<CycMatrix> {
    closure_with(generators, rational_coords)
}

/// Dimension of [`lie_closure`].
pub fn lie_closure_dim(generators: &[CycMatrix]) -> usize {
    lie_closure(generators).len()
}

/// Dimension over ℚ(ζ₂₄) of the Lie algebra the generators span over the whole field
/// (so over ℂ); twice this is its dimension as a real algebra.
pub fn lie_closure_dim_over_field(generators: &[CycMatrix]) -> usize {
    closure_with(generators, |m| m.entries().to_vec()).len()
}

fn closure_with<F: crate::cycarith::Field>(generators: &[CycMatrix], coords: impl Fn(&CycMatrix) -> Vec<F>) -> Vec<CycMatrix> {
    let mut span = Span::<F>::new();
    let mut basis: Vec<CycMatrix> = Vec::new();
    for g in generators {
        if span.insert(coords(g)) {
            basis.push(g.clone());
        }
    }
    let mut checked = 0;
    while checked < basis.len() {
        let a = basis[checked].clone();
        for j in 0..checked {
            let c = a.bracket(&basis[j]);
            if span.insert(coords(&c)) {
                basis.push(c);
            }
        }
        checked += 1;
    }
    debug_assert_eq!(span.dim(), basis.len());
    basis
}

/// Rank over ℚ of the union of two matrix families.
pub fn joint_rank(a: &[CycMatrix], b: &[CycMatrix]) -> usize {
    let mut span = Span::<Rational>::new();
    a.iter().chain(b).filter(|m| span.insert(rational_coords(m))).count()
}

/// Rank over ℚ(ζ₂₄) of the 16 products γ_S, S ⊆ {0,1,2,3}.
pub fn gamma_products_rank(gs: &GammaSet) -> usize {
    let n = gs.gammas.len();
    let mut rows = Vec::new();
    for mask in 0u32..1 << n {
        let s: Vec<usize> = (0..n).filter(|k| mask & (1 << k) != 0).collect();
        rows.push(gs.product(&s).realized.entries().to_vec());
    }
    let cols = rows.first().map_or(0, Vec::len);
    Matrix::new(rows.len(), cols, rows.concat()).rank()
}

/// The left-hand generators i = (i, 1), γ1γ2, γ2γ3, realized.
pub fn u2_generators(gs: &GammaSet) -> Vec<CycMatrix> {
    let id = CycMatrix::identity(2);
    let i = lr_operator(&id.scale(&Cyc::i()), &id).expect("2×2");
    vec![i.realized, gs.product(&[1, 2]).realized, gs.product(&[2, 3]).realized]
}

/// iγ1γ2 and iγ2γ3, realized.
pub fn sl2_generators(gs: &GammaSet) -> Vec<CycMatrix> {
    let i = Cyc::i();
    vec![gs.product(&[1, 2]).scale(&i).realized, gs.product(&[2, 3]).scale(&i).realized]
}

/// γ0γ1, γ1γ2, γ2γ3, realized.
pub fn spin_generators(gs: &GammaSet) -> Vec<CycMatrix> {
    vec![gs.product(&[0, 1]).realized, gs.product(&[1, 2]).realized, gs.product(&[2, 3]).realized]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(r: usize, c: usize) -> CycMatrix {
        let mut m = CycMatrix::zeros(2, 2);
        m.set(r, c, Cyc::one());
        m
    }

    #[test]
    fn operators() {
        let id = CycMatrix::identity(2);
        assert!(lr_operator(&id, &id).unwrap().realized.is_identity());
        let g = paper_gammas();
        assert_eq!(g.gammas[0].apply(&id), pauli(1));
        let s3 = lr_operator(&pauli(3), &pauli(3)).unwrap();
        assert_eq!(s3.apply(&e(0, 1)), e(0, 1).negated());
        // realized matrix acts on row-major coordinates
        for (k, (r, c)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
            let image = g.gammas[2].apply(&e(r, c));
            for (m, (rr, cc)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
                assert_eq!(image.get(rr, cc), g.gammas[2].realized.get(m, k));
            }
        }
        let ab = g.gammas[1].compose(&g.gammas[2]);
        assert_eq!(ab.realized, lr_operator(&ab.left, &ab.right).unwrap().realized);
    }

    #[test]
    fn dirac_gammas() {
        let g = paper_gammas();
        assert_eq!(clifford_verify(&g).unwrap(), vec![1, -1, -1, -1]);
        let two = GammaSet { gammas: g.gammas[..2].to_vec() };
        assert_eq!(clifford_verify(&two).unwrap(), vec![1, -1]);
        // (σ1, σ2) squares to +1 and still anticommutes with the others
        let mut other = g.clone();
        other.gammas[1] = lr_operator(&pauli(1), &pauli(2)).unwrap();
        assert_eq!(clifford_verify(&other).unwrap(), vec![1, 1, -1, -1]);
        let mut bad = g.clone();
        bad.gammas[1] = lr_operator(&pauli(1), &CycMatrix::identity(2)).unwrap();
        assert_eq!(clifford_verify(&bad), Err(Error::NotClifford { mu: 0, nu: 1 }));
        assert_eq!(gamma_products_rank(&g), 16);
    }

    #[test]
    fn right_group_is_q8() {
        let q = right_mult_group(&paper_gammas()).unwrap();
        assert_eq!(q.order(), 8);
        assert_eq!(q.class_sizes(), vec![1, 1, 2, 2, 2]);
        let id = CycMatrix::identity(2);
        let isigma1 = lr_operator(&id, &pauli(1).scale(&Cyc::i())).unwrap();
        assert_eq!(operator_group(&[isigma1]).unwrap().order(), 4);
        assert_eq!(operator_group(&[lr_operator(&id, &id).unwrap()]).unwrap().order(), 1);
    }

    #[test]
    fn lie_closures() {
        let g = paper_gammas();
        assert_eq!(lie_closure_dim(&u2_generators(&g)), 4);
        assert_eq!(lie_closure_dim(&[]), 0);
        // iγ1γ2 = (σ3, 1) and iγ2γ3 = (σ1, 1) have real entries: their real closure is
        // sl(2,ℝ), while the complex span is sl(2,ℂ)
        let sl2 = sl2_generators(&g);
        assert_eq!(lie_closure_dim(&sl2), 3);
        assert_eq!(lie_closure_dim_over_field(&sl2), 3);
        assert_eq!(lie_closure_dim(&spin_generators(&g)), 6);
    }
}
