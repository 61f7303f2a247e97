//! Dense exact matrices over a [`Field`], with Gaussian elimination.

use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cyc::Cyc;
use super::field::Field;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

pub type CycMatrix = Matrix<Cyc>;

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(rows * cols, data.len(), "entry count must equal rows*cols");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                out.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data: out }
    }

    /// Panics if the inner dimensions differ.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.data[idx] = out.data[idx].plus(&a.times(b));
                }
            }
        }
        out
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.plus(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.minus(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.times(s)).collect() }
    }

    pub fn negated(&self) -> Self {
        self.map(F::negated)
    }

    /// Commutator `self·rhs − rhs·self`.
    pub fn bracket(&self, rhs: &Self) -> Self {
        self.matmul(rhs).minus(&rhs.matmul(self))
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.set(i * rhs.rows + k, j * rhs.cols + l, a.times(rhs.get(k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc.plus(self.get(i, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| if r == c { self.get(r, c).is_one() } else { self.get(r, c).is_zero() })
            })
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inverse().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.get(row, c).times(&inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let pv = m.get(row, c);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c).minus(&factor.times(pv));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Rank over the field, by forward elimination only.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            let inv = m.get(rank, col).inverse().expect("nonzero pivot");
            for r in rank + 1..m.rows {
                let factor = m.get(r, col).times(&inv);
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let pv = m.get(rank, c);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c).minus(&factor.times(pv));
                    m.set(r, c, v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// An exact solution of `self · x = rhs`, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows, "row counts differ");
        let n = self.cols;
        let mut aug = Self::zeros(self.rows, n + rhs.cols);
        for r in 0..self.rows {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            for c in 0..rhs.cols {
                aug.set(r, n + c, rhs.get(r, c).clone());
            }
        }
        let (red, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Self::zeros(n, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(p, c, red.get(row, n + c).clone());
            }
        }
        Some(x)
    }

    /// A basis of the right kernel `{v : self·v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = red.get(row, f).negated();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        self.solve(&Self::identity(self.rows))
    }
}

impl CycMatrix {
    pub fn conj(&self) -> Self {
        self.map(Cyc::conj)
    }

    /// Realification: each entry a+bi becomes the block [[a, −b], [b, a]].
    pub fn realify(&self) -> Self {
        let half = Cyc::from_frac(1, 2);
        let mut out = Self::zeros(2 * self.rows, 2 * self.cols);
        let minus_half_i = (&half * &Cyc::i()).negated();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let z = self.get(r, c);
                let zb = z.conj();
                let re = &(z + &zb) * &half;
                let im = &(z - &zb) * &minus_half_i;
                out.set(2 * r, 2 * c, re.clone());
                out.set(2 * r, 2 * c + 1, -&im);
                out.set(2 * r + 1, 2 * c, im);
                out.set(2 * r + 1, 2 * c + 1, re);
            }
        }
        out
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| Cyc::from_int(v)).collect()).collect())
    }
}

impl<F: Field + fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(0);
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                let cell = &cells[r * self.cols + c];
                let pad = width - cell.chars().count();
                write!(f, "{}{}{}", if c > 0 { " " } else { "" }, " ".repeat(pad), cell)?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|r| self.row(r))).finish()
    }
}

/// Serialized as an array of rows.
impl<F: Field + Serialize> Serialize for Matrix<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<&[F]> = (0..self.rows).map(|r| self.row(r)).collect();
        rows.serialize(serializer)
    }
}

impl<'de, F: Field + DeserializeOwned> Deserialize<'de> for Matrix<F> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<F>> = Vec::deserialize(deserializer)?;
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != c) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        Ok(Matrix::from_rows(rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycarith::field::{int, Rational};

    #[test]
    fn rank_examples() {
        assert_eq!(CycMatrix::identity(3).rank(), 3);
        let i = Cyc::i();
        let m = CycMatrix::from_rows(vec![vec![Cyc::one(), i.clone()], vec![i, Cyc::from_int(-1)]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(CycMatrix::zeros(4, 4).rank(), 0);
    }

    #[test]
    fn solve_examples() {
        let b = CycMatrix::from_ints(&[&[3], &[-1]]);
        assert_eq!(CycMatrix::identity(2).solve(&b), Some(b.clone()));
        let x = CycMatrix::from_ints(&[&[2]]).solve(&CycMatrix::from_ints(&[&[1]])).unwrap();
        assert_eq!(x.get(0, 0), &Cyc::from_frac(1, 2));
        let singular = CycMatrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert_eq!(singular.solve(&CycMatrix::from_ints(&[&[0], &[1]])), None);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = Matrix::<Rational>::from_rows(vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
        ]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            let col = Matrix::from_rows(v.iter().map(|x| vec![x.clone()]).collect());
            assert!(m.matmul(&col).is_zero());
        }
    }

    #[test]
    fn realify_of_i() {
        let m = CycMatrix::from_rows(vec![vec![Cyc::i()]]);
        assert_eq!(m.realify(), CycMatrix::from_ints(&[&[0, -1], &[1, 0]]));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = CycMatrix::from_rows(vec![
            vec![Cyc::one(), Cyc::sqrt3()],
            vec![Cyc::i(), Cyc::from_int(2)],
        ]);
        let inv = m.inverse().unwrap();
        assert!(m.matmul(&inv).is_identity());
        assert!(CycMatrix::from_ints(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }
}
