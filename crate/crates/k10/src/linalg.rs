//! Exact linear algebra over `Q(zeta_120)`: matrices, reduced row echelon
//! form, kernels, and canonical subspace bases.
//!
//! Subspaces are kept as pivot-normalized RREF bases, so subspace equality
//! and membership are plain coefficient comparisons.

use crate::cyclo::CycNum;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<CycNum>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![CycNum::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = CycNum::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(cols: Vec<Vec<CycNum>>) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn diagonal(entries: Vec<CycNum>) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<CycNum> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        let cur = &out[(i, j)] + &prod;
                        out[(i, j)] = cur;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = CycNum::zero();
                for j in 0..self.cols {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += &(a * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
        out
    }

    pub fn commutes_with(&self, rhs: &Matrix) -> bool {
        self.mul(rhs) == rhs.mul(self)
    }

    pub fn is_diagonal(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// In-place reduction to RREF; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = self[(r, c)].inverse().expect("pivot nonzero");
            for j in c..self.cols {
                self[(r, j)] = &self[(r, j)] * &inv;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let factor = self[(i, c)].clone();
                    for j in c..self.cols {
                        let delta = &factor * &self[(r, j)];
                        let cur = &self[(i, j)] - &delta;
                        self[(i, j)] = cur;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<CycNum>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![CycNum::zero(); self.cols];
            v[free] = CycNum::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[(row, free)];
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = CycNum::one();
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| k != c) {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> CycNum {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = CycNum::one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return CycNum::zero();
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = -&det;
            }
            det = &det * &m[(c, c)];
            let inv = m[(c, c)].inverse().expect("pivot nonzero");
            for i in (c + 1)..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] * &inv;
                for j in c..n {
                    let delta = &factor * &m[(c, j)];
                    let cur = &m[(i, j)] - &delta;
                    m[(i, j)] = cur;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Solve `self * x = b`; returns one solution if consistent.
    pub fn solve(&self, b: &[CycNum]) -> Option<Vec<CycNum>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![CycNum::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(row, self.cols)].clone();
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = CycNum;
    fn index(&self, (i, j): (usize, usize)) -> &CycNum {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycNum {
        &mut self.data[i * self.cols + j]
    }
}

/// A subspace of `F^n` in canonical (RREF, pivot-normalized) form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<CycNum>>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: Vec<Vec<CycNum>>) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient));
        if vectors.is_empty() {
            return Subspace {
                ambient,
                basis: Vec::new(),
            };
        }
        let mut m = Matrix::from_rows(vectors);
        let pivots = m.rref();
        let basis = (0..pivots.len())
            .map(|i| m.row(i).to_vec())
            .collect();
        Subspace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<CycNum>] {
        &self.basis
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // reduce v against the RREF basis
        let mut v = v.to_vec();
        for b in &self.basis {
            let pivot = b.iter().position(|c| !c.is_zero()).expect("canonical basis");
            if !v[pivot].is_zero() {
                let factor = v[pivot].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &(&factor * y);
                }
            }
        }
        v.iter().all(|c| c.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.clone());
        Subspace::span(self.ambient, vectors)
    }

    /// Intersection with the coordinate subspace spanned by `indices`.
    pub fn intersect_coordinates(&self, indices: &[usize]) -> Subspace {
        let keep: std::collections::HashSet<usize> = indices.iter().copied().collect();
        // combinations of basis vectors whose coordinates outside `keep` vanish
        let dropped: Vec<usize> = (0..self.ambient).filter(|i| !keep.contains(i)).collect();
        if self.basis.is_empty() {
            return self.clone();
        }
        let mut m = Matrix::zero(dropped.len(), self.basis.len());
        for (r, &coord) in dropped.iter().enumerate() {
            for (c, b) in self.basis.iter().enumerate() {
                m[(r, c)] = b[coord].clone();
            }
        }
        let combos = m.kernel();
        let vectors = combos
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![CycNum::zero(); self.ambient];
                for (c, b) in coeffs.iter().zip(&self.basis) {
                    if !c.is_zero() {
                        for (x, y) in v.iter_mut().zip(b) {
                            *x += &(c * y);
                        }
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, vectors)
    }
}

/// Unit coordinate vector.
pub fn unit_vector(n: usize, i: usize) -> Vec<CycNum> {
    let mut v = vec![CycNum::zero(); n];
    v[i] = CycNum::one();
    v
}

/// Check that a set of vectors is linearly independent.
pub fn independent(vectors: &[Vec<CycNum>]) -> bool {
    if vectors.is_empty() {
        return true;
    }
    Matrix::from_rows(vectors.to_vec()).rank() == vectors.len()
}

/// Eigenspace of `m` for eigenvalue `value`, restricted to `within`.
/// Returns the kernel of `(m - value*I)` intersected with the subspace.
pub fn eigenspace_within(m: &Matrix, value: &CycNum, within: &Subspace) -> Result<Subspace, Error> {
    let n = within.ambient();
    if m.nrows() != n || m.ncols() != n {
        return Err(Error::AlgebraMismatch);
    }
    let k = within.dim();
    if k == 0 {
        return Ok(within.clone());
    }
    // columns: (M - value I) b_i for each basis vector b_i of `within`
    let mut cols = Matrix::zero(n, k);
    for (c, b) in within.basis().iter().enumerate() {
        let mut img = m.apply(b);
        for (x, y) in img.iter_mut().zip(b) {
            *x -= &(value * y);
        }
        for (r, x) in img.into_iter().enumerate() {
            cols[(r, c)] = x;
        }
    }
    let combos = cols.kernel();
    let vectors = combos
        .into_iter()
        .map(|coeffs| {
            let mut v = vec![CycNum::zero(); n];
            for (c, b) in coeffs.iter().zip(within.basis()) {
                if !c.is_zero() {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x += &(c * y);
                    }
                }
            }
            v
        })
        .collect();
    Ok(Subspace::span(n, vectors))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(n: i64) -> CycNum {
        CycNum::from_integer(n)
    }

    #[test]
    fn rref_and_rank() {
        let m = Matrix::from_rows(vec![
            vec![num(1), num(2), num(3)],
            vec![num(2), num(4), num(6)],
            vec![num(0), num(1), num(1)],
        ]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel().len(), 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(vec![
            vec![num(2), num(1)],
            vec![num(1), num(1)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(m.determinant(), num(1));
    }

    #[test]
    fn subspace_membership_and_equality() {
        let s = Subspace::span(3, vec![vec![num(1), num(1), num(0)], vec![num(0), num(2), num(2)]]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[num(1), num(2), num(1)]));
        assert!(!s.contains(&[num(0), num(0), num(1)]));
        let t = Subspace::span(3, vec![vec![num(2), num(2), num(0)], vec![num(1), num(0), num(-1)]]);
        assert_eq!(s, t);
    }

    #[test]
    fn coordinate_intersection() {
        let s = Subspace::span(
            3,
            vec![vec![num(1), num(0), num(1)], vec![num(0), num(1), num(0)]],
        );
        let even = s.intersect_coordinates(&[0, 1]);
        assert_eq!(even.dim(), 1);
        assert!(even.contains(&[num(0), num(1), num(0)]));
    }

    #[test]
    fn eigenspaces_of_diagonal() {
        let m = Matrix::diagonal(vec![num(1), num(1), num(-1)]);
        let whole = Subspace::span(3, vec![unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)]);
        let plus = eigenspace_within(&m, &num(1), &whole).unwrap();
        let minus = eigenspace_within(&m, &num(-1), &whole).unwrap();
        assert_eq!(plus.dim(), 2);
        assert_eq!(minus.dim(), 1);
    }
}
