//! Dense exact linear algebra over [`Rational`].
//!
//! Everything here is plain Gaussian elimination; the matrices this crate
//! handles are at most a few hundred rows wide.

use std::collections::BTreeMap;

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `Pᵀ M P` where `P` permutes coordinates: entry `(i, j)` becomes `M[perm[i]][perm[j]]`.
    pub fn permuted_congruence(&self, perm: &[usize]) -> Matrix {
        assert_eq!(perm.len(), self.rows);
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(perm[i], perm[j]).clone())
    }
}

/// Reduced row echelon form. Returns the reduced matrix and the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.to_rows();
    let rows = m.rows();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        if prow == rows {
            break;
        }
        let Some(found) = (prow..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(prow, found);
        let inv = a[prow][col].recip();
        for x in a[prow].iter_mut().skip(col) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = a[prow].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == prow || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        prow += 1;
    }
    (Matrix::from_rows_sized(a, rows, cols), pivots)
}

impl Matrix {
    fn from_rows_sized(rows: Vec<Vec<Rational>>, r: usize, c: usize) -> Matrix {
        if r == 0 {
            return Matrix::zeros(0, c);
        }
        Matrix::from_rows(rows)
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Basis of `{v : M v = 0}`, one vector per free column, each with a 1 in
/// its free column.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free);
            }
            v
        })
        .collect()
}

/// Counts of positive, negative and zero entries on the diagonal of a
/// congruent diagonal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn as_array(&self) -> [usize; 3] {
        [self.positive, self.negative, self.zero]
    }
}

/// Lagrange diagonalization: returns a diagonal `D` with `D = Cᵀ M C` for some
/// invertible `C`. Pivots on the first nonzero diagonal entry; when the
/// remaining block has a zero diagonal but a nonzero entry `(k, j)`, the basis
/// vector `e_k` is replaced by `e_k + e_j`, which puts `2 M[k][j]` on the
/// diagonal.
pub fn congruence_diagonal(m: &Matrix) -> Vec<Rational> {
    assert!(m.is_symmetric(), "congruence diagonalization needs a symmetric matrix");
    let n = m.rows();
    let mut a = m.to_rows();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if let Some(p) = (k..n).find(|&p| !a[p][p].is_zero()) {
            symmetric_swap(&mut a, k, p);
        } else if let Some((i, j)) = (k..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        {
            symmetric_swap(&mut a, k, i);
            // e_k <- e_k + e_j
            for c in 0..n {
                let v = a[j][c].clone();
                a[k][c] += v;
            }
            for r in 0..n {
                let v = a[r][j].clone();
                a[r][k] += v;
            }
        } else {
            diag.extend(std::iter::repeat_n(Rational::zero(), n - k));
            break;
        }
        let pivot = a[k][k].clone();
        debug_assert!(!pivot.is_zero());
        let inv = pivot.recip();
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let factor = &a[r][k] * &inv;
            // row op then the matching column op keep the matrix symmetric
            for c in k..n {
                if !a[k][c].is_zero() {
                    let v = &factor * &a[k][c];
                    a[r][c] -= v;
                }
            }
            for rr in k..n {
                if !a[rr][k].is_zero() {
                    let v = &factor * &a[rr][k];
                    a[rr][r] -= v;
                }
            }
        }
        diag.push(pivot);
    }
    diag
}

fn symmetric_swap(a: &mut [Vec<Rational>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

pub fn signature(m: &Matrix) -> Signature {
    let diag = congruence_diagonal(m);
    Signature {
        positive: diag.iter().filter(|d| d.is_positive()).count(),
        negative: diag.iter().filter(|d| d.is_negative()).count(),
        zero: diag.iter().filter(|d| d.is_zero()).count(),
    }
}

/// An incrementally grown subspace kept in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    // pivot column -> row with a 1 at the pivot and zeros at every other pivot
    rows: BTreeMap<usize, Vec<Rational>>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<Rational>> {
        self.rows.values()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        assert_eq!(v.len(), self.dim);
        for (&p, row) in &self.rows {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec()).iter().all(Rational::is_zero)
    }

    /// Adds `v` to the span. Returns `false` if it was already there.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.values_mut() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        self.rows.insert(p, v);
        true
    }
}
