//! Dense integer matrices and exact rational elimination.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::vector::{clear_denominators, dot_rat, primitive, to_rat, IntVec, Rat, RatVec};
use crate::error::PolyError;

/// Row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, PolyError> {
        if rows * cols != data.len() {
            return Err(PolyError::BadMatrixShape {
                rows,
                cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from equal-length rows. `cols` is needed for the empty case.
    pub fn from_rows(rows: &[IntVec], cols: usize) -> Result<Self, PolyError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(PolyError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned());
        }
        Self::new(rows.len(), cols, data)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, PolyError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<IntVec> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(&rows, cols)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[IntVec], rows: usize) -> Result<Self, PolyError> {
        Ok(Self::from_rows(cols, rows)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> IntVec {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<IntVec> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column_vecs(&self) -> Vec<IntVec> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        if self.cols != other.rows {
            return Err(PolyError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<IntVec, PolyError> {
        super::vector::check_len(v.len(), self.cols)?;
        Ok((0..self.rows)
            .map(|r| super::vector::dot(self.row(r), v))
            .collect())
    }

    pub fn mul_rat_vec(&self, v: &[Rat]) -> Result<RatVec, PolyError> {
        super::vector::check_len(v.len(), self.cols)?;
        Ok((0..self.rows)
            .map(|r| super::vector::dot_int_rat(self.row(r), v))
            .collect())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += k · row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(src, c) * k;
            self.data[dst * self.cols + c] += v;
        }
    }

    /// col[dst] += k · col[src]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, src) * k;
            self.data[r * self.cols + dst] += v;
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }

    /// Fraction-free Bareiss determinant.
    pub fn determinant(&self) -> Result<BigInt, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(sign * a.get(n - 1, n - 1))
    }

    pub fn rank(&self) -> usize {
        rank(&self.row_vecs(), self.cols)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form over Q. Returns the nonzero rows and pivot columns.
pub fn rref(rows: &[RatVec], cols: usize) -> (Vec<RatVec>, Vec<usize>) {
    let mut m: Vec<RatVec> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let k = m[i][c].clone();
                for j in 0..cols {
                    let v = &m[r][j] * &k;
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[IntVec], cols: usize) -> usize {
    let rat: Vec<RatVec> = rows.iter().map(|r| to_rat(r)).collect();
    rref(&rat, cols).1.len()
}

/// Canonical integer basis of the row span: RREF rows scaled to primitive integers.
pub fn span_basis(vectors: &[IntVec], dim: usize) -> Vec<IntVec> {
    let rat: Vec<RatVec> = vectors.iter().map(|r| to_rat(r)).collect();
    let (rows, _) = rref(&rat, dim);
    rows.iter().map(|r| clear_denominators(r)).collect()
}

/// Canonical integer basis of `{x : r·x = 0 for every row r}`.
pub fn nullspace(rows: &[IntVec], dim: usize) -> Vec<IntVec> {
    let rat: Vec<RatVec> = rows.iter().map(|r| to_rat(r)).collect();
    let (red, pivots) = rref(&rat, dim);
    let mut basis = Vec::new();
    for free in (0..dim).filter(|c| !pivots.contains(c)) {
        let mut x = vec![Rat::zero(); dim];
        x[free] = Rat::one();
        for (row, &p) in red.iter().zip(&pivots) {
            x[p] = -row[free].clone();
        }
        basis.push(clear_denominators(&x));
    }
    basis
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`, as a
/// primitive integer vector (zero if `v` lies in the span).
pub fn project_out(v: &[BigInt], basis: &[IntVec]) -> IntVec {
    if basis.is_empty() {
        return primitive(v);
    }
    let dim = v.len();
    let b: Vec<RatVec> = basis.iter().map(|r| to_rat(r)).collect();
    let k = b.len();
    // Gram system (B Bᵀ) y = B v
    let mut aug: Vec<RatVec> = Vec::with_capacity(k);
    let vr = to_rat(v);
    for i in 0..k {
        let mut row: RatVec = (0..k).map(|j| dot_rat(&b[i], &b[j])).collect();
        row.push(dot_rat(&b[i], &vr));
        aug.push(row);
    }
    let (red, pivots) = rref(&aug, k + 1);
    let mut y = vec![Rat::zero(); k];
    for (row, &p) in red.iter().zip(&pivots) {
        if p < k {
            y[p] = row[k].clone();
        }
    }
    let mut out = vr;
    for (yi, bi) in y.iter().zip(&b) {
        for j in 0..dim {
            out[j] -= yi * &bi[j];
        }
    }
    clear_denominators(&out)
}

/// Some rational solution of `A x = b`, where `A` is given by rows.
pub fn solve(rows: &[RatVec], rhs: &[Rat], cols: usize) -> Option<RatVec> {
    let aug: Vec<RatVec> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &p) in red.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}
