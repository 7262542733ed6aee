//! Dense exact integer matrices: Smith normal form and fraction-free
//! determinants.
//!
//! Everything here is generic over [`IntegerScalar`]; use [`crate::IntMatrix`]
//! (big integers) whenever entries can grow, which they do quickly during
//! elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::IntegerScalar;

/// Row-major dense matrix. Zero-sized dimensions are allowed; a `0 x 0`
/// matrix has determinant 1 and an empty Smith form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: IntegerScalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix from rows, converting each entry. Ragged input is a
    /// [`Error::Shape`] error.
    pub fn from_rows<U: Into<T>>(rows: Vec<Vec<U>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let entries: Vec<T> = rows.into_iter().flatten().map(Into::into).collect();
        Self::from_vec(r, c, entries)
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

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    /// Copy with row `row` and column `col` deleted.
    pub fn without_row_col(&self, row: usize, col: usize) -> Self {
        let entries = (0..self.rows)
            .filter(|&r| r != row)
            .flat_map(|r| {
                (0..self.cols)
                    .filter(move |&c| c != col)
                    .map(move |c| self[(r, c)].clone())
            })
            .collect();
        Matrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.entries.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// `row[target] += factor * row[source]`, restricted to columns `from..`.
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &T, from: usize) {
        for c in from..self.cols {
            let delta = factor.clone() * self[(source, c)].clone();
            let cell = &mut self[(target, c)];
            *cell = cell.clone() + delta;
        }
    }

    /// `col[target] += factor * col[source]`, restricted to rows `from..`.
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &T, from: usize) {
        for r in from..self.rows {
            let delta = factor.clone() * self[(r, source)].clone();
            let cell = &mut self[(r, target)];
            *cell = cell.clone() + delta;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let cell = &mut self[(r, c)];
            *cell = -cell.clone();
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let cell = &mut self[(r, c)];
            *cell = -cell.clone();
        }
    }

    /// Position of a nonzero entry of least absolute value in the trailing
    /// submatrix starting at `(from, from)`.
    fn min_nonzero_from(&self, from: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, T)> = None;
        for r in from..self.rows {
            for c in from..self.cols {
                let v = &self[(r, c)];
                if v.is_zero() {
                    continue;
                }
                let a = v.abs();
                if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                    let unit = a.is_one();
                    best = Some((r, c, a));
                    if unit {
                        return best.map(|(r, c, _)| (r, c));
                    }
                }
            }
        }
        best.map(|(r, c, _)| (r, c))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &self.entries[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &mut self.entries[r * self.cols + c]
    }
}

/// Plain text: one line per row, entries separated by single spaces.
impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line = self.entries[r * self.cols..(r + 1) * self.cols]
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_k`, `k = min(rows, cols)`, all
/// nonnegative with zeros last.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmithDiagonal<T> {
    diag: Vec<T>,
}

impl<T: IntegerScalar> SmithDiagonal<T> {
    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    pub fn into_diag(self) -> Vec<T> {
        self.diag
    }

    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// Checks nonnegativity and `d_i | d_{i+1}` (only 0 is divisible by 0).
    pub fn is_divisibility_chain(&self) -> bool {
        self.diag.iter().all(|d| !d.is_negative())
            && self.diag.windows(2).all(|w| {
                if w[0].is_zero() {
                    w[1].is_zero()
                } else {
                    (w[1].clone() % w[0].clone()).is_zero()
                }
            })
    }
}

/// Smith normal form by gcd-reducing elimination.
///
/// Each step moves a smallest nonzero entry to the pivot and clears its row
/// and column with Euclidean quotients; a nonzero remainder becomes the next
/// pivot. The resulting diagonal is then brought into divisibility order by
/// replacing pairs `(a, b)` with `(gcd, lcm)`.
pub fn smith_normal_form<T: IntegerScalar>(m: &Matrix<T>) -> SmithDiagonal<T> {
    let mut a = m.clone();
    let k = a.rows.min(a.cols);
    let mut diag = Vec::with_capacity(k);

    for t in 0..k {
        while let Some((pr, pc)) = a.min_nonzero_from(t) {
            a.swap_rows(t, pr);
            a.swap_cols(t, pc);
            let pivot = a[(t, t)].clone();
            let mut clean = true;
            for r in t + 1..a.rows {
                if a[(r, t)].is_zero() {
                    continue;
                }
                let q = a[(r, t)].clone() / pivot.clone();
                a.add_row_multiple(r, t, &-q, t);
                clean &= a[(r, t)].is_zero();
            }
            for c in t + 1..a.cols {
                if a[(t, c)].is_zero() {
                    continue;
                }
                let q = a[(t, c)].clone() / pivot.clone();
                a.add_col_multiple(c, t, &-q, t);
                clean &= a[(t, c)].is_zero();
            }
            if clean {
                break;
            }
        }
        diag.push(a[(t, t)].abs());
    }

    for i in 0..k {
        for j in i + 1..k {
            let (x, y) = (&diag[i], &diag[j]);
            if !x.is_zero() && (y.clone() % x.clone()).is_zero() {
                continue;
            }
            let (g, l) = (x.gcd(y), x.lcm(y));
            diag[i] = g;
            diag[j] = l;
        }
    }
    SmithDiagonal { diag }
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn determinant<T: IntegerScalar>(m: &Matrix<T>) -> Result<T> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                Some(r) => {
                    a.swap_rows(k, r);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                a[(i, j)] = num / prev.clone();
            }
        }
        prev = a[(k, k)].clone();
    }
    let det = if n == 0 { T::one() } else { a[(n - 1, n - 1)].clone() };
    Ok(if negate { -det } else { det })
}

/// Applies `steps` random unimodular operations chosen deterministically from
/// `seed`: add or subtract one row (column) to another, swap two rows
/// (columns), or negate a row (column).
pub fn elementary_ops_fuzz<T: IntegerScalar>(m: &Matrix<T>, seed: u64, steps: usize) -> Matrix<T> {
    let mut a = m.clone();
    if a.rows == 0 || a.cols == 0 {
        return a;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..steps {
        let on_rows = rng.gen_bool(0.5);
        let dim = if on_rows { a.rows } else { a.cols };
        let op = if dim < 2 { 2 } else { rng.gen_range(0..3) };
        let x = rng.gen_range(0..dim);
        let mut y = rng.gen_range(0..dim);
        if dim >= 2 && y == x {
            y = (x + 1) % dim;
        }
        match (op, on_rows) {
            (0, true) => {
                let sign = if rng.gen_bool(0.5) { T::one() } else { -T::one() };
                a.add_row_multiple(x, y, &sign, 0);
            }
            (0, false) => {
                let sign = if rng.gen_bool(0.5) { T::one() } else { -T::one() };
                a.add_col_multiple(x, y, &sign, 0);
            }
            (1, true) => a.swap_rows(x, y),
            (1, false) => a.swap_cols(x, y),
            (_, true) => a.negate_row(x),
            (_, false) => a.negate_col(x),
        }
    }
    a
}
