use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::{One, Signed, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Signature counts of a symmetric bilinear form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(RatMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&a| super::int(a)).collect())
                .collect(),
        )
    }

    pub fn diagonal(entries: &[Rat]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, a) in entries.iter().enumerate() {
            m[(i, i)] = a.clone();
        }
        m
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

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Row echelon form in place; returns the pivot columns.
    fn echelonize(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, col)].recip();
            for i in r + 1..self.rows {
                let factor = &self[(i, col)] * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let delta = &factor * &self[(r, j)];
                    self[(i, j)] -= delta;
                }
            }
            pivots.push(col);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().echelonize().len()
    }

    pub fn determinant(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..m.cols {
            let Some(p) = (col..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                return Ok(Rat::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            for i in col + 1..m.rows {
                let factor = &m[(i, col)] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let delta = &factor * &m[(col, j)];
                    m[(i, j)] -= delta;
                }
            }
        }
        Ok(det)
    }

    /// Unique solution of `self * x = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &[Rat]) -> Result<Vec<Rat>> {
        if !self.is_square() || rhs.len() != self.rows {
            return Err(Error::Shape(format!(
                "system {}x{} with right-hand side of length {}",
                self.rows,
                self.cols,
                rhs.len()
            )));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, n + 1);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n)] = rhs[i].clone();
        }
        let pivots = aug.echelonize();
        if pivots.len() < n || pivots.last() == Some(&n) {
            return Err(Error::SingularMatrix);
        }
        let mut x = vec![Rat::zero(); n];
        for i in (0..n).rev() {
            let mut acc = aug[(i, n)].clone();
            for j in i + 1..n {
                acc -= &aug[(i, j)] * &x[j];
            }
            x[i] = acc / &aug[(i, i)];
        }
        Ok(x)
    }

    /// Inertia of a symmetric matrix by congruence reduction.
    ///
    /// Repeatedly pivots on a nonzero diagonal entry and passes to the Schur
    /// complement. When every remaining diagonal entry vanishes but an
    /// off-diagonal `a_ij` does not, adding row/column `j` to row/column `i`
    /// produces the diagonal entry `2 a_ij`.
    pub fn inertia(&self) -> Result<Inertia> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut a = self.clone();
        let mut out = Inertia {
            positive: 0,
            negative: 0,
            zero: 0,
        };
        loop {
            let n = a.rows;
            if n == 0 {
                return Ok(out);
            }
            let pivot = match (0..n).find(|&i| !a[(i, i)].is_zero()) {
                Some(i) => i,
                None => {
                    let Some((i, j)) = (0..n)
                        .flat_map(|i| (0..n).map(move |j| (i, j)))
                        .find(|&(i, j)| !a[(i, j)].is_zero())
                    else {
                        out.zero += n;
                        return Ok(out);
                    };
                    for col in 0..n {
                        let v = a[(j, col)].clone();
                        a[(i, col)] += v;
                    }
                    for row in 0..n {
                        let v = a[(row, j)].clone();
                        a[(row, i)] += v;
                    }
                    i
                }
            };
            let p = a[(pivot, pivot)].clone();
            if p.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&i| i != pivot).collect();
            let mut schur = Self::zeros(n - 1, n - 1);
            for (si, &i) in rest.iter().enumerate() {
                for (sj, &j) in rest.iter().enumerate() {
                    schur[(si, sj)] = &a[(i, j)] - &a[(i, pivot)] * &a[(pivot, j)] / &p;
                }
            }
            a = schur;
        }
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
