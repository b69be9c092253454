use std::fmt;
use std::sync::Arc;

use super::elem::GroupRingElem;
use super::group::AbelianGroup;
use crate::error::RingError;

/// Largest order handled by the subset-memoized cofactor expansion.
pub const COFACTOR_MAX: usize = 12;

/// Dense matrix over `Z[A]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMatrix {
    group: Arc<AbelianGroup>,
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingElem>,
}

impl RingMatrix {
    pub fn zeros(group: &Arc<AbelianGroup>, rows: usize, cols: usize) -> Self {
        Self {
            group: group.clone(),
            rows,
            cols,
            entries: vec![GroupRingElem::zero(group); rows * cols],
        }
    }

    pub fn identity(group: &Arc<AbelianGroup>, n: usize) -> Self {
        let mut m = Self::zeros(group, n, n);
        for i in 0..n {
            m.set(i, i, GroupRingElem::one(group));
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed for the `m x 0` and `0 x n` cases.
    pub fn from_rows(
        group: &Arc<AbelianGroup>,
        cols: usize,
        rows: Vec<Vec<GroupRingElem>>,
    ) -> Result<Self, RingError> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(RingError::Parse(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for e in row {
                if **e.group() != **group {
                    return Err(RingError::GroupMismatch(group.to_string(), e.group().to_string()));
                }
                entries.push(e);
            }
        }
        Ok(Self { group: group.clone(), rows: nrows, cols, entries })
    }

    pub fn group(&self) -> &Arc<AbelianGroup> {
        &self.group
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

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GroupRingElem) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[GroupRingElem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { group: self.group.clone(), rows: rows.len(), cols: cols.len(), entries }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Determinant, division-free: memoized cofactor expansion up to
    /// [`COFACTOR_MAX`], Berkowitz above.
    pub fn det(&self) -> Result<GroupRingElem, RingError> {
        if !self.is_square() {
            return Err(RingError::NotSquare(self.rows, self.cols));
        }
        if self.rows <= COFACTOR_MAX {
            Ok(self.det_cofactor())
        } else {
            Ok(self.det_berkowitz())
        }
    }

    /// Laplace expansion along rows with results shared across column subsets.
    /// `acc[mask]` is the signed sum over injective assignments of the first
    /// `popcount(mask)` rows onto the columns in `mask`.
    pub(crate) fn det_cofactor(&self) -> GroupRingElem {
        let n = self.rows;
        let zero = GroupRingElem::zero(&self.group);
        if n == 0 {
            return GroupRingElem::one(&self.group);
        }
        let mut acc: Vec<Option<GroupRingElem>> = vec![None; 1 << n];
        acc[0] = Some(GroupRingElem::one(&self.group));
        for mask in 0usize..(1 << n) {
            let Some(cur) = acc[mask].take() else { continue };
            if cur.is_zero() {
                continue;
            }
            let row = mask.count_ones() as usize;
            if row == n {
                acc[mask] = Some(cur);
                continue;
            }
            for j in 0..n {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let a = self.get(row, j);
                if a.is_zero() {
                    continue;
                }
                // inversions introduced: used columns to the right of j
                let inv = (mask >> (j + 1)).count_ones();
                let mut term = &cur * a;
                if inv % 2 == 1 {
                    term = -term;
                }
                let slot = &mut acc[mask | (1 << j)];
                *slot = Some(match slot.take() {
                    Some(s) => &s + &term,
                    None => term,
                });
            }
        }
        acc[(1 << n) - 1].take().unwrap_or(zero)
    }

    /// Berkowitz's algorithm: characteristic polynomial via Toeplitz products,
    /// using only ring additions and multiplications.
    pub(crate) fn det_berkowitz(&self) -> GroupRingElem {
        let n = self.rows;
        let g = &self.group;
        let one = GroupRingElem::one(g);
        if n == 0 {
            return one;
        }
        // v holds charpoly coefficients of the leading r x r block, highest degree first
        let mut v = vec![one.clone(), -self.get(0, 0)];
        for r in 1..n {
            // column above the diagonal and row left of the diagonal
            let col: Vec<GroupRingElem> = (0..r).map(|i| self.get(i, r).clone()).collect();
            let row: Vec<GroupRingElem> = (0..r).map(|j| self.get(r, j).clone()).collect();
            let mut t = Vec::with_capacity(r + 2);
            t.push(one.clone());
            t.push(-self.get(r, r));
            // powers A_r^k * col
            let mut w = col.clone();
            for _ in 0..r {
                let dot = row
                    .iter()
                    .zip(&w)
                    .fold(GroupRingElem::zero(g), |s, (a, b)| &s + &(a * b));
                t.push(-dot);
                w = (0..r)
                    .map(|i| {
                        (0..r).fold(GroupRingElem::zero(g), |s, k| &s + &(self.get(i, k) * &w[k]))
                    })
                    .collect();
            }
            // lower-triangular Toeplitz (r+2) x (r+1) times v
            let mut nv = Vec::with_capacity(r + 2);
            for i in 0..r + 2 {
                let mut s = GroupRingElem::zero(g);
                for (k, vk) in v.iter().enumerate().take(i + 1) {
                    s = &s + &(&t[i - k] * vk);
                }
                nv.push(s);
            }
            v = nv;
        }
        let c = v[n].clone();
        if n % 2 == 1 {
            -c
        } else {
            c
        }
    }

    pub fn mul_matrix(&self, other: &Self) -> Result<Self, RingError> {
        if self.cols != other.rows {
            return Err(RingError::NotSquare(self.cols, other.rows));
        }
        let mut out = Self::zeros(&self.group, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut s = GroupRingElem::zero(&self.group);
                for k in 0..self.cols {
                    s = &s + &self.get(i, k).try_mul(other.get(k, j))?;
                }
                out.set(i, j, s);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row = self.row(i).iter().map(|e| e.to_string()).collect::<Vec<_>>();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
