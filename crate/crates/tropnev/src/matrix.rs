//! Max-plus matrices and the tropical determinant.
//!
//! The tropical determinant of a square matrix is the maximum over
//! permutations of the diagonal sums, `max_pi sum_i a[i][pi(i)]`, with the
//! maximum taken only over permutations avoiding bottom entries (a bottom
//! factor annihilates the product). This is a maximization linear-assignment
//! problem; [`TropicalMatrix::trop_det`] solves it with a shortest-augmenting-
//! path assignment algorithm in cubic time and then re-sums the winning
//! diagonal from the original entries, in row order, so the returned value is
//! bit-identical to what permutation enumeration produces for that diagonal.
//! [`TropicalMatrix::trop_det_by_enumeration`] keeps the factorial route
//! public as an independent cross-check.
//!
//! Row regularity follows the row-wise definition (a finite entry in every
//! row). Whether the determinant is finite is a strictly stronger condition
//! (the bipartite support must admit a perfect matching), so the two
//! predicates are exposed separately as [`TropicalMatrix::is_regular`] and
//! [`TropicalMatrix::has_finite_assignment`].

use itertools::Itertools;

use crate::semiring::{MaxPlusError, TropicalNumber};

/// A dense row-major matrix over `R ∪ {-inf}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<TropicalNumber>,
}

impl TropicalMatrix {
    /// Builds a matrix from a row-major entry buffer.
    pub fn new(
        rows: usize,
        cols: usize,
        data: Vec<TropicalNumber>,
    ) -> Result<Self, MaxPlusError> {
        if data.len() != rows * cols {
            return Err(MaxPlusError::EntryCountMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(TropicalMatrix { rows, cols, data })
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<TropicalNumber>]) -> Result<Self, MaxPlusError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(MaxPlusError::EntryCountMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        TropicalMatrix::new(r, c, data)
    }

    /// A matrix filled with the bottom element.
    pub fn bottom(rows: usize, cols: usize) -> Self {
        TropicalMatrix {
            rows,
            cols,
            data: vec![TropicalNumber::BOTTOM; rows * cols],
        }
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

    /// Entry at `(i, j)`. Panics when out of bounds.
    pub fn get(&self, i: usize, j: usize) -> TropicalNumber {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.data[i * self.cols + j]
    }

    /// Overwrites the entry at `(i, j)`. Panics when out of bounds.
    pub fn set(&mut self, i: usize, j: usize, v: TropicalNumber) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.data[i * self.cols + j] = v;
    }

    /// Row `i` as a slice. Panics when out of bounds.
    pub fn row(&self, i: usize) -> &[TropicalNumber] {
        assert!(i < self.rows, "row {i} out of bounds");
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn require_square(&self) -> Result<usize, MaxPlusError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MaxPlusError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Tropical determinant `max_pi sum_i a[i][pi(i)]` via linear assignment.
    ///
    /// Returns bottom when no permutation avoids a bottom entry. On finite
    /// results the value equals what permutation enumeration computes,
    /// including on exact ties, because the winner is re-summed from the
    /// original entries in row order.
    pub fn trop_det(&self) -> Result<TropicalNumber, MaxPlusError> {
        Ok(self
            .trop_det_with_diagonal()?
            .map_or(TropicalNumber::BOTTOM, |(v, _)| v))
    }

    /// Tropical determinant together with one maximizing permutation
    /// (`pi[i]` is the column assigned to row `i`), or `None` when every
    /// permutation hits a bottom entry.
    pub fn trop_det_with_diagonal(
        &self,
    ) -> Result<Option<(TropicalNumber, Vec<usize>)>, MaxPlusError> {
        let k = self.require_square()?;
        if k == 0 {
            return Ok(Some((TropicalNumber::ONE, Vec::new())));
        }
        let Some(pi) = self.max_assignment(k) else {
            return Ok(None);
        };
        let mut sum = 0.0;
        for (i, &j) in pi.iter().enumerate() {
            match self.get(i, j).as_finite() {
                Some(v) => sum += v,
                None => return Ok(None),
            }
        }
        Ok(Some((TropicalNumber::from_finite(sum), pi)))
    }

    /// Tropical determinant by enumerating all permutations.
    ///
    /// Factorial-time independent oracle for [`trop_det`]; intended for
    /// k ≤ 8 in test suites.
    ///
    /// [`trop_det`]: TropicalMatrix::trop_det
    pub fn trop_det_by_enumeration(&self) -> Result<TropicalNumber, MaxPlusError> {
        let k = self.require_square()?;
        let mut best: Option<f64> = None;
        'perms: for pi in (0..k).permutations(k) {
            let mut sum = 0.0;
            for (i, &j) in pi.iter().enumerate() {
                match self.get(i, j).as_finite() {
                    Some(v) => sum += v,
                    None => continue 'perms,
                }
            }
            if best.is_none_or(|b| sum > b) {
                best = Some(sum);
            }
        }
        Ok(best.map_or(TropicalNumber::BOTTOM, TropicalNumber::from_finite))
    }

    /// Row regularity: every row contains a finite entry.
    pub fn is_regular(&self) -> Result<bool, MaxPlusError> {
        self.require_square()?;
        Ok((0..self.rows).all(|i| self.row(i).iter().any(|v| !v.is_bottom())))
    }

    /// Whether some permutation avoids every bottom entry, i.e. whether the
    /// tropical determinant is finite. Strictly stronger than
    /// [`is_regular`]; the two agree exactly when the finite support of the
    /// matrix admits a perfect matching.
    ///
    /// [`is_regular`]: TropicalMatrix::is_regular
    pub fn has_finite_assignment(&self) -> Result<bool, MaxPlusError> {
        Ok(self.trop_det_with_diagonal()?.is_some())
    }

    /// Maximizing assignment by shortest augmenting paths on negated costs.
    ///
    /// Bottom entries are modeled with a penalty large enough that any
    /// diagonal through one costs more than every finite diagonal; if the
    /// optimum still uses a penalized entry, no finite diagonal exists.
    fn max_assignment(&self, k: usize) -> Option<Vec<usize>> {
        let mut max_abs = 0.0f64;
        for v in &self.data {
            if let Some(x) = v.as_finite() {
                max_abs = max_abs.max(x.abs());
            }
        }
        let big = (2 * k + 1) as f64 * (max_abs + 1.0);
        let cost = |i: usize, j: usize| -> f64 {
            match self.get(i, j).as_finite() {
                Some(v) => -v,
                None => big,
            }
        };

        // Shortest-augmenting-path minimum-cost assignment with potentials;
        // columns are 1-based with column 0 as the virtual start.
        let mut u = vec![0.0f64; k + 1];
        let mut v = vec![0.0f64; k + 1];
        let mut matched_row = vec![0usize; k + 1];
        let mut way = vec![0usize; k + 1];
        for i in 1..=k {
            matched_row[0] = i;
            let mut j0 = 0usize;
            let mut minv = vec![f64::INFINITY; k + 1];
            let mut used = vec![false; k + 1];
            loop {
                used[j0] = true;
                let i0 = matched_row[j0];
                let mut delta = f64::INFINITY;
                let mut j1 = 0usize;
                for j in 1..=k {
                    if used[j] {
                        continue;
                    }
                    let cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
                for j in 0..=k {
                    if used[j] {
                        u[matched_row[j]] += delta;
                        v[j] -= delta;
                    } else {
                        minv[j] -= delta;
                    }
                }
                j0 = j1;
                if matched_row[j0] == 0 {
                    break;
                }
            }
            loop {
                let j1 = way[j0];
                matched_row[j0] = matched_row[j1];
                j0 = j1;
                if j0 == 0 {
                    break;
                }
            }
        }

        let mut pi = vec![0usize; k];
        for j in 1..=k {
            pi[matched_row[j] - 1] = j - 1;
        }
        if (0..k).any(|i| self.get(i, pi[i]).is_bottom()) {
            return None;
        }
        Some(pi)
    }
}
