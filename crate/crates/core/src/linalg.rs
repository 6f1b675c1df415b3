//! Exact sparse linear algebra over `Q`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse matrix over the rationals. Stored entries are never zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<BigRational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> BigRational {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigRational) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: &BigRational) {
        let current = self.get(row, col);
        self.set(row, col, current + value);
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn column(&self, col: usize) -> Vec<(usize, BigRational)> {
        self.entries
            .iter()
            .filter(|((_, j), _)| *j == col)
            .map(|(&(i, _), v)| (i, v.clone()))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), v)| ((j, i), v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<BigRational>> {
        let mut out = alloc::vec![alloc::vec![BigRational::zero(); self.cols]; self.rows];
        for (&(i, j), v) in &self.entries {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut by_row: BTreeMap<usize, Vec<(usize, &BigRational)>> = BTreeMap::new();
        for (&(i, j), v) in &rhs.entries {
            by_row.entry(i).or_default().push((j, v));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for (&(i, k), v) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, w) in row {
                    out.add_to(i, j, &(v * w));
                }
            }
        }
        out
    }
}

type SparseRow = Vec<(usize, BigInt)>;

/// Scales a rational row to a primitive integer row.
fn primitive_row(row: &[(usize, BigRational)]) -> SparseRow {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let mut out: SparseRow = row
        .iter()
        .map(|(j, v)| (*j, v.numer() * (&lcm / v.denom())))
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut SparseRow) {
    let content = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if !content.is_zero() && !content.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &content;
        }
    }
}

/// `target ← p·target - q·pivot`, dropping cancelled entries.
fn combine(target: &SparseRow, p: &BigInt, pivot: &SparseRow, q: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        let ci = target.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, value) = if ci < cj {
            i += 1;
            (ci, p * &target[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(q * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, p * &target[i - 1].1 - q * &pivot[j - 1].1)
        };
        if !value.is_zero() {
            out.push((col, value));
        }
    }
    out
}

/// Markowitz fill estimate, entry bit length, row, column.
type PivotKey = (usize, u64, usize, usize);

/// Rank over `Q` by fraction-free sparse elimination.
///
/// Rows are scaled to primitive integer vectors; a pivot `(r, c)` is chosen to
/// minimise the Markowitz fill estimate `(|row r| - 1)(|col c| - 1)`, ties
/// broken by the pivot's bit length and then by position, so the result and
/// the work done are deterministic. Each update `p·row - q·pivot` is divided
/// by its content to keep coefficients small.
pub fn rank_exact(matrix: &ExactMatrix) -> usize {
    let mut grouped: BTreeMap<usize, Vec<(usize, BigRational)>> = BTreeMap::new();
    for (i, j, v) in matrix.entries() {
        grouped.entry(i).or_default().push((j, v.clone()));
    }
    let mut rows: Vec<Option<SparseRow>> =
        grouped.values().map(|r| Some(primitive_row(r))).collect();

    let mut col_rows: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row.as_ref().into_iter().flatten() {
            col_rows.entry(*c).or_default().insert(r);
        }
    }

    let mut rank = 0;
    loop {
        let mut best: Option<(PivotKey, usize, usize)> = None;
        for (r, row) in rows.iter().enumerate() {
            let Some(row) = row else { continue };
            let row_cost = row.len() - 1;
            for (c, v) in row {
                let col_cost = col_rows[c].len() - 1;
                let key = (row_cost * col_cost, v.bits(), r, *c);
                if best.as_ref().is_none_or(|(k, ..)| key < *k) {
                    best = Some((key, r, *c));
                }
            }
        }
        let Some((_, pr, pc)) = best else { break };
        rank += 1;

        let pivot = rows[pr].take().expect("pivot row is active");
        for (c, _) in &pivot {
            if let Some(set) = col_rows.get_mut(c) {
                set.remove(&pr);
            }
        }
        let pivot_value = &pivot
            .iter()
            .find(|(c, _)| *c == pc)
            .expect("pivot entry present")
            .1;

        let targets: Vec<usize> = col_rows
            .get(&pc)
            .map(|s| s.iter().copied().collect())
            .unwrap_or_default();
        for r in targets {
            let row = rows[r].take().expect("target row is active");
            let value = &row
                .iter()
                .find(|(c, _)| *c == pc)
                .expect("column index is consistent")
                .1;
            let g = pivot_value.gcd(value);
            let p = pivot_value / &g;
            let q = value / &g;
            let mut updated = combine(&row, &p, &pivot, &q);
            make_primitive(&mut updated);

            for (c, _) in &row {
                if let Some(set) = col_rows.get_mut(c) {
                    set.remove(&r);
                }
            }
            if !updated.is_empty() {
                for (c, _) in &updated {
                    col_rows.entry(*c).or_default().insert(r);
                }
                rows[r] = Some(updated);
            }
        }
        col_rows.retain(|_, s| !s.is_empty());
    }
    rank
}

/// Reduced row echelon form of a dense rational matrix, in place.
/// Returns the pivot columns.
pub fn rref(rows: &mut [Vec<BigRational>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        if top == rows.len() {
            break;
        }
        let Some(found) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(top, found);
        let inv = rows[top][col].recip();
        for v in rows[top].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    pivots
}

/// Basis of the right kernel of a dense `rows × cols` rational matrix, each
/// vector scaled to a primitive integer vector and returned sparsely.
///
/// Vectors are indexed by the free columns in increasing order; vector `k`
/// has a `1`-proportional entry at its free column and entries only at pivot
/// columns otherwise.
pub fn kernel_basis(matrix: &[Vec<BigRational>], cols: usize) -> Vec<Vec<(usize, BigInt)>> {
    let mut work: Vec<Vec<BigRational>> = matrix.to_vec();
    let pivots = rref(&mut work);
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    (0..cols)
        .filter(|c| !pivot_set.contains(c))
        .map(|free| {
            let mut v: Vec<(usize, BigRational)> = Vec::with_capacity(pivots.len() + 1);
            for (r, &pc) in pivots.iter().enumerate() {
                let x = &work[r][free];
                if !x.is_zero() {
                    v.push((pc, -x));
                }
            }
            v.push((free, BigRational::one()));
            v.sort_by_key(|(c, _)| *c);
            let mut row = primitive_row(&v);
            // Keep the free coordinate positive so the basis is canonical.
            if row.iter().any(|(c, x)| *c == free && x.is_negative()) {
                for (_, x) in row.iter_mut() {
                    *x = -&*x;
                }
            }
            row
        })
        .collect()
}
