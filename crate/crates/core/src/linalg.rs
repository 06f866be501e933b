//! Exact rank computation.
//!
//! Two independent routines live here:
//!
//! * [`SparseEchelon`], an incremental sparse row-echelon basis over a field.
//!   Rows are reduced one at a time against the pivots found so far; the pivot
//!   of a row is its first nonzero column in index order. This is the workhorse
//!   for the exterior-algebra spans, where rows have three nonzeros and the
//!   column universe is every sorted triple of edges.
//! * [`bareiss_rank`], dense fraction-free elimination over an integral domain.
//!   It is used for hyperplane normals and as a cross-check of the sparse path.

use std::cmp::Ordering;

use crate::scalar::Scalar;

/// A sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow<T> = Vec<(usize, T)>;

/// Incrementally built reduced basis of a row space.
#[derive(Clone, Debug)]
pub struct SparseEchelon<T> {
    // Pivot rows normalized so the leading entry is one, keyed by leading
    // column. Kept sorted by column for binary search.
    pivots: Vec<(usize, SparseRow<T>)>,
    rows_seen: usize,
}

impl<T: Scalar> Default for SparseEchelon<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> SparseEchelon<T> {
    pub fn new() -> Self {
        Self {
            pivots: Vec::new(),
            rows_seen: 0,
        }
    }

    /// Builds the echelon basis of all `rows`.
    pub fn from_rows<I>(rows: I) -> Self
    where
        I: IntoIterator<Item = SparseRow<T>>,
    {
        let mut ech = Self::new();
        for row in rows {
            ech.insert(row);
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Number of rows offered so far, independent or not.
    pub fn rows_seen(&self) -> usize {
        self.rows_seen
    }

    /// Leading columns of the basis rows, ascending.
    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.iter().map(|(c, _)| *c)
    }

    /// Reduces `row` against the current basis. Returns `true` if the row was
    /// independent and has been added.
    pub fn insert(&mut self, row: SparseRow<T>) -> bool {
        self.rows_seen += 1;
        let reduced = self.reduce(normalize_row(row));
        let Some((lead, lead_val)) = reduced.first().cloned() else {
            return false;
        };
        let inv = T::one() / lead_val;
        let scaled: SparseRow<T> = reduced
            .into_iter()
            .map(|(c, v)| (c, v * inv.clone()))
            .collect();
        let at = self
            .pivots
            .binary_search_by(|(c, _)| c.cmp(&lead))
            .expect_err("reduced row cannot lead on an existing pivot");
        self.pivots.insert(at, (lead, scaled));
        true
    }

    /// Whether `row` lies in the current span.
    pub fn contains(&self, row: SparseRow<T>) -> bool {
        self.reduce(normalize_row(row)).is_empty()
    }

    fn reduce(&self, mut row: SparseRow<T>) -> SparseRow<T> {
        // Eliminate pivot columns left to right. After subtracting the pivot row
        // at column c, every remaining entry of `row` sits right of c.
        let mut from = 0;
        loop {
            let next = row[from..]
                .iter()
                .position(|(c, _)| self.pivot_index(*c).is_some())
                .map(|p| p + from);
            let Some(pos) = next else { break };
            let (col, coeff) = row[pos].clone();
            let pivot = &self.pivots[self.pivot_index(col).unwrap()].1;
            row = axpy(&row, pivot, &coeff);
            // Entries before `pos` are untouched and have no pivot.
            from = pos;
        }
        row
    }

    fn pivot_index(&self, col: usize) -> Option<usize> {
        self.pivots.binary_search_by(|(c, _)| c.cmp(&col)).ok()
    }
}

/// `row - coeff * pivot`, dropping exact zeros.
fn axpy<T: Scalar>(row: &[(usize, T)], pivot: &[(usize, T)], coeff: &T) -> SparseRow<T> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ord = match (row.get(i), pivot.get(j)) {
            (Some((a, _)), Some((b, _))) => a.cmp(b),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Less => {
                out.push(row[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let (c, v) = &pivot[j];
                out.push((*c, -(coeff.clone() * v.clone())));
                j += 1;
            }
            Ordering::Equal => {
                let v = row[i].1.clone() - coeff.clone() * pivot[j].1.clone();
                if !v.is_zero() {
                    out.push((row[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Sorts by column, merges duplicates and drops zeros.
fn normalize_row<T: Scalar>(mut row: SparseRow<T>) -> SparseRow<T> {
    row.sort_by_key(|(c, _)| *c);
    let mut out: SparseRow<T> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = lv.clone() + v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// Exact rank of a sparse row list.
pub fn sparse_rank<T: Scalar>(rows: impl IntoIterator<Item = SparseRow<T>>) -> usize {
    SparseEchelon::from_rows(rows).rank()
}

/// Rank of a dense matrix by fraction-free Gaussian elimination.
///
/// `T` must be an integral domain whose division is exact whenever the
/// quotient exists (integers, or any field). Rows may be ragged; missing
/// entries count as zero.
pub fn bareiss_rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut m: Vec<Vec<T>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(ncols, T::zero());
            r
        })
        .collect();
    let nrows = m.len();
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        let (top, below) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in below {
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&prow[col..]) {
                let v = pivot.clone() * x.clone() - factor.clone() * p.clone();
                *x = v / prev.clone();
            }
        }
        // Columns left of `col` in rows below are already zero; the Sylvester
        // identity keeps every entry integral.
        prev = pivot;
        rank += 1;
    }
    rank
}
