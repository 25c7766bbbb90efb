//! Dense matrices over an exact field and Gaussian elimination.

use std::fmt;

use crate::field::Field;

/// A dense row-major matrix. Entries are plain field elements; every
/// operation that needs arithmetic takes the field explicitly.
#[derive(Clone, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix {
            rows: nrows,
            cols,
            data,
        }
    }

    /// Builds from column vectors of length `rows`.
    pub fn from_columns<F: Field<Elem = E>>(field: &F, rows: usize, columns: &[Vec<E>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix columns");
            for (i, v) in c.iter().enumerate() {
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

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Stacks `blocks` vertically; they must share a column count.
    pub fn vstack(cols: usize, blocks: &[Matrix<E>]) -> Self {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "column count mismatch in vstack");
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        Matrix { rows, cols, data }
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, rhs: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.cols, rhs.rows, "incompatible matrix product");
        let mut out = Matrix::zeros(field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if field.is_zero(b) {
                        continue;
                    }
                    let v = field.add(out.get(i, j), &field.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !field.is_zero(a) && !field.is_zero(b))
                    .fold(field.zero(), |acc, (a, b)| {
                        field.add(&acc, &field.mul(a, b))
                    })
            })
            .collect()
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.data.iter().all(|v| field.is_zero(v))
    }

    pub fn render<F: Field<Elem = E>>(&self, field: &F) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| field.render(v)).collect())
            .collect()
    }
}

impl<E: fmt::Debug> fmt::Debug for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form together with the pivot columns.
pub struct Echelon<E> {
    pub matrix: Matrix<E>,
    pub pivots: Vec<usize>,
}

/// Gauss–Jordan elimination. Pivots are the first nonzero entries scanning
/// columns left to right, so the result only depends on the input.
pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Echelon<F::Elem> {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !field.is_zero(a.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = field.inv(a.get(r, c));
        for j in c..a.cols {
            let v = field.mul(a.get(r, j), &inv);
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r || field.is_zero(a.get(i, c)) {
                continue;
            }
            let factor = a.get(i, c).clone();
            for j in c..a.cols {
                if field.is_zero(a.get(r, j)) {
                    continue;
                }
                let v = field.sub(a.get(i, j), &field.mul(&factor, a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { matrix: a, pivots }
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    rref(field, m).pivots.len()
}

pub fn is_invertible<F: Field>(field: &F, m: &Matrix<F::Elem>) -> bool {
    m.rows() == m.cols() && rank(field, m) == m.rows()
}

/// Basis of `{x | m x = 0}`, one vector per free column, read off the RREF.
pub fn kernel_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let Echelon { matrix: e, pivots } = rref(field, m);
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); m.cols()];
            v[free] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(e.get(r, free));
            }
            v
        })
        .collect()
}

/// One solution of `m x = b` (free variables set to zero), or `None`.
pub fn solve<F: Field>(field: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(b.len(), m.rows());
    let mut aug = Matrix::zeros(field, m.rows(), m.cols() + 1);
    for (i, bi) in b.iter().enumerate() {
        for j in 0..m.cols() {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, m.cols(), bi.clone());
    }
    let Echelon { matrix: e, pivots } = rref(field, &aug);
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![field.zero(); m.cols()];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = e.get(r, m.cols()).clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn q_matrix(rows: &[&[i64]]) -> Matrix<num_rational::BigRational> {
        let q = Rationals;
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| q.from_i64(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_of_small_matrices() {
        let q = Rationals;
        assert_eq!(rank(&q, &q_matrix(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&q, &q_matrix(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(&q, &Matrix::zeros(&q, 0, 3)), 0);
        assert_eq!(rank(&q, &Matrix::zeros(&q, 3, 0)), 0);
    }

    #[test]
    fn characteristic_changes_rank() {
        // [[1,1],[-1,1]] has determinant 2
        let q = Rationals;
        assert_eq!(rank(&q, &q_matrix(&[&[1, 1], &[-1, 1]])), 2);
        let f2 = PrimeField::new(2).unwrap();
        let m = Matrix::from_rows(2, vec![vec![1u64, 1], vec![f2.from_i64(-1), 1]]);
        assert_eq!(rank(&f2, &m), 1);
    }

    #[test]
    fn solve_and_kernel() {
        let q = Rationals;
        let m = q_matrix(&[&[1, 1, 0], &[0, 1, 1]]);
        let ker = kernel_basis(&q, &m);
        assert_eq!(ker.len(), 1);
        assert!(m.apply(&q, &ker[0]).iter().all(|v| q.is_zero(v)));
        let b = vec![q.from_i64(2), q.from_i64(3)];
        let x = solve(&q, &m, &b).unwrap();
        assert_eq!(m.apply(&q, &x), b);
        let inconsistent = q_matrix(&[&[1, 1], &[1, 1]]);
        assert!(solve(&q, &inconsistent, &[q.from_i64(1), q.from_i64(2)]).is_none());
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-2i64..=2, 12), cols in 1usize..=4) {
            let q = Rationals;
            let rows = 12 / cols;
            let data: Vec<Vec<_>> = (0..rows)
                .map(|i| (0..cols).map(|j| q.from_i64(entries[i * cols + j])).collect())
                .collect();
            let m = Matrix::from_rows(cols, data);
            let ker = kernel_basis(&q, &m);
            prop_assert_eq!(rank(&q, &m) + ker.len(), cols);
            for v in &ker {
                prop_assert!(m.apply(&q, v).iter().all(|x| q.is_zero(x)));
            }
            prop_assert_eq!(rank(&q, &m), rank(&q, &m.transpose()));
        }
    }
}
