use std::fmt;

use super::Field;

/// Dense row-major matrix. Zero rows or zero columns are allowed.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        Matrix { rows, cols, data }
    }

    /// Panics on ragged input. An empty slice gives a 0×0 matrix.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&v| F::from_i64(v)));
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn column(values: Vec<F>) -> Self {
        let n = values.len();
        Matrix { rows: n, cols: 1, data: values }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
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

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let cur = out[(i, j)].clone();
                        out[(i, j)] = cur + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F) -> Self {
        let data = self.data.iter().map(|a| a.clone() * s.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Copy of the block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(0, self.cols, other);
        out
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Stack column vectors side by side; `rows` is used when the list is empty.
    pub fn from_columns(rows: usize, columns: &[Self]) -> Self {
        let mut out = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!((c.rows, c.cols), (rows, 1));
            for i in 0..rows {
                out[(i, j)] = c.data[i].clone();
            }
        }
        out
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form and pivot columns.
///
/// Pivots are the first nonzero entry found scanning down each column. The
/// update loop only touches the nonzero columns of the pivot row, which keeps
/// the sparse block systems built elsewhere in the crate cheap.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.clone();
    let pivots = reduce(&mut a, true);
    (a, pivots)
}

fn reduce<F: Field>(a: &mut Matrix<F>, full: bool) -> Vec<usize> {
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a[(r, c)].inverse();
        let support: Vec<usize> = (c..cols).filter(|&j| !a[(r, j)].is_zero()).collect();
        for &j in &support {
            a[(r, j)].mul_assign_ref(&inv);
        }
        let start = if full { 0 } else { r + 1 };
        for i in start..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for &j in &support {
                let (pr, cur) = if r < i {
                    let (lo, hi) = a.data.split_at_mut(i * cols);
                    (&lo[r * cols + j], &mut hi[j])
                } else {
                    let (lo, hi) = a.data.split_at_mut(r * cols);
                    (&hi[j], &mut lo[i * cols + j])
                };
                cur.sub_mul_assign(&factor, pr);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let mut a = m.clone();
    reduce(&mut a, false).len()
}

/// Basis of the right kernel as column vectors, one per free column of the
/// RREF, with a 1 in that free coordinate.
pub fn nullspace_basis<F: Field>(m: &Matrix<F>) -> Vec<Matrix<F>> {
    nullspace_with_free_columns(m).0
}

/// Kernel basis together with its free columns: the coordinates of a kernel
/// vector `v` in this basis are `v[free[0]], v[free[1]], ...`.
pub fn nullspace_with_free_columns<F: Field>(m: &Matrix<F>) -> (Vec<Matrix<F>>, Vec<usize>) {
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![None; m.cols];
    for (row, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(row);
    }
    let free: Vec<usize> = (0..m.cols).filter(|&f| is_pivot[f].is_none()).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![F::zero(); m.cols];
            v[f] = F::one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -r[(row, f)].clone();
            }
            Matrix::column(v)
        })
        .collect();
    (basis, free)
}

/// A solution of `m x = b` with free variables set to zero, or `None`.
pub fn solve<F: Field>(m: &Matrix<F>, b: &Matrix<F>) -> Option<Matrix<F>> {
    assert_eq!((b.rows, b.cols), (m.rows, 1), "right-hand side must be a column of matching length");
    let (r, pivots) = rref(&m.hstack(b));
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![F::zero(); m.cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = r[(row, m.cols)].clone();
    }
    Some(Matrix::column(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::<Q>::identity(3)), 3);
        assert_eq!(rank(&Matrix::<Q>::zeros(4, 2)), 0);
        assert_eq!(rank(&Matrix::<Q>::from_i64_rows(&[vec![1, 2], vec![2, 4]])), 1);
        assert_eq!(rank(&Matrix::<Q>::zeros(0, 5)), 0);
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace_basis(&Matrix::<Q>::identity(2)).is_empty());
        assert_eq!(nullspace_basis(&Matrix::<Q>::zeros(2, 3)).len(), 3);
        let k = nullspace_basis(&Matrix::<Q>::from_i64_rows(&[vec![1, 1], vec![0, 0]]));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].entries(), &[q(-1), q(1)]);
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::column(vec![q(3), q(-2)]);
        assert_eq!(solve(&Matrix::identity(2), &b), Some(b.clone()));
        assert_eq!(solve(&Matrix::<Q>::zeros(2, 2), &Matrix::column(vec![q(1), q(0)])), None);
        let d = Matrix::<Q>::from_i64_rows(&[vec![2, 0], vec![0, 4]]);
        let x = solve(&d, &Matrix::column(vec![q(1), q(2)])).unwrap();
        let half = Q::new(1.into(), 2.into());
        assert_eq!(x.entries(), &[half.clone(), half]);
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-9i64..=9, c), r)
        })
    }

    proptest! {
        #[test]
        fn rank_of_transpose(rows in small_matrix()) {
            let m = Matrix::<Q>::from_i64_rows(&rows);
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }

        #[test]
        fn rank_nullity(rows in small_matrix()) {
            let m = Matrix::<Q>::from_i64_rows(&rows);
            let ker = nullspace_basis(&m);
            prop_assert_eq!(rank(&m) + ker.len(), m.cols());
            for v in &ker {
                prop_assert!(m.mul(v).is_zero());
            }
            prop_assert_eq!(rank(&Matrix::from_columns(m.cols(), &ker)), ker.len());
        }

        #[test]
        fn solve_is_exact(rows in small_matrix(), seed in proptest::collection::vec(-9i64..=9, 7)) {
            let m = Matrix::<Q>::from_i64_rows(&rows);
            let b = Matrix::column(seed[..m.rows()].iter().map(|&v| q(v)).collect());
            match solve(&m, &b) {
                Some(x) => prop_assert_eq!(m.mul(&x), b),
                None => prop_assert!(rank(&m.hstack(&b)) > rank(&m)),
            }
        }

        #[test]
        fn prime_and_rational_rank_agree(rows in small_matrix()) {
            let mq = Matrix::<Q>::from_i64_rows(&rows);
            let mp = Matrix::<PrimeField>::from_i64_rows(&rows);
            prop_assert_eq!(rank(&mq), rank(&mp));
        }
    }
}
