use crate::exactlin::{Field, Matrix};

/// A homogeneous linear system whose unknowns and equations are matrix
/// blocks, assembled from terms `± L · X_k · R`.
pub(crate) struct BlockSystem<F> {
    unknowns: Vec<(usize, usize)>,
    unknown_offsets: Vec<usize>,
    equations: Vec<(usize, usize)>,
    equation_offsets: Vec<usize>,
    matrix: Matrix<F>,
}

impl<F: Field> BlockSystem<F> {
    pub fn new(unknowns: Vec<(usize, usize)>, equations: Vec<(usize, usize)>) -> Self {
        let unknown_offsets = offsets(&unknowns);
        let equation_offsets = offsets(&equations);
        let cols = unknowns.iter().map(|(r, c)| r * c).sum();
        let rows = equations.iter().map(|(r, c)| r * c).sum();
        BlockSystem { unknowns, unknown_offsets, equations, equation_offsets, matrix: Matrix::zeros(rows, cols) }
    }

    /// Adds `sign · L · X_unknown · R` to equation block `eq`; `None` means identity.
    pub fn add_term(&mut self, eq: usize, unknown: usize, negate: bool, left: Option<&Matrix<F>>, right: Option<&Matrix<F>>) {
        let (p, q) = self.equations[eq];
        let (r, c) = self.unknowns[unknown];
        if let Some(l) = left {
            assert_eq!((l.rows(), l.cols()), (p, r), "left factor shape");
        } else {
            assert_eq!(p, r, "identity left factor shape");
        }
        if let Some(rt) = right {
            assert_eq!((rt.rows(), rt.cols()), (c, q), "right factor shape");
        } else {
            assert_eq!(c, q, "identity right factor shape");
        }
        let row0 = self.equation_offsets[eq];
        let col0 = self.unknown_offsets[unknown];
        let one = F::one();
        for i in 0..p {
            for a in 0..r {
                let lv = match left {
                    Some(l) => &l[(i, a)],
                    None if a == i => &one,
                    None => continue,
                };
                if lv.is_zero() {
                    continue;
                }
                for j in 0..q {
                    for b in 0..c {
                        let rv = match right {
                            Some(rt) => &rt[(b, j)],
                            None if b == j => &one,
                            None => continue,
                        };
                        if rv.is_zero() {
                            continue;
                        }
                        let prod = lv.clone() * rv.clone();
                        let cell = &mut self.matrix[(row0 + i * q + j, col0 + a * c + b)];
                        let cur = cell.clone();
                        *cell = if negate { cur - prod } else { cur + prod };
                    }
                }
            }
        }
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn num_unknowns(&self) -> usize {
        self.matrix.cols()
    }

    /// Splits a flat vector of unknowns into its blocks.
    pub fn unflatten(&self, v: &Matrix<F>) -> Vec<Matrix<F>> {
        self.unknowns
            .iter()
            .zip(&self.unknown_offsets)
            .map(|(&(r, c), &off)| Matrix::from_vec(r, c, v.entries()[off..off + r * c].to_vec()))
            .collect()
    }

    /// Flattens blocks into a column vector (inverse of `unflatten`).
    pub fn flatten(&self, blocks: &[Matrix<F>]) -> Matrix<F> {
        let mut data = Vec::with_capacity(self.num_unknowns());
        for (b, &(r, c)) in blocks.iter().zip(&self.unknowns) {
            assert_eq!((b.rows(), b.cols()), (r, c), "block shape");
            data.extend(b.entries().iter().cloned());
        }
        Matrix::column(data)
    }
}

fn offsets(shapes: &[(usize, usize)]) -> Vec<usize> {
    let mut acc = 0;
    shapes
        .iter()
        .map(|(r, c)| {
            let o = acc;
            acc += r * c;
            o
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn term_expands_to_kronecker_product() {
        type Q = BigRational;
        let l = Matrix::<Q>::from_i64_rows(&[vec![1, 2]]);
        let r = Matrix::<Q>::from_i64_rows(&[vec![3], vec![4]]);
        let mut s = BlockSystem::new(vec![(2, 2)], vec![(1, 1)]);
        s.add_term(0, 0, false, Some(&l), Some(&r));
        let x = Matrix::<Q>::from_i64_rows(&[vec![1, 0], vec![0, 1]]);
        let v = s.flatten(std::slice::from_ref(&x));
        assert_eq!(s.matrix().mul(&v), l.mul(&x).mul(&r));
        assert_eq!(s.unflatten(&v), vec![x]);
    }
}
