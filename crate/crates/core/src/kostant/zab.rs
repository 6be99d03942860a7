use crate::error::{Error, Result};
use crate::exactlin::{rank, Field, Matrix};
use crate::quiverrep::BlockSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommutatorNullity {
    pub nullity: usize,
    /// Both inputs are strictly upper triangular with all superdiagonal
    /// entries equal to 1; otherwise `min(r, t)` is not guaranteed.
    pub unit_superdiagonal: bool,
}

/// Nullity of `f ↦ a f - f b` on `r × t` matrices.
pub fn commutator_nullity<F: Field>(r: usize, t: usize, a: &Matrix<F>, b: &Matrix<F>) -> Result<CommutatorNullity> {
    if (a.rows(), a.cols()) != (r, r) || (b.rows(), b.cols()) != (t, t) {
        return Err(Error::InvalidInput(format!("expected {r}x{r} and {t}x{t} matrices")));
    }
    let mut sys = BlockSystem::new(vec![(r, t)], vec![(r, t)]);
    sys.add_term(0, 0, false, Some(a), None);
    sys.add_term(0, 0, true, None, Some(b));
    let nullity = r * t - rank(sys.matrix());
    Ok(CommutatorNullity { nullity, unit_superdiagonal: unit_nilpotent(a) && unit_nilpotent(b) })
}

fn unit_nilpotent<F: Field>(m: &Matrix<F>) -> bool {
    let n = m.rows();
    (0..n).all(|i| {
        (0..n).all(|j| match j.cmp(&i) {
            std::cmp::Ordering::Less | std::cmp::Ordering::Equal => m[(i, j)].is_zero(),
            _ if j == i + 1 => m[(i, j)] == F::one(),
            _ => true,
        })
    })
}
