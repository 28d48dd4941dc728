//! Freeness of `A` as a right module over a polynomial subalgebra `k[x]`,
//! checked degree by degree on a truncation.

use crate::max_paths::decompose;
use crate::quiver::{AlgebraKind, Path};
use crate::invariants::cm_basis;

use super::linalg::RationalMatrix;
use super::truncated::{Element, TruncatedAlgebra};
use super::OracleError;

/// Checks that `{ b x^m }` is a basis of every `A_n` with `n <= bound`, where
/// `x` is homogeneous of degree `x_degree > 0`.
pub fn verify_free_module(t: &TruncatedAlgebra, basis: &[Path], x: &Element, x_degree: usize) -> Result<(), OracleError> {
    assert!(x_degree > 0, "x must have positive degree");
    let bound = t.bound();
    let powers: Vec<Element> = (0..=bound / x_degree).map(|m| t.pow(x, m)).collect();
    for n in 0..=bound {
        let vectors: Vec<_> = basis
            .iter()
            .filter(|b| b.len() <= n && (n - b.len()) % x_degree == 0)
            .map(|b| t.component(&t.mul(&t.element(b), &powers[(n - b.len()) / x_degree]), n))
            .collect();
        let dim = t.dim(n);
        let rank = RationalMatrix::rank_of_vectors(&vectors, dim);
        if vectors.len() != dim || rank != dim {
            return Err(OracleError::NotFree { degree: n, count: vectors.len(), rank, dim });
        }
    }
    Ok(())
}

/// Checks the Cohen-Macaulay witness: `A` is free over `k[x]` for `x` the sum
/// of the arrows, on the basis from [`cm_basis`].
pub fn verify_cm_witness(t: &TruncatedAlgebra) -> Result<(), OracleError> {
    let pres = t.presentation();
    if pres.kind() != AlgebraKind::LocallyGentle || decompose(pres).has_finite() {
        return Err(OracleError::Precondition("needs a locally gentle algebra without finite maximal paths".into()));
    }
    verify_free_module(t, &cm_basis(pres), &t.sum_of_arrows(), 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::oracle::truncate;

    #[test]
    fn cm_witnesses() {
        for p in [catalog::a_tilde(2), catalog::two_loops(), catalog::two_loops_dual()] {
            verify_cm_witness(&truncate(&p, 8)).unwrap();
        }
        assert!(matches!(verify_cm_witness(&truncate(&catalog::hilb(), 6)), Err(OracleError::Precondition(_))));
    }

    #[test]
    fn wrong_basis_is_rejected() {
        let t = truncate(&catalog::two_loops(), 6);
        let q = t.presentation().quiver();
        let basis: Vec<Path> = q.vertices().map(Path::stationary).collect();
        assert!(matches!(verify_free_module(&t, &basis, &t.sum_of_arrows(), 1), Err(OracleError::NotFree { .. })));
    }
}
