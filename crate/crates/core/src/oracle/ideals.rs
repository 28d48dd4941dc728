//! Two-sided ideals of a truncated algebra, as subspaces of each `A_n`.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::quiver::Path;

use super::linalg::RationalMatrix;
use super::truncated::{Element, TruncatedAlgebra};

/// Basis indices of the ideal generated by the given paths: every nonzero
/// product `u g w` of basis paths within the truncation.
pub fn monomial_ideal(t: &TruncatedAlgebra, generators: &[Path]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for g in generators {
        let gi = t.index_of(g).expect("generator inside the truncation");
        for u in 0..t.len() {
            let Some(ug) = t.product(u, gi) else { continue };
            for w in 0..t.len() {
                if let Some(k) = t.product(ug, w) {
                    out.insert(k);
                }
            }
        }
    }
    out
}

/// Degreewise span of a two-sided ideal with homogeneous generators.
#[derive(Clone, Debug)]
pub struct IdealSpan {
    /// Row-reduced spanning vectors of the degree-`n` piece, over `basis(n)`.
    pub pieces: Vec<Vec<Vec<BigRational>>>,
}

impl IdealSpan {
    pub fn dim(&self, n: usize) -> usize {
        self.pieces.get(n).map_or(0, Vec::len)
    }
}

/// The span of `{ u g w }` in each degree up to the bound.
pub fn ideal_span(t: &TruncatedAlgebra, generators: &[Element]) -> IdealSpan {
    let bound = t.bound();
    let mut raw: Vec<Vec<Vec<BigRational>>> = vec![Vec::new(); bound + 1];
    for g in generators {
        for u in 0..t.len() {
            let ug = t.mul(&t.element(t.path(u)), g);
            if ug.is_empty() {
                continue;
            }
            for w in 0..t.len() {
                let x = t.mul(&ug, &t.element(t.path(w)));
                let degrees: BTreeSet<usize> = x.keys().map(|&k| t.degree(k)).collect();
                for n in degrees {
                    raw[n].push(t.component(&x, n));
                }
            }
        }
    }
    let pieces = raw
        .into_iter()
        .enumerate()
        .map(|(n, vs)| {
            if vs.is_empty() {
                return Vec::new();
            }
            let (r, pivots) = RationalMatrix::from_rows(vs).rref();
            (0..pivots.len()).map(|i| (0..t.dim(n)).map(|c| r.get(i, c).clone()).collect()).collect()
        })
        .collect();
    IdealSpan { pieces }
}

/// Whether the degree-`n` piece of `span` is exactly the span of the basis
/// paths with the given global indices.
pub fn span_matches_paths(t: &TruncatedAlgebra, span: &IdealSpan, n: usize, paths: &BTreeSet<usize>) -> bool {
    let dim = t.dim(n);
    let expected: Vec<Vec<BigRational>> = paths
        .iter()
        .filter(|&&k| t.degree(k) == n)
        .map(|&k| {
            let mut v = vec![BigRational::zero(); dim];
            v[t.local_index(t.path(k)).unwrap()] = BigRational::one();
            v
        })
        .collect();
    let own = span.pieces.get(n).cloned().unwrap_or_default();
    if own.len() != expected.len() {
        return false;
    }
    let mut both = own;
    both.extend(expected.iter().cloned());
    RationalMatrix::rank_of_vectors(&both, dim) == expected.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::oracle::truncate;

    #[test]
    fn monomial_and_linear_spans_agree() {
        let p = catalog::two_loops();
        let t = truncate(&p, 6);
        let q = p.quiver();
        let x = Path::arrow(q, q.arrow_by_name("x").unwrap());
        let mono = monomial_ideal(&t, std::slice::from_ref(&x));
        let span = ideal_span(&t, &[t.element(&x)]);
        for n in 0..=6 {
            assert!(span_matches_paths(&t, &span, n, &mono), "degree {n}");
        }
    }
}
