//! Brute-force center: the kernel of `z -> ([z, e_v], [z, a])` in each degree.

use serde::Serialize;

use crate::invariants::CenterDescription;

use super::linalg::RationalMatrix;
use super::truncated::{Element, TruncatedAlgebra};
use super::OracleError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CenterReport {
    /// `(n, dim Z(A)_n)` for every checked degree.
    pub dims: Vec<(usize, usize)>,
}

fn commutes(t: &TruncatedAlgebra, z: &Element, w: &Element) -> bool {
    t.mul(z, w) == t.mul(w, z)
}

/// Checks that the predicted generators are central and that the predicted
/// `dim Z(A)_n` equals the centralizer dimension for `n < bound`.
pub fn verify_center(t: &TruncatedAlgebra, cd: &CenterDescription) -> Result<CenterReport, OracleError> {
    let pres = t.presentation();
    let q = pres.quiver();
    let bound = t.bound();
    let tests: Vec<(String, Element)> = q
        .vertices()
        .map(|v| (format!("e_{}", q.vertex_name(v)), t.vertex(v)))
        .chain(q.arrow_ids().map(|a| (q.arrow_name(a).to_string(), t.arrow(a))))
        .collect();

    let mut generators: Vec<(String, Element, usize)> = Vec::new();
    for p in &cd.cyclic_maximal_paths {
        if p.len() < bound {
            generators.push((p.display(q).to_string(), t.element(p), p.len()));
        }
    }
    for m in &cd.central_sums {
        if m.period() < bound {
            let name = format!("m({})", m.gamma.display(q));
            generators.push((name, t.sum_of_paths(&m.summands), m.period()));
        }
    }
    for (name, g, _) in &generators {
        if let Some((w, _)) = tests.iter().find(|(_, w)| !commutes(t, g, w)) {
            return Err(OracleError::CentralityFailed { generator: name.clone(), witness: w.clone() });
        }
    }

    let mut dims = Vec::new();
    for n in 0..bound {
        let basis = t.basis(n);
        let mut rows: Vec<Vec<_>> = Vec::new();
        let columns: Vec<Vec<_>> = basis
            .iter()
            .map(|p| {
                let z = t.element(p);
                let mut col = Vec::new();
                for (_, w) in &tests {
                    let c = t.sub(&t.mul(&z, w), &t.mul(w, &z));
                    col.extend(t.component(&c, n));
                    col.extend(t.component(&c, n + 1));
                }
                col
            })
            .collect();
        let height = columns.first().map_or(0, Vec::len);
        for r in 0..height {
            rows.push(columns.iter().map(|c| c[r].clone()).collect());
        }
        let m = if rows.is_empty() { RationalMatrix::zeros(0, basis.len()) } else { RationalMatrix::from_rows(rows) };
        let got = basis.len() - m.rank();
        let expected = cd.predicted_dim(n);
        if got != expected {
            return Err(OracleError::DimensionMismatch { degree: n, got, expected });
        }
        // The predicted elements must span what was found.
        let mut predicted: Vec<Vec<_>> = Vec::new();
        if n == 0 {
            predicted.push(t.component(&t.one(), 0));
        }
        for (_, g, deg) in &generators {
            if *deg == n {
                predicted.push(t.component(g, n));
            }
        }
        for m in &cd.central_sums {
            let k = m.period();
            if n > 0 && n % k == 0 && k < bound && n > k {
                let g = t.sum_of_paths(&m.summands);
                predicted.push(t.component(&t.pow(&g, n / k), n));
            }
        }
        let rank = RationalMatrix::rank_of_vectors(&predicted, basis.len());
        if rank != expected {
            return Err(OracleError::DimensionMismatch { degree: n, got: rank, expected });
        }
        dims.push((n, got));
    }
    Ok(CenterReport { dims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::invariants::center;
    use crate::oracle::truncate;

    #[test]
    fn catalog_centers() {
        for p in [catalog::hilb(), catalog::two_loops(), catalog::chain_loops(), catalog::a_tilde(2), catalog::kronecker()] {
            let t = truncate(&p, 8);
            verify_center(&t, &center(&p)).unwrap();
        }
    }
}
