//! `Ext^i_A(S(v), A)` by dualizing the projective resolution degreewise.
//!
//! `Hom_A(e_u A[s], A) = A e_u [-s]`, and `a_* : x -> a x` dualizes to right
//! multiplication `y -> y a`. The internal degree `d` piece of the dual of
//! `e_u A[s]` is therefore spanned by paths ending at `u` of length `d - s`.

use crate::quiver::{GentlePresentation, Path, VertexId};
use crate::resolutions::{projective_resolution, GradedComplex, MapLabel, Summand, Window};

use super::linalg::{int, RationalMatrix};
use super::OracleError;

fn dual_basis(pres: &GentlePresentation, c: &GradedComplex, i: usize, d: i64, bound: usize) -> Result<Vec<(usize, Path)>, OracleError> {
    let Some(term) = c.term(i as i64) else { return Ok(Vec::new()) };
    let mut out = Vec::new();
    for (k, s) in term.summands.iter().enumerate() {
        let Summand::Projective { vertex, shift } = *s else { unreachable!("projective resolutions hold projectives") };
        let n = d - shift;
        if n < 0 {
            continue;
        }
        if n as usize > bound {
            return Err(OracleError::WindowTooWide { degree: d, needed: n as usize, bound });
        }
        out.extend(pres.paths_ending_at(vertex, n as usize).into_iter().map(|p| (k, p)));
    }
    Ok(out)
}

/// Matrix of `delta^i : C^i -> C^{i+1}` in internal degree `d`, dual to
/// `P_{i+1} -> P_i`.
fn coboundary(pres: &GentlePresentation, c: &GradedComplex, i: usize, d: i64, bound: usize) -> Result<RationalMatrix, OracleError> {
    let src = dual_basis(pres, c, i, d, bound)?;
    let dst = dual_basis(pres, c, i + 1, d, bound)?;
    let mut m = RationalMatrix::zeros(dst.len(), src.len());
    let Some(map_idx) = c.terms.iter().position(|t| t.degree == (i + 1) as i64) else { return Ok(m) };
    let q = pres.quiver();
    for e in &c.maps[map_idx] {
        let MapLabel::LeftMul { arrow } = e.label else { unreachable!("projective differentials are left multiplications") };
        let a = Path::arrow(q, arrow);
        for (col, (k, y)) in src.iter().enumerate() {
            if *k != e.to {
                continue;
            }
            if let Some(ya) = pres.multiply(y, &a) {
                let row = dst.iter().position(|(k2, p)| *k2 == e.from && *p == ya).expect("degree bookkeeping");
                m.add_to(row, col, &int(i64::from(e.sign)));
            }
        }
    }
    Ok(m)
}

/// `dim Ext^i(S(v), A)_d` for every `d` in the window.
pub fn ext_dims_bruteforce(pres: &GentlePresentation, v: VertexId, i: usize, window: Window) -> Result<Vec<usize>, OracleError> {
    ext_dims_in(pres, &projective_resolution(pres, v, i + 2), i, window)
}

/// As [`ext_dims_bruteforce`], over a resolution supplied by the caller.
pub fn ext_dims_in(pres: &GentlePresentation, c: &GradedComplex, i: usize, window: Window) -> Result<Vec<usize>, OracleError> {
    if window.hi + i as i64 + 1 > window.truncation as i64 {
        return Err(OracleError::WindowTooWide {
            degree: window.hi,
            needed: (window.hi + i as i64 + 1) as usize,
            bound: window.truncation,
        });
    }
    let n = window.truncation;
    window
        .degrees()
        .map(|d| {
            let out = coboundary(pres, c, i, d, n)?;
            let kernel = out.cols() - out.rank();
            let image = if i == 0 { 0 } else { coboundary(pres, c, i - 1, d, n)?.rank() };
            Ok(kernel - image)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn kronecker_ext_one() {
        let p = catalog::kronecker();
        let v1 = p.quiver().vertex_by_name("1").unwrap();
        let dims = ext_dims_bruteforce(&p, v1, 1, Window { lo: -2, hi: 1, truncation: 12 }).unwrap();
        assert_eq!(dims, vec![0, 2, 3, 0]);
    }

    #[test]
    fn cyclic_algebra_is_regular() {
        let p = catalog::a_tilde(0);
        let v = VertexId(0);
        let w = Window::default();
        assert!(ext_dims_bruteforce(&p, v, 0, w).unwrap().iter().all(|&x| x == 0));
        let one = ext_dims_bruteforce(&p, v, 1, w).unwrap();
        assert_eq!(one.iter().sum::<usize>(), 1);
    }
}
