//! AS-Gorenstein detection straight from the definition: for every vertex,
//! `Ext^i(S(v), A)` vanishes except in one cohomological degree `k`, where it
//! is one-dimensional and sits in internal degree `-ell`, the same `k` and
//! `ell` for all vertices.

use serde::Serialize;

use crate::quiver::GentlePresentation;
use crate::resolutions::{projective_resolution, Window};

use super::ext::ext_dims_in;
use super::OracleError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinWitness {
    pub k: usize,
    pub ell: i64,
}

/// Checks cohomological degrees `0..=max_degree` on the window. `None` means
/// some vertex violates the definition.
pub fn as_gorenstein_bruteforce(pres: &GentlePresentation, window: Window, max_degree: usize) -> Result<Option<GorensteinWitness>, OracleError> {
    let mut found: Option<GorensteinWitness> = None;
    for v in pres.quiver().vertices() {
        let c = projective_resolution(pres, v, max_degree + 2);
        let mut here: Option<GorensteinWitness> = None;
        for i in 0..=max_degree {
            let dims = ext_dims_in(pres, &c, i, window)?;
            let total: usize = dims.iter().sum();
            if total == 0 {
                continue;
            }
            if total != 1 || here.is_some() {
                return Ok(None);
            }
            let pos = dims.iter().position(|&d| d == 1).expect("total is one");
            here = Some(GorensteinWitness { k: i, ell: -(window.lo + pos as i64) });
        }
        match (here, found) {
            (None, _) => return Ok(None),
            (Some(h), None) => found = Some(h),
            (Some(h), Some(f)) if h == f => {}
            _ => return Ok(None),
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn known_cases() {
        let w = Window::default();
        assert_eq!(as_gorenstein_bruteforce(&catalog::a_tilde(2), w, 4).unwrap(), Some(GorensteinWitness { k: 1, ell: 1 }));
        assert_eq!(as_gorenstein_bruteforce(&catalog::two_loops(), w, 4).unwrap(), Some(GorensteinWitness { k: 1, ell: 0 }));
        assert_eq!(as_gorenstein_bruteforce(&catalog::a_tilde_dual(1), w, 4).unwrap(), Some(GorensteinWitness { k: 0, ell: -1 }));
        assert_eq!(as_gorenstein_bruteforce(&catalog::kronecker(), w, 4).unwrap(), None);
        assert_eq!(as_gorenstein_bruteforce(&catalog::hilb(), w, 4).unwrap(), None);
    }
}
