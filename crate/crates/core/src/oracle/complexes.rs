//! Degreewise verification of a [`GradedComplex`]: every differential is a
//! module map, consecutive differentials compose to zero, and homology
//! vanishes at every node.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::quiver::GentlePresentation;
use crate::resolutions::{GradedComplex, Summand};

use super::linalg::{int, RationalMatrix};
use super::modules::{act, apply, summand_basis, Elem};
use super::OracleError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ComplexFailure {
    NotAComplex { position: i64, degree: i64 },
    ExactnessFailed { position: i64, degree: i64, homology: i64 },
    NotAHomomorphism { map: usize, degree: i64 },
}

impl fmt::Display for ComplexFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexFailure::NotAComplex { position, degree } => {
                write!(f, "d o d is nonzero at term {position}, internal degree {degree}")
            }
            ComplexFailure::ExactnessFailed { position, degree, homology } => {
                write!(f, "homology of dimension {homology} at term {position}, internal degree {degree}")
            }
            ComplexFailure::NotAHomomorphism { map, degree } => {
                write!(f, "differential {map} does not commute with arrows in internal degree {degree}")
            }
        }
    }
}

/// Outcome of [`verify_complex`]. Failures are collected rather than
/// short-circuited so a broken complex reports every defect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexReport {
    pub lo: i64,
    pub hi: i64,
    pub truncation: usize,
    /// `dims[k][j]`: dimension of `terms[k]` in internal degree `lo + j`.
    pub dims: Vec<Vec<usize>>,
    pub failures: Vec<ComplexFailure>,
}

impl ComplexReport {
    pub fn is_exact(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn into_result(self) -> Result<ComplexReport, OracleError> {
        match self.failures.first() {
            Some(f) => Err(OracleError::Complex(f.clone())),
            None => Ok(self),
        }
    }
}

/// The widest window inside `[lo, hi]` on which every summand of the complex
/// stays within the truncation. `None` if the window would be empty.
pub fn safe_window(c: &GradedComplex, bound: usize, lo: i64, hi: i64) -> Option<(i64, i64)> {
    let n = bound as i64;
    let (mut lo, mut hi) = (lo, hi);
    for s in c.terms.iter().flat_map(|t| &t.summands) {
        match *s {
            Summand::Simple { .. } => {}
            Summand::Projective { shift, .. } => hi = hi.min(n - shift),
            Summand::InjectiveVertex { shift, .. } => lo = lo.max(-n - shift),
            Summand::InjectiveArrow { shift, .. } => {
                lo = lo.max(-n - shift);
                hi = hi.min(n - shift);
            }
        }
    }
    (lo <= hi).then_some((lo, hi))
}

struct Layer {
    /// Per summand: basis elements and their offset in the concatenated basis.
    bases: Vec<Vec<Elem>>,
    offsets: Vec<usize>,
    index: Vec<HashMap<Elem, usize>>,
    dim: usize,
}

fn layer(pres: &GentlePresentation, summands: &[Summand], d: i64, bound: usize) -> Result<Layer, OracleError> {
    let mut bases = Vec::new();
    let mut offsets = Vec::new();
    let mut dim = 0;
    for s in summands {
        let b = summand_basis(pres, s, d, bound)?;
        offsets.push(dim);
        dim += b.len();
        bases.push(b);
    }
    let index = bases.iter().map(|b| b.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect()).collect();
    Ok(Layer { bases, offsets, index, dim })
}

fn matrix(pres: &GentlePresentation, c: &GradedComplex, k: usize, src: &Layer, dst: &Layer, d: i64) -> Result<RationalMatrix, OracleError> {
    let mut m = RationalMatrix::zeros(dst.dim, src.dim);
    for (e_idx, e) in c.maps[k].iter().enumerate() {
        for (i, x) in src.bases[e.from].iter().enumerate() {
            let Some((y, s)) = apply(pres, &e.label, x) else { continue };
            let Some(&j) = dst.index[e.to].get(&y) else {
                return Err(OracleError::Malformed { map: k, entry: e_idx, degree: d });
            };
            m.add_to(dst.offsets[e.to] + j, src.offsets[e.from] + i, &int(i64::from(s * e.sign)));
        }
    }
    Ok(m)
}

/// Whether `f(x . a) = f(x) . a` for every basis element `x` of degree `d`
/// in `terms[k]` and every arrow `a`.
fn commutes_with_arrows(pres: &GentlePresentation, c: &GradedComplex, k: usize, d: i64, bound: usize) -> Result<bool, OracleError> {
    let q = pres.quiver();
    let src = &c.terms[k].summands;
    let dst = &c.terms[k + 1].summands;
    let image = |x: &Elem, from: usize| -> HashMap<(usize, Elem), i64> {
        let mut out: HashMap<(usize, Elem), i64> = HashMap::new();
        for e in c.maps[k].iter().filter(|e| e.from == from) {
            if let Some((y, s)) = apply(pres, &e.label, x) {
                *out.entry((e.to, y)).or_default() += i64::from(s * e.sign);
            }
        }
        out.retain(|_, v| *v != 0);
        out
    };
    for (from, s) in src.iter().enumerate() {
        for x in summand_basis(pres, s, d, bound)? {
            for a in q.arrow_ids() {
                let mut left: HashMap<(usize, Elem), i64> = HashMap::new();
                if let Some(xa) = act(pres, s, &x, a) {
                    left = image(&xa, from);
                }
                let mut right: HashMap<(usize, Elem), i64> = HashMap::new();
                for ((to, y), coef) in image(&x, from) {
                    if let Some(ya) = act(pres, &dst[to], &y, a) {
                        *right.entry((to, ya)).or_default() += coef;
                    }
                }
                right.retain(|_, v| *v != 0);
                if left != right {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Checks the complex degreewise on internal degrees `lo..=hi` over the
/// algebra truncated at `bound`. Returns `WindowTooWide` instead of silently
/// clipping; see [`safe_window`].
pub fn verify_complex(pres: &GentlePresentation, c: &GradedComplex, lo: i64, hi: i64, bound: usize) -> Result<ComplexReport, OracleError> {
    let mut failures = Vec::new();
    let mut dims = vec![Vec::new(); c.terms.len()];
    for d in lo..=hi {
        let layers: Vec<Layer> = c.terms.iter().map(|t| layer(pres, &t.summands, d, bound)).collect::<Result<_, _>>()?;
        for (k, l) in layers.iter().enumerate() {
            dims[k].push(l.dim);
        }
        let mats: Vec<RationalMatrix> =
            (0..c.maps.len()).map(|k| matrix(pres, c, k, &layers[k], &layers[k + 1], d)).collect::<Result<_, _>>()?;
        for k in 0..c.maps.len() {
            if !commutes_with_arrows(pres, c, k, d, bound)? {
                failures.push(ComplexFailure::NotAHomomorphism { map: k, degree: d });
            }
        }
        for (k, term) in c.terms.iter().enumerate() {
            let incoming = k.checked_sub(1).map(|j| &mats[j]);
            let outgoing = mats.get(k);
            if let (Some(a), Some(b)) = (incoming, outgoing) {
                if !b.mul(a).is_zero() {
                    failures.push(ComplexFailure::NotAComplex { position: term.degree, degree: d });
                }
            }
            if k == 0 && c.truncated {
                continue;
            }
            let kernel = outgoing.map_or(layers[k].dim, |b| layers[k].dim - b.rank());
            let image = incoming.map_or(0, RationalMatrix::rank);
            let homology = kernel as i64 - image as i64;
            if homology != 0 || incoming.zip(outgoing).is_some_and(|(a, b)| !b.mul(a).is_zero()) {
                failures.push(ComplexFailure::ExactnessFailed { position: term.degree, degree: d, homology });
            }
        }
    }
    Ok(ComplexReport { lo, hi, truncation: bound, dims, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::resolutions::{injective_resolution, projective_resolution};

    #[test]
    fn hilb_projective_resolution_is_exact() {
        let p = catalog::hilb();
        let v = p.quiver().vertex_by_name("3").unwrap();
        let c = projective_resolution(&p, v, 32);
        let r = verify_complex(&p, &c, -6, 6, 12).unwrap();
        assert!(r.is_exact(), "{:?}", r.failures);
    }

    #[test]
    fn c2c2_injective_resolutions_are_exact() {
        let p = catalog::c2c2();
        for v in p.quiver().vertices() {
            let c = injective_resolution(&p, v).unwrap().complex;
            let r = verify_complex(&p, &c, -6, 6, 12).unwrap();
            assert!(r.is_exact(), "vertex {v:?}: {:?}", r.failures);
        }
    }

    #[test]
    fn dropping_an_entry_breaks_exactness() {
        let p = catalog::hilb();
        let v = p.quiver().vertex_by_name("3").unwrap();
        let c = projective_resolution(&p, v, 32).without_entry(1, 0);
        let r = verify_complex(&p, &c, -6, 6, 12).unwrap();
        assert!(r.failures.iter().any(|f| matches!(f, ComplexFailure::ExactnessFailed { .. })));
    }

    #[test]
    fn window_must_fit() {
        let p = catalog::a_tilde(1);
        let c = projective_resolution(&p, crate::quiver::VertexId(0), 4);
        assert!(matches!(verify_complex(&p, &c, 0, 20, 12), Err(OracleError::WindowTooWide { .. })));
        let (lo, hi) = safe_window(&c, 12, -6, 20).unwrap();
        assert!(verify_complex(&p, &c, lo, hi, 12).unwrap().is_exact());
    }
}
