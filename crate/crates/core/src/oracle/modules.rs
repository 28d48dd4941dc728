//! Degree pieces of the summands appearing in complexes, the right action of
//! arrows on them, and the action of differential labels.
//!
//! An inverse path `q^{-1}` is stored as `Inv(q)`; ordinary paths, including
//! elements of projectives and the non-negative part of `I(a)`, as `Fwd(p)`.

use crate::max_paths::{gamma_r, Walk};
use crate::quiver::{GentlePresentation, Path};
use crate::resolutions::{MapLabel, Summand};

use super::OracleError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Fwd(Path),
    Inv(Path),
}

fn check(n: usize, bound: usize, degree: i64) -> Result<(), OracleError> {
    if n > bound {
        Err(OracleError::WindowTooWide { degree, needed: n, bound })
    } else {
        Ok(())
    }
}

/// Basis of the degree-`d` piece of a summand. Fails rather than clipping when
/// the piece involves paths longer than `bound`.
pub fn summand_basis(pres: &GentlePresentation, s: &Summand, d: i64, bound: usize) -> Result<Vec<Elem>, OracleError> {
    let q = pres.quiver();
    Ok(match *s {
        Summand::Simple { vertex } => {
            if d == 0 {
                vec![Elem::Fwd(Path::stationary(vertex))]
            } else {
                Vec::new()
            }
        }
        Summand::Projective { vertex, shift } => {
            let n = d + shift;
            if n < 0 {
                return Ok(Vec::new());
            }
            check(n as usize, bound, d)?;
            pres.paths_starting_at(vertex, n as usize).into_iter().map(Elem::Fwd).collect()
        }
        Summand::InjectiveVertex { vertex, shift } => {
            let n = d + shift;
            if n > 0 {
                return Ok(Vec::new());
            }
            check((-n) as usize, bound, d)?;
            pres.paths_ending_at(vertex, (-n) as usize).into_iter().map(Elem::Inv).collect()
        }
        Summand::InjectiveArrow { arrow, shift } => {
            let n = d + shift;
            check(n.unsigned_abs() as usize, bound, d)?;
            let last = pres.prev_arrow(arrow).expect("arrow lies on an infinite maximal path");
            let e = match n {
                0 => Elem::Fwd(Path::stationary(q.source(arrow))),
                n if n > 0 => Elem::Fwd(pres.path_starting_with(arrow, n as usize).expect("cycle continues")),
                n => Elem::Inv(pres.path_ending_with(last, (-n) as usize).expect("cycle continues")),
            };
            vec![e]
        }
    })
}

/// Right action of an arrow on a basis element of a summand.
pub fn act(pres: &GentlePresentation, s: &Summand, x: &Elem, a: crate::quiver::ArrowId) -> Option<Elem> {
    let q = pres.quiver();
    let arrow = Path::arrow(q, a);
    match (s, x) {
        (Summand::Simple { .. }, _) => None,
        (Summand::Projective { .. }, Elem::Fwd(p)) => pres.multiply(p, &arrow).map(Elem::Fwd),
        (Summand::InjectiveVertex { .. }, Elem::Inv(p)) => {
            if p.is_stationary() {
                return None;
            }
            p.strip_prefix(q, &arrow).map(Elem::Inv)
        }
        (Summand::InjectiveArrow { arrow: base, .. }, Elem::Inv(p)) => {
            let r = p.strip_prefix(q, &arrow)?;
            if r.is_stationary() {
                debug_assert_eq!(r.source(), q.source(*base));
                Some(Elem::Fwd(r))
            } else {
                Some(Elem::Inv(r))
            }
        }
        (Summand::InjectiveArrow { arrow: base, .. }, Elem::Fwd(p)) => {
            if p.is_stationary() {
                (a == *base).then_some(Elem::Fwd(arrow))
            } else {
                pres.multiply(p, &arrow).map(Elem::Fwd)
            }
        }
        _ => None,
    }
}

/// Image of a basis element under a differential label, with a sign.
pub fn apply(pres: &GentlePresentation, label: &MapLabel, x: &Elem) -> Option<(Elem, i8)> {
    let q = pres.quiver();
    match (label, x) {
        (MapLabel::LeftMul { arrow }, Elem::Fwd(p)) => {
            pres.multiply(&Path::arrow(q, *arrow), p).map(|r| (Elem::Fwd(r), 1))
        }
        (MapLabel::Augmentation, Elem::Fwd(p)) => p.is_stationary().then(|| (Elem::Fwd(p.clone()), 1)),
        (MapLabel::Dual { path }, Elem::Inv(p)) => p.strip_suffix(q, path).map(|r| (Elem::Inv(r), 1)),
        (MapLabel::Rho { arrow }, _) => match gamma_r(pres, *arrow) {
            Walk::Finite(w) => apply(pres, &MapLabel::Dual { path: w }, x),
            Walk::Cycle(_) => match x {
                Elem::Inv(p) => Some((Elem::Inv(p.clone()), 1)),
                Elem::Fwd(p) if p.is_stationary() => Some((Elem::Inv(p.clone()), 1)),
                Elem::Fwd(_) => None,
            },
        },
        (MapLabel::Compose { outer, inner }, _) => {
            let (y, s1) = apply(pres, inner, x)?;
            let (z, s2) = apply(pres, outer, &y)?;
            Some((z, s1 * s2))
        }
        (MapLabel::Iota { arrow }, Elem::Fwd(p)) => match gamma_r(pres, *arrow) {
            Walk::Finite(w) => w.strip_prefix(q, p).map(|r| (Elem::Inv(r), 1)),
            Walk::Cycle(_) => (p.is_stationary() || p.first() == Some(*arrow)).then(|| (Elem::Fwd(p.clone()), 1)),
        },
        (MapLabel::IotaSink, Elem::Fwd(p)) => p.is_stationary().then(|| (Elem::Inv(p.clone()), 1)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::quiver::VertexId;

    #[test]
    fn bi_infinite_injective_has_one_dimensional_pieces() {
        let p = catalog::a_tilde(1);
        let s = Summand::InjectiveArrow { arrow: crate::quiver::ArrowId(0), shift: 0 };
        for d in -5..=5 {
            assert_eq!(summand_basis(&p, &s, d, 12).unwrap().len(), 1);
        }
    }

    #[test]
    fn vertex_injective_dimensions() {
        let p = catalog::hilb();
        let v2 = p.quiver().vertex_by_name("2").unwrap();
        let s = Summand::InjectiveVertex { vertex: v2, shift: 0 };
        let dims: Vec<usize> = (-3..=1).map(|d| summand_basis(&p, &s, d, 12).unwrap().len()).collect();
        // paths ending at 2: e_2; alpha1, c; c.c; c.c.c
        assert_eq!(dims, vec![1, 1, 2, 1, 0]);
    }

    #[test]
    fn window_refuses_clipping() {
        let p = catalog::a_tilde(0);
        let s = Summand::Projective { vertex: VertexId(0), shift: 0 };
        assert!(matches!(summand_basis(&p, &s, 13, 12), Err(OracleError::WindowTooWide { .. })));
    }

    #[test]
    fn inverse_paths_reach_the_socle() {
        let p = catalog::a_tilde(0);
        let q = p.quiver();
        let s = Summand::InjectiveArrow { arrow: crate::quiver::ArrowId(0), shift: 0 };
        let inv = summand_basis(&p, &s, -1, 12).unwrap().remove(0);
        let e = act(&p, &s, &inv, crate::quiver::ArrowId(0)).unwrap();
        assert_eq!(e, Elem::Fwd(Path::stationary(VertexId(0))));
        let up = act(&p, &s, &e, crate::quiver::ArrowId(0)).unwrap();
        assert_eq!(up, Elem::Fwd(Path::arrow(q, crate::quiver::ArrowId(0))));
    }
}
