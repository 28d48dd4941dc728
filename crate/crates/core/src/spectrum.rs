//! Prime ideals of a (locally) gentle algebra, described by finite generator
//! data rather than as subspaces.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::max_paths::{decompose, path_vertices, MaximalPath};
use crate::quiver::{ArrowId, GentlePresentation, Path, Quiver, VertexId};

/// A polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolynomialParseError {
    #[error("empty polynomial")]
    Empty,
    #[error("cannot parse term `{0}`")]
    BadTerm(String),
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree; the zero polynomial has degree 0 here.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeffs.first().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Parses sums of terms like `t^2`, `-3t`, `1/2`, `2/3 t^3` in the
    /// variable `t`.
    pub fn parse(s: &str) -> Result<Self, PolynomialParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolynomialParseError::Empty);
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if i > 0 && (ch == '+' || ch == '-') && !compact[..i].ends_with('^') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut coeffs: Vec<BigRational> = Vec::new();
        for term in terms {
            let bad = || PolynomialParseError::BadTerm(term.to_string());
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, term.strip_prefix('+').unwrap_or(term)),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coef, power) = match body.find('t') {
                None => (body, 0usize),
                Some(pos) => {
                    let exp = &body[pos + 1..];
                    let power = if exp.is_empty() {
                        1
                    } else {
                        exp.strip_prefix('^').and_then(|e| e.parse().ok()).ok_or_else(bad)?
                    };
                    (body[..pos].trim_end_matches('*'), power)
                }
            };
            let value = if coef.is_empty() {
                BigRational::one()
            } else {
                parse_rational(coef).ok_or_else(bad)?
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigRational::zero());
            }
            coeffs[power] += value * BigRational::from_integer(sign.into());
        }
        Ok(Polynomial::new(coeffs))
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            let show_coef = k == 0 || !a.is_one();
            if show_coef {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Irreducibility {
    Irreducible,
    Reducible,
    /// Degree above 3; no certificate is attempted.
    Unverified,
}

impl fmt::Display for Irreducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Irreducibility::Irreducible => "irreducible",
            Irreducibility::Reducible => "reducible",
            Irreducibility::Unverified => "unverified",
        })
    }
}

fn divisors(n: &BigInt) -> Option<Vec<i64>> {
    let n = n.abs().to_i64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            out.push(n / d);
        }
        d += 1;
    }
    Some(out)
}

/// Irreducibility over the rationals for degree at most 3: such a polynomial
/// is reducible exactly when it has a rational root.
pub fn irreducibility(p: &Polynomial) -> Irreducibility {
    match p.degree() {
        0 => Irreducibility::Reducible,
        1 => Irreducibility::Irreducible,
        2 | 3 => {
            let denominators = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * BigRational::from_integer(denominators.clone())).to_integer()).collect();
            let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
                return Irreducibility::Unverified;
            };
            if ints[0].is_zero() {
                return Irreducibility::Reducible;
            }
            for &num in &ps {
                for &den in &qs {
                    for sign in [1, -1] {
                        let r = BigRational::new((sign * num).into(), den.into());
                        if p.eval(&r).is_zero() {
                            return Irreducibility::Reducible;
                        }
                    }
                }
            }
            Irreducibility::Irreducible
        }
        _ => Irreducibility::Unverified,
    }
}

/// One prime ideal, or family of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeIdeal {
    /// `m_v`, generated by the other idempotents and the loops at `v`.
    MaxAtVertex { vertex: VertexId, generators: Vec<Path> },
    /// `ann(J_gamma)`: everything that is not a subpath of `gamma`.
    AnnInfinite { gamma: MaximalPath, generators: Vec<Path> },
    /// `ann(J_gamma) + <p(m_gamma)>` for irreducible `p` with `p(0) != 0`.
    PolyFamily { gamma: MaximalPath, poly: Option<(Polynomial, Irreducibility)> },
}

impl PrimeIdeal {
    pub fn generators(&self) -> &[Path] {
        match self {
            PrimeIdeal::MaxAtVertex { generators, .. } | PrimeIdeal::AnnInfinite { generators, .. } => generators,
            PrimeIdeal::PolyFamily { .. } => &[],
        }
    }

    pub fn describe(&self, q: &Quiver) -> String {
        let list = |g: &[Path]| {
            if g.is_empty() {
                "0".to_string()
            } else {
                format!("<{}>", g.iter().map(|p| p.display(q).to_string()).collect::<Vec<_>>().join(", "))
            }
        };
        match self {
            PrimeIdeal::MaxAtVertex { vertex, generators } => format!("m_{} = {}", q.vertex_name(*vertex), list(generators)),
            PrimeIdeal::AnnInfinite { gamma, generators } => format!("ann(J_{}) = {}", gamma.display(q), list(generators)),
            PrimeIdeal::PolyFamily { gamma, poly: None } => {
                format!("p({}, p) = ann(J_{}) + <p(m)> for irreducible p, deg p >= 1, p(0) != 0", gamma.display(q), gamma.display(q))
            }
            PrimeIdeal::PolyFamily { gamma, poly: Some((p, status)) } => {
                format!("p({}, {p}) = ann(J_{}) + <({p})(m)> [{status}]", gamma.display(q), gamma.display(q))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub ideal: PrimeIdeal,
    pub height_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSpectrum {
    pub entries: Vec<SpectrumEntry>,
    /// Whether the zero ideal is prime.
    pub is_prime: bool,
}

/// Containment `smaller -> larger` between entries, by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inclusion {
    pub smaller: usize,
    pub larger: usize,
}

/// Every maximal ideal `m_v`, then `ann(J_gamma)` and its polynomial family
/// for each infinite maximal path `gamma`.
pub fn prime_spectrum(pres: &GentlePresentation) -> PrimeSpectrum {
    let q = pres.quiver();
    let d = decompose(pres);
    let infinite: Vec<&MaximalPath> = d.paths().iter().filter(|m| m.is_infinite()).collect();
    let on_infinite = |v: VertexId| infinite.iter().any(|g| path_vertices(q, g.path()).contains(&v));

    let mut entries = Vec::new();
    for v in q.vertices() {
        entries.push(SpectrumEntry {
            ideal: PrimeIdeal::MaxAtVertex { vertex: v, generators: max_at_vertex_generators(q, v) },
            height_zero: !on_infinite(v),
        });
    }
    for g in &infinite {
        entries.push(SpectrumEntry {
            ideal: PrimeIdeal::AnnInfinite { gamma: (*g).clone(), generators: annihilator_generators(pres, g) },
            height_zero: true,
        });
        entries.push(SpectrumEntry { ideal: PrimeIdeal::PolyFamily { gamma: (*g).clone(), poly: None }, height_zero: false });
    }
    PrimeSpectrum { entries, is_prime: d.paths().len() == 1 && d.has_infinite() }
}

pub fn max_at_vertex_generators(q: &Quiver, v: VertexId) -> Vec<Path> {
    let mut g: Vec<Path> = q.vertices().filter(|&u| u != v).map(Path::stationary).collect();
    g.extend(q.outgoing(v).iter().filter(|&&a| q.target(a) == v).map(|&a| Path::arrow(q, a)));
    g
}

/// Idempotents off `gamma`, and arrows not on `gamma` whose endpoints both lie
/// on it.
pub fn annihilator_generators(pres: &GentlePresentation, gamma: &MaximalPath) -> Vec<Path> {
    let q = pres.quiver();
    let verts = path_vertices(q, gamma.path());
    let mut g: Vec<Path> = q.vertices().filter(|v| !verts.contains(v)).map(Path::stationary).collect();
    g.extend(
        q.arrow_ids()
            .filter(|&a| !gamma.contains_arrow(a) && verts.contains(&q.source(a)) && verts.contains(&q.target(a)))
            .map(|a| Path::arrow(q, a)),
    );
    g
}

/// Whether `p` is a subpath of the infinite maximal path `gamma` (stationary
/// paths count when their vertex lies on `gamma`).
pub fn is_subpath_of(q: &Quiver, p: &Path, gamma: &MaximalPath) -> bool {
    if p.is_stationary() {
        return path_vertices(q, gamma.path()).contains(&p.source());
    }
    p.arrows().iter().all(|&a| gamma.contains_arrow(a))
}

/// The edges `ann(J_gamma) -> m_v` for `v` on `gamma` and
/// `ann(J_gamma) -> p(gamma, .)`.
pub fn prime_inclusions(pres: &GentlePresentation, primes: &PrimeSpectrum) -> Vec<Inclusion> {
    let q = pres.quiver();
    let mut out = Vec::new();
    for (i, e) in primes.entries.iter().enumerate() {
        let PrimeIdeal::AnnInfinite { gamma, .. } = &e.ideal else { continue };
        let verts = path_vertices(q, gamma.path());
        for (j, f) in primes.entries.iter().enumerate() {
            let edge = match &f.ideal {
                PrimeIdeal::MaxAtVertex { vertex, .. } => verts.contains(vertex),
                PrimeIdeal::PolyFamily { gamma: g, .. } => g == gamma,
                PrimeIdeal::AnnInfinite { .. } => false,
            };
            if edge {
                out.push(Inclusion { smaller: i, larger: j });
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("not an infinite maximal path of this presentation")]
    NotInfinitePath,
    #[error("the polynomial must have degree at least 1")]
    DegreeZero,
    #[error("the polynomial must not vanish at 0")]
    VanishesAtZero,
}

/// Finds the infinite maximal path containing `a`.
pub fn infinite_path_through(pres: &GentlePresentation, a: ArrowId) -> Result<MaximalPath, SpectrumError> {
    let d = decompose(pres);
    let m = d.maximal_path_of(a);
    if m.is_infinite() {
        Ok(m.clone())
    } else {
        Err(SpectrumError::NotInfinitePath)
    }
}

fn check_infinite(pres: &GentlePresentation, gamma: &MaximalPath) -> Result<(), SpectrumError> {
    if gamma.is_infinite() && decompose(pres).paths().contains(gamma) {
        Ok(())
    } else {
        Err(SpectrumError::NotInfinitePath)
    }
}

/// `A = A' + ann(J_gamma)`: the subalgebra on the arrows of `gamma` and the
/// generators of the complement.
#[derive(Clone, Debug)]
pub struct AnnihilatorDecomposition {
    pub subalgebra: GentlePresentation,
    pub complement: Vec<Path>,
}

pub fn annihilator_decomposition(pres: &GentlePresentation, gamma: &MaximalPath) -> Result<AnnihilatorDecomposition, SpectrumError> {
    check_infinite(pres, gamma)?;
    let q = pres.quiver();
    let verts = path_vertices(q, gamma.path());
    let mut vertex_list: Vec<VertexId> = verts.clone();
    vertex_list.sort();
    vertex_list.dedup();
    let mut arrows: Vec<ArrowId> = gamma.arrows().to_vec();
    arrows.sort();
    let names: Vec<String> = vertex_list.iter().map(|&v| q.vertex_name(v).to_string()).collect();
    let triples: Vec<(String, String, String)> = arrows
        .iter()
        .map(|&a| (q.arrow_name(a).to_string(), q.vertex_name(q.source(a)).to_string(), q.vertex_name(q.target(a)).to_string()))
        .collect();
    let sub = Quiver::new(names, triples).expect("subquiver of a valid quiver");
    let rename = |a: ArrowId| sub.arrow_by_name(q.arrow_name(a)).expect("arrow kept");
    let relations: Vec<(ArrowId, ArrowId)> = pres
        .relations()
        .iter()
        .filter(|(a, b)| gamma.contains_arrow(*a) && gamma.contains_arrow(*b))
        .map(|&(a, b)| (rename(a), rename(b)))
        .collect();
    let subalgebra = GentlePresentation::from_pairs(sub, relations).expect("restriction to a maximal path stays locally gentle");
    Ok(AnnihilatorDecomposition { subalgebra, complement: annihilator_generators(pres, gamma) })
}

/// `p(gamma, p)` for a concrete polynomial over the rationals.
pub fn instantiate_poly_prime(pres: &GentlePresentation, gamma: &MaximalPath, p: &Polynomial) -> Result<SpectrumEntry, SpectrumError> {
    check_infinite(pres, gamma)?;
    if p.degree() == 0 {
        return Err(SpectrumError::DegreeZero);
    }
    if p.constant_term().is_zero() {
        return Err(SpectrumError::VanishesAtZero);
    }
    let status = irreducibility(p);
    Ok(SpectrumEntry {
        ideal: PrimeIdeal::PolyFamily { gamma: gamma.clone(), poly: Some((p.clone(), status)) },
        height_zero: false,
    })
}
