//! Closed-form invariants: dimensions, center, prime radical, Cohen-Macaulay
//! and Artin-Schelter classification, and the Stanley-type comparison.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::hilbert::{hilbert_series, palindromy, Palindromy, RationalHilbert};
use crate::max_paths::{decompose, gamma_r, lprime, MaximalPath};
use crate::quiver::{AlgebraKind, ArrowId, GentlePresentation, Path, Quiver};

/// A homological dimension, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dimension {
    Finite(usize),
    Infinite,
}

impl Dimension {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dimension::Finite(n) => Some(n),
            Dimension::Infinite => None,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::Infinite => write!(f, "infinity"),
        }
    }
}

impl Serialize for Dimension {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Dimension::Finite(n) => s.serialize_u64(*n as u64),
            Dimension::Infinite => s.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for Dimension {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Finite(usize),
            Word(String),
        }
        match Raw::deserialize(d)? {
            Raw::Finite(n) => Ok(Dimension::Finite(n)),
            Raw::Word(w) if w == "infinity" => Ok(Dimension::Infinite),
            Raw::Word(w) => Err(serde::de::Error::custom(format!("expected a count or \"infinity\", got {w:?}"))),
        }
    }
}

/// 1 when some maximal path is infinite, else 0.
pub fn gk_dim(pres: &GentlePresentation) -> usize {
    usize::from(decompose(pres).has_infinite())
}

/// 0 when some maximal path is finite, else 1.
pub fn depth(pres: &GentlePresentation) -> usize {
    usize::from(!decompose(pres).has_finite())
}

/// The longest maximal forbidden path, infinite when the Koszul dual has an
/// infinite maximal path.
pub fn global_dim(pres: &GentlePresentation) -> Dimension {
    match decompose(&pres.koszul_dual()).longest() {
        Some(n) => Dimension::Finite(n),
        None => Dimension::Infinite,
    }
}

/// `max { len(p) : p in L' }` if there are finite maximal forbidden paths, 0 for
/// the radical-square-zero cycle, 1 otherwise.
pub fn injective_dim(pres: &GentlePresentation) -> usize {
    let lp = lprime(pres);
    if let Some(n) = lp.iter().map(Path::len).max() {
        n
    } else if pres.is_cyclic_radical_square_zero() {
        0
    } else {
        1
    }
}

/// The central element attached to an infinite maximal path: the sum of the
/// rotations of its primitive cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSum {
    pub gamma: MaximalPath,
    pub summands: Vec<Path>,
}

impl CentralSum {
    pub fn period(&self) -> usize {
        self.gamma.len()
    }
}

/// Free basis of `A` over `Z(A) = k[m]` when there is a unique maximal path and
/// it is infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCenterBasis {
    pub rank: usize,
    pub basis: Vec<Path>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterDescription {
    pub cyclic_maximal_paths: Vec<Path>,
    pub central_sums: Vec<CentralSum>,
    pub free_basis: Option<CyclicCenterBasis>,
}

impl CenterDescription {
    /// Predicted `dim Z(A)_n`.
    pub fn predicted_dim(&self, n: usize) -> usize {
        let unit = usize::from(n == 0);
        let cyclic = self.cyclic_maximal_paths.iter().filter(|p| p.len() == n).count();
        let powers = self.central_sums.iter().filter(|m| n > 0 && n.is_multiple_of(m.period())).count();
        unit + cyclic + powers
    }
}

/// Generators of the center: the identity (implicit), the cyclic finite maximal
/// paths and one `m_gamma` per infinite maximal path.
pub fn center(pres: &GentlePresentation) -> CenterDescription {
    let d = decompose(pres);
    let cyclic_maximal_paths = d.finite().filter(|p| p.source() == p.target()).cloned().collect();
    let central_sums: Vec<CentralSum> = d
        .paths()
        .iter()
        .filter(|m| m.is_infinite())
        .map(|m| CentralSum {
            gamma: m.clone(),
            summands: m.arrows().iter().map(|&a| gamma_r(pres, a).path().clone()).collect(),
        })
        .collect();
    let free_basis = (d.paths().len() == 1 && d.has_infinite()).then(|| cyclic_center_basis(pres));
    CenterDescription { cyclic_maximal_paths, central_sums, free_basis }
}

fn cyclic_center_basis(pres: &GentlePresentation) -> CyclicCenterBasis {
    let q = pres.quiver();
    let n = q.arrow_count();
    let mut basis: Vec<Path> = (0..n).flat_map(|k| pres.path_basis(k)).collect();
    for v in q.vertices() {
        if q.outdeg(v) == 2 {
            basis.push(gamma_r(pres, q.outgoing(v)[0]).path().clone());
        }
    }
    CyclicCenterBasis { rank: n * n, basis }
}

/// Arrows lying on finite maximal paths; they generate the prime radical.
pub fn prime_radical(pres: &GentlePresentation) -> Vec<ArrowId> {
    let d = decompose(pres);
    pres.quiver().arrow_ids().filter(|&a| d.maximal_path_of(a).is_finite()).collect()
}

pub fn is_semiprime(pres: &GentlePresentation) -> bool {
    prime_radical(pres).is_empty()
}

/// Whether the algebra is prime: exactly one maximal path, and it is infinite.
pub fn is_prime(pres: &GentlePresentation) -> bool {
    let d = decompose(pres);
    d.paths().len() == 1 && d.has_infinite()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CmWitness {
    /// `A` is free over `k[x]`, `x` the sum of all arrows, on this basis.
    FreeOverSumOfArrows { basis: Vec<Path> },
    /// Finite-dimensional, so depth and GK dimension are both 0.
    FiniteDimensional,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohenMacaulay {
    pub is_cm: bool,
    pub witness: Option<CmWitness>,
}

/// Cohen-Macaulay iff the maximal paths are all finite or all infinite.
pub fn cohen_macaulay(pres: &GentlePresentation) -> CohenMacaulay {
    let d = decompose(pres);
    let is_cm = !(d.has_finite() && d.has_infinite());
    let witness = match (is_cm, pres.kind()) {
        (false, _) => None,
        (true, AlgebraKind::Gentle) => Some(CmWitness::FiniteDimensional),
        (true, AlgebraKind::LocallyGentle) => Some(CmWitness::FreeOverSumOfArrows { basis: cm_basis(pres) }),
    };
    CohenMacaulay { is_cm, witness }
}

/// `Q0` together with every arrow except the smallest one out of each vertex.
pub fn cm_basis(pres: &GentlePresentation) -> Vec<Path> {
    let q = pres.quiver();
    let mut basis: Vec<Path> = q.vertices().map(Path::stationary).collect();
    for a in q.arrow_ids() {
        if q.outgoing(q.source(a))[0] != a {
            basis.push(Path::arrow(q, a));
        }
    }
    basis
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum AsStatus {
    NotGorenstein,
    /// `Ext^k(S, A)` is concentrated in degree `-ell`; `parameter` is the
    /// Gorenstein parameter as stated for the quiver shape.
    Gorenstein { k: usize, ell: i64, parameter: i64 },
    Regular { dimension: usize, k: usize, ell: i64, parameter: i64 },
}

impl AsStatus {
    pub fn is_gorenstein(&self) -> bool {
        !matches!(self, AsStatus::NotGorenstein)
    }

    pub fn is_regular(&self) -> bool {
        matches!(self, AsStatus::Regular { .. })
    }
}

impl fmt::Display for AsStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AsStatus::NotGorenstein => write!(f, "not AS Gorenstein"),
            AsStatus::Gorenstein { k, ell, .. } => write!(f, "AS Gorenstein, (k, l) = ({k}, {ell})"),
            AsStatus::Regular { dimension, .. } => write!(f, "AS regular, dimension {dimension}"),
        }
    }
}

pub fn as_classification(pres: &GentlePresentation) -> AsStatus {
    let q = pres.quiver();
    if pres.is_cyclic_path_algebra() {
        AsStatus::Regular { dimension: 1, k: 1, ell: 1, parameter: 1 }
    } else if pres.is_cyclic_radical_square_zero() {
        AsStatus::Gorenstein { k: 0, ell: -1, parameter: 1 }
    } else if q.arrow_count() == 2 * q.vertex_count() {
        AsStatus::Gorenstein { k: 1, ell: 0, parameter: 0 }
    } else {
        AsStatus::NotGorenstein
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StanleyVerdict {
    Verified,
    CounterexampleToNaiveExtension,
    NotApplicable,
}

impl fmt::Display for StanleyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StanleyVerdict::Verified => "verified",
            StanleyVerdict::CounterexampleToNaiveExtension => "counterexample-to-naive-extension",
            StanleyVerdict::NotApplicable => "not applicable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanleyCheck {
    pub as_gorenstein: bool,
    pub palindromic: bool,
    /// `None` for finite-dimensional algebras, where the quiver condition is
    /// not part of the statement.
    pub quiver_condition: Option<bool>,
    pub verdict: StanleyVerdict,
}

/// `Q` is an oriented cycle, or `|Q1| = 2|Q0|`.
pub fn stanley_quiver_condition(q: &Quiver) -> bool {
    q.is_oriented_cycle() || q.arrow_count() == 2 * q.vertex_count()
}

pub fn stanley_check(pres: &GentlePresentation) -> StanleyCheck {
    let as_gorenstein = as_classification(pres).is_gorenstein();
    let palindromic = palindromy(&hilbert_series(pres)).holds;
    let cm = cohen_macaulay(pres).is_cm;
    match pres.kind() {
        AlgebraKind::Gentle => StanleyCheck {
            as_gorenstein,
            palindromic,
            quiver_condition: None,
            verdict: if as_gorenstein != palindromic {
                StanleyVerdict::CounterexampleToNaiveExtension
            } else {
                StanleyVerdict::NotApplicable
            },
        },
        AlgebraKind::LocallyGentle => {
            let quiver = stanley_quiver_condition(pres.quiver());
            let agree = as_gorenstein == palindromic && palindromic == quiver;
            StanleyCheck {
                as_gorenstein,
                palindromic,
                quiver_condition: Some(quiver),
                verdict: if cm && agree { StanleyVerdict::Verified } else { StanleyVerdict::NotApplicable },
            }
        }
    }
}

/// Everything `classify` reports about a presentation.
#[derive(Clone, Debug)]
pub struct Classification {
    pub kind: AlgebraKind,
    pub hilbert: RationalHilbert,
    pub palindromy: Palindromy,
    pub gk_dim: usize,
    pub depth: usize,
    pub global_dim: Dimension,
    pub injective_dim: usize,
    pub is_prime: bool,
    pub is_semiprime: bool,
    pub prime_radical: Vec<ArrowId>,
    pub cohen_macaulay: CohenMacaulay,
    pub as_status: AsStatus,
    pub stanley: StanleyCheck,
}

impl Classification {
    /// One-line summary such as
    /// `AS regular, dimension 1; CM; prime; gldim 1; injdim 1; depth 1; GKdim 1`.
    pub fn summary(&self) -> String {
        format!(
            "{}; {}; {}; gldim {}; injdim {}; depth {}; GKdim {}",
            self.as_status,
            if self.cohen_macaulay.is_cm { "CM" } else { "not CM" },
            if self.is_prime { "prime" } else { "not prime" },
            self.global_dim,
            self.injective_dim,
            self.depth,
            self.gk_dim,
        )
    }
}

pub fn classify(pres: &GentlePresentation) -> Classification {
    let hilbert = hilbert_series(pres);
    let prime_radical = prime_radical(pres);
    Classification {
        kind: pres.kind(),
        palindromy: palindromy(&hilbert),
        hilbert,
        gk_dim: gk_dim(pres),
        depth: depth(pres),
        global_dim: global_dim(pres),
        injective_dim: injective_dim(pres),
        is_prime: is_prime(pres),
        is_semiprime: prime_radical.is_empty(),
        prime_radical,
        cohen_macaulay: cohen_macaulay(pres),
        as_status: as_classification(pres),
        stanley: stanley_check(pres),
    }
}

/// The palindromy criterion phrased purely in terms of the quiver and
/// relations: `|Q1| = 2|Q0|`, or the path algebra of an oriented cycle, or an
/// (arbitrarily oriented) cycle graph with every length-two path a relation.
pub fn palindromy_shape(pres: &GentlePresentation) -> bool {
    let q = pres.quiver();
    if q.arrow_count() == 2 * q.vertex_count() || pres.is_cyclic_path_algebra() {
        return true;
    }
    let cycle_graph = q.arrow_count() == q.vertex_count() && q.vertices().all(|v| q.indeg(v) + q.outdeg(v) == 2);
    cycle_graph && pres.relations().len() == q.length_two_paths().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn hilb_invariants() {
        let p = catalog::hilb();
        let c = classify(&p);
        assert_eq!(c.global_dim, Dimension::Finite(3));
        assert_eq!(c.injective_dim, 3);
        assert_eq!((c.depth, c.gk_dim), (0, 1));
        assert!(!c.cohen_macaulay.is_cm);
        assert!(!c.is_semiprime);
        let names: Vec<&str> = c.prime_radical.iter().map(|&a| p.quiver().arrow_name(a)).collect();
        assert_eq!(names, vec!["alpha2", "alpha1", "beta1", "beta2"]);
        assert_eq!(c.stanley.verdict, StanleyVerdict::NotApplicable);
    }

    #[test]
    fn cyclic_is_regular() {
        for n in 0..4 {
            let c = classify(&catalog::a_tilde(n));
            assert_eq!(c.summary(), "AS regular, dimension 1; CM; prime; gldim 1; injdim 1; depth 1; GKdim 1");
            assert_eq!(c.stanley.verdict, StanleyVerdict::Verified);
            let d = classify(&catalog::a_tilde_dual(n));
            assert_eq!(d.as_status, AsStatus::Gorenstein { k: 0, ell: -1, parameter: 1 });
            assert_eq!(d.injective_dim, 0);
            assert_eq!(d.global_dim, Dimension::Infinite);
        }
    }

    #[test]
    fn two_loops_classification() {
        let c = classify(&catalog::two_loops());
        assert_eq!(c.as_status, AsStatus::Gorenstein { k: 1, ell: 0, parameter: 0 });
        assert_eq!(c.injective_dim, 1);
        assert_eq!(c.global_dim, Dimension::Infinite);
        assert!(c.cohen_macaulay.is_cm && c.is_semiprime && !c.is_prime);
        assert_eq!(c.stanley.verdict, StanleyVerdict::Verified);
        assert_eq!(c.depth, 1);
    }

    #[test]
    fn kronecker_fails_naive_stanley() {
        let c = classify(&catalog::kronecker());
        assert!(c.cohen_macaulay.is_cm);
        assert_eq!(c.cohen_macaulay.witness, Some(CmWitness::FiniteDimensional));
        assert!(c.palindromy.holds);
        assert_eq!(c.as_status, AsStatus::NotGorenstein);
        assert_eq!(c.stanley.quiver_condition, None);
        assert_eq!(c.stanley.verdict, StanleyVerdict::CounterexampleToNaiveExtension);
        assert_eq!(c.depth, 0);
        assert_eq!(c.injective_dim, 1);
    }

    #[test]
    fn centers() {
        let h = center(&catalog::hilb());
        assert!(h.cyclic_maximal_paths.is_empty());
        assert_eq!(h.central_sums.len(), 1);
        assert_eq!(h.central_sums[0].summands.len(), 1);
        assert!(h.free_basis.is_none());

        let a = catalog::a_tilde(1);
        let c = center(&a);
        assert_eq!(c.central_sums[0].summands.len(), 2);
        let fb = c.free_basis.clone().unwrap();
        assert_eq!(fb.rank, 4);
        assert_eq!(fb.basis.len(), 4);
        assert_eq!((0..5).map(|n| c.predicted_dim(n)).collect::<Vec<_>>(), vec![1, 0, 1, 0, 1]);

        let dn = center(&catalog::dual_numbers());
        assert_eq!(dn.cyclic_maximal_paths.len(), 1);
        assert_eq!(dn.predicted_dim(1), 1);
    }

    #[test]
    fn cm_basis_drops_one_arrow_per_vertex() {
        let b = cm_basis(&catalog::two_loops());
        let q = catalog::two_loops();
        let names: Vec<String> = b.iter().map(|p| p.display(q.quiver()).to_string()).collect();
        assert_eq!(names, vec!["e_1", "y"]);
        assert_eq!(cm_basis(&catalog::a_tilde(2)).len(), 3);
    }

    #[test]
    fn palindromy_shapes() {
        assert!(palindromy_shape(&catalog::kronecker()));
        assert!(palindromy_shape(&catalog::dual_numbers()));
        assert!(!palindromy_shape(&catalog::hilb()));
        assert!(palindromy_shape(&catalog::two_loops_dual()));
    }
}
