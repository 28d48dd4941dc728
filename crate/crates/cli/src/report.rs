//! The JSON document emitted by `--json`. Every path, vertex and arrow is
//! written by name so a report can be read without the input file.

use gentle_core::hilbert::{Palindromy, RationalHilbert};
use gentle_core::invariants::{AsStatus, Classification, StanleyCheck};
use gentle_core::resolutions::{GradedComplex, Orientation, Summand, Window};
use gentle_core::spectrum::Inclusion;
use gentle_core::{AlgebraKind, Dimension, GentlePresentation, Path, Quiver};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub presentation: PresentationEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<AlgebraKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<PresentationEcho>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maximal_paths: Option<Vec<MaximalPathReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<CenterBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complexes: Option<Vec<ComplexJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ext: Option<Vec<ExtReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Vec<CheckReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentations: Option<Vec<EnumeratedReport>>,
}

impl ReportDocument {
    pub fn new(command: &str, pres: &GentlePresentation) -> Self {
        ReportDocument {
            command: command.to_string(),
            presentation: PresentationEcho::of(pres),
            kind: Some(pres.kind()),
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowEcho {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// The presentation as declared, in declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationEcho {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowEcho>,
    pub relations: Vec<[String; 2]>,
}

impl PresentationEcho {
    pub fn of(pres: &GentlePresentation) -> Self {
        let q = pres.quiver();
        let mut echo = Self::of_quiver(q);
        echo.relations = relation_names(pres);
        echo
    }

    pub fn of_quiver(q: &Quiver) -> Self {
        PresentationEcho {
            vertices: q.vertex_names().to_vec(),
            arrows: q
                .arrow_ids()
                .map(|a| ArrowEcho {
                    name: q.arrow_name(a).to_string(),
                    source: q.vertex_name(q.source(a)).to_string(),
                    target: q.vertex_name(q.target(a)).to_string(),
                })
                .collect(),
            relations: Vec::new(),
        }
    }

    /// The echo in the presentation file format.
    pub fn to_file(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str(&format!("vertex {v}\n"));
        }
        for a in &self.arrows {
            out.push_str(&format!("arrow {} {} {}\n", a.name, a.source, a.target));
        }
        for [a, b] in &self.relations {
            out.push_str(&format!("rel {a} {b}\n"));
        }
        out
    }
}

pub fn relation_names(pres: &GentlePresentation) -> Vec<[String; 2]> {
    let q = pres.quiver();
    pres.relations().iter().map(|&(a, b)| [q.arrow_name(a).to_string(), q.arrow_name(b).to_string()]).collect()
}

pub fn path_names(q: &Quiver, p: &Path) -> String {
    p.display(q).to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsBlock {
    pub global_dim: Dimension,
    pub injective_dim: usize,
    pub depth: usize,
    pub gk_dim: usize,
    pub cohen_macaulay: bool,
    pub prime: bool,
    pub semiprime: bool,
    pub prime_radical: Vec<String>,
    pub hilbert: String,
    pub palindromy: Palindromy,
}

impl InvariantsBlock {
    pub fn of(q: &Quiver, c: &Classification) -> Self {
        InvariantsBlock {
            global_dim: c.global_dim,
            injective_dim: c.injective_dim,
            depth: c.depth,
            gk_dim: c.gk_dim,
            cohen_macaulay: c.cohen_macaulay.is_cm,
            prime: c.is_prime,
            semiprime: c.is_semiprime,
            prime_radical: c.prime_radical.iter().map(|&a| q.arrow_name(a).to_string()).collect(),
            hilbert: c.hilbert.to_string(),
            palindromy: c.palindromy,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertBlock {
    pub series: RationalHilbert,
    pub rational: String,
    pub coefficients: Vec<i64>,
    pub expansion: String,
    pub palindromy: Palindromy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalPathReport {
    pub infinite: bool,
    pub arrows: Vec<String>,
    pub display: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralElement {
    pub gamma: String,
    pub degree: usize,
    pub summands: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeBasisReport {
    pub rank: usize,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterBlock {
    pub identity: bool,
    pub cyclic_maximal_paths: Vec<String>,
    pub central_elements: Vec<CentralElement>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub free_basis: Option<FreeBasisReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeReport {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    pub generators: Vec<String>,
    pub height_zero: bool,
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducibility: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumBlock {
    pub zero_is_prime: bool,
    pub entries: Vec<PrimeReport>,
    pub inclusions: Vec<Inclusion>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationBlock {
    pub summary: String,
    pub kind: AlgebraKind,
    pub as_status: AsStatus,
    pub cohen_macaulay: bool,
    pub prime: bool,
    pub semiprime: bool,
    pub global_dim: Dimension,
    pub injective_dim: usize,
    pub depth: usize,
    pub gk_dim: usize,
    pub hilbert: String,
    pub palindromic: bool,
    pub stanley: StanleyCheck,
}

impl ClassificationBlock {
    pub fn of(c: &Classification) -> Self {
        ClassificationBlock {
            summary: c.summary(),
            kind: c.kind,
            as_status: c.as_status,
            cohen_macaulay: c.cohen_macaulay.is_cm,
            prime: c.is_prime,
            semiprime: c.is_semiprime,
            global_dim: c.global_dim,
            injective_dim: c.injective_dim,
            depth: c.depth,
            gk_dim: c.gk_dim,
            hilbert: c.hilbert.to_string(),
            palindromic: c.palindromy.holds,
            stanley: c.stanley,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrow: Option<String>,
    pub shift: i64,
    pub display: String,
}

impl SummandJson {
    fn of(q: &Quiver, s: &Summand) -> Self {
        let v = |x: gentle_core::VertexId| Some(q.vertex_name(x).to_string());
        let (kind, vertex, arrow, shift) = match *s {
            Summand::Simple { vertex } => ("simple", v(vertex), None, 0),
            Summand::Projective { vertex, shift } => ("projective", v(vertex), None, shift),
            Summand::InjectiveVertex { vertex, shift } => ("injective-vertex", v(vertex), None, shift),
            Summand::InjectiveArrow { arrow, shift } => ("injective-arrow", None, Some(q.arrow_name(arrow).to_string()), shift),
        };
        SummandJson { kind: kind.into(), vertex, arrow, shift, display: s.display(q).to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub from: usize,
    pub to: usize,
    pub label: String,
    pub sign: i8,
}

/// One module of a complex and the differential leaving it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub degree: i64,
    pub summands: Vec<SummandJson>,
    pub maps: Vec<MapJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub orientation: String,
    pub vertex: String,
    pub truncated: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub period: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub injective_length: Option<usize>,
    pub terms: Vec<TermJson>,
}

impl ComplexJson {
    pub fn of(q: &Quiver, c: &GradedComplex) -> Self {
        let terms = c
            .terms
            .iter()
            .enumerate()
            .map(|(k, t)| TermJson {
                degree: t.degree,
                summands: t.summands.iter().map(|s| SummandJson::of(q, s)).collect(),
                maps: c
                    .maps
                    .get(k)
                    .map(|m| {
                        m.iter()
                            .map(|e| MapJson { from: e.from, to: e.to, label: e.label.display(q).to_string(), sign: e.sign })
                            .collect()
                    })
                    .unwrap_or_default(),
            })
            .collect();
        ComplexJson {
            orientation: match c.orientation {
                Orientation::ProjectiveResolution => "projective".into(),
                Orientation::InjectiveResolution => "injective".into(),
            },
            vertex: q.vertex_name(c.vertex).to_string(),
            truncated: c.truncated,
            period: c.periodicity.map(|p| p.period),
            injective_length: None,
            terms,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtReport {
    pub vertex: String,
    pub degree: usize,
    pub description: String,
    pub window: Window,
    pub dims: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratedReport {
    pub index: usize,
    pub relations: Vec<[String; 2]>,
    pub kind: AlgebraKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationBlock>,
}
