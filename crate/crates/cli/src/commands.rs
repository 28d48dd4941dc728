use std::fmt::Write as _;
use std::path::Path as FsPath;

use gentle_core::enumerate::{enumerate_from_file, enumerate_presentations};
use gentle_core::format::{emit_presentation, parse_raw, FormatError, RawPresentation};
use gentle_core::invariants::{center, classify, Classification};
use gentle_core::resolutions::{ext_simple, injective_resolution, projective_resolution, Window};
use gentle_core::spectrum::{prime_inclusions, prime_spectrum, Polynomial, PrimeIdeal};
use gentle_core::{catalog, decompose, hilbert_series, palindromy, GentlePresentation, VertexId};
use thiserror::Error;

use crate::report::{
    path_names, relation_names, CenterBlock, CentralElement, CheckStatus, ClassificationBlock, ComplexJson, EnumeratedReport,
    ExtReport, FreeBasisReport, HilbertBlock, InvariantsBlock, MaximalPathReport, PresentationEcho, PrimeReport, ReportDocument,
    SpectrumBlock,
};
use crate::verify::run_checks;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Invalid(#[from] FormatError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 64,
            CliError::Invalid(_) => 1,
        }
    }
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct Options {
    pub vertex: Option<String>,
    pub degree: Option<usize>,
    pub steps: usize,
    pub truncation: usize,
    pub terms: usize,
    pub classify: bool,
    pub poly: Option<String>,
}

impl Default for Options {
    fn default() -> Self {
        Options { vertex: None, degree: None, steps: 32, truncation: 12, terms: 20, classify: false, poly: None }
    }
}

pub struct Outcome {
    pub doc: ReportDocument,
    pub text: String,
    /// Set when some verification check failed.
    pub failed: bool,
}

impl Outcome {
    fn ok(doc: ReportDocument, text: String) -> Self {
        Outcome { doc, text, failed: false }
    }
}

/// Where a presentation came from: a file, or one of the built-in examples.
pub enum Source {
    File(RawPresentation),
    Catalog(GentlePresentation),
}

impl Source {
    pub fn load(input: &str) -> Result<Source, CliError> {
        if FsPath::new(input).exists() {
            let text = std::fs::read_to_string(input).map_err(|source| CliError::Io { path: input.to_string(), source })?;
            return Ok(Source::File(parse_raw(&text)?));
        }
        match catalog::by_name(input) {
            Some(p) => Ok(Source::Catalog(p)),
            None => Err(CliError::Usage(format!(
                "`{input}` is neither a readable file nor a built-in example ({})",
                catalog::NAMES.join(", ")
            ))),
        }
    }

    pub fn presentation(&self) -> Result<GentlePresentation, CliError> {
        match self {
            Source::File(raw) => Ok(raw.build()?),
            Source::Catalog(p) => Ok(p.clone()),
        }
    }
}

fn vertices(p: &GentlePresentation, opts: &Options) -> Result<Vec<VertexId>, CliError> {
    let q = p.quiver();
    match &opts.vertex {
        None => Ok(q.vertices().collect()),
        Some(name) => q
            .vertex_by_name(name)
            .map(|v| vec![v])
            .ok_or_else(|| CliError::Usage(format!("no vertex named `{name}`"))),
    }
}

pub fn validate(p: &GentlePresentation) -> Outcome {
    let q = p.quiver();
    let text = format!(
        "valid {} presentation: {} vertices, {} arrows, {} relations",
        p.kind(),
        q.vertex_count(),
        q.arrow_count(),
        p.relations().len()
    );
    Outcome::ok(ReportDocument::new("validate", p), text)
}

pub fn invariants(p: &GentlePresentation) -> Outcome {
    let q = p.quiver();
    let c = classify(p);
    let block = InvariantsBlock::of(q, &c);
    let radical = if block.prime_radical.is_empty() { "0".to_string() } else { format!("<{}>", block.prime_radical.join(", ")) };
    let mut text = String::new();
    let _ = writeln!(text, "kind: {}", c.kind);
    let _ = writeln!(text, "hilbert series: {}", c.hilbert);
    let _ = writeln!(text, "gldim: {}", c.global_dim);
    let _ = writeln!(text, "injdim: {}", c.injective_dim);
    let _ = writeln!(text, "depth: {}", c.depth);
    let _ = writeln!(text, "GKdim: {}", c.gk_dim);
    let _ = writeln!(text, "Cohen-Macaulay: {}", yes_no(c.cohen_macaulay.is_cm));
    let _ = writeln!(text, "prime: {}", yes_no(c.is_prime));
    let _ = writeln!(text, "semiprime: {}", yes_no(c.is_semiprime));
    let _ = write!(text, "prime radical: {radical}");
    let mut doc = ReportDocument::new("invariants", p);
    doc.invariants = Some(block);
    Outcome::ok(doc, text)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn hilbert(p: &GentlePresentation, opts: &Options) -> Outcome {
    let h = hilbert_series(p);
    let expansion = h.expansion(opts.terms);
    let text = if h.is_polynomial() && h.numerator.len() <= opts.terms {
        h.to_string()
    } else {
        format!("{h} = {expansion}")
    };
    let mut doc = ReportDocument::new("hilbert", p);
    doc.hilbert = Some(HilbertBlock {
        rational: h.to_string(),
        coefficients: h.coefficients(opts.terms),
        expansion,
        palindromy: palindromy(&h),
        series: h,
    });
    Outcome::ok(doc, text)
}

pub fn dual(p: &GentlePresentation) -> Outcome {
    let d = p.koszul_dual();
    let mut doc = ReportDocument::new("dual", p);
    doc.dual = Some(PresentationEcho::of(&d));
    let text = format!("# Koszul dual ({})\n{}", d.kind(), emit_presentation(&d).trim_end());
    Outcome::ok(doc, text)
}

pub fn maximal(p: &GentlePresentation) -> Outcome {
    let q = p.quiver();
    let reports: Vec<MaximalPathReport> = decompose(p)
        .paths()
        .iter()
        .map(|m| MaximalPathReport {
            infinite: m.is_infinite(),
            arrows: m.arrows().iter().map(|&a| q.arrow_name(a).to_string()).collect(),
            display: m.display(q).to_string(),
        })
        .collect();
    let text = reports
        .iter()
        .map(|r| format!("{}: {}", if r.infinite { "infinite" } else { "finite" }, r.display))
        .collect::<Vec<_>>()
        .join("\n");
    let mut doc = ReportDocument::new("maximal", p);
    doc.maximal_paths = Some(reports);
    Outcome::ok(doc, text)
}

pub fn center_cmd(p: &GentlePresentation) -> Outcome {
    let q = p.quiver();
    let cd = center(p);
    let block = CenterBlock {
        identity: true,
        cyclic_maximal_paths: cd.cyclic_maximal_paths.iter().map(|c| path_names(q, c)).collect(),
        central_elements: cd
            .central_sums
            .iter()
            .map(|m| CentralElement {
                gamma: m.gamma.display(q).to_string(),
                degree: m.period(),
                summands: m.summands.iter().map(|s| path_names(q, s)).collect(),
            })
            .collect(),
        free_basis: cd
            .free_basis
            .as_ref()
            .map(|b| FreeBasisReport { rank: b.rank, basis: b.basis.iter().map(|s| path_names(q, s)).collect() }),
    };
    let mut lines = vec!["1".to_string()];
    lines.extend(block.cyclic_maximal_paths.iter().map(|c| format!("{c} (cyclic finite maximal path)")));
    for m in &block.central_elements {
        lines.push(format!("m_{} = {} (degree {})", m.gamma, m.summands.join(" + "), m.degree));
    }
    if let Some(b) = &block.free_basis {
        lines.push(format!("A is free of rank {} over Z(A) with basis {{{}}}", b.rank, b.basis.join(", ")));
    }
    let mut doc = ReportDocument::new("center", p);
    doc.center = Some(block);
    Outcome::ok(doc, lines.join("\n"))
}

pub fn spectrum(p: &GentlePresentation, opts: &Options) -> Result<Outcome, CliError> {
    let q = p.quiver();
    let mut primes = prime_spectrum(p);
    let inclusions = prime_inclusions(p, &primes);
    if let Some(text) = &opts.poly {
        let poly = Polynomial::parse(text).map_err(|e| CliError::Usage(format!("--poly: {e}")))?;
        let gammas: Vec<_> = decompose(p).paths().iter().filter(|m| m.is_infinite()).cloned().collect();
        if gammas.is_empty() {
            return Err(CliError::Usage("--poly needs an infinite maximal path".into()));
        }
        for g in &gammas {
            let entry = gentle_core::spectrum::instantiate_poly_prime(p, g, &poly).map_err(|e| CliError::Usage(format!("--poly: {e}")))?;
            primes.entries.push(entry);
        }
    }
    let entries: Vec<PrimeReport> = primes
        .entries
        .iter()
        .map(|e| {
            let generators = e.ideal.generators().iter().map(|g| path_names(q, g)).collect();
            let description = e.ideal.describe(q);
            let (kind, vertex, gamma, polynomial, irreducibility) = match &e.ideal {
                PrimeIdeal::MaxAtVertex { vertex, .. } => ("maximal", Some(q.vertex_name(*vertex).to_string()), None, None, None),
                PrimeIdeal::AnnInfinite { gamma, .. } => ("annihilator", None, Some(gamma.display(q).to_string()), None, None),
                PrimeIdeal::PolyFamily { gamma, poly } => (
                    "polynomial",
                    None,
                    Some(gamma.display(q).to_string()),
                    poly.as_ref().map(|(f, _)| f.to_string()),
                    poly.as_ref().map(|(_, s)| s.to_string()),
                ),
            };
            PrimeReport { kind: kind.into(), vertex, gamma, generators, height_zero: e.height_zero, description, polynomial, irreducibility }
        })
        .collect();
    let mut lines: Vec<String> = Vec::new();
    lines.push(format!("zero ideal: {}", if primes.is_prime { "prime" } else { "not prime" }));
    for (i, e) in entries.iter().enumerate() {
        let tag = if e.height_zero { ", height 0" } else { "" };
        lines.push(format!("[{i}] {}{tag}", e.description));
    }
    for inc in &inclusions {
        lines.push(format!("[{}] < [{}]", inc.smaller, inc.larger));
    }
    let mut doc = ReportDocument::new("spectrum", p);
    doc.spectrum = Some(SpectrumBlock { zero_is_prime: primes.is_prime, entries, inclusions });
    Ok(Outcome::ok(doc, lines.join("\n")))
}

pub fn resolve_proj(p: &GentlePresentation, opts: &Options) -> Result<Outcome, CliError> {
    let q = p.quiver();
    let mut complexes = Vec::new();
    let mut blocks = Vec::new();
    for v in vertices(p, opts)? {
        let c = projective_resolution(p, v, opts.steps);
        let mut header = format!("projective resolution of S({})", q.vertex_name(v));
        match (c.truncated, c.periodicity) {
            (true, Some(per)) => {
                let _ = write!(header, ", infinite, periodic with period {} from P{}, shown to P{}", per.period, per.start, opts.steps);
            }
            _ => {
                let _ = write!(header, ", length {}", c.length());
            }
        }
        blocks.push(format!("{header}\n{}", c.render(q)));
        complexes.push(ComplexJson::of(q, &c));
    }
    let mut doc = ReportDocument::new("resolve-proj", p);
    doc.complexes = Some(complexes);
    Ok(Outcome::ok(doc, blocks.join("\n\n")))
}

pub fn resolve_inj(p: &GentlePresentation, opts: &Options) -> Result<Outcome, CliError> {
    let q = p.quiver();
    let mut complexes = Vec::new();
    let mut blocks = Vec::new();
    for v in vertices(p, opts)? {
        let name = q.vertex_name(v);
        match injective_resolution(p, v) {
            Ok(r) => {
                let iso = r.isomorphic_to.map(|a| format!(", e_{name}A = I({})", q.arrow_name(a))).unwrap_or_default();
                blocks.push(format!("injective resolution of e_{name}A, length {}{iso}\n{}", r.m, r.complex.render(q)));
                let mut json = ComplexJson::of(q, &r.complex);
                json.injective_length = Some(r.m);
                complexes.push(json);
            }
            Err(e) => blocks.push(format!("injective resolution of e_{name}A: {e}")),
        }
    }
    let mut doc = ReportDocument::new("resolve-inj", p);
    doc.complexes = Some(complexes);
    Ok(Outcome::ok(doc, blocks.join("\n\n")))
}

pub fn ext(p: &GentlePresentation, opts: &Options) -> Result<Outcome, CliError> {
    let q = p.quiver();
    let i = opts.degree.ok_or_else(|| CliError::Usage("ext needs --degree".into()))?;
    let n = opts.truncation as i64;
    let window = Window { lo: -6, hi: 6.min(n - i as i64 - 1), truncation: opts.truncation };
    if window.hi < window.lo {
        return Err(CliError::Usage(format!("--truncation {} is too small for Ext^{i}", opts.truncation)));
    }
    let mut reports = Vec::new();
    for v in vertices(p, opts)? {
        let e = ext_simple(p, v, i, window).map_err(|e| CliError::Usage(e.to_string()))?;
        reports.push(ExtReport {
            vertex: q.vertex_name(v).to_string(),
            degree: i,
            description: e.describe(q),
            window,
            dims: window.degrees().map(|d| e.dim(p, d)).collect(),
        });
    }
    let text = reports
        .iter()
        .map(|r| {
            let dims: Vec<String> = window.degrees().zip(&r.dims).map(|(d, n)| format!("{d}:{n}")).collect();
            format!("Ext^{i}(S({}), A) = {}\n  dims {}", r.vertex, r.description, dims.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n");
    let mut doc = ReportDocument::new("ext", p);
    doc.ext = Some(reports);
    Ok(Outcome::ok(doc, text))
}

pub fn classify_cmd(p: &GentlePresentation) -> Outcome {
    let c = classify(p);
    let mut doc = ReportDocument::new("classify", p);
    doc.classification = Some(ClassificationBlock::of(&c));
    Outcome::ok(doc, c.summary())
}

pub fn verify(p: &GentlePresentation, opts: &Options) -> Outcome {
    let checks = run_checks(p, opts.truncation, opts.steps);
    let failed = checks.iter().any(|c| c.status == CheckStatus::Fail);
    let text = checks
        .iter()
        .map(|c| {
            let tag = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skip",
            };
            format!("{tag}  {}: {}", c.name, c.detail)
        })
        .collect::<Vec<_>>()
        .join("\n");
    let mut doc = ReportDocument::new("verify", p);
    doc.verification = Some(checks);
    Outcome { doc, text, failed }
}

/// Classifies every presentation on worker threads, returning results in
/// input order.
fn classify_all(ps: &[GentlePresentation]) -> Vec<Classification> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(ps.len().max(1));
    let chunk = ps.len().div_ceil(workers).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = ps.chunks(chunk).map(|c| s.spawn(move || c.iter().map(classify).collect::<Vec<_>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("classification does not panic")).collect()
    })
}

pub fn enumerate(source: &Source, opts: &Options) -> Result<Outcome, CliError> {
    let (echo, ps) = match source {
        Source::File(raw) => (PresentationEcho::of_quiver(&raw.quiver()?), enumerate_from_file(raw)?),
        Source::Catalog(p) => (PresentationEcho::of_quiver(p.quiver()), enumerate_presentations(p.quiver())),
    };
    let classes = if opts.classify { classify_all(&ps) } else { Vec::new() };
    let mut reports = Vec::new();
    let mut lines = vec![format!("{} presentations", ps.len())];
    for (i, p) in ps.iter().enumerate() {
        let rels = relation_names(p);
        let shown = if rels.is_empty() { "none".to_string() } else { rels.iter().map(|[a, b]| format!("{a}{b}")).collect::<Vec<_>>().join(", ") };
        let mut line = format!("#{i}  relations: {shown}  ({})", p.kind());
        let classification = classes.get(i).map(ClassificationBlock::of);
        if let Some(c) = &classification {
            let _ = write!(line, "  {}", c.summary);
        }
        lines.push(line);
        reports.push(EnumeratedReport { index: i, relations: rels, kind: p.kind(), classification });
    }
    let doc = ReportDocument {
        command: "enumerate".into(),
        presentation: echo,
        presentations: Some(reports),
        ..Default::default()
    };
    Ok(Outcome::ok(doc, lines.join("\n")))
}
