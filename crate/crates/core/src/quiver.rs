//! Quivers, paths and validated (locally) gentle presentations.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ArrowId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("a quiver needs at least one vertex and one arrow")]
    EmptyQuiver,
    #[error("name `{0}` is declared twice")]
    DuplicateName(String),
    #[error("arrow `{arrow}` refers to undeclared vertex `{vertex}`")]
    UnknownEndpoint { arrow: String, vertex: String },
    #[error("the underlying graph is not connected (vertex `{0}` is unreachable)")]
    Disconnected(String),
}

/// A finite connected quiver. Indices follow declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    outgoing: Vec<Vec<ArrowId>>,
    incoming: Vec<Vec<ArrowId>>,
}

impl Quiver {
    pub fn new<V, A, S>(vertex_names: V, arrow_triples: A) -> Result<Self, QuiverError>
    where
        V: IntoIterator<Item = S>,
        A: IntoIterator<Item = (S, S, S)>,
        S: Into<String>,
    {
        let vertices: Vec<String> = vertex_names.into_iter().map(Into::into).collect();
        let triples: Vec<(String, String, String)> = arrow_triples
            .into_iter()
            .map(|(n, s, t)| (n.into(), s.into(), t.into()))
            .collect();
        if vertices.is_empty() || triples.is_empty() {
            return Err(QuiverError::EmptyQuiver);
        }
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(QuiverError::DuplicateName(v.clone()));
            }
        }
        let mut arrow_names = BTreeSet::new();
        let mut arrows = Vec::with_capacity(triples.len());
        for (name, s, t) in triples {
            if index.contains_key(&name) || !arrow_names.insert(name.clone()) {
                return Err(QuiverError::DuplicateName(name));
            }
            let lookup = |v: &String| {
                index.get(v).copied().ok_or_else(|| QuiverError::UnknownEndpoint {
                    arrow: name.clone(),
                    vertex: v.clone(),
                })
            };
            let source = VertexId(lookup(&s)?);
            let target = VertexId(lookup(&t)?);
            arrows.push(Arrow { name, source, target });
        }
        let mut outgoing = vec![Vec::new(); vertices.len()];
        let mut incoming = vec![Vec::new(); vertices.len()];
        for (i, a) in arrows.iter().enumerate() {
            outgoing[a.source.0].push(ArrowId(i));
            incoming[a.target.0].push(ArrowId(i));
        }
        let quiver = Quiver { vertices, arrows, outgoing, incoming };
        quiver.check_connected()?;
        Ok(quiver)
    }

    fn check_connected(&self) -> Result<(), QuiverError> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in self.outgoing[v].iter().chain(&self.incoming[v]) {
                let arrow = &self.arrows[a.0];
                for w in [arrow.source.0, arrow.target.0] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(v) => Err(QuiverError::Disconnected(self.vertices[v].clone())),
            None => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a.0].name
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].target
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == name).map(VertexId)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name).map(ArrowId)
    }

    /// Arrows with source `v`, in declaration order.
    pub fn outgoing(&self, v: VertexId) -> &[ArrowId] {
        &self.outgoing[v.0]
    }

    /// Arrows with target `v`, in declaration order.
    pub fn incoming(&self, v: VertexId) -> &[ArrowId] {
        &self.incoming[v.0]
    }

    pub fn outdeg(&self, v: VertexId) -> usize {
        self.outgoing[v.0].len()
    }

    pub fn indeg(&self, v: VertexId) -> usize {
        self.incoming[v.0].len()
    }

    /// All composable arrow pairs `ab` with `t(a) = s(b)`.
    pub fn length_two_paths(&self) -> Vec<(ArrowId, ArrowId)> {
        let mut out = Vec::new();
        for a in self.arrow_ids() {
            for &b in self.outgoing(self.target(a)) {
                out.push((a, b));
            }
        }
        out
    }

    /// True when every vertex has in- and out-degree one, i.e. the quiver is a
    /// single oriented cycle.
    pub fn is_oriented_cycle(&self) -> bool {
        self.vertices().all(|v| self.indeg(v) == 1 && self.outdeg(v) == 1)
    }

    pub fn path_from_arrows(&self, arrows: &[ArrowId]) -> Option<Path> {
        let (first, rest) = arrows.split_first()?;
        let mut end = self.target(*first);
        for &a in rest {
            if self.source(a) != end {
                return None;
            }
            end = self.target(a);
        }
        Some(Path { source: self.source(*first), target: end, arrows: arrows.to_vec() })
    }
}

/// A path in a quiver: either stationary at a vertex or a composable arrow
/// sequence read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn stationary(v: VertexId) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: ArrowId) -> Self {
        Path { source: q.source(a), target: q.target(a), arrows: vec![a] }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_stationary(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_stationary()
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn first(&self) -> Option<ArrowId> {
        self.arrows.first().copied()
    }

    pub fn last(&self) -> Option<ArrowId> {
        self.arrows.last().copied()
    }

    pub fn is_cycle(&self) -> bool {
        !self.is_stationary() && self.source == self.target
    }

    /// Concatenation `self * other`, defined when `t(self) = s(other)`.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    /// If `self = prefix * other`, returns `prefix`.
    pub fn strip_suffix(&self, q: &Quiver, other: &Path) -> Option<Path> {
        if other.target != self.target || other.len() > self.len() {
            return None;
        }
        let cut = self.len() - other.len();
        if self.arrows[cut..] != other.arrows[..] {
            return None;
        }
        if cut == 0 {
            return (other.source == self.source).then(|| Path::stationary(self.source));
        }
        q.path_from_arrows(&self.arrows[..cut])
    }

    /// If `self = other * suffix`, returns `suffix`.
    pub fn strip_prefix(&self, q: &Quiver, other: &Path) -> Option<Path> {
        if other.source != self.source || other.len() > self.len() {
            return None;
        }
        if self.arrows[..other.len()] != other.arrows[..] {
            return None;
        }
        if other.len() == self.len() {
            return (other.target == self.target).then(|| Path::stationary(self.target));
        }
        q.path_from_arrows(&self.arrows[other.len()..])
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver: q }
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_stationary() {
            return write!(f, "e_{}", self.quiver.vertex_name(self.path.source));
        }
        let names: Vec<&str> = self.path.arrows.iter().map(|a| self.quiver.arrow_name(*a)).collect();
        write!(f, "{}", names.join("."))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    /// Finite dimensional.
    Gentle,
    /// Infinite dimensional.
    LocallyGentle,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Gentle => write!(f, "gentle"),
            AlgebraKind::LocallyGentle => write!(f, "locally gentle"),
        }
    }
}

/// Which local condition a relation set breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    /// Two arrows into `s(a)` composed with `a`: condition (ii).
    Incoming,
    /// `a` composed with two arrows out of `t(a)`: condition (iii).
    Outgoing,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("relation {0:?} does not have length 2")]
    RelationNotLength2(Vec<String>),
    #[error("relation {0}{1} is not a path: t({0}) != s({1})")]
    NotComposable(String, String),
    #[error("condition (i) violated at vertex {vertex}: indeg {indeg}, outdeg {outdeg}")]
    DegreeExceeded { vertex: String, indeg: usize, outdeg: usize },
    #[error(
        "condition ({}) violated at vertex {vertex}: for arrow {arrow}, {} of {} are relations, expected exactly one",
        if *side == Side::Incoming { "ii" } else { "iii" },
        relations_present,
        compositions.join(", ")
    )]
    ExactlyOneViolated {
        vertex: String,
        arrow: String,
        side: Side,
        compositions: Vec<String>,
        relations_present: usize,
    },
}

impl PresentationError {
    pub fn condition(&self) -> &'static str {
        match self {
            PresentationError::RelationNotLength2(_) | PresentationError::NotComposable(..) => "iv",
            PresentationError::DegreeExceeded { .. } => "i",
            PresentationError::ExactlyOneViolated { side: Side::Incoming, .. } => "ii",
            PresentationError::ExactlyOneViolated { side: Side::Outgoing, .. } => "iii",
        }
    }
}

/// A quiver with quadratic monomial relations satisfying the (locally)
/// gentle conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GentlePresentation {
    quiver: Quiver,
    relations: BTreeSet<(ArrowId, ArrowId)>,
    kind: AlgebraKind,
}

impl GentlePresentation {
    pub fn new(quiver: Quiver, relations: &[Path]) -> Result<Self, PresentationError> {
        let mut pairs = BTreeSet::new();
        for r in relations {
            if r.len() != 2 {
                let names = r.arrows().iter().map(|a| quiver.arrow_name(*a).to_string()).collect();
                return Err(PresentationError::RelationNotLength2(names));
            }
            pairs.insert((r.arrows()[0], r.arrows()[1]));
        }
        Self::from_pairs(quiver, pairs)
    }

    pub fn from_pairs(
        quiver: Quiver,
        relations: impl IntoIterator<Item = (ArrowId, ArrowId)>,
    ) -> Result<Self, PresentationError> {
        let relations: BTreeSet<_> = relations.into_iter().collect();
        for &(a, b) in &relations {
            if quiver.target(a) != quiver.source(b) {
                return Err(PresentationError::NotComposable(
                    quiver.arrow_name(a).into(),
                    quiver.arrow_name(b).into(),
                ));
            }
        }
        check_gentle_conditions(&quiver, &relations)?;
        let mut pres = GentlePresentation { quiver, relations, kind: AlgebraKind::Gentle };
        if pres.quiver.arrow_ids().any(|a| pres.closes_cycle(a)) {
            pres.kind = AlgebraKind::LocallyGentle;
        }
        Ok(pres)
    }

    /// Walks the unique non-relation continuation from `a`; true when it
    /// returns to `a`.
    fn closes_cycle(&self, a: ArrowId) -> bool {
        let mut cur = a;
        for _ in 0..self.quiver.arrow_count() {
            match self.next_arrow(cur) {
                Some(n) if n == a => return true,
                Some(n) => cur = n,
                None => return false,
            }
        }
        false
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn relations(&self) -> &BTreeSet<(ArrowId, ArrowId)> {
        &self.relations
    }

    pub fn is_relation(&self, a: ArrowId, b: ArrowId) -> bool {
        self.relations.contains(&(a, b))
    }

    /// The unique arrow `b` with `ab` a nonzero path, if any.
    pub fn next_arrow(&self, a: ArrowId) -> Option<ArrowId> {
        let t = self.quiver.target(a);
        self.quiver.outgoing(t).iter().copied().find(|&b| !self.is_relation(a, b))
    }

    /// The unique arrow `b` with `ba` a nonzero path, if any.
    pub fn prev_arrow(&self, a: ArrowId) -> Option<ArrowId> {
        let s = self.quiver.source(a);
        self.quiver.incoming(s).iter().copied().find(|&b| !self.is_relation(b, a))
    }

    /// Whether a quiver path avoids every relation as a consecutive subword.
    pub fn is_basis_path(&self, p: &Path) -> bool {
        p.arrows().windows(2).all(|w| !self.is_relation(w[0], w[1]))
    }

    /// Product of two basis paths in the algebra: `None` when it vanishes.
    pub fn multiply(&self, p: &Path, q: &Path) -> Option<Path> {
        if p.target() != q.source() {
            return None;
        }
        if let (Some(a), Some(b)) = (p.last(), q.first()) {
            if self.is_relation(a, b) {
                return None;
            }
        }
        p.concat(q)
    }

    /// The unique basis path of length `len` starting with arrow `a`.
    pub fn path_starting_with(&self, a: ArrowId, len: usize) -> Option<Path> {
        if len == 0 {
            return None;
        }
        let mut arrows = vec![a];
        while arrows.len() < len {
            arrows.push(self.next_arrow(*arrows.last().unwrap())?);
        }
        self.quiver.path_from_arrows(&arrows)
    }

    /// The unique basis path of length `len` ending with arrow `a`.
    pub fn path_ending_with(&self, a: ArrowId, len: usize) -> Option<Path> {
        if len == 0 {
            return None;
        }
        let mut arrows = vec![a];
        while arrows.len() < len {
            arrows.push(self.prev_arrow(*arrows.last().unwrap())?);
        }
        arrows.reverse();
        self.quiver.path_from_arrows(&arrows)
    }

    /// Basis paths of length `n`, stationary paths first for `n = 0`, otherwise
    /// ordered lexicographically by arrow index.
    pub fn path_basis(&self, n: usize) -> Vec<Path> {
        if n == 0 {
            return self.quiver.vertices().map(Path::stationary).collect();
        }
        self.quiver.arrow_ids().filter_map(|a| self.path_starting_with(a, n)).collect()
    }

    /// Basis paths of length `n` with the given target.
    pub fn paths_ending_at(&self, v: VertexId, n: usize) -> Vec<Path> {
        if n == 0 {
            return vec![Path::stationary(v)];
        }
        let mut out: Vec<Path> =
            self.quiver.incoming(v).iter().filter_map(|&a| self.path_ending_with(a, n)).collect();
        out.sort();
        out
    }

    /// Basis paths of length `n` with the given source.
    pub fn paths_starting_at(&self, v: VertexId, n: usize) -> Vec<Path> {
        if n == 0 {
            return vec![Path::stationary(v)];
        }
        self.quiver.outgoing(v).iter().filter_map(|&a| self.path_starting_with(a, n)).collect()
    }

    /// The Koszul dual: same quiver, complementary quadratic relations.
    pub fn koszul_dual(&self) -> GentlePresentation {
        let complement: BTreeSet<_> = self
            .quiver
            .length_two_paths()
            .into_iter()
            .filter(|&(a, b)| !self.is_relation(a, b))
            .collect();
        GentlePresentation::from_pairs(self.quiver.clone(), complement)
            .expect("the Koszul dual of a gentle presentation is gentle")
    }

    /// `A = kQ` for an oriented cycle `Q`.
    pub fn is_cyclic_path_algebra(&self) -> bool {
        self.quiver.is_oriented_cycle() && self.relations.is_empty()
    }

    /// `A = kQ/kQ_{>=2}` for an oriented cycle `Q`.
    pub fn is_cyclic_radical_square_zero(&self) -> bool {
        self.quiver.is_oriented_cycle() && self.relations.len() == self.quiver.arrow_count()
    }

    pub fn relation_display(&self) -> Vec<String> {
        self.relations
            .iter()
            .map(|&(a, b)| format!("{}{}", self.quiver.arrow_name(a), self.quiver.arrow_name(b)))
            .collect()
    }
}

fn check_gentle_conditions(
    q: &Quiver,
    relations: &BTreeSet<(ArrowId, ArrowId)>,
) -> Result<(), PresentationError> {
    let name = |a: ArrowId| q.arrow_name(a).to_string();
    for v in q.vertices() {
        if q.indeg(v) > 2 || q.outdeg(v) > 2 {
            return Err(PresentationError::DegreeExceeded {
                vertex: q.vertex_name(v).into(),
                indeg: q.indeg(v),
                outdeg: q.outdeg(v),
            });
        }
        if q.indeg(v) == 2 {
            for &a in q.outgoing(v) {
                let present = q.incoming(v).iter().filter(|&&b| relations.contains(&(b, a))).count();
                if present != 1 {
                    return Err(PresentationError::ExactlyOneViolated {
                        vertex: q.vertex_name(v).into(),
                        arrow: name(a),
                        side: Side::Incoming,
                        compositions: q.incoming(v).iter().map(|&b| name(b) + &name(a)).collect(),
                        relations_present: present,
                    });
                }
            }
        }
        if q.outdeg(v) == 2 {
            for &a in q.incoming(v) {
                let present = q.outgoing(v).iter().filter(|&&b| relations.contains(&(a, b))).count();
                if present != 1 {
                    return Err(PresentationError::ExactlyOneViolated {
                        vertex: q.vertex_name(v).into(),
                        arrow: name(a),
                        side: Side::Outgoing,
                        compositions: q.outgoing(v).iter().map(|&b| name(a) + &name(b)).collect(),
                        relations_present: present,
                    });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn hilb_quiver_builds() {
        let p = catalog::hilb();
        assert_eq!(p.quiver().vertex_count(), 5);
        assert_eq!(p.quiver().arrow_count(), 5);
        assert_eq!(p.kind(), AlgebraKind::LocallyGentle);
    }

    #[test]
    fn single_loop_is_a_quiver() {
        let q = Quiver::new(["0"], [("a0", "0", "0")]).unwrap();
        assert!(q.is_oriented_cycle());
    }

    #[test]
    fn disconnected_loops_rejected() {
        let err = Quiver::new(["1", "2"], [("a", "1", "1"), ("b", "2", "2")]).unwrap_err();
        assert_eq!(err, QuiverError::Disconnected("2".into()));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Quiver::new(Vec::<&str>::new(), Vec::<(&str, &str, &str)>::new()).unwrap_err(),
            QuiverError::EmptyQuiver
        );
        assert!(matches!(
            Quiver::new(["1", "1"], [("a", "1", "1")]).unwrap_err(),
            QuiverError::DuplicateName(_)
        ));
        assert!(matches!(
            Quiver::new(["1"], [("a", "1", "2")]).unwrap_err(),
            QuiverError::UnknownEndpoint { .. }
        ));
    }

    #[test]
    fn dropping_c_alpha2_breaks_condition_two_at_vertex_2() {
        let q = catalog::hilb().quiver().clone();
        let a = |n| q.arrow_by_name(n).unwrap();
        let err = GentlePresentation::from_pairs(
            q.clone(),
            [(a("alpha1"), a("c")), (a("beta1"), a("beta2"))],
        )
        .unwrap_err();
        assert_eq!(err.condition(), "ii");
        match err {
            PresentationError::ExactlyOneViolated { vertex, .. } => assert_eq!(vertex, "2"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn relation_length_is_checked() {
        let q = catalog::hilb().quiver().clone();
        let p = q
            .path_from_arrows(&[q.arrow_by_name("alpha1").unwrap()])
            .unwrap();
        assert!(matches!(
            GentlePresentation::new(q, &[p]).unwrap_err(),
            PresentationError::RelationNotLength2(_)
        ));
    }

    #[test]
    fn hilb_degree_two_basis() {
        let p = catalog::hilb();
        let q = p.quiver();
        let shown: Vec<String> = p.path_basis(2).iter().map(|x| x.display(q).to_string()).collect();
        assert_eq!(shown, vec!["alpha1.alpha2", "c.c"]);
        assert_eq!(p.path_basis(0).len(), 5);
    }

    #[test]
    fn cyclic_quiver_degree_three() {
        let p = catalog::a_tilde(2);
        assert_eq!(p.path_basis(3).len(), 3);
        assert_eq!(p.kind(), AlgebraKind::LocallyGentle);
    }

    #[test]
    fn strip_prefix_and_suffix() {
        let p = catalog::hilb();
        let q = p.quiver();
        let path = p.path_basis(3).into_iter().next().unwrap();
        let head = Path::arrow(q, path.arrows()[0]);
        let tail = path.strip_prefix(q, &head).unwrap();
        assert_eq!(head.concat(&tail).unwrap(), path);
        assert_eq!(path.strip_suffix(q, &tail).unwrap(), head);
        assert_eq!(path.strip_suffix(q, &path).unwrap(), Path::stationary(path.source()));
    }
}
