//! Maximal paths, forbidden threads and the index sets used by the
//! injective resolutions.

use std::fmt;

use serde::Serialize;

use crate::quiver::{ArrowId, GentlePresentation, Path, Quiver, VertexId};

/// The result of walking right (or left) from an arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Walk {
    /// A right (resp. left) maximal path.
    Finite(Path),
    /// The primitive cycle beginning (resp. ending) with the arrow.
    Cycle(Path),
}

impl Walk {
    pub fn path(&self) -> &Path {
        match self {
            Walk::Finite(p) | Walk::Cycle(p) => p,
        }
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self, Walk::Cycle(_))
    }
}

/// `gamma_r(a)`: the right maximal path starting with `a`, or the primitive
/// cycle starting with `a` when the maximal path through `a` is infinite.
pub fn gamma_r(pres: &GentlePresentation, a: ArrowId) -> Walk {
    let q = pres.quiver();
    let mut arrows = vec![a];
    loop {
        match pres.next_arrow(*arrows.last().unwrap()) {
            Some(n) if n == a => return Walk::Cycle(q.path_from_arrows(&arrows).unwrap()),
            Some(n) => {
                debug_assert!(!arrows.contains(&n), "walk re-entered away from its start");
                arrows.push(n);
            }
            None => return Walk::Finite(q.path_from_arrows(&arrows).unwrap()),
        }
    }
}

/// `gamma_l(a)`: the left maximal path ending with `a`, or the primitive cycle
/// ending with `a`.
pub fn gamma_l(pres: &GentlePresentation, a: ArrowId) -> Walk {
    let q = pres.quiver();
    let mut rev = vec![a];
    loop {
        match pres.prev_arrow(*rev.last().unwrap()) {
            Some(n) if n == a => {
                rev.reverse();
                return Walk::Cycle(q.path_from_arrows(&rev).unwrap());
            }
            Some(n) => rev.push(n),
            None => {
                rev.reverse();
                return Walk::Finite(q.path_from_arrows(&rev).unwrap());
            }
        }
    }
}

/// A maximal path: finite, or infinite and stored as its primitive cycle
/// rotated to start at the smallest arrow index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MaximalPath {
    Finite(Path),
    Infinite(Path),
}

impl MaximalPath {
    pub fn path(&self) -> &Path {
        match self {
            MaximalPath::Finite(p) | MaximalPath::Infinite(p) => p,
        }
    }

    pub fn arrows(&self) -> &[ArrowId] {
        self.path().arrows()
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, MaximalPath::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        !self.is_finite()
    }

    /// Length of a finite maximal path, period of an infinite one.
    pub fn len(&self) -> usize {
        self.path().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_arrow(&self, a: ArrowId) -> bool {
        self.arrows().contains(&a)
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> MaximalPathDisplay<'a> {
        MaximalPathDisplay { path: self, quiver: q }
    }
}

pub struct MaximalPathDisplay<'a> {
    path: &'a MaximalPath,
    quiver: &'a Quiver,
}

impl fmt::Display for MaximalPathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.path {
            MaximalPath::Finite(p) => write!(f, "{}", p.display(self.quiver)),
            MaximalPath::Infinite(p) => write!(f, "({})^inf", p.display(self.quiver)),
        }
    }
}

/// Rotates a cycle so it starts at its smallest arrow index.
pub fn canonical_rotation(q: &Quiver, cycle: &Path) -> Path {
    let arrows = cycle.arrows();
    let start = (0..arrows.len()).min_by_key(|&i| arrows[i]).unwrap_or(0);
    let rotated: Vec<ArrowId> = arrows[start..].iter().chain(&arrows[..start]).copied().collect();
    q.path_from_arrows(&rotated).expect("rotation of a cycle is a cycle")
}

/// The partition of the arrows into maximal paths.
#[derive(Clone, Debug)]
pub struct Decomposition {
    paths: Vec<MaximalPath>,
    owner: Vec<usize>,
}

impl Decomposition {
    pub fn paths(&self) -> &[MaximalPath] {
        &self.paths
    }

    /// Index into [`Decomposition::paths`] of the maximal path containing `a`.
    pub fn owner(&self, a: ArrowId) -> usize {
        self.owner[a.0]
    }

    pub fn maximal_path_of(&self, a: ArrowId) -> &MaximalPath {
        &self.paths[self.owner[a.0]]
    }

    pub fn finite(&self) -> impl Iterator<Item = &Path> {
        self.paths.iter().filter_map(|m| match m {
            MaximalPath::Finite(p) => Some(p),
            MaximalPath::Infinite(_) => None,
        })
    }

    pub fn infinite(&self) -> impl Iterator<Item = &Path> {
        self.paths.iter().filter_map(|m| match m {
            MaximalPath::Infinite(p) => Some(p),
            MaximalPath::Finite(_) => None,
        })
    }

    pub fn has_finite(&self) -> bool {
        self.finite().next().is_some()
    }

    pub fn has_infinite(&self) -> bool {
        self.infinite().next().is_some()
    }

    /// Length of the longest finite maximal path, `None` if there is an
    /// infinite one.
    pub fn longest(&self) -> Option<usize> {
        if self.has_infinite() {
            None
        } else {
            Some(self.paths.iter().map(MaximalPath::len).max().unwrap_or(0))
        }
    }
}

/// Splits the arrows into maximal paths, listed by their smallest arrow.
pub fn decompose(pres: &GentlePresentation) -> Decomposition {
    let q = pres.quiver();
    let mut owner = vec![usize::MAX; q.arrow_count()];
    let mut paths = Vec::new();
    for a in q.arrow_ids() {
        if owner[a.0] != usize::MAX {
            continue;
        }
        let mp = match gamma_r(pres, a) {
            Walk::Cycle(c) => MaximalPath::Infinite(canonical_rotation(q, &c)),
            Walk::Finite(right) => {
                let left = gamma_l(pres, a);
                let prefix = &left.path().arrows()[..left.path().len() - 1];
                let mut arrows = prefix.to_vec();
                arrows.extend_from_slice(right.arrows());
                MaximalPath::Finite(q.path_from_arrows(&arrows).unwrap())
            }
        };
        for b in mp.arrows() {
            owner[b.0] = paths.len();
        }
        paths.push(mp);
    }
    Decomposition { paths, owner }
}

/// Vertices visited by a path, in order of first visit.
pub fn path_vertices(q: &Quiver, p: &Path) -> Vec<VertexId> {
    let mut out = vec![p.source()];
    for &a in p.arrows() {
        let t = q.target(a);
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

/// A forbidden thread: the walk in the Koszul dual starting at an arrow out of
/// the base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thread {
    /// The arrows of the right maximal forbidden path, or of the primitive dual
    /// cycle when the thread never terminates.
    pub arrows: Vec<ArrowId>,
    pub periodic: bool,
}

impl Thread {
    pub fn first(&self) -> ArrowId {
        self.arrows[0]
    }

    /// The `k`-th arrow (1-based) of the thread, if the thread is that long.
    pub fn arrow_at(&self, k: usize) -> Option<ArrowId> {
        if k == 0 {
            return None;
        }
        if self.periodic {
            Some(self.arrows[(k - 1) % self.arrows.len()])
        } else {
            self.arrows.get(k - 1).copied()
        }
    }

    /// Whether the thread has a forbidden path of length `k`.
    pub fn reaches(&self, k: usize) -> bool {
        self.periodic || k <= self.arrows.len()
    }

    /// Length of the terminating forbidden path, `None` when periodic.
    pub fn terminal_length(&self) -> Option<usize> {
        (!self.periodic).then_some(self.arrows.len())
    }

    pub fn prefix(&self, q: &Quiver, k: usize) -> Option<Path> {
        if !self.reaches(k) || k == 0 {
            return None;
        }
        let arrows: Vec<ArrowId> = (1..=k).map(|i| self.arrow_at(i).unwrap()).collect();
        q.path_from_arrows(&arrows)
    }
}

/// `R(v)` stored thread by thread.
#[derive(Clone, Debug)]
pub struct ForbiddenSets {
    pub vertex: VertexId,
    pub threads: Vec<Thread>,
}

impl ForbiddenSets {
    /// `R(v)_k` for `k > 0`, with the thread index of each path.
    pub fn level(&self, q: &Quiver, k: usize) -> Vec<(usize, Path)> {
        if k == 0 {
            return Vec::new();
        }
        self.threads
            .iter()
            .enumerate()
            .filter_map(|(i, t)| t.prefix(q, k).map(|p| (i, p)))
            .collect()
    }

    /// `R'(v)_k`: right maximal forbidden paths of length `k` starting at `v`.
    pub fn right_maximal(&self, q: &Quiver, k: usize) -> Vec<(usize, Path)> {
        self.threads
            .iter()
            .enumerate()
            .filter(|(_, t)| t.terminal_length() == Some(k))
            .filter_map(|(i, t)| t.prefix(q, k).map(|p| (i, p)))
            .collect()
    }

    /// Projective dimension of the simple at `v`: `None` when infinite.
    pub fn projective_dimension(&self) -> Option<usize> {
        let mut best = 0;
        for t in &self.threads {
            best = best.max(t.terminal_length()?);
        }
        Some(best)
    }

    pub fn is_finite(&self) -> bool {
        self.threads.iter().all(|t| !t.periodic)
    }
}

/// Computes the forbidden threads out of `v`, i.e. the arrow walks of the
/// Koszul dual starting at each arrow with source `v`.
pub fn forbidden_sets(pres: &GentlePresentation, v: VertexId) -> ForbiddenSets {
    let q = pres.quiver();
    let threads = q
        .outgoing(v)
        .iter()
        .map(|&a| {
            let mut arrows = vec![a];
            loop {
                let last = *arrows.last().unwrap();
                let next = q.outgoing(q.target(last)).iter().copied().find(|&b| pres.is_relation(last, b));
                match next {
                    None => break Thread { arrows, periodic: false },
                    Some(b) if arrows.contains(&b) => {
                        debug_assert_eq!(b, a, "a dual walk can only close up at its start");
                        break Thread { arrows, periodic: true };
                    }
                    Some(b) => arrows.push(b),
                }
            }
        })
        .collect();
    ForbiddenSets { vertex: v, threads }
}

/// The second component of a pair in `L+(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `w = e_v`.
    Stationary,
    /// `w = gamma_r(arrow)`.
    RightMaximal { arrow: ArrowId },
}

/// An element `(p, w)` of `L+(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlusPair {
    pub p: Path,
    pub w: Path,
    pub witness: Witness,
}

impl PlusPair {
    /// The arrow `p_{-i}`, counting from the end of `p` (1-based).
    pub fn p_minus(&self, i: usize) -> ArrowId {
        let arrows = self.p.arrows();
        arrows[arrows.len() - i]
    }
}

/// `L'`: the finite maximal forbidden paths.
pub fn lprime(pres: &GentlePresentation) -> Vec<Path> {
    decompose(&pres.koszul_dual()).finite().cloned().collect()
}

/// `L+(v)` for one vertex, ordered by `p` (as in `L'`), then `e_v` before the
/// right maximal witnesses in arrow declaration order.
pub fn lplus(pres: &GentlePresentation, lp: &[Path], v: VertexId) -> Vec<PlusPair> {
    let q = pres.quiver();
    let mut out = Vec::new();
    for p in lp {
        let last = p.last().expect("maximal forbidden paths have positive length");
        if p.target() == v {
            out.push(PlusPair { p: p.clone(), w: Path::stationary(v), witness: Witness::Stationary });
        }
        for &a in q.outgoing(v) {
            if let Walk::Finite(w) = gamma_r(pres, a) {
                if w.target() == p.target() && w.last() != Some(last) {
                    out.push(PlusPair { p: p.clone(), w, witness: Witness::RightMaximal { arrow: a } });
                }
            }
        }
    }
    out
}

/// `L'` together with `L+(v)` for every vertex.
pub fn lprime_and_lplus(pres: &GentlePresentation) -> (Vec<Path>, Vec<Vec<PlusPair>>) {
    let lp = lprime(pres);
    let plus = pres.quiver().vertices().map(|v| lplus(pres, &lp, v)).collect();
    (lp, plus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn names(q: &Quiver, p: &Path) -> String {
        p.display(q).to_string()
    }

    #[test]
    fn hilb_gamma_r() {
        let p = catalog::hilb();
        let q = p.quiver();
        let a1 = q.arrow_by_name("alpha1").unwrap();
        assert_eq!(gamma_r(&p, a1), Walk::Finite(q.path_from_arrows(&[a1, q.arrow_by_name("alpha2").unwrap()]).unwrap()));
        let c = q.arrow_by_name("c").unwrap();
        assert!(gamma_r(&p, c).is_cycle());
        assert_eq!(gamma_l(&p, q.arrow_by_name("alpha2").unwrap()).path().len(), 2);
    }

    #[test]
    fn hilb_decomposition() {
        let p = catalog::hilb();
        let q = p.quiver();
        let d = decompose(&p);
        let finite: Vec<String> = d.finite().map(|x| names(q, x)).collect();
        let infinite: Vec<String> = d.infinite().map(|x| names(q, x)).collect();
        assert_eq!(finite, vec!["alpha1.alpha2", "beta1", "beta2"]);
        assert_eq!(infinite, vec!["c"]);
    }

    #[test]
    fn chain_loops_decomposition() {
        let p = catalog::chain_loops();
        let q = p.quiver();
        let d = decompose(&p);
        assert_eq!(d.finite().map(|x| names(q, x)).collect::<Vec<_>>(), vec!["b.c"]);
        assert_eq!(d.infinite().map(|x| names(q, x)).collect::<Vec<_>>(), vec!["a", "d"]);
    }

    #[test]
    fn cycle_rotation_is_canonical() {
        let p = catalog::a_tilde(3);
        let q = p.quiver();
        for a in q.arrow_ids() {
            let Walk::Cycle(c) = gamma_r(&p, a) else { panic!("expected a cycle") };
            assert_eq!(c.first(), Some(a));
            assert_eq!(canonical_rotation(q, &c).first(), Some(ArrowId(0)));
        }
        assert_eq!(decompose(&p).paths().len(), 1);
    }

    #[test]
    fn dual_of_cycle_has_single_arrow_paths() {
        let d = decompose(&catalog::a_tilde_dual(2));
        assert_eq!(d.paths().len(), 3);
        assert!(d.paths().iter().all(|m| m.is_finite() && m.len() == 1));
    }

    #[test]
    fn koszul_dual_examples() {
        let tl = catalog::two_loops();
        assert_eq!(tl.koszul_dual().relations(), catalog::two_loops_dual().relations());
        assert_eq!(catalog::a_tilde(2).koszul_dual().relations(), catalog::a_tilde_dual(2).relations());
        assert_eq!(tl.koszul_dual().koszul_dual(), tl);
    }

    #[test]
    fn hilb_forbidden_paths_from_3() {
        let p = catalog::hilb();
        let q = p.quiver();
        let fs = forbidden_sets(&p, q.vertex_by_name("3").unwrap());
        let all: Vec<String> = (1..=4)
            .flat_map(|k| fs.level(q, k))
            .map(|(_, x)| names(q, &x))
            .collect();
        assert_eq!(all, vec!["alpha1", "beta1", "alpha1.c", "beta1.beta2", "alpha1.c.alpha2"]);
        assert_eq!(fs.projective_dimension(), Some(3));
        assert_eq!(fs.right_maximal(q, 2).len(), 1);
    }

    #[test]
    fn sink_has_no_threads() {
        let p = catalog::hilb();
        let fs = forbidden_sets(&p, p.quiver().vertex_by_name("1").unwrap());
        assert!(fs.threads.is_empty());
        assert_eq!(fs.projective_dimension(), Some(0));
    }

    #[test]
    fn two_loops_threads_are_periodic() {
        let p = catalog::two_loops();
        let q = p.quiver();
        let fs = forbidden_sets(&p, VertexId(0));
        assert!(fs.threads.iter().all(|t| t.periodic && t.arrows.len() == 2));
        let lvl: Vec<String> = fs.level(q, 3).into_iter().map(|(_, x)| names(q, &x)).collect();
        assert_eq!(lvl, vec!["x.y.x", "y.x.y"]);
        assert_eq!(fs.projective_dimension(), None);
    }

    #[test]
    fn c2c2_lplus() {
        let p = catalog::c2c2();
        let q = p.quiver();
        let (lp, plus) = lprime_and_lplus(&p);
        assert_eq!(lp.iter().map(|x| names(q, x)).collect::<Vec<_>>(), vec!["c1.alpha1.alpha2.c2"]);
        assert!(plus[0].is_empty());
        assert_eq!(plus[1].len(), 1);
        assert_eq!(names(q, &plus[1][0].w), "alpha2");
        assert_eq!(plus[2].len(), 1);
        assert_eq!(plus[2][0].witness, Witness::Stationary);
    }

    #[test]
    fn repeated_thread_lplus() {
        let p = catalog::repeated_thread();
        let q = p.quiver();
        let (_, plus) = lprime_and_lplus(&p);
        let at2: Vec<(String, String)> = plus[1].iter().map(|x| (names(q, &x.p), names(q, &x.w))).collect();
        assert_eq!(at2, vec![("alpha".into(), "e_2".into()), ("alpha".into(), "beta1.beta2".into())]);
    }

    #[test]
    fn repeated_witness_lplus() {
        let p = catalog::repeated_witness();
        let q = p.quiver();
        let (_, plus) = lprime_and_lplus(&p);
        let at1: Vec<(String, String)> = plus[0].iter().map(|x| (names(q, &x.p), names(q, &x.w))).collect();
        assert_eq!(at1, vec![("beta".into(), "alpha".into()), ("beta".into(), "c.alpha".into())]);
    }

    #[test]
    fn double_degree_quiver_has_empty_lplus() {
        let (lp, plus) = lprime_and_lplus(&catalog::two_loops());
        assert!(lp.is_empty());
        assert!(plus.iter().all(Vec::is_empty));
    }
}
