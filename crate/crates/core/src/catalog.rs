//! Small named presentations that show up repeatedly in tests, docs and the CLI.

use crate::quiver::{GentlePresentation, Quiver};

/// Builds a presentation from string data, panicking on invalid input. Only
/// meant for hard-coded, known-good algebras.
pub fn build(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[(&str, &str)]) -> GentlePresentation {
    let quiver = Quiver::new(vertices.iter().copied(), arrows.iter().copied()).expect("catalog quiver is valid");
    let pairs: Vec<_> = relations
        .iter()
        .map(|(a, b)| {
            (
                quiver.arrow_by_name(a).expect("catalog relation arrow exists"),
                quiver.arrow_by_name(b).expect("catalog relation arrow exists"),
            )
        })
        .collect();
    GentlePresentation::from_pairs(quiver, pairs).expect("catalog presentation is gentle")
}

/// `kQ/<alpha1 c, c alpha2, beta1 beta2>` on a five-vertex quiver with a loop at 2.
pub fn hilb() -> GentlePresentation {
    build(
        &["1", "2", "3", "4", "5"],
        &[
            ("alpha2", "2", "1"),
            ("alpha1", "3", "2"),
            ("c", "2", "2"),
            ("beta1", "3", "4"),
            ("beta2", "4", "5"),
        ],
        &[("alpha1", "c"), ("c", "alpha2"), ("beta1", "beta2")],
    )
}

fn cycle(n: usize, all_relations: bool) -> GentlePresentation {
    let names: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> = (0..=n)
        .map(|i| (format!("a{i}"), i.to_string(), ((i + 1) % (n + 1)).to_string()))
        .collect();
    let quiver = Quiver::new(names, arrows).expect("cycle quiver is valid");
    let relations = if all_relations { quiver.length_two_paths() } else { Vec::new() };
    GentlePresentation::from_pairs(quiver, relations).expect("cycle presentation is gentle")
}

/// The path algebra of the oriented cycle with `n + 1` vertices.
pub fn a_tilde(n: usize) -> GentlePresentation {
    cycle(n, false)
}

/// The oriented cycle with every length-two path killed.
pub fn a_tilde_dual(n: usize) -> GentlePresentation {
    cycle(n, true)
}

/// `k[x,y]/<xy, yx>`.
pub fn two_loops() -> GentlePresentation {
    build(&["1"], &[("x", "1", "1"), ("y", "1", "1")], &[("x", "y"), ("y", "x")])
}

/// `k<x,y>/<x^2, y^2>`.
pub fn two_loops_dual() -> GentlePresentation {
    build(&["1"], &[("x", "1", "1"), ("y", "1", "1")], &[("x", "x"), ("y", "y")])
}

/// Loops `a` at 1 and `d` at 3 joined by `b: 1 -> 2`, `c: 2 -> 3`, with `ab = cd = 0`.
pub fn chain_loops() -> GentlePresentation {
    build(
        &["1", "2", "3"],
        &[("a", "1", "1"), ("b", "1", "2"), ("c", "2", "3"), ("d", "3", "3")],
        &[("a", "b"), ("c", "d")],
    )
}

/// Loops `c1` at 1 and `c2` at 3 joined by `alpha1: 1 -> 2`, `alpha2: 2 -> 3`.
pub fn c2c2() -> GentlePresentation {
    build(
        &["1", "2", "3"],
        &[("alpha1", "1", "2"), ("alpha2", "2", "3"), ("c1", "1", "1"), ("c2", "3", "3")],
        &[("c1", "alpha1"), ("alpha1", "alpha2"), ("alpha2", "c2")],
    )
}

/// `alpha: 1 -> 2` feeding a two-cycle `beta1: 2 -> 3`, `beta2: 3 -> 2` with `beta2 beta1 = 0`.
pub fn repeated_thread() -> GentlePresentation {
    build(
        &["1", "2", "3"],
        &[("alpha", "1", "2"), ("beta1", "2", "3"), ("beta2", "3", "2")],
        &[("beta2", "beta1")],
    )
}

/// A loop `c` at 1 with `c^2 = 0`, plus `alpha: 1 -> 2` and `beta: 3 -> 2`.
pub fn repeated_witness() -> GentlePresentation {
    build(
        &["1", "2", "3"],
        &[("alpha", "1", "2"), ("c", "1", "1"), ("beta", "3", "2")],
        &[("c", "c")],
    )
}

/// The Kronecker quiver with no relations.
pub fn kronecker() -> GentlePresentation {
    build(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[])
}

/// `k[c]/<c^2>`.
pub fn dual_numbers() -> GentlePresentation {
    build(&["1"], &[("c", "1", "1")], &[("c", "c")])
}

/// Looks up a catalog entry by its CLI name.
pub fn by_name(name: &str) -> Option<GentlePresentation> {
    let (base, n) = match name.rsplit_once('-') {
        Some((b, n)) if n.chars().all(|c| c.is_ascii_digit()) => (b, n.parse().ok()),
        _ => (name, None),
    };
    Some(match (base, n) {
        ("hilb", None) => hilb(),
        ("a-tilde", Some(n)) => a_tilde(n),
        ("a-tilde-dual", Some(n)) => a_tilde_dual(n),
        ("two-loops", None) => two_loops(),
        ("two-loops-dual", None) => two_loops_dual(),
        ("chain-loops", None) => chain_loops(),
        ("c2c2", None) => c2c2(),
        ("repeated-thread", None) => repeated_thread(),
        ("repeated-witness", None) => repeated_witness(),
        ("kronecker", None) => kronecker(),
        ("dual-numbers", None) => dual_numbers(),
        _ => return None,
    })
}

pub const NAMES: &[&str] = &[
    "hilb",
    "a-tilde-N",
    "a-tilde-dual-N",
    "two-loops",
    "two-loops-dual",
    "chain-loops",
    "c2c2",
    "repeated-thread",
    "repeated-witness",
    "kronecker",
    "dual-numbers",
];
