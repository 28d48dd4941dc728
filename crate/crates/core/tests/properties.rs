//! Structural invariants over a corpus of small presentations, plus sampled
//! brute-force cross-checks.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use gentle_core::enumerate::{enumerate_presentations, small_quivers};
use gentle_core::invariants::{
    center, cm_basis, cohen_macaulay, global_dim, injective_dim, palindromy_shape, prime_radical, CmWitness,
};
use gentle_core::max_paths::{canonical_rotation, forbidden_sets, gamma_r, lprime_and_lplus, Walk, Witness};
use gentle_core::oracle::{
    ext_dims_bruteforce, monomial_ideal, safe_window, truncate, verify_complex, verify_free_module,
};
use gentle_core::resolutions::{ext_simple, injective_resolution, projective_resolution, ExtShape, Window};
use gentle_core::oracle::RationalMatrix;
use gentle_core::format::{emit_presentation, parse_presentation};
use gentle_core::spectrum::{
    annihilator_generators, is_subpath_of, max_at_vertex_generators, prime_inclusions, prime_spectrum, Inclusion, PrimeIdeal,
};
use gentle_core::{decompose, hilbert_series, palindromy, AlgebraKind, Dimension, GentlePresentation, MaximalPath, Path};
use proptest::prelude::*;

fn corpus() -> &'static [GentlePresentation] {
    static CORPUS: OnceLock<Vec<GentlePresentation>> = OnceLock::new();
    CORPUS.get_or_init(|| small_quivers(3, 5).iter().flat_map(enumerate_presentations).collect())
}

#[test]
fn arrows_partition_into_maximal_paths() {
    for p in corpus() {
        let q = p.quiver();
        let d = decompose(p);
        let covered: usize = d.paths().iter().map(|m| m.arrows().len()).sum();
        assert_eq!(covered, q.arrow_count());
        for a in q.arrow_ids() {
            assert_eq!(d.paths().iter().filter(|m| m.contains_arrow(a)).count(), 1);
            assert!(d.maximal_path_of(a).contains_arrow(a));
        }
    }
}

#[test]
fn infinite_paths_only_means_balanced_degrees() {
    for p in corpus() {
        let q = p.quiver();
        if decompose(p).has_finite() {
            continue;
        }
        assert!(q.vertices().all(|v| q.indeg(v) == q.outdeg(v)));
        assert!(q.arrow_ids().all(|a| p.next_arrow(a).is_some() && p.prev_arrow(a).is_some()));
    }
}

#[test]
fn koszul_duality_is_an_involution() {
    for p in corpus() {
        let d = p.koszul_dual();
        assert_eq!(d.relations().len() + p.relations().len(), p.quiver().length_two_paths().len());
        assert_eq!(&d.koszul_dual(), p);
    }
}

#[test]
fn hilbert_series_matches_path_counts() {
    for p in corpus() {
        let h = hilbert_series(p);
        for n in 0..=20 {
            assert_eq!(h.coefficient(n), p.path_basis(n).len() as i64);
        }
    }
}

#[test]
fn palindromy_matches_quiver_shape() {
    for p in corpus() {
        assert_eq!(palindromy(&hilbert_series(p)).holds, palindromy_shape(p), "{:?}", p.relation_display());
    }
}

#[test]
fn cm_basis_generates_the_hilbert_numerator() {
    for p in corpus() {
        if p.kind() != AlgebraKind::LocallyGentle || !cohen_macaulay(p).is_cm {
            continue;
        }
        assert!(matches!(cohen_macaulay(p).witness, Some(CmWitness::FreeOverSumOfArrows { .. })));
        let mut numerator = vec![0i64; 2];
        for b in cm_basis(p) {
            numerator[b.len()] += 1;
        }
        let h = hilbert_series(p);
        let mut expected = h.numerator.clone();
        expected.resize(2, 0);
        assert_eq!(h.denom_exponent, 1);
        assert_eq!(numerator, expected);
    }
}

#[test]
fn injective_dimension_equals_finite_global_dimension() {
    for p in corpus() {
        if let Dimension::Finite(g) = global_dim(p) {
            assert_eq!(injective_dim(p), g);
        }
    }
}

#[test]
fn projective_dimension_is_the_longest_thread() {
    for p in corpus() {
        let mut worst = Some(0);
        for v in p.quiver().vertices() {
            let fs = forbidden_sets(p, v);
            let c = projective_resolution(p, v, 8);
            match fs.projective_dimension() {
                Some(n) => {
                    assert_eq!(c.length(), n);
                    assert!(!c.truncated);
                    worst = worst.map(|w: usize| w.max(n));
                }
                None => {
                    assert!(c.truncated && c.periodicity.is_some());
                    worst = None;
                }
            }
        }
        let expected = worst.map_or(Dimension::Infinite, Dimension::Finite);
        assert_eq!(global_dim(p), expected);
    }
}

#[test]
fn plus_pairs_have_the_expected_shape() {
    for p in corpus() {
        let q = p.quiver();
        let (lp, plus) = lprime_and_lplus(p);
        for v in q.vertices() {
            for pw in &plus[v.0] {
                assert!(lp.contains(&pw.p));
                assert_eq!(pw.p.target(), pw.w.target());
                match pw.witness {
                    Witness::Stationary => assert_eq!(pw.w, Path::stationary(v)),
                    Witness::RightMaximal { arrow } => {
                        assert_eq!(q.source(arrow), v);
                        assert_eq!(gamma_r(p, arrow), Walk::Finite(pw.w.clone()));
                    }
                }
            }
        }
    }
}

#[test]
fn prime_radical_is_the_intersection_of_minimal_primes() {
    for p in corpus().iter().step_by(7) {
        let q = p.quiver();
        let t = truncate(p, 6);
        let radical: Vec<Path> = prime_radical(p).into_iter().map(|a| Path::arrow(q, a)).collect();
        let rad = monomial_ideal(&t, &radical);
        let primes = prime_spectrum(p);
        let mut meet: BTreeSet<usize> = (0..t.len()).collect();
        for e in &primes.entries {
            if let PrimeIdeal::MaxAtVertex { .. } | PrimeIdeal::AnnInfinite { .. } = e.ideal {
                let i = monomial_ideal(&t, e.ideal.generators());
                meet = meet.intersection(&i).copied().collect();
            }
        }
        assert_eq!(rad, meet, "{:?}", p.relation_display());
        let longest = decompose(p).finite().map(Path::len).max().unwrap_or(0);
        assert!(rad.iter().all(|&i| t.degree(i) <= longest));
    }
}

#[test]
fn annihilator_generators_kill_the_cycle() {
    for p in corpus().iter().step_by(5) {
        let q = p.quiver();
        let n = 8;
        let t = truncate(p, n);
        for gamma in decompose(p).paths().iter().filter(|m| m.is_infinite()) {
            let gens = annihilator_generators(p, gamma);
            let span = monomial_ideal(&t, &gens);
            for i in 0..t.len() {
                assert_eq!(span.contains(&i), !is_subpath_of(q, t.path(i), gamma), "{}", t.path(i).display(q));
            }
            for g in &gens {
                for w in (0..t.len()).filter(|&i| t.degree(i) > 0 && is_subpath_of(q, t.path(i), gamma)) {
                    if t.degree(w) + g.len() <= n {
                        let gi = t.index_of(g).unwrap();
                        assert_eq!(t.product(gi, w), None);
                        assert_eq!(t.product(w, gi), None);
                    }
                }
            }
        }
    }
}

#[test]
fn maximal_ideals_have_codimension_one() {
    for p in corpus().iter().step_by(11) {
        let q = p.quiver();
        let t = truncate(p, 5);
        for v in q.vertices() {
            let m = monomial_ideal(&t, &max_at_vertex_generators(q, v));
            for i in 0..t.len() {
                assert_eq!(m.contains(&i), *t.path(i) != Path::stationary(v), "{}", t.path(i).display(q));
            }
        }
    }
}

#[test]
fn inclusions_between_monomial_primes_are_exactly_the_listed_ones() {
    for p in corpus().iter().step_by(3) {
        let t = truncate(p, 5);
        let primes = prime_spectrum(p);
        let listed = prime_inclusions(p, &primes);
        let ideals: Vec<Option<BTreeSet<usize>>> = primes
            .entries
            .iter()
            .map(|e| (!matches!(e.ideal, PrimeIdeal::PolyFamily { .. })).then(|| monomial_ideal(&t, e.ideal.generators())))
            .collect();
        for (i, a) in ideals.iter().enumerate() {
            for (j, b) in ideals.iter().enumerate() {
                let (Some(a), Some(b)) = (a, b) else { continue };
                if i == j {
                    continue;
                }
                let edge = listed.contains(&Inclusion { smaller: i, larger: j });
                assert_eq!(a.is_subset(b), edge, "{i} -> {j} in {:?}", p.relation_display());
            }
        }
    }
}

#[test]
fn text_format_round_trips() {
    for p in corpus() {
        assert_eq!(&parse_presentation(&emit_presentation(p)).unwrap(), p);
    }
}

fn sample() -> impl Strategy<Value = &'static GentlePresentation> {
    (0..corpus().len()).prop_map(|i| &corpus()[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn projective_resolutions_are_exact(p in sample()) {
        for v in p.quiver().vertices() {
            let c = projective_resolution(p, v, 6);
            let (lo, hi) = safe_window(&c, 10, -6, 6).unwrap();
            let r = verify_complex(p, &c, lo, hi, 10).unwrap();
            prop_assert!(r.is_exact(), "{:?}", r.failures);
            // Euler characteristic of the augmented complex vanishes degreewise.
            if !c.truncated {
                for j in 0..r.dims[0].len() {
                    let chi: i64 = r.dims.iter().enumerate().map(|(k, d)| if k % 2 == 0 { d[j] as i64 } else { -(d[j] as i64) }).sum();
                    prop_assert_eq!(chi, 0);
                }
            }
        }
    }

    #[test]
    fn injective_resolutions_are_exact(p in sample()) {
        for v in p.quiver().vertices() {
            let r = injective_resolution(p, v).unwrap();
            let (lo, hi) = safe_window(&r.complex, 10, -5, 5).unwrap();
            let rep = verify_complex(p, &r.complex, lo, hi, 10).unwrap();
            prop_assert!(rep.is_exact(), "{:?}", rep.failures);
        }
    }

    #[test]
    fn ext_descriptors_match_brute_force(p in sample()) {
        let w = Window { lo: -4, hi: 4, truncation: 12 };
        for v in p.quiver().vertices() {
            for i in 0..=3 {
                let e = ext_simple(p, v, i, w).unwrap();
                let dims = ext_dims_bruteforce(p, v, i, w).unwrap();
                if let ExtShape::OracleDims { dims: d, .. } = &e.shape {
                    prop_assert_eq!(d, &dims);
                }
                let predicted: Vec<usize> = w.degrees().map(|d| e.dim(p, d)).collect();
                prop_assert_eq!(predicted, dims, "v={:?} i={}", v, i);
            }
        }
    }

    #[test]
    fn cyclic_center_is_free_of_rank_arrows_squared(p in sample()) {
        let cd = center(p);
        if let Some(fb) = &cd.free_basis {
            let q = p.quiver();
            let t = truncate(p, 9);
            let m = &cd.central_sums[0];
            let x = t.sum_of_paths(&m.summands);
            prop_assert_eq!(fb.rank, q.arrow_count() * q.arrow_count());
            prop_assert_eq!(fb.basis.len(), fb.rank);
            prop_assert!(verify_free_module(&t, &fb.basis, &x, m.period()).is_ok());
        }
    }

    #[test]
    fn rank_ignores_basis_order(p in sample(), seed in any::<u64>()) {
        let t = truncate(p, 5);
        for n in 0..5 {
            let rows: Vec<Vec<_>> = t.basis(n).iter().map(|b| {
                let x = t.mul(&t.element(b), &t.sum_of_arrows());
                t.component(&x, n + 1)
            }).collect();
            if rows.is_empty() { continue; }
            let r1 = RationalMatrix::rank_of_vectors(&rows, t.dim(n + 1));
            let mut perm = rows.clone();
            let k = perm.len();
            perm.rotate_left((seed as usize) % k);
            let perm: Vec<Vec<_>> = perm.into_iter().map(|mut r| { let l = r.len(); if l > 0 { r.rotate_right((seed as usize >> 8) % l); } r }).collect();
            prop_assert_eq!(r1, RationalMatrix::rank_of_vectors(&perm, t.dim(n + 1)));
        }
    }
}

#[test]
fn infinite_paths_are_canonically_rotated() {
    for p in corpus() {
        for m in decompose(p).paths() {
            if let MaximalPath::Infinite(c) = m {
                assert!(c.is_cycle());
                assert_eq!(&canonical_rotation(p.quiver(), c), c);
            }
        }
    }
}
