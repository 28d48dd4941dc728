//! All relation sets making a fixed quiver (locally) gentle.

use thiserror::Error;

use crate::quiver::{ArrowId, GentlePresentation, Quiver};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("the input must be a bare quiver, but it declares {0} relation(s)")]
    RelationsPresent(usize),
}

/// Relation sets at one vertex satisfying the local exactly-one conditions:
/// each incoming arrow has at most one allowed and at most one forbidden
/// continuation, and dually for outgoing arrows.
fn local_choices(q: &Quiver, v: crate::quiver::VertexId) -> Vec<Vec<(ArrowId, ArrowId)>> {
    let ins = q.incoming(v);
    let outs = q.outgoing(v);
    let comps: Vec<(ArrowId, ArrowId)> = ins.iter().flat_map(|&a| outs.iter().map(move |&b| (a, b))).collect();
    if comps.len() > 16 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << comps.len()) {
        let rel = |k: usize| mask & (1 << k) != 0;
        let ok_in = ins.iter().all(|&a| {
            let (r, f): (Vec<usize>, Vec<usize>) = (0..comps.len()).filter(|&k| comps[k].0 == a).partition(|&k| rel(k));
            r.len() <= 1 && f.len() <= 1
        });
        let ok_out = outs.iter().all(|&b| {
            let (r, f): (Vec<usize>, Vec<usize>) = (0..comps.len()).filter(|&k| comps[k].1 == b).partition(|&k| rel(k));
            r.len() <= 1 && f.len() <= 1
        });
        if ok_in && ok_out {
            out.push((0..comps.len()).filter(|&k| rel(k)).map(|k| comps[k]).collect());
        }
    }
    out
}

/// Every (locally) gentle presentation on `q`, in a deterministic order: the
/// product of per-vertex choices, each ordered by bitmask.
pub fn enumerate_presentations(q: &Quiver) -> Vec<GentlePresentation> {
    let per_vertex: Vec<Vec<Vec<(ArrowId, ArrowId)>>> = q.vertices().map(|v| local_choices(q, v)).collect();
    let mut acc: Vec<Vec<(ArrowId, ArrowId)>> = vec![Vec::new()];
    for choices in &per_vertex {
        acc = acc
            .iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut r = prefix.clone();
                    r.extend(c.iter().copied());
                    r
                })
            })
            .collect();
    }
    acc.into_iter().filter_map(|rels| GentlePresentation::from_pairs(q.clone(), rels).ok()).collect()
}

/// As [`enumerate_presentations`], rejecting inputs that already carry
/// relations.
pub fn enumerate_from_file(raw: &crate::format::RawPresentation) -> Result<Vec<GentlePresentation>, crate::format::FormatError> {
    if !raw.relations.is_empty() {
        return Err(crate::format::FormatError::Enumerate(EnumerateError::RelationsPresent(raw.relations.len())));
    }
    Ok(enumerate_presentations(&raw.quiver()?))
}

/// Every connected quiver with `1..=max_vertices` vertices and
/// `1..=max_arrows` arrows, up to the order in which arrows are listed.
/// Vertices are named `1`, `2`, ...; arrows `a1`, `a2`, ...
pub fn small_quivers(max_vertices: usize, max_arrows: usize) -> Vec<Quiver> {
    let mut out = Vec::new();
    for nv in 1..=max_vertices {
        let names: Vec<String> = (1..=nv).map(|i| i.to_string()).collect();
        let slots: Vec<(usize, usize)> = (0..nv).flat_map(|s| (0..nv).map(move |t| (s, t))).collect();
        for na in 1..=max_arrows {
            let mut chosen = Vec::new();
            multisets(slots.len(), na, 0, &mut chosen, &mut |idx| {
                let arrows = idx
                    .iter()
                    .enumerate()
                    .map(|(k, &s)| (format!("a{}", k + 1), names[slots[s].0].clone(), names[slots[s].1].clone()));
                if let Ok(q) = Quiver::new(names.clone(), arrows) {
                    out.push(q);
                }
            });
        }
    }
    out
}

/// Calls `f` on every non-decreasing sequence of length `k` over `0..n`
/// whose entries are at least `from`.
fn multisets(n: usize, k: usize, from: usize, chosen: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for i in from..n {
        chosen.push(i);
        multisets(n, k, i, chosen, f);
        chosen.pop();
    }
}
