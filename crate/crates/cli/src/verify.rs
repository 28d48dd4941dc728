//! The `verify` command: every closed-form answer against its brute-force
//! counterpart on the truncated algebra.

use gentle_core::invariants::{as_classification, center, AsStatus};
use gentle_core::max_paths::decompose;
use gentle_core::oracle::{
    as_gorenstein_bruteforce, ext_dims_bruteforce, safe_window, truncate, verify_center, verify_cm_witness, verify_complex,
    GorensteinWitness,
};
use gentle_core::resolutions::{ext_simple, injective_resolution, projective_resolution, GradedComplex, Window};
use gentle_core::{hilbert_series, AlgebraKind, GentlePresentation};

use crate::report::{CheckReport, CheckStatus};

fn check(name: String, result: Result<String, String>) -> CheckReport {
    match result {
        Ok(detail) => CheckReport { name, status: CheckStatus::Pass, detail },
        Err(detail) => CheckReport { name, status: CheckStatus::Fail, detail },
    }
}

fn skipped(name: String, detail: String) -> CheckReport {
    CheckReport { name, status: CheckStatus::Skipped, detail }
}

fn exactness(p: &GentlePresentation, c: &GradedComplex, n: usize) -> Result<String, String> {
    let Some((lo, hi)) = safe_window(c, n, -6, 6) else {
        return Ok("no internal degree fits the truncation".into());
    };
    let report = verify_complex(p, c, lo, hi, n).map_err(|e| e.to_string())?;
    match report.failures.first() {
        None => Ok(format!("exact on internal degrees [{lo}, {hi}]")),
        Some(f) => Err(format!("{f} ({} failures)", report.failures.len())),
    }
}

pub fn run_checks(p: &GentlePresentation, n: usize, steps: usize) -> Vec<CheckReport> {
    let q = p.quiver();
    let mut out = Vec::new();

    let h = hilbert_series(p);
    let counted: Vec<i64> = (0..=n).map(|d| p.path_basis(d).len() as i64).collect();
    out.push(check(
        "hilbert series".into(),
        if h.coefficients(n + 1) == counted {
            Ok(format!("{h} matches path counts up to degree {n}"))
        } else {
            Err(format!("predicted {:?}, counted {:?}", h.coefficients(n + 1), counted))
        },
    ));

    for v in q.vertices() {
        let name = q.vertex_name(v);
        let c = projective_resolution(p, v, steps.min(n));
        out.push(check(format!("projective resolution of S({name})"), exactness(p, &c, n)));
    }
    for v in q.vertices() {
        let name = format!("injective resolution of e_{}A", q.vertex_name(v));
        match injective_resolution(p, v) {
            Ok(r) => out.push(check(name, exactness(p, &r.complex, n))),
            Err(e) => out.push(skipped(name, e.to_string())),
        }
    }

    for i in 0..=3usize {
        let hi = 4.min(n as i64 - i as i64 - 1);
        if hi < -4 {
            out.push(skipped(format!("Ext^{i}"), format!("truncation {n} too small")));
            continue;
        }
        let w = Window { lo: -4, hi, truncation: n };
        let result = q.vertices().try_for_each(|v| {
            let predicted = ext_simple(p, v, i, w).map_err(|e| e.to_string())?;
            let dims = ext_dims_bruteforce(p, v, i, w).map_err(|e| e.to_string())?;
            let from_description: Vec<usize> = w.degrees().map(|d| predicted.dim(p, d)).collect();
            if from_description == dims {
                Ok(())
            } else {
                Err(format!("S({}): described {from_description:?}, computed {dims:?}", q.vertex_name(v)))
            }
        });
        out.push(check(format!("Ext^{i}(S(v), A)"), result.map(|()| format!("all vertices agree on [-4, {hi}]"))));
    }

    let t = truncate(p, n);
    out.push(check(
        "center".into(),
        verify_center(&t, &center(p)).map(|r| format!("centralizer dimensions match in degrees 0..{}", r.dims.len())).map_err(|e| e.to_string()),
    ));

    let cm_name = "Cohen-Macaulay witness".to_string();
    if p.kind() == AlgebraKind::LocallyGentle && !decompose(p).has_finite() {
        out.push(check(cm_name, verify_cm_witness(&t).map(|()| format!("free over k[sum of arrows] up to degree {n}")).map_err(|e| e.to_string())));
    } else {
        out.push(skipped(cm_name, "needs every maximal path to be infinite".into()));
    }

    let max_degree = 4;
    let name = "AS Gorenstein".to_string();
    let hi = 4.min(n as i64 - max_degree as i64 - 1);
    if hi < 1 {
        out.push(skipped(name, format!("truncation {n} too small")));
    } else {
        let w = Window { lo: -4, hi, truncation: n };
        let expected = match as_classification(p) {
            AsStatus::NotGorenstein => None,
            AsStatus::Gorenstein { k, ell, .. } | AsStatus::Regular { k, ell, .. } => Some(GorensteinWitness { k, ell }),
        };
        let result = match as_gorenstein_bruteforce(p, w, max_degree) {
            Ok(found) if found == expected => Ok(match found {
                Some(g) => format!("Ext concentrated in (k, l) = ({}, {})", g.k, g.ell),
                None => format!("not Gorenstein on Ext^0..Ext^{max_degree}"),
            }),
            Ok(found) => Err(format!("classification says {expected:?}, Ext computation gives {found:?}")),
            Err(e) => Err(e.to_string()),
        };
        out.push(check(name, result));
    }
    out
}
