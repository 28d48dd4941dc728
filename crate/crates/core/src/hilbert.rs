//! Hilbert series from the maximal-path decomposition, and the palindromy test.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::max_paths::decompose;
use crate::quiver::GentlePresentation;

/// `numerator(t) / (1 - t)^denom_exponent` with integer coefficients, lowest
/// degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalHilbert {
    pub numerator: Vec<i64>,
    pub denom_exponent: u8,
}

impl RationalHilbert {
    pub fn new(mut numerator: Vec<i64>, denom_exponent: u8) -> Self {
        trim(&mut numerator);
        RationalHilbert { numerator, denom_exponent }
    }

    /// The first `terms` coefficients of the power series expansion.
    pub fn coefficients(&self, terms: usize) -> Vec<i64> {
        let mut out: Vec<i64> = (0..terms).map(|i| self.numerator.get(i).copied().unwrap_or(0)).collect();
        for _ in 0..self.denom_exponent {
            for i in 1..out.len() {
                out[i] += out[i - 1];
            }
        }
        out
    }

    pub fn coefficient(&self, n: usize) -> i64 {
        self.coefficients(n + 1)[n]
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom_exponent == 0
    }

    /// The series rendered to `terms` coefficients, e.g. `5 + 5t + 2t^2 + O(t^3)`.
    pub fn expansion(&self, terms: usize) -> String {
        let coeffs = self.coefficients(terms);
        let mut s = poly_to_string(&coeffs);
        if !self.is_polynomial() || self.numerator.len() > terms {
            if s == "0" {
                s.clear();
            } else {
                s.push_str(" + ");
            }
            s.push_str(&format!("O({})", monomial(terms)));
        }
        s
    }
}

impl fmt::Display for RationalHilbert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = poly_to_string(&self.numerator);
        match self.denom_exponent {
            0 => write!(f, "{num}"),
            _ => {
                let nonzero = self.numerator.iter().filter(|&&c| c != 0).count();
                if nonzero > 1 {
                    write!(f, "({num})/(1 - t)")
                } else {
                    write!(f, "{num}/(1 - t)")
                }
            }
        }
    }
}

fn trim(p: &mut Vec<i64>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    if p.is_empty() {
        p.push(0);
    }
}

fn monomial(i: usize) -> String {
    match i {
        0 => "1".into(),
        1 => "t".into(),
        _ => format!("t^{i}"),
    }
}

/// Renders an integer polynomial as `5 - 3t^2 - t^3`.
pub fn poly_to_string(coeffs: &[i64]) -> String {
    let mut s = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        let body = match (i, mag) {
            (0, _) => mag.to_string(),
            (_, 1) => monomial(i),
            _ => format!("{mag}{}", monomial(i)),
        };
        if s.is_empty() {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if c < 0 { " - " } else { " + " });
        }
        s.push_str(&body);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// The Hilbert series `(|Q0| + (|Q1| - |Q0|)t - sum_n k_n t^(n+1)) / (1 - t)`,
/// where `k_n` counts finite maximal paths of length at least `n`. Reduced to a
/// polynomial when the algebra is finite-dimensional.
pub fn hilbert_series(pres: &GentlePresentation) -> RationalHilbert {
    let q = pres.quiver();
    let d = decompose(pres);
    let lengths: Vec<usize> = d.finite().map(|p| p.len()).collect();
    let longest = lengths.iter().copied().max().unwrap_or(0);
    let mut num = vec![0i64; longest + 2];
    num[0] = q.vertex_count() as i64;
    num[1] = q.arrow_count() as i64 - q.vertex_count() as i64;
    for n in 1..=longest {
        let k_n = lengths.iter().filter(|&&l| l >= n).count() as i64;
        num[n + 1] -= k_n;
    }
    if d.has_infinite() {
        return RationalHilbert::new(num, 1);
    }
    // Exact division by (1 - t): the quotient coefficients are partial sums.
    let mut quotient = Vec::with_capacity(num.len());
    let mut acc = 0;
    for &c in &num[..num.len() - 1] {
        acc += c;
        quotient.push(acc);
    }
    debug_assert_eq!(acc + num[num.len() - 1], 0, "numerator must vanish at t = 1");
    RationalHilbert::new(quotient, 0)
}

/// Outcome of testing `h(t) = sign * t^k * h(1/t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Palindromy {
    pub holds: bool,
    pub sign: Option<i8>,
    pub k: Option<i64>,
}

impl fmt::Display for Palindromy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.holds, self.sign, self.k) {
            (true, Some(s), Some(k)) => {
                write!(f, "h(t) = {}t^{} h(1/t)", if s < 0 { "-" } else { "" }, k)
            }
            _ => write!(f, "not palindromic"),
        }
    }
}

/// Decides whether `h(t) = sign * t^k * h(1/t)` as rational functions.
///
/// Writing `h = N / (1 - t)^e` with `N = t^j N'` and `deg N = D`, the identity
/// holds iff `N'` equals plus or minus its own reversal, and then
/// `k = j + D - e` and `sign = (-1)^e` times that plus or minus.
pub fn palindromy(h: &RationalHilbert) -> Palindromy {
    let n = &h.numerator;
    let j = n.iter().position(|&c| c != 0);
    let Some(j) = j else {
        return Palindromy { holds: false, sign: None, k: None };
    };
    let core = &n[j..];
    let reversed: Vec<i64> = core.iter().rev().copied().collect();
    let sigma = if core == reversed.as_slice() {
        1
    } else if core.iter().zip(&reversed).all(|(a, b)| *a == -*b) {
        -1
    } else {
        return Palindromy { holds: false, sign: None, k: None };
    };
    let e = h.denom_exponent as i64;
    let degree = (n.len() - 1) as i64;
    let sign = if e % 2 == 0 { sigma } else { -sigma };
    Palindromy { holds: true, sign: Some(sign as i8), k: Some(j as i64 + degree - e) }
}
