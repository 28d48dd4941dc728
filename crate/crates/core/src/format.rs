//! The plain-text presentation format.
//!
//! ```text
//! # comment
//! vertex 1
//! vertex 2
//! arrow a 1 2
//! arrow b 2 1
//! rel a b
//! ```
//!
//! Declaration order fixes vertex and arrow indices.

use thiserror::Error;

use crate::enumerate::EnumerateError;
use crate::quiver::{GentlePresentation, PresentationError, Quiver, QuiverError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid quiver: {0}")]
    Quiver(#[from] QuiverError),
    #[error("not (locally) gentle: {0}")]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

impl FormatError {
    pub fn line(&self) -> Option<usize> {
        match self {
            FormatError::Syntax { line, .. } => Some(*line),
            _ => None,
        }
    }
}

/// The raw declarations of a file, before any validation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub relations: Vec<(String, String, usize)>,
}

pub fn parse_raw(text: &str) -> Result<RawPresentation, FormatError> {
    let mut raw = RawPresentation::default();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let syntax = |message: String| FormatError::Syntax { line: line_no, message };
        match fields[0] {
            "vertex" => match fields[1..] {
                [name] => raw.vertices.push(name.to_string()),
                _ => return Err(syntax("expected `vertex NAME`".into())),
            },
            "arrow" => match fields[1..] {
                [name, s, t] => raw.arrows.push((name.to_string(), s.to_string(), t.to_string())),
                _ => return Err(syntax("expected `arrow NAME SOURCE TARGET`".into())),
            },
            "rel" => match fields[1..] {
                [a, b] => raw.relations.push((a.to_string(), b.to_string(), line_no)),
                _ => return Err(syntax(format!("relations are paths of length 2, got {} arrows", fields.len() - 1))),
            },
            other => return Err(syntax(format!("unknown keyword `{other}`"))),
        }
    }
    Ok(raw)
}

impl RawPresentation {
    pub fn quiver(&self) -> Result<Quiver, FormatError> {
        Ok(Quiver::new(self.vertices.iter().cloned(), self.arrows.iter().cloned())?)
    }

    pub fn build(&self) -> Result<GentlePresentation, FormatError> {
        let quiver = self.quiver()?;
        let mut pairs = Vec::new();
        for (a, b, line) in &self.relations {
            let find = |name: &str| {
                quiver.arrow_by_name(name).ok_or_else(|| FormatError::Syntax { line: *line, message: format!("unknown arrow `{name}`") })
            };
            pairs.push((find(a)?, find(b)?));
        }
        Ok(GentlePresentation::from_pairs(quiver, pairs)?)
    }
}

/// Parses and validates a presentation file.
pub fn parse_presentation(text: &str) -> Result<GentlePresentation, FormatError> {
    parse_raw(text)?.build()
}

/// Renders a presentation in the file format; parsing the result gives back
/// the same presentation.
pub fn emit_presentation(pres: &GentlePresentation) -> String {
    let q = pres.quiver();
    let mut out = String::new();
    for v in q.vertices() {
        out.push_str(&format!("vertex {}\n", q.vertex_name(v)));
    }
    for a in q.arrow_ids() {
        out.push_str(&format!("arrow {} {} {}\n", q.arrow_name(a), q.vertex_name(q.source(a)), q.vertex_name(q.target(a))));
    }
    for &(a, b) in pres.relations() {
        out.push_str(&format!("rel {} {}\n", q.arrow_name(a), q.arrow_name(b)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip() {
        for name in catalog::NAMES {
            let p = catalog::by_name(&name.replace("-N", "-2")).unwrap();
            assert_eq!(parse_presentation(&emit_presentation(&p)).unwrap(), p, "{name}");
        }
    }

    #[test]
    fn long_relation_is_a_syntax_error() {
        let text = "vertex 1\narrow a 1 1\nrel a a a\n";
        assert_eq!(parse_presentation(text).unwrap_err().line(), Some(3));
    }

    #[test]
    fn comments_and_unknown_arrows() {
        let text = "# loops\nvertex 1 # the only one\narrow x 1 1\n\nrel x z\n";
        let err = parse_presentation(text).unwrap_err();
        assert_eq!(err.line(), Some(5));
        assert!(parse_presentation("vertex 1\narrow x 1 1\n").is_ok());
    }
}
