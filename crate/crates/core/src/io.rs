//! Reading complexes from JSON or the plain-text facet format.

use serde::{Deserialize, Serialize};

use crate::error::{ComplexError, ParseError};
use crate::simplicial::SimplicialComplex;

/// Raw input: vertex count and facet lists, vertices 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexInput {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexInput {
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        ComplexInput { m: k.m(), facets: k.facet_lists() }
    }

    pub fn build(&self, allow_ghost: bool) -> Result<SimplicialComplex, ComplexError> {
        if allow_ghost {
            SimplicialComplex::from_facets_allowing_ghosts(self.m, &self.facets)
        } else {
            SimplicialComplex::from_facets(self.m, &self.facets)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Parses `{"m": 4, "facets": [[1,3], ...]}` or the text format: a first line `m=<int>`,
/// then one facet per line as space-separated vertices. Blank lines and `#` comments are skipped.
pub fn parse_complex_input(text: &str) -> Result<ComplexInput, ParseError> {
    let trimmed = text.trim_start();
    if trimmed.is_empty() {
        return Err(ParseError::Empty);
    }
    if trimmed.starts_with('{') {
        return Ok(serde_json::from_str(trimmed)?);
    }
    let mut lines =
        text.lines().enumerate().map(|(n, l)| (n + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines.next().ok_or(ParseError::Empty)?;
    let m = header
        .strip_prefix("m=")
        .or_else(|| header.strip_prefix("m ="))
        .map(str::trim)
        .and_then(|v| v.parse::<usize>().ok())
        .ok_or_else(|| ParseError::Text { line: first, message: format!("expected `m=<int>`, found `{header}`") })?;
    let facets = lines
        .map(|(line, l)| {
            l.split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| ParseError::Text { line, message: format!("`{tok}` is not a vertex number") })
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ComplexInput { m, facets })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_and_text_agree() {
        let a = parse_complex_input(r#"{"m": 4, "facets": [[1,3],[2,3],[2,4],[1,4]]}"#).unwrap();
        let b = parse_complex_input("# square\nm=4\n1 3\n2 3\n\n2 4\n1 4\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.build(false).unwrap().num_faces(), 9);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_complex_input("   "), Err(ParseError::Empty)));
        assert!(matches!(parse_complex_input("{\"m\": 4, \"facets\": [[1,"), Err(ParseError::Json(_))));
        assert!(matches!(parse_complex_input("4\n1 2"), Err(ParseError::Text { line: 1, .. })));
        assert!(matches!(parse_complex_input("m=3\n1 x"), Err(ParseError::Text { line: 2, .. })));
        let ghost = parse_complex_input("m=3\n1 2").unwrap();
        assert_eq!(ghost.build(false), Err(ComplexError::GhostVertex { vertex: 3 }));
        assert!(ghost.build(true).is_ok());
    }

    #[test]
    fn round_trip() {
        let k = crate::examples::square();
        let input = ComplexInput::from_complex(&k);
        assert_eq!(parse_complex_input(&input.to_json()).unwrap().build(false).unwrap(), k);
    }
}
