//! Plain-text chain descriptions.
//!
//! ```text
//! # comment
//! c = 3
//! i = 1
//! r = 4
//! char = 32003      # optional: field characteristic
//! depth = 5         # optional: depth cap for Gamma
//! gen_cap = 24      # optional: generator cap for exact resolutions
//! gens:
//! x[1,2]^3
//! x[1,4]^2*x[2,1]
//! x[2,2]*x[3,3]
//! ```
//!
//! Keys may appear in any order before `gens:`; each following non-blank
//! line is one seed generator. Whitespace is ignored and `#` starts a comment.

use std::fmt::Write as _;

use crate::chain::ChainSpec;
use crate::error::{Error, Result};
use crate::ideal::minimal_elements;
use crate::monomial::{parse_monomial, Monomial};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DocumentOptions {
    pub characteristic: Option<u32>,
    pub depth: Option<usize>,
    pub gen_cap: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDocument {
    pub rows: u32,
    pub monoid_index: u32,
    pub seed_index: u32,
    /// Minimal generators of the seed, in input order.
    pub gens: Vec<Monomial>,
    pub options: DocumentOptions,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub document: ChainDocument,
    pub warnings: Vec<String>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Strips a trailing comment.
fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// 1-based column of the first non-blank byte at or after `offset`.
fn column_of(line: &str, offset: usize) -> usize {
    let skip = line[offset..].len() - line[offset..].trim_start().len();
    offset + skip + 1
}

fn parse_value<T: std::str::FromStr>(text: &str, line_no: usize, line: &str, at: usize) -> Result<T> {
    text.trim().parse().map_err(|_| {
        err(
            line_no,
            column_of(line, at),
            format!("expected a nonnegative integer, got '{}'", text.trim()),
        )
    })
}

struct Generator {
    monomial: Monomial,
    line: usize,
    /// `(column, factor)` of each `*`-separated factor.
    factors: Vec<(usize, Monomial)>,
}

fn parse_generator(line_no: usize, line: &str) -> Result<Generator> {
    let body = content(line);
    let monomial = parse_monomial(body).map_err(|e| err(line_no, e.offset + 1, e.message))?;
    let mut factors = Vec::new();
    let mut offset = 0;
    for piece in body.split('*') {
        if let Ok(f) = parse_monomial(piece) {
            factors.push((column_of(line, offset), f));
        }
        offset += piece.len() + 1;
    }
    Ok(Generator {
        monomial,
        line: line_no,
        factors,
    })
}

pub fn parse_document(text: &str) -> Result<Parsed> {
    let (mut c, mut i, mut r) = (None, None, None);
    let mut options = DocumentOptions::default();
    let mut gens: Option<Vec<Generator>> = None;
    let mut last_line = 0;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let body = content(line);
        if body.trim().is_empty() {
            continue;
        }
        if let Some(list) = gens.as_mut() {
            list.push(parse_generator(line_no, line)?);
            continue;
        }
        if body.trim() == "gens:" {
            gens = Some(Vec::new());
            continue;
        }
        let Some((key, value)) = body.split_once('=') else {
            return Err(err(line_no, column_of(line, 0), "expected 'key = value' or 'gens:'"));
        };
        let at = key.len() + 1;
        match key.trim() {
            "c" => c = Some(parse_value::<u32>(value, line_no, line, at)?),
            "i" => i = Some(parse_value::<u32>(value, line_no, line, at)?),
            "r" => r = Some(parse_value::<u32>(value, line_no, line, at)?),
            "char" => options.characteristic = Some(parse_value(value, line_no, line, at)?),
            "depth" => options.depth = Some(parse_value(value, line_no, line, at)?),
            "gen_cap" => options.gen_cap = Some(parse_value(value, line_no, line, at)?),
            other => return Err(err(line_no, column_of(line, 0), format!("unknown key '{other}'"))),
        }
    }
    let end = last_line + 1;
    let rows = c.ok_or_else(|| err(end, 1, "missing 'c = ...'"))?;
    let monoid_index = i.ok_or_else(|| err(end, 1, "missing 'i = ...'"))?;
    let seed_index = r.ok_or_else(|| err(end, 1, "missing 'r = ...'"))?;
    let list = gens.ok_or_else(|| err(end, 1, "missing 'gens:' section"))?;
    if rows == 0 {
        return Err(err(end, 1, "c must be at least 1"));
    }
    if seed_index == 0 {
        return Err(err(end, 1, "r must be at least 1"));
    }
    if monoid_index > seed_index {
        return Err(err(end, 1, format!("i = {monoid_index} exceeds r = {seed_index}")));
    }
    if list.is_empty() {
        return Err(err(end, 1, "'gens:' lists no generators"));
    }
    for g in &list {
        if g.monomial.is_one() {
            return Err(err(g.line, 1, "the seed contains 1, so the chain is not proper"));
        }
        for (col, f) in &g.factors {
            for v in f.support() {
                if v.row > rows {
                    return Err(err(g.line, *col, format!("row {} is outside 1..={rows}", v.row)));
                }
                if v.col > seed_index {
                    return Err(err(g.line, *col, format!("column {} exceeds r = {seed_index}", v.col)));
                }
            }
        }
    }
    let mut warnings = Vec::new();
    let minimal = minimal_elements(list.iter().map(|g| g.monomial.clone()).collect());
    let mut kept: Vec<Monomial> = Vec::new();
    for g in &list {
        if minimal.contains(&g.monomial) && !kept.contains(&g.monomial) {
            kept.push(g.monomial.clone());
        } else {
            warnings.push(format!(
                "line {}: generator {} is redundant and was dropped",
                g.line, g.monomial
            ));
        }
    }
    Ok(Parsed {
        document: ChainDocument {
            rows,
            monoid_index,
            seed_index,
            gens: kept,
            options,
        },
        warnings,
    })
}

/// Parses a document straight to its chain.
pub fn parse_spec(text: &str) -> Result<ChainSpec> {
    parse_document(text)?.document.to_spec()
}

impl ChainDocument {
    pub fn to_spec(&self) -> Result<ChainSpec> {
        ChainSpec::new(self.rows, self.monoid_index, self.seed_index, self.gens.iter().cloned())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "c = {}", self.rows);
        let _ = writeln!(out, "i = {}", self.monoid_index);
        let _ = writeln!(out, "r = {}", self.seed_index);
        if let Some(ch) = self.options.characteristic {
            let _ = writeln!(out, "char = {ch}");
        }
        if let Some(d) = self.options.depth {
            let _ = writeln!(out, "depth = {d}");
        }
        if let Some(g) = self.options.gen_cap {
            let _ = writeln!(out, "gen_cap = {g}");
        }
        out.push_str("gens:\n");
        for g in &self.gens {
            let _ = writeln!(out, "{g}");
        }
        out
    }
}

impl From<&ChainSpec> for ChainDocument {
    fn from(spec: &ChainSpec) -> Self {
        ChainDocument {
            rows: spec.rows(),
            monoid_index: spec.monoid_index(),
            seed_index: spec.seed_index(),
            gens: spec.seed().gens().to_vec(),
            options: DocumentOptions::default(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::running_example;

    const RUNNING: &str =
        "# three rows\nc = 3\ni = 1\nr = 4\ngens:\n  x[1,2]^3\nx[1,4]^2 * x[2,1]   # straddles\nx[2,2]*x[3,3]\n";

    #[test]
    fn parses_running_example() {
        let parsed = parse_document(RUNNING).unwrap();
        assert!(parsed.warnings.is_empty());
        assert_eq!(parsed.document.to_spec().unwrap(), running_example());
        assert_eq!(parse_spec(RUNNING).unwrap(), running_example());
    }

    #[test]
    fn round_trip() {
        let doc = parse_document(RUNNING).unwrap().document;
        let again = parse_document(&doc.render()).unwrap().document;
        assert_eq!(doc, again);
        let with_opts = "c=1\ni=0\nr=2\nchar=32003\ndepth=4\ngen_cap=30\ngens:\nx[1,1]*x[1,2]\n";
        let doc = parse_document(with_opts).unwrap().document;
        assert_eq!(doc.options.characteristic, Some(32003));
        assert_eq!(parse_document(&doc.render()).unwrap().document, doc);
    }

    #[test]
    fn rejects_unit_seed() {
        let e = parse_document("c=1\ni=0\nr=1\ngens:\n1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 5, .. }));
    }

    #[test]
    fn row_out_of_range_has_position() {
        let e = parse_document("c = 3\ni = 1\nr = 4\ngens:\nx[1,2] * x[4,1]\n").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 5,
                column: 10,
                message: "row 4 is outside 1..=3".into()
            }
        );
    }

    #[test]
    fn other_diagnostics() {
        assert!(matches!(
            parse_document("c=1\ni=0\nr=2\ngens:\nx[1,3]\n").unwrap_err(),
            Error::Parse { line: 5, .. }
        ));
        assert!(matches!(
            parse_document("c=1\nq=0\n").unwrap_err(),
            Error::Parse { line: 2, column: 1, .. }
        ));
        assert!(matches!(
            parse_document("c=1\ni=0\nr=2\ngens:\nx[1,1]^0\n").unwrap_err(),
            Error::Parse { line: 5, .. }
        ));
        assert!(parse_document("c=1\ni=0\nr=2\ngens:\n").is_err());
        assert!(parse_document("c=1\ni=0\ngens:\nx[1,1]\n").is_err());
    }

    #[test]
    fn redundant_generators_warn() {
        let parsed = parse_document("c=1\ni=0\nr=2\ngens:\nx[1,1]\nx[1,1]*x[1,2]\nx[1,1]\n").unwrap();
        assert_eq!(parsed.document.gens.len(), 1);
        assert_eq!(parsed.warnings.len(), 2);
    }
}
