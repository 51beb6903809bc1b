//! State file reader.
//!
//! Line-oriented format, `#` starts a comment and `;` separates statements
//! on one line:
//!
//! ```text
//! dims 2 2 2
//! 1 |001>
//! 1/2-3/4 i |010>
//! -a |100>
//! ```
//!
//! Kets are digit strings when every local dimension is at most 10, and
//! comma-separated index lists (`|0,12,3>`) otherwise. A document whose first
//! non-blank character is `{` is read as JSON instead:
//! `{"dims":[2,2],"terms":[{"coeff":"1","ket":[0,0]}]}`.

use serde::Deserialize;

use super::amplitude::is_param_name;
use super::{build_state, Amplitude, QuditDims, StateTensor};
use crate::error::{Error, Result};
use crate::scalar::{gaussian_from_i64, parse_gaussian, ExactInt};

/// Parses a state document (text or JSON form).
pub fn parse_state<Z: ExactInt>(text: &str) -> Result<StateTensor<Z>> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

struct Statement<'a> {
    line: usize,
    column: usize,
    body: &'a str,
}

impl Statement<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

fn statements(text: &str) -> impl Iterator<Item = Statement<'_>> {
    text.lines().enumerate().flat_map(|(k, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let mut offset = 0;
        content
            .split(';')
            .map(move |piece| {
                let start = offset;
                offset += piece.len() + 1;
                let lead = piece.len() - piece.trim_start().len();
                Statement {
                    line: k + 1,
                    column: raw[..start + lead].chars().count() + 1,
                    body: piece.trim(),
                }
            })
            .filter(|s| !s.body.is_empty())
            .collect::<Vec<_>>()
    })
}

fn parse_text<Z: ExactInt>(text: &str) -> Result<StateTensor<Z>> {
    let mut stmts = statements(text);
    let header = stmts.next().ok_or(Error::Syntax {
        line: 1,
        column: 1,
        message: "empty document: expected `dims d1 d2 ...`".into(),
    })?;
    let dims = parse_dims(&header)?;
    let single_digit = dims.as_slice().iter().all(|&d| d <= 10);

    let mut terms = Vec::new();
    for stmt in stmts {
        let (coeff, ket) = stmt
            .body
            .split_once('|')
            .ok_or_else(|| stmt.error("expected `<coeff> |<ket>>`"))?;
        let ket = ket
            .trim_end()
            .strip_suffix('>')
            .ok_or_else(|| stmt.error("ket must end with `>`"))?;
        let index = parse_ket(ket, dims.parties(), single_digit).map_err(|m| stmt.error(m))?;
        let amp = parse_coefficient::<Z>(coeff).map_err(|m| stmt.error(m))?;
        terms.push((index, amp));
    }
    if terms.is_empty() {
        return Err(Error::ZeroState);
    }
    build_state(dims, terms)
}

fn parse_dims(stmt: &Statement<'_>) -> Result<QuditDims> {
    let mut words = stmt.body.split_whitespace();
    if words.next() != Some("dims") {
        return Err(stmt.error("first statement must be `dims d1 d2 ...`"));
    }
    let dims = words
        .map(|w| {
            w.parse::<usize>()
                .map_err(|_| stmt.error(format!("`{w}` is not a dimension")))
        })
        .collect::<Result<Vec<_>>>()?;
    QuditDims::new(dims).map_err(|e| stmt.error(e.to_string()))
}

fn parse_ket(ket: &str, parties: usize, single_digit: bool) -> Result<Vec<usize>, String> {
    let ket = ket.trim();
    let index: Vec<usize> = if ket.contains(',') {
        ket.split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<usize>()
                    .map_err(|_| format!("`{t}` is not a ket index"))
            })
            .collect::<Result<_, _>>()?
    } else {
        if !single_digit {
            return Err("digit-string kets need every dimension <= 10; use `|i1,i2,...>`".into());
        }
        ket.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| format!("`{c}` is not a ket digit"))
            })
            .collect::<Result<_, _>>()?
    };
    if index.len() != parties {
        return Err(format!(
            "ket `{ket}` has {} components, expected {parties}",
            index.len()
        ));
    }
    Ok(index)
}

/// Coefficient text: a Gaussian rational, `[+-]name`, or `<gaussian>*name`.
/// An empty coefficient or a bare sign stands for `±1`.
fn parse_coefficient<Z: ExactInt>(raw: &str) -> Result<Amplitude<Z>, String> {
    let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    match s.as_str() {
        "" | "+" => return Ok(Amplitude::Gaussian(gaussian_from_i64(1))),
        "-" => return Ok(Amplitude::Gaussian(gaussian_from_i64(-1))),
        _ => {}
    }
    if let Some((scale, name)) = s.rsplit_once('*') {
        if !is_param_name(name) {
            return Err(format!("`{name}` is not a parameter name"));
        }
        let scale = parse_gaussian(scale)?;
        return Ok(Amplitude::Param {
            name: name.to_string(),
            scale,
        });
    }
    let (negative, rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s.strip_prefix('+').unwrap_or(&s)),
    };
    if is_param_name(rest) {
        let amp = Amplitude::param(rest);
        return Ok(if negative {
            amp.scaled(&gaussian_from_i64(-1))
        } else {
            amp
        });
    }
    parse_gaussian(&s).map(Amplitude::Gaussian)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonState {
    dims: Vec<usize>,
    terms: Vec<JsonTerm>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonTerm {
    coeff: JsonCoeff,
    ket: JsonKet,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonCoeff {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonKet {
    Indices(Vec<usize>),
    Text(String),
}

fn parse_json<Z: ExactInt>(text: &str) -> Result<StateTensor<Z>> {
    let doc: JsonState = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line().max(1),
        column: e.column().max(1),
        message: e.to_string(),
    })?;
    let dims = QuditDims::new(doc.dims).map_err(|e| Error::Syntax {
        line: 1,
        column: 1,
        message: e.to_string(),
    })?;
    let single_digit = dims.as_slice().iter().all(|&d| d <= 10);
    let term_error = |k: usize, m: String| Error::Syntax {
        line: 1,
        column: 1,
        message: format!("term #{}: {m}", k + 1),
    };
    let mut terms = Vec::with_capacity(doc.terms.len());
    for (k, term) in doc.terms.into_iter().enumerate() {
        let amp = match term.coeff {
            JsonCoeff::Int(v) => parse_coefficient::<Z>(&v.to_string()),
            JsonCoeff::Text(s) => parse_coefficient::<Z>(&s),
        }
        .map_err(|m| term_error(k, m))?;
        let index = match term.ket {
            JsonKet::Indices(v) if v.len() == dims.parties() => v,
            JsonKet::Indices(v) => {
                return Err(term_error(
                    k,
                    format!(
                        "ket has {} components, expected {}",
                        v.len(),
                        dims.parties()
                    ),
                ))
            }
            JsonKet::Text(s) => {
                parse_ket(&s, dims.parties(), single_digit).map_err(|m| term_error(k, m))?
            }
        };
        terms.push((index, amp));
    }
    if terms.is_empty() {
        return Err(Error::ZeroState);
    }
    build_state(dims, terms)
}
