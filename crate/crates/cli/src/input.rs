//! Readers for the three input formats.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use flawless_core::constructions::{
    graphic, linear_prime, linear_rational, Graph, PrimeFieldMatrix, RationalMatrix,
};
use flawless_core::{GroundSet, Label, Matroid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Circuits,
    Graph,
    Matrix,
}

impl Format {
    /// `.json` is a circuits document, `.graph`/`.edges` an edge list and
    /// `.mat`/`.matrix` a matrix.
    pub fn sniff(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()? {
            "json" => Some(Format::Circuits),
            "graph" | "edges" => Some(Format::Graph),
            "mat" | "matrix" => Some(Format::Matrix),
            _ => None,
        }
    }
}

/// A malformed input, located by 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitsDocument {
    pub ground: Vec<Label>,
    pub circuits: Vec<Vec<Label>>,
}

impl CircuitsDocument {
    pub fn of(m: &Matroid) -> Self {
        CircuitsDocument {
            ground: m.ground().labels().to_vec(),
            circuits: m.circuits(),
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Matroid, ParseError> {
    match format {
        Format::Circuits => parse_circuits(text),
        Format::Graph => parse_graph(text),
        Format::Matrix => parse_matrix(text),
    }
}

pub fn parse_circuits(text: &str) -> Result<Matroid, ParseError> {
    let doc: CircuitsDocument = serde_json::from_str(text)
        .map_err(|e| ParseError::at(e.line(), e.column(), e.to_string()))?;
    let ground = GroundSet::new(doc.ground).map_err(|e| ParseError::at(1, 1, e.to_string()))?;
    Matroid::from_circuits(ground, doc.circuits).map_err(|e| ParseError::at(1, 1, e.to_string()))
}

/// Whitespace tokens of a line with `#` comments removed, each with its
/// 1-based column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in body.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &body[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &body[s..]));
    }
    out
}

/// Lines `u v label` with 1-based vertices.
pub fn parse_graph(text: &str) -> Result<Matroid, ParseError> {
    let mut edges = Vec::new();
    let mut vertices = 0;
    for (n, line) in text.lines().enumerate() {
        let ln = n + 1;
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        if toks.len() != 3 {
            let col = toks.get(3).map_or(line.len() + 1, |t| t.0);
            return Err(ParseError::at(ln, col, "expected `u v label`"));
        }
        let vertex = |(col, tok): (usize, &str)| -> Result<usize, ParseError> {
            match tok.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v),
                _ => Err(ParseError::at(
                    ln,
                    col,
                    format!("bad vertex `{tok}` (vertices are 1-based)"),
                )),
            }
        };
        let u = vertex(toks[0])?;
        let v = vertex(toks[1])?;
        vertices = vertices.max(u).max(v);
        edges.push((ln, toks[2].0, u, v, Label::from(toks[2].1)));
    }
    let mut g = Graph::new(vertices);
    for (ln, col, u, v, label) in edges {
        g.add_edge(u - 1, v - 1, label)
            .map_err(|e| ParseError::at(ln, col, e.to_string()))?;
    }
    graphic(&g).map_err(|e| ParseError::at(1, 1, e.to_string()))
}

fn parse_rational(tok: &str) -> Option<(BigInt, BigInt)> {
    let (num, den) = match tok.split_once('/') {
        Some((a, b)) => (BigInt::from_str(a).ok()?, BigInt::from_str(b).ok()?),
        None => (BigInt::from_str(tok).ok()?, BigInt::from(1)),
    };
    if den == BigInt::from(0) {
        return None;
    }
    Some((num, den))
}

/// Rows of integer or `p/q` entries, optionally headed by `mod p`. Columns
/// are labeled `1..n`.
pub fn parse_matrix(text: &str) -> Result<Matroid, ParseError> {
    let mut modulus: Option<u64> = None;
    let mut rows: Vec<Vec<(BigInt, BigInt)>> = Vec::new();
    let mut width: Option<usize> = None;
    for (n, line) in text.lines().enumerate() {
        let ln = n + 1;
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        if toks[0].1 == "mod" {
            if modulus.is_some() || !rows.is_empty() {
                return Err(ParseError::at(
                    ln,
                    toks[0].0,
                    "`mod p` must come before the rows",
                ));
            }
            let Some(&(col, p)) = toks.get(1) else {
                return Err(ParseError::at(ln, line.len() + 1, "missing modulus"));
            };
            if toks.len() > 2 {
                return Err(ParseError::at(
                    ln,
                    toks[2].0,
                    "unexpected token after modulus",
                ));
            }
            match p.parse::<u64>() {
                Ok(v) if v >= 2 => modulus = Some(v),
                _ => return Err(ParseError::at(ln, col, format!("bad modulus `{p}`"))),
            }
            continue;
        }
        let row = toks
            .iter()
            .map(|&(col, tok)| {
                parse_rational(tok)
                    .ok_or_else(|| ParseError::at(ln, col, format!("bad entry `{tok}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        match width {
            Some(w) if w != row.len() => {
                return Err(ParseError::at(
                    ln,
                    1,
                    format!("row has {} entries, expected {w}", row.len()),
                ));
            }
            _ => width = Some(row.len()),
        }
        rows.push(row);
    }
    let cols = width.unwrap_or(0);
    let nrows = rows.len();
    let to_err = |e: flawless_core::Error| ParseError::at(1, 1, e.to_string());
    match modulus {
        None => {
            let entries = rows
                .into_iter()
                .flatten()
                .map(|(a, b)| BigRational::new(a, b))
                .collect();
            let a = RationalMatrix::new(nrows, cols, entries).map_err(to_err)?;
            linear_rational(&a).map_err(to_err)
        }
        Some(p) => {
            let pb = BigInt::from(p);
            let mut entries = Vec::new();
            for (a, b) in rows.iter().flatten() {
                let b = ((b % &pb) + &pb) % &pb;
                if b == BigInt::from(0) {
                    return Err(ParseError::at(
                        1,
                        1,
                        format!("denominator not invertible mod {p}"),
                    ));
                }
                // a / b = a * b^(p-2) mod p
                let inv = b.modpow(&(&pb - 2), &pb);
                let v = ((a * inv) % &pb + &pb) % &pb;
                entries
                    .push(i64::try_from(v).map_err(|_| ParseError::at(1, 1, "modulus too large"))?);
            }
            let a = PrimeFieldMatrix::new(nrows, cols, p, &entries).map_err(to_err)?;
            linear_prime(&a).map_err(to_err)
        }
    }
}
