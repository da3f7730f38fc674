//! Text formats for binary functions (`.bf`) and alternating dimaps (`.adm`).
//!
//! ```text
//! bf 1
//! 0 1.0000000000000000e0 0.0000000000000000e0
//! 1 4.1421356237309503e-1 0.0000000000000000e0
//! ```
//!
//! ```text
//! adm 2
//! edge e0 0 1
//! vertex 0 1
//! ```

use std::fmt::Write as _;

use num_complex::Complex64;
use thiserror::Error;

use crate::altmap::{AlternatingDimap, DimapError, Edge, RawDimap};
use crate::binfun::{BinFunError, Coefficients, RawVector, MAX_DIMENSION};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    BinFun(#[from] BinFunError),
    #[error(transparent)]
    Dimap(#[from] DimapError),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse { line, message: message.into() }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn write_bf<V: Coefficients + ?Sized>(v: &V) -> String {
    let m = v.dimension();
    let mut out = format!("bf {m}\n# element i has bit weight 2^(m-1-i)\n");
    for (i, x) in v.values().iter().enumerate() {
        writeln!(out, "{i} {:.16e} {:.16e}", x.re, x.im).expect("string write");
    }
    out
}

/// Reads a vector; whether its empty-set entry must be 1 is up to the caller.
pub fn parse_bf(text: &str) -> Result<RawVector, FormatError> {
    let mut lines = content_lines(text);
    let (n, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let m = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["bf", m] => m.parse::<usize>().map_err(|e| parse_err(n, format!("bad dimension: {e}")))?,
        _ => return Err(parse_err(n, "expected `bf <m>`")),
    };
    if m > MAX_DIMENSION {
        return Err(BinFunError::DimensionTooLarge(m).into());
    }
    let size = 1usize << m;
    let mut values = Vec::with_capacity(size);
    for (n, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [idx, re, im] = fields[..] else {
            return Err(parse_err(n, "expected `<index> <re> <im>`"));
        };
        let idx: usize = idx.parse().map_err(|e| parse_err(n, format!("bad index: {e}")))?;
        if idx != values.len() {
            return Err(parse_err(n, format!("expected index {}, found {idx}", values.len())));
        }
        let re: f64 = re.parse().map_err(|e| parse_err(n, format!("bad real part: {e}")))?;
        let im: f64 = im.parse().map_err(|e| parse_err(n, format!("bad imaginary part: {e}")))?;
        values.push(Complex64::new(re, im));
    }
    if values.len() != size {
        return Err(BinFunError::WrongLength { m, expected: size, got: values.len() }.into());
    }
    Ok(RawVector::new(m, values)?)
}

pub fn write_adm(g: &AlternatingDimap) -> String {
    write_raw_adm(g.raw())
}

pub fn write_raw_adm(raw: &RawDimap) -> String {
    let mut out = format!("adm {}\n", 2 * raw.edges.len());
    for e in &raw.edges {
        writeln!(out, "edge {} {} {}", e.label, e.tail, e.head).expect("string write");
    }
    for rot in &raw.vertices {
        out.push_str("vertex");
        for d in rot {
            write!(out, " {d}").expect("string write");
        }
        out.push('\n');
    }
    out
}

/// Parses without validating.
pub fn parse_raw_adm(text: &str) -> Result<RawDimap, FormatError> {
    let mut lines = content_lines(text);
    let (n, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let ndarts = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["adm", d] => d.parse::<usize>().map_err(|e| parse_err(n, format!("bad dart count: {e}")))?,
        _ => return Err(parse_err(n, "expected `adm <ndarts>`")),
    };
    let dart = |n: usize, s: &str| s.parse::<u32>().map_err(|e| parse_err(n, format!("bad dart `{s}`: {e}")));
    let mut raw = RawDimap::default();
    for (n, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "edge" => {
                let [_, label, tail, head] = fields[..] else {
                    return Err(parse_err(n, "expected `edge <label> <tail> <head>`"));
                };
                if !raw.vertices.is_empty() {
                    return Err(parse_err(n, "edge lines must precede vertex lines"));
                }
                raw.edges.push(Edge { label: label.to_string(), tail: dart(n, tail)?, head: dart(n, head)? });
            }
            "vertex" => {
                if fields.len() < 2 {
                    return Err(parse_err(n, "vertex line lists no darts"));
                }
                raw.vertices.push(fields[1..].iter().map(|s| dart(n, s)).collect::<Result<_, _>>()?);
            }
            other => return Err(parse_err(n, format!("unknown record `{other}`"))),
        }
    }
    if ndarts != 2 * raw.edges.len() {
        return Err(parse_err(1, format!("header declares {ndarts} darts but {} edges are listed", raw.edges.len())));
    }
    Ok(raw)
}

/// Parses and validates.
pub fn parse_adm(text: &str) -> Result<AlternatingDimap, FormatError> {
    Ok(AlternatingDimap::new(parse_raw_adm(text)?)?)
}
