//! Text and JSON readers/writers for [`DegreeMatrix`].
//!
//! Text form: a header line `k n`, then `k` lines of `n` integers.
//! JSON form: `{"k": .., "n": .., "rows": [[..], ..]}`.

use serde::{Deserialize, Serialize};

use super::{Degree, DegreeMatrix};
use crate::error::{ParseError, Position};
use crate::text::{self, integer_lines};

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    k: usize,
    n: usize,
    rows: Vec<Vec<u64>>,
}

fn degree(value: u64) -> Option<Degree> {
    i32::try_from(value).ok().map(|v| v as Degree)
}

pub fn parse_text(input: &str) -> Result<DegreeMatrix, ParseError> {
    let lines = integer_lines(input)?;
    let Some(header) = lines.first() else {
        return Err(ParseError::at(1, 1, "missing `k n` header"));
    };
    if header.tokens.len() != 2 {
        return Err(ParseError::at(
            header.number,
            header.end_column(),
            format!("header must hold exactly `k n`, found {} values", header.tokens.len()),
        ));
    }
    let k = header.tokens[0].value as usize;
    let n = header.tokens[1].value as usize;
    if k == 0 || n == 0 {
        return Err(ParseError::at(header.number, 1, "k and n must be positive"));
    }
    let body = &lines[1..];
    if body.len() < k {
        let line = body.last().map_or(header.number, |l| l.number) + 1;
        return Err(ParseError::at(line, 1, format!("expected {k} rows, found {}", body.len())));
    }
    if let Some(extra) = body.get(k) {
        return Err(ParseError::at(extra.number, 1, format!("unexpected content after {k} rows")));
    }
    let mut entries = Vec::with_capacity(k * n);
    for line in body {
        if line.tokens.len() != n {
            let column = line.tokens.get(n).map_or(line.end_column(), |t| t.column);
            return Err(ParseError::at(
                line.number,
                column,
                format!("row has {} entries, expected {n}", line.tokens.len()),
            ));
        }
        for t in &line.tokens {
            let d = degree(t.value)
                .ok_or_else(|| ParseError::at(t.line, t.column, "degree does not fit in 32 bits"))?;
            entries.push(d);
        }
    }
    Ok(DegreeMatrix::from_entries(k, n, entries))
}

pub fn parse_json(input: &str) -> Result<DegreeMatrix, ParseError> {
    let doc: MatrixDoc = serde_json::from_str(input).map_err(|e| {
        ParseError::with_position(
            Position::Json {
                line: e.line(),
                column: e.column(),
            },
            e.to_string(),
        )
    })?;
    if doc.k == 0 || doc.n == 0 {
        return Err(ParseError::with_position(
            Position::Entry { row: 0, entry: None },
            "k and n must be positive",
        ));
    }
    if doc.rows.len() != doc.k {
        return Err(ParseError::with_position(
            Position::Entry {
                row: doc.rows.len().min(doc.k),
                entry: None,
            },
            format!("expected {} rows, found {}", doc.k, doc.rows.len()),
        ));
    }
    let mut entries = Vec::with_capacity(doc.k * doc.n);
    for (r, row) in doc.rows.iter().enumerate() {
        if row.len() != doc.n {
            return Err(ParseError::with_position(
                Position::Entry { row: r, entry: None },
                format!("row has {} entries, expected {}", row.len(), doc.n),
            ));
        }
        for (e, &v) in row.iter().enumerate() {
            let d = degree(v).ok_or_else(|| {
                ParseError::with_position(
                    Position::Entry { row: r, entry: Some(e) },
                    "degree does not fit in 32 bits",
                )
            })?;
            entries.push(d);
        }
    }
    Ok(DegreeMatrix::from_entries(doc.k, doc.n, entries))
}

/// Picks the JSON reader when the first non-blank character is `{`.
pub fn parse(input: &str) -> Result<DegreeMatrix, ParseError> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn to_json(m: &DegreeMatrix) -> String {
    let doc = MatrixDoc {
        k: m.k(),
        n: m.n(),
        rows: m.rows().map(|r| r.iter().map(|&d| d as u64).collect()).collect(),
    };
    serde_json::to_string(&doc).expect("matrix document serializes")
}

/// Reads a stream of text matrices separated by blank lines.
pub fn parse_stream(input: &str) -> Result<Vec<DegreeMatrix>, ParseError> {
    text::blocks(input)
        .into_iter()
        .map(|(first, block)| parse_text(&block).map_err(|e| text::shift_line(e, first)))
        .collect()
}

/// Writes matrices in the text format separated by blank lines.
pub fn write_stream<'a>(matrices: impl IntoIterator<Item = &'a DegreeMatrix>) -> String {
    let mut out = String::new();
    for (i, m) in matrices.into_iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&m.to_string());
    }
    out
}
