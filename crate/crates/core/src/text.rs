//! Whitespace-separated integer tables with line/column tracking.

use crate::error::ParseError;

/// One integer together with the 1-based position it was read from.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Token {
    pub value: u64,
    pub line: usize,
    pub column: usize,
}

/// A non-blank line split into integer tokens.
#[derive(Debug, Clone)]
pub(crate) struct Line {
    pub number: usize,
    pub tokens: Vec<Token>,
}

impl Line {
    pub fn end_column(&self) -> usize {
        self.tokens.last().map_or(1, |t| t.column + 1)
    }
}

/// Splits `text` into non-blank lines of unsigned integers. Lines starting
/// with `#` are comments.
pub(crate) fn integer_lines(text: &str) -> Result<Vec<Line>, ParseError> {
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let number = idx + 1;
        if raw.trim_start().starts_with('#') {
            continue;
        }
        let mut tokens = Vec::new();
        let mut rest = raw;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let after = &rest[start..];
            let len = after.find(char::is_whitespace).unwrap_or(after.len());
            let word = &after[..len];
            let column = offset + start + 1;
            let value = word.parse::<u64>().map_err(|_| {
                ParseError::at(number, column, format!("expected a non-negative integer, found `{word}`"))
            })?;
            tokens.push(Token {
                value,
                line: number,
                column,
            });
            offset += start + len;
            rest = &after[len..];
        }
        if !tokens.is_empty() {
            lines.push(Line { number, tokens });
        }
    }
    Ok(lines)
}

/// Groups lines into blocks separated by one or more blank lines.
pub(crate) fn blocks(text: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut first_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            if !current.is_empty() {
                out.push((first_line, std::mem::take(&mut current)));
            }
            continue;
        }
        if current.is_empty() {
            first_line = idx;
        }
        current.push_str(raw);
        current.push('\n');
    }
    if !current.is_empty() {
        out.push((first_line, current));
    }
    out
}

pub(crate) fn shift_line(mut err: ParseError, by: usize) -> ParseError {
    if let crate::error::Position::Text { line, .. } = &mut err.position {
        *line += by;
    }
    err
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Position;

    #[test]
    fn tracks_columns() {
        let lines = integer_lines("  3  14\n\n# note\n7").unwrap();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].tokens[1].column, 6);
        assert_eq!(lines[0].tokens[1].value, 14);
        assert_eq!(lines[1].number, 4);
    }

    #[test]
    fn rejects_garbage_with_position() {
        let err = integer_lines("1 2\n3 x4").unwrap_err();
        assert_eq!(err.position, Position::Text { line: 2, column: 3 });
    }

    #[test]
    fn splits_blocks() {
        let b = blocks("a\nb\n\n\nc\n");
        assert_eq!(b, vec![(0, "a\nb\n".to_string()), (4, "c\n".to_string())]);
    }
}
