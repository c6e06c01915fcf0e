//! Text format for structure tables.
//!
//! ```text
//! # optional comment lines
//! n
//! <n rows of the ∘-table>
//!
//! <n rows of the *-table>
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{validate_skew_brace, BraceError, OperationTable, SkewBrace, TableError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraceFileError {
    #[error("line {line}: expected the carrier size, found {found:?}")]
    BadSize { line: usize, found: String },
    #[error("unexpected end of input, expected {expected}")]
    UnexpectedEof { expected: &'static str },
    #[error("line {line}: {token:?} is not an element label")]
    BadEntry { line: usize, token: String },
    #[error("line {line}: expected a blank line between the two tables")]
    MissingSeparator { line: usize },
    #[error("line {line}: unexpected content after the *-table")]
    TrailingContent { line: usize },
    #[error("line {line}: {source}")]
    Table { line: usize, source: TableError },
}

/// A pair of structure tables plus leading comment lines, as stored on disk.
///
/// Formatting a parsed file reproduces canonical input byte for byte.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceFile {
    /// Leading comment lines, each including its `#`.
    pub comments: Vec<String>,
    pub circ: OperationTable,
    pub star: OperationTable,
}

impl BraceFile {
    pub fn from_brace(brace: &SkewBrace) -> Self {
        BraceFile {
            comments: Vec::new(),
            circ: brace.circ_group().table().clone(),
            star: brace.star_group().table().clone(),
        }
    }

    pub fn to_brace(&self) -> Result<SkewBrace, BraceError> {
        validate_skew_brace(self.circ.clone(), self.star.clone())
    }
}

impl FromStr for BraceFile {
    type Err = BraceFileError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).peekable();

        let mut comments = Vec::new();
        while let Some((_, line)) = lines.peek() {
            if line.trim_start().starts_with('#') {
                comments.push(line.to_string());
                lines.next();
            } else {
                break;
            }
        }

        let (size_line, size_text) = lines.next().ok_or(BraceFileError::UnexpectedEof {
            expected: "the carrier size",
        })?;
        let n: usize = size_text
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| BraceFileError::BadSize {
                line: size_line,
                found: size_text.to_string(),
            })?;

        let circ = read_table(&mut lines, n, "rows of the ∘-table")?;
        match lines.next() {
            Some((_, l)) if l.trim().is_empty() => {}
            Some((line, _)) => return Err(BraceFileError::MissingSeparator { line }),
            None => {
                return Err(BraceFileError::UnexpectedEof {
                    expected: "a blank line and the *-table",
                })
            }
        }
        let star = read_table(&mut lines, n, "rows of the *-table")?;

        for (line, rest) in lines {
            if !rest.trim().is_empty() {
                return Err(BraceFileError::TrailingContent { line });
            }
        }

        Ok(BraceFile {
            comments,
            circ,
            star,
        })
    }
}

fn read_table<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    n: usize,
    expected: &'static str,
) -> Result<OperationTable, BraceFileError> {
    let mut rows = Vec::with_capacity(n);
    let mut first_line = 0;
    for _ in 0..n {
        let (line_no, line) = lines
            .next()
            .ok_or(BraceFileError::UnexpectedEof { expected })?;
        if first_line == 0 {
            first_line = line_no;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| BraceFileError::BadEntry {
                    line: line_no,
                    token: tok.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    OperationTable::from_rows(&rows).map_err(|source| {
        let line = match &source {
            TableError::RowLength { row, .. } | TableError::EntryOutOfRange { row, .. } => {
                first_line + row - 1
            }
            _ => first_line,
        };
        BraceFileError::Table { line, source }
    })
}

impl fmt::Display for BraceFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.comments {
            writeln!(f, "{c}")?;
        }
        writeln!(f, "{}", self.circ.size())?;
        write!(f, "{}", self.circ)?;
        writeln!(f)?;
        write!(f, "{}", self.star)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CANONICAL: &str = "# comment\n2\n1 2\n2 1\n\n1 2\n2 1\n";

    #[test]
    fn canonical_round_trip() {
        let f: BraceFile = CANONICAL.parse().unwrap();
        assert_eq!(f.comments, vec!["# comment".to_string()]);
        assert_eq!(f.to_string(), CANONICAL);
        assert!(f.to_brace().is_ok());
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(
            "x\n".parse::<BraceFile>(),
            Err(BraceFileError::BadSize {
                line: 1,
                found: "x".into()
            })
        );
        assert_eq!(
            "2\n1 2\n2 1\n1 2\n".parse::<BraceFile>(),
            Err(BraceFileError::MissingSeparator { line: 4 })
        );
        assert!(matches!(
            "2\n1 2\n2 1\n\n1 2\n2 3\n".parse::<BraceFile>(),
            Err(BraceFileError::Table { line: 6, .. })
        ));
        assert!(matches!(
            "2\n1 2\n2 a\n".parse::<BraceFile>(),
            Err(BraceFileError::BadEntry { line: 3, .. })
        ));
        assert!(matches!(
            "2\n1 2\n2 1\n\n1 2\n".parse::<BraceFile>(),
            Err(BraceFileError::UnexpectedEof { .. })
        ));
        assert_eq!(
            "1\n1\n\n1\n1\n".parse::<BraceFile>(),
            Err(BraceFileError::TrailingContent { line: 5 })
        );
    }
}
