//! OEIS b-file parsing: ASCII lines of "index value" pairs, '#' comments
//! and blank lines ignored, indices consecutive. The first index is the
//! sequence offset.

use std::fmt;
use std::path::PathBuf;

use seqkit_core::Int;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFixture {
    pub oeis_id: String,
    pub offset: i64,
    pub terms: Vec<Int>,
    pub source_path: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BfileError {
    Malformed { line: usize, message: String },
    Gap { line: usize, expected: i64, found: i64 },
    Empty,
}

impl fmt::Display for BfileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BfileError::Malformed { line, message } => {
                write!(f, "malformed b-file line {line}: {message}")
            }
            BfileError::Gap {
                line,
                expected,
                found,
            } => write!(
                f,
                "non-consecutive index at line {line}: expected {expected}, found {found}"
            ),
            BfileError::Empty => write!(f, "b-file contains no terms"),
        }
    }
}

impl std::error::Error for BfileError {}

pub fn parse_bfile(
    text: &str,
    oeis_id: &str,
    source_path: PathBuf,
) -> Result<SequenceFixture, BfileError> {
    let mut offset = None;
    let mut next_index = 0i64;
    let mut terms = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (idx, val) = match (parts.next(), parts.next(), parts.next()) {
            (Some(i), Some(v), None) => (i, v),
            _ => {
                return Err(BfileError::Malformed {
                    line: lineno,
                    message: format!("expected \"index value\", got {line:?}"),
                })
            }
        };
        let idx: i64 = idx.parse().map_err(|_| BfileError::Malformed {
            line: lineno,
            message: format!("bad index {idx:?}"),
        })?;
        let val: Int = val.parse().map_err(|_| BfileError::Malformed {
            line: lineno,
            message: format!("bad value {val:?}"),
        })?;
        match offset {
            None => {
                offset = Some(idx);
                next_index = idx + 1;
            }
            Some(_) => {
                if idx != next_index {
                    return Err(BfileError::Gap {
                        line: lineno,
                        expected: next_index,
                        found: idx,
                    });
                }
                next_index += 1;
            }
        }
        terms.push(val);
    }
    let offset = offset.ok_or(BfileError::Empty)?;
    Ok(SequenceFixture {
        oeis_id: oeis_id.to_string(),
        offset,
        terms,
        source_path,
    })
}
