//! Plain-text Cayley table files.
//!
//! ```text
//! # optional comment lines
//! elements: e a
//! table:
//! e a
//! a e
//! ```
//!
//! Row `i`, column `j` names the product `names[i] * names[j]`. Blank lines
//! and lines starting with `#` are ignored everywhere. [`serialize`] writes
//! the canonical form: single spaces, no comments, trailing newline.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::semigroup::{Semigroup, IDENTITY_MARKER};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let mut column = 0;
    let mut start_col = 0;
    for (byte, ch) in line.char_indices() {
        column += 1;
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..byte],
                    column: start_col,
                });
            }
        } else if start.is_none() {
            start = Some(byte);
            start_col = column;
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: start_col,
        });
    }
    out
}

pub fn parse_table(text: &str) -> Result<Semigroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (line_no, header) = lines.next().ok_or_else(|| Error::Syntax {
        line: 1,
        column: 1,
        message: "expected `elements:` line".into(),
    })?;
    let indent = header.len() - header.trim_start().len();
    let rest = header.trim_start().strip_prefix("elements:").ok_or(Error::Syntax {
        line: line_no,
        column: indent + 1,
        message: "expected `elements:`".into(),
    })?;
    let offset = header.chars().count() - rest.chars().count();
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<&str, usize> = HashMap::new();
    for tok in tokens(rest) {
        let column = tok.column + offset;
        if tok.text == IDENTITY_MARKER {
            return Err(Error::ReservedName {
                name: tok.text.to_string(),
            });
        }
        if index.insert(tok.text, names.len()).is_some() {
            return Err(Error::DuplicateName {
                name: tok.text.to_string(),
                line: line_no,
                column,
            });
        }
        names.push(tok.text.to_string());
    }
    if names.is_empty() {
        return Err(Error::Syntax {
            line: line_no,
            column: header.chars().count() + 1,
            message: "expected at least one element name".into(),
        });
    }

    let n = names.len();
    match lines.next() {
        Some((_, l)) if l.trim() == "table:" => {}
        Some((line, l)) => {
            return Err(Error::Syntax {
                line,
                column: l.len() - l.trim_start().len() + 1,
                message: "expected `table:`".into(),
            })
        }
        None => {
            return Err(Error::Syntax {
                line: line_no + 1,
                column: 1,
                message: "expected `table:`".into(),
            })
        }
    }

    let mut table = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (line, l) in lines {
        rows += 1;
        if rows > n {
            return Err(Error::NonSquare {
                message: format!("line {line}: more than {n} rows"),
            });
        }
        let toks = tokens(l);
        if toks.len() != n {
            return Err(Error::NonSquare {
                message: format!("line {line}: row has {} entries, expected {n}", toks.len()),
            });
        }
        for tok in toks {
            let idx = index.get(tok.text).copied().ok_or_else(|| Error::UnknownName {
                name: tok.text.to_string(),
                line,
                column: tok.column,
            })?;
            table.push(idx);
        }
    }
    if rows != n {
        return Err(Error::NonSquare {
            message: format!("{rows} rows, expected {n}"),
        });
    }
    Semigroup::new(names, table)
}

pub fn serialize(s: &Semigroup) -> String {
    let mut out = String::from("elements:");
    for name in s.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push_str("\ntable:\n");
    for i in s.elements() {
        let row: Vec<&str> = s.elements().map(|j| s.name(s.mul(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
