//! Where an arrangement comes from: a catalog name, an arrangement file, or
//! a product of those written `A * B`.

use std::fmt;
use std::path::PathBuf;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::parse::parse_arrangement;
use crate::reflection::{lookup, Named};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrangementSpec {
    Named { text: String, named: Named },
    File(PathBuf),
    Product(Vec<ArrangementSpec>),
}

/// Splits on `*` outside parentheses.
fn split_product(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' | '×' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

impl ArrangementSpec {
    /// Names are resolved here, so unknown names fail before any work.
    /// `@path` always means a file; a bare word that is not a catalog name is
    /// taken as a file if it exists.
    pub fn parse(text: &str) -> Result<ArrangementSpec> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty arrangement spec".into()));
        }
        if let Some(path) = text.strip_prefix('@') {
            return Ok(ArrangementSpec::File(PathBuf::from(path.trim())));
        }
        let parts = split_product(text);
        if parts.len() > 1 {
            return parts.into_iter().map(ArrangementSpec::parse).collect::<Result<_>>().map(ArrangementSpec::Product);
        }
        match lookup(text) {
            Ok(named) => Ok(ArrangementSpec::Named { text: text.to_string(), named }),
            Err(e) => {
                let path = PathBuf::from(text);
                if path.is_file() {
                    Ok(ArrangementSpec::File(path))
                } else {
                    Err(e)
                }
            }
        }
    }

    pub fn resolve(&self) -> Result<Arrangement> {
        match self {
            ArrangementSpec::Named { named, .. } => named.build(),
            ArrangementSpec::File(path) => {
                let text =
                    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                parse_arrangement(&text).map_err(|e| match e {
                    Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
                    other => other,
                })
            }
            ArrangementSpec::Product(parts) => {
                let mut iter = parts.iter();
                let first = iter.next().expect("products have factors").resolve()?;
                iter.try_fold(first, |acc, p| acc.product(&p.resolve()?))
            }
        }
    }
}

impl fmt::Display for ArrangementSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrangementSpec::Named { text, .. } => f.write_str(text),
            ArrangementSpec::File(path) => write!(f, "@{}", path.display()),
            ArrangementSpec::Product(parts) => {
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" * ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}
