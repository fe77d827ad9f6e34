//! Plain-text group and action files.
//!
//! Group file:
//!
//! ```text
//! order: 2
//! 0 1
//! 1 0
//! ```
//!
//! Row `g`, column `h` holds `g*h`; the identity must be element 0.
//!
//! Action file:
//!
//! ```text
//! group: z2.group
//! pairs: (3,2) (3,2)
//! 0: alpha=1 theta1=0 beta=(1,2) theta2=0,0
//! 1: alpha=1 theta1=1/2 beta=(2,1) theta2=1/3,2/3
//! ```
//!
//! `beta` lists the images of components `1..n` (1-based); `theta2` lists one
//! angle per component. Every element needs exactly one line. Blank lines
//! and `#` comments are ignored in both formats; a relative group path is
//! resolved against the action file's directory.

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::action::{ActionError, ExtendedActionData};
use crate::group::{FiniteGroup, GroupViolation, Permutation};
use crate::parse::{self, ParseError};
use crate::rational::RationalAngle;
use crate::seifert::SeifertPair;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid group table: {0}")]
    Group(#[from] GroupViolation),
    #[error("group identity must be element 0, found {0}")]
    IdentityNotZero(usize),
    #[error("invalid action data: {0}")]
    Action(#[from] ActionError),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn err_at(line_no: usize, line: &str, message: impl Into<String>) -> ParseError {
    ParseError::new(message, line).at_line(line_no)
}

fn keyed<'a>(line_no: usize, line: &'a str, key: &str) -> Result<&'a str, ParseError> {
    line.strip_prefix(key)
        .and_then(|r| r.trim_start().strip_prefix(':'))
        .map(str::trim)
        .ok_or_else(|| err_at(line_no, line, format!("expected '{key}: ...'")))
}

pub fn parse_group_file(text: &str) -> Result<FiniteGroup, FileError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| ParseError::new("empty group file", ""))?;
    let order: usize = parse::unsigned(keyed(line_no, header, "order")?, header)
        .map_err(|e| e.at_line(line_no))?;
    let mut table = Vec::with_capacity(order);
    for (line_no, line) in lines {
        let row = line
            .split_whitespace()
            .map(|t| parse::unsigned::<usize>(t, line).map_err(|e| e.at_line(line_no)))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != order {
            return Err(err_at(line_no, line, format!("expected {order} entries")).into());
        }
        table.push(row);
    }
    if table.len() != order {
        return Err(ParseError::new(
            format!("expected {order} rows, found {}", table.len()),
            header,
        )
        .into());
    }
    let group = FiniteGroup::from_table(table)?;
    if group.identity() != 0 {
        return Err(FileError::IdentityNotZero(group.identity()));
    }
    Ok(group)
}

/// Panics unless the identity is element 0.
pub fn format_group_file(group: &FiniteGroup) -> String {
    assert_eq!(
        group.identity(),
        0,
        "group files need the identity at index 0"
    );
    let mut out = format!("order: {}\n", group.order());
    for row in group.table() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn read(path: &Path) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_group_file(path: &Path) -> Result<FiniteGroup, FileError> {
    parse_group_file(&read(path)?)
}

struct ElementLine {
    alpha: i8,
    theta1: RationalAngle,
    beta: Permutation,
    theta2: Vec<RationalAngle>,
}

/// Splits `k1=v1 k2=(a b) ...` into key/value pairs; parenthesized values may
/// contain spaces.
fn fields(line_no: usize, line: &str, body: &str) -> Result<Vec<(String, String)>, ParseError> {
    let mut out = Vec::new();
    let mut rest = body.trim_start();
    while !rest.is_empty() {
        let eq = rest
            .find('=')
            .ok_or_else(|| err_at(line_no, line, "expected key=value"))?;
        let key = rest[..eq].trim().to_string();
        let after = rest[eq + 1..].trim_start();
        let end = if after.starts_with('(') {
            after
                .find(')')
                .map(|c| c + 1)
                .ok_or_else(|| err_at(line_no, line, "unterminated parenthesis"))?
        } else {
            after.find(char::is_whitespace).unwrap_or(after.len())
        };
        out.push((key, after[..end].to_string()));
        rest = after[end..].trim_start();
    }
    Ok(out)
}

fn parse_element_line(
    line_no: usize,
    line: &str,
    body: &str,
    n: usize,
) -> Result<ElementLine, ParseError> {
    let at = |e: ParseError| e.at_line(line_no);
    let (mut alpha, mut theta1, mut beta, mut theta2) = (None, None, None, None);
    for (key, value) in fields(line_no, line, body)? {
        let dup = || err_at(line_no, line, format!("duplicate field {key:?}"));
        match key.as_str() {
            "alpha" => {
                let a = match value.as_str() {
                    "1" | "+1" => 1,
                    "-1" => -1,
                    _ => return Err(err_at(line_no, line, "alpha must be +1 or -1")),
                };
                if alpha.replace(a).is_some() {
                    return Err(dup());
                }
            }
            "theta1" => {
                let t = RationalAngle::new(parse::fraction(&value, line).map_err(at)?);
                if theta1.replace(t).is_some() {
                    return Err(dup());
                }
            }
            "beta" => {
                let inner = value
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| err_at(line_no, line, "beta must be parenthesized"))?;
                let images = inner
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        parse::unsigned::<usize>(t, line).map_err(at).and_then(|k| {
                            k.checked_sub(1)
                                .ok_or_else(|| err_at(line_no, line, "beta images are 1-based"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if images.len() != n {
                    return Err(err_at(line_no, line, format!("beta needs {n} images")));
                }
                let p = Permutation::new(images)
                    .ok_or_else(|| err_at(line_no, line, "beta is not a permutation"))?;
                if beta.replace(p).is_some() {
                    return Err(dup());
                }
            }
            "theta2" => {
                let angles: Vec<RationalAngle> = parse::list(&value, line, parse::fraction)
                    .map_err(at)?
                    .into_iter()
                    .map(RationalAngle::new)
                    .collect();
                if angles.len() != n {
                    return Err(err_at(line_no, line, format!("theta2 needs {n} angles")));
                }
                if theta2.replace(angles).is_some() {
                    return Err(dup());
                }
            }
            other => return Err(err_at(line_no, line, format!("unknown field {other:?}"))),
        }
    }
    let missing = |f: &str| err_at(line_no, line, format!("missing field {f}"));
    Ok(ElementLine {
        alpha: alpha.ok_or_else(|| missing("alpha"))?,
        theta1: theta1.ok_or_else(|| missing("theta1"))?,
        beta: beta.ok_or_else(|| missing("beta"))?,
        theta2: theta2.ok_or_else(|| missing("theta2"))?,
    })
}

/// Parses an action file, resolving its `group:` line with `load_group`.
pub fn parse_action_file(
    text: &str,
    load_group: impl FnOnce(&str) -> Result<FiniteGroup, FileError>,
) -> Result<ExtendedActionData, FileError> {
    let mut lines = content_lines(text);
    let (line_no, line) = lines
        .next()
        .ok_or_else(|| ParseError::new("empty action file", ""))?;
    let group = load_group(keyed(line_no, line, "group")?)?;
    let (line_no, line) = lines
        .next()
        .ok_or_else(|| ParseError::new("missing 'pairs:' line", ""))?;
    let pair_text = parse::strip_ws(keyed(line_no, line, "pairs")?).replace(")(", "),(");
    let pairs: Vec<SeifertPair> = parse::int_pairs(&pair_text, line)
        .map_err(|e| e.at_line(line_no))?
        .into_iter()
        .map(|(q, p)| SeifertPair::new(q, p))
        .collect();
    let n = pairs.len();
    let mut rows: Vec<Option<ElementLine>> = (0..group.order()).map(|_| None).collect();
    for (line_no, line) in lines {
        let (head, body) = line
            .split_once(':')
            .ok_or_else(|| err_at(line_no, line, "expected '<element>: ...'"))?;
        let g: usize = parse::unsigned(head.trim(), line).map_err(|e| e.at_line(line_no))?;
        if g >= group.order() {
            return Err(err_at(line_no, line, format!("element {g} is not in the group")).into());
        }
        if rows[g].is_some() {
            return Err(err_at(line_no, line, format!("element {g} listed twice")).into());
        }
        rows[g] = Some(parse_element_line(line_no, line, body, n)?);
    }
    if let Some(g) = rows.iter().position(Option::is_none) {
        return Err(ParseError::new(format!("no line for element {g}"), text.trim()).into());
    }
    let rows: Vec<ElementLine> = rows.into_iter().flatten().collect();
    let mut alpha = Vec::new();
    let mut theta1 = Vec::new();
    let mut beta = Vec::new();
    let mut theta2 = Vec::new();
    for row in rows {
        alpha.push(row.alpha);
        theta1.push(row.theta1);
        beta.push(row.beta);
        theta2.push(row.theta2);
    }
    Ok(ExtendedActionData::new(
        group, pairs, alpha, theta1, beta, theta2,
    )?)
}

pub fn load_action_file(path: &Path) -> Result<ExtendedActionData, FileError> {
    let text = read(path)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    parse_action_file(&text, |group_path| load_group_file(&dir.join(group_path)))
}

pub fn format_action_file(data: &ExtendedActionData, group_path: &str) -> String {
    let pairs: Vec<String> = data.pairs().iter().map(SeifertPair::to_string).collect();
    let mut out = format!("group: {group_path}\npairs: {}\n", pairs.join(" "));
    for g in data.group().elements() {
        let theta2: Vec<String> = (0..data.n_boundary())
            .map(|i| data.theta2(i, g).to_string())
            .collect();
        out.push_str(&format!(
            "{g}: alpha={} theta1={} beta={} theta2={}\n",
            data.alpha(g),
            data.theta1(g),
            data.beta(g),
            theta2.join(",")
        ));
    }
    out
}
