//! Text table files and JSON summaries for groups and quandles.
//!
//! A table file holds an optional `# name` line, a line with the order `n`,
//! then `n` lines of `n` whitespace-separated indices. Blank lines are
//! ignored; anything after the last row is rejected.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::Caps;
use crate::group::{FiniteGroup, GroupError};
use crate::quandle::{Quandle, QuandleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
}

fn parse_err(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse { line, message: message.into() }
}

/// A parsed table file before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableFile {
    pub name: Option<String>,
    pub rows: Vec<Vec<usize>>,
}

pub fn parse_table(text: &str) -> Result<TableFile, IoError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty()).peekable();
    let mut name = None;
    if let Some((_, l)) = lines.peek() {
        if let Some(rest) = l.strip_prefix('#') {
            name = Some(rest.trim().to_string()).filter(|s| !s.is_empty());
            lines.next();
        }
    }
    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing order line"))?;
    let n: usize = header.parse().map_err(|_| parse_err(line, format!("expected the order, found `{header}`")))?;
    if n == 0 {
        return Err(parse_err(line, "order must be positive"));
    }
    let mut rows = Vec::with_capacity(n);
    let mut last = line;
    for r in 0..n {
        let (line, text) = lines.next().ok_or_else(|| parse_err(last + 1, format!("expected {n} rows, found {r}")))?;
        last = line;
        let row = text
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(line, format!("`{t}` is not a non-negative integer"))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(parse_err(line, format!("row has {} entries, expected {n}", row.len())));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(parse_err(line, format!("entry {v} is outside 0..{n}")));
        }
        rows.push(row);
    }
    if let Some((line, text)) = lines.next() {
        return Err(parse_err(line, format!("trailing content `{text}`")));
    }
    Ok(TableFile { name, rows })
}

pub fn parse_group(text: &str, caps: &Caps) -> Result<FiniteGroup, IoError> {
    let t = parse_table(text)?;
    Ok(FiniteGroup::from_table_capped(t.rows, t.name, caps.order)?)
}

pub fn parse_quandle(text: &str) -> Result<Quandle, IoError> {
    let t = parse_table(text)?;
    Ok(Quandle::from_table(t.rows, t.name)?)
}

fn write_table(name: Option<&str>, rows: &[Vec<usize>]) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        out.push_str(&format!("# {name}\n"));
    }
    out.push_str(&format!("{}\n", rows.len()));
    for row in rows {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn export_group(g: &FiniteGroup) -> String {
    write_table(g.name(), &g.rows())
}

pub fn export_quandle(q: &Quandle) -> String {
    write_table(q.name(), &q.rows())
}

/// Structural summary of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
    pub abelian: bool,
    pub identity: usize,
    pub center_size: usize,
    pub commutator_subgroup_size: usize,
    pub exponent: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aut_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aaut_count: Option<usize>,
}

impl GroupInfo {
    /// `aut_count` is the size of `Aut(G)` when it was enumerated;
    /// `|AAut(G)|` always equals it.
    pub fn new(g: &FiniteGroup, aut_count: Option<usize>) -> Self {
        Self {
            name: g.label(),
            order: g.order(),
            abelian: g.is_abelian(),
            identity: g.identity(),
            center_size: g.center().len(),
            commutator_subgroup_size: g.commutator_subgroup().len(),
            exponent: g.exponent(),
            aut_count,
            aaut_count: aut_count,
        }
    }
}

/// A quandle's tables and flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleInfo {
    pub name: String,
    pub order: usize,
    pub op: Vec<Vec<usize>>,
    pub dual: Vec<Vec<usize>>,
    pub commutative: bool,
    pub cocommutative: bool,
    pub involutory: bool,
    pub trivial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inn_size: Option<usize>,
}

impl QuandleInfo {
    pub fn new(q: &Quandle, caps: &Caps) -> Self {
        Self {
            name: q.label(),
            order: q.order(),
            op: q.rows(),
            dual: q.dual_rows(),
            commutative: q.is_commutative(),
            cocommutative: q.is_cocommutative(),
            involutory: q.is_involutory(),
            trivial: q.is_trivial(),
            inn_size: q.inn_group(caps.closure).ok().map(|g| g.len()),
        }
    }
}
