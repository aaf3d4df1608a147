//! Text format for generator lists.
//!
//! ```text
//! # S_3 on three points
//! degree: 3
//! (0 1)
//! (1 2)
//! ```
//!
//! One permutation per line in cycle notation. Blank lines and `#` comments
//! are ignored. Without a `degree:` header the degree is one more than the
//! largest point mentioned.

use crate::error::{Error, Result};

use super::permutation::Permutation;
use super::system::TranspositionSystem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDefinition {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupDefinition {
    pub fn into_system(self) -> Result<TranspositionSystem> {
        TranspositionSystem::with_degree(self.degree, self.generators)
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_cycles(line_no: usize, text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(after_open) = rest.strip_prefix('(') else {
            return Err(parse_error(line_no, format!("expected '(' at {rest:?}")));
        };
        let Some(close) = after_open.find(')') else {
            return Err(parse_error(line_no, "unclosed cycle"));
        };
        let body = &after_open[..close];
        let points = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| parse_error(line_no, format!("bad point {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = after_open[close + 1..].trim_start();
    }
    Ok(cycles)
}

pub fn parse_group_definition(text: &str) -> Result<GroupDefinition> {
    let mut declared: Option<usize> = None;
    let mut parsed: Vec<(usize, Vec<Vec<usize>>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(value) = line.strip_prefix("degree:") {
            let value = value.trim();
            let m = value
                .parse::<usize>()
                .map_err(|_| parse_error(line_no, format!("bad degree {value:?}")))?;
            if declared.is_some() {
                return Err(parse_error(line_no, "duplicate degree header"));
            }
            declared = Some(m);
            continue;
        }
        parsed.push((line_no, parse_cycles(line_no, line)?));
    }
    let max_point = parsed
        .iter()
        .flat_map(|(_, cycles)| cycles.iter().flatten())
        .copied()
        .max();
    let degree = match (declared, max_point) {
        (Some(m), Some(p)) if p >= m => {
            return Err(parse_error(0, format!("point {p} exceeds declared degree {m}")));
        }
        (Some(m), _) => m,
        (None, Some(p)) => p + 1,
        (None, None) => 0,
    };
    let generators = parsed
        .into_iter()
        .map(|(line_no, cycles)| {
            Permutation::from_cycles(degree, &cycles)
                .map_err(|e| parse_error(line_no, e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupDefinition { degree, generators })
}
