//! Instance files and trace lines.
//!
//! Instance grammar, one item per line:
//!
//! ```text
//! c <free text>        comment, anywhere
//! p signed <n> <m>     header, first non-comment line, exactly once
//! k <integer>          parameter, at most once
//! e <u> <v> <+|->      edge, exactly m times, 1 <= u, v <= n
//! ```
//!
//! Blank lines are skipped. A `+` and a `-` edge on the same pair cancel.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, Vertex};

/// A parsed instance file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: SignedGraph,
    pub k: Option<i64>,
}

/// Largest vertex count a file may declare.
pub const MAX_VERTICES: usize = 1 << 20;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num<T: FromStr>(line: usize, what: &str, tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(usize, usize)> = None;
    let mut k = None;
    let mut edges = Vec::new();
    // (u, v) -> line of the first edge of each sign
    let mut seen: BTreeMap<(Vertex, Vertex), [Option<usize>; 2]> = BTreeMap::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else {
            continue;
        };
        if kind == "c" {
            continue;
        }
        let rest: Vec<&str> = toks.collect();
        match kind {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                if rest.len() != 3 || rest[0] != "signed" {
                    return Err(parse_err(line, "expected `p signed <n> <m>`"));
                }
                let n: usize = parse_num(line, "vertex count", rest[1])?;
                let m: usize = parse_num(line, "edge count", rest[2])?;
                if n > MAX_VERTICES {
                    return Err(parse_err(
                        line,
                        format!("more than {MAX_VERTICES} vertices"),
                    ));
                }
                header = Some((n, m));
            }
            "k" => {
                if header.is_none() {
                    return Err(parse_err(line, "`k` line before header"));
                }
                if k.is_some() {
                    return Err(parse_err(line, "duplicate `k` line"));
                }
                if rest.len() != 1 {
                    return Err(parse_err(line, "expected `k <integer>`"));
                }
                k = Some(parse_num::<i64>(line, "parameter", rest[0])?);
            }
            "e" => {
                let Some((n, m)) = header else {
                    return Err(parse_err(line, "edge line before header"));
                };
                if rest.len() != 3 {
                    return Err(parse_err(line, "expected `e <u> <v> <+|->`"));
                }
                let u: Vertex = parse_num(line, "vertex", rest[0])?;
                let v: Vertex = parse_num(line, "vertex", rest[1])?;
                for w in [u, v] {
                    if w == 0 || w as usize > n {
                        return Err(parse_err(line, format!("vertex {w} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {u}")));
                }
                let sign = match rest[2] {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    other => return Err(parse_err(line, format!("invalid sign `{other}`"))),
                };
                if edges.len() == m {
                    return Err(parse_err(line, format!("more than {m} edge lines")));
                }
                let slot = &mut seen.entry((u.min(v), u.max(v))).or_default()[sign as usize];
                if let Some(first) = *slot {
                    return Err(parse_err(
                        line,
                        format!("edge {u}-{v} {sign} repeats line {first}"),
                    ));
                }
                *slot = Some(line);
                edges.push((u, v, sign));
            }
            other => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
    }

    let Some((n, m)) = header else {
        return Err(parse_err(
            last_line.max(1),
            "missing `p signed <n> <m>` header",
        ));
    };
    if edges.len() != m {
        return Err(parse_err(
            last_line.max(1),
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    let graph = SignedGraph::build(n, &edges).map_err(|e| parse_err(last_line, e.to_string()))?;
    Ok(Instance { graph, k })
}

/// Write `g` in the instance format, renumbering vertices to `1..=n` in
/// increasing order of their identifiers. Returns the text and the original
/// identifier of every compact vertex (`ids[i]` became `i + 1`).
pub fn serialize(g: &SignedGraph, k: Option<i64>, comments: &[String]) -> (String, Vec<Vertex>) {
    let ids: Vec<Vertex> = g.vertices().collect();
    let mut compact = vec![0; g.id_bound()];
    for (i, &v) in ids.iter().enumerate() {
        compact[v as usize] = i + 1;
    }
    let mut out = String::new();
    for c in comments {
        for l in c.lines() {
            out.push_str("c ");
            out.push_str(l);
            out.push('\n');
        }
    }
    out.push_str(&format!(
        "p signed {} {}\n",
        g.vertex_count(),
        g.edge_count()
    ));
    if let Some(k) = k {
        out.push_str(&format!("k {k}\n"));
    }
    for (u, v, s) in g.edges() {
        out.push_str(&format!(
            "e {} {} {}\n",
            compact[u as usize], compact[v as usize], s
        ));
    }
    (out, ids)
}

/// Comma-separated list, empty string for an empty list.
pub fn join_list(vs: &[Vertex]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_list(line: usize, s: &str) -> Result<Vec<Vertex>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| parse_num(line, "vertex", t)).collect()
}

/// One line of a reduction trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceLine {
    /// `rule=<1..7> deleted=<list> marked=<list> kdelta=<d>`
    OneWay {
        rule: u8,
        deleted: Vec<Vertex>,
        marked: Vec<Vertex>,
        kdelta: i64,
    },
    /// `rule=<8..11> deleted=<list> added=<list> kdelta=<d>`
    TwoWay {
        rule: u8,
        deleted: Vec<Vertex>,
        added: Vec<Vertex>,
        kdelta: i64,
    },
}

impl fmt::Display for TraceLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (rule, deleted, key, third, kdelta) = match self {
            TraceLine::OneWay {
                rule,
                deleted,
                marked,
                kdelta,
            } => (rule, deleted, "marked", marked, kdelta),
            TraceLine::TwoWay {
                rule,
                deleted,
                added,
                kdelta,
            } => (rule, deleted, "added", added, kdelta),
        };
        write!(
            f,
            "rule={rule} deleted={} {key}={} kdelta={kdelta}",
            join_list(deleted),
            join_list(third)
        )
    }
}

impl FromStr for TraceLine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.len() != 4 {
            return Err(parse_err(1, "expected four `key=value` fields"));
        }
        let field = |i: usize, key: &str| -> Result<&str> {
            toks[i]
                .strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .ok_or_else(|| parse_err(1, format!("expected `{key}=` in field {}", i + 1)))
        };
        let rule: u8 = parse_num(1, "rule", field(0, "rule")?)?;
        let deleted = parse_list(1, field(1, "deleted")?)?;
        let kdelta: i64 = parse_num(1, "kdelta", field(3, "kdelta")?)?;
        match rule {
            1..=7 => Ok(TraceLine::OneWay {
                rule,
                deleted,
                marked: parse_list(1, field(2, "marked")?)?,
                kdelta,
            }),
            8..=11 => Ok(TraceLine::TwoWay {
                rule,
                deleted,
                added: parse_list(1, field(2, "added")?)?,
                kdelta,
            }),
            _ => Err(parse_err(1, format!("unknown rule {rule}"))),
        }
    }
}
