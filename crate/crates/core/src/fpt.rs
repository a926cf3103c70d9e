//! Exact decision procedure in `O*(8^k)`.
//!
//! Rules 1-7 either certify a yes-instance or leave a set `S` of at most
//! `3k` marked vertices with `G - S` a forest of cliques. After switching
//! `G - S` to all-negative edges, every side assignment of `S` turns the rest
//! of the problem into Max-Cut-with-Weighted-Vertices, solved by the block DP.

use std::fmt;

use crate::decomposition::switch_to_all_negative;
use crate::error::{Error, Result};
use crate::graph::{Assignment, Side, Sign, SignedGraph, Vertex};
use crate::mcwv::{CliqueForest, WeightedInstance};
use crate::oneway::{reduce, reduce_with};

/// Default cap on `|S|`; larger sets are refused rather than enumerated.
pub const DEFAULT_MAX_MARKED: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Rules 1-7 drove the parameter to zero or below.
    EarlyYes,
    /// Every side assignment of `S` was evaluated.
    FullEnumeration,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::EarlyYes => "early-yes",
            Route::FullEnumeration => "full-enumeration",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveStats {
    pub marked: usize,
    pub guesses: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub answer: bool,
    /// Exact `beta(G)`, present whenever the enumeration ran.
    pub beta: Option<usize>,
    /// Bipartition whose consistent edges number `beta`.
    pub witness: Option<Assignment>,
    pub route: Route,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// After an early yes, rerun Rules 1-7 without stopping at `k <= 0` and
    /// enumerate anyway so that `beta` is known.
    pub exact_beta: bool,
    pub max_marked: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            exact_beta: false,
            max_marked: DEFAULT_MAX_MARKED,
        }
    }
}

/// Side payoffs for the vertices of `G - S` given a side assignment of `S`,
/// plus the number of edges inside `S` that the assignment keeps.
///
/// A vertex placed on side 1 keeps its positive edges into side 1 of `S` and
/// its negative edges into side 2, and symmetrically for side 2.
pub fn weights_for_guess(
    g: &SignedGraph,
    s: &[Vertex],
    guess: &Assignment,
) -> Result<(WeightedInstance, usize)> {
    let rest = g.delete_vertices(s)?;
    if let Some((u, v, _)) = rest.edges().find(|e| e.2 == Sign::Positive) {
        return Err(Error::PositiveEdge { u, v });
    }
    let (w1, w2) = guess_weights(g, s, guess)?;
    let mut b1 = std::collections::BTreeMap::new();
    let mut b2 = std::collections::BTreeMap::new();
    for v in rest.vertices() {
        b1.insert(v, w1[v as usize]);
        b2.insert(v, w2[v as usize]);
    }
    let offset = g.induced(s)?.consistent_edges(guess)?;
    Ok((WeightedInstance::new(rest, b1, b2)?, offset))
}

/// Dense `(w1, w2)` indexed by vertex id.
fn guess_weights(
    g: &SignedGraph,
    s: &[Vertex],
    guess: &Assignment,
) -> Result<(Vec<u64>, Vec<u64>)> {
    let mut w1 = vec![0u64; g.id_bound()];
    let mut w2 = vec![0u64; g.id_bound()];
    let in_s = g.mask(s);
    for &x in s {
        let side = guess.side(x).ok_or(Error::MissingSide(x))?;
        for (v, sign) in g.neighbors(x) {
            if in_s[v as usize] {
                continue;
            }
            // side on which v keeps the edge vx
            let keep = match sign {
                Sign::Positive => side,
                Sign::Negative => side.other(),
            };
            match keep {
                Side::One => w1[v as usize] += 1,
                Side::Two => w2[v as usize] += 1,
            }
        }
    }
    Ok((w1, w2))
}

pub fn solve(g: &SignedGraph, k: i64) -> Result<SolveResult> {
    solve_with(g, k, &SolveOptions::default())
}

pub fn solve_with(g: &SignedGraph, k: i64, opts: &SolveOptions) -> Result<SolveResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let red = reduce(g, k)?;
    if red.early_stop {
        if !opts.exact_beta {
            return Ok(SolveResult {
                answer: true,
                beta: None,
                witness: None,
                route: Route::EarlyYes,
                stats: SolveStats {
                    marked: red.s.len(),
                    guesses: 0,
                },
            });
        }
        let full = reduce_with(g, k, false)?;
        let (beta, witness, stats) = enumerate(g, &full.s, opts.max_marked)?;
        if (4 * beta as i64) < g.ptq() + k {
            return Err(Error::Invariant(format!(
                "rules certified yes but beta={beta} misses ptq+k={}",
                g.ptq() + k
            )));
        }
        return Ok(SolveResult {
            answer: true,
            beta: Some(beta),
            witness: Some(witness),
            route: Route::EarlyYes,
            stats,
        });
    }
    let (beta, witness, stats) = enumerate(g, &red.s, opts.max_marked)?;
    Ok(SolveResult {
        answer: 4 * beta as i64 >= g.ptq() + k,
        beta: Some(beta),
        witness: Some(witness),
        route: Route::FullEnumeration,
        stats,
    })
}

/// Exact `beta(G)` given a set `S` with `G - S` a forest of cliques free of
/// positive triangles.
pub fn beta_given_marked(
    g: &SignedGraph,
    s: &[Vertex],
    max_marked: usize,
) -> Result<(usize, Assignment)> {
    enumerate(g, s, max_marked).map(|(b, w, _)| (b, w))
}

fn enumerate(
    g: &SignedGraph,
    s: &[Vertex],
    max_marked: usize,
) -> Result<(usize, Assignment, SolveStats)> {
    if s.len() > max_marked {
        return Err(Error::GuessSpace {
            marked: s.len(),
            limit: max_marked,
        });
    }
    let in_s = g.mask(s);
    let rest: Vec<Vertex> = g.vertices().filter(|&v| !in_s[v as usize]).collect();
    let w = switch_to_all_negative(g, &rest)?;
    let h = g.switch(&w)?;
    let forest = CliqueForest::new(&h.without(s))?;
    let inner = h.induced(s)?;

    let guesses: u64 = if s.is_empty() { 1 } else { 1 << (s.len() - 1) };
    let mut best: Option<(usize, Assignment)> = None;
    for mask in 0..guesses {
        let guess: Assignment = s
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let two = i > 0 && mask >> (i - 1) & 1 == 1;
                (x, if two { Side::Two } else { Side::One })
            })
            .collect();
        let (w1, w2) = guess_weights(&h, s, &guess)?;
        let (value, mut full) = forest.solve(|v| w1[v as usize], |v| w2[v as usize]);
        let total = value as usize + inner.consistent_edges(&guess)?;
        full.extend(&guess);
        let full = full.flipped(&w);
        let better = match &best {
            None => true,
            Some((b, a)) => total > *b || (total == *b && full < *a),
        };
        if better {
            best = Some((total, full));
        }
    }
    let (beta, witness) = best.expect("at least one guess");
    Ok((
        beta,
        witness,
        SolveStats {
            marked: s.len(),
            guesses,
        },
    ))
}
