//! One-way reduction Rules 1-7 and the exhaustive driver.
//!
//! Each rule deletes vertices and lowers `k`; if the reduced instance is a
//! yes-instance, so is the original. Vertices that a rule marks are
//! collected into `S`; once no rule applies, `G - S` is a forest of cliques
//! without positive triangles.
//!
//! Throughout, "ptf clique" means a clique with no positive triangle.

use std::collections::BTreeSet;
use std::fmt;

use crate::decomposition::{has_positive_triangle, is_clique};
use crate::error::{Error, Result};
use crate::format::TraceLine;
use crate::graph::{Sign, SignedGraph, Vertex};

/// The structure that licenses a rule application.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    /// Rule 1: positive triangle whose removal leaves the graph connected.
    Triangle { a: Vertex, b: Vertex, c: Vertex },
    /// Rule 2: positive triangle whose removal leaves exactly two
    /// components, `clique` being a ptf clique.
    SplitTriangle {
        a: Vertex,
        b: Vertex,
        c: Vertex,
        clique: Vec<Vertex>,
    },
    /// Rules 3 and 4: `clique` is a ptf clique component of `G - v`
    /// containing `a` and `b`.
    Pair {
        v: Vertex,
        a: Vertex,
        b: Vertex,
        clique: Vec<Vertex>,
    },
    /// Rule 5: `clique` is a component of `G - v` and `clique + v` is a
    /// ptf clique.
    Pendant { v: Vertex, clique: Vec<Vertex> },
    /// Rule 6: induced path `a - b - c` whose removal keeps connectivity.
    Path { a: Vertex, b: Vertex, c: Vertex },
    /// Rule 7: non-adjacent `v`, `b`; `G - {v, b}` has two components and
    /// `clique + v`, `clique + b` are ptf cliques.
    Pincer {
        v: Vertex,
        b: Vertex,
        clique: Vec<Vertex>,
    },
}

/// One application of Rules 1-7. `deleted` and `marked` are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RuleApplication {
    pub rule: u8,
    pub deleted: Vec<Vertex>,
    pub marked: Vec<Vertex>,
    pub k_delta: i64,
    pub witness: Witness,
}

fn sorted(mut vs: Vec<Vertex>) -> Vec<Vertex> {
    vs.sort_unstable();
    vs.dedup();
    vs
}

impl RuleApplication {
    /// Derive deletions, marks and the parameter drop from a witness.
    pub fn new(rule: u8, witness: Witness) -> Result<Self> {
        use Witness::*;
        let (deleted, marked, k_delta) = match (rule, &witness) {
            (1, Triangle { a, b, c }) => (vec![*a, *b, *c], vec![*a, *b, *c], 3),
            (2, SplitTriangle { a, b, c, clique }) => {
                let mut d = vec![*a, *b, *c];
                d.extend(clique);
                (d, vec![*a, *b, *c], 2)
            }
            (3, Pair { a, b, .. }) => (vec![*a, *b], vec![*a, *b], 2),
            (4, Pair { a, b, .. }) => (vec![*a, *b], vec![*a, *b], 4),
            (5, Pendant { clique, .. }) => (clique.clone(), vec![], 0),
            (6, Path { a, b, c }) => (vec![*a, *b, *c], vec![*a, *b, *c], 1),
            (7, Pincer { v, b, clique }) => {
                let mut d = vec![*v, *b];
                d.extend(clique);
                (d, vec![*v, *b], 1)
            }
            _ => return Err(Error::StaleApplication { rule }),
        };
        Ok(RuleApplication {
            rule,
            deleted: sorted(deleted),
            marked: sorted(marked),
            k_delta,
            witness,
        })
    }

    /// Whether the witness still licenses this application on `g`.
    pub fn holds(&self, g: &SignedGraph) -> bool {
        match RuleApplication::new(self.rule, self.witness.clone()) {
            Ok(fresh) if fresh == *self => {}
            _ => return false,
        }
        if !self.deleted.iter().all(|&v| g.contains(v)) {
            return false;
        }
        use Witness::*;
        match (self.rule, &self.witness) {
            (1, Triangle { a, b, c }) => {
                positive_triangle(g, *a, *b, *c) && g.is_connected_without(&[*a, *b, *c])
            }
            (2, SplitTriangle { a, b, c, clique }) => {
                let comps = g.components_without(&[*a, *b, *c]);
                positive_triangle(g, *a, *b, *c)
                    && comps.len() == 2
                    && comps.contains(clique)
                    && ptf_clique(g, clique)
            }
            (rule @ (3 | 4), Pair { v, a, b, clique }) => {
                if !g.contains(*v)
                    || a == b
                    || !clique.contains(a)
                    || !clique.contains(b)
                    || !g.components_without(&[*v]).contains(clique)
                    || !ptf_clique(g, clique)
                    || !g.is_connected_without(&[*a, *b])
                {
                    return false;
                }
                if rule == 3 {
                    g.has_edge(*a, *v) && !g.has_edge(*b, *v)
                } else {
                    positive_triangle(g, *v, *a, *b)
                }
            }
            (5, Pendant { v, clique }) => {
                g.contains(*v)
                    && g.components_without(&[*v]).contains(clique)
                    && ptf_clique(g, &with(clique, *v))
            }
            (6, Path { a, b, c }) => {
                a != c
                    && g.has_edge(*a, *b)
                    && g.has_edge(*b, *c)
                    && !g.has_edge(*a, *c)
                    && g.is_connected_without(&[*a, *b, *c])
            }
            (7, Pincer { v, b, clique }) => {
                let comps = g.components_without(&[*v, *b]);
                v != b
                    && !g.has_edge(*v, *b)
                    && comps.len() == 2
                    && comps.contains(clique)
                    && ptf_clique(g, &with(clique, *v))
                    && ptf_clique(g, &with(clique, *b))
            }
            _ => false,
        }
    }

    pub fn trace_line(&self) -> TraceLine {
        TraceLine::OneWay {
            rule: self.rule,
            deleted: self.deleted.clone(),
            marked: self.marked.clone(),
            kdelta: self.k_delta,
        }
    }
}

impl fmt::Display for RuleApplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.trace_line().fmt(f)
    }
}

fn with(set: &[Vertex], v: Vertex) -> Vec<Vertex> {
    let mut out = set.to_vec();
    out.push(v);
    out
}

fn positive_triangle(g: &SignedGraph, a: Vertex, b: Vertex, c: Vertex) -> bool {
    match (g.sign(a, b), g.sign(b, c), g.sign(a, c)) {
        (Some(x), Some(y), Some(z)) => x.times(y).times(z) == Sign::Positive,
        _ => false,
    }
}

fn ptf_clique(g: &SignedGraph, set: &[Vertex]) -> bool {
    is_clique(g, set) && has_positive_triangle(g, set).is_none()
}

/// Feed every application of `rule` on `g`, in witness order, to `visit`
/// until it returns `true`.
fn scan(g: &SignedGraph, rule: u8, visit: &mut dyn FnMut(RuleApplication) -> bool) {
    let mut emit = |w: Witness| visit(RuleApplication::new(rule, w).expect("rule matches witness"));
    let verts: Vec<Vertex> = g.vertices().collect();
    match rule {
        1 | 2 => {
            for &a in &verts {
                let na: Vec<Vertex> = g.neighbors(a).map(|x| x.0).filter(|&x| x > a).collect();
                for &b in &na {
                    for &c in na.iter().filter(|&&c| c > b) {
                        if !positive_triangle(g, a, b, c) {
                            continue;
                        }
                        if rule == 1 {
                            if g.is_connected_without(&[a, b, c])
                                && emit(Witness::Triangle { a, b, c })
                            {
                                return;
                            }
                            continue;
                        }
                        let comps = g.components_without(&[a, b, c]);
                        if comps.len() != 2 {
                            continue;
                        }
                        for clique in comps {
                            if ptf_clique(g, &clique)
                                && emit(Witness::SplitTriangle { a, b, c, clique })
                            {
                                return;
                            }
                        }
                    }
                }
            }
        }
        3 | 4 => {
            for &v in &verts {
                for clique in g.components_without(&[v]) {
                    if !ptf_clique(g, &clique) {
                        continue;
                    }
                    for &a in &clique {
                        for &b in &clique {
                            let ok = if rule == 3 {
                                g.has_edge(a, v) && !g.has_edge(b, v)
                            } else {
                                a < b && positive_triangle(g, v, a, b)
                            };
                            if ok
                                && g.is_connected_without(&[a, b])
                                && emit(Witness::Pair {
                                    v,
                                    a,
                                    b,
                                    clique: clique.clone(),
                                })
                            {
                                return;
                            }
                        }
                    }
                }
            }
        }
        5 => {
            for &v in &verts {
                for clique in g.components_without(&[v]) {
                    if ptf_clique(g, &with(&clique, v)) && emit(Witness::Pendant { v, clique }) {
                        return;
                    }
                }
            }
        }
        6 => {
            for &a in &verts {
                for (b, _) in g.neighbors(a) {
                    for (c, _) in g.neighbors(b) {
                        if c > a
                            && !g.has_edge(a, c)
                            && g.is_connected_without(&[a, b, c])
                            && emit(Witness::Path { a, b, c })
                        {
                            return;
                        }
                    }
                }
            }
        }
        7 => {
            for &v in &verts {
                for &b in verts.iter().filter(|&&b| b > v) {
                    if g.has_edge(v, b) {
                        continue;
                    }
                    let comps = g.components_without(&[v, b]);
                    if comps.len() != 2 {
                        continue;
                    }
                    for clique in comps {
                        if ptf_clique(g, &with(&clique, v))
                            && ptf_clique(g, &with(&clique, b))
                            && emit(Witness::Pincer { v, b, clique })
                        {
                            return;
                        }
                    }
                }
            }
        }
        _ => {}
    }
}

/// First applicable rule in the order 1..7, smallest witness first.
/// `None` only when `g` has no edges (for connected `g`).
pub fn find_rule(g: &SignedGraph) -> Option<RuleApplication> {
    let mut found = None;
    for rule in 1..=7 {
        scan(g, rule, &mut |app| {
            found = Some(app);
            true
        });
        if found.is_some() {
            break;
        }
    }
    found
}

/// Every application of every rule on `g`.
pub fn all_applications(g: &SignedGraph) -> Vec<RuleApplication> {
    let mut out = Vec::new();
    for rule in 1..=7 {
        scan(g, rule, &mut |app| {
            out.push(app);
            false
        });
    }
    out
}

/// Apply one rule. Rejects applications whose witness is not valid on `g`.
pub fn apply(g: &SignedGraph, k: i64, app: &RuleApplication) -> Result<(SignedGraph, i64)> {
    if !app.holds(g) {
        return Err(Error::StaleApplication { rule: app.rule });
    }
    Ok((g.without(&app.deleted), k - app.k_delta))
}

/// Result of running Rules 1-7 to exhaustion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutcome {
    pub final_graph: SignedGraph,
    pub final_k: i64,
    /// Marked vertices, in the identifiers of the input graph.
    pub s: Vec<Vertex>,
    pub trace: Vec<RuleApplication>,
    /// The run stopped because the parameter reached zero or below.
    pub early_stop: bool,
}

/// Apply Rules 1-7 until none applies or `k <= 0`.
pub fn reduce(g: &SignedGraph, k: i64) -> Result<ReductionOutcome> {
    reduce_with(g, k, true)
}

/// As [`reduce`]; with `early_stop == false` the loop ignores the
/// parameter and runs until no rule applies.
pub fn reduce_with(g: &SignedGraph, k: i64, early_stop: bool) -> Result<ReductionOutcome> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut cur = g.clone();
    let mut k_cur = k;
    let mut s = BTreeSet::new();
    let mut trace = Vec::new();
    loop {
        if early_stop && k_cur <= 0 {
            break;
        }
        let Some(app) = find_rule(&cur) else {
            if cur.edge_count() > 0 {
                return Err(Error::Invariant(format!(
                    "no rule applies to a connected graph with {} edges",
                    cur.edge_count()
                )));
            }
            break;
        };
        cur = cur.without(&app.deleted);
        if !cur.is_connected() {
            return Err(Error::Invariant(format!("{app} disconnected the graph")));
        }
        k_cur -= app.k_delta;
        s.extend(app.marked.iter().copied());
        trace.push(app);
    }
    Ok(ReductionOutcome {
        final_graph: cur,
        final_k: k_cur,
        s: s.into_iter().collect(),
        early_stop: early_stop && k_cur <= 0,
        trace,
    })
}
