//! Kernelization to `O(k^3)` vertices.
//!
//! After Rules 1-7 produce the marked set `S`, the original graph is switched
//! so that `G - S` is an all-negative forest of cliques. The two-way Rules
//! 8-11 then shrink `G - S` without changing the answer. Once none applies,
//! three size thresholds either certify a yes-instance or bound the instance
//! by [`kernel_bound`].

use std::collections::BTreeMap;
use std::fmt;

use crate::decomposition::switch_to_all_negative;
use crate::decomposition::{is_forest_of_cliques, label_blocks, BlockLabel, BlockLabels};
use crate::error::{Error, Result};
use crate::format::TraceLine;
use crate::graph::{Sign, SignedGraph, Vertex};
use crate::mcwv::{self, WeightedInstance};
use crate::oneway::{reduce, RuleApplication};

/// What licensed a two-way rule application.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TwoWayWitness {
    /// Rule 8: `class` is a set of interior vertices of `block` sharing the
    /// same positive and negative neighbours in `S`.
    Twins {
        block: Vec<Vertex>,
        class: Vec<Vertex>,
    },
    /// Rule 9: `free` holds half of the even `block`, all interior and with
    /// no neighbour in `S`.
    Half {
        block: Vec<Vertex>,
        free: Vec<Vertex>,
    },
    /// Rule 10: triangle block `{x, y, u}` with `N(u) = {x, y}`.
    Ear {
        x: Vertex,
        y: Vertex,
        u: Vertex,
        bridge: bool,
    },
    /// Rule 11: component of `G - S` whose only neighbour in `S` is `s`.
    Hanging { component: Vec<Vertex>, s: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoWayApplication {
    pub rule: u8,
    pub deleted: Vec<Vertex>,
    /// Fresh vertex created by the bridge case of Rule 10.
    pub added: Vec<Vertex>,
    pub k_delta: i64,
    pub witness: TwoWayWitness,
}

impl TwoWayApplication {
    pub fn trace_line(&self) -> TraceLine {
        TraceLine::TwoWay {
            rule: self.rule,
            deleted: self.deleted.clone(),
            added: self.added.clone(),
            kdelta: self.k_delta,
        }
    }
}

impl fmt::Display for TwoWayApplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.trace_line().fmt(f)
    }
}

/// `(N+ ∩ S, N- ∩ S)` of a vertex.
fn signature(g: &SignedGraph, in_s: &[bool], x: Vertex) -> (Vec<Vertex>, Vec<Vertex>) {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (y, sign) in g.neighbors(x) {
        if in_s[y as usize] {
            match sign {
                Sign::Positive => pos.push(y),
                Sign::Negative => neg.push(y),
            }
        }
    }
    (pos, neg)
}

fn s_neighbours_of(g: &SignedGraph, in_s: &[bool], xs: &[Vertex]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = xs
        .iter()
        .flat_map(|&x| g.neighbors(x).map(|(y, _)| y))
        .filter(|&y| in_s[y as usize])
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn scan(
    g: &SignedGraph,
    s: &[Vertex],
    rule: u8,
    labels: &BlockLabels,
    visit: &mut dyn FnMut(TwoWayApplication) -> bool,
) {
    let in_s = g.mask(s);
    match rule {
        8 => {
            for block in &labels.blocks {
                let mut classes: BTreeMap<(Vec<Vertex>, Vec<Vertex>), Vec<Vertex>> =
                    BTreeMap::new();
                for &x in &block.interior {
                    classes.entry(signature(g, &in_s, x)).or_default().push(x);
                }
                let mut classes: Vec<_> = classes.into_iter().collect();
                classes.sort_by_key(|c| c.1[0]);
                for ((pos, neg), class) in classes {
                    let total = block.vertices.len() + pos.len() + neg.len();
                    if 2 * class.len() <= total || total < 2 {
                        continue;
                    }
                    let deleted = vec![class[0], class[1]];
                    let after = g.without(&deleted);
                    // two twins can make up the whole graph
                    if after.vertex_count() == 0 || !after.is_connected() {
                        continue;
                    }
                    let app = TwoWayApplication {
                        rule: 8,
                        deleted,
                        added: vec![],
                        k_delta: 0,
                        witness: TwoWayWitness::Twins {
                            block: block.vertices.clone(),
                            class,
                        },
                    };
                    if visit(app) {
                        return;
                    }
                }
            }
        }
        9 => {
            for block in &labels.blocks {
                let size = block.vertices.len();
                if size % 2 != 0 {
                    continue;
                }
                let free: Vec<Vertex> = block
                    .interior
                    .iter()
                    .copied()
                    .filter(|&x| g.neighbors(x).all(|(y, _)| !in_s[y as usize]))
                    .collect();
                if free.len() < size / 2 {
                    continue;
                }
                let app = TwoWayApplication {
                    rule: 9,
                    deleted: vec![free[0]],
                    added: vec![],
                    k_delta: 1,
                    witness: TwoWayWitness::Half {
                        block: block.vertices.clone(),
                        free: free[..size / 2].to_vec(),
                    },
                };
                if visit(app) {
                    return;
                }
            }
        }
        10 => {
            for block in labels.blocks.iter().filter(|b| b.vertices.len() == 3) {
                for &u in &block.vertices {
                    let others: Vec<Vertex> =
                        block.vertices.iter().copied().filter(|&v| v != u).collect();
                    let (x, y) = (others[0], others[1]);
                    if g.degree(u) != 2 || !g.has_edge(u, x) || !g.has_edge(u, y) {
                        continue;
                    }
                    let mut rest = g.without(&[u]);
                    rest.remove_edge(x, y);
                    let bridge = !rest.is_connected();
                    let app = if bridge {
                        TwoWayApplication {
                            rule: 10,
                            deleted: block.vertices.clone(),
                            added: vec![g.id_bound() as Vertex],
                            k_delta: 0,
                            witness: TwoWayWitness::Ear { x, y, u, bridge },
                        }
                    } else {
                        TwoWayApplication {
                            rule: 10,
                            deleted: vec![u],
                            added: vec![],
                            k_delta: 1,
                            witness: TwoWayWitness::Ear { x, y, u, bridge },
                        }
                    };
                    if visit(app) {
                        return;
                    }
                }
            }
        }
        11 => {
            for component in g.components_without(s) {
                let touching = s_neighbours_of(g, &in_s, &component);
                let [s0] = touching[..] else {
                    continue;
                };
                let p = hanging_gain(g, &component, s0);
                let app = TwoWayApplication {
                    rule: 11,
                    deleted: component.clone(),
                    added: vec![],
                    k_delta: p,
                    witness: TwoWayWitness::Hanging { component, s: s0 },
                };
                if visit(app) {
                    return;
                }
            }
        }
        _ => {}
    }
}

/// `p = 4 beta(G[T + s]) - ptq(G[T + s])`, with `beta` obtained from the
/// block DP on `T`.
fn hanging_gain(g: &SignedGraph, component: &[Vertex], s: Vertex) -> i64 {
    let mut w1 = BTreeMap::new();
    let mut w2 = BTreeMap::new();
    for &x in component {
        match g.sign(s, x) {
            Some(Sign::Positive) => {
                w1.insert(x, 1);
            }
            Some(Sign::Negative) => {
                w2.insert(x, 1);
            }
            None => {}
        }
    }
    let t = g.induced(component).expect("component of g");
    let inst = WeightedInstance::new(t, w1, w2).expect("weights on component");
    let (value, _) = mcwv::solve(&inst).expect("G - S is a forest of cliques");
    let mut union = component.to_vec();
    union.push(s);
    let ptq = g.induced(&union).expect("subset of g").ptq();
    4 * value as i64 - ptq
}

/// First applicable two-way rule, in the order 8, 9, 10, 11.
///
/// Requires `G - S` to be an all-negative forest of cliques.
pub fn find_two_way(g: &SignedGraph, s: &[Vertex]) -> Option<TwoWayApplication> {
    let labels = label_blocks(g, s);
    let mut found = None;
    for rule in 8..=11 {
        scan(g, s, rule, &labels, &mut |app| {
            found = Some(app);
            true
        });
        if found.is_some() {
            break;
        }
    }
    found
}

/// Every application of one two-way rule on `(g, S)`.
pub fn applications(g: &SignedGraph, s: &[Vertex], rule: u8) -> Vec<TwoWayApplication> {
    let labels = label_blocks(g, s);
    let mut out = Vec::new();
    scan(g, s, rule, &labels, &mut |app| {
        out.push(app);
        false
    });
    out
}

/// Apply a two-way rule found on `(g, S)`.
pub fn apply_two_way(
    g: &SignedGraph,
    k: i64,
    s: &[Vertex],
    app: &TwoWayApplication,
) -> Result<(SignedGraph, i64)> {
    if !applications(g, s, app.rule).contains(app) {
        return Err(Error::StaleApplication { rule: app.rule });
    }
    let mut out = g.without(&app.deleted);
    if let TwoWayWitness::Ear { x, y, u, bridge } = app.witness {
        if bridge {
            let z = out.add_vertex();
            let mut tally: BTreeMap<Vertex, i32> = BTreeMap::new();
            for (v, sign) in g.neighbors(x).chain(g.neighbors(y)) {
                if v != x && v != y && v != u {
                    *tally.entry(v).or_default() += if sign == Sign::Positive { 1 } else { -1 };
                }
            }
            for (v, t) in tally {
                match t.signum() {
                    1 => out.insert_edge(z, v, Sign::Positive),
                    -1 => out.insert_edge(z, v, Sign::Negative),
                    _ => {}
                }
            }
        } else {
            out.remove_edge(x, y);
        }
    }
    Ok((out, k - app.k_delta))
}

/// Why an instance was recognised as a yes-instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YesReason {
    KNonpositive,
    BoundLeafs,
    PathLength,
    BlockSize,
}

impl fmt::Display for YesReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            YesReason::KNonpositive => "k-nonpositive",
            YesReason::BoundLeafs => "threshold-boundLeafs",
            YesReason::PathLength => "threshold-pathlength",
            YesReason::BlockSize => "threshold-blocksize",
        })
    }
}

fn touched(g: &SignedGraph, in_s: &[bool], block: &BlockLabel) -> i64 {
    s_neighbours_of(g, in_s, &block.interior).len() as i64
}

/// Yes-certificates for a graph reduced by Rules 8-11, checked in order:
/// many `S`-contacts of non-path blocks, a long induced path of degree-2
/// vertices in `G - S`, an oversized block.
pub fn thresholds(g: &SignedGraph, k: i64, s: &[Vertex]) -> Option<YesReason> {
    let labels = label_blocks(g, s);
    let in_s = g.mask(s);
    let ns = s.len() as i64;

    let contacts: i64 = labels.non_path_blocks().map(|b| touched(g, &in_s, b)).sum();
    if contacts > ns * (2 * ns - 3 + 2 * k) {
        return Some(YesReason::BoundLeafs);
    }
    if longest_thin_path(g, s) as i64 > ns + k {
        return Some(YesReason::PathLength);
    }
    for block in labels.blocks.iter().filter(|b| b.vertices.len() >= 2) {
        let size = block.vertices.len() as i64;
        let limit =
            2 * block.exterior.len() as i64 + touched(g, &in_s, block) * (2 * ns + 2 * k + 1);
        if size > limit {
            return Some(YesReason::BlockSize);
        }
    }
    None
}

/// Largest `p` such that `G - S` has an induced path `u1 .. up` whose inner
/// vertices have no neighbours in `G - S` besides their two path neighbours.
pub fn longest_thin_path(g: &SignedGraph, s: &[Vertex]) -> usize {
    let rest = g.without(s);
    if rest.vertex_count() == 0 {
        return 0;
    }
    let mut best = if rest.edge_count() > 0 { 2 } else { 1 };
    let thin: Vec<bool> = (0..rest.id_bound() as Vertex)
        .map(|v| rest.contains(v) && rest.degree(v) == 2)
        .collect();
    let mut done = vec![false; rest.id_bound()];
    for start in rest.vertices() {
        if !thin[start as usize] || done[start as usize] {
            continue;
        }
        // maximal run of thin vertices through `start`
        let mut run = vec![start];
        done[start as usize] = true;
        for dir in 0..2 {
            loop {
                let end = if dir == 0 {
                    *run.last().unwrap()
                } else {
                    run[0]
                };
                let next = rest
                    .neighbors(end)
                    .map(|(u, _)| u)
                    .find(|&u| thin[u as usize] && !done[u as usize]);
                let Some(u) = next else { break };
                done[u as usize] = true;
                if dir == 0 {
                    run.push(u);
                } else {
                    run.insert(0, u);
                }
            }
        }
        let outer = |end: Vertex, inner: Option<Vertex>| {
            rest.neighbors(end)
                .map(|(u, _)| u)
                .find(|&u| Some(u) != inner && !run.contains(&u))
        };
        let first_in = run.get(1).copied();
        let last_in = run.len().checked_sub(2).map(|i| run[i]);
        let head = outer(run[0], first_in);
        let tail = outer(*run.last().unwrap(), last_in);
        for (h, t) in [(head, tail), (head, None), (None, tail), (None, None)] {
            let mut seq = Vec::new();
            seq.extend(h);
            seq.extend(&run);
            seq.extend(t);
            if is_thin_path(&rest, &seq) {
                best = best.max(seq.len());
                break;
            }
        }
    }
    best
}

fn is_thin_path(rest: &SignedGraph, seq: &[Vertex]) -> bool {
    let p = seq.len();
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != p {
        return false;
    }
    for i in 0..p {
        for j in i + 1..p {
            if rest.has_edge(seq[i], seq[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    (1..p.saturating_sub(1)).all(|i| rest.degree(seq[i]) == 2)
}

/// `B(k) = 3k + 24k^2(8k-3) + 24k(8k-3) + 3k(8k-3)(8k+1)`.
pub fn kernel_bound(k: i64) -> i64 {
    3 * k + 24 * k * k * (8 * k - 3) + 24 * k * (8 * k - 3) + 3 * k * (8 * k - 3) * (8 * k + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KernelStats {
    pub marked: usize,
    pub non_path_blocks: usize,
    pub path_vertices: usize,
    /// Vertices in the exterior of some non-path block.
    pub exterior_vertices: usize,
}

impl KernelStats {
    pub fn of(g: &SignedGraph, s: &[Vertex]) -> Self {
        let labels = label_blocks(g, s);
        let mut ext: Vec<Vertex> = labels
            .non_path_blocks()
            .flat_map(|b| b.exterior.iter().copied())
            .collect();
        ext.sort_unstable();
        ext.dedup();
        KernelStats {
            marked: s.len(),
            non_path_blocks: labels.non_path_blocks().count(),
            path_vertices: labels.path_vertices.len(),
            exterior_vertices: ext.len(),
        }
    }

    /// Whether the counts respect the bounds for parameter `k`.
    pub fn within(&self, k: i64) -> bool {
        let f = k * (8 * k - 3);
        self.non_path_blocks as i64 <= 6 * f
            && self.path_vertices as i64 <= 24 * k * f
            && self.exterior_vertices as i64 <= 12 * f
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub graph: SignedGraph,
    pub k: i64,
    pub s: Vec<Vertex>,
    pub stats: KernelStats,
    /// `B(k)` for the input parameter.
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Yes(YesReason),
    Kernel(Kernel),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelOutcome {
    pub verdict: Verdict,
    pub one_way: Vec<RuleApplication>,
    pub two_way: Vec<TwoWayApplication>,
}

/// Rules 1-7 for `S`, then Rules 8-11 to exhaustion on the switched input,
/// then the thresholds.
pub fn kernelize(g: &SignedGraph, k: i64) -> Result<KernelOutcome> {
    let red = reduce(g, k)?;
    let one_way = red.trace;
    if red.early_stop {
        return Ok(KernelOutcome {
            verdict: Verdict::Yes(YesReason::KNonpositive),
            one_way,
            two_way: vec![],
        });
    }
    let s = red.s;
    let in_s = g.mask(&s);
    let rest: Vec<Vertex> = g.vertices().filter(|&v| !in_s[v as usize]).collect();
    let w = switch_to_all_negative(g, &rest)
        .map_err(|e| Error::Invariant(format!("G - S after Rules 1-7: {e}")))?;
    let mut h = g.switch(&w)?;
    let mut k_cur = k;
    let mut two_way = Vec::new();

    while let Some(app) = find_two_way(&h, &s) {
        let (next, k_next) = apply_two_way(&h, k_cur, &s, &app)?;
        check_working(&next, &s, &app)?;
        h = next;
        k_cur = k_next;
        two_way.push(app);
        if k_cur <= 0 {
            return Ok(KernelOutcome {
                verdict: Verdict::Yes(YesReason::KNonpositive),
                one_way,
                two_way,
            });
        }
    }
    if let Some(reason) = thresholds(&h, k_cur, &s) {
        return Ok(KernelOutcome {
            verdict: Verdict::Yes(reason),
            one_way,
            two_way,
        });
    }
    let stats = KernelStats::of(&h, &s);
    let bound = kernel_bound(k);
    if h.vertex_count() as i64 > bound || !stats.within(k) {
        return Err(Error::Invariant(format!(
            "kernel with {} vertices and {stats:?} exceeds the bounds for k={k}",
            h.vertex_count()
        )));
    }
    Ok(KernelOutcome {
        verdict: Verdict::Kernel(Kernel {
            graph: h,
            k: k_cur,
            s,
            stats,
            bound,
        }),
        one_way,
        two_way,
    })
}

fn check_working(g: &SignedGraph, s: &[Vertex], app: &TwoWayApplication) -> Result<()> {
    let rest = g.without(s);
    let problem = if g.vertex_count() == 0 || !g.is_connected() {
        "disconnected the graph"
    } else if !is_forest_of_cliques(&rest) {
        "left G - S outside the forests of cliques"
    } else if rest.edges().any(|e| e.2 == Sign::Positive) {
        "left a positive edge in G - S"
    } else {
        return Ok(());
    };
    Err(Error::Invariant(format!("{app} {problem}")))
}

/// Leaf-block structure of a graph reduced by Rules 8-11: every leaf block
/// of `G - S` has an interior vertex adjacent to `S`, and a component of
/// `G - S` with a single vertex adjacent to `S` is that vertex alone.
pub fn leaf_blocks_touch_marked(g: &SignedGraph, s: &[Vertex]) -> bool {
    if s.is_empty() {
        return g.vertex_count() <= 1;
    }
    let in_s = g.mask(s);
    let labels = label_blocks(g, s);
    let leaves_ok = labels
        .blocks
        .iter()
        .filter(|b| b.leaf)
        .all(|b| touched(g, &in_s, b) > 0);
    let components_ok = g.components_without(s).iter().all(|t| {
        let contacts = t
            .iter()
            .filter(|&&x| g.neighbors(x).any(|(y, _)| in_s[y as usize]))
            .count();
        contacts != 1 || t.len() == 1
    });
    leaves_ok && components_ok
}
