//! Blocks (maximal 2-connected pieces), forests of cliques, and the block
//! taxonomy relative to a distinguished vertex set `S`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{BalanceWitness, Sign, SignedGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, each sorted; isolated vertices are
    /// single-vertex blocks.
    pub blocks: Vec<Vec<Vertex>>,
    /// Vertices lying in two or more blocks.
    pub cut_vertices: Vec<Vertex>,
    /// Edges of the block-cut forest as `(block index, cut vertex)`.
    pub tree_edges: Vec<(usize, Vertex)>,
}

impl BlockDecomposition {
    /// Block indices containing each vertex, keyed by vertex.
    pub fn membership(&self) -> BTreeMap<Vertex, Vec<usize>> {
        let mut out: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out.entry(v).or_default().push(i);
            }
        }
        out
    }
}

/// Block decomposition by the lowpoint DFS, iterative so deep paths are fine.
pub fn blocks(g: &SignedGraph) -> BlockDecomposition {
    const NONE: Vertex = Vertex::MAX;
    let bound = g.id_bound();
    let nbrs: Vec<Vec<Vertex>> = (0..bound as Vertex)
        .map(|v| g.neighbors(v).map(|(u, _)| u).collect())
        .collect();
    let mut disc = vec![0usize; bound];
    let mut low = vec![0usize; bound];
    let mut timer = 0usize;
    let mut found: Vec<Vec<Vertex>> = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();

    for root in g.vertices() {
        if disc[root as usize] != 0 {
            continue;
        }
        timer += 1;
        disc[root as usize] = timer;
        low[root as usize] = timer;
        if nbrs[root as usize].is_empty() {
            found.push(vec![root]);
            continue;
        }
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, NONE, 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if frame.2 < nbrs[v as usize].len() {
                let w = nbrs[v as usize][frame.2];
                frame.2 += 1;
                if disc[w as usize] == 0 {
                    edge_stack.push((v, w));
                    timer += 1;
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w as usize] < disc[v as usize] {
                    edge_stack.push((v, w));
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
                continue;
            }
            stack.pop();
            if let Some(&(u, _, _)) = stack.last() {
                low[u as usize] = low[u as usize].min(low[v as usize]);
                if low[v as usize] >= disc[u as usize] {
                    let mut block = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    found.push(block);
                }
            }
        }
    }

    found.sort();
    let mut count: BTreeMap<Vertex, usize> = BTreeMap::new();
    for b in &found {
        for &v in b {
            *count.entry(v).or_default() += 1;
        }
    }
    let cut_vertices: Vec<Vertex> = count
        .iter()
        .filter(|&(_, &c)| c >= 2)
        .map(|(&v, _)| v)
        .collect();
    let cuts: BTreeSet<Vertex> = cut_vertices.iter().copied().collect();
    let tree_edges = found
        .iter()
        .enumerate()
        .flat_map(|(i, b)| b.iter().filter(|v| cuts.contains(v)).map(move |&v| (i, v)))
        .collect();
    BlockDecomposition {
        blocks: found,
        cut_vertices,
        tree_edges,
    }
}

/// Whether every vertex pair in `set` is adjacent.
pub fn is_clique(g: &SignedGraph, set: &[Vertex]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// True iff every block induces a complete graph.
pub fn is_forest_of_cliques(g: &SignedGraph) -> bool {
    blocks(g).blocks.iter().all(|b| is_clique(g, b))
}

/// Some triangle inside `within` whose sign product is positive; the
/// lexicographically smallest one is returned.
pub fn has_positive_triangle(
    g: &SignedGraph,
    within: &[Vertex],
) -> Option<(Vertex, Vertex, Vertex)> {
    let inside = g.mask(within);
    let mut xs: Vec<Vertex> = within.iter().copied().filter(|&v| g.contains(v)).collect();
    xs.sort_unstable();
    xs.dedup();
    for &a in &xs {
        for (b, sab) in g.neighbors(a) {
            if b <= a || !inside[b as usize] {
                continue;
            }
            for (c, sbc) in g.neighbors(b) {
                if c <= b || !inside[c as usize] {
                    continue;
                }
                if let Some(sac) = g.sign(a, c) {
                    if sab.times(sbc).times(sac) == Sign::Positive {
                        return Some((a, b, c));
                    }
                }
            }
        }
    }
    None
}

/// A set `W` inside `within` such that switching `W` leaves no positive edge
/// inside `within`.
///
/// Requires `G[within]` chordal without positive triangles. The dual of such a
/// graph is balanced, and the balance test on the dual yields `W`.
pub fn switch_to_all_negative(g: &SignedGraph, within: &[Vertex]) -> Result<Vec<Vertex>> {
    if let Some((a, b, c)) = has_positive_triangle(g, within) {
        return Err(Error::PositiveTriangle(a, b, c));
    }
    let part = g.induced(within)?;
    let w = match part.dual().is_balanced() {
        BalanceWitness::Balanced { switch_set } => switch_set,
        BalanceWitness::Unbalanced { cycle } => return Err(Error::DuallyNegativeCycle(cycle)),
    };
    let check = part.switch(&w)?;
    if let Some((u, v, _)) = check.edges().find(|e| e.2 == Sign::Positive) {
        return Err(Error::Invariant(format!(
            "edge {u}-{v} still positive after switching"
        )));
    }
    Ok(w)
}

/// Classification of one block of `G - S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockLabel {
    pub vertices: Vec<Vertex>,
    /// Vertices whose neighbours in `G - S` all lie in this block.
    pub interior: Vec<Vertex>,
    pub exterior: Vec<Vertex>,
    /// Some interior vertex has a neighbour in `S`.
    pub special: bool,
    /// Two vertices, both exterior.
    pub path: bool,
    /// At most one exterior vertex.
    pub leaf: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockLabels {
    pub blocks: Vec<BlockLabel>,
    /// Vertices of `G - S` contained only in path blocks.
    pub path_vertices: Vec<Vertex>,
    /// Vertex-disjoint sequences covering the path vertices; consecutive
    /// entries are adjacent and inner entries have exactly their two sequence
    /// neighbours in `G - S`.
    pub pure_paths: Vec<Vec<Vertex>>,
}

impl BlockLabels {
    pub fn non_path_blocks(&self) -> impl Iterator<Item = &BlockLabel> {
        self.blocks.iter().filter(|b| !b.path)
    }
}

/// Sorted set of vertices outside `s` adjacent to some vertex of `s`.
pub fn neighbourhood(g: &SignedGraph, s: &[Vertex]) -> Vec<Vertex> {
    let inside = g.mask(s);
    let mut out: Vec<Vertex> = s
        .iter()
        .flat_map(|&v| g.neighbors(v).map(|(u, _)| u))
        .filter(|&u| !inside[u as usize])
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Block taxonomy of `G - S`.
pub fn label_blocks(g: &SignedGraph, s: &[Vertex]) -> BlockLabels {
    let rest = g.without(s);
    let touches_s = g.mask(&neighbourhood(g, s));
    let decomposition = blocks(&rest);

    let labels: Vec<BlockLabel> = decomposition
        .blocks
        .iter()
        .map(|b| {
            let inside = rest.mask(b);
            let (interior, exterior): (Vec<Vertex>, Vec<Vertex>) = b
                .iter()
                .partition(|&&x| rest.neighbors(x).all(|(y, _)| inside[y as usize]));
            BlockLabel {
                special: interior.iter().any(|&x| touches_s[x as usize]),
                path: b.len() == 2 && exterior.len() == 2,
                leaf: exterior.len() <= 1,
                vertices: b.clone(),
                interior,
                exterior,
            }
        })
        .collect();

    let membership = decomposition.membership();
    let path_vertices: Vec<Vertex> = membership
        .iter()
        .filter(|(_, bs)| bs.iter().all(|&i| labels[i].path))
        .map(|(&v, _)| v)
        .collect();
    let pure_paths = pure_paths(&rest, &path_vertices);

    BlockLabels {
        blocks: labels,
        path_vertices,
        pure_paths,
    }
}

fn pure_paths(rest: &SignedGraph, path_vertices: &[Vertex]) -> Vec<Vec<Vertex>> {
    let is_path = rest.mask(path_vertices);
    // may sit strictly inside a pure path
    let inner: Vec<bool> = (0..rest.id_bound() as Vertex)
        .map(|v| {
            is_path[v as usize]
                && rest.degree(v) == 2
                && rest.neighbors(v).all(|(u, _)| is_path[u as usize])
        })
        .collect();
    let mut claimed = vec![false; rest.id_bound()];
    let mut out = Vec::new();

    for &start in path_vertices {
        if !inner[start as usize] || claimed[start as usize] {
            continue;
        }
        // walk to one end of the run of inner vertices, then collect it
        let (mut prev, mut cur) = (Vertex::MAX, start);
        loop {
            let next = rest
                .neighbors(cur)
                .map(|(u, _)| u)
                .find(|&u| u != prev && inner[u as usize] && u != start);
            match next {
                Some(u) if !claimed[u as usize] => {
                    prev = cur;
                    cur = u;
                }
                _ => break,
            }
        }
        let mut run = vec![cur];
        claimed[cur as usize] = true;
        let mut prev = Vertex::MAX;
        loop {
            let next = rest
                .neighbors(cur)
                .map(|(u, _)| u)
                .find(|&u| u != prev && inner[u as usize] && !claimed[u as usize]);
            match next {
                Some(u) => {
                    claimed[u as usize] = true;
                    run.push(u);
                    prev = cur;
                    cur = u;
                }
                None => break,
            }
        }
        // extend by the outer path-vertex neighbours when still free
        let first_out = outer_neighbour(rest, &run, 0, &is_path, &claimed);
        if let Some(x) = first_out {
            claimed[x as usize] = true;
            run.insert(0, x);
        }
        let last = run.len() - 1;
        if let Some(x) = outer_neighbour(rest, &run, last, &is_path, &claimed) {
            claimed[x as usize] = true;
            run.push(x);
        }
        out.push(run);
    }

    for &v in path_vertices {
        if claimed[v as usize] {
            continue;
        }
        claimed[v as usize] = true;
        let mut run = vec![v];
        if let Some((u, _)) = rest
            .neighbors(v)
            .find(|&(u, _)| is_path[u as usize] && !claimed[u as usize])
        {
            claimed[u as usize] = true;
            run.push(u);
        }
        out.push(run);
    }
    out.sort();
    out
}

fn outer_neighbour(
    rest: &SignedGraph,
    run: &[Vertex],
    at: usize,
    is_path: &[bool],
    claimed: &[bool],
) -> Option<Vertex> {
    let v = run[at];
    rest.neighbors(v)
        .map(|(u, _)| u)
        .find(|&u| is_path[u as usize] && !claimed[u as usize] && !run.contains(&u))
}
