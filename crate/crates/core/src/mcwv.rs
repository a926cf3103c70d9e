//! Max-Cut-with-Weighted-Vertices on forests of cliques.
//!
//! The objective of an assignment `f` is the number of edges whose ends get
//! different sides, plus `w1(x)` for every `x` on side 1 and `w2(x)` for every
//! `x` on side 2.
//!
//! The dynamic program roots the block-cut forest of every component. Blocks
//! are processed leaves first; a finished block reports its best value for
//! each side of the cut vertex it hangs from, and those values are folded into
//! the weights of that vertex in the parent block. Inside a clique of size `q`
//! with `a` vertices on side 1 the cut is `a * (q - a)`, and the best vertices
//! to put on side 1 are the `a` largest by `w1 - w2`.

use std::collections::{BTreeMap, VecDeque};

use crate::decomposition::{blocks, is_clique};
use crate::error::{Error, Result};
use crate::graph::{Assignment, Side, SignedGraph, Vertex};

/// Graph plus side payoffs. Edge signs are ignored; missing weights are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedInstance {
    graph: SignedGraph,
    w1: BTreeMap<Vertex, u64>,
    w2: BTreeMap<Vertex, u64>,
}

impl WeightedInstance {
    pub fn new(
        graph: SignedGraph,
        w1: BTreeMap<Vertex, u64>,
        w2: BTreeMap<Vertex, u64>,
    ) -> Result<Self> {
        if let Some(&v) = w1.keys().chain(w2.keys()).find(|&&v| !graph.contains(v)) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(WeightedInstance { graph, w1, w2 })
    }

    pub fn unweighted(graph: SignedGraph) -> Self {
        WeightedInstance {
            graph,
            w1: BTreeMap::new(),
            w2: BTreeMap::new(),
        }
    }

    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    pub fn w1(&self, v: Vertex) -> u64 {
        self.w1.get(&v).copied().unwrap_or(0)
    }

    pub fn w2(&self, v: Vertex) -> u64 {
        self.w2.get(&v).copied().unwrap_or(0)
    }

    /// Objective value of a (total) assignment.
    pub fn evaluate(&self, a: &Assignment) -> Result<u64> {
        let mut value = 0;
        for (u, v, _) in self.graph.edges() {
            let su = a.side(u).ok_or(Error::MissingSide(u))?;
            let sv = a.side(v).ok_or(Error::MissingSide(v))?;
            if su != sv {
                value += 1;
            }
        }
        for v in self.graph.vertices() {
            value += match a.side(v).ok_or(Error::MissingSide(v))? {
                Side::One => self.w1(v),
                Side::Two => self.w2(v),
            };
        }
        Ok(value)
    }
}

/// Optimal value and an assignment attaining it.
pub fn solve(inst: &WeightedInstance) -> Result<(u64, Assignment)> {
    let plan = CliqueForest::new(inst.graph())?;
    Ok(plan.solve(|v| inst.w1(v), |v| inst.w2(v)))
}

/// Block-cut forest of a forest of cliques, rooted once so that many weight
/// vectors can be solved against the same graph.
#[derive(Debug, Clone)]
pub struct CliqueForest {
    blocks: Vec<Vec<Vertex>>,
    /// cut vertex each non-root block hangs from
    parent: Vec<Option<Vertex>>,
    /// BFS order, parents before children
    order: Vec<usize>,
    roots: Vec<usize>,
    bound: usize,
}

impl CliqueForest {
    pub fn new(g: &SignedGraph) -> Result<Self> {
        let d = blocks(g);
        if !d.blocks.iter().all(|b| is_clique(g, b)) {
            return Err(Error::NotForestOfCliques);
        }
        let membership = d.membership();
        let nblocks = d.blocks.len();
        let mut parent: Vec<Option<Vertex>> = vec![None; nblocks];
        let mut seen = vec![false; nblocks];
        let mut order = Vec::with_capacity(nblocks);
        let mut roots = Vec::new();
        for start in 0..nblocks {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            roots.push(start);
            let mut queue = VecDeque::from([start]);
            while let Some(b) = queue.pop_front() {
                order.push(b);
                for &v in &d.blocks[b] {
                    if Some(v) == parent[b] {
                        continue;
                    }
                    for &c in &membership[&v] {
                        if !seen[c] {
                            seen[c] = true;
                            parent[c] = Some(v);
                            queue.push_back(c);
                        }
                    }
                }
            }
        }
        Ok(CliqueForest {
            blocks: d.blocks,
            parent,
            order,
            roots,
            bound: g.id_bound(),
        })
    }

    pub fn solve(
        &self,
        w1: impl Fn(Vertex) -> u64,
        w2: impl Fn(Vertex) -> u64,
    ) -> (u64, Assignment) {
        let nblocks = self.blocks.len();
        // best subtree values hanging below a vertex, per side of that vertex
        let mut below = vec![[0i64; 2]; self.bound];
        // side-1 picks among a block's non-parent vertices, per parent side
        let mut picks: Vec<[Vec<Vertex>; 2]> = vec![[Vec::new(), Vec::new()]; nblocks];
        let mut root_value = vec![0i64; nblocks];

        for &b in self.order.iter().rev() {
            let block = &self.blocks[b];
            let q = block.len();
            let others: Vec<(Vertex, i64, i64)> = block
                .iter()
                .filter(|&&v| Some(v) != self.parent[b])
                .map(|&v| {
                    let i = v as usize;
                    (v, w1(v) as i64 + below[i][0], w2(v) as i64 + below[i][1])
                })
                .collect();
            match self.parent[b] {
                Some(p) => {
                    for side in [Side::One, Side::Two] {
                        let (value, ones) = best_split(q, Some(side), &others);
                        below[p as usize][side as usize] += value;
                        picks[b][side as usize] = ones;
                    }
                }
                None => {
                    let (value, ones) = best_split(q, None, &others);
                    root_value[b] = value;
                    picks[b][0] = ones;
                }
            }
        }

        let mut assignment = Assignment::new();
        for &b in &self.order {
            let (ones, fixed) = match self.parent[b] {
                Some(p) => {
                    let side = assignment.side(p).expect("parent block assigned first");
                    (&picks[b][side as usize], Some(p))
                }
                None => (&picks[b][0], None),
            };
            for &v in &self.blocks[b] {
                if Some(v) != fixed {
                    let side = if ones.contains(&v) {
                        Side::One
                    } else {
                        Side::Two
                    };
                    assignment.set(v, side);
                }
            }
        }

        let total: i64 = self.roots.iter().map(|&r| root_value[r]).sum();
        (total as u64, assignment)
    }
}

/// Best value of a clique of size `q` whose non-fixed vertices carry the
/// given effective weights, with the optional fixed vertex on `forced`.
/// Returns the value (fixed vertex's own weight excluded) and the non-fixed
/// vertices placed on side 1.
fn best_split(q: usize, forced: Option<Side>, others: &[(Vertex, i64, i64)]) -> (i64, Vec<Vertex>) {
    let mut sorted = others.to_vec();
    sorted.sort_by(|a, b| (b.1 - b.2).cmp(&(a.1 - a.2)).then(a.0.cmp(&b.0)));
    let base: i64 = sorted.iter().map(|x| x.2).sum();
    let fixed_on_one = usize::from(forced == Some(Side::One));

    let mut best = (i64::MIN, 0usize);
    let mut gain = 0i64;
    for j in 0..=sorted.len() {
        if j > 0 {
            gain += sorted[j - 1].1 - sorted[j - 1].2;
        }
        let a = j + fixed_on_one;
        let value = (a * (q - a)) as i64 + base + gain;
        if value > best.0 {
            best = (value, j);
        }
    }
    let ones = sorted[..best.1].iter().map(|x| x.0).collect();
    (best.0, ones)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;
    use crate::oracle;

    fn graph(n: usize, edges: &[(Vertex, Vertex)]) -> SignedGraph {
        let e: Vec<_> = edges.iter().map(|&(u, v)| (u, v, Sign::Negative)).collect();
        SignedGraph::build(n, &e).unwrap()
    }

    #[test]
    fn single_vertex_takes_larger_weight() {
        let inst = WeightedInstance::new(
            SignedGraph::with_vertices(1),
            BTreeMap::from([(1, 5)]),
            BTreeMap::from([(1, 3)]),
        )
        .unwrap();
        let (value, a) = solve(&inst).unwrap();
        assert_eq!(value, 5);
        assert_eq!(a.side(1), Some(Side::One));
    }

    #[test]
    fn triangle_is_max_cut() {
        let inst = WeightedInstance::unweighted(graph(3, &[(1, 2), (2, 3), (1, 3)]));
        let (value, a) = solve(&inst).unwrap();
        assert_eq!(value, 2);
        assert_eq!(inst.evaluate(&a).unwrap(), 2);
        assert_eq!(a.part(Side::One).len().min(a.part(Side::Two).len()), 1);
    }

    #[test]
    fn bowtie_matches_enumeration() {
        let inst = WeightedInstance::unweighted(graph(
            5,
            &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)],
        ));
        let (value, a) = solve(&inst).unwrap();
        assert_eq!(oracle::mcwv(&inst).unwrap(), 4);
        assert_eq!(value, 4);
        assert_eq!(inst.evaluate(&a).unwrap(), 4);
    }

    #[test]
    fn cut_vertex_weight_counted_once() {
        // path 1-2-3 with a heavy side-2 payoff on the middle vertex
        let inst = WeightedInstance::new(
            graph(3, &[(1, 2), (2, 3)]),
            BTreeMap::from([(1, 1), (3, 1)]),
            BTreeMap::from([(2, 7)]),
        )
        .unwrap();
        let (value, a) = solve(&inst).unwrap();
        assert_eq!(value, oracle::mcwv(&inst).unwrap());
        assert_eq!(value, 11);
        assert_eq!(inst.evaluate(&a).unwrap(), 11);
    }

    #[test]
    fn rejects_non_forest_of_cliques() {
        let c4 = WeightedInstance::unweighted(graph(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]));
        assert_eq!(solve(&c4), Err(Error::NotForestOfCliques));
    }

    #[test]
    fn empty_instance() {
        let (value, a) = solve(&WeightedInstance::unweighted(SignedGraph::empty())).unwrap();
        assert_eq!(value, 0);
        assert!(a.is_empty());
    }

    #[test]
    fn clique_balanced_split() {
        for q in 1..=9u32 {
            let vs: Vec<Vertex> = (1..=q).collect();
            let mut e = Vec::new();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    e.push((u, v));
                }
            }
            let (value, _) = solve(&WeightedInstance::unweighted(graph(q as usize, &e))).unwrap();
            assert_eq!(value, u64::from((q / 2) * q.div_ceil(2)));
        }
    }
}
