//! Signed graphs, switching, balance and the quarter-integer lower bound.
//!
//! Vertices are small positive integers. Deleting a vertex leaves its slot
//! empty so that the identifiers of the survivors never change; this keeps rule
//! traces replayable against the original input.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    /// Sign of a product, e.g. the sign of a cycle is the product of its edges.
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Positive),
            '-' => Some(Sign::Negative),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// One of the two parts of a vertex bipartition. `One < Two`, which makes
/// derived orderings on assignments lexicographic with side 1 first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }
}

/// A two-sided partition of (a superset of) the vertices of a graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    sides: BTreeMap<Vertex, Side>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, v: Vertex, side: Side) {
        self.sides.insert(v, side);
    }

    pub fn side(&self, v: Vertex) -> Option<Side> {
        self.sides.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Side)> + '_ {
        self.sides.iter().map(|(&v, &s)| (v, s))
    }

    /// Vertices on the given side, ascending.
    pub fn part(&self, side: Side) -> Vec<Vertex> {
        self.iter()
            .filter(|&(_, s)| s == side)
            .map(|(v, _)| v)
            .collect()
    }

    /// The same partition with every vertex of `flip` moved to the other side.
    pub fn flipped(&self, flip: &[Vertex]) -> Assignment {
        let mut out = self.clone();
        for &v in flip {
            if let Some(s) = out.sides.get_mut(&v) {
                *s = s.other();
            }
        }
        out
    }

    /// Merge another assignment into this one (entries of `other` win).
    pub fn extend(&mut self, other: &Assignment) {
        for (v, s) in other.iter() {
            self.sides.insert(v, s);
        }
    }
}

impl FromIterator<(Vertex, Side)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (Vertex, Side)>>(iter: I) -> Self {
        Assignment {
            sides: iter.into_iter().collect(),
        }
    }
}

/// Four times the lower bound `|E|/2 + (|V| - t)/4`, i.e. `2|E| + |V| - t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuarterBound {
    pub ptq: i64,
    pub components: usize,
}

/// Result of the balance test: a switching set or an odd negative cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BalanceWitness {
    /// Switching `switch_set` leaves no negative edge.
    Balanced { switch_set: Vec<Vertex> },
    /// A cycle (vertex sequence, closing edge implied) with an odd number of
    /// negative edges.
    Unbalanced { cycle: Vec<Vertex> },
}

impl BalanceWitness {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceWitness::Balanced { .. })
    }
}

/// Simple undirected graph with a sign on every edge.
#[derive(Debug, Clone, Default)]
pub struct SignedGraph {
    // Slot `v` holds the neighbourhood of vertex `v`; slot 0 is never used.
    adj: Vec<Option<BTreeMap<Vertex, Sign>>>,
    vertex_count: usize,
    edge_count: usize,
}

impl PartialEq for SignedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.edge_count == other.edge_count
            && self.vertices().eq(other.vertices())
            && self.edges().eq(other.edges())
    }
}

impl Eq for SignedGraph {}

impl SignedGraph {
    /// The graph with no vertices.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Edgeless graph on vertices `1..=n`.
    pub fn with_vertices(n: usize) -> Self {
        let mut adj = Vec::with_capacity(n + 1);
        adj.push(None);
        adj.extend((0..n).map(|_| Some(BTreeMap::new())));
        SignedGraph {
            adj,
            vertex_count: n,
            edge_count: 0,
        }
    }

    /// Build a graph on `1..=n` from a list of signed edges.
    ///
    /// A pair joined by one positive and one negative edge cancels out. Two
    /// edges of the same sign on one pair, and self-loops, are rejected. The
    /// result does not depend on the order of `raw_edges`.
    pub fn build(n: usize, raw_edges: &[(Vertex, Vertex, Sign)]) -> Result<Self> {
        let mut tally: BTreeMap<(Vertex, Vertex), [u32; 2]> = BTreeMap::new();
        for &(u, v, sign) in raw_edges {
            for x in [u, v] {
                if x == 0 || x as usize > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            let slot = &mut tally.entry(key).or_default()[sign as usize];
            *slot += 1;
            if *slot > 1 {
                return Err(Error::SameSignParallel {
                    u: key.0,
                    v: key.1,
                    sign,
                });
            }
        }
        let mut g = SignedGraph::with_vertices(n);
        for ((u, v), [pos, neg]) in tally {
            match (pos, neg) {
                (1, 0) => g.insert_edge(u, v, Sign::Positive),
                (0, 1) => g.insert_edge(u, v, Sign::Negative),
                _ => {}
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Exclusive upper bound on vertex identifiers; handy for indexing arrays.
    pub fn id_bound(&self) -> usize {
        self.adj.len().max(1)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        matches!(self.adj.get(v as usize), Some(Some(_)))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, slot)| slot.is_some())
            .map(|(v, _)| v as Vertex)
    }

    /// Signed neighbours of `v` in ascending order. Empty for unknown vertices.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = (Vertex, Sign)> + '_ {
        self.adj
            .get(v as usize)
            .and_then(|slot| slot.as_ref())
            .into_iter()
            .flat_map(|nb| nb.iter().map(|(&u, &s)| (u, s)))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj
            .get(v as usize)
            .and_then(|slot| slot.as_ref())
            .map_or(0, |nb| nb.len())
    }

    pub fn sign(&self, u: Vertex, v: Vertex) -> Option<Sign> {
        self.adj
            .get(u as usize)
            .and_then(|slot| slot.as_ref())
            .and_then(|nb| nb.get(&v).copied())
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.sign(u, v).is_some()
    }

    /// All edges as `(u, v, sign)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Sign)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&(v, _)| u < v)
                .map(move |(v, s)| (u, v, s))
        })
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges().filter(|e| e.2 == Sign::Negative).count()
    }

    pub fn positive_edge_count(&self) -> usize {
        self.edges().filter(|e| e.2 == Sign::Positive).count()
    }

    fn check_known(&self, vs: &[Vertex]) -> Result<()> {
        match vs.iter().find(|&&v| !self.contains(v)) {
            Some(&v) => Err(Error::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    /// Membership mask over `0..id_bound()`.
    pub(crate) fn mask(&self, vs: &[Vertex]) -> Vec<bool> {
        let mut m = vec![false; self.id_bound()];
        for &v in vs {
            if let Some(slot) = m.get_mut(v as usize) {
                *slot = true;
            }
        }
        m
    }

    /// The `W`-switch: every edge with exactly one end in `w` changes sign.
    pub fn switch(&self, w: &[Vertex]) -> Result<SignedGraph> {
        self.check_known(w)?;
        let inside = self.mask(w);
        let mut out = self.clone();
        for (v, slot) in out.adj.iter_mut().enumerate() {
            if let Some(nb) = slot {
                for (&u, s) in nb.iter_mut() {
                    if inside[v] != inside[u as usize] {
                        *s = s.flip();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Every edge sign flipped.
    pub fn dual(&self) -> SignedGraph {
        let mut out = self.clone();
        for nb in out.adj.iter_mut().flatten() {
            for s in nb.values_mut() {
                *s = s.flip();
            }
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_without(&[])
    }

    /// Components of `G - removed`.
    pub fn components_without(&self, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut seen = self.mask(removed);
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for root in self.vertices() {
            if seen[root as usize] {
                continue;
            }
            seen[root as usize] = true;
            queue.push_back(root);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for (u, _) in self.neighbors(v) {
                    if !seen[u as usize] {
                        seen[u as usize] = true;
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&[])
    }

    /// Whether `G - removed` is connected (an empty remainder counts as connected).
    pub fn is_connected_without(&self, removed: &[Vertex]) -> bool {
        let mut seen = self.mask(removed);
        let Some(root) = self.vertices().find(|&v| !seen[v as usize]) else {
            return true;
        };
        let total = self.vertices().filter(|&v| !seen[v as usize]).count();
        seen[root as usize] = true;
        let mut stack = vec![root];
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for (u, _) in self.neighbors(v) {
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        reached == total
    }

    /// Subgraph induced by `keep`; identifiers are preserved.
    pub fn induced(&self, keep: &[Vertex]) -> Result<SignedGraph> {
        self.check_known(keep)?;
        let inside = self.mask(keep);
        let removed: Vec<Vertex> = self.vertices().filter(|&v| !inside[v as usize]).collect();
        Ok(self.without(&removed))
    }

    /// `G - remove`; identifiers are preserved.
    pub fn delete_vertices(&self, remove: &[Vertex]) -> Result<SignedGraph> {
        self.check_known(remove)?;
        Ok(self.without(remove))
    }

    pub(crate) fn without(&self, remove: &[Vertex]) -> SignedGraph {
        let mut out = self.clone();
        for &v in remove {
            out.remove_vertex(v);
        }
        out
    }

    pub(crate) fn remove_vertex(&mut self, v: Vertex) {
        let Some(Some(nb)) = self.adj.get_mut(v as usize).map(Option::take) else {
            return;
        };
        for u in nb.keys() {
            if let Some(Some(other)) = self.adj.get_mut(*u as usize) {
                other.remove(&v);
            }
        }
        self.vertex_count -= 1;
        self.edge_count -= nb.len();
    }

    /// Add a fresh vertex with identifier `id_bound()`.
    pub(crate) fn add_vertex(&mut self) -> Vertex {
        if self.adj.is_empty() {
            self.adj.push(None);
        }
        self.adj.push(Some(BTreeMap::new()));
        self.vertex_count += 1;
        (self.adj.len() - 1) as Vertex
    }

    /// Insert or overwrite an edge between two existing vertices.
    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex, sign: Sign) {
        debug_assert!(u != v && self.contains(u) && self.contains(v));
        let fresh = self.adj[u as usize]
            .as_mut()
            .map(|nb| nb.insert(v, sign).is_none())
            .unwrap_or(false);
        if let Some(nb) = self.adj[v as usize].as_mut() {
            nb.insert(u, sign);
        }
        if fresh {
            self.edge_count += 1;
        }
    }

    pub(crate) fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        let had = self.adj[u as usize]
            .as_mut()
            .and_then(|nb| nb.remove(&v))
            .is_some();
        if let Some(nb) = self.adj[v as usize].as_mut() {
            nb.remove(&u);
        }
        if had {
            self.edge_count -= 1;
        }
    }

    /// Balance test by 2-labelling a spanning forest.
    ///
    /// Within each component the root gets side 1 and tree edges propagate
    /// sides (positive keeps, negative flips). A non-tree edge that disagrees
    /// closes an odd negative cycle. For balanced graphs the switching set
    /// takes the smaller part of every component (the root's part on ties).
    pub fn is_balanced(&self) -> BalanceWitness {
        let bound = self.id_bound();
        let mut side: Vec<Option<Side>> = vec![None; bound];
        let mut parent: Vec<Vertex> = vec![0; bound];
        let mut depth: Vec<usize> = vec![0; bound];
        let mut switch_set = Vec::new();

        for comp in self.components() {
            let root = comp[0];
            side[root as usize] = Some(Side::One);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v as usize].expect("labelled before queued");
                for (u, s) in self.neighbors(v) {
                    if side[u as usize].is_none() {
                        side[u as usize] = Some(if s == Sign::Positive { sv } else { sv.other() });
                        parent[u as usize] = v;
                        depth[u as usize] = depth[v as usize] + 1;
                        queue.push_back(u);
                    }
                }
            }
            for &u in &comp {
                for (v, s) in self.neighbors(u) {
                    if u > v {
                        continue;
                    }
                    let same = side[u as usize] == side[v as usize];
                    if same != (s == Sign::Positive) {
                        return BalanceWitness::Unbalanced {
                            cycle: tree_cycle(u, v, &parent, &depth),
                        };
                    }
                }
            }
            let (ones, twos): (Vec<Vertex>, Vec<Vertex>) = comp
                .iter()
                .partition(|&&v| side[v as usize] == Some(Side::One));
            if ones.len() <= twos.len() {
                switch_set.extend(ones);
            } else {
                switch_set.extend(twos);
            }
        }
        switch_set.sort_unstable();
        BalanceWitness::Balanced { switch_set }
    }

    /// `4 * pt(G) = 2|E| + |V| - t`. The empty graph has `t = 0`.
    pub fn quarter_bound(&self) -> QuarterBound {
        let t = self.components().len();
        QuarterBound {
            ptq: 2 * self.edge_count as i64 + self.vertex_count as i64 - t as i64,
            components: t,
        }
    }

    /// Shorthand for `quarter_bound().ptq`.
    pub fn ptq(&self) -> i64 {
        self.quarter_bound().ptq
    }

    /// Number of edges consistent with the partition: positive edges inside a
    /// side plus negative edges across.
    pub fn consistent_edges(&self, a: &Assignment) -> Result<usize> {
        let mut count = 0;
        for (u, v, s) in self.edges() {
            let su = a.side(u).ok_or(Error::MissingSide(u))?;
            let sv = a.side(v).ok_or(Error::MissingSide(v))?;
            if (su == sv) == (s == Sign::Positive) {
                count += 1;
            }
        }
        Ok(count)
    }
}

fn tree_cycle(u: Vertex, v: Vertex, parent: &[Vertex], depth: &[usize]) -> Vec<Vertex> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a as usize] > depth[b as usize] {
        a = parent[a as usize];
        left.push(a);
    }
    while depth[b as usize] > depth[a as usize] {
        b = parent[b as usize];
        right.push(b);
    }
    while a != b {
        a = parent[a as usize];
        b = parent[b as usize];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Negative as N, Positive as P};

    fn k4(sign: Sign) -> SignedGraph {
        let mut e = Vec::new();
        for u in 1..=4 {
            for v in u + 1..=4 {
                e.push((u, v, sign));
            }
        }
        SignedGraph::build(4, &e).unwrap()
    }

    fn sides(ones: &[Vertex], twos: &[Vertex]) -> Assignment {
        ones.iter()
            .map(|&v| (v, Side::One))
            .chain(twos.iter().map(|&v| (v, Side::Two)))
            .collect()
    }

    fn cycle_sign(g: &SignedGraph, cycle: &[Vertex]) -> Sign {
        let mut sign = Sign::Positive;
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            sign = sign.times(g.sign(a, b).expect("cycle edge present"));
        }
        sign
    }

    #[test]
    fn build_cancels_opposite_pairs() {
        let g = SignedGraph::build(2, &[(1, 2, P), (1, 2, N)]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 0);

        let g = SignedGraph::build(2, &[(1, 2, N)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2, N)]);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            SignedGraph::build(3, &[(1, 2, P), (2, 1, P)]),
            Err(Error::SameSignParallel {
                u: 1,
                v: 2,
                sign: P
            })
        );
        assert_eq!(SignedGraph::build(3, &[(2, 2, N)]), Err(Error::SelfLoop(2)));
        assert_eq!(
            SignedGraph::build(3, &[(1, 4, N)]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        // a cancelled pair does not license a third copy
        assert!(SignedGraph::build(2, &[(1, 2, P), (1, 2, N), (1, 2, P)]).is_err());
    }

    #[test]
    fn switch_flips_the_cut() {
        let g = SignedGraph::build(2, &[(1, 2, N)]).unwrap();
        assert_eq!(g.switch(&[1]).unwrap().sign(1, 2), Some(P));

        let g = SignedGraph::build(4, &[(1, 2, N), (2, 3, P), (3, 4, N), (1, 3, P)]).unwrap();
        assert_eq!(g.switch(&[]).unwrap(), g);
        assert_eq!(g.switch(&[1, 2, 3, 4]).unwrap(), g);
        assert_eq!(g.switch(&[9]), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn dual_flips_every_sign() {
        assert_eq!(k4(N).dual(), k4(P));
        let empty = SignedGraph::with_vertices(3);
        assert_eq!(empty.dual(), empty);
    }

    #[test]
    fn balance_on_triangles() {
        // signs (+,+,-): one negative edge, odd
        let g = SignedGraph::build(3, &[(1, 2, P), (2, 3, P), (1, 3, N)]).unwrap();
        match g.is_balanced() {
            BalanceWitness::Unbalanced { cycle } => {
                assert_eq!(cycle.len(), 3);
                assert_eq!(cycle_sign(&g, &cycle), N);
            }
            other => panic!("expected a cycle, got {other:?}"),
        }
        // signs (+,-,-): vertex 3 carries both negative edges
        let g = SignedGraph::build(3, &[(1, 2, P), (2, 3, N), (1, 3, N)]).unwrap();
        assert_eq!(
            g.is_balanced(),
            BalanceWitness::Balanced {
                switch_set: vec![3]
            }
        );

        assert_eq!(
            k4(P).is_balanced(),
            BalanceWitness::Balanced { switch_set: vec![] }
        );
    }

    #[test]
    fn quarter_bound_examples() {
        assert_eq!(
            k4(N).quarter_bound(),
            QuarterBound {
                ptq: 15,
                components: 1
            }
        );
        let p3 = SignedGraph::build(3, &[(1, 2, N), (2, 3, P)]).unwrap();
        assert_eq!(p3.ptq(), 6);
        let two = SignedGraph::build(4, &[(1, 2, N), (3, 4, P)]).unwrap();
        assert_eq!(
            two.quarter_bound(),
            QuarterBound {
                ptq: 6,
                components: 2
            }
        );
        assert_eq!(
            SignedGraph::empty().quarter_bound(),
            QuarterBound {
                ptq: 0,
                components: 0
            }
        );
    }

    #[test]
    fn consistent_edge_counts() {
        assert_eq!(k4(N).consistent_edges(&sides(&[1, 2], &[3, 4])).unwrap(), 4);
        assert_eq!(
            k4(P).consistent_edges(&sides(&[1, 2, 3, 4], &[])).unwrap(),
            6
        );
        // x=1, y=2, z=3 with xy negative: x alone on its side
        let g = SignedGraph::build(3, &[(1, 2, N), (2, 3, P), (1, 3, P)]).unwrap();
        assert_eq!(g.consistent_edges(&sides(&[1], &[2, 3])).unwrap(), 2);
        assert_eq!(
            g.consistent_edges(&sides(&[1], &[2])),
            Err(Error::MissingSide(3))
        );
    }

    #[test]
    fn plumbing() {
        let two = SignedGraph::build(4, &[(1, 2, N), (3, 4, P)]).unwrap();
        assert_eq!(two.components(), vec![vec![1, 2], vec![3, 4]]);
        assert!(!two.is_connected());
        assert!(SignedGraph::empty().is_connected());

        let k3 = k4(N).induced(&[1, 2, 4]).unwrap();
        assert_eq!(k3.vertices().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(k3.edge_count(), 3);
        assert!(k3.edges().all(|e| e.2 == N));

        let edge = k3.delete_vertices(&[2]).unwrap();
        assert_eq!(edge.edges().collect::<Vec<_>>(), vec![(1, 4, N)]);
        assert_eq!(k3.delete_vertices(&[3]), Err(Error::UnknownVertex(3)));
        assert_eq!(k3.induced(&[7]), Err(Error::UnknownVertex(7)));
    }

    #[test]
    fn fresh_vertices_never_reuse_ids() {
        let mut g = SignedGraph::build(3, &[(1, 2, N), (2, 3, N)]).unwrap();
        g.remove_vertex(3);
        let z = g.add_vertex();
        assert_eq!(z, 4);
        g.insert_edge(1, z, P);
        assert_eq!(g.edge_count(), 2);
        g.remove_edge(1, 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 4, P)]);
    }
}
