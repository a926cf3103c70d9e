//! Seeded instance generators. Both always return connected graphs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, Vertex};

/// Random draws are retried with the next seed this many times.
pub const MAX_ATTEMPTS: u32 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub graph: SignedGraph,
    /// Seed that produced `graph`; differs from the requested seed when
    /// earlier draws were disconnected.
    pub seed: u64,
    pub attempts: u32,
}

/// `G(n, p)` with each edge negative with probability `neg`, redrawn with
/// seed `seed + 1, seed + 2, ...` until connected.
pub fn random(n: usize, p: f64, neg: f64, seed: u64) -> Result<Generated> {
    let p = p.clamp(0.0, 1.0);
    let neg = neg.clamp(0.0, 1.0);
    for attempt in 0..MAX_ATTEMPTS {
        let s = seed.wrapping_add(attempt as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let mut edges = Vec::new();
        for u in 1..=n as Vertex {
            for v in u + 1..=n as Vertex {
                if rng.gen_bool(p) {
                    edges.push((u, v, draw_sign(&mut rng, neg)));
                }
            }
        }
        let graph = SignedGraph::build(n, &edges)?;
        if graph.is_connected() {
            return Ok(Generated {
                graph,
                seed: s,
                attempts: attempt + 1,
            });
        }
    }
    Err(Error::GenerationFailed(MAX_ATTEMPTS))
}

fn draw_sign(rng: &mut ChaCha8Rng, neg: f64) -> Sign {
    if rng.gen_bool(neg) {
        Sign::Negative
    } else {
        Sign::Positive
    }
}

/// Shape of a planted instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FocParams {
    pub cliques: usize,
    pub size: usize,
    pub s_count: usize,
    /// Probability that an edge at an attachment vertex is negative. Below
    /// 1.0 the whole graph is also switched on a random vertex set.
    pub neg: f64,
    pub seed: u64,
}

/// A forest of all-negative cliques plus `s_count` attachment vertices.
///
/// Clique `i > 0` is tied to an earlier clique by a shared vertex, by a
/// bridge, or not at all, each with probability 1/3. Attachment vertices get
/// random edges into the forest and among themselves; every tree of the
/// forest is then tied to some attachment vertex (or, with none, to the
/// previous tree) so the result is connected. Attachment vertices take the
/// highest identifiers.
pub fn foc(params: &FocParams) -> Result<Generated> {
    let FocParams {
        cliques,
        size,
        s_count,
        neg,
        seed,
    } = *params;
    let size = size.max(1);
    let neg = neg.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(Vertex, Vertex, Sign)> = Vec::new();
    let mut next: Vertex = 1;
    let mut members: Vec<Vec<Vertex>> = Vec::new();
    // tree index of every clique
    let mut tree: Vec<usize> = Vec::new();
    let mut trees = 0;

    for i in 0..cliques {
        let mut vs = Vec::new();
        let mut joined = None;
        if i > 0 {
            let choice = rng.gen_range(0..3);
            let j = rng.gen_range(0..i);
            let anchor = *members[j].choose(&mut rng).expect("nonempty clique");
            match choice {
                0 => {
                    vs.push(anchor);
                    joined = Some(j);
                }
                1 => {
                    edges.push((anchor, next, Sign::Negative));
                    joined = Some(j);
                }
                _ => {}
            }
        }
        while vs.len() < size {
            vs.push(next);
            next += 1;
        }
        for (a, &u) in vs.iter().enumerate() {
            for &v in &vs[a + 1..] {
                edges.push((u, v, Sign::Negative));
            }
        }
        match joined {
            Some(j) => tree.push(tree[j]),
            None => {
                tree.push(trees);
                trees += 1;
            }
        }
        members.push(vs);
    }

    let forest_n = (next - 1) as usize;
    let s: Vec<Vertex> = (0..s_count as Vertex).map(|i| next + i).collect();
    let n = forest_n + s_count;
    let mut pairs: BTreeSet<(Vertex, Vertex)> = edges.iter().map(|e| (e.0, e.1)).collect();
    let mut add = |edges: &mut Vec<_>, u: Vertex, v: Vertex, sign: Sign| {
        if pairs.insert((u.min(v), u.max(v))) {
            edges.push((u, v, sign));
        }
    };

    let attach_p = (3.0 / size as f64).min(1.0);
    let mut touched = vec![false; trees];
    for &x in &s {
        for (c, vs) in members.iter().enumerate() {
            for &v in vs {
                if rng.gen_bool(attach_p) {
                    let sign = draw_sign(&mut rng, neg);
                    add(&mut edges, v, x, sign);
                    touched[tree[c]] = true;
                }
            }
        }
    }
    for (a, &x) in s.iter().enumerate() {
        for &y in &s[a + 1..] {
            if rng.gen_bool(0.5) {
                let sign = draw_sign(&mut rng, neg);
                add(&mut edges, x, y, sign);
            }
        }
    }
    let first_of_tree: Vec<Vertex> = (0..trees)
        .map(|t| members[tree.iter().position(|&x| x == t).unwrap()][0])
        .collect();
    for t in 0..trees {
        if touched[t] {
            continue;
        }
        if let Some(&x) = s.choose(&mut rng) {
            let sign = draw_sign(&mut rng, neg);
            add(&mut edges, first_of_tree[t], x, sign);
        } else if t > 0 {
            add(
                &mut edges,
                first_of_tree[t - 1],
                first_of_tree[t],
                Sign::Negative,
            );
        }
    }
    for (i, &x) in s.iter().enumerate() {
        if edges.iter().any(|e| e.0 == x || e.1 == x) {
            continue;
        }
        let v = if forest_n > 0 {
            rng.gen_range(1..=forest_n as Vertex)
        } else if i > 0 {
            s[i - 1]
        } else if let Some(&y) = s.get(1) {
            y
        } else {
            continue;
        };
        let sign = draw_sign(&mut rng, neg);
        add(&mut edges, v, x, sign);
    }
    let mut graph = SignedGraph::build(n, &edges)?;
    if forest_n == 0 && !graph.is_connected() {
        for w in s.windows(2) {
            let sign = draw_sign(&mut rng, neg);
            add(&mut edges, w[0], w[1], sign);
        }
        graph = SignedGraph::build(n, &edges)?;
    }
    if neg < 1.0 {
        let flip: Vec<Vertex> = graph.vertices().filter(|_| rng.gen_bool(0.5)).collect();
        graph = graph.switch(&flip)?;
    }
    if !graph.is_connected() {
        return Err(Error::GenerationFailed(1));
    }
    Ok(Generated {
        graph,
        seed,
        attempts: 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{has_positive_triangle, is_forest_of_cliques};

    #[test]
    fn random_is_deterministic_and_connected() {
        let a = random(6, 0.5, 0.7, 42).unwrap();
        let b = random(6, 0.5, 0.7, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.graph.is_connected());
        assert_eq!(a.graph.vertex_count(), 6);
    }

    #[test]
    fn random_retries_sparse_draws() {
        let g = random(8, 0.15, 1.0, 7).unwrap();
        assert!(g.graph.is_connected());
        assert!(g.attempts >= 1);
        assert_eq!(g.seed, 7 + u64::from(g.attempts) - 1);
        assert!(g.graph.edges().all(|e| e.2 == Sign::Negative));
    }

    #[test]
    fn random_gives_up_on_empty_edge_probability() {
        assert_eq!(
            random(3, 0.0, 1.0, 1),
            Err(Error::GenerationFailed(MAX_ATTEMPTS))
        );
        assert!(random(1, 0.0, 1.0, 1).is_ok());
    }

    #[test]
    fn planted_forest_structure() {
        for seed in 0..40 {
            let params = FocParams {
                cliques: 4,
                size: 5,
                s_count: 2,
                neg: 1.0,
                seed,
            };
            let g = foc(&params).unwrap().graph;
            assert!(g.is_connected(), "seed {seed}");
            let n = g.vertex_count() as Vertex;
            let rest = g.delete_vertices(&[n - 1, n]).unwrap();
            assert!(is_forest_of_cliques(&rest), "seed {seed}");
            assert!(g.edges().all(|e| e.2 == Sign::Negative));
            let all: Vec<Vertex> = rest.vertices().collect();
            assert!(has_positive_triangle(&rest, &all).is_none());
            assert_eq!(foc(&params).unwrap().graph, g);
        }
    }

    #[test]
    fn planted_without_attachments() {
        for seed in 0..20 {
            let params = FocParams {
                cliques: 3,
                size: 3,
                s_count: 0,
                neg: 0.5,
                seed,
            };
            let g = foc(&params).unwrap().graph;
            assert!(g.is_connected());
            assert!(is_forest_of_cliques(&g));
        }
        let lone = foc(&FocParams {
            cliques: 0,
            size: 3,
            s_count: 3,
            neg: 1.0,
            seed: 0,
        })
        .unwrap();
        assert!(lone.graph.is_connected());
    }
}
