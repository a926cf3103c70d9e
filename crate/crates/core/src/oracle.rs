//! Exhaustive reference implementations. Exponential on purpose: these are
//! the ground truth every other module is tested against.

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, Vertex};
use crate::mcwv::WeightedInstance;

/// Largest graph the oracle accepts unless told otherwise.
pub const DEFAULT_LIMIT: usize = 24;

// assignments are enumerated as bit masks
const MASK_BITS: usize = 40;

/// Exact `beta(G)` with the default size limit.
pub fn beta(g: &SignedGraph) -> Result<usize> {
    beta_with_limit(g, DEFAULT_LIMIT)
}

/// Exact maximum number of edges in a balanced subgraph, by trying every
/// bipartition with the first vertex pinned to side 1.
pub fn beta_with_limit(g: &SignedGraph, limit: usize) -> Result<usize> {
    let n = g.vertex_count();
    let limit = limit.min(MASK_BITS);
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    if n == 0 {
        return Ok(0);
    }
    let (pos, neg) = neighbour_masks(g);
    let all: u64 = (1u64 << n) - 1;
    let mut best = 0u32;
    // bit i set = compact vertex i on side 2; bit 0 stays clear
    for mask in 0..(1u64 << (n - 1)) {
        let mask = mask << 1;
        let mut twice = 0u32;
        for i in 0..n {
            let same = if mask >> i & 1 == 1 {
                mask
            } else {
                all & !mask
            };
            twice += (pos[i] & same).count_ones() + (neg[i] & !same & all).count_ones();
        }
        best = best.max(twice / 2);
    }
    Ok(best as usize)
}

/// Yes iff `4 * beta(G) >= ptq(G) + k`.
pub fn decide(g: &SignedGraph, k: i64) -> Result<bool> {
    decide_with_limit(g, k, DEFAULT_LIMIT)
}

pub fn decide_with_limit(g: &SignedGraph, k: i64, limit: usize) -> Result<bool> {
    let b = beta_with_limit(g, limit)? as i64;
    Ok(4 * b >= g.ptq() + k)
}

/// Exact Max-Cut-with-Weighted-Vertices optimum by full enumeration.
/// Edge signs of the instance graph are ignored.
pub fn mcwv(inst: &WeightedInstance) -> Result<u64> {
    mcwv_with_limit(inst, DEFAULT_LIMIT)
}

pub fn mcwv_with_limit(inst: &WeightedInstance, limit: usize) -> Result<u64> {
    let g = inst.graph();
    let n = g.vertex_count();
    let limit = limit.min(MASK_BITS);
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    let verts: Vec<Vertex> = g.vertices().collect();
    let index = compact_index(g);
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v, _)| (index[u as usize], index[v as usize]))
        .collect();
    let mut best = 0u64;
    for mask in 0..(1u64 << n) {
        let mut value = 0u64;
        for &(a, b) in &edges {
            if (mask >> a & 1) != (mask >> b & 1) {
                value += 1;
            }
        }
        for (i, &v) in verts.iter().enumerate() {
            value += if mask >> i & 1 == 0 {
                inst.w1(v)
            } else {
                inst.w2(v)
            };
        }
        best = best.max(value);
    }
    Ok(best)
}

fn compact_index(g: &SignedGraph) -> Vec<usize> {
    let mut index = vec![usize::MAX; g.id_bound()];
    for (i, v) in g.vertices().enumerate() {
        index[v as usize] = i;
    }
    index
}

fn neighbour_masks(g: &SignedGraph) -> (Vec<u64>, Vec<u64>) {
    let index = compact_index(g);
    let n = g.vertex_count();
    let mut pos = vec![0u64; n];
    let mut neg = vec![0u64; n];
    for (u, v, s) in g.edges() {
        let (a, b) = (index[u as usize], index[v as usize]);
        let masks = if s == Sign::Positive {
            &mut pos
        } else {
            &mut neg
        };
        masks[a] |= 1 << b;
        masks[b] |= 1 << a;
    }
    (pos, neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};
    use std::collections::BTreeMap;

    fn complete(n: u32, sign: Sign) -> SignedGraph {
        let mut e = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                e.push((u, v, sign));
            }
        }
        SignedGraph::build(n as usize, &e).unwrap()
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&complete(4, N)).unwrap(), 4);
        assert_eq!(beta(&complete(4, P)).unwrap(), 6);
        let t = SignedGraph::build(3, &[(1, 2, P), (2, 3, P), (1, 3, N)]).unwrap();
        assert_eq!(beta(&t).unwrap(), 2);
        assert_eq!(beta(&SignedGraph::empty()).unwrap(), 0);
    }

    #[test]
    fn limit_is_enforced() {
        let g = SignedGraph::with_vertices(5);
        assert_eq!(
            beta_with_limit(&g, 4),
            Err(Error::OracleLimit { n: 5, limit: 4 })
        );
        let inst = WeightedInstance::unweighted(g);
        assert!(mcwv_with_limit(&inst, 4).is_err());
    }

    #[test]
    fn decide_examples() {
        let k4 = complete(4, N);
        assert!(decide(&k4, 1).unwrap());
        assert!(!decide(&k4, 2).unwrap());
        let k3 = complete(3, N);
        assert!(decide(&k3, 0).unwrap());
        assert!(!decide(&k3, 1).unwrap());
    }

    #[test]
    fn mcwv_examples() {
        let single = SignedGraph::with_vertices(1);
        let inst =
            WeightedInstance::new(single, BTreeMap::from([(1, 5)]), BTreeMap::from([(1, 3)]))
                .unwrap();
        assert_eq!(mcwv(&inst).unwrap(), 5);

        let k3 = complete(3, N);
        assert_eq!(mcwv(&WeightedInstance::unweighted(k3.clone())).unwrap(), 2);

        let heavy = WeightedInstance::new(k3, BTreeMap::from([(1, 10)]), BTreeMap::new()).unwrap();
        assert_eq!(mcwv(&heavy).unwrap(), 12);
    }
}
