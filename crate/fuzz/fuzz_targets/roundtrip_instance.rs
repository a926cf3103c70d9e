#![no_main]

use arbitrary::Arbitrary;
use libfuzzer_sys::fuzz_target;
use signed_maxcut::format::{parse_instance, serialize};
use signed_maxcut::{Sign, SignedGraph};

#[derive(Debug, Arbitrary)]
struct Input {
    n: u8,
    edges: Vec<(u8, u8, bool)>,
    k: Option<i16>,
    comment: String,
}

fuzz_target!(|input: Input| {
    let n = input.n as usize;
    let edges: Vec<_> = input
        .edges
        .iter()
        .map(|&(u, v, pos)| {
            let s = if pos { Sign::Positive } else { Sign::Negative };
            (u as u32, v as u32, s)
        })
        .collect();
    let Ok(g) = SignedGraph::build(n, &edges) else {
        return;
    };
    let k = input.k.map(i64::from);
    let (text, ids) = serialize(&g, k, &[input.comment.replace('\r', "")]);
    assert_eq!(ids.len(), n);
    let back = parse_instance(&text).expect("serialized instance parses");
    assert_eq!(back.graph, g);
    assert_eq!(back.k, k);
});
