#![no_main]

use libfuzzer_sys::fuzz_target;
use signed_maxcut::format::{parse_instance, serialize};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(inst) = parse_instance(text) {
        // anything accepted must survive a write and reread
        let (again, _) = serialize(&inst.graph, inst.k, &[]);
        let back = parse_instance(&again).expect("serialized instance parses");
        assert_eq!(back.graph.edge_count(), inst.graph.edge_count());
        assert_eq!(back.k, inst.k);
    }
});
