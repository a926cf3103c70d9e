#![no_main]

use libfuzzer_sys::fuzz_target;
use signed_maxcut::format::TraceLine;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(line) = text.parse::<TraceLine>() {
        let printed = line.to_string();
        assert_eq!(
            printed.parse::<TraceLine>().expect("printed line parses"),
            line
        );
    }
});
