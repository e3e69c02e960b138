#![no_main]

use bergekit::matrix::BitMatrix;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else { return };
    if let Ok(m) = BitMatrix::parse_text(input) {
        // accepted input must render and re-parse to the same matrix
        let again = BitMatrix::parse_text(&m.to_text()).unwrap();
        assert_eq!(m, again);
        let _ = m.is_simple();
        let _ = m.reduce_r();
        assert_eq!(m.complement().complement(), m);
    }
});
