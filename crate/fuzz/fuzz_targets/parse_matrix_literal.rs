#![no_main]

use bergekit::matrix::BitMatrix;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else { return };
    if let Ok(m) = BitMatrix::parse_literal(input) {
        let again = BitMatrix::parse_literal(&m.to_literal()).unwrap();
        assert_eq!(m, again);
        let _ = m.strict_subcolumns();
        let _ = m.strip_zero_rows();
    }
});
