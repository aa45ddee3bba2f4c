#![no_main]

use libfuzzer_sys::fuzz_target;
use theta_det::symmetric::{theta_determinant, write_symmetric};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(s) = theta_det::parse_symmetric(text) {
        if s.left_count() + s.axis_count() <= 32 {
            let _ = theta_determinant(&s);
        }
        let again = theta_det::parse_symmetric(&write_symmetric(&s)).expect("written graph parses");
        assert_eq!(write_symmetric(&again), write_symmetric(&s));
    }
});
