#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(d) = theta_det::parse_pd(text) {
        if d.crossing_count() <= 64 {
            let _ = theta_det::pd::knot_report(&d, None);
        }
        let again = theta_det::parse_pd(&d.to_pd_text()).expect("written diagram parses");
        assert_eq!(again, d);
    }
});
