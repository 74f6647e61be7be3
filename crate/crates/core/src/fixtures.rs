//! Example nets, embedded.

use crate::io::parse_net;
use crate::RatNet;

macro_rules! fixture {
    ($name:ident, $file:literal) => {
        pub fn $name() -> RatNet {
            parse_net(include_str!(concat!("../fixtures/", $file))).expect("valid fixture")
        }
    };
}

// (4,2) base and its affine images
fixture!(example1_s1, "example1_s1.json");
fixture!(example1_s2, "example1_s2.json");
fixture!(example2_s3, "example2_s3.json");
// (2,3) against (5,5)
fixture!(example3_s1, "example3_s1.json");
fixture!(example3_s2, "example3_s2.json");
// (2,2) against (4,4), and the expected coincident patch
fixture!(example4_s1, "example4_s1.json");
fixture!(example4_s2, "example4_s2.json");
fixture!(example4_s, "example4_s.json");
// (2,4) against (6,6)
fixture!(example5_s1, "example5_s1.json");
fixture!(example5_s2, "example5_s2.json");
