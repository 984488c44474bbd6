#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| mzeta_cli::harness::eval_inputs(data));
