//! Newline-delimited JSON requests, evaluated in parallel.

use slc_invariants::cli::batch::run_batch;

const REQUESTS: &str = r#"{"op":"cusp.dual","input":{"cycle":[6,2,2,3,3,2,2,4]},"version":"1"}
{"op":"qcusp.order","input":{"e":[3,2,4]},"version":"1"}
{"op":"classt.check","input":{"m":9,"q":2},"version":"1"}
{"op":"hypersurface","input":{"degree":6},"version":"1"}
{"op":"donaldson.tautological","input":{},"version":"1"}
{"op":"cusp.dual","input":{"cycle":[2]},"version":"1"}
"#;

fn main() {
    for response in run_batch(REQUESTS) {
        println!("{}", response.to_line());
    }
}
