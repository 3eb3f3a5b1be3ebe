fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(slc_invariants::cli::run(&args));
}
