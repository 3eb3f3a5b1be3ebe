//! Simple elliptic singularities by degree.

use slc_invariants::SimpleElliptic;

fn main() {
    println!("deg  embdim  lci    smoothable  lci lifting");
    for d in 1..=10 {
        let s = SimpleElliptic::new(d).expect("positive degree").summary();
        println!(
            "{:>3}  {:>6}  {:<5}  {:<10}  {}",
            s.degree, s.embedded_dimension, s.is_lci, s.is_smoothable, s.has_lci_smoothing_lifting
        );
    }
}
