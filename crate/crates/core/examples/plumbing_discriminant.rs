//! Intersection forms and discriminant groups of plumbing graphs.

use slc_invariants::plumbing::quotient_cusp_graph;
use slc_invariants::PlumbingGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A_4 chain: discriminant Z/5.
    let a4 = PlumbingGraph::a_n(4)?;
    println!("A_4: {}", a4.discriminant_group()?);

    // Chain for 1/9(1,2), continued fraction [5, 2].
    let chain = PlumbingGraph::chain(&[5, 2])?;
    let form = chain.intersection_matrix()?;
    println!("[5,2]: matrix\n{}", form.matrix);
    println!("  negative definite {}, discriminant {}", form.is_negative_definite(), chain.discriminant_group()?);

    // Quotient cusp graph: chain with two (-2)-leaves at each end.
    let g = quotient_cusp_graph(&[3, 2, 4])?;
    println!("quotient cusp (3,2,4): {} vertices, discriminant {}", g.vertex_count(), g.discriminant_group()?);
    Ok(())
}
