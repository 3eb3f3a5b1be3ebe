//! Exact invariants of semi-log-canonical surface singularities.
//!
//! Cusp cycles and their duals, plumbing graphs, quotient cusps, Pinkham
//! triangle cusps, cyclic quotients of class T, simple elliptic
//! singularities, cohomology of smooth surfaces in ℙ³, and a toric model
//! of a family of sextics with a group action. Everything is computed in
//! exact integer or rational arithmetic.

pub mod arith;
pub mod cli;
pub mod cusp;
pub mod cyclic_quotient;
pub mod donaldson;
pub mod elliptic;
pub mod error;
pub mod exact_sequence;
pub mod hypersurface;
pub mod pinkham;
pub mod plumbing;
pub mod quotient_cusp;
pub mod report;

pub use arith::{AbGroup, IntMatrix, Mat2};
pub use cusp::CuspCycle;
pub use cyclic_quotient::CyclicQuotient;
pub use elliptic::SimpleElliptic;
pub use error::{Error, Result};
pub use pinkham::TriplePQR;
pub use plumbing::PlumbingGraph;
pub use quotient_cusp::QuotientCuspSpec;
