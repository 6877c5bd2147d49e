//! Cyclic homology of strong smash product algebras.

pub mod algebra;
pub mod check;
pub mod cyclic;
pub mod cylindrical;
pub mod descriptor;
pub mod error;
pub mod homology;
pub mod hopf;
pub mod matched;
pub mod parallel;
pub mod presets;
pub mod smash;
pub mod spectral;
pub mod tensor;

pub use algebra::FinDimAlgebra;
pub use cylindrical::CylindricalModule;
pub use cyclic::{MixedComplex, ParacyclicModule};
pub use check::{CheckOutcome, CheckReport, Witness};
pub use error::{Error, Result};
pub use hopf::HopfAlgebra;
pub use matched::{DoubleCrossproduct, MatchedPair};
pub use smash::{RMap, SmashAlgebra};
pub use tensor::{Factor, Pipeline, TensorMap, TensorSpace};
