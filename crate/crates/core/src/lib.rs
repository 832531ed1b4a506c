//! Exact birdtrack algebra for `SU(N)` with `N` kept symbolic: invariant
//! diagrams on mixed tensor powers, Young projectors, singlet states and
//! their projectors, the trace basis, and a fixed-`N` numeric oracle.

pub mod coefficients;
pub mod diagrams;
pub mod epsilon;
pub mod error;
pub mod numeric;
pub mod singlets;
pub mod symmetrizers;
pub mod tracebasis;

pub use coefficients::{ExactReal, Poly, RadicalCoefficient, RationalFunction};
pub use diagrams::{InvariantElement, LegSignature, Orientation, Perm, PrimitiveDiagram, Role};
pub use error::{Error, Result};
