//! Multinets: validation, bounded enumeration, pencil realization, and the
//! monodromy consequences drawn from them.

mod bounds;
mod enumerate;
mod pencil;
mod stein;
mod structure;

pub use bounds::{
    direction_count, monodromy_lower_bounds, nontriviality_certificate, CertificateError,
    Conclusion, DirectionCount, MonodromyBound, MonodromyCertificate,
};
pub use enumerate::{enumerate_multinets, EnumerationError, EnumerationOptions};
pub use pencil::{
    class_products, monomials, realize_pencil, span_dimension, Collinearity, HomPoly,
    PencilError, PencilRealization,
};
pub use stein::{stein_chi, SteinData, SteinError};
pub use structure::{
    mu_gcd, validate_multinet, Axiom, BasePoint, MultinetError, MultinetStructure, Witness,
};
