//! Exact computations for complex projective line arrangements: intersection
//! lattices, first resonance varieties, multinets and their pencils, lower
//! bounds for the Milnor fiber monodromy on H¹, and an exact eigenspace
//! oracle built from fundamental group presentations of complexified real
//! arrangements.

pub mod exact;
pub mod arrgeo;
pub mod multinet;
pub mod oscohom;
pub mod pi1cover;
