//! Orlik–Solomon cohomology in degrees ≤ 2, Aomoto complexes and the first
//! resonance variety.

mod os2;
mod resonance;

pub use os2::{os2_structure, H1Vector, Os2, OsError};
pub use resonance::{
    resonance_components, torsion_points, Provenance, ResonanceComponent, TorsionError,
};
