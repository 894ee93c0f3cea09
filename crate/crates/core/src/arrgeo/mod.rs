//! Line arrangements in P², their intersection lattices, and the builtin
//! catalog.

mod arrangement;
pub mod catalog;
mod lattice;

pub use arrangement::{
    cross, normalize_triple, validate_arrangement, Arrangement, ArrangementError,
    ArrangementFile, ProjLine,
};
pub use catalog::{builtin, known_multinets, CatalogError, KnownMultinet};
pub use lattice::{intersection_lattice, FlatPoint, Lattice};
