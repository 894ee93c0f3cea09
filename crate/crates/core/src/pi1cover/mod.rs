//! Fundamental groups of complexified-real arrangements and twisted
//! cohomology of rank-one local systems.

mod character;
mod eigen;
mod fox;
mod presentation;
mod schreier;
mod wiring;
pub mod word;

pub use character::Character;
pub use eigen::{
    eigenspace_dim, milnor_eigenspaces, milnor_eigenspaces_from_presentation, EigenError,
    EigenspaceEntry, EigenspaceReport,
};
pub use fox::{fox_matrices, generator_exponents, twisted_h1, twisted_h1_on_generators, FoxError};
pub use presentation::{randell_presentation, GroupPresentation, PresentationError};
pub use schreier::{
    cover_monodromy, dims_by_order, subgroup_presentation, total_degree_epi, CoverMonodromy,
    OrderDims, PullbackCheck, SchreierError, SubgroupPresentation,
};
pub use wiring::{wiring_diagram, AffineLine, Crossing, WiringDiagram, WiringError};
pub use word::Word;
