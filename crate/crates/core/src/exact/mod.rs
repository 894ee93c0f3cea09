//! Exact arithmetic: rationals, cyclotomic fields Q(ζ_N), dense linear
//! algebra over them, and integer Smith normal form.

mod cyclo;
mod matrix;
mod root;
mod snf;

pub use cyclo::{
    cyclotomic_polynomial, euler_phi, lcm_order, parse_rational, rational_to_string, Cyclo,
    Rational,
};
pub use root::RootOfUnity;
pub use matrix::{in_span, rank, rank_and_kernel, rank_of_vectors, MatrixF, MatrixZ};
pub use snf::{
    cokernel_invariants, smith_decomposition, smith_normal_form, AbelianInvariants,
    SmithDecomposition,
};
