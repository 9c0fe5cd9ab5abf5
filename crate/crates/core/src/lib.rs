//! Exact reversibility analysis for hyperbolic toral automorphisms.
//!
//! A matrix `L` in SL(2,Z) induces an automorphism `f` of the torus
//! T² = R²/Z². An involution `R` (induced by `A` with `A² = I`) *reverses*
//! `f` when `R∘f = f⁻¹∘R`, which at the matrix level reads `A·L = L⁻¹·A`.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`]: 2×2 integer matrices, unimodularity and the hyperbolicity
//!   predicates.
//! * [`involutions`]: the families of linear involutions, their enumeration
//!   and the closed curves they fix on the torus.
//! * [`pell`]: continued fractions of √D and a complete solver for
//!   `x² − D·y² = N`, together with a brute-force oracle.
//! * [`reversibility`]: finding every linear reversor of an automorphism,
//!   constructing reversible automorphisms for a given involution, and the
//!   orientation-reversing obstruction with a checked proof trace.
//! * [`tables`]: regeneration of the two reference example tables.
//!
//! All arithmetic is exact; no floating point is used anywhere.
//!
//! ```
//! use toral_reversors::{find_reversors, Mat2Z};
//!
//! let cat = Mat2Z::new(2, 1, 1, 1);
//! let report = find_reversors(&cat, 10).unwrap();
//! assert!(report.reversors_found.contains(&Mat2Z::new(5, 3, -8, -5)));
//! ```

pub mod involutions;
pub mod lattice;
pub mod pell;
pub mod reversibility;
pub mod serde_decimal;
pub mod tables;

mod arith;
mod error;
mod poly;

pub use error::{Error, Result};
pub use involutions::{
    classify_involution, enumerate_involutions, fixed_point_curves, materialize, FixedCurve,
    InvolutionFamily, InvolutionSpec,
};
pub use lattice::{
    classify_hyperbolicity, det, inverse_unimodular, is_involution, mat_mul, mat_pow,
    HyperbolicityReason, HyperbolicityVerdict, Mat2Z, Orientation,
};
pub use pell::{
    brute_force_solutions, cf_sqrt, classify_conic, fundamental_solution, solve_general,
    CfExpansion, ConicKind, PellPoint, PellProblem, PellSolutionSet, SolutionKind,
};
pub use reversibility::{
    construct_reversible_anosov, find_reversors, involution_family, is_r_reversible,
    orientation_reversing_analysis, reversor_composition_commutes, ReversibilityReport,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/involutions.md")]
    mod involutions {}
    #[doc = include_str!("../../../book/src/fixed_curves.md")]
    mod fixed_curves {}
    #[doc = include_str!("../../../book/src/pell.md")]
    mod pell {}
    #[doc = include_str!("../../../book/src/reversors.md")]
    mod reversors {}
    #[doc = include_str!("../../../book/src/orientation_reversing.md")]
    mod orientation_reversing {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
