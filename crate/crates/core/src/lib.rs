//! Exact invariants of height-function Lefschetz fibrations on semisimple
//! adjoint orbits.
//!
//! * [`root_system`]: root systems, Weyl orbits, parabolic stabilizers.
//! * [`slf`]: critical points, critical values and regular-fiber topology of
//!   `f_H(x) = <H, x>` on the orbit of `H0`.
//! * [`hodge`]: flag-manifold Poincare polynomials and Hodge diamonds, the
//!   45-degree reflection and diamond consistency checks.
//! * [`fukaya`]: rank-level directed categories of vanishing cycles.
//! * [`mirror`]: fibers of the potential on the explicit two-thimble mirror.

pub mod cartan;
pub mod error;
pub mod fukaya;
pub mod hodge;
pub mod mirror;
pub mod rational;
pub mod root_system;
pub mod slf;

pub use cartan::{CartanType, Series};
pub use error::{Error, Result};
pub use fukaya::{build_directed_category, category_from_slf, hom_euler, lg2_category, DirectedCategory, IntersectionData};
pub use hodge::{
    diamond_checks, flag_diamond, flag_length_profile, flag_poincare, flag_poincare_product, mirror_reflect,
    DiamondChecks, HodgeDiamond, LengthProfile,
};
pub use mirror::{classify_fiber, critical_levels, mirror_consistency_report, ComplexRational, MirrorFiberReport};
pub use rational::{format_rational, parse_rational, CartanVector, Rational};
pub use root_system::{ParabolicData, Regularity, Root, RootSystem};
pub use slf::{critical_set, critical_values, fiber_betti, orbit_dimension, slf_report, SlfReport, DEFAULT_ORBIT_CAP};
