//! Numerical semigroups, divisor sets and generalized Feng-Rao distances.
//!
//! The entry point is [`NumericalSemigroup`]. Two-generator semigroups get
//! closed forms and the rectangle geometry in [`dim2`]. [`fengrao`] computes
//! classical and generalized Feng-Rao distances and numbers. [`bounds`]
//! compares the resulting bounds on generalized Hamming weights with the
//! Griesmer order bound.

pub mod bounds;
pub mod dim2;
pub mod divisors;
pub mod error;
pub mod fengrao;
pub mod render;
pub mod semigroup;

pub use bounds::{
    code_dimension, gfr_bound, griesmer_order_bound, hierarchy_table, thm_final_literal_bound, BoundRow, BoundTable,
    LiteralBound, Winner,
};
pub use dim2::{Change, Dim2Semigroup, ExchangeCounts, GroundInterval, IHRep, UVRep};
pub use divisors::{div_set, div_set_multi, divisors_of, new_divisors_via_apery, symmetric_shift_divisors, DivisorSet};
pub use error::{Error, Result};
pub use fengrao::{
    amenable_minimum, amenable_sets, classical_fr, classical_fr_two_gen, coro_final_gap_bound, coro_final_value,
    feng_rao_number, feng_rao_number_search, generalized_fr, is_amenable, optimal_amenable, rho_sum_formula,
    AmenableConfiguration, Budget, Configuration, CoroFinal, FengRaoNumber, FengRaoResult, Method, Optimality,
};
pub use render::{ground_layer, render_strip, Format, Layer, StripSpec};
pub use semigroup::{NumericalSemigroup, SemigroupDescriptor, MAX_SCALE};
