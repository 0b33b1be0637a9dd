//! Succession rule, exact series and generating-function identities for
//! `(201,210)`-avoiding inversion sequences and related classes.

mod poly;
mod satu;
mod type_two;
mod series;
mod succession;

pub use poly::ExactPoly;
pub use satu::{satu_residual, satu_series, verify_satu_equation, SatuForm};
pub use type_two::{class_distribution_series, identity_series, type_two_report, verify_type_two_equations, TypeTwoReport};
pub use series::{algebraic_residual, closed_form_series, f_poly, f_polys, verify_algebraic_equation, Series};
pub use succession::{count_by_succession, parameters, projected_profile, successors, Label, LevelProfile};
