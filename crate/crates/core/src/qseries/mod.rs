//! Truncated power series in `q` with Laurent polynomial coefficients in the
//! colour variables `a_0, ..., a_{n-1}`.

mod laurent;
pub mod lemmas;
mod products;
mod series;
mod xseries;

pub use laurent::{LaurentPoly, Monomial};
pub use products::{
    constant_term_product, dilate, euler, g, inv_euler, inv_pochhammer, inv_qfactorial,
    jacobi_triple_product_check, jacobi_triple_product_sides, main2_jacobi_form, main2_product_form,
    pochhammer, qbinom, quadratic_form_points, Dilation, QTerm,
};
pub use series::{Mismatch, QSeries, EXACT};
pub use xseries::XSeries;
