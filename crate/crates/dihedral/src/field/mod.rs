//! The coefficient field Q(k0, k1): exact scalars, sparse parameter
//! polynomials, canonical linear forms, and rational functions whose
//! denominators stay factored into linear forms.

mod form;
mod poly;
mod rat;

pub use form::{Affine, LinearForm};
pub use poly::ParamPoly;
pub use rat::ParamRat;
