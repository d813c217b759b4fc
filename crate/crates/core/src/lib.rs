//! Local angular-momentum bookkeeping for free Maxwell and Dirac fields:
//! exact field configurations, the spin and orbital densities, currents and
//! torques built from them, and pointwise residuals of the balance laws on
//! grids, with analytic or finite-difference derivatives.

// `!(x > 0.0)` is how NaN is rejected throughout
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::needless_range_loop, clippy::suspicious_arithmetic_impl, clippy::too_many_arguments)]

pub mod constants;
pub mod diffops;
pub mod dirac;
pub mod em;
pub mod dual;
pub mod jet;
pub mod quantities;
pub mod roots;
pub mod special;
pub mod tensor;
pub mod verify;
