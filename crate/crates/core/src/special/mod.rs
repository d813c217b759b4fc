//! Bessel functions of integer order for real arguments.

mod bessel;

pub use bessel::{
    bessel_j, bessel_j_deriv, bessel_j_orders, bessel_j_prime, bessel_k, bessel_k_orders,
    bessel_k_prime, bessel_k_scaled_deriv, bessel_k_scaled_orders, MAX_ORDER,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecialError {
    #[error("{func}: argument {x} is outside the domain")]
    Domain { func: &'static str, x: f64 },
    #[error("order {n} exceeds the supported maximum {max}")]
    UnsupportedOrder { n: u32, max: u32 },
}
