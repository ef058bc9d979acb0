//! Self-contained special functions: log-gamma, generalized Laguerre
//! polynomials, and generalized Gauss-Laguerre quadrature.

pub mod gamma;
pub mod laguerre;
pub mod quadrature;

pub use gamma::log_gamma;
pub use laguerre::{laguerre_deriv, laguerre_eval, laguerre_second_deriv, LaguerreBasis};
pub use quadrature::{gauss_laguerre, QuadratureRule};
