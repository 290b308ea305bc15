//! Complex-argument special functions.

pub mod bernoulli;
pub mod gamma;
pub mod kummer;
pub mod policy;
pub mod tricomi;
pub mod whittaker;
pub mod wronskian;

pub use gamma::{digamma, gamma, re_digamma_imag, rgamma, DigammaMode, Truncated};
pub use kummer::{kummer_m, kummer_m_eval, kummer_m_prime, kummer_n, Evaluation};
pub use policy::EvalPolicy;
pub use tricomi::{tricomi_u, tricomi_u_eval, tricomi_u_in, tricomi_u_prime, vee, vee_prime, Region, RegionEvaluation};
pub use whittaker::{w_half_origin, whittaker, whittaker_with_derivative, OriginData, ValueDeriv, WhittakerIndex, WhittakerKind};
pub use wronskian::{central_derivative, numeric_wronskian, WronskianEstimate};
