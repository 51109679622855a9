//! Exact symbolic engine for the Drinfeld-twist quantization of the W-algebra
//! W(2,2).
//!
//! The Lie algebra has basis `{L_n, W_n | n ∈ ℤ}` with
//! `[L_m, L_n] = (m-n) L_{m+n}`, `[L_m, W_n] = (m-n) W_{m+n}` and `[W_m, W_n] = 0`.
//! Everything here works over ℚ: elements of the enveloping algebra are kept in
//! PBW normal form, series in the deformation parameter `t` are truncated at a
//! fixed order, and every identity is checked by exact equality.
//!
//! Layers, bottom up:
//!
//! * [`algebra`]: generators, PBW monomials, multiplication, `ħ` and its factorials.
//! * [`tensor`]: order-2 and order-3 tensor powers with slotwise products.
//! * [`series`]: truncated power series over any of the coefficient rings.
//! * [`hopf`]: the primitive coproduct, antipode and counit.
//! * [`twist`]: the twist elements `C_b, D_b, U_b, V_b` and the twisted Hopf maps.
//! * [`verify`]: named verification suites producing structured reports.

pub mod algebra;
pub mod error;
pub mod hopf;
pub mod json;
pub mod mutation;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod series;
pub mod tensor;
pub mod twist;
pub mod verify;

pub use algebra::{
    ad_power, bracket, bracket_basis, hbar, hbar_falling, hbar_rising, multiply, AlgebraElement,
    GenKind, Generator, Monomial, TwistConfig,
};
pub use error::Error;
pub use ring::Ring;
pub use scalar::Scalar;
pub use series::TruncatedSeries;
pub use tensor::{Tensor, Tensor2, Tensor3};
pub use twist::{Quantization, TwistElements};
pub use verify::{CheckStatus, VerificationReport};

pub type Result<T, E = Error> = std::result::Result<T, E>;
