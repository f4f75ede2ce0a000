//! Sparse tensors on `Mat_n ⊗ Mat_n` and `Mat_n ⊗ Mat_n ⊗ Mat_n`.
//!
//! Keys are 1-based. `(i, j, k, l)` is the coefficient of `e_ij ⊗ e_kl`,
//! printed as `t_{ik}^{jl}`.

mod diag;
mod scalar;
mod tensor2;
mod tensor3;

pub use diag::DiagMatrix;
pub use scalar::Scalar;
pub use tensor2::{Key2, Tensor2};
pub use tensor3::{mul_embedded, Key3, Legs, Tensor3};
