pub mod error;
pub mod exact;
pub mod par;
pub mod tensor;
pub mod bd;
pub mod builders;
pub mod verify;

pub use error::{Error, Result};
