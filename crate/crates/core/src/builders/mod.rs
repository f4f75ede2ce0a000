//! Explicit classical and quantum r-matrices.

mod classical;
mod json;
mod quantum;
mod spectral;

pub use classical::{build_a, build_r_ts, build_rst, constant_spectral, hat_r, ClassicalRMatrix};
pub use json::{ratfunc_doc, ratfunc_from_doc, EntryDoc, FactorDoc, MatrixDoc, Provenance, TermDoc, SCHEMA_VERSION};
pub use quantum::{
    baxterize, build_r_ggs_assoc, build_r_ggs_general, build_r_st_quantum, build_r_uv, build_r_uv_checked, build_y, s_with_phi,
    RuvFormula,
};
pub use spectral::{q_minus_qinv, q_pow, spectral_factor, x1_pow, SpectralMatrix};
