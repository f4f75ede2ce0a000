//! Residuals of the Yang-Baxter type identities, symbolic and numeric.

mod assoc;
mod classical;
mod numeric;
mod quantum;
mod report;
mod slots;

pub use assoc::{
    aybe_commutator_sum, aybe_residual, aybe_reversed_residual, aybe_slots, check_lift, check_r01, r01_residual,
    semiclassical_parts, u_coefficients,
};
pub use classical::{
    associative_combination, cab_check, cybe_residual, cybe_spectral_residual, pr_limit, pr_limit_check,
    reconstruct_tilde_t, reversal_witness, t_prime, unitarity_check, unitarity_residual, UnitarityKind,
};
pub use numeric::{numeric_residual, NumericConfig, NumericIdentity, POLE_MARGIN};
pub use quantum::{hecke_residual, qybe_residual};
pub use report::{Mode, Outcome, VerifyReport, Witness};
