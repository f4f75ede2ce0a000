//! Belavin–Drinfeld data for `sl_n` and the associative structures on it.

mod assoc;
mod json;
pub mod linalg;
mod roots;
mod swedge;
mod triple;

pub use assoc::{compatible_permutations, is_associative, AssocStructure};
pub use json::StructureDoc;
pub use roots::{is_orientation_preserving, orientation_c, prec_order, prec_pairs, precedes, ps_constant};
pub use swedge::{
    admissible_phi, check_tra, phi_admissible, phi_space, s0_from_structure, s_samples, satisfies_tr02, solve_s_system, SWedge,
};
pub use triple::{
    cg_triple, enumerate_cg_triples, enumerate_triples, res, simple_inner, validate_triple, BDTriple, Root, Violation,
    DEFAULT_ENUMERATION_BOUND,
};
