//! The fundamental representations of quantum sp4 over A, their tensor
//! products, and the maps that the web generators evaluate to.

pub mod linmap;
mod maps;
mod module;

pub use linmap::{LinMap, Matrix, SparseVec};
pub use maps::{
    cap, cap_from_duality, check_intertwiner, check_intertwiner_between, check_phi_intertwiner, coevaluation,
    cup, cup_from_duality, evaluation, imap, invert_monomial, phi, pmap, preserves_weight, IntertwinerFailure,
};
pub use module::{fundamental_action, Factor, Gen, TensorModule};

use crate::ring::RingElem;
use crate::weights::Word;

/// `g` applied to the basis vector `index` of V(w).
pub fn act(g: Gen, w: &Word, index: usize) -> SparseVec<RingElem> {
    TensorModule::of_word(w).act(g, index)
}
