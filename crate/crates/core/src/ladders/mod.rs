//! Light ladders, double ladders, and the checks that they form cellular
//! bases of Hom spaces between tensor products of fundamentals.

mod checks;
mod double;
mod light;

pub use checks::{
    basis_check, cellularity_check, cellularity_from_word, express_in_basis, random_morphisms, ladder_basis, triangularity_check, upside_down_check,
    CellTarget, LadderBasis, LadderEvals, Triangularity,
};
pub use double::{double_ladders, DoubleLadder};
pub use light::{
    all_elementary_ladders, elementary_ladder, is_step, light_ladder, neutral_12_21, neutral_21_12, neutral_diagram,
    ElementaryLadder, LadderChoice,
};
