//! Webs as stacks of slices of generators, their evaluation to linear maps,
//! and the defining relations.

mod diagram;
mod eval;
mod relations;

pub use diagram::{
    compose, compose_all, flip, from_json, pad, parse_text, parse_text_with_source, tensor, to_json, to_text,
    Diagram, Generator, Slice, WebExpr,
};
pub use eval::{eval, eval_expr, generator_matrix, Evaluator};
pub use relations::{
    circle_one_value, circle_two_value, derived_trivalents, relation_suite, relations, rotate, rotate_expr,
    tetravalent, trivalent_12_1, trivalent_1_12, trivalent_1_21, trivalent_21_1, Relation, RelationOutcome,
};
