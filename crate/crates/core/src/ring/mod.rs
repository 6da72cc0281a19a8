//! Exact arithmetic in A = Z[q, q^-1][1/[2]] and its specialisations.

mod elem;
mod field;
mod laurent;
mod ratfunc;

pub use elem::RingElem;
pub use field::{
    AnyField, CoeffField, CoeffRing, FieldSpec, FieldValue, FractionField, PrimeField, RationalField, SymbolicA,
};
pub use laurent::{qint, LaurentPoly};
pub use ratfunc::RatFunc;

/// Image of `x` under the field specialisation.
pub fn specialize(x: &RingElem, spec: &FieldSpec) -> crate::Result<FieldValue> {
    spec.specialize(x)
}
