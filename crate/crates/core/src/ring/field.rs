use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::elem::RingElem;
use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Coefficient ring used by evaluation and linear algebra.
///
/// Elements are plain values; the context carries whatever the arithmetic
/// needs (the modulus, the specialised value of q).
pub trait CoeffRing: Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Unit test used by triangularity: units of A over the symbolic ring,
    /// nonzero elements over a field.
    fn is_unit(&self, a: &Self::Elem) -> bool;
    /// The image of an element of A.
    fn embed(&self, x: &RingElem) -> Self::Elem;
    fn render(&self, a: &Self::Elem) -> String;
    fn describe(&self) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

pub trait CoeffField: CoeffRing {
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// A itself, exact.
#[derive(Clone, Copy, Debug, Default)]
pub struct SymbolicA;

impl CoeffRing for SymbolicA {
    type Elem = RingElem;
    fn zero(&self) -> RingElem {
        RingElem::zero()
    }
    fn one(&self) -> RingElem {
        RingElem::one()
    }
    fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        a + b
    }
    fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        a * b
    }
    fn neg(&self, a: &RingElem) -> RingElem {
        -a
    }
    fn is_zero(&self, a: &RingElem) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &RingElem) -> bool {
        a.is_unit()
    }
    fn embed(&self, x: &RingElem) -> RingElem {
        x.clone()
    }
    fn render(&self, a: &RingElem) -> String {
        a.to_string()
    }
    fn describe(&self) -> String {
        "A".into()
    }
}

/// Q(q) with generic q.
#[derive(Clone, Copy, Debug, Default)]
pub struct FractionField;

impl CoeffRing for FractionField {
    type Elem = RatFunc;
    fn zero(&self) -> RatFunc {
        RatFunc::zero()
    }
    fn one(&self) -> RatFunc {
        RatFunc::one()
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a + b
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a * b
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        -a
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &RatFunc) -> bool {
        !a.is_zero()
    }
    fn embed(&self, x: &RingElem) -> RatFunc {
        RatFunc::from(x)
    }
    fn render(&self, a: &RatFunc) -> String {
        a.to_string()
    }
    fn describe(&self) -> String {
        "Q(q)".into()
    }
}

impl CoeffField for FractionField {
    fn inv(&self, a: &RatFunc) -> RatFunc {
        a.inv().expect("inverse of zero")
    }
}

/// Q with q specialised to a nonzero rational.
#[derive(Clone, Debug)]
pub struct RationalField {
    q: BigRational,
    qinv: BigRational,
    inv_two: BigRational,
}

impl RationalField {
    pub fn new(q: BigRational) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidSpecialization("q must be nonzero".into()));
        }
        let qinv = q.recip();
        let two = &q + &qinv;
        if two.is_zero() {
            return Err(Error::InvalidSpecialization(format!("q + q^-1 = 0 for q = {q}")));
        }
        Ok(Self { inv_two: two.recip(), q, qinv })
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    fn eval_poly(&self, p: &LaurentPoly) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in p.terms() {
            let base = if e < 0 { &self.qinv } else { &self.q };
            acc += num_traits::pow(base.clone(), e.unsigned_abs() as usize) * BigRational::from(c.clone());
        }
        acc
    }
}

impl CoeffRing for RationalField {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
    fn embed(&self, x: &RingElem) -> BigRational {
        self.eval_poly(x.num()) * num_traits::pow(self.inv_two.clone(), x.locpow() as usize)
    }
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn describe(&self) -> String {
        format!("Q, q = {}", self.q)
    }
}

impl CoeffField for RationalField {
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

/// F_p with q specialised to a residue. Elements are reduced `u64`s.
#[derive(Clone, Debug)]
pub struct PrimeField {
    p: u64,
    q: u64,
    qinv: u64,
    inv_two: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::InvalidSpecialization(format!("{p} is not a prime below 2^31")));
        }
        let q = q % p;
        if q == 0 {
            return Err(Error::InvalidSpecialization("q must be nonzero".into()));
        }
        let qinv = pow_mod(q, p - 2, p);
        let two = (q + qinv) % p;
        if two == 0 {
            return Err(Error::InvalidSpecialization(format!("q + q^-1 = 0 in F_{p} for q = {q}")));
        }
        Ok(Self { p, q, qinv, inv_two: pow_mod(two, p - 2, p) })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    fn reduce_int(&self, c: &BigInt) -> u64 {
        let m = c % BigInt::from(self.p);
        let m = if m.is_negative() { m + BigInt::from(self.p) } else { m };
        m.to_u64().unwrap()
    }

    fn eval_poly(&self, poly: &LaurentPoly) -> u64 {
        let p = self.p;
        let mut acc = 0;
        for (e, c) in poly.terms() {
            let base = if e < 0 { self.qinv } else { self.q };
            let t = pow_mod(base, e.unsigned_abs(), p) * self.reduce_int(c) % p;
            acc = (acc + t) % p;
        }
        acc
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl CoeffRing for PrimeField {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn embed(&self, x: &RingElem) -> u64 {
        self.eval_poly(x.num()) * pow_mod(self.inv_two, x.locpow() as u64, self.p) % self.p
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn describe(&self) -> String {
        format!("F_{}, q = {}", self.p, self.q)
    }
}

impl CoeffField for PrimeField {
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        pow_mod(*a, self.p - 2, self.p)
    }
}

/// Which field to work over, as named on the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    SymbolicQq,
    Rationals { q: String },
    PrimeField { p: u64, q: u64 },
}

/// A validated field, ready for computation.
#[derive(Clone, Debug)]
pub enum AnyField {
    Symbolic(FractionField),
    Rational(RationalField),
    Prime(PrimeField),
}

/// Value of `specialize`.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldValue {
    Symbolic(RatFunc),
    Rational(BigRational),
    Prime { value: u64, p: u64 },
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Symbolic(x) => write!(f, "{x}"),
            FieldValue::Rational(x) => write!(f, "{x}"),
            FieldValue::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl FieldSpec {
    pub fn build(&self) -> Result<AnyField> {
        Ok(match self {
            FieldSpec::SymbolicQq => AnyField::Symbolic(FractionField),
            FieldSpec::Rationals { q } => {
                let q: BigRational = q
                    .parse()
                    .map_err(|_| Error::InvalidSpecialization(format!("bad rational {q:?}")))?;
                AnyField::Rational(RationalField::new(q)?)
            }
            FieldSpec::PrimeField { p, q } => AnyField::Prime(PrimeField::new(*p, *q)?),
        })
    }

    pub fn validate(&self) -> Result<()> {
        self.build().map(|_| ())
    }

    /// Image of an element of A in the field.
    pub fn specialize(&self, x: &RingElem) -> Result<FieldValue> {
        Ok(match self.build()? {
            AnyField::Symbolic(k) => FieldValue::Symbolic(k.embed(x)),
            AnyField::Rational(k) => FieldValue::Rational(k.embed(x)),
            AnyField::Prime(k) => FieldValue::Prime { value: k.embed(x), p: k.p() },
        })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::SymbolicQq => write!(f, "Q(q)"),
            FieldSpec::Rationals { q } => write!(f, "Q, q = {q}"),
            FieldSpec::PrimeField { p, q } => write!(f, "F_{p}, q = {q}"),
        }
    }
}

/// Runs `$body` with `$k` bound to the concrete field inside an `AnyField`.
#[macro_export]
macro_rules! with_field {
    ($field:expr, $k:ident => $body:expr) => {
        match $field {
            $crate::ring::AnyField::Symbolic($k) => $body,
            $crate::ring::AnyField::Rational($k) => $body,
            $crate::ring::AnyField::Prime($k) => $body,
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qint;

    #[test]
    fn prime_field_specialisation() {
        let spec = FieldSpec::PrimeField { p: 7, q: 2 };
        let x = RingElem::qint(4).divide_exact(&RingElem::qint(2)).unwrap();
        // Oracle: [4](2) = 8+2+4+1 = 1 mod 7, [2](2) = 2+4 = 6, 1/6 = 6.
        assert_eq!(spec.specialize(&x).unwrap(), FieldValue::Prime { value: 6, p: 7 });
        let inv2 = spec.specialize(&RingElem::inv_two()).unwrap();
        assert_eq!(inv2, FieldValue::Prime { value: 6, p: 7 });
    }

    #[test]
    fn degenerate_specialisations_rejected() {
        for q in [2, 3] {
            let spec = FieldSpec::PrimeField { p: 5, q };
            assert!(matches!(spec.validate(), Err(Error::InvalidSpecialization(_))), "q = {q}");
        }
        assert!(FieldSpec::PrimeField { p: 5, q: 4 }.validate().is_ok());
        assert!(FieldSpec::PrimeField { p: 2, q: 1 }.validate().is_err());
        assert!(FieldSpec::PrimeField { p: 9, q: 2 }.validate().is_err());
        assert!(FieldSpec::Rationals { q: "0".into() }.validate().is_err());
        assert!(FieldSpec::Rationals { q: "1".into() }.validate().is_ok());
    }

    #[test]
    fn classical_limit() {
        let k = RationalField::new(BigRational::one()).unwrap();
        assert_eq!(k.embed(&RingElem::qint(5)), BigRational::from_integer(5.into()));
        assert_eq!(k.embed(&RingElem::inv_two()), BigRational::new(1.into(), 2.into()));
        let x = RingElem::new(qint(3), 2);
        assert_eq!(k.embed(&x), BigRational::new(3.into(), 4.into()));
    }
}
