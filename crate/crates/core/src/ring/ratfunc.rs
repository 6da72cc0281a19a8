use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::elem::RingElem;
use super::laurent::{forward_owned, qint, zpoly, LaurentPoly};
use crate::error::{Error, Result};

/// Element of Q(q) as `num / den` with Laurent polynomial parts.
///
/// Normalised so that num and den are coprime, `den` has lowest exponent 0
/// and positive leading coefficient. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = num.low() - den.low();
        let n = num.dense();
        let d = den.dense();
        let g = zpoly::gcd(n, d);
        let (mut n2, mut d2) = if g.len() == 1 && g[0].is_one() {
            (n.to_vec(), d.to_vec())
        } else {
            (zpoly::div_exact(n, &g), zpoly::div_exact(d, &g))
        };
        if d2.last().is_some_and(|c| c < &BigInt::zero()) {
            n2.iter_mut().for_each(|c| *c = -&*c);
            d2.iter_mut().for_each(|c| *c = -&*c);
        }
        Self { num: LaurentPoly::from_dense(shift, n2), den: LaurentPoly::from_dense(0, d2) }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::normalized(p, LaurentPoly::one())
    }
}

impl From<&RingElem> for RatFunc {
    fn from(x: &RingElem) -> Self {
        Self::normalized(x.num().clone(), qint(2).pow(x.locpow()))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalized(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

forward_owned!(RatFunc, Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalises_common_factors() {
        // [4]/[2] = q^2 + q^-2
        let x = RatFunc::new(qint(4), qint(2)).unwrap();
        assert_eq!(x, RatFunc::from("q^-2 + q^2".parse::<LaurentPoly>().unwrap()));
        let y = RatFunc::new(-qint(3), qint(3).shift(4)).unwrap();
        assert_eq!(y, RatFunc::from(LaurentPoly::monomial(-1, -4)));
    }

    #[test]
    fn field_inverse() {
        let x = RatFunc::new(qint(3), qint(5)).unwrap();
        assert_eq!(&x * &x.inv().unwrap(), RatFunc::one());
        assert!(RatFunc::zero().inv().is_err());
        assert!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn matches_ring_embedding() {
        let a = RingElem::new(qint(3), 1);
        let b = RingElem::new(LaurentPoly::monomial(2, -1), 2);
        assert_eq!(RatFunc::from(&(&a * &b)), &RatFunc::from(&a) * &RatFunc::from(&b));
        assert_eq!(RatFunc::from(&(&a + &b)), &RatFunc::from(&a) + &RatFunc::from(&b));
    }
}
