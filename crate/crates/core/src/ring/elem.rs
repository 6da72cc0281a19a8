use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::laurent::{forward_owned, qint, LaurentPoly};
use crate::error::{Error, Result};

/// Element `num / [2]^locpow` of A = Z[q, q^-1][1/[2]].
///
/// Canonical: when `locpow > 0`, `[2]` does not divide `num`. So two
/// elements are equal exactly when their fields are.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RingElem {
    num: LaurentPoly,
    locpow: u32,
}

fn two() -> &'static LaurentPoly {
    static TWO: OnceLock<LaurentPoly> = OnceLock::new();
    TWO.get_or_init(|| qint(2))
}

fn two_pow(k: u32) -> LaurentPoly {
    two().pow(k)
}

impl RingElem {
    pub fn new(num: LaurentPoly, locpow: u32) -> Self {
        let mut num = num;
        let mut k = locpow;
        if num.is_zero() {
            k = 0;
        }
        while k > 0 {
            match num.try_divide(two()) {
                Some(d) => {
                    num = d;
                    k -= 1;
                }
                None => break,
            }
        }
        Self { num, locpow: k }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn int(n: i64) -> Self {
        LaurentPoly::constant(n).into()
    }

    /// `c q^e`.
    pub fn qpow(c: i64, e: i64) -> Self {
        LaurentPoly::monomial(c, e).into()
    }

    pub fn qint(n: i64) -> Self {
        qint(n).into()
    }

    /// `1 / [2]`.
    pub fn inv_two() -> Self {
        Self { num: LaurentPoly::one(), locpow: 1 }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn locpow(&self) -> u32 {
        self.locpow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.locpow == 0 && self.num.is_one()
    }

    /// Units of A are exactly `±q^a [2]^b`.
    pub fn is_unit(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let mut n = self.num.clone();
        while let Some(d) = n.try_divide(two()) {
            n = d;
        }
        matches!(n.as_monomial(), Some((c, _)) if c.abs().is_one())
    }

    /// Exact quotient in A, failing when the result leaves A.
    pub fn divide_exact(&self, d: &RingElem) -> Result<RingElem> {
        if d.is_zero() {
            return Err(Error::NonDivisible);
        }
        // (a/[2]^j) / (b/[2]^k) = a [2]^k / (b [2]^j). Strip powers of [2]
        // from b first; those go to the localisation exponent.
        let mut b = d.num.clone();
        let mut extra = 0u32;
        while let Some(x) = b.try_divide(two()) {
            b = x;
            extra += 1;
        }
        let a = &self.num * &two_pow(d.locpow);
        let quot = a.divide_exact(&b)?;
        Ok(RingElem::new(quot, self.locpow + extra))
    }

    /// Multiplicative inverse, when this is a unit.
    pub fn inverse(&self) -> Result<RingElem> {
        RingElem::one().divide_exact(self)
    }

    pub fn pow(&self, n: u32) -> RingElem {
        let mut acc = RingElem::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Bar involution q -> q^-1 (it fixes [2]).
    pub fn bar(&self) -> RingElem {
        RingElem::new(self.num.bar(), self.locpow)
    }

    pub fn scale_int(&self, c: &BigInt) -> RingElem {
        RingElem::new(self.num.scale(c), self.locpow)
    }
}

impl From<LaurentPoly> for RingElem {
    fn from(num: LaurentPoly) -> Self {
        RingElem { num, locpow: 0 }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.locpow {
            0 => write!(f, "{}", self.num),
            1 => write!(f, "({})/[2]", self.num),
            k => write!(f, "({})/[2]^{k}", self.num),
        }
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for RingElem {
    type Err = Error;

    /// Accepts `(<poly>)/[2]^k`, `(<poly>)/[2]` and a bare polynomial.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let (poly, tail) = rest
                .rsplit_once(')')
                .ok_or_else(|| Error::Parse(format!("bad ring element {s:?}")))?;
            let tail = tail.trim();
            let k = if tail.is_empty() {
                0
            } else {
                tail.strip_prefix("/[2]")
                    .and_then(|k| match k.trim() {
                        "" => Some(1),
                        k => k.strip_prefix('^').and_then(|k| k.trim().parse::<u32>().ok()),
                    })
                    .ok_or_else(|| Error::Parse(format!("bad ring element {s:?}")))?
            };
            Ok(RingElem::new(poly.parse()?, k))
        } else {
            Ok(s.parse::<LaurentPoly>()?.into())
        }
    }
}

impl Add<&RingElem> for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.locpow == rhs.locpow {
            return RingElem::new(&self.num + &rhs.num, self.locpow);
        }
        let m = self.locpow.max(rhs.locpow);
        let a = &self.num * &two_pow(m - self.locpow);
        let b = &rhs.num * &two_pow(m - rhs.locpow);
        RingElem::new(&a + &b, m)
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem { num: -&self.num, locpow: self.locpow }
    }
}

impl Sub<&RingElem> for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        self + &(-rhs)
    }
}

impl Mul<&RingElem> for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        if self.is_zero() || rhs.is_zero() {
            return RingElem::zero();
        }
        let num = &self.num * &rhs.num;
        if self.locpow > 0 && rhs.locpow > 0 {
            // [2] is prime in Z[q, q^-1] and divides neither factor.
            return RingElem { num, locpow: self.locpow + rhs.locpow };
        }
        RingElem::new(num, self.locpow + rhs.locpow)
    }
}

forward_owned!(RingElem, Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_cancels_two() {
        let x = RingElem::new(qint(4), 1);
        assert_eq!(x.locpow(), 0);
        assert_eq!(x, "q^-2 + q^2".parse().unwrap());
        let y = RingElem::new(qint(3), 2);
        assert_eq!(y.locpow(), 2);
    }

    #[test]
    fn units() {
        assert!(RingElem::qpow(-1, 7).is_unit());
        assert!(RingElem::inv_two().is_unit());
        assert!((RingElem::qint(2) * RingElem::qpow(1, -3)).is_unit());
        assert!(!RingElem::qint(3).is_unit());
        assert!(!RingElem::int(2).is_unit());
        assert!(!RingElem::zero().is_unit());
    }

    #[test]
    fn exact_division_in_a() {
        // [6][2]/[3] = [5] - [1]
        let lhs = (RingElem::qint(6) * RingElem::qint(2)).divide_exact(&RingElem::qint(3)).unwrap();
        assert_eq!(lhs, RingElem::qint(5) - RingElem::one());
        assert!(RingElem::one().divide_exact(&RingElem::qint(3)).is_err());
        let inv = RingElem::qint(2).inverse().unwrap();
        assert_eq!(inv, RingElem::inv_two());
        assert_eq!(RingElem::inv_two().inverse().unwrap(), RingElem::qint(2));
    }

    #[test]
    fn display_round_trip() {
        let x = RingElem::new(LaurentPoly::monomial(-1, -2), 1);
        assert_eq!(x.to_string(), "(-q^-2)/[2]");
        assert_eq!("(q^-1 + q)/[2]^2".parse::<RingElem>().unwrap(), RingElem::inv_two());
        assert_eq!(x.to_string().parse::<RingElem>().unwrap(), x);
    }
}
