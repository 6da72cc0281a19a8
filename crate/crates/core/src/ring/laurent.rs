use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Element of Z[q, q^-1] with arbitrary-precision coefficients.
///
/// Stored densely: `coeffs[k]` is the coefficient of `q^(low + k)`. Both ends
/// of `coeffs` are nonzero; zero is the empty vector with `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_dense(e, vec![c.into()])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    pub(crate) fn from_dense(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        Self { low: low + lead_zeros as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let k = e - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub(crate) fn dense(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    /// `Some((c, e))` when the polynomial is the single term `c q^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        (self.coeffs.len() == 1).then(|| (&self.coeffs[0], self.low))
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_dense(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Bar involution q -> q^-1.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self { low: -self.high(), coeffs }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d` in Z[q, q^-1].
    pub fn divide_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        self.try_divide(d).ok_or(Error::NonDivisible)
    }

    pub fn try_divide(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Both dense vectors have nonzero constant terms once the monomial
        // parts are stripped, so divisibility reduces to Z[q].
        let n = &self.coeffs;
        let dv = &d.coeffs;
        if n.len() < dv.len() {
            return None;
        }
        let lead = dv.last().unwrap();
        let mut rem = n.clone();
        let qlen = n.len() - dv.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dv.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in dv.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(self.low - d.low, quot))
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }
}

/// The quantum integer `[n] = (q^n - q^-n) / (q - q^-1)`.
pub fn qint(n: i64) -> LaurentPoly {
    let m = n.abs();
    let sign = if n < 0 { -1 } else { 1 };
    LaurentPoly::from_terms((0..m).map(|k| (m - 1 - 2 * k, sign)))
}

impl fmt::Display for LaurentPoly {
    /// Ascending powers, e.g. `-q^-4 + 2 - q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let unit = mag.is_one();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !unit {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                write!(f, "q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the `Display` form and loose variants such as `3*q^0 + -1*q^2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad Laurent polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // Split before every sign that is not part of an exponent.
        let mut pieces: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut prev = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !matches!(prev, None | Some('^') | Some('+') | Some('-')) {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = Some(ch);
        }
        pieces.push(cur);
        let mut terms = Vec::new();
        for piece in pieces {
            let mut t = piece.as_str();
            let mut sign = 1;
            while let Some(c) = t.chars().next().filter(|c| *c == '+' || *c == '-') {
                if c == '-' {
                    sign = -sign;
                }
                t = &t[1..];
            }
            if t.is_empty() {
                return Err(bad());
            }
            let (c, e) = match t.split_once('q') {
                None => (t.parse::<BigInt>().map_err(|_| bad())?, 0),
                Some((cpart, epart)) => {
                    let cpart = cpart.trim_end_matches('*');
                    let c = if cpart.is_empty() { BigInt::one() } else { cpart.parse::<BigInt>().map_err(|_| bad())? };
                    let e = if epart.is_empty() {
                        1
                    } else {
                        epart.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?
                    };
                    (c, e)
                }
            };
            terms.push((e, c * sign));
        }
        Ok(Self::from_terms(terms))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().max(rhs.high());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + k] += c;
        }
        LaurentPoly::from_dense(low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { (&self).$m(rhs) }
        }
    )*
    impl Neg for $t {
        type Output = $t;
        fn neg(self) -> $t { -(&self) }
    }
    };
}
pub(crate) use forward_owned;

forward_owned!(LaurentPoly, Add add, Sub sub, Mul mul);

/// Content-and-sign normalisation helpers on dense Z[q] vectors
/// (index = degree), used by the rational-function gcd.
pub(crate) mod zpoly {
    use super::*;

    pub fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }

    pub fn content(v: &[BigInt]) -> BigInt {
        v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
        let c = content(&v);
        if c.is_zero() || c.is_one() {
            return v;
        }
        v.into_iter().map(|x| x / &c).collect()
    }

    /// Pseudo-remainder of `a` by `b` (deg a >= deg b, b nonzero).
    fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let lb = &b[db];
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for x in r.iter_mut() {
                *x *= lb;
            }
            for (j, bj) in b.iter().enumerate() {
                r[dr - db + j] -= &lr * bj;
            }
            r = trim(r);
        }
        r
    }

    /// gcd in Z[q], normalised to a positive leading coefficient.
    pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let a = trim(a.to_vec());
        let b = trim(b.to_vec());
        if a.is_empty() {
            return normalize_sign(b);
        }
        if b.is_empty() {
            return normalize_sign(a);
        }
        let c = content(&a).gcd(&content(&b));
        let (mut x, mut y) = (primitive(a), primitive(b));
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            if y.len() == 1 {
                x = vec![BigInt::one()];
                break;
            }
            let r = primitive(prem(&x, &y));
            x = y;
            y = r;
        }
        let x = primitive(x);
        normalize_sign(x.into_iter().map(|v| v * &c).collect())
    }

    pub fn normalize_sign(v: Vec<BigInt>) -> Vec<BigInt> {
        if v.last().is_some_and(|c| c.is_negative()) {
            v.into_iter().map(|x| -x).collect()
        } else {
            v
        }
    }

    /// Exact division in Z[q]; caller guarantees divisibility.
    pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let p = LaurentPoly::from_dense(0, a.to_vec());
        let d = LaurentPoly::from_dense(0, b.to_vec());
        let quot = p.try_divide(&d).expect("exact division in Z[q]");
        let mut out = vec![BigInt::zero(); quot.low as usize];
        out.extend(quot.coeffs);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(qint(2), p("1*q^-1 + 1*q^1"));
        assert_eq!(qint(3), p("q^-2 + 1 + q^2"));
        assert_eq!(qint(0), LaurentPoly::zero());
        assert_eq!(qint(-2), -qint(2));
        // [2][3] = [4] + [2]
        assert_eq!(qint(2) * qint(3), qint(4) + qint(2));
    }

    #[test]
    fn display_round_trips() {
        let x = LaurentPoly::from_terms([(-4, -1), (0, 1), (3, 7)]);
        assert_eq!(x.to_string(), "-q^-4 + 1 + 7*q^3");
        assert_eq!(x.to_string().parse::<LaurentPoly>().unwrap(), x);
        assert_eq!("-1*q^-4 + 1*q^0 + 7*q^3".parse::<LaurentPoly>().unwrap(), x);
        assert_eq!("q - 2*q^-1".parse::<LaurentPoly>().unwrap(), LaurentPoly::from_terms([(1, 1), (-1, -2)]));
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn exact_division() {
        let six = qint(6);
        let three = qint(3);
        let q = six.divide_exact(&three).unwrap();
        assert_eq!(q, p("q^-3 + q^3"));
        assert!(matches!(qint(3).divide_exact(&qint(2)), Err(Error::NonDivisible)));
        assert!(LaurentPoly::one().divide_exact(&LaurentPoly::zero()).is_err());
        assert_eq!(LaurentPoly::zero().divide_exact(&qint(2)).unwrap(), LaurentPoly::zero());
        // monomials are units
        assert_eq!(qint(2).shift(5).divide_exact(&LaurentPoly::q()).unwrap(), qint(2).shift(4));
    }

    #[test]
    fn zpoly_gcd() {
        // gcd((q+1)^2 (q-1), 2(q+1)(q+2)) = q+1
        let a: Vec<BigInt> = [-1, -1, 1, 1].iter().map(|&x| BigInt::from(x)).collect();
        let b: Vec<BigInt> = [4, 6, 2].iter().map(|&x| BigInt::from(x)).collect();
        let g = zpoly::gcd(&a, &b);
        assert_eq!(g, vec![BigInt::from(1), BigInt::from(1)]);
    }
}
