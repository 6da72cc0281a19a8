//! Weights in fundamental-weight coordinates, words, and the combinatorics
//! of dominant weight sequences.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `a ϖ1 + b ϖ2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(from = "(i32, i32)", into = "(i32, i32)")]
pub struct Weight {
    pub a: i32,
    pub b: i32,
}

impl From<(i32, i32)> for Weight {
    fn from((a, b): (i32, i32)) -> Self {
        Weight { a, b }
    }
}

impl From<Weight> for (i32, i32) {
    fn from(w: Weight) -> Self {
        (w.a, w.b)
    }
}

pub const fn wt(a: i32, b: i32) -> Weight {
    Weight { a, b }
}

pub const ZERO: Weight = wt(0, 0);
pub const ALPHA_S: Weight = wt(2, -1);
pub const ALPHA_T: Weight = wt(-2, 2);

impl Weight {
    pub fn is_dominant(self) -> bool {
        self.a >= 0 && self.b >= 0
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        wt(self.a + o.a, self.b + o.b)
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        wt(self.a - o.a, self.b - o.b)
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        wt(-self.a, -self.b)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl FromStr for Weight {
    type Err = Error;
    /// `a,b`, optionally parenthesised.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = t.split_once(',').ok_or_else(|| Error::Parse(format!("bad weight {s:?}")))?;
        let p = |x: &str| x.trim().parse::<i32>().map_err(|_| Error::Parse(format!("bad weight {s:?}")));
        Ok(wt(p(a)?, p(b)?))
    }
}

/// `mu - lam` is a nonnegative integer combination of the simple roots.
pub fn dominance_leq(lam: Weight, mu: Weight) -> bool {
    let d = mu - lam;
    // d = m αs + n αt  <=>  m = x + y, n = (x + 2y)/2
    if d.a % 2 != 0 {
        return false;
    }
    d.a + d.b >= 0 && d.a + 2 * d.b >= 0
}

/// Color of a strand: 1 for V(ϖ1), 2 for V(ϖ2).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    One,
    Two,
}

const WEIGHTS_ONE: [Weight; 4] = [wt(-1, 0), wt(1, -1), wt(-1, 1), wt(1, 0)];
const WEIGHTS_TWO: [Weight; 5] = [wt(0, -1), wt(-2, 1), wt(0, 0), wt(2, -1), wt(0, 1)];

impl Letter {
    pub fn dim(self) -> usize {
        self.weights().len()
    }

    /// Weights of the fundamental module in basis order, which is also the
    /// per-letter total order (lowest weight first).
    pub fn weights(self) -> &'static [Weight] {
        match self {
            Letter::One => &WEIGHTS_ONE,
            Letter::Two => &WEIGHTS_TWO,
        }
    }

    pub fn index_of(self, w: Weight) -> Result<usize> {
        self.weights().iter().position(|&x| x == w).ok_or(Error::WeightNotInModule(w))
    }

    pub fn dominant(self) -> Weight {
        match self {
            Letter::One => wt(1, 0),
            Letter::Two => wt(0, 1),
        }
    }

    pub fn digit(self) -> char {
        match self {
            Letter::One => '1',
            Letter::Two => '2',
        }
    }
}

/// Total order on the weights of one fundamental module.
pub fn letter_order(letter: Letter, x: Weight, y: Weight) -> Result<Ordering> {
    Ok(letter.index_of(x)?.cmp(&letter.index_of(y)?))
}

/// A finite word in {1, 2}; the module V(w) is the tensor product of the
/// fundamentals, left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn weight(&self) -> Weight {
        self.0.iter().fold(ZERO, |acc, l| acc + l.dominant())
    }

    pub fn dim(&self) -> usize {
        self.0.iter().map(|l| l.dim()).product()
    }

    pub fn count(&self, l: Letter) -> usize {
        self.0.iter().filter(|&&x| x == l).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// `1^a 2^b` for the dominant weight (a, b).
    pub fn standard(lam: Weight) -> Result<Word> {
        if !lam.is_dominant() {
            return Err(Error::NotDominant(lam));
        }
        let mut v = vec![Letter::One; lam.a as usize];
        v.extend(std::iter::repeat_n(Letter::Two, lam.b as usize));
        Ok(Word(v))
    }

    /// All words of exactly length `n`, in lexicographic order.
    pub fn all_of_length(n: usize) -> Vec<Word> {
        (0..1usize << n)
            .map(|bits| {
                Word((0..n).map(|i| if bits >> (n - 1 - i) & 1 == 0 { Letter::One } else { Letter::Two }).collect())
            })
            .collect()
    }

    /// All words of length at most `n`, shortest first.
    pub fn all_up_to(n: usize) -> Vec<Word> {
        (0..=n).flat_map(Word::all_of_length).collect()
    }

    /// Basis-index digits of a basis vector of V(w), one per letter.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut d = vec![0; self.len()];
        for (i, l) in self.0.iter().enumerate().rev() {
            d[i] = index % l.dim();
            index /= l.dim();
        }
        d
    }

    /// Inverse of `digits`: leftmost factor most significant.
    pub fn index_of_digits(&self, digits: &[usize]) -> usize {
        self.0.iter().zip(digits).fold(0, |acc, (l, &d)| acc * l.dim() + d)
    }

    /// The weight sequence labelling a basis vector.
    pub fn seq_of_index(&self, index: usize) -> WeightSeq {
        WeightSeq(self.digits(index).iter().zip(&self.0).map(|(&d, l)| l.weights()[d]).collect())
    }

    pub fn index_of_seq(&self, seq: &WeightSeq) -> Result<usize> {
        if seq.len() != self.len() {
            return Err(Error::BoundaryMismatch(format!("sequence {seq} does not fit word {self}")));
        }
        let digits: Vec<usize> = self.0.iter().zip(&seq.0).map(|(l, &w)| l.index_of(w)).collect::<Result<_>>()?;
        Ok(self.index_of_digits(&digits))
    }

    /// Index of the highest weight vector (every factor at its top weight).
    pub fn highest_index(&self) -> usize {
        self.dim() - 1
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.digit())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "ε" || s == "-" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| match c {
                '1' => Ok(Letter::One),
                '2' => Ok(Letter::Two),
                _ => Err(Error::Parse(format!("bad word {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One weight per letter of a word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightSeq(pub Vec<Weight>);

impl WeightSeq {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> Weight {
        self.0.iter().fold(ZERO, |acc, &w| acc + w)
    }

    /// The sequence `v_{w,+}`: every factor at its highest weight.
    pub fn dominant_of(w: &Word) -> WeightSeq {
        WeightSeq(w.0.iter().map(|l| l.dominant()).collect())
    }

    /// Partial sums, starting with the first entry.
    pub fn partial_sums(&self) -> Vec<Weight> {
        let mut acc = ZERO;
        self.0
            .iter()
            .map(|&w| {
                acc = acc + w;
                acc
            })
            .collect()
    }
}

impl fmt::Display for WeightSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for WeightSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn check_seq(w: &Word, s: &WeightSeq) -> Result<()> {
    if w.len() != s.len() {
        return Err(Error::BoundaryMismatch(format!("sequence {s} does not fit word {w}")));
    }
    for (l, &x) in w.0.iter().zip(&s.0) {
        l.index_of(x)?;
    }
    Ok(())
}

/// Lexicographic order on S(w), first position most significant.
pub fn lex_compare(w: &Word, s1: &WeightSeq, s2: &WeightSeq) -> Result<Ordering> {
    check_seq(w, s1)?;
    check_seq(w, s2)?;
    for ((l, &x), &y) in w.0.iter().zip(&s1.0).zip(&s2.0) {
        let o = letter_order(*l, x, y)?;
        if o != Ordering::Equal {
            return Ok(o);
        }
    }
    Ok(Ordering::Equal)
}

/// Reverse-lexicographic order: last position most significant.
pub fn dlex_compare(w: &Word, s1: &WeightSeq, s2: &WeightSeq) -> Result<Ordering> {
    check_seq(w, s1)?;
    check_seq(w, s2)?;
    for ((l, &x), &y) in w.0.iter().zip(&s1.0).zip(&s2.0).rev() {
        let o = letter_order(*l, x, y)?;
        if o != Ordering::Equal {
            return Ok(o);
        }
    }
    Ok(Ordering::Equal)
}

/// The ν with V(λ + ν) a summand of V(λ) ⊗ V(letter), for dominant λ.
/// Every such summand has multiplicity one.
pub fn tensor_summands(lam: Weight, letter: Letter) -> Result<Vec<Weight>> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam));
    }
    let (a, b) = (lam.a, lam.b);
    let v = match letter {
        Letter::One => match (a, b) {
            (0, 0) => vec![wt(1, 0)],
            (_, 0) => vec![wt(1, 0), wt(-1, 1), wt(-1, 0)],
            (0, _) => vec![wt(1, 0), wt(1, -1)],
            _ => vec![wt(1, 0), wt(-1, 1), wt(-1, 0), wt(1, -1)],
        },
        Letter::Two => match (a, b) {
            (0, 0) => vec![wt(0, 1)],
            (0, _) => vec![wt(0, 1), wt(2, -1), wt(0, -1)],
            (1, 0) => vec![wt(0, 1), wt(0, 0)],
            (1, _) => vec![wt(0, 1), wt(0, 0), wt(2, -1), wt(0, -1)],
            (_, 0) => vec![wt(0, 1), wt(0, 0), wt(-2, 1)],
            _ => vec![wt(0, 1), wt(2, -1), wt(0, -1), wt(0, 0), wt(-2, 1)],
        },
    };
    debug_assert!(v.iter().all(|&nu| (lam + nu).is_dominant()));
    Ok(v)
}

/// Dominant sequences: the first entry is the dominant weight of the first
/// letter and each later entry is a tensor summand of the running sum.
/// Sorted descending in lex order.
pub fn enumerate_e(w: &Word) -> Vec<WeightSeq> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(w.len());
    fn rec(w: &Word, pos: usize, lam: Weight, cur: &mut Vec<Weight>, out: &mut Vec<WeightSeq>) {
        if pos == w.len() {
            out.push(WeightSeq(cur.clone()));
            return;
        }
        for nu in tensor_summands(lam, w.0[pos]).expect("running sum is dominant") {
            cur.push(nu);
            rec(w, pos + 1, lam + nu, cur, out);
            cur.pop();
        }
    }
    rec(w, 0, ZERO, &mut cur, &mut out);
    out.sort_by(|x, y| lex_compare(w, y, x).unwrap());
    out
}

/// The sequences in E(w) summing to `lam`, descending lex.
pub fn enumerate_e_lambda(w: &Word, lam: Weight) -> Vec<WeightSeq> {
    enumerate_e(w).into_iter().filter(|s| s.sum() == lam).collect()
}

/// E(w) grouped by endpoint.
pub fn e_by_lambda(w: &Word) -> BTreeMap<Weight, Vec<WeightSeq>> {
    let mut m: BTreeMap<Weight, Vec<WeightSeq>> = BTreeMap::new();
    for s in enumerate_e(w) {
        m.entry(s.sum()).or_default().push(s);
    }
    m
}

/// Whether `s` is a dominant sequence for `w`.
pub fn is_dominant_sequence(w: &Word, s: &WeightSeq) -> bool {
    if w.len() != s.len() {
        return false;
    }
    let mut lam = ZERO;
    for (l, &nu) in w.0.iter().zip(&s.0) {
        match tensor_summands(lam, *l) {
            Ok(v) if v.contains(&nu) => lam = lam + nu,
            _ => return false,
        }
    }
    true
}

/// dim Hom(V(w), V(u)) = Σ_λ #E(w, λ) #E(u, λ).
pub fn hom_dim(w: &Word, u: &Word) -> usize {
    let ew = e_by_lambda(w);
    let eu = e_by_lambda(u);
    ew.iter().map(|(lam, v)| v.len() * eu.get(lam).map_or(0, |x| x.len())).sum()
}

/// Dominant weights ordered so that a weight never precedes one below it in
/// dominance; ties broken by the coordinates.
pub fn sort_dominance_compatible(lams: &mut [Weight]) {
    // 2a + 3b is positive on both simple roots.
    lams.sort_by_key(|l| (2 * l.a + 3 * l.b, l.a, l.b));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn seq(v: &[(i32, i32)]) -> WeightSeq {
        WeightSeq(v.iter().map(|&p| p.into()).collect())
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(wt(0, 0), wt(0, 1)));
        assert!(!dominance_leq(wt(1, 0), wt(0, 1)));
        assert!(dominance_leq(wt(0, 0), wt(2, 0)));
        assert!(dominance_leq(wt(1, 0), wt(1, 1)));
        assert!(dominance_leq(wt(3, 0), wt(3, 0)));
    }

    #[test]
    fn lex_and_dlex_examples() {
        let w2121 = w("2121");
        let a = seq(&[(0, 1), (1, 0), (2, -1), (-1, 0)]);
        let b = seq(&[(0, 1), (1, 0), (0, -1), (1, 0)]);
        assert_eq!(lex_compare(&w2121, &a, &b).unwrap(), Ordering::Greater);
        let w11 = w("11");
        let x = seq(&[(1, 0), (-1, 0)]);
        let y = seq(&[(-1, 0), (1, 0)]);
        assert_eq!(dlex_compare(&w11, &x, &y).unwrap(), Ordering::Less);
        assert!(lex_compare(&w11, &x, &seq(&[(0, 1), (0, 0)])).is_err());
    }

    #[test]
    fn summand_examples() {
        assert_eq!(tensor_summands(wt(1, 0), Letter::One).unwrap(), vec![wt(1, 0), wt(-1, 1), wt(-1, 0)]);
        assert_eq!(
            tensor_summands(wt(2, 1), Letter::Two).unwrap(),
            vec![wt(0, 1), wt(2, -1), wt(0, -1), wt(0, 0), wt(-2, 1)]
        );
        assert!(matches!(tensor_summands(wt(-1, 0), Letter::One), Err(Error::NotDominant(_))));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(
            enumerate_e(&w("11")),
            vec![seq(&[(1, 0), (1, 0)]), seq(&[(1, 0), (-1, 1)]), seq(&[(1, 0), (-1, 0)])]
        );
        assert_eq!(enumerate_e_lambda(&w("12"), wt(1, 0)), vec![seq(&[(1, 0), (0, 0)])]);
        assert_eq!(enumerate_e(&Word::empty()), vec![WeightSeq::default()]);
        assert_eq!(hom_dim(&w("11"), &w("11")), 3);
        assert_eq!(hom_dim(&w("11"), &w("2")), 1);
        assert_eq!(hom_dim(&w("11"), &Word::empty()), 1);
        assert_eq!(hom_dim(&Word::empty(), &Word::empty()), 1);
    }

    #[test]
    fn index_round_trip() {
        let u = w("212");
        for i in 0..u.dim() {
            assert_eq!(u.index_of_seq(&u.seq_of_index(i)).unwrap(), i);
        }
        assert_eq!(u.seq_of_index(u.highest_index()), WeightSeq::dominant_of(&u));
    }
}
