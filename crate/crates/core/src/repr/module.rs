use std::fmt;

use crate::ring::{RingElem, SymbolicA};
use crate::weights::{Letter, Weight, Word};

use super::linmap::{add_entry, Matrix, SparseVec};

/// Chevalley generators of quantum sp4 and the inverse Cartan elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Gen {
    Es,
    Fs,
    Et,
    Ft,
    Ks,
    KsInv,
    Kt,
    KtInv,
}

impl Gen {
    pub const ALL: [Gen; 8] = [Gen::Es, Gen::Fs, Gen::Et, Gen::Ft, Gen::Ks, Gen::KsInv, Gen::Kt, Gen::KtInv];
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Gen::Es => "E_s",
            Gen::Fs => "F_s",
            Gen::Et => "E_t",
            Gen::Ft => "F_t",
            Gen::Ks => "K_s",
            Gen::KsInv => "K_s^-1",
            Gen::Kt => "K_t",
            Gen::KtInv => "K_t^-1",
        };
        f.write_str(s)
    }
}

/// Exponent of q by which a Cartan element acts on weight `w`.
fn k_exponent(g: Gen, w: Weight) -> i64 {
    match g {
        Gen::Ks => w.a as i64,
        Gen::KsInv => -(w.a as i64),
        Gen::Kt => 2 * w.b as i64,
        Gen::KtInv => -2 * w.b as i64,
        _ => unreachable!("not a Cartan element"),
    }
}

/// `(from, to, coefficient is [2])` for E and F on the fundamental chains;
/// every other coefficient is 1.
type Edge = (Weight, Weight, bool);

fn raising_edges(letter: Letter, g: Gen) -> Vec<Edge> {
    use crate::weights::wt;
    match (letter, g) {
        (Letter::One, Gen::Es) => vec![(wt(-1, 0), wt(1, -1), false), (wt(-1, 1), wt(1, 0), false)],
        (Letter::One, Gen::Et) => vec![(wt(1, -1), wt(-1, 1), false)],
        (Letter::One, Gen::Fs) => vec![(wt(1, -1), wt(-1, 0), false), (wt(1, 0), wt(-1, 1), false)],
        (Letter::One, Gen::Ft) => vec![(wt(-1, 1), wt(1, -1), false)],
        (Letter::Two, Gen::Et) => vec![(wt(0, -1), wt(-2, 1), false), (wt(2, -1), wt(0, 1), false)],
        (Letter::Two, Gen::Es) => vec![(wt(-2, 1), wt(0, 0), false), (wt(0, 0), wt(2, -1), true)],
        (Letter::Two, Gen::Ft) => vec![(wt(-2, 1), wt(0, -1), false), (wt(0, 1), wt(2, -1), false)],
        (Letter::Two, Gen::Fs) => vec![(wt(0, 0), wt(-2, 1), true), (wt(2, -1), wt(0, 0), false)],
        _ => unreachable!("not a raising or lowering generator"),
    }
}

/// Matrix of a generator on the fundamental module V(letter).
pub fn fundamental_action(letter: Letter, g: Gen) -> Matrix<RingElem> {
    let n = letter.dim();
    let mut m = Matrix::zero(n, n);
    match g {
        Gen::Ks | Gen::KsInv | Gen::Kt | Gen::KtInv => {
            for (i, &w) in letter.weights().iter().enumerate() {
                m.cols[i].insert(i, RingElem::qpow(1, k_exponent(g, w)));
            }
        }
        _ => {
            for (from, to, two) in raising_edges(letter, g) {
                let c = if two { RingElem::qint(2) } else { RingElem::one() };
                let i = letter.index_of(from).unwrap();
                let j = letter.index_of(to).unwrap();
                m.cols[i].insert(j, c);
            }
        }
    }
    m
}

/// A tensor factor: a fundamental module or its dual.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Factor {
    Fund(Letter),
    Dual(Letter),
}

impl Factor {
    pub fn dim(self) -> usize {
        match self {
            Factor::Fund(l) | Factor::Dual(l) => l.dim(),
        }
    }

    /// Weight of the i-th basis vector (the dual basis vector v*_μ has
    /// weight -μ).
    pub fn weight(self, i: usize) -> Weight {
        match self {
            Factor::Fund(l) => l.weights()[i],
            Factor::Dual(l) => -l.weights()[i],
        }
    }

    /// Matrix of `g` on this factor. On the dual, x acts by the transpose
    /// of the antipode S(x): S(E) = -K^-1 E, S(F) = -F K, S(K) = K^-1.
    pub fn action(self, g: Gen) -> Matrix<RingElem> {
        let l = match self {
            Factor::Fund(l) => return fundamental_action(l, g),
            Factor::Dual(l) => l,
        };
        let k = SymbolicA;
        let m = |x| fundamental_action(l, x);
        let minus = RingElem::int(-1);
        let s = match g {
            Gen::Es => scale_m(&minus, &super::linmap::compose_matrix(&k, &m(Gen::KsInv), &m(Gen::Es))),
            Gen::Et => scale_m(&minus, &super::linmap::compose_matrix(&k, &m(Gen::KtInv), &m(Gen::Et))),
            Gen::Fs => scale_m(&minus, &super::linmap::compose_matrix(&k, &m(Gen::Fs), &m(Gen::Ks))),
            Gen::Ft => scale_m(&minus, &super::linmap::compose_matrix(&k, &m(Gen::Ft), &m(Gen::Kt))),
            Gen::Ks => m(Gen::KsInv),
            Gen::KsInv => m(Gen::Ks),
            Gen::Kt => m(Gen::KtInv),
            Gen::KtInv => m(Gen::Kt),
        };
        transpose(&s)
    }
}

fn scale_m(c: &RingElem, m: &Matrix<RingElem>) -> Matrix<RingElem> {
    super::linmap::scale_matrix(&SymbolicA, c, m)
}

fn transpose(m: &Matrix<RingElem>) -> Matrix<RingElem> {
    let mut t = Matrix::zero(m.ncols(), m.rows);
    for (r, c, x) in m.entries() {
        t.cols[r].insert(c, x.clone());
    }
    t
}

/// Tensor product of factors with the action through the coproduct
/// Δ(E) = E ⊗ 1 + K ⊗ E, Δ(F) = F ⊗ K^-1 + 1 ⊗ F, Δ(K) = K ⊗ K.
#[derive(Clone, Debug)]
pub struct TensorModule {
    pub factors: Vec<Factor>,
    actions: Vec<[Matrix<RingElem>; 8]>,
}

fn gen_slot(g: Gen) -> usize {
    Gen::ALL.iter().position(|&x| x == g).unwrap()
}

impl TensorModule {
    pub fn new(factors: Vec<Factor>) -> Self {
        let actions = factors.iter().map(|f| Gen::ALL.map(|g| f.action(g))).collect();
        TensorModule { factors, actions }
    }

    pub fn of_word(w: &Word) -> Self {
        Self::new(w.letters().iter().map(|&l| Factor::Fund(l)).collect())
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).product()
    }

    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut d = vec![0; self.factors.len()];
        for (i, f) in self.factors.iter().enumerate().rev() {
            d[i] = index % f.dim();
            index /= f.dim();
        }
        d
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        self.factors.iter().zip(digits).fold(0, |acc, (f, &d)| acc * f.dim() + d)
    }

    pub fn weight(&self, index: usize) -> Weight {
        self.digits(index)
            .iter()
            .zip(&self.factors)
            .fold(crate::weights::ZERO, |acc, (&d, f)| acc + f.weight(d))
    }

    fn local(&self, pos: usize, g: Gen) -> &Matrix<RingElem> {
        &self.actions[pos][gen_slot(g)]
    }

    /// `g` applied to a basis vector.
    pub fn act(&self, g: Gen, index: usize) -> SparseVec<RingElem> {
        let k = SymbolicA;
        let digits = self.digits(index);
        let n = self.factors.len();
        let mut out = SparseVec::new();
        let cartan = |g: Gen| match g {
            Gen::Es => Gen::Ks,
            Gen::Et => Gen::Kt,
            Gen::Fs => Gen::KsInv,
            Gen::Ft => Gen::KtInv,
            _ => g,
        };
        let diag = |pos: usize, g: Gen| -> RingElem {
            self.local(pos, g).get(digits[pos], digits[pos]).cloned().unwrap_or_default()
        };
        match g {
            Gen::Ks | Gen::KsInv | Gen::Kt | Gen::KtInv => {
                let c = (0..n).fold(RingElem::one(), |acc, p| &acc * &diag(p, g));
                out.insert(index, c);
            }
            Gen::Es | Gen::Et => {
                for i in 0..n {
                    let pre = (0..i).fold(RingElem::one(), |acc, p| &acc * &diag(p, cartan(g)));
                    for (&j, c) in &self.local(i, g).cols[digits[i]] {
                        let mut d = digits.clone();
                        d[i] = j;
                        add_entry(&k, &mut out, self.index(&d), &pre * c);
                    }
                }
            }
            Gen::Fs | Gen::Ft => {
                for i in 0..n {
                    let post = (i + 1..n).fold(RingElem::one(), |acc, p| &acc * &diag(p, cartan(g)));
                    for (&j, c) in &self.local(i, g).cols[digits[i]] {
                        let mut d = digits.clone();
                        d[i] = j;
                        add_entry(&k, &mut out, self.index(&d), c * &post);
                    }
                }
            }
        }
        out
    }
}
