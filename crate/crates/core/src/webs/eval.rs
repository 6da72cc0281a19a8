use rayon::prelude::*;

use crate::repr::linmap::{add_entry, LinMap, Matrix, SparseVec};
use crate::repr::{cap, cup, imap, pmap};
use crate::ring::{CoeffRing, RingElem, SymbolicA};
use crate::weights::{Letter, Word};

use super::diagram::{Diagram, Generator, Slice, WebExpr};

/// Matrix of a generator over A.
pub fn generator_matrix(g: Generator) -> LinMap<RingElem> {
    match g {
        Generator::Id1 => crate::repr::linmap::identity_map(&SymbolicA, &Word(vec![Letter::One])),
        Generator::Id2 => crate::repr::linmap::identity_map(&SymbolicA, &Word(vec![Letter::Two])),
        Generator::Cup1 => cup(Letter::One),
        Generator::Cup2 => cup(Letter::Two),
        Generator::Cap1 => cap(Letter::One),
        Generator::Cap2 => cap(Letter::Two),
        Generator::IVertex => imap(),
        Generator::PVertex => pmap(),
    }
}

/// Evaluates diagrams by pushing sparse vectors through the slices. The
/// generator tables are specialised once at construction.
pub struct Evaluator<K: CoeffRing> {
    pub ring: K,
    tables: Vec<Matrix<K::Elem>>,
}

fn slot(g: Generator) -> usize {
    Generator::ALL.iter().position(|&x| x == g).unwrap()
}

impl<K: CoeffRing> Evaluator<K> {
    pub fn new(ring: K) -> Self {
        let tables = Generator::ALL
            .iter()
            .map(|&g| crate::repr::linmap::map_matrix(&generator_matrix(g).matrix, |x| ring.embed(x)))
            .collect();
        Evaluator { ring, tables }
    }

    /// Image of the basis vector `index` under one slice.
    fn slice_basis(&self, s: &Slice, src: &Word, index: usize, coeff: &K::Elem, out: &mut SparseVec<K::Elem>) {
        let k = &self.ring;
        let digits = src.digits(index);
        let tgt = s.target();
        // Partial images: target digits so far with their coefficient.
        let mut partial: Vec<(Vec<usize>, K::Elem)> = vec![(Vec::with_capacity(tgt.len()), coeff.clone())];
        let mut pos = 0;
        for &g in &s.0 {
            let gs = g.source();
            if g.is_identity() {
                for (d, _) in partial.iter_mut() {
                    d.push(digits[pos]);
                }
                pos += 1;
                continue;
            }
            let local_src = gs.iter().zip(&digits[pos..pos + gs.len()]).fold(0, |acc, (l, &d)| acc * l.dim() + d);
            pos += gs.len();
            let col = &self.tables[slot(g)].cols[local_src];
            if col.is_empty() {
                return;
            }
            let gt = g.target();
            let mut next = Vec::with_capacity(partial.len() * col.len());
            for (d, c) in &partial {
                for (&li, x) in col {
                    let mut d2 = d.clone();
                    let mut rest = li;
                    let start = d2.len();
                    d2.resize(start + gt.len(), 0);
                    for (j, l) in gt.iter().enumerate().rev() {
                        d2[start + j] = rest % l.dim();
                        rest /= l.dim();
                    }
                    next.push((d2, k.mul(c, x)));
                }
            }
            partial = next;
        }
        for (d, c) in partial {
            add_entry(k, out, tgt.index_of_digits(&d), c);
        }
    }

    pub fn apply_slice(&self, s: &Slice, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
        let src = s.source();
        let mut out = SparseVec::new();
        for (&i, c) in v {
            self.slice_basis(s, &src, i, c, &mut out);
        }
        out
    }

    /// The diagram applied to a vector of V(source).
    pub fn apply(&self, d: &Diagram, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
        let mut cur = v.clone();
        for s in &d.slices {
            if s.is_identity() {
                continue;
            }
            cur = self.apply_slice(s, &cur);
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    /// The diagram applied to one basis vector.
    pub fn apply_basis(&self, d: &Diagram, index: usize) -> SparseVec<K::Elem> {
        self.apply(d, &SparseVec::from([(index, self.ring.one())]))
    }

    /// Full matrix of the diagram, columns computed in parallel.
    pub fn eval(&self, d: &Diagram) -> LinMap<K::Elem> {
        let cols = (0..d.source.dim()).into_par_iter().map(|j| self.apply_basis(d, j)).collect();
        LinMap { source: d.source.clone(), target: d.target.clone(), matrix: Matrix { rows: d.target.dim(), cols } }
    }

    pub fn eval_expr(&self, e: &WebExpr) -> LinMap<K::Elem> {
        let k = &self.ring;
        let mut acc = LinMap::zero(e.source.clone(), e.target.clone());
        for (d, c) in &e.terms {
            let m = self.eval(d);
            acc = crate::repr::linmap::add(k, &acc, &crate::repr::linmap::scale(k, &k.embed(c), &m));
        }
        acc
    }
}

/// Evaluation over A.
pub fn eval(d: &Diagram) -> LinMap<RingElem> {
    Evaluator::new(SymbolicA).eval(d)
}

pub fn eval_expr(e: &WebExpr) -> LinMap<RingElem> {
    Evaluator::new(SymbolicA).eval_expr(e)
}
