use std::collections::BTreeMap;

use crate::ring::CoeffRing;
use crate::weights::{WeightSeq, Word};

/// Sparse vector keyed by basis index.
pub type SparseVec<E> = BTreeMap<usize, E>;

/// `acc += c * v`, dropping entries that cancel.
pub fn axpy<K: CoeffRing>(k: &K, acc: &mut SparseVec<K::Elem>, c: &K::Elem, v: &SparseVec<K::Elem>) {
    for (&i, x) in v {
        let t = k.mul(c, x);
        add_entry(k, acc, i, t);
    }
}

pub fn add_entry<K: CoeffRing>(k: &K, acc: &mut SparseVec<K::Elem>, i: usize, t: K::Elem) {
    if k.is_zero(&t) {
        return;
    }
    match acc.entry(i) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(t);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = k.add(e.get(), &t);
            if k.is_zero(&s) {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

pub fn scale_vec<K: CoeffRing>(k: &K, c: &K::Elem, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
    let mut out = SparseVec::new();
    axpy(k, &mut out, c, v);
    out
}

/// Sparse column-major matrix with plain dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: Vec<SparseVec<E>>,
}

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn zero(rows: usize, ncols: usize) -> Self {
        Matrix { rows, cols: vec![SparseVec::new(); ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&E> {
        self.cols[c].get(&r)
    }

    /// Nonzero entries as `(row, col, value)`, column by column.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &E)> + '_ {
        self.cols.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(&r, x)| (r, c, x)))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }
}

pub fn identity_matrix<K: CoeffRing>(k: &K, n: usize) -> Matrix<K::Elem> {
    Matrix { rows: n, cols: (0..n).map(|i| SparseVec::from([(i, k.one())])).collect() }
}

pub fn apply_matrix<K: CoeffRing>(k: &K, m: &Matrix<K::Elem>, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
    let mut out = SparseVec::new();
    for (&j, c) in v {
        axpy(k, &mut out, c, &m.cols[j]);
    }
    out
}

/// `g ∘ f`.
pub fn compose_matrix<K: CoeffRing>(k: &K, g: &Matrix<K::Elem>, f: &Matrix<K::Elem>) -> Matrix<K::Elem> {
    Matrix { rows: g.rows, cols: f.cols.iter().map(|c| apply_matrix(k, g, c)).collect() }
}

pub fn add_matrix<K: CoeffRing>(k: &K, a: &Matrix<K::Elem>, b: &Matrix<K::Elem>) -> Matrix<K::Elem> {
    let mut out = a.clone();
    for (c, col) in b.cols.iter().enumerate() {
        axpy(k, &mut out.cols[c], &k.one(), col);
    }
    out
}

pub fn scale_matrix<K: CoeffRing>(k: &K, c: &K::Elem, m: &Matrix<K::Elem>) -> Matrix<K::Elem> {
    Matrix { rows: m.rows, cols: m.cols.iter().map(|col| scale_vec(k, c, col)).collect() }
}

/// Kronecker product, `a` on the left (most significant) factor.
pub fn kron_matrix<K: CoeffRing>(k: &K, a: &Matrix<K::Elem>, b: &Matrix<K::Elem>) -> Matrix<K::Elem> {
    let mut cols = Vec::with_capacity(a.ncols() * b.ncols());
    for ca in &a.cols {
        for cb in &b.cols {
            let mut col = SparseVec::new();
            for (&ra, xa) in ca {
                for (&rb, xb) in cb {
                    add_entry(k, &mut col, ra * b.rows + rb, k.mul(xa, xb));
                }
            }
            cols.push(col);
        }
    }
    Matrix { rows: a.rows * b.rows, cols }
}

pub fn map_matrix<E: Clone, F>(m: &Matrix<E>, f: impl Fn(&E) -> F) -> Matrix<F> {
    Matrix { rows: m.rows, cols: m.cols.iter().map(|c| c.iter().map(|(&i, x)| (i, f(x))).collect()).collect() }
}

/// A linear map V(source) -> V(target) in the tensor bases.
#[derive(Clone, Debug, PartialEq)]
pub struct LinMap<E> {
    pub source: Word,
    pub target: Word,
    pub matrix: Matrix<E>,
}

impl<E: Clone + PartialEq> LinMap<E> {
    pub fn zero(source: Word, target: Word) -> Self {
        let m = Matrix::zero(target.dim(), source.dim());
        LinMap { source, target, matrix: m }
    }

    /// Entry at the basis vectors labelled by weight sequences.
    pub fn entry(&self, row: &WeightSeq, col: &WeightSeq) -> Option<&E> {
        let r = self.target.index_of_seq(row).ok()?;
        let c = self.source.index_of_seq(col).ok()?;
        self.matrix.get(r, c)
    }

    /// Image of a single basis vector.
    pub fn column(&self, col: &WeightSeq) -> &SparseVec<E> {
        &self.matrix.cols[self.source.index_of_seq(col).expect("sequence fits source")]
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn map_coeffs<F: Clone + PartialEq>(&self, f: impl Fn(&E) -> F) -> LinMap<F> {
        LinMap { source: self.source.clone(), target: self.target.clone(), matrix: map_matrix(&self.matrix, f) }
    }

    /// Flattened, column-major: index `col * rows + row`.
    pub fn flatten(&self) -> SparseVec<E> {
        let rows = self.matrix.rows;
        self.matrix.entries().map(|(r, c, x)| (c * rows + r, x.clone())).collect()
    }

    /// Nonzero entries as `(row sequence, column sequence, value)`.
    pub fn labelled_entries(&self) -> Vec<(WeightSeq, WeightSeq, E)> {
        self.matrix
            .entries()
            .map(|(r, c, x)| (self.target.seq_of_index(r), self.source.seq_of_index(c), x.clone()))
            .collect()
    }
}

impl<E: Clone + PartialEq> LinMap<E> {
    /// Builds from labelled entries; panics on sequences that do not fit,
    /// which would be a bug in a built-in table.
    pub fn from_entries<K: CoeffRing<Elem = E>>(
        k: &K,
        source: Word,
        target: Word,
        entries: &[(WeightSeq, WeightSeq, E)],
    ) -> Self {
        let mut m = LinMap::zero(source, target);
        for (r, c, x) in entries {
            let ri = m.target.index_of_seq(r).expect("row fits target");
            let ci = m.source.index_of_seq(c).expect("column fits source");
            add_entry(k, &mut m.matrix.cols[ci], ri, x.clone());
        }
        m
    }
}

pub fn identity_map<K: CoeffRing>(k: &K, w: &Word) -> LinMap<K::Elem> {
    LinMap { source: w.clone(), target: w.clone(), matrix: identity_matrix(k, w.dim()) }
}

/// `g ∘ f`; panics if the boundaries do not meet.
pub fn compose<K: CoeffRing>(k: &K, g: &LinMap<K::Elem>, f: &LinMap<K::Elem>) -> LinMap<K::Elem> {
    assert_eq!(f.target, g.source, "composition boundary mismatch");
    LinMap { source: f.source.clone(), target: g.target.clone(), matrix: compose_matrix(k, &g.matrix, &f.matrix) }
}

pub fn tensor<K: CoeffRing>(k: &K, a: &LinMap<K::Elem>, b: &LinMap<K::Elem>) -> LinMap<K::Elem> {
    LinMap {
        source: a.source.concat(&b.source),
        target: a.target.concat(&b.target),
        matrix: kron_matrix(k, &a.matrix, &b.matrix),
    }
}

pub fn add<K: CoeffRing>(k: &K, a: &LinMap<K::Elem>, b: &LinMap<K::Elem>) -> LinMap<K::Elem> {
    assert_eq!((&a.source, &a.target), (&b.source, &b.target), "sum of maps with different boundaries");
    LinMap { source: a.source.clone(), target: a.target.clone(), matrix: add_matrix(k, &a.matrix, &b.matrix) }
}

pub fn scale<K: CoeffRing>(k: &K, c: &K::Elem, a: &LinMap<K::Elem>) -> LinMap<K::Elem> {
    LinMap { source: a.source.clone(), target: a.target.clone(), matrix: scale_matrix(k, c, &a.matrix) }
}

/// `a - b`.
pub fn sub<K: CoeffRing>(k: &K, a: &LinMap<K::Elem>, b: &LinMap<K::Elem>) -> LinMap<K::Elem> {
    add(k, a, &scale(k, &k.neg(&k.one()), b))
}

/// First entry where two maps differ, as labelled witnesses.
pub fn first_difference<K: CoeffRing>(
    k: &K,
    a: &LinMap<K::Elem>,
    b: &LinMap<K::Elem>,
) -> Option<(WeightSeq, WeightSeq, String, String)> {
    let d = sub(k, a, b);
    let (r, c, _) = d.matrix.entries().next()?;
    let show = |m: &LinMap<K::Elem>| m.matrix.get(r, c).map_or("0".to_string(), |x| k.render(x));
    Some((a.target.seq_of_index(r), a.source.seq_of_index(c), show(a), show(b)))
}
