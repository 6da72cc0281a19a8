use crate::ring::{LaurentPoly, RingElem, SymbolicA};
use crate::weights::{Letter, Weight, WeightSeq, Word};

use super::linmap::{apply_matrix, compose_matrix, kron_matrix, identity_matrix, LinMap, Matrix, SparseVec};
use super::module::{Factor, Gen, TensorModule};

/// `n q^e / [2]^k`.
pub(crate) fn c(n: i64, e: i64, k: u32) -> RingElem {
    RingElem::new(LaurentPoly::monomial(n, e), k)
}

fn seq(v: &[(i32, i32)]) -> WeightSeq {
    WeightSeq(v.iter().map(|&p| Weight::from(p)).collect())
}

type Row<'a> = (&'a [(i32, i32)], &'a [(i32, i32)], RingElem);

fn build(source: &str, target: &str, rows: Vec<Row>) -> LinMap<RingElem> {
    let entries: Vec<_> = rows.into_iter().map(|(r, col, x)| (seq(r), seq(col), x)).collect();
    LinMap::from_entries(&SymbolicA, source.parse().unwrap(), target.parse().unwrap(), &entries)
}

fn word(l: Letter) -> &'static str {
    match l {
        Letter::One => "1",
        Letter::Two => "2",
    }
}

/// The cup A -> V(l) ⊗ V(l).
pub fn cup(l: Letter) -> LinMap<RingElem> {
    let rows: Vec<Row> = match l {
        Letter::One => vec![
            (&[(1, 0), (-1, 0)], &[], c(-1, -4, 0)),
            (&[(-1, 1), (1, -1)], &[], c(1, -3, 0)),
            (&[(1, -1), (-1, 1)], &[], c(-1, -1, 0)),
            (&[(-1, 0), (1, 0)], &[], c(1, 0, 0)),
        ],
        Letter::Two => vec![
            (&[(0, 1), (0, -1)], &[], c(1, -6, 0)),
            (&[(2, -1), (-2, 1)], &[], c(-1, -4, 0)),
            (&[(0, 0), (0, 0)], &[], c(1, -2, 1)),
            (&[(-2, 1), (2, -1)], &[], c(-1, -2, 0)),
            (&[(0, -1), (0, 1)], &[], c(1, 0, 0)),
        ],
    };
    let w = word(l);
    build("", &format!("{w}{w}"), rows)
}

/// The cap V(l) ⊗ V(l) -> A.
pub fn cap(l: Letter) -> LinMap<RingElem> {
    let rows: Vec<Row> = match l {
        Letter::One => vec![
            (&[], &[(-1, 0), (1, 0)], c(-1, 4, 0)),
            (&[], &[(1, -1), (-1, 1)], c(1, 3, 0)),
            (&[], &[(-1, 1), (1, -1)], c(-1, 1, 0)),
            (&[], &[(1, 0), (-1, 0)], c(1, 0, 0)),
        ],
        Letter::Two => vec![
            (&[], &[(0, -1), (0, 1)], c(1, 6, 0)),
            (&[], &[(-2, 1), (2, -1)], c(-1, 4, 0)),
            (&[], &[(0, 0), (0, 0)], &c(1, 2, 0) * &RingElem::qint(2)),
            (&[], &[(2, -1), (-2, 1)], c(-1, 2, 0)),
            (&[], &[(0, 1), (0, -1)], c(1, 0, 0)),
        ],
    };
    let w = word(l);
    build(&format!("{w}{w}"), "", rows)
}

/// The trivalent vertex V(ϖ2) -> V(ϖ1) ⊗ V(ϖ1).
pub fn imap() -> LinMap<RingElem> {
    let rows: Vec<Row> = vec![
        (&[(1, 0), (-1, 1)], &[(0, 1)], c(1, -1, 0)),
        (&[(-1, 1), (1, 0)], &[(0, 1)], c(-1, 0, 0)),
        (&[(1, 0), (1, -1)], &[(2, -1)], c(1, -1, 0)),
        (&[(1, -1), (1, 0)], &[(2, -1)], c(-1, 0, 0)),
        (&[(1, 0), (-1, 0)], &[(0, 0)], c(1, -1, 0)),
        (&[(-1, 1), (1, -1)], &[(0, 0)], c(1, -2, 0)),
        (&[(1, -1), (-1, 1)], &[(0, 0)], c(-1, 0, 0)),
        (&[(-1, 0), (1, 0)], &[(0, 0)], c(-1, -1, 0)),
        (&[(-1, 1), (-1, 0)], &[(-2, 1)], c(1, -1, 0)),
        (&[(-1, 0), (-1, 1)], &[(-2, 1)], c(-1, 0, 0)),
        (&[(1, -1), (-1, 0)], &[(0, -1)], c(1, -1, 0)),
        (&[(-1, 0), (1, -1)], &[(0, -1)], c(-1, 0, 0)),
    ];
    build("2", "11", rows)
}

/// The trivalent vertex V(ϖ1) ⊗ V(ϖ1) -> V(ϖ2).
pub fn pmap() -> LinMap<RingElem> {
    let rows: Vec<Row> = vec![
        (&[(0, 1)], &[(1, 0), (-1, 1)], c(-1, 0, 0)),
        (&[(2, -1)], &[(1, 0), (1, -1)], c(-1, 0, 0)),
        (&[(0, 0)], &[(1, 0), (-1, 0)], c(-1, 1, 1)),
        (&[(0, 1)], &[(-1, 1), (1, 0)], c(1, 1, 0)),
        (&[(0, 0)], &[(-1, 1), (1, -1)], c(-1, 0, 1)),
        (&[(-2, 1)], &[(-1, 1), (-1, 0)], c(-1, 0, 0)),
        (&[(2, -1)], &[(1, -1), (1, 0)], c(1, 1, 0)),
        (&[(0, 0)], &[(1, -1), (-1, 1)], c(1, 2, 1)),
        (&[(0, -1)], &[(1, -1), (-1, 0)], c(-1, 0, 0)),
        (&[(0, 0)], &[(-1, 0), (1, 0)], c(1, 1, 1)),
        (&[(-2, 1)], &[(-1, 0), (-1, 1)], c(1, 1, 0)),
        (&[(0, -1)], &[(-1, 0), (1, -1)], c(1, 1, 0)),
    ];
    build("11", "2", rows)
}

/// A failed intertwining equation `f(g·v) = g·f(v)`.
#[derive(Clone, Debug)]
pub struct IntertwinerFailure {
    pub generator: Gen,
    pub source_index: usize,
    pub lhs: SparseVec<RingElem>,
    pub rhs: SparseVec<RingElem>,
}

impl std::fmt::Display for IntertwinerFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} fails to commute on basis vector {}: {:?} vs {:?}", self.generator, self.source_index, self.lhs, self.rhs)
    }
}

/// Checks `m ∘ g = g ∘ m` for all eight generators on every basis vector.
pub fn check_intertwiner_between(
    m: &Matrix<RingElem>,
    src: &TensorModule,
    tgt: &TensorModule,
) -> Result<(), IntertwinerFailure> {
    let k = SymbolicA;
    assert_eq!((m.ncols(), m.rows), (src.dim(), tgt.dim()), "matrix does not fit the modules");
    for g in Gen::ALL {
        for j in 0..src.dim() {
            let lhs = apply_matrix(&k, m, &src.act(g, j));
            let mut rhs = SparseVec::new();
            for (&i, x) in &m.cols[j] {
                super::linmap::axpy(&k, &mut rhs, x, &tgt.act(g, i));
            }
            if lhs != rhs {
                return Err(IntertwinerFailure { generator: g, source_index: j, lhs, rhs });
            }
        }
    }
    Ok(())
}

pub fn check_intertwiner(f: &LinMap<RingElem>) -> Result<(), IntertwinerFailure> {
    check_intertwiner_between(&f.matrix, &TensorModule::of_word(&f.source), &TensorModule::of_word(&f.target))
}

/// Whether every nonzero entry joins basis vectors of equal weight.
pub fn preserves_weight(f: &LinMap<RingElem>) -> bool {
    f.matrix.entries().all(|(r, c, _)| f.target.seq_of_index(r).sum() == f.source.seq_of_index(c).sum())
}

/// The isomorphism φ: V(l) -> V(l)*, basis vector to scaled dual vector.
pub fn phi(l: Letter) -> Matrix<RingElem> {
    use crate::weights::wt;
    let table: Vec<(Weight, RingElem, Weight)> = match l {
        Letter::One => vec![
            (wt(-1, 0), c(-1, 4, 0), wt(1, 0)),
            (wt(1, -1), c(1, 3, 0), wt(-1, 1)),
            (wt(-1, 1), c(-1, 1, 0), wt(1, -1)),
            (wt(1, 0), c(1, 0, 0), wt(-1, 0)),
        ],
        Letter::Two => vec![
            (wt(0, -1), c(1, 6, 0), wt(0, 1)),
            (wt(-2, 1), c(-1, 4, 0), wt(2, -1)),
            (wt(0, 0), &c(1, 2, 0) * &RingElem::qint(2), wt(0, 0)),
            (wt(2, -1), c(-1, 2, 0), wt(-2, 1)),
            (wt(0, 1), c(1, 0, 0), wt(0, -1)),
        ],
    };
    let mut m = Matrix::zero(l.dim(), l.dim());
    for (from, x, to) in table {
        m.cols[l.index_of(from).unwrap()].insert(l.index_of(to).unwrap(), x);
    }
    m
}

/// Inverse of a monomial matrix (one unit per column).
pub fn invert_monomial(m: &Matrix<RingElem>) -> Matrix<RingElem> {
    let mut inv = Matrix::zero(m.ncols(), m.rows);
    for (r, col, x) in m.entries() {
        inv.cols[r].insert(col, x.inverse().expect("unit entry"));
    }
    inv
}

/// Evaluation V* ⊗ V -> A, f ⊗ v -> f(v).
pub fn evaluation(l: Letter) -> Matrix<RingElem> {
    let n = l.dim();
    let mut m = Matrix::zero(1, n * n);
    for i in 0..n {
        m.cols[i * n + i].insert(0, RingElem::one());
    }
    m
}

/// Coevaluation A -> V ⊗ V*, 1 -> Σ e_i ⊗ e_i*.
pub fn coevaluation(l: Letter) -> Matrix<RingElem> {
    let n = l.dim();
    let mut m = Matrix::zero(n * n, 1);
    for i in 0..n {
        m.cols[0].insert(i * n + i, RingElem::one());
    }
    m
}

/// `c' ∘ (φ ⊗ id)`.
pub fn cap_from_duality(l: Letter) -> LinMap<RingElem> {
    let k = SymbolicA;
    let m = compose_matrix(&k, &evaluation(l), &kron_matrix(&k, &phi(l), &identity_matrix(&k, l.dim())));
    let w: Word = format!("{0}{0}", word(l)).parse().unwrap();
    LinMap { source: w, target: Word::empty(), matrix: m }
}

/// `(id ⊗ φ^-1) ∘ u`.
pub fn cup_from_duality(l: Letter) -> LinMap<RingElem> {
    let k = SymbolicA;
    let m = compose_matrix(&k, &kron_matrix(&k, &identity_matrix(&k, l.dim()), &invert_monomial(&phi(l))), &coevaluation(l));
    let w: Word = format!("{0}{0}", word(l)).parse().unwrap();
    LinMap { source: Word::empty(), target: w, matrix: m }
}

pub fn check_phi_intertwiner(l: Letter) -> Result<(), IntertwinerFailure> {
    check_intertwiner_between(&phi(l), &TensorModule::new(vec![Factor::Fund(l)]), &TensorModule::new(vec![Factor::Dual(l)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::linmap::compose;

    #[test]
    fn generators_are_intertwiners() {
        for l in [Letter::One, Letter::Two] {
            check_intertwiner(&cup(l)).unwrap();
            check_intertwiner(&cap(l)).unwrap();
            check_phi_intertwiner(l).unwrap();
        }
        check_intertwiner(&imap()).unwrap();
        check_intertwiner(&pmap()).unwrap();
    }

    #[test]
    fn duality_pairings_are_intertwiners() {
        for l in [Letter::One, Letter::Two] {
            let ev = TensorModule::new(vec![Factor::Dual(l), Factor::Fund(l)]);
            let co = TensorModule::new(vec![Factor::Fund(l), Factor::Dual(l)]);
            let triv = TensorModule::new(vec![]);
            check_intertwiner_between(&evaluation(l), &ev, &triv).unwrap();
            check_intertwiner_between(&coevaluation(l), &triv, &co).unwrap();
        }
    }

    #[test]
    fn p_after_i_is_minus_two() {
        let k = SymbolicA;
        let m = compose(&k, &pmap(), &imap());
        for j in 0..5 {
            assert_eq!(m.matrix.cols[j], SparseVec::from([(j, -RingElem::qint(2))]));
        }
    }

    #[test]
    fn tables_preserve_weight() {
        for f in [cup(Letter::One), cup(Letter::Two), cap(Letter::One), cap(Letter::Two), imap(), pmap()] {
            assert!(preserves_weight(&f));
        }
    }
}
