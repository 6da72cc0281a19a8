//! Exact row reduction of sparse vectors over a field.

use crate::repr::linmap::{add_entry, axpy, SparseVec};
use crate::ring::CoeffField;

struct Row<E> {
    pivot: usize,
    /// Normalised so the pivot entry is 1.
    vec: SparseVec<E>,
    /// This row as a combination of the inserted vectors.
    combo: SparseVec<E>,
}

/// Incremental echelon form remembering how each row was obtained.
pub struct Echelon<'a, F: CoeffField> {
    field: &'a F,
    rows: Vec<Row<F::Elem>>,
    inserted: usize,
}

impl<'a, F: CoeffField> Echelon<'a, F> {
    pub fn new(field: &'a F) -> Self {
        Echelon { field, rows: Vec::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; returns the remainder and the
    /// combination of inserted vectors subtracted from it.
    fn reduce(&self, mut v: SparseVec<F::Elem>) -> (SparseVec<F::Elem>, SparseVec<F::Elem>) {
        let k = self.field;
        let mut combo = SparseVec::new();
        for r in &self.rows {
            let Some(c) = v.get(&r.pivot).cloned() else { continue };
            let neg = k.neg(&c);
            axpy(k, &mut v, &neg, &r.vec);
            axpy(k, &mut combo, &c, &r.combo);
        }
        (v, combo)
    }

    /// Inserts `v`; returns whether it was independent of the earlier ones.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> bool {
        let k = self.field;
        let id = self.inserted;
        self.inserted += 1;
        let (rem, sub) = self.reduce(v);
        let Some((&pivot, pv)) = rem.iter().next() else {
            return false;
        };
        let inv = k.inv(pv);
        let mut combo = SparseVec::new();
        add_entry(k, &mut combo, id, inv.clone());
        axpy(k, &mut combo, &k.neg(&inv), &sub);
        let mut vec = SparseVec::new();
        axpy(k, &mut vec, &inv, &rem);
        self.rows.push(Row { pivot, vec, combo });
        true
    }

    /// Coordinates of `v` in the inserted vectors, if it lies in their span.
    /// Only meaningful when every inserted vector was independent.
    pub fn coordinates(&self, v: SparseVec<F::Elem>) -> Option<Vec<F::Elem>> {
        let (rem, combo) = self.reduce(v);
        if !rem.is_empty() {
            return None;
        }
        Some((0..self.inserted).map(|i| combo.get(&i).cloned().unwrap_or_else(|| self.field.zero())).collect())
    }
}

/// Rank of a family of vectors.
pub fn rank<F: CoeffField>(field: &F, vectors: impl IntoIterator<Item = SparseVec<F::Elem>>) -> usize {
    let mut e = Echelon::new(field);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{CoeffRing, PrimeField};

    #[test]
    fn rank_and_coordinates_mod_p() {
        let k = PrimeField::new(7, 2).unwrap();
        let v = |xs: &[u64]| -> SparseVec<u64> {
            xs.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, x)).collect()
        };
        let basis = [v(&[1, 2, 0]), v(&[0, 1, 3]), v(&[1, 3, 3])];
        assert_eq!(rank(&k, basis.iter().cloned()), 2);
        let mut e = Echelon::new(&k);
        e.insert(basis[0].clone());
        e.insert(basis[1].clone());
        // 3*b0 + 5*b1 = (3, 6+5, 15) = (3, 4, 1)
        let c = e.coordinates(v(&[3, 4, 1])).unwrap();
        assert_eq!(c, vec![3, 5]);
        assert!(e.coordinates(v(&[0, 0, 1])).is_none());
        assert!(k.is_zero(&0));
    }
}
