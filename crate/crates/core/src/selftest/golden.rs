//! Reference evaluations of the elementary light ladders and their flips,
//! checked entry by entry.

use crate::ladders::elementary_ladder;
use crate::repr::linmap::SparseVec;
use crate::ring::{LaurentPoly, RingElem};
use crate::webs::{flip, Evaluator};
use crate::weights::{wt, Weight, WeightSeq, Word};

fn c(n: i64, e: i64, k: u32) -> RingElem {
    RingElem::new(LaurentPoly::monomial(n, e), k)
}

type Terms = Vec<(RingElem, &'static [(i32, i32)])>;

/// `L_mu(v_prefix ⊗ v_last)` for each listed last weight.
pub struct LadderTable {
    pub mu: Weight,
    pub prefix: &'static [(i32, i32)],
    pub rows: Vec<((i32, i32), Terms)>,
}

/// `flip(L_mu)` applied to the highest weight vector of its source.
pub struct UpsideTable {
    pub mu: Weight,
    pub image: Terms,
}

pub fn ladder_tables() -> Vec<LadderTable> {
    vec![
        LadderTable {
            mu: wt(-1, 1),
            prefix: &[(1, 0)],
            rows: vec![
                ((1, 0), vec![]),
                ((-1, 1), vec![(c(-1, 0, 0), &[(0, 1)])]),
                ((1, -1), vec![(c(-1, 0, 0), &[(2, -1)])]),
                ((-1, 0), vec![(c(-1, 1, 1), &[(0, 0)])]),
            ],
        },
        LadderTable {
            mu: wt(1, -1),
            prefix: &[(0, 1)],
            rows: vec![
                ((1, 0), vec![]),
                ((-1, 1), vec![]),
                ((1, -1), vec![(c(-1, 0, 0), &[(1, 0)])]),
                ((-1, 0), vec![(c(-1, 0, 0), &[(-1, 1)])]),
            ],
        },
        LadderTable {
            mu: wt(-1, 0),
            prefix: &[(1, 0)],
            rows: vec![((1, 0), vec![]), ((-1, 1), vec![]), ((1, -1), vec![]), ((-1, 0), vec![(c(1, 0, 0), &[])])],
        },
        LadderTable {
            mu: wt(2, -1),
            prefix: &[(0, 1)],
            rows: vec![
                ((0, 1), vec![]),
                ((2, -1), vec![(c(1, 0, 0), &[(1, 0), (1, 0)])]),
                ((0, 0), vec![(c(1, 0, 0), &[(1, 0), (-1, 1)]), (c(1, -1, 0), &[(-1, 1), (1, 0)])]),
                ((-2, 1), vec![(c(1, 0, 0), &[(-1, 1), (-1, 1)])]),
                // A coefficient of -1 on the first term would make this column
                // break equivariance (see the ladders integration test).
                ((0, -1), vec![(c(-1, -1, 0), &[(1, 0), (-1, 0)]), (c(1, 0, 0), &[(-1, 1), (1, -1)])]),
            ],
        },
        LadderTable {
            mu: wt(0, 0),
            prefix: &[(1, 0)],
            rows: vec![
                ((0, 1), vec![]),
                ((2, -1), vec![]),
                ((0, 0), vec![(c(-1, -1, 0), &[(1, 0)])]),
                ((-2, 1), vec![(c(-1, 0, 0), &[(-1, 1)])]),
                ((0, -1), vec![(c(-1, 0, 0), &[(1, -1)])]),
            ],
        },
        LadderTable {
            mu: wt(-2, 1),
            prefix: &[(1, 0), (1, 0)],
            rows: vec![
                ((0, 1), vec![]),
                ((2, -1), vec![]),
                ((0, 0), vec![]),
                ((-2, 1), vec![(c(1, 0, 0), &[(0, 1)])]),
                ((0, -1), vec![(c(1, 0, 0), &[(2, -1)])]),
            ],
        },
        LadderTable {
            mu: wt(0, -1),
            prefix: &[(0, 1)],
            rows: vec![
                ((0, 1), vec![]),
                ((2, -1), vec![]),
                ((0, 0), vec![]),
                ((-2, 1), vec![]),
                ((0, -1), vec![(c(1, 0, 0), &[])]),
            ],
        },
    ]
}

pub fn upside_tables() -> Vec<UpsideTable> {
    vec![
        UpsideTable { mu: wt(-1, 1), image: vec![(c(1, -1, 0), &[(1, 0), (-1, 1)]), (c(-1, 0, 0), &[(-1, 1), (1, 0)])] },
        UpsideTable {
            mu: wt(1, -1),
            image: vec![
                (c(-1, -3, 0), &[(0, 1), (1, -1)]),
                (c(1, -1, 0), &[(2, -1), (-1, 1)]),
                (c(-1, 1, 1), &[(0, 0), (1, 0)]),
            ],
        },
        UpsideTable {
            mu: wt(-1, 0),
            image: vec![
                (c(-1, -4, 0), &[(1, 0), (-1, 0)]),
                (c(1, -3, 0), &[(-1, 1), (1, -1)]),
                (c(-1, -1, 0), &[(1, -1), (-1, 1)]),
                (c(1, 0, 0), &[(-1, 0), (1, 0)]),
            ],
        },
        UpsideTable {
            mu: wt(2, -1),
            image: vec![(c(-1, -2, 0), &[(0, 1), (2, -1)]), (c(1, 0, 0), &[(2, -1), (0, 1)])],
        },
        UpsideTable {
            mu: wt(0, 0),
            image: vec![
                (c(-1, -3, 1), &[(1, 0), (0, 0)]),
                (c(1, -2, 0), &[(-1, 1), (2, -1)]),
                (c(-1, 0, 0), &[(1, -1), (0, 1)]),
            ],
        },
        UpsideTable {
            mu: wt(-2, 1),
            image: vec![
                (c(-1, -4, 0), &[(1, 0), (1, 0), (-2, 1)]),
                (c(1, -2, 1), &[(1, 0), (-1, 1), (0, 0)]),
                (c(1, -3, 1), &[(-1, 1), (1, 0), (0, 0)]),
                (c(-1, -2, 0), &[(-1, 1), (-1, 1), (2, -1)]),
                (c(-1, -1, 0), &[(1, 0), (-1, 0), (0, 1)]),
                (c(1, 0, 0), &[(-1, 1), (1, -1), (0, 1)]),
            ],
        },
        UpsideTable {
            mu: wt(0, -1),
            image: vec![
                (c(1, -6, 0), &[(0, 1), (0, -1)]),
                (c(-1, -4, 0), &[(2, -1), (-2, 1)]),
                (c(1, -2, 1), &[(0, 0), (0, 0)]),
                (c(-1, -2, 0), &[(-2, 1), (2, -1)]),
                (c(1, 0, 0), &[(0, -1), (0, 1)]),
            ],
        },
    ]
}

fn seq(v: &[(i32, i32)]) -> WeightSeq {
    WeightSeq(v.iter().map(|&p| p.into()).collect())
}

fn expected(target: &Word, terms: &Terms) -> SparseVec<RingElem> {
    terms.iter().map(|(x, s)| (target.index_of_seq(&seq(s)).expect("golden term fits"), x.clone())).collect()
}

/// Mismatches between the computed and reference tables; empty on success.
pub fn check_golden_tables(ev: &Evaluator<crate::ring::SymbolicA>) -> Vec<String> {
    let mut bad = Vec::new();
    for t in ladder_tables() {
        let el = elementary_ladder(t.mu).unwrap();
        let d = &el.diagram;
        for (last, terms) in &t.rows {
            let mut input = t.prefix.to_vec();
            input.push(*last);
            let got = ev.apply_basis(d, d.source.index_of_seq(&seq(&input)).unwrap());
            let want = expected(&d.target, terms);
            if got != want {
                bad.push(format!("L{} on v{}: got {got:?}, expected {want:?}", t.mu, seq(&input)));
            }
        }
    }
    for t in upside_tables() {
        let el = elementary_ladder(t.mu).unwrap();
        let up = flip(&el.diagram);
        let got = ev.apply_basis(&up, up.source.highest_index());
        let want = expected(&up.target, &t.image);
        if got != want {
            bad.push(format!("flipped L{}: got {got:?}, expected {want:?}", t.mu));
        }
    }
    bad
}
