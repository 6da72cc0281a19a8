use c2webs::ring::SymbolicA;
use c2webs::selftest::golden::check_golden_tables;
use c2webs::webs::Evaluator;

#[test]
fn elementary_ladders_match_reference_tables() {
    let bad = check_golden_tables(&Evaluator::new(SymbolicA));
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn two_to_one_ladder_column_needs_q_inverse() {
    use c2webs::ladders::elementary_ladder;
    use c2webs::repr::check_intertwiner;
    use c2webs::ring::{LaurentPoly, RingElem};
    use c2webs::weights::{wt, WeightSeq};

    let d = elementary_ladder(wt(2, -1)).unwrap().diagram;
    let mut f = c2webs::webs::eval(&d);
    assert!(check_intertwiner(&f).is_ok());
    let col = f.source.index_of_seq(&WeightSeq(vec![wt(0, 1), wt(0, -1)])).unwrap();
    let row = f.target.index_of_seq(&WeightSeq(vec![wt(1, 0), wt(-1, 0)])).unwrap();
    assert_eq!(f.matrix.cols[col][&row], RingElem::new(LaurentPoly::monomial(-1, -1), 0));
    f.matrix.cols[col].insert(row, -RingElem::one());
    assert!(check_intertwiner(&f).is_err());
}

use c2webs::ladders::{all_elementary_ladders, light_ladder, neutral_12_21, neutral_21_12, neutral_diagram, LadderChoice};
use c2webs::ring::{CoeffRing, RingElem};
use c2webs::webs::{compose, eval_expr, flip, Diagram, WebExpr};
use c2webs::weights::{letter_order, wt, Weight, WeightSeq, Word};
use std::cmp::Ordering;

fn word(s: &str) -> Word {
    s.parse().unwrap()
}

fn seq(v: &[(i32, i32)]) -> WeightSeq {
    WeightSeq(v.iter().map(|&(a, b)| wt(a, b)).collect())
}

fn ladder(mu: Weight) -> Diagram {
    c2webs::ladders::elementary_ladder(mu).unwrap().diagram
}

#[test]
fn elementary_ladders_kill_higher_weights_and_hit_the_top() {
    let ev = Evaluator::new(SymbolicA);
    for el in all_elementary_ladders() {
        let d = &el.diagram;
        let n = d.source.len();
        let mut top = WeightSeq::dominant_of(&d.source);
        let target_top = d.target.highest_index();
        for &nu in el.letter.weights() {
            top.0[n - 1] = nu;
            let v = ev.apply_basis(d, d.source.index_of_seq(&top).unwrap());
            match letter_order(el.letter, nu, el.mu).unwrap() {
                Ordering::Greater => assert!(v.is_empty(), "L{} on {nu}", el.mu),
                Ordering::Equal => {
                    assert_eq!(v.len(), 1, "L{} on {nu}", el.mu);
                    assert!(v[&target_top].is_unit(), "L{} on {nu}", el.mu);
                }
                Ordering::Less => {}
            }
        }
    }
}

#[test]
fn neutrals_send_top_to_unit_times_top_and_nothing_else_there() {
    let ev = Evaluator::new(SymbolicA);
    for w in Word::all_up_to(4) {
        let mut perms = Word::all_of_length(w.len());
        perms.retain(|u| u.weight() == w.weight());
        for u in perms {
            let n = neutral_diagram(&w, &u).unwrap();
            let top = u.highest_index();
            for i in 0..w.dim() {
                let v = ev.apply_basis(&n, i);
                let c = v.get(&top);
                if i == w.highest_index() {
                    assert!(c.is_some_and(|c| c.is_unit()), "{w} -> {u}");
                } else {
                    assert!(c.is_none(), "{w} -> {u}: basis vector {} reaches the top", w.seq_of_index(i));
                }
            }
        }
    }
}

#[test]
fn basic_neutral_combinations_are_mutually_inverse() {
    let q = RingElem::qpow(1, 1);
    let qi = RingElem::qpow(1, -1);
    let i12 = compose(&flip(&ladder(wt(1, -1))), &ladder(wt(0, 0))).unwrap();
    let i21 = compose(&flip(&ladder(wt(0, 0))), &ladder(wt(1, -1))).unwrap();
    let mut b12 = WebExpr::term(q.clone(), neutral_12_21());
    b12.add_term(qi.clone(), i12).unwrap();
    let mut b21 = WebExpr::term(qi, neutral_21_12());
    b21.add_term(q, i21).unwrap();
    let id12 = eval_expr(&WebExpr::single(Diagram::identity(&word("12"))));
    let id21 = eval_expr(&WebExpr::single(Diagram::identity(&word("21"))));
    assert_eq!(eval_expr(&b21.after(&b12).unwrap()), id12);
    assert_eq!(eval_expr(&b12.after(&b21).unwrap()), id21);
}

#[test]
fn light_ladder_example_on_21() {
    let w = word("21");
    let d = light_ladder(&w, &seq(&[(0, 1), (1, -1)])).unwrap();
    assert_eq!(d.target, word("1"));
    let v = Evaluator::new(SymbolicA).apply_basis(&d, w.index_of_seq(&seq(&[(0, 1), (1, -1)])).unwrap());
    let top = word("1").index_of_seq(&seq(&[(1, 0)])).unwrap();
    assert_eq!(v, [(top, RingElem::int(-1))].into_iter().collect());
}

#[test]
fn triangularity_example_on_11() {
    let ev = Evaluator::new(SymbolicA);
    let t = c2webs::ladders::triangularity_check(&ev, &LadderChoice::new(), &word("11"), wt(0, 1)).unwrap();
    assert!(t.report.verdict);
    assert_eq!(t.matrix, vec![vec![RingElem::int(-1)]]);
    assert!(SymbolicA.is_unit(&t.matrix[0][0]));
}

#[test]
fn cellularity_over_the_fraction_field_for_short_words() {
    use c2webs::ladders::{cellularity_from_word, LadderEvals};
    use c2webs::ring::FractionField;
    let evals = LadderEvals::through_a(FractionField);
    let choice = LadderChoice::new();
    let words = Word::all_up_to(2);
    for w in &words {
        let r = cellularity_from_word(&evals, &choice, w, &words, 5, 2).unwrap();
        assert!(r.verdict, "{:?}", r.witnesses);
    }
}
