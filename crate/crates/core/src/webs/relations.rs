use serde::Serialize;

use crate::repr::linmap::first_difference;
use crate::ring::{CoeffRing, RingElem};
use crate::weights::Word;

use super::diagram::{compose_all, flip, pad, parse_text, Diagram, WebExpr};
use super::eval::Evaluator;

fn d(s: &str) -> Diagram {
    parse_text(s).expect("built-in diagram")
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

/// Trivalent vertex "12" -> "1".
pub fn trivalent_12_1() -> Diagram {
    d("Id1 IVertex | Cap1 Id1")
}

/// Trivalent vertex "21" -> "1".
pub fn trivalent_21_1() -> Diagram {
    d("IVertex Id1 | Id1 Cap1")
}

/// Trivalent vertex "1" -> "12".
pub fn trivalent_1_12() -> Diagram {
    flip(&trivalent_12_1())
}

/// Trivalent vertex "1" -> "21".
pub fn trivalent_1_21() -> Diagram {
    flip(&trivalent_21_1())
}

/// The four trivalent vertices obtained by bending strands.
pub fn derived_trivalents() -> Vec<(&'static str, Diagram)> {
    vec![
        ("12->1", trivalent_12_1()),
        ("21->1", trivalent_21_1()),
        ("1->12", trivalent_1_12()),
        ("1->21", trivalent_1_21()),
    ]
}

/// Tetravalent vertex `i∘p - (1/[2]) cup1∘cap1` on "11".
pub fn tetravalent() -> WebExpr {
    let mut e = WebExpr::single(d("PVertex | IVertex"));
    e.add_term(-RingElem::inv_two(), d("Cap1 | Cup1")).unwrap();
    e
}

/// Quarter turn of an endomorphism of "11":
/// (cap1 ⊗ id ⊗ id) ∘ (id ⊗ X ⊗ id) ∘ (id ⊗ id ⊗ cup1).
pub fn rotate(x: &Diagram) -> Diagram {
    let one = w("1");
    compose_all(&[d("Id1 Id1 Cup1"), pad(&one, x, &one), d("Cap1 Id1 Id1")]).expect("rotation of an endomorphism of 11")
}

pub fn rotate_expr(e: &WebExpr) -> WebExpr {
    let mut out = WebExpr::zero(e.source.clone(), e.target.clone());
    for (x, c) in &e.terms {
        out.add_term(c.clone(), rotate(x)).unwrap();
    }
    out
}

/// A named identity between two web expressions.
pub struct Relation {
    pub name: &'static str,
    pub lhs: WebExpr,
    pub rhs: WebExpr,
}

fn single(s: &str) -> WebExpr {
    WebExpr::single(d(s))
}

fn scalar(c: RingElem, source: &str) -> WebExpr {
    WebExpr::term(c, Diagram::identity(&w(source)))
}

fn combo(terms: &[(RingElem, &str)]) -> WebExpr {
    let first = d(terms[0].1);
    let mut e = WebExpr::zero(first.source.clone(), first.target.clone());
    for (c, s) in terms {
        e.add_term(c.clone(), d(s)).unwrap();
    }
    e
}

/// Loop value of the color-1 circle, `-[6][2]/[3]`.
pub fn circle_one_value() -> RingElem {
    -(RingElem::qint(6) * RingElem::qint(2)).divide_exact(&RingElem::qint(3)).unwrap()
}

/// Loop value of the color-2 circle, `[6][5]/([3][2])`.
pub fn circle_two_value() -> RingElem {
    (RingElem::qint(6) * RingElem::qint(5)).divide_exact(&(RingElem::qint(3) * RingElem::qint(2))).unwrap()
}

/// The defining relations plus the isotopy of the trivalent vertex.
pub fn relations() -> Vec<Relation> {
    let two = RingElem::qint(2);
    let inv2 = RingElem::inv_two();
    let one = RingElem::one();
    let m1 = RingElem::int(-1);
    let bent_a = "Cup1 Id1 | Id1 PVertex | Id1 IVertex";
    let bent_b = "Id1 Cup1 | PVertex Id1 | IVertex Id1";
    vec![
        Relation { name: "circle, color 1", lhs: single("Cup1 | Cap1"), rhs: scalar(circle_one_value(), "") },
        Relation { name: "circle, color 2", lhs: single("Cup2 | Cap2"), rhs: scalar(circle_two_value(), "") },
        Relation { name: "lollipop", lhs: single("IVertex | Cap1"), rhs: WebExpr::zero(w("2"), w("")) },
        Relation { name: "bigon", lhs: single("IVertex | PVertex"), rhs: scalar(-&two, "2") },
        Relation {
            name: "trigon",
            lhs: single("IVertex | Id1 Cup1 Id1 | PVertex PVertex"),
            rhs: WebExpr::zero(w("2"), w("22")),
        },
        Relation {
            name: "I=H, bent",
            lhs: combo(&[(two.clone(), bent_a), (-&two, bent_b)]),
            rhs: combo(&[(one.clone(), "Id1 Cup1"), (m1.clone(), "Cup1 Id1")]),
        },
        Relation {
            name: "I=H",
            lhs: single("Cup1 Id1 Id1 | Id1 PVertex Id1 | Id1 IVertex Id1 | Id1 Id1 Cap1"),
            rhs: combo(&[(one.clone(), "PVertex | IVertex"), (-&inv2, "Cap1 | Cup1")])
                .plus(&scalar(inv2.clone(), "11"))
                .unwrap(),
        },
        Relation { name: "zig-zag 1, left", lhs: single("Id1 Cup1 | Cap1 Id1"), rhs: scalar(one.clone(), "1") },
        Relation { name: "zig-zag 1, right", lhs: single("Cup1 Id1 | Id1 Cap1"), rhs: scalar(one.clone(), "1") },
        Relation { name: "zig-zag 2, left", lhs: single("Id2 Cup2 | Cap2 Id2"), rhs: scalar(one.clone(), "2") },
        Relation { name: "zig-zag 2, right", lhs: single("Cup2 Id2 | Id2 Cap2"), rhs: scalar(one, "2") },
        Relation {
            name: "trivalent isotopy, left",
            lhs: single("Cup2 Id1 Id1 | Id2 IVertex Id1 Id1 | Id2 Id1 Cap1 Id1 | Id2 Cap1"),
            rhs: single("PVertex"),
        },
        Relation {
            name: "trivalent isotopy, right",
            lhs: single("Id1 Id1 Cup2 | Id1 Id1 IVertex Id2 | Id1 Cap1 Id1 Id2 | Cap1 Id2"),
            rhs: single("PVertex"),
        },
        Relation { name: "tetravalent rotation", lhs: rotate_expr(&tetravalent()), rhs: tetravalent() },
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationOutcome {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Evaluates both sides of every relation over `ring`.
pub fn relation_suite<K: CoeffRing>(ring: K) -> Vec<RelationOutcome> {
    let ev = Evaluator::new(ring);
    relations()
        .into_iter()
        .map(|r| {
            let l = ev.eval_expr(&r.lhs);
            let rr = ev.eval_expr(&r.rhs);
            let diff = first_difference(&ev.ring, &l, &rr);
            RelationOutcome {
                name: r.name.to_string(),
                passed: diff.is_none(),
                witness: diff.map(|(row, col, a, b)| format!("entry {row} <- {col}: lhs {a}, rhs {b}")),
            }
        })
        .collect()
}
