use c2webs::repr::{act, Gen};
use c2webs::ring::RingElem;
use c2webs::weights::{wt, WeightSeq, Word};

fn seq(v: &[(i32, i32)]) -> WeightSeq {
    WeightSeq(v.iter().map(|&(a, b)| wt(a, b)).collect())
}

#[test]
fn short_root_raising_on_two_factors() {
    let w: Word = "11".parse().unwrap();
    let i = |v: &[(i32, i32)]| w.index_of_seq(&seq(v)).unwrap();
    let got = act(Gen::Es, &w, i(&[(-1, 1), (-1, 0)]));
    let want = [(i(&[(1, 0), (-1, 0)]), RingElem::one()), (i(&[(-1, 1), (1, -1)]), RingElem::qpow(1, -1))]
        .into_iter()
        .collect();
    assert_eq!(got, want);
}

#[test]
fn inverse_toral_generators_cancel() {
    for w in Word::all_up_to(3) {
        for j in 0..w.dim() {
            for (k, kinv) in [(Gen::Ks, Gen::KsInv), (Gen::Kt, Gen::KtInv)] {
                let v = act(k, &w, j);
                assert_eq!(v.len(), 1);
                let (&i, c) = v.iter().next().unwrap();
                assert_eq!(i, j);
                let back = act(kinv, &w, j);
                assert_eq!(c.clone() * back[&j].clone(), RingElem::one());
            }
        }
    }
}
