use proptest::prelude::*;

use c2webs::ladders::light_ladder;
use c2webs::repr::linmap::{compose, tensor};
use c2webs::repr::preserves_weight;
use c2webs::ring::{CoeffField, CoeffRing, FieldSpec, FieldValue, FractionField, LaurentPoly, PrimeField, RationalField, RingElem};
use c2webs::webs::{self, eval, flip, Diagram, Generator, Slice};
use c2webs::weights::{enumerate_e, hom_dim, Letter, Word};
use num_rational::BigRational;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -5i64..=5), 0..4).prop_map(LaurentPoly::from_terms)
}

fn elem() -> impl Strategy<Value = RingElem> {
    (laurent(), 0u32..3).prop_map(|(p, k)| RingElem::new(p, k))
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..=max)
        .prop_map(|v| Word(v.into_iter().map(|b| if b { Letter::Two } else { Letter::One }).collect()))
}

/// Stacks generators on top of `w`, each placed at a position picked by the
/// choice bytes; the running word never grows past four letters.
fn random_diagram(w: &Word, choices: &[(u8, u8)]) -> Diagram {
    let mut d = Diagram::identity(w);
    for &(gi, pi) in choices {
        let target = d.target.clone();
        let cur = &target;
        let options: Vec<(Generator, usize)> = Generator::ALL
            .iter()
            .filter(|g| !g.is_identity())
            .flat_map(|&g| {
                let src = g.source();
                (0..=cur.len().saturating_sub(src.len()))
                    .filter(move |&i| i + src.len() <= cur.len() && &cur.0[i..i + src.len()] == src)
                    .map(move |i| (g, i))
            })
            .filter(|(g, _)| cur.len() - g.source().len() + g.target().len() <= 4)
            .collect();
        if options.is_empty() {
            continue;
        }
        let (g, i) = options[(gi as usize * 7 + pi as usize) % options.len()];
        let left = Word(cur.0[..i].to_vec());
        let right = Word(cur.0[i + g.source().len()..].to_vec());
        let top = Diagram::from_slices(vec![Slice(vec![g]).padded(&left, &right)]).unwrap();
        d = webs::compose(&top, &d).unwrap();
    }
    d
}

fn diagram() -> impl Strategy<Value = Diagram> {
    (word(3), prop::collection::vec((any::<u8>(), any::<u8>()), 0..4)).prop_map(|(w, c)| random_diagram(&w, &c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_operations_are_associative_commutative_distributive(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_undoes_multiplication(a in elem(), b in elem()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn bar_is_a_ring_involution(a in elem(), b in elem()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
    }

    #[test]
    fn specialisation_is_a_ring_map(a in elem(), b in elem(), p in prop::sample::select(vec![7u64, 11, 13]), q in 2u64..6) {
        let k = match PrimeField::new(p, q) { Ok(k) => k, Err(_) => return Ok(()) };
        prop_assert_eq!(k.embed(&(&a * &b)), k.mul(&k.embed(&a), &k.embed(&b)));
        prop_assert_eq!(k.embed(&(&a + &b)), k.add(&k.embed(&a), &k.embed(&b)));
        let spec = FieldSpec::PrimeField { p, q };
        prop_assert_eq!(spec.specialize(&a).unwrap(), FieldValue::Prime { value: k.embed(&a), p });
    }

    #[test]
    fn rational_specialisation_is_a_ring_map(a in elem(), b in elem(), n in 1i64..5, d in 1i64..4) {
        let k = RationalField::new(BigRational::new(n.into(), d.into())).unwrap();
        prop_assert_eq!(k.embed(&(&a * &b)), k.mul(&k.embed(&a), &k.embed(&b)));
        prop_assert_eq!(k.embed(&(&a + &b)), k.add(&k.embed(&a), &k.embed(&b)));
    }

    #[test]
    fn fraction_field_inverts(a in elem()) {
        prop_assume!(!a.is_zero());
        let k = FractionField;
        let x = k.embed(&a);
        prop_assert!(k.mul(&x, &k.inv(&x)) == k.one());
    }

    #[test]
    fn evaluation_respects_composition_and_tensor(f in diagram(), g in diagram()) {
        let ring = c2webs::ring::SymbolicA;
        prop_assert!(preserves_weight(&eval(&f)));
        let joined = webs::tensor(&f, &g);
        prop_assert_eq!(eval(&joined), tensor(&ring, &eval(&f), &eval(&g)));
        // A diagram composed with its own flip always type-checks.
        let up = flip(&f);
        let round = webs::compose(&up, &f).unwrap();
        prop_assert_eq!(eval(&round), compose(&ring, &eval(&up), &eval(&f)));
    }

    #[test]
    fn hom_dimension_is_symmetric(w in word(4), u in word(4)) {
        prop_assert_eq!(hom_dim(&w, &u), hom_dim(&u, &w));
    }

    #[test]
    fn light_ladders_end_at_the_standard_word(w in word(5), pick in any::<prop::sample::Index>()) {
        let seqs = enumerate_e(&w);
        let mu = pick.get(&seqs);
        let d = light_ladder(&w, mu).unwrap();
        prop_assert_eq!(d.source, w);
        prop_assert_eq!(d.target, Word::standard(mu.sum()).unwrap());
    }
}
