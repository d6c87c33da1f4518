use std::sync::Arc;

use laxcat::fincat::{all_functors, small_categories, FinFunctor};
use laxcat::gray::gray_tensor;
use laxcat::monads::presentations::{canonical_term, denote};
use laxcat::monads::{delta_a_compose, delta_a_hom, delta_a_tensor, mnd_presentation, MonotoneMap};
use laxcat::monads::delta::delta_a_count;
use laxcat::presentation::DEFAULT_BUDGET;
use laxcat::Presentation;
use proptest::prelude::*;

fn monotone(n: usize, m: usize) -> impl Strategy<Value = MonotoneMap> {
    prop::collection::vec(0..m, n).prop_map(move |mut v| {
        v.sort_unstable();
        MonotoneMap::new(m, v).expect("sorted values below m")
    })
}

/// `(f, g, h)` composable: `a -> b -> c -> d`, all targets nonempty.
fn chain3(max: usize) -> impl Strategy<Value = (MonotoneMap, MonotoneMap, MonotoneMap)> {
    (0..=max, 1..=max, 1..=max, 1..=max).prop_flat_map(|(a, b, c, d)| (monotone(a, b), monotone(b, c), monotone(c, d)))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn monotone_maps_compose_associatively((f, g, h) in chain3(6)) {
        let fg_h = delta_a_compose(&delta_a_compose(&f, &g).unwrap(), &h).unwrap();
        let f_gh = delta_a_compose(&f, &delta_a_compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(&fg_h, &f_gh);
        prop_assert_eq!(delta_a_compose(&MonotoneMap::identity(f.n), &f).unwrap(), f.clone());
        prop_assert_eq!(delta_a_compose(&f, &MonotoneMap::identity(f.m)).unwrap(), f);
    }

    #[test]
    fn ordinal_sum_satisfies_interchange((f, g, _) in chain3(4), (f2, g2, _) in chain3(4)) {
        let lhs = delta_a_compose(&delta_a_tensor(&f, &f2), &delta_a_tensor(&g, &g2)).unwrap();
        let rhs = delta_a_tensor(&delta_a_compose(&f, &g).unwrap(), &delta_a_compose(&f2, &g2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hom_enumeration_matches_the_count(n in 0usize..7, m in 0usize..7) {
        let hom = delta_a_hom(n, m);
        prop_assert_eq!(hom.len(), delta_a_count(n, m));
        prop_assert!(hom.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn chosen_terms_denote_their_maps(f in (0usize..10, 1usize..10).prop_flat_map(|(n, m)| monotone(n, m))) {
        let p = mnd_presentation();
        let t = canonical_term(&p, &f);
        p.computad.check_term(&t).unwrap();
        prop_assert_eq!(denote(&p, &t), Some(f));
    }

    #[test]
    fn composite_of_chosen_terms_is_the_chosen_term_of_the_composite((f, g, _) in chain3(4)) {
        let p = mnd_presentation();
        let lhs = p.then(&canonical_term(&p, &f), &canonical_term(&p, &g));
        let fg = delta_a_compose(&f, &g).unwrap();
        prop_assert_eq!(denote(&p, &lhs), Some(fg.clone()));
        let v = p.two_cells_equal(&lhs, &canonical_term(&p, &fg), DEFAULT_BUDGET).unwrap();
        prop_assert!(v.is_equal(), "{}", v);
    }

    #[test]
    fn rewriting_confirms_wire_tracking((f, g, _) in chain3(3)) {
        let p = mnd_presentation();
        let lhs = p.then(&canonical_term(&p, &f), &canonical_term(&p, &g));
        let rhs = canonical_term(&p, &delta_a_compose(&f, &g).unwrap());
        let by_wires = p.two_cells_equal(&lhs, &rhs, DEFAULT_BUDGET).unwrap();
        let by_rewriting = p.two_cells_equal_by_rewriting(&lhs, &rhs, DEFAULT_BUDGET).unwrap();
        prop_assert!(by_wires.is_equal(), "{}", by_wires);
        prop_assert!(by_rewriting.is_equal(), "{}", by_rewriting);
    }

    #[test]
    fn tensor_of_ordinals_has_shuffle_many_paths(a in 0usize..4, b in 0usize..4) {
        let t = gray_tensor(&Presentation::ordinal(a), &Presentation::ordinal(b)).unwrap();
        let c = &t.result.computad;
        let (from, to) = (t.obj(0, 0), t.obj(a, b));
        let n = t.result.paths_up_to(a + b).iter().filter(|p| p.start == from && c.end(p) == to).count();
        prop_assert_eq!(n, binomial(a + b, a));
    }

    #[test]
    fn functors_between_small_categories_compose(i in 0usize..20, j in 0usize..20) {
        let cats = small_categories(2, 2);
        let (x, y) = (Arc::new(cats[i % cats.len()].clone()), Arc::new(cats[j % cats.len()].clone()));
        let xy = all_functors(&x, &y);
        let yx = all_functors(&y, &x);
        let xx = all_functors(&x, &x);
        prop_assert!(xx.contains(&FinFunctor::identity(&x)));
        for f in &xy {
            prop_assert!(f.check().passed());
            for g in &yx {
                prop_assert!(xx.contains(&f.then(g)));
            }
        }
    }
}
