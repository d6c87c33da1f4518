//! Lifting lax monad morphisms to Eilenberg–Moore categories, and the lax
//! functor induced by an adjunction at every object.

use std::collections::BTreeMap;

use super::{check_adjunction, check_lax_monad_morphism, AdjunctionData, LaxMonadMorphism};
use crate::fincat::monad::em_adjunction;
use crate::fincat::sets::{fmap_of, size_of};
use crate::fincat::{em_category, CatMonad, EmCategory, FinCat, FinFunctor, FinSet, MonadOnCat, SetMonad};
use crate::host::{HostError, TwoCategory};
use crate::lax::{Direction, LaxFunctorData};
use crate::report::Report;

/// `(a, alpha) |-> (f a, fbar_a ; f alpha)` and `h |-> f h`.
fn lift_between<M: MonadOnCat, N: MonadOnCat>(
    em_t: &EmCategory<M>,
    s: &N,
    em_s: &EmCategory<N>,
    f_ob: impl Fn(&M::Ob) -> N::Ob,
    f_mor: impl Fn(&M::Mor) -> N::Mor,
    fbar: impl Fn(&M::Ob) -> N::Mor,
) -> Result<FinFunctor, HostError> {
    let ob = em_t
        .algebras
        .iter()
        .map(|(a, alpha)| {
            let lifted = (f_ob(a), s.then(&fbar(a), &f_mor(alpha)));
            em_s.algebra_index(&lifted).ok_or_else(|| HostError::new(format!("the image of the algebra on {} is not an algebra", s.show_ob(&lifted.0))))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let cat = &em_t.cat;
    let mor = (0..cat.len())
        .map(|j| {
            em_s.map_index(ob[cat.src(j)], ob[cat.tgt(j)], &f_mor(&em_t.maps[j]))
                .ok_or_else(|| HostError::new(format!("the image of `{}` is not an algebra map", cat.morphisms[j].name)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FinFunctor { src: em_t.cat.clone(), tgt: em_s.cat.clone(), ob, mor })
}

fn require_lawful<H: TwoCategory>(h: &H, x: &LaxMonadMorphism<H>) -> Result<(), HostError> {
    let laws = check_lax_monad_morphism(h, x)?;
    match laws.failures().first() {
        Some(bad) => Err(HostError::new(format!("not a lax monad morphism: {} fails: {}", bad.law, bad.verdict.detail()))),
        None => Ok(()),
    }
}

/// The lift `A^t -> B^s` of a lax monad morphism in the finite-category
/// host. Refuses morphisms that fail their laws.
pub fn lift_lax_morphism_to_em(x: &LaxMonadMorphism<FinCat>) -> Result<FinFunctor, HostError> {
    require_lawful(&FinCat, x)?;
    let (t, s) = (CatMonad::new(x.t.clone()), CatMonad::new(x.s.clone()));
    let lift = lift_between(&em_category(&t), &s, &em_category(&s), |a| x.f.ob[*a], |h| x.f.mor[*h], |a| x.fbar.comp[*a])?;
    let square = lift_square_check(x, &lift);
    match square.failures().first() {
        Some(bad) => Err(HostError::new(format!("lift fails {}", bad.law))),
        None => Ok(lift),
    }
}

/// The lift is a functor and `u^s ∘ lift = f ∘ u^t` on the nose.
pub fn lift_square_check(x: &LaxMonadMorphism<FinCat>, lift: &FinFunctor) -> Report {
    let (_, ut) = em_adjunction(&x.t);
    let (_, us) = em_adjunction(&x.s);
    let mut r = Report::new("lift to Eilenberg–Moore categories");
    r.absorb("", lift.check());
    r.check("u^s ∘ lift = f ∘ u^t", lift.then(&us.g) == ut.g.then(&x.f), "the square does not commute");
    r
}

/// The lift of a lax morphism between monads on finite sets, with both EM
/// categories cut at `bound`. The underlying endofunctor must keep sizes
/// within the bound.
pub fn lift_set_morphism_to_em(x: &LaxMonadMorphism<FinSet>, bound: usize) -> Result<FinFunctor, HostError> {
    require_lawful(&FinSet { bound }, x)?;
    let (t, s) = (SetMonad::new(x.t.clone(), bound), SetMonad::new(x.s.clone(), bound));
    let (em_t, em_s) = (em_category(&t), em_category(&s));
    for n in 0..=bound {
        if size_of(&x.f, n).is_none_or(|m| m > bound) {
            return Err(HostError::new(format!("the underlying functor leaves the bound at size {n}")));
        }
    }
    let f_ob = |n: &usize| size_of(&x.f, *n).expect("checked above");
    let f_mor = |h: &crate::fincat::monad::Func| crate::fincat::monad::Func { dom: f_ob(&h.dom), cod: f_ob(&h.cod), map: fmap_of(&x.f, h.dom, h.cod, &h.map) };
    let fbar = |n: &usize| crate::fincat::monad::Func {
        dom: s.t_ob(&f_ob(n)),
        cod: f_ob(&t.t_ob(n)),
        map: x.fbar.component(*n).expect("materialisable"),
    };
    let lift = lift_between(&em_t, &s, &em_s, f_ob, f_mor, fbar)?;
    let carriers = (0..em_t.algebras.len()).all(|k| em_s.algebras[lift.ob[k]].0 == f_ob(&em_t.algebras[k].0));
    let maps = (0..em_t.cat.len()).all(|j| em_s.maps[lift.mor[j]] == f_mor(&em_t.maps[j]));
    if !(carriers && maps) {
        return Err(HostError::new("lift fails u^s ∘ lift = f ∘ u^t"));
    }
    Ok(lift)
}

/// `F̂A` is the source of the left adjoint `f_A: F̂A -> F A`, and
/// `F̂h = f_A ; F h ; g_B`. The unit is `η_A` followed by `F⁰`, the
/// comparison at `(h, k)` is `ε_B` followed by `F²`.
pub fn induced_lax_functor_from_pointwise_adjunctions<D: TwoCategory, K: TwoCategory>(
    d: &D,
    k: &K,
    f: &LaxFunctorData<D, K>,
    adjs: &[AdjunctionData<K>],
) -> Result<LaxFunctorData<D, K>, HostError> {
    if f.direction != Direction::Lax {
        return Err(HostError::new("the functor must be lax"));
    }
    if adjs.len() != f.objects.len() {
        return Err(HostError::new(format!("{} adjunctions for {} objects", adjs.len(), f.objects.len())));
    }
    for (i, ((x, fx), adj)) in f.objects.iter().zip(adjs).enumerate() {
        let laws = check_adjunction(k, adj)?;
        if let Some(bad) = laws.failures().first() {
            return Err(HostError::new(format!("adjunction {i} fails {}", bad.law)));
        }
        if k.one_tgt(&adj.f) != *fx {
            return Err(HostError::new(format!("the left adjoint at {x:?} does not land in its image")));
        }
    }
    let at = |x: &D::Obj| &adjs[f.object_index(x).expect("listed object")];
    let hat = |h: &D::One, fh: &K::One| -> Result<K::One, HostError> {
        let (a, b) = (at(&d.one_src(h)), at(&d.one_tgt(h)));
        k.compose(&a.f, &k.compose(fh, &b.g)?)
    };
    let ones = f.ones.iter().map(|(h, fh)| Ok((h.clone(), hat(h, fh)?))).collect::<Result<Vec<_>, HostError>>()?;
    let twos = f
        .twos
        .iter()
        .map(|(a, fa)| {
            let s = d.two_src(a);
            let (l, r) = (at(&d.one_src(&s)), at(&d.one_tgt(&s)));
            Ok((a.clone(), k.whisker(&l.f, fa, &r.g)?))
        })
        .collect::<Result<Vec<_>, HostError>>()?;
    let unit = f
        .unit
        .iter()
        .zip(adjs)
        .map(|(u, adj)| k.vertical(&adj.eta, &k.whisker(&adj.f, u, &adj.g)?))
        .collect::<Result<Vec<_>, HostError>>()?;
    let mut comp = BTreeMap::new();
    for (&(i, j), c) in &f.comp {
        let (h, fh) = &f.ones[i];
        let fg = &f.ones[j].1;
        let (a, b, c_end) = (at(&d.one_src(h)), at(&d.one_tgt(h)), at(&d.one_tgt(&f.ones[j].0)));
        let counit = k.whisker(&k.compose(&a.f, fh)?, &b.eps, &k.compose(fg, &c_end.g)?)?;
        comp.insert((i, j), k.vertical(&counit, &k.whisker(&a.f, c, &c_end.g)?)?);
    }
    Ok(LaxFunctorData {
        name: format!("{} through pointwise adjunctions", f.name),
        direction: Direction::Lax,
        objects: f.objects.iter().zip(adjs).map(|((x, _), adj)| (x.clone(), k.one_src(&adj.f))).collect(),
        ones,
        twos,
        unit,
        comp,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fincat::{all_functors, all_nat_trans, FinCategory, Morphism};
    use crate::lax::check_lax_functor;
    use crate::monads::examples::{chain_monad, fincat_corpus, identity_adjunction, identity_monad_on, maybe_to_powerset, maybe_to_powerset_full};
    use crate::monads::{compose_lax, identity_lax, induced_monad, MonadData};
    use crate::presentation::{Path, Presentation, Presented};

    fn endomorphisms(m: &MonadData<FinCat>) -> Vec<LaxMonadMorphism<FinCat>> {
        let a = &m.object;
        let mut out = Vec::new();
        for f in all_functors(a, a) {
            for fbar in all_nat_trans(&f.then(&m.t), &m.t.then(&f)) {
                let x = LaxMonadMorphism { t: m.clone(), s: m.clone(), f: f.clone(), fbar };
                if check_lax_monad_morphism(&FinCat, &x).map(|r| r.passed()).unwrap_or(false) {
                    out.push(x);
                }
            }
        }
        out
    }

    #[test]
    fn identity_morphism_lifts_to_the_identity() {
        for m in fincat_corpus() {
            let lift = lift_lax_morphism_to_em(&identity_lax(&FinCat, &m)).unwrap();
            assert_eq!(lift, FinFunctor::identity(&lift.src), "{}", m.name);
        }
    }

    #[test]
    fn chain_monad_has_two_endomorphisms_each_with_one_lift() {
        let m = chain_monad();
        let xs = endomorphisms(&m);
        assert_eq!(xs.len(), 2);
        for x in &xs {
            let lift = lift_lax_morphism_to_em(x).unwrap();
            let all = all_functors(&lift.src, &lift.tgt);
            let (_, ut) = em_adjunction(&x.t);
            let (_, us) = em_adjunction(&x.s);
            let squares: Vec<_> = all.iter().filter(|g| g.then(&us.g) == ut.g.then(&x.f)).collect();
            assert_eq!(squares, vec![&lift]);
        }
    }

    #[test]
    fn lifting_is_functorial_on_the_corpus() {
        for m in fincat_corpus().into_iter().filter(|m| m.object.objects.len() <= 2) {
            let xs = endomorphisms(&m);
            for x in &xs {
                for y in &xs {
                    let xy = compose_lax(&FinCat, x, y).unwrap();
                    let lx = lift_lax_morphism_to_em(x).unwrap();
                    let ly = lift_lax_morphism_to_em(y).unwrap();
                    assert_eq!(lift_lax_morphism_to_em(&xy).unwrap(), lx.then(&ly), "{}", m.name);
                }
            }
        }
    }

    #[test]
    fn unlawful_morphism_is_refused() {
        // the identity monad on Z/2 with the swap as structure cell
        let mors = vec![Morphism { name: "e".into(), src: 0, tgt: 0 }, Morphism { name: "σ".into(), src: 0, tgt: 0 }];
        let z2 = Arc::new(FinCategory::build("Z/2", vec!["*".into()], mors, vec![0], |a, b| a ^ b).unwrap());
        let m = identity_monad_on(&z2);
        let mut x = identity_lax(&FinCat, &m);
        x.fbar.comp = vec![1];
        assert!(lift_lax_morphism_to_em(&x).is_err());
        // the identity and the trivial endofunctor, each with the identity cell
        assert_eq!(endomorphisms(&m).len(), 2);
    }

    #[test]
    fn support_sends_semilattices_to_pointed_sets() {
        let bound = 3;
        let lift = lift_set_morphism_to_em(&maybe_to_powerset(), bound).unwrap();
        let t = SetMonad::new(maybe_to_powerset().t, bound);
        let s = SetMonad::new(maybe_to_powerset().s, bound);
        let (em_t, em_s) = (em_category(&t), em_category(&s));
        assert!(lift.check().passed());
        for (k, (n, alpha)) in em_t.algebras.iter().enumerate() {
            let (m, beta) = &em_s.algebras[lift.ob[k]];
            assert_eq!(m, n);
            // the point is the join of the empty set
            assert_eq!(beta.map[*n], alpha.map[0]);
            assert_eq!(&beta.map[..*n], &(0..*n).collect::<Vec<_>>()[..]);
        }
        assert!(lift_set_morphism_to_em(&maybe_to_powerset_full(), bound).is_err());
    }

    fn chain() -> Arc<FinCategory> {
        Arc::new(FinCategory::chain(2))
    }

    fn terminal() -> Arc<FinCategory> {
        Arc::new(FinCategory::terminal())
    }

    /// Every adjunction `L ⊣ R` with `L: X -> c` for `X` among `sources`.
    fn adjunctions_into(c: &Arc<FinCategory>, sources: &[Arc<FinCategory>]) -> Vec<AdjunctionData<FinCat>> {
        let mut out = Vec::new();
        for x in sources {
            for l in all_functors(x, c) {
                for r in all_functors(c, x) {
                    for eta in all_nat_trans(&FinFunctor::identity(x), &l.then(&r)) {
                        for eps in all_nat_trans(&r.then(&l), &FinFunctor::identity(c)) {
                            let adj = AdjunctionData { f: l.clone(), g: r.clone(), eta: eta.clone(), eps };
                            if check_adjunction(&FinCat, &adj).map(|rep| rep.passed()).unwrap_or(false) {
                                out.push(adj);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn strict_on_arrow<'a>(d: &Presented<'a>, p: &Presentation, a0: &Arc<FinCategory>, a1: &Arc<FinCategory>, h: &FinFunctor) -> LaxFunctorData<Presented<'a>, FinCat> {
        let ones = [(Path::empty(0), FinFunctor::identity(a0)), (Path::empty(1), FinFunctor::identity(a1)), (p.p(&["u"]), h.clone())];
        let mut comp = BTreeMap::new();
        for i in 0..3 {
            for j in 0..3 {
                let (f, g) = (&ones[i].0, &ones[j].0);
                if d.one_tgt(f) == g.start {
                    let fg = d.compose(f, g).unwrap();
                    let ij = ones.iter().position(|(x, _)| *x == fg).unwrap();
                    comp.insert((i, j), FinCat.identity2(&ones[ij].1));
                }
            }
        }
        LaxFunctorData {
            name: "F".into(),
            direction: Direction::Lax,
            objects: vec![(0, a0.clone()), (1, a1.clone())],
            ones: ones.to_vec(),
            twos: Vec::new(),
            unit: vec![FinCat.identity2(&ones[0].1), FinCat.identity2(&ones[1].1)],
            comp,
        }
    }

    #[test]
    fn identity_adjunctions_give_back_the_functor() {
        let p = Presentation::walking_arrow();
        let d = Presented::new(&p);
        let (a0, a1) = (chain(), terminal());
        for h in all_functors(&a0, &a1) {
            let f = strict_on_arrow(&d, &p, &a0, &a1, &h);
            let adjs = [identity_adjunction(&FinCat, &a0), identity_adjunction(&FinCat, &a1)];
            let g = induced_lax_functor_from_pointwise_adjunctions(&d, &FinCat, &f, &adjs).unwrap();
            assert_eq!(g.objects, f.objects);
            assert_eq!(g.ones, f.ones);
            assert!(g.is_strict(&FinCat));
        }
    }

    #[test]
    fn one_adjunction_on_the_terminal_base_is_its_monad() {
        let p = Presentation::terminal();
        let d = Presented::new(&p);
        let c = chain();
        for adj in adjunctions_into(&c, &[terminal(), chain()]) {
            let id = FinFunctor::identity(&c);
            let f = LaxFunctorData {
                name: "F".into(),
                direction: Direction::Lax,
                objects: vec![(0, c.clone())],
                ones: vec![(Path::empty(0), id.clone())],
                twos: Vec::new(),
                unit: vec![FinCat.identity2(&id)],
                comp: BTreeMap::from([((0, 0), FinCat.identity2(&id))]),
            };
            let g = induced_lax_functor_from_pointwise_adjunctions(&d, &FinCat, &f, std::slice::from_ref(&adj)).unwrap();
            let m = induced_monad(&FinCat, &adj).unwrap();
            assert_eq!(g.ones[0].1, m.t);
            assert_eq!(g.unit[0], m.eta);
            assert_eq!(g.comp[&(0, 0)], m.mu);
            assert!(check_lax_functor(&d, &FinCat, &g).unwrap().passed());
        }
    }

    #[test]
    fn walking_arrow_laws_hold_for_every_small_adjunction() {
        let p = Presentation::walking_arrow();
        let d = Presented::new(&p);
        let cats = [terminal(), chain()];
        let mut checked = 0;
        for a0 in &cats {
            for a1 in &cats {
                let (adj0, adj1) = (adjunctions_into(a0, &cats), adjunctions_into(a1, &cats));
                for h in all_functors(a0, a1) {
                    let f = strict_on_arrow(&d, &p, a0, a1, &h);
                    for l in &adj0 {
                        for r in &adj1 {
                            let g = induced_lax_functor_from_pointwise_adjunctions(&d, &FinCat, &f, &[l.clone(), r.clone()]).unwrap();
                            let rep = check_lax_functor(&d, &FinCat, &g).unwrap();
                            assert!(rep.passed(), "{}", rep.render_text());
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert!(checked > 20, "only {checked} cases");
    }

    #[test]
    fn mismatched_adjunction_is_refused() {
        let p = Presentation::walking_arrow();
        let d = Presented::new(&p);
        let (a0, a1) = (chain(), terminal());
        let f = strict_on_arrow(&d, &p, &a0, &a1, &FinFunctor::constant(&a0, &a1, 0));
        let adjs = [identity_adjunction(&FinCat, &a1), identity_adjunction(&FinCat, &a1)];
        assert!(induced_lax_functor_from_pointwise_adjunctions(&d, &FinCat, &f, &adjs).is_err());
        assert!(induced_lax_functor_from_pointwise_adjunctions(&d, &FinCat, &f, &adjs[..1]).is_err());
    }
}
