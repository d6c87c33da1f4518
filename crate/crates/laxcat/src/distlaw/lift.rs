//! Lifting `t` along a law to the algebras of `s`, and comparing algebras
//! of the lift with algebras of the composite monad.

use std::collections::BTreeSet;
use std::rc::Rc;

use super::{compose_monads, DistLawData};
use crate::fincat::monad::{algebras, is_algebra, is_algebra_map, Algebra, Func};
use crate::fincat::{CatMonad, FinCat, FinSet, MonadOnCat, SetMonad};
use crate::host::HostError;
use crate::monads::MonadData;
use crate::report::Report;

type LiftedMor<M> = (Algebra<M>, Algebra<M>, <M as MonadOnCat>::Mor);

/// The monad `(a, alpha) -> (t a, gamma_a ; t alpha)` on the algebras of
/// `s` over the base objects of `s`.
pub struct LiftedMonad<M: MonadOnCat> {
    pub s: M,
    pub t: M,
    gamma: Rc<dyn Fn(&M::Ob) -> M::Mor>,
}

pub fn lift_monad_to_em<M: MonadOnCat>(s: M, t: M, gamma: impl Fn(&M::Ob) -> M::Mor + 'static) -> LiftedMonad<M> {
    LiftedMonad { s, t, gamma: Rc::new(gamma) }
}

/// The lift of a law between monads on finite sets, over sets of size at
/// most `bound`.
pub fn lift_set_law(d: &DistLawData<FinSet>, bound: usize) -> LiftedMonad<SetMonad> {
    let g = d.gamma.clone();
    let (s, t) = (SetMonad::new(d.s.clone(), bound), SetMonad::new(d.t.clone(), bound));
    let (st, ts) = (s.clone(), t.clone());
    lift_monad_to_em(s, t, move |&n| {
        let dom = st.t_ob(&ts.t_ob(&n));
        Func { dom, cod: ts.t_ob(&st.t_ob(&n)), map: g.component(n).expect("materialisable") }
    })
}

/// The lift of a law between monads on one finite category.
pub fn lift_cat_law(d: &DistLawData<FinCat>) -> LiftedMonad<CatMonad> {
    let comp = d.gamma.comp.clone();
    lift_monad_to_em(CatMonad::new(d.s.clone()), CatMonad::new(d.t.clone()), move |&x| comp[x])
}

impl<M: MonadOnCat> MonadOnCat for LiftedMonad<M> {
    type Ob = Algebra<M>;
    type Mor = LiftedMor<M>;

    fn name(&self) -> String {
        format!("{} lifted to {}-algebras", self.t.name(), self.s.name())
    }

    fn objects(&self) -> Vec<Algebra<M>> {
        algebras(&self.s)
    }

    fn hom(&self, x: &Algebra<M>, y: &Algebra<M>) -> Vec<LiftedMor<M>> {
        let s = &self.s;
        s.hom(&x.0, &y.0).into_iter().filter(|h| is_algebra_map(s, &x.1, h, &y.1)).map(|h| (x.clone(), y.clone(), h)).collect()
    }

    fn dom(&self, f: &LiftedMor<M>) -> Algebra<M> {
        f.0.clone()
    }

    fn cod(&self, f: &LiftedMor<M>) -> Algebra<M> {
        f.1.clone()
    }

    fn then(&self, f: &LiftedMor<M>, g: &LiftedMor<M>) -> LiftedMor<M> {
        (f.0.clone(), g.1.clone(), self.s.then(&f.2, &g.2))
    }

    fn id(&self, x: &Algebra<M>) -> LiftedMor<M> {
        (x.clone(), x.clone(), self.s.id(&x.0))
    }

    fn t_ob(&self, x: &Algebra<M>) -> Algebra<M> {
        (self.t.t_ob(&x.0), self.s.then(&(self.gamma)(&x.0), &self.t.t_mor(&x.1)))
    }

    fn t_mor(&self, f: &LiftedMor<M>) -> LiftedMor<M> {
        (self.t_ob(&f.0), self.t_ob(&f.1), self.t.t_mor(&f.2))
    }

    fn eta(&self, x: &Algebra<M>) -> LiftedMor<M> {
        (x.clone(), self.t_ob(x), self.t.eta(&x.0))
    }

    fn mu(&self, x: &Algebra<M>) -> LiftedMor<M> {
        let tx = self.t_ob(x);
        (self.t_ob(&tx), tx, self.t.mu(&x.0))
    }

    fn show_ob(&self, x: &Algebra<M>) -> String {
        format!("({}, {})", self.s.show_ob(&x.0), self.s.show_mor(&x.1))
    }

    fn show_mor(&self, f: &LiftedMor<M>) -> String {
        self.s.show_mor(&f.2)
    }
}

/// Monad laws and naturality of a monad on a finite category, object by
/// object and morphism by morphism.
pub fn monad_laws_on_cat<M: MonadOnCat>(m: &M) -> Report {
    let mut r = Report::new(format!("monad laws of {}", m.name()));
    let obs = m.objects();
    let mut bad = |law: &str, what: String| r.check(law.to_string(), false, what);
    for x in &obs {
        let (tx, mu) = (m.t_ob(x), m.mu(x));
        let show = || m.show_ob(x);
        if m.then(&m.t_mor(&m.eta(x)), &mu) != m.id(&tx) {
            bad("left unit", show());
        }
        if m.then(&m.eta(&tx), &mu) != m.id(&tx) {
            bad("right unit", show());
        }
        if m.then(&m.t_mor(&mu), &mu) != m.then(&m.mu(&tx), &mu) {
            bad("associativity", show());
        }
        for y in &obs {
            for f in m.hom(x, y) {
                if m.then(&m.eta(x), &m.t_mor(&f)) != m.then(&f, &m.eta(y)) {
                    bad("naturality of eta", m.show_mor(&f));
                }
                if m.then(&mu, &m.t_mor(&f)) != m.then(&m.t_mor(&m.t_mor(&f)), &m.mu(y)) {
                    bad("naturality of mu", m.show_mor(&f));
                }
            }
        }
    }
    for law in ["left unit", "right unit", "associativity", "naturality of eta", "naturality of mu"] {
        if r.verdict_of(law).is_none() {
            r.check(law, true, "");
        }
    }
    r
}

/// The lift sends algebras to algebras, has algebra maps as unit and
/// multiplication, and lies over `t`, whose laws are checked too.
pub fn check_lift<M: MonadOnCat>(l: &LiftedMonad<M>) -> Report {
    let mut r = Report::new(l.name());
    let (s, t) = (&l.s, &l.t);
    let obs = l.objects();
    let lands = obs.iter().all(|x| {
        let y = l.t_ob(x);
        is_algebra(s, &y.0, &y.1)
    });
    r.check("t of an algebra is an algebra", lands, "some image fails the algebra laws");
    if !lands {
        return r;
    }
    let maps = obs.iter().all(|x| {
        let (e, m) = (l.eta(x), l.mu(x));
        is_algebra_map(s, &e.0 .1, &e.2, &e.1 .1) && is_algebra_map(s, &m.0 .1, &m.2, &m.1 .1)
    });
    r.check("unit and multiplication are algebra maps", maps, "a component is not an algebra map");
    let over = obs.iter().all(|x| {
        l.t_ob(x).0 == t.t_ob(&x.0)
            && l.eta(x).2 == t.eta(&x.0)
            && l.mu(x).2 == t.mu(&x.0)
            && obs.iter().all(|y| l.hom(x, y).iter().all(|h| l.t_mor(h).2 == t.t_mor(&h.2)))
    });
    r.check("forgetting the algebra recovers t", over, "the lift does not lie over t");
    // the forgetful functor is faithful, so the lifted laws are those of t
    r.absorb("t ", monad_laws_on_cat(t));
    r
}

/// Algebras of the lift against algebras of the composite on sets of size
/// at most `bound`: `((a, alpha), beta) -> (a, t alpha ; beta)` must be a
/// bijection on objects and on hom-sets, and the monad induced by the two
/// free-forgetful steps must be the composite.
pub fn iterated_em_check(h: &FinSet, d: &DistLawData<FinSet>, bound: usize) -> Result<Report, HostError> {
    let comp_data: MonadData<FinSet> = compose_monads(h, d)?;
    let comp = SetMonad::new(comp_data, bound);
    let lift = lift_set_law(d, bound);
    let mut r = Report::new("iterated algebras");
    r.absorb("", check_lift(&lift));
    let (s, t) = (&lift.s, &lift.t);

    let upper = algebras(&lift);
    let direct = algebras(&comp);
    r.note(format!("{} algebras of the lift, {} of the composite", upper.len(), direct.len()));
    let phi = |x: &Algebra<LiftedMonad<SetMonad>>| -> Algebra<SetMonad> { (x.0 .0, s.then(&t.t_mor(&x.0 .1), &x.1 .2)) };
    let image: Vec<Algebra<SetMonad>> = upper.iter().map(phi).collect();
    let distinct: BTreeSet<_> = image.iter().cloned().collect();
    let all: BTreeSet<_> = direct.iter().cloned().collect();
    r.check("comparison is injective on objects", distinct.len() == image.len(), "two algebras collide");
    r.check("comparison is onto the composite algebras", distinct == all, "image differs from the composite algebras");
    let homs_match = upper.iter().zip(&image).all(|(x, px)| {
        upper.iter().zip(&image).all(|(y, py)| {
            let a: BTreeSet<Func> =
                lift.hom(&x.0, &y.0).into_iter().filter(|f| is_algebra_map(&lift, &x.1, f, &y.1)).map(|f| f.2).collect();
            let b: BTreeSet<Func> =
                comp.hom(&px.0, &py.0).into_iter().filter(|f| is_algebra_map(&comp, &px.1, f, &py.1)).collect();
            a == b
        })
    });
    r.check("comparison is bijective on hom-sets", homs_match, "some hom-set differs");

    let mut induced = true;
    for x in 0..=bound {
        let sx = s.t_ob(&x);
        let gamma = {
            let dom = s.t_ob(&t.t_ob(&sx));
            Func { dom, cod: t.t_ob(&s.t_ob(&sx)), map: d.gamma.component(sx).expect("materialisable") }
        };
        let mu = s.then(&s.then(&t.t_mor(&gamma), &t.t_mor(&t.t_mor(&s.mu(&x)))), &t.mu(&sx));
        let eta = s.then(&s.eta(&x), &t.eta(&sx));
        induced &= mu == comp.mu(&x) && eta == comp.eta(&x);
    }
    r.check("induced monad is the composite", induced, "the composed adjunctions induce a different monad");
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host::TwoCategory;
    use crate::distlaw::examples::{identity_law, maybe_powerset_law};
    use crate::monads::examples::identity_monad_on;
    use std::sync::Arc;

    #[test]
    fn maybe_powerset_lifts_and_iterates() {
        let h = FinSet::default();
        let r = iterated_em_check(&h, &maybe_powerset_law(), 2).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let r = iterated_em_check(&h, &identity_law(), 2).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn identity_law_on_a_category_lifts() {
        let a = Arc::new(crate::fincat::FinCategory::chain(3));
        let m = identity_monad_on(&a);
        let d = DistLawData { s: m.clone(), t: m.clone(), gamma: crate::fincat::FinNatTrans::identity(&m.t) };
        let h = FinCat;
        assert!(h.check_two(&d.gamma).is_none());
        let r = check_lift(&lift_cat_law(&d));
        assert!(r.passed(), "{}", r.render_text());
    }
}
