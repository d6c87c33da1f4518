//! Distributive laws between monads, and of a monad over a comonad.
//!
//! For monads `s` and `t` on one object, a law is a 2-cell
//! `gamma: [t, s] => [s, t]` (apply `t`, then `s`, on the left). The
//! composite monad has underlying 1-cell `[s, t]`.

pub mod lift;
pub mod mutations;

use crate::host::{horizontal, HostError, TwoCategory};
use crate::monads::{
    check_comonad, check_comonad_in_lax, check_monad, check_monad_in_colax, check_monad_in_lax, expect_boundary, law, seq, well_formed,
    ColaxMonadMorphism, ComonadData, LaxMonadMorphism, MonadData,
};
use crate::presentation::{check_presented_functor, Computad, Oracle, Presentation, PresentedFunctor, Shape};
use crate::report::Report;
use crate::verdict::Verdict;

pub use lift::{iterated_em_check, lift_monad_to_em, LiftedMonad};
pub use mutations::{beck_mutation_suite, maybe_powerset_mutations, Mutation};

#[derive(Clone, Debug)]
pub struct DistLawData<H: TwoCategory> {
    pub s: MonadData<H>,
    pub t: MonadData<H>,
    /// `[t, s] => [s, t]`
    pub gamma: H::Two,
}

/// A monad `t` over a comonad `w`, `gamma: [w, t] => [t, w]`.
#[derive(Clone, Debug)]
pub struct MixedDistLawData<H: TwoCategory> {
    pub t: MonadData<H>,
    pub w: ComonadData<H>,
    pub gamma: H::Two,
}

fn check_typing<H: TwoCategory>(h: &H, d: &DistLawData<H>) -> Result<(), HostError> {
    if d.s.object != d.t.object {
        return Err(HostError::new("the two monads live on different objects"));
    }
    expect_boundary(h, "gamma", &d.gamma, &h.compose(&d.t.t, &d.s.t)?, &h.compose(&d.s.t, &d.t.t)?)
}

/// The monad laws of both monads and naturality of `gamma`, shared by every
/// branch of the equivalence.
fn premises<H: TwoCategory>(h: &H, d: &DistLawData<H>) -> Result<Report, HostError> {
    let mut r = Report::new("premises");
    r.absorb("s ", check_monad(h, &d.s)?);
    r.absorb("t ", check_monad(h, &d.t)?);
    well_formed(h, &mut r, &[("gamma", &d.gamma)]);
    Ok(r)
}

/// The four axioms: compatibility with the unit and multiplication of `s`
/// and of `t`.
pub fn check_distributive_law<H: TwoCategory>(h: &H, d: &DistLawData<H>) -> Result<Report, HostError> {
    check_typing(h, d)?;
    let (s, t, g) = (&d.s, &d.t, || Ok(d.gamma.clone()));
    let one = h.identity(&s.object);
    let mut r = Report::new("distributive law");
    well_formed(h, &mut r, &[("gamma", &d.gamma)]);
    law(h, &mut r, "unit of s", seq(h, &[h.whisker(&t.t, &s.eta, &one), g()]), h.whisker(&one, &s.eta, &t.t));
    law(h, &mut r, "unit of t", seq(h, &[h.whisker(&one, &t.eta, &s.t), g()]), h.whisker(&s.t, &t.eta, &one));
    law(
        h,
        &mut r,
        "multiplication of s",
        seq(h, &[h.whisker(&t.t, &s.mu, &one), g()]),
        seq(h, &[h.whisker(&one, &d.gamma, &s.t), h.whisker(&s.t, &d.gamma, &one), h.whisker(&one, &s.mu, &t.t)]),
    );
    law(
        h,
        &mut r,
        "multiplication of t",
        seq(h, &[h.whisker(&one, &t.mu, &s.t), g()]),
        seq(h, &[h.whisker(&t.t, &d.gamma, &one), h.whisker(&one, &d.gamma, &t.t), h.whisker(&s.t, &t.mu, &one)]),
    );
    Ok(r)
}

/// The composite `[s, t]` with multiplication `s.gamma.t` followed by
/// `mu^s` and `mu^t` side by side, and unit `eta^s` beside `eta^t`. No law
/// is checked.
pub fn composite_monad<H: TwoCategory>(h: &H, d: &DistLawData<H>) -> Result<MonadData<H>, HostError> {
    check_typing(h, d)?;
    let (s, t) = (&d.s, &d.t);
    let mu = h.vertical(&h.whisker(&s.t, &d.gamma, &t.t)?, &horizontal(h, &s.mu, &t.mu)?)?;
    Ok(MonadData {
        name: format!("{} over {}", t.name, s.name),
        object: s.object.clone(),
        t: h.compose(&s.t, &t.t)?,
        mu,
        eta: horizontal(h, &s.eta, &t.eta)?,
    })
}

/// The composite monad of a valid law; refuses invalid laws and asserts
/// that the result is a monad.
pub fn compose_monads<H: TwoCategory>(h: &H, d: &DistLawData<H>) -> Result<MonadData<H>, HostError> {
    let laws = check_distributive_law(h, d)?;
    let pre = premises(h, d)?;
    if laws.refuted() || pre.refuted() {
        let first = pre.failures().into_iter().chain(laws.failures()).next().map(|e| e.law.clone()).unwrap_or_default();
        return Err(HostError::new(format!("not a distributive law: {first} fails")));
    }
    let m = composite_monad(h, d)?;
    let check = check_monad(h, &m)?;
    assert!(!check.refuted(), "a distributive law produced a non-monad:\n{}", check.render_text());
    Ok(m)
}

/// Branch (ii): `(t, gamma)` as a lax morphism from `s` to itself, with
/// `mu^t` and `eta^t` making it a monad among lax morphisms.
pub fn lax_branch<H: TwoCategory>(h: &H, d: &DistLawData<H>) -> Result<Report, HostError> {
    let x = LaxMonadMorphism { t: d.s.clone(), s: d.s.clone(), f: d.t.t.clone(), fbar: d.gamma.clone() };
    check_monad_in_lax(h, &x, &d.t.mu, &d.t.eta)
}

/// Branch (iii): `(s, gamma)` as a colax morphism from `t` to itself, with
/// `mu^s` and `eta^s` making it a monad among colax morphisms.
pub fn colax_branch<H: TwoCategory>(h: &H, d: &DistLawData<H>) -> Result<Report, HostError> {
    let x = ColaxMonadMorphism { t: d.t.clone(), s: d.t.clone(), f: d.s.t.clone(), ftilde: d.gamma.clone() };
    check_monad_in_colax(h, &x, &d.s.mu, &d.s.eta)
}

/// Branch (iv): the composite is a monad.
pub fn composite_branch<H: TwoCategory>(h: &H, d: &DistLawData<H>) -> Result<Report, HostError> {
    check_monad(h, &composite_monad(h, d)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeckVerdicts {
    pub axioms: bool,
    pub lax: bool,
    pub colax: bool,
    pub composite: bool,
}

impl BeckVerdicts {
    pub fn agree(&self) -> bool {
        self.axioms == self.lax && self.lax == self.colax && self.colax == self.composite
    }

    pub fn all_fail(&self) -> bool {
        !self.axioms && !self.lax && !self.colax && !self.composite
    }
}

/// Evaluates the four equivalent conditions independently. Each branch
/// carries the shared premises.
pub fn beck_branches<H: TwoCategory>(h: &H, d: &DistLawData<H>) -> Result<(Report, BeckVerdicts), HostError> {
    let pre = premises(h, d)?;
    let mut r = Report::new("Beck equivalence");
    let mut verdicts = Vec::new();
    type Branch<H> = fn(&H, &DistLawData<H>) -> Result<Report, HostError>;
    let branches: [(&str, Branch<H>); 4] = [
        ("(i) axioms", check_distributive_law),
        ("(ii) lax", lax_branch),
        ("(iii) colax", colax_branch),
        ("(iv) composite", composite_branch),
    ];
    for (name, f) in branches {
        let mut b = pre.clone();
        b.absorb("", f(h, d)?);
        verdicts.push(b.passed());
        r.absorb(&format!("{name}: "), b);
    }
    let v = BeckVerdicts { axioms: verdicts[0], lax: verdicts[1], colax: verdicts[2], composite: verdicts[3] };
    Ok((r, v))
}

pub fn beck_equivalence_check<H: TwoCategory>(h: &H, d: &DistLawData<H>) -> Result<Report, HostError> {
    let (mut r, v) = beck_branches(h, d)?;
    r.note(format!("branch verdicts: axioms {}, lax {}, colax {}, composite {}", v.axioms, v.lax, v.colax, v.composite));
    r.check("branches agree", v.agree(), "the four characterisations disagree");
    Ok(r)
}

/// Compatibility of `gamma: [w, t] => [t, w]` with `eta`, `mu`, `eps` and
/// `delta`, then the same question asked of `(w, gamma)` as a comonad among
/// lax morphisms from `t` to itself.
pub fn check_mixed_distributive_law<H: TwoCategory>(h: &H, m: &MixedDistLawData<H>) -> Result<Report, HostError> {
    let (t, w) = (&m.t, &m.w);
    if t.object != w.object {
        return Err(HostError::new("the monad and comonad live on different objects"));
    }
    expect_boundary(h, "gamma", &m.gamma, &h.compose(&w.w, &t.t)?, &h.compose(&t.t, &w.w)?)?;
    let one = h.identity(&t.object);
    let g = || Ok(m.gamma.clone());
    let mut direct = Report::new("axioms");
    direct.absorb("t ", check_monad(h, t)?);
    direct.absorb("w ", check_comonad(h, w)?);
    well_formed(h, &mut direct, &[("gamma", &m.gamma)]);
    law(h, &mut direct, "unit", seq(h, &[h.whisker(&w.w, &t.eta, &one), g()]), h.whisker(&one, &t.eta, &w.w));
    law(
        h,
        &mut direct,
        "multiplication",
        seq(h, &[h.whisker(&w.w, &t.mu, &one), g()]),
        seq(h, &[h.whisker(&one, &m.gamma, &t.t), h.whisker(&t.t, &m.gamma, &one), h.whisker(&one, &t.mu, &w.w)]),
    );
    law(h, &mut direct, "counit", seq(h, &[g(), h.whisker(&t.t, &w.eps, &one)]), h.whisker(&one, &w.eps, &t.t));
    law(
        h,
        &mut direct,
        "comultiplication",
        seq(h, &[h.whisker(&one, &w.delta, &t.t), h.whisker(&w.w, &m.gamma, &one), h.whisker(&one, &m.gamma, &w.w)]),
        seq(h, &[g(), h.whisker(&t.t, &w.delta, &one)]),
    );
    let x = LaxMonadMorphism { t: t.clone(), s: t.clone(), f: w.w.clone(), fbar: m.gamma.clone() };
    let encoded = check_comonad_in_lax(h, &x, &w.delta, &w.eps)?;
    let (a, b) = (direct.passed(), encoded.passed());
    let mut r = Report::new("mixed distributive law");
    r.absorb("direct: ", direct);
    r.absorb("as comonad among lax morphisms: ", encoded);
    r.note(format!("direct verdict {a}, encoded verdict {b}"));
    r.check("encodings agree", a == b, "the two readings of the law disagree");
    Ok(r)
}

/// Two monads `s`, `t` and `gamma: [t, s] => [s, t]` with both monad laws
/// and the four axioms.
pub fn dist_presentation() -> Presentation {
    let mut c = Computad::new();
    c.add_object("A").expect("fresh");
    c.add_one("t", "A", "A").expect("fresh");
    c.add_one("s", "A", "A").expect("fresh");
    let path = |c: &Computad, e: &[&str]| c.path("A", e).expect("path");
    for (m, shape) in [("t", Shape::Merge), ("s", Shape::Merge)] {
        c.add_two(&format!("eta_{m}"), path(&c, &[]), path(&c, &[m]), shape).expect("fresh");
        c.add_two(&format!("mu_{m}"), path(&c, &[m, m]), path(&c, &[m]), shape).expect("fresh");
    }
    c.add_two("gamma", path(&c, &["t", "s"]), path(&c, &["s", "t"]), Shape::Swap).expect("fresh");
    let mut p = Presentation::free("Dist", c);
    let e = p.path("A", &[]);
    for m in ["t", "s"] {
        let x = p.p(&[m]);
        let (mu, eta) = (p.gen(&format!("mu_{m}")), p.gen(&format!("eta_{m}")));
        let rels = [
            ("associativity", p.then(&p.wh(&x, &mu, &e), &mu), p.then(&p.wh(&e, &mu, &x), &mu)),
            ("left unit", p.then(&p.wh(&e, &eta, &x), &mu), p.id(&x)),
            ("right unit", p.then(&p.wh(&x, &eta, &e), &mu), p.id(&x)),
        ];
        for (name, l, r) in rels {
            p.add_relation(format!("{m} {name}"), l, r).expect("parallel");
        }
    }
    let (s, t, g) = (p.p(&["s"]), p.p(&["t"]), p.gen("gamma"));
    let (es, ms, et, mt) = (p.gen("eta_s"), p.gen("mu_s"), p.gen("eta_t"), p.gen("mu_t"));
    let rels = [
        ("unit of s", p.then(&p.wh(&t, &es, &e), &g), p.wh(&e, &es, &t)),
        ("unit of t", p.then(&p.wh(&e, &et, &s), &g), p.wh(&s, &et, &e)),
        (
            "multiplication of s",
            p.then(&p.wh(&t, &ms, &e), &g),
            p.chain(&[p.wh(&e, &g, &s), p.wh(&s, &g, &e), p.wh(&e, &ms, &t)]),
        ),
        (
            "multiplication of t",
            p.then(&p.wh(&e, &mt, &s), &g),
            p.chain(&[p.wh(&t, &g, &e), p.wh(&e, &g, &t), p.wh(&s, &mt, &e)]),
        ),
    ];
    for (name, l, r) in rels {
        p.add_relation(name, l, r).expect("parallel");
    }
    p.oracle = Some(Oracle::WireTracking);
    p
}

/// The assignment out of `Dist` given by a law.
pub fn dist_functor<H: TwoCategory>(d: &DistLawData<H>) -> PresentedFunctor<H> {
    PresentedFunctor {
        obj: vec![d.s.object.clone()],
        one: vec![d.t.t.clone(), d.s.t.clone()],
        two: vec![d.t.eta.clone(), d.t.mu.clone(), d.s.eta.clone(), d.s.mu.clone(), d.gamma.clone()],
    }
}

/// The relation audit of the assignment out of `Dist`, next to the direct
/// check, with their agreement recorded.
pub fn dist_audit<H: TwoCategory>(h: &H, d: &DistLawData<H>) -> Result<Report, HostError> {
    let p = dist_presentation();
    let audit = check_presented_functor(&p, h, &dist_functor(d)).map_err(|e| HostError::new(e.to_string()))?;
    let mut direct = premises(h, d)?;
    direct.absorb("", check_distributive_law(h, d)?);
    let (a, b) = (audit.passed(), direct.passed());
    let mut r = Report::new("Dist audit");
    // naturality is not a relation of the presentation; it is recorded apart
    let natural = h.check_two(&d.gamma);
    r.absorb("presented: ", audit);
    r.absorb("direct: ", direct);
    let agree = if natural.is_some() { !b } else { a == b };
    r.push("verdicts agree", if agree { Verdict::Equal(crate::verdict::Witness::Componentwise) } else { Verdict::NotEqual("audit and direct check disagree".into()) });
    Ok(r)
}

/// The maybe-over-powerset law on finite sets: `gamma` sends a subset `S`
/// of `X` to `S` and the point to `{*}`.
pub mod examples {
    use super::*;
    use crate::fincat::{FinSet, SetFunctor, SetNat};
    use crate::monads::examples::{identity_comonad, identity_monad, maybe, powerset, product_comonad};

    use SetFunctor::{Maybe, Powerset};

    /// `gamma_n` on `P(n) + 1 -> P(n + 1)` from a rule on subsets.
    pub fn maybe_powerset_gamma(label: &str, on_subset: impl Fn(usize, usize) -> usize + 'static, on_point: impl Fn(usize) -> usize + 'static) -> SetNat {
        SetNat::new(&[Powerset, Maybe], &[Maybe, Powerset], label, move |n, e| {
            if e == 1 << n {
                on_point(n)
            } else {
                on_subset(n, e)
            }
        })
    }

    pub fn maybe_powerset_law() -> DistLawData<FinSet> {
        DistLawData { s: maybe(), t: powerset(), gamma: maybe_powerset_gamma("gamma", |_, s| s, |n| 1 << n) }
    }

    /// Same as the law above but with the point sent to the empty set.
    pub fn maybe_powerset_law_empty_point() -> DistLawData<FinSet> {
        DistLawData { s: maybe(), t: powerset(), gamma: maybe_powerset_gamma("gamma*empty", |_, s| s, |_| 0) }
    }

    pub fn identity_law() -> DistLawData<FinSet> {
        DistLawData { s: identity_monad(), t: identity_monad(), gamma: SetNat::identity(&[]) }
    }

    /// Maybe over the product comonad: `(x, e) -> (x, e)`, `* -> (*, 0)`.
    pub fn maybe_over_product(e: usize) -> MixedDistLawData<FinSet> {
        let w = product_comonad(e);
        let gamma = SetNat::new(&[SetFunctor::Times(e), Maybe], &[Maybe, SetFunctor::Times(e)], "pair", move |n, p| {
            if p == n * e {
                n * e
            } else {
                p
            }
        });
        MixedDistLawData { t: maybe(), w, gamma }
    }

    pub fn maybe_over_identity() -> MixedDistLawData<FinSet> {
        MixedDistLawData { t: maybe(), w: identity_comonad(), gamma: SetNat::identity(&[Maybe]) }
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;
    use crate::fincat::FinSet;
    use crate::presentation::DEFAULT_BUDGET;

    #[test]
    fn maybe_over_powerset_is_a_law() {
        let h = FinSet::default();
        let r = check_distributive_law(&h, &maybe_powerset_law()).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let r = beck_equivalence_check(&h, &maybe_powerset_law()).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert!(beck_equivalence_check(&h, &identity_law()).unwrap().passed());
    }

    #[test]
    fn empty_point_breaks_the_unit_axiom_of_t() {
        let h = FinSet::default();
        let r = check_distributive_law(&h, &maybe_powerset_law_empty_point()).unwrap();
        assert!(r.verdict_of("unit of t").unwrap().is_not_equal());
        assert!(r.verdict_of("unit of s").unwrap().is_equal());
        assert!(compose_monads(&h, &maybe_powerset_law_empty_point()).is_err());
    }

    #[test]
    fn composite_is_powerset_of_maybe() {
        let h = FinSet::default();
        let m = compose_monads(&h, &maybe_powerset_law()).unwrap();
        assert_eq!(h.show_one(&m.t), "PM");
        let id = compose_monads(&h, &identity_law()).unwrap();
        assert!(id.t.is_empty());
    }

    #[test]
    fn mixed_laws() {
        let h = FinSet::default();
        for m in [maybe_over_identity(), maybe_over_product(2)] {
            let r = check_mixed_distributive_law(&h, &m).unwrap();
            assert!(r.passed(), "{}", r.render_text());
        }
    }

    #[test]
    fn dist_presentation_shape_and_audit() {
        let p = dist_presentation();
        p.validate().unwrap();
        assert_eq!(p.computad.one.len(), 2);
        assert_eq!(p.computad.two.len(), 5);
        assert_eq!(p.relations.len(), 10);
        let h = FinSet::default();
        assert!(dist_audit(&h, &maybe_powerset_law()).unwrap().passed());
        let bad = dist_audit(&h, &maybe_powerset_law_empty_point()).unwrap();
        assert!(bad.refuted());
        assert!(bad.verdict_of("verdicts agree").unwrap().is_equal());
        // one relation checked by search, without the oracle
        let mut q = p.clone();
        q.oracle = None;
        let r = &q.relations[6];
        let v = q.two_cells_equal(&r.lhs, &r.rhs, DEFAULT_BUDGET).unwrap();
        assert!(v.is_equal());
    }
}
