//! Monads, comonads and adjunctions inside an arbitrary host, lax and colax
//! monad morphisms, the augmented simplex category, and the presented
//! 2-categories `Mnd` and `Adj`.

pub mod delta;
pub mod examples;
pub mod lift;
pub mod presentations;

use crate::host::{has_boundary, HostError, TwoCategory};
use crate::report::Report;
use crate::verdict::Verdict;

pub use delta::{delta_a_compose, delta_a_hom, delta_a_tensor, DeltaHost, MonotoneMap};
pub use presentations::{adj_presentation, comonad_presentation, mnd_delta_a_iso_check, mnd_in_adj_check, mnd_presentation};

#[derive(Clone, Debug)]
pub struct MonadData<H: TwoCategory> {
    pub name: String,
    pub object: H::Obj,
    pub t: H::One,
    /// `[t, t] => [t]`
    pub mu: H::Two,
    /// `[] => [t]`
    pub eta: H::Two,
}

#[derive(Clone, Debug)]
pub struct ComonadData<H: TwoCategory> {
    pub name: String,
    pub object: H::Obj,
    pub w: H::One,
    /// `[w] => [w, w]`
    pub delta: H::Two,
    /// `[w] => []`
    pub eps: H::Two,
}

/// `f: A -> B` left adjoint to `g: B -> A`.
#[derive(Clone, Debug)]
pub struct AdjunctionData<H: TwoCategory> {
    pub f: H::One,
    pub g: H::One,
    /// `[] => [f, g]` at `A`
    pub eta: H::Two,
    /// `[g, f] => []` at `B`
    pub eps: H::Two,
}

/// A lax morphism `(A, t) -> (B, s)`: a 1-cell `f: A -> B` with
/// `fbar: [f, s] => [t, f]`.
#[derive(Clone, Debug)]
pub struct LaxMonadMorphism<H: TwoCategory> {
    pub t: MonadData<H>,
    pub s: MonadData<H>,
    pub f: H::One,
    pub fbar: H::Two,
}

/// A colax morphism `(A, t) -> (B, s)`: a 1-cell `f: A -> B` with
/// `ftilde: [t, f] => [f, s]`.
#[derive(Clone, Debug)]
pub struct ColaxMonadMorphism<H: TwoCategory> {
    pub t: MonadData<H>,
    pub s: MonadData<H>,
    pub f: H::One,
    pub ftilde: H::Two,
}

/// Records `lhs = rhs` for two possibly ill-formed composites.
pub(crate) fn law<H: TwoCategory>(
    h: &H,
    r: &mut Report,
    name: impl Into<String>,
    lhs: Result<H::Two, HostError>,
    rhs: Result<H::Two, HostError>,
) {
    let verdict = match (lhs, rhs) {
        (Ok(a), Ok(b)) => h.compare(&a, &b),
        (Err(e), _) | (_, Err(e)) => Verdict::NotEqual(format!("ill-formed composite: {e}")),
    };
    r.push(name, verdict);
}

pub(crate) fn expect_boundary<H: TwoCategory>(h: &H, what: &str, a: &H::Two, src: &H::One, tgt: &H::One) -> Result<(), HostError> {
    if has_boundary(h, a, src, tgt) {
        Ok(())
    } else {
        Err(HostError::new(format!(
            "{what} is {} but should go {} => {}",
            h.show_two(a),
            h.show_one(src),
            h.show_one(tgt)
        )))
    }
}

pub(crate) fn well_formed<H: TwoCategory>(h: &H, r: &mut Report, cells: &[(&str, &H::Two)]) {
    for (name, a) in cells {
        if let Some(why) = h.check_two(a) {
            r.push(format!("{name} well-formed"), Verdict::NotEqual(why));
        }
    }
}

/// Vertical composite of possibly ill-formed pieces.
pub(crate) fn seq<H: TwoCategory>(h: &H, cells: &[Result<H::Two, HostError>]) -> Result<H::Two, HostError> {
    let mut it = cells.iter();
    let mut acc = it.next().ok_or_else(|| HostError::new("empty composite"))?.clone()?;
    for c in it {
        acc = h.vertical(&acc, &c.clone()?)?;
    }
    Ok(acc)
}

fn unit_of<H: TwoCategory>(h: &H, m: &MonadData<H>) -> H::One {
    h.identity(&m.object)
}

pub fn check_monad<H: TwoCategory>(h: &H, m: &MonadData<H>) -> Result<Report, HostError> {
    let one = unit_of(h, m);
    let tt = h.compose(&m.t, &m.t)?;
    expect_boundary(h, "mu", &m.mu, &tt, &m.t)?;
    expect_boundary(h, "eta", &m.eta, &one, &m.t)?;
    let mut r = Report::new(format!("monad {}", m.name));
    well_formed(h, &mut r, &[("mu", &m.mu), ("eta", &m.eta)]);
    let mu = || Ok(m.mu.clone());
    law(
        h,
        &mut r,
        "associativity",
        seq(h, &[h.whisker(&m.t, &m.mu, &one), mu()]),
        seq(h, &[h.whisker(&one, &m.mu, &m.t), mu()]),
    );
    law(h, &mut r, "left unit", seq(h, &[h.whisker(&one, &m.eta, &m.t), mu()]), Ok(h.identity2(&m.t)));
    law(h, &mut r, "right unit", seq(h, &[h.whisker(&m.t, &m.eta, &one), mu()]), Ok(h.identity2(&m.t)));
    Ok(r)
}

pub fn check_comonad<H: TwoCategory>(h: &H, w: &ComonadData<H>) -> Result<Report, HostError> {
    let one = h.identity(&w.object);
    let ww = h.compose(&w.w, &w.w)?;
    expect_boundary(h, "delta", &w.delta, &w.w, &ww)?;
    expect_boundary(h, "epsilon", &w.eps, &w.w, &one)?;
    let mut r = Report::new(format!("comonad {}", w.name));
    well_formed(h, &mut r, &[("delta", &w.delta), ("epsilon", &w.eps)]);
    let d = || Ok(w.delta.clone());
    law(
        h,
        &mut r,
        "coassociativity",
        seq(h, &[d(), h.whisker(&w.w, &w.delta, &one)]),
        seq(h, &[d(), h.whisker(&one, &w.delta, &w.w)]),
    );
    law(h, &mut r, "left counit", seq(h, &[d(), h.whisker(&one, &w.eps, &w.w)]), Ok(h.identity2(&w.w)));
    law(h, &mut r, "right counit", seq(h, &[d(), h.whisker(&w.w, &w.eps, &one)]), Ok(h.identity2(&w.w)));
    Ok(r)
}

pub fn check_adjunction<H: TwoCategory>(h: &H, a: &AdjunctionData<H>) -> Result<Report, HostError> {
    let (oa, ob) = (h.one_src(&a.f), h.one_tgt(&a.f));
    if h.one_src(&a.g) != ob || h.one_tgt(&a.g) != oa {
        return Err(HostError::new("the two 1-cells do not go back and forth"));
    }
    let (ia, ib) = (h.identity(&oa), h.identity(&ob));
    expect_boundary(h, "unit", &a.eta, &ia, &h.compose(&a.f, &a.g)?)?;
    expect_boundary(h, "counit", &a.eps, &h.compose(&a.g, &a.f)?, &ib)?;
    let mut r = Report::new("adjunction");
    well_formed(h, &mut r, &[("unit", &a.eta), ("counit", &a.eps)]);
    law(
        h,
        &mut r,
        "triangle on f",
        seq(h, &[h.whisker(&ia, &a.eta, &a.f), h.whisker(&a.f, &a.eps, &ib)]),
        Ok(h.identity2(&a.f)),
    );
    law(
        h,
        &mut r,
        "triangle on g",
        seq(h, &[h.whisker(&a.g, &a.eta, &ia), h.whisker(&ib, &a.eps, &a.g)]),
        Ok(h.identity2(&a.g)),
    );
    Ok(r)
}

/// `(f;g, f.eps.g, eta)`; the result is checked before it is returned.
pub fn induced_monad<H: TwoCategory>(h: &H, a: &AdjunctionData<H>) -> Result<MonadData<H>, HostError> {
    let adj = check_adjunction(h, a)?;
    if adj.refuted() {
        return Err(HostError::new(format!("not an adjunction: {}", adj.failures()[0].verdict)));
    }
    let m = MonadData {
        name: "induced".into(),
        object: h.one_src(&a.f),
        t: h.compose(&a.f, &a.g)?,
        mu: h.whisker(&a.f, &a.eps, &a.g)?,
        eta: a.eta.clone(),
    };
    let laws = check_monad(h, &m)?;
    assert!(!laws.refuted(), "an adjunction induced a non-monad");
    Ok(m)
}

fn check_ends<H: TwoCategory>(h: &H, t: &MonadData<H>, s: &MonadData<H>, f: &H::One) -> Result<(), HostError> {
    if h.one_src(f) != t.object || h.one_tgt(f) != s.object {
        return Err(HostError::new("the underlying 1-cell does not join the two monads"));
    }
    Ok(())
}

pub fn check_lax_monad_morphism<H: TwoCategory>(h: &H, x: &LaxMonadMorphism<H>) -> Result<Report, HostError> {
    let (t, s, f) = (&x.t, &x.s, &x.f);
    check_ends(h, t, s, f)?;
    let (ia, ib) = (h.identity(&t.object), h.identity(&s.object));
    expect_boundary(h, "fbar", &x.fbar, &h.compose(f, &s.t)?, &h.compose(&t.t, f)?)?;
    let mut r = Report::new("lax monad morphism");
    well_formed(h, &mut r, &[("fbar", &x.fbar)]);
    law(
        h,
        &mut r,
        "unit",
        seq(h, &[h.whisker(f, &s.eta, &ib), Ok(x.fbar.clone())]),
        h.whisker(&ia, &t.eta, f),
    );
    law(
        h,
        &mut r,
        "multiplication",
        seq(h, &[h.whisker(f, &s.mu, &ib), Ok(x.fbar.clone())]),
        seq(h, &[h.whisker(&ia, &x.fbar, &s.t), h.whisker(&t.t, &x.fbar, &ib), h.whisker(&ia, &t.mu, f)]),
    );
    Ok(r)
}

pub fn check_colax_monad_morphism<H: TwoCategory>(h: &H, x: &ColaxMonadMorphism<H>) -> Result<Report, HostError> {
    let (t, s, f) = (&x.t, &x.s, &x.f);
    check_ends(h, t, s, f)?;
    let (ia, ib) = (h.identity(&t.object), h.identity(&s.object));
    expect_boundary(h, "ftilde", &x.ftilde, &h.compose(&t.t, f)?, &h.compose(f, &s.t)?)?;
    let mut r = Report::new("colax monad morphism");
    well_formed(h, &mut r, &[("ftilde", &x.ftilde)]);
    law(
        h,
        &mut r,
        "unit",
        seq(h, &[h.whisker(&ia, &t.eta, f), Ok(x.ftilde.clone())]),
        h.whisker(f, &s.eta, &ib),
    );
    law(
        h,
        &mut r,
        "multiplication",
        seq(h, &[h.whisker(&ia, &t.mu, f), Ok(x.ftilde.clone())]),
        seq(h, &[h.whisker(&t.t, &x.ftilde, &ib), h.whisker(&ia, &x.ftilde, &s.t), h.whisker(f, &s.mu, &ib)]),
    );
    Ok(r)
}

/// A 2-cell `sigma: f => g` between lax morphisms with the same monads.
pub fn check_lax_monad_2cell<H: TwoCategory>(
    h: &H,
    x: &LaxMonadMorphism<H>,
    y: &LaxMonadMorphism<H>,
    sigma: &H::Two,
) -> Result<Report, HostError> {
    expect_boundary(h, "sigma", sigma, &x.f, &y.f)?;
    let (ia, ib) = (h.identity(&x.t.object), h.identity(&x.s.object));
    let mut r = Report::new("lax monad 2-cell");
    well_formed(h, &mut r, &[("sigma", sigma)]);
    law(
        h,
        &mut r,
        "compatibility",
        seq(h, &[h.whisker(&ia, sigma, &x.s.t), Ok(y.fbar.clone())]),
        seq(h, &[Ok(x.fbar.clone()), h.whisker(&x.t.t, sigma, &ib)]),
    );
    Ok(r)
}

pub fn check_colax_monad_2cell<H: TwoCategory>(
    h: &H,
    x: &ColaxMonadMorphism<H>,
    y: &ColaxMonadMorphism<H>,
    sigma: &H::Two,
) -> Result<Report, HostError> {
    expect_boundary(h, "sigma", sigma, &x.f, &y.f)?;
    let (ia, ib) = (h.identity(&x.t.object), h.identity(&x.s.object));
    let mut r = Report::new("colax monad 2-cell");
    well_formed(h, &mut r, &[("sigma", sigma)]);
    law(
        h,
        &mut r,
        "compatibility",
        seq(h, &[Ok(x.ftilde.clone()), h.whisker(&ia, sigma, &x.s.t)]),
        seq(h, &[h.whisker(&x.t.t, sigma, &ib), Ok(y.ftilde.clone())]),
    );
    Ok(r)
}

pub fn identity_lax<H: TwoCategory>(h: &H, m: &MonadData<H>) -> LaxMonadMorphism<H> {
    LaxMonadMorphism { t: m.clone(), s: m.clone(), f: h.identity(&m.object), fbar: h.identity2(&m.t) }
}

pub fn identity_colax<H: TwoCategory>(h: &H, m: &MonadData<H>) -> ColaxMonadMorphism<H> {
    ColaxMonadMorphism { t: m.clone(), s: m.clone(), f: h.identity(&m.object), ftilde: h.identity2(&m.t) }
}

/// `x` then `y`, with structure `[f, g, r] => [f, s, g] => [t, f, g]`.
pub fn compose_lax<H: TwoCategory>(h: &H, x: &LaxMonadMorphism<H>, y: &LaxMonadMorphism<H>) -> Result<LaxMonadMorphism<H>, HostError> {
    let ic = h.identity(&y.s.object);
    let ia = h.identity(&x.t.object);
    let fbar = h.vertical(&h.whisker(&x.f, &y.fbar, &ic)?, &h.whisker(&ia, &x.fbar, &y.f)?)?;
    Ok(LaxMonadMorphism { t: x.t.clone(), s: y.s.clone(), f: h.compose(&x.f, &y.f)?, fbar })
}

/// `x` then `y`, with structure `[t, f, g] => [f, s, g] => [f, g, r]`.
pub fn compose_colax<H: TwoCategory>(h: &H, x: &ColaxMonadMorphism<H>, y: &ColaxMonadMorphism<H>) -> Result<ColaxMonadMorphism<H>, HostError> {
    let ic = h.identity(&y.s.object);
    let ia = h.identity(&x.t.object);
    let ftilde = h.vertical(&h.whisker(&ia, &x.ftilde, &y.f)?, &h.whisker(&x.f, &y.ftilde, &ic)?)?;
    Ok(ColaxMonadMorphism { t: x.t.clone(), s: y.s.clone(), f: h.compose(&x.f, &y.f)?, ftilde })
}

/// Checks that `(x.f, mu, eta)` is a monad in the 2-category of lax
/// morphisms: `x` is an endomorphism, `mu: x;x => x` and `eta: id => x` are
/// lax 2-cells, and the underlying monad laws hold.
pub fn check_monad_in_lax<H: TwoCategory>(h: &H, x: &LaxMonadMorphism<H>, mu: &H::Two, eta: &H::Two) -> Result<Report, HostError> {
    let mut r = Report::new("monad among lax morphisms");
    r.absorb("morphism: ", check_lax_monad_morphism(h, x)?);
    r.absorb("mu: ", check_lax_monad_2cell(h, &compose_lax(h, x, x)?, x, mu)?);
    r.absorb("eta: ", check_lax_monad_2cell(h, &identity_lax(h, &x.t), x, eta)?);
    let m = MonadData { name: "underlying".into(), object: x.t.object.clone(), t: x.f.clone(), mu: mu.clone(), eta: eta.clone() };
    r.absorb("underlying ", check_monad(h, &m)?);
    Ok(r)
}

pub fn check_monad_in_colax<H: TwoCategory>(h: &H, x: &ColaxMonadMorphism<H>, mu: &H::Two, eta: &H::Two) -> Result<Report, HostError> {
    let mut r = Report::new("monad among colax morphisms");
    r.absorb("morphism: ", check_colax_monad_morphism(h, x)?);
    r.absorb("mu: ", check_colax_monad_2cell(h, &compose_colax(h, x, x)?, x, mu)?);
    r.absorb("eta: ", check_colax_monad_2cell(h, &identity_colax(h, &x.t), x, eta)?);
    let m = MonadData { name: "underlying".into(), object: x.t.object.clone(), t: x.f.clone(), mu: mu.clone(), eta: eta.clone() };
    r.absorb("underlying ", check_monad(h, &m)?);
    Ok(r)
}

/// Checks that `(x.f, delta, eps)` is a comonad among lax morphisms, the
/// encoding of a monad-over-comonad law.
pub fn check_comonad_in_lax<H: TwoCategory>(h: &H, x: &LaxMonadMorphism<H>, delta: &H::Two, eps: &H::Two) -> Result<Report, HostError> {
    let mut r = Report::new("comonad among lax morphisms");
    r.absorb("morphism: ", check_lax_monad_morphism(h, x)?);
    r.absorb("delta: ", check_lax_monad_2cell(h, x, &compose_lax(h, x, x)?, delta)?);
    r.absorb("epsilon: ", check_lax_monad_2cell(h, x, &identity_lax(h, &x.t), eps)?);
    let w = ComonadData { name: "underlying".into(), object: x.t.object.clone(), w: x.f.clone(), delta: delta.clone(), eps: eps.clone() };
    r.absorb("underlying ", check_comonad(h, &w)?);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;
    use crate::fincat::{FinCat, FinSet};

    #[test]
    fn standard_set_monads_pass() {
        let h = FinSet::default();
        for m in [powerset(), maybe(), identity_monad()] {
            let r = check_monad(&h, &m).unwrap();
            assert!(r.passed(), "{}", r.render_text());
        }
    }

    #[test]
    fn intersection_multiplication_breaks_a_unit_law() {
        let h = FinSet::default();
        let r = check_monad(&h, &powerset_with_intersection()).unwrap();
        assert!(r.refuted());
        assert!(r.verdict_of("left unit").unwrap().is_not_equal() || r.verdict_of("right unit").unwrap().is_not_equal());
    }

    #[test]
    fn maybe_to_powerset_is_lax_and_full_set_variant_is_not() {
        let h = FinSet::default();
        assert!(check_lax_monad_morphism(&h, &maybe_to_powerset()).unwrap().passed());
        let bad = check_lax_monad_morphism(&h, &maybe_to_powerset_full()).unwrap();
        assert!(bad.refuted(), "{}", bad.render_text());
    }

    #[test]
    fn identity_morphisms_are_lax_and_colax() {
        let h = FinSet::default();
        let m = powerset();
        assert!(check_lax_monad_morphism(&h, &identity_lax(&h, &m)).unwrap().passed());
        assert!(check_colax_monad_morphism(&h, &identity_colax(&h, &m)).unwrap().passed());
    }

    #[test]
    fn chain_monad_and_its_adjunctions() {
        let h = FinCat;
        let m = chain_monad();
        assert!(check_monad(&h, &m).unwrap().passed());
        let adj = identity_adjunction(&h, &m.object);
        let induced = induced_monad(&h, &adj).unwrap();
        assert!(h.compare(&induced.mu, &h.identity2(&induced.t)).is_equal());
    }
}
