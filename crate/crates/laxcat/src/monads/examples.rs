//! Standard monads, comonads and morphisms used across the crate.

use std::sync::Arc;

use super::{AdjunctionData, ComonadData, LaxMonadMorphism, MonadData};
use crate::fincat::sets::members;
use crate::fincat::{FinCat, FinCategory, FinFunctor, FinNatTrans, FinSet, SetFunctor, SetNat};
use crate::host::TwoCategory;

use SetFunctor::{Maybe, Powerset};

pub fn powerset() -> MonadData<FinSet> {
    MonadData {
        name: "powerset".into(),
        object: (),
        t: vec![Powerset],
        mu: SetNat::new(&[Powerset, Powerset], &[Powerset], "union", |n, a| {
            members(a, 1 << n).fold(0, |acc, s| acc | s)
        }),
        eta: SetNat::new(&[], &[Powerset], "singleton", |_, x| 1 << x),
    }
}

/// `X + 1`, with the point of `X` written `*`.
pub fn maybe() -> MonadData<FinSet> {
    MonadData {
        name: "maybe".into(),
        object: (),
        t: vec![Maybe],
        mu: SetNat::new(&[Maybe, Maybe], &[Maybe], "flatten", |n, x| x.min(n)),
        eta: SetNat::new(&[], &[Maybe], "just", |_, x| x),
    }
}

pub fn identity_monad() -> MonadData<FinSet> {
    MonadData { name: "identity".into(), object: (), t: vec![], mu: SetNat::identity(&[]), eta: SetNat::identity(&[]) }
}

/// Powerset with multiplication the intersection of members.
pub fn powerset_with_intersection() -> MonadData<FinSet> {
    let mut m = powerset();
    m.name = "powerset with intersection".into();
    m.mu = SetNat::new(&[Powerset, Powerset], &[Powerset], "intersection", |n, a| {
        members(a, 1 << n).fold((1 << n) - 1, |acc, s| acc & s)
    });
    m
}

/// `X * E` with `(x, e) -> x` and `(x, e) -> ((x, e), e)`.
pub fn product_comonad(e: usize) -> ComonadData<FinSet> {
    let w = vec![SetFunctor::Times(e)];
    ComonadData {
        name: format!("product with {e}"),
        object: (),
        delta: SetNat::new(&w, &[SetFunctor::Times(e), SetFunctor::Times(e)], "duplicate", move |_, p| p * e + p % e),
        eps: SetNat::new(&w, &[], "project", move |_, p| p / e),
        w,
    }
}

pub fn identity_comonad() -> ComonadData<FinSet> {
    ComonadData { name: "identity".into(), object: (), w: vec![], delta: SetNat::identity(&[]), eps: SetNat::identity(&[]) }
}

/// The lax morphism from powerset to maybe over the identity functor:
/// `x -> {x}` and `* -> {}`.
pub fn maybe_to_powerset() -> LaxMonadMorphism<FinSet> {
    LaxMonadMorphism {
        t: powerset(),
        s: maybe(),
        f: vec![],
        fbar: SetNat::new(&[Maybe], &[Powerset], "support", |n, x| if x == n { 0 } else { 1 << x }),
    }
}

/// As above but with `*` sent to the full set, which is not natural.
pub fn maybe_to_powerset_full() -> LaxMonadMorphism<FinSet> {
    let mut m = maybe_to_powerset();
    m.fbar = SetNat::new(&[Maybe], &[Powerset], "support-full", |n, x| if x == n { (1 << n) - 1 } else { 1 << x });
    m
}

/// The monad on the chain `0 < 1` sending both objects to `1`.
pub fn chain_monad() -> MonadData<FinCat> {
    let a = Arc::new(FinCategory::chain(2));
    let top = a.id(1);
    let t = FinFunctor { src: a.clone(), tgt: a.clone(), ob: vec![1, 1], mor: vec![top; a.len()] };
    let below = a.morphism_index("0<1").expect("chain has its arrow");
    MonadData {
        name: "chain closure".into(),
        object: a.clone(),
        mu: FinNatTrans::identity(&t),
        eta: FinNatTrans { src: FinFunctor::identity(&a), tgt: t.clone(), comp: vec![below, top] },
        t,
    }
}

/// A closure operator on a poset given as a finite category: `t(x)` must
/// be the least fixed object above `x`.
pub fn closure_monad(a: &Arc<FinCategory>, name: &str, up: &[usize]) -> MonadData<FinCat> {
    let arrow = |x: usize, y: usize| a.hom(x, y).first().copied().expect("closure goes upwards");
    let ob = up.to_vec();
    let mor = (0..a.len()).map(|f| arrow(up[a.src(f)], up[a.tgt(f)])).collect();
    let t = FinFunctor { src: a.clone(), tgt: a.clone(), ob, mor };
    let tt = t.then(&t);
    MonadData {
        name: name.into(),
        object: a.clone(),
        mu: FinNatTrans { src: tt, tgt: t.clone(), comp: (0..up.len()).map(|x| arrow(up[up[x]], up[x])).collect() },
        eta: FinNatTrans { src: FinFunctor::identity(a), tgt: t.clone(), comp: (0..up.len()).map(|x| arrow(x, up[x])).collect() },
        t,
    }
}

pub fn identity_monad_on(a: &Arc<FinCategory>) -> MonadData<FinCat> {
    let t = FinFunctor::identity(a);
    MonadData { name: format!("identity on {}", a.name), object: a.clone(), mu: FinNatTrans::identity(&t), eta: FinNatTrans::identity(&t), t }
}

/// The finite-category monads shipped as a test corpus, on hosts with at
/// most three objects.
pub fn fincat_corpus() -> Vec<MonadData<FinCat>> {
    let c2 = Arc::new(FinCategory::chain(2));
    let c3 = Arc::new(FinCategory::chain(3));
    let d2 = Arc::new(FinCategory::discrete("D2", &["p", "q"]));
    vec![
        identity_monad_on(&Arc::new(FinCategory::terminal())),
        identity_monad_on(&c2),
        identity_monad_on(&d2),
        chain_monad(),
        closure_monad(&c3, "top closure", &[2, 2, 2]),
        closure_monad(&c3, "upper closure", &[1, 1, 2]),
        closure_monad(&c3, "split closure", &[0, 2, 2]),
    ]
}

pub fn identity_adjunction<H: TwoCategory>(h: &H, a: &H::Obj) -> AdjunctionData<H> {
    let one = h.identity(a);
    AdjunctionData { f: one.clone(), g: one.clone(), eta: h.identity2(&one), eps: h.identity2(&one) }
}
