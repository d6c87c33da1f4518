//! Monads on concrete finite categories, and what can be built from them by
//! enumeration: algebras, free algebras, modules over a probe category.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use super::category::{FinCategory, Morphism};
use super::functor::{all_functors, all_nat_trans, functor_category, FinFunctor, FinNatTrans};
use super::host::FinCat;
use super::sets::{all_functions, fmap_of, size_of, FinSet};
use crate::monads::{AdjunctionData, MonadData};
use crate::report::Report;

/// A monad on a category whose morphisms can be enumerated hom by hom. The
/// base objects are a finite list; `t` may leave it.
pub trait MonadOnCat {
    type Ob: Clone + Eq + Hash + Ord + Debug;
    type Mor: Clone + Eq + Hash + Ord + Debug;

    fn name(&self) -> String;
    fn objects(&self) -> Vec<Self::Ob>;
    fn hom(&self, x: &Self::Ob, y: &Self::Ob) -> Vec<Self::Mor>;
    fn dom(&self, f: &Self::Mor) -> Self::Ob;
    fn cod(&self, f: &Self::Mor) -> Self::Ob;
    /// `f` then `g`.
    fn then(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn id(&self, x: &Self::Ob) -> Self::Mor;
    fn t_ob(&self, x: &Self::Ob) -> Self::Ob;
    fn t_mor(&self, f: &Self::Mor) -> Self::Mor;
    fn eta(&self, x: &Self::Ob) -> Self::Mor;
    fn mu(&self, x: &Self::Ob) -> Self::Mor;
    fn show_ob(&self, x: &Self::Ob) -> String {
        format!("{x:?}")
    }
    fn show_mor(&self, f: &Self::Mor) -> String {
        format!("{f:?}")
    }
}

/// A function between skeletal finite sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Func {
    pub dom: usize,
    pub cod: usize,
    pub map: Vec<usize>,
}

/// A monad on finite sets, restricted to base sets of size at most `bound`.
#[derive(Clone, Debug)]
pub struct SetMonad {
    pub m: MonadData<FinSet>,
    pub bound: usize,
}

impl SetMonad {
    pub fn new(m: MonadData<FinSet>, bound: usize) -> Self {
        SetMonad { m, bound }
    }
}

impl MonadOnCat for SetMonad {
    type Ob = usize;
    type Mor = Func;

    fn name(&self) -> String {
        format!("{} on sets of size <= {}", self.m.name, self.bound)
    }

    fn objects(&self) -> Vec<usize> {
        (0..=self.bound).collect()
    }

    fn hom(&self, x: &usize, y: &usize) -> Vec<Func> {
        all_functions(*x, *y).into_iter().map(|map| Func { dom: *x, cod: *y, map }).collect()
    }

    fn dom(&self, f: &Func) -> usize {
        f.dom
    }

    fn cod(&self, f: &Func) -> usize {
        f.cod
    }

    fn then(&self, f: &Func, g: &Func) -> Func {
        Func { dom: f.dom, cod: g.cod, map: f.map.iter().map(|&x| g.map[x]).collect() }
    }

    fn id(&self, x: &usize) -> Func {
        Func { dom: *x, cod: *x, map: (0..*x).collect() }
    }

    fn t_ob(&self, x: &usize) -> usize {
        size_of(&self.m.t, *x).expect("monad value too large to materialise")
    }

    fn t_mor(&self, f: &Func) -> Func {
        Func { dom: self.t_ob(&f.dom), cod: self.t_ob(&f.cod), map: fmap_of(&self.m.t, f.dom, f.cod, &f.map) }
    }

    fn eta(&self, x: &usize) -> Func {
        Func { dom: *x, cod: self.t_ob(x), map: self.m.eta.component(*x).expect("materialisable") }
    }

    fn mu(&self, x: &usize) -> Func {
        let tx = self.t_ob(x);
        Func { dom: self.t_ob(&tx), cod: tx, map: self.m.mu.component(*x).expect("materialisable") }
    }

    fn show_mor(&self, f: &Func) -> String {
        format!("{:?}", f.map)
    }
}

/// A monad on a finite category in the finite-category host.
#[derive(Clone, Debug)]
pub struct CatMonad {
    pub m: MonadData<FinCat>,
}

impl CatMonad {
    pub fn new(m: MonadData<FinCat>) -> Self {
        CatMonad { m }
    }

    fn cat(&self) -> &FinCategory {
        &self.m.object
    }
}

impl MonadOnCat for CatMonad {
    type Ob = usize;
    type Mor = usize;

    fn name(&self) -> String {
        self.m.name.clone()
    }

    fn objects(&self) -> Vec<usize> {
        (0..self.cat().objects.len()).collect()
    }

    fn hom(&self, x: &usize, y: &usize) -> Vec<usize> {
        self.cat().hom(*x, *y).to_vec()
    }

    fn dom(&self, f: &usize) -> usize {
        self.cat().src(*f)
    }

    fn cod(&self, f: &usize) -> usize {
        self.cat().tgt(*f)
    }

    fn then(&self, f: &usize, g: &usize) -> usize {
        self.cat().then(*f, *g)
    }

    fn id(&self, x: &usize) -> usize {
        self.cat().id(*x)
    }

    fn t_ob(&self, x: &usize) -> usize {
        self.m.t.ob[*x]
    }

    fn t_mor(&self, f: &usize) -> usize {
        self.m.t.mor[*f]
    }

    fn eta(&self, x: &usize) -> usize {
        self.m.eta.comp[*x]
    }

    fn mu(&self, x: &usize) -> usize {
        self.m.mu.comp[*x]
    }

    fn show_ob(&self, x: &usize) -> String {
        self.cat().objects[*x].clone()
    }

    fn show_mor(&self, f: &usize) -> String {
        self.cat().morphisms[*f].name.clone()
    }
}

/// The base objects and every morphism between them as a finite category.
pub struct BaseCategory<M: MonadOnCat> {
    pub cat: Arc<FinCategory>,
    pub obs: Vec<M::Ob>,
    pub mors: Vec<M::Mor>,
    index: HashMap<M::Mor, usize>,
}

impl<M: MonadOnCat> BaseCategory<M> {
    pub fn morphism(&self, f: &M::Mor) -> Option<usize> {
        self.index.get(f).copied()
    }
}

/// Builds a finite category from objects and a morphism enumeration,
/// composing through a lookup table.
fn assemble<O, F>(
    name: String,
    objects: &[O],
    show_ob: impl Fn(&O) -> String,
    mut hom: impl FnMut(usize, usize) -> Vec<F>,
    show_mor: impl Fn(&F) -> String,
    id: impl Fn(usize) -> F,
    then: impl Fn(&F, &F) -> F,
) -> (Arc<FinCategory>, Vec<F>, HashMap<(usize, usize, F), usize>)
where
    F: Clone + Eq + Hash,
{
    let mut mors = Vec::new();
    let mut morphisms = Vec::new();
    let mut index = HashMap::new();
    for x in 0..objects.len() {
        for y in 0..objects.len() {
            for f in hom(x, y) {
                index.insert((x, y, f.clone()), mors.len());
                morphisms.push(Morphism { name: format!("{}#{}", show_mor(&f), mors.len()), src: x, tgt: y });
                mors.push(f);
            }
        }
    }
    let identities = (0..objects.len()).map(|x| index[&(x, x, id(x))]).collect();
    let names = objects.iter().map(&show_ob).collect();
    let ms = morphisms.clone();
    let cat = FinCategory::build(name, names, morphisms, identities, |p, q| {
        let r = then(&mors[p], &mors[q]);
        *index.get(&(ms[p].src, ms[q].tgt, r)).expect("closed under composition")
    })
    .expect("assembled category passes its audit");
    (Arc::new(cat), mors, index)
}

pub fn base_category<M: MonadOnCat>(m: &M) -> BaseCategory<M> {
    let obs = m.objects();
    let (cat, mors, table) = assemble(
        format!("base of {}", m.name()),
        &obs,
        |x| m.show_ob(x),
        |x, y| m.hom(&obs[x], &obs[y]),
        |f| m.show_mor(f),
        |x| m.id(&obs[x]),
        |f, g| m.then(f, g),
    );
    let index = table.into_iter().map(|((_, _, f), i)| (f, i)).collect();
    BaseCategory { cat, obs, mors, index }
}

/// An algebra `(a, alpha: t a -> a)`.
pub type Algebra<M> = (<M as MonadOnCat>::Ob, <M as MonadOnCat>::Mor);

pub fn is_algebra<M: MonadOnCat>(m: &M, a: &M::Ob, alpha: &M::Mor) -> bool {
    let unit = m.then(&m.eta(a), alpha) == m.id(a);
    unit && m.then(&m.t_mor(alpha), alpha) == m.then(&m.mu(a), alpha)
}

pub fn is_algebra_map<M: MonadOnCat>(m: &M, alpha: &M::Mor, h: &M::Mor, beta: &M::Mor) -> bool {
    m.then(alpha, h) == m.then(&m.t_mor(h), beta)
}

/// Every algebra structure on each base object, by object then by the
/// enumeration order of structure maps.
pub fn algebras<M: MonadOnCat>(m: &M) -> Vec<Algebra<M>> {
    let mut out = Vec::new();
    for a in m.objects() {
        for alpha in m.hom(&m.t_ob(&a), &a) {
            if is_algebra(m, &a, &alpha) {
                out.push((a.clone(), alpha));
            }
        }
    }
    out
}

pub struct EmCategory<M: MonadOnCat> {
    pub cat: Arc<FinCategory>,
    pub algebras: Vec<Algebra<M>>,
    /// Underlying base morphism of each morphism of `cat`.
    pub maps: Vec<M::Mor>,
    index: HashMap<(usize, usize, M::Mor), usize>,
}

impl<M: MonadOnCat> EmCategory<M> {
    pub fn algebra_index(&self, a: &Algebra<M>) -> Option<usize> {
        self.algebras.iter().position(|b| b == a)
    }

    pub fn map_index(&self, src: usize, tgt: usize, h: &M::Mor) -> Option<usize> {
        self.index.get(&(src, tgt, h.clone())).copied()
    }
}

pub fn em_category<M: MonadOnCat>(m: &M) -> EmCategory<M> {
    let algs = algebras(m);
    let (cat, maps, index) = assemble(
        format!("EM({})", m.name()),
        &algs,
        |(a, alpha)| format!("({}, {})", m.show_ob(a), m.show_mor(alpha)),
        |x, y| {
            let ((a, alpha), (b, beta)) = (&algs[x], &algs[y]);
            m.hom(a, b).into_iter().filter(|h| is_algebra_map(m, alpha, h, beta)).collect()
        },
        |h| m.show_mor(h),
        |x| m.id(&algs[x].0),
        |f, g| m.then(f, g),
    );
    EmCategory { cat, algebras: algs, maps, index }
}

/// The forgetful functor into the base.
pub fn forgetful<M: MonadOnCat>(m: &M, em: &EmCategory<M>, base: &BaseCategory<M>) -> FinFunctor {
    let obs = m.objects();
    FinFunctor {
        src: em.cat.clone(),
        tgt: base.cat.clone(),
        ob: em.algebras.iter().map(|(a, _)| obs.iter().position(|b| b == a).expect("base object")).collect(),
        mor: em.maps.iter().map(|h| base.morphism(h).expect("base morphism")).collect(),
    }
}

pub struct KleisliCategory<M: MonadOnCat> {
    pub cat: Arc<FinCategory>,
    pub objects: Vec<M::Ob>,
    /// The base morphism `x -> t y` behind each Kleisli morphism `x -> y`.
    pub maps: Vec<M::Mor>,
    index: HashMap<(usize, usize, (M::Mor, usize)), usize>,
}

impl<M: MonadOnCat> KleisliCategory<M> {
    pub fn map_index(&self, src: usize, tgt: usize, k: &M::Mor) -> Option<usize> {
        self.index.get(&(src, tgt, (k.clone(), tgt))).copied()
    }
}

/// Kleisli composite of `f: x -> t y` and `g: y -> t z`.
pub fn kleisli_then<M: MonadOnCat>(m: &M, f: &M::Mor, g: &M::Mor, z: &M::Ob) -> M::Mor {
    m.then(&m.then(f, &m.t_mor(g)), &m.mu(z))
}

pub fn kleisli_category<M: MonadOnCat>(m: &M) -> KleisliCategory<M> {
    let obs = m.objects();
    let (cat, maps, index) = assemble(
        format!("Kl({})", m.name()),
        &obs,
        |x| m.show_ob(x),
        |x, y| m.hom(&obs[x], &m.t_ob(&obs[y])).into_iter().map(|k| (k, y)).collect(),
        |(k, _)| m.show_mor(k),
        |x| (m.eta(&obs[x]), x),
        |(f, _), (g, z)| (kleisli_then(m, f, g, &obs[*z]), *z),
    );
    KleisliCategory { cat, objects: obs, maps: maps.into_iter().map(|(k, _)| k).collect(), index }
}

/// Checks that the Kleisli and Eilenberg–Moore adjunctions induce the
/// monad back: the right adjoint applied to the counit at a free object is
/// `mu`, the composite of the adjoints is `t` on morphisms, and the unit is
/// `eta`.
pub fn induced_roundtrip<M: MonadOnCat>(m: &M) -> Report {
    let mut r = Report::new(format!("induced monads of {}", m.name()));
    let obs = m.objects();
    let base = base_category(m);
    let kl = kleisli_category(m);
    // Kleisli: f(h) = h;eta, g(k) = t(k);mu, counit at y is id_{t y}
    let g_of = |k: &M::Mor, y: &M::Ob| m.then(&m.t_mor(k), &m.mu(y));
    let kl_mu = obs.iter().all(|x| g_of(&m.id(&m.t_ob(x)), x) == m.mu(x));
    r.check("Kleisli: g.eps.f = mu", kl_mu, "the counit does not give the multiplication");
    let kl_t = base.mors.iter().all(|h| {
        let y = m.cod(h);
        g_of(&m.then(h, &m.eta(&y)), &y) == m.t_mor(h)
    });
    r.check("Kleisli: g.f = t on morphisms", kl_t, "the composite functor differs from t");
    let kl_eta = (0..obs.len()).all(|i| kl.maps[kl.cat.id(i)] == m.eta(&obs[i]));
    r.check("Kleisli: identities are the units", kl_eta, "a unit is not a Kleisli identity");
    // Eilenberg–Moore: free algebras are algebras, the counit is the structure map
    let free = obs.iter().all(|x| is_algebra(m, &m.t_ob(x), &m.mu(x)));
    r.check("EM: free algebras", free, "(t x, mu) is not an algebra");
    let counit = algebras(m).iter().all(|(a, alpha)| is_algebra_map(m, &m.mu(a), alpha, alpha));
    r.check("EM: counit is an algebra map", counit, "some structure map is not an algebra map");
    let free_maps = base.mors.iter().all(|h| is_algebra_map(m, &m.mu(&m.dom(h)), &m.t_mor(h), &m.mu(&m.cod(h))));
    r.check("EM: u.f = t on morphisms", free_maps, "t h is not a map of free algebras");
    r
}

/// A module over a probe: a functor `a: X -> A` and an action
/// `alpha_x: t(a x) -> a x` natural in `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Module<M: MonadOnCat> {
    pub carrier: FinFunctor,
    pub action: Vec<M::Mor>,
}

pub struct ModuleCategory<M: MonadOnCat> {
    pub cat: Arc<FinCategory>,
    pub modules: Vec<Module<M>>,
    /// Components of each module map, one base morphism per object of X.
    pub maps: Vec<Vec<M::Mor>>,
}

fn is_module<M: MonadOnCat>(m: &M, base: &BaseCategory<M>, x: &FinCategory, a: &FinFunctor, action: &[M::Mor]) -> bool {
    let ob = |i: usize| &base.obs[a.ob[i]];
    let laws = (0..x.objects.len()).all(|i| is_algebra(m, ob(i), &action[i]));
    laws && (0..x.len()).all(|f| {
        let af = &base.mors[a.mor[f]];
        m.then(&m.t_mor(af), &action[x.tgt(f)]) == m.then(&action[x.src(f)], af)
    })
}

pub fn module_category<M: MonadOnCat>(m: &M, x: &Arc<FinCategory>) -> ModuleCategory<M> {
    let base = base_category(m);
    let mut modules = Vec::new();
    for a in all_functors(x, &base.cat) {
        let choices: Vec<Vec<M::Mor>> = (0..x.objects.len())
            .map(|i| {
                let o = &base.obs[a.ob[i]];
                m.hom(&m.t_ob(o), o).into_iter().filter(|al| is_algebra(m, o, al)).collect()
            })
            .collect();
        for action in cartesian(&choices) {
            if is_module(m, &base, x, &a, &action) {
                modules.push(Module { carrier: a.clone(), action });
            }
        }
    }
    let mods = &modules;
    let (cat, maps, _) = assemble(
        format!("Mod({}, {})", x.name, m.name()),
        mods,
        |md| format!("{:?}", md.carrier.ob),
        |i, j| {
            let (p, q) = (&mods[i], &mods[j]);
            all_nat_trans(&p.carrier, &q.carrier)
                .into_iter()
                .map(|th| th.comp.iter().map(|&c| base.mors[c].clone()).collect::<Vec<_>>())
                .filter(|comp| (0..comp.len()).all(|k| is_algebra_map(m, &p.action[k], &comp[k], &q.action[k])))
                .collect()
        },
        |comp| format!("{}", comp.len()),
        |i| (0..x.objects.len()).map(|k| m.id(&base.obs[mods[i].carrier.ob[k]])).collect(),
        |f, g| f.iter().zip(g).map(|(a, b)| m.then(a, b)).collect(),
    );
    ModuleCategory { cat, modules, maps }
}

fn cartesian<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        out = out.into_iter().flat_map(|p| c.iter().map(move |x| { let mut q = p.clone(); q.push(x.clone()); q })).collect();
    }
    out
}

/// For each probe, compares functors into the EM category with modules over
/// the probe through the explicit functor that forgets to the carrier and
/// keeps structure maps as the action.
pub fn em_universal_property_check<M: MonadOnCat>(m: &M, probes: &[FinCategory]) -> Report {
    let mut r = Report::new(format!("EM universal property of {}", m.name()));
    let em = em_category(m);
    let base = base_category(m);
    let u = forgetful(m, &em, &base);
    for (i, probe) in probes.iter().enumerate() {
        let x = Arc::new(probe.clone());
        let lhs = functor_category(&x, &em.cat);
        let rhs = module_category(m, &x);
        let label = format!("probe {i} ({} objects, {} arrows)", x.objects.len(), x.non_identity_count());
        let image: Vec<Option<usize>> = lhs
            .functors
            .iter()
            .map(|f| {
                let carrier = f.then(&u);
                let action: Vec<M::Mor> = f.ob.iter().map(|&k| em.algebras[k].1.clone()).collect();
                rhs.modules.iter().position(|md| md.carrier == carrier && md.action == action)
            })
            .collect();
        let mut hit = vec![false; rhs.modules.len()];
        let mut ok = true;
        for j in image.iter() {
            match j {
                Some(j) if !hit[*j] => hit[*j] = true,
                _ => ok = false,
            }
        }
        ok &= hit.iter().all(|&h| h);
        // hom part: the induced map on each hom-set is a bijection
        if ok {
            for p in 0..lhs.functors.len() {
                for q in 0..lhs.functors.len() {
                    let (ip, iq) = (image[p].unwrap(), image[q].unwrap());
                    let mut left: Vec<Vec<M::Mor>> = lhs.cat.hom(p, q).iter().map(|&n| lhs.transformations[n].comp.iter().map(|&c| em.maps[c].clone()).collect()).collect();
                    let mut right: Vec<Vec<M::Mor>> = rhs.cat.hom(ip, iq).iter().map(|&n| rhs.maps[n].clone()).collect();
                    let before = left.len();
                    left.sort();
                    left.dedup();
                    right.sort();
                    ok &= before == left.len() && left == right;
                }
            }
        }
        r.check(
            label,
            ok,
            format!("{} functors into EM, {} modules", lhs.functors.len(), rhs.modules.len()),
        );
    }
    r
}

/// The EM adjunction of a monad in the finite-category host, with the EM
/// category it lives on.
pub fn em_adjunction(m: &MonadData<FinCat>) -> (EmCategory<CatMonad>, AdjunctionData<FinCat>) {
    let cm = CatMonad::new(m.clone());
    let em = em_category(&cm);
    let a = m.object.clone();
    let free_ob: Vec<usize> = (0..a.objects.len())
        .map(|x| em.algebra_index(&(m.t.ob[x], m.mu.comp[x])).expect("free algebra"))
        .collect();
    let free = FinFunctor {
        src: a.clone(),
        tgt: em.cat.clone(),
        ob: free_ob.clone(),
        mor: (0..a.len()).map(|h| em.map_index(free_ob[a.src(h)], free_ob[a.tgt(h)], &m.t.mor[h]).expect("free map")).collect(),
    };
    let forget = FinFunctor {
        src: em.cat.clone(),
        tgt: a.clone(),
        ob: em.algebras.iter().map(|(x, _)| *x).collect(),
        mor: em.maps.clone(),
    };
    let eta = FinNatTrans { src: FinFunctor::identity(&a), tgt: free.then(&forget), comp: m.eta.comp.clone() };
    let fg = forget.then(&free);
    let eps = FinNatTrans {
        src: fg,
        tgt: FinFunctor::identity(&em.cat),
        comp: (0..em.algebras.len())
            .map(|k| {
                let (x, alpha) = em.algebras[k];
                em.map_index(free_ob[x], k, &alpha).expect("structure map is an algebra map")
            })
            .collect(),
    };
    (em, AdjunctionData { f: free, g: forget, eta, eps })
}

/// The Kleisli adjunction of a monad in the finite-category host.
pub fn kleisli_adjunction(m: &MonadData<FinCat>) -> (KleisliCategory<CatMonad>, AdjunctionData<FinCat>) {
    let cm = CatMonad::new(m.clone());
    let kl = kleisli_category(&cm);
    let a = m.object.clone();
    let free = FinFunctor {
        src: a.clone(),
        tgt: kl.cat.clone(),
        ob: (0..a.objects.len()).collect(),
        mor: (0..a.len()).map(|h| kl.map_index(a.src(h), a.tgt(h), &a.then(h, m.eta.comp[a.tgt(h)])).expect("Kleisli map")).collect(),
    };
    let forget = FinFunctor {
        src: kl.cat.clone(),
        tgt: a.clone(),
        ob: m.t.ob.clone(),
        mor: kl.maps.iter().enumerate().map(|(k, &f)| a.then(m.t.mor[f], m.mu.comp[kl.cat.tgt(k)])).collect(),
    };
    let eta = FinNatTrans { src: FinFunctor::identity(&a), tgt: free.then(&forget), comp: m.eta.comp.clone() };
    let eps = FinNatTrans {
        src: forget.then(&free),
        tgt: FinFunctor::identity(&kl.cat),
        comp: (0..a.objects.len()).map(|y| kl.map_index(m.t.ob[y], y, &a.id(m.t.ob[y])).expect("counit")).collect(),
    };
    (kl, AdjunctionData { f: free, g: forget, eta, eps })
}

/// `k: B -> A^t`, `b -> (g b, g eps_b)`, with the two defining equations
/// checked.
pub fn comparison_functor(adj: &AdjunctionData<FinCat>, m: &MonadData<FinCat>, em: &EmCategory<CatMonad>) -> Result<(FinFunctor, Report), String> {
    let h = FinCat;
    let laws = crate::monads::check_adjunction(&h, adj).map_err(|e| e.to_string())?;
    if !laws.passed() {
        return Err("not an adjunction".into());
    }
    let induced = crate::monads::induced_monad(&h, adj).map_err(|e| e.to_string())?;
    if induced.t != m.t || induced.mu != m.mu || induced.eta != m.eta {
        return Err("the adjunction does not induce this monad".into());
    }
    let b = adj.f.tgt.clone();
    let g = &adj.g;
    let ob: Vec<usize> = (0..b.objects.len())
        .map(|y| em.algebra_index(&(g.ob[y], g.mor[adj.eps.comp[y]])).ok_or_else(|| format!("no algebra for `{}`", b.objects[y])))
        .collect::<Result<_, _>>()?;
    let mor = (0..b.len())
        .map(|f| em.map_index(ob[b.src(f)], ob[b.tgt(f)], &g.mor[f]).ok_or_else(|| format!("`{}` is not sent to an algebra map", b.morphisms[f].name)))
        .collect::<Result<_, _>>()?;
    let k = FinFunctor { src: b.clone(), tgt: em.cat.clone(), ob, mor };
    let (_, emadj) = em_adjunction(m);
    let mut r = Report::new("comparison functor");
    r.absorb("", k.check());
    r.check("r = u k", k.then(&emadj.g) == *g, "the right adjoint does not factor through the comparison");
    r.check("k l = f^t", adj.f.then(&k) == emadj.f, "the comparison does not carry the left adjoint to the free functor");
    Ok((k, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monads::examples::*;
    use crate::monads::{check_adjunction, induced_monad};

    #[test]
    fn powerset_has_two_algebras_on_two_points() {
        let m = SetMonad::new(powerset(), 2);
        let on_two = algebras(&m).into_iter().filter(|(a, _)| *a == 2).count();
        assert_eq!(on_two, 2);
        assert!(em_category(&m).cat.audit().passed());
    }

    #[test]
    fn chain_monad_has_one_algebra() {
        let m = CatMonad::new(chain_monad());
        let em = em_category(&m);
        assert_eq!(em.algebras.len(), 1);
        assert_eq!(em.algebras[0].0, 1);
    }

    #[test]
    fn kleisli_maps_are_relations_and_partial_functions() {
        let p = kleisli_category(&SetMonad::new(powerset(), 2));
        // relations 2 -> 2: 16
        assert_eq!(p.cat.hom(2, 2).len(), 16);
        let m = kleisli_category(&SetMonad::new(maybe(), 2));
        // partial functions 2 -> 2: 9
        assert_eq!(m.cat.hom(2, 2).len(), 9);
        assert!(p.cat.audit().passed() && m.cat.audit().passed());
    }

    #[test]
    fn adjunctions_induce_the_monad_back() {
        let h = FinCat;
        for m in fincat_corpus() {
            for (name, adj) in [("EM", em_adjunction(&m).1), ("Kleisli", kleisli_adjunction(&m).1)] {
                assert!(check_adjunction(&h, &adj).unwrap().passed(), "{name} {}", m.name);
                let back = induced_monad(&h, &adj).unwrap();
                assert_eq!(back.t, m.t, "{name} {}", m.name);
                assert_eq!(back.mu, m.mu);
                assert_eq!(back.eta, m.eta);
            }
        }
        for m in [powerset(), maybe()] {
            assert!(induced_roundtrip(&SetMonad::new(m, 2)).passed());
        }
    }

    #[test]
    fn comparison_functors() {
        let m = chain_monad();
        let (em, adj) = em_adjunction(&m);
        let (k, r) = comparison_functor(&adj, &m, &em).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert_eq!(k, FinFunctor::identity(&em.cat));
        let (_, kl) = kleisli_adjunction(&m);
        let (_, r) = comparison_functor(&kl, &m, &em).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn modules_over_the_terminal_category_are_algebras() {
        let one = Arc::new(FinCategory::terminal());
        let m = SetMonad::new(maybe(), 2);
        assert_eq!(module_category(&m, &one).modules.len(), algebras(&m).len());
        let c = CatMonad::new(chain_monad());
        assert_eq!(module_category(&c, &one).modules.len(), 1);
    }

    #[test]
    fn universal_property_on_a_few_probes() {
        let probes = vec![FinCategory::terminal(), FinCategory::walking_arrow(), FinCategory::discrete("D2", &["p", "q"])];
        let r = em_universal_property_check(&SetMonad::new(powerset(), 2), &probes);
        assert!(r.passed(), "{}", r.render_text());
        let r = em_universal_property_check(&CatMonad::new(chain_monad()), &probes);
        assert!(r.passed(), "{}", r.render_text());
    }
}
