//! Lax and oplax functors between 2-categories and icons between them, as
//! explicit finite records with a law checker.
//!
//! A record lists finitely many 1-cells of the domain with their images;
//! comparison cells are indexed by pairs of positions in that list. Laws
//! are checked wherever every 1-cell they mention is listed, so a record
//! truncated at some word length is checked up to that length.

use std::collections::BTreeMap;

use crate::host::{has_boundary, horizontal, HostError, TwoCategory};
use crate::monads::seq;
use crate::report::Report;
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `F f ; F g => F(f ; g)` and `1 => F 1`.
    Lax,
    /// `F(f ; g) => F f ; F g` and `F 1 => 1`.
    Oplax,
}

#[derive(Clone, Debug)]
pub struct LaxFunctorData<D: TwoCategory, K: TwoCategory> {
    pub name: String,
    pub direction: Direction,
    pub objects: Vec<(D::Obj, K::Obj)>,
    pub ones: Vec<(D::One, K::One)>,
    pub twos: Vec<(D::Two, K::Two)>,
    /// One per object, in the order of `objects`.
    pub unit: Vec<K::Two>,
    /// Keyed by positions in `ones`.
    pub comp: BTreeMap<(usize, usize), K::Two>,
}

pub type OplaxFunctorData<D, K> = LaxFunctorData<D, K>;

impl<D: TwoCategory, K: TwoCategory> LaxFunctorData<D, K> {
    pub fn object_index(&self, x: &D::Obj) -> Option<usize> {
        self.objects.iter().position(|(a, _)| a == x)
    }

    pub fn one_index(&self, d: &D, f: &D::One) -> Option<usize> {
        self.ones.iter().position(|(g, _)| d.same_one(f, g))
    }

    pub fn ob(&self, x: &D::Obj) -> Option<&K::Obj> {
        self.object_index(x).map(|i| &self.objects[i].1)
    }

    pub fn one(&self, d: &D, f: &D::One) -> Option<&K::One> {
        self.one_index(d, f).map(|i| &self.ones[i].1)
    }

    /// Position of `f ; g` in `ones`, when both compose and it is listed.
    pub fn composite(&self, d: &D, i: usize, j: usize) -> Option<usize> {
        let (f, g) = (&self.ones[i].0, &self.ones[j].0);
        if d.one_tgt(f) != d.one_src(g) {
            return None;
        }
        d.compose(f, g).ok().and_then(|fg| self.one_index(d, &fg))
    }

    /// Every comparison cell is an identity.
    pub fn is_strict(&self, k: &K) -> bool {
        let id = |a: &K::Two| {
            let s = k.two_src(a);
            k.same_one(&s, &k.two_tgt(a)) && k.compare(a, &k.identity2(&s)).is_equal()
        };
        self.unit.iter().all(id) && self.comp.values().all(id)
    }

    /// The image of a domain 2-cell listed in `twos`, found by boundary and
    /// equality in the domain.
    pub fn two(&self, d: &D, a: &D::Two) -> Option<&K::Two> {
        let (s, t) = (d.two_src(a), d.two_tgt(a));
        self.twos
            .iter()
            .find(|(b, _)| has_boundary(d, b, &s, &t) && d.compare(a, b).is_equal())
            .map(|(_, img)| img)
    }
}

/// Checks typing, the unit and associativity coherences, functoriality on
/// listed 2-cells, and naturality of the comparison cells.
pub fn check_lax_functor<D: TwoCategory, K: TwoCategory>(d: &D, k: &K, f: &LaxFunctorData<D, K>) -> Result<Report, HostError> {
    let mut r = Report::new(format!("lax functor {}", f.name));
    let lax = f.direction == Direction::Lax;
    if f.unit.len() != f.objects.len() {
        return Err(HostError::new("one unit cell per object is required"));
    }

    // typing of 1-cells
    let mut typed = true;
    for (x, fx) in &f.ones {
        let ends = (f.ob(&d.one_src(x)), f.ob(&d.one_tgt(x)));
        let ok = matches!(ends, (Some(a), Some(b)) if *a == k.one_src(fx) && *b == k.one_tgt(fx));
        if !ok {
            typed = false;
            r.merge("1-cells are typed", Verdict::NotEqual(format!("image of {} has the wrong endpoints", d.show_one(x))));
        }
    }
    if typed {
        r.merge("1-cells are typed", Verdict::Equal(crate::verdict::Witness::Componentwise));
    }
    if !typed {
        return Ok(r);
    }

    // unit cells
    let mut unit_index = Vec::new();
    for (a, (x, fx)) in f.objects.iter().enumerate() {
        let Some(i) = f.one_index(d, &d.identity(x)) else {
            r.merge("identities are listed", Verdict::NotEqual(format!("no image for the identity on {x:?}")));
            return Ok(r);
        };
        unit_index.push(i);
        let (one, img) = (k.identity(fx), &f.ones[i].1);
        let ok = if lax { has_boundary(k, &f.unit[a], &one, img) } else { has_boundary(k, &f.unit[a], img, &one) };
        r.merge("unit cells are typed", boolean(ok, format!("unit at {x:?} has the wrong boundary")));
    }

    // comparison cells
    let n = f.ones.len();
    for i in 0..n {
        for j in 0..n {
            let Some(ij) = f.composite(d, i, j) else { continue };
            let Some(c) = f.comp.get(&(i, j)) else {
                r.merge(
                    "comparison cells are present",
                    Verdict::NotEqual(format!("missing for {} then {}", d.show_one(&f.ones[i].0), d.show_one(&f.ones[j].0))),
                );
                continue;
            };
            r.merge("comparison cells are present", boolean(true, ""));
            let pair = k.compose(&f.ones[i].1, &f.ones[j].1)?;
            let img = &f.ones[ij].1;
            let ok = if lax { has_boundary(k, c, &pair, img) } else { has_boundary(k, c, img, &pair) };
            r.merge(
                "comparison cells are typed",
                boolean(ok, format!("cell for {} then {}", d.show_one(&f.ones[i].0), d.show_one(&f.ones[j].0))),
            );
        }
    }
    if r.refuted() {
        return Ok(r);
    }
    let comp = |i: usize, j: usize| f.comp.get(&(i, j)).cloned().ok_or_else(|| HostError::new("missing comparison cell"));

    // unit coherence
    for (i, (x, fx)) in f.ones.iter().enumerate() {
        let (a, b) = (f.object_index(&d.one_src(x)).expect("typed"), f.object_index(&d.one_tgt(x)).expect("typed"));
        let (ea, eb) = (k.identity(&f.objects[a].1), k.identity(&f.objects[b].1));
        let id = Ok(k.identity2(fx));
        let (left, right) = if lax {
            (
                seq(k, &[k.whisker(&ea, &f.unit[a], fx), comp(unit_index[a], i)]),
                seq(k, &[k.whisker(fx, &f.unit[b], &eb), comp(i, unit_index[b])]),
            )
        } else {
            (
                seq(k, &[comp(unit_index[a], i), k.whisker(&ea, &f.unit[a], fx)]),
                seq(k, &[comp(i, unit_index[b]), k.whisker(fx, &f.unit[b], &eb)]),
            )
        };
        merge_law(k, &mut r, "left unit", left, id.clone());
        merge_law(k, &mut r, "right unit", right, id);
    }

    // associativity
    for i in 0..n {
        for j in 0..n {
            let Some(ij) = f.composite(d, i, j) else { continue };
            for l in 0..n {
                let (Some(jl), Some(ijl)) = (f.composite(d, j, l), f.composite(d, ij, l)) else { continue };
                debug_assert_eq!(f.composite(d, i, jl), Some(ijl));
                let (fi, fl) = (&f.ones[i].1, &f.ones[l].1);
                let e_src = k.identity(&k.one_src(fi));
                let e_tgt = k.identity(&k.one_tgt(fl));
                let a = k.whisker(&e_src, &comp(i, j)?, fl);
                let b = k.whisker(fi, &comp(j, l)?, &e_tgt);
                let (lhs, rhs) = if lax {
                    (seq(k, &[a, comp(ij, l)]), seq(k, &[b, comp(i, jl)]))
                } else {
                    (seq(k, &[comp(ij, l), a]), seq(k, &[comp(i, jl), b]))
                };
                merge_law(k, &mut r, "associativity", lhs, rhs);
            }
        }
    }

    // listed 2-cells
    for (alpha, falpha) in &f.twos {
        let (s, t) = (d.two_src(alpha), d.two_tgt(alpha));
        let (Some(si), Some(ti)) = (f.one_index(d, &s), f.one_index(d, &t)) else {
            r.merge("2-cells are typed", Verdict::NotEqual(format!("{} has an unlisted boundary", d.show_two(alpha))));
            continue;
        };
        let ok = has_boundary(k, falpha, &f.ones[si].1, &f.ones[ti].1);
        r.merge("2-cells are typed", boolean(ok, format!("image of {}", d.show_two(alpha))));
        if !ok {
            continue;
        }
        for (beta, fbeta) in &f.twos {
            if !d.same_one(&d.two_src(beta), &t) {
                continue;
            }
            if let Some(fab) = d.vertical(alpha, beta).ok().and_then(|ab| f.two(d, &ab).cloned()) {
                merge_law(k, &mut r, "vertical composition", k.vertical(falpha, fbeta), Ok(fab));
            }
        }
        if d.compare(alpha, &d.identity2(&s)).is_equal() && d.same_one(&s, &t) {
            merge_law(k, &mut r, "identities", Ok(falpha.clone()), Ok(k.identity2(&f.ones[si].1)));
        }
        // naturality of the comparison cells in each variable
        for (g, (y, fy)) in f.ones.iter().enumerate() {
            for y_after in [true, false] {
                let meets = if y_after { d.one_src(y) == d.one_tgt(&s) } else { d.one_tgt(y) == d.one_src(&s) };
                let pair = |x: usize| if y_after { (x, g) } else { (g, x) };
                let listed = |x: usize| {
                    let (p, q) = pair(x);
                    f.composite(d, p, q).is_some()
                };
                if !meets || !listed(si) || !listed(ti) {
                    continue;
                }
                let whiskered = if y_after {
                    d.whisker(&d.identity(&d.one_src(&s)), alpha, y)
                } else {
                    d.whisker(y, alpha, &d.identity(&d.one_tgt(&s)))
                };
                let Some(img) = whiskered.ok().and_then(|w| f.two(d, &w).cloned()) else { continue };
                let wk = if y_after {
                    k.whisker(&k.identity(&k.one_src(&k.two_src(falpha))), falpha, fy)
                } else {
                    k.whisker(fy, falpha, &k.identity(&k.one_tgt(&k.two_src(falpha))))
                };
                let (cs, ct) = (comp(pair(si).0, pair(si).1), comp(pair(ti).0, pair(ti).1));
                let (lhs, rhs) = if lax { (seq(k, &[wk, ct]), seq(k, &[cs, Ok(img)])) } else { (seq(k, &[cs, wk]), seq(k, &[Ok(img), ct])) };
                merge_law(k, &mut r, "naturality of comparison cells", lhs, rhs);
            }
        }
    }
    Ok(r)
}

/// An icon `F => G` between lax functors that agree on objects and list the
/// same 1-cells in the same order: one component `F f => G f` per 1-cell.
#[derive(Clone, Debug)]
pub struct IconData<D: TwoCategory, K: TwoCategory> {
    pub source: LaxFunctorData<D, K>,
    pub target: LaxFunctorData<D, K>,
    pub components: Vec<K::Two>,
}

pub fn check_icon<D: TwoCategory, K: TwoCategory>(d: &D, k: &K, i: &IconData<D, K>) -> Result<Report, HostError> {
    let (f, g) = (&i.source, &i.target);
    let mut r = Report::new(format!("icon {} => {}", f.name, g.name));
    if f.direction != Direction::Lax || g.direction != Direction::Lax {
        return Err(HostError::new("icons are checked between lax functors"));
    }
    let same_objects = f.objects.len() == g.objects.len() && f.objects.iter().zip(&g.objects).all(|(a, b)| a.0 == b.0 && a.1 == b.1);
    let same_ones = f.ones.len() == g.ones.len()
        && i.components.len() == f.ones.len()
        && f.ones.iter().zip(&g.ones).all(|(a, b)| d.same_one(&a.0, &b.0));
    r.check("agree on objects", same_objects, "object images differ");
    r.check("list the same 1-cells", same_ones, "1-cell lists differ");
    if !same_objects || !same_ones {
        return Ok(r);
    }
    for (n, c) in i.components.iter().enumerate() {
        let ok = has_boundary(k, c, &f.ones[n].1, &g.ones[n].1);
        r.merge("components are typed", boolean(ok, format!("component at {}", d.show_one(&f.ones[n].0))));
    }
    if r.refuted() {
        return Ok(r);
    }
    for (a, (x, _)) in f.objects.iter().enumerate() {
        let Some(n) = f.one_index(d, &d.identity(x)) else { continue };
        merge_law(k, &mut r, "unit compatibility", k.vertical(&f.unit[a], &i.components[n]), Ok(g.unit[a].clone()));
    }
    for (&(p, q), fc) in &f.comp {
        let (Some(pq), Some(gc)) = (f.composite(d, p, q), g.comp.get(&(p, q))) else { continue };
        let lhs = k.vertical(fc, &i.components[pq]);
        let rhs = horizontal(k, &i.components[p], &i.components[q]).and_then(|h| k.vertical(&h, gc));
        merge_law(k, &mut r, "composition compatibility", lhs, rhs);
    }
    for (alpha, falpha) in &f.twos {
        let (Some(s), Some(t)) = (f.one_index(d, &d.two_src(alpha)), f.one_index(d, &d.two_tgt(alpha))) else { continue };
        let Some(galpha) = g.two(d, alpha) else { continue };
        let lhs = k.vertical(falpha, &i.components[t]);
        let rhs = k.vertical(&i.components[s], galpha);
        merge_law(k, &mut r, "naturality", lhs, rhs);
    }
    Ok(r)
}

/// A lax transformation `S => T` between lax functors in the same direction
/// that list the same 1-cells in the same order: a component `σ x: S x -> T x`
/// per object and a cell `σ x ; T f => S f ; σ y` per listed `f: x -> y`.
#[derive(Clone, Debug)]
pub struct LaxTransformationData<D: TwoCategory, K: TwoCategory> {
    pub name: String,
    pub source: LaxFunctorData<D, K>,
    pub target: LaxFunctorData<D, K>,
    pub components: Vec<K::One>,
    pub naturality: Vec<K::Two>,
}

fn same_shape<D: TwoCategory, K: TwoCategory>(d: &D, f: &LaxFunctorData<D, K>, g: &LaxFunctorData<D, K>) -> bool {
    f.direction == g.direction
        && f.objects.len() == g.objects.len()
        && f.objects.iter().zip(&g.objects).all(|(a, b)| a.0 == b.0)
        && f.ones.len() == g.ones.len()
        && f.ones.iter().zip(&g.ones).all(|(a, b)| d.same_one(&a.0, &b.0))
}

pub fn check_lax_transformation<D: TwoCategory, K: TwoCategory>(d: &D, k: &K, s: &LaxTransformationData<D, K>) -> Result<Report, HostError> {
    let (f, g) = (&s.source, &s.target);
    let mut r = Report::new(format!("lax transformation {}", s.name));
    let shaped = same_shape(d, f, g) && s.components.len() == f.objects.len() && s.naturality.len() == f.ones.len();
    r.check("source and target have the same shape", shaped, "objects, 1-cells or directions differ");
    if !shaped {
        return Ok(r);
    }
    for (a, c) in s.components.iter().enumerate() {
        let ok = k.one_src(c) == f.objects[a].1 && k.one_tgt(c) == g.objects[a].1;
        r.merge("components are typed", boolean(ok, format!("component at {:?}", f.objects[a].0)));
    }
    if r.refuted() {
        return Ok(r);
    }
    let comp = |x: &D::Obj| &s.components[f.object_index(x).expect("objects are listed")];
    for (n, (x, _)) in f.ones.iter().enumerate() {
        let (a, b) = (comp(&d.one_src(x)), comp(&d.one_tgt(x)));
        let ok = match (k.compose(a, &g.ones[n].1), k.compose(&f.ones[n].1, b)) {
            (Ok(src), Ok(tgt)) => has_boundary(k, &s.naturality[n], &src, &tgt),
            _ => false,
        };
        r.merge("naturality cells are typed", boolean(ok, format!("cell at {}", d.show_one(x))));
    }
    if r.refuted() {
        return Ok(r);
    }
    let lax = f.direction == Direction::Lax;
    let id = |o: &K::Obj| k.identity(o);

    for (a, (x, _)) in f.objects.iter().enumerate() {
        let Some(n) = f.one_index(d, &d.identity(x)) else { continue };
        let c = &s.components[a];
        let tu = k.whisker(c, &g.unit[a], &id(&g.objects[a].1));
        let su = k.whisker(&id(&f.objects[a].1), &f.unit[a], c);
        let (lhs, rhs) = if lax { (seq(k, &[tu, Ok(s.naturality[n].clone())]), su) } else { (seq(k, &[Ok(s.naturality[n].clone()), su]), tu) };
        merge_law(k, &mut r, "unit compatibility", lhs, rhs);
    }

    for &(i, j) in f.comp.keys() {
        let Some(ij) = f.composite(d, i, j) else { continue };
        let (Some(fc), Some(gc)) = (f.comp.get(&(i, j)), g.comp.get(&(i, j))) else { continue };
        let (x, z) = (d.one_src(&f.ones[i].0), d.one_tgt(&f.ones[j].0));
        let (cx, cz) = (comp(&x), comp(&z));
        let (ex, ez) = (id(f.ob(&x).expect("listed")), id(g.ob(&z).expect("listed")));
        let tc = k.whisker(cx, gc, &ez);
        let sc = k.whisker(&ex, fc, cz);
        let first = k.whisker(&ex, &s.naturality[i], &g.ones[j].1);
        let second = k.whisker(&f.ones[i].1, &s.naturality[j], &ez);
        let (lhs, rhs) = if lax {
            (seq(k, &[tc, Ok(s.naturality[ij].clone())]), seq(k, &[first, second, sc]))
        } else {
            (seq(k, &[tc, first, second]), seq(k, &[Ok(s.naturality[ij].clone()), sc]))
        };
        merge_law(k, &mut r, "composition compatibility", lhs, rhs);
    }

    for (alpha, falpha) in &f.twos {
        let (Some(si), Some(ti)) = (f.one_index(d, &d.two_src(alpha)), f.one_index(d, &d.two_tgt(alpha))) else { continue };
        let Some(galpha) = g.two(d, alpha) else { continue };
        let (x, y) = (d.one_src(&f.ones[si].0), d.one_tgt(&f.ones[si].0));
        let lhs = seq(k, &[k.whisker(comp(&x), galpha, &id(g.ob(&y).expect("listed"))), Ok(s.naturality[ti].clone())]);
        let rhs = seq(k, &[Ok(s.naturality[si].clone()), k.whisker(&id(f.ob(&x).expect("listed")), falpha, comp(&y))]);
        merge_law(k, &mut r, "naturality in 2-cells", lhs, rhs);
    }
    Ok(r)
}

/// The identity transformation, with identity components and cells.
pub fn identity_transformation<D: TwoCategory, K: TwoCategory>(k: &K, f: &LaxFunctorData<D, K>) -> LaxTransformationData<D, K> {
    LaxTransformationData {
        name: format!("1 {}", f.name),
        source: f.clone(),
        target: f.clone(),
        components: f.objects.iter().map(|(_, o)| k.identity(o)).collect(),
        naturality: f.ones.iter().map(|(_, img)| k.identity2(img)).collect(),
    }
}

/// `σ` then `τ`: components compose, naturality cells paste side by side.
pub fn compose_transformations<D: TwoCategory, K: TwoCategory>(
    d: &D,
    k: &K,
    s: &LaxTransformationData<D, K>,
    t: &LaxTransformationData<D, K>,
) -> Result<LaxTransformationData<D, K>, HostError> {
    if !same_shape(d, &s.target, &t.source) {
        return Err(HostError::new("transformations do not compose"));
    }
    let components = s.components.iter().zip(&t.components).map(|(a, b)| k.compose(a, b)).collect::<Result<Vec<_>, _>>()?;
    let f = &s.source;
    let mut naturality = Vec::with_capacity(f.ones.len());
    for (n, (x, _)) in f.ones.iter().enumerate() {
        let (a, b) = (f.object_index(&d.one_src(x)).expect("listed"), f.object_index(&d.one_tgt(x)).expect("listed"));
        let first = k.whisker(&s.components[a], &t.naturality[n], &k.identity(&t.target.objects[b].1))?;
        let second = k.whisker(&k.identity(&f.objects[a].1), &s.naturality[n], &t.components[b])?;
        naturality.push(k.vertical(&first, &second)?);
    }
    Ok(LaxTransformationData { name: format!("{} ; {}", s.name, t.name), source: s.source.clone(), target: t.target.clone(), components, naturality })
}

/// A modification `σ => τ` between parallel lax transformations.
#[derive(Clone, Debug)]
pub struct ModificationData<D: TwoCategory, K: TwoCategory> {
    pub source: LaxTransformationData<D, K>,
    pub target: LaxTransformationData<D, K>,
    pub components: Vec<K::Two>,
}

pub fn check_modification<D: TwoCategory, K: TwoCategory>(d: &D, k: &K, m: &ModificationData<D, K>) -> Result<Report, HostError> {
    let (s, t) = (&m.source, &m.target);
    let mut r = Report::new(format!("modification {} => {}", s.name, t.name));
    let parallel = same_shape(d, &s.source, &t.source) && same_shape(d, &s.target, &t.target) && m.components.len() == s.components.len();
    r.check("source and target are parallel", parallel, "transformations are not parallel");
    if !parallel {
        return Ok(r);
    }
    for (a, c) in m.components.iter().enumerate() {
        let ok = has_boundary(k, c, &s.components[a], &t.components[a]);
        r.merge("components are typed", boolean(ok, format!("component at {:?}", s.source.objects[a].0)));
    }
    if r.refuted() {
        return Ok(r);
    }
    let f = &s.source;
    for (n, (x, fx)) in f.ones.iter().enumerate() {
        let (a, b) = (f.object_index(&d.one_src(x)).expect("listed"), f.object_index(&d.one_tgt(x)).expect("listed"));
        let gx = &s.target.ones[n].1;
        let lhs = seq(k, &[k.whisker(&k.identity(&f.objects[a].1), &m.components[a], gx), Ok(t.naturality[n].clone())]);
        let rhs = seq(k, &[Ok(s.naturality[n].clone()), k.whisker(fx, &m.components[b], &k.identity(&s.target.objects[b].1))]);
        merge_law(k, &mut r, "naturality", lhs, rhs);
    }
    Ok(r)
}

/// The identity on the listed 1-cells, as a strict functor.
pub fn identity_lax<D: TwoCategory>(d: &D, name: &str, objects: &[D::Obj], ones: &[D::One], twos: &[D::Two]) -> Result<LaxFunctorData<D, D>, HostError> {
    let mut comp = BTreeMap::new();
    for (i, f) in ones.iter().enumerate() {
        for (j, g) in ones.iter().enumerate() {
            if d.one_tgt(f) != d.one_src(g) {
                continue;
            }
            let fg = d.compose(f, g)?;
            if ones.iter().any(|h| d.same_one(h, &fg)) {
                comp.insert((i, j), d.identity2(&fg));
            }
        }
    }
    Ok(LaxFunctorData {
        name: name.into(),
        direction: Direction::Lax,
        objects: objects.iter().map(|x| (x.clone(), x.clone())).collect(),
        ones: ones.iter().map(|f| (f.clone(), f.clone())).collect(),
        twos: twos.iter().map(|a| (a.clone(), a.clone())).collect(),
        unit: objects.iter().map(|x| d.identity2(&d.identity(x))).collect(),
        comp,
    })
}

fn boolean(ok: bool, why: impl Into<String>) -> Verdict {
    if ok {
        Verdict::Equal(crate::verdict::Witness::Componentwise)
    } else {
        Verdict::NotEqual(why.into())
    }
}

fn merge_law<K: TwoCategory>(k: &K, r: &mut Report, name: &str, lhs: Result<K::Two, HostError>, rhs: Result<K::Two, HostError>) {
    let v = match (lhs, rhs) {
        (Ok(a), Ok(b)) => match k.compare(&a, &b) {
            Verdict::NotEqual(why) => Verdict::NotEqual(format!("{} against {}: {why}", k.show_two(&a), k.show_two(&b))),
            v => v,
        },
        (Err(e), _) | (_, Err(e)) => Verdict::NotEqual(format!("ill-formed composite: {e}")),
    };
    r.merge(name, v);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monads::delta::{DeltaHost, MonotoneMap};

    /// A monad seen as a lax functor from the terminal category: the unique
    /// 1-cell goes to `t`.
    fn monad_as_lax(mu: MonotoneMap, eta: MonotoneMap) -> LaxFunctorData<DeltaHost, DeltaHost> {
        LaxFunctorData {
            name: "walking monad".into(),
            direction: Direction::Lax,
            objects: vec![((), ())],
            ones: vec![(0, 1)],
            twos: vec![],
            unit: vec![eta],
            comp: BTreeMap::from([((0, 0), mu)]),
        }
    }

    #[test]
    fn the_walking_monad_is_a_lax_functor() {
        let d = DeltaHost;
        let mu = MonotoneMap::new(1, vec![0, 0]).unwrap();
        let eta = MonotoneMap::new(1, vec![]).unwrap();
        let r = check_lax_functor(&d, &d, &monad_as_lax(mu, eta)).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert_eq!(r.verdict_of("associativity").map(|v| v.is_equal()), Some(true));
    }

    #[test]
    fn identity_is_strict_and_lawful() {
        let d = DeltaHost;
        let f = identity_lax(&d, "id", &[()], &[0, 1, 2], &[MonotoneMap::new(1, vec![0, 0]).unwrap()]).unwrap();
        assert!(f.is_strict(&d));
        let r = check_lax_functor(&d, &d, &f).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let icon = IconData { source: f.clone(), target: f.clone(), components: f.ones.iter().map(|(x, _)| d.identity2(x)).collect() };
        assert!(check_icon(&d, &d, &icon).unwrap().passed());
    }

    #[test]
    fn broken_unit_is_refuted() {
        let d = DeltaHost;
        // the unit t^0 => t^2 followed by the comparison cell cannot be the
        // identity on t^2
        let f = LaxFunctorData {
            name: "bad".into(),
            direction: Direction::Lax,
            objects: vec![((), ())],
            ones: vec![(0, 2)],
            twos: vec![],
            unit: vec![MonotoneMap::new(2, vec![]).unwrap()],
            comp: BTreeMap::from([((0, 0), MonotoneMap::new(2, vec![0, 0, 1, 1]).unwrap())]),
        };
        let r = check_lax_functor(&d, &d, &f).unwrap();
        assert!(r.verdict_of("left unit").unwrap().is_not_equal());
    }

    #[test]
    fn identity_transformation_and_modification_are_lawful() {
        let d = DeltaHost;
        let mu = MonotoneMap::new(1, vec![0, 0]).unwrap();
        let eta = MonotoneMap::new(1, vec![]).unwrap();
        let f = monad_as_lax(mu, eta);
        let s = identity_transformation(&d, &f);
        assert!(check_lax_transformation(&d, &d, &s).unwrap().passed());
        let ss = compose_transformations(&d, &d, &s, &s).unwrap();
        assert!(check_lax_transformation(&d, &d, &ss).unwrap().passed());
        let m = ModificationData { source: s.clone(), target: ss, components: vec![MonotoneMap::identity(0)] };
        assert!(check_modification(&d, &d, &m).unwrap().passed());
    }

    #[test]
    fn transformation_with_the_wrong_cell_is_refuted() {
        let d = DeltaHost;
        let f = monad_as_lax(MonotoneMap::new(1, vec![0, 0]).unwrap(), MonotoneMap::new(1, vec![]).unwrap());
        // component t with naturality the swap-free identity t t => t t fails
        // the unit law, which needs the unit of t on the other side
        let s = LaxTransformationData {
            name: "t".into(),
            source: f.clone(),
            target: f,
            components: vec![1],
            naturality: vec![MonotoneMap::new(2, vec![0, 0]).unwrap()],
        };
        let r = check_lax_transformation(&d, &d, &s).unwrap();
        assert!(r.refuted(), "{}", r.render_text());
    }
}
