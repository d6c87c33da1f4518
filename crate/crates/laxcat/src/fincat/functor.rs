//! Functors and natural transformations between finite categories, with
//! exhaustive enumeration.

use std::collections::HashMap;
use std::sync::Arc;

use super::category::{FinCategory, Morphism};
use crate::report::Report;

pub(crate) fn same_category(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinFunctor {
    pub src: Arc<FinCategory>,
    pub tgt: Arc<FinCategory>,
    pub ob: Vec<usize>,
    pub mor: Vec<usize>,
}

impl FinFunctor {
    pub fn identity(c: &Arc<FinCategory>) -> Self {
        FinFunctor { src: c.clone(), tgt: c.clone(), ob: (0..c.objects.len()).collect(), mor: (0..c.len()).collect() }
    }

    /// "first self, then g".
    pub fn then(&self, g: &FinFunctor) -> FinFunctor {
        assert!(same_category(&self.tgt, &g.src), "functors do not compose");
        FinFunctor {
            src: self.src.clone(),
            tgt: g.tgt.clone(),
            ob: self.ob.iter().map(|&x| g.ob[x]).collect(),
            mor: self.mor.iter().map(|&f| g.mor[f]).collect(),
        }
    }

    /// The constant functor at an object of `tgt`.
    pub fn constant(src: &Arc<FinCategory>, tgt: &Arc<FinCategory>, y: usize) -> Self {
        FinFunctor { src: src.clone(), tgt: tgt.clone(), ob: vec![y; src.objects.len()], mor: vec![tgt.id(y); src.len()] }
    }

    /// Exhaustive check of typing, identities and composition.
    pub fn check(&self) -> Report {
        let (a, b) = (&self.src, &self.tgt);
        let mut r = Report::new(format!("functor {} -> {}", a.name, b.name));
        let typed = (0..a.len()).find(|&f| b.src(self.mor[f]) != self.ob[a.src(f)] || b.tgt(self.mor[f]) != self.ob[a.tgt(f)]);
        r.check("typing", typed.is_none(), typed.map(|f| format!("image of `{}` is ill-typed", a.morphisms[f].name)).unwrap_or_default());
        let ids = (0..a.objects.len()).find(|&x| self.mor[a.id(x)] != b.id(self.ob[x]));
        r.check("identities", ids.is_none(), ids.map(|x| format!("identity of `{}` not preserved", a.objects[x])).unwrap_or_default());
        let mut bad = None;
        if typed.is_none() {
            'outer: for f in 0..a.len() {
                for g in a.out_of(a.tgt(f)) {
                    if self.mor[a.then(f, g)] != b.then(self.mor[f], self.mor[g]) {
                        bad = Some(format!("`{}` then `{}`", a.morphisms[f].name, a.morphisms[g].name));
                        break 'outer;
                    }
                }
            }
        }
        r.check("composition", bad.is_none(), bad.unwrap_or_default());
        r
    }

    pub fn is_valid(&self) -> bool {
        self.check().passed()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinNatTrans {
    pub src: FinFunctor,
    pub tgt: FinFunctor,
    /// One morphism of the codomain per object of the domain.
    pub comp: Vec<usize>,
}

impl FinNatTrans {
    pub fn identity(f: &FinFunctor) -> Self {
        FinNatTrans { src: f.clone(), tgt: f.clone(), comp: f.ob.iter().map(|&y| f.tgt.id(y)).collect() }
    }

    /// Vertical composite "first self, then b".
    pub fn then(&self, b: &FinNatTrans) -> FinNatTrans {
        assert!(self.tgt == b.src, "natural transformations do not compose");
        let c = &self.src.tgt;
        FinNatTrans {
            src: self.src.clone(),
            tgt: b.tgt.clone(),
            comp: self.comp.iter().zip(&b.comp).map(|(&x, &y)| c.then(x, y)).collect(),
        }
    }

    /// `l`, then `self`, then `r`.
    pub fn whisker(l: &FinFunctor, a: &FinNatTrans, r: &FinFunctor) -> FinNatTrans {
        FinNatTrans {
            src: l.then(&a.src).then(r),
            tgt: l.then(&a.tgt).then(r),
            comp: l.ob.iter().map(|&x| r.mor[a.comp[x]]).collect(),
        }
    }

    pub fn check(&self) -> Report {
        let (a, b) = (&self.src.src, &self.src.tgt);
        let mut r = Report::new("natural transformation");
        let typed = (0..a.objects.len()).find(|&x| b.src(self.comp[x]) != self.src.ob[x] || b.tgt(self.comp[x]) != self.tgt.ob[x]);
        r.check("typing", typed.is_none(), typed.map(|x| format!("component at `{}` is ill-typed", a.objects[x])).unwrap_or_default());
        let bad = if typed.is_none() {
            (0..a.len()).find(|&f| {
                b.then(self.src.mor[f], self.comp[a.tgt(f)]) != b.then(self.comp[a.src(f)], self.tgt.mor[f])
            })
        } else {
            None
        };
        r.check("naturality", bad.is_none(), bad.map(|f| format!("square at `{}` does not commute", a.morphisms[f].name)).unwrap_or_default());
        r
    }
}

/// Every functor `a -> b`, in lexicographic order of object then morphism
/// assignments.
pub fn all_functors(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> Vec<FinFunctor> {
    let mut out = Vec::new();
    let k = a.objects.len();
    let mut ob = vec![0; k];
    enumerate_objects(a, b, 0, &mut ob, &mut out);
    out
}

fn enumerate_objects(a: &Arc<FinCategory>, b: &Arc<FinCategory>, i: usize, ob: &mut Vec<usize>, out: &mut Vec<FinFunctor>) {
    if i == ob.len() {
        let mut mor = vec![usize::MAX; a.len()];
        for x in 0..a.objects.len() {
            mor[a.id(x)] = b.id(ob[x]);
        }
        let order: Vec<usize> = (0..a.len()).filter(|&f| !a.is_identity(f)).collect();
        enumerate_morphisms(a, b, ob, &order, 0, &mut mor, out);
        return;
    }
    for y in 0..b.objects.len() {
        ob[i] = y;
        enumerate_objects(a, b, i + 1, ob, out);
    }
}

fn enumerate_morphisms(
    a: &Arc<FinCategory>,
    b: &Arc<FinCategory>,
    ob: &[usize],
    order: &[usize],
    i: usize,
    mor: &mut Vec<usize>,
    out: &mut Vec<FinFunctor>,
) {
    if i == order.len() {
        out.push(FinFunctor { src: a.clone(), tgt: b.clone(), ob: ob.to_vec(), mor: mor.clone() });
        return;
    }
    let f = order[i];
    for &y in b.hom(ob[a.src(f)], ob[a.tgt(f)]) {
        mor[f] = y;
        // every composite whose three images are fixed must match
        let consistent = (0..a.len()).all(|g| {
            let pairs = [(f, g), (g, f)];
            pairs.iter().all(|&(p, q)| match a.try_then(p, q) {
                Some(r) if mor[p] != usize::MAX && mor[q] != usize::MAX && mor[r] != usize::MAX => b.then(mor[p], mor[q]) == mor[r],
                _ => true,
            })
        });
        if consistent {
            enumerate_morphisms(a, b, ob, order, i + 1, mor, out);
        }
    }
    mor[f] = usize::MAX;
}

/// Every natural transformation `f => g`.
pub fn all_nat_trans(f: &FinFunctor, g: &FinFunctor) -> Vec<FinNatTrans> {
    let k = f.src.objects.len();
    let mut out = Vec::new();
    let mut comp = vec![usize::MAX; k];
    fn go(f: &FinFunctor, g: &FinFunctor, x: usize, comp: &mut Vec<usize>, out: &mut Vec<FinNatTrans>) {
        let (a, b) = (&f.src, &f.tgt);
        if x == comp.len() {
            let t = FinNatTrans { src: f.clone(), tgt: g.clone(), comp: comp.clone() };
            if t.check().passed() {
                out.push(t);
            }
            return;
        }
        for &c in b.hom(f.ob[x], g.ob[x]) {
            comp[x] = c;
            // prune on squares between already chosen components
            let ok = (0..a.len()).all(|h| {
                let (s, t) = (a.src(h), a.tgt(h));
                s > x || t > x || b.then(f.mor[h], comp[t]) == b.then(comp[s], g.mor[h])
            });
            if ok {
                go(f, g, x + 1, comp, out);
            }
        }
        comp[x] = usize::MAX;
    }
    go(f, g, 0, &mut comp, &mut out);
    out
}

/// The functor category `[a, b]` with the functors and transformations
/// backing its objects and morphisms.
pub struct FunctorCategory {
    pub cat: FinCategory,
    pub functors: Vec<FinFunctor>,
    pub transformations: Vec<FinNatTrans>,
}

pub fn functor_category(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> FunctorCategory {
    let functors = all_functors(a, b);
    let mut transformations = Vec::new();
    let mut morphisms = Vec::new();
    let mut identities = vec![0; functors.len()];
    let mut index = HashMap::new();
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for t in all_nat_trans(f, g) {
                if i == j && t.comp == FinNatTrans::identity(f).comp {
                    identities[i] = morphisms.len();
                }
                index.insert((i, j, t.comp.clone()), morphisms.len());
                morphisms.push(Morphism { name: format!("n{}", morphisms.len()), src: i, tgt: j });
                transformations.push(t);
            }
        }
    }
    let objects = (0..functors.len()).map(|i| format!("F{i}")).collect();
    let tr = &transformations;
    let ms = morphisms.clone();
    let cat = FinCategory::build(format!("[{},{}]", a.name, b.name), objects, morphisms, identities, |p, q| {
        let comp: Vec<usize> = tr[p].comp.iter().zip(&tr[q].comp).map(|(&x, &y)| b.then(x, y)).collect();
        index[&(ms[p].src, ms[q].tgt, comp)]
    })
    .expect("functor categories are categories");
    FunctorCategory { cat, functors, transformations }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn functors_from_the_walking_arrow_are_arrows() {
        let two = Arc::new(FinCategory::walking_arrow());
        let c = Arc::new(FinCategory::chain(3));
        // functors [1] -> [3] are the six pairs i <= j
        assert_eq!(all_functors(&two, &c).len(), 6);
        assert!(all_functors(&two, &c).iter().all(FinFunctor::is_valid));
    }

    #[test]
    fn functor_category_of_terminal_is_isomorphic() {
        let one = Arc::new(FinCategory::terminal());
        let c = Arc::new(FinCategory::chain(3));
        let fc = functor_category(&one, &c);
        assert_eq!(fc.cat.canonical_key(), c.canonical_key());
    }
}
