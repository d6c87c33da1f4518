//! Lax functors out of a base correspond to 2-functors out of its
//! classifier.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{Classifier, Orientation};
use crate::fincat::{all_functors, all_nat_trans, FinCat, FinCategory, FinFunctor};
use crate::host::{HostError, TwoCategory};
use crate::lax::{check_lax_functor, Direction, LaxFunctorData};
use crate::monads::examples::fincat_corpus;
use crate::monads::MonadData;
use crate::presentation::{check_presented_functor, Presented, PresentedFunctor};
use crate::report::Report;
use crate::verdict::Verdict;

pub type BaseLax<'a, K> = LaxFunctorData<Presented<'a>, K>;

fn expected_direction(cl: &Classifier) -> Direction {
    match cl.orientation {
        Orientation::Lax => Direction::Lax,
        Orientation::Colax => Direction::Oplax,
    }
}

/// The 2-functor out of the classifier: cells go to their images, each
/// comparison generator to the matching composite of comparison cells.
pub fn transpose<'a, K: TwoCategory>(cl: &'a Classifier, k: &K, f: &BaseLax<'a, K>) -> Result<PresentedFunctor<K>, HostError> {
    let d = cl.base_host();
    if f.direction != expected_direction(cl) {
        return Err(HostError::new("direction does not match the classifier's orientation"));
    }
    let laws = check_lax_functor(&d, k, f)?;
    if let Some(bad) = laws.failures().first() {
        return Err(HostError::new(format!("{} fails {}: {}", f.name, bad.law, bad.verdict.detail())));
    }
    let obj = (0..cl.base.computad.objects.len())
        .map(|x| f.ob(&x).cloned().ok_or_else(|| HostError::new(format!("no image for object {x}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let index = (0..cl.cells.len())
        .map(|i| f.one_index(&d, &cl.cells[i]).ok_or_else(|| HostError::new(format!("no image for {}", cl.base.computad.show_path(&cl.cells[i])))))
        .collect::<Result<Vec<_>, _>>()?;
    let one: Vec<K::One> = index.iter().map(|&n| f.ones[n].1.clone()).collect();
    let mut two: Vec<K::Two> = Vec::with_capacity(cl.sequences.len());
    for (x, s) in &cl.sequences {
        let cell = match s.len() {
            0 => f.unit[f.object_index(x).expect("objects are listed")].clone(),
            2 => f.comp.get(&(index[s[0]], index[s[1]])).cloned().ok_or_else(|| HostError::new("missing comparison cell"))?,
            n => {
                let (init, last) = s.split_at(n - 1);
                let head = two[cl.comparison_gen(*x, init).expect("shorter sequences come first")].clone();
                let whiskered = k.whisker(&k.identity(&obj[*x]), &head, &one[last[0]])?;
                let c = cl.compose_all(*x, init);
                let binary = f.comp.get(&(index[c], index[last[0]])).cloned().ok_or_else(|| HostError::new("missing comparison cell"))?;
                match cl.orientation {
                    Orientation::Lax => k.vertical(&whiskered, &binary)?,
                    Orientation::Colax => k.vertical(&binary, &whiskered)?,
                }
            }
        };
        two.push(cell);
    }
    Ok(PresentedFunctor { obj, one, two })
}

/// Reads a lax functor off a 2-functor out of the classifier.
pub fn untranspose<'a, K: TwoCategory>(cl: &Classifier, g: &PresentedFunctor<K>) -> BaseLax<'a, K> {
    let n = cl.cells.len();
    let mut comp = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if let Some(gen) = cl.comparison_gen(cl.cells[i].start, &[i, j]) {
                comp.insert((i, j), g.two[gen].clone());
            }
        }
    }
    let objects = cl.base.computad.objects.len();
    LaxFunctorData {
        name: "untransposed".into(),
        direction: expected_direction(cl),
        objects: (0..objects).map(|x| (x, g.obj[x].clone())).collect(),
        ones: (0..n).map(|i| (cl.cells[i].clone(), g.one[i].clone())).collect(),
        twos: Vec::new(),
        unit: (0..objects).map(|x| g.two[cl.comparison_gen(x, &[]).expect("nullary comparisons exist")].clone()).collect(),
        comp,
    }
}

/// The same objects, 1-cell images and comparison cells, regardless of the
/// order 1-cells are listed in.
pub fn same_lax_data<D: TwoCategory, K: TwoCategory>(d: &D, k: &K, a: &LaxFunctorData<D, K>, b: &LaxFunctorData<D, K>) -> Verdict {
    let fail = |why: String| Verdict::NotEqual(why);
    if a.direction != b.direction || a.objects != b.objects || a.ones.len() != b.ones.len() || a.comp.len() != b.comp.len() {
        return fail("shapes differ".into());
    }
    let mut map = Vec::new();
    for (f, img) in &a.ones {
        match b.one_index(d, f) {
            Some(j) if b.ones[j].1 == *img => map.push(j),
            _ => return fail(format!("images of {} differ", d.show_one(f))),
        }
    }
    for (u, v) in a.unit.iter().zip(&b.unit) {
        if !k.compare(u, v).is_equal() {
            return fail("unit cells differ".into());
        }
    }
    for (&(i, j), c) in &a.comp {
        match b.comp.get(&(map[i], map[j])) {
            Some(c2) if k.compare(c, c2).is_equal() => {}
            _ => return fail(format!("comparison at ({}, {}) differs", d.show_one(&a.ones[i].0), d.show_one(&a.ones[j].0))),
        }
    }
    Verdict::Equal(crate::verdict::Witness::Componentwise)
}

/// `transpose` lands in 2-functors, and both round trips are identities.
pub fn transpose_roundtrip<'a, K: TwoCategory>(cl: &'a Classifier, k: &K, f: &BaseLax<'a, K>) -> Result<Report, HostError> {
    let d = cl.base_host();
    let mut r = Report::new(format!("transpose of {}", f.name));
    let g = transpose(cl, k, f)?;
    let audit = check_presented_functor(&cl.result, k, &g).map_err(|e| HostError::new(e.to_string()))?;
    r.absorb("2-functor: ", audit);
    let back = untranspose(cl, &g);
    r.push("untranspose ∘ transpose = Id", same_lax_data(&d, k, f, &back));
    let again = transpose(cl, k, &back)?;
    let mut v = Verdict::Equal(crate::verdict::Witness::Componentwise);
    if g.obj != again.obj || g.one != again.one {
        v = Verdict::NotEqual("object or 1-cell images differ".into());
    } else if let Some(i) = (0..g.two.len()).find(|&i| !k.compare(&g.two[i], &again.two[i]).is_equal()) {
        v = Verdict::NotEqual(format!("image of {} differs", cl.result.computad.two[i].name));
    }
    r.push("transpose ∘ untranspose = Id", v);
    Ok(r)
}

/// A monad as a lax functor out of the terminal presentation.
pub fn monad_as_lax<'a, K: TwoCategory>(m: &MonadData<K>) -> BaseLax<'a, K> {
    LaxFunctorData {
        name: m.name.clone(),
        direction: Direction::Lax,
        objects: vec![(0, m.object.clone())],
        ones: vec![(crate::presentation::Path::empty(0), m.t.clone())],
        twos: Vec::new(),
        unit: vec![m.eta.clone()],
        comp: BTreeMap::from([((0, 0), m.mu.clone())]),
    }
}

/// Every lawful lax functor into `FinCat` out of the terminal presentation
/// and the walking arrow whose monads come from the bundled corpus on
/// categories with at most two objects. The arrow goes to any functor, the
/// actions range over all natural transformations.
pub fn fincat_lax_pool<'a>(arrow: &'a Classifier) -> (Vec<BaseLax<'a, FinCat>>, Vec<BaseLax<'a, FinCat>>) {
    let monads: Vec<MonadData<FinCat>> = fincat_corpus().into_iter().filter(|m| m.object.objects.len() <= 2).collect();
    let ones: Vec<BaseLax<'a, FinCat>> = monads.iter().map(monad_as_lax).collect();

    let d = arrow.base_host();
    let (c0, c1, u) = (arrow.identity_cell(0), arrow.identity_cell(1), arrow.cell_index(&arrow.base.p(&["u"])).expect("u is a cell"));
    let mut twos = Vec::new();
    for s in &monads {
        for t in &monads {
            let (a0, a1): (&Arc<FinCategory>, &Arc<FinCategory>) = (&s.object, &t.object);
            for h in all_functors(a0, a1) {
                let lefts = all_nat_trans(&s.t.then(&h), &h);
                let rights = all_nat_trans(&h.then(&t.t), &h);
                for l in &lefts {
                    for r in &rights {
                        let mut ones = vec![(arrow.cells[0].clone(), FinFunctor::identity(a0)); 3];
                        ones[c0] = (arrow.cells[c0].clone(), s.t.clone());
                        ones[c1] = (arrow.cells[c1].clone(), t.t.clone());
                        ones[u] = (arrow.cells[u].clone(), h.clone());
                        let data = LaxFunctorData {
                            name: format!("{} -[{}]-> {}", s.name, twos.len(), t.name),
                            direction: Direction::Lax,
                            objects: vec![(0, a0.clone()), (1, a1.clone())],
                            ones,
                            twos: Vec::new(),
                            unit: vec![s.eta.clone(), t.eta.clone()],
                            comp: BTreeMap::from([((c0, c0), s.mu.clone()), ((c1, c1), t.mu.clone()), ((c0, u), l.clone()), ((u, c1), r.clone())]),
                        };
                        if check_lax_functor(&d, &FinCat, &data).map(|rep| rep.passed()).unwrap_or(false) {
                            twos.push(data);
                        }
                    }
                }
            }
        }
    }
    (ones, twos)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::{classifier, q_functor};
    use crate::lax::identity_lax;
    use crate::monads::examples::chain_monad;
    use crate::presentation::Presentation;

    #[test]
    fn monad_roundtrips_through_the_classifier() {
        let cl = classifier(&Presentation::terminal()).unwrap();
        let f = monad_as_lax(&chain_monad());
        let r = transpose_roundtrip(&cl, &FinCat, &f).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let g = transpose(&cl, &FinCat, &f).unwrap();
        assert_eq!(g.one[0], chain_monad().t);
    }

    #[test]
    fn strict_functor_factors_through_q() {
        let cl = classifier(&Presentation::walking_arrow()).unwrap();
        let d = cl.base_host();
        let objects = [0, 1];
        let f = identity_lax(&d, "Id", &objects, &cl.cells, &[]).unwrap();
        let g = transpose(&cl, &d, &f).unwrap();
        let q = q_functor(&cl);
        assert_eq!(g.one, q.one);
        for (a, b) in g.two.iter().zip(&q.two) {
            assert!(a.is_identity() && b.is_identity());
            assert_eq!(a.src, b.src);
        }
    }

    #[test]
    fn unlawful_functor_is_refused() {
        let cl = classifier(&Presentation::terminal()).unwrap();
        let mut m = chain_monad();
        m.eta = crate::fincat::FinNatTrans::identity(&m.t);
        let f = monad_as_lax(&m);
        assert!(transpose(&cl, &FinCat, &f).is_err());
    }

    #[test]
    fn pool_is_lawful_and_nonempty() {
        let arrow = classifier(&Presentation::walking_arrow()).unwrap();
        let (a, b) = fincat_lax_pool(&arrow);
        assert_eq!(a.len(), 4);
        assert!(b.len() >= 20, "only {} lax functors on the arrow", b.len());
        for f in b.iter().take(10) {
            let r = transpose_roundtrip(&arrow, &FinCat, f).unwrap();
            assert!(r.passed(), "{}", r.render_text());
        }
    }
}
