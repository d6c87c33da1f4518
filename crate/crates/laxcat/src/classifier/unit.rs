//! `p: C ⇝ C̄`, `q: C̄ -> C` and the icon `η: Id => p q`.

use std::collections::BTreeMap;

use super::{Classifier, Orientation};
use crate::host::TwoCategory;
use crate::lax::{check_icon, check_lax_functor, identity_lax, Direction, IconData, LaxFunctorData};
use crate::presentation::{check_presented_functor, Path, Presented, PresentedFunctor, Term};
use crate::report::Report;
use crate::verdict::Verdict;

pub type UnitData<'a> = LaxFunctorData<Presented<'a>, Presented<'a>>;

fn direction(cl: &Classifier) -> Direction {
    match cl.orientation {
        Orientation::Lax => Direction::Lax,
        Orientation::Colax => Direction::Oplax,
    }
}

/// Sends each cell `f` to the one-letter sequence `(f)`, with the
/// comparison generators as comparison cells.
pub fn unit_p(cl: &Classifier) -> UnitData<'_> {
    let c = &cl.base.computad;
    let n = cl.cells.len();
    let mut comp = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if cl.cell_end(i) == cl.cells[j].start {
                comp.insert((i, j), cl.comparison(cl.cells[i].start, &[i, j]));
            }
        }
    }
    LaxFunctorData {
        name: "p".into(),
        direction: direction(cl),
        objects: (0..c.objects.len()).map(|x| (x, x)).collect(),
        ones: (0..n).map(|i| (cl.cells[i].clone(), cl.letter(i))).collect(),
        twos: Vec::new(),
        unit: (0..c.objects.len()).map(|x| cl.comparison(x, &[])).collect(),
        comp,
    }
}

/// The strict 2-functor composing sequences.
pub fn q_functor(cl: &Classifier) -> PresentedFunctor<Presented<'_>> {
    let k = &cl.result.computad;
    PresentedFunctor {
        obj: (0..k.objects.len()).collect(),
        one: cl.cells.clone(),
        two: cl
            .sequences
            .iter()
            .map(|(x, s)| Term::identity(cl.cells[cl.compose_all(*x, s)].clone()))
            .collect(),
    }
}

/// The classifier's paths up to the sequence bound.
pub fn listed_sequences(cl: &Classifier) -> Vec<Path> {
    cl.result.paths_up_to(cl.bound)
}

fn comparison_terms(cl: &Classifier) -> Vec<Term> {
    (0..cl.sequences.len()).map(|g| cl.result.computad.generator_term(g)).collect()
}

/// `q` as a strict functor on the listed sequences.
pub fn counit_q(cl: &Classifier) -> UnitData<'_> {
    let (k, c) = (cl.host(), cl.base_host());
    let q = q_functor(cl);
    let objects: Vec<usize> = (0..cl.base.computad.objects.len()).collect();
    let ones: Vec<Path> = listed_sequences(cl);
    let images: Vec<Path> = ones.iter().map(|h| q.image_path(&c, h).expect("q is typed")).collect();
    let mut comp = BTreeMap::new();
    for (i, f) in ones.iter().enumerate() {
        for (j, g) in ones.iter().enumerate() {
            if k.one_tgt(f) != g.start {
                continue;
            }
            let fg = k.compose(f, g).expect("composable");
            if ones.contains(&fg) {
                comp.insert((i, j), Term::identity(c.compose(&images[i], &images[j]).expect("composable")));
            }
        }
    }
    LaxFunctorData {
        name: "q".into(),
        direction: direction(cl),
        objects: objects.iter().map(|&x| (x, x)).collect(),
        ones: ones.into_iter().zip(images).collect(),
        twos: comparison_terms(cl).into_iter().zip(q.two).collect(),
        unit: objects.iter().map(|&x| Term::identity(Path::empty(x))).collect(),
        comp,
    }
}

/// `η: Id => p q` with component at a sequence its comparison cell.
pub fn unit_icon(cl: &Classifier) -> IconData<Presented<'_>, Presented<'_>> {
    let k = cl.host();
    let objects: Vec<usize> = (0..cl.base.computad.objects.len()).collect();
    let ones = listed_sequences(cl);
    let twos = comparison_terms(cl);
    let source = identity_lax(&k, "Id", &objects, &ones, &twos).expect("identity is well-typed");
    let collapse = |h: &Path| cl.compose_all(h.start, &h.edges);
    let mut comp = BTreeMap::new();
    for &(i, j) in source.comp.keys() {
        let (a, b) = (collapse(&ones[i]), collapse(&ones[j]));
        comp.insert((i, j), cl.comparison(cl.cells[a].start, &[a, b]));
    }
    let target = LaxFunctorData {
        name: "p q".into(),
        direction: Direction::Lax,
        objects: source.objects.clone(),
        ones: ones.iter().map(|h| (h.clone(), cl.letter(collapse(h)))).collect(),
        twos: cl.sequences.iter().zip(&twos).map(|((x, s), t)| (t.clone(), Term::identity(cl.letter(cl.compose_all(*x, s))))).collect(),
        unit: objects.iter().map(|&x| cl.comparison(x, &[])).collect(),
        comp,
    };
    let components = ones.iter().map(|h| cl.comparison(h.start, &h.edges)).collect();
    IconData { source, target, components }
}

/// Laws of `p` and `q`, `q p = Id` as strict data, the icon laws of `η`,
/// and the triangles `q η = 1`, `η p = 1`.
pub fn classifier_adjunction_check(cl: &Classifier) -> Report {
    let (k, c) = (cl.host(), cl.base_host());
    let mut r = Report::new(format!("p ⊣ q for {}", cl.result.name));
    let p = unit_p(cl);
    let q = q_functor(cl);
    match check_lax_functor(&c, &k, &p) {
        Ok(rep) => r.absorb("p: ", rep),
        Err(e) => r.push("p is well-typed", Verdict::NotEqual(e.to_string())),
    }
    match check_presented_functor(&cl.result, &c, &q) {
        Ok(rep) => r.absorb("q: ", rep),
        Err(e) => r.push("q is well-typed", Verdict::NotEqual(e.to_string())),
    }

    let mut ok = true;
    for (f, img) in &p.ones {
        ok &= q.image_path(&c, img).map(|g| g == *f).unwrap_or(false);
    }
    let cells = p.unit.iter().chain(p.comp.values());
    for t in cells {
        ok &= q.image_term(&cl.result, &c, t).map(|u| u.is_identity()).unwrap_or(false);
    }
    r.check("q p = Id", ok, "q p differs from the identity on some generator");

    if cl.orientation == Orientation::Lax {
        let icon = unit_icon(cl);
        match check_icon(&k, &k, &icon) {
            Ok(rep) => r.absorb("η: ", rep),
            Err(e) => r.push("η is well-typed", Verdict::NotEqual(e.to_string())),
        }
        let qeta = icon
            .components
            .iter()
            .all(|t| q.image_term(&cl.result, &c, t).map(|u| u.is_identity()).unwrap_or(false));
        r.check("q η = 1", qeta, "q sends some component of η to a non-identity");
        let etap = icon
            .source
            .ones
            .iter()
            .zip(&icon.components)
            .filter(|(h, _)| h.0.len() == 1)
            .all(|(_, t)| k.compare(t, &k.identity2(&t.src)).is_equal() && t.src == t.tgt);
        r.check("η p = 1", etap, "some component of η at a one-letter sequence is not an identity");
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::{classifier, mixed_classifier};
    use crate::presentation::Presentation;

    #[test]
    fn terminal_p_sends_identity_to_one_letter() {
        let cl = classifier(&Presentation::terminal()).unwrap();
        let p = unit_p(&cl);
        assert_eq!(p.ones.len(), 1);
        assert_eq!(p.ones[0].1, Path { start: 0, edges: vec![0] });
        assert_eq!(cl.result.computad.show_path(&p.ones[0].1), "[1_*]");
    }

    #[test]
    fn q_on_empty_sequence_is_identity() {
        let cl = classifier(&Presentation::walking_arrow()).unwrap();
        let q = q_functor(&cl);
        let c = cl.base_host();
        assert_eq!(q.image_path(&c, &Path::empty(1)).unwrap(), Path::empty(1));
    }

    #[test]
    fn adjunction_for_small_bases() {
        for base in [Presentation::terminal(), Presentation::walking_arrow(), Presentation::ordinal(2)] {
            let cl = classifier(&base).unwrap();
            let r = classifier_adjunction_check(&cl);
            assert!(r.passed(), "{}", r.render_text());
            assert!(r.entries.iter().any(|e| e.law == "η: naturality"));
        }
    }

    #[test]
    fn counit_q_is_strict_and_lawful() {
        let cl = classifier(&Presentation::walking_arrow()).unwrap();
        let q = counit_q(&cl);
        let r = check_lax_functor(&cl.host(), &cl.base_host(), &q).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert!(q.is_strict(&cl.base_host()));
    }

    #[test]
    fn colax_p_is_oplax_and_lawful() {
        let cl = mixed_classifier(&Presentation::walking_arrow()).unwrap();
        let r = classifier_adjunction_check(&cl);
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn broken_unit_is_refuted() {
        let cl = classifier(&Presentation::terminal()).unwrap();
        let mut p = unit_p(&cl);
        // an identity on the sequence has the wrong target
        p.comp.insert((0, 0), cl.host().identity2(&cl.sequence_path(0, &[0, 0])));
        assert!(check_lax_functor(&cl.base_host(), &cl.host(), &p).unwrap().refuted());
    }
}
