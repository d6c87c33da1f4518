//! The comultiplication `δ: C̄ -> C̄ ⊗ C̄`, determined by `δ p = σ_l Δ p`,
//! and the counit `C̄ -> 1`.

use std::collections::BTreeMap;

use super::{transpose, Classifier, Orientation};
use crate::gray::{gray_functoriality, gray_tensor, sigma_comp, sigma_one, sigma_two, GrayTensor, OneTag, TwoTag};
use crate::host::{HostError, TwoCategory};
use crate::lax::{Direction, LaxFunctorData};
use crate::presentation::{check_presented_functor, Path, Presentation, Presented, PresentedFunctor, Term};
use crate::report::Report;
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Debug)]
pub struct Comonoid {
    /// `C̄ ⊗ C̄`.
    pub tensor: GrayTensor,
    /// The terminal presentation.
    pub unit: Presentation,
    delta: PresentedFunctor<Presented<'static>>,
    counit: PresentedFunctor<Presented<'static>>,
}

impl Comonoid {
    /// `δ`, landing in `tensor`.
    pub fn delta(&self) -> PresentedFunctor<Presented<'_>> {
        self.delta.clone().rehost()
    }

    /// The counit, landing in `unit`.
    pub fn counit(&self) -> PresentedFunctor<Presented<'_>> {
        self.counit.clone().rehost()
    }
}

fn tensor_of(a: &Presentation, b: &Presentation) -> Result<GrayTensor, HostError> {
    gray_tensor(a, b).map_err(|e| HostError::new(e.to_string()))
}

/// `σ_l Δ p` as a lax functor out of the base.
fn sigma_delta_p<'a>(cl: &Classifier, t: &'a GrayTensor) -> LaxFunctorData<Presented<'a>, Presented<'a>> {
    let c = &t.result.computad;
    let lax = Direction::Lax;
    let n = cl.cells.len();
    let objects = cl.base.computad.objects.len();
    let image = |i: usize| sigma_one(t, lax, &cl.letter(i), &cl.letter(i));
    let mut comp = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if cl.cell_end(i) != cl.cells[j].start {
                continue;
            }
            let (li, lj) = (cl.letter(i), cl.letter(j));
            let swap = sigma_comp(t, lax, (&li, &li), (&lj, &lj));
            let f = cl.comparison(cl.cells[i].start, &[i, j]);
            let merge = sigma_two(t, lax, &f, &f);
            comp.insert((i, j), c.vertical(&swap, &merge).expect("boundaries meet"));
        }
    }
    LaxFunctorData {
        name: "σ_l Δ p".into(),
        direction: lax,
        objects: (0..objects).map(|x| (x, t.obj(x, x))).collect(),
        ones: (0..n).map(|i| (cl.cells[i].clone(), image(i))).collect(),
        twos: Vec::new(),
        unit: (0..objects)
            .map(|x| {
                let u = cl.comparison(x, &[]);
                sigma_two(t, lax, &u, &u)
            })
            .collect(),
        comp,
    }
}

/// `δ` as the transpose of `σ_l Δ p`, and the counit sending everything to
/// identities. Only lax classifiers carry this structure here.
pub fn comultiplication(cl: &Classifier) -> Result<Comonoid, HostError> {
    if cl.orientation != Orientation::Lax {
        return Err(HostError::new("the comultiplication is built for lax classifiers"));
    }
    let tensor = tensor_of(&cl.result, &cl.result)?;
    let delta = {
        let l = sigma_delta_p(cl, &tensor);
        transpose(cl, &tensor.host(), &l)?.rehost()
    };
    let k = &cl.result.computad;
    let counit = PresentedFunctor {
        obj: vec![0; k.objects.len()],
        one: vec![Path::empty(0); k.one.len()],
        two: vec![Term::identity(Path::empty(0)); k.two.len()],
    };
    Ok(Comonoid { tensor, unit: Presentation::terminal(), delta, counit })
}

/// Compares two 2-functors out of `src` generator by generator.
fn agree<H: TwoCategory>(src: &Presentation, h: &H, a: &PresentedFunctor<H>, b: &PresentedFunctor<H>) -> Verdict {
    let c = &src.computad;
    if a.obj != b.obj {
        return Verdict::NotEqual("object images differ".into());
    }
    if let Some(i) = (0..a.one.len()).find(|&i| !h.same_one(&a.one[i], &b.one[i])) {
        return Verdict::NotEqual(format!("images of {} differ", c.one[i].name));
    }
    let mut unknown = None;
    for i in 0..a.two.len() {
        match h.compare(&a.two[i], &b.two[i]) {
            Verdict::NotEqual(why) => return Verdict::NotEqual(format!("images of {} differ: {why}", c.two[i].name)),
            v @ Verdict::Unknown { .. } => unknown = Some(v),
            Verdict::Equal(_) => {}
        }
    }
    unknown.unwrap_or(Verdict::Equal(Witness::Componentwise))
}

/// `1 ⊗ B -> B` or `B ⊗ 1 -> B`, whichever factor is terminal.
fn unitor<'b>(t: &GrayTensor, b: &'b Presentation, terminal_left: bool) -> PresentedFunctor<Presented<'b>> {
    let c = &b.computad;
    let letter = |g: usize| Path { start: c.one[g].src, edges: vec![g] };
    PresentedFunctor {
        obj: (0..t.result.computad.objects.len()).map(|o| if terminal_left { t.coords(o).1 } else { t.coords(o).0 }).collect(),
        one: t
            .one_tags
            .iter()
            .map(|tag| match (*tag, terminal_left) {
                (OneTag::Right { gen, .. }, true) | (OneTag::Left { gen, .. }, false) => letter(gen),
                _ => unreachable!("the terminal factor has no 1-generators"),
            })
            .collect(),
        two: t
            .two_tags
            .iter()
            .map(|tag| match (*tag, terminal_left) {
                (TwoTag::Right { gen, .. }, true) | (TwoTag::Left { gen, .. }, false) => c.generator_term(gen),
                _ => unreachable!("the terminal factor has no generators"),
            })
            .collect(),
    }
}

/// `δ` is a 2-functor, and both counit laws hold on generators.
pub fn counit_check(cl: &Classifier, m: &Comonoid) -> Result<Report, HostError> {
    let mut r = Report::new(format!("counit of {}", cl.result.name));
    let (k, th) = (cl.host(), m.tensor.host());
    let delta = m.delta();
    let audit = check_presented_functor(&cl.result, &th, &delta).map_err(|e| HostError::new(e.to_string()))?;
    r.absorb("δ: ", audit);
    let id = PresentedFunctor::identity(&cl.result);
    for (law, terminal_left) in [("(ε ⊗ 1) δ = 1", true), ("(1 ⊗ ε) δ = 1", false)] {
        let t1 = if terminal_left { tensor_of(&m.unit, &cl.result)? } else { tensor_of(&cl.result, &m.unit)? };
        let side = if terminal_left { gray_functoriality(&m.tensor, &t1, &m.counit(), &id) } else { gray_functoriality(&m.tensor, &t1, &id, &m.counit()) };
        let composite = delta.then(&m.tensor.result, &t1.host(), &side)?.then(&t1.result, &k, &unitor(&t1, &cl.result, terminal_left))?;
        r.push(law, agree(&cl.result, &k, &composite, &id));
    }
    Ok(r)
}

/// The associator `(A ⊗ B) ⊗ C -> A ⊗ (B ⊗ C)` on generators, where `ab`
/// is `A ⊗ B`, `ab_c` is `(A ⊗ B) ⊗ C`, `bc` is `B ⊗ C` and `a_bc` is
/// `A ⊗ (B ⊗ C)`.
pub fn associator<'b>(ab: &GrayTensor, ab_c: &GrayTensor, bc: &GrayTensor, a_bc: &'b GrayTensor) -> PresentedFunctor<Presented<'b>> {
    let (ca, cb, cc) = (&ab.left.computad, &ab.right.computad, &bc.right.computad);
    let la = |g: usize| Path { start: ca.one[g].src, edges: vec![g] };
    let lb = |g: usize| Path { start: cb.one[g].src, edges: vec![g] };
    let lc = |g: usize| Path { start: cc.one[g].src, edges: vec![g] };
    let obj = (0..ab_c.result.computad.objects.len())
        .map(|o| {
            let (xy, z) = ab_c.coords(o);
            let (x, y) = ab.coords(xy);
            a_bc.obj(x, bc.obj(y, z))
        })
        .collect();
    let one = ab_c
        .one_tags
        .iter()
        .map(|tag| match *tag {
            OneTag::Left { gen, obj: z } => match ab.one_tags[gen] {
                OneTag::Left { gen: f, obj: y } => a_bc.left_path(&la(f), bc.obj(y, z)),
                OneTag::Right { obj: x, gen: g } => a_bc.right_path(x, &bc.left_path(&lb(g), z)),
            },
            OneTag::Right { obj, gen: h } => {
                let (x, y) = ab.coords(obj);
                a_bc.right_path(x, &bc.right_path(y, &lc(h)))
            }
        })
        .collect();
    let two = ab_c
        .two_tags
        .iter()
        .map(|tag| match *tag {
            TwoTag::Left { gen, obj: z } => match ab.two_tags[gen] {
                TwoTag::Left { gen: a, obj: y } => a_bc.left_term(&ca.generator_term(a), bc.obj(y, z)),
                TwoTag::Right { obj: x, gen: b } => a_bc.right_term(x, &bc.left_term(&cb.generator_term(b), z)),
                TwoTag::Swap { left: f, right: g } => a_bc.swap_paths(&la(f), &bc.left_path(&lb(g), z)),
            },
            TwoTag::Right { obj, gen: c } => {
                let (x, y) = ab.coords(obj);
                a_bc.right_term(x, &bc.right_term(y, &cc.generator_term(c)))
            }
            TwoTag::Swap { left: e, right: h } => match ab.one_tags[e] {
                OneTag::Left { gen: f, obj: y } => a_bc.swap_paths(&la(f), &bc.right_path(y, &lc(h))),
                OneTag::Right { obj: x, gen: g } => a_bc.right_term(x, &bc.swap_paths(&lb(g), &lc(h))),
            },
        })
        .collect();
    PresentedFunctor { obj, one, two }
}

/// The associator is a 2-functor and `(δ ⊗ 1) δ` followed by it agrees with
/// `(1 ⊗ δ) δ` on every generator of the classifier.
pub fn coassociativity_check(cl: &Classifier, m: &Comonoid) -> Result<Report, HostError> {
    let mut r = Report::new(format!("coassociativity of {}", cl.result.name));
    let t = &m.tensor;
    let (t2, u2) = (tensor_of(&t.result, &cl.result)?, tensor_of(&cl.result, &t.result)?);
    let assoc = associator(t, &t2, t, &u2);
    let audit = check_presented_functor(&t2.result, &u2.host(), &assoc).map_err(|e| HostError::new(e.to_string()))?;
    r.absorb("associator: ", audit);

    let id = PresentedFunctor::identity(&cl.result);
    let delta = m.delta();
    let left = delta
        .then(&t.result, &t2.host(), &gray_functoriality(t, &t2, &delta, &id))?
        .then(&t2.result, &u2.host(), &assoc)?;
    let right = delta.then(&t.result, &u2.host(), &gray_functoriality(t, &u2, &id, &delta))?;
    r.push("(1 ⊗ δ) δ = α (δ ⊗ 1) δ", agree(&cl.result, &u2.host(), &left, &right));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::{classifier, mixed_classifier};
    use crate::gray::Letter;

    #[test]
    fn delta_of_t_is_left_then_right() {
        let cl = classifier(&Presentation::terminal()).unwrap();
        let m = comultiplication(&cl).unwrap();
        let d = m.delta();
        assert_eq!(m.tensor.letters(&d.one[0]), vec![Letter::A(0), Letter::B(0)]);
    }

    #[test]
    fn comonoid_laws_on_the_terminal_classifier() {
        let cl = classifier(&Presentation::terminal()).unwrap();
        let m = comultiplication(&cl).unwrap();
        let r = counit_check(&cl, &m).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let r = coassociativity_check(&cl, &m).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn comultiplication_needs_a_lax_classifier() {
        let cl = mixed_classifier(&Presentation::terminal()).unwrap();
        assert!(comultiplication(&cl).is_err());
    }


    #[test]
    fn comonoid_laws_on_the_walking_arrow() {
        let cl = classifier(&Presentation::walking_arrow()).unwrap();
        let m = comultiplication(&cl).unwrap();
        for r in [counit_check(&cl, &m).unwrap(), coassociativity_check(&cl, &m).unwrap()] {
            assert!(r.passed(), "{}", r.render_text());
            assert!(!r.any_unknown());
        }
    }
}
