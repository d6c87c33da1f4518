//! Functoriality of the tensor in strict 2-functors, and the duality
//! `(A ⊗ B)^op ≅ B^op ⊗ A^op`.

use super::{GrayTensor, OneTag, TwoTag};
use crate::presentation::{check_presented_functor, Layer, Path, Presentation, PresentationError, Presented, PresentedFunctor, Term};
use crate::report::Report;

/// `F ⊗ G` on generators, from `src` to `tgt`, for 2-functors `F` between
/// the left factors and `G` between the right factors.
pub fn gray_functoriality<'b>(
    src: &GrayTensor,
    tgt: &'b GrayTensor,
    f: &PresentedFunctor<Presented<'_>>,
    g: &PresentedFunctor<Presented<'_>>,
) -> PresentedFunctor<Presented<'b>> {
    let obj = (0..src.result.computad.objects.len())
        .map(|o| {
            let (x, y) = src.coords(o);
            tgt.obj(f.obj[x], g.obj[y])
        })
        .collect();
    let one = src
        .one_tags
        .iter()
        .map(|tag| match *tag {
            OneTag::Left { gen, obj } => tgt.left_path(&f.one[gen], g.obj[obj]),
            OneTag::Right { obj, gen } => tgt.right_path(f.obj[obj], &g.one[gen]),
        })
        .collect();
    let two = src
        .two_tags
        .iter()
        .map(|tag| match *tag {
            TwoTag::Left { gen, obj } => tgt.left_term(&f.two[gen], g.obj[obj]),
            TwoTag::Right { obj, gen } => tgt.right_term(f.obj[obj], &g.two[gen]),
            TwoTag::Swap { left, right } => tgt.swap_paths(&f.one[left], &g.one[right]),
        })
        .collect();
    PresentedFunctor { obj, one, two }
}

/// Audits both factors and then `F ⊗ G` against every rule and relation of
/// the source tensor.
pub fn check_gray_functoriality(
    src: &GrayTensor,
    tgt: &GrayTensor,
    f: &PresentedFunctor<Presented<'_>>,
    g: &PresentedFunctor<Presented<'_>>,
) -> Result<Report, PresentationError> {
    let mut r = Report::new(format!("{} to {}", src.result.name, tgt.result.name));
    let fl = PresentedFunctor::<Presented> { obj: f.obj.clone(), one: f.one.clone(), two: f.two.clone() };
    let gl = PresentedFunctor::<Presented> { obj: g.obj.clone(), one: g.one.clone(), two: g.two.clone() };
    r.absorb("F: ", check_presented_functor(&src.left, &Presented::new(&tgt.left), &fl)?);
    r.absorb("G: ", check_presented_functor(&src.right, &Presented::new(&tgt.right), &gl)?);
    let fg = gray_functoriality(src, tgt, f, g);
    r.absorb("F⊗G: ", check_presented_functor(&src.result, &tgt.host(), &fg)?);
    Ok(r)
}

fn letter(start: usize, e: usize) -> Path {
    Path { start, edges: vec![e] }
}

/// The generator map `(A ⊗ B)^op -> B^op ⊗ A^op`, where `dual` is the tensor
/// of the opposites of `t`'s factors in swapped order.
pub fn duality_iso<'b>(t: &GrayTensor, dual: &'b GrayTensor) -> PresentedFunctor<Presented<'b>> {
    let (ca, cb) = (&t.left.computad, &t.right.computad);
    let dc = &dual.result.computad;
    let obj = (0..t.result.computad.objects.len())
        .map(|o| {
            let (x, y) = t.coords(o);
            dual.obj(y, x)
        })
        .collect();
    let one = t
        .one_tags
        .iter()
        .map(|tag| match *tag {
            OneTag::Left { gen, obj } => dual.right_path(obj, &letter(ca.one[gen].tgt, gen)),
            OneTag::Right { obj, gen } => dual.left_path(&letter(cb.one[gen].tgt, gen), obj),
        })
        .collect();
    let two = t
        .two_tags
        .iter()
        .map(|tag| match *tag {
            TwoTag::Left { gen, obj } => dual.right_term(obj, &dual.right.computad.generator_term(gen)),
            TwoTag::Right { obj, gen } => dual.left_term(&dual.left.computad.generator_term(gen), obj),
            TwoTag::Swap { left, right } => {
                let s = dual.swap_paths(&letter(cb.one[right].tgt, right), &letter(ca.one[left].tgt, left));
                debug_assert_eq!(s.layers.len(), 1);
                Term { layers: s.layers.clone(), ..dc.generator_term(s.layers[0].gen) }
            }
        })
        .collect();
    PresentedFunctor { obj, one, two }
}

/// Builds `(A ⊗ B)^op` and `B^op ⊗ A^op`, audits the generator maps both
/// ways and checks that they are mutually inverse on generators.
pub fn duality_check(a: &Presentation, b: &Presentation) -> Result<Report, PresentationError> {
    let t = super::gray_tensor(a, b)?;
    let dual = super::gray_tensor(&b.opposite(), &a.opposite())?;
    let op = t.result.opposite();
    let mut r = Report::new(format!("({})^op against {}", t.result.name, dual.result.name));
    let there = duality_iso(&t, &dual);
    r.absorb("forward: ", check_presented_functor(&op, &dual.host(), &there)?);
    // the inverse is the same construction read from the other side
    let back = reverse_images(&t, duality_iso(&dual, &t));
    r.absorb("backward: ", check_presented_functor(&dual.result, &Presented::new(&op), &back)?);
    let trip = there.then(&dual.result, &Presented::new(&op), &back).map_err(|e| PresentationError::Other(e.to_string()))?;
    let id = PresentedFunctor::identity(&op);
    r.check(
        "round trip is the identity on generators",
        trip.obj == id.obj && trip.one == id.one && trip.two.iter().zip(&id.two).all(|(x, y)| op.normal_form(x) == op.normal_form(y)),
        "some generator does not come back to itself",
    );
    Ok(r)
}

/// Images computed in `t.result` read as images in its opposite: paths and
/// layers reversed.
fn reverse_images<'b>(t: &GrayTensor, f: PresentedFunctor<Presented<'_>>) -> PresentedFunctor<Presented<'b>> {
    let c = &t.result.computad;
    let rev = |p: &Path| Path { start: c.end(p), edges: p.edges.iter().rev().copied().collect() };
    PresentedFunctor {
        obj: f.obj,
        one: f.one.iter().map(rev).collect(),
        two: f
            .two
            .iter()
            .map(|x| {
                let slices = c.slices(x).expect("well-typed image");
                let layers = x
                    .layers
                    .iter()
                    .zip(&slices)
                    .map(|(l, s)| Layer { offset: s.len() - l.offset - c.two[l.gen].src.len(), gen: l.gen })
                    .collect();
                Term { src: rev(&x.src), tgt: rev(&x.tgt), layers }
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gray::gray_tensor;

    #[test]
    fn identity_tensor_identity_is_identity() {
        let two = Presentation::walking_arrow();
        let t = gray_tensor(&two, &two).unwrap();
        let id = PresentedFunctor::identity(&two);
        let r = check_gray_functoriality(&t, &t, &id, &id).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let fg = gray_functoriality(&t, &t, &id, &id);
        let all = PresentedFunctor::identity(&t.result);
        assert_eq!((fg.obj, fg.one, fg.two), (all.obj, all.one, all.two));
    }

    #[test]
    fn collapse_sends_swaps_to_identities() {
        let (two, one) = (Presentation::walking_arrow(), Presentation::terminal());
        let src = gray_tensor(&two, &two).unwrap();
        let tgt = gray_tensor(&one, &two).unwrap();
        let collapse = PresentedFunctor::<Presented> { obj: vec![0, 0], one: vec![Path::empty(0)], two: vec![] };
        let id = PresentedFunctor::identity(&two);
        let r = check_gray_functoriality(&src, &tgt, &collapse, &id).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let fg = gray_functoriality(&src, &tgt, &collapse, &id);
        assert!(fg.two.iter().all(Term::is_identity));
    }

    #[test]
    fn composition_is_preserved() {
        let (two, one) = (Presentation::walking_arrow(), Presentation::terminal());
        let t22 = gray_tensor(&two, &two).unwrap();
        let t12 = gray_tensor(&one, &two).unwrap();
        let t11 = gray_tensor(&one, &one).unwrap();
        let collapse = PresentedFunctor::<Presented> { obj: vec![0, 0], one: vec![Path::empty(0)], two: vec![] };
        let id1 = PresentedFunctor::identity(&one);
        let id2 = PresentedFunctor::identity(&two);
        let step = gray_functoriality(&t22, &t12, &collapse, &id2);
        let next = gray_functoriality(&t12, &t11, &id1, &collapse);
        let composite = step.then(&t12.result, &t11.host(), &next).unwrap();
        let direct = gray_functoriality(&t22, &t11, &collapse, &collapse);
        assert_eq!((composite.obj, composite.one), (direct.obj, direct.one));
        assert!(composite.two.iter().zip(&direct.two).all(|(a, b)| t11.result.normal_form(a) == t11.result.normal_form(b)));
    }

    #[test]
    fn duality_on_two_tensor_two() {
        let two = Presentation::walking_arrow();
        let r = duality_check(&two, &two).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }
}
