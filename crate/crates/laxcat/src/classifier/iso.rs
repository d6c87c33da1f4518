//! Explicit generator isomorphisms between classifiers and the bundled
//! presentations of monads, comonads and distributive laws.

use super::{monad_as_lax, transpose, Classifier, Orientation};
use crate::distlaw::dist_presentation;
use crate::gray::{gray_tensor, GrayTensor, OneTag, TwoTag};
use crate::host::{HostError, TwoCategory};
use crate::monads::delta::{DeltaHost, MonotoneMap};
use crate::monads::{comonad_presentation, mnd_presentation, MonadData};
use crate::presentation::{check_presented_functor, Path, Presentation, Presented, PresentedFunctor, Term};
use crate::report::Report;
use crate::verdict::{Verdict, Witness};

fn host_error(e: impl ToString) -> HostError {
    HostError::new(e.to_string())
}

/// Relation audits of `f: a -> b` and `g: b -> a` and both round trips on
/// generators.
fn audit_iso(r: &mut Report, (an, a): (&str, &Presentation), (bn, b): (&str, &Presentation), f: &PresentedFunctor<Presented<'_>>, g: &PresentedFunctor<Presented<'_>>) -> Result<(), HostError> {
    let (ha, hb) = (Presented::new(a), Presented::new(b));
    let (f, g) = (&f.clone().rehost(), &g.clone().rehost());
    r.absorb(&format!("{an} -> {bn}: "), check_presented_functor(a, &hb, f).map_err(host_error)?);
    r.absorb(&format!("{bn} -> {an}: "), check_presented_functor(b, &ha, g).map_err(host_error)?);
    let fg = f.then(b, &ha, g)?;
    r.push(format!("{an} -> {bn} -> {an} = Id"), on_generators(a, &ha, &fg));
    let gf = g.then(a, &hb, f)?;
    r.push(format!("{bn} -> {an} -> {bn} = Id"), on_generators(b, &hb, &gf));
    Ok(())
}

fn on_generators(p: &Presentation, h: &Presented<'_>, f: &PresentedFunctor<Presented<'_>>) -> Verdict {
    let id = PresentedFunctor::identity(p);
    let c = &p.computad;
    if f.obj != id.obj {
        return Verdict::NotEqual("objects move".into());
    }
    if let Some(i) = (0..c.one.len()).find(|&i| f.one[i] != id.one[i]) {
        return Verdict::NotEqual(format!("{} goes to {}", c.one[i].name, c.show_path(&f.one[i])));
    }
    for i in 0..c.two.len() {
        match h.compare(&f.two[i], &id.two[i]) {
            Verdict::Equal(_) => {}
            Verdict::NotEqual(why) => return Verdict::NotEqual(format!("{} is not fixed: {why}", c.two[i].name)),
            v => return v,
        }
    }
    Verdict::Equal(Witness::Componentwise)
}

/// The canonical `n`-ary composite of a monad's multiplication, or of a
/// comonad's comultiplication when `co` holds.
fn nary(p: &Presentation, n: usize, co: bool) -> Term {
    let (unit, binary, letter) = if co { ("eps", "delta", "w") } else { ("eta", "mu", "t") };
    let x = p.p(&[letter]);
    match n {
        0 => p.gen(unit),
        1 => Term::identity(x),
        _ => {
            let head = p.wh(&Path::empty(0), &nary(p, n - 1, co), &x);
            if co {
                p.then(&p.gen(binary), &head)
            } else {
                p.then(&head, &p.gen(binary))
            }
        }
    }
}

fn terminal_classifier(bound: usize, orientation: Orientation) -> Result<Classifier, HostError> {
    Classifier::new(&Presentation::terminal(), bound, orientation).map_err(host_error)
}

fn one_object_maps(cl: &Classifier, p: &Presentation, co: bool) -> (PresentedFunctor<Presented<'static>>, PresentedFunctor<Presented<'static>>) {
    let (unit, binary) = if co { ("eps", "delta") } else { ("eta", "mu") };
    let c = &p.computad;
    let to_cl = PresentedFunctor {
        obj: vec![0],
        one: vec![cl.letter(0)],
        two: (0..c.two.len())
            .map(|g| match c.two[g].name.as_str() {
                n if n == unit => cl.comparison(0, &[]),
                n if n == binary => cl.comparison(0, &[0, 0]),
                n => unreachable!("unexpected generator {n}"),
            })
            .collect(),
    };
    let from_cl = PresentedFunctor {
        obj: vec![0],
        one: vec![p.p(&[if co { "w" } else { "t" }])],
        two: cl.sequences.iter().map(|(_, s)| nary(p, s.len(), co)).collect(),
    };
    (to_cl, from_cl)
}

/// `Mnd ≅ 1̄` at the given sequence bound, together with the audit of the
/// functor `1̄ -> Δa` counting letters.
pub fn classifier_mnd_iso_check(bound: usize) -> Result<Report, HostError> {
    let cl = terminal_classifier(bound, Orientation::Lax)?;
    let mnd = mnd_presentation();
    let mut r = Report::new(format!("Mnd against the classifier of 1, sequences up to {bound}"));
    let (f, g) = one_object_maps(&cl, &mnd, false);
    audit_iso(&mut r, ("Mnd", &mnd), ("1̄", &cl.result), &f, &g)?;
    let simplex = PresentedFunctor::<DeltaHost> {
        obj: vec![()],
        one: vec![1],
        two: cl.sequences.iter().map(|(_, s)| MonotoneMap::new(1, vec![0; s.len()]).expect("constant map")).collect(),
    };
    r.absorb("1̄ -> Δa: ", check_presented_functor(&cl.result, &DeltaHost, &simplex).map_err(host_error)?);
    Ok(r)
}

/// `Cmd ≅ (1^co-bar)^co`, the colax classifier of the terminal category.
pub fn mixed_comonad_iso_check(bound: usize) -> Result<Report, HostError> {
    let cl = terminal_classifier(bound, Orientation::Colax)?;
    let cmd = comonad_presentation();
    let mut r = Report::new(format!("Cmd against the colax classifier of 1, sequences up to {bound}"));
    let (f, g) = one_object_maps(&cl, &cmd, true);
    audit_iso(&mut r, ("Cmd", &cmd), ("(1^co-bar)^co", &cl.result), &f, &g)?;
    Ok(r)
}

/// `s` goes to left letters `u⊗*`, `t` to right letters `*⊗u`, `γ` to the
/// swap, and the monad cells to comparison cells in their factor.
fn dist_to_tensor(dist: &Presentation, cl: &Classifier, t: &GrayTensor) -> PresentedFunctor<Presented<'static>> {
    let c = &dist.computad;
    let (u, o) = (cl.letter(0), 0);
    let one = (0..c.one.len())
        .map(|i| match c.one[i].name.as_str() {
            "s" => t.left_path(&u, o),
            "t" => t.right_path(o, &u),
            n => unreachable!("unexpected 1-generator {n}"),
        })
        .collect();
    let two = (0..c.two.len())
        .map(|i| match c.two[i].name.as_str() {
            "eta_t" => t.right_term(o, &cl.comparison(0, &[])),
            "mu_t" => t.right_term(o, &cl.comparison(0, &[0, 0])),
            "eta_s" => t.left_term(&cl.comparison(0, &[]), o),
            "mu_s" => t.left_term(&cl.comparison(0, &[0, 0]), o),
            "gamma" => t.swap_paths(&u, &u),
            n => unreachable!("unexpected 2-generator {n}"),
        })
        .collect();
    PresentedFunctor { obj: vec![t.obj(0, 0)], one, two }
}

fn tensor_to_dist<'d>(dist: &'d Presentation, cl: &Classifier, t: &GrayTensor) -> Result<PresentedFunctor<Presented<'d>>, HostError> {
    let h = Presented::new(dist);
    let monad = |m: &str| MonadData::<Presented<'_>> {
        name: m.into(),
        object: 0,
        t: dist.p(&[m]),
        mu: dist.gen(&format!("mu_{m}")),
        eta: dist.gen(&format!("eta_{m}")),
    };
    let s = transpose(cl, &h, &monad_as_lax(&monad("s")))?;
    let tt = transpose(cl, &h, &monad_as_lax(&monad("t")))?;
    Ok(PresentedFunctor {
        obj: vec![0; t.result.computad.objects.len()],
        one: t
            .one_tags
            .iter()
            .map(|tag| match tag {
                OneTag::Left { .. } => s.one[0].clone(),
                OneTag::Right { .. } => tt.one[0].clone(),
            })
            .collect(),
        two: t
            .two_tags
            .iter()
            .map(|tag| match *tag {
                TwoTag::Left { gen, .. } => s.two[gen].clone(),
                TwoTag::Right { gen, .. } => tt.two[gen].clone(),
                TwoTag::Swap { .. } => dist.gen("gamma"),
            })
            .collect(),
    })
}

/// `Dist ≅ 1̄ ⊗ 1̄` at the given sequence bound, audited both ways.
pub fn dist_tensor_iso_check(bound: usize) -> Result<Report, HostError> {
    let cl = terminal_classifier(bound, Orientation::Lax)?;
    let t = gray_tensor(&cl.result, &cl.result).map_err(host_error)?;
    let dist = dist_presentation();
    let mut r = Report::new(format!("Dist against 1̄ ⊗ 1̄, sequences up to {bound}"));
    let f = dist_to_tensor(&dist, &cl, &t);
    let g = tensor_to_dist(&dist, &cl, &t)?;
    audit_iso(&mut r, ("Dist", &dist), ("1̄ ⊗ 1̄", &t.result), &f, &g)?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifier_of_one_is_mnd() {
        let r = classifier_mnd_iso_check(4).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert!(!r.any_unknown());
    }

    #[test]
    fn colax_classifier_of_one_is_cmd() {
        let r = mixed_comonad_iso_check(4).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn dist_is_the_tensor_square() {
        let r = dist_tensor_iso_check(4).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert!(!r.any_unknown(), "{}", r.render_text());
    }

    #[test]
    fn nary_multiplication_has_the_right_boundary() {
        let p = mnd_presentation();
        let m = nary(&p, 3, false);
        assert_eq!((m.src.len(), m.tgt.len()), (3, 1));
        let d = nary(&comonad_presentation(), 3, true);
        assert_eq!((d.src.len(), d.tgt.len()), (1, 3));
    }
}
