//! The projection `ρ` onto the cartesian product, its lax and oplax
//! sections, and the adjunction between `ρ` and the lax section.

use std::collections::BTreeMap;

use super::{hat_gamma, GrayTensor, Letter, OneTag, ProductHost, TwoTag};
use crate::host::{HostError, TwoCategory};
use crate::lax::{check_icon, check_lax_functor, identity_lax, Direction, IconData, LaxFunctorData};
use crate::presentation::{check_presented_functor, Path, Presented, PresentedFunctor, Term};
use crate::report::Report;
use crate::verdict::{Verdict, Witness};

pub type SigmaData<'a> = LaxFunctorData<ProductHost<'a>, Presented<'a>>;
pub type SigmaRhoData<'a> = LaxFunctorData<Presented<'a>, Presented<'a>>;

pub fn product_host(t: &GrayTensor) -> ProductHost<'_> {
    ProductHost { left: Presented::new(&t.left), right: Presented::new(&t.right) }
}

/// `ρ`: letters go to themselves in their own factor, swaps to identities.
pub fn rho(t: &GrayTensor) -> PresentedFunctor<ProductHost<'_>> {
    let (ca, cb) = (&t.left.computad, &t.right.computad);
    let one = t
        .one_tags
        .iter()
        .map(|tag| match *tag {
            OneTag::Left { gen, obj } => (Path { start: ca.one[gen].src, edges: vec![gen] }, Path::empty(obj)),
            OneTag::Right { obj, gen } => (Path::empty(obj), Path { start: cb.one[gen].src, edges: vec![gen] }),
        })
        .collect();
    let two = t
        .two_tags
        .iter()
        .map(|tag| match *tag {
            TwoTag::Left { gen, obj } => (ca.generator_term(gen), Term::identity(Path::empty(obj))),
            TwoTag::Right { obj, gen } => (Term::identity(Path::empty(obj)), cb.generator_term(gen)),
            TwoTag::Swap { left, right } => (
                Term::identity(Path { start: ca.one[left].src, edges: vec![left] }),
                Term::identity(Path { start: cb.one[right].src, edges: vec![right] }),
            ),
        })
        .collect();
    let obj = (0..t.result.computad.objects.len()).map(|o| t.coords(o)).collect();
    PresentedFunctor { obj, one, two }
}

/// Pairs of normal paths with total length at most `bound`.
pub fn product_cells(t: &GrayTensor, bound: usize) -> Vec<(Path, Path)> {
    let qs = t.right.paths_up_to(bound);
    let mut out = Vec::new();
    for p in t.left.paths_up_to(bound) {
        for q in qs.iter().filter(|q| p.len() + q.len() <= bound) {
            out.push((p.clone(), q.clone()));
        }
    }
    out
}

/// Normal paths of the tensor of length at most `bound`.
pub fn tensor_cells(t: &GrayTensor, bound: usize) -> Vec<Path> {
    t.result.paths_up_to(bound)
}

pub(crate) fn sigma_one(t: &GrayTensor, dir: Direction, p: &Path, q: &Path) -> Path {
    let a = p.edges.iter().map(|&e| Letter::A(e));
    let b = q.edges.iter().map(|&e| Letter::B(e));
    let word: Vec<Letter> = match dir {
        Direction::Lax => a.chain(b).collect(),
        Direction::Oplax => b.chain(a).collect(),
    };
    t.path_of((p.start, q.start), &word)
}

/// The section on a pair of 2-cells: the left one first, then the right.
pub(crate) fn sigma_two(t: &GrayTensor, dir: Direction, a: &Term, b: &Term) -> Term {
    let c = &t.result.computad;
    let (ca, cb) = (&t.left.computad, &t.right.computad);
    let (x, y) = (a.src.start, b.src.start);
    let (x2, y2) = (ca.end(&a.src), cb.end(&b.src));
    let w = |l: &Path, m: &Term, r: &Path| c.whisker(l, m, r).expect("section boundaries compose");
    let (first, second) = match dir {
        Direction::Lax => (
            w(&Path::empty(t.obj(x, y)), &t.left_term(a, y), &t.right_path(x2, &b.src)),
            w(&t.left_path(&a.tgt, y), &t.right_term(x2, b), &Path::empty(t.obj(x2, y2))),
        ),
        Direction::Oplax => (
            w(&Path::empty(t.obj(x, y)), &t.right_term(x, b), &t.left_path(&a.src, y2)),
            w(&t.right_path(x, &b.tgt), &t.left_term(a, y2), &Path::empty(t.obj(x2, y2))),
        ),
    };
    c.vertical(&first, &second).expect("section boundaries compose")
}

/// The comparison cell of the section at a composable pair.
pub(crate) fn sigma_comp(t: &GrayTensor, dir: Direction, (p, q): (&Path, &Path), (p2, q2): (&Path, &Path)) -> Term {
    let c = &t.result.computad;
    let (ca, cb) = (&t.left.computad, &t.right.computad);
    match dir {
        Direction::Lax => c.whisker(&t.left_path(p, q.start), &t.swap_paths(p2, q), &t.right_path(ca.end(p2), q2)),
        Direction::Oplax => c.whisker(&t.right_path(p.start, q), &t.swap_paths(p, q2), &t.left_path(p2, cb.end(q2))),
    }
    .expect("comparison boundaries compose")
}

/// Single-layer 2-cells applicable to a listed 1-cell whose target is listed
/// too, plus identities.
fn single_layers(c: &crate::presentation::Computad, listed: &[Path], p: &Path) -> Vec<Term> {
    let mut out = vec![Term::identity(p.clone())];
    for l in c.layers_at(p) {
        if let Ok(tgt) = c.apply_layer(p, &l) {
            if listed.contains(&tgt) {
                out.push(Term { src: p.clone(), tgt, layers: vec![l] });
            }
        }
    }
    out
}

fn sigma(t: &GrayTensor, bound: usize, dir: Direction) -> SigmaData<'_> {
    let d = product_host(t);
    let k = t.host();
    let cells = product_cells(t, bound);
    let (lp, rp): (Vec<Path>, Vec<Path>) = (t.left.paths_up_to(bound), t.right.paths_up_to(bound));
    let mut twos = Vec::new();
    for (p, q) in &cells {
        for a in single_layers(&t.left.computad, &lp, p) {
            if a.layers.is_empty() || cells.contains(&(a.tgt.clone(), q.clone())) {
                let b = Term::identity(q.clone());
                let img = sigma_two(t, dir, &a, &b);
                twos.push(((a, b), img));
            }
        }
        for b in single_layers(&t.right.computad, &rp, q) {
            if !b.layers.is_empty() && cells.contains(&(p.clone(), b.tgt.clone())) {
                let a = Term::identity(p.clone());
                let img = sigma_two(t, dir, &a, &b);
                twos.push(((a, b), img));
            }
        }
    }
    let n = t.result.computad.objects.len();
    let name = match dir {
        Direction::Lax => "σ_l",
        Direction::Oplax => "σ_op",
    };
    let mut data = LaxFunctorData {
        name: name.into(),
        direction: dir,
        objects: (0..n).map(|o| (t.coords(o), o)).collect(),
        ones: cells.iter().map(|(p, q)| ((p.clone(), q.clone()), sigma_one(t, dir, p, q))).collect(),
        twos,
        unit: (0..n).map(|o| k.identity2(&Path::empty(o))).collect(),
        comp: BTreeMap::new(),
    };
    for i in 0..cells.len() {
        for j in 0..cells.len() {
            if data.composite(&d, i, j).is_some() {
                let ((p, q), (p2, q2)) = (&cells[i], &cells[j]);
                data.comp.insert((i, j), sigma_comp(t, dir, (p, q), (p2, q2)));
            }
        }
    }
    data
}

/// `σ_l (p, q) = [p⊗y, x'⊗q]`, lax with comparison cells built from swaps.
pub fn sigma_lax(t: &GrayTensor, bound: usize) -> SigmaData<'_> {
    sigma(t, bound, Direction::Lax)
}

/// `σ_op (p, q) = [x⊗q, p⊗y']`, oplax.
pub fn sigma_oplax(t: &GrayTensor, bound: usize) -> SigmaData<'_> {
    sigma(t, bound, Direction::Oplax)
}

/// `σ_l ρ` on the tensor paths up to `bound`, with single-layer 2-cells.
pub fn sigma_rho(t: &GrayTensor, bound: usize) -> SigmaRhoData<'_> {
    let (d, k) = (product_host(t), t.host());
    let r = rho(t);
    let cells = tensor_cells(t, bound);
    let mut twos = Vec::new();
    for h in &cells {
        for th in single_layers(&t.result.computad, &cells, h) {
            let (a, b) = r.image_term(&t.result, &d, &th).expect("ρ is defined on every term");
            let img = sigma_two(t, Direction::Lax, &a, &b);
            twos.push((th, img));
        }
    }
    let n = t.result.computad.objects.len();
    let mut data = LaxFunctorData {
        name: "σ_l ρ".into(),
        direction: Direction::Lax,
        objects: (0..n).map(|o| (o, o)).collect(),
        ones: cells
            .iter()
            .map(|h| {
                let (p, q) = t.split(h);
                (h.clone(), sigma_one(t, Direction::Lax, &p, &q))
            })
            .collect(),
        twos,
        unit: (0..n).map(|o| k.identity2(&Path::empty(o))).collect(),
        comp: BTreeMap::new(),
    };
    for i in 0..cells.len() {
        for j in 0..cells.len() {
            if data.composite(&k, i, j).is_some() {
                let ((p, q), (p2, q2)) = (t.split(&cells[i]), t.split(&cells[j]));
                data.comp.insert((i, j), sigma_comp(t, Direction::Lax, (&p, &q), (&p2, &q2)));
            }
        }
    }
    data
}

fn holds(ok: bool, why: impl Into<String>) -> Verdict {
    if ok {
        Verdict::Equal(Witness::Componentwise)
    } else {
        Verdict::NotEqual(why.into())
    }
}

/// `ρ` is a 2-functor, both sections satisfy their laws and split `ρ`, and
/// `γ̂: Id => σ_l ρ` is an icon with `ρ γ̂ = id` and `γ̂ σ_l = id`, so that
/// `σ_l` is right adjoint to `ρ` with identity counit. Everything is checked
/// on 1-cells of word length at most `bound`.
pub fn gray_adjunction_check(t: &GrayTensor, bound: usize) -> Result<Report, HostError> {
    let mut r = Report::new(format!("Gray adjunction for {} up to word length {bound}", t.result.name));
    let (d, k) = (product_host(t), t.host());
    let rf = rho(t);
    let audit = check_presented_functor(&t.result, &d, &rf).map_err(|e| HostError::new(e.to_string()))?;
    r.absorb("ρ: ", audit);
    let rho_path = |h: &Path| rf.image_path(&d, h);
    let rho_term = |th: &Term| rf.image_term(&t.result, &d, th);

    let sl = sigma_lax(t, bound);
    for s in [&sl, &sigma_oplax(t, bound)] {
        r.absorb(&format!("{}: ", s.name), check_lax_functor(&d, &k, s)?);
        let law = format!("ρ{} = Id", s.name);
        for (pq, img) in &s.ones {
            r.merge(&law, holds(d.same_one(&rho_path(img)?, pq), format!("on {}", d.show_one(pq))));
        }
        for c in s.comp.values().chain(&s.unit) {
            let img = rho_term(c)?;
            r.merge(&law, d.compare(&img, &d.identity2(&d.two_src(&img))));
        }
        for (two, img) in &s.twos {
            r.merge(&law, d.compare(&rho_term(img)?, two));
        }
    }

    let sr = sigma_rho(t, bound);
    r.absorb("σ_l ρ: ", check_lax_functor(&k, &k, &sr)?);
    let objects: Vec<usize> = sr.objects.iter().map(|o| o.0).collect();
    let ones: Vec<Path> = sr.ones.iter().map(|o| o.0.clone()).collect();
    let twos: Vec<Term> = sr.twos.iter().map(|o| o.0.clone()).collect();
    let id = identity_lax(&k, "Id", &objects, &ones, &twos)?;
    let components: Vec<Term> = ones.iter().map(|h| hat_gamma(t, h)).collect();
    let icon = IconData { source: id, target: sr, components: components.clone() };
    r.absorb("γ̂: ", check_icon(&k, &k, &icon)?);

    for (h, g) in ones.iter().zip(&components) {
        let v = d.compare(&rho_term(g)?, &d.identity2(&rho_path(h)?));
        r.merge("triangle at ρ: ρ γ̂ = id", v);
    }
    for (_, img) in &sl.ones {
        let v = k.compare(&hat_gamma(t, img), &k.identity2(img));
        r.merge("triangle at σ_l: γ̂ σ_l = id", v);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gray::gray_tensor;
    use crate::presentation::Presentation;

    #[test]
    fn two_tensor_two_adjunction() {
        let two = Presentation::walking_arrow();
        let t = gray_tensor(&two, &two).unwrap();
        let r = gray_adjunction_check(&t, 4).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert!(!r.any_unknown());
    }

    #[test]
    fn free_mnd_computad_tensor_adjunction() {
        let mut m = crate::monads::presentations::mnd_presentation();
        m.relations.clear();
        m.oracle = None;
        let t = gray_tensor(&m, &m).unwrap();
        assert_eq!(t.result.oracle, None);
        let r = gray_adjunction_check(&t, 3).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn unit_tensor_components_are_identities() {
        let one = Presentation::terminal();
        let t = gray_tensor(&one, &one).unwrap();
        let r = gray_adjunction_check(&t, 3).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert!(sigma_rho(&t, 3).ones.iter().all(|(h, _)| hat_gamma(&t, h).is_identity()));
    }

    #[test]
    fn sigma_comparison_is_a_swap() {
        let two = Presentation::walking_arrow();
        let t = gray_tensor(&two, &two).unwrap();
        let s = sigma_lax(&t, 4);
        let u = Path { start: 0, edges: vec![0] };
        let i = s.ones.iter().position(|(pq, _)| *pq == (u.clone(), Path::empty(0))).unwrap();
        let j = s.ones.iter().position(|(pq, _)| *pq == (Path::empty(1), u.clone())).unwrap();
        let swap = t.result.gen("γ[u;u]");
        assert!(s.comp[&(i, j)].is_identity());
        let (i2, j2) = (
            s.ones.iter().position(|(pq, _)| *pq == (Path::empty(0), u.clone())).unwrap(),
            s.ones.iter().position(|(pq, _)| *pq == (u.clone(), Path::empty(1))).unwrap(),
        );
        assert_eq!(s.comp[&(i2, j2)], swap);
        let id = s.ones.iter().position(|(pq, _)| *pq == (Path::empty(0), Path::empty(0))).unwrap();
        assert!(s.ones[id].1.is_empty() && s.comp[&(id, id)].is_identity());
    }
}
