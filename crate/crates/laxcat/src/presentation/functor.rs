//! 2-functors out of a presentation, given by generator images in any host.

use super::{Path, Presentation, PresentationError, Presented, Term};
use crate::host::{has_boundary, HostError, TwoCategory};
use crate::report::Report;

/// Images of objects, 1-generators and 2-generators, indexed as in the
/// source computad.
#[derive(Clone, Debug)]
pub struct PresentedFunctor<H: TwoCategory> {
    pub obj: Vec<H::Obj>,
    pub one: Vec<H::One>,
    pub two: Vec<H::Two>,
}

impl<'a> PresentedFunctor<Presented<'a>> {
    /// The same data over a host borrowed for another lifetime.
    pub fn rehost<'b>(self) -> PresentedFunctor<Presented<'b>> {
        PresentedFunctor { obj: self.obj, one: self.one, two: self.two }
    }
}

impl<H: TwoCategory> PresentedFunctor<H> {
    pub fn image_path(&self, h: &H, p: &Path) -> Result<H::One, HostError> {
        let mut acc = h.identity(&self.obj[p.start]);
        for &e in &p.edges {
            acc = h.compose(&acc, &self.one[e])?;
        }
        Ok(acc)
    }

    /// Image of a term: each layer goes to its generator's image whiskered by
    /// the images of the surrounding paths.
    pub fn image_term(&self, src: &Presentation, h: &H, t: &Term) -> Result<H::Two, HostError> {
        let c = &src.computad;
        let slices = c.slices(t).map_err(|e| HostError::new(e.to_string()))?;
        let mut acc = h.identity2(&self.image_path(h, &t.src)?);
        for (i, l) in t.layers.iter().enumerate() {
            let p = &slices[i];
            let n = c.two[l.gen].src.len();
            let left = c.slice(p, 0, l.offset);
            let right = c.slice(p, l.offset + n, p.len());
            let cell = h.whisker(&self.image_path(h, &left)?, &self.two[l.gen], &self.image_path(h, &right)?)?;
            acc = h.vertical(&acc, &cell)?;
        }
        Ok(acc)
    }
}

impl<'a> PresentedFunctor<Presented<'a>> {
    /// This functor followed by `g`, where `mid` is the presentation both
    /// meet at.
    pub fn then<H: TwoCategory>(&self, mid: &Presentation, h: &H, g: &PresentedFunctor<H>) -> Result<PresentedFunctor<H>, HostError> {
        Ok(PresentedFunctor {
            obj: self.obj.iter().map(|&x| g.obj[x].clone()).collect(),
            one: self.one.iter().map(|p| g.image_path(h, p)).collect::<Result<_, _>>()?,
            two: self.two.iter().map(|t| g.image_term(mid, h, t)).collect::<Result<_, _>>()?,
        })
    }

    /// The identity 2-functor on a presentation.
    pub fn identity(p: &Presentation) -> Self {
        let c = &p.computad;
        PresentedFunctor {
            obj: (0..c.objects.len()).collect(),
            one: (0..c.one.len()).map(|i| Path { start: c.one[i].src, edges: vec![i] }).collect(),
            two: (0..c.two.len()).map(|i| c.generator_term(i)).collect(),
        }
    }
}

/// Checks generator typing, then that every 1-cell rule and every relation
/// of `src` holds in the host after applying `f`.
pub fn check_presented_functor<H: TwoCategory>(
    src: &Presentation,
    h: &H,
    f: &PresentedFunctor<H>,
) -> Result<Report, PresentationError> {
    let c = &src.computad;
    let shape = |what: String| PresentationError::Other(format!("shape mismatch: {what}"));
    if f.obj.len() != c.objects.len() || f.one.len() != c.one.len() || f.two.len() != c.two.len() {
        return Err(shape("assignment does not cover every generator exactly once".into()));
    }
    for (i, g) in c.one.iter().enumerate() {
        let img = &f.one[i];
        if h.one_src(img) != f.obj[g.src] || h.one_tgt(img) != f.obj[g.tgt] {
            return Err(shape(format!("image of `{}` has the wrong endpoints", g.name)));
        }
    }
    for (i, g) in c.two.iter().enumerate() {
        let s = f.image_path(h, &g.src).map_err(|e| shape(e.to_string()))?;
        let t = f.image_path(h, &g.tgt).map_err(|e| shape(e.to_string()))?;
        if !has_boundary(h, &f.two[i], &s, &t) {
            return Err(shape(format!(
                "image of `{}` is {} but should go {} => {}",
                g.name,
                h.show_two(&f.two[i]),
                h.show_one(&s),
                h.show_one(&t)
            )));
        }
    }
    let mut report = Report::new(format!("2-functor out of {}", src.name));
    for (i, r) in src.rules.iter().enumerate() {
        let ok = match (f.image_path(h, &r.lhs), f.image_path(h, &r.rhs)) {
            (Ok(a), Ok(b)) => h.same_one(&a, &b),
            _ => false,
        };
        report.check(format!("rule {} -> {}", c.show_path(&r.lhs), c.show_path(&r.rhs)), ok, format!("rule {i} is not preserved"));
    }
    for r in &src.relations {
        let verdict = match (f.image_term(src, h, &r.lhs), f.image_term(src, h, &r.rhs)) {
            (Ok(a), Ok(b)) => h.compare(&a, &b),
            (Err(e), _) | (_, Err(e)) => crate::verdict::Verdict::NotEqual(format!("image is ill-formed: {e}")),
        };
        report.push(r.name.clone(), verdict);
    }
    Ok(report)
}
