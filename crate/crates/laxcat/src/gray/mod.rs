//! The lax Gray tensor product of two presentations.
//!
//! Objects are pairs. A 1-cell is a shuffle of letters from both sides:
//! `f⊗y` moves in the left factor at `y`, `x⊗g` in the right factor at `x`.
//! Each pair of 1-generators gets a swap `γ[f;g]: [x⊗g, f⊗y'] => [f⊗y, x'⊗g]`,
//! moving a left letter in front of a right letter. Swaps along longer
//! paths, identities of swaps and their composites are built from the
//! generators, so only the input relations (tensored with objects) and the
//! two swap-commute families need to be imposed.

mod functorial;
mod product;
mod sections;

use std::collections::BTreeMap;

pub use functorial::{check_gray_functoriality, duality_check, duality_iso, gray_functoriality};
pub use product::{both, ProductHost};
pub(crate) use sections::{sigma_comp, sigma_one, sigma_two};
pub use sections::{
    gray_adjunction_check, product_cells, rho, sigma_lax, sigma_oplax, sigma_rho, tensor_cells, SigmaData, SigmaRhoData,
};

use crate::presentation::{Computad, Layer, Oracle, Path, Presentation, PresentationError, Presented, Shape, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OneTag {
    /// `f⊗y`
    Left { gen: usize, obj: usize },
    /// `x⊗g`
    Right { obj: usize, gen: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoTag {
    Left { gen: usize, obj: usize },
    Right { obj: usize, gen: usize },
    Swap { left: usize, right: usize },
}

/// A letter of a shuffle: a 1-generator of the left or the right factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A(usize),
    B(usize),
}

#[derive(Clone, Debug)]
pub struct GrayTensor {
    pub left: Presentation,
    pub right: Presentation,
    pub result: Presentation,
    pub one_tags: Vec<OneTag>,
    pub two_tags: Vec<TwoTag>,
    /// Input rules or swaps along rules that could not be carried over.
    pub warnings: Vec<String>,
    left_one: BTreeMap<(usize, usize), usize>,
    right_one: BTreeMap<(usize, usize), usize>,
    left_two: BTreeMap<(usize, usize), usize>,
    right_two: BTreeMap<(usize, usize), usize>,
    swap: BTreeMap<(usize, usize), usize>,
}

pub fn gray_tensor(a: &Presentation, b: &Presentation) -> Result<GrayTensor, PresentationError> {
    let (ca, cb) = (&a.computad, &b.computad);
    let mut t = GrayTensor {
        left: a.clone(),
        right: b.clone(),
        result: Presentation::free(format!("{} ⊗ {}", a.name, b.name), Computad::new()),
        one_tags: Vec::new(),
        two_tags: Vec::new(),
        warnings: Vec::new(),
        left_one: BTreeMap::new(),
        right_one: BTreeMap::new(),
        left_two: BTreeMap::new(),
        right_two: BTreeMap::new(),
        swap: BTreeMap::new(),
    };
    let pair = |x: usize, y: usize| format!("{}⊗{}", ca.objects[x], cb.objects[y]);
    let c = &mut t.result.computad;
    for x in 0..ca.objects.len() {
        for y in 0..cb.objects.len() {
            c.add_object(&pair(x, y))?;
        }
    }
    for (f, g) in ca.one.iter().enumerate() {
        for y in 0..cb.objects.len() {
            let id = c.add_one(&format!("{}⊗{}", g.name, cb.objects[y]), &pair(g.src, y), &pair(g.tgt, y))?;
            t.left_one.insert((f, y), id);
            t.one_tags.push(OneTag::Left { gen: f, obj: y });
        }
    }
    for x in 0..ca.objects.len() {
        for (gi, g) in cb.one.iter().enumerate() {
            let id = c.add_one(&format!("{}⊗{}", ca.objects[x], g.name), &pair(x, g.src), &pair(x, g.tgt))?;
            t.right_one.insert((x, gi), id);
            t.one_tags.push(OneTag::Right { obj: x, gen: gi });
        }
    }

    for (i, al) in ca.two.iter().enumerate() {
        for y in 0..cb.objects.len() {
            let (src, tgt) = (t.left_path(&al.src, y), t.left_path(&al.tgt, y));
            let id = t.result.computad.add_two(&format!("{}⊗{}", al.name, cb.objects[y]), src, tgt, al.shape)?;
            t.left_two.insert((i, y), id);
            t.two_tags.push(TwoTag::Left { gen: i, obj: y });
        }
    }
    for x in 0..ca.objects.len() {
        for (i, be) in cb.two.iter().enumerate() {
            let (src, tgt) = (t.right_path(x, &be.src), t.right_path(x, &be.tgt));
            let id = t.result.computad.add_two(&format!("{}⊗{}", ca.objects[x], be.name), src, tgt, be.shape)?;
            t.right_two.insert((x, i), id);
            t.two_tags.push(TwoTag::Right { obj: x, gen: i });
        }
    }
    for (f, fg) in ca.one.iter().enumerate() {
        for (g, gg) in cb.one.iter().enumerate() {
            let at = (fg.src, gg.src);
            let (src, tgt) = (t.path_of(at, &[Letter::B(g), Letter::A(f)]), t.path_of(at, &[Letter::A(f), Letter::B(g)]));
            let id = t.result.computad.add_two(&format!("γ[{};{}]", fg.name, gg.name), src, tgt, Shape::Swap)?;
            t.swap.insert((f, g), id);
            t.two_tags.push(TwoTag::Swap { left: f, right: g });
        }
    }

    // 1-cell rules of either side, at every object of the other
    for r in &a.rules {
        for y in 0..cb.objects.len() {
            let (l, rr) = (t.left_path(&r.lhs, y), t.left_path(&r.rhs, y));
            if let Err(e) = t.result.add_rule(l, rr) {
                t.warnings.push(format!("rule {} at {}: {e}", ca.show_path(&r.lhs), cb.objects[y]));
            }
        }
    }
    for r in &b.rules {
        for x in 0..ca.objects.len() {
            let (l, rr) = (t.right_path(x, &r.lhs), t.right_path(x, &r.rhs));
            if let Err(e) = t.result.add_rule(l, rr) {
                t.warnings.push(format!("rule {} at {}: {e}", cb.show_path(&r.lhs), ca.objects[x]));
            }
        }
    }
    if let Err(e) = t.result.check_confluence() {
        t.warnings.push(e.to_string());
    }

    let mut relations = Vec::new();
    for r in &a.relations {
        for y in 0..cb.objects.len() {
            relations.push((format!("{} ⊗ {}", r.name, cb.objects[y]), t.left_term(&r.lhs, y), t.left_term(&r.rhs, y)));
        }
    }
    for x in 0..ca.objects.len() {
        for r in &b.relations {
            relations.push((format!("{} ⊗ {}", ca.objects[x], r.name), t.right_term(x, &r.lhs), t.right_term(x, &r.rhs)));
        }
    }
    let c = &t.result.computad;
    for (i, al) in ca.two.iter().enumerate() {
        for (g, gg) in cb.one.iter().enumerate() {
            let (x, x2) = (al.src.start, ca.end(&al.src));
            let gx = t.right_path(x, &Path { start: gg.src, edges: vec![g] });
            let gx2 = t.right_path(x2, &Path { start: gg.src, edges: vec![g] });
            let alpha_after = c.whisker(&gx, &t.left_term(&ca.generator_term(i), gg.tgt), &Path::empty(t.obj(x2, gg.tgt)))?;
            let alpha_before = c.whisker(&Path::empty(t.obj(x, gg.src)), &t.left_term(&ca.generator_term(i), gg.src), &gx2)?;
            let g1 = Path { start: gg.src, edges: vec![g] };
            let lhs = c.vertical(&alpha_after, &t.swap_paths(&al.tgt, &g1))?;
            let rhs = c.vertical(&t.swap_paths(&al.src, &g1), &alpha_before)?;
            relations.push((format!("swap commute {} with {}", al.name, gg.name), lhs, rhs));
        }
    }
    for (f, fg) in ca.one.iter().enumerate() {
        for (i, be) in cb.two.iter().enumerate() {
            let (y, y2) = (be.src.start, cb.end(&be.src));
            let f1 = Path { start: fg.src, edges: vec![f] };
            let beta_before = c.whisker(&Path::empty(t.obj(fg.src, y)), &t.right_term(fg.src, &cb.generator_term(i)), &t.left_path(&f1, y2))?;
            let beta_after = c.whisker(&t.left_path(&f1, y), &t.right_term(fg.tgt, &cb.generator_term(i)), &Path::empty(t.obj(fg.tgt, y2)))?;
            let lhs = c.vertical(&beta_before, &t.swap_paths(&f1, &be.tgt))?;
            let rhs = c.vertical(&t.swap_paths(&f1, &be.src), &beta_after)?;
            relations.push((format!("swap commute {} with {}", fg.name, be.name), lhs, rhs));
        }
    }
    for r in &a.rules {
        for (g, gg) in cb.one.iter().enumerate() {
            let g1 = Path { start: gg.src, edges: vec![g] };
            relations.push((
                format!("swap along rule {} with {}", ca.show_path(&r.lhs), gg.name),
                t.swap_paths(&r.lhs, &g1),
                t.swap_paths(&r.rhs, &g1),
            ));
        }
    }
    for r in &b.rules {
        for (f, fg) in ca.one.iter().enumerate() {
            let f1 = Path { start: fg.src, edges: vec![f] };
            relations.push((
                format!("swap along rule {} with {}", cb.show_path(&r.lhs), fg.name),
                t.swap_paths(&f1, &r.lhs),
                t.swap_paths(&f1, &r.rhs),
            ));
        }
    }
    for (name, lhs, rhs) in relations {
        if let Err(e) = t.result.add_relation(name.clone(), lhs, rhs) {
            t.warnings.push(format!("{name}: {e}"));
        }
    }

    let fits = |p: &Presentation, o: Oracle| p.computad.two.is_empty() || p.oracle == Some(o);
    t.result.oracle = [Oracle::WireTracking, Oracle::CoWireTracking].into_iter().find(|&o| fits(a, o) && fits(b, o));
    Ok(t)
}

impl GrayTensor {
    pub fn obj(&self, x: usize, y: usize) -> usize {
        x * self.right.computad.objects.len() + y
    }

    pub fn coords(&self, o: usize) -> (usize, usize) {
        let n = self.right.computad.objects.len();
        (o / n, o % n)
    }

    pub fn host(&self) -> Presented<'_> {
        Presented::new(&self.result)
    }

    pub fn letters(&self, h: &Path) -> Vec<Letter> {
        h.edges
            .iter()
            .map(|&e| match self.one_tags[e] {
                OneTag::Left { gen, .. } => Letter::A(gen),
                OneTag::Right { gen, .. } => Letter::B(gen),
            })
            .collect()
    }

    /// The path spelling `word` from the pair of objects `at`.
    pub fn path_of(&self, at: (usize, usize), word: &[Letter]) -> Path {
        let (mut x, mut y) = at;
        let start = self.obj(x, y);
        let mut edges = Vec::with_capacity(word.len());
        for l in word {
            match *l {
                Letter::A(f) => {
                    edges.push(self.left_one[&(f, y)]);
                    x = self.left.computad.one[f].tgt;
                }
                Letter::B(g) => {
                    edges.push(self.right_one[&(x, g)]);
                    y = self.right.computad.one[g].tgt;
                }
            }
        }
        Path { start, edges }
    }

    /// `p⊗y` for a path `p` of the left factor.
    pub fn left_path(&self, p: &Path, y: usize) -> Path {
        let word: Vec<Letter> = p.edges.iter().map(|&e| Letter::A(e)).collect();
        self.path_of((p.start, y), &word)
    }

    /// `x⊗q` for a path `q` of the right factor.
    pub fn right_path(&self, x: usize, q: &Path) -> Path {
        let word: Vec<Letter> = q.edges.iter().map(|&e| Letter::B(e)).collect();
        self.path_of((x, q.start), &word)
    }

    pub fn left_term(&self, t: &Term, y: usize) -> Term {
        Term {
            src: self.left_path(&t.src, y),
            tgt: self.left_path(&t.tgt, y),
            layers: t.layers.iter().map(|l| Layer { offset: l.offset, gen: self.left_two[&(l.gen, y)] }).collect(),
        }
    }

    pub fn right_term(&self, x: usize, t: &Term) -> Term {
        Term {
            src: self.right_path(x, &t.src),
            tgt: self.right_path(x, &t.tgt),
            layers: t.layers.iter().map(|l| Layer { offset: l.offset, gen: self.right_two[&(x, l.gen)] }).collect(),
        }
    }

    /// Swaps turning the shuffle `from` into `to`, each moving a left letter
    /// in front of a right one. Panics when `to` is not reachable that way.
    pub fn swap_sequence(&self, at: (usize, usize), from: &[Letter], to: &[Letter]) -> Term {
        let ranked = |w: &[Letter]| -> Vec<(Letter, usize)> {
            let (mut na, mut nb) = (0, 0);
            w.iter()
                .map(|&l| match l {
                    Letter::A(_) => (l, post_inc(&mut na)),
                    Letter::B(_) => (l, post_inc(&mut nb)),
                })
                .collect()
        };
        let target = ranked(to);
        let key = |r: &(Letter, usize)| (matches!(r.0, Letter::A(_)), r.1);
        let pos: BTreeMap<(bool, usize), usize> = target.iter().enumerate().map(|(i, r)| (key(r), i)).collect();
        let mut cur = ranked(from);
        let mut layers = Vec::new();
        loop {
            let next = (0..cur.len().saturating_sub(1)).find(|&i| {
                matches!((cur[i].0, cur[i + 1].0), (Letter::B(_), Letter::A(_))) && pos[&key(&cur[i + 1])] < pos[&key(&cur[i])]
            });
            let Some(i) = next else { break };
            let (Letter::B(g), Letter::A(f)) = (cur[i].0, cur[i + 1].0) else { unreachable!() };
            layers.push(Layer { offset: i, gen: self.swap[&(f, g)] });
            cur.swap(i, i + 1);
        }
        assert!(cur == target, "{:?} cannot be reached from {:?} by lax swaps", to, from);
        Term { src: self.path_of(at, from), tgt: self.path_of(at, to), layers }
    }

    /// `γ_{p,q}: [x⊗q, p⊗y'] => [p⊗y, x'⊗q]`.
    pub fn swap_paths(&self, p: &Path, q: &Path) -> Term {
        let a: Vec<Letter> = p.edges.iter().map(|&e| Letter::A(e)).collect();
        let b: Vec<Letter> = q.edges.iter().map(|&e| Letter::B(e)).collect();
        let from: Vec<Letter> = b.iter().chain(&a).copied().collect();
        let to: Vec<Letter> = a.iter().chain(&b).copied().collect();
        self.swap_sequence((p.start, q.start), &from, &to)
    }

    /// Projections of a tensor path to both factors.
    pub fn split(&self, h: &Path) -> (Path, Path) {
        let (x, y) = self.coords(h.start);
        let mut p = Path::empty(x);
        let mut q = Path::empty(y);
        for l in self.letters(h) {
            match l {
                Letter::A(f) => p.edges.push(f),
                Letter::B(g) => q.edges.push(g),
            }
        }
        (p, q)
    }

    /// Every way of swapping `h` into all-left-first form, one term per
    /// distinct swap order.
    pub fn all_swap_orders(&self, h: &Path) -> Vec<Term> {
        let at = self.coords(h.start);
        let start = self.letters(h);
        let mut out = Vec::new();
        let mut stack = vec![(start, Vec::<Layer>::new())];
        while let Some((w, layers)) = stack.pop() {
            let mut moved = false;
            for i in 0..w.len().saturating_sub(1) {
                if let (Letter::B(g), Letter::A(f)) = (w[i], w[i + 1]) {
                    let mut w2 = w.clone();
                    w2.swap(i, i + 1);
                    let mut l2 = layers.clone();
                    l2.push(Layer { offset: i, gen: self.swap[&(f, g)] });
                    stack.push((w2, l2));
                    moved = true;
                }
            }
            if !moved {
                out.push(Term { src: h.clone(), tgt: self.path_of(at, &w), layers });
            }
        }
        out
    }
}

fn post_inc(n: &mut usize) -> usize {
    *n += 1;
    *n - 1
}

/// `γ̂_h: h => (all left letters, then all right letters)`.
pub fn hat_gamma(t: &GrayTensor, h: &Path) -> Term {
    let w = t.letters(h);
    let to: Vec<Letter> = w.iter().filter(|l| matches!(l, Letter::A(_))).chain(w.iter().filter(|l| matches!(l, Letter::B(_)))).copied().collect();
    t.swap_sequence(t.coords(h.start), &w, &to)
}

/// `γ̃_h: (all right letters, then all left letters) => h`.
pub fn tilde_gamma(t: &GrayTensor, h: &Path) -> Term {
    let w = t.letters(h);
    let from: Vec<Letter> = w.iter().filter(|l| matches!(l, Letter::B(_))).chain(w.iter().filter(|l| matches!(l, Letter::A(_)))).copied().collect();
    t.swap_sequence(t.coords(h.start), &from, &w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monads::presentations::mnd_presentation;
    use crate::presentation::{check_presented_functor, PresentedFunctor};
    use crate::verdict::Verdict;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn two_tensor_two() {
        let two = Presentation::walking_arrow();
        let t = gray_tensor(&two, &two).unwrap();
        let c = &t.result.computad;
        assert_eq!((c.objects.len(), c.one.len(), c.two.len()), (4, 4, 1));
        assert_eq!(c.two[0].name, "γ[u;u]");
        assert!(t.result.relations.is_empty() && t.warnings.is_empty());
        let (s, e) = (t.obj(0, 0), t.obj(1, 1));
        let hom: Vec<Path> = t.result.paths_up_to(4).into_iter().filter(|p| p.start == s && c.end(p) == e).collect();
        assert_eq!(hom.len(), 2);
        let swap = &c.two[0];
        assert!(hom.contains(&swap.src) && hom.contains(&swap.tgt));
        let g = hat_gamma(&t, &swap.src);
        assert_eq!(g, c.generator_term(0));
        assert!(hat_gamma(&t, &swap.tgt).is_identity());
        assert_eq!(tilde_gamma(&t, &swap.tgt), c.generator_term(0));
    }

    #[test]
    fn shuffle_counts() {
        let k = Presentation::ordinal(3);
        let t = gray_tensor(&k, &k).unwrap();
        let c = &t.result.computad;
        let paths = t.result.paths_up_to(6);
        for n in 0..=3 {
            for m in 0..=3 {
                if n + m > 6 {
                    continue;
                }
                let count = paths.iter().filter(|p| p.start == t.obj(0, 0) && c.end(p) == t.obj(n, m)).count();
                assert_eq!(count, binomial(n + m, n), "{n} {m}");
            }
        }
    }

    #[test]
    fn swap_orders_agree() {
        let k = Presentation::ordinal(3);
        let t = gray_tensor(&k, &k).unwrap();
        for h in t.result.paths_up_to(5) {
            let hat = hat_gamma(&t, &h);
            for other in t.all_swap_orders(&h) {
                assert_eq!(t.result.two_cells_equal(&hat, &other, 100).unwrap(), Verdict::Equal(crate::verdict::Witness::Syntactic));
            }
        }
    }

    #[test]
    fn unit_tensors() {
        let one = Presentation::terminal();
        let t = gray_tensor(&one, &one).unwrap();
        assert_eq!(t.result.to_string(), "1 ⊗ 1: 1 objects, 0 1-generators, 0 2-generators, 0 rules, 0 relations");

        let mnd = mnd_presentation();
        let t = gray_tensor(&mnd, &one).unwrap();
        let r = &t.result;
        assert_eq!((r.computad.one.len(), r.computad.two.len(), r.relations.len()), (1, 2, 3));
        let t1 = Path { start: 0, edges: vec![0] };
        assert!(t.swap_paths(&t1, &Path::empty(0)).is_identity());
        let there = PresentedFunctor::<Presented> {
            obj: vec![0],
            one: vec![r.p(&["t⊗*"])],
            two: vec![r.gen("eta⊗*"), r.gen("mu⊗*")],
        };
        assert!(check_presented_functor(&mnd, &Presented::new(r), &there).unwrap().passed());
        let back = PresentedFunctor::<Presented> { obj: vec![0], one: vec![mnd.p(&["t"])], two: vec![mnd.gen("eta"), mnd.gen("mu")] };
        assert!(check_presented_functor(r, &Presented::new(&mnd), &back).unwrap().passed());
    }

    #[test]
    fn mnd_tensor_mnd_has_swap_commute_relations() {
        let mnd = mnd_presentation();
        let t = gray_tensor(&mnd, &mnd).unwrap();
        assert!(t.warnings.is_empty(), "{:?}", t.warnings);
        assert_eq!(t.result.oracle, Some(Oracle::WireTracking));
        // 3 + 3 input relations and 2 + 2 swap-commute relations
        assert_eq!(t.result.relations.len(), 10);
        assert!(t.result.validate().is_ok());
    }
}
