//! Computads, the free 2-categories they generate, and quotients of those by
//! oriented 1-cell rules and 2-cell relations.
//!
//! A 1-cell is a [`Path`]; a 2-cell is a [`Term`], a vertical stack of
//! single-generator layers whiskered on both sides. Interchange is the only
//! structural move, so the free case is decided by [`Presentation::normal_form`]
//! and the quotient case by a bounded breadth-first search over relation
//! instances, unless an exact oracle is registered.

mod functor;
pub mod io;
mod normal;
mod oracle;
mod rewrite;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

pub use functor::{check_presented_functor, PresentedFunctor};
pub use oracle::{Oracle, Shape};
pub use rewrite::{Occurrence, RewriteStep};

use crate::host::{HostError, TwoCategory};
use crate::verdict::{Verdict, Witness};

/// Default number of search states for the word problem.
pub const DEFAULT_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("duplicate {sort} `{name}`")]
    Duplicate { sort: &'static str, name: String },
    #[error("unknown {sort} `{name}`")]
    Unknown { sort: &'static str, name: String },
    #[error("path does not compose at edge {index}")]
    NotComposable { index: usize },
    #[error("boundary of `{0}` is not a pair of parallel paths")]
    NotParallel(String),
    #[error("rule {index} does not decrease (length, name order)")]
    NonDecreasing { index: usize },
    #[error("1-cell rules are not confluent: {0}")]
    NotConfluent(String),
    #[error("ill-typed term at layer {index}: {reason}")]
    IllTyped { index: usize, reason: String },
    #[error("relation `{0}` relates non-parallel terms")]
    RelationNotParallel(String),
    #[error("terms are not parallel")]
    NotParallelTerms,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Other(String),
}

type Result<T> = std::result::Result<T, PresentationError>;

/// A composable string of 1-generators starting at `start`; the empty string
/// is the identity there.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub edges: Vec<usize>,
}

impl Path {
    pub fn empty(start: usize) -> Self {
        Path { start, edges: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneGen {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoGen {
    pub name: String,
    pub src: Path,
    pub tgt: Path,
    /// How the generator moves wires, used only by registered oracles.
    pub shape: Shape,
}

/// One generator applied at `offset` inside the current path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Layer {
    pub offset: usize,
    pub gen: usize,
}

/// A pasting term: `layers` applied bottom to top, starting from `src`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub src: Path,
    pub tgt: Path,
    pub layers: Vec<Layer>,
}

impl Term {
    pub fn identity(p: Path) -> Self {
        Term { src: p.clone(), tgt: p, layers: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.layers.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Computad {
    pub objects: Vec<String>,
    pub one: Vec<OneGen>,
    pub two: Vec<TwoGen>,
    obj_ix: HashMap<String, usize>,
    one_ix: HashMap<String, usize>,
    two_ix: HashMap<String, usize>,
}

impl Computad {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_object(&mut self, name: &str) -> Result<usize> {
        if self.obj_ix.contains_key(name) {
            return Err(PresentationError::Duplicate { sort: "object", name: name.into() });
        }
        self.objects.push(name.into());
        self.obj_ix.insert(name.into(), self.objects.len() - 1);
        Ok(self.objects.len() - 1)
    }

    pub fn add_one(&mut self, name: &str, src: &str, tgt: &str) -> Result<usize> {
        if self.one_ix.contains_key(name) {
            return Err(PresentationError::Duplicate { sort: "1-generator", name: name.into() });
        }
        let (src, tgt) = (self.object(src)?, self.object(tgt)?);
        self.one.push(OneGen { name: name.into(), src, tgt });
        self.one_ix.insert(name.into(), self.one.len() - 1);
        Ok(self.one.len() - 1)
    }

    pub fn add_two(&mut self, name: &str, src: Path, tgt: Path, shape: Shape) -> Result<usize> {
        if self.two_ix.contains_key(name) {
            return Err(PresentationError::Duplicate { sort: "2-generator", name: name.into() });
        }
        self.check_path(&src)?;
        self.check_path(&tgt)?;
        if src.start != tgt.start || self.end(&src) != self.end(&tgt) {
            return Err(PresentationError::NotParallel(name.into()));
        }
        self.two.push(TwoGen { name: name.into(), src, tgt, shape });
        self.two_ix.insert(name.into(), self.two.len() - 1);
        Ok(self.two.len() - 1)
    }

    pub fn object(&self, name: &str) -> Result<usize> {
        self.obj_ix
            .get(name)
            .copied()
            .ok_or_else(|| PresentationError::Unknown { sort: "object", name: name.into() })
    }

    pub fn one_gen(&self, name: &str) -> Result<usize> {
        self.one_ix
            .get(name)
            .copied()
            .ok_or_else(|| PresentationError::Unknown { sort: "1-generator", name: name.into() })
    }

    pub fn two_gen(&self, name: &str) -> Result<usize> {
        self.two_ix
            .get(name)
            .copied()
            .ok_or_else(|| PresentationError::Unknown { sort: "2-generator", name: name.into() })
    }

    pub fn end(&self, p: &Path) -> usize {
        p.edges.last().map_or(p.start, |&e| self.one[e].tgt)
    }

    /// Object sitting at each of the `len + 1` positions of the path.
    pub fn positions(&self, p: &Path) -> Vec<usize> {
        let mut out = Vec::with_capacity(p.len() + 1);
        out.push(p.start);
        for &e in &p.edges {
            out.push(self.one[e].tgt);
        }
        out
    }

    pub fn check_path(&self, p: &Path) -> Result<()> {
        if p.start >= self.objects.len() {
            return Err(PresentationError::Other(format!("object index {} out of range", p.start)));
        }
        let mut at = p.start;
        for (i, &e) in p.edges.iter().enumerate() {
            let g = self.one.get(e).ok_or(PresentationError::NotComposable { index: i })?;
            if g.src != at {
                return Err(PresentationError::NotComposable { index: i });
            }
            at = g.tgt;
        }
        Ok(())
    }

    /// Path from generator names; `start` is needed only for the empty path.
    pub fn path(&self, start: &str, edges: &[&str]) -> Result<Path> {
        let start = self.object(start)?;
        let edges = edges.iter().map(|e| self.one_gen(e)).collect::<Result<Vec<_>>>()?;
        let p = Path { start, edges };
        self.check_path(&p)?;
        Ok(p)
    }

    pub fn concat(&self, a: &Path, b: &Path) -> Result<Path> {
        if self.end(a) != b.start {
            return Err(PresentationError::NotComposable { index: a.len() });
        }
        let mut edges = a.edges.clone();
        edges.extend_from_slice(&b.edges);
        Ok(Path { start: a.start, edges })
    }

    pub fn slice(&self, p: &Path, from: usize, to: usize) -> Path {
        let start = self.positions(p)[from];
        Path { start, edges: p.edges[from..to].to_vec() }
    }

    /// The path obtained by applying one layer, or why it does not apply.
    pub fn apply_layer(&self, p: &Path, layer: &Layer) -> std::result::Result<Path, String> {
        let g = self.two.get(layer.gen).ok_or("unknown 2-generator")?;
        let n = g.src.len();
        if layer.offset + n > p.len() {
            return Err(format!("`{}` at offset {} overruns a path of length {}", g.name, layer.offset, p.len()));
        }
        if p.edges[layer.offset..layer.offset + n] != g.src.edges[..] {
            return Err(format!("`{}` does not match the path at offset {}", g.name, layer.offset));
        }
        if self.positions(p)[layer.offset] != g.src.start {
            return Err(format!("`{}` sits at the wrong object", g.name));
        }
        let mut edges = p.edges[..layer.offset].to_vec();
        edges.extend_from_slice(&g.tgt.edges);
        edges.extend_from_slice(&p.edges[layer.offset + n..]);
        Ok(Path { start: p.start, edges })
    }

    /// Every single layer that applies to `p`, by generator then offset.
    pub fn layers_at(&self, p: &Path) -> Vec<Layer> {
        let mut out = Vec::new();
        for gen in 0..self.two.len() {
            let n = self.two[gen].src.len();
            for offset in 0..=p.len().saturating_sub(n) {
                if n > p.len() {
                    break;
                }
                let layer = Layer { offset, gen };
                if self.apply_layer(p, &layer).is_ok() {
                    out.push(layer);
                }
            }
        }
        out
    }

    /// Paths before and after each layer; fails on ill-typed terms.
    pub fn slices(&self, t: &Term) -> Result<Vec<Path>> {
        self.check_path(&t.src)?;
        let mut out = vec![t.src.clone()];
        for (index, l) in t.layers.iter().enumerate() {
            let next = self
                .apply_layer(out.last().expect("non-empty"), l)
                .map_err(|reason| PresentationError::IllTyped { index, reason })?;
            out.push(next);
        }
        if out.last() != Some(&t.tgt) {
            return Err(PresentationError::IllTyped {
                index: t.layers.len(),
                reason: "declared target does not match".into(),
            });
        }
        Ok(out)
    }

    pub fn check_term(&self, t: &Term) -> Result<()> {
        self.slices(t).map(|_| ())
    }

    /// The generator as a one-layer term.
    pub fn generator_term(&self, gen: usize) -> Term {
        let g = &self.two[gen];
        Term { src: g.src.clone(), tgt: g.tgt.clone(), layers: vec![Layer { offset: 0, gen }] }
    }

    pub fn whisker(&self, left: &Path, t: &Term, right: &Path) -> Result<Term> {
        let src = self.concat(&self.concat(left, &t.src)?, right)?;
        let tgt = self.concat(&self.concat(left, &t.tgt)?, right)?;
        let layers = t
            .layers
            .iter()
            .map(|l| Layer { offset: l.offset + left.len(), gen: l.gen })
            .collect();
        Ok(Term { src, tgt, layers })
    }

    pub fn vertical(&self, a: &Term, b: &Term) -> Result<Term> {
        if a.tgt != b.src {
            return Err(PresentationError::NotParallelTerms);
        }
        let mut layers = a.layers.clone();
        layers.extend_from_slice(&b.layers);
        Ok(Term { src: a.src.clone(), tgt: b.tgt.clone(), layers })
    }

    pub fn show_path(&self, p: &Path) -> String {
        if p.is_empty() {
            return format!("1_{}", self.objects[p.start]);
        }
        let names: Vec<&str> = p.edges.iter().map(|&e| self.one[e].name.as_str()).collect();
        format!("[{}]", names.join(","))
    }

    pub fn show_term(&self, t: &Term) -> String {
        if t.layers.is_empty() {
            return format!("id{}", self.show_path(&t.src));
        }
        let parts: Vec<String> = t
            .layers
            .iter()
            .map(|l| format!("{}@{}", self.two[l.gen].name, l.offset))
            .collect();
        parts.join(" ; ")
    }

    fn edge_names<'a>(&'a self, p: &'a [usize]) -> impl Iterator<Item = &'a str> + 'a {
        p.iter().map(move |&e| self.one[e].name.as_str())
    }

    /// Well-founded measure used to orient 1-cell rules.
    pub fn measure_cmp(&self, a: &[usize], b: &[usize]) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| self.edge_names(a).cmp(self.edge_names(b)))
    }
}

/// An oriented 1-cell rule `lhs -> rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Path,
    pub rhs: Path,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub lhs: Term,
    pub rhs: Term,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub computad: Computad,
    pub rules: Vec<Rule>,
    pub relations: Vec<Relation>,
    pub oracle: Option<Oracle>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.computad;
        write!(
            f,
            "{}: {} objects, {} 1-generators, {} 2-generators, {} rules, {} relations",
            self.name,
            c.objects.len(),
            c.one.len(),
            c.two.len(),
            self.rules.len(),
            self.relations.len()
        )
    }
}

impl Presentation {
    /// The free 2-category on a computad: no rules and no relations, decided
    /// exactly by interchange normal forms.
    pub fn free(name: impl Into<String>, computad: Computad) -> Self {
        Presentation { name: name.into(), computad, rules: Vec::new(), relations: Vec::new(), oracle: None }
    }

    pub fn add_rule(&mut self, lhs: Path, rhs: Path) -> Result<()> {
        let c = &self.computad;
        c.check_path(&lhs)?;
        c.check_path(&rhs)?;
        let index = self.rules.len();
        if lhs.start != rhs.start || c.end(&lhs) != c.end(&rhs) || lhs.is_empty() {
            return Err(PresentationError::NonDecreasing { index });
        }
        if c.measure_cmp(&rhs.edges, &lhs.edges) != Ordering::Less {
            return Err(PresentationError::NonDecreasing { index });
        }
        self.rules.push(Rule { lhs, rhs });
        Ok(())
    }

    /// Adds a relation after normalising both sides' boundaries.
    pub fn add_relation(&mut self, name: impl Into<String>, lhs: Term, rhs: Term) -> Result<()> {
        let name = name.into();
        self.computad.check_term(&lhs)?;
        self.computad.check_term(&rhs)?;
        if self.normalize_path(&lhs.src) != self.normalize_path(&rhs.src)
            || self.normalize_path(&lhs.tgt) != self.normalize_path(&rhs.tgt)
        {
            return Err(PresentationError::RelationNotParallel(name));
        }
        self.relations.push(Relation { name, lhs, rhs });
        Ok(())
    }

    /// Unique normal form under the 1-cell rules: rewrite the leftmost redex
    /// until none is left. Each step strictly decreases the measure.
    pub fn normalize_path(&self, p: &Path) -> Path {
        let mut cur = p.clone();
        'outer: loop {
            for i in 0..cur.len() {
                for r in &self.rules {
                    let n = r.lhs.len();
                    if i + n <= cur.len() && cur.edges[i..i + n] == r.lhs.edges[..] {
                        let mut edges = cur.edges[..i].to_vec();
                        edges.extend_from_slice(&r.rhs.edges);
                        edges.extend_from_slice(&cur.edges[i + n..]);
                        let next = Path { start: cur.start, edges };
                        debug_assert!(self.computad.measure_cmp(&next.edges, &cur.edges) == Ordering::Less);
                        cur = next;
                        continue 'outer;
                    }
                }
            }
            return cur;
        }
    }

    pub fn is_normal_path(&self, p: &Path) -> bool {
        self.normalize_path(p) == *p
    }

    /// Critical-pair check: every overlap of two rule left-hand sides rewrites
    /// to a common normal form.
    pub fn check_confluence(&self) -> Result<()> {
        for (i, a) in self.rules.iter().enumerate() {
            for (j, b) in self.rules.iter().enumerate() {
                let (la, lb) = (&a.lhs.edges, &b.lhs.edges);
                // b inside a
                for k in 0..la.len() {
                    if k + lb.len() <= la.len() && la[k..k + lb.len()] == lb[..] && !(i == j && k == 0) {
                        let one = a.rhs.clone();
                        let mut e = la[..k].to_vec();
                        e.extend_from_slice(&b.rhs.edges);
                        e.extend_from_slice(&la[k + lb.len()..]);
                        let two = Path { start: a.lhs.start, edges: e };
                        self.joinable(&one, &two, i, j)?;
                    }
                }
                // proper suffix of a equals proper prefix of b
                for k in 1..la.len() {
                    let over = la.len() - k;
                    if over < lb.len() && la[k..] == lb[..over] {
                        let mut word = la.clone();
                        word.extend_from_slice(&lb[over..]);
                        let mut e1 = a.rhs.edges.clone();
                        e1.extend_from_slice(&lb[over..]);
                        let mut e2 = la[..k].to_vec();
                        e2.extend_from_slice(&b.rhs.edges);
                        let start = a.lhs.start;
                        self.joinable(&Path { start, edges: e1 }, &Path { start, edges: e2 }, i, j)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn joinable(&self, x: &Path, y: &Path, i: usize, j: usize) -> Result<()> {
        let (nx, ny) = (self.normalize_path(x), self.normalize_path(y));
        if nx != ny {
            return Err(PresentationError::NotConfluent(format!(
                "rules {i} and {j}: {} vs {}",
                self.computad.show_path(&nx),
                self.computad.show_path(&ny)
            )));
        }
        Ok(())
    }

    /// Validates generator boundaries, rule orientation and confluence, and
    /// that relation sides are parallel.
    pub fn validate(&self) -> Result<()> {
        for (index, r) in self.rules.iter().enumerate() {
            if self.computad.measure_cmp(&r.rhs.edges, &r.lhs.edges) != Ordering::Less {
                return Err(PresentationError::NonDecreasing { index });
            }
        }
        self.check_confluence()?;
        for g in &self.computad.two {
            if !self.is_normal_path(&g.src) || !self.is_normal_path(&g.tgt) {
                return Err(PresentationError::Other(format!(
                    "boundary of `{}` is not in normal form",
                    g.name
                )));
            }
        }
        for r in &self.relations {
            self.computad.check_term(&r.lhs)?;
            self.computad.check_term(&r.rhs)?;
            if r.lhs.src != r.rhs.src || r.lhs.tgt != r.rhs.tgt {
                return Err(PresentationError::RelationNotParallel(r.name.clone()));
            }
        }
        Ok(())
    }

    /// Interchange normal form: the lexicographically least layer sequence
    /// reachable by sliding independent layers past each other.
    pub fn normal_form(&self, t: &Term) -> Term {
        normal::normal_form(&self.computad, t)
    }

    /// Decides equality of parallel 2-cells. The free case and registered
    /// oracles are exact; otherwise a bidirectional search over relation
    /// instances runs until `budget` states have been visited.
    pub fn two_cells_equal(&self, a: &Term, b: &Term, budget: usize) -> Result<Verdict> {
        self.decide(a, b, budget, true)
    }

    /// Like `two_cells_equal`, but never consults the oracle.
    pub fn two_cells_equal_by_rewriting(&self, a: &Term, b: &Term, budget: usize) -> Result<Verdict> {
        self.decide(a, b, budget, false)
    }

    fn decide(&self, a: &Term, b: &Term, budget: usize, use_oracle: bool) -> Result<Verdict> {
        self.computad.check_term(a)?;
        self.computad.check_term(b)?;
        if self.normalize_path(&a.src) != self.normalize_path(&b.src)
            || self.normalize_path(&a.tgt) != self.normalize_path(&b.tgt)
        {
            return Err(PresentationError::NotParallelTerms);
        }
        let (na, nb) = (self.normal_form(a), self.normal_form(b));
        if na == nb {
            return Ok(Verdict::Equal(Witness::Syntactic));
        }
        if let Some(oracle) = self.oracle.filter(|o| use_oracle && o.supports(&self.computad)) {
            return Ok(oracle.decide(&self.computad, &na, &nb));
        }
        if self.relations.is_empty() {
            return Ok(Verdict::NotEqual(format!(
                "distinct normal forms {} and {}",
                self.computad.show_term(&na),
                self.computad.show_term(&nb)
            )));
        }
        Ok(self.search(&na, &nb, budget))
    }

    /// Pure search, ignoring any oracle. Useful for producing witness traces.
    pub fn search(&self, a: &Term, b: &Term, budget: usize) -> Verdict {
        rewrite::search(self, a, b, budget)
    }

    /// Every term reachable from `t` by one relation application.
    pub fn neighbours(&self, t: &Term) -> Vec<RewriteStep> {
        rewrite::neighbours(self, t)
    }

    /// Checks that replaying `trace` from `a` ends at `b`, one relation
    /// instance at a time.
    pub fn replay(&self, a: &Term, b: &Term, trace: &[RewriteStep]) -> bool {
        let mut cur = self.normal_form(a);
        for step in trace {
            let ok = self
                .neighbours(&cur)
                .iter()
                .any(|n| n.relation == step.relation && n.forward == step.forward && n.result == step.result);
            if !ok {
                return false;
            }
            cur = step.result.clone();
        }
        cur == self.normal_form(b)
    }

    /// Occurrences of `pattern` inside `t` up to interchange.
    pub fn occurrences(&self, t: &Term, pattern: &Term) -> Vec<Occurrence> {
        rewrite::occurrences(&self.computad, t, pattern)
    }

    /// Every normal path of length at most `n`, shortest first, in generator
    /// order within each length.
    pub fn paths_up_to(&self, n: usize) -> Vec<Path> {
        let c = &self.computad;
        let mut layer: Vec<Path> = (0..c.objects.len()).map(Path::empty).collect();
        let mut out = layer.clone();
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &layer {
                let end = c.end(p);
                for (e, g) in c.one.iter().enumerate() {
                    if g.src != end {
                        continue;
                    }
                    let mut edges = p.edges.clone();
                    edges.push(e);
                    let q = Path { start: p.start, edges };
                    if self.is_normal_path(&q) {
                        next.push(q);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// The 1-cell dual: every 1-generator and every path reversed, 2-cells
    /// keeping their direction.
    pub fn opposite(&self) -> Presentation {
        let c = &self.computad;
        let mut d = Computad::new();
        for o in &c.objects {
            d.add_object(o).expect("distinct objects");
        }
        for g in &c.one {
            d.add_one(&g.name, &c.objects[g.tgt], &c.objects[g.src]).expect("distinct generators");
        }
        let rev = |p: &Path| Path { start: c.end(p), edges: p.edges.iter().rev().copied().collect() };
        for g in &c.two {
            d.add_two(&g.name, rev(&g.src), rev(&g.tgt), g.shape).expect("reversed boundaries are parallel");
        }
        let term = |t: &Term| {
            let slices = c.slices(t).expect("well-typed relation");
            let layers = t
                .layers
                .iter()
                .zip(&slices)
                .map(|(l, s)| Layer { offset: s.len() - l.offset - c.two[l.gen].src.len(), gen: l.gen })
                .collect();
            Term { src: rev(&t.src), tgt: rev(&t.tgt), layers }
        };
        let mut out = Presentation::free(format!("{}^op", self.name), d);
        out.rules = self.rules.iter().map(|r| Rule { lhs: rev(&r.lhs), rhs: rev(&r.rhs) }).collect();
        out.relations = self.relations.iter().map(|r| Relation { name: r.name.clone(), lhs: term(&r.lhs), rhs: term(&r.rhs) }).collect();
        out.oracle = self.oracle;
        out
    }

    /// One object `*` and nothing else.
    pub fn terminal() -> Self {
        let mut c = Computad::new();
        c.add_object("*").expect("fresh");
        Presentation::free("1", c)
    }

    /// Objects `0`, `1` and one arrow `u` between them.
    pub fn walking_arrow() -> Self {
        let mut p = Presentation::ordinal(1);
        p.name = "2".into();
        p
    }

    /// Objects `0..=k` with arrows `u1..uk` (`u` when `k = 1`) between
    /// consecutive ones.
    pub fn ordinal(k: usize) -> Self {
        let mut c = Computad::new();
        for i in 0..=k {
            c.add_object(&i.to_string()).expect("fresh");
        }
        for i in 0..k {
            let name = if k == 1 { "u".to_string() } else { format!("u{}", i + 1) };
            c.add_one(&name, &i.to_string(), &(i + 1).to_string()).expect("fresh");
        }
        Presentation::free(format!("[{k}]"), c)
    }

    // Name-based construction helpers.

    pub fn path(&self, start: &str, edges: &[&str]) -> Path {
        self.computad.path(start, edges).unwrap_or_else(|e| panic!("bad path {edges:?}: {e}"))
    }

    /// Path by generator names; the start object comes from the first edge.
    pub fn p(&self, edges: &[&str]) -> Path {
        let first = edges.first().expect("use `path` for empty paths");
        let g = self.computad.one_gen(first).unwrap_or_else(|e| panic!("{e}"));
        let start = self.computad.one[g].src;
        let start_name = self.computad.objects[start].clone();
        self.path(&start_name, edges)
    }

    pub fn gen(&self, name: &str) -> Term {
        let g = self.computad.two_gen(name).unwrap_or_else(|e| panic!("{e}"));
        self.computad.generator_term(g)
    }

    pub fn id(&self, p: &Path) -> Term {
        Term::identity(p.clone())
    }

    pub fn wh(&self, left: &Path, t: &Term, right: &Path) -> Term {
        self.computad.whisker(left, t, right).unwrap_or_else(|e| panic!("bad whisker: {e}"))
    }

    /// `t` with `left` composed before it.
    pub fn wl(&self, left: &Path, t: &Term) -> Term {
        let right = Path::empty(self.computad.end(&t.src));
        self.wh(left, t, &right)
    }

    /// `t` with `right` composed after it.
    pub fn wr(&self, t: &Term, right: &Path) -> Term {
        let left = Path::empty(t.src.start);
        self.wh(&left, t, right)
    }

    pub fn then(&self, a: &Term, b: &Term) -> Term {
        self.computad.vertical(a, b).unwrap_or_else(|e| {
            panic!(
                "cannot stack {} on {}: {e}",
                self.computad.show_term(b),
                self.computad.show_term(a)
            )
        })
    }

    pub fn chain(&self, parts: &[Term]) -> Term {
        let mut acc = parts[0].clone();
        for p in &parts[1..] {
            acc = self.then(&acc, p);
        }
        acc
    }
}

/// A presentation viewed as a host 2-category, with a fixed search budget.
#[derive(Clone, Copy, Debug)]
pub struct Presented<'a> {
    pub p: &'a Presentation,
    pub budget: usize,
    /// Decide equality by rewriting alone, ignoring any oracle.
    pub rewriting_only: bool,
}

impl<'a> Presented<'a> {
    pub fn new(p: &'a Presentation) -> Self {
        Presented { p, budget: DEFAULT_BUDGET, rewriting_only: false }
    }

    pub fn with_budget(p: &'a Presentation, budget: usize) -> Self {
        Presented { p, budget, rewriting_only: false }
    }

    pub fn rewriting(p: &'a Presentation, budget: usize) -> Self {
        Presented { p, budget, rewriting_only: true }
    }
}

impl TwoCategory for Presented<'_> {
    type Obj = usize;
    type One = Path;
    type Two = Term;

    fn one_src(&self, f: &Path) -> usize {
        f.start
    }

    fn one_tgt(&self, f: &Path) -> usize {
        self.p.computad.end(f)
    }

    fn identity(&self, a: &usize) -> Path {
        Path::empty(*a)
    }

    fn compose(&self, f: &Path, g: &Path) -> std::result::Result<Path, HostError> {
        let c = self.p.computad.concat(f, g).map_err(|e| HostError::new(e.to_string()))?;
        Ok(self.p.normalize_path(&c))
    }

    fn two_src(&self, a: &Term) -> Path {
        a.src.clone()
    }

    fn two_tgt(&self, a: &Term) -> Path {
        a.tgt.clone()
    }

    fn identity2(&self, f: &Path) -> Term {
        Term::identity(f.clone())
    }

    fn vertical(&self, a: &Term, b: &Term) -> std::result::Result<Term, HostError> {
        self.p.computad.vertical(a, b).map_err(|e| HostError::new(e.to_string()))
    }

    fn whisker(&self, l: &Path, a: &Term, r: &Path) -> std::result::Result<Term, HostError> {
        let t = self.p.computad.whisker(l, a, r).map_err(|e| HostError::new(e.to_string()))?;
        if !self.p.rules.is_empty() && (!self.p.is_normal_path(&t.src) || !self.p.is_normal_path(&t.tgt)) {
            return Err(HostError::new(format!(
                "whiskering {} crosses a 1-cell rule",
                self.p.computad.show_term(a)
            )));
        }
        Ok(t)
    }

    fn same_one(&self, f: &Path, g: &Path) -> bool {
        self.p.normalize_path(f) == self.p.normalize_path(g)
    }

    fn compare(&self, a: &Term, b: &Term) -> Verdict {
        let v = if self.rewriting_only { self.p.two_cells_equal_by_rewriting(a, b, self.budget) } else { self.p.two_cells_equal(a, b, self.budget) };
        match v {
            Ok(v) => v,
            Err(e) => Verdict::NotEqual(format!("ill-formed comparison: {e}")),
        }
    }

    fn show_one(&self, f: &Path) -> String {
        self.p.computad.show_path(f)
    }

    fn show_two(&self, a: &Term) -> String {
        self.p.computad.show_term(a)
    }
}
