//! Matching relation sides inside terms and the breadth-first word-problem
//! search built on it.

use std::collections::{HashMap, VecDeque};

use super::normal::{move_down, normal_form, slide_below};
use super::{Computad, Layer, Path, Presentation, Term};
use crate::verdict::{Verdict, Witness};

/// One relation application: `relation` used left-to-right when `forward`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub relation: String,
    pub forward: bool,
    pub result: Term,
}

/// A pattern found inside a term: the term is interchange-equivalent to
/// `prefix`, then the pattern whiskered at `shift`, then `suffix`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence {
    pub prefix: Vec<Layer>,
    pub shift: usize,
    pub suffix: Vec<Layer>,
}

/// All orderings of a pattern's layers that are interchange-equivalent to it.
fn linearizations(c: &Computad, layers: &[Layer]) -> Vec<Vec<Layer>> {
    let mut seen = vec![layers.to_vec()];
    let mut queue = VecDeque::from([layers.to_vec()]);
    while let Some(s) = queue.pop_front() {
        for i in 1..s.len() {
            for (b2, a2) in slide_below(c, &s[i - 1], &s[i]) {
                let mut t = s.clone();
                t[i - 1] = b2;
                t[i] = a2;
                if !seen.contains(&t) {
                    seen.push(t.clone());
                    queue.push_back(t);
                }
            }
        }
    }
    seen
}

fn path_after(c: &Computad, src: &Path, layers: &[Layer]) -> Path {
    let mut p = src.clone();
    for l in layers {
        p = c.apply_layer(&p, l).expect("layers of a checked term apply");
    }
    p
}

fn contains_at(c: &Computad, p: &Path, q: &Path, at: usize) -> bool {
    at + q.len() <= p.len() && p.edges[at..at + q.len()] == q.edges[..] && c.positions(p)[at] == q.start
}

pub(crate) fn occurrences(c: &Computad, t: &Term, pattern: &Term) -> Vec<Occurrence> {
    let mut out = Vec::new();
    if pattern.layers.is_empty() {
        let mut p = t.src.clone();
        for i in 0..=t.layers.len() {
            for shift in 0..=p.len() {
                if contains_at(c, &p, &pattern.src, shift) {
                    out.push(Occurrence {
                        prefix: t.layers[..i].to_vec(),
                        shift,
                        suffix: t.layers[i..].to_vec(),
                    });
                }
            }
            if i < t.layers.len() {
                p = c.apply_layer(&p, &t.layers[i]).expect("checked term");
            }
        }
        return out;
    }
    for lin in linearizations(c, &pattern.layers) {
        for i0 in 0..t.layers.len() {
            if t.layers[i0].gen != lin[0].gen {
                continue;
            }
            // the first layer may sit anywhere it can slide down to
            for k in 0..=i0 {
                for moved in move_down(c, &t.layers, i0, k) {
                    if moved[k].offset >= lin[0].offset {
                        grow(c, t, pattern, &lin, moved, k, 1, &mut out);
                    }
                }
            }
        }
    }
    out
}

/// Extends a block `seq[s..s + m]` matching `lin[..m]` by one more layer.
#[allow(clippy::too_many_arguments)]
fn grow(
    c: &Computad,
    t: &Term,
    pattern: &Term,
    lin: &[Layer],
    seq: Vec<Layer>,
    s: usize,
    m: usize,
    out: &mut Vec<Occurrence>,
) {
    let shift = seq[s].offset - lin[0].offset;
    if m == lin.len() {
        let at = path_after(c, &t.src, &seq[..s]);
        if contains_at(c, &at, &pattern.src, shift) {
            let occ = Occurrence { prefix: seq[..s].to_vec(), shift, suffix: seq[s + m..].to_vec() };
            if !out.contains(&occ) {
                out.push(occ);
            }
        }
        return;
    }
    for j in s + m..seq.len() {
        if seq[j].gen != lin[m].gen {
            continue;
        }
        // Move each intervening layer below the block if it commutes with
        // it; otherwise it stays stuck between the block and the candidate.
        let mut cur = seq.clone();
        let mut start = s;
        let mut end = s + m;
        for _ in s + m..j {
            match move_down(c, &cur, end, start).into_iter().next() {
                Some(moved) => {
                    cur = moved;
                    start += 1;
                    end += 1;
                }
                None => end += 1,
            }
        }
        let block_end = start + m;
        for moved in move_down(c, &cur, end, block_end) {
            let Some(shift) = moved[start].offset.checked_sub(lin[0].offset) else { continue };
            if (0..=m).all(|k| moved[start + k].offset == lin[k].offset + shift) {
                grow(c, t, pattern, lin, moved, start, m + 1, out);
            }
        }
    }
}

fn shifted(layers: &[Layer], by: usize) -> impl Iterator<Item = Layer> + '_ {
    layers.iter().map(move |l| Layer { offset: l.offset + by, gen: l.gen })
}

/// The term with the occurrence replaced by `replacement`, in normal form.
pub(crate) fn replace(c: &Computad, t: &Term, occ: &Occurrence, replacement: &Term) -> Term {
    let mut layers = occ.prefix.clone();
    layers.extend(shifted(&replacement.layers, occ.shift));
    layers.extend_from_slice(&occ.suffix);
    normal_form(c, &Term { src: t.src.clone(), tgt: t.tgt.clone(), layers })
}

pub(crate) fn neighbours(p: &Presentation, t: &Term) -> Vec<RewriteStep> {
    let c = &p.computad;
    let mut out: Vec<RewriteStep> = Vec::new();
    for r in &p.relations {
        for (from, to, forward) in [(&r.lhs, &r.rhs, true), (&r.rhs, &r.lhs, false)] {
            for occ in occurrences(c, t, from) {
                let result = replace(c, t, &occ, to);
                if result != *t && !out.iter().any(|s| s.result == result && s.relation == r.name && s.forward == forward) {
                    out.push(RewriteStep { relation: r.name.clone(), forward, result });
                }
            }
        }
    }
    out
}

struct Side {
    parent: HashMap<Term, Option<(Term, String, bool)>>,
    frontier: VecDeque<Term>,
}

impl Side {
    fn new(t: &Term) -> Self {
        let mut parent = HashMap::new();
        parent.insert(t.clone(), None);
        Side { parent, frontier: VecDeque::from([t.clone()]) }
    }

    /// Steps from the root to `t`.
    fn trace_to(&self, t: &Term) -> Vec<RewriteStep> {
        let mut steps = Vec::new();
        let mut cur = t.clone();
        while let Some(Some((prev, rel, fwd))) = self.parent.get(&cur) {
            steps.push(RewriteStep { relation: rel.clone(), forward: *fwd, result: cur.clone() });
            cur = prev.clone();
        }
        steps.reverse();
        steps
    }
}

pub(crate) fn search(p: &Presentation, a: &Term, b: &Term, budget: usize) -> Verdict {
    let (a, b) = (p.normal_form(a), p.normal_form(b));
    if a == b {
        return Verdict::Equal(Witness::Syntactic);
    }
    let mut sides = [Side::new(&a), Side::new(&b)];
    let mut states = 2;
    loop {
        let which = match (sides[0].frontier.is_empty(), sides[1].frontier.is_empty()) {
            (true, _) => {
                return Verdict::NotEqual(format!(
                    "closure of {} exhausted after {states} states",
                    p.computad.show_term(&a)
                ))
            }
            (_, true) => {
                return Verdict::NotEqual(format!(
                    "closure of {} exhausted after {states} states",
                    p.computad.show_term(&b)
                ))
            }
            _ if sides[0].frontier.len() <= sides[1].frontier.len() => 0,
            _ => 1,
        };
        let cur = sides[which].frontier.pop_front().expect("non-empty frontier");
        for step in neighbours(p, &cur) {
            if sides[which].parent.contains_key(&step.result) {
                continue;
            }
            sides[which]
                .parent
                .insert(step.result.clone(), Some((cur.clone(), step.relation.clone(), step.forward)));
            if sides[1 - which].parent.contains_key(&step.result) {
                let meet = step.result;
                return Verdict::Equal(Witness::Trace(join(&sides, which, &meet)));
            }
            states += 1;
            if states >= budget {
                return Verdict::Unknown { states, budget };
            }
            sides[which].frontier.push_back(step.result);
        }
    }
}

fn join(sides: &[Side; 2], _which: usize, meet: &Term) -> Vec<RewriteStep> {
    let mut steps = sides[0].trace_to(meet);
    // Walk back from the meeting point to the right-hand root, inverting steps.
    let mut cur = meet.clone();
    while let Some(Some((prev, rel, fwd))) = sides[1].parent.get(&cur) {
        steps.push(RewriteStep { relation: rel.clone(), forward: !fwd, result: prev.clone() });
        cur = prev.clone();
    }
    steps
}
