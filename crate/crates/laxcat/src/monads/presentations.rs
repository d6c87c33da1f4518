//! The presented 2-categories `Mnd`, `Adj` and `Cmd`, the inclusion of
//! `Mnd` into `Adj`, and the comparison of `Mnd` with the augmented simplex
//! category.

use std::collections::{BTreeMap, HashSet};

use super::delta::{delta_a_count, delta_a_hom, DeltaHost, MonotoneMap};
use crate::presentation::{
    check_presented_functor, Computad, Oracle, Path, Presentation, PresentationError, Presented, PresentedFunctor, Shape, Term,
};
use crate::report::Report;
use crate::verdict::Verdict;

fn build(c: impl FnOnce(&mut Computad) -> Result<(), PresentationError>, name: &str) -> Presentation {
    let mut comp = Computad::new();
    c(&mut comp).expect("built-in computad is well formed");
    Presentation::free(name, comp)
}

/// One object `A`, a 1-cell `t`, `eta: [] => [t]` and `mu: [t, t] => [t]`
/// subject to associativity and the two unit laws.
pub fn mnd_presentation() -> Presentation {
    let mut p = build(
        |c| {
            c.add_object("A")?;
            c.add_one("t", "A", "A")?;
            let (e, t) = (c.path("A", &[])?, c.path("A", &["t"])?);
            c.add_two("eta", e, t.clone(), Shape::Merge)?;
            c.add_two("mu", c.path("A", &["t", "t"])?, t, Shape::Merge)?;
            Ok(())
        },
        "Mnd",
    );
    let (e, t) = (p.path("A", &[]), p.p(&["t"]));
    let (mu, eta) = (p.gen("mu"), p.gen("eta"));
    let assoc_l = p.then(&p.wh(&t, &mu, &e), &mu);
    let assoc_r = p.then(&p.wh(&e, &mu, &t), &mu);
    let left = p.then(&p.wh(&e, &eta, &t), &mu);
    let right = p.then(&p.wh(&t, &eta, &e), &mu);
    p.add_relation("associativity", assoc_l, assoc_r).expect("parallel");
    p.add_relation("left unit", left, p.id(&t)).expect("parallel");
    p.add_relation("right unit", right, p.id(&t)).expect("parallel");
    p.oracle = Some(Oracle::WireTracking);
    p
}

/// The dual: `w`, `delta: [w] => [w, w]`, `eps: [w] => []`.
pub fn comonad_presentation() -> Presentation {
    let mut p = build(
        |c| {
            c.add_object("A")?;
            c.add_one("w", "A", "A")?;
            let (e, w) = (c.path("A", &[])?, c.path("A", &["w"])?);
            c.add_two("eps", w.clone(), e, Shape::Split)?;
            c.add_two("delta", w, c.path("A", &["w", "w"])?, Shape::Split)?;
            Ok(())
        },
        "Cmd",
    );
    let (e, w) = (p.path("A", &[]), p.p(&["w"]));
    let (delta, eps) = (p.gen("delta"), p.gen("eps"));
    let l = p.then(&delta, &p.wh(&w, &delta, &e));
    let r = p.then(&delta, &p.wh(&e, &delta, &w));
    let left = p.then(&delta, &p.wh(&e, &eps, &w));
    let right = p.then(&delta, &p.wh(&w, &eps, &e));
    p.add_relation("coassociativity", l, r).expect("parallel");
    p.add_relation("left counit", left, p.id(&w)).expect("parallel");
    p.add_relation("right counit", right, p.id(&w)).expect("parallel");
    p.oracle = Some(Oracle::CoWireTracking);
    p
}

/// Objects `A`, `B`; `f: A -> B` left adjoint to `g: B -> A`.
pub fn adj_presentation() -> Presentation {
    let mut p = build(
        |c| {
            c.add_object("A")?;
            c.add_object("B")?;
            c.add_one("f", "A", "B")?;
            c.add_one("g", "B", "A")?;
            c.add_two("eta", c.path("A", &[])?, c.path("A", &["f", "g"])?, Shape::Opaque)?;
            c.add_two("eps", c.path("B", &["g", "f"])?, c.path("B", &[])?, Shape::Opaque)?;
            Ok(())
        },
        "Adj",
    );
    let (ea, eb) = (p.path("A", &[]), p.path("B", &[]));
    let (f, g) = (p.p(&["f"]), p.p(&["g"]));
    let (eta, eps) = (p.gen("eta"), p.gen("eps"));
    let tri_f = p.then(&p.wh(&ea, &eta, &f), &p.wh(&f, &eps, &eb));
    let tri_g = p.then(&p.wh(&g, &eta, &ea), &p.wh(&eb, &eps, &g));
    p.add_relation("triangle on f", tri_f, p.id(&f)).expect("parallel");
    p.add_relation("triangle on g", tri_g, p.id(&g)).expect("parallel");
    p
}

/// `t -> [f, g]`, `mu -> f.eps.g`, `eta -> eta`.
pub fn mnd_to_adj<'a>(adj: &'a Presentation) -> PresentedFunctor<Presented<'a>> {
    let (f, g) = (adj.p(&["f"]), adj.p(&["g"]));
    PresentedFunctor {
        obj: vec![adj.computad.object("A").expect("A")],
        one: vec![adj.p(&["f", "g"])],
        two: vec![adj.gen("eta"), adj.wh(&f, &adj.gen("eps"), &g)],
    }
}

/// Audits the assignment of `Mnd` into `Adj`.
pub fn mnd_in_adj_check(budget: usize) -> Report {
    let (mnd, adj) = (mnd_presentation(), adj_presentation());
    let f = mnd_to_adj(&adj);
    let h = Presented::with_budget(&adj, budget);
    let mut r = check_presented_functor(&mnd, &h, &f).expect("generator images are well typed");
    r.title = "Mnd inside Adj".into();
    r
}

/// The wiring of a `Mnd` term as a monotone map.
pub fn denote(p: &Presentation, t: &Term) -> Option<MonotoneMap> {
    let wires = Oracle::WireTracking.wiring(&p.computad, t).ok()?;
    let mut values = vec![usize::MAX; t.src.len()];
    for (j, set) in wires.iter().enumerate() {
        for &i in set {
            values[i] = j;
        }
    }
    if values.contains(&usize::MAX) {
        return None;
    }
    MonotoneMap::new(t.tgt.len(), values)
}

/// A chosen term for a monotone map: fibres are processed left to right,
/// empty fibres by `eta` and larger ones by left-nested `mu`.
pub fn canonical_term(p: &Presentation, f: &MonotoneMap) -> Term {
    let c = &p.computad;
    let a = c.object("A").expect("A");
    let t = c.one_gen("t").expect("t");
    let (eta, mu) = (c.two_gen("eta").expect("eta"), c.two_gen("mu").expect("mu"));
    let tn = |k: usize| Path { start: a, edges: vec![t; k] };
    let mut term = Term::identity(tn(f.n));
    // position of the next unprocessed wire in the current path
    let mut at = 0;
    for k in f.fibres() {
        let step = |gen: usize, off: usize, len: usize| {
            let g = c.generator_term(gen);
            c.whisker(&tn(off), &g, &tn(len)).expect("typed")
        };
        let cur = term.tgt.len();
        if k == 0 {
            term = c.vertical(&term, &step(eta, at, cur - at)).expect("typed");
        } else {
            for _ in 1..k {
                let cur = term.tgt.len();
                term = c.vertical(&term, &step(mu, at, cur - at - 2)).expect("typed");
            }
        }
        at += 1;
    }
    term
}

/// Oriented relations used to enumerate normal forms: units to the
/// identity and associativity towards the right-nested side.
fn mnd_rewrite_lhs(p: &Presentation) -> Vec<Term> {
    p.relations.iter().map(|r| r.lhs.clone()).collect()
}

/// Every interchange class of terms out of `src` with at most `max_layers`
/// layers in which no left-hand side of `lhs` occurs. Terms failing `keep`
/// are dropped along with their extensions.
pub fn irreducible_terms(p: &Presentation, lhs: &[Term], src: &Path, max_layers: usize, keep: impl Fn(&Term) -> bool) -> Vec<Term> {
    let c = &p.computad;
    let start = p.normal_form(&Term::identity(src.clone()));
    let mut seen: HashSet<Term> = HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    let mut out = frontier.clone();
    for _ in 0..max_layers {
        let mut next = Vec::new();
        for t in &frontier {
            for layer in c.layers_at(&t.tgt) {
                let mut u = t.clone();
                u.tgt = c.apply_layer(&t.tgt, &layer).expect("applicable");
                u.layers.push(layer);
                let u = p.normal_form(&u);
                if !keep(&u) || seen.contains(&u) || lhs.iter().any(|l| !p.occurrences(&u, l).is_empty()) {
                    continue;
                }
                seen.insert(u.clone());
                next.push(u);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Compares `Mnd` with the augmented simplex category for all `n + m <=
/// bound`: a presented functor `Mnd -> Delta_a`, irreducible terms counted
/// against monotone maps, and the chosen terms as an inverse.
pub fn mnd_delta_a_iso_check(bound: usize) -> Report {
    let p = mnd_presentation();
    let mut r = Report::new(format!("Mnd against the augmented simplex category, n + m <= {bound}"));
    let sem = PresentedFunctor::<DeltaHost> {
        obj: vec![()],
        one: vec![1],
        two: vec![MonotoneMap::new(1, vec![]).expect("eta"), MonotoneMap::new(1, vec![0, 0]).expect("mu")],
    };
    let audit = check_presented_functor(&p, &DeltaHost, &sem).expect("well typed");
    r.absorb("functor to Delta_a: ", audit);
    let lhs = mnd_rewrite_lhs(&p);
    let a = p.computad.object("A").expect("A");
    let t = p.computad.one_gen("t").expect("t");
    let eta = p.computad.two_gen("eta").expect("eta");
    for n in 0..=bound {
        let src = Path { start: a, edges: vec![t; n] };
        // units are never consumed in a normal form, so each one survives to the target
        let etas = |u: &Term| u.layers.iter().filter(|l| l.gen == eta).count() <= bound - n;
        let terms = irreducible_terms(&p, &lhs, &src, bound, etas);
        let mut by_target: BTreeMap<usize, Vec<MonotoneMap>> = BTreeMap::new();
        for term in &terms {
            let m = term.tgt.len();
            if n + m > bound {
                continue;
            }
            match denote(&p, term) {
                Some(f) => by_target.entry(m).or_default().push(f),
                None => r.push(format!("{n} -> {m} wiring"), Verdict::NotEqual(format!("unreadable term {}", p.computad.show_term(term)))),
            }
        }
        for m in 0..=bound - n {
            let mut found = by_target.remove(&m).unwrap_or_default();
            let count = found.len();
            found.sort();
            found.dedup();
            let expected = delta_a_hom(n, m);
            let ok = count == delta_a_count(n, m) && found.len() == count && found == expected;
            r.check(
                format!("t^{n} => t^{m}: {count} cells"),
                ok,
                format!("{count} normal forms, {} distinct maps, {} monotone maps", found.len(), expected.len()),
            );
            let inverse = expected.iter().all(|f| denote(&p, &canonical_term(&p, f)).as_ref() == Some(f));
            r.check(format!("t^{n} => t^{m}: chosen terms"), inverse, "a chosen term does not denote its map");
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::DEFAULT_BUDGET;

    #[test]
    fn built_in_presentations_validate() {
        for p in [mnd_presentation(), adj_presentation(), comonad_presentation()] {
            p.validate().unwrap();
        }
    }

    #[test]
    fn mnd_unit_law_is_equal_and_distinct_cells_are_not() {
        let p = mnd_presentation();
        let (e, t) = (p.path("A", &[]), p.p(&["t"]));
        let (eta, mu) = (p.gen("eta"), p.gen("mu"));
        let lhs = p.then(&p.wh(&e, &eta, &t), &mu);
        assert!(p.two_cells_equal(&lhs, &p.id(&t), DEFAULT_BUDGET).unwrap().is_equal());
        let merged_units = p.chain(&[eta.clone(), p.wh(&e, &eta, &t), mu.clone()]);
        assert!(p.two_cells_equal(&merged_units, &eta, DEFAULT_BUDGET).unwrap().is_equal());
        let collapse = p.then(&mu, &p.wh(&t, &eta, &e));
        let tt = p.p(&["t", "t"]);
        assert!(p.two_cells_equal(&collapse, &p.id(&tt), DEFAULT_BUDGET).unwrap().is_not_equal());
    }

    #[test]
    fn mnd_matches_delta_a_to_small_bound() {
        let r = mnd_delta_a_iso_check(4);
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn mnd_lands_in_adj() {
        let r = mnd_in_adj_check(DEFAULT_BUDGET);
        assert!(r.passed(), "{}", r.render_text());
    }
}
