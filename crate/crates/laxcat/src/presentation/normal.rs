//! Interchange normal forms.
//!
//! Two layers that touch disjoint wires can be applied in either order. A
//! term's normal form is the lexicographically least layer sequence in its
//! interchange class, found by repeatedly pulling the least possible layer to
//! the front.

use super::{Computad, Layer, Term};

/// Ways to apply `b` before `a`, given that `b` currently runs right after `a`.
/// Each option is the pair `(b', a')` in the new order. Empty when the two
/// layers share a wire.
pub(crate) fn slide_below(c: &Computad, a: &Layer, b: &Layer) -> Vec<(Layer, Layer)> {
    let (sa, ta) = (c.two[a.gen].src.len(), c.two[a.gen].tgt.len());
    let (sb, tb) = (c.two[b.gen].src.len(), c.two[b.gen].tgt.len());
    let mut out = Vec::with_capacity(2);
    if b.offset + sb <= a.offset {
        out.push((
            Layer { offset: b.offset, gen: b.gen },
            Layer { offset: a.offset + tb - sb, gen: a.gen },
        ));
    }
    if b.offset >= a.offset + ta {
        let opt = (
            Layer { offset: b.offset - ta + sa, gen: b.gen },
            Layer { offset: a.offset, gen: a.gen },
        );
        if !out.contains(&opt) {
            out.push(opt);
        }
    }
    out
}

/// Every sequence obtained by moving `seq[from]` down to index `to` through
/// interchange moves alone.
pub(crate) fn move_down(c: &Computad, seq: &[Layer], from: usize, to: usize) -> Vec<Vec<Layer>> {
    let mut current = vec![seq.to_vec()];
    let mut i = from;
    while i > to {
        let mut next = Vec::new();
        for s in &current {
            for (b2, a2) in slide_below(c, &s[i - 1], &s[i]) {
                let mut t = s.clone();
                t[i - 1] = b2;
                t[i] = a2;
                if !next.contains(&t) {
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            return next;
        }
        current = next;
        i -= 1;
    }
    current
}

pub(crate) fn normal_form(c: &Computad, t: &Term) -> Term {
    Term { src: t.src.clone(), tgt: t.tgt.clone(), layers: normal_layers(c, &t.layers) }
}

fn normal_layers(c: &Computad, layers: &[Layer]) -> Vec<Layer> {
    let mut done: Vec<Layer> = Vec::with_capacity(layers.len());
    let mut rest = layers.to_vec();
    while !rest.is_empty() {
        let mut best: Option<Layer> = None;
        let mut options: Vec<Vec<Layer>> = Vec::new();
        for j in 0..rest.len() {
            for s in move_down(c, &rest, j, 0) {
                match &best {
                    Some(b) if s[0] > *b => {}
                    Some(b) if s[0] == *b => {
                        if !options.contains(&s) {
                            options.push(s);
                        }
                    }
                    _ => {
                        best = Some(s[0].clone());
                        options = vec![s];
                    }
                }
            }
        }
        let front = best.expect("the first layer can always be pulled to the front");
        if options.len() == 1 {
            rest = options.pop().expect("one option").split_off(1);
        } else {
            // Ties only occur between insertions with an empty source; the
            // remainders can differ, so settle them by full comparison.
            let tail = options
                .iter()
                .map(|s| normal_layers(c, &s[1..]))
                .min()
                .expect("at least one option");
            done.push(front);
            done.extend(tail);
            return done;
        }
        done.push(front);
    }
    done
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{Computad, Path, Presentation, Shape};

    fn two_alphas() -> Presentation {
        let mut c = Computad::new();
        for o in ["A", "B", "C"] {
            c.add_object(o).unwrap();
        }
        c.add_one("f", "A", "B").unwrap();
        c.add_one("f'", "A", "B").unwrap();
        c.add_one("g", "B", "C").unwrap();
        c.add_one("g'", "B", "C").unwrap();
        let f = c.path("A", &["f"]).unwrap();
        let f2 = c.path("A", &["f'"]).unwrap();
        let g = c.path("B", &["g"]).unwrap();
        let g2 = c.path("B", &["g'"]).unwrap();
        c.add_two("alpha", f, f2, Shape::Opaque).unwrap();
        c.add_two("beta", g, g2, Shape::Opaque).unwrap();
        Presentation::free("AB", c)
    }

    #[test]
    fn interchange_pair_has_one_normal_form() {
        let p = two_alphas();
        let alpha = p.gen("alpha");
        let beta = p.gen("beta");
        let one = p.then(&p.wr(&alpha, &p.p(&["g"])), &p.wl(&p.p(&["f'"]), &beta));
        let two = p.then(&p.wl(&p.p(&["f"]), &beta), &p.wr(&alpha, &p.p(&["g'"])));
        assert_ne!(one.layers, two.layers);
        assert_eq!(p.normal_form(&one), p.normal_form(&two));
    }

    #[test]
    fn identity_is_fixed() {
        let p = two_alphas();
        let id = Term::identity(p.p(&["f", "g"]));
        assert_eq!(p.normal_form(&id), id);
        let empty = Term::identity(Path::empty(0));
        assert_eq!(p.normal_form(&empty), empty);
    }

    #[test]
    fn unit_insertions_tie_break() {
        let mut c = Computad::new();
        c.add_object("*").unwrap();
        c.add_one("t", "*", "*").unwrap();
        let e = Path::empty(0);
        let t = c.path("*", &["t"]).unwrap();
        c.add_two("eta", e.clone(), t, Shape::Merge).unwrap();
        let p = Presentation::free("units", c);
        let two = p.path("*", &["t", "t"]);
        let a = Term { src: e.clone(), tgt: two.clone(), layers: vec![Layer { offset: 0, gen: 0 }, Layer { offset: 1, gen: 0 }] };
        let b = Term { src: e, tgt: two, layers: vec![Layer { offset: 0, gen: 0 }, Layer { offset: 0, gen: 0 }] };
        assert_eq!(p.normal_form(&a), p.normal_form(&b));
    }
}
