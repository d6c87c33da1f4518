//! The lax functor classifier of a locally discrete presentation with
//! finitely many 1-cells.
//!
//! The 1-generators are the 1-cells of the base, identities included, so a
//! path is a composable sequence. Every sequence of length 0 or at least 2,
//! up to the sequence bound, has a comparison generator into its composite.
//! The relations are the unit and associativity laws of the binary and
//! nullary comparisons, and the definition of each longer comparison as
//! the left-nested composite of binary ones.
//!
//! The colax variant reverses every comparison cell.

mod comonoid;
mod gdl;
mod iso;
mod transpose;
mod unit;

use std::collections::BTreeMap;

pub use comonoid::{associator, coassociativity_check, comultiplication, counit_check, Comonoid};
pub use gdl::{
    check_generalized_dist_law, comonad_as_oplax, compose_via, gdl_equivalences, gdl_from_dist_law, gdl_from_mixed_law, gdl_from_two_functor,
    gdl_to_two_functor, identity_gdl, mutate_swap, GeneralizedDistLawData, AXIOMS,
};
pub use iso::{classifier_mnd_iso_check, dist_tensor_iso_check, mixed_comonad_iso_check};
pub use transpose::{fincat_lax_pool, monad_as_lax, same_lax_data, transpose, transpose_roundtrip, untranspose, BaseLax};
pub use unit::{classifier_adjunction_check, counit_q, listed_sequences, q_functor, unit_icon, unit_p, UnitData};

use crate::presentation::{Computad, Oracle, Path, Presentation, PresentationError, Presented, Shape, Term};

pub const DEFAULT_SEQUENCE_BOUND: usize = 4;

/// Refuse bases with more 1-cells than this.
pub const MAX_CELLS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Comparison cells go from a sequence to its composite.
    Lax,
    /// Comparison cells go from a composite to the sequence.
    Colax,
}

#[derive(Clone, Debug)]
pub struct Classifier {
    pub base: Presentation,
    pub bound: usize,
    pub orientation: Orientation,
    /// 1-generator `i` of `result` stands for the base 1-cell `cells[i]`.
    pub cells: Vec<Path>,
    /// 2-generator `i` of `result` is the comparison of `sequences[i]`,
    /// given by its start object and cell indices.
    pub sequences: Vec<(usize, Vec<usize>)>,
    pub result: Presentation,
    cell_ix: BTreeMap<Path, usize>,
    seq_ix: BTreeMap<(usize, Vec<usize>), usize>,
}

pub fn classifier(c: &Presentation) -> Result<Classifier, PresentationError> {
    Classifier::new(c, DEFAULT_SEQUENCE_BOUND, Orientation::Lax)
}

/// The classifier with every comparison cell reversed.
pub fn mixed_classifier(c: &Presentation) -> Result<Classifier, PresentationError> {
    Classifier::new(c, DEFAULT_SEQUENCE_BOUND, Orientation::Colax)
}

/// Every normal 1-cell of `c`, shortest first.
pub fn all_cells(c: &Presentation) -> Result<Vec<Path>, PresentationError> {
    for n in 0..=MAX_CELLS {
        let paths = c.paths_up_to(n + 1);
        if paths.len() > MAX_CELLS {
            break;
        }
        if paths.iter().all(|p| p.len() <= n) {
            return Ok(paths);
        }
    }
    Err(PresentationError::Other(format!("`{}` has more than {MAX_CELLS} 1-cells", c.name)))
}

impl Classifier {
    pub fn new(c: &Presentation, bound: usize, orientation: Orientation) -> Result<Self, PresentationError> {
        if !c.computad.two.is_empty() {
            return Err(PresentationError::Other(format!("`{}` has 2-generators; classifiers need a locally discrete base", c.name)));
        }
        let bound = bound.max(2);
        let cells = all_cells(c)?;
        let cc = &c.computad;
        let cell_name = |p: &Path| {
            if p.is_empty() {
                format!("1_{}", cc.objects[p.start])
            } else {
                p.edges.iter().map(|&e| cc.one[e].name.as_str()).collect::<Vec<_>>().join(";")
            }
        };
        let mut k = Computad::new();
        for o in &cc.objects {
            k.add_object(o)?;
        }
        for p in &cells {
            k.add_one(&cell_name(p), &cc.objects[p.start], &cc.objects[cc.end(p)])?;
        }
        let suffix = match orientation {
            Orientation::Lax => "",
            Orientation::Colax => "^co",
        };
        let mut cl = Classifier {
            base: c.clone(),
            bound,
            orientation,
            cell_ix: cells.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect(),
            cells,
            sequences: Vec::new(),
            result: Presentation::free(format!("{}bar{suffix}", c.name), k),
            seq_ix: BTreeMap::new(),
        };

        let mut all: Vec<(usize, Vec<usize>)> = (0..cc.objects.len()).map(|x| (x, Vec::new())).collect();
        let mut layer: Vec<(usize, Vec<usize>)> = (0..cl.cells.len()).map(|i| (cl.cells[i].start, vec![i])).collect();
        for _ in 2..=bound {
            let mut next = Vec::new();
            for (x, s) in &layer {
                let end = cc.end(&cl.cells[*s.last().expect("nonempty")]);
                for (j, q) in cl.cells.iter().enumerate() {
                    if q.start == end {
                        let mut s2 = s.clone();
                        s2.push(j);
                        next.push((*x, s2));
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        let (shape, oracle) = match orientation {
            Orientation::Lax => (Shape::Merge, Oracle::WireTracking),
            Orientation::Colax => (Shape::Split, Oracle::CoWireTracking),
        };
        for (x, s) in all {
            let name = if s.is_empty() {
                format!("F()_{}", cc.objects[x])
            } else {
                format!("F({})", s.iter().map(|&i| cell_name(&cl.cells[i])).collect::<Vec<_>>().join(","))
            };
            let seq = cl.sequence_path(x, &s);
            let comp = cl.letter(cl.compose_all(x, &s));
            let (src, tgt) = match orientation {
                Orientation::Lax => (seq, comp),
                Orientation::Colax => (comp, seq),
            };
            let id = cl.result.computad.add_two(&name, src, tgt, shape)?;
            cl.seq_ix.insert((x, s.clone()), id);
            cl.sequences.push((x, s));
        }
        cl.add_relations()?;
        cl.result.oracle = Some(oracle);
        Ok(cl)
    }

    /// Rebuilds with a larger sequence bound; a smaller one is a no-op.
    pub fn extend(&mut self, bound: usize) -> Result<(), PresentationError> {
        if bound > self.bound {
            *self = Classifier::new(&self.base, bound, self.orientation)?;
        }
        Ok(())
    }

    fn add_relations(&mut self) -> Result<(), PresentationError> {
        let n = self.cells.len();
        let mut rels = Vec::new();
        for f in 0..n {
            let (x, y) = (self.cells[f].start, self.cell_end(f));
            let lf = self.letter(f);
            let ex = Path::empty(x);
            let ey = Path::empty(y);
            let idx = self.identity_cell(x);
            let idy = self.identity_cell(y);
            let left = self.v(&self.whisker(&ex, &self.gen(x, &[]), &lf), &self.gen(x, &[idx, f]));
            let right = self.v(&self.whisker(&lf, &self.gen(y, &[]), &ey), &self.gen(x, &[f, idy]));
            let name = self.result.computad.one[f].name.clone();
            rels.push((format!("left unit at {name}"), left, Term::identity(lf.clone())));
            rels.push((format!("right unit at {name}"), right, Term::identity(lf)));
        }
        for (x, s) in self.sequences.clone() {
            if s.len() == 3 {
                let (f, g, h) = (s[0], s[1], s[2]);
                let (fg, gh) = (self.composite(f, g), self.composite(g, h));
                let y = self.cells[g].start;
                let lhs = self.v(&self.whisker(&Path::empty(x), &self.gen(x, &[f, g]), &self.letter(h)), &self.gen(x, &[fg, h]));
                let rhs = self.v(&self.whisker(&self.letter(f), &self.gen(y, &[g, h]), &Path::empty(self.cell_end(h))), &self.gen(x, &[f, gh]));
                rels.push((format!("associativity at {}", self.seq_name(x, &s)), lhs, rhs));
            }
            if s.len() >= 3 {
                let rhs = self.nested(x, &s);
                rels.push((format!("definition of {}", self.seq_name(x, &s)), self.gen(x, &s), rhs));
            }
        }
        for (name, l, r) in rels {
            self.result.add_relation(name, l, r)?;
        }
        Ok(())
    }

    fn seq_name(&self, x: usize, s: &[usize]) -> String {
        self.result.computad.two[self.seq_ix[&(x, s.to_vec())]].name.clone()
    }

    fn gen(&self, x: usize, s: &[usize]) -> Term {
        self.result.computad.generator_term(self.seq_ix[&(x, s.to_vec())])
    }

    /// Vertical composite in the lax reading: `a` then `b` for lax, the
    /// reverse for colax.
    fn v(&self, a: &Term, b: &Term) -> Term {
        match self.orientation {
            Orientation::Lax => self.result.then(a, b),
            Orientation::Colax => self.result.then(b, a),
        }
    }

    fn whisker(&self, l: &Path, t: &Term, r: &Path) -> Term {
        self.result.wh(l, t, r)
    }

    /// `F(init) last ; F(c(init), last)`, the definition of a comparison
    /// of length at least 3.
    fn nested(&self, x: usize, s: &[usize]) -> Term {
        let (init, last) = s.split_at(s.len() - 1);
        let first = self.whisker(&Path::empty(x), &self.comparison(x, init), &self.letter(last[0]));
        self.v(&first, &self.gen(x, &[self.compose_all(x, init), last[0]]))
    }

    pub fn host(&self) -> Presented<'_> {
        Presented::new(&self.result)
    }

    pub fn base_host(&self) -> Presented<'_> {
        Presented::new(&self.base)
    }

    pub fn cell_end(&self, i: usize) -> usize {
        self.base.computad.end(&self.cells[i])
    }

    pub fn cell_index(&self, p: &Path) -> Option<usize> {
        self.cell_ix.get(&self.base.normalize_path(p)).copied()
    }

    pub fn identity_cell(&self, x: usize) -> usize {
        self.cell_ix[&Path::empty(x)]
    }

    pub fn composite(&self, i: usize, j: usize) -> usize {
        let p = self.base.computad.concat(&self.cells[i], &self.cells[j]).expect("composable cells");
        self.cell_index(&p).expect("every 1-cell is listed")
    }

    /// The cell composing a sequence; the identity at `x` when it is empty.
    pub fn compose_all(&self, x: usize, s: &[usize]) -> usize {
        s.iter().skip(1).fold(s.first().copied().unwrap_or_else(|| self.identity_cell(x)), |acc, &j| self.composite(acc, j))
    }

    /// The 1-generator of a cell, as a path of the classifier.
    pub fn letter(&self, i: usize) -> Path {
        Path { start: self.cells[i].start, edges: vec![i] }
    }

    pub fn sequence_path(&self, x: usize, s: &[usize]) -> Path {
        Path { start: x, edges: s.to_vec() }
    }

    /// The comparison generator of a sequence, if it was materialised.
    pub fn comparison_gen(&self, x: usize, s: &[usize]) -> Option<usize> {
        self.seq_ix.get(&(x, s.to_vec())).copied()
    }

    /// The comparison cell of any sequence: an identity for length 1, the
    /// generator within the bound, the nested composite beyond it.
    pub fn comparison(&self, x: usize, s: &[usize]) -> Term {
        if s.len() == 1 {
            return Term::identity(self.letter(s[0]));
        }
        match self.comparison_gen(x, s) {
            Some(g) => self.result.computad.generator_term(g),
            None => self.nested(x, s),
        }
    }

    /// `sequences[i]` as a start object and a slice.
    pub fn sequence(&self, i: usize) -> (usize, &[usize]) {
        (self.sequences[i].0, &self.sequences[i].1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host::TwoCategory;

    #[test]
    fn terminal_classifier_shape() {
        let cl = classifier(&Presentation::terminal()).unwrap();
        let c = &cl.result.computad;
        assert_eq!(c.one.len(), 1);
        assert_eq!(c.one[0].name, "1_*");
        // F(), F(1,1), F(1,1,1), F(1,1,1,1)
        assert_eq!(c.two.len(), 4);
        assert_eq!(cl.result.relations.len(), 2 + 1 + 2);
        cl.result.validate().unwrap();
    }

    #[test]
    fn walking_arrow_classifier_shape() {
        let cl = classifier(&Presentation::walking_arrow()).unwrap();
        let names: Vec<&str> = cl.result.computad.one.iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["1_0", "1_1", "u"]);
        let two = |n: usize| cl.sequences.iter().filter(|(_, s)| s.len() == n).count();
        assert_eq!((two(0), two(2), two(3), two(4)), (2, 4, 5, 6));
        cl.result.validate().unwrap();
    }

    #[test]
    fn discrete_base_has_only_identity_sequences() {
        let mut c = Computad::new();
        c.add_object("a").unwrap();
        c.add_object("b").unwrap();
        let cl = classifier(&Presentation::free("D", c)).unwrap();
        assert_eq!(cl.cells.len(), 2);
        for (x, s) in &cl.sequences {
            assert!(s.iter().all(|&i| cl.cells[i] == Path::empty(*x)));
        }
    }

    #[test]
    fn locally_non_discrete_base_is_refused() {
        let m = crate::monads::mnd_presentation();
        assert!(classifier(&m).is_err());
    }

    #[test]
    fn comparisons_beyond_the_bound_are_nested() {
        let cl = Classifier::new(&Presentation::terminal(), 2, Orientation::Lax).unwrap();
        let t = cl.comparison(0, &[0, 0, 0]);
        assert_eq!(t.layers.len(), 2);
        let wide = Classifier::new(&Presentation::terminal(), 3, Orientation::Lax).unwrap();
        let g = wide.comparison(0, &[0, 0, 0]);
        assert!(wide.host().compare(&g, &wide.nested(0, &[0, 0, 0])).is_equal());
    }

    #[test]
    fn extend_grows_the_bound() {
        let mut cl = classifier(&Presentation::walking_arrow()).unwrap();
        cl.extend(5).unwrap();
        assert_eq!(cl.bound, 5);
        assert!(cl.comparison_gen(0, &[0, 0, 0, 0, 2]).is_some());
        cl.extend(3).unwrap();
        assert_eq!(cl.bound, 5);
    }

    #[test]
    fn colax_comparisons_point_the_other_way() {
        let cl = mixed_classifier(&Presentation::terminal()).unwrap();
        let g = &cl.result.computad.two[cl.comparison_gen(0, &[0, 0]).unwrap()];
        assert_eq!((g.src.len(), g.tgt.len(), g.shape), (1, 2, Shape::Split));
        cl.result.validate().unwrap();
    }

}
