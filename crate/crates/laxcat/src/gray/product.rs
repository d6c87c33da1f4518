//! The cartesian product of two presented 2-categories, componentwise.

use crate::host::{HostError, TwoCategory};
use crate::presentation::{Path, Presented, Term};
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Copy, Debug)]
pub struct ProductHost<'a> {
    pub left: Presented<'a>,
    pub right: Presented<'a>,
}

/// Both components equal; otherwise the first refutation, else the first
/// exhausted search.
pub fn both(a: Verdict, b: Verdict) -> Verdict {
    match (a, b) {
        (Verdict::NotEqual(x), _) => Verdict::NotEqual(format!("first component: {x}")),
        (_, Verdict::NotEqual(y)) => Verdict::NotEqual(format!("second component: {y}")),
        (u @ Verdict::Unknown { .. }, _) | (_, u @ Verdict::Unknown { .. }) => u,
        _ => Verdict::Equal(Witness::Componentwise),
    }
}

impl TwoCategory for ProductHost<'_> {
    type Obj = (usize, usize);
    type One = (Path, Path);
    type Two = (Term, Term);

    fn one_src(&self, f: &(Path, Path)) -> (usize, usize) {
        (self.left.one_src(&f.0), self.right.one_src(&f.1))
    }

    fn one_tgt(&self, f: &(Path, Path)) -> (usize, usize) {
        (self.left.one_tgt(&f.0), self.right.one_tgt(&f.1))
    }

    fn identity(&self, a: &(usize, usize)) -> (Path, Path) {
        (Path::empty(a.0), Path::empty(a.1))
    }

    fn compose(&self, f: &(Path, Path), g: &(Path, Path)) -> Result<(Path, Path), HostError> {
        Ok((self.left.compose(&f.0, &g.0)?, self.right.compose(&f.1, &g.1)?))
    }

    fn two_src(&self, a: &(Term, Term)) -> (Path, Path) {
        (a.0.src.clone(), a.1.src.clone())
    }

    fn two_tgt(&self, a: &(Term, Term)) -> (Path, Path) {
        (a.0.tgt.clone(), a.1.tgt.clone())
    }

    fn identity2(&self, f: &(Path, Path)) -> (Term, Term) {
        (Term::identity(f.0.clone()), Term::identity(f.1.clone()))
    }

    fn vertical(&self, a: &(Term, Term), b: &(Term, Term)) -> Result<(Term, Term), HostError> {
        Ok((self.left.vertical(&a.0, &b.0)?, self.right.vertical(&a.1, &b.1)?))
    }

    fn whisker(&self, l: &(Path, Path), a: &(Term, Term), r: &(Path, Path)) -> Result<(Term, Term), HostError> {
        Ok((self.left.whisker(&l.0, &a.0, &r.0)?, self.right.whisker(&l.1, &a.1, &r.1)?))
    }

    fn same_one(&self, f: &(Path, Path), g: &(Path, Path)) -> bool {
        self.left.same_one(&f.0, &g.0) && self.right.same_one(&f.1, &g.1)
    }

    fn compare(&self, a: &(Term, Term), b: &(Term, Term)) -> Verdict {
        both(self.left.compare(&a.0, &b.0), self.right.compare(&a.1, &b.1))
    }

    fn show_one(&self, f: &(Path, Path)) -> String {
        format!("({}, {})", self.left.show_one(&f.0), self.right.show_one(&f.1))
    }

    fn show_two(&self, a: &(Term, Term)) -> String {
        format!("({}, {})", self.left.show_two(&a.0), self.right.show_two(&a.1))
    }
}
