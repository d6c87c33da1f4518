//! The one interface every checker is written against: a strict 2-category
//! with decidable (or semi-decidable) equality of 2-cells.
//!
//! Composition is written in diagram order throughout: `compose(f, g)` is
//! "first `f`, then `g`", and `whisker(l, a, r)` is the 2-cell `a` with `l`
//! composed before and `r` after.

use std::fmt::Debug;

use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct HostError(pub String);

impl HostError {
    pub fn new(msg: impl Into<String>) -> Self {
        HostError(msg.into())
    }
}

pub trait TwoCategory: Clone + Debug {
    type Obj: Clone + PartialEq + Debug;
    type One: Clone + PartialEq + Debug;
    type Two: Clone + Debug;

    fn one_src(&self, f: &Self::One) -> Self::Obj;
    fn one_tgt(&self, f: &Self::One) -> Self::Obj;
    fn identity(&self, a: &Self::Obj) -> Self::One;
    fn compose(&self, f: &Self::One, g: &Self::One) -> Result<Self::One, HostError>;

    fn two_src(&self, a: &Self::Two) -> Self::One;
    fn two_tgt(&self, a: &Self::Two) -> Self::One;
    fn identity2(&self, f: &Self::One) -> Self::Two;
    fn vertical(&self, a: &Self::Two, b: &Self::Two) -> Result<Self::Two, HostError>;
    fn whisker(&self, l: &Self::One, a: &Self::Two, r: &Self::One)
        -> Result<Self::Two, HostError>;

    fn same_one(&self, f: &Self::One, g: &Self::One) -> bool;
    fn compare(&self, a: &Self::Two, b: &Self::Two) -> Verdict;

    /// Well-formedness problems of a 2-cell that construction cannot rule
    /// out, such as a failure of naturality.
    fn check_two(&self, _a: &Self::Two) -> Option<String> {
        None
    }

    fn show_one(&self, f: &Self::One) -> String {
        format!("{f:?}")
    }
    fn show_two(&self, a: &Self::Two) -> String {
        format!("{a:?}")
    }
}

/// `l` composed before the 2-cell `a`.
pub fn whisker_left<H: TwoCategory>(h: &H, l: &H::One, a: &H::Two) -> Result<H::Two, HostError> {
    let r = h.identity(&h.one_tgt(&h.two_src(a)));
    h.whisker(l, a, &r)
}

/// `r` composed after the 2-cell `a`.
pub fn whisker_right<H: TwoCategory>(h: &H, a: &H::Two, r: &H::One) -> Result<H::Two, HostError> {
    let l = h.identity(&h.one_src(&h.two_src(a)));
    h.whisker(&l, a, r)
}

/// Horizontal composite: `a` on the first leg, `b` on the second.
pub fn horizontal<H: TwoCategory>(h: &H, a: &H::Two, b: &H::Two) -> Result<H::Two, HostError> {
    let first = whisker_right(h, a, &h.two_src(b))?;
    let second = whisker_left(h, &h.two_tgt(a), b)?;
    h.vertical(&first, &second)
}

/// Composite of a non-empty list of 1-cells, or the identity on `at`.
pub fn compose_all<H: TwoCategory>(h: &H, at: &H::Obj, cells: &[H::One]) -> Result<H::One, HostError> {
    let mut acc = h.identity(at);
    for c in cells {
        acc = h.compose(&acc, c)?;
    }
    Ok(acc)
}

/// Vertical composite of a non-empty chain.
pub fn vertical_all<H: TwoCategory>(h: &H, cells: &[H::Two]) -> Result<H::Two, HostError> {
    let (first, rest) = cells.split_first().ok_or_else(|| HostError::new("empty vertical chain"))?;
    let mut acc = first.clone();
    for c in rest {
        acc = h.vertical(&acc, c)?;
    }
    Ok(acc)
}

/// Checks that a 2-cell has the expected boundary.
pub fn has_boundary<H: TwoCategory>(h: &H, a: &H::Two, src: &H::One, tgt: &H::One) -> bool {
    h.same_one(&h.two_src(a), src) && h.same_one(&h.two_tgt(a), tgt)
}
