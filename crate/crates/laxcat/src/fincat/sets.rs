//! Endofunctors of finite sets built from a few basic functors, and natural
//! transformations between them given by formulas.
//!
//! The set `{0, .., n-1}` stands for every set of size `n`. Elements of a
//! composite functor's value are encoded as integers: a subset as a bitmask,
//! the point of `X + 1` as `n`, and `(x, e)` in `X * E` as `x * E + e`.

use std::fmt;
use std::rc::Rc;

use crate::host::{HostError, TwoCategory};
use crate::verdict::{Verdict, Witness};

/// Largest set a functor value may have before it is not materialised.
pub const MAX_ELEMENTS: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetFunctor {
    Id,
    /// `X + 1`
    Maybe,
    /// Finite subsets.
    Powerset,
    /// `X * E` for a fixed set of size `E`.
    Times(usize),
}

impl SetFunctor {
    pub fn name(self) -> String {
        match self {
            SetFunctor::Id => "Id".into(),
            SetFunctor::Maybe => "M".into(),
            SetFunctor::Powerset => "P".into(),
            SetFunctor::Times(e) => format!("x{e}"),
        }
    }

    pub fn size(self, n: usize) -> Option<usize> {
        let s = match self {
            SetFunctor::Id => n,
            SetFunctor::Maybe => n + 1,
            SetFunctor::Powerset => {
                if n > 16 {
                    return None;
                }
                1usize << n
            }
            SetFunctor::Times(e) => n.checked_mul(e)?,
        };
        (s <= MAX_ELEMENTS).then_some(s)
    }

    /// Action on a function `{0..n} -> {0..m}` given as a table.
    pub fn fmap(self, n: usize, m: usize, f: &[usize]) -> Vec<usize> {
        match self {
            SetFunctor::Id => f.to_vec(),
            SetFunctor::Maybe => f.iter().copied().chain(std::iter::once(m)).collect(),
            SetFunctor::Powerset => (0..1usize << n)
                .map(|s| (0..n).filter(|&x| s >> x & 1 == 1).fold(0, |acc, x| acc | 1 << f[x]))
                .collect(),
            SetFunctor::Times(e) => (0..n * e).map(|p| f[p / e] * e + p % e).collect(),
        }
    }
}

/// A composite functor, first factor applied first. Identity factors are
/// never stored.
pub type SetEndo = Vec<SetFunctor>;

pub fn normalize(fs: &[SetFunctor]) -> SetEndo {
    fs.iter().copied().filter(|&f| f != SetFunctor::Id).collect()
}

pub fn size_of(fs: &[SetFunctor], n: usize) -> Option<usize> {
    fs.iter().try_fold(n, |acc, f| f.size(acc))
}

pub fn fmap_of(fs: &[SetFunctor], n: usize, m: usize, f: &[usize]) -> Vec<usize> {
    let (mut n, mut m, mut f) = (n, m, f.to_vec());
    for g in fs {
        f = g.fmap(n, m, &f);
        n = g.size(n).expect("materialisable");
        m = g.size(m).expect("materialisable");
    }
    f
}

pub fn show_endo(fs: &[SetFunctor]) -> String {
    if fs.is_empty() {
        return "Id".into();
    }
    // outermost factor first, as in ordinary notation
    fs.iter().rev().map(|f| f.name()).collect::<Vec<_>>().join("")
}

/// Renders an element of `fs(n)`.
pub fn show_element(fs: &[SetFunctor], n: usize, e: usize) -> String {
    let Some((last, inner)) = fs.split_last() else { return e.to_string() };
    let k = size_of(inner, n).expect("materialisable");
    match last {
        SetFunctor::Id => show_element(inner, n, e),
        SetFunctor::Maybe if e == k => "*".into(),
        SetFunctor::Maybe => show_element(inner, n, e),
        SetFunctor::Powerset => {
            let items: Vec<String> = (0..k).filter(|&x| e >> x & 1 == 1).map(|x| show_element(inner, n, x)).collect();
            format!("{{{}}}", items.join(","))
        }
        SetFunctor::Times(m) => format!("({},{})", show_element(inner, n, e / m), e % m),
    }
}

/// A family of functions `src(n) -> tgt(n)`, one per size.
#[derive(Clone)]
pub struct SetNat {
    pub src: SetEndo,
    pub tgt: SetEndo,
    pub label: String,
    comp: Rc<dyn Fn(usize) -> Vec<usize>>,
}

impl fmt::Debug for SetNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} => {}", self.label, show_endo(&self.src), show_endo(&self.tgt))
    }
}

impl SetNat {
    /// `at(n, e)` is the image of the element `e` of `src(n)`.
    pub fn new(src: &[SetFunctor], tgt: &[SetFunctor], label: impl Into<String>, at: impl Fn(usize, usize) -> usize + 'static) -> Self {
        let src = normalize(src);
        let s2 = src.clone();
        SetNat {
            src,
            tgt: normalize(tgt),
            label: label.into(),
            comp: Rc::new(move |n| {
                let k = size_of(&s2, n).expect("materialisable");
                (0..k).map(|e| at(n, e)).collect()
            }),
        }
    }

    pub fn identity(f: &[SetFunctor]) -> Self {
        SetNat::new(f, f, format!("1_{}", show_endo(f)), |_, e| e)
    }

    /// The component at `n`, if both sides are materialisable there.
    pub fn component(&self, n: usize) -> Option<Vec<usize>> {
        size_of(&self.src, n)?;
        size_of(&self.tgt, n)?;
        Some((self.comp)(n))
    }

    /// The same family with the component at size `n`, element `e` replaced.
    pub fn mutate_at(&self, n: usize, e: usize, to: usize) -> Self {
        let inner = self.comp.clone();
        SetNat {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            label: format!("{}[{n}:{e}:={to}]", self.label),
            comp: Rc::new(move |k| {
                let mut v = inner(k);
                if k == n {
                    v[e] = to;
                }
                v
            }),
        }
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// First failure of naturality against all functions between sets of
    /// size at most `bound`.
    pub fn naturality_failure(&self, bound: usize) -> Option<String> {
        for n in 0..=bound {
            for m in 0..=bound {
                let (Some(an), Some(am)) = (self.component(n), self.component(m)) else { continue };
                for f in all_functions(n, m) {
                    let left: Vec<usize> = fmap_of(&self.src, n, m, &f).iter().map(|&x| am[x]).collect();
                    let right = fmap_of(&self.tgt, n, m, &f);
                    let right: Vec<usize> = an.iter().map(|&x| right[x]).collect();
                    if let Some(e) = (0..left.len()).find(|&e| left[e] != right[e]) {
                        return Some(format!(
                            "{} is not natural: along {:?} the element {} goes to {} and {}",
                            self.label,
                            f,
                            show_element(&self.src, n, e),
                            show_element(&self.tgt, m, left[e]),
                            show_element(&self.tgt, m, right[e])
                        ));
                    }
                }
            }
        }
        None
    }
}

/// Every function `{0..n} -> {0..m}` in lexicographic order.
pub fn all_functions(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|f| (0..m).map(move |y| { let mut g = f.clone(); g.push(y); g })).collect();
    }
    out
}

/// The single-object 2-category of finite-set endofunctors. 2-cells are
/// compared at every size up to `bound` where both sides are materialisable.
#[derive(Clone, Copy, Debug)]
pub struct FinSet {
    pub bound: usize,
}

impl Default for FinSet {
    fn default() -> Self {
        FinSet { bound: 2 }
    }
}

impl FinSet {
    fn naturality_failure_bounded(&self, a: &SetNat) -> Option<String> {
        a.naturality_failure(self.bound)
    }
}

impl TwoCategory for FinSet {
    type Obj = ();
    type One = SetEndo;
    type Two = SetNat;

    fn one_src(&self, _: &SetEndo) {}

    fn one_tgt(&self, _: &SetEndo) {}

    fn identity(&self, _: &()) -> SetEndo {
        Vec::new()
    }

    fn compose(&self, f: &SetEndo, g: &SetEndo) -> Result<SetEndo, HostError> {
        Ok(normalize(&[f.as_slice(), g.as_slice()].concat()))
    }

    fn two_src(&self, a: &SetNat) -> SetEndo {
        a.src.clone()
    }

    fn two_tgt(&self, a: &SetNat) -> SetEndo {
        a.tgt.clone()
    }

    fn identity2(&self, f: &SetEndo) -> SetNat {
        SetNat::identity(f)
    }

    fn vertical(&self, a: &SetNat, b: &SetNat) -> Result<SetNat, HostError> {
        if a.tgt != b.src {
            return Err(HostError::new(format!("cannot stack {b:?} on {a:?}")));
        }
        let (ca, cb) = (a.comp.clone(), b.comp.clone());
        Ok(SetNat {
            src: a.src.clone(),
            tgt: b.tgt.clone(),
            label: format!("{};{}", a.label, b.label),
            comp: Rc::new(move |n| {
                let x = ca(n);
                let y = cb(n);
                x.iter().map(|&e| y[e]).collect()
            }),
        })
    }

    fn whisker(&self, l: &SetEndo, a: &SetNat, r: &SetEndo) -> Result<SetNat, HostError> {
        let (l2, r2, ca) = (l.clone(), r.clone(), a.comp.clone());
        let (src_a, tgt_a) = (a.src.clone(), a.tgt.clone());
        Ok(SetNat {
            src: normalize(&[l.as_slice(), &a.src, r.as_slice()].concat()),
            tgt: normalize(&[l.as_slice(), &a.tgt, r.as_slice()].concat()),
            label: format!("{}{}{}", show_prefix(l), a.label, show_suffix(r)),
            comp: Rc::new(move |n| {
                let k = size_of(&l2, n).expect("materialisable");
                let inner = ca(k);
                let (s, t) = (size_of(&src_a, k).expect("materialisable"), size_of(&tgt_a, k).expect("materialisable"));
                fmap_of(&r2, s, t, &inner)
            }),
        })
    }

    fn same_one(&self, f: &SetEndo, g: &SetEndo) -> bool {
        normalize(f) == normalize(g)
    }

    fn compare(&self, a: &SetNat, b: &SetNat) -> Verdict {
        if !self.same_one(&a.src, &b.src) || !self.same_one(&a.tgt, &b.tgt) {
            return Verdict::NotEqual(format!("{a:?} and {b:?} are not parallel"));
        }
        for n in 0..=self.bound {
            let (Some(x), Some(y)) = (a.component(n), b.component(n)) else { continue };
            if let Some(e) = (0..x.len()).find(|&e| x[e] != y[e]) {
                return Verdict::NotEqual(format!(
                    "at size {n}, {} goes to {} and {}",
                    show_element(&a.src, n, e),
                    show_element(&a.tgt, n, x[e]),
                    show_element(&a.tgt, n, y[e])
                ));
            }
        }
        Verdict::Equal(Witness::Componentwise)
    }

    fn check_two(&self, a: &SetNat) -> Option<String> {
        self.naturality_failure_bounded(a)
    }

    fn show_one(&self, f: &SetEndo) -> String {
        show_endo(f)
    }

    fn show_two(&self, a: &SetNat) -> String {
        format!("{a:?}")
    }
}

fn show_prefix(l: &[SetFunctor]) -> String {
    if l.is_empty() { String::new() } else { format!("{}.", show_endo(l)) }
}

fn show_suffix(r: &[SetFunctor]) -> String {
    if r.is_empty() { String::new() } else { format!(".{}", show_endo(r)) }
}

/// Bits of a subset mask as element indices.
pub fn members(mask: usize, k: usize) -> impl Iterator<Item = usize> {
    (0..k).filter(move |&x| mask >> x & 1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_rendering() {
        let pm = vec![SetFunctor::Maybe, SetFunctor::Powerset];
        assert_eq!(size_of(&pm, 2), Some(8));
        assert_eq!(show_element(&pm, 2, 0b101), "{0,*}");
        assert_eq!(show_endo(&pm), "PM");
        assert_eq!(size_of(&[SetFunctor::Powerset; 3], 3), None);
    }

    #[test]
    fn whiskering_applies_the_outer_functor() {
        let h = FinSet::default();
        let sing = SetNat::new(&[], &[SetFunctor::Powerset], "eta", |_, x| 1 << x);
        let w = h.whisker(&vec![], &sing, &vec![SetFunctor::Maybe]).unwrap();
        // M(eta) at 2: 0 -> {0}, 1 -> {1}, * -> *
        assert_eq!(w.component(2).unwrap(), vec![1, 2, 4]);
        assert!(w.naturality_failure(2).is_none());
    }

    #[test]
    fn non_natural_family_is_caught() {
        let bad = SetNat::new(&[SetFunctor::Maybe], &[SetFunctor::Powerset], "full", |n, x| if x == n { (1 << n) - 1 } else { 1 << x });
        assert!(bad.naturality_failure(2).is_some());
    }
}
