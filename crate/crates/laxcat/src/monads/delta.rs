//! The augmented simplex category: finite ordinals and monotone maps, with
//! ordinal sum as tensor. Viewed as a one-object 2-category it is the
//! walking monad.

use crate::host::{HostError, TwoCategory};
use crate::verdict::{Verdict, Witness};

/// A weakly increasing map `{0..n} -> {0..m}` stored by its values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    pub n: usize,
    pub m: usize,
    pub values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(m: usize, values: Vec<usize>) -> Option<Self> {
        let ok = values.iter().all(|&v| v < m) && values.windows(2).all(|w| w[0] <= w[1]);
        ok.then_some(MonotoneMap { n: values.len(), m, values })
    }

    pub fn identity(n: usize) -> Self {
        MonotoneMap { n, m: n, values: (0..n).collect() }
    }

    /// Sizes of the fibres over each target point.
    pub fn fibres(&self) -> Vec<usize> {
        let mut out = vec![0; self.m];
        for &v in &self.values {
            out[v] += 1;
        }
        out
    }
}

/// All monotone maps `n -> m` in lexicographic order of their values.
pub fn delta_a_hom(n: usize, m: usize) -> Vec<MonotoneMap> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, m: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<MonotoneMap>) {
        if cur.len() == n {
            out.push(MonotoneMap { n, m, values: cur.clone() });
            return;
        }
        for v in lo..m {
            cur.push(v);
            go(n, m, v, cur, out);
            cur.pop();
        }
    }
    go(n, m, 0, &mut cur, &mut out);
    out
}

/// `f` then `g`.
pub fn delta_a_compose(f: &MonotoneMap, g: &MonotoneMap) -> Option<MonotoneMap> {
    (f.m == g.n).then(|| MonotoneMap { n: f.n, m: g.m, values: f.values.iter().map(|&v| g.values[v]).collect() })
}

/// Ordinal sum: `f` on the first block, `g` on the second.
pub fn delta_a_tensor(f: &MonotoneMap, g: &MonotoneMap) -> MonotoneMap {
    let values = f.values.iter().copied().chain(g.values.iter().map(|&v| v + f.m)).collect();
    MonotoneMap { n: f.n + g.n, m: f.m + g.m, values }
}

/// The one-object 2-category whose 1-cells are ordinals under addition.
#[derive(Clone, Copy, Debug, Default)]
pub struct DeltaHost;

impl TwoCategory for DeltaHost {
    type Obj = ();
    type One = usize;
    type Two = MonotoneMap;

    fn one_src(&self, _: &usize) {}

    fn one_tgt(&self, _: &usize) {}

    fn identity(&self, _: &()) -> usize {
        0
    }

    fn compose(&self, f: &usize, g: &usize) -> Result<usize, HostError> {
        Ok(f + g)
    }

    fn two_src(&self, a: &MonotoneMap) -> usize {
        a.n
    }

    fn two_tgt(&self, a: &MonotoneMap) -> usize {
        a.m
    }

    fn identity2(&self, f: &usize) -> MonotoneMap {
        MonotoneMap::identity(*f)
    }

    fn vertical(&self, a: &MonotoneMap, b: &MonotoneMap) -> Result<MonotoneMap, HostError> {
        delta_a_compose(a, b).ok_or_else(|| HostError::new(format!("cannot compose {a:?} with {b:?}")))
    }

    fn whisker(&self, l: &usize, a: &MonotoneMap, r: &usize) -> Result<MonotoneMap, HostError> {
        Ok(delta_a_tensor(&delta_a_tensor(&MonotoneMap::identity(*l), a), &MonotoneMap::identity(*r)))
    }

    fn same_one(&self, f: &usize, g: &usize) -> bool {
        f == g
    }

    fn compare(&self, a: &MonotoneMap, b: &MonotoneMap) -> Verdict {
        if a == b {
            Verdict::Equal(Witness::Componentwise)
        } else {
            Verdict::NotEqual(format!("{:?} vs {:?}", a.values, b.values))
        }
    }

    fn show_one(&self, f: &usize) -> String {
        format!("t^{f}")
    }

    fn show_two(&self, a: &MonotoneMap) -> String {
        format!("{}->{} {:?}", a.n, a.m, a.values)
    }
}

/// Number of monotone maps `n -> m`, the binomial `C(n + m - 1, n)`.
pub fn delta_a_count(n: usize, m: usize) -> usize {
    if m == 0 {
        return usize::from(n == 0);
    }
    let (top, k) = (n + m - 1, n.min(m - 1));
    (0..k).fold(1, |acc, i| acc * (top - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_hom_sets() {
        assert_eq!(delta_a_hom(2, 1).len(), 1);
        assert_eq!(delta_a_hom(1, 2).len(), 2);
        assert_eq!(delta_a_hom(3, 2).len(), 4);
        assert_eq!(delta_a_hom(0, 0).len(), 1);
        assert_eq!(delta_a_hom(1, 0).len(), 0);
    }

    #[test]
    fn counts_match_binomials() {
        for n in 0..6 {
            for m in 0..6 {
                assert_eq!(delta_a_hom(n, m).len(), delta_a_count(n, m), "{n} {m}");
            }
        }
    }

    #[test]
    fn composition_and_tensor_laws_to_size_four() {
        for a in 0..=4 {
            for b in 0..=4 {
                for f in delta_a_hom(a, b) {
                    assert_eq!(delta_a_compose(&MonotoneMap::identity(a), &f).unwrap(), f);
                    assert_eq!(delta_a_compose(&f, &MonotoneMap::identity(b)).unwrap(), f);
                    assert_eq!(delta_a_tensor(&f, &MonotoneMap::identity(0)), f);
                    for c in 0..=3 {
                        for g in delta_a_hom(b, c) {
                            for k in delta_a_hom(c, 2) {
                                let l = delta_a_compose(&delta_a_compose(&f, &g).unwrap(), &k);
                                let r = delta_a_compose(&f, &delta_a_compose(&g, &k).unwrap());
                                assert_eq!(l, r);
                            }
                        }
                    }
                }
            }
        }
        let fs = delta_a_hom(2, 1);
        let gs = delta_a_hom(0, 1);
        let hs = delta_a_hom(1, 2);
        let l = delta_a_tensor(&delta_a_tensor(&fs[0], &gs[0]), &hs[1]);
        let r = delta_a_tensor(&fs[0], &delta_a_tensor(&gs[0], &hs[1]));
        assert_eq!(l, r);
    }
}
