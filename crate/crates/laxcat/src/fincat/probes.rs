//! Small categories enumerated up to isomorphism, used as probes for
//! universal properties.

use std::collections::HashSet;

use super::category::{FinCategory, Morphism};

/// Every category with at most `max_objects` objects and at most
/// `max_arrows` non-identity morphisms, one per isomorphism class, in a
/// deterministic order.
pub fn small_categories(max_objects: usize, max_arrows: usize) -> Vec<FinCategory> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for k in 1..=max_objects {
        for arrows in 0..=max_arrows {
            for shape in hom_shapes(k, arrows) {
                for c in tables(k, &shape) {
                    if seen.insert((k, c.canonical_key())) {
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

/// The probes used by default: at most two objects and four arrows.
pub fn default_probes() -> Vec<FinCategory> {
    small_categories(2, 4)
}

/// Ways to distribute `arrows` non-identity morphisms over the `k * k`
/// hom-sets.
fn hom_shapes(k: usize, arrows: usize) -> Vec<Vec<usize>> {
    let cells = k * k;
    let mut out = Vec::new();
    let mut cur = vec![0; cells];
    fn go(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=left {
            cur[i] = a;
            go(i + 1, left - a, cur, out);
        }
        cur[i] = 0;
    }
    go(0, arrows, &mut cur, &mut out);
    out
}

/// All associative composition tables for a fixed assignment of arrows to
/// hom-sets.
fn tables(k: usize, shape: &[usize]) -> Vec<FinCategory> {
    let objects: Vec<String> = (0..k).map(|i| format!("x{i}")).collect();
    let mut morphisms: Vec<Morphism> = (0..k).map(|i| Morphism { name: format!("id{i}"), src: i, tgt: i }).collect();
    for x in 0..k {
        for y in 0..k {
            for j in 0..shape[x * k + y] {
                morphisms.push(Morphism { name: format!("m{x}{y}{j}"), src: x, tgt: y });
            }
        }
    }
    let n = morphisms.len();
    let hom = |x: usize, y: usize| -> Vec<usize> { (0..n).filter(|&f| morphisms[f].src == x && morphisms[f].tgt == y).collect() };
    // composable pairs of non-identity arrows, in a fixed order
    let pairs: Vec<(usize, usize)> = (k..n).flat_map(|f| (k..n).map(move |g| (f, g))).filter(|&(f, g)| morphisms[f].tgt == morphisms[g].src).collect();
    let mut table = vec![usize::MAX; n * n];
    for f in 0..n {
        for g in 0..n {
            if morphisms[f].tgt == morphisms[g].src {
                if f < k {
                    table[f * n + g] = g;
                } else if g < k {
                    table[f * n + g] = f;
                }
            }
        }
    }
    let mut out = Vec::new();
    let options: Vec<Vec<usize>> = pairs.iter().map(|&(f, g)| hom(morphisms[f].src, morphisms[g].tgt)).collect();
    fill(&morphisms, &pairs, &options, 0, &mut table, &mut |t| {
        let ms = morphisms.clone();
        if let Ok(c) = FinCategory::build("probe", objects.clone(), ms, (0..k).collect(), |f, g| t[f * n + g]) {
            out.push(c);
        }
    });
    out
}

fn fill(
    ms: &[Morphism],
    pairs: &[(usize, usize)],
    options: &[Vec<usize>],
    i: usize,
    table: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let n = ms.len();
    if i == pairs.len() {
        emit(table);
        return;
    }
    let (f, g) = pairs[i];
    for &r in &options[i] {
        table[f * n + g] = r;
        if associative_so_far(ms, table) {
            fill(ms, pairs, options, i + 1, table, emit);
        }
    }
    table[f * n + g] = usize::MAX;
}

fn associative_so_far(ms: &[Morphism], table: &[usize]) -> bool {
    let n = ms.len();
    let at = |f: usize, g: usize| table[f * n + g];
    for f in 0..n {
        for g in 0..n {
            let fg = at(f, g);
            if fg == usize::MAX || ms[f].tgt != ms[g].src {
                continue;
            }
            for h in 0..n {
                if ms[g].tgt != ms[h].src {
                    continue;
                }
                let gh = at(g, h);
                if gh == usize::MAX {
                    continue;
                }
                let (l, r) = (at(fg, h), at(f, gh));
                if l != usize::MAX && r != usize::MAX && l != r {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_object_counts_are_monoid_counts() {
        // monoids of order 1, 2, 3, 4 up to isomorphism: 1, 2, 7, 35
        let one_object: Vec<usize> = (0..=3)
            .map(|a| small_categories(1, a).len())
            .collect();
        assert_eq!(one_object, vec![1, 3, 10, 45]);
    }

    #[test]
    fn probes_pass_the_audit_and_include_the_basics() {
        let ps = small_categories(2, 2);
        assert!(ps.iter().all(|c| c.audit().passed()));
        let key = FinCategory::walking_arrow().canonical_key();
        assert!(ps.iter().any(|c| c.objects.len() == 2 && c.canonical_key() == key));
    }
}
