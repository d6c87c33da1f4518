//! Finite categories with explicit composition tables.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CategoryError {
    #[error("unknown {sort} `{name}`")]
    Unknown { sort: &'static str, name: String },
    #[error("duplicate {sort} `{name}`")]
    Duplicate { sort: &'static str, name: String },
    #[error("identity of `{0}` is missing or ill-typed")]
    BadIdentity(String),
    #[error("composite {g} . {f} is {reason}")]
    BadComposite { g: String, f: String, reason: String },
    #[error("associativity fails: ({h} . {g}) . {f} != {h} . ({g} . {f})")]
    NotAssociative { f: String, g: String, h: String },
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category. `then(f, g)` is the composite "first f, then g".
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinCategory {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    pub identities: Vec<usize>,
    table: Vec<Option<usize>>,
    homs: Vec<Vec<Vec<usize>>>,
}

impl FinCategory {
    /// Builds and audits a category; `compose(f, g)` must return the
    /// composite "f then g" for every composable pair.
    pub fn build(
        name: impl Into<String>,
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        mut compose: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, CategoryError> {
        let n = morphisms.len();
        let mut table = vec![None; n * n];
        for f in 0..n {
            for g in 0..n {
                if morphisms[f].tgt == morphisms[g].src {
                    table[f * n + g] = Some(compose(f, g));
                }
            }
        }
        Self::from_table(name, objects, morphisms, identities, table)
    }

    fn from_table(
        name: impl Into<String>,
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        table: Vec<Option<usize>>,
    ) -> Result<Self, CategoryError> {
        let k = objects.len();
        let mut homs = vec![vec![Vec::new(); k]; k];
        for (i, m) in morphisms.iter().enumerate() {
            homs[m.src][m.tgt].push(i);
        }
        let c = FinCategory { name: name.into(), objects, morphisms, identities, table, homs };
        c.audit_first()?;
        Ok(c)
    }

    fn audit_first(&self) -> Result<(), CategoryError> {
        match self.audit_errors().into_iter().next() {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    /// Every violated law, in a fixed order.
    pub fn audit_errors(&self) -> Vec<CategoryError> {
        let mut errs = Vec::new();
        let n = self.morphisms.len();
        let name = |i: usize| self.morphisms[i].name.clone();
        if self.identities.len() != self.objects.len() {
            errs.push(CategoryError::BadIdentity("<count>".into()));
            return errs;
        }
        for (x, &i) in self.identities.iter().enumerate() {
            if i >= n || self.morphisms[i].src != x || self.morphisms[i].tgt != x {
                errs.push(CategoryError::BadIdentity(self.objects[x].clone()));
                return errs;
            }
        }
        for f in 0..n {
            for g in 0..n {
                let composable = self.morphisms[f].tgt == self.morphisms[g].src;
                match (composable, self.table[f * n + g]) {
                    (true, Some(r)) if r < n => {
                        if self.morphisms[r].src != self.morphisms[f].src || self.morphisms[r].tgt != self.morphisms[g].tgt {
                            errs.push(CategoryError::BadComposite { g: name(g), f: name(f), reason: format!("`{}` with the wrong type", name(r)) });
                        }
                    }
                    (true, _) => errs.push(CategoryError::BadComposite { g: name(g), f: name(f), reason: "missing".into() }),
                    (false, Some(_)) => errs.push(CategoryError::BadComposite { g: name(g), f: name(f), reason: "defined on a non-composable pair".into() }),
                    (false, None) => {}
                }
            }
        }
        if !errs.is_empty() {
            return errs;
        }
        for f in 0..n {
            let (s, t) = (self.morphisms[f].src, self.morphisms[f].tgt);
            if self.then(self.identities[s], f) != f || self.then(f, self.identities[t]) != f {
                errs.push(CategoryError::BadComposite { g: name(f), f: self.objects[s].clone(), reason: "not unital".into() });
            }
        }
        for f in 0..n {
            for g in self.out_of(self.morphisms[f].tgt) {
                for h in self.out_of(self.morphisms[g].tgt) {
                    if self.then(self.then(f, g), h) != self.then(f, self.then(g, h)) {
                        errs.push(CategoryError::NotAssociative { f: name(f), g: name(g), h: name(h) });
                    }
                }
            }
        }
        errs
    }

    /// Audit as a report, one entry per law family.
    pub fn audit(&self) -> Report {
        let mut r = Report::new(format!("category {}", self.name));
        let errs = self.audit_errors();
        let first = |pred: &dyn Fn(&CategoryError) -> bool| errs.iter().find(|e| pred(e)).map(|e| e.to_string());
        let comp = first(&|e| matches!(e, CategoryError::BadComposite { .. } | CategoryError::BadIdentity(_)));
        let assoc = first(&|e| matches!(e, CategoryError::NotAssociative { .. }));
        r.check("composition and identities", comp.is_none(), comp.unwrap_or_default());
        r.check("associativity", assoc.is_none(), assoc.unwrap_or_default());
        r.note(format!("{} objects, {} morphisms", self.objects.len(), self.morphisms.len()));
        r
    }

    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }

    pub fn src(&self, f: usize) -> usize {
        self.morphisms[f].src
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.morphisms[f].tgt
    }

    pub fn id(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.src(f)] == f
    }

    /// The composite "first f, then g".
    pub fn then(&self, f: usize, g: usize) -> usize {
        self.table[f * self.morphisms.len() + g]
            .unwrap_or_else(|| panic!("{}: `{}` then `{}` is not composable", self.name, self.morphisms[f].name, self.morphisms[g].name))
    }

    pub fn try_then(&self, f: usize, g: usize) -> Option<usize> {
        self.table.get(f * self.morphisms.len() + g).copied().flatten()
    }

    /// Composite of a non-empty composable sequence.
    pub fn then_all(&self, seq: &[usize]) -> usize {
        seq[1..].iter().fold(seq[0], |acc, &g| self.then(acc, g))
    }

    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        &self.homs[x][y]
    }

    pub fn out_of(&self, x: usize) -> Vec<usize> {
        (0..self.objects.len()).flat_map(|y| self.homs[x][y].iter().copied()).collect()
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn non_identity_count(&self) -> usize {
        self.morphisms.len() - self.objects.len()
    }

    /// Every composable sequence of length exactly `n`; length 0 gives one
    /// empty sequence per object, reported as `(object, [])`.
    pub fn sequences(&self, n: usize) -> Vec<(usize, Vec<usize>)> {
        let mut out: Vec<(usize, Vec<usize>)> = (0..self.objects.len()).map(|x| (x, Vec::new())).collect();
        for _ in 0..n {
            let mut next = Vec::new();
            for (x, s) in &out {
                let at = s.last().map_or(*x, |&f| self.tgt(f));
                for g in self.out_of(at) {
                    let mut s2 = s.clone();
                    s2.push(g);
                    next.push((*x, s2));
                }
            }
            out = next;
        }
        out
    }

    // Standard small categories.

    pub fn terminal() -> Self {
        Self::discrete("1", &["*"])
    }

    pub fn discrete(name: &str, objects: &[&str]) -> Self {
        let morphisms = objects.iter().enumerate().map(|(i, o)| Morphism { name: format!("id_{o}"), src: i, tgt: i }).collect();
        Self::build(name, objects.iter().map(|s| s.to_string()).collect(), morphisms, (0..objects.len()).collect(), |f, _| f)
            .expect("discrete categories are categories")
    }

    /// The poset `0 < 1 < ... < n-1` viewed as a category.
    pub fn chain(n: usize) -> Self {
        let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        for i in 0..n {
            for j in i..n {
                let name = if i == j { format!("id_{i}") } else { format!("{i}<{j}") };
                index.insert((i, j), morphisms.len());
                morphisms.push(Morphism { name, src: i, tgt: j });
            }
        }
        let ids = (0..n).map(|i| index[&(i, i)]).collect();
        let ms = morphisms.clone();
        Self::build(format!("[{n}]"), objects, morphisms, ids, |f, g| index[&(ms[f].src, ms[g].tgt)])
            .expect("chains are categories")
    }

    /// The walking arrow `0 -> 1`, with the arrow named `a`.
    pub fn walking_arrow() -> Self {
        let objects = vec!["0".to_string(), "1".to_string()];
        let morphisms = vec![
            Morphism { name: "id_0".into(), src: 0, tgt: 0 },
            Morphism { name: "id_1".into(), src: 1, tgt: 1 },
            Morphism { name: "a".into(), src: 0, tgt: 1 },
        ];
        Self::build("2", objects, morphisms, vec![0, 1], |f, g| if f < 2 { g } else { f }).expect("walking arrow")
    }

    /// The one-object category of a finite monoid given by its table.
    pub fn monoid(name: &str, elements: &[&str], unit: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self, CategoryError> {
        let morphisms = elements.iter().map(|e| Morphism { name: e.to_string(), src: 0, tgt: 0 }).collect();
        Self::build(name, vec!["*".into()], morphisms, vec![unit], mul)
    }

    pub fn product(a: &FinCategory, b: &FinCategory) -> Self {
        let (na, nb) = (a.objects.len(), b.objects.len());
        let objects = (0..na).flat_map(|x| (0..nb).map(move |y| (x, y))).map(|(x, y)| format!("({},{})", a.objects[x], b.objects[y])).collect();
        let mb = b.morphisms.len();
        let morphisms = (0..a.morphisms.len())
            .flat_map(|f| (0..mb).map(move |g| (f, g)))
            .map(|(f, g)| Morphism {
                name: format!("({},{})", a.morphisms[f].name, b.morphisms[g].name),
                src: a.src(f) * nb + b.src(g),
                tgt: a.tgt(f) * nb + b.tgt(g),
            })
            .collect();
        let ids = (0..na).flat_map(|x| (0..nb).map(move |y| (x, y))).map(|(x, y)| a.id(x) * mb + b.id(y)).collect();
        Self::build(format!("{}x{}", a.name, b.name), objects, morphisms, ids, |p, q| {
            a.then(p / mb, q / mb) * mb + b.then(p % mb, q % mb)
        })
        .expect("products of categories are categories")
    }

    pub fn opposite(&self) -> Self {
        let morphisms = self.morphisms.iter().map(|m| Morphism { name: m.name.clone(), src: m.tgt, tgt: m.src }).collect();
        Self::build(format!("{}^op", self.name), self.objects.clone(), morphisms, self.identities.clone(), |f, g| self.then(g, f))
            .expect("opposites of categories are categories")
    }

    /// An isomorphism-invariant key: the least relabelled composition table
    /// over all object and hom-set permutations.
    pub fn canonical_key(&self) -> Vec<usize> {
        let k = self.objects.len();
        let mut best: Option<Vec<usize>> = None;
        for perm in permutations(k) {
            // morphisms grouped by hom-set in the permuted object order,
            // identities first within each endo hom-set
            let mut groups: Vec<Vec<usize>> = Vec::new();
            for x in 0..k {
                for y in 0..k {
                    let (ox, oy) = (perm[x], perm[y]);
                    let mut hs: Vec<usize> = self.hom(ox, oy).iter().copied().filter(|&f| !self.is_identity(f)).collect();
                    hs.sort();
                    groups.push(hs);
                }
            }
            let mut choice: Vec<Vec<Vec<usize>>> = groups.iter().map(|g| permutations(g.len()).into_iter().map(|p| p.iter().map(|&i| g[i]).collect()).collect()).collect();
            if choice.iter().map(|c| c.len()).product::<usize>() > 200_000 {
                choice.iter_mut().for_each(|c| c.truncate(1));
            }
            let mut idx = vec![0usize; choice.len()];
            loop {
                let mut order: Vec<usize> = (0..k).map(|x| self.id(perm[x])).collect();
                for (gi, c) in choice.iter().enumerate() {
                    order.extend_from_slice(&c[idx[gi]]);
                }
                let mut label = vec![0usize; self.morphisms.len()];
                for (new, &old) in order.iter().enumerate() {
                    label[old] = new;
                }
                let mut key = vec![k];
                for &f in &order {
                    key.push(label[f]);
                    key.push(perm.iter().position(|&o| o == self.src(f)).unwrap());
                    key.push(perm.iter().position(|&o| o == self.tgt(f)).unwrap());
                }
                for &f in &order {
                    for &g in &order {
                        key.push(self.try_then(f, g).map_or(usize::MAX, |r| label[r]));
                    }
                }
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
                // advance the mixed-radix counter
                let mut i = 0;
                loop {
                    if i == idx.len() {
                        break;
                    }
                    idx[i] += 1;
                    if idx[i] < choice[i].len() {
                        break;
                    }
                    idx[i] = 0;
                    i += 1;
                }
                if i == idx.len() {
                    break;
                }
            }
        }
        best.unwrap_or_default()
    }
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// File form of a finite category.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub identities: std::collections::BTreeMap<String, String>,
    pub composition: Vec<CompositeDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

/// `result = g . f`, that is "first f, then g".
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CompositeDoc {
    pub g: String,
    pub f: String,
    pub result: String,
}

impl CategoryDoc {
    /// Resolves names. Law violations are not checked here; see
    /// [`FinCategory::audit_errors`] on the result of [`CategoryDoc::into_category`].
    fn resolve(&self) -> Result<(Vec<Morphism>, Vec<usize>, Vec<Option<usize>>), CategoryError> {
        let obj = |n: &str| self.objects.iter().position(|o| o == n).ok_or_else(|| CategoryError::Unknown { sort: "object", name: n.into() });
        let mut morphisms = Vec::new();
        for m in &self.morphisms {
            if morphisms.iter().any(|x: &Morphism| x.name == m.name) {
                return Err(CategoryError::Duplicate { sort: "morphism", name: m.name.clone() });
            }
            morphisms.push(Morphism { name: m.name.clone(), src: obj(&m.src)?, tgt: obj(&m.tgt)? });
        }
        let mor = |n: &str| morphisms.iter().position(|m| m.name == n).ok_or_else(|| CategoryError::Unknown { sort: "morphism", name: n.into() });
        let mut ids = Vec::new();
        for o in &self.objects {
            let i = self.identities.get(o).ok_or_else(|| CategoryError::BadIdentity(o.clone()))?;
            ids.push(mor(i)?);
        }
        let n = morphisms.len();
        let mut table = vec![None; n * n];
        for c in &self.composition {
            let (f, g, r) = (mor(&c.f)?, mor(&c.g)?, mor(&c.result)?);
            table[f * n + g] = Some(r);
        }
        // identity composites may be left implicit
        for f in 0..n {
            let (s, t) = (morphisms[f].src, morphisms[f].tgt);
            table[ids[s] * n + f].get_or_insert(f);
            table[f * n + ids[t]].get_or_insert(f);
        }
        Ok((morphisms, ids, table))
    }

    /// Builds the category, failing with the first violated law.
    pub fn into_category(&self) -> Result<FinCategory, CategoryError> {
        let (morphisms, ids, table) = self.resolve()?;
        FinCategory::from_table(self.name.clone().unwrap_or_else(|| "C".into()), self.objects.clone(), morphisms, ids, table)
    }

    /// Every law violation of the document, or a resolution error.
    pub fn audit(&self) -> Result<Report, CategoryError> {
        let (morphisms, ids, table) = self.resolve()?;
        let k = self.objects.len();
        let mut homs = vec![vec![Vec::new(); k]; k];
        for (i, m) in morphisms.iter().enumerate() {
            homs[m.src][m.tgt].push(i);
        }
        let c = FinCategory { name: self.name.clone().unwrap_or_else(|| "C".into()), objects: self.objects.clone(), morphisms, identities: ids, table, homs };
        Ok(c.audit())
    }

    pub fn from_category(c: &FinCategory) -> Self {
        let mut composition = Vec::new();
        for f in 0..c.len() {
            for g in 0..c.len() {
                if let Some(r) = c.try_then(f, g) {
                    if !c.is_identity(f) && !c.is_identity(g) {
                        composition.push(CompositeDoc { g: c.morphisms[g].name.clone(), f: c.morphisms[f].name.clone(), result: c.morphisms[r].name.clone() });
                    }
                }
            }
        }
        CategoryDoc {
            name: Some(c.name.clone()),
            objects: c.objects.clone(),
            morphisms: c.morphisms.iter().map(|m| MorphismDoc { name: m.name.clone(), src: c.objects[m.src].clone(), tgt: c.objects[m.tgt].clone() }).collect(),
            identities: c.objects.iter().enumerate().map(|(x, o)| (o.clone(), c.morphisms[c.id(x)].name.clone())).collect(),
            composition,
        }
    }
}

pub fn parse_category(json: &str) -> Result<FinCategory, CategoryError> {
    let doc: CategoryDoc = serde_json::from_str(json).map_err(|e| CategoryError::Parse(e.to_string()))?;
    doc.into_category()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_categories_pass_audit() {
        for c in [FinCategory::terminal(), FinCategory::chain(3), FinCategory::walking_arrow(), FinCategory::discrete("D", &["a", "b"])] {
            assert!(c.audit().passed(), "{}", c.audit().render_text());
        }
        let p = FinCategory::product(&FinCategory::walking_arrow(), &FinCategory::walking_arrow());
        assert_eq!(p.objects.len(), 4);
        assert_eq!(p.len(), 9);
    }

    #[test]
    fn chain_and_walking_arrow_are_isomorphic() {
        assert_eq!(FinCategory::chain(2).canonical_key(), FinCategory::walking_arrow().canonical_key());
        assert_ne!(FinCategory::chain(2).canonical_key(), FinCategory::discrete("D", &["a", "b"]).canonical_key());
    }

    #[test]
    fn broken_table_names_the_triple() {
        // Z/2 with a non-associative twist on three elements.
        let doc = CategoryDoc {
            name: Some("broken".into()),
            objects: vec!["*".into()],
            morphisms: ["e", "a", "b"].iter().map(|n| MorphismDoc { name: n.to_string(), src: "*".into(), tgt: "*".into() }).collect(),
            identities: [("*".to_string(), "e".to_string())].into_iter().collect(),
            composition: vec![
                CompositeDoc { g: "a".into(), f: "a".into(), result: "b".into() },
                CompositeDoc { g: "a".into(), f: "b".into(), result: "a".into() },
                CompositeDoc { g: "b".into(), f: "a".into(), result: "b".into() },
                CompositeDoc { g: "b".into(), f: "b".into(), result: "b".into() },
            ],
        };
        let err = doc.into_category().unwrap_err();
        assert!(matches!(err, CategoryError::NotAssociative { .. }), "{err}");
    }

    #[test]
    fn document_round_trip() {
        let c = FinCategory::chain(3);
        let back = CategoryDoc::from_category(&c).into_category().unwrap();
        assert_eq!(back, FinCategory { name: back.name.clone(), ..c });
    }
}
