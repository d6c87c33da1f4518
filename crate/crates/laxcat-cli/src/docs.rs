//! Input documents beyond presentations and finite categories: monads and
//! distributive laws over a finite category, and named laws over finite
//! sets.
//!
//! Functors list object and morphism images by name; identities may be
//! left out. Natural transformations list one component per object.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use laxcat::distlaw::examples::{identity_law, maybe_powerset_law, maybe_powerset_law_empty_point};
use laxcat::distlaw::DistLawData;
use laxcat::fincat::{CategoryDoc, FinCat, FinCategory, FinFunctor, FinNatTrans, FinSet};
use laxcat::monads::MonadData;
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Doc {
    Monad(MonadDoc),
    Law(LawDoc),
    SetLaw(SetLawDoc),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonadDoc {
    #[serde(default)]
    pub name: Option<String>,
    /// Category file, relative to the document.
    pub host: String,
    pub t: FunctorDoc,
    pub eta: BTreeMap<String, String>,
    pub mu: BTreeMap<String, String>,
}

impl MonadDoc {
    pub fn body(self) -> MonadBody {
        MonadBody { t: self.t, eta: self.eta, mu: self.mu }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonadBody {
    pub t: FunctorDoc,
    pub eta: BTreeMap<String, String>,
    pub mu: BTreeMap<String, String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub ob: BTreeMap<String, String>,
    #[serde(default)]
    pub mor: BTreeMap<String, String>,
}

/// `gamma: [t, s] => [s, t]`, the component at `x` going from `s t x` to
/// `t s x`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LawDoc {
    #[serde(default)]
    pub name: Option<String>,
    pub host: String,
    pub s: MonadBody,
    pub t: MonadBody,
    pub gamma: BTreeMap<String, String>,
}

/// A law from the bundled catalogue over finite sets of size at most
/// `bound`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetLawDoc {
    pub example: String,
    #[serde(default = "default_bound")]
    pub bound: usize,
}

fn default_bound() -> usize {
    2
}

pub const SET_LAWS: [&str; 3] = ["maybe-over-powerset", "maybe-over-powerset-empty-point", "identity"];

impl SetLawDoc {
    pub fn resolve(&self) -> Result<(FinSet, DistLawData<FinSet>), CliError> {
        let law = match self.example.as_str() {
            "maybe-over-powerset" => maybe_powerset_law(),
            "maybe-over-powerset-empty-point" => maybe_powerset_law_empty_point(),
            "identity" => identity_law(),
            other => return Err(CliError::Parse(format!("unknown law `{other}`; known: {}", SET_LAWS.join(", ")))),
        };
        Ok((FinSet { bound: self.bound }, law))
    }
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

/// Resolves `host` against the directory of `doc`.
pub fn sibling(doc: &Path, host: &str) -> PathBuf {
    doc.parent().unwrap_or(Path::new(".")).join(host)
}

pub fn load_category(path: &Path) -> Result<Arc<FinCategory>, CliError> {
    let doc: CategoryDoc = serde_json::from_str(&read(path)?).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let c = doc.into_category().map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    Ok(Arc::new(c))
}

fn object(c: &FinCategory, name: &str) -> Result<usize, CliError> {
    c.objects.iter().position(|o| o == name).ok_or_else(|| CliError::Parse(format!("unknown object `{name}`")))
}

fn morphism(c: &FinCategory, name: &str) -> Result<usize, CliError> {
    c.morphisms.iter().position(|m| m.name == name).ok_or_else(|| CliError::Parse(format!("unknown morphism `{name}`")))
}

pub fn functor(c: &Arc<FinCategory>, d: &FunctorDoc) -> Result<FinFunctor, CliError> {
    let ob = c
        .objects
        .iter()
        .map(|x| d.ob.get(x).ok_or_else(|| CliError::Parse(format!("no image for object `{x}`"))).and_then(|y| object(c, y)))
        .collect::<Result<Vec<_>, _>>()?;
    for k in d.ob.keys().chain(d.mor.keys()) {
        if object(c, k).is_err() && morphism(c, k).is_err() {
            return Err(CliError::Parse(format!("`{k}` names nothing in the host")));
        }
    }
    let mor = (0..c.len())
        .map(|f| match d.mor.get(&c.morphisms[f].name) {
            Some(g) => morphism(c, g),
            None if c.is_identity(f) => Ok(c.id(ob[c.src(f)])),
            None => Err(CliError::Parse(format!("no image for morphism `{}`", c.morphisms[f].name))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FinFunctor { src: c.clone(), tgt: c.clone(), ob, mor })
}

pub fn components(c: &FinCategory, d: &BTreeMap<String, String>) -> Result<Vec<usize>, CliError> {
    if let Some(k) = d.keys().find(|k| object(c, k).is_err()) {
        return Err(CliError::Parse(format!("component at unknown object `{k}`")));
    }
    c.objects
        .iter()
        .map(|x| d.get(x).ok_or_else(|| CliError::Parse(format!("no component at `{x}`"))).and_then(|m| morphism(c, m)))
        .collect()
}

pub fn monad(c: &Arc<FinCategory>, name: &str, b: &MonadBody) -> Result<MonadData<FinCat>, CliError> {
    let t = functor(c, &b.t)?;
    let id = FinFunctor::identity(c);
    let eta = FinNatTrans { src: id, tgt: t.clone(), comp: components(c, &b.eta)? };
    let mu = FinNatTrans { src: t.then(&t), tgt: t.clone(), comp: components(c, &b.mu)? };
    Ok(MonadData { name: name.into(), object: c.clone(), t, mu, eta })
}

pub fn law(c: &Arc<FinCategory>, d: &LawDoc) -> Result<DistLawData<FinCat>, CliError> {
    let s = monad(c, "s", &d.s)?;
    let t = monad(c, "t", &d.t)?;
    let gamma = FinNatTrans { src: t.t.then(&s.t), tgt: s.t.then(&t.t), comp: components(c, &d.gamma)? };
    Ok(DistLawData { s, t, gamma })
}

pub fn parse_doc(path: &Path, text: &str) -> Result<Doc, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}
