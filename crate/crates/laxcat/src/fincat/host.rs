//! The 2-category of finite categories, functors and natural
//! transformations.

use std::sync::Arc;

use super::category::FinCategory;
use super::functor::{same_category, FinFunctor, FinNatTrans};
use crate::host::{HostError, TwoCategory};
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Copy, Debug, Default)]
pub struct FinCat;

impl TwoCategory for FinCat {
    type Obj = Arc<FinCategory>;
    type One = FinFunctor;
    type Two = FinNatTrans;

    fn one_src(&self, f: &FinFunctor) -> Arc<FinCategory> {
        f.src.clone()
    }

    fn one_tgt(&self, f: &FinFunctor) -> Arc<FinCategory> {
        f.tgt.clone()
    }

    fn identity(&self, a: &Arc<FinCategory>) -> FinFunctor {
        FinFunctor::identity(a)
    }

    fn compose(&self, f: &FinFunctor, g: &FinFunctor) -> Result<FinFunctor, HostError> {
        if !same_category(&f.tgt, &g.src) {
            return Err(HostError::new(format!("cannot compose functors into {} and out of {}", f.tgt.name, g.src.name)));
        }
        Ok(f.then(g))
    }

    fn two_src(&self, a: &FinNatTrans) -> FinFunctor {
        a.src.clone()
    }

    fn two_tgt(&self, a: &FinNatTrans) -> FinFunctor {
        a.tgt.clone()
    }

    fn identity2(&self, f: &FinFunctor) -> FinNatTrans {
        FinNatTrans::identity(f)
    }

    fn vertical(&self, a: &FinNatTrans, b: &FinNatTrans) -> Result<FinNatTrans, HostError> {
        if a.tgt != b.src {
            return Err(HostError::new("natural transformations are not composable"));
        }
        Ok(a.then(b))
    }

    fn whisker(&self, l: &FinFunctor, a: &FinNatTrans, r: &FinFunctor) -> Result<FinNatTrans, HostError> {
        if !same_category(&l.tgt, &a.src.src) || !same_category(&a.src.tgt, &r.src) {
            return Err(HostError::new("whiskering functors do not match"));
        }
        Ok(FinNatTrans::whisker(l, a, r))
    }

    fn same_one(&self, f: &FinFunctor, g: &FinFunctor) -> bool {
        f == g
    }

    fn compare(&self, a: &FinNatTrans, b: &FinNatTrans) -> Verdict {
        if a.src != b.src || a.tgt != b.tgt {
            return Verdict::NotEqual("transformations are not parallel".into());
        }
        let dom = &a.src.src;
        match (0..dom.objects.len()).find(|&x| a.comp[x] != b.comp[x]) {
            None => Verdict::Equal(Witness::Componentwise),
            Some(x) => {
                let c = &a.src.tgt;
                Verdict::NotEqual(format!(
                    "components at `{}` differ: {} vs {}",
                    dom.objects[x], c.morphisms[a.comp[x]].name, c.morphisms[b.comp[x]].name
                ))
            }
        }
    }

    fn check_two(&self, a: &FinNatTrans) -> Option<String> {
        let r = a.check();
        r.failures().first().map(|e| e.verdict.detail())
    }

    fn show_one(&self, f: &FinFunctor) -> String {
        format!("{} -> {} {:?}", f.src.name, f.tgt.name, f.ob)
    }

    fn show_two(&self, a: &FinNatTrans) -> String {
        let c = &a.src.tgt;
        let names: Vec<&str> = a.comp.iter().map(|&m| c.morphisms[m].name.as_str()).collect();
        format!("[{}]", names.join(", "))
    }
}
