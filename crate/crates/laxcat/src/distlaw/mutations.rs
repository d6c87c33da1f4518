//! Natural single-cell replacements of the maybe-over-powerset data.

use super::examples::{maybe_powerset_gamma, maybe_powerset_law};
use super::{beck_branches, DistLawData};
use crate::fincat::sets::members;
use crate::fincat::{FinSet, SetFunctor, SetNat};
use crate::host::HostError;
use crate::report::Report;

use SetFunctor::{Maybe, Powerset};

#[derive(Clone, Debug)]
pub struct Mutation {
    pub name: String,
    pub law: DistLawData<FinSet>,
}

/// When the point is added to the image of a subset.
#[derive(Clone, Copy, Debug)]
enum AddPoint {
    Never,
    Always,
    WhenEmpty,
    WhenInhabited,
}

impl AddPoint {
    fn holds(self, subset: usize) -> bool {
        match self {
            AddPoint::Never => false,
            AddPoint::Always => true,
            AddPoint::WhenEmpty => subset == 0,
            AddPoint::WhenInhabited => subset != 0,
        }
    }
}

/// The 21 mutations: every other natural choice of `gamma` (15), and one
/// to three natural replacements of each unit and multiplication.
pub fn maybe_powerset_mutations() -> Vec<Mutation> {
    let base = maybe_powerset_law();
    let mut out = Vec::new();
    for keep in [true, false] {
        for add in [AddPoint::Never, AddPoint::Always, AddPoint::WhenEmpty, AddPoint::WhenInhabited] {
            for point_full in [true, false] {
                if keep && matches!(add, AddPoint::Never) && point_full {
                    continue;
                }
                let name = format!(
                    "gamma: S -> {}{}, * -> {}",
                    if keep { "S" } else { "{}" },
                    match add {
                        AddPoint::Never => "",
                        AddPoint::Always => " + *",
                        AddPoint::WhenEmpty => " + * if S empty",
                        AddPoint::WhenInhabited => " + * if S inhabited",
                    },
                    if point_full { "{*}" } else { "{}" }
                );
                let gamma = maybe_powerset_gamma(
                    &name,
                    move |n, s| (if keep { s } else { 0 }) | if add.holds(s) { 1 << n } else { 0 },
                    move |n| if point_full { 1 << n } else { 0 },
                );
                out.push(Mutation { name, law: DistLawData { gamma, ..base.clone() } });
            }
        }
    }
    let with_t = |name: &str, mu: Option<SetNat>, eta: Option<SetNat>| {
        let mut law = base.clone();
        law.t.mu = mu.unwrap_or(law.t.mu);
        law.t.eta = eta.unwrap_or(law.t.eta);
        Mutation { name: name.into(), law }
    };
    out.push(with_t("eta_t: x -> {}", None, Some(SetNat::new(&[], &[Powerset], "empty", |_, _| 0))));
    out.push(with_t("mu_t: constant {}", Some(SetNat::new(&[Powerset, Powerset], &[Powerset], "empty", |_, _| 0)), None));
    out.push(with_t(
        "mu_t: intersection",
        Some(SetNat::new(&[Powerset, Powerset], &[Powerset], "intersection", |n, a| {
            members(a, 1 << n).fold((1 << n) - 1, |acc, s| acc & s)
        })),
        None,
    ));
    out.push(with_t(
        "mu_t: union only when {} is a member",
        Some(SetNat::new(&[Powerset, Powerset], &[Powerset], "guarded union", |n, a| {
            if a & 1 == 1 {
                members(a, 1 << n).fold(0, |acc, s| acc | s)
            } else {
                0
            }
        })),
        None,
    ));
    let mut law = base.clone();
    law.s.eta = SetNat::new(&[], &[Maybe], "nothing", |n, _| n);
    out.push(Mutation { name: "eta_s: x -> *".into(), law });
    let mut law = base;
    law.s.mu = SetNat::new(&[Maybe, Maybe], &[Maybe], "collapse", |n, _| n);
    out.push(Mutation { name: "mu_s: constant *".into(), law });
    out
}

/// Every mutation must fail in all four branches.
pub fn beck_mutation_suite(h: &FinSet) -> Result<Report, HostError> {
    let mut r = Report::new("Beck mutations");
    for m in maybe_powerset_mutations() {
        let (_, v) = beck_branches(h, &m.law)?;
        r.check(
            format!("{}: rejected by every branch", m.name),
            v.all_fail(),
            format!("accepted by axioms {}, lax {}, colax {}, composite {}", v.axioms, v.lax, v.colax, v.composite),
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_has_21_distinct_entries() {
        let ms = maybe_powerset_mutations();
        assert_eq!(ms.len(), 21);
        let names: std::collections::HashSet<_> = ms.iter().map(|m| m.name.clone()).collect();
        assert_eq!(names.len(), 21);
        assert!(ms.iter().all(|m| m.law.gamma.naturality_failure(2).is_none()));
    }
}
