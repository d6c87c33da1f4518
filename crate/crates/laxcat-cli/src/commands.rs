//! One function per subcommand, each returning its report.

use std::path::Path;

use laxcat::classifier::{check_generalized_dist_law, classifier, compose_via, gdl_from_dist_law, Classifier, Orientation};
use laxcat::distlaw::{beck_equivalence_check, compose_monads, DistLawData};
use laxcat::fincat::{CategoryDoc, FinCat};
use laxcat::gray::gray_tensor;
use laxcat::lax::check_lax_functor;
use laxcat::monads::{check_monad, MonadData};
use laxcat::presentation::io::{presentation_to_json, to_dot, PresentationDoc};
use laxcat::presentation::PresentationError;
use laxcat::{Presentation, Report, TwoCategory, Verdict, Witness};
use serde_json::Value;

use crate::docs::{self, Doc};
use crate::terms::parse_term;
use crate::CliError;

fn parse_error(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("{}: {e}", path.display()))
}

/// Structural errors are unreadable input; the rest are failed invariants.
fn is_structural(e: &PresentationError) -> bool {
    matches!(e, PresentationError::Parse(_) | PresentationError::Unknown { .. } | PresentationError::Duplicate { .. } | PresentationError::NotComposable { .. } | PresentationError::Other(_))
}

fn presentation_or_report(path: &Path, text: &str) -> Result<Result<Presentation, Report>, CliError> {
    let doc: PresentationDoc = serde_json::from_str(text).map_err(|e| parse_error(path, e))?;
    match doc.into_presentation() {
        Ok(p) => Ok(Ok(p)),
        Err(e) if is_structural(&e) => Err(parse_error(path, e)),
        Err(e) => {
            let mut r = Report::new(format!("presentation {}", path.display()));
            r.push("presentation is valid", Verdict::NotEqual(e.to_string()));
            Ok(Err(r))
        }
    }
}

fn load_presentation(path: &Path) -> Result<Presentation, CliError> {
    match presentation_or_report(path, &docs::read(path)?)? {
        Ok(p) => Ok(p),
        Err(r) => Err(parse_error(path, &r.entries[0].verdict)),
    }
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| parse_error(path, e))
}

fn presentation_report(title: String, p: &Presentation) -> Report {
    let mut r = Report::new(title);
    let c = &p.computad;
    r.check("presentation is valid", true, "");
    r.note(format!("{} objects, {} 1-generators, {} 2-generators, {} rules, {} relations", c.objects.len(), c.one.len(), c.two.len(), p.rules.len(), p.relations.len()));
    r
}

/// Functoriality of `t` and naturality of the structure cells, which the
/// law checker assumes.
fn monad_typing(m: &MonadData<FinCat>, prefix: &str) -> Report {
    let mut r = Report::new("typing");
    r.absorb(&format!("{prefix}t: "), m.t.check());
    for (name, cell) in [("eta", &m.eta), ("mu", &m.mu)] {
        let why = FinCat.check_two(cell);
        r.check(format!("{prefix}{name} is natural"), why.is_none(), why.unwrap_or_default());
    }
    r
}

fn law_typing(d: &DistLawData<FinCat>) -> Report {
    let mut r = monad_typing(&d.s, "s.");
    r.absorb("", monad_typing(&d.t, "t."));
    let why = FinCat.check_two(&d.gamma);
    r.check("gamma is natural", why.is_none(), why.unwrap_or_default());
    r
}

fn host_failure(r: &mut Report, law: &str, e: impl std::fmt::Display) {
    r.push(law, Verdict::NotEqual(e.to_string()));
}

fn load_law(path: &Path, host: Option<&Path>, d: &docs::LawDoc) -> Result<DistLawData<FinCat>, CliError> {
    let c = docs::load_category(&host.map(Path::to_path_buf).unwrap_or_else(|| docs::sibling(path, &d.host)))?;
    docs::law(&c, d)
}

pub fn check(path: &Path) -> Result<Report, CliError> {
    let text = docs::read(path)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
    let title = format!("check {}", path.display());
    if value.get("kind").is_some() {
        return match docs::parse_doc(path, &text)? {
            Doc::Monad(m) => {
                let c = docs::load_category(&docs::sibling(path, &m.host))?;
                let name = m.name.clone().unwrap_or_else(|| "monad".into());
                let m = docs::monad(&c, &name, &m.body())?;
                let mut r = Report::new(title);
                let typing = monad_typing(&m, "");
                let typed = typing.passed();
                r.absorb("", typing);
                if typed {
                    match check_monad(&FinCat, &m) {
                        Ok(laws) => r.absorb("", laws),
                        Err(e) => host_failure(&mut r, "monad is typed", e),
                    }
                }
                Ok(r)
            }
            Doc::Law(d) => {
                let law = load_law(path, None, &d)?;
                let mut r = Report::new(d.name.clone().map(|n| format!("{title} ({n})")).unwrap_or(title));
                let typing = law_typing(&law);
                let typed = typing.passed();
                r.absorb("", typing);
                if typed {
                    match beck_equivalence_check(&FinCat, &law) {
                        Ok(laws) => r.absorb("", laws),
                        Err(e) => host_failure(&mut r, "law is typed", e),
                    }
                }
                Ok(r)
            }
            Doc::SetLaw(d) => {
                let (h, law) = d.resolve()?;
                let mut r = Report::new(title);
                match beck_equivalence_check(&h, &law) {
                    Ok(laws) => r.absorb("", laws),
                    Err(e) => host_failure(&mut r, "law is typed", e),
                }
                Ok(r)
            }
        };
    }
    if value.get("one_generators").is_some() {
        return Ok(match presentation_or_report(path, &text)? {
            Ok(p) => presentation_report(title, &p),
            Err(r) => r,
        });
    }
    if value.get("morphisms").is_some() {
        let doc: CategoryDoc = serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
        let audit = doc.audit().map_err(|e| parse_error(path, e))?;
        let mut r = Report::new(title);
        r.absorb("", audit);
        return Ok(r);
    }
    Err(parse_error(path, "not a presentation, category, monad or law document"))
}

pub fn eq(path: &Path, lhs: &str, rhs: &str, budget: usize) -> Result<Report, CliError> {
    let p = load_presentation(path)?;
    let (a, b) = (parse_term(&p, lhs)?, parse_term(&p, rhs)?);
    let v = p.two_cells_equal(&a, &b, budget).map_err(|e| parse_error(path, e))?;
    let steps = match &v {
        Verdict::Equal(Witness::Trace(t)) => Some(t.len()),
        Verdict::Equal(_) => Some(0),
        _ => None,
    };
    let mut r = Report::new(format!("{} = {}", p.computad.show_term(&a), p.computad.show_term(&b)));
    r.push("lhs = rhs", v);
    if let Some(n) = steps {
        r.note(format!("steps: {n}"));
    }
    r.note(format!("budget: {budget}"));
    Ok(r)
}

/// Writes the presentation to `output`, or hands it back for stdout.
fn emit(p: &Presentation, output: Option<&Path>, dot: Option<&Path>, r: &mut Report) -> Result<Option<String>, CliError> {
    if let Some(d) = dot {
        write(d, &to_dot(p))?;
        r.note(format!("wrote {}", d.display()));
    }
    let json = presentation_to_json(p);
    match output {
        Some(o) => {
            write(o, &json)?;
            r.note(format!("wrote {}", o.display()));
            Ok(None)
        }
        None => Ok(Some(json)),
    }
}

pub fn tensor(a: &Path, b: &Path, output: Option<&Path>, dot: Option<&Path>) -> Result<(Report, Option<String>), CliError> {
    let (pa, pb) = (load_presentation(a)?, load_presentation(b)?);
    let t = gray_tensor(&pa, &pb).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut r = presentation_report(format!("tensor {} {}", a.display(), b.display()), &t.result);
    for w in &t.warnings {
        r.note(format!("warning: {w}"));
    }
    let artifact = emit(&t.result, output, dot, &mut r)?;
    Ok((r, artifact))
}

pub fn classify(path: &Path, output: Option<&Path>, dot: Option<&Path>, bound: usize) -> Result<(Report, Option<String>), CliError> {
    let p = load_presentation(path)?;
    let cl = Classifier::new(&p, bound, Orientation::Lax).map_err(|e| parse_error(path, e))?;
    let mut r = presentation_report(format!("classify {}", path.display()), &cl.result);
    r.note(format!("{} cells, sequences up to length {bound}", cl.cells.len()));
    let artifact = emit(&cl.result, output, dot, &mut r)?;
    Ok((r, artifact))
}

pub fn beck(path: &Path) -> Result<Report, CliError> {
    match docs::parse_doc(path, &docs::read(path)?)? {
        Doc::Monad(_) => Err(parse_error(path, "expected a law document")),
        _ => {
            let mut r = check(path)?;
            r.title = format!("beck {}", path.display());
            Ok(r)
        }
    }
}

fn compose_report<K: TwoCategory>(k: &K, law: &DistLawData<K>, title: String) -> Report {
    let mut r = Report::new(title);
    let base = Presentation::terminal();
    let cl = classifier(&base).expect("the terminal classifier exists");
    let g = gdl_from_dist_law(law);
    match check_generalized_dist_law(&cl, &cl, k, &g) {
        Ok(axioms) => r.absorb("Γ: ", axioms),
        Err(e) => return failed(r, "Γ is typed", e),
    }
    let h = match compose_via(&cl, k, &g) {
        Ok(h) => h,
        Err(e) => return failed(r, "H is defined", e),
    };
    match check_lax_functor(&cl.base_host(), k, &h) {
        Ok(laws) => r.absorb("H: ", laws),
        Err(e) => return failed(r, "H is typed", e),
    }
    match compose_monads(k, law) {
        Ok(m) => {
            let same = h.ones[0].1 == m.t && k.compare(&h.unit[0], &m.eta).is_equal() && k.compare(&h.comp[&(0, 0)], &m.mu).is_equal();
            r.check("H is the composite monad", same, "H differs from the composite monad");
        }
        Err(e) => host_failure(&mut r, "composite monad", e),
    }
    r
}

fn failed(mut r: Report, law: &str, e: impl std::fmt::Display) -> Report {
    host_failure(&mut r, law, e);
    r
}

pub fn compose(path: &Path, host: Option<&Path>) -> Result<Report, CliError> {
    let title = format!("compose {}", path.display());
    match docs::parse_doc(path, &docs::read(path)?)? {
        Doc::Law(d) => {
            let law = load_law(path, host, &d)?;
            let typing = law_typing(&law);
            if !typing.passed() {
                let mut r = Report::new(title);
                r.absorb("", typing);
                return Ok(r);
            }
            Ok(compose_report(&FinCat, &law, title))
        }
        Doc::SetLaw(d) => {
            let (h, law) = d.resolve()?;
            Ok(compose_report(&h, &law, title))
        }
        Doc::Monad(_) => Err(parse_error(path, "expected a law document")),
    }
}
