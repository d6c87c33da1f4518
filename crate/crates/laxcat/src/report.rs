//! Law-by-law reports shared by every checker.

use serde_json::{json, Value};

use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawResult {
    pub law: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub entries: Vec<LawResult>,
    /// Free-form remarks that are not verdicts (sizes, counts).
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), entries: Vec::new(), notes: Vec::new() }
    }

    pub fn push(&mut self, law: impl Into<String>, verdict: Verdict) {
        self.entries.push(LawResult { law: law.into(), verdict });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Records a boolean fact as an equal / not-equal verdict.
    pub fn check(&mut self, law: impl Into<String>, ok: bool, why: impl Into<String>) {
        let verdict = if ok {
            Verdict::Equal(crate::verdict::Witness::Componentwise)
        } else {
            Verdict::NotEqual(why.into())
        };
        self.push(law, verdict);
    }

    /// Folds one more instance of `law` into a single entry, keeping the
    /// first `NotEqual`, else the first `Unknown`.
    pub fn merge(&mut self, law: impl Into<String>, verdict: Verdict) {
        let law = law.into();
        match self.entries.iter_mut().find(|e| e.law == law) {
            Some(e) => {
                let worse = (e.verdict.is_equal() && !verdict.is_equal()) || (e.verdict.is_unknown() && verdict.is_not_equal());
                if worse {
                    e.verdict = verdict;
                }
            }
            None => self.push(law, verdict),
        }
    }

    /// Appends every entry of `other`, prefixing law names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for e in other.entries {
            self.entries.push(LawResult { law: format!("{prefix}{}", e.law), verdict: e.verdict });
        }
        for n in other.notes {
            self.notes.push(format!("{prefix}{n}"));
        }
    }

    /// Every law came back `Equal`.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.verdict.is_equal())
    }

    /// Some law came back `NotEqual`.
    pub fn refuted(&self) -> bool {
        self.entries.iter().any(|e| e.verdict.is_not_equal())
    }

    pub fn any_unknown(&self) -> bool {
        self.entries.iter().any(|e| e.verdict.is_unknown())
    }

    pub fn failures(&self) -> Vec<&LawResult> {
        self.entries.iter().filter(|e| !e.verdict.is_equal()).collect()
    }

    pub fn verdict_of(&self, law: &str) -> Option<&Verdict> {
        self.entries.iter().find(|e| e.law == law).map(|e| &e.verdict)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("== {} ==\n", self.title);
        let width = self.entries.iter().map(|e| e.law.chars().count()).max().unwrap_or(0);
        for e in &self.entries {
            let pad = width - e.law.chars().count();
            out.push_str(&format!("{}{}  {}", e.law, " ".repeat(pad), e.verdict.tag()));
            let detail = e.verdict.detail();
            if !detail.is_empty() {
                out.push_str(&format!("  {detail}"));
            }
            out.push('\n');
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        let status = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("result: {status}\n"));
        out
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| json!({"law": e.law, "verdict": e.verdict.tag(), "detail": e.verdict.detail()}))
            .collect();
        json!({
            "title": self.title,
            "passed": self.passed(),
            "entries": entries,
            "notes": self.notes,
        })
    }
}
