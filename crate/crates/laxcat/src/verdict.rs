//! Three-valued answers to "are these two 2-cells equal?".

use std::fmt;

use crate::presentation::RewriteStep;

/// Evidence attached to an `Equal` verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Both sides have the same interchange normal form.
    Syntactic,
    /// A chain of relation applications leading from the left side to the right side.
    Trace(Vec<RewriteStep>),
    /// A registered exact decision procedure agreed on both sides.
    Oracle(String),
    /// Concrete data compared entry by entry.
    Componentwise,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal(Witness),
    /// Carries a human-readable description of what separates the two sides.
    NotEqual(String),
    /// The search budget ran out before either side was settled.
    Unknown { states: usize, budget: usize },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    pub fn is_not_equal(&self) -> bool {
        matches!(self, Verdict::NotEqual(_))
    }

    /// Short tag used in reports.
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Equal(_) => "equal",
            Verdict::NotEqual(_) => "not-equal",
            Verdict::Unknown { .. } => "unknown",
        }
    }

    /// Witness or separation text, empty for plain equalities.
    pub fn detail(&self) -> String {
        match self {
            Verdict::Equal(Witness::Trace(steps)) => format!("{} rewrite steps", steps.len()),
            Verdict::Equal(Witness::Oracle(name)) => format!("decided by {name}"),
            Verdict::Equal(_) => String::new(),
            Verdict::NotEqual(why) => why.clone(),
            Verdict::Unknown { states, budget } => {
                format!("explored {states} states, budget {budget}")
            }
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let detail = self.detail();
        if detail.is_empty() {
            write!(f, "{}", self.tag())
        } else {
            write!(f, "{} ({})", self.tag(), detail)
        }
    }
}
