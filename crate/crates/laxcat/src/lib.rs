//! Finitely presented 2-categories and the formal theory of monads inside
//! them: distributive laws, lax Gray tensor products and lax functor
//! classifiers, with every law checked mechanically.

pub mod classifier;
pub mod distlaw;
pub mod fincat;
pub mod monads;
pub mod host;
pub mod gray;
pub mod lax;
pub mod presentation;
pub mod report;
pub mod verdict;

pub use host::{HostError, TwoCategory};
pub use presentation::{Path, Presentation, Presented, Term};
pub use report::Report;
pub use verdict::{Verdict, Witness};
