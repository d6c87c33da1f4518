//! Compiles the guide chapters as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/presentations.md")]
pub mod presentations {}

#[doc = include_str!("../../../book/src/fincat.md")]
pub mod fincat {}

#[doc = include_str!("../../../book/src/monads.md")]
pub mod monads {}

#[doc = include_str!("../../../book/src/distlaw.md")]
pub mod distlaw {}

#[doc = include_str!("../../../book/src/gray.md")]
pub mod gray {}

#[doc = include_str!("../../../book/src/classifier.md")]
pub mod classifier {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
