//! Finite categories as a concrete host, finite-set monads, and the
//! Eilenberg–Moore and Kleisli constructions computed by enumeration.

pub mod category;
pub mod functor;
pub mod host;
pub mod monad;
pub mod probes;
pub mod sets;

pub use category::{parse_category, CategoryDoc, CategoryError, FinCategory, Morphism};
pub use functor::{all_functors, all_nat_trans, functor_category, FinFunctor, FinNatTrans, FunctorCategory};
pub use host::FinCat;
pub use monad::{em_category, em_universal_property_check, kleisli_category, module_category, CatMonad, EmCategory, KleisliCategory, MonadOnCat, SetMonad};
pub use probes::{default_probes, small_categories};
pub use sets::{FinSet, SetEndo, SetFunctor, SetNat};
