//! Many-valued normal modal logics over a finite linear order of truth
//! values: formulas and labelled sequents, Kripke semantics, a checker for
//! the labelled sequent calculus, bounded decision by countermodel search,
//! filtration, the De Morgan negation scan and the embedding of many-valued
//! intuitionistic logic into `mv-S4`.

pub mod decision;
pub mod domain;
pub mod duality;
pub mod error;
pub mod exec;
pub mod filtration;
pub mod formula;
pub mod gen;
pub mod intuitionistic;
pub mod parser;
pub mod proofs;
pub mod semantics;

pub use decision::{decide, filtration_bound, DecisionOutcome, LogicId, SearchConfig};
pub use domain::{Connective, Label, LabelSet, Signature, TruthDomain};
pub use error::{Error, Result};
pub use exec::Exec;
pub use formula::{Formula, LabelledFormula, Sequent};
pub use proofs::{check_derivation, Derivation, Justification, Scheme, Step, Violation};
pub use semantics::{eval, FrameClass, KripkeModel};
