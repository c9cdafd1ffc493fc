//! Derivations in the labelled sequent calculus of `mv-K` and its
//! extensions, and a checker for them.

mod check;
pub mod fixtures;

use std::fmt;

use crate::decision::LogicId;
use crate::domain::{Label, LabelSet};
use crate::formula::{product, up_set, Formula, LabelledFormula, Sequent};

pub use check::{check_derivation, check_step, Violation};

/// Extension axiom schemes, numbered 20 to 28.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    /// `(□φ,n) → (◇φ,n)`
    Seriality,
    /// `(□φ,k) → (φ,k)^+`
    ReflexiveBox,
    /// `(φ,k) → (◇φ,k)^+`
    ReflexiveDia,
    /// `(□φ,k) → (□□φ,k)^+`
    TransitiveBox,
    /// `(◇◇φ,k) → (◇φ,k)^+`
    TransitiveDia,
    /// `(φ,k) → (□◇φ,k)^+`
    SymmetricBox,
    /// `(◇□φ,k) → (φ,k)^+`
    SymmetricDia,
    /// `(◇φ,k) → (□◇φ,k)^+`
    EuclideanDia,
    /// `(◇□φ,k) → (□φ,k)^+`
    EuclideanBox,
}

impl Scheme {
    pub const ALL: [Scheme; 9] = [
        Scheme::Seriality,
        Scheme::ReflexiveBox,
        Scheme::ReflexiveDia,
        Scheme::TransitiveBox,
        Scheme::TransitiveDia,
        Scheme::SymmetricBox,
        Scheme::SymmetricDia,
        Scheme::EuclideanDia,
        Scheme::EuclideanBox,
    ];

    pub fn number(self) -> u8 {
        20 + Self::ALL.iter().position(|&s| s == self).unwrap() as u8
    }

    pub fn from_number(num: u8) -> Option<Self> {
        Self::ALL.get(num.checked_sub(20)? as usize).copied()
    }

    /// The frame class on which the scheme is valid.
    pub fn frame_class(self) -> crate::semantics::FrameClass {
        use crate::semantics::FrameClass;
        match self {
            Scheme::Seriality => FrameClass::Serial,
            Scheme::ReflexiveBox | Scheme::ReflexiveDia => FrameClass::Reflexive,
            Scheme::TransitiveBox | Scheme::TransitiveDia => FrameClass::Transitive,
            Scheme::SymmetricBox | Scheme::SymmetricDia => FrameClass::Symmetric,
            Scheme::EuclideanDia | Scheme::EuclideanBox => FrameClass::Euclidean,
        }
    }
}

/// The sequent a scheme yields for `φ` and `k` over `n` values, with the
/// `^+` sets expanded. `k` is ignored by [`Scheme::Seriality`].
pub fn instantiate_scheme(scheme: Scheme, phi: &Formula, k: Label, n: Label) -> Sequent {
    let lf = |f: Formula, label| LabelledFormula::new(f, label);
    let up = |f: Formula| up_set(&lf(f, k), n);
    let phi = phi.clone();
    match scheme {
        Scheme::Seriality => Sequent::new([lf(phi.clone().boxed(), n)], [lf(phi.dia(), n)]),
        Scheme::ReflexiveBox => Sequent::new([lf(phi.clone().boxed(), k)], up(phi)),
        Scheme::ReflexiveDia => Sequent::new([lf(phi.clone(), k)], up(phi.dia())),
        Scheme::TransitiveBox => Sequent::new([lf(phi.clone().boxed(), k)], up(phi.boxed().boxed())),
        Scheme::TransitiveDia => Sequent::new([lf(phi.clone().dia().dia(), k)], up(phi.dia())),
        Scheme::SymmetricBox => Sequent::new([lf(phi.clone(), k)], up(phi.dia().boxed())),
        Scheme::SymmetricDia => Sequent::new([lf(phi.clone().boxed().dia(), k)], up(phi)),
        Scheme::EuclideanDia => Sequent::new([lf(phi.clone().dia(), k)], up(phi.dia().boxed())),
        Scheme::EuclideanBox => Sequent::new([lf(phi.clone().boxed().dia(), k)], up(phi.boxed())),
    }
}

/// Why a step's conclusion follows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Justification {
    /// The conclusion is the hypothesis at this 0-based index; scripts
    /// number hypotheses from 1.
    Hypothesis(usize),
    /// `(φ,k) → (φ,k)`.
    AxiomIdentity,
    /// `(φ_1,k_1),…,(φ_ℓ,k_ℓ) → (∗(φ_1,…,φ_ℓ),k)` for a table row; the row
    /// is read off the conclusion.
    AxiomTable,
    /// `(φ,k) → Γ^×` yields `(□φ,k),Γ →`, `k ≠ n`.
    RuleBox,
    /// `(φ,k) → Γ^×` yields `(◇φ,k),Γ →`, `k ≠ 1`.
    RuleDiamond,
    /// Moves the given antecedent formula to the succedent as its other labels.
    LeftShift(LabelledFormula),
    /// `Γ → Δ,(φ,from)` yields `Γ,(φ,to) → Δ`, `from ≠ to`.
    RightShift {
        formula: Formula,
        from: Label,
        to: Label,
    },
    LeftWeaken(LabelledFormula),
    RightWeaken(LabelledFormula),
    Cut(LabelledFormula),
    /// Two premises with `(φ,first)` and `(φ,second)` in their succedents.
    Resolution {
        formula: Formula,
        first: Label,
        second: Label,
    },
    /// One premise per `k ∈ labels`, each with `(φ,k)` in its antecedent.
    MultiShift { formula: Formula, labels: LabelSet },
    /// One premise per tuple in `K_1 × … × K_ℓ`.
    SuperMultiShift(Vec<(Formula, LabelSet)>),
    /// An instance of an extension scheme; `label` is absent for scheme 20.
    ExtensionAxiom {
        scheme: Scheme,
        formula: Formula,
        label: Option<Label>,
    },
}

impl Justification {
    /// Rule name used in proof scripts.
    pub fn rule_name(&self) -> String {
        match self {
            Justification::Hypothesis(_) => "hyp".into(),
            Justification::AxiomIdentity => "ax-id".into(),
            Justification::AxiomTable => "ax-table".into(),
            Justification::RuleBox => "r-box".into(),
            Justification::RuleDiamond => "r-dia".into(),
            Justification::LeftShift(_) => "lshift".into(),
            Justification::RightShift { .. } => "rshift".into(),
            Justification::LeftWeaken(_) => "lweak".into(),
            Justification::RightWeaken(_) => "rweak".into(),
            Justification::Cut(_) => "cut".into(),
            Justification::Resolution { .. } => "resolve".into(),
            Justification::MultiShift { .. } => "mshift".into(),
            Justification::SuperMultiShift(_) => "smshift".into(),
            Justification::ExtensionAxiom { scheme, .. } => format!("ext-{}", scheme.number()),
        }
    }
}

fn write_label_set(f: &mut fmt::Formatter<'_>, set: &LabelSet) -> fmt::Result {
    f.write_str("{")?;
    for (i, k) in set.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{k}")?;
    }
    f.write_str("}")
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rule_name())?;
        match self {
            Justification::Hypothesis(i) => write!(f, " {}", i + 1),
            Justification::AxiomIdentity
            | Justification::AxiomTable
            | Justification::RuleBox
            | Justification::RuleDiamond => Ok(()),
            Justification::LeftShift(lf)
            | Justification::LeftWeaken(lf)
            | Justification::RightWeaken(lf)
            | Justification::Cut(lf) => write!(f, " {lf}"),
            Justification::RightShift { formula, from, to } => {
                write!(f, " ({formula}, {from}) {to}")
            }
            Justification::Resolution {
                formula,
                first,
                second,
            } => write!(f, " ({formula}, {first}) {second}"),
            Justification::MultiShift { formula, labels } => {
                write!(f, " {formula} ")?;
                write_label_set(f, labels)
            }
            Justification::SuperMultiShift(pairs) => {
                for (formula, labels) in pairs {
                    write!(f, " {formula} ")?;
                    write_label_set(f, labels)?;
                }
                Ok(())
            }
            Justification::ExtensionAxiom { formula, label, .. } => {
                write!(f, " {formula}")?;
                if let Some(k) = label {
                    write!(f, " {k}")?;
                }
                Ok(())
            }
        }
    }
}

/// One line of a derivation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Step {
    pub conclusion: Sequent,
    pub justification: Justification,
    /// Indices of earlier steps, 0-based.
    pub premises: Vec<usize>,
}

/// A finite derivation from hypotheses `Σ` in a given logic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub logic: LogicId,
    pub hypotheses: Vec<Sequent>,
    pub steps: Vec<Step>,
}

impl Derivation {
    pub fn new(logic: LogicId) -> Self {
        Self {
            logic,
            hypotheses: Vec::new(),
            steps: Vec::new(),
        }
    }

    /// The last step's conclusion.
    pub fn conclusion(&self) -> Option<&Sequent> {
        self.steps.last().map(|s| &s.conclusion)
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render_proof(self))
    }
}

/// `{φ} × ({1..n} \ labels)`.
pub(crate) fn shifted_out(formula: &Formula, labels: &LabelSet, n: Label) -> crate::formula::LabelledSet {
    product(formula, &crate::domain::complement(labels, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::var("p")
    }

    #[test]
    fn scheme_numbers() {
        for s in Scheme::ALL {
            assert_eq!(Scheme::from_number(s.number()), Some(s));
        }
        assert_eq!(Scheme::from_number(19), None);
        assert_eq!(Scheme::from_number(29), None);
    }

    #[test]
    fn scheme_instances() {
        assert_eq!(
            instantiate_scheme(Scheme::Seriality, &p(), 1, 3),
            Sequent::new([p().boxed().labelled(3)], [p().dia().labelled(3)])
        );
        assert_eq!(
            instantiate_scheme(Scheme::ReflexiveBox, &p(), 3, 3),
            Sequent::new([p().boxed().labelled(3)], [p().labelled(3)])
        );
        assert_eq!(
            instantiate_scheme(Scheme::EuclideanDia, &p(), 2, 3),
            Sequent::new(
                [p().dia().labelled(2)],
                [p().dia().boxed().labelled(2), p().dia().boxed().labelled(3)]
            )
        );
    }
}
