//! Formulas, labelled formulas and sequents.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::domain::{complement, complement_interval, interval, Label, LabelSet, Signature};
use crate::error::{Error, Result};

/// A modal formula over an arbitrary set of truth-table connectives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Apply(String, Vec<Formula>),
    Box(Box<Formula>),
    Dia(Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    pub fn apply(name: impl Into<String>, args: Vec<Formula>) -> Self {
        Formula::Apply(name.into(), args)
    }

    pub fn boxed(self) -> Self {
        Formula::Box(Box::new(self))
    }

    pub fn dia(self) -> Self {
        Formula::Dia(Box::new(self))
    }

    pub fn labelled(self, label: Label) -> LabelledFormula {
        LabelledFormula::new(self, label)
    }

    /// Immediate subformulas.
    pub fn children(&self) -> &[Formula] {
        match self {
            Formula::Var(_) => &[],
            Formula::Apply(_, args) => args,
            Formula::Box(f) | Formula::Dia(f) => std::slice::from_ref(f.as_ref()),
        }
    }

    pub fn is_modal_free(&self) -> bool {
        match self {
            Formula::Var(_) => true,
            Formula::Apply(_, args) => args.iter().all(Formula::is_modal_free),
            Formula::Box(_) | Formula::Dia(_) => false,
        }
    }

    pub fn depth(&self) -> usize {
        self.children()
            .iter()
            .map(|c| c.depth() + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn collect_vars<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Var(v) => {
                out.insert(v);
            }
            _ => self.children().iter().for_each(|c| c.collect_vars(out)),
        }
    }

    pub fn vars(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    /// Checks connective names and arities against `sig`.
    pub fn check(&self, sig: &Signature) -> Result<()> {
        if let Formula::Apply(name, args) = self {
            let conn = sig.connective(name)?;
            if conn.arity() != args.len() {
                return Err(Error::ArityMismatch {
                    name: name.clone(),
                    expected: conn.arity(),
                    got: args.len(),
                });
            }
        }
        self.children().iter().try_for_each(|c| c.check(sig))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(v) => f.write_str(v),
            Formula::Apply(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Formula::Box(inner) => write!(f, "Box {inner}"),
            Formula::Dia(inner) => write!(f, "Dia {inner}"),
        }
    }
}

/// A pair `(φ, k)`: formula `φ` takes truth value `v_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledFormula {
    pub formula: Formula,
    pub label: Label,
}

impl LabelledFormula {
    pub fn new(formula: Formula, label: Label) -> Self {
        Self { formula, label }
    }

    pub fn check(&self, sig: &Signature) -> Result<()> {
        sig.domain().check(self.label as usize)?;
        self.formula.check(sig)
    }
}

impl fmt::Display for LabelledFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.formula, self.label)
    }
}

pub type LabelledSet = BTreeSet<LabelledFormula>;

/// `{φ} × labels`.
pub fn product(formula: &Formula, labels: &LabelSet) -> LabelledSet {
    labels
        .iter()
        .map(|&k| LabelledFormula::new(formula.clone(), k))
        .collect()
}

/// `(φ,k)^+ = {φ} × [k, n]`.
pub fn up_set(lf: &LabelledFormula, n: Label) -> LabelledSet {
    product(&lf.formula, &interval(lf.label as usize, n as usize, n))
}

/// `(φ,k)^- = {φ} × [1, k]`.
pub fn down_set(lf: &LabelledFormula, n: Label) -> LabelledSet {
    product(&lf.formula, &interval(1, lf.label as usize, n))
}

/// `{φ} × ({1..n} \ {k})`.
pub fn others(lf: &LabelledFormula, n: Label) -> LabelledSet {
    product(&lf.formula, &complement(&LabelSet::from([lf.label]), n))
}

/// The labelled formulas a successor world must avoid.
///
/// For every `ψ` with `(□ψ, i)` and `(◇ψ, j)` in `gamma`, contributes
/// `{ψ} × complement([i, j])`. Several labels for the same `ψ` contribute
/// the union over all `(i, j)` pairs.
pub fn gamma_cross<'a, I>(gamma: I, n: Label) -> LabelledSet
where
    I: IntoIterator<Item = &'a LabelledFormula>,
{
    let mut boxes: BTreeMap<&Formula, Vec<Label>> = BTreeMap::new();
    let mut dias: BTreeMap<&Formula, Vec<Label>> = BTreeMap::new();
    for lf in gamma {
        match &lf.formula {
            Formula::Box(psi) => boxes.entry(psi).or_default().push(lf.label),
            Formula::Dia(psi) => dias.entry(psi).or_default().push(lf.label),
            _ => {}
        }
    }
    let mut out = LabelledSet::new();
    for (psi, box_labels) in &boxes {
        let Some(dia_labels) = dias.get(psi) else {
            continue;
        };
        for &i in box_labels {
            for &j in dia_labels {
                out.extend(product(psi, &complement_interval(i as usize, j as usize, n)));
            }
        }
    }
    out
}

/// Smallest superset of `formulas` closed under immediate subformulas.
pub fn subformula_closure<'a, I>(formulas: I) -> BTreeSet<Formula>
where
    I: IntoIterator<Item = &'a Formula>,
{
    let mut out = BTreeSet::new();
    let mut stack: Vec<&Formula> = formulas.into_iter().collect();
    while let Some(f) = stack.pop() {
        if out.insert(f.clone()) {
            stack.extend(f.children());
        }
    }
    out
}

/// A sequent `Γ → Δ` of labelled formulas with set semantics on both sides.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub antecedent: LabelledSet,
    pub succedent: LabelledSet,
}

impl Sequent {
    pub fn new(
        antecedent: impl IntoIterator<Item = LabelledFormula>,
        succedent: impl IntoIterator<Item = LabelledFormula>,
    ) -> Self {
        Self {
            antecedent: antecedent.into_iter().collect(),
            succedent: succedent.into_iter().collect(),
        }
    }

    pub fn labelled_formulas(&self) -> impl Iterator<Item = &LabelledFormula> {
        self.antecedent.iter().chain(&self.succedent)
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.labelled_formulas().map(|lf| &lf.formula)
    }

    pub fn check(&self, sig: &Signature) -> Result<()> {
        self.labelled_formulas().try_for_each(|lf| lf.check(sig))
    }

    pub fn vars(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        for f in self.formulas() {
            f.collect_vars(&mut out);
        }
        out
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |set: &LabelledSet| {
            set.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        let lhs = side(&self.antecedent);
        let rhs = side(&self.succedent);
        match (lhs.is_empty(), rhs.is_empty()) {
            (true, true) => f.write_str("->"),
            (true, false) => write!(f, "-> {rhs}"),
            (false, true) => write!(f, "{lhs} ->"),
            (false, false) => write!(f, "{lhs} -> {rhs}"),
        }
    }
}
