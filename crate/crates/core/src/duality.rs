//! Negation tables making `□` and `◇` De Morgan duals.
//!
//! A unary table `¬` is checked against `(◇p,k) → (¬□¬p,k)` and
//! `(□p,k) → (¬◇¬p,k)` for every `k` over all one-variable models up to a
//! size bound. Only the reversal `k ↦ n−k+1` survives. By soundness and
//! completeness this semantic scan matches derivability of the two
//! sequents in `mv-K`.

use std::fmt;

use crate::decision::{enumerate_models, SearchConfig};
use crate::domain::{Connective, Label, Signature, TruthDomain};
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::formula::{Formula, Sequent};
use crate::semantics::{Evaluator, FrameClass, KripkeModel};

/// Name of the negation connective in the scan signature.
pub const NEG: &str = "neg";

/// A candidate negation, `k ↦ table[k-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnaryTable(Vec<Label>);

impl UnaryTable {
    pub fn new(values: Vec<Label>) -> Result<Self> {
        let domain = TruthDomain::new(values.len())?;
        for &v in &values {
            domain.check(v as usize)?;
        }
        Ok(Self(values))
    }

    pub fn n(&self) -> Label {
        self.0.len() as Label
    }

    pub fn apply(&self, k: Label) -> Label {
        self.0[k as usize - 1]
    }

    pub fn values(&self) -> &[Label] {
        &self.0
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.n()).all(|k| self.apply(self.apply(k)) == k)
    }

    pub fn to_connective(&self, name: &str) -> Connective {
        let domain = TruthDomain::new(self.0.len()).expect("validated size");
        Connective::from_table(name, 1, domain, self.0.clone()).expect("validated labels")
    }

    /// The `index`-th table in lexicographic order of value vectors.
    fn nth(n: Label, mut index: usize) -> Self {
        let mut values = vec![1; n as usize];
        for slot in values.iter_mut().rev() {
            *slot = (index % n as usize) as Label + 1;
            index /= n as usize;
        }
        Self(values)
    }
}

impl fmt::Display for UnaryTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `k ↦ n−k+1`.
pub fn reversal_negation(n: Label) -> UnaryTable {
    UnaryTable::new((1..=n).rev().collect()).expect("n ≥ 2")
}

/// The two duality sequents for label `k`, with `neg` as negation.
pub fn duality_sequents(k: Label) -> [Sequent; 2] {
    let p = Formula::var("p");
    let neg = |f: Formula| Formula::apply(NEG, vec![f]);
    [
        Sequent::new(
            [p.clone().dia().labelled(k)],
            [neg(neg(p.clone()).boxed()).labelled(k)],
        ),
        Sequent::new(
            [p.clone().boxed().labelled(k)],
            [neg(neg(p).dia()).labelled(k)],
        ),
    ]
}

/// A model refuting a duality sequent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityWitness {
    pub model: KripkeModel,
    pub world: usize,
    pub k: Label,
    pub sequent: Sequent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualityOutcome {
    Holds,
    Refuted(Box<DualityWitness>),
}

impl DualityOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, DualityOutcome::Holds)
    }
}

/// Checks both duality sequents for every `k` on every model with at most
/// `bound` worlds over the single variable `p`.
pub fn duality_holds(table: &UnaryTable, bound: usize, config: SearchConfig) -> Result<DualityOutcome> {
    let n = table.n();
    let sig = Signature::new(TruthDomain::new(n as usize)?).with(table.to_connective(NEG))?;
    let mut ev = Evaluator::new(&sig);
    let mut goals = Vec::new();
    for k in 1..=n {
        for s in duality_sequents(k) {
            goals.push((k, ev.compile_sequent(&s)?, s));
        }
    }
    let vars = vec!["p".to_string()];
    let mut spent: u64 = 0;
    for worlds in 1..=bound {
        let space = enumerate_models(&vars, n, worlds, FrameClass::Any, config.ceiling.saturating_sub(spent))?;
        spent += space.len() as u64;
        let found = exec::find_first(config.exec, space.len(), |idx| {
            let m = space.get(idx);
            let values = ev.evaluate(&m);
            goals.iter().find_map(|(k, compiled, s)| {
                compiled.refuting_world(&values).map(|world| DualityWitness {
                    model: m.clone(),
                    world,
                    k: *k,
                    sequent: s.clone(),
                })
            })
        });
        if let Some(w) = found {
            return Ok(DualityOutcome::Refuted(Box::new(w)));
        }
    }
    Ok(DualityOutcome::Holds)
}

/// Every unary table on `n` values passing [`duality_holds`] at `bound`,
/// in lexicographic order.
pub fn uniqueness_scan(n: Label, bound: usize, config: SearchConfig) -> Result<Vec<UnaryTable>> {
    TruthDomain::new(n as usize)?;
    let count = (n as u128).pow(n as u32);
    if count > config.ceiling as u128 {
        return Err(Error::CeilingExceeded {
            ceiling: config.ceiling,
            needed: count,
        });
    }
    let inner = SearchConfig {
        exec: Exec::Sequential,
        ..config
    };
    let results = exec::filter_map(config.exec, count as usize, |i| {
        let table = UnaryTable::nth(n, i);
        match duality_holds(&table, bound, inner) {
            Ok(DualityOutcome::Holds) => Some(Ok(table)),
            Ok(DualityOutcome::Refuted(_)) => None,
            Err(e) => Some(Err(e)),
        }
    });
    results.into_iter().collect()
}
