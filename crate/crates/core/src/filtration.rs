//! Filtration of a Kripke model through a subformula-closed set `Φ`.
//!
//! Worlds are identified when every formula of `Φ` takes the same value at
//! them. The accessibility relation of the quotient depends on the logic;
//! for each logic the quotient keeps every value on `Φ` and stays in the
//! logic's frame class.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::decision::LogicId;
use crate::domain::{Label, Signature};
use crate::error::{Error, Result};
use crate::formula::{subformula_closure, Formula};
use crate::semantics::{frame_check, frame_violation, Evaluator, FrameClass, FrameViolation, KripkeModel};

/// How the filtered accessibility relation is defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiltrationRule {
    /// `[u] R* [v]` iff some member of `[u]` sees some member of `[v]`.
    Least,
    /// Boxes may only rise along `R*` and bound the next value from below;
    /// diamonds dually.
    Transitive,
    /// Box values rise and diamond values fall along `R*`.
    Preorder,
    /// Two-sided box/diamond bounds in both directions.
    Symmetric,
    /// Equal box and diamond values.
    Equivalence,
}

/// Which member of each class stands for it when reading values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Representative {
    #[default]
    Least,
    Greatest,
}

/// Partition of `W` by agreement on `Φ`, classes ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub classes: Vec<Vec<usize>>,
    /// `class_of[u]` is the index of the class containing `u`.
    pub class_of: Vec<usize>,
}

/// The filtered model together with the data that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtered {
    pub partition: Partition,
    pub representatives: Vec<usize>,
    /// `Φ` in its canonical order.
    pub phi: Vec<Formula>,
    /// `values[c][i]` is the value of `phi[i]` on class `c`.
    pub values: Vec<Vec<Label>>,
    pub model: KripkeModel,
}

impl Filtered {
    pub fn class_count(&self) -> usize {
        self.partition.classes.len()
    }
}

fn ensure_closed(phi: &BTreeSet<Formula>) -> Result<()> {
    let closure = subformula_closure(phi);
    if let Some(missing) = closure.difference(phi).next() {
        return Err(Error::NotSubformulaClosed(missing.to_string()));
    }
    Ok(())
}

/// Value of every formula of `Φ` at every world: `table[u][i]`.
fn value_table(sig: &Signature, m: &KripkeModel, phi: &[Formula]) -> Result<Vec<Vec<Label>>> {
    let mut ev = Evaluator::new(sig);
    let ids = phi.iter().map(|f| ev.insert(f)).collect::<Result<Vec<_>>>()?;
    let values = ev.evaluate(m);
    Ok(m.worlds()
        .map(|u| ids.iter().map(|&id| values.get(id, u)).collect())
        .collect())
}

fn partition_by(rows: &[Vec<Label>]) -> Partition {
    let mut index: BTreeMap<&[Label], usize> = BTreeMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = Vec::with_capacity(rows.len());
    for (u, row) in rows.iter().enumerate() {
        let c = *index.entry(row.as_slice()).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(u);
        class_of.push(c);
    }
    Partition { classes, class_of }
}

/// The classes of `≡_Φ`: worlds agreeing on every formula of `Φ`.
pub fn equiv_classes(sig: &Signature, m: &KripkeModel, phi: &BTreeSet<Formula>) -> Result<Partition> {
    ensure_closed(phi)?;
    let phi: Vec<Formula> = phi.iter().cloned().collect();
    Ok(partition_by(&value_table(sig, m, &phi)?))
}

/// The `logic`-filtration of `m` through `Φ`, using least representatives.
pub fn filter_model(sig: &Signature, m: &KripkeModel, phi: &BTreeSet<Formula>, logic: LogicId) -> Result<Filtered> {
    let class = logic.frame_class();
    if !frame_check(m, class) {
        return Err(Error::OutsideFrameClass(class.name()));
    }
    filter_with_rule(sig, m, phi, logic.filtration_rule(), Representative::Least)
}

/// Filtration with an explicit rule and representative choice, without
/// checking the input's frame class.
pub fn filter_with_rule(
    sig: &Signature,
    m: &KripkeModel,
    phi: &BTreeSet<Formula>,
    rule: FiltrationRule,
    rep: Representative,
) -> Result<Filtered> {
    ensure_closed(phi)?;
    let phi: Vec<Formula> = phi.iter().cloned().collect();
    let table = value_table(sig, m, &phi)?;
    let partition = partition_by(&table);
    let representatives: Vec<usize> = partition
        .classes
        .iter()
        .map(|c| match rep {
            Representative::Least => c[0],
            Representative::Greatest => c[c.len() - 1],
        })
        .collect();
    let values: Vec<Vec<Label>> = representatives.iter().map(|&u| table[u].clone()).collect();
    let count = partition.classes.len();

    let position: BTreeMap<&Formula, usize> = phi.iter().enumerate().map(|(i, f)| (f, i)).collect();
    // (index of the modal formula, index of its operand)
    let mut boxes = Vec::new();
    let mut dias = Vec::new();
    for (i, f) in phi.iter().enumerate() {
        match f {
            Formula::Box(inner) => boxes.push((i, position[inner.as_ref()])),
            Formula::Dia(inner) => dias.push((i, position[inner.as_ref()])),
            _ => {}
        }
    }

    let related = |a: usize, b: usize| -> bool {
        let (x, y) = (&values[a], &values[b]);
        match rule {
            FiltrationRule::Least => unreachable!(),
            FiltrationRule::Transitive => {
                boxes.iter().all(|&(bx, op)| x[bx] <= y[bx] && x[bx] <= y[op])
                    && dias.iter().all(|&(dx, op)| x[dx] >= y[dx] && x[dx] >= y[op])
            }
            FiltrationRule::Preorder => {
                boxes.iter().all(|&(bx, _)| x[bx] <= y[bx]) && dias.iter().all(|&(dx, _)| x[dx] >= y[dx])
            }
            FiltrationRule::Symmetric => {
                boxes.iter().all(|&(bx, op)| x[bx] <= y[op] && y[bx] <= x[op])
                    && dias.iter().all(|&(dx, op)| x[dx] >= y[op] && y[dx] >= x[op])
            }
            FiltrationRule::Equivalence => {
                boxes.iter().all(|&(bx, _)| x[bx] == y[bx]) && dias.iter().all(|&(dx, _)| x[dx] == y[dx])
            }
        }
    };

    let mut succ = vec![Vec::new(); count];
    if rule == FiltrationRule::Least {
        for (u, v) in m.edges() {
            succ[partition.class_of[u]].push(partition.class_of[v]);
        }
    } else {
        for (a, out) in succ.iter_mut().enumerate() {
            out.extend((0..count).filter(|&b| related(a, b)));
        }
    }
    let mut model = KripkeModel::from_successors(succ)?;
    for (i, f) in phi.iter().enumerate() {
        if let Formula::Var(p) = f {
            model.set_row(p, values.iter().map(|row| row[i]).collect())?;
        }
    }
    Ok(Filtered {
        partition,
        representatives,
        phi,
        values,
        model,
    })
}

/// A formula whose value changed under filtration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueMismatch {
    pub world: usize,
    pub formula: Formula,
    pub original: Label,
    pub filtered: Label,
}

/// Outcome of checking value preservation and the frame class on one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationReport {
    pub mismatches: Vec<ValueMismatch>,
    pub frame: Option<FrameViolation>,
    pub class_count: usize,
}

impl FiltrationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.frame.is_none()
    }
}

impl fmt::Display for FiltrationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass ({} classes)", self.class_count);
        }
        f.write_str("fail")?;
        if let Some(m) = self.mismatches.first() {
            write!(
                f,
                ": world {} formula {} has {} but {} after filtration",
                m.world, m.formula, m.original, m.filtered
            )?;
        }
        if let Some(v) = &self.frame {
            write!(f, ": {v}")?;
        }
        Ok(())
    }
}

/// Filters `m` under `logic` and checks value preservation on `Φ` and the
/// frame class of the result.
pub fn verify_filtration(sig: &Signature, m: &KripkeModel, phi: &BTreeSet<Formula>, logic: LogicId) -> Result<FiltrationReport> {
    verify_with_rule(sig, m, phi, logic.filtration_rule(), logic.frame_class())
}

/// As [`verify_filtration`] with the rule and expected class chosen freely.
pub fn verify_with_rule(
    sig: &Signature,
    m: &KripkeModel,
    phi: &BTreeSet<Formula>,
    rule: FiltrationRule,
    class: FrameClass,
) -> Result<FiltrationReport> {
    let filtered = filter_with_rule(sig, m, phi, rule, Representative::Least)?;
    let original = value_table(sig, m, &filtered.phi)?;
    let after = value_table(sig, &filtered.model, &filtered.phi)?;
    let mut mismatches = Vec::new();
    for u in m.worlds() {
        let c = filtered.partition.class_of[u];
        for (i, f) in filtered.phi.iter().enumerate() {
            if original[u][i] != after[c][i] {
                mismatches.push(ValueMismatch {
                    world: u,
                    formula: f.clone(),
                    original: original[u][i],
                    filtered: after[c][i],
                });
            }
        }
    }
    Ok(FiltrationReport {
        mismatches,
        frame: frame_violation(&filtered.model, class),
        class_count: filtered.class_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::eval;

    fn sig() -> Signature {
        Signature::lukasiewicz(3).unwrap()
    }

    fn p() -> Formula {
        Formula::var("p")
    }

    fn closure(fs: &[Formula]) -> BTreeSet<Formula> {
        subformula_closure(fs)
    }

    #[test]
    fn classes() {
        let mut m = KripkeModel::new(2).unwrap();
        let phi = closure(&[p()]);
        assert_eq!(equiv_classes(&sig(), &m, &phi).unwrap().classes, vec![vec![0, 1]]);
        m.set_value(1, "p", 2).unwrap();
        assert_eq!(equiv_classes(&sig(), &m, &phi).unwrap().classes, vec![vec![0], vec![1]]);
        let all = equiv_classes(&sig(), &m, &BTreeSet::new()).unwrap();
        assert_eq!(all.classes, vec![vec![0, 1]]);
        let open = BTreeSet::from([p().boxed()]);
        assert!(matches!(
            equiv_classes(&sig(), &m, &open),
            Err(Error::NotSubformulaClosed(_))
        ));
    }

    #[test]
    fn reflexive_point_is_fixed() {
        let mut m = KripkeModel::from_successors(vec![vec![0]]).unwrap();
        m.set_value(0, "p", 2).unwrap();
        let phi = closure(&[p().boxed()]);
        for logic in LogicId::ALL {
            if !frame_check(&m, logic.frame_class()) {
                continue;
            }
            let f = filter_model(&sig(), &m, &phi, logic).unwrap();
            assert_eq!(f.model, m, "{logic}");
        }
    }

    #[test]
    fn s4_loop_collapses() {
        let mut m = KripkeModel::from_successors(vec![vec![0, 1], vec![0, 1]]).unwrap();
        m.set_row("p", vec![2, 2]).unwrap();
        let phi = closure(&[p().boxed()]);
        let f = filter_model(&sig(), &m, &phi, LogicId::S4).unwrap();
        assert_eq!(f.class_count(), 1);
        assert!(f.model.has_edge(0, 0));
        assert_eq!(
            eval(&sig(), &f.model, 0, &p().boxed()).unwrap(),
            eval(&sig(), &m, 0, &p().boxed()).unwrap()
        );
    }

    #[test]
    fn outside_class_rejected() {
        let m = KripkeModel::new(1).unwrap();
        let phi = closure(&[p()]);
        assert!(matches!(
            filter_model(&sig(), &m, &phi, LogicId::T),
            Err(Error::OutsideFrameClass(_))
        ));
    }

    #[test]
    fn wrong_rule_is_caught() {
        // Symmetric pair 0 <-> 1 plus a dead end 2.
        let mut m = KripkeModel::from_successors(vec![vec![1], vec![0], vec![]]).unwrap();
        m.set_row("p", vec![1, 3, 2]).unwrap();
        let phi = closure(&[p().boxed(), p().dia()]);
        assert!(verify_filtration(&sig(), &m, &phi, LogicId::B).unwrap().passed());
        let report = verify_with_rule(&sig(), &m, &phi, FiltrationRule::Preorder, FrameClass::Symmetric).unwrap();
        assert!(!report.passed(), "{report}");
    }
}
