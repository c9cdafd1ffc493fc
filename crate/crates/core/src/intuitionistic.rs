//! Many-valued intuitionistic logic (mvIL) and its embedding into `mv-S4`.
//!
//! An mvIL interpretation is a preordered Kripke model whose variable values
//! never decrease along the relation. A connective is evaluated at `u` as the
//! least value its table takes over the successors of `u`. The translation
//! puts `□` in front of every subformula; on the hat model `Î(u,p) = I(u,□p)`
//! every formula gets the value its translation has in the original model.

use crate::decision::SearchConfig;
use crate::domain::{tuples, Connective, Label, Signature};
use crate::error::{Error, Result};
use crate::exec;
use crate::formula::{Formula, LabelledFormula, Sequent};
use crate::semantics::{frame_check, frame_violation, FrameClass, KripkeModel};

/// A preordered model with monotone variable values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvilInterpretation(KripkeModel);

impl MvilInterpretation {
    pub fn new(m: KripkeModel) -> Result<Self> {
        if let Some(v) = frame_violation(&m, FrameClass::Preorder) {
            return Err(Error::OutsideFrameClass(v.property));
        }
        if !valuation_monotone(&m) {
            return Err(Error::OutsideFrameClass("monotone valuation"));
        }
        Ok(Self(m))
    }

    pub fn model(&self) -> &KripkeModel {
        &self.0
    }

    pub fn into_model(self) -> KripkeModel {
        self.0
    }
}

fn valuation_monotone(m: &KripkeModel) -> bool {
    m.valuation()
        .values()
        .all(|row| m.edges().all(|(u, v)| row[u] <= row[v]))
}

pub fn is_mvil_interpretation(m: &KripkeModel) -> bool {
    frame_check(m, FrameClass::Preorder) && valuation_monotone(m)
}

fn ensure_modal_free(f: &Formula) -> Result<()> {
    if f.is_modal_free() {
        Ok(())
    } else {
        Err(Error::ModalFormula(f.to_string()))
    }
}

/// Values of `f` at every world.
fn eval_rows(sig: &Signature, m: &KripkeModel, f: &Formula) -> Result<Vec<Label>> {
    match f {
        Formula::Var(p) => Ok(m.worlds().map(|u| m.value(u, p)).collect()),
        Formula::Apply(name, args) => {
            let conn = sig.connective(name)?;
            if conn.arity() != args.len() {
                return Err(Error::ArityMismatch {
                    name: name.clone(),
                    expected: conn.arity(),
                    got: args.len(),
                });
            }
            let rows = args
                .iter()
                .map(|a| eval_rows(sig, m, a))
                .collect::<Result<Vec<_>>>()?;
            let mut buf = vec![0; rows.len()];
            let local: Vec<Label> = m
                .worlds()
                .map(|v| {
                    for (slot, row) in buf.iter_mut().zip(&rows) {
                        *slot = row[v];
                    }
                    conn.apply(&buf)
                })
                .collect();
            Ok(m.worlds()
                .map(|u| {
                    m.adjacency()[u]
                        .iter()
                        .map(|&v| local[v])
                        .min()
                        .unwrap_or(sig.n())
                })
                .collect())
        }
        Formula::Box(_) | Formula::Dia(_) => Err(Error::ModalFormula(f.to_string())),
    }
}

/// mvIL value of a modal-free formula at world `u`.
pub fn eval_mvil(sig: &Signature, m: &MvilInterpretation, u: usize, f: &Formula) -> Result<Label> {
    ensure_modal_free(f)?;
    m.0.successors(u)?;
    Ok(eval_rows(sig, &m.0, f)?[u])
}

/// First world of `m` refuting `s` under mvIL evaluation.
pub fn mvil_refuting_world(sig: &Signature, m: &MvilInterpretation, s: &Sequent) -> Result<Option<usize>> {
    let side = |set: &std::collections::BTreeSet<LabelledFormula>| {
        set.iter()
            .map(|lf| Ok((eval_rows(sig, &m.0, &lf.formula)?, lf.label)))
            .collect::<Result<Vec<_>>>()
    };
    let ant = side(&s.antecedent)?;
    let succ = side(&s.succedent)?;
    Ok(m.0.worlds().find(|&u| {
        ant.iter().all(|(row, k)| row[u] == *k) && !succ.iter().any(|(row, k)| row[u] == *k)
    }))
}

/// `p ↦ □p`, `∗(φ…) ↦ □∗(φ^t…)`.
pub fn godel_translate(f: &Formula) -> Result<Formula> {
    ensure_modal_free(f)?;
    Ok(translate(f, &|_| false))
}

/// As [`godel_translate`], but without the outer `□` on connectives that
/// are monotone in every argument.
pub fn godel_translate_optimized(f: &Formula, sig: &Signature) -> Result<Formula> {
    ensure_modal_free(f)?;
    f.check(sig)?;
    Ok(translate(f, &|name| {
        sig.get(name).is_some_and(monotone_connective)
    }))
}

fn translate(f: &Formula, skip_box: &dyn Fn(&str) -> bool) -> Formula {
    match f {
        Formula::Var(_) => f.clone().boxed(),
        Formula::Apply(name, args) => {
            let inner = Formula::Apply(name.clone(), args.iter().map(|a| translate(a, skip_box)).collect());
            if skip_box(name) {
                inner
            } else {
                inner.boxed()
            }
        }
        Formula::Box(_) | Formula::Dia(_) => unreachable!("checked modal-free"),
    }
}

/// Translates every formula of a sequent; `sig` selects the optimized
/// translation.
pub fn translate_sequent(s: &Sequent, optimized: Option<&Signature>) -> Result<Sequent> {
    let side = |set: &std::collections::BTreeSet<LabelledFormula>| {
        set.iter()
            .map(|lf| {
                let formula = match optimized {
                    Some(sig) => godel_translate_optimized(&lf.formula, sig)?,
                    None => godel_translate(&lf.formula)?,
                };
                Ok(LabelledFormula::new(formula, lf.label))
            })
            .collect::<Result<_>>()
    };
    Ok(Sequent {
        antecedent: side(&s.antecedent)?,
        succedent: side(&s.succedent)?,
    })
}

/// True when raising any argument never lowers the value.
pub fn monotone_connective(conn: &Connective) -> bool {
    let n = conn.domain_size();
    tuples(n, conn.arity()).all(|args| {
        let here = conn.apply(&args);
        (0..args.len()).all(|i| {
            if args[i] == n {
                return true;
            }
            let mut up = args.clone();
            up[i] += 1;
            here <= conn.apply(&up)
        })
    })
}

/// Same frame, with each variable replaced by the value of its box.
pub fn hat_model(m: &KripkeModel) -> Result<MvilInterpretation> {
    if let Some(v) = frame_violation(m, FrameClass::Preorder) {
        return Err(Error::OutsideFrameClass(v.property));
    }
    let mut hat = m.clone();
    for (var, row) in m.valuation() {
        let boxed = m
            .worlds()
            .map(|u| m.adjacency()[u].iter().map(|&v| row[v]).min().expect("reflexive"))
            .collect();
        hat.set_row(var, boxed)?;
    }
    MvilInterpretation::new(hat)
}

/// All mvIL interpretations with exactly `worlds` worlds over `vars`.
pub fn enumerate_interpretations(
    vars: &[String],
    n: Label,
    worlds: usize,
    ceiling: u64,
) -> Result<Vec<MvilInterpretation>> {
    let space = crate::decision::enumerate_models(vars, n, worlds, FrameClass::Preorder, ceiling)?;
    Ok(space
        .iter()
        .filter(valuation_monotone)
        .map(MvilInterpretation)
        .collect())
}

/// A mvIL interpretation with at most `bound` worlds satisfying `sigma` and
/// refuting `goal`, with the refuting world.
pub fn mvil_countermodel(
    sig: &Signature,
    sigma: &[Sequent],
    goal: &Sequent,
    bound: usize,
    config: SearchConfig,
) -> Result<Option<(MvilInterpretation, usize)>> {
    let vars: Vec<String> = sigma
        .iter()
        .chain([goal])
        .flat_map(|s| s.vars())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .map(str::to_string)
        .collect();
    for worlds in 1..=bound {
        let models = enumerate_interpretations(&vars, sig.n(), worlds, config.ceiling)?;
        let found = exec::find_first(config.exec, models.len(), |i| {
            let m = &models[i];
            let holds = sigma
                .iter()
                .all(|h| matches!(mvil_refuting_world(sig, m, h), Ok(None)));
            if !holds {
                return None;
            }
            match mvil_refuting_world(sig, m, goal) {
                Ok(Some(u)) => Some(Ok((m.clone(), u))),
                Ok(None) => None,
                Err(e) => Some(Err(e)),
            }
        });
        if let Some(r) = found {
            return r.map(Some);
        }
    }
    Ok(None)
}
