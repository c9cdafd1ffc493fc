use std::fmt;

use super::{instantiate_scheme, shifted_out, Derivation, Justification, Step};
use crate::decision::LogicId;
use crate::domain::{Label, LabelSet, Signature};
use crate::formula::{gamma_cross, others, Formula, LabelledFormula, LabelledSet, Sequent};

/// A step that does not follow by its stated rule.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("violation at step {step}: {rule}: {message}")]
pub struct Violation {
    /// 1-based step number, as in proof scripts.
    pub step: usize,
    pub rule: String,
    pub message: String,
}

/// Checks every step in order and reports the first failure.
pub fn check_derivation(d: &Derivation, sig: &Signature) -> Result<(), Violation> {
    for (idx, step) in d.steps.iter().enumerate() {
        let mut premises = Vec::with_capacity(step.premises.len());
        for &p in &step.premises {
            if p >= idx {
                return Err(Violation {
                    step: idx + 1,
                    rule: step.justification.rule_name(),
                    message: format!("premise {} is not an earlier step", p + 1),
                });
            }
            premises.push(&d.steps[p].conclusion);
        }
        check_step(idx, step, &premises, &d.hypotheses, d.logic, sig)?;
    }
    Ok(())
}

/// Checks a single step against its already resolved premises. `index` is
/// the step's 0-based position, used only for reporting.
pub fn check_step(
    index: usize,
    step: &Step,
    premises: &[&Sequent],
    sigma: &[Sequent],
    logic: LogicId,
    sig: &Signature,
) -> Result<(), Violation> {
    let fail = |message: String| Violation {
        step: index + 1,
        rule: step.justification.rule_name(),
        message,
    };
    step.conclusion
        .check(sig)
        .map_err(|e| fail(format!("ill-formed conclusion: {e}")))?;
    let ctx = Ctx {
        n: sig.n(),
        sig,
        conclusion: &step.conclusion,
        premises,
    };
    ctx.check(&step.justification, sigma, logic).map_err(fail)
}

type Check = Result<(), String>;

struct Ctx<'a> {
    n: Label,
    sig: &'a Signature,
    conclusion: &'a Sequent,
    premises: &'a [&'a Sequent],
}

fn show(set: &LabelledSet) -> String {
    let items: Vec<String> = set.iter().map(|lf| lf.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

/// `base ⊆ actual ⊆ base ∪ optional`; the optional part covers a principal
/// formula that was already present in a side context.
fn side_matches(side: &str, actual: &LabelledSet, base: &LabelledSet, optional: &LabelledSet) -> Check {
    if let Some(missing) = base.difference(actual).next() {
        return Err(format!("{side} lacks {missing}"));
    }
    if let Some(extra) = actual.difference(base).find(|lf| !optional.contains(lf)) {
        return Err(format!("{side} has unexpected {extra}"));
    }
    Ok(())
}

fn without(set: &LabelledSet, lf: &LabelledFormula) -> LabelledSet {
    let mut out = set.clone();
    out.remove(lf);
    out
}

fn single(lf: &LabelledFormula) -> LabelledSet {
    LabelledSet::from([lf.clone()])
}

impl Ctx<'_> {
    fn arity(&self, expected: usize) -> Check {
        if self.premises.len() != expected {
            return Err(format!(
                "expects {expected} premise(s), got {}",
                self.premises.len()
            ));
        }
        Ok(())
    }

    fn label(&self, k: Label) -> Check {
        if k == 0 || k > self.n {
            return Err(format!("label {k} outside 1..{}", self.n));
        }
        Ok(())
    }

    fn conclusion_sides(&self, ant: &LabelledSet, succ: &LabelledSet, opt_ant: &LabelledSet, opt_succ: &LabelledSet) -> Check {
        side_matches("conclusion antecedent", &self.conclusion.antecedent, ant, opt_ant)?;
        side_matches("conclusion succedent", &self.conclusion.succedent, succ, opt_succ)
    }

    fn check(&self, just: &Justification, sigma: &[Sequent], logic: LogicId) -> Check {
        match just {
            Justification::Hypothesis(i) => {
                self.arity(0)?;
                let hyp = sigma
                    .get(*i)
                    .ok_or_else(|| format!("no hypothesis {i} (have {})", sigma.len()))?;
                if hyp != self.conclusion {
                    return Err(format!("conclusion differs from hypothesis {hyp}"));
                }
                Ok(())
            }
            Justification::AxiomIdentity => {
                self.arity(0)?;
                let c = self.conclusion;
                if c.antecedent.len() == 1 && c.antecedent == c.succedent {
                    Ok(())
                } else {
                    Err("conclusion is not of the form (φ,k) → (φ,k)".into())
                }
            }
            Justification::AxiomTable => {
                self.arity(0)?;
                self.table_axiom()
            }
            Justification::RuleBox => self.modal(true),
            Justification::RuleDiamond => self.modal(false),
            Justification::LeftShift(lf) => {
                self.arity(1)?;
                self.label(lf.label)?;
                let p = self.premises[0];
                if !p.antecedent.contains(lf) {
                    return Err(format!("premise antecedent lacks {lf}"));
                }
                let ant = without(&p.antecedent, lf);
                let succ: LabelledSet = p.succedent.union(&others(lf, self.n)).cloned().collect();
                self.conclusion_sides(&ant, &succ, &single(lf), &LabelledSet::new())
            }
            Justification::RightShift { formula, from, to } => {
                self.arity(1)?;
                self.label(*from)?;
                self.label(*to)?;
                if from == to {
                    return Err("side condition k′ ≠ k″".into());
                }
                let p = self.premises[0];
                let out = formula.clone().labelled(*from);
                let inn = formula.clone().labelled(*to);
                if !p.succedent.contains(&out) {
                    return Err(format!("premise succedent lacks {out}"));
                }
                let mut ant = p.antecedent.clone();
                ant.insert(inn);
                self.conclusion_sides(&ant, &without(&p.succedent, &out), &LabelledSet::new(), &single(&out))
            }
            Justification::LeftWeaken(lf) | Justification::RightWeaken(lf) => {
                self.arity(1)?;
                self.label(lf.label)?;
                let p = self.premises[0];
                let (mut ant, mut succ) = (p.antecedent.clone(), p.succedent.clone());
                if matches!(just, Justification::LeftWeaken(_)) {
                    ant.insert(lf.clone());
                } else {
                    succ.insert(lf.clone());
                }
                if self.conclusion.antecedent != ant || self.conclusion.succedent != succ {
                    return Err(format!("conclusion is not the premise weakened by {lf}"));
                }
                Ok(())
            }
            Justification::Cut(lf) => {
                self.arity(2)?;
                self.label(lf.label)?;
                let attempt = |left: &Sequent, right: &Sequent| -> Check {
                    if !left.succedent.contains(lf) {
                        return Err(format!("first premise succedent lacks {lf}"));
                    }
                    if !right.antecedent.contains(lf) {
                        return Err(format!("second premise antecedent lacks {lf}"));
                    }
                    let ant = left.antecedent.union(&without(&right.antecedent, lf)).cloned().collect();
                    let succ = without(&left.succedent, lf).union(&right.succedent).cloned().collect();
                    self.conclusion_sides(&ant, &succ, &single(lf), &single(lf))
                };
                let (a, b) = (self.premises[0], self.premises[1]);
                attempt(a, b).or_else(|e| attempt(b, a).map_err(|_| e))
            }
            Justification::Resolution {
                formula,
                first,
                second,
            } => {
                self.arity(2)?;
                self.label(*first)?;
                self.label(*second)?;
                if first == second {
                    return Err("side condition k′ ≠ k″".into());
                }
                let l1 = formula.clone().labelled(*first);
                let l2 = formula.clone().labelled(*second);
                let attempt = |a: &Sequent, b: &Sequent| -> Check {
                    if !a.succedent.contains(&l1) {
                        return Err(format!("first premise succedent lacks {l1}"));
                    }
                    if !b.succedent.contains(&l2) {
                        return Err(format!("second premise succedent lacks {l2}"));
                    }
                    let ant = a.antecedent.union(&b.antecedent).cloned().collect();
                    let succ = without(&a.succedent, &l1).union(&without(&b.succedent, &l2)).cloned().collect();
                    let opt = LabelledSet::from([l1.clone(), l2.clone()]);
                    self.conclusion_sides(&ant, &succ, &LabelledSet::new(), &opt)
                };
                let (a, b) = (self.premises[0], self.premises[1]);
                attempt(a, b).or_else(|e| attempt(b, a).map_err(|_| e))
            }
            Justification::MultiShift { formula, labels } => {
                self.multi_shift(&[(formula.clone(), labels.clone())])
            }
            Justification::SuperMultiShift(pairs) => {
                if pairs.is_empty() {
                    return Err("needs at least one formula".into());
                }
                self.multi_shift(pairs)
            }
            Justification::ExtensionAxiom {
                scheme,
                formula,
                label,
            } => {
                self.arity(0)?;
                if !logic.schemes().contains(scheme) {
                    return Err(format!("scheme {} does not belong to {logic}", scheme.number()));
                }
                let k = match (scheme, label) {
                    (super::Scheme::Seriality, None) => self.n,
                    (super::Scheme::Seriality, Some(_)) => {
                        return Err("scheme 20 takes no label".into())
                    }
                    (_, Some(k)) => *k,
                    (_, None) => return Err("missing label".into()),
                };
                self.label(k)?;
                let expected = instantiate_scheme(*scheme, formula, k, self.n);
                if &expected != self.conclusion {
                    return Err(format!("conclusion is not the instance {expected}"));
                }
                Ok(())
            }
        }
    }

    fn table_axiom(&self) -> Check {
        let c = self.conclusion;
        let shape = "conclusion is not of the form (φ_1,k_1),…,(φ_ℓ,k_ℓ) → (∗(φ_1,…,φ_ℓ),k)";
        let [out] = c.succedent.iter().collect::<Vec<_>>()[..] else {
            return Err(shape.into());
        };
        let Formula::Apply(name, args) = &out.formula else {
            return Err(shape.into());
        };
        let conn = self.sig.connective(name).map_err(|e| e.to_string())?;
        let choices: Vec<Vec<Label>> = args
            .iter()
            .map(|a| {
                c.antecedent
                    .iter()
                    .filter(|lf| &lf.formula == a)
                    .map(|lf| lf.label)
                    .collect()
            })
            .collect();
        if choices.iter().any(Vec::is_empty) {
            return Err(shape.into());
        }
        let mut row = vec![0; args.len()];
        let found = search_rows(&choices, 0, &mut row, &mut |row| {
            let ant: LabelledSet = args
                .iter()
                .zip(row)
                .map(|(a, &k)| a.clone().labelled(k))
                .collect();
            ant == c.antecedent && conn.apply(row) == out.label
        });
        if found {
            Ok(())
        } else {
            Err("no table entry matches the conclusion".into())
        }
    }

    fn modal(&self, is_box: bool) -> Check {
        self.arity(1)?;
        let p = self.premises[0];
        let [principal] = p.antecedent.iter().collect::<Vec<_>>()[..] else {
            return Err("premise antecedent must be a single (φ,k)".into());
        };
        let k = principal.label;
        if is_box && k == self.n {
            return Err("side condition k ≠ n".into());
        }
        if !is_box && k == 1 {
            return Err("side condition k ≠ 1".into());
        }
        if !self.conclusion.succedent.is_empty() {
            return Err("conclusion succedent must be empty".into());
        }
        let wrapped = if is_box {
            principal.formula.clone().boxed()
        } else {
            principal.formula.clone().dia()
        };
        let main = wrapped.labelled(k);
        let ant = &self.conclusion.antecedent;
        if !ant.contains(&main) {
            return Err(format!("conclusion antecedent lacks {main}"));
        }
        let with_main = gamma_cross(ant.iter(), self.n);
        let rest = without(ant, &main);
        let without_main = gamma_cross(rest.iter(), self.n);
        if p.succedent == with_main || p.succedent == without_main {
            Ok(())
        } else {
            Err(format!(
                "premise succedent ≠ Γ^× (expected {})",
                show(&without_main)
            ))
        }
    }

    fn multi_shift(&self, pairs: &[(Formula, LabelSet)]) -> Check {
        for (_, labels) in pairs {
            for &k in labels {
                self.label(k)?;
            }
        }
        let choices: Vec<Vec<Label>> = pairs.iter().map(|(_, ks)| ks.iter().copied().collect()).collect();
        let mut tuples = Vec::new();
        let mut row = vec![0; pairs.len()];
        search_rows(&choices, 0, &mut row, &mut |row| {
            tuples.push(row.to_vec());
            false
        });
        self.arity(tuples.len())?;
        let principals = |t: &[Label]| -> LabelledSet {
            pairs
                .iter()
                .zip(t)
                .map(|((f, _), &k)| f.clone().labelled(k))
                .collect()
        };
        let tuple_principals: Vec<LabelledSet> = tuples.iter().map(|t| principals(t)).collect();
        let candidates: Vec<Vec<usize>> = self
            .premises
            .iter()
            .map(|p| {
                (0..tuples.len())
                    .filter(|&t| tuple_principals[t].is_subset(&p.antecedent))
                    .collect()
            })
            .collect();
        if let Some(i) = candidates.iter().position(Vec::is_empty) {
            return Err(format!(
                "premise {} has no antecedent tuple from the label sets",
                i + 1
            ));
        }
        let mut shifted = LabelledSet::new();
        for (f, ks) in pairs {
            shifted.extend(shifted_out(f, ks, self.n));
        }
        let all_principals: LabelledSet = tuple_principals.iter().flatten().cloned().collect();
        let mut first_err = None;
        let mut used = vec![false; tuples.len()];
        let mut assignment = vec![0; self.premises.len()];
        let ok = assign(&candidates, 0, &mut used, &mut assignment, &mut |assignment| {
            let mut ant = LabelledSet::new();
            let mut succ = shifted.clone();
            for (p, &t) in self.premises.iter().zip(assignment) {
                ant.extend(p.antecedent.difference(&tuple_principals[t]).cloned());
                succ.extend(p.succedent.iter().cloned());
            }
            match self.conclusion_sides(&ant, &succ, &all_principals, &LabelledSet::new()) {
                Ok(()) => true,
                Err(e) => {
                    first_err.get_or_insert(e);
                    false
                }
            }
        });
        if ok {
            Ok(())
        } else {
            Err(first_err.unwrap_or_else(|| "premises do not cover every label tuple".into()))
        }
    }
}

/// Walks the product of `choices`, stopping when `visit` returns true.
fn search_rows(
    choices: &[Vec<Label>],
    depth: usize,
    row: &mut Vec<Label>,
    visit: &mut dyn FnMut(&[Label]) -> bool,
) -> bool {
    if depth == choices.len() {
        return visit(row);
    }
    for &k in &choices[depth] {
        row[depth] = k;
        if search_rows(choices, depth + 1, row, visit) {
            return true;
        }
    }
    false
}

/// Injective assignments of premises to tuples, stopping when `visit`
/// returns true.
fn assign(
    candidates: &[Vec<usize>],
    depth: usize,
    used: &mut [bool],
    out: &mut [usize],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if depth == candidates.len() {
        return visit(out);
    }
    for &t in &candidates[depth] {
        if used[t] {
            continue;
        }
        used[t] = true;
        out[depth] = t;
        let done = assign(candidates, depth + 1, used, out, visit);
        used[t] = false;
        if done {
            return true;
        }
    }
    false
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; {}", self.conclusion, self.justification)?;
        if !self.premises.is_empty() {
            let refs: Vec<String> = self.premises.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, " from {}", refs.join(", "))?;
        }
        Ok(())
    }
}
