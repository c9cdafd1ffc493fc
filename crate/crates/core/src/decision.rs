//! The logics `mv-K` … `mv-S5`, exhaustive model enumeration, and the
//! bounded countermodel search that decides sequent entailment.
//!
//! A countermodel found at any size is conclusive. When no countermodel
//! exists up to the filtration bound `n^|Φ|`, where `Φ` is the subformula
//! closure of the inputs, the entailment is valid: every countermodel
//! filters down to one with at most `n^|Φ|` worlds in the same frame class.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::domain::{Label, Signature};
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::filtration::FiltrationRule;
use crate::formula::{subformula_closure, Sequent};
use crate::proofs::Scheme;
use crate::semantics::{frame_check, model_satisfies, refuting_world, Evaluator, FrameClass, KripkeModel};

/// Default cap on the number of models one search may enumerate.
pub const DEFAULT_CEILING: u64 = 10_000_000;

/// A many-valued normal modal logic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LogicId {
    K,
    D,
    T,
    K4,
    S4,
    B,
    S5,
}

impl LogicId {
    pub const ALL: [LogicId; 7] = [
        LogicId::K,
        LogicId::D,
        LogicId::T,
        LogicId::K4,
        LogicId::S4,
        LogicId::B,
        LogicId::S5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LogicId::K => "mv-K",
            LogicId::D => "mv-D",
            LogicId::T => "mv-T",
            LogicId::K4 => "mv-K4",
            LogicId::S4 => "mv-S4",
            LogicId::B => "mv-B",
            LogicId::S5 => "mv-S5",
        }
    }

    /// Accepts `mv-S4`, `S4` or `s4`.
    pub fn from_name(name: &str) -> Option<Self> {
        let bare = name
            .strip_prefix("mv-")
            .or_else(|| name.strip_prefix("MV-"))
            .unwrap_or(name);
        Self::ALL
            .into_iter()
            .find(|l| l.name()[3..].eq_ignore_ascii_case(bare))
    }

    pub fn frame_class(self) -> FrameClass {
        match self {
            LogicId::K => FrameClass::Any,
            LogicId::D => FrameClass::Serial,
            LogicId::T => FrameClass::Reflexive,
            LogicId::K4 => FrameClass::Transitive,
            LogicId::S4 => FrameClass::Preorder,
            LogicId::B => FrameClass::Symmetric,
            LogicId::S5 => FrameClass::Equivalence,
        }
    }

    /// Extension axiom schemes added to `mv-K`.
    pub fn schemes(self) -> &'static [Scheme] {
        use Scheme::*;
        match self {
            LogicId::K => &[],
            LogicId::D => &[Seriality],
            LogicId::T => &[ReflexiveBox, ReflexiveDia],
            LogicId::K4 => &[TransitiveBox, TransitiveDia],
            LogicId::S4 => &[ReflexiveBox, ReflexiveDia, TransitiveBox, TransitiveDia],
            LogicId::B => &[SymmetricBox, SymmetricDia],
            LogicId::S5 => &[ReflexiveBox, ReflexiveDia, EuclideanDia, EuclideanBox],
        }
    }

    pub fn filtration_rule(self) -> FiltrationRule {
        match self {
            LogicId::K | LogicId::D | LogicId::T => FiltrationRule::Least,
            LogicId::K4 => FiltrationRule::Transitive,
            LogicId::S4 => FiltrationRule::Preorder,
            LogicId::B => FiltrationRule::Symmetric,
            LogicId::S5 => FiltrationRule::Equivalence,
        }
    }
}

impl fmt::Display for LogicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `n^|Φ|` for `Φ` the subformula closure of every formula in `sigma` and `goal`.
///
/// Filtration through `Φ` leaves at most one world per distinct value
/// vector on `Φ`, so a countermodel, if any, has one of at most this size.
pub fn filtration_bound(sigma: &[Sequent], goal: &Sequent, n: Label) -> BigUint {
    let phi = subformula_closure(sigma.iter().chain([goal]).flat_map(Sequent::formulas));
    BigUint::from(n).pow(phi.len() as u32)
}

/// Every model with a fixed number of worlds, relation in a frame class and
/// valuation over a fixed variable list, addressable by index.
///
/// Order is relation-major: relations by increasing edge bitmask (bit
/// `u·w + v` for edge `u → v`), then valuations in lexicographic order of
/// the rows `vars[0]`, `vars[1]`, ….
#[derive(Debug, Clone)]
pub struct ModelSpace {
    vars: Vec<String>,
    n: Label,
    worlds: usize,
    relations: Vec<Vec<Vec<usize>>>,
    valuations: usize,
}

impl ModelSpace {
    pub fn len(&self) -> usize {
        self.relations.len() * self.valuations
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    pub fn valuation_count(&self) -> usize {
        self.valuations
    }

    pub fn get(&self, idx: usize) -> KripkeModel {
        let relation = &self.relations[idx / self.valuations];
        let mut code = idx % self.valuations;
        let mut m = KripkeModel::from_successors(relation.clone())
            .expect("enumerated relations are well-formed");
        let n = self.n as usize;
        let mut rows = vec![vec![1 as Label; self.worlds]; self.vars.len()];
        for slot in rows.iter_mut().flatten().rev() {
            *slot = (code % n) as Label + 1;
            code /= n;
        }
        for (var, row) in self.vars.iter().zip(rows) {
            m.set_row(var, row).expect("row length matches");
        }
        m
    }

    pub fn iter(&self) -> impl Iterator<Item = KripkeModel> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }
}

/// All models with exactly `worlds` worlds over `vars`, with relation in `class`.
///
/// Fails when either the `2^(w²)` candidate relations or the resulting
/// number of models exceeds `ceiling`.
pub fn enumerate_models(
    vars: &[String],
    n: Label,
    worlds: usize,
    class: FrameClass,
    ceiling: u64,
) -> Result<ModelSpace> {
    assert!(worlds >= 1, "a model needs at least one world");
    let bits = worlds * worlds;
    let candidates: u128 = if bits >= 127 { u128::MAX } else { 1u128 << bits };
    if candidates > ceiling as u128 {
        return Err(Error::CeilingExceeded {
            ceiling,
            needed: candidates,
        });
    }
    let valuations = (n as u128)
        .checked_pow((worlds * vars.len()) as u32)
        .unwrap_or(u128::MAX);
    if valuations > ceiling as u128 {
        return Err(Error::CeilingExceeded {
            ceiling,
            needed: valuations,
        });
    }
    let relations: Vec<Vec<Vec<usize>>> = (0..candidates as u64)
        .filter_map(|mask| {
            let succ: Vec<Vec<usize>> = (0..worlds)
                .map(|u| {
                    (0..worlds)
                        .filter(|&v| mask >> (u * worlds + v) & 1 == 1)
                        .collect()
                })
                .collect();
            let m = KripkeModel::from_successors(succ.clone()).ok()?;
            frame_check(&m, class).then_some(succ)
        })
        .collect();
    let total = relations.len() as u128 * valuations;
    if total > ceiling as u128 {
        return Err(Error::CeilingExceeded {
            ceiling,
            needed: total,
        });
    }
    Ok(ModelSpace {
        vars: vars.to_vec(),
        n,
        worlds,
        relations,
        valuations: valuations as usize,
    })
}

/// Resource settings for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of models a single search may enumerate in total.
    pub ceiling: u64,
    pub exec: Exec,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            ceiling: DEFAULT_CEILING,
            exec: Exec::default(),
        }
    }
}

impl SearchConfig {
    pub fn sequential(self) -> Self {
        Self {
            exec: Exec::Sequential,
            ..self
        }
    }
}

/// Result of a bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecisionOutcome {
    /// A model of the frame class satisfying `Σ` whose `world` refutes the goal.
    Countermodel { model: KripkeModel, world: usize },
    /// No countermodel with at most this many worlds.
    ValidUpTo(usize),
    /// No countermodel up to a bound at or past the filtration bound.
    ProvedValid { bound: usize },
    /// The ceiling stopped the search; sizes up to `searched_up_to` were exhausted.
    Aborted { searched_up_to: usize, ceiling: u64 },
}

impl DecisionOutcome {
    pub fn is_countermodel(&self) -> bool {
        matches!(self, DecisionOutcome::Countermodel { .. })
    }

    /// True for `ValidUpTo` and `ProvedValid`.
    pub fn is_valid_so_far(&self) -> bool {
        matches!(
            self,
            DecisionOutcome::ValidUpTo(_) | DecisionOutcome::ProvedValid { .. }
        )
    }
}

fn input_vars(sigma: &[Sequent], goal: &Sequent) -> Vec<String> {
    let vars: BTreeSet<&str> = sigma
        .iter()
        .chain([goal])
        .flat_map(|s| s.vars())
        .collect();
    vars.into_iter().map(str::to_string).collect()
}

/// Searches models of `class` with `1..=bound` worlds for one that satisfies
/// `sigma` but not `goal`. Never upgrades to `ProvedValid`.
pub fn search_countermodel(
    sig: &Signature,
    sigma: &[Sequent],
    goal: &Sequent,
    class: FrameClass,
    bound: usize,
    config: SearchConfig,
) -> Result<DecisionOutcome> {
    let mut ev = Evaluator::new(sig);
    let hyps = sigma
        .iter()
        .map(|s| ev.compile_sequent(s))
        .collect::<Result<Vec<_>>>()?;
    let target = ev.compile_sequent(goal)?;
    let vars = input_vars(sigma, goal);
    let mut spent: u128 = 0;
    for worlds in 1..=bound {
        let remaining = (config.ceiling as u128).saturating_sub(spent);
        let space = match enumerate_models(&vars, sig.n(), worlds, class, remaining as u64) {
            Ok(space) => space,
            Err(Error::CeilingExceeded { .. }) => {
                return Ok(DecisionOutcome::Aborted {
                    searched_up_to: worlds - 1,
                    ceiling: config.ceiling,
                })
            }
            Err(e) => return Err(e),
        };
        spent += space.len() as u128;
        let found = exec::find_first(config.exec, space.len(), |idx| {
            let m = space.get(idx);
            let values = ev.evaluate(&m);
            let world = target.refuting_world(&values)?;
            hyps.iter()
                .all(|h| h.refuting_world(&values).is_none())
                .then_some((m, world))
        });
        if let Some((model, world)) = found {
            assert!(frame_check(&model, class), "countermodel outside {class}");
            assert!(model_satisfies(sig, &model, sigma)?, "countermodel violates Σ");
            assert!(
                refuting_world(sig, &model, goal)?.is_some(),
                "countermodel satisfies the goal"
            );
            return Ok(DecisionOutcome::Countermodel { model, world });
        }
    }
    Ok(DecisionOutcome::ValidUpTo(bound))
}

/// Decides `Σ ⊨_L goal` by countermodel search over `1..=bound` worlds.
pub fn decide(
    sig: &Signature,
    sigma: &[Sequent],
    goal: &Sequent,
    logic: LogicId,
    bound: usize,
    config: SearchConfig,
) -> Result<DecisionOutcome> {
    let outcome = search_countermodel(sig, sigma, goal, logic.frame_class(), bound, config)?;
    Ok(match outcome {
        DecisionOutcome::ValidUpTo(b) if BigUint::from(b) >= filtration_bound(sigma, goal, sig.n()) => {
            DecisionOutcome::ProvedValid { bound: b }
        }
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula;

    fn p() -> Formula {
        Formula::var("p")
    }

    fn sig3() -> Signature {
        Signature::lukasiewicz(3).unwrap()
    }

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn logic_names_round_trip() {
        for l in LogicId::ALL {
            assert_eq!(LogicId::from_name(l.name()), Some(l));
        }
        assert_eq!(LogicId::from_name("s4"), Some(LogicId::S4));
        assert_eq!(LogicId::from_name("mv-Q"), None);
    }

    #[test]
    fn bound_examples() {
        let goal = Sequent::new([p().boxed().labelled(1)], [p().labelled(1)]);
        // Φ = {□p, p}
        assert_eq!(filtration_bound(&[], &goal, 3), BigUint::from(9u32));
        let goal = Sequent::new([p().labelled(1)], []);
        assert_eq!(filtration_bound(&[], &goal, 2), BigUint::from(2u32));
        let imp = Formula::apply("imp", vec![p(), Formula::var("q")]);
        let goal = Sequent::new(
            [imp.boxed().labelled(3), p().boxed().labelled(3)],
            [Formula::var("q").boxed().labelled(3)],
        );
        assert_eq!(filtration_bound(&[], &goal, 3), BigUint::from(729u32));
    }

    #[test]
    fn enumeration_counts() {
        let space = enumerate_models(&vars(&["p"]), 2, 1, FrameClass::Any, DEFAULT_CEILING).unwrap();
        assert_eq!(space.len(), 4);
        let serial = enumerate_models(&vars(&["p"]), 2, 1, FrameClass::Serial, DEFAULT_CEILING).unwrap();
        assert_eq!(serial.relation_count(), 1);
        assert!(serial.get(0).has_edge(0, 0));
        let space = enumerate_models(&vars(&["p"]), 3, 2, FrameClass::Any, DEFAULT_CEILING).unwrap();
        assert_eq!((space.relation_count(), space.valuation_count()), (16, 9));
        assert_eq!(space.len(), 144);
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let space = enumerate_models(&vars(&["p", "q"]), 2, 2, FrameClass::Any, DEFAULT_CEILING).unwrap();
        let all: std::collections::HashSet<_> = space.iter().collect();
        assert_eq!(all.len(), space.len());
    }

    #[test]
    fn ceiling_is_enforced() {
        let err = enumerate_models(&vars(&["p"]), 3, 3, FrameClass::Any, 1000).unwrap_err();
        assert!(matches!(err, Error::CeilingExceeded { .. }));
    }

    #[test]
    fn decide_examples() {
        let sig = sig3();
        let t_instance = Sequent::new([p().boxed().labelled(3)], [p().labelled(3)]);
        let out = decide(&sig, &[], &t_instance, LogicId::K, 1, SearchConfig::default()).unwrap();
        let DecisionOutcome::Countermodel { model, world } = out else {
            panic!("expected countermodel, got {out:?}");
        };
        assert_eq!(model.world_count(), 1);
        assert!(model.successors(0).unwrap().is_empty());
        assert_eq!((model.value(0, "p"), world), (1, 0));

        let out = decide(&sig, &[], &t_instance, LogicId::T, 3, SearchConfig::default()).unwrap();
        assert_eq!(out, DecisionOutcome::ValidUpTo(3));

        let box_is_n = Sequent::new(
            [p().boxed().labelled(3)],
            [p().dia().labelled(1), p().dia().labelled(3)],
        );
        let out = decide(&sig, &[], &box_is_n, LogicId::K, 3, SearchConfig::default()).unwrap();
        assert_eq!(out, DecisionOutcome::ValidUpTo(3));
    }

    #[test]
    fn small_closure_gets_proved_valid() {
        // Φ = {p}, bound 2^1 = 2
        let sig = Signature::lukasiewicz(2).unwrap();
        let goal = Sequent::new([], [p().labelled(1), p().labelled(2)]);
        let out = decide(&sig, &[], &goal, LogicId::K, 2, SearchConfig::default()).unwrap();
        assert_eq!(out, DecisionOutcome::ProvedValid { bound: 2 });
    }

    #[test]
    fn hypotheses_restrict_the_search() {
        let sig = sig3();
        // Σ forces p = 3 everywhere, so □p → p at label 3 cannot fail at a dead end
        let sigma = vec![Sequent::new([], [p().labelled(3)])];
        let goal = Sequent::new([p().boxed().labelled(3)], [p().labelled(3)]);
        let out = decide(&sig, &sigma, &goal, LogicId::K, 2, SearchConfig::default()).unwrap();
        assert_eq!(out, DecisionOutcome::ValidUpTo(2));
    }

    #[test]
    fn ceiling_gives_partial_result() {
        let sig = sig3();
        let goal = Sequent::new([p().boxed().labelled(3)], [p().dia().labelled(3)]);
        let config = SearchConfig {
            ceiling: 100,
            ..SearchConfig::default()
        };
        let out = decide(&sig, &[], &goal, LogicId::D, 3, config).unwrap();
        assert_eq!(
            out,
            DecisionOutcome::Aborted {
                searched_up_to: 2,
                ceiling: 100
            }
        );
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let sig = sig3();
        let goal = Sequent::new([p().boxed().boxed().labelled(1)], [p().boxed().labelled(1)]);
        let a = decide(&sig, &[], &goal, LogicId::K, 3, SearchConfig::default()).unwrap();
        let b = decide(&sig, &[], &goal, LogicId::K, 3, SearchConfig::default().sequential()).unwrap();
        assert!(a.is_countermodel());
        assert_eq!(a, b);
    }
}
