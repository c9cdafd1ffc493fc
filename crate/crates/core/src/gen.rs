//! Seeded random models, formulas and sequents for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::domain::{Connective, Label, Signature};
use crate::formula::{Formula, LabelledFormula, Sequent};
use crate::semantics::{FrameClass, KripkeModel};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A model with `worlds` worlds in `class`: random edges, each present with
/// probability `density`, closed under the class properties.
pub fn random_model<R: Rng>(
    rng: &mut R,
    worlds: usize,
    vars: &[&str],
    n: Label,
    class: FrameClass,
    density: f64,
) -> KripkeModel {
    let mut succ: Vec<Vec<usize>> = (0..worlds)
        .map(|_| (0..worlds).filter(|_| rng.gen_bool(density)).collect())
        .collect();
    class.close(&mut succ);
    let mut m = KripkeModel::from_successors(succ).expect("worlds ≥ 1");
    for var in vars {
        let row = (0..worlds).map(|_| rng.gen_range(1..=n)).collect();
        m.set_row(var, row).expect("row length matches");
    }
    m
}

/// A preordered model whose variable values never drop along the relation.
pub fn random_interpretation<R: Rng>(rng: &mut R, worlds: usize, vars: &[&str], n: Label, density: f64) -> KripkeModel {
    let mut m = random_model(rng, worlds, vars, n, FrameClass::Preorder, density);
    for var in vars {
        let base = m.row(var).expect("set above").to_vec();
        let row = m
            .worlds()
            .map(|v| {
                m.worlds()
                    .filter(|&u| m.has_edge(u, v))
                    .map(|u| base[u])
                    .max()
                    .expect("reflexive")
            })
            .collect();
        m.set_row(var, row).expect("row length matches");
    }
    m
}

/// A formula of depth at most `depth` over `vars` and the connectives of
/// `sig`; `modal` allows `Box` and `Dia`.
pub fn random_formula<R: Rng>(rng: &mut R, sig: &Signature, vars: &[&str], depth: usize, modal: bool) -> Formula {
    let conns: Vec<&Connective> = sig.connectives().collect();
    let constants: Vec<&&Connective> = conns.iter().filter(|c| c.arity() == 0).collect();
    if depth == 0 || rng.gen_bool(0.25) {
        if !constants.is_empty() && rng.gen_bool(0.1) {
            let c = constants.choose(rng).expect("nonempty");
            return Formula::apply(c.name(), vec![]);
        }
        return Formula::var(*vars.choose(rng).expect("at least one variable"));
    }
    let modal_choice = if modal { 2 } else { 0 };
    let options = conns.len() + modal_choice;
    if options == 0 {
        return Formula::var(*vars.choose(rng).expect("at least one variable"));
    }
    let pick = rng.gen_range(0..options);
    if pick < conns.len() {
        let c = conns[pick];
        let args = (0..c.arity())
            .map(|_| random_formula(rng, sig, vars, depth - 1, modal))
            .collect();
        Formula::apply(c.name(), args)
    } else if pick == conns.len() {
        random_formula(rng, sig, vars, depth - 1, modal).boxed()
    } else {
        random_formula(rng, sig, vars, depth - 1, modal).dia()
    }
}

/// A sequent with up to `max_side` labelled formulas on each side.
pub fn random_sequent<R: Rng>(
    rng: &mut R,
    sig: &Signature,
    vars: &[&str],
    depth: usize,
    max_side: usize,
    modal: bool,
) -> Sequent {
    let n = sig.n();
    let side = |rng: &mut R| -> Vec<LabelledFormula> {
        let len = rng.gen_range(0..=max_side);
        (0..len)
            .map(|_| {
                let f = random_formula(rng, sig, vars, depth, modal);
                LabelledFormula::new(f, rng.gen_range(1..=n))
            })
            .collect()
    };
    let antecedent = side(rng);
    let succedent = side(rng);
    Sequent::new(antecedent, succedent)
}
