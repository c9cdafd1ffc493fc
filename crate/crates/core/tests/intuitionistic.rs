use mvk::formula::Sequent;
use mvk::gen::{random_formula, random_interpretation, random_model, seeded};
use mvk::intuitionistic::{
    eval_mvil, godel_translate, godel_translate_optimized, hat_model, mvil_countermodel, translate_sequent,
    MvilInterpretation,
};
use mvk::semantics::eval;
use mvk::{decide, Formula, FrameClass, LabelledFormula, LogicId, SearchConfig, Signature};

const VARS: [&str; 2] = ["p", "q"];

#[test]
fn hat_model_correspondence() {
    let sig = Signature::lukasiewicz(3).unwrap();
    let mut rng = seeded(0x1A7);
    for i in 0..200 {
        let m = random_model(&mut rng, 1 + i % 4, &VARS, 3, FrameClass::Preorder, 0.35);
        let hat = hat_model(&m).unwrap();
        for _ in 0..10 {
            let phi = random_formula(&mut rng, &sig, &VARS, 3, false);
            let t = godel_translate(&phi).unwrap();
            for u in m.worlds() {
                assert_eq!(eval_mvil(&sig, &hat, u, &phi).unwrap(), eval(&sig, &m, u, &t).unwrap(), "{phi} at {u}\n{m}");
            }
        }
    }
}

#[test]
fn values_rise_along_the_relation() {
    let sig = Signature::lukasiewicz(3).unwrap();
    let mut rng = seeded(3);
    for i in 0..100 {
        let m = MvilInterpretation::new(random_interpretation(&mut rng, 1 + i % 4, &VARS, 3, 0.4)).unwrap();
        let phi = random_formula(&mut rng, &sig, &VARS, 3, false);
        for (u, v) in m.model().edges() {
            assert!(eval_mvil(&sig, &m, u, &phi).unwrap() <= eval_mvil(&sig, &m, v, &phi).unwrap());
        }
    }
}

#[test]
fn optimized_translation_agrees() {
    let sig = Signature::lukasiewicz(3).unwrap();
    let mut rng = seeded(0x0F7);
    for i in 0..200 {
        let m = random_model(&mut rng, 1 + i % 4, &VARS, 3, FrameClass::Preorder, 0.35);
        let phi = random_formula(&mut rng, &sig, &VARS, 3, false);
        let full = godel_translate(&phi).unwrap();
        let opt = godel_translate_optimized(&phi, &sig).unwrap();
        for u in m.worlds() {
            assert_eq!(eval(&sig, &m, u, &full).unwrap(), eval(&sig, &m, u, &opt).unwrap(), "{phi}");
        }
    }
}

fn pool() -> Vec<LabelledFormula> {
    let p = Formula::var("p");
    let neg = |f: Formula| Formula::apply("neg", vec![f]);
    let formulas = [
        p.clone(),
        neg(p.clone()),
        neg(neg(p.clone())),
        Formula::apply("imp", vec![p.clone(), neg(p.clone())]),
        Formula::apply("or", vec![p.clone(), neg(p)]),
    ];
    formulas
        .iter()
        .flat_map(|f| (1..=2).map(move |k| f.clone().labelled(k)))
        .collect()
}

fn small_sequents() -> Vec<Sequent> {
    let sides: Vec<Vec<LabelledFormula>> = std::iter::once(vec![]).chain(pool().into_iter().map(|lf| vec![lf])).collect();
    sides
        .iter()
        .flat_map(|a| sides.iter().map(move |b| Sequent::new(a.clone(), b.clone())))
        .collect()
}

/// Entailment from at most one hypothesis agrees between mvIL and the
/// translated `mv-S4` problem on every instance with `n = 2` and at most two
/// worlds.
#[test]
fn entailment_transfer_exhaustive() {
    let sig = Signature::lukasiewicz(2).unwrap();
    let config = SearchConfig::default().sequential();
    let sequents = small_sequents();
    let hypotheses: Vec<Vec<Sequent>> = std::iter::once(vec![]).chain(sequents.iter().map(|s| vec![s.clone()])).collect();
    let (mut valid, mut invalid) = (0, 0);
    for sigma in &hypotheses {
        let sigma_t: Vec<Sequent> = sigma.iter().map(|s| translate_sequent(s, None).unwrap()).collect();
        let sigma_o: Vec<Sequent> = sigma.iter().map(|s| translate_sequent(s, Some(&sig)).unwrap()).collect();
        for goal in &sequents {
            let mvil = mvil_countermodel(&sig, sigma, goal, 2, config).unwrap().is_none();
            let goal_t = translate_sequent(goal, None).unwrap();
            let s4 = decide(&sig, &sigma_t, &goal_t, LogicId::S4, 2, config).unwrap().is_valid_so_far();
            assert_eq!(mvil, s4, "{sigma:?} ⊨ {goal}");
            let goal_o = translate_sequent(goal, Some(&sig)).unwrap();
            let opt = decide(&sig, &sigma_o, &goal_o, LogicId::S4, 2, config).unwrap().is_valid_so_far();
            assert_eq!(mvil, opt, "optimized: {sigma:?} ⊨ {goal}");
            if mvil {
                valid += 1;
            } else {
                invalid += 1;
            }
        }
    }
    assert!(valid > 1000 && invalid > 1000, "{valid} {invalid}");
}

#[test]
fn excluded_middle_fails_intuitionistically() {
    let sig = Signature::lukasiewicz(2).unwrap();
    let p = Formula::var("p");
    let lem = Formula::apply("or", vec![p.clone(), Formula::apply("neg", vec![p])]);
    let goal = Sequent::new([], [lem.labelled(2)]);
    let (m, u) = mvil_countermodel(&sig, &[], &goal, 2, SearchConfig::default()).unwrap().unwrap();
    assert_eq!(m.model().world_count(), 2);
    assert!(u < 2);
    let classical = decide(&sig, &[], &goal, LogicId::K, 2, SearchConfig::default()).unwrap();
    assert!(classical.is_valid_so_far());
}
