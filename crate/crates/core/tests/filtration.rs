use std::collections::BTreeSet;

use mvk::filtration::{equiv_classes, filter_model, filter_with_rule, verify_filtration, Representative};
use mvk::formula::subformula_closure;
use mvk::gen::{random_model, seeded};
use mvk::semantics::{eval, frame_check};
use mvk::{Formula, LogicId, Signature};

const LOGICS: [LogicId; 7] = [
    LogicId::K,
    LogicId::D,
    LogicId::T,
    LogicId::K4,
    LogicId::S4,
    LogicId::B,
    LogicId::S5,
];

fn phi() -> BTreeSet<Formula> {
    let p = Formula::var("p");
    let q = Formula::var("q");
    subformula_closure(&[p.clone().boxed(), q.clone().dia(), Formula::apply("imp", vec![p, q])])
}

#[test]
fn preserves_values_and_class_on_random_models() {
    let sig = Signature::lukasiewicz(3).unwrap();
    let phi = phi();
    assert_eq!(phi.len(), 5);
    for logic in LOGICS {
        let mut rng = seeded(0xF17 + logic as u64);
        for i in 0..100 {
            let worlds = 1 + i % 5;
            let m = random_model(&mut rng, worlds, &["p", "q"], 3, logic.frame_class(), 0.35);
            let report = verify_filtration(&sig, &m, &phi, logic).unwrap();
            assert!(report.passed(), "{logic:?} {report}\n{m}");
            assert!(report.class_count <= worlds.min(3usize.pow(phi.len() as u32)));
        }
    }
}

#[test]
fn representative_independence() {
    let sig = Signature::lukasiewicz(3).unwrap();
    let phi = phi();
    for logic in LOGICS {
        let mut rng = seeded(0xAB + logic as u64);
        for i in 0..100 {
            let m = random_model(&mut rng, 1 + i % 5, &["p", "q"], 3, logic.frame_class(), 0.35);
            let rule = logic.filtration_rule();
            let least = filter_with_rule(&sig, &m, &phi, rule, Representative::Least).unwrap();
            let greatest = filter_with_rule(&sig, &m, &phi, rule, Representative::Greatest).unwrap();
            assert_eq!(least.values, greatest.values);
            assert_eq!(least.model.adjacency(), greatest.model.adjacency(), "{logic:?}\n{m}");
            for f in &least.phi {
                for c in least.model.worlds() {
                    assert_eq!(
                        eval(&sig, &least.model, c, f).unwrap(),
                        eval(&sig, &greatest.model, c, f).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn filtering_twice_changes_nothing() {
    let sig = Signature::lukasiewicz(3).unwrap();
    let phi = phi();
    let mut rng = seeded(99);
    for logic in LOGICS {
        for i in 0..30 {
            let m = random_model(&mut rng, 1 + i % 5, &["p", "q"], 3, logic.frame_class(), 0.4);
            let once = filter_model(&sig, &m, &phi, logic).unwrap();
            assert!(frame_check(&once.model, logic.frame_class()));
            let twice = filter_model(&sig, &once.model, &phi, logic).unwrap();
            assert_eq!(twice.class_count(), once.class_count());
            assert_eq!(twice.values, once.values);
        }
    }
}

#[test]
fn seriality_survives_least_filtration() {
    let sig = Signature::lukasiewicz(3).unwrap();
    let phi = phi();
    let mut rng = seeded(5);
    for i in 0..50 {
        let m = random_model(&mut rng, 1 + i % 5, &["p", "q"], 3, mvk::FrameClass::Serial, 0.3);
        let f = filter_model(&sig, &m, &phi, LogicId::D).unwrap();
        assert!(frame_check(&f.model, mvk::FrameClass::Serial));
        let partition = equiv_classes(&sig, &m, &phi).unwrap();
        for (u, v) in m.edges() {
            assert!(f.model.has_edge(partition.class_of[u], partition.class_of[v]));
        }
    }
}
