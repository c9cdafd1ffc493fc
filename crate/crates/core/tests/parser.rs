use mvk::gen::{random_formula, random_model, random_sequent, seeded};
use mvk::parser::{
    parse_formula, parse_model, parse_proof, parse_sequent, parse_sequents, parse_signature, render_model,
    render_sequents, render_signature, ParseError,
};
use mvk::proofs::fixtures::{signature, FIXTURES, SIGNATURE};
use mvk::{FrameClass, Signature, TruthDomain};

const VARS: [&str; 3] = ["p", "q", "r"];

#[test]
fn fixture_corpus_round_trips() {
    let sig = parse_signature(SIGNATURE).unwrap();
    assert_eq!(sig, Signature::lukasiewicz(3).unwrap());
    assert_eq!(parse_signature(&render_signature(&sig)).unwrap(), sig);
    for fx in FIXTURES {
        let d = fx.parse(&sig).unwrap();
        let text = d.to_string();
        assert_eq!(parse_proof(&text, &sig).unwrap(), d, "{}", fx.name);
        assert_eq!(parse_proof(&text, &sig).unwrap().to_string(), text);
    }
}

#[test]
fn random_formulas_and_sequents_round_trip() {
    let sig = signature();
    let mut rng = seeded(0x9A25);
    for _ in 0..1000 {
        let f = random_formula(&mut rng, &sig, &VARS, 4, true);
        assert_eq!(parse_formula(&f.to_string(), &sig).unwrap(), f);
        let s = random_sequent(&mut rng, &sig, &VARS, 3, 3, true);
        assert_eq!(parse_sequent(&s.to_string(), &sig).unwrap(), s);
    }
    let batch: Vec<_> = (0..50).map(|_| random_sequent(&mut rng, &sig, &VARS, 2, 2, true)).collect();
    assert_eq!(parse_sequents(&render_sequents(&batch), &sig).unwrap(), batch);
}

#[test]
fn random_models_round_trip() {
    let mut rng = seeded(0x30D);
    for i in 0..1000 {
        let n = 2 + (i % 4) as u8;
        let class = FrameClass::ALL[i % FrameClass::ALL.len()];
        let m = random_model(&mut rng, 1 + i % 6, &VARS[..1 + i % 3], n, class, 0.3);
        let domain = TruthDomain::new(n as usize).unwrap();
        assert_eq!(parse_model(&render_model(&m), domain).unwrap(), m);
    }
}

#[test]
fn random_signatures_round_trip() {
    use mvk::Connective;
    use rand::Rng;
    let mut rng = seeded(8);
    for _ in 0..100 {
        let n = rng.gen_range(2..=4usize);
        let domain = TruthDomain::new(n).unwrap();
        let mut sig = Signature::new(domain);
        for c in 0..rng.gen_range(0..4) {
            let arity = rng.gen_range(0..=2usize);
            let table = (0..n.pow(arity as u32)).map(|_| rng.gen_range(1..=n as u8)).collect();
            sig.add(Connective::from_table(format!("c{c}"), arity, domain, table).unwrap()).unwrap();
        }
        assert_eq!(parse_signature(&render_signature(&sig)).unwrap(), sig);
    }
}

fn assert_span_inside(err: &ParseError, text: &str) {
    assert!(err.span.start <= err.span.end && err.span.end <= text.len(), "{err} in {text:?}");
    assert!(err.span.line >= 1 && err.span.column >= 1, "{err:?} in {text:?}");
    assert!(!err.message.is_empty());
}

#[test]
fn malformed_inputs_carry_spans() {
    let sig = signature();
    let formulas = ["", "Box", "imp(p)", "imp(p, q", "p q", "foo(p)", "neg p", "(p", "p)", "Box (", "p & q"];
    for text in formulas {
        assert_span_inside(&parse_formula(text, &sig).unwrap_err(), text);
    }
    let sequents = ["(p, 4) ->", "(p, 0) ->", "(p 1) ->", "(p, 1)", "-> (p, 1),", "(p, 1) -> -> (q, 1)"];
    for text in sequents {
        assert_span_inside(&parse_sequent(text, &sig).unwrap_err(), text);
    }
    let signatures = ["domain 1", "conn f 1\n", "domain 2\nconn f 1\nf 1 = 2\n", "domain 2\nconn Box 0\nBox = 1", "domain 2\nconn f 0\nf = 3"];
    for text in signatures {
        assert_span_inside(&parse_signature(text).unwrap_err(), text);
    }
    let d3 = TruthDomain::new(3).unwrap();
    let models = ["worlds 2\nedge 0 5", "worlds 0", "edge 0 1", "worlds 1\nval 0 p 4", "worlds 1\nval 0 p 1\nval 0 p 2"];
    for text in models {
        assert_span_inside(&parse_model(text, d3).unwrap_err(), text);
    }
    let proofs = [
        "1: (p, 1) -> (p, 1) ; ax-id from 7",
        "1: (p, 1) -> (p, 1) ; frobnicate",
        "2: (p, 1) -> (p, 1) ; ax-id",
        "logic mv-Q\n",
        "1: (p, 1) -> (p, 1) ; ax-id\nlogic mv-K",
    ];
    for text in proofs {
        assert_span_inside(&parse_proof(text, &sig).unwrap_err(), text);
    }
}

#[test]
fn empty_inputs() {
    let sig = signature();
    assert!(parse_proof("", &sig).unwrap().steps.is_empty());
    assert!(parse_sequents("# nothing\n", &sig).unwrap().is_empty());
    let m = parse_model("worlds 1", TruthDomain::new(3).unwrap()).unwrap();
    assert_eq!(m.value(0, "p"), 1);
}
