use std::path::PathBuf;
use std::process::{Command, Output};

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures");

fn fixture(name: &str) -> String {
    format!("{FIXTURES}/{name}")
}

fn sig() -> String {
    fixture("lukasiewicz3.sig")
}

fn scratch(name: &str, text: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn mvk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvk")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or_default().to_string()
}

#[test]
fn eval_dead_end() {
    let model = scratch("dead.model", "worlds 1\n");
    let o = mvk(&["eval", "--sig", &sig(), "--model", &model, "Box p"]);
    assert_eq!((o.status.code(), first_line(&o).as_str()), (Some(0), "3"));
    let o = mvk(&["eval", "--sig", &sig(), "--model", &model, "Dia p"]);
    assert_eq!((o.status.code(), first_line(&o).as_str()), (Some(0), "1"));
    let o = mvk(&["eval", "--sig", &sig(), "--model", &model, "imp(p, foo(q))"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: <formula>:1:8: unknown connective"), "{}", stderr(&o));
}

#[test]
fn decide_verdicts() {
    let goal = "(Box p, 3) -> (p, 3)";
    let o = mvk(&["decide", "--sig", &sig(), "--logic", "mv-K", "--bound", "1", goal]);
    assert_eq!((o.status.code(), first_line(&o).as_str()), (Some(1), "countermodel"));
    let model_text: String = stdout(&o).lines().skip(1).map(|l| format!("{l}\n")).collect();
    let m = mvk::parser::parse_model(&model_text, mvk::TruthDomain::new(3).unwrap()).unwrap();
    assert_eq!(m.world_count(), 1);
    let o = mvk(&["decide", "--sig", &sig(), "--logic", "mv-T", "--bound", "2", goal]);
    assert_eq!((o.status.code(), first_line(&o).as_str()), (Some(0), "valid-up-to 2"));
    let o = mvk(&["decide", "--sig", &sig(), "--logic", "mv-K", "--bound", "3", "(p, 2) -> (p, 2)"]);
    assert_eq!((o.status.code(), first_line(&o).as_str()), (Some(0), "valid"));
    let o = mvk(&["decide", "--sig", &sig(), "--logic", "mv-X", "--bound", "2", goal]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn decide_with_hypotheses() {
    let sigma = scratch("sigma.seq", "-> (p, 3)\n");
    let goal = "-> (Box p, 3)";
    let o = mvk(&["decide", "--sig", &sig(), "--bound", "2", goal]);
    assert_eq!(o.status.code(), Some(1));
    let o = mvk(&["decide", "--sig", &sig(), "--sigma", &sigma, "--bound", "2", goal]);
    assert_eq!((o.status.code(), first_line(&o).as_str()), (Some(0), "valid-up-to 2"));
}

#[test]
fn ceiling_aborts() {
    let o = Command::new(env!("CARGO_BIN_EXE_mvk"))
        .env("MVK_ENUM_CEILING", "50")
        .args(["decide", "--sig", &sig(), "--logic", "mv-T", "--bound", "3", "(Box p, 3) -> (p, 3)"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(first_line(&o).starts_with("aborted: ceiling"), "{}", stdout(&o));
    let o = Command::new(env!("CARGO_BIN_EXE_mvk"))
        .env("MVK_ENUM_CEILING", "lots")
        .args(["neg-scan", "--n", "2", "--bound", "1"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_proof() {
    let o = mvk(&["check-proof", "--sig", &sig(), &fixture("ex3_4.proof")]);
    assert_eq!((o.status.code(), first_line(&o).as_str()), (Some(0), "accepted"));
    let text = std::fs::read_to_string(fixture("ex3_4.proof")).unwrap();
    let mutated = text.replacen("5: (q, 1) ->", "5: (q, 2) ->", 1);
    assert_ne!(mutated, text);
    let bad = scratch("bad.proof", &mutated);
    let o = mvk(&["check-proof", "--sig", &sig(), &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(first_line(&o).starts_with("violation at step 5: "), "{}", stdout(&o));
    let o = mvk(&["check-proof", "--sig", &sig(), "--logic", "mv-K", &fixture("ext_t.proof")]);
    assert_eq!(o.status.code(), Some(1));
    let o = mvk(&["check-proof", "--sig", &sig(), &fixture("ext_t.proof")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn check_proof_with_outside_hypotheses() {
    let text = std::fs::read_to_string(fixture("rem6_4.proof")).unwrap();
    let (hyps, rest): (Vec<&str>, Vec<&str>) = text.lines().partition(|l| l.starts_with("hyp:"));
    let sigma: String = hyps.iter().map(|h| format!("{}\n", &h[4..])).collect();
    let proof = scratch("rem6_4_bare.proof", &rest.join("\n"));
    let sigma = scratch("rem6_4.seq", &sigma);
    let o = mvk(&["check-proof", "--sig", &sig(), "--sigma", &sigma, &proof]);
    assert_eq!((o.status.code(), first_line(&o).as_str()), (Some(0), "accepted"));
    let o = mvk(&["check-proof", "--sig", &sig(), &proof]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn neg_scan() {
    let o = mvk(&["neg-scan", "--n", "3", "--bound", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "survivors 1\n3 2 1\n");
    let seq = mvk(&["--sequential", "neg-scan", "--n", "3", "--bound", "2"]);
    assert_eq!(stdout(&seq), stdout(&o));
    assert_eq!(mvk(&["neg-scan", "--n", "1", "--bound", "2"]).status.code(), Some(2));
}

#[test]
fn filter_emits_a_model() {
    let model = scratch("chain.model", "worlds 4\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 3\nval 1 p 2\nval 2 p 2\nval 3 q 3\n");
    let o = mvk(&["filter", "--sig", &sig(), "--model", &model, "--phi", "Box p, Dia q, imp(p, q)", "--logic", "mv-D"]);
    assert_eq!((o.status.code(), first_line(&o).as_str()), (Some(0), "filtered"));
    let body: String = stdout(&o).lines().skip(1).map(|l| format!("{l}\n")).collect();
    let m = mvk::parser::parse_model(&body, mvk::TruthDomain::new(3).unwrap()).unwrap();
    assert!(m.world_count() <= 4);
    assert!(mvk::semantics::frame_check(&m, mvk::FrameClass::Serial));
    assert!(body.contains("# class 0: 0"));
    let o = mvk(&["filter", "--sig", &sig(), "--model", &model, "--phi", "Box p", "--logic", "mv-T"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("reflexive"), "{}", stderr(&o));
}

#[test]
fn translate() {
    let file = scratch("t.seq", "(imp(p, q), 3), (p, 3) -> (q, 3)\n-> (or(p, neg(p)), 3)\n");
    let o = mvk(&["translate", "--sig", &sig(), &file]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "translated\n(Box p, 3), (Box imp(Box p, Box q), 3) -> (Box q, 3)\n-> (Box or(Box p, Box neg(Box p)), 3)\n"
    );
    let o = mvk(&["translate", "--optimized", "--sig", &sig(), &file]);
    assert!(stdout(&o).contains("-> (or(Box p, Box neg(Box p)), 3)"));
    let modal = scratch("modal.seq", "(Box p, 1) ->\n");
    assert_eq!(mvk(&["translate", "--sig", &sig(), &modal]).status.code(), Some(2));
}

#[test]
fn frame_check() {
    let model = scratch("fork.model", "worlds 3\nedge 0 1\nedge 0 2\n");
    let o = mvk(&["frame-check", "--model", &model, "--class", "euclidean"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(first_line(&o).starts_with("fails: "));
    let o = mvk(&["frame-check", "--model", &model, "--class", "transitive"]);
    assert_eq!((o.status.code(), first_line(&o).as_str()), (Some(0), "holds"));
    let o = mvk(&["frame-check", "--sig", &sig(), "--model", &model, "--class", "mv-S4"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(mvk(&["frame-check", "--model", &model, "--class", "round"]).status.code(), Some(2));
}

#[test]
fn sat() {
    let model = scratch("sat.model", "worlds 2\nedge 0 1\nval 1 p 3\n");
    let o = mvk(&["sat", "--sig", &sig(), "--model", &model, "(Dia p, 3) -> (Box p, 3)"]);
    assert_eq!((o.status.code(), first_line(&o).as_str()), (Some(0), "satisfied"));
    let o = mvk(&["sat", "--sig", &sig(), "--model", &model, "-> (p, 3)"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "refuted\nworld 0: -> (p, 3)\n");
    let o = mvk(&["sat", "--sig", &sig(), "--model", &model, "--world", "1", "-> (p, 3)"]);
    assert_eq!(o.status.code(), Some(0));
    let file = scratch("sat.seq", "-> (p, 1), (p, 3)\n(p, 2) ->\n");
    let o = mvk(&["sat", "--sig", &sig(), "--model", &model, "--sequents", &file]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn file_errors_name_the_file() {
    let bad = scratch("bad.model", "worlds 2\nedge 0 5\n");
    let o = mvk(&["eval", "--sig", &sig(), "--model", &bad, "p"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with(&format!("error: {bad}:2:")), "{}", stderr(&o));
    let o = mvk(&["eval", "--sig", "/nonexistent.sig", "--model", &bad, "p"]);
    assert_eq!(o.status.code(), Some(2));
}
