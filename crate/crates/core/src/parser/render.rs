use std::fmt::Write;

use crate::domain::Signature;
use crate::formula::Sequent;
use crate::proofs::Derivation;
use crate::semantics::KripkeModel;

pub fn render_signature(sig: &Signature) -> String {
    let mut out = format!("domain {}\n", sig.n());
    for conn in sig.connectives() {
        writeln!(out, "conn {} {}", conn.name(), conn.arity()).unwrap();
        for (args, value) in conn.entries() {
            out.push_str(conn.name());
            for a in args {
                write!(out, " {a}").unwrap();
            }
            writeln!(out, " = {value}").unwrap();
        }
    }
    out
}

/// Every edge and every valuation entry, so the text is self-contained.
pub fn render_model(m: &KripkeModel) -> String {
    let mut out = format!("worlds {}\n", m.world_count());
    for (u, v) in m.edges() {
        writeln!(out, "edge {u} {v}").unwrap();
    }
    for (var, row) in m.valuation() {
        for (u, k) in row.iter().enumerate() {
            writeln!(out, "val {u} {var} {k}").unwrap();
        }
    }
    out
}

pub fn render_sequents(sequents: &[Sequent]) -> String {
    sequents.iter().map(|s| format!("{s}\n")).collect()
}

pub fn render_proof(d: &Derivation) -> String {
    let mut out = format!("logic {}\n", d.logic.name());
    for h in &d.hypotheses {
        writeln!(out, "hyp: {h}").unwrap();
    }
    for (i, step) in d.steps.iter().enumerate() {
        writeln!(out, "{}: {step}", i + 1).unwrap();
    }
    out
}
