//! Proof scripts for the worked examples, checked by the test suites.
//!
//! All scripts use the three-valued Łukasiewicz signature in
//! [`SIGNATURE`].

use crate::domain::Signature;
use crate::parser::{parse_proof, parse_signature, ParseError};
use crate::proofs::Derivation;

pub const SIGNATURE: &str = include_str!("../../fixtures/lukasiewicz3.sig");

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
}

impl Fixture {
    pub fn parse(&self, sig: &Signature) -> Result<Derivation, ParseError> {
        parse_proof(self.text, sig)
    }
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "ex3_1_box_k1",
        text: include_str!("../../fixtures/ex3_1_box_k1.proof"),
    },
    Fixture {
        name: "ex3_1_box_k2",
        text: include_str!("../../fixtures/ex3_1_box_k2.proof"),
    },
    Fixture {
        name: "ex3_1_dia_k2",
        text: include_str!("../../fixtures/ex3_1_dia_k2.proof"),
    },
    Fixture {
        name: "ex3_1_dia_k3",
        text: include_str!("../../fixtures/ex3_1_dia_k3.proof"),
    },
    Fixture {
        name: "ex3_2",
        text: include_str!("../../fixtures/ex3_2.proof"),
    },
    Fixture {
        name: "ex3_3_box",
        text: include_str!("../../fixtures/ex3_3_box.proof"),
    },
    Fixture {
        name: "ex3_3_box_compound",
        text: include_str!("../../fixtures/ex3_3_box_compound.proof"),
    },
    Fixture {
        name: "ex3_3_dia",
        text: include_str!("../../fixtures/ex3_3_dia.proof"),
    },
    Fixture {
        name: "ex3_4",
        text: include_str!("../../fixtures/ex3_4.proof"),
    },
    Fixture {
        name: "ex6_1_k1",
        text: include_str!("../../fixtures/ex6_1_k1.proof"),
    },
    Fixture {
        name: "ex6_1_k2",
        text: include_str!("../../fixtures/ex6_1_k2.proof"),
    },
    Fixture {
        name: "ex6_1_k3",
        text: include_str!("../../fixtures/ex6_1_k3.proof"),
    },
    Fixture {
        name: "ext_d",
        text: include_str!("../../fixtures/ext_d.proof"),
    },
    Fixture {
        name: "ext_s4",
        text: include_str!("../../fixtures/ext_s4.proof"),
    },
    Fixture {
        name: "ext_t",
        text: include_str!("../../fixtures/ext_t.proof"),
    },
    Fixture {
        name: "rem6_3_box",
        text: include_str!("../../fixtures/rem6_3_box.proof"),
    },
    Fixture {
        name: "rem6_3_dia",
        text: include_str!("../../fixtures/rem6_3_dia.proof"),
    },
    Fixture {
        name: "rem6_4",
        text: include_str!("../../fixtures/rem6_4.proof"),
    },
];

pub fn signature() -> Signature {
    parse_signature(SIGNATURE).expect("fixture signature parses")
}

pub fn get(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proofs::check_derivation;

    #[test]
    fn signature_is_lukasiewicz() {
        assert_eq!(signature(), Signature::lukasiewicz(3).unwrap());
    }

    #[test]
    fn all_fixtures_check() {
        let sig = signature();
        for f in FIXTURES {
            let d = f.parse(&sig).unwrap_or_else(|e| panic!("{}: {e}", f.name));
            if let Err(v) = check_derivation(&d, &sig) {
                panic!("{}: {v}", f.name);
            }
        }
    }
}
