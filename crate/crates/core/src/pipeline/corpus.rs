//! Demonstration inputs: standard first-order formulations of the set-theory
//! axioms, and the curated reduction-check sentences.

use std::sync::OnceLock;

use crate::syntax::{parse_formula, Formula, Lang};

/// Named first-order sentences over membership and equality. The first six
/// are the finitary axioms; infinity, a replacement instance and choice are
/// included as translation inputs only.
pub fn zf_corpus() -> &'static [(&'static str, Formula)] {
    static CORPUS: OnceLock<Vec<(&'static str, Formula)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let texts: [(&'static str, &'static str); 9] = [
            (
                "extensionality",
                "Av0. Av1. ((Av2. (in(v2,v0) <-> in(v2,v1))) -> v0=v1)",
            ),
            ("empty_set", "Ev0. Av1. ~in(v1,v0)"),
            (
                "pairing",
                "Av0. Av1. Ev2. Av3. (in(v3,v2) <-> (v3=v0 | v3=v1))",
            ),
            (
                "union",
                "Av0. Ev1. Av2. (in(v2,v1) <-> Ev3. (in(v2,v3) & in(v3,v0)))",
            ),
            (
                "power_set",
                "Av0. Ev1. Av2. (in(v2,v1) <-> Av3. (in(v3,v2) -> in(v3,v0)))",
            ),
            (
                "foundation",
                "Av0. ((Ev1. in(v1,v0)) -> Ev1. (in(v1,v0) & ~Ev2. (in(v2,v1) & in(v2,v0))))",
            ),
            (
                "infinity",
                "Ev0. ((Ev1. (in(v1,v0) & Av2. ~in(v2,v1))) & Av1. (in(v1,v0) -> \
                 Ev2. (in(v2,v0) & Av3. (in(v3,v2) <-> (in(v3,v1) | v3=v1)))))",
            ),
            (
                "replacement_copy",
                "Av0. Ev1. Av2. (in(v2,v1) <-> Ev3. (in(v3,v0) & Av4. (in(v4,v2) <-> in(v4,v3))))",
            ),
            (
                "choice",
                "Av0. (((Av1. (in(v1,v0) -> Ev2. in(v2,v1))) & \
                 Av1. Av2. ((in(v1,v0) & in(v2,v0) & Ev3. (in(v3,v1) & in(v3,v2))) -> v1=v2)) -> \
                 Ev3. Av1. (in(v1,v0) -> Ev2. (in(v2,v1) & in(v2,v3) & \
                 Av4. ((in(v4,v1) & in(v4,v3)) -> v4=v2))))",
            ),
        ];
        texts
            .into_iter()
            .map(|(name, text)| {
                let f = parse_formula(Lang::Fol, text)
                    .unwrap_or_else(|e| panic!("corpus sentence {name}: {e}"));
                assert!(f.is_sentence(), "corpus sentence {name} is open");
                (name, f)
            })
            .collect()
    })
}

/// Universally quantified four-variable facts, true in every rank-bounded
/// membership universe, used to spot-check the reduction against the oracle.
/// Purely universal on purpose: an existential prefix over four variables
/// needs witness codes beyond any feasible truncation, so only universal
/// sentences can come out stable.
pub fn reduce_check_corpus() -> &'static [Formula] {
    static CORPUS: OnceLock<Vec<Formula>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let texts = [
            // Well-foundedness consequences along four-step chains.
            "Av0. Av1. Av2. Av3. ((in(v0,v1) & in(v1,v2) & in(v2,v3)) -> ~in(v3,v0))",
            "Av0. Av1. Av2. Av3. ((in(v3,v0) & in(v0,v1) & in(v1,v2)) -> ~in(v2,v3))",
            "Av0. Av1. Av2. Av3. (in(v0,v1) -> (in(v1,v2) -> (in(v2,v3) -> ~in(v3,v0))))",
            "Av0. Av1. Av2. Av3. ((in(v1,v0) & in(v2,v1) & in(v3,v2)) -> ~v0=v3)",
            // Equality laws spread over four variables.
            "Av0. Av1. Av2. Av3. ((v0=v1 & v1=v2 & v2=v3) -> v0=v3)",
            "Av0. Av1. Av2. Av3. ((v0=v1 & v1=v2 & v2=v3) -> v3=v0)",
            "Av0. Av1. Av2. Av3. ((in(v0,v2) & v0=v1 & v2=v3) -> in(v1,v3))",
            "Av0. Av1. Av2. Av3. ((v0=v1 & in(v2,v0) & in(v3,v1)) -> (in(v2,v1) & in(v3,v0)))",
            "Av0. Av1. Av2. Av3. ((in(v0,v1) & v2=v1 & v3=v2) -> in(v0,v3))",
            // Extensionality consequence: same members, same containers.
            "Av0. Av1. ((Av2. (in(v2,v0) <-> in(v2,v1))) -> Av3. (in(v0,v3) -> in(v1,v3)))",
        ];
        texts
            .into_iter()
            .map(|text| {
                let f = parse_formula(Lang::Fol, text)
                    .unwrap_or_else(|e| panic!("reduction corpus: {e}"));
                assert!(f.is_sentence());
                f
            })
            .collect()
    })
}
