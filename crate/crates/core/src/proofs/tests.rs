use super::*;
use crate::proofs::schema::Bindings;
use crate::semantics::{valid_in_frame, valid_in_model, enumerate_commuting_frames, enumerate_models, Signature};
use crate::syntax::{parse_formula, Ast, Formula, Lang, Var3};

fn fmd3(s: &str) -> Formula {
    parse_formula(Lang::Fmd3, s).unwrap()
}

fn empty() -> Hypotheses {
    Hypotheses::new()
}

#[test]
fn direct_schema_application_accepted() {
    let p = Formula::atom_p(Lang::Fmd3);
    let hyp: Hypotheses = [("h".to_string(), Ast::Formula(p))].into_iter().collect();
    let proof = Proof {
        system: ProofSystem::Hilbert3,
        lines: vec![
            ProofLine {
                index: 1,
                statement: Ast::Formula(p),
                justification: Justification::Hyp("h".into()),
            },
            ProofLine {
                index: 2,
                statement: Ast::Formula(fmd3("P(x,y,z) -> Ex. P(x,y,z)")),
                justification: Justification::Axiom {
                    schema: "3".into(),
                    bindings: Bindings::new().formula("phi", p).var("v", Var3::X),
                },
            },
            ProofLine {
                index: 3,
                statement: Ast::Formula(fmd3("Ex. P(x,y,z)")),
                justification: Justification::Mp { minor: 1, major: 2 },
            },
        ],
    };
    assert!(check_proof(&proof, &hyp).unwrap().accepted);

    // Mutating line 2 to a different shape must be rejected at line 2.
    let mut tampered = proof.clone();
    tampered.lines[1].statement = Ast::Formula(fmd3("P(x,y,z) -> Ex. P(x,y,z) | P(x,y,z)"));
    let v = check_proof(&tampered, &hyp).unwrap();
    assert!(!v.accepted);
    assert_eq!(v.first_failure.unwrap().0, 2);
}

#[test]
fn match_axiom_examples() {
    // ((7)) with v=x, w=y.
    let (id, b) = match_axiom(
        ProofSystem::Hilbert3,
        Ast::Formula(fmd3("(Ex. Ey. P(x,y,z)) -> Ey. Ex. P(x,y,z)")),
    )
    .unwrap()
    .unwrap();
    assert_eq!(id, "7");
    assert_eq!(b.get_var("v").unwrap(), Var3::X);
    assert_eq!(b.get_var("w").unwrap(), Var3::Y);
    assert_eq!(b.get_formula("phi").unwrap(), Formula::atom_p(Lang::Fmd3));

    // ((3)).
    let (id, _) = match_axiom(
        ProofSystem::Hilbert3,
        Ast::Formula(fmd3("P(x,y,z) -> Ez. P(x,y,z)")),
    )
    .unwrap()
    .unwrap();
    assert_eq!(id, "3");

    // ((6)).
    let (id, _) = match_axiom(
        ProofSystem::Hilbert3,
        Ast::Formula(fmd3("(Ex. ~(Ex. P(x,y,z))) -> ~(Ex. P(x,y,z))")),
    )
    .unwrap()
    .unwrap();
    assert_eq!(id, "6");

    // Non-axioms match nothing.
    assert!(match_axiom(
        ProofSystem::Hilbert3,
        Ast::Formula(fmd3("(Ex. P(x,y,z)) -> P(x,y,z)"))
    )
    .unwrap()
    .is_none());
}

#[test]
fn match_axiom_respects_system_variant() {
    let eight = fmd3("(Ex. (P(x,y,z) & Ex. P(x,y,z))) <-> ((Ex. P(x,y,z)) & Ex. P(x,y,z))");
    assert!(match_axiom(ProofSystem::Hilbert3, Ast::Formula(eight))
        .unwrap()
        .is_none());
    let (id, _) = match_axiom(ProofSystem::Hilbert3Alt8, Ast::Formula(eight))
        .unwrap()
        .unwrap();
    assert_eq!(id, "8");
}

#[test]
fn v4_side_condition_enforced() {
    // y free in the formula: not a ((V4)) instance.
    let p = Formula::atom_p(Lang::Fmd3);
    let bad = Formula::implies(p, Formula::forall(1u32, p));
    assert!(match_axiom(ProofSystem::ReEqFree, Ast::Formula(bad))
        .unwrap()
        .is_none());
    let proof = Proof {
        system: ProofSystem::ReEqFree,
        lines: vec![ProofLine {
            index: 1,
            statement: Ast::Formula(bad),
            justification: Justification::Axiom {
                schema: "V4".into(),
                bindings: Bindings::new().formula("phi", p).var("v", Var3::Y),
            },
        }],
    };
    assert!(!check_proof(&proof, &empty()).unwrap().accepted);
}

#[test]
fn equational_d5_symmetry_accepted() {
    let lib = proof_library();
    let proof = &lib["eq_d5_symmetry"];
    assert!(check_proof(proof, &empty()).unwrap().accepted);
}

#[test]
fn library_is_validated_and_has_required_entries() {
    let lib = proof_library();
    for key in [
        "ax8_from_base",
        "ax6_from_ax8",
        "forall_and_distribution",
        "forall_guard_iff_congruence",
    ] {
        assert!(lib.contains_key(key), "missing library entry {key}");
    }
    for (name, proof) in lib {
        let v = check_proof(proof, &empty()).unwrap();
        assert!(v.accepted, "{name} rejected: {:?}", v.first_failure);
    }
    // Conclusion shapes of the interderivations.
    let c = lib["ax8_from_base"].conclusion().formula().unwrap();
    let expected =
        fmd3("(Ex. (P(x,y,z) & Ex. P(x,y,z))) <-> ((Ex. P(x,y,z)) & Ex. P(x,y,z))");
    assert_eq!(c, expected);
    assert_eq!(lib["ax8_from_base"].system, ProofSystem::Hilbert3);
    assert_eq!(lib["ax6_from_ax8"].system, ProofSystem::Hilbert3Alt8);
    let c6 = lib["ax6_from_ax8"].conclusion().formula().unwrap();
    assert_eq!(c6, fmd3("(Ex. ~(Ex. P(x,y,z))) -> ~(Ex. P(x,y,z))"));
}

#[test]
fn library_mutations_are_rejected() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let lib = proof_library();
    let names: Vec<&String> = lib.keys().collect();
    for _ in 0..200 {
        let name = names[rng.gen_range(0..names.len())];
        let proof = &lib[name];
        let mut tampered = proof.clone();
        let ix = rng.gen_range(0..tampered.lines.len());
        tampered.lines[ix].statement = crate::gen::mutate_ast(tampered.lines[ix].statement, &mut rng);
        let v = check_proof(&tampered, &empty()).unwrap();
        assert!(
            !v.accepted,
            "mutation of {name} line {} was accepted",
            ix + 1
        );
    }
}

#[test]
fn proof_files_round_trip() {
    let lib = proof_library();
    for (name, proof) in lib {
        let text = render_proof(proof);
        let parsed = parse_proof(&text, None).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(&parsed, proof, "{name} changed in round trip");
    }
}

#[test]
fn hypotheses_file_parses() {
    let hyps = parse_hypotheses("h: P(x,y,z)\n# comment\ng: Ex. P(x,y,z)", ProofSystem::Hilbert3)
        .unwrap();
    assert_eq!(hyps.len(), 2);
    assert_eq!(hyps["h"], Ast::Formula(Formula::atom_p(Lang::Fmd3)));
}

#[test]
fn premise_out_of_range_is_malformed() {
    let p = Formula::atom_p(Lang::Fmd3);
    let proof = Proof {
        system: ProofSystem::Hilbert3,
        lines: vec![ProofLine {
            index: 1,
            statement: Ast::Formula(p),
            justification: Justification::Mp { minor: 1, major: 2 },
        }],
    };
    assert!(matches!(
        check_proof(&proof, &empty()),
        Err(crate::error::ProofError::MalformedLine { .. })
    ));
}

#[test]
fn language_mismatch_is_an_error() {
    let proof = Proof {
        system: ProofSystem::Modal,
        lines: vec![ProofLine {
            index: 1,
            statement: Ast::Formula(Formula::atom_p(Lang::Fmd3)),
            justification: Justification::Hyp("h".into()),
        }],
    };
    assert!(matches!(
        check_proof(&proof, &empty()),
        Err(crate::error::ProofError::LanguageMismatch { line: 1 })
    ));
}

#[test]
fn accepted_hilbert_conclusions_are_valid_in_small_models() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let lib = proof_library();
    let conclusions: Vec<Formula> = lib
        .values()
        .filter(|p| p.system == ProofSystem::Hilbert3)
        .map(|p| p.conclusion().formula().unwrap())
        .collect();
    assert!(!conclusions.is_empty());
    for f in &conclusions {
        for n in [1usize, 2] {
            for m in enumerate_models(n, Signature::P).unwrap() {
                assert!(valid_in_model(&m, *f).unwrap());
            }
        }
        for _ in 0..300 {
            use rand::Rng;
            let n = rng.gen_range(1..=6);
            let m = crate::gen::random_model(n, true, false, &mut rng);
            assert!(valid_in_model(&m, *f).unwrap());
        }
    }
}

#[test]
fn hilbert_schemas_are_valid_on_sampled_instances() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    let vars = [Var3::X, Var3::Y, Var3::Z];
    for _ in 0..40 {
        let phi = crate::gen::random_formula(Lang::Fmd3, rng.gen_range(1..=4), &mut rng);
        let psi = crate::gen::random_formula(Lang::Fmd3, rng.gen_range(1..=4), &mut rng);
        let v = vars[rng.gen_range(0..3)];
        let w = vars[rng.gen_range(0..3)];
        for id in ["2", "3", "4", "5", "6", "7", "8"] {
            let system = if id == "8" {
                ProofSystem::Hilbert3Alt8
            } else {
                ProofSystem::Hilbert3
            };
            let b = Bindings::new()
                .formula("phi", phi)
                .formula("psi", psi)
                .var("v", v)
                .var("w", w);
            let inst = schema::instantiate(system, id, &b).unwrap().formula().unwrap();
            let m = crate::gen::random_model(rng.gen_range(1..=3), true, false, &mut rng);
            assert!(valid_in_model(&m, inst).unwrap(), "schema (({id})) failed");
        }
    }
}

#[test]
fn modal_schemas_are_valid_on_all_small_commuting_frames() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
    let mut frames = Vec::new();
    for w in 1..=4 {
        frames.extend(enumerate_commuting_frames(w).unwrap());
    }
    for _ in 0..20 {
        let phi = crate::gen::random_formula(Lang::Modal, rng.gen_range(1..=3), &mut rng);
        let psi = crate::gen::random_formula(Lang::Modal, rng.gen_range(1..=3), &mut rng);
        let i = rng.gen_range(1..=3u8);
        let j = rng.gen_range(1..=3u8);
        for id in ["K", "S5", "C1", "C2"] {
            let b = Bindings::new()
                .formula("phi", phi)
                .formula("psi", psi)
                .modal("i", i)
                .modal("j", j);
            let inst = schema::instantiate(ProofSystem::Modal, id, &b)
                .unwrap()
                .formula()
                .unwrap();
            for fr in &frames {
                assert!(
                    valid_in_frame(fr, inst).unwrap(),
                    "modal schema (({id})) failed on a {}-world frame",
                    fr.worlds()
                );
            }
        }
    }
}

#[test]
fn checker_is_deterministic() {
    let lib = proof_library();
    for proof in lib.values() {
        let a = check_proof(proof, &empty()).unwrap();
        let b = check_proof(proof, &empty()).unwrap();
        assert_eq!(a, b);
    }
}
