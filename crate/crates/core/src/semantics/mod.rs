//! Verification backends: finite relational models, Kripke frames with three
//! commuting equivalences, diagonal-free set algebras on the cube, and a
//! rank-stratified hereditarily-finite-set oracle.

pub mod bitset;
pub mod frames;
pub mod hf;
pub mod model;
pub mod oracle;
pub mod set_algebra;
pub mod tables;

pub use bitset::{PairSet, TripleSet};
pub use frames::{enumerate_commuting_frames, eval_modal, to_frame, valid_in_frame, BitRel, KripkeFrame};
pub use hf::{code_kpair, code_member, decode_kpair, level_size, HfBuilder, HfLevel};
pub use model::{enumerate_models, eval, valid_in_model, Assignment, Model, Signature, Structure};
pub use oracle::{hf_oracle, stability_eval, TriState};
pub use set_algebra::{set_algebra_eval, SetAlgebra3};
pub use tables::{DagIndex, Tables};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_equation, parse_formula, EqTerm, Formula, Lang};

    fn fmd3(s: &str) -> Formula {
        parse_formula(Lang::Fmd3, s).unwrap()
    }

    fn sample_model() -> Model {
        Model::from_triples(2, &[(0, 0, 0), (1, 1, 1), (0, 1, 0), (0, 1, 1)])
    }

    #[test]
    fn eval_atom_lookup() {
        let m = sample_model();
        let f = fmd3("P(x,y,z)");
        assert!(eval(&m, f, &Assignment::xyz(0, 1, 0)).unwrap());
        assert!(!eval(&m, f, &Assignment::xyz(1, 0, 0)).unwrap());
    }

    #[test]
    fn eval_quantifier_brute_force() {
        let m = sample_model();
        let f = fmd3("Az. P(x,y,z)");
        let a01 = Assignment::new().set(0, 0).set(1, 1);
        let a00 = Assignment::new().set(0, 0).set(1, 0);
        assert!(eval(&m, f, &a01).unwrap());
        assert!(!eval(&m, f, &a00).unwrap());
    }

    #[test]
    fn eval_rejects_partial_assignment() {
        let m = sample_model();
        let f = fmd3("P(x,y,z)");
        let e = eval(&m, f, &Assignment::new().set(0, 0)).unwrap_err();
        assert!(matches!(e, crate::error::SemanticsError::PartialAssignment { .. }));
    }

    #[test]
    fn eval_rejects_missing_relation() {
        let m = Model::from_pairs(2, &[(0, 1)]);
        let f = fmd3("P(x,y,z)");
        let e = eval(&m, f, &Assignment::xyz(0, 0, 0)).unwrap_err();
        assert!(matches!(e, crate::error::SemanticsError::MissingRelation { .. }));
    }

    #[test]
    fn validity_examples() {
        let m = sample_model();
        assert!(valid_in_model(&m, fmd3("P(x,y,z) | ~P(x,y,z)")).unwrap());
        // Assignment (0,0,1) falsifies the bare atom.
        assert!(!valid_in_model(&m, fmd3("P(x,y,z)")).unwrap());
        assert!(!eval(&m, fmd3("P(x,y,z)"), &Assignment::xyz(0, 0, 1)).unwrap());
    }

    #[test]
    fn axiom_instances_hold_in_models() {
        let m = sample_model();
        // ((7)) and ((6)) instances.
        assert!(valid_in_model(&m, fmd3("(Ex. Ey. P(x,y,z)) -> Ey. Ex. P(x,y,z)")).unwrap());
        assert!(valid_in_model(&m, fmd3("(Ex. ~(Ex. P(x,y,z))) -> ~(Ex. P(x,y,z))")).unwrap());
        // Non-axiom falsified by some enumerated model.
        let bad = fmd3("(Ex. P(x,y,z)) -> P(x,y,z)");
        let mut found = false;
        for m in enumerate_models(2, Signature::P).unwrap() {
            if !valid_in_model(&m, bad).unwrap() {
                found = true;
                break;
            }
        }
        assert!(found, "countermodel search must succeed");
    }

    #[test]
    fn table_evaluator_agrees_with_direct_eval() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let corpus = crate::gen::random_formulas(Lang::Fmd3, 60, 4, &mut rng);
        for n in [1usize, 2, 3] {
            for _ in 0..12 {
                let m = crate::gen::random_model(n, true, rng.gen_bool(0.5), &mut rng);
                for f in &corpus {
                    let idx = DagIndex::new(&[*f]);
                    let t = idx.eval(&m).unwrap();
                    for a in 0..n {
                        for b in 0..n {
                            for c in 0..n {
                                let direct = eval(&m, *f, &Assignment::xyz(a, b, c)).unwrap();
                                assert_eq!(t.holds(idx.root(0), &[a, b, c]), direct);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_model_counts() {
        assert_eq!(enumerate_models(1, Signature::P).unwrap().count(), 2);
        assert_eq!(enumerate_models(2, Signature::P).unwrap().count(), 256);
        assert_eq!(enumerate_models(2, Signature::PIn).unwrap().count(), 4096);
        assert!(enumerate_models(4, Signature::P).is_err());
    }

    #[test]
    fn model_json_round_trip() {
        let m = sample_model();
        let j = m.to_json();
        assert_eq!(Model::from_json(&j).unwrap(), m);
        let m2 = Model::from_json(r#"{"universe":2,"in":[[0,1]]}"#).unwrap();
        assert!(!m2.has_p() && m2.has_in());
    }

    #[test]
    fn frame_of_two_element_model() {
        let m = sample_model();
        let fr = to_frame(&m).unwrap();
        assert_eq!(fr.worlds(), 8);
        for i in 1..=3u8 {
            assert_eq!(fr.relation(i).count(), 16);
            fr.relation(i).is_equivalence().unwrap();
        }
    }

    #[test]
    fn product_frames_commute() {
        for n in 1..=3usize {
            let mut p = TripleSet::empty(n);
            for a in 0..n {
                p.insert(a, a.min(n - 1), a);
            }
            let m = Model::new(n, Some(p), None);
            let fr = to_frame(&m).unwrap();
            for i in 1..=3u8 {
                for j in 1..=3u8 {
                    assert_eq!(
                        fr.relation(i).compose(fr.relation(j)),
                        fr.relation(j).compose(fr.relation(i))
                    );
                }
            }
        }
    }

    /// Independent modal translation used as the oracle side of the
    /// correspondence check here; the production map lives in the pipeline.
    fn naive_modal(f: Formula) -> Formula {
        use crate::syntax::View;
        match f.view() {
            View::AtomP => Formula::atom_modal(),
            View::Not(a) => Formula::not(naive_modal(a)),
            View::Or(a, b) => Formula::or(naive_modal(a), naive_modal(b)),
            View::Exists(v, a) => Formula::diamond(v as u8 + 1, naive_modal(a)),
            _ => unreachable!("corpus is pure Fmd3"),
        }
    }

    #[test]
    fn modal_correspondence_on_samples() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let corpus = crate::gen::random_formulas(Lang::Fmd3, 40, 4, &mut rng);
        for m in enumerate_models(2, Signature::P).unwrap().step_by(17) {
            let fr = to_frame(&m).unwrap();
            for f in &corpus {
                let g = naive_modal(*f);
                for a in 0..2 {
                    for b in 0..2 {
                        for c in 0..2 {
                            let lhs = eval(&m, *f, &Assignment::xyz(a, b, c)).unwrap();
                            let w = (a * 2 + b) * 2 + c;
                            let rhs = eval_modal(&fr, w, g).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn frame_enumeration_small() {
        // 1 world: one partition, both valuations.
        assert_eq!(enumerate_commuting_frames(1).unwrap().len(), 2);
        let frames = enumerate_commuting_frames(3).unwrap();
        assert!(!frames.is_empty());
        for fr in frames.iter().step_by(50) {
            for i in 1..=3u8 {
                fr.relation(i).is_equivalence().unwrap();
            }
        }
    }

    #[test]
    fn cylindrification_example() {
        let mut s = TripleSet::empty(2);
        s.insert(0, 1, 0);
        let c0 = s.cylindrify(0);
        assert_eq!(c0.iter().collect::<Vec<_>>(), vec![(0, 1, 0), (1, 1, 0)]);
    }

    #[test]
    fn set_algebra_df_axioms_on_random_sets() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for n in 1..=4usize {
            for _ in 0..100 {
                let mut s = TripleSet::empty(n);
                let mut t = TripleSet::empty(n);
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            if rng.gen_bool(0.5) {
                                s.insert(a, b, c);
                            }
                            if rng.gen_bool(0.5) {
                                t.insert(a, b, c);
                            }
                        }
                    }
                }
                for coord in 0..3 {
                    let cs = s.cylindrify(coord);
                    // ((D1)) x + Fx = Fx, ((D2)) FFx = Fx, ((D4)) F(-Fx) = -Fx.
                    assert_eq!(s.union(&cs), cs);
                    assert_eq!(cs.cylindrify(coord), cs);
                    assert_eq!(cs.complement().cylindrify(coord), cs.complement());
                    // ((D3)) F(x+y) = Fx + Fy.
                    assert_eq!(
                        s.union(&t).cylindrify(coord),
                        cs.union(&t.cylindrify(coord))
                    );
                }
                // ((D5)) commuting cylindrifications, all three pairs.
                for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                    assert_eq!(s.cylindrify(i).cylindrify(j), s.cylindrify(j).cylindrify(i));
                }
            }
        }
    }

    #[test]
    fn set_algebra_eval_matches_example() {
        let mut g = TripleSet::empty(2);
        g.insert(0, 1, 0);
        let alg = SetAlgebra3::new(2).assign(0, g);
        let t = crate::syntax::parse_term("f X0").unwrap();
        let s = set_algebra_eval(&alg, t).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![(0, 1, 0), (1, 1, 0)]);
        let bad = set_algebra_eval(&alg, EqTerm::var(3));
        assert!(matches!(bad, Err(crate::error::SemanticsError::UnboundTermVariable(3))));
    }

    #[test]
    fn equational_axioms_hold_in_set_algebras() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let axioms = [
            "X0 + X1 = X1 + X0",
            "X0 + (X1 + X2) = (X0 + X1) + X2",
            "-(-(X0 + X1) + -(X0 + -X1)) = X0",
            "X0 + f X0 = f X0",
            "f f X0 = f X0",
            "f (X0 + X1) = f X0 + f X1",
            "f (- f X0) = - f X0",
            "f g X0 = g f X0",
            "f h X0 = h f X0",
            "g h X0 = h g X0",
        ];
        for n in 1..=4usize {
            for _ in 0..25 {
                let mut alg = SetAlgebra3::new(n);
                for v in 0..3u32 {
                    let mut s = TripleSet::empty(n);
                    for a in 0..n {
                        for b in 0..n {
                            for c in 0..n {
                                if rng.gen_bool(0.5) {
                                    s.insert(a, b, c);
                                }
                            }
                        }
                    }
                    alg = alg.assign(v, s);
                }
                for ax in axioms {
                    let e = parse_equation(ax).unwrap();
                    assert_eq!(
                        set_algebra_eval(&alg, e.lhs).unwrap(),
                        set_algebra_eval(&alg, e.rhs).unwrap(),
                        "axiom failed: {ax}"
                    );
                }
            }
        }
    }

    #[test]
    fn hf_level_sizes() {
        assert_eq!(level_size(4), Some(16));
        assert_eq!(level_size(5), Some(65536));
        assert!(HfLevel::new(6).is_err());
    }

    #[test]
    fn hf_codes() {
        // <0,1> = {{0},{0,1}} = {1,3} = 2 + 8.
        assert_eq!(code_kpair(0, 1), Some(10));
        assert_eq!(code_kpair(0, 0), Some(2));
        assert_eq!(decode_kpair(10), Some((0, 1)));
        assert_eq!(decode_kpair(2), Some((0, 0)));
        assert_eq!(decode_kpair(3), None);
        for a in 0..2u64 {
            for b in 0..2u64 {
                let p = code_kpair(a, b).unwrap();
                assert!(p < 16, "pairs over V2 live in V4");
                assert_eq!(decode_kpair(p), Some((a, b)));
            }
        }
    }

    #[test]
    fn oracle_empty_set_sentence_is_stable() {
        // "some set has no members": a witness of rank 0 exists everywhere.
        let f = parse_formula(Lang::Fol, "Ev0. Av1. ~in(v1,v0)").unwrap();
        assert_eq!(hf_oracle(f, 3, 0).unwrap(), TriState::TrueStable);
        assert_eq!(hf_oracle(f, 4, 0).unwrap(), TriState::TrueStable);
        assert_eq!(hf_oracle(f, 4, 1).unwrap(), TriState::TrueStable);
    }

    #[test]
    fn oracle_flags_truncation_artifacts() {
        // "every set is a member of something" fails only because containers
        // leave the truncation; the verdict must not pretend it is settled.
        let f = parse_formula(Lang::Fol, "Av0. Ev1. in(v0,v1)").unwrap();
        assert_eq!(hf_oracle(f, 4, 0).unwrap(), TriState::Unstable);
        assert_eq!(hf_oracle(f, 3, 0).unwrap(), TriState::Unstable);
    }

    #[test]
    fn oracle_false_stable_example() {
        // "every set has a member" is genuinely false at every rank.
        let f = parse_formula(Lang::Fol, "Av0. Ev1. in(v1,v0)").unwrap();
        assert_eq!(hf_oracle(f, 4, 1).unwrap(), TriState::FalseStable);
    }

    #[test]
    fn oracle_rejects_bad_parameters() {
        let f = parse_formula(Lang::Fol, "Ev0. Av1. ~in(v1,v0)").unwrap();
        assert!(hf_oracle(f, 6, 0).is_err());
        assert!(hf_oracle(f, 3, 2).is_err());
    }

    #[test]
    fn oracle_monotone_for_existential_formulas() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let corpus = crate::gen::random_existential_fol(120, &mut rng);
        let mut hits = 0;
        for f in corpus {
            for rank in [2u32, 3] {
                if hf_oracle(f, rank, 0).unwrap() == TriState::TrueStable {
                    hits += 1;
                    let bigger = HfLevel::new(rank + 1).unwrap();
                    let idx = DagIndex::new(&[f]);
                    let t = idx.eval(&bigger).unwrap();
                    assert!(
                        t.valid_restricted(idx.root(0), bigger.size()),
                        "existential sentence lost at rank {}",
                        rank + 1
                    );
                }
            }
        }
        assert!(hits > 0, "corpus never produced TRUE_STABLE existentials");
    }

    #[test]
    fn hf_builder_levels_match_codes() {
        let mut b = HfBuilder::new();
        b.add_level(4).unwrap();
        assert_eq!(b.len(), 16);
        let m = b.model(16);
        let lvl = HfLevel::new(4).unwrap();
        for a in 0..16 {
            for bb in 0..16 {
                assert_eq!(m.inn(a, bb), lvl.inn(a, bb));
            }
        }
        // With the full level present, pair construction finds the existing
        // Ackermann-coded element instead of appending.
        let mut b2 = HfBuilder::new();
        b2.add_level(4).unwrap();
        let p = b2.kpair(0, 1);
        assert_eq!(p, 10, "Kuratowski pair over V2 is its Ackermann code");
        assert_eq!(b2.len(), 16, "no new elements were needed");
    }
}
