//! Syntax: hash-consed ASTs, parsers, printers and classifiers for the five
//! object languages (the P-language, the restricted membership language, full
//! first-order set theory, the one-atom modal language, and equational terms).

mod ast;
mod dag;
mod parse;
mod print;

pub use ast::{
    classify, Ast, Classification, EqTerm, Equation, Formula, FolVar, FreeVars, Lang, ModalIx,
    TermView, UnOp, Var3, VarIx, View,
};
pub use dag::{dag_string, read_dag, write_dag};
pub use parse::{parse_equation, parse_formula, parse_tagged, parse_term};
pub use print::{render, render_equation, render_pretty, render_term};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::SyntaxError;

    fn p(lang: Lang, s: &str) -> Formula {
        parse_formula(lang, s).unwrap()
    }

    #[test]
    fn atom_p_parses_to_the_unique_atom() {
        assert_eq!(p(Lang::Fmd3, "P(x,y,z)"), Formula::atom_p(Lang::Fmd3));
        assert_eq!(p(Lang::Fmd3, "P ( x , y , z )"), Formula::atom_p(Lang::Fmd3));
    }

    #[test]
    fn permuted_atom_is_a_language_violation() {
        match parse_formula(Lang::Fmd3, "P(y,x,z)") {
            Err(SyntaxError::LanguageViolation { .. }) => {}
            other => panic!("expected LanguageViolation, got {other:?}"),
        }
    }

    #[test]
    fn l3_membership_argument_order_is_fixed() {
        assert!(parse_formula(Lang::L3, "in(x,y)").is_ok());
        match parse_formula(Lang::L3, "in(y,x)") {
            Err(SyntaxError::LanguageViolation { .. }) => {}
            other => panic!("expected LanguageViolation, got {other:?}"),
        }
    }

    #[test]
    fn equality_is_rejected_in_fmd3() {
        match parse_formula(Lang::Fmd3, "x=y") {
            Err(SyntaxError::LanguageViolation { .. }) => {}
            other => panic!("expected LanguageViolation, got {other:?}"),
        }
    }

    #[test]
    fn universal_quantifier_desugars() {
        let f = p(Lang::Fmd3, "Ax. P(x,y,z)");
        let atom = Formula::atom_p(Lang::Fmd3);
        assert_eq!(f, Formula::not(Formula::exists(0u32, Formula::not(atom))));
    }

    #[test]
    fn syntax_error_carries_position() {
        match parse_formula(Lang::Fmd3, "P(x,y,z) |") {
            Err(SyntaxError::Parse { position, .. }) => assert_eq!(position, 10),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn render_examples() {
        assert_eq!(render(Formula::atom_p(Lang::Fmd3)), "P(x,y,z)");
        assert_eq!(
            render(Formula::exists(0u32, Formula::atom_p(Lang::Fmd3))),
            "Ex. P(x,y,z)"
        );
        assert_eq!(render(p(Lang::L3, "in(x,y) | x=z")), "(in(x,y) | x=z)");
    }

    #[test]
    fn canonical_render_never_emits_sugar() {
        let f = p(Lang::Fmd3, "Ax. (P(x,y,z) & ~P(x,y,z)) -> P(x,y,z)");
        let s = render(f);
        for banned in ["&", "->", "<->", "A"] {
            assert!(!s.contains(banned), "canonical render leaked '{banned}': {s}");
        }
    }

    #[test]
    fn quantifier_binds_weakest_to_the_right() {
        let f = p(Lang::Fmd3, "Ex. P(x,y,z) | ~P(x,y,z)");
        match f.view() {
            View::Exists(0, body) => assert!(matches!(body.view(), View::Or(..))),
            v => panic!("expected Ex.(..|..), got {v:?}"),
        }
    }

    #[test]
    fn free_vars_examples() {
        let atom = Formula::atom_p(Lang::Fmd3);
        let fv = |f: Formula| f.free_vars().iter().collect::<Vec<_>>();
        assert_eq!(fv(atom), vec![0, 1, 2]);
        assert_eq!(fv(Formula::exists(2u32, atom)), vec![0, 1]);
        assert_eq!(fv(p(Lang::Fmd3, "Ey. Ez. P(x,y,z)")), vec![0]);
    }

    #[test]
    fn classify_examples() {
        assert!(classify(p(Lang::Fmd3, "Ey. Ez. P(x,y,z)")).is_fmd3_one_free_x);
        let c = classify(p(Lang::Fmd3, "P(x,y,z)"));
        assert!(!c.is_sentence && !c.is_fmd3_one_free_x);
        assert!(classify(p(Lang::Fmd3, "Ex. Ey. Ez. P(x,y,z)")).is_sentence);
        // A sentence counts as one-free-x by the subset reading.
        assert!(classify(p(Lang::Fmd3, "Ex. Ey. Ez. P(x,y,z)")).is_fmd3_one_free_x);
    }

    #[test]
    fn hash_consing_is_content_equality() {
        let a = p(Lang::Fmd3, "Ex. (P(x,y,z) | ~P(x,y,z))");
        let b = Formula::exists(
            0u32,
            Formula::or(
                Formula::atom_p(Lang::Fmd3),
                Formula::not(Formula::atom_p(Lang::Fmd3)),
            ),
        );
        assert_eq!(a, b);
        assert_eq!(a.id(), b.id());
        // Same shape, different language: distinct formulas.
        let c = Formula::atom_in(Lang::L3, 0, 1);
        let d = Formula::atom_in(Lang::Fol, 0, 1);
        assert_ne!(c, d);
    }

    #[test]
    fn fol_uses_indexed_variables() {
        let f = p(Lang::Fol, "Av0. Ev1. in(v0,v1)");
        assert!(f.is_sentence());
        assert_eq!(render(f), "~(Ev0. ~(Ev1. in(v0,v1)))");
        assert_eq!(p(Lang::Fol, &render(f)), f);
    }

    #[test]
    fn modal_language_round_trips() {
        let f = p(Lang::Modal, "<1>[2]p -> p");
        assert_eq!(p(Lang::Modal, &render(f)), f);
        assert_eq!(p(Lang::Modal, &render_pretty(f)), f);
    }

    #[test]
    fn equation_round_trips() {
        let e = parse_equation("fgX0 = gfX0").unwrap();
        assert_eq!(render_equation(&e), "f g X0 = g f X0");
        assert_eq!(parse_equation(&render_equation(&e)).unwrap(), e);
        let e2 = parse_equation("-(X0 + X1) = - X0 + -X1").unwrap();
        assert_eq!(parse_equation(&render_equation(&e2)).unwrap(), e2);
    }

    #[test]
    fn dag_round_trips() {
        let f = p(Lang::Fmd3, "Ex. (P(x,y,z) & Ay. ~P(x,y,z))");
        let s = dag_string(f);
        assert_eq!(read_dag(&s).unwrap(), f);
    }

    #[test]
    fn mixed_language_accepts_all_three_atoms() {
        let f = p(Lang::Mixed3, "P(x,y,z) <-> (x=y & y=z) | in(x,y)");
        assert!(!f.is_sentence());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_formula(lang: Lang) -> impl Strategy<Value = Formula> {
            let leaf = match lang {
                Lang::Fmd3 => prop_oneof![Just(Formula::atom_p(Lang::Fmd3))].boxed(),
                Lang::L3 => prop_oneof![
                    Just(Formula::atom_in(Lang::L3, 0, 1)),
                    (0u32..3, 0u32..3).prop_map(|(u, v)| Formula::atom_eq(Lang::L3, u, v)),
                ]
                .boxed(),
                Lang::Fol => prop_oneof![
                    (0u32..4, 0u32..4).prop_map(|(u, v)| Formula::atom_in(Lang::Fol, u, v)),
                    (0u32..4, 0u32..4).prop_map(|(u, v)| Formula::atom_eq(Lang::Fol, u, v)),
                ]
                .boxed(),
                Lang::Modal => prop_oneof![Just(Formula::atom_modal())].boxed(),
                Lang::Mixed3 => prop_oneof![
                    Just(Formula::atom_p(Lang::Mixed3)),
                    Just(Formula::atom_in(Lang::Mixed3, 0, 1)),
                    (0u32..3, 0u32..3).prop_map(|(u, v)| Formula::atom_eq(Lang::Mixed3, u, v)),
                ]
                .boxed(),
            };
            leaf.prop_recursive(8, 128, 2, move |inner| {
                let quant_range = if lang == Lang::Fol { 0u32..4 } else { 0u32..3 };
                let base = prop_oneof![
                    inner.clone().prop_map(Formula::not),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                ];
                if lang == Lang::Modal {
                    prop_oneof![
                        base,
                        (1u8..=3, inner).prop_map(|(i, f)| Formula::diamond(i, f)),
                    ]
                    .boxed()
                } else {
                    prop_oneof![
                        base,
                        (quant_range, inner).prop_map(|(v, f)| Formula::exists(v, f)),
                    ]
                    .boxed()
                }
            })
        }

        fn roundtrip(
            lang: Lang,
            f: Formula,
        ) -> Result<(), proptest::test_runner::TestCaseError> {
            let canonical = render(f);
            prop_assert_eq!(parse_formula(lang, &canonical).unwrap(), f);
            let pretty = render_pretty(f);
            prop_assert_eq!(parse_formula(lang, &pretty).unwrap(), f);
            Ok(())
        }

        macro_rules! roundtrip_test {
            ($name:ident, $lang:expr) => {
                proptest! {
                    #![proptest_config(ProptestConfig::with_cases(128))]
                    #[test]
                    fn $name(f in arb_formula($lang)) {
                        roundtrip($lang, f)?;
                    }
                }
            };
        }

        roundtrip_test!(roundtrip_fmd3, Lang::Fmd3);
        roundtrip_test!(roundtrip_l3, Lang::L3);
        roundtrip_test!(roundtrip_fol, Lang::Fol);
        roundtrip_test!(roundtrip_modal, Lang::Modal);
        roundtrip_test!(roundtrip_mixed3, Lang::Mixed3);

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(128))]
            #[test]
            fn dag_roundtrip(f in arb_formula(Lang::Fmd3)) {
                prop_assert_eq!(read_dag(&dag_string(f)).unwrap(), f);
            }

            #[test]
            fn interning_is_injective(f in arb_formula(Lang::L3), g in arb_formula(Lang::L3)) {
                // Content-equal iff handle-equal: rebuild f from its view and
                // compare handles.
                prop_assert_eq!(f == g, f.id() == g.id());
            }

            #[test]
            fn fmd3_atom_discipline(f in arb_formula(Lang::Fmd3)) {
                for a in f.atoms() {
                    prop_assert!(matches!(a.view(), View::AtomP));
                }
            }
        }
    }

}
