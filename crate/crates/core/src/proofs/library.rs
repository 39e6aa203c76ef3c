//! Curated, checker-validated proof objects.
//!
//! The derivations are generated by a small combinator layer that only ever
//! emits certificate lines; the result is an ordinary [`Proof`] that the
//! checker validates like any other input. The library ships, minimally, the
//! interderivations of the two complementation axioms and the quantifier
//! lemmas used by the translation module's Boolean-preservation checks.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::proofs::schema::Bindings;
use crate::proofs::{
    check_proof, is_tautology, GenVar, Hypotheses, Justification, Proof, ProofLine, ProofSystem,
};
use crate::syntax::{Ast, EqTerm, Equation, Formula, Lang, UnOp, Var3, View};

struct ProofBuilder {
    system: ProofSystem,
    lines: Vec<ProofLine>,
}

impl ProofBuilder {
    fn new(system: ProofSystem) -> ProofBuilder {
        ProofBuilder {
            system,
            lines: Vec::new(),
        }
    }

    fn push(&mut self, statement: Ast, justification: Justification) -> usize {
        let index = self.lines.len() + 1;
        self.lines.push(ProofLine {
            index,
            statement,
            justification,
        });
        index
    }

    fn stmt(&self, ix: usize) -> Formula {
        self.lines[ix - 1]
            .statement
            .formula()
            .expect("formula line")
    }

    fn taut_schema(&self) -> &'static str {
        match self.system {
            ProofSystem::Hilbert3 | ProofSystem::Hilbert3Alt8 => "1",
            ProofSystem::ReEqFree => "V1",
            ProofSystem::Modal => "B",
            ProofSystem::Equational => unreachable!(),
        }
    }

    fn taut(&mut self, f: Formula) -> usize {
        assert!(
            is_tautology(f).expect("letter cap"),
            "library derivation asserted a non-tautology: {}",
            crate::syntax::render(f)
        );
        let id = self.taut_schema();
        self.push(
            Ast::Formula(f),
            Justification::Axiom {
                schema: id.to_string(),
                bindings: Bindings::new().formula("phi", f),
            },
        )
    }

    fn axiom(&mut self, id: &str, bindings: Bindings) -> usize {
        let inst = crate::proofs::schema::instantiate(self.system, id, &bindings)
            .expect("library axiom instantiation");
        self.push(
            inst,
            Justification::Axiom {
                schema: id.to_string(),
                bindings,
            },
        )
    }

    fn mp(&mut self, minor: usize, major: usize) -> usize {
        let a = self.stmt(minor);
        let conclusion = match self.stmt(major).view() {
            View::Or(na, c) => {
                assert_eq!(na, Formula::not(a), "MP: major is not minor -> _");
                c
            }
            _ => panic!("MP: major premise is not an implication"),
        };
        self.push(Ast::Formula(conclusion), Justification::Mp { minor, major })
    }

    fn gen(&mut self, v: Var3, premise: usize) -> usize {
        let body = self.stmt(premise);
        self.push(
            Ast::Formula(Formula::forall(v.index(), body)),
            Justification::Gen {
                var: GenVar::Var(v),
                premise,
            },
        )
    }

    /// Propositional step: `conclusion` follows from the premise lines by a
    /// tautology; emits the implication chain and modus ponens applications.
    fn taut_mp(&mut self, conclusion: Formula, premises: &[usize]) -> usize {
        let chain = premises.iter().rev().fold(conclusion, |acc, &p| {
            Formula::implies(self.stmt(p), acc)
        });
        let mut cur = self.taut(chain);
        for &p in premises {
            cur = self.mp(p, cur);
        }
        cur
    }

    /// From a derived implication, the implication between its existential
    /// quantifications: Generalization plus distribution ((2)).
    fn e_mono(&mut self, v: Var3, imp: usize) -> usize {
        let (alpha, beta) = match self.stmt(imp).view() {
            View::Or(na, b) => match na.view() {
                View::Not(a) => (a, b),
                _ => panic!("e_mono premise is not an implication"),
            },
            _ => panic!("e_mono premise is not an implication"),
        };
        let g = self.gen(v, imp);
        let ax = self.axiom(
            "2",
            Bindings::new().formula("phi", alpha).formula("psi", beta).var("v", v),
        );
        self.mp(g, ax)
    }

    /// From a derived implication, the implication between its universal
    /// quantifications, via contraposition through `e_mono`.
    fn a_mono(&mut self, v: Var3, imp: usize) -> usize {
        let (alpha, beta) = match self.stmt(imp).view() {
            View::Or(na, b) => match na.view() {
                View::Not(a) => (a, b),
                _ => panic!("a_mono premise is not an implication"),
            },
            _ => panic!("a_mono premise is not an implication"),
        };
        let contra = self.taut_mp(
            Formula::implies(Formula::not(beta), Formula::not(alpha)),
            &[imp],
        );
        let em = self.e_mono(v, contra);
        self.taut_mp(
            Formula::implies(
                Formula::forall(v.index(), alpha),
                Formula::forall(v.index(), beta),
            ),
            &[em],
        )
    }

    fn finish(self) -> Proof {
        Proof {
            system: self.system,
            lines: self.lines,
        }
    }
}

/// Derive ((8)) for the given instance inside the base system ((1))-((7)).
fn derive_ax8(phi: Formula, psi: Formula, v: Var3) -> Proof {
    let mut b = ProofBuilder::new(ProofSystem::Hilbert3);
    let chi = Formula::exists(v.index(), psi);
    let body = Formula::and(phi, chi);
    let lhs = Formula::exists(v.index(), body);
    let rhs = Formula::and(Formula::exists(v.index(), phi), chi);

    // Forward: E v (phi & E v psi) -> (E v phi & E v psi).
    let t1 = b.taut(Formula::implies(body, phi));
    let m1 = b.e_mono(v, t1);
    let t2 = b.taut(Formula::implies(body, chi));
    let m2 = b.e_mono(v, t2);
    let a4 = b.axiom("4", Bindings::new().formula("phi", psi).var("v", v));
    let to_chi = b.taut_mp(Formula::implies(lhs, chi), &[m2, a4]);
    let fwd = b.taut_mp(Formula::implies(lhs, rhs), &[m1, to_chi]);

    // Backward, through distribution ((5)) and complementation ((6)).
    let t3 = b.taut(Formula::implies(
        phi,
        Formula::or(body, Formula::not(chi)),
    ));
    let m3 = b.e_mono(v, t3);
    let a5 = b.axiom(
        "5",
        Bindings::new()
            .formula("phi", body)
            .formula("psi", Formula::not(chi))
            .var("v", v),
    );
    let a6 = b.axiom("6", Bindings::new().formula("phi", psi).var("v", v));
    let bwd = b.taut_mp(Formula::implies(rhs, lhs), &[m3, a5, a6]);

    b.taut_mp(Formula::iff(lhs, rhs), &[fwd, bwd]);
    b.finish()
}

/// Derive ((6)) for the given instance inside the variant system with ((8)).
/// Normality of the quantifier comes from Generalization: the contradiction
/// under the quantifier is refuted by generalizing its negation.
fn derive_ax6(phi: Formula, v: Var3) -> Proof {
    let mut b = ProofBuilder::new(ProofSystem::Hilbert3Alt8);
    let e = Formula::exists(v.index(), phi);
    let m_body = Formula::and(Formula::not(e), e);

    let a8 = b.axiom(
        "8",
        Bindings::new()
            .formula("phi", Formula::not(e))
            .formula("psi", phi)
            .var("v", v),
    );
    let t1 = b.taut(Formula::not(m_body));
    let g = b.gen(v, t1);
    let t2 = b.taut(Formula::implies(m_body, Formula::not(Formula::not(m_body))));
    let m = b.e_mono(v, t2);
    b.taut_mp(
        Formula::implies(Formula::exists(v.index(), Formula::not(e)), Formula::not(e)),
        &[a8, g, m],
    );
    b.finish()
}

/// The universal quantifier distributes over conjunction.
fn derive_forall_and(a: Formula, c: Formula, v: Var3) -> Proof {
    let mut b = ProofBuilder::new(ProofSystem::Hilbert3);
    let both = Formula::and(a, c);
    let all = |f| Formula::forall(v.index(), f);

    let t1 = b.taut(Formula::implies(both, a));
    let am1 = b.a_mono(v, t1);
    let t2 = b.taut(Formula::implies(both, c));
    let am2 = b.a_mono(v, t2);
    let fwd = b.taut_mp(
        Formula::implies(all(both), Formula::and(all(a), all(c))),
        &[am1, am2],
    );

    let t3 = b.taut(Formula::implies(
        Formula::not(both),
        Formula::or(Formula::not(a), Formula::not(c)),
    ));
    let m3 = b.e_mono(v, t3);
    let a5 = b.axiom(
        "5",
        Bindings::new()
            .formula("phi", Formula::not(a))
            .formula("psi", Formula::not(c))
            .var("v", v),
    );
    let bwd = b.taut_mp(
        Formula::implies(Formula::and(all(a), all(c)), all(both)),
        &[m3, a5],
    );

    b.taut_mp(Formula::iff(all(both), Formula::and(all(a), all(c))), &[fwd, bwd]);
    b.finish()
}

/// Biconditional congruence under a guarded universal: from a derivable
/// `B <-> C`, conclude `Ax(G -> B) <-> Ax(G -> C)`.
fn derive_guard_congruence(guard: Formula, lhs: Formula, rhs: Formula) -> Proof {
    let mut b = ProofBuilder::new(ProofSystem::Hilbert3);
    let v = Var3::X;
    let all = |f| Formula::forall(v.index(), f);
    let gb = Formula::implies(guard, lhs);
    let gc = Formula::implies(guard, rhs);

    let t0 = b.taut(Formula::iff(lhs, rhs));
    let t1 = b.taut_mp(Formula::implies(gb, gc), &[t0]);
    let am1 = b.a_mono(v, t1);
    let t2 = b.taut_mp(Formula::implies(gc, gb), &[t0]);
    let am2 = b.a_mono(v, t2);
    b.taut_mp(Formula::iff(all(gb), all(gc)), &[am1, am2]);
    b.finish()
}

fn re_quantifier_sample() -> Proof {
    let mut b = ProofBuilder::new(ProofSystem::ReEqFree);
    let p = Formula::atom_p(Lang::Fmd3);
    let v = Var3::Y;
    let t = b.taut(Formula::implies(p, p));
    let g = b.gen(v, t);
    let ax = b.axiom(
        "V2",
        Bindings::new().formula("phi", p).formula("psi", p).var("v", v),
    );
    b.mp(g, ax);
    // ((V4)) on a formula where y is not free.
    let closed = Formula::exists(v.index(), p);
    b.axiom("V4", Bindings::new().formula("phi", closed).var("v", v));
    b.finish()
}

fn modal_c1_necessitation() -> Proof {
    let mut b = ProofBuilder::new(ProofSystem::Modal);
    let p = Formula::atom_modal();
    let c1 = b.axiom(
        "C1",
        Bindings::new().formula("phi", p).modal("i", 1).modal("j", 2),
    );
    let stmt = b.stmt(c1);
    b.push(
        Ast::Formula(Formula::box_(3, stmt)),
        Justification::Gen {
            var: GenVar::Modal(3),
            premise: c1,
        },
    );
    b.finish()
}

fn eq_d5_symmetry() -> Proof {
    let x0 = EqTerm::var(0);
    let fg = Equation::new(
        EqTerm::apply(UnOp::F, EqTerm::apply(UnOp::G, x0)),
        EqTerm::apply(UnOp::G, EqTerm::apply(UnOp::F, x0)),
    );
    let gf = Equation::new(fg.rhs, fg.lhs);
    Proof {
        system: ProofSystem::Equational,
        lines: vec![
            ProofLine {
                index: 1,
                statement: Ast::Equation(fg),
                justification: Justification::Axiom {
                    schema: "D5".into(),
                    bindings: Bindings::new()
                        .term("x", x0)
                        .op("F", UnOp::F)
                        .op("G", UnOp::G),
                },
            },
            ProofLine {
                index: 2,
                statement: Ast::Equation(gf),
                justification: Justification::Eq {
                    rule: crate::proofs::EqRule::Sym,
                    premises: vec![1],
                    subst: None,
                },
            },
        ],
    }
}

fn eq_rules_sampler() -> Proof {
    use crate::proofs::EqRule;
    let x0 = EqTerm::var(0);
    let x1 = EqTerm::var(1);
    let s = EqTerm::plus(x0, x1);
    let s_flip = EqTerm::plus(x1, x0);
    let line = |index, statement, justification| ProofLine {
        index,
        statement: Ast::Equation(statement),
        justification,
    };
    Proof {
        system: ProofSystem::Equational,
        lines: vec![
            line(
                1,
                Equation::new(s, s),
                Justification::Eq {
                    rule: EqRule::Refl,
                    premises: vec![],
                    subst: None,
                },
            ),
            line(
                2,
                Equation::new(s, s_flip),
                Justification::Axiom {
                    schema: "B1".into(),
                    bindings: Bindings::new().term("x", x0).term("y", x1),
                },
            ),
            line(
                3,
                Equation::new(s, s_flip),
                Justification::Eq {
                    rule: EqRule::Trans,
                    premises: vec![1, 2],
                    subst: None,
                },
            ),
            line(
                4,
                Equation::new(EqTerm::minus(s), EqTerm::minus(s_flip)),
                Justification::Eq {
                    rule: EqRule::CongMinus,
                    premises: vec![3],
                    subst: None,
                },
            ),
            line(
                5,
                Equation::new(
                    EqTerm::apply(UnOp::F, EqTerm::minus(s)),
                    EqTerm::apply(UnOp::F, EqTerm::minus(s_flip)),
                ),
                Justification::Eq {
                    rule: EqRule::CongF,
                    premises: vec![4],
                    subst: None,
                },
            ),
            line(
                6,
                Equation::new(
                    EqTerm::plus(
                        EqTerm::plus(EqTerm::var(2), EqTerm::var(3)),
                        EqTerm::plus(EqTerm::var(3), EqTerm::var(2)),
                    ),
                    EqTerm::plus(
                        EqTerm::plus(EqTerm::var(3), EqTerm::var(2)),
                        EqTerm::plus(EqTerm::var(2), EqTerm::var(3)),
                    ),
                ),
                Justification::Eq {
                    rule: EqRule::Invariance,
                    premises: vec![3],
                    subst: Some(
                        [
                            (0u32, EqTerm::plus(EqTerm::var(2), EqTerm::var(3))),
                            (1u32, EqTerm::plus(EqTerm::var(3), EqTerm::var(2))),
                        ]
                        .into_iter()
                        .collect(),
                    ),
                },
            ),
        ],
    }
}

/// The shipped proof library. Every entry is validated by [`check_proof`]
/// in this module's tests and by the self-test harness.
pub fn proof_library() -> &'static BTreeMap<String, Proof> {
    static LIB: OnceLock<BTreeMap<String, Proof>> = OnceLock::new();
    LIB.get_or_init(|| {
        let p = Formula::atom_p(Lang::Fmd3);
        let ezp = Formula::exists(2u32, p);
        let eyp = Formula::exists(1u32, p);
        let mut lib = BTreeMap::new();
        lib.insert("ax8_from_base".to_string(), derive_ax8(p, p, Var3::X));
        lib.insert("ax8_from_base_y".to_string(), derive_ax8(p, ezp, Var3::Y));
        lib.insert("ax6_from_ax8".to_string(), derive_ax6(p, Var3::X));
        lib.insert("ax6_from_ax8_z".to_string(), derive_ax6(eyp, Var3::Z));
        lib.insert(
            "forall_and_distribution".to_string(),
            derive_forall_and(p, eyp, Var3::X),
        );
        lib.insert(
            "forall_guard_iff_congruence".to_string(),
            derive_guard_congruence(ezp, Formula::not(Formula::not(p)), p),
        );
        lib.insert("re_quantifier_sample".to_string(), re_quantifier_sample());
        lib.insert("modal_c1_necessitation".to_string(), modal_c1_necessitation());
        lib.insert("eq_d5_symmetry".to_string(), eq_d5_symmetry());
        lib.insert("eq_rules_sampler".to_string(), eq_rules_sampler());
        for (name, proof) in &lib {
            let verdict = check_proof(proof, &Hypotheses::new())
                .unwrap_or_else(|e| panic!("library proof {name} is malformed: {e}"));
            assert!(
                verdict.accepted,
                "library proof {name} rejected: {:?}",
                verdict.first_failure
            );
        }
        lib
    })
}
