//! Maps between the P-language and its propositional presentations: the
//! trimodal language and equational terms. Both are bijective on their
//! images, swapping the three quantifiers for the three diamonds or the
//! three unary operations.

use std::collections::HashMap;

use crate::error::BuildError;
use crate::syntax::{EqTerm, Formula, Lang, TermView, UnOp, View};

/// The P-atom becomes the propositional atom; quantifiers become diamonds.
pub fn fmd3_to_modal(f: Formula) -> Result<Formula, BuildError> {
    if f.lang() != Lang::Fmd3 {
        return Err(BuildError::LanguageViolation {
            expected: Lang::Fmd3,
            got: f.lang(),
        });
    }
    let mut map: HashMap<Formula, Formula> = HashMap::new();
    for g in f.postorder() {
        let out = match g.view() {
            View::AtomP => Formula::atom_modal(),
            View::Not(a) => Formula::not(map[&a]),
            View::Or(a, b) => Formula::or(map[&a], map[&b]),
            View::Exists(v, a) => Formula::diamond(v as u8 + 1, map[&a]),
            _ => unreachable!("P-language has no other nodes"),
        };
        map.insert(g, out);
    }
    Ok(map[&f])
}

/// Inverse of [`fmd3_to_modal`].
pub fn modal_to_fmd3(f: Formula) -> Result<Formula, BuildError> {
    if f.lang() != Lang::Modal {
        return Err(BuildError::LanguageViolation {
            expected: Lang::Modal,
            got: f.lang(),
        });
    }
    let mut map: HashMap<Formula, Formula> = HashMap::new();
    for g in f.postorder() {
        let out = match g.view() {
            View::AtomModal => Formula::atom_p(Lang::Fmd3),
            View::Not(a) => Formula::not(map[&a]),
            View::Or(a, b) => Formula::or(map[&a], map[&b]),
            View::Diamond(i, a) => Formula::exists(i as u32 - 1, map[&a]),
            _ => unreachable!("modal language has no other nodes"),
        };
        map.insert(g, out);
    }
    Ok(map[&f])
}

/// The P-atom becomes the term variable `X0`; quantifiers become the three
/// unary operations; join and complement mirror the connectives.
pub fn fmd3_to_equation(f: Formula) -> Result<EqTerm, BuildError> {
    if f.lang() != Lang::Fmd3 {
        return Err(BuildError::LanguageViolation {
            expected: Lang::Fmd3,
            got: f.lang(),
        });
    }
    let mut map: HashMap<Formula, EqTerm> = HashMap::new();
    for g in f.postorder() {
        let out = match g.view() {
            View::AtomP => EqTerm::var(0),
            View::Not(a) => EqTerm::minus(map[&a]),
            View::Or(a, b) => EqTerm::plus(map[&a], map[&b]),
            View::Exists(v, a) => {
                let op = [UnOp::F, UnOp::G, UnOp::H][v as usize];
                EqTerm::apply(op, map[&a])
            }
            _ => unreachable!("P-language has no other nodes"),
        };
        map.insert(g, out);
    }
    Ok(map[&f])
}

/// Inverse of [`fmd3_to_equation`] on its image: only `X0` may occur.
pub fn equation_to_fmd3(t: EqTerm) -> Result<Formula, BuildError> {
    fn go(t: EqTerm, map: &mut HashMap<EqTerm, Formula>) -> Result<Formula, BuildError> {
        if let Some(f) = map.get(&t) {
            return Ok(*f);
        }
        let out = match t.view() {
            TermView::Var(0) => Formula::atom_p(Lang::Fmd3),
            TermView::Var(_) => {
                return Err(BuildError::LanguageViolation {
                    expected: Lang::Fmd3,
                    got: Lang::Fmd3,
                })
            }
            TermView::Plus(a, b) => Formula::or(go(a, map)?, go(b, map)?),
            TermView::Apply(UnOp::Minus, a) => Formula::not(go(a, map)?),
            TermView::Apply(op, a) => {
                let v = match op {
                    UnOp::F => 0u32,
                    UnOp::G => 1,
                    UnOp::H => 2,
                    UnOp::Minus => unreachable!(),
                };
                Formula::exists(v, go(a, map)?)
            }
        };
        map.insert(t, out);
        Ok(out)
    }
    go(t, &mut HashMap::new())
}
