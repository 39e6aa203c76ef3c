//! Reduction of full first-order set theory to the three-variable
//! membership language.
//!
//! The input is first replaced by its universal closure. If it mentions at
//! most three distinct variables they are renamed order-preservingly onto
//! `x,y,z` and membership atoms are routed through the substitution
//! machinery (only `in(x,y)` is atomic here). Otherwise the evaluation of
//! all quantified variables is packed into one register as a nested pair:
//! the variable bound `d` binders up sits at projection path `1^d 0` (or
//! `1^(m-1)` for the outermost of `m`), a quantifier step extends the code by
//! one component, and atoms read their arguments off the code by projection.
//! Negation and disjunction are mapped homomorphically throughout, which
//! gives the syntactic commutation contract at sentence level.

use crate::error::BuildError;
use crate::pairing::{Basis, Index};
use crate::pipeline::homo::at_pair;
use crate::pipeline::params::l3_basis;
use crate::syntax::{Formula, Lang, Var3, VarIx, View};

/// Universal closure over `v0..vn` for the least `n` covering the free
/// variables; sentences are returned unchanged.
fn universal_closure(f: Formula) -> Formula {
    let max = f.free_vars().iter().max();
    match max {
        None => f,
        Some(n) => (0..=n).rev().fold(f, |acc, v| Formula::forall(v, acc)),
    }
}

fn distinct_vars(f: Formula) -> Vec<VarIx> {
    let mut vars: Vec<VarIx> = Vec::new();
    for g in f.postorder() {
        match g.view() {
            View::AtomIn(u, v) | View::AtomEq(u, v) => {
                for w in [u, v] {
                    if !vars.contains(&w) {
                        vars.push(w);
                    }
                }
            }
            View::Exists(v, _) => {
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
            _ => {}
        }
    }
    vars.sort_unstable();
    vars
}

/// The order-preserving renaming path for closures using at most three
/// distinct variables.
fn rename(f: Formula, map: &dyn Fn(VarIx) -> VarIx) -> Result<Formula, BuildError> {
    let b = l3_basis();
    let mut out: std::collections::HashMap<Formula, Formula> = std::collections::HashMap::new();
    for g in f.postorder() {
        let h = match g.view() {
            View::AtomIn(u, v) => {
                let (u, v) = (map(u), map(v));
                if (u, v) == (0, 1) {
                    Formula::atom_in(Lang::L3, 0, 1)
                } else {
                    // Only in(x,y) is atomic; other argument tuples go
                    // through simulated substitution (with real equality).
                    b.subst2(
                        Formula::atom_in(Lang::L3, 0, 1),
                        Var3::from_index(u).expect("three-variable image"),
                        Var3::from_index(v).expect("three-variable image"),
                    )?
                }
            }
            View::AtomEq(u, v) => Formula::atom_eq(Lang::L3, map(u), map(v)),
            View::Not(a) => Formula::not(out[&a]),
            View::Or(a, c) => Formula::or(out[&a], out[&c]),
            View::Exists(v, a) => Formula::exists(map(v), out[&a]),
            _ => unreachable!("first-order language"),
        };
        out.insert(g, h);
    }
    Ok(out[&f])
}

/// Projection path of the binder at de Bruijn depth `d` in a context of `m`
/// binders.
fn env_path(d: usize, m: usize) -> Index {
    let mut bits = vec![1u8; d];
    if d < m - 1 {
        bits.push(0);
    }
    Index::from_bits(&bits)
}

fn general_in_context(
    b: &Basis,
    f: Formula,
    stack: &mut Vec<VarIx>,
) -> Result<Formula, BuildError> {
    let path_of = |u: VarIx, stack: &Vec<VarIx>| -> Index {
        let d = stack
            .iter()
            .rev()
            .position(|&v| v == u)
            .expect("closure binds every variable");
        env_path(d, stack.len())
    };
    match f.view() {
        View::Not(a) => Ok(Formula::not(general_in_context(b, a, stack)?)),
        View::Or(a, c) => Ok(Formula::or(
            general_in_context(b, a, stack)?,
            general_in_context(b, c, stack)?,
        )),
        View::Exists(v, a) => {
            stack.push(v);
            let inner = general_in_context(b, a, stack)?;
            stack.pop();
            // A witness code y extends the current code x by one component:
            // Ey (y_1 = x & Ex (x = y & inner)).
            Ok(Formula::exists(
                1u32,
                Formula::and(
                    b.proj_eq(Var3::Y, &Index::bit(1), Var3::X, &Index::EMPTY),
                    Formula::exists(
                        0u32,
                        Formula::and(b.eq(Var3::X, Var3::Y), inner),
                    ),
                ),
            ))
        }
        View::AtomIn(u, v) => at_pair(
            b,
            Formula::atom_in(Lang::L3, 0, 1),
            &path_of(u, stack),
            &path_of(v, stack),
        ),
        View::AtomEq(u, v) => Ok(b.proj_eq(
            Var3::X,
            &path_of(u, stack),
            Var3::X,
            &path_of(v, stack),
        )),
        _ => unreachable!("first-order language"),
    }
}

/// Top level of the general path: homomorphic on the sentence-level Boolean
/// structure, entering code mode at the first quantifier.
fn general_sentence(b: &Basis, f: Formula) -> Result<Formula, BuildError> {
    match f.view() {
        View::Not(a) => Ok(Formula::not(general_sentence(b, a)?)),
        View::Or(a, c) => Ok(Formula::or(
            general_sentence(b, a)?,
            general_sentence(b, c)?,
        )),
        View::Exists(v, a) => {
            // Context of one binder: the code is the value itself.
            let mut stack = vec![v];
            let inner = general_in_context(b, a, &mut stack)?;
            Ok(Formula::exists(0u32, inner))
        }
        _ => unreachable!("sentences start with connectives or quantifiers"),
    }
}

/// Number of distinct variables the universal closure mentions; three or
/// fewer selects the renaming path.
pub fn distinct_var_count(f: Formula) -> usize {
    distinct_vars(universal_closure(f)).len()
}

/// Reduce a first-order formula over membership and equality to the
/// three-variable membership language.
pub fn reduce_f(f: Formula) -> Result<Formula, BuildError> {
    if f.lang() != Lang::Fol {
        return Err(BuildError::LanguageViolation {
            expected: Lang::Fol,
            got: f.lang(),
        });
    }
    let closed = universal_closure(f);
    let vars = distinct_vars(closed);
    if vars.len() <= 3 {
        let map = move |u: VarIx| vars.iter().position(|&v| v == u).unwrap() as VarIx;
        rename(closed, &map)
    } else {
        general_sentence(l3_basis(), closed)
    }
}
