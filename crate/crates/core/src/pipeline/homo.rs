//! The translation homomorphism into the cylindric reduct.
//!
//! A membership-language formula is mapped to a one-free-variable P-language
//! formula read at triplet codes: the membership atom becomes membership of
//! the first two triplet coordinates, equality atoms become diagonals,
//! quantifiers become cylindrifications, negation is relativized to
//! triplets. Sentences are then guarded by the strong pairing axiom
//! augmented with the translated pairing statement.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::BuildError;
use crate::pairing::{build_sax, ca_coord, ca_cneg, ca_cyl, ca_diag, ca_triplet, ra_at, Basis, Index};
use crate::pipeline::params::{default_basis, membership_e};
use crate::pipeline::pi::pi_plus;
use crate::syntax::{Formula, Lang, Var3, View};

/// Read a two-free-variable formula at two projections of `x`:
/// `Ey Ez (y = x_i & z = x_j & f<y,z>)`.
pub fn at_pair(b: &Basis, f: Formula, i: &Index, j: &Index) -> Result<Formula, BuildError> {
    if !f.free_vars().subset_of(&[0, 1]) {
        return Err(BuildError::FreeVarViolation {
            expected: "x,y".into(),
        });
    }
    let e = Index::EMPTY;
    Ok(Formula::exists(
        1u32,
        Formula::exists(
            2u32,
            Formula::and_all([
                b.proj_eq(Var3::Y, &e, Var3::X, i),
                b.proj_eq(Var3::Z, &e, Var3::X, j),
                b.subst2(f, Var3::Y, Var3::Z)?,
            ]),
        ),
    ))
}

/// Index of the `j`-th coordinate of the triplet coded at the second
/// component of `x`.
fn second_coord(j: u8) -> Index {
    Index::bit(1).concat(&ca_coord(j))
}

/// The homomorphism on membership-language formulas; output has its free
/// variables contained in `{x}`.
pub fn h_prime(f: Formula) -> Result<Formula, BuildError> {
    if f.lang() != Lang::L3 {
        return Err(BuildError::LanguageViolation {
            expected: Lang::L3,
            got: f.lang(),
        });
    }
    let b = default_basis();
    let atom_image = {
        static ATOM: OnceLock<Formula> = OnceLock::new();
        *ATOM.get_or_init(|| {
            at_pair(b, membership_e(), &second_coord(0), &second_coord(1))
                .expect("membership formula lives over x,y")
        })
    };
    let mut map: HashMap<Formula, Formula> = HashMap::new();
    for g in f.postorder() {
        let out = match g.view() {
            View::AtomIn(0, 1) => atom_image,
            View::AtomEq(u, v) => ca_diag(b, u as u8, v as u8),
            View::Not(a) => ca_cneg(b, map[&a])?,
            View::Or(a, c) => Formula::or(map[&a], map[&c]),
            View::Exists(v, a) => ca_cyl(b, v as u8, map[&a])?,
            _ => unreachable!("membership language has no other nodes"),
        };
        map.insert(g, out);
    }
    Ok(map[&f])
}

/// `Triplet x_1`: the second component of `x` codes a triplet.
pub fn triplet_at_x1() -> Formula {
    let b = default_basis();
    ra_at(b, ca_triplet(b), Var3::X, &Index::bit(1)).expect("triplet has one free variable")
}

/// The strong pairing axiom extended with the translated pairing statement,
/// relativized to triplet positions.
pub fn sax_star() -> Formula {
    static SAX_STAR: OnceLock<Formula> = OnceLock::new();
    *SAX_STAR.get_or_init(|| {
        let sax = build_sax(default_basis());
        let guard = Formula::forall(
            0u32,
            Formula::implies(
                triplet_at_x1(),
                h_prime(pi_plus()).expect("pairing statement is a membership sentence"),
            ),
        );
        Formula::and(sax, guard)
    })
}

/// Translate a membership-language sentence to a P-language sentence. Open
/// formulas are universally closed first.
pub fn h(f: Formula) -> Result<Formula, BuildError> {
    if f.lang() != Lang::L3 {
        return Err(BuildError::LanguageViolation {
            expected: Lang::L3,
            got: f.lang(),
        });
    }
    let mut f = f;
    let free: Vec<u32> = f.free_vars().iter().collect();
    for v in free.into_iter().rev() {
        f = Formula::forall(v, f);
    }
    let body = h_prime(f)?;
    Ok(Formula::forall(
        0u32,
        Formula::implies(Formula::and(sax_star(), triplet_at_x1()), body),
    ))
}
