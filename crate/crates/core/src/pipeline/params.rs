//! The concrete parameter formulas.
//!
//! Over the P-language, membership is read off as "the atom holds however the
//! third slot is filled" and equality as "the atom holds in a way that does
//! depend on the third slot". The pairing parameters are built from
//! membership through the ordered-pair characterization: a pair is a set with
//! exactly one singleton member, at most one member-of-member outside that
//! singleton, and no empty members; the two projections read off the two
//! components. The same chain over the membership language with real equality
//! yields the mirror parameters.

use std::sync::OnceLock;

use crate::pairing::{Basis, Params};
use crate::syntax::{Formula, Lang, Var3};

/// Membership simulated in the P-language: `E := Az. P(x,y,z)`.
pub fn membership_e() -> Formula {
    Formula::forall(2u32, Formula::atom_p(Lang::Fmd3))
}

/// The default parameters of the P-language.
pub fn default_params() -> &'static Params {
    static PARAMS: OnceLock<Params> = OnceLock::new();
    PARAMS.get_or_init(|| {
        let e = membership_e();
        let d = Formula::and(Formula::atom_p(Lang::Fmd3), Formula::not(e));
        let delta_xy = Formula::exists(2u32, d);
        let delta_xz = Formula::exists(1u32, d);
        // The pair chain needs only the equality part of a basis; the
        // placeholder projections are never consulted by substitution.
        let prelim = Params::new(delta_xy, delta_xz, delta_xy, delta_xy)
            .expect("deltas have the right free variables");
        let sub = Basis::fmd3(&prelim);
        let (p0, p1) = pair_chain(&sub, e);
        Params::new(delta_xy, delta_xz, p0, p1).expect("pair formulas live over x,y")
    })
}

/// The default basis over the P-language.
pub fn default_basis() -> &'static Basis {
    static BASIS: OnceLock<Basis> = OnceLock::new();
    BASIS.get_or_init(|| Basis::fmd3(default_params()))
}

/// The mirror parameters over the membership language, built by the same
/// chain with the real membership atom and real equality.
pub fn l3_pair_params() -> (Formula, Formula) {
    static PAIR: OnceLock<(Formula, Formula)> = OnceLock::new();
    *PAIR.get_or_init(|| {
        let in_atom = Formula::atom_in(Lang::L3, 0, 1);
        let prelim = Basis::l3(in_atom, in_atom).expect("atom is a legal placeholder");
        pair_chain(&prelim, in_atom)
    })
}

/// The mirror basis over the membership language.
pub fn l3_basis() -> &'static Basis {
    static BASIS: OnceLock<Basis> = OnceLock::new();
    BASIS.get_or_init(|| {
        let (p0, p1) = l3_pair_params();
        Basis::l3(p0, p1).expect("mirror parameters live over x,y")
    })
}

/// The ordered-pair characterization chain, generic over the equality basis
/// and the membership formula (free variables `{x,y}`).
pub fn pair_chain(b: &Basis, mem: Formula) -> (Formula, Formula) {
    use Var3::{X, Y, Z};
    let memb = |u: Var3, v: Var3| b.subst2(mem, u, v).expect("membership lives over x,y");
    let eq = |u: Var3, v: Var3| b.eq(u, v);
    let ex = |v: Var3, f: Formula| Formula::exists(v.index(), f);
    let all = |v: Var3, f: Formula| Formula::forall(v.index(), f);

    // x = {y}
    let sing = all(Z, Formula::iff(memb(Z, X), eq(Z, Y)));
    let sing_at = |u: Var3, v: Var3| b.subst2(sing, u, v).expect("singleton lives over x,y");
    // {x} in y
    let sing_in = ex(Z, Formula::and(sing_at(Z, X), memb(Z, Y)));
    let sing_in_at =
        |u: Var3, v: Var3| b.subst2(sing_in, u, v).expect("singleton membership over x,y");
    // x = {{y}}
    let dsing = ex(Z, Formula::and(sing_at(Z, Y), sing_at(X, Z)));
    // x in Uy
    let in_union = ex(Z, Formula::and(memb(X, Z), memb(Z, Y)));
    let in_union_at =
        |u: Var3, v: Var3| b.subst2(in_union, u, v).expect("union membership over x,y");

    // op(x): exactly one singleton member, at most one second component,
    // every member inhabited.
    let unique_singleton = ex(Y, all(Z, Formula::iff(sing_in_at(Z, X), eq(Y, Z))));
    let unique_second = all(
        Y,
        all(
            Z,
            Formula::implies(
                Formula::and_all([
                    in_union_at(Y, X),
                    Formula::not(sing_in_at(Y, X)),
                    in_union_at(Z, X),
                    Formula::not(sing_in_at(Z, X)),
                ]),
                eq(Y, Z),
            ),
        ),
    );
    let members_inhabited = all(Y, ex(Z, Formula::implies(memb(Y, X), memb(Z, Y))));
    let op = Formula::and_all([unique_singleton, unique_second, members_inhabited]);

    let p0 = Formula::and(op, sing_in_at(Y, X));
    let p1 = Formula::and(
        op,
        Formula::or(
            dsing,
            Formula::and(in_union_at(Y, X), Formula::not(sing_in_at(Y, X))),
        ),
    );
    (p0, p1)
}
