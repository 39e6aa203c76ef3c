//! The pairing statement of the membership language.
//!
//! The core is the mirror of the pairing axiom over real equality and the
//! membership-language parameters; the strong form adds injectivity of the
//! coded pairing, alignment of the two projections' domains, and
//! non-triviality of the universe.

use std::sync::OnceLock;

use crate::pairing::{ax_conjuncts, AxFamily, Index};
use crate::pipeline::params::l3_basis;
use crate::syntax::{Formula, Lang, Var3};

/// Mirror conjuncts of the pairing axiom over the membership language; same
/// families, same enumeration order as the P-language build.
pub fn pi_conjuncts(strong: bool) -> Vec<(AxFamily, Formula)> {
    ax_conjuncts(l3_basis(), strong)
}

/// The pairing statement: conjunction of the `(A1)`-`(A4)` mirrors.
pub fn pi() -> Formula {
    static PI: OnceLock<Formula> = OnceLock::new();
    *PI.get_or_init(|| Formula::and_all(pi_conjuncts(false).into_iter().map(|(_, f)| f)))
}

/// The three closed conjuncts the strong form adds on top of the pairing
/// statement: injectivity, domain alignment, non-triviality.
pub fn pi_plus_extras() -> [Formula; 3] {
    use Var3::{X, Y, Z};
    let b = l3_basis();
    let subst = |f: Formula, u: Var3, v: Var3| b.subst2(f, u, v).expect("parameters over x,y");
    let ex = |v: Var3, f: Formula| Formula::exists(v.index(), f);
    let all = |v: Var3, f: Formula| Formula::forall(v.index(), f);
    let eq = |u: u32, v: u32| Formula::atom_eq(Lang::L3, u, v);

    let share0 = ex(Z, Formula::and(subst(b.p(0), X, Z), subst(b.p(0), Y, Z)));
    let share1 = ex(Z, Formula::and(subst(b.p(1), X, Z), subst(b.p(1), Y, Z)));
    let injective = all(
        X,
        all(
            Y,
            Formula::implies(Formula::and(share0, share1), eq(0, 1)),
        ),
    );
    let domains = all(
        X,
        Formula::iff(ex(Y, b.p(0)), ex(Y, b.p(1))),
    );
    let nontrivial = ex(X, ex(Y, Formula::not(eq(0, 1))));
    [injective, domains, nontrivial]
}

/// The strong pairing statement.
pub fn pi_plus() -> Formula {
    static PI_PLUS: OnceLock<Formula> = OnceLock::new();
    *PI_PLUS.get_or_init(|| {
        let [injective, domains, nontrivial] = pi_plus_extras();
        Formula::and_all([pi(), injective, domains, nontrivial])
    })
}

/// Paired P-language and membership-language conjuncts of the strong pairing
/// axiom, in identical enumeration order; the backbone of the per-conjunct
/// agreement checks under the bridge.
pub fn sax_mirror_pairs() -> Vec<(AxFamily, Formula, Formula)> {
    let fmd = ax_conjuncts(crate::pipeline::params::default_basis(), true);
    let l3 = pi_conjuncts(true);
    assert_eq!(fmd.len(), l3.len());
    fmd.into_iter()
        .zip(l3)
        .map(|((fam_a, a), (fam_b, b))| {
            assert_eq!(fam_a, fam_b);
            (fam_a, a, b)
        })
        .collect()
}

/// The totality conjunct of the mirror at empty indices for two distinct
/// variables; its instability under truncation is itself a tested fact.
pub fn sample_totality_conjunct() -> Formula {
    let b = l3_basis();
    let e = Index::EMPTY;
    Formula::implies(
        Formula::and(
            b.proj_eq(Var3::X, &e, Var3::X, &e),
            b.proj_eq(Var3::Y, &e, Var3::Y, &e),
        ),
        Formula::exists(
            Var3::Z.index(),
            Formula::and(
                b.proj_eq(Var3::Z, &Index::bit(0), Var3::X, &e),
                b.proj_eq(Var3::Z, &Index::bit(1), Var3::Y, &e),
            ),
        ),
    )
}
