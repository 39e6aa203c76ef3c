//! The two-way bridge between the signatures.
//!
//! One sentence defines the ternary atom from membership and equality; the
//! other defines membership and equality back from the ternary atom. Over
//! universes with at least two elements the definitions are equivalent.

use rand::SeedableRng;

use crate::error::SemanticsError;
use crate::semantics::{enumerate_models, valid_in_model, DagIndex, Model, Signature};
use crate::syntax::{Formula, Lang, Var3};

/// The pair of defining sentences, in the joint language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bridge {
    /// `Axyz (P(x,y,z) <-> (x=y=z | in(x,y)))`
    pub delta: Formula,
    /// `Axyz ((in(x,y) <-> Az.P) & (x=y=z <-> (P & ~Az.P)))`
    pub delta_prime: Formula,
}

fn close_xyz(f: Formula) -> Formula {
    use Var3::{X, Y, Z};
    Formula::forall(
        X.index(),
        Formula::forall(Y.index(), Formula::forall(Z.index(), f)),
    )
}

/// Build both defining sentences.
pub fn bridge() -> Bridge {
    let lang = Lang::Mixed3;
    let p = Formula::atom_p(lang);
    let in_xy = Formula::atom_in(lang, 0, 1);
    let eq = |u: u32, v: u32| Formula::atom_eq(lang, u, v);
    let all_equal = Formula::and(eq(0, 1), eq(1, 2));
    let delta = close_xyz(Formula::iff(p, Formula::or(all_equal, in_xy)));
    let e = Formula::forall(2u32, p);
    let delta_prime = close_xyz(Formula::and(
        Formula::iff(in_xy, e),
        Formula::iff(all_equal, Formula::and(p, Formula::not(e))),
    ));
    Bridge { delta, delta_prime }
}

/// Exhaustively verify the equivalence of the two definitions over every
/// model of the joint signature with exactly `n` elements. Only `n = 2` is
/// within reach: the joint signature at `n = 3` has `2^36` models, so larger
/// sizes are covered by [`check_bridge_equiv_sampled`].
pub fn check_bridge_equiv(n: usize) -> Result<bool, SemanticsError> {
    if n != 2 {
        return Err(SemanticsError::SizeTooLarge { n, bound: 2 });
    }
    let b = bridge();
    let goal = Formula::iff(b.delta, b.delta_prime);
    let idx = DagIndex::new(&[goal]);
    for m in enumerate_models(n, Signature::PIn)? {
        let t = idx.eval(&m)?;
        if !t.is_valid(idx.root(0)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verify the equivalence on `count` seeded random models of size `n >= 2`.
pub fn check_bridge_equiv_sampled(
    n: usize,
    count: usize,
    seed: u64,
) -> Result<bool, SemanticsError> {
    if !(2..=3).contains(&n) {
        return Err(SemanticsError::SizeTooLarge { n, bound: 3 });
    }
    let b = bridge();
    let goal = Formula::iff(b.delta, b.delta_prime);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let m: Model = crate::gen::random_model(n, true, true, &mut rng);
        if !valid_in_model(&m, goal)? {
            return Ok(false);
        }
    }
    Ok(true)
}
