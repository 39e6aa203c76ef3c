//! Formula builders for the pairing simulation: simulated equality and
//! substitution, iterated-projection equalities, the pairing axioms, and the
//! relation-algebra and cylindric reducts. Everything is parametric in the
//! four parameter formulas; the same machinery instantiated over the
//! membership language with real equality produces the mirror sentences used
//! by the translation pipeline.

mod ax;
mod basis;
mod reduct;

pub use ax::{ax_conjuncts, build_ax, build_sax, AxFamily, H_INDEX_COUNT};
pub use basis::{h_indices, Basis, Index, Params};
pub use reduct::{
    ca_apply, ca_cneg, ca_coord, ca_cyl, ca_diag, ca_plus, ca_transversal, ca_triplet, ra_apply,
    ra_at, ra_comp, ra_conv, ra_id, ra_neg, ra_pair, ra_plus, CaOp, DraElement, RaOp, RaResult,
};

use crate::error::BuildError;
use crate::syntax::{Formula, Var3};

/// Simulated equality between two of the three variables.
pub fn eq_formula(basis: &Basis, u: Var3, v: Var3) -> Formula {
    basis.eq(u, v)
}

/// Simulated simultaneous substitution: the formula whose meaning at `(u,v)`
/// is that of `f` at `(x,y)`. Requires the free variables of `f` to be
/// contained in `{x,y}`.
pub fn subst2(basis: &Basis, f: Formula, u: Var3, v: Var3) -> Result<Formula, BuildError> {
    basis.subst2(f, u, v)
}

/// Equality of iterated projections: both sides defined and equal.
pub fn proj_eq(basis: &Basis, u: Var3, i: &Index, v: Var3, j: &Index) -> Formula {
    basis.proj_eq(u, i, v, j)
}

#[cfg(test)]
mod tests;
