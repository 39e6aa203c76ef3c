//! Relation-algebra and cylindric reducts on one-free-variable formulas.
//!
//! A formula with free variable `x`, read at elements coding pairs, is a
//! binary relation; the reduct operations express composition, converse and
//! identity of those relations inside the three-variable language. Stacking
//! the coding once more (an element coding a pair whose second component
//! codes another pair is a triplet) gives cylindric-algebra-type operations.

use crate::error::BuildError;
use crate::pairing::basis::{Basis, Index};
use crate::syntax::{Formula, Var3};

fn require_one_free_x(op: &str, f: Formula) -> Result<(), BuildError> {
    let _ = op;
    if f.free_vars().subset_of(&[0]) {
        Ok(())
    } else {
        Err(BuildError::FreeVarViolation {
            expected: "x".into(),
        })
    }
}

/// `x` codes a pair: both projections are defined.
pub fn ra_pair(basis: &Basis) -> Formula {
    Formula::and(
        Formula::exists(1u32, basis.p(0)),
        Formula::exists(1u32, basis.p(1)),
    )
}

/// Read a one-free-variable formula at a projection of a variable:
/// for `u` distinct from `x` this is "the `i`-projection of `u` satisfies
/// the formula"; for `u = x` it routes through a fresh variable.
pub fn ra_at(basis: &Basis, f: Formula, u: Var3, i: &Index) -> Result<Formula, BuildError> {
    require_one_free_x("at", f)?;
    Ok(at_unchecked(basis, f, u, i))
}

fn at_unchecked(basis: &Basis, f: Formula, u: Var3, i: &Index) -> Formula {
    match u {
        Var3::Y | Var3::Z => Formula::exists(
            0u32,
            Formula::and(basis.proj_eq(Var3::X, &Index::EMPTY, u, i), f),
        ),
        Var3::X => {
            let at_y = at_unchecked(basis, f, Var3::Y, &Index::EMPTY);
            Formula::exists(
                1u32,
                Formula::and(basis.proj_eq(Var3::Y, &Index::EMPTY, Var3::X, i), at_y),
            )
        }
    }
}

/// An element of the relation-algebra reduct together with its membership
/// certificate: the formula is provably equivalent (under the pairing axiom)
/// to `witness ; id`, because the construction is closed under pair
/// equivalence. Membership is tracked, not decided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DraElement {
    pub formula: Formula,
    pub witness: Formula,
    pub built_by: &'static str,
}

/// Relation composition, everything packed through one witness variable.
pub fn ra_comp(basis: &Basis, f: Formula, g: Formula) -> Result<DraElement, BuildError> {
    require_one_free_x("comp", f)?;
    require_one_free_x("comp", g)?;
    let x = Var3::X;
    let y = Var3::Y;
    let conjuncts = [
        at_unchecked(basis, f, y, &Index::bit(0)),
        at_unchecked(basis, g, y, &Index::bit(1)),
        basis.proj_eq(x, &Index::bit(0), y, &Index::from_bits(&[0, 0])),
        basis.proj_eq(y, &Index::from_bits(&[0, 1]), y, &Index::from_bits(&[1, 0])),
        basis.proj_eq(y, &Index::from_bits(&[1, 1]), x, &Index::bit(1)),
    ];
    let formula = Formula::exists(1u32, Formula::and_all(conjuncts));
    Ok(DraElement {
        formula,
        witness: formula,
        built_by: "comp",
    })
}

/// Relation converse.
pub fn ra_conv(basis: &Basis, f: Formula) -> Result<DraElement, BuildError> {
    require_one_free_x("conv", f)?;
    let x = Var3::X;
    let y = Var3::Y;
    let conjuncts = [
        at_unchecked(basis, f, y, &Index::EMPTY),
        basis.proj_eq(y, &Index::bit(0), x, &Index::bit(1)),
        basis.proj_eq(y, &Index::bit(1), x, &Index::bit(0)),
    ];
    let formula = Formula::exists(1u32, Formula::and_all(conjuncts));
    Ok(DraElement {
        formula,
        witness: formula,
        built_by: "conv",
    })
}

/// The identity relation: both components of the coded pair agree.
pub fn ra_id(basis: &Basis) -> DraElement {
    let formula = basis.proj_eq(Var3::X, &Index::bit(0), Var3::X, &Index::bit(1));
    DraElement {
        formula,
        witness: formula,
        built_by: "id",
    }
}

/// Complement relative to the pairs.
pub fn ra_neg(basis: &Basis, f: Formula) -> Result<Formula, BuildError> {
    require_one_free_x("neg", f)?;
    Ok(Formula::and(ra_pair(basis), Formula::not(f)))
}

/// Join.
pub fn ra_plus(f: Formula, g: Formula) -> Formula {
    Formula::or(f, g)
}

/// Operation tags for the dispatching form of the reduct interface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RaOp {
    Pair,
    At(Var3, Index),
    Comp,
    Conv,
    Id,
    Neg,
    Plus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RaResult {
    Element(DraElement),
    Formula(Formula),
}

impl RaResult {
    pub fn formula(&self) -> Formula {
        match self {
            RaResult::Element(e) => e.formula,
            RaResult::Formula(f) => *f,
        }
    }
}

fn arity(op: &str, expected: usize, args: &[Formula]) -> Result<(), BuildError> {
    if args.len() == expected {
        Ok(())
    } else {
        Err(BuildError::ArityMismatch {
            op: op.into(),
            expected,
            got: args.len(),
        })
    }
}

/// Apply a reduct operation by tag.
pub fn ra_apply(basis: &Basis, op: RaOp, args: &[Formula]) -> Result<RaResult, BuildError> {
    Ok(match op {
        RaOp::Pair => {
            arity("pair", 0, args)?;
            RaResult::Formula(ra_pair(basis))
        }
        RaOp::At(u, i) => {
            arity("at", 1, args)?;
            RaResult::Formula(ra_at(basis, args[0], u, &i)?)
        }
        RaOp::Comp => {
            arity("comp", 2, args)?;
            RaResult::Element(ra_comp(basis, args[0], args[1])?)
        }
        RaOp::Conv => {
            arity("conv", 1, args)?;
            RaResult::Element(ra_conv(basis, args[0])?)
        }
        RaOp::Id => {
            arity("id", 0, args)?;
            RaResult::Element(ra_id(basis))
        }
        RaOp::Neg => {
            arity("neg", 1, args)?;
            RaResult::Formula(ra_neg(basis, args[0])?)
        }
        RaOp::Plus => {
            arity("plus", 2, args)?;
            RaResult::Formula(ra_plus(args[0], args[1]))
        }
    })
}

// ---- cylindric reduct ----

/// `x` codes a triplet: the projection along `11` is defined.
pub fn ca_triplet(basis: &Basis) -> Formula {
    let i = Index::from_bits(&[1, 1]);
    basis.proj_eq(Var3::X, &i, Var3::X, &i)
}

/// Triplet coordinates: component `0` of the outer pair, then the two
/// components of the inner pair.
pub fn ca_coord(j: u8) -> Index {
    match j {
        0 => Index::bit(0),
        1 => Index::from_bits(&[1, 0]),
        2 => Index::from_bits(&[1, 1]),
        _ => panic!("triplet coordinate out of range"),
    }
}

/// The transversal relation along coordinate `i`: both components of the
/// coded pair are triplets agreeing on every other coordinate.
pub fn ca_transversal(basis: &Basis, i: u8) -> Formula {
    assert!(i < 3);
    let triplet = ca_triplet(basis);
    let x = Var3::X;
    let mut conjuncts = vec![
        at_unchecked(basis, triplet, x, &Index::bit(0)),
        at_unchecked(basis, triplet, x, &Index::bit(1)),
    ];
    for j in 0..3u8 {
        if j != i {
            let cj = ca_coord(j);
            conjuncts.push(basis.proj_eq(
                x,
                &Index::bit(0).concat(&cj),
                x,
                &Index::bit(1).concat(&cj),
            ));
        }
    }
    Formula::and_all(conjuncts)
}

/// Cylindrification along coordinate `i`: composition with the transversal.
pub fn ca_cyl(basis: &Basis, i: u8, f: Formula) -> Result<Formula, BuildError> {
    Ok(ra_comp(basis, f, ca_transversal(basis, i))?.formula)
}

/// Diagonal element: the coded triplet's `i`-th and `j`-th coordinates agree.
pub fn ca_diag(basis: &Basis, i: u8, j: u8) -> Formula {
    assert!(i < 3 && j < 3);
    let x = Var3::X;
    let triplet = ca_triplet(basis);
    Formula::and(
        at_unchecked(basis, triplet, x, &Index::bit(1)),
        basis.proj_eq(
            x,
            &Index::bit(1).concat(&ca_coord(i)),
            x,
            &Index::bit(1).concat(&ca_coord(j)),
        ),
    )
}

/// Complement relative to the triplets.
pub fn ca_cneg(basis: &Basis, f: Formula) -> Result<Formula, BuildError> {
    require_one_free_x("cneg", f)?;
    let triplet = ca_triplet(basis);
    Ok(Formula::and(
        at_unchecked(basis, triplet, Var3::X, &Index::bit(1)),
        Formula::not(f),
    ))
}

/// Join.
pub fn ca_plus(f: Formula, g: Formula) -> Formula {
    Formula::or(f, g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaOp {
    Triplet,
    Transversal(u8),
    Cyl(u8),
    Diag(u8, u8),
    Neg,
    Plus,
}

/// Apply a cylindric-reduct operation by tag.
pub fn ca_apply(basis: &Basis, op: CaOp, args: &[Formula]) -> Result<Formula, BuildError> {
    Ok(match op {
        CaOp::Triplet => {
            arity("triplet", 0, args)?;
            ca_triplet(basis)
        }
        CaOp::Transversal(i) => {
            arity("transversal", 0, args)?;
            ca_transversal(basis, i)
        }
        CaOp::Cyl(i) => {
            arity("cyl", 1, args)?;
            require_one_free_x("cyl", args[0])?;
            ca_cyl(basis, i, args[0])?
        }
        CaOp::Diag(i, j) => {
            arity("diag", 0, args)?;
            ca_diag(basis, i, j)
        }
        CaOp::Neg => {
            arity("cneg", 1, args)?;
            ca_cneg(basis, args[0])?
        }
        CaOp::Plus => {
            arity("plus", 2, args)?;
            ca_plus(args[0], args[1])
        }
    })
}
