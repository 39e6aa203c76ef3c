//! The pairing axiom: a finite conjunction over the bounded index set.

use crate::pairing::basis::{h_indices, Basis, Index};
use crate::syntax::{Formula, Var3};

/// Number of indices of length at most three.
pub const H_INDEX_COUNT: usize = 15;

/// Conjunct families of the pairing axiom. The first three state equality
/// laws for projections (transitivity, congruence under projection,
/// existence of pairs); the fourth is totality of the variables; the fifth,
/// present only in the strong form, is uniqueness of pairs plus alignment of
/// the two projections' domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxFamily {
    A1,
    A2,
    A3,
    A4,
    A5,
}

/// The conjuncts, tagged by family, in deterministic lexicographic order
/// over `(family, u, v, w, i, j, k)`. `strong` adds the `(A5)` pair.
pub fn ax_conjuncts(basis: &Basis, strong: bool) -> Vec<(AxFamily, Formula)> {
    let h = h_indices();
    let vars = Var3::ALL;
    let mut out = Vec::with_capacity(94_718);

    // (A1): transitivity of projection equality.
    for u in vars {
        for v in vars {
            for w in vars {
                for i in h {
                    for j in h {
                        for k in h {
                            let f = Formula::implies(
                                Formula::and(basis.proj_eq(u, i, v, j), basis.proj_eq(v, j, w, k)),
                                basis.proj_eq(u, i, w, k),
                            );
                            out.push((AxFamily::A1, f));
                        }
                    }
                }
            }
        }
    }

    // (A2): congruence under one more projection step; the definedness guard
    // is part of the antecedent.
    for u in vars {
        for v in vars {
            for i in h.iter().filter(|i| i.len() <= 2) {
                for j in h.iter().filter(|j| j.len() <= 2) {
                    for k in 0u8..2 {
                        let ik = i.push(k);
                        let jk = j.push(k);
                        let f = Formula::implies(
                            Formula::and(
                                basis.proj_eq(u, i, v, j),
                                basis.proj_eq(u, &ik, u, &ik),
                            ),
                            basis.proj_eq(u, &ik, v, &jk),
                        );
                        out.push((AxFamily::A2, f));
                    }
                }
            }
        }
    }

    // (A3): existence of pairs, witnessed by a variable distinct from both.
    for u in vars {
        for v in vars {
            for w in vars {
                if w == u || w == v {
                    continue;
                }
                for i in h {
                    for j in h {
                        let f = Formula::implies(
                            Formula::and(basis.proj_eq(u, i, u, i), basis.proj_eq(v, j, v, j)),
                            Formula::exists(
                                w.index(),
                                Formula::and(
                                    basis.proj_eq(w, &Index::bit(0), u, i),
                                    basis.proj_eq(w, &Index::bit(1), v, j),
                                ),
                            ),
                        );
                        out.push((AxFamily::A3, f));
                    }
                }
            }
        }
    }

    // (A4): totality, literal reading including the u = w cases.
    for u in vars {
        for w in vars {
            let f = Formula::exists(w.index(), basis.eq(u, w));
            out.push((AxFamily::A4, f));
        }
    }

    if strong {
        // (A5): uniqueness of pairs; the two projections share a domain.
        let (x, y) = (Var3::X, Var3::Y);
        let b0 = Index::bit(0);
        let b1 = Index::bit(1);
        out.push((
            AxFamily::A5,
            Formula::implies(
                Formula::and(basis.proj_eq(x, &b0, y, &b0), basis.proj_eq(x, &b1, y, &b1)),
                basis.eq(x, y),
            ),
        ));
        out.push((
            AxFamily::A5,
            Formula::iff(basis.proj_eq(x, &b0, x, &b0), basis.proj_eq(x, &b1, x, &b1)),
        ));
    }
    out
}

/// The pairing axiom: right-folded conjunction of the `(A1)`-`(A4)` families.
pub fn build_ax(basis: &Basis) -> Formula {
    Formula::and_all(ax_conjuncts(basis, false).into_iter().map(|(_, f)| f))
}

/// The strong pairing axiom: `(A1)`-`(A5)`.
pub fn build_sax(basis: &Basis) -> Formula {
    Formula::and_all(ax_conjuncts(basis, true).into_iter().map(|(_, f)| f))
}
