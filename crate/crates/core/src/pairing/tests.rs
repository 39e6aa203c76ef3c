use super::*;
use crate::semantics::{eval, Assignment};
use crate::syntax::{Formula, Lang, Var3};

/// The concrete deltas induced by reading the ternary atom as
/// "all equal or member": equality holds where the atom holds without being
/// z-independent. Used here as a worked parameter choice; the pipeline
/// exposes the same construction as its defaults.
fn concrete_params() -> Params {
    let p = Formula::atom_p(Lang::Fmd3);
    let e_all_z = Formula::forall(2u32, p);
    let d = Formula::and(p, Formula::not(e_all_z));
    let delta_xy = Formula::exists(2u32, d);
    let delta_xz = Formula::exists(1u32, d);
    Params::new(delta_xy, delta_xz, delta_xy, delta_xy).unwrap()
}

#[test]
fn params_validate_free_variables() {
    let p = Formula::atom_p(Lang::Fmd3);
    // P(x,y,z) has z free: not a legal delta_xy.
    assert!(Params::new(p, p, p, p).is_err());
    assert!(concrete_params().delta_xy.free_vars().subset_of(&[0, 1]));
}

#[test]
fn eq_formula_cases() {
    let params = concrete_params();
    let b = Basis::fmd3(&params);
    use Var3::{X, Y, Z};
    // e_yz is the projection through the common value.
    assert_eq!(
        b.eq(Y, Z),
        Formula::exists(0u32, Formula::and(params.delta_xy, params.delta_xz))
    );
    // e_xx is the fixed truth.
    assert_eq!(
        b.eq(X, X),
        Formula::or(params.delta_xy, Formula::not(params.delta_xy))
    );
    // Symmetric cases share the AST.
    assert_eq!(b.eq(Z, Y), b.eq(Y, Z));
    assert_eq!(b.eq(Y, X), b.eq(X, Y));
    for u in Var3::ALL {
        for v in Var3::ALL {
            if u != v {
                assert!(
                    b.eq(u, v).free_vars().subset_of(&[u.index(), v.index()]),
                    "eq({u},{v}) has stray free variables"
                );
            } else {
                // The diagonal is the fixed truth, which mentions x and y by
                // its verbatim form regardless of u.
                assert_eq!(b.eq(u, u), b.eq(Var3::X, Var3::X));
            }
        }
    }
}

#[test]
fn subst_identity_and_simple_cases() {
    let params = concrete_params();
    let b = Basis::fmd3(&params);
    let f = Formula::exists(2u32, Formula::atom_p(Lang::Fmd3)); // free {x,y}
    use Var3::{X, Y, Z};
    assert_eq!(b.subst2(f, X, Y).unwrap(), f);
    assert_eq!(
        b.subst2(f, Z, Y).unwrap(),
        Formula::exists(0u32, Formula::and(params.delta_xz, f))
    );
    // Free variable discipline on all nine cases.
    for u in Var3::ALL {
        for v in Var3::ALL {
            let g = b.subst2(f, u, v).unwrap();
            assert!(g.free_vars().subset_of(&[u.index(), v.index()]));
        }
    }
    // Precondition: argument must live in {x,y}.
    let has_z = Formula::atom_p(Lang::Fmd3);
    assert!(b.subst2(has_z, X, Y).is_err());
}

#[test]
fn substitution_simulates_reassignment_on_membership_digraphs() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
    let b = Basis::fmd3(&concrete_params());
    for n in [2usize, 3] {
        for _ in 0..6 {
            let m = crate::gen::random_irreflexive_digraph_model(n, &mut rng);
            for _ in 0..25 {
                let f = crate::gen::random_formula_free_in(
                    Lang::Fmd3,
                    rng.gen_range(1..=3),
                    &[0, 1],
                    &mut rng,
                );
                for u in Var3::ALL {
                    for v in Var3::ALL {
                        let g = b.subst2(f, u, v).unwrap();
                        for xv in 0..n {
                            for yv in 0..n {
                                for zv in 0..n {
                                    let a = Assignment::xyz(xv, yv, zv);
                                    let vals = [xv, yv, zv];
                                    let remapped = Assignment::xyz(
                                        vals[u.index() as usize],
                                        vals[v.index() as usize],
                                        zv,
                                    );
                                    assert_eq!(
                                        eval(&m, g, &a).unwrap(),
                                        eval(&m, f, &remapped).unwrap(),
                                        "subst mismatch at ({u},{v})"
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn projection_base_cases() {
    let params = concrete_params();
    let b = Basis::fmd3(&params);
    use Var3::{X, Y, Z};
    // (x_0 = y) is the first parameter read off directly.
    assert_eq!(
        b.proj_eq(X, &Index::bit(0), Y, &Index::EMPTY),
        b.subst2(params.p0, X, Y).unwrap()
    );
    assert_eq!(
        b.proj_eq(X, &Index::bit(0), Y, &Index::EMPTY),
        params.p0,
        "substitution at (x,y) is the identity"
    );
    // Same-variable case routes through the opposite variable.
    let i = Index::bit(0);
    let j = Index::bit(1);
    assert_eq!(
        b.proj_eq(Z, &i, Z, &j),
        Formula::exists(
            0u32,
            Formula::and(
                b.proj_eq(Z, &i, X, &Index::EMPTY),
                b.proj_eq(Z, &j, X, &Index::EMPTY)
            )
        )
    );
    // Free-variable discipline across a spread of indices.
    for u in Var3::ALL {
        for v in Var3::ALL {
            for i in h_indices().iter().step_by(4) {
                for j in h_indices().iter().step_by(5) {
                    let f = b.proj_eq(u, i, v, j);
                    assert!(f.free_vars().subset_of(&[u.index(), v.index()]));
                }
            }
        }
    }
}

#[test]
fn h_index_set() {
    let h = h_indices();
    assert_eq!(h.len(), H_INDEX_COUNT);
    assert_eq!(h.len(), 15);
    assert!(h.iter().all(|i| i.len() <= 3));
    // Ordered by length, then lexicographically.
    assert_eq!(format!("{}", h[0]), "e");
    assert_eq!(format!("{}", h[1]), "0");
    assert_eq!(format!("{}", h[2]), "1");
    assert_eq!(format!("{}", h[3]), "00");
    assert_eq!(format!("{}", h[14]), "111");
}

#[test]
fn ax_family_counts() {
    let b = Basis::fmd3(&concrete_params());
    let conjuncts = ax_conjuncts(&b, true);
    let count = |fam: AxFamily| conjuncts.iter().filter(|(f, _)| *f == fam).count();
    assert_eq!(count(AxFamily::A1), 27 * 15 * 15 * 15);
    assert_eq!(count(AxFamily::A1), 91_125);
    assert_eq!(count(AxFamily::A2), 9 * 7 * 7 * 2);
    assert_eq!(count(AxFamily::A3), 12 * 15 * 15);
    assert_eq!(count(AxFamily::A4), 9);
    assert_eq!(count(AxFamily::A5), 2);
    assert_eq!(conjuncts.len(), 91_125 + 882 + 2_700 + 9 + 2);
}

#[test]
fn ax_build_is_deterministic() {
    let b1 = Basis::fmd3(&concrete_params());
    let b2 = Basis::fmd3(&concrete_params());
    let ax1 = build_ax(&b1);
    let ax2 = build_ax(&b2);
    assert_eq!(ax1, ax2, "same parameters must give the identical AST");
    let sax = build_sax(&b1);
    assert!(sax.node_count_shared() > ax1.node_count_shared());
    assert_eq!(ax1.fingerprint(), ax2.fingerprint());
}

#[test]
fn comp_matches_the_display() {
    let params = concrete_params();
    let b = Basis::fmd3(&params);
    use Var3::{X, Y};
    let f = ra_id(&b).formula;
    let g = ra_pair(&b);
    let comp = ra_comp(&b, f, g).unwrap().formula;
    let expected = Formula::exists(
        1u32,
        Formula::and_all([
            ra_at(&b, f, Y, &Index::bit(0)).unwrap(),
            ra_at(&b, g, Y, &Index::bit(1)).unwrap(),
            b.proj_eq(X, &Index::bit(0), Y, &Index::from_bits(&[0, 0])),
            b.proj_eq(Y, &Index::from_bits(&[0, 1]), Y, &Index::from_bits(&[1, 0])),
            b.proj_eq(Y, &Index::from_bits(&[1, 1]), X, &Index::bit(1)),
        ]),
    );
    assert_eq!(comp, expected);
}

#[test]
fn reduct_results_have_one_free_variable() {
    let b = Basis::fmd3(&concrete_params());
    let id = ra_id(&b).formula;
    let pair = ra_pair(&b);
    for f in [
        id,
        pair,
        ra_comp(&b, id, pair).unwrap().formula,
        ra_conv(&b, id).unwrap().formula,
        ra_neg(&b, id).unwrap(),
        ca_triplet(&b),
        ca_transversal(&b, 0),
        ca_cyl(&b, 1, id).unwrap(),
        ca_diag(&b, 0, 1),
        ca_cneg(&b, id).unwrap(),
    ] {
        assert!(f.free_vars().subset_of(&[0]), "reduct output leaked a variable");
    }
    // Arguments with stray free variables are rejected.
    let bad = Formula::atom_p(Lang::Fmd3);
    assert!(ra_comp(&b, bad, id).is_err());
    assert!(ca_cneg(&b, bad).is_err());
}

#[test]
fn cylindrification_is_composition_with_the_transversal() {
    let b = Basis::fmd3(&concrete_params());
    let id = ra_id(&b).formula;
    for i in 0..3u8 {
        assert_eq!(
            ca_cyl(&b, i, id).unwrap(),
            ra_comp(&b, id, ca_transversal(&b, i)).unwrap().formula
        );
    }
}

#[test]
fn diag_example_shape() {
    let b = Basis::fmd3(&concrete_params());
    let d01 = ca_diag(&b, 0, 1);
    let expected = Formula::and(
        ra_at(&b, ca_triplet(&b), Var3::X, &Index::bit(1)).unwrap(),
        b.proj_eq(
            Var3::X,
            &Index::from_bits(&[1, 0]),
            Var3::X,
            &Index::from_bits(&[1, 1, 0]),
        ),
    );
    assert_eq!(d01, expected);
    assert_eq!(ca_coord(0), Index::bit(0));
    assert_eq!(ca_coord(1), Index::from_bits(&[1, 0]));
    assert_eq!(ca_coord(2), Index::from_bits(&[1, 1]));
}

#[test]
fn dispatcher_checks_arity() {
    let b = Basis::fmd3(&concrete_params());
    assert!(matches!(
        ra_apply(&b, RaOp::Comp, &[ra_id(&b).formula]),
        Err(crate::error::BuildError::ArityMismatch { .. })
    ));
    assert!(ca_apply(&b, CaOp::Diag(0, 2), &[]).is_ok());
}

#[test]
fn l3_basis_uses_real_equality() {
    let in_xy = Formula::atom_in(Lang::L3, 0, 1);
    let b = Basis::l3(in_xy, in_xy).unwrap();
    assert_eq!(b.eq(Var3::X, Var3::Y), Formula::atom_eq(Lang::L3, 0, 1));
    assert_eq!(b.eq(Var3::Z, Var3::Z), Formula::atom_eq(Lang::L3, 2, 2));
    // Rejects parameters of the wrong language.
    assert!(Basis::l3(Formula::atom_p(Lang::Fmd3), in_xy).is_err());
}
