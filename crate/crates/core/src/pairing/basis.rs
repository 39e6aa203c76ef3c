//! Parameter formulas and the substitution/projection machinery over them.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use crate::error::BuildError;
use crate::syntax::{Formula, Lang, Var3};

/// A projection path: a finite word over `{0,1}`. The empty word denotes the
/// element itself; bit `k` selects the `k`-th component of a pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Index(Vec<u8>);

impl Index {
    pub const EMPTY: Index = Index(Vec::new());

    pub fn empty() -> Index {
        Index(Vec::new())
    }

    pub fn bit(k: u8) -> Index {
        assert!(k < 2);
        Index(vec![k])
    }

    pub fn from_bits(bits: &[u8]) -> Index {
        assert!(bits.iter().all(|b| *b < 2));
        Index(bits.to_vec())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    /// Concatenation `self` then `other`.
    pub fn concat(&self, other: &Index) -> Index {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Index(v)
    }

    /// Append one bit.
    pub fn push(&self, k: u8) -> Index {
        assert!(k < 2);
        let mut v = self.0.clone();
        v.push(k);
        Index(v)
    }

    /// Split off the final bit (for non-empty indices).
    pub fn split_last(&self) -> Option<(Index, u8)> {
        let (last, init) = self.0.split_last()?;
        Some((Index(init.to_vec()), *last))
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("e")
        } else {
            for b in &self.0 {
                write!(f, "{b}")?;
            }
            Ok(())
        }
    }
}

/// The index set of the pairing axioms: all words of length at most three,
/// ordered by length then lexicographically. There are fifteen.
pub fn h_indices() -> &'static [Index] {
    use std::sync::OnceLock;
    static H: OnceLock<Vec<Index>> = OnceLock::new();
    H.get_or_init(|| {
        let mut out = vec![Index::empty()];
        for len in 1..=3usize {
            for mask in 0..(1u32 << len) {
                let bits: Vec<u8> = (0..len).rev().map(|i| ((mask >> i) & 1) as u8).collect();
                out.push(Index::from_bits(&bits));
            }
        }
        out
    })
}

/// The four parameter formulas. The deltas play the role of equality on the
/// variable pairs `(x,y)` and `(x,z)`; the `p` formulas are the graphs of the
/// two pairing projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    pub delta_xy: Formula,
    pub delta_xz: Formula,
    pub p0: Formula,
    pub p1: Formula,
}

impl Params {
    /// Validates the free-variable constraints: `delta_xy`, `p0`, `p1` over
    /// `{x,y}` and `delta_xz` over `{x,z}`.
    pub fn new(
        delta_xy: Formula,
        delta_xz: Formula,
        p0: Formula,
        p1: Formula,
    ) -> Result<Params, BuildError> {
        for (f, allowed) in [
            (delta_xy, &[0u32, 1][..]),
            (delta_xz, &[0, 2][..]),
            (p0, &[0, 1][..]),
            (p1, &[0, 1][..]),
        ] {
            if !f.free_vars().subset_of(allowed) {
                return Err(BuildError::FreeVarViolation {
                    expected: allowed
                        .iter()
                        .map(|v| ["x", "y", "z"][*v as usize])
                        .collect::<Vec<_>>()
                        .join(","),
                });
            }
        }
        Ok(Params {
            delta_xy,
            delta_xz,
            p0,
            p1,
        })
    }
}

/// A fixed choice of equality formulas and pairing parameters, with the
/// substitution and projection builders over them. Construction is
/// deterministic: equal inputs give identical interned formulas.
pub struct Basis {
    lang: Lang,
    eq: [[Formula; 3]; 3],
    p: [Formula; 2],
    proj_memo: Mutex<HashMap<(Var3, Index, Var3, Index), Formula>>,
}

impl Basis {
    /// Basis over the P-language: equality is simulated from the deltas.
    pub fn fmd3(params: &Params) -> Basis {
        let e_xy = params.delta_xy;
        let e_xz = params.delta_xz;
        // A provably true formula, fixed form.
        let truth = Formula::or(e_xy, Formula::not(e_xy));
        let e_yz = Formula::exists(0u32, Formula::and(e_xy, e_xz));
        let eq = [
            [truth, e_xy, e_xz],
            [e_xy, truth, e_yz],
            [e_xz, e_yz, truth],
        ];
        Basis {
            lang: Lang::Fmd3,
            eq,
            p: [params.p0, params.p1],
            proj_memo: Mutex::new(HashMap::new()),
        }
    }

    /// Basis over the membership language: equality atoms are available, so
    /// the simulation is the real thing.
    pub fn l3(p0: Formula, p1: Formula) -> Result<Basis, BuildError> {
        for f in [p0, p1] {
            if f.lang() != Lang::L3 {
                return Err(BuildError::LanguageViolation {
                    expected: Lang::L3,
                    got: f.lang(),
                });
            }
            if !f.free_vars().subset_of(&[0, 1]) {
                return Err(BuildError::FreeVarViolation {
                    expected: "x,y".into(),
                });
            }
        }
        let e = |u: u32, v: u32| Formula::atom_eq(Lang::L3, u, v);
        let eq = [
            [e(0, 0), e(0, 1), e(0, 2)],
            [e(1, 0), e(1, 1), e(1, 2)],
            [e(2, 0), e(2, 1), e(2, 2)],
        ];
        Ok(Basis {
            lang: Lang::L3,
            eq,
            p: [p0, p1],
            proj_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn lang(&self) -> Lang {
        self.lang
    }

    pub fn p(&self, k: u8) -> Formula {
        self.p[k as usize]
    }

    /// Simulated (or real) equality of two variables.
    pub fn eq(&self, u: Var3, v: Var3) -> Formula {
        self.eq[u.index() as usize][v.index() as usize]
    }

    /// Substitution by simulated equality: the nine-case recursion.
    pub fn subst2(&self, f: Formula, u: Var3, v: Var3) -> Result<Formula, BuildError> {
        if !f.free_vars().subset_of(&[0, 1]) {
            return Err(BuildError::FreeVarViolation {
                expected: "x,y".into(),
            });
        }
        Ok(self.subst2_unchecked(f, u, v))
    }

    fn subst2_unchecked(&self, f: Formula, u: Var3, v: Var3) -> Formula {
        use Var3::{X, Y, Z};
        let ex = |w: Var3, g| Formula::exists(w.index(), g);
        let e = |a, b| self.eq(a, b);
        match (u, v) {
            (X, Y) => f,
            (X, Z) => ex(Y, Formula::and(e(Y, Z), f)),
            (Y, Z) => {
                let xz = self.subst2_unchecked(f, X, Z);
                ex(X, Formula::and(e(X, Y), xz))
            }
            (Y, X) => {
                let yz = self.subst2_unchecked(f, Y, Z);
                ex(Z, Formula::and(e(X, Z), yz))
            }
            (Z, X) => {
                let yx = self.subst2_unchecked(f, Y, X);
                ex(Y, Formula::and(e(Y, Z), yx))
            }
            (Z, Y) => ex(X, Formula::and(e(X, Z), f)),
            (X, X) => ex(Y, Formula::and(e(X, Y), f)),
            (Y, Y) => ex(X, Formula::and(e(X, Y), f)),
            (Z, Z) => {
                let xx = self.subst2_unchecked(f, X, X);
                ex(X, Formula::and(e(X, Z), xx))
            }
        }
    }

    /// The projection-equality family: `proj_eq(u, i, v, j)` states that the
    /// iterated projections of `u` along `i` and of `v` along `j` are both
    /// defined and equal.
    pub fn proj_eq(&self, u: Var3, i: &Index, v: Var3, j: &Index) -> Formula {
        if let Some(f) = self
            .proj_memo
            .lock()
            .unwrap()
            .get(&(u, i.clone(), v, j.clone()))
        {
            return *f;
        }
        let f = self.proj_eq_build(u, i, v, j);
        self.proj_memo
            .lock()
            .unwrap()
            .insert((u, i.clone(), v, j.clone()), f);
        f
    }

    fn proj_eq_build(&self, u: Var3, i: &Index, v: Var3, j: &Index) -> Formula {
        use Var3::{X, Y, Z};
        let ex = |w: Var3, g| Formula::exists(w.index(), g);
        if u == v {
            // The three same-variable cases reduce through fresh variables.
            return match u {
                X => ex(
                    Y,
                    Formula::and(self.eq(X, Y), self.proj_eq(X, i, Y, j)),
                ),
                Y => ex(
                    X,
                    Formula::and(self.eq(X, Y), self.proj_eq(X, i, Y, j)),
                ),
                Z => ex(
                    X,
                    Formula::and(
                        self.proj_eq(Z, i, X, &Index::EMPTY),
                        self.proj_eq(Z, j, X, &Index::EMPTY),
                    ),
                ),
            };
        }
        let w = Var3::third(u, v).expect("distinct variables");
        if !j.is_empty() {
            return ex(
                w,
                Formula::and(
                    self.proj_eq(u, i, w, &Index::EMPTY),
                    self.proj_eq(v, j, w, &Index::EMPTY),
                ),
            );
        }
        match i.split_last() {
            None => self.eq(u, v),
            Some((init, k)) if init.is_empty() => self
                .subst2(self.p(k), u, v)
                .expect("parameters have free variables x,y"),
            Some((init, k)) => ex(
                w,
                Formula::and(
                    self.proj_eq(u, &init, w, &Index::EMPTY),
                    self.subst2(self.p(k), w, v)
                        .expect("parameters have free variables x,y"),
                ),
            ),
        }
    }
}
