//! Finite relational structures and direct Tarskian evaluation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::SemanticsError;
use crate::semantics::bitset::{PairSet, TripleSet};
use crate::syntax::{Formula, VarIx, View};

/// Anything a formula can be evaluated over: a finite universe with an
/// optional ternary relation and an optional membership relation.
pub trait Structure {
    fn size(&self) -> usize;
    fn has_p(&self) -> bool;
    fn has_in(&self) -> bool;
    fn p(&self, a: usize, b: usize, c: usize) -> bool;
    fn inn(&self, a: usize, b: usize) -> bool;
}

/// A finite model with explicitly stored relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    n: usize,
    p: Option<TripleSet>,
    inn: Option<PairSet>,
}

impl Model {
    pub fn new(n: usize, p: Option<TripleSet>, inn: Option<PairSet>) -> Model {
        if let Some(p) = &p {
            assert_eq!(p.n(), n);
        }
        if let Some(i) = &inn {
            assert_eq!(i.n(), n);
        }
        assert!(p.is_some() || inn.is_some(), "model needs at least one relation");
        Model { n, p, inn }
    }

    pub fn from_triples(n: usize, triples: &[(usize, usize, usize)]) -> Model {
        let mut p = TripleSet::empty(n);
        for &(a, b, c) in triples {
            p.insert(a, b, c);
        }
        Model::new(n, Some(p), None)
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Model {
        let mut i = PairSet::empty(n);
        for &(a, b) in pairs {
            i.insert(a, b);
        }
        Model::new(n, None, Some(i))
    }

    /// Expand a membership relation to a `{P, in}` model where `P` holds of
    /// `(a,b,c)` iff `a=b=c` or `a in b`.
    pub fn induced_from_in(n: usize, pairs: &PairSet) -> Model {
        let mut p = TripleSet::empty(n);
        for a in 0..n {
            p.insert(a, a, a);
            for b in 0..n {
                if pairs.contains(a, b) {
                    for c in 0..n {
                        p.insert(a, b, c);
                    }
                }
            }
        }
        Model::new(n, Some(p), Some(pairs.clone()))
    }

    pub fn p_relation(&self) -> Option<&TripleSet> {
        self.p.as_ref()
    }

    pub fn in_relation(&self) -> Option<&PairSet> {
        self.inn.as_ref()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ModelJson::from(self)).unwrap()
    }

    pub fn from_json(text: &str) -> Result<Model, serde_json::Error> {
        let j: ModelJson = serde_json::from_str(text)?;
        Ok(j.into_model())
    }
}

impl Structure for Model {
    fn size(&self) -> usize {
        self.n
    }

    fn has_p(&self) -> bool {
        self.p.is_some()
    }

    fn has_in(&self) -> bool {
        self.inn.is_some()
    }

    fn p(&self, a: usize, b: usize, c: usize) -> bool {
        self.p.as_ref().is_some_and(|p| p.contains(a, b, c))
    }

    fn inn(&self, a: usize, b: usize) -> bool {
        self.inn.as_ref().is_some_and(|i| i.contains(a, b))
    }
}

/// Serialized form: `{"universe": n, "P": [[a,b,c],...], "in": [[a,b],...]}`.
#[derive(Serialize, Deserialize)]
struct ModelJson {
    universe: usize,
    #[serde(rename = "P", skip_serializing_if = "Option::is_none")]
    p: Option<Vec<[usize; 3]>>,
    #[serde(rename = "in", skip_serializing_if = "Option::is_none")]
    inn: Option<Vec<[usize; 2]>>,
}

impl From<&Model> for ModelJson {
    fn from(m: &Model) -> ModelJson {
        ModelJson {
            universe: m.n,
            p: m.p.as_ref().map(|p| p.iter().map(|(a, b, c)| [a, b, c]).collect()),
            inn: m.inn.as_ref().map(|i| i.iter().map(|(a, b)| [a, b]).collect()),
        }
    }
}

impl ModelJson {
    fn into_model(self) -> Model {
        let p = self.p.map(|ts| {
            let mut s = TripleSet::empty(self.universe);
            for [a, b, c] in ts {
                s.insert(a, b, c);
            }
            s
        });
        let inn = self.inn.map(|ps| {
            let mut s = PairSet::empty(self.universe);
            for [a, b] in ps {
                s.insert(a, b);
            }
            s
        });
        Model::new(self.universe, p, inn)
    }
}

/// A variable assignment; total on whatever the evaluated formula needs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment(pub BTreeMap<VarIx, usize>);

impl Assignment {
    pub fn new() -> Assignment {
        Assignment(BTreeMap::new())
    }

    /// Assignment for the three-variable languages.
    pub fn xyz(x: usize, y: usize, z: usize) -> Assignment {
        Assignment([(0, x), (1, y), (2, z)].into_iter().collect())
    }

    pub fn set(mut self, v: VarIx, val: usize) -> Assignment {
        self.0.insert(v, val);
        self
    }

    pub fn get(&self, v: VarIx) -> Option<usize> {
        self.0.get(&v).copied()
    }
}

fn lookup(env: &[(VarIx, usize)], a: &Assignment, v: VarIx) -> Result<usize, SemanticsError> {
    for &(u, val) in env.iter().rev() {
        if u == v {
            return Ok(val);
        }
    }
    a.get(v).ok_or(SemanticsError::PartialAssignment { var: v })
}

fn eval_rec<S: Structure>(
    s: &S,
    f: Formula,
    a: &Assignment,
    env: &mut Vec<(VarIx, usize)>,
) -> Result<bool, SemanticsError> {
    match f.view() {
        View::AtomP => {
            if !s.has_p() {
                return Err(SemanticsError::MissingRelation { relation: "P" });
            }
            let x = lookup(env, a, 0)?;
            let y = lookup(env, a, 1)?;
            let z = lookup(env, a, 2)?;
            Ok(s.p(x, y, z))
        }
        View::AtomIn(u, v) => {
            if !s.has_in() {
                return Err(SemanticsError::MissingRelation { relation: "in" });
            }
            Ok(s.inn(lookup(env, a, u)?, lookup(env, a, v)?))
        }
        View::AtomEq(u, v) => Ok(lookup(env, a, u)? == lookup(env, a, v)?),
        View::AtomModal | View::Diamond(..) => Err(SemanticsError::WrongLanguage {
            lang: f.lang(),
            message: "modal formulas are evaluated over Kripke frames".into(),
        }),
        View::Not(g) => Ok(!eval_rec(s, g, a, env)?),
        View::Or(g, h) => Ok(eval_rec(s, g, a, env)? || eval_rec(s, h, a, env)?),
        View::Exists(v, g) => {
            for u in 0..s.size() {
                env.push((v, u));
                let r = eval_rec(s, g, a, env);
                env.pop();
                if r? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

/// Standard satisfaction by structural recursion; quantifiers range over the
/// whole universe. This is the slow, obviously-correct route; the table
/// evaluator in [`crate::semantics::tables`] is checked against it.
pub fn eval<S: Structure>(s: &S, f: Formula, a: &Assignment) -> Result<bool, SemanticsError> {
    // Fail fast on uncovered free variables.
    for v in f.free_vars().iter() {
        if a.get(v).is_none() {
            return Err(SemanticsError::PartialAssignment { var: v });
        }
    }
    eval_rec(s, f, a, &mut Vec::new())
}

/// True iff `f` holds under every assignment to its variables.
pub fn valid_in_model<S: Structure>(s: &S, f: Formula) -> Result<bool, SemanticsError> {
    let idx = crate::semantics::tables::DagIndex::new(&[f]);
    let tables = idx.eval(s)?;
    Ok(tables.is_valid(idx.root(0)))
}

/// Which relations an enumerated model interprets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Signature {
    P,
    In,
    PIn,
}

/// Every interpretation of the signature over `{0..n-1}`, each exactly once,
/// in a fixed order (the `P` mask is the outer counter, the `in` mask the
/// inner one, bits in lexicographic tuple order).
pub fn enumerate_models(
    n: usize,
    signature: Signature,
) -> Result<impl Iterator<Item = Model>, SemanticsError> {
    if n > 3 {
        return Err(SemanticsError::SizeTooLarge { n, bound: 3 });
    }
    let p_bits = n * n * n;
    let in_bits = n * n;
    let (p_count, in_count) = match signature {
        Signature::P => (1u64 << p_bits, 1),
        Signature::In => (1, 1u64 << in_bits),
        Signature::PIn => (1u64 << p_bits, 1u64 << in_bits),
    };
    Ok((0..p_count).flat_map(move |pm| {
        (0..in_count).map(move |im| {
            let p = match signature {
                Signature::In => None,
                _ => Some(TripleSet::from_mask(n, pm)),
            };
            let inn = match signature {
                Signature::P => None,
                _ => Some(PairSet::from_mask(n, im)),
            };
            Model::new(n, p, inn)
        })
    }))
}
