//! Hereditarily finite sets, rank-stratified.
//!
//! The cumulative levels are `V_0 = {}` and `V_{k+1} = powerset(V_k)`. The
//! Ackermann coding (`a in b` iff bit `a` of `b` is set) maps `V_k` exactly
//! onto `{0 .. |V_k|-1}`, so a level is just an initial segment of the
//! naturals with bit-test membership. The sizes are 0, 1, 2, 4, 16, 65536.

use std::collections::{BTreeSet, HashMap};

use crate::error::SemanticsError;
use crate::semantics::bitset::{PairSet, TripleSet};
use crate::semantics::model::{Model, Structure};

/// Size of the level `V_rank`, if it is representable.
pub fn level_size(rank: u32) -> Option<u64> {
    match rank {
        0 => Some(0),
        1 => Some(1),
        2 => Some(2),
        3 => Some(4),
        4 => Some(16),
        5 => Some(65536),
        _ => None,
    }
}

/// Ackermann membership on codes.
pub fn code_member(a: u64, b: u64) -> bool {
    a < 64 && (b >> a) & 1 == 1
}

/// Code of the singleton `{a}`, if representable.
pub fn code_singleton(a: u64) -> Option<u64> {
    (a < 64).then(|| 1u64 << a)
}

/// Code of the unordered pair `{a, b}`.
pub fn code_unordered(a: u64, b: u64) -> Option<u64> {
    Some(code_singleton(a)? | code_singleton(b)?)
}

/// Code of the Kuratowski ordered pair `{{a},{a,b}}`.
pub fn code_kpair(a: u64, b: u64) -> Option<u64> {
    code_unordered(code_singleton(a)?, code_unordered(a, b)?)
}

/// First and second components of a Kuratowski pair code, if `x` is one.
pub fn decode_kpair(x: u64) -> Option<(u64, u64)> {
    let members: Vec<u64> = (0..64).filter(|i| (x >> i) & 1 == 1).map(|i| i as u64).collect();
    match members.len() {
        1 => {
            // {{a}} codes the pair (a, a).
            let m = members[0];
            let inner: Vec<u64> = (0..64).filter(|i| (m >> i) & 1 == 1).map(|i| i as u64).collect();
            (inner.len() == 1).then(|| (inner[0], inner[0]))
        }
        2 => {
            let (m0, m1) = (members[0], members[1]);
            let (sing, pair) = if m0.count_ones() == 1 && m1.count_ones() == 2 {
                (m0, m1)
            } else if m1.count_ones() == 1 && m0.count_ones() == 2 {
                (m1, m0)
            } else {
                return None;
            };
            let a = sing.trailing_zeros() as u64;
            if (pair >> a) & 1 != 1 {
                return None;
            }
            let b = (pair & !(1 << a)).trailing_zeros() as u64;
            Some((a, b))
        }
        _ => None,
    }
}

/// The structure `V_rank` with real membership and the induced ternary
/// relation `P(a,b,c) <=> a=b=c or a in b`.
#[derive(Debug, Clone, Copy)]
pub struct HfLevel {
    rank: u32,
    n: usize,
}

impl HfLevel {
    pub fn new(rank: u32) -> Result<HfLevel, SemanticsError> {
        let n = level_size(rank).ok_or(SemanticsError::RankTooLarge { rank, bound: 5 })?;
        Ok(HfLevel {
            rank,
            n: n as usize,
        })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }
}

impl Structure for HfLevel {
    fn size(&self) -> usize {
        self.n
    }

    fn has_p(&self) -> bool {
        true
    }

    fn has_in(&self) -> bool {
        true
    }

    fn p(&self, a: usize, b: usize, c: usize) -> bool {
        (a == b && b == c) || self.inn(a, b)
    }

    fn inn(&self, a: usize, b: usize) -> bool {
        code_member(a as u64, b as u64)
    }
}

/// Builder for explicit finite transitive sets of hereditarily finite sets,
/// used where the interesting witnesses (pairs of pairs and deeper) outgrow
/// the `u64` Ackermann codes. Elements get dense indices in insertion order;
/// members are always inserted before containers, so every prefix of the
/// element list is itself a transitive universe.
#[derive(Debug, Default)]
pub struct HfBuilder {
    sets: Vec<BTreeSet<usize>>,
    index: HashMap<BTreeSet<usize>, usize>,
}

impl HfBuilder {
    pub fn new() -> HfBuilder {
        HfBuilder::default()
    }

    /// Intern a set given by member indices. Members must already exist.
    pub fn add(&mut self, members: BTreeSet<usize>) -> usize {
        if let Some(&i) = self.index.get(&members) {
            return i;
        }
        for &m in &members {
            assert!(m < self.sets.len(), "member inserted after container");
        }
        let i = self.sets.len();
        self.index.insert(members.clone(), i);
        self.sets.push(members);
        i
    }

    /// Insert all of `V_rank` in Ackermann code order; index equals code.
    pub fn add_level(&mut self, rank: u32) -> Result<usize, SemanticsError> {
        let n = level_size(rank).ok_or(SemanticsError::RankTooLarge { rank, bound: 5 })? as usize;
        assert!(n <= 1 << 16, "level too large to materialize");
        for code in 0..n {
            let members: BTreeSet<usize> =
                (0..16).filter(|i| (code >> i) & 1 == 1).collect();
            let ix = self.add(members);
            assert_eq!(ix, code, "levels must be added before other elements");
        }
        Ok(n)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn singleton(&mut self, a: usize) -> usize {
        self.add([a].into_iter().collect())
    }

    pub fn unordered(&mut self, a: usize, b: usize) -> usize {
        self.add([a, b].into_iter().collect())
    }

    /// Kuratowski pair `{{a},{a,b}}`.
    pub fn kpair(&mut self, a: usize, b: usize) -> usize {
        let sa = self.singleton(a);
        let sab = self.unordered(a, b);
        self.unordered(sa, sab)
    }

    /// Triple coded as `<a, <b, c>>`.
    pub fn ktriple(&mut self, a: usize, b: usize, c: usize) -> usize {
        let inner = self.kpair(b, c);
        self.kpair(a, inner)
    }

    pub fn members(&self, i: usize) -> &BTreeSet<usize> {
        &self.sets[i]
    }

    /// Index of an existing set, if present.
    pub fn find(&self, members: &BTreeSet<usize>) -> Option<usize> {
        self.index.get(members).copied()
    }

    /// Materialize the first `prefix` elements as a `{P, in}` model with the
    /// induced ternary relation.
    pub fn model(&self, prefix: usize) -> Model {
        assert!(prefix <= self.sets.len());
        let mut inn = PairSet::empty(prefix);
        let mut p = TripleSet::empty(prefix);
        for (b, members) in self.sets.iter().enumerate().take(prefix) {
            for &a in members {
                debug_assert!(a < prefix, "prefix is transitive by construction");
                inn.insert(a, b);
                for c in 0..prefix {
                    p.insert(a, b, c);
                }
            }
        }
        for a in 0..prefix {
            p.insert(a, a, a);
        }
        Model::new(prefix, Some(p), Some(inn))
    }
}
