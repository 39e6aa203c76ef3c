//! Kripke frames with three commuting equivalence relations.

use crate::error::SemanticsError;
use crate::semantics::model::{Model, Structure};
use crate::syntax::{Formula, View};

/// A binary relation over `{0..n-1}` stored as row bitsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitRel {
    n: usize,
    row_words: usize,
    bits: Vec<u64>,
}

impl BitRel {
    pub fn empty(n: usize) -> BitRel {
        let row_words = n.div_ceil(64).max(1);
        BitRel {
            n,
            row_words,
            bits: vec![0; n * row_words],
        }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> BitRel {
        let mut r = BitRel::empty(n);
        for (a, b) in pairs {
            r.insert(a, b);
        }
        r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        self.bits[a * self.row_words + b / 64] |= 1 << (b % 64);
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        (self.bits[a * self.row_words + b / 64] >> (b % 64)) & 1 == 1
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.row_words..(a + 1) * self.row_words]
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_equivalence(&self) -> Result<(), SemanticsError> {
        for a in 0..self.n {
            if !self.contains(a, a) {
                return Err(SemanticsError::NotEquivalence("missing a reflexive pair"));
            }
            for b in 0..self.n {
                if self.contains(a, b) {
                    if !self.contains(b, a) {
                        return Err(SemanticsError::NotEquivalence("not symmetric"));
                    }
                    // Transitivity: row(b) must be contained in row(a).
                    for (wa, wb) in self.row(a).iter().zip(self.row(b).iter()) {
                        if wb & !wa != 0 {
                            return Err(SemanticsError::NotEquivalence("not transitive"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Relational composition `self ; other`.
    pub fn compose(&self, other: &BitRel) -> BitRel {
        let mut out = BitRel::empty(self.n);
        for a in 0..self.n {
            let out_row = a * self.row_words;
            for b in 0..self.n {
                if self.contains(a, b) {
                    let other_row = other.row(b);
                    for w in 0..self.row_words {
                        out.bits[out_row + w] |= other_row[w];
                    }
                }
            }
        }
        out
    }
}

/// World set with three commuting equivalence relations and a valuation of
/// the single atom `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeFrame {
    worlds: usize,
    r: [BitRel; 3],
    val_p: Vec<u64>,
}

impl KripkeFrame {
    /// Validates that each relation is an equivalence and that any two of
    /// them commute under composition.
    pub fn new(worlds: usize, r: [BitRel; 3], val_p: Vec<bool>) -> Result<KripkeFrame, SemanticsError> {
        for rel in &r {
            assert_eq!(rel.n(), worlds);
            rel.is_equivalence()?;
        }
        for i in 0..3 {
            for j in (i + 1)..3 {
                if r[i].compose(&r[j]) != r[j].compose(&r[i]) {
                    return Err(SemanticsError::NonCommuting(i as u8 + 1, j as u8 + 1));
                }
            }
        }
        Ok(Self::new_unchecked(worlds, r, val_p))
    }

    pub(crate) fn new_unchecked(worlds: usize, r: [BitRel; 3], val_p: Vec<bool>) -> KripkeFrame {
        let mut bits = vec![0u64; worlds.div_ceil(64).max(1)];
        for (w, v) in val_p.iter().enumerate() {
            if *v {
                bits[w / 64] |= 1 << (w % 64);
            }
        }
        KripkeFrame {
            worlds,
            r,
            val_p: bits,
        }
    }

    pub fn worlds(&self) -> usize {
        self.worlds
    }

    pub fn relation(&self, i: u8) -> &BitRel {
        &self.r[(i - 1) as usize]
    }

    pub fn p_at(&self, w: usize) -> bool {
        (self.val_p[w / 64] >> (w % 64)) & 1 == 1
    }
}

/// Standard Kripke satisfaction at a world.
pub fn eval_modal(fr: &KripkeFrame, w: usize, f: Formula) -> Result<bool, SemanticsError> {
    match f.view() {
        View::AtomModal => Ok(fr.p_at(w)),
        View::Not(a) => Ok(!eval_modal(fr, w, a)?),
        View::Or(a, b) => Ok(eval_modal(fr, w, a)? || eval_modal(fr, w, b)?),
        View::Diamond(i, a) => {
            for v in 0..fr.worlds() {
                if fr.relation(i).contains(w, v) && eval_modal(fr, v, a)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        _ => Err(SemanticsError::WrongLanguage {
            lang: f.lang(),
            message: "only modal formulas are evaluated over frames".into(),
        }),
    }
}

/// True at every world.
pub fn valid_in_frame(fr: &KripkeFrame, f: Formula) -> Result<bool, SemanticsError> {
    for w in 0..fr.worlds() {
        if !eval_modal(fr, w, f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The product frame of a `P`-model: worlds are variable triples, the `i`-th
/// relation connects triples that agree everywhere except possibly the `i`-th
/// coordinate, and `p` holds where `P` does.
pub fn to_frame(m: &Model) -> Result<KripkeFrame, SemanticsError> {
    let p = m
        .p_relation()
        .ok_or(SemanticsError::MissingRelation { relation: "P" })?;
    let n = m.size();
    let worlds = n * n * n;
    let widx = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
    let mut rels = [BitRel::empty(worlds), BitRel::empty(worlds), BitRel::empty(worlds)];
    let mut val = vec![false; worlds];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let w = widx(a, b, c);
                val[w] = p.contains(a, b, c);
                for u in 0..n {
                    rels[0].insert(w, widx(u, b, c));
                    rels[1].insert(w, widx(a, u, c));
                    rels[2].insert(w, widx(a, b, u));
                }
            }
        }
    }
    // Coordinate-wise construction: equivalences that commute by design.
    Ok(KripkeFrame::new_unchecked(worlds, rels, val))
}

/// All partitions of `{0..n-1}`, as restricted-growth label vectors.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(labels: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if labels.len() == n {
            out.push(labels.clone());
            return;
        }
        for l in 0..=max {
            labels.push(l);
            let new_max = if l == max { max + 1 } else { max };
            go(labels, new_max, n, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    go(&mut Vec::new(), 0, n, &mut out);
    out
}

fn rel_of_partition(labels: &[usize]) -> BitRel {
    let n = labels.len();
    let mut r = BitRel::empty(n);
    for a in 0..n {
        for b in 0..n {
            if labels[a] == labels[b] {
                r.insert(a, b);
            }
        }
    }
    r
}

/// Every frame with `worlds` worlds whose three relations are commuting
/// equivalences, paired with every valuation of `p`. Deterministic order.
pub fn enumerate_commuting_frames(worlds: usize) -> Result<Vec<KripkeFrame>, SemanticsError> {
    if worlds > 4 {
        return Err(SemanticsError::SizeTooLarge {
            n: worlds,
            bound: 4,
        });
    }
    let parts: Vec<BitRel> = partitions(worlds).iter().map(|p| rel_of_partition(p)).collect();
    let mut out = Vec::new();
    for r1 in &parts {
        for r2 in &parts {
            if r1.compose(r2) != r2.compose(r1) {
                continue;
            }
            for r3 in &parts {
                if r1.compose(r3) != r3.compose(r1) || r2.compose(r3) != r3.compose(r2) {
                    continue;
                }
                for val_mask in 0u64..(1 << worlds) {
                    let val = (0..worlds).map(|w| (val_mask >> w) & 1 == 1).collect();
                    out.push(KripkeFrame::new_unchecked(
                        worlds,
                        [r1.clone(), r2.clone(), r3.clone()],
                        val,
                    ));
                }
            }
        }
    }
    Ok(out)
}
