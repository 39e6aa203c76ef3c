//! Bottom-up truth-table evaluation over the formula DAG.
//!
//! For each distinct subformula the evaluator computes the set of satisfying
//! assignments as a bit table over the formula's variable tuple. Shared
//! subformulas are computed once, which is what makes the generated
//! pairing-axiom conjunctions and translated sentences checkable at all.

use std::collections::HashMap;

use crate::error::SemanticsError;
use crate::semantics::model::Structure;
use crate::syntax::{Formula, VarIx, View};

/// Default budget on table bits per node.
const BIT_BUDGET: u128 = 1 << 26;

#[derive(Debug, Clone, Copy)]
enum COp {
    AtomP,
    AtomIn(u8, u8),
    AtomEq(u8, u8),
    Not(u32),
    Or(u32, u32),
    /// Quantifier; the `u8` is the position of the variable in `vars`.
    Exists(u8, u32),
}

/// A compiled formula DAG: nodes in dependency order with dense indices.
pub struct DagIndex {
    nodes: Vec<COp>,
    pos: HashMap<Formula, u32>,
    roots: Vec<u32>,
    vars: Vec<VarIx>,
}

impl DagIndex {
    /// Compile the union DAG of the given formulas. The variable tuple is the
    /// sorted set of variables occurring (free or bound) in any of them.
    /// Panics on modal formulas; those are evaluated over frames instead.
    pub fn new(roots: &[Formula]) -> DagIndex {
        let mut order: Vec<Formula> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for &r in roots {
            for f in r.postorder() {
                if seen.insert(f) {
                    order.push(f);
                }
            }
        }
        let mut vars: Vec<VarIx> = Vec::new();
        let add_var = |v: VarIx, vars: &mut Vec<VarIx>| {
            if !vars.contains(&v) {
                vars.push(v);
            }
        };
        for f in &order {
            match f.view() {
                View::AtomP => {
                    for v in 0..3 {
                        add_var(v, &mut vars);
                    }
                }
                View::AtomIn(u, v) | View::AtomEq(u, v) => {
                    add_var(u, &mut vars);
                    add_var(v, &mut vars);
                }
                View::Exists(v, _) => add_var(v, &mut vars),
                View::Not(_) | View::Or(..) => {}
                View::AtomModal | View::Diamond(..) => {
                    panic!("modal formulas have no first-order table semantics")
                }
            }
        }
        vars.sort_unstable();
        let var_pos = |v: VarIx| vars.iter().position(|&u| u == v).unwrap() as u8;
        let mut pos: HashMap<Formula, u32> = HashMap::with_capacity(order.len());
        let mut nodes = Vec::with_capacity(order.len());
        for f in &order {
            let op = match f.view() {
                View::AtomP => COp::AtomP,
                View::AtomIn(u, v) => COp::AtomIn(var_pos(u), var_pos(v)),
                View::AtomEq(u, v) => COp::AtomEq(var_pos(u), var_pos(v)),
                View::Not(a) => COp::Not(pos[&a]),
                View::Or(a, b) => COp::Or(pos[&a], pos[&b]),
                View::Exists(v, a) => COp::Exists(var_pos(v), pos[&a]),
                View::AtomModal | View::Diamond(..) => unreachable!(),
            };
            pos.insert(*f, nodes.len() as u32);
            nodes.push(op);
        }
        let roots = roots.iter().map(|r| pos[r]).collect();
        DagIndex {
            nodes,
            pos,
            roots,
            vars,
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn vars(&self) -> &[VarIx] {
        &self.vars
    }

    pub fn root(&self, i: usize) -> u32 {
        self.roots[i]
    }

    pub fn ix_of(&self, f: Formula) -> Option<u32> {
        self.pos.get(&f).copied()
    }

    /// Evaluate all nodes over the structure.
    pub fn eval<S: Structure>(&self, s: &S) -> Result<Tables, SemanticsError> {
        self.eval_with_budget(s, BIT_BUDGET)
    }

    pub fn eval_with_budget<S: Structure>(
        &self,
        s: &S,
        budget: u128,
    ) -> Result<Tables, SemanticsError> {
        let n = s.size();
        let k = self.vars.len();
        let mut size_u128: u128 = 1;
        for _ in 0..k {
            size_u128 = size_u128.saturating_mul(n as u128);
        }
        if size_u128 > budget {
            return Err(SemanticsError::EvaluationTooLarge {
                need: size_u128,
                budget,
            });
        }
        let size = size_u128 as usize;
        let words = size.div_ceil(64).max(1);
        // Strides: the last variable in `vars` varies fastest.
        let mut strides = vec![1usize; k];
        for i in (0..k.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * n;
        }
        let mut data = vec![0u64; self.nodes.len() * words];
        let tail_mask = if size % 64 == 0 {
            !0u64
        } else {
            (1u64 << (size % 64)) - 1
        };
        let val_at = |idx: usize, pos: u8| (idx / strides[pos as usize]) % n.max(1);
        for (i, op) in self.nodes.iter().enumerate() {
            let (before, current) = data.split_at_mut(i * words);
            let cur = &mut current[..words];
            let get = |node: u32, idx: usize| -> bool {
                let w = &before[node as usize * words..(node as usize + 1) * words];
                (w[idx / 64] >> (idx % 64)) & 1 == 1
            };
            match *op {
                COp::AtomP => {
                    if !s.has_p() {
                        return Err(SemanticsError::MissingRelation { relation: "P" });
                    }
                    let (px, py, pz) = (
                        self.vars.iter().position(|&v| v == 0).unwrap() as u8,
                        self.vars.iter().position(|&v| v == 1).unwrap() as u8,
                        self.vars.iter().position(|&v| v == 2).unwrap() as u8,
                    );
                    for idx in 0..size {
                        if s.p(val_at(idx, px), val_at(idx, py), val_at(idx, pz)) {
                            cur[idx / 64] |= 1 << (idx % 64);
                        }
                    }
                }
                COp::AtomIn(u, v) => {
                    if !s.has_in() {
                        return Err(SemanticsError::MissingRelation { relation: "in" });
                    }
                    for idx in 0..size {
                        if s.inn(val_at(idx, u), val_at(idx, v)) {
                            cur[idx / 64] |= 1 << (idx % 64);
                        }
                    }
                }
                COp::AtomEq(u, v) => {
                    for idx in 0..size {
                        if val_at(idx, u) == val_at(idx, v) {
                            cur[idx / 64] |= 1 << (idx % 64);
                        }
                    }
                }
                COp::Not(a) => {
                    let src = &before[a as usize * words..(a as usize + 1) * words];
                    for (w, sw) in cur.iter_mut().zip(src.iter()) {
                        *w = !sw;
                    }
                    cur[words - 1] &= tail_mask;
                }
                COp::Or(a, b) => {
                    let sa = a as usize * words;
                    let sb = b as usize * words;
                    for w in 0..words {
                        cur[w] = before[sa + w] | before[sb + w];
                    }
                }
                COp::Exists(vp, a) => {
                    let stride = strides[vp as usize];
                    let block = stride * n.max(1);
                    if size > 0 {
                        let outer = size / block.max(1);
                        for o in 0..outer {
                            for inner in 0..stride {
                                let base = o * block + inner;
                                let mut acc = false;
                                for u in 0..n {
                                    if get(a, base + u * stride) {
                                        acc = true;
                                        break;
                                    }
                                }
                                if acc {
                                    for u in 0..n {
                                        let idx = base + u * stride;
                                        cur[idx / 64] |= 1 << (idx % 64);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(Tables {
            words,
            size,
            n,
            strides,
            data,
        })
    }
}

/// Result tables: one bit table per DAG node.
pub struct Tables {
    words: usize,
    size: usize,
    n: usize,
    strides: Vec<usize>,
    data: Vec<u64>,
}

impl Tables {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bit(&self, node: u32, idx: usize) -> bool {
        let base = node as usize * self.words;
        (self.data[base + idx / 64] >> (idx % 64)) & 1 == 1
    }

    /// Index of the assignment giving `values[i]` to the `i`-th variable of
    /// the compiled tuple.
    pub fn index_of(&self, values: &[usize]) -> usize {
        debug_assert_eq!(values.len(), self.strides.len());
        values
            .iter()
            .zip(self.strides.iter())
            .map(|(v, s)| v * s)
            .sum()
    }

    pub fn holds(&self, node: u32, values: &[usize]) -> bool {
        self.bit(node, self.index_of(values))
    }

    /// True iff the node's table is all-ones (valid under every assignment).
    pub fn is_valid(&self, node: u32) -> bool {
        let base = node as usize * self.words;
        if self.size == 0 {
            return true;
        }
        let full = self.size / 64;
        for w in 0..full {
            if self.data[base + w] != !0u64 {
                return false;
            }
        }
        let tail = self.size % 64;
        if tail != 0 {
            let mask = (1u64 << tail) - 1;
            if self.data[base + full] & mask != mask {
                return false;
            }
        }
        true
    }

    pub fn count_ones(&self, node: u32) -> usize {
        let base = node as usize * self.words;
        self.data[base..base + self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Compare the tables of a node in two evaluations on every assignment
    /// whose values are all below `restrict`. The two evaluations must share
    /// the variable tuple.
    pub fn agree_restricted(&self, node: u32, other: &Tables, other_node: u32, restrict: usize) -> bool {
        let k = self.strides.len();
        debug_assert_eq!(k, other.strides.len());
        let r = restrict.min(self.n).min(other.n);
        if k == 0 {
            return self.bit(node, 0) == other.bit(other_node, 0);
        }
        if r == 0 {
            return true;
        }
        let mut values = vec![0usize; k];
        loop {
            if self.holds(node, &values) != other.holds(other_node, &values) {
                return false;
            }
            // Odometer over {0..r-1}^k.
            let mut i = k;
            loop {
                if i == 0 {
                    return true;
                }
                i -= 1;
                values[i] += 1;
                if values[i] < r {
                    break;
                }
                values[i] = 0;
            }
        }
    }

    /// True iff the node holds on every assignment with all values below
    /// `restrict`.
    pub fn valid_restricted(&self, node: u32, restrict: usize) -> bool {
        let k = self.strides.len();
        let r = restrict.min(self.n);
        if k == 0 {
            return self.bit(node, 0);
        }
        if r == 0 {
            return true;
        }
        let mut values = vec![0usize; k];
        loop {
            if !self.holds(node, &values) {
                return false;
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return true;
                }
                i -= 1;
                values[i] += 1;
                if values[i] < r {
                    break;
                }
                values[i] = 0;
            }
        }
    }
}
