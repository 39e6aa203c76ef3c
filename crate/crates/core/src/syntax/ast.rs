//! Hash-consed formula DAG for the five object languages.
//!
//! Every formula lives in a process-wide intern table. A [`Formula`] is a
//! 32-bit handle; two formulas are content-equal iff their handles are equal.
//! Structural sharing is load-bearing: the pairing-axiom builders produce
//! conjunctions whose tree expansion is astronomically larger than their DAG.

use std::collections::HashMap;
use std::fmt;
use std::num::NonZeroU32;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::SyntaxError;

/// Language tag. Determines which atoms and binders are legal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lang {
    /// Three variables, single atom `P(x,y,z)`, no equality.
    Fmd3,
    /// Three variables, single membership atom `in(x,y)`, equality `u=v`.
    L3,
    /// Unrestricted first-order language over `in` and `=` with variables `v0, v1, ...`.
    Fol,
    /// One propositional atom `p` with three diamonds.
    Modal,
    /// Joint three-variable language over `P`, `in` and `=`; used by the
    /// bridge sentences that define one signature from the other.
    Mixed3,
}

impl Lang {
    pub fn tag(self) -> &'static str {
        match self {
            Lang::Fmd3 => "fmd3",
            Lang::L3 => "l3",
            Lang::Fol => "fol",
            Lang::Modal => "modal",
            Lang::Mixed3 => "mixed3",
        }
    }

    pub fn from_tag(s: &str) -> Option<Lang> {
        match s {
            "fmd3" => Some(Lang::Fmd3),
            "l3" => Some(Lang::L3),
            "fol" => Some(Lang::Fol),
            "modal" => Some(Lang::Modal),
            "mixed3" => Some(Lang::Mixed3),
            _ => None,
        }
    }

    /// Three-variable languages quantify over `x,y,z` only.
    pub fn is_three_var(self) -> bool {
        !matches!(self, Lang::Fol | Lang::Modal)
    }
}

impl fmt::Display for Lang {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One of the three object variables of the restricted languages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var3 {
    X,
    Y,
    Z,
}

impl Var3 {
    pub const ALL: [Var3; 3] = [Var3::X, Var3::Y, Var3::Z];

    pub fn index(self) -> u32 {
        match self {
            Var3::X => 0,
            Var3::Y => 1,
            Var3::Z => 2,
        }
    }

    pub fn from_index(i: u32) -> Option<Var3> {
        match i {
            0 => Some(Var3::X),
            1 => Some(Var3::Y),
            2 => Some(Var3::Z),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var3::X => "x",
            Var3::Y => "y",
            Var3::Z => "z",
        }
    }

    /// The unique variable distinct from both arguments, when they differ.
    pub fn third(a: Var3, b: Var3) -> Option<Var3> {
        if a == b {
            return None;
        }
        Var3::ALL.iter().copied().find(|v| *v != a && *v != b)
    }
}

impl fmt::Display for Var3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A first-order variable `v0, v1, ...`; the supply is unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FolVar(pub u32);

impl fmt::Display for FolVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// Variable reference inside a node: indices 0,1,2 are `x,y,z` in the
/// three-variable languages; in FOL the index is the `v_i` subscript.
pub type VarIx = u32;

/// Modal operator index, 1..=3.
pub type ModalIx = u8;

/// Interned formula handle. Copyable; equality is content equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Formula(NonZeroU32);

/// The shape of a formula node. Children are interned handles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum View {
    /// The unique ternary atom; its argument tuple is always `(x,y,z)`.
    AtomP,
    /// Membership atom. Restricted to `(x,y)` outside FOL.
    AtomIn(VarIx, VarIx),
    /// Equality atom. Not available in `Fmd3` or `Modal`.
    AtomEq(VarIx, VarIx),
    /// The single propositional atom `p`.
    AtomModal,
    Not(Formula),
    Or(Formula, Formula),
    Exists(VarIx, Formula),
    Diamond(ModalIx, Formula),
}

/// Free-variable set, mask-compressed for indices below 64.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FreeVars {
    Mask(u64),
    Big(Arc<std::collections::BTreeSet<VarIx>>),
}

impl FreeVars {
    pub const EMPTY: FreeVars = FreeVars::Mask(0);

    fn single(v: VarIx) -> FreeVars {
        if v < 64 {
            FreeVars::Mask(1 << v)
        } else {
            FreeVars::Big(Arc::new([v].into_iter().collect()))
        }
    }

    fn pair(a: VarIx, b: VarIx) -> FreeVars {
        FreeVars::single(a).union(&FreeVars::single(b))
    }

    pub fn union(&self, other: &FreeVars) -> FreeVars {
        match (self, other) {
            (FreeVars::Mask(a), FreeVars::Mask(b)) => FreeVars::Mask(a | b),
            _ => {
                let mut s = self.iter().collect::<std::collections::BTreeSet<_>>();
                s.extend(other.iter());
                FreeVars::Big(Arc::new(s))
            }
        }
    }

    pub fn without(&self, v: VarIx) -> FreeVars {
        match self {
            FreeVars::Mask(m) if v < 64 => FreeVars::Mask(m & !(1 << v)),
            FreeVars::Mask(_) => self.clone(),
            FreeVars::Big(s) => {
                let mut s = (**s).clone();
                s.remove(&v);
                if s.iter().all(|&x| x < 64) {
                    FreeVars::Mask(s.iter().fold(0u64, |m, &x| m | (1 << x)))
                } else {
                    FreeVars::Big(Arc::new(s))
                }
            }
        }
    }

    pub fn contains(&self, v: VarIx) -> bool {
        match self {
            FreeVars::Mask(m) => v < 64 && (m >> v) & 1 == 1,
            FreeVars::Big(s) => s.contains(&v),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            FreeVars::Mask(m) => *m == 0,
            FreeVars::Big(s) => s.is_empty(),
        }
    }

    pub fn iter(&self) -> Box<dyn Iterator<Item = VarIx> + '_> {
        match self {
            FreeVars::Mask(m) => {
                let m = *m;
                Box::new((0..64).filter(move |i| (m >> i) & 1 == 1))
            }
            FreeVars::Big(s) => Box::new(s.iter().copied()),
        }
    }

    /// True when every free variable is in `vs`.
    pub fn subset_of(&self, vs: &[VarIx]) -> bool {
        self.iter().all(|v| vs.contains(&v))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Key {
    view: View,
    lang: Lang,
}

struct Entry {
    view: View,
    lang: Lang,
    free: FreeVars,
}

#[derive(Default)]
struct Store {
    entries: Vec<Entry>,
    table: HashMap<Key, Formula>,
}

fn store() -> &'static RwLock<Store> {
    static STORE: OnceLock<RwLock<Store>> = OnceLock::new();
    STORE.get_or_init(|| RwLock::new(Store::default()))
}

fn intern(view: View, lang: Lang, free: FreeVars) -> Formula {
    let key = Key { view, lang };
    {
        let s = store().read().unwrap();
        if let Some(&f) = s.table.get(&key) {
            return f;
        }
    }
    let mut s = store().write().unwrap();
    if let Some(&f) = s.table.get(&key) {
        return f;
    }
    s.entries.push(Entry { view, lang, free });
    let id = NonZeroU32::new(s.entries.len() as u32).expect("intern table overflow");
    let f = Formula(id);
    s.table.insert(key, f);
    f
}

impl Formula {
    fn entry<T>(self, read: impl FnOnce(&Entry) -> T) -> T {
        let s = store().read().unwrap();
        read(&s.entries[(self.0.get() - 1) as usize])
    }

    pub fn view(self) -> View {
        self.entry(|e| e.view)
    }

    pub fn lang(self) -> Lang {
        self.entry(|e| e.lang)
    }

    pub fn free_vars(self) -> FreeVars {
        self.entry(|e| e.free.clone())
    }

    pub fn is_sentence(self) -> bool {
        self.entry(|e| e.free.is_empty())
    }

    /// Raw handle value; dense and stable within a process.
    pub fn id(self) -> u32 {
        self.0.get()
    }

    // ----- constructors -----

    pub fn atom_p(lang: Lang) -> Formula {
        assert!(
            matches!(lang, Lang::Fmd3 | Lang::Mixed3),
            "atom P(x,y,z) is not available in {lang}"
        );
        intern(View::AtomP, lang, FreeVars::Mask(0b111))
    }

    pub fn atom_in(lang: Lang, u: VarIx, v: VarIx) -> Formula {
        match lang {
            Lang::L3 | Lang::Mixed3 => {
                assert!(
                    (u, v) == (0, 1),
                    "only in(x,y) is available in {lang}; got in({u},{v})"
                );
            }
            Lang::Fol => {}
            _ => panic!("atom in(..) is not available in {lang}"),
        }
        intern(View::AtomIn(u, v), lang, FreeVars::pair(u, v))
    }

    pub fn atom_eq(lang: Lang, u: VarIx, v: VarIx) -> Formula {
        match lang {
            Lang::L3 | Lang::Mixed3 => {
                assert!(u < 3 && v < 3, "equality over x,y,z only in {lang}");
            }
            Lang::Fol => {}
            _ => panic!("equality atom is not available in {lang}"),
        }
        intern(View::AtomEq(u, v), lang, FreeVars::pair(u, v))
    }

    pub fn atom_modal() -> Formula {
        intern(View::AtomModal, Lang::Modal, FreeVars::EMPTY)
    }

    pub fn not(f: Formula) -> Formula {
        let (lang, free) = f.entry(|e| (e.lang, e.free.clone()));
        intern(View::Not(f), lang, free)
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        let (la, fa) = a.entry(|e| (e.lang, e.free.clone()));
        let (lb, fb) = b.entry(|e| (e.lang, e.free.clone()));
        assert!(la == lb, "language mismatch in disjunction: {la} vs {lb}");
        intern(View::Or(a, b), la, fa.union(&fb))
    }

    pub fn exists(v: impl Into<VarIx>, f: Formula) -> Formula {
        let v = v.into();
        let (lang, free) = f.entry(|e| (e.lang, e.free.clone()));
        if lang.is_three_var() {
            assert!(v < 3, "quantified variable out of range for {lang}");
        }
        assert!(lang != Lang::Modal, "no quantifiers in the modal language");
        intern(View::Exists(v, f), lang, free.without(v))
    }

    pub fn diamond(i: ModalIx, f: Formula) -> Formula {
        assert!((1..=3).contains(&i), "modal index must be 1..=3");
        let (lang, free) = f.entry(|e| (e.lang, e.free.clone()));
        assert!(lang == Lang::Modal, "diamond applied to non-modal formula");
        intern(View::Diamond(i, f), lang, free)
    }

    // ----- derived connectives (the only sugar; desugared on construction) -----

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::not(Formula::or(Formula::not(a), Formula::not(b)))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::or(Formula::not(a), b)
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(Formula::implies(a, b), Formula::implies(b, a))
    }

    pub fn forall(v: impl Into<VarIx>, f: Formula) -> Formula {
        Formula::not(Formula::exists(v, Formula::not(f)))
    }

    pub fn box_(i: ModalIx, f: Formula) -> Formula {
        Formula::not(Formula::diamond(i, Formula::not(f)))
    }

    /// Right-folded conjunction of a non-empty list, in the given order.
    pub fn and_all<I>(items: I) -> Formula
    where
        I: IntoIterator<Item = Formula>,
        I::IntoIter: DoubleEndedIterator,
    {
        let mut it = items.into_iter().rev();
        let last = it.next().expect("and_all of empty list");
        it.fold(last, |acc, f| Formula::and(f, acc))
    }

    /// Right-folded disjunction of a non-empty list.
    pub fn or_all<I>(items: I) -> Formula
    where
        I: IntoIterator<Item = Formula>,
        I::IntoIter: DoubleEndedIterator,
    {
        let mut it = items.into_iter().rev();
        let last = it.next().expect("or_all of empty list");
        it.fold(last, |acc, f| Formula::or(f, acc))
    }

    // ----- traversal helpers -----

    /// All distinct reachable subformulas, children before parents.
    pub fn postorder(self) -> Vec<Formula> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        // Explicit stack; translated sentences nest deep enough to overflow
        // the call stack.
        let mut stack = vec![(self, false)];
        while let Some((f, expanded)) = stack.pop() {
            if expanded {
                out.push(f);
                continue;
            }
            if !seen.insert(f) {
                continue;
            }
            stack.push((f, true));
            match f.view() {
                View::Not(a) | View::Exists(_, a) | View::Diamond(_, a) => {
                    stack.push((a, false));
                }
                View::Or(a, b) => {
                    stack.push((b, false));
                    stack.push((a, false));
                }
                _ => {}
            }
        }
        out
    }

    /// Number of distinct nodes in the DAG.
    pub fn node_count_shared(self) -> usize {
        self.postorder().len()
    }

    /// Number of nodes of the unshared tree expansion, saturating.
    pub fn node_count_tree(self) -> u64 {
        let order = self.postorder();
        let mut counts: HashMap<Formula, u64> = HashMap::with_capacity(order.len());
        for f in &order {
            let c = match f.view() {
                View::Not(a) | View::Exists(_, a) | View::Diamond(_, a) => {
                    counts[&a].saturating_add(1)
                }
                View::Or(a, b) => counts[&a].saturating_add(counts[&b]).saturating_add(1),
                _ => 1,
            };
            counts.insert(*f, c);
        }
        counts[&self]
    }

    /// Height of the syntax tree (atoms have depth 1).
    pub fn depth(self) -> usize {
        let order = self.postorder();
        let mut depths: HashMap<Formula, usize> = HashMap::with_capacity(order.len());
        for f in &order {
            let d = match f.view() {
                View::Not(a) | View::Exists(_, a) | View::Diamond(_, a) => depths[&a] + 1,
                View::Or(a, b) => depths[&a].max(depths[&b]) + 1,
                _ => 1,
            };
            depths.insert(*f, d);
        }
        depths[&self]
    }

    /// Distinct atoms occurring in the formula.
    pub fn atoms(self) -> Vec<Formula> {
        self.postorder()
            .into_iter()
            .filter(|f| {
                matches!(
                    f.view(),
                    View::AtomP | View::AtomIn(..) | View::AtomEq(..) | View::AtomModal
                )
            })
            .collect()
    }

    /// Content fingerprint, independent of intern handles. Stable across
    /// processes for structurally identical formulas.
    pub fn fingerprint(self) -> u64 {
        fn mix(h: u64, v: u64) -> u64 {
            (h ^ v).wrapping_mul(0x100000001b3).rotate_left(17)
        }
        let order = self.postorder();
        let mut hs: HashMap<Formula, u64> = HashMap::with_capacity(order.len());
        for f in &order {
            let h = match f.view() {
                View::AtomP => 0x9e3779b97f4a7c15,
                View::AtomIn(u, v) => mix(mix(1, u as u64), v as u64),
                View::AtomEq(u, v) => mix(mix(2, u as u64), v as u64),
                View::AtomModal => 0x2545f4914f6cdd1d,
                View::Not(a) => mix(3, hs[&a]),
                View::Or(a, b) => mix(mix(4, hs[&a]), hs[&b]),
                View::Exists(v, a) => mix(mix(5, v as u64), hs[&a]),
                View::Diamond(i, a) => mix(mix(6, i as u64), hs[&a]),
            };
            hs.insert(*f, h);
        }
        hs[&self]
    }

    /// Rebuild the formula under a different language tag, validating that
    /// every atom is legal there.
    pub fn to_lang(self, lang: Lang) -> Result<Formula, SyntaxError> {
        let order = self.postorder();
        let mut map: HashMap<Formula, Formula> = HashMap::with_capacity(order.len());
        for f in &order {
            let g = match f.view() {
                View::AtomP => {
                    if !matches!(lang, Lang::Fmd3 | Lang::Mixed3) {
                        return Err(SyntaxError::language_violation(lang, "atom P(x,y,z)"));
                    }
                    Formula::atom_p(lang)
                }
                View::AtomIn(u, v) => {
                    let ok = match lang {
                        Lang::L3 | Lang::Mixed3 => (u, v) == (0, 1),
                        Lang::Fol => true,
                        _ => false,
                    };
                    if !ok {
                        return Err(SyntaxError::language_violation(lang, "membership atom"));
                    }
                    Formula::atom_in(lang, u, v)
                }
                View::AtomEq(u, v) => {
                    let ok = match lang {
                        Lang::L3 | Lang::Mixed3 => u < 3 && v < 3,
                        Lang::Fol => true,
                        _ => false,
                    };
                    if !ok {
                        return Err(SyntaxError::language_violation(lang, "equality atom"));
                    }
                    Formula::atom_eq(lang, u, v)
                }
                View::AtomModal => {
                    if lang != Lang::Modal {
                        return Err(SyntaxError::language_violation(lang, "atom p"));
                    }
                    Formula::atom_modal()
                }
                View::Not(a) => Formula::not(map[&a]),
                View::Or(a, b) => Formula::or(map[&a], map[&b]),
                View::Exists(v, a) => {
                    if lang.is_three_var() && v >= 3 {
                        return Err(SyntaxError::language_violation(lang, "FOL variable"));
                    }
                    Formula::exists(v, map[&a])
                }
                View::Diamond(i, a) => {
                    if lang != Lang::Modal {
                        return Err(SyntaxError::language_violation(lang, "modal operator"));
                    }
                    Formula::diamond(i, map[&a])
                }
            };
            map.insert(*f, g);
        }
        Ok(map[&self])
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Formula#{}[{}]", self.id(), crate::syntax::render(*self))
    }
}

/// Classification flags for a formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub is_sentence: bool,
    /// Language is `Fmd3` and the free variables are contained in `{x}`.
    /// Sentences qualify; builders that need a genuinely free `x` must check
    /// `free_variable_set` themselves.
    pub is_fmd3_one_free_x: bool,
    pub free_variable_set: Vec<VarIx>,
}

/// Compute the classification flags of a formula.
pub fn classify(f: Formula) -> Classification {
    let free = f.free_vars();
    let set: Vec<VarIx> = free.iter().collect();
    Classification {
        is_sentence: set.is_empty(),
        is_fmd3_one_free_x: f.lang() == Lang::Fmd3 && free.subset_of(&[0]),
        free_variable_set: set,
    }
}

// ---------------------------------------------------------------------------
// Equational terms

/// Interned equational term handle.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EqTerm(NonZeroU32);

/// Unary operation symbols of the equational presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnOp {
    Minus,
    F,
    G,
    H,
}

impl UnOp {
    pub fn name(self) -> &'static str {
        match self {
            UnOp::Minus => "-",
            UnOp::F => "f",
            UnOp::G => "g",
            UnOp::H => "h",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermView {
    Var(u32),
    Plus(EqTerm, EqTerm),
    Apply(UnOp, EqTerm),
}

#[derive(Default)]
struct TermStore {
    entries: Vec<TermView>,
    table: HashMap<TermView, EqTerm>,
}

fn term_store() -> &'static RwLock<TermStore> {
    static STORE: OnceLock<RwLock<TermStore>> = OnceLock::new();
    STORE.get_or_init(|| RwLock::new(TermStore::default()))
}

fn intern_term(view: TermView) -> EqTerm {
    {
        let s = term_store().read().unwrap();
        if let Some(&t) = s.table.get(&view) {
            return t;
        }
    }
    let mut s = term_store().write().unwrap();
    if let Some(&t) = s.table.get(&view) {
        return t;
    }
    s.entries.push(view);
    let t = EqTerm(NonZeroU32::new(s.entries.len() as u32).unwrap());
    s.table.insert(view, t);
    t
}

impl EqTerm {
    pub fn view(self) -> TermView {
        let s = term_store().read().unwrap();
        s.entries[(self.0.get() - 1) as usize]
    }

    pub fn var(i: u32) -> EqTerm {
        intern_term(TermView::Var(i))
    }

    pub fn plus(a: EqTerm, b: EqTerm) -> EqTerm {
        intern_term(TermView::Plus(a, b))
    }

    pub fn apply(op: UnOp, t: EqTerm) -> EqTerm {
        intern_term(TermView::Apply(op, t))
    }

    pub fn minus(t: EqTerm) -> EqTerm {
        EqTerm::apply(UnOp::Minus, t)
    }

    /// Term variables occurring in the term.
    pub fn vars(self) -> std::collections::BTreeSet<u32> {
        let mut out = std::collections::BTreeSet::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t.view() {
                TermView::Var(i) => {
                    out.insert(i);
                }
                TermView::Plus(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
                TermView::Apply(_, a) => stack.push(a),
            }
        }
        out
    }

    /// Simultaneous substitution of term variables.
    pub fn substitute(self, map: &HashMap<u32, EqTerm>) -> EqTerm {
        match self.view() {
            TermView::Var(i) => map.get(&i).copied().unwrap_or(self),
            TermView::Plus(a, b) => EqTerm::plus(a.substitute(map), b.substitute(map)),
            TermView::Apply(op, a) => EqTerm::apply(op, a.substitute(map)),
        }
    }
}

impl fmt::Debug for EqTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::syntax::render_term(*self))
    }
}

/// An equation between two terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: EqTerm,
    pub rhs: EqTerm,
}

impl Equation {
    pub fn new(lhs: EqTerm, rhs: EqTerm) -> Equation {
        Equation { lhs, rhs }
    }
}

/// Either kind of parsed statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ast {
    Formula(Formula),
    Equation(Equation),
}

impl Ast {
    pub fn formula(self) -> Option<Formula> {
        match self {
            Ast::Formula(f) => Some(f),
            _ => None,
        }
    }

    pub fn equation(self) -> Option<Equation> {
        match self {
            Ast::Equation(e) => Some(e),
            _ => None,
        }
    }
}
