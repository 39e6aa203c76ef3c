//! Seeded random generators for formulas and models, used by the self-test
//! harness and the test suites.

use rand::Rng;

use crate::semantics::{Model, PairSet, TripleSet};
use crate::syntax::{Ast, EqTerm, Equation, Formula, Lang, TermView, UnOp, VarIx, View};

/// A random formula of the language with syntax-tree depth at most `depth`.
pub fn random_formula<R: Rng>(lang: Lang, depth: usize, rng: &mut R) -> Formula {
    if depth <= 1 {
        return random_atom(lang, rng);
    }
    match rng.gen_range(0..4) {
        0 => random_atom(lang, rng),
        1 => Formula::not(random_formula(lang, depth - 1, rng)),
        2 => Formula::or(
            random_formula(lang, depth - 1, rng),
            random_formula(lang, depth - 1, rng),
        ),
        _ => {
            if lang == Lang::Modal {
                Formula::diamond(rng.gen_range(1..=3), random_formula(lang, depth - 1, rng))
            } else {
                let v: VarIx = if lang == Lang::Fol {
                    rng.gen_range(0..4)
                } else {
                    rng.gen_range(0..3)
                };
                Formula::exists(v, random_formula(lang, depth - 1, rng))
            }
        }
    }
}

fn random_atom<R: Rng>(lang: Lang, rng: &mut R) -> Formula {
    match lang {
        Lang::Fmd3 => Formula::atom_p(Lang::Fmd3),
        Lang::Modal => Formula::atom_modal(),
        Lang::L3 | Lang::Mixed3 => {
            let choices = if lang == Lang::Mixed3 { 3 } else { 2 };
            match rng.gen_range(0..choices) {
                0 => Formula::atom_in(lang, 0, 1),
                1 => Formula::atom_eq(lang, rng.gen_range(0..3), rng.gen_range(0..3)),
                _ => Formula::atom_p(lang),
            }
        }
        Lang::Fol => {
            let u = rng.gen_range(0..4);
            let v = rng.gen_range(0..4);
            if rng.gen_bool(0.5) {
                Formula::atom_in(Lang::Fol, u, v)
            } else {
                Formula::atom_eq(Lang::Fol, u, v)
            }
        }
    }
}

/// A batch of random formulas.
pub fn random_formulas<R: Rng>(
    lang: Lang,
    count: usize,
    max_depth: usize,
    rng: &mut R,
) -> Vec<Formula> {
    (0..count)
        .map(|_| random_formula(lang, rng.gen_range(1..=max_depth), rng))
        .collect()
}

/// A random formula whose free variables are contained in `allowed`;
/// stray free variables are bound off by existential quantifiers.
pub fn random_formula_free_in<R: Rng>(
    lang: Lang,
    depth: usize,
    allowed: &[VarIx],
    rng: &mut R,
) -> Formula {
    let mut f = random_formula(lang, depth, rng);
    let stray: Vec<VarIx> = f
        .free_vars()
        .iter()
        .filter(|v| !allowed.contains(v))
        .collect();
    for v in stray {
        f = Formula::exists(v, f);
    }
    f
}

/// A random model over `{0..n-1}` with each tuple included independently.
pub fn random_model<R: Rng>(n: usize, with_p: bool, with_in: bool, rng: &mut R) -> Model {
    let p = with_p.then(|| {
        let mut s = TripleSet::empty(n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rng.gen_bool(0.5) {
                        s.insert(a, b, c);
                    }
                }
            }
        }
        s
    });
    let inn = (with_in || !with_p).then(|| {
        let mut s = PairSet::empty(n);
        for a in 0..n {
            for b in 0..n {
                if rng.gen_bool(0.5) {
                    s.insert(a, b);
                }
            }
        }
        s
    });
    Model::new(n, p, inn)
}

/// A random irreflexive membership digraph expanded to a `{P, in}` model via
/// the induced ternary relation.
pub fn random_irreflexive_digraph_model<R: Rng>(n: usize, rng: &mut R) -> Model {
    let mut s = PairSet::empty(n);
    for a in 0..n {
        for b in 0..n {
            if a != b && rng.gen_bool(0.5) {
                s.insert(a, b);
            }
        }
    }
    Model::induced_from_in(n, &s)
}

/// Perturb one node of a formula, preserving the language; the result always
/// differs from the input. Used by tamper-detection fuzz tests.
pub fn mutate_formula<R: Rng>(f: Formula, rng: &mut R) -> Formula {
    fn local<R: Rng>(f: Formula, rng: &mut R) -> Formula {
        match f.view() {
            View::Or(a, b) if a != b && rng.gen_bool(0.5) => Formula::or(b, a),
            View::Exists(v, a) if f.lang().is_three_var() => Formula::exists((v + 1) % 3, a),
            View::Exists(v, a) => Formula::exists(v + 1, a),
            View::Diamond(i, a) => Formula::diamond(i % 3 + 1, a),
            View::AtomEq(u, v) if f.lang() != Lang::Fol => {
                Formula::atom_eq(f.lang(), (u + 1) % 3, v)
            }
            _ => Formula::not(f),
        }
    }
    // Walk a random path down the tree and mutate there.
    fn go<R: Rng>(f: Formula, rng: &mut R) -> Formula {
        let descend = rng.gen_bool(0.6);
        match f.view() {
            View::Not(a) if descend => Formula::not(go(a, rng)),
            View::Or(a, b) if descend => {
                if rng.gen_bool(0.5) {
                    Formula::or(go(a, rng), b)
                } else {
                    Formula::or(a, go(b, rng))
                }
            }
            View::Exists(v, a) if descend => Formula::exists(v, go(a, rng)),
            View::Diamond(i, a) if descend => Formula::diamond(i, go(a, rng)),
            _ => local(f, rng),
        }
    }
    for _ in 0..8 {
        let g = go(f, rng);
        if g != f {
            return g;
        }
    }
    Formula::not(f)
}

/// Perturb one node of a term.
pub fn mutate_term<R: Rng>(t: EqTerm, rng: &mut R) -> EqTerm {
    fn local<R: Rng>(t: EqTerm, rng: &mut R) -> EqTerm {
        match t.view() {
            TermView::Var(i) => EqTerm::var(i + 1),
            TermView::Plus(a, b) if a != b && rng.gen_bool(0.5) => EqTerm::plus(b, a),
            TermView::Apply(op, a) if op != UnOp::Minus && rng.gen_bool(0.5) => {
                let next = match op {
                    UnOp::F => UnOp::G,
                    UnOp::G => UnOp::H,
                    UnOp::H => UnOp::F,
                    UnOp::Minus => unreachable!(),
                };
                EqTerm::apply(next, a)
            }
            _ => EqTerm::minus(t),
        }
    }
    fn go<R: Rng>(t: EqTerm, rng: &mut R) -> EqTerm {
        let descend = rng.gen_bool(0.6);
        match t.view() {
            TermView::Plus(a, b) if descend => {
                if rng.gen_bool(0.5) {
                    EqTerm::plus(go(a, rng), b)
                } else {
                    EqTerm::plus(a, go(b, rng))
                }
            }
            TermView::Apply(op, a) if descend => EqTerm::apply(op, go(a, rng)),
            _ => local(t, rng),
        }
    }
    for _ in 0..8 {
        let s = go(t, rng);
        if s != t {
            return s;
        }
    }
    EqTerm::minus(t)
}

/// Perturb a statement of either kind.
pub fn mutate_ast<R: Rng>(ast: Ast, rng: &mut R) -> Ast {
    match ast {
        Ast::Formula(f) => Ast::Formula(mutate_formula(f, rng)),
        Ast::Equation(e) => {
            if rng.gen_bool(0.5) {
                Ast::Equation(Equation::new(mutate_term(e.lhs, rng), e.rhs))
            } else {
                Ast::Equation(Equation::new(e.lhs, mutate_term(e.rhs, rng)))
            }
        }
    }
}

/// Random purely existential FOL sentences: atoms and their negations
/// combined with conjunction, disjunction and existential quantifiers, then
/// existentially closed.
pub fn random_existential_fol<R: Rng>(count: usize, rng: &mut R) -> Vec<Formula> {
    fn go<R: Rng>(depth: usize, rng: &mut R) -> Formula {
        if depth == 0 {
            let u = rng.gen_range(0..3);
            let v = rng.gen_range(0..3);
            let atom = if rng.gen_bool(0.7) {
                Formula::atom_in(Lang::Fol, u, v)
            } else {
                Formula::atom_eq(Lang::Fol, u, v)
            };
            return if rng.gen_bool(0.3) { Formula::not(atom) } else { atom };
        }
        match rng.gen_range(0..3) {
            0 => Formula::and(go(depth - 1, rng), go(depth - 1, rng)),
            1 => Formula::or(go(depth - 1, rng), go(depth - 1, rng)),
            _ => Formula::exists(rng.gen_range(0..3u32), go(depth - 1, rng)),
        }
    }
    (0..count)
        .map(|_| {
            let mut f = go(rng.gen_range(1..=3), rng);
            let frees: Vec<VarIx> = f.free_vars().iter().collect();
            for v in frees {
                f = Formula::exists(v, f);
            }
            f
        })
        .collect()
}
