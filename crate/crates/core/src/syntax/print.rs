//! Canonical and pretty printers.
//!
//! Canonical output uses only `~`, `|`, `E` and the atoms, fully
//! parenthesizing binary nodes; `parse(lang, render(f)) == f`. The pretty
//! printer re-sugars `&`, `->`, `<->`, `A` and `[i]`; re-parsing pretty
//! output also reproduces the AST because the sugar desugars to exactly the
//! detected patterns.

use std::collections::HashMap;

use crate::syntax::ast::{EqTerm, Equation, Formula, Lang, TermView, VarIx, View};

fn var_name(lang: Lang, v: VarIx) -> String {
    if lang == Lang::Fol {
        format!("v{v}")
    } else {
        match v {
            0 => "x".into(),
            1 => "y".into(),
            2 => "z".into(),
            _ => unreachable!("three-variable language with variable index {v}"),
        }
    }
}

/// A quantified body extends to the right; anything that places a formula to
/// the left of more input must parenthesize quantifiers.
fn guard_left(f: Formula, s: String) -> String {
    if matches!(f.view(), View::Exists(..)) {
        format!("({s})")
    } else {
        s
    }
}

/// Render a formula in canonical form.
pub fn render(f: Formula) -> String {
    let lang = f.lang();
    let order = f.postorder();
    let mut out: HashMap<Formula, String> = HashMap::with_capacity(order.len());
    for g in order {
        let s = match g.view() {
            View::AtomP => "P(x,y,z)".to_string(),
            View::AtomIn(u, v) => format!("in({},{})", var_name(lang, u), var_name(lang, v)),
            View::AtomEq(u, v) => format!("{}={}", var_name(lang, u), var_name(lang, v)),
            View::AtomModal => "p".to_string(),
            View::Not(a) => format!("~{}", guard_left(a, out[&a].clone())),
            View::Or(a, b) => format!("({} | {})", guard_left(a, out[&a].clone()), out[&b]),
            View::Exists(v, a) => format!("E{}. {}", var_name(lang, v), out[&a]),
            View::Diamond(i, a) => format!("<{}>{}", i, guard_left(a, out[&a].clone())),
        };
        out.insert(g, s);
    }
    out.remove(&f).unwrap()
}

/// Sugar detected by the pretty printer.
enum Sugar {
    Forall(VarIx, Formula),
    Box(u8, Formula),
    Iff(Formula, Formula),
    And(Formula, Formula),
    Implies(Formula, Formula),
}

fn detect(f: Formula) -> Option<Sugar> {
    match f.view() {
        View::Not(a) => match a.view() {
            View::Exists(v, b) => match b.view() {
                View::Not(c) => Some(Sugar::Forall(v, c)),
                _ => None,
            },
            View::Diamond(i, b) => match b.view() {
                View::Not(c) => Some(Sugar::Box(i, c)),
                _ => None,
            },
            // ~(~p | ~q) is p & q; (p -> q) & (q -> p) is p <-> q.
            View::Or(l, r) => match (l.view(), r.view()) {
                (View::Not(p), View::Not(q)) => {
                    if let (View::Or(np, q1), View::Or(nq, p1)) = (p.view(), q.view()) {
                        if let (View::Not(p0), View::Not(q0)) = (np.view(), nq.view()) {
                            if p0 == p1 && q0 == q1 {
                                return Some(Sugar::Iff(p0, q0));
                            }
                        }
                    }
                    Some(Sugar::And(p, q))
                }
                _ => None,
            },
            _ => None,
        },
        View::Or(a, b) => match a.view() {
            View::Not(p) => Some(Sugar::Implies(p, b)),
            _ => None,
        },
        _ => None,
    }
}

/// Render with re-sugared derived connectives.
pub fn render_pretty(f: Formula) -> String {
    let lang = f.lang();
    // Memoized recursion over the DAG; explicit stack to survive deep terms.
    let mut out: HashMap<Formula, String> = HashMap::new();
    let mut stack = vec![f];
    while let Some(g) = stack.pop() {
        if out.contains_key(&g) {
            continue;
        }
        // Pretty-printing recurses into the sugared children, which are not
        // necessarily the AST children.
        let deps: Vec<Formula> = match detect(g) {
            Some(Sugar::Forall(_, c)) | Some(Sugar::Box(_, c)) => vec![c],
            Some(Sugar::Iff(a, b)) | Some(Sugar::And(a, b)) | Some(Sugar::Implies(a, b)) => {
                vec![a, b]
            }
            None => match g.view() {
                View::Not(a) | View::Exists(_, a) | View::Diamond(_, a) => vec![a],
                View::Or(a, b) => vec![a, b],
                _ => vec![],
            },
        };
        let missing: Vec<Formula> = deps.iter().copied().filter(|d| !out.contains_key(d)).collect();
        if !missing.is_empty() {
            stack.push(g);
            stack.extend(missing);
            continue;
        }
        let quantified = |h: Formula| {
            matches!(h.view(), View::Exists(..)) || matches!(detect(h), Some(Sugar::Forall(..)))
        };
        let guard = |h: Formula, s: &str| {
            if quantified(h) {
                format!("({s})")
            } else {
                s.to_string()
            }
        };
        let s = match detect(g) {
            Some(Sugar::Forall(v, c)) => format!("A{}. {}", var_name(lang, v), out[&c]),
            Some(Sugar::Box(i, c)) => format!("[{}]{}", i, guard(c, &out[&c])),
            Some(Sugar::Iff(a, b)) => format!("({} <-> {})", guard(a, &out[&a]), out[&b]),
            Some(Sugar::And(a, b)) => format!("({} & {})", guard(a, &out[&a]), out[&b]),
            Some(Sugar::Implies(a, b)) => format!("({} -> {})", guard(a, &out[&a]), out[&b]),
            None => match g.view() {
                View::AtomP => "P(x,y,z)".to_string(),
                View::AtomIn(u, v) => {
                    format!("in({},{})", var_name(lang, u), var_name(lang, v))
                }
                View::AtomEq(u, v) => format!("{}={}", var_name(lang, u), var_name(lang, v)),
                View::AtomModal => "p".to_string(),
                View::Not(a) => format!("~{}", guard(a, &out[&a])),
                View::Or(a, b) => format!("({} | {})", guard(a, &out[&a]), out[&b]),
                View::Exists(v, a) => format!("E{}. {}", var_name(lang, v), out[&a]),
                View::Diamond(i, a) => format!("<{}>{}", i, guard(a, &out[&a])),
            },
        };
        out.insert(g, s);
    }
    out.remove(&f).unwrap()
}

/// Render an equational term.
pub fn render_term(t: EqTerm) -> String {
    match t.view() {
        TermView::Var(i) => format!("X{i}"),
        TermView::Plus(a, b) => format!("({} + {})", render_term(a), render_term(b)),
        TermView::Apply(op, a) => format!("{} {}", op.name(), render_term(a)),
    }
}

/// Render an equation.
pub fn render_equation(e: &Equation) -> String {
    format!("{} = {}", render_term(e.lhs), render_term(e.rhs))
}
