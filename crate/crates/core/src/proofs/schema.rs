//! Axiom schemas of the four systems: instantiation from explicit
//! metavariable bindings, and pattern matching to discover bindings.

use std::collections::BTreeMap;

use crate::proofs::ProofSystem;
use crate::syntax::{Ast, EqTerm, Equation, Formula, UnOp, Var3, View};

/// A value bound to a schema metavariable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BindingValue {
    Formula(Formula),
    Var(Var3),
    ModalIx(u8),
    Term(EqTerm),
    Op(UnOp),
}

/// Metavariable bindings. Keys are the schema's metavariable names:
/// `phi`/`psi` for formulas, `v`/`w` for variables, `i`/`j` for modal
/// indices, `x`/`y`/`z` for terms, `F`/`G` for unary operations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bindings(pub BTreeMap<String, BindingValue>);

impl Bindings {
    pub fn new() -> Bindings {
        Bindings::default()
    }

    pub fn formula(mut self, key: &str, f: Formula) -> Bindings {
        self.0.insert(key.into(), BindingValue::Formula(f));
        self
    }

    pub fn var(mut self, key: &str, v: Var3) -> Bindings {
        self.0.insert(key.into(), BindingValue::Var(v));
        self
    }

    pub fn modal(mut self, key: &str, i: u8) -> Bindings {
        self.0.insert(key.into(), BindingValue::ModalIx(i));
        self
    }

    pub fn term(mut self, key: &str, t: EqTerm) -> Bindings {
        self.0.insert(key.into(), BindingValue::Term(t));
        self
    }

    pub fn op(mut self, key: &str, op: UnOp) -> Bindings {
        self.0.insert(key.into(), BindingValue::Op(op));
        self
    }

    pub fn get_formula(&self, key: &str) -> Result<Formula, String> {
        match self.0.get(key) {
            Some(BindingValue::Formula(f)) => Ok(*f),
            _ => Err(format!("missing formula binding '{key}'")),
        }
    }

    pub fn get_var(&self, key: &str) -> Result<Var3, String> {
        match self.0.get(key) {
            Some(BindingValue::Var(v)) => Ok(*v),
            _ => Err(format!("missing variable binding '{key}'")),
        }
    }

    pub fn get_modal(&self, key: &str) -> Result<u8, String> {
        match self.0.get(key) {
            Some(BindingValue::ModalIx(i)) => Ok(*i),
            _ => Err(format!("missing modal index binding '{key}'")),
        }
    }

    pub fn get_term(&self, key: &str) -> Result<EqTerm, String> {
        match self.0.get(key) {
            Some(BindingValue::Term(t)) => Ok(*t),
            _ => Err(format!("missing term binding '{key}'")),
        }
    }

    pub fn get_op(&self, key: &str) -> Result<UnOp, String> {
        match self.0.get(key) {
            Some(BindingValue::Op(o)) => Ok(*o),
            _ => Err(format!("missing operation binding '{key}'")),
        }
    }
}

/// Schema ids of a system, in the order the presentation lists them.
pub fn schema_ids(system: ProofSystem) -> &'static [&'static str] {
    match system {
        ProofSystem::Hilbert3 => &["1", "2", "3", "4", "5", "6", "7"],
        ProofSystem::Hilbert3Alt8 => &["1", "2", "3", "4", "5", "7", "8"],
        ProofSystem::ReEqFree => &["V1", "V2", "V3", "V4"],
        ProofSystem::Modal => &["B", "K", "S5", "C1", "C2"],
        ProofSystem::Equational => &["B1", "B2", "B3", "D1", "D2", "D3", "D4", "D5"],
    }
}

// ---- destructors for desugared shapes ----

pub(crate) fn dest_not(f: Formula) -> Option<Formula> {
    match f.view() {
        View::Not(a) => Some(a),
        _ => None,
    }
}

pub(crate) fn dest_or(f: Formula) -> Option<(Formula, Formula)> {
    match f.view() {
        View::Or(a, b) => Some((a, b)),
        _ => None,
    }
}

pub(crate) fn dest_implies(f: Formula) -> Option<(Formula, Formula)> {
    let (l, r) = dest_or(f)?;
    Some((dest_not(l)?, r))
}

pub(crate) fn dest_and(f: Formula) -> Option<(Formula, Formula)> {
    let (l, r) = dest_or(dest_not(f)?)?;
    Some((dest_not(l)?, dest_not(r)?))
}

pub(crate) fn dest_iff(f: Formula) -> Option<(Formula, Formula)> {
    let (fwd, bwd) = dest_and(f)?;
    let (a, b) = dest_implies(fwd)?;
    let (b2, a2) = dest_implies(bwd)?;
    (a == a2 && b == b2).then_some((a, b))
}

pub(crate) fn dest_exists(f: Formula) -> Option<(Var3, Formula)> {
    match f.view() {
        View::Exists(v, a) => Some((Var3::from_index(v)?, a)),
        _ => None,
    }
}

pub(crate) fn dest_forall(f: Formula) -> Option<(Var3, Formula)> {
    let (v, body) = dest_exists(dest_not(f)?)?;
    Some((v, dest_not(body)?))
}

pub(crate) fn dest_diamond(f: Formula) -> Option<(u8, Formula)> {
    match f.view() {
        View::Diamond(i, a) => Some((i, a)),
        _ => None,
    }
}

pub(crate) fn dest_box(f: Formula) -> Option<(u8, Formula)> {
    let (i, body) = dest_diamond(dest_not(f)?)?;
    Some((i, dest_not(body)?))
}

/// Instantiate a schema from bindings. For the tautology schemas the result
/// is the bound formula itself; the checker separately verifies tautology.
pub fn instantiate(system: ProofSystem, id: &str, b: &Bindings) -> Result<Ast, String> {
    if !schema_ids(system).contains(&id) {
        return Err(format!("schema {id} does not belong to {}", system.tag()));
    }
    let f = |x| Ast::Formula(x);
    match id {
        "1" | "V1" | "B" => Ok(f(b.get_formula("phi")?)),
        "2" => {
            let (phi, psi, v) = (b.get_formula("phi")?, b.get_formula("psi")?, b.get_var("v")?);
            Ok(f(Formula::implies(
                Formula::forall(v.index(), Formula::implies(phi, psi)),
                Formula::implies(
                    Formula::exists(v.index(), phi),
                    Formula::exists(v.index(), psi),
                ),
            )))
        }
        "3" => {
            let (phi, v) = (b.get_formula("phi")?, b.get_var("v")?);
            Ok(f(Formula::implies(phi, Formula::exists(v.index(), phi))))
        }
        "4" => {
            let (phi, v) = (b.get_formula("phi")?, b.get_var("v")?);
            Ok(f(Formula::implies(
                Formula::exists(v.index(), Formula::exists(v.index(), phi)),
                Formula::exists(v.index(), phi),
            )))
        }
        "5" => {
            let (phi, psi, v) = (b.get_formula("phi")?, b.get_formula("psi")?, b.get_var("v")?);
            Ok(f(Formula::iff(
                Formula::exists(v.index(), Formula::or(phi, psi)),
                Formula::or(
                    Formula::exists(v.index(), phi),
                    Formula::exists(v.index(), psi),
                ),
            )))
        }
        "6" => {
            let (phi, v) = (b.get_formula("phi")?, b.get_var("v")?);
            let e = Formula::exists(v.index(), phi);
            Ok(f(Formula::implies(
                Formula::exists(v.index(), Formula::not(e)),
                Formula::not(e),
            )))
        }
        "7" => {
            let (phi, v, w) = (b.get_formula("phi")?, b.get_var("v")?, b.get_var("w")?);
            Ok(f(Formula::implies(
                Formula::exists(v.index(), Formula::exists(w.index(), phi)),
                Formula::exists(w.index(), Formula::exists(v.index(), phi)),
            )))
        }
        "8" => {
            let (phi, psi, v) = (b.get_formula("phi")?, b.get_formula("psi")?, b.get_var("v")?);
            Ok(f(Formula::iff(
                Formula::exists(
                    v.index(),
                    Formula::and(phi, Formula::exists(v.index(), psi)),
                ),
                Formula::and(
                    Formula::exists(v.index(), phi),
                    Formula::exists(v.index(), psi),
                ),
            )))
        }
        "V2" => {
            let (phi, psi, v) = (b.get_formula("phi")?, b.get_formula("psi")?, b.get_var("v")?);
            Ok(f(Formula::implies(
                Formula::forall(v.index(), Formula::implies(phi, psi)),
                Formula::implies(
                    Formula::forall(v.index(), phi),
                    Formula::forall(v.index(), psi),
                ),
            )))
        }
        "V3" => {
            let (phi, v) = (b.get_formula("phi")?, b.get_var("v")?);
            Ok(f(Formula::implies(Formula::forall(v.index(), phi), phi)))
        }
        "V4" => {
            let (phi, v) = (b.get_formula("phi")?, b.get_var("v")?);
            if phi.free_vars().contains(v.index()) {
                return Err(format!("((V4)) requires {v} not free in the formula"));
            }
            Ok(f(Formula::implies(phi, Formula::forall(v.index(), phi))))
        }
        "K" => {
            let (phi, psi, i) = (b.get_formula("phi")?, b.get_formula("psi")?, b.get_modal("i")?);
            Ok(f(Formula::implies(
                Formula::box_(i, Formula::implies(phi, psi)),
                Formula::implies(Formula::box_(i, phi), Formula::box_(i, psi)),
            )))
        }
        "S5" => {
            let (phi, i) = (b.get_formula("phi")?, b.get_modal("i")?);
            let d = Formula::diamond(i, phi);
            Ok(f(Formula::implies(d, Formula::box_(i, d))))
        }
        "C1" => {
            let (phi, i, j) = (b.get_formula("phi")?, b.get_modal("i")?, b.get_modal("j")?);
            Ok(f(Formula::implies(
                Formula::diamond(i, Formula::diamond(j, phi)),
                Formula::diamond(j, Formula::diamond(i, phi)),
            )))
        }
        "C2" => {
            let (phi, i, j) = (b.get_formula("phi")?, b.get_modal("i")?, b.get_modal("j")?);
            Ok(f(Formula::implies(
                Formula::diamond(i, Formula::box_(j, phi)),
                Formula::box_(j, Formula::diamond(i, phi)),
            )))
        }
        "B1" => {
            let (x, y) = (b.get_term("x")?, b.get_term("y")?);
            Ok(Ast::Equation(Equation::new(
                EqTerm::plus(x, y),
                EqTerm::plus(y, x),
            )))
        }
        "B2" => {
            let (x, y, z) = (b.get_term("x")?, b.get_term("y")?, b.get_term("z")?);
            Ok(Ast::Equation(Equation::new(
                EqTerm::plus(x, EqTerm::plus(y, z)),
                EqTerm::plus(EqTerm::plus(x, y), z),
            )))
        }
        "B3" => {
            let (x, y) = (b.get_term("x")?, b.get_term("y")?);
            Ok(Ast::Equation(Equation::new(
                EqTerm::minus(EqTerm::plus(
                    EqTerm::minus(EqTerm::plus(x, y)),
                    EqTerm::minus(EqTerm::plus(x, EqTerm::minus(y))),
                )),
                x,
            )))
        }
        "D1" => {
            let (x, op) = (b.get_term("x")?, cyl_op(b)?);
            let fx = EqTerm::apply(op, x);
            Ok(Ast::Equation(Equation::new(EqTerm::plus(x, fx), fx)))
        }
        "D2" => {
            let (x, op) = (b.get_term("x")?, cyl_op(b)?);
            let fx = EqTerm::apply(op, x);
            Ok(Ast::Equation(Equation::new(EqTerm::apply(op, fx), fx)))
        }
        "D3" => {
            let (x, y, op) = (b.get_term("x")?, b.get_term("y")?, cyl_op(b)?);
            Ok(Ast::Equation(Equation::new(
                EqTerm::apply(op, EqTerm::plus(x, y)),
                EqTerm::plus(EqTerm::apply(op, x), EqTerm::apply(op, y)),
            )))
        }
        "D4" => {
            let (x, op) = (b.get_term("x")?, cyl_op(b)?);
            let fx = EqTerm::apply(op, x);
            Ok(Ast::Equation(Equation::new(
                EqTerm::apply(op, EqTerm::minus(fx)),
                EqTerm::minus(fx),
            )))
        }
        "D5" => {
            let (x, fo, go) = (b.get_term("x")?, b.get_op("F")?, b.get_op("G")?);
            if !matches!(
                (fo, go),
                (UnOp::F, UnOp::G) | (UnOp::F, UnOp::H) | (UnOp::G, UnOp::H)
            ) {
                return Err("((D5)) commutes the ordered pairs fg, fh, gh".into());
            }
            Ok(Ast::Equation(Equation::new(
                EqTerm::apply(fo, EqTerm::apply(go, x)),
                EqTerm::apply(go, EqTerm::apply(fo, x)),
            )))
        }
        _ => Err(format!("unknown schema {id}")),
    }
}

fn cyl_op(b: &Bindings) -> Result<UnOp, String> {
    let op = b.get_op("F")?;
    if op == UnOp::Minus {
        return Err("F ranges over the cylindrification operations".into());
    }
    Ok(op)
}

// ---- matchers: discover bindings from a statement ----

type Match = Option<Bindings>;

fn m_var(v: Var3) -> BindingValue {
    BindingValue::Var(v)
}

pub(crate) fn try_match(
    _system: ProofSystem,
    id: &str,
    stmt: Ast,
) -> Result<Match, crate::error::ProofError> {
    let formula = stmt.formula();
    let eqn = stmt.equation();
    let ok = |b: Bindings| Ok(Some(b));
    match id {
        "1" | "V1" | "B" => {
            let f = match formula {
                Some(f) => f,
                None => return Ok(None),
            };
            if crate::proofs::is_tautology(f)? {
                ok(Bindings::new().formula("phi", f))
            } else {
                Ok(None)
            }
        }
        "2" => {
            let go = || -> Match {
                let (a, b) = dest_implies(formula?)?;
                let (v, body) = dest_forall(a)?;
                let (phi, psi) = dest_implies(body)?;
                let (c, d) = dest_implies(b)?;
                let (v2, phi2) = dest_exists(c)?;
                let (v3, psi2) = dest_exists(d)?;
                (v2 == v && v3 == v && phi2 == phi && psi2 == psi).then(|| {
                    Bindings::new().formula("phi", phi).formula("psi", psi).var("v", v)
                })
            };
            Ok(go())
        }
        "3" => {
            let go = || -> Match {
                let (phi, b) = dest_implies(formula?)?;
                let (v, body) = dest_exists(b)?;
                (body == phi).then(|| Bindings::new().formula("phi", phi).var("v", v))
            };
            Ok(go())
        }
        "4" => {
            let go = || -> Match {
                let (a, b) = dest_implies(formula?)?;
                let (v, inner) = dest_exists(a)?;
                let (v2, phi) = dest_exists(inner)?;
                let (v3, phi2) = dest_exists(b)?;
                (v2 == v && v3 == v && phi2 == phi)
                    .then(|| Bindings::new().formula("phi", phi).var("v", v))
            };
            Ok(go())
        }
        "5" => {
            let go = || -> Match {
                let (a, b) = dest_iff(formula?)?;
                let (v, body) = dest_exists(a)?;
                let (phi, psi) = dest_or(body)?;
                let (c, d) = dest_or(b)?;
                let (v2, phi2) = dest_exists(c)?;
                let (v3, psi2) = dest_exists(d)?;
                (v2 == v && v3 == v && phi2 == phi && psi2 == psi).then(|| {
                    Bindings::new().formula("phi", phi).formula("psi", psi).var("v", v)
                })
            };
            Ok(go())
        }
        "6" => {
            let go = || -> Match {
                let (a, b) = dest_implies(formula?)?;
                let (v, body) = dest_exists(a)?;
                let e = dest_not(body)?;
                let (v2, phi) = dest_exists(e)?;
                let e2 = dest_not(b)?;
                let (v3, phi2) = dest_exists(e2)?;
                (v2 == v && v3 == v && phi2 == phi)
                    .then(|| Bindings::new().formula("phi", phi).var("v", v))
            };
            Ok(go())
        }
        "7" => {
            let go = || -> Match {
                let (a, b) = dest_implies(formula?)?;
                let (v, inner) = dest_exists(a)?;
                let (w, phi) = dest_exists(inner)?;
                let (w2, inner2) = dest_exists(b)?;
                let (v2, phi2) = dest_exists(inner2)?;
                (v2 == v && w2 == w && phi2 == phi).then(|| {
                    let mut bs = Bindings::new().formula("phi", phi);
                    bs.0.insert("v".into(), m_var(v));
                    bs.0.insert("w".into(), m_var(w));
                    bs
                })
            };
            Ok(go())
        }
        "8" => {
            let go = || -> Match {
                let (a, b) = dest_iff(formula?)?;
                let (v, body) = dest_exists(a)?;
                let (phi, epsi) = dest_and(body)?;
                let (v2, psi) = dest_exists(epsi)?;
                let (c, d) = dest_and(b)?;
                let (v3, phi2) = dest_exists(c)?;
                let (v4, psi2) = dest_exists(d)?;
                (v2 == v && v3 == v && v4 == v && phi2 == phi && psi2 == psi).then(|| {
                    Bindings::new().formula("phi", phi).formula("psi", psi).var("v", v)
                })
            };
            Ok(go())
        }
        "V2" => {
            let go = || -> Match {
                let (a, b) = dest_implies(formula?)?;
                let (v, body) = dest_forall(a)?;
                let (phi, psi) = dest_implies(body)?;
                let (c, d) = dest_implies(b)?;
                let (v2, phi2) = dest_forall(c)?;
                let (v3, psi2) = dest_forall(d)?;
                (v2 == v && v3 == v && phi2 == phi && psi2 == psi).then(|| {
                    Bindings::new().formula("phi", phi).formula("psi", psi).var("v", v)
                })
            };
            Ok(go())
        }
        "V3" => {
            let go = || -> Match {
                let (a, phi) = dest_implies(formula?)?;
                let (v, phi2) = dest_forall(a)?;
                (phi2 == phi).then(|| Bindings::new().formula("phi", phi).var("v", v))
            };
            Ok(go())
        }
        "V4" => {
            let go = || -> Match {
                let (phi, b) = dest_implies(formula?)?;
                let (v, phi2) = dest_forall(b)?;
                (phi2 == phi && !phi.free_vars().contains(v.index()))
                    .then(|| Bindings::new().formula("phi", phi).var("v", v))
            };
            Ok(go())
        }
        "K" => {
            let go = || -> Match {
                let (a, b) = dest_implies(formula?)?;
                let (i, body) = dest_box(a)?;
                let (phi, psi) = dest_implies(body)?;
                let (c, d) = dest_implies(b)?;
                let (i2, phi2) = dest_box(c)?;
                let (i3, psi2) = dest_box(d)?;
                (i2 == i && i3 == i && phi2 == phi && psi2 == psi).then(|| {
                    Bindings::new().formula("phi", phi).formula("psi", psi).modal("i", i)
                })
            };
            Ok(go())
        }
        "S5" => {
            let go = || -> Match {
                let (a, b) = dest_implies(formula?)?;
                let (i, phi) = dest_diamond(a)?;
                let (i2, d) = dest_box(b)?;
                let (i3, phi2) = dest_diamond(d)?;
                (i2 == i && i3 == i && phi2 == phi)
                    .then(|| Bindings::new().formula("phi", phi).modal("i", i))
            };
            Ok(go())
        }
        "C1" => {
            let go = || -> Match {
                let (a, b) = dest_implies(formula?)?;
                let (i, inner) = dest_diamond(a)?;
                let (j, phi) = dest_diamond(inner)?;
                let (j2, inner2) = dest_diamond(b)?;
                let (i2, phi2) = dest_diamond(inner2)?;
                (i2 == i && j2 == j && phi2 == phi).then(|| {
                    Bindings::new().formula("phi", phi).modal("i", i).modal("j", j)
                })
            };
            Ok(go())
        }
        "C2" => {
            let go = || -> Match {
                let (a, b) = dest_implies(formula?)?;
                let (i, inner) = dest_diamond(a)?;
                let (j, phi) = dest_box(inner)?;
                let (j2, inner2) = dest_box(b)?;
                let (i2, phi2) = dest_diamond(inner2)?;
                (i2 == i && j2 == j && phi2 == phi).then(|| {
                    Bindings::new().formula("phi", phi).modal("i", i).modal("j", j)
                })
            };
            Ok(go())
        }
        _ => {
            // Equational schemas: match against the instantiated shape.
            let go = || -> Match {
                use crate::syntax::TermView;
                let e = eqn?;
                match id {
                    "B1" => {
                        let (x, y) = match e.lhs.view() {
                            TermView::Plus(x, y) => (x, y),
                            _ => return None,
                        };
                        (e.rhs == EqTerm::plus(y, x))
                            .then(|| Bindings::new().term("x", x).term("y", y))
                    }
                    "B2" => {
                        let (x, yz) = match e.lhs.view() {
                            TermView::Plus(x, yz) => (x, yz),
                            _ => return None,
                        };
                        let (y, z) = match yz.view() {
                            TermView::Plus(y, z) => (y, z),
                            _ => return None,
                        };
                        (e.rhs == EqTerm::plus(EqTerm::plus(x, y), z))
                            .then(|| Bindings::new().term("x", x).term("y", y).term("z", z))
                    }
                    "B3" => {
                        // -( -(x+y) + -(x+-y) ) = x
                        let inner = match e.lhs.view() {
                            TermView::Apply(UnOp::Minus, i) => i,
                            _ => return None,
                        };
                        let (l, r) = match inner.view() {
                            TermView::Plus(l, r) => (l, r),
                            _ => return None,
                        };
                        let (xy, xny) = match (l.view(), r.view()) {
                            (
                                TermView::Apply(UnOp::Minus, a),
                                TermView::Apply(UnOp::Minus, b),
                            ) => (a, b),
                            _ => return None,
                        };
                        let (x, y) = match xy.view() {
                            TermView::Plus(x, y) => (x, y),
                            _ => return None,
                        };
                        (xny == EqTerm::plus(x, EqTerm::minus(y)) && e.rhs == x)
                            .then(|| Bindings::new().term("x", x).term("y", y))
                    }
                    "D1" | "D2" | "D4" => {
                        for op in [UnOp::F, UnOp::G, UnOp::H] {
                            for probe in probe_terms(e) {
                                let b = Bindings::new().term("x", probe).op("F", op);
                                if instantiate(ProofSystem::Equational, id, &b)
                                    == Ok(Ast::Equation(e))
                                {
                                    return Some(b);
                                }
                            }
                        }
                        None
                    }
                    "D3" => {
                        for op in [UnOp::F, UnOp::G, UnOp::H] {
                            for x in probe_terms(e) {
                                for y in probe_terms(e) {
                                    let b = Bindings::new()
                                        .term("x", x)
                                        .term("y", y)
                                        .op("F", op);
                                    if instantiate(ProofSystem::Equational, id, &b)
                                        == Ok(Ast::Equation(e))
                                    {
                                        return Some(b);
                                    }
                                }
                            }
                        }
                        None
                    }
                    "D5" => {
                        for (fo, go_) in [(UnOp::F, UnOp::G), (UnOp::F, UnOp::H), (UnOp::G, UnOp::H)] {
                            if let TermView::Apply(a, rest) = e.lhs.view() {
                                if a != fo {
                                    continue;
                                }
                                if let TermView::Apply(b2, x) = rest.view() {
                                    if b2 != go_ {
                                        continue;
                                    }
                                    let b = Bindings::new().term("x", x).op("F", fo).op("G", go_);
                                    if instantiate(ProofSystem::Equational, id, &b)
                                        == Ok(Ast::Equation(e))
                                    {
                                        return Some(b);
                                    }
                                }
                            }
                        }
                        None
                    }
                    _ => None,
                }
            };
            Ok(go())
        }
    }
}

/// Candidate subterms for matching the D-schemas: every subterm of the
/// equation. The schemas are small, so brute force suffices.
fn probe_terms(e: Equation) -> Vec<EqTerm> {
    use crate::syntax::TermView;
    let mut out = Vec::new();
    let mut stack = vec![e.lhs, e.rhs];
    while let Some(t) = stack.pop() {
        if !out.contains(&t) {
            out.push(t);
            match t.view() {
                TermView::Plus(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
                TermView::Apply(_, a) => stack.push(a),
                TermView::Var(_) => {}
            }
        }
    }
    out
}
