//! Line-based proof files.
//!
//! ```text
//! system: hilbert3
//! 1. P(x,y,z) ; HYP h
//! 2. (~P(x,y,z) | Ex. P(x,y,z)) ; AX 3 [phi := P(x,y,z); v := x]
//! 3. Ex. P(x,y,z) ; MP 1 2
//! ```
//!
//! Justifications: `HYP <name>`, `AX <schema> [<key> := <value>; ...]`,
//! `MP <i> <j>`, `GEN <v|index> <i>`, `EQ <rule> <premises...> [<subst>]`.
//! The `system:` header is optional when the caller fixes the system.
//! Hypothesis files hold `name: formula` lines. `#` starts a comment line.

use std::collections::BTreeMap;

use crate::error::ProofError;
use crate::proofs::schema::{BindingValue, Bindings};
use crate::proofs::{EqRule, GenVar, Hypotheses, Justification, Proof, ProofLine, ProofSystem};
use crate::syntax::{
    parse_equation, parse_formula, parse_term, render, render_equation, render_term, Ast, UnOp,
    Var3,
};

fn fmt_err(msg: impl Into<String>) -> ProofError {
    ProofError::Format(msg.into())
}

fn render_statement(stmt: Ast) -> String {
    match stmt {
        Ast::Formula(f) => render(f),
        Ast::Equation(e) => render_equation(&e),
    }
}

fn render_bindings(b: &Bindings) -> String {
    let items: Vec<String> = b
        .0
        .iter()
        .map(|(k, v)| {
            let val = match v {
                BindingValue::Formula(f) => render(*f),
                BindingValue::Var(v) => v.name().to_string(),
                BindingValue::ModalIx(i) => i.to_string(),
                BindingValue::Term(t) => render_term(*t),
                BindingValue::Op(o) => o.name().to_string(),
            };
            format!("{k} := {val}")
        })
        .collect();
    format!("[{}]", items.join("; "))
}

fn render_justification(system: ProofSystem, j: &Justification) -> String {
    match j {
        Justification::Hyp(name) => format!("HYP {name}"),
        Justification::Axiom { schema, bindings } => {
            if bindings.0.is_empty() {
                format!("AX {schema}")
            } else {
                format!("AX {schema} {}", render_bindings(bindings))
            }
        }
        Justification::Mp { minor, major } => format!("MP {minor} {major}"),
        Justification::Gen { var, premise } => match var {
            GenVar::Var(v) => format!("GEN {} {premise}", v.name()),
            GenVar::Modal(i) => format!("GEN {i} {premise}"),
        },
        Justification::Eq {
            rule,
            premises,
            subst,
        } => {
            let _ = system;
            let mut s = format!("EQ {}", rule.tag());
            for p in premises {
                s.push_str(&format!(" {p}"));
            }
            if let Some(map) = subst {
                let items: Vec<String> = map
                    .iter()
                    .map(|(k, t)| format!("X{k} := {}", render_term(*t)))
                    .collect();
                s.push_str(&format!(" [{}]", items.join("; ")));
            }
            s
        }
    }
}

/// Render a proof to the line-based file format.
pub fn render_proof(p: &Proof) -> String {
    let mut out = format!("system: {}\n", p.system.tag());
    for (i, line) in p.lines.iter().enumerate() {
        out.push_str(&format!(
            "{}. {} ; {}\n",
            i + 1,
            render_statement(line.statement),
            render_justification(p.system, &line.justification)
        ));
    }
    out
}

fn parse_statement(system: ProofSystem, text: &str) -> Result<Ast, ProofError> {
    match system.lang() {
        Some(lang) => Ok(Ast::Formula(
            parse_formula(lang, text).map_err(|e| fmt_err(e.to_string()))?,
        )),
        None => Ok(Ast::Equation(
            parse_equation(text).map_err(|e| fmt_err(e.to_string()))?,
        )),
    }
}

/// Parse the bracketed `key := value` list of an axiom line.
fn parse_bindings(system: ProofSystem, text: &str) -> Result<Bindings, ProofError> {
    let inner = text
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| fmt_err("bindings must be bracketed"))?;
    let mut b = Bindings::new();
    for item in inner.split(';') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (key, value) = item
            .split_once(":=")
            .ok_or_else(|| fmt_err(format!("binding '{item}' lacks ':='")))?;
        let key = key.trim();
        let value = value.trim();
        let bv = match key {
            "v" | "w" => BindingValue::Var(
                ["x", "y", "z"]
                    .iter()
                    .position(|n| *n == value)
                    .and_then(|i| Var3::from_index(i as u32))
                    .ok_or_else(|| fmt_err(format!("bad variable '{value}'")))?,
            ),
            "i" | "j" => BindingValue::ModalIx(
                value
                    .parse::<u8>()
                    .ok()
                    .filter(|i| (1..=3).contains(i))
                    .ok_or_else(|| fmt_err(format!("bad modal index '{value}'")))?,
            ),
            "F" | "G" => BindingValue::Op(match value {
                "f" => UnOp::F,
                "g" => UnOp::G,
                "h" => UnOp::H,
                "-" => UnOp::Minus,
                _ => return Err(fmt_err(format!("bad operation '{value}'"))),
            }),
            "phi" | "psi" => BindingValue::Formula(
                parse_formula(system.lang().ok_or_else(|| fmt_err("formula binding in equational system"))?, value)
                    .map_err(|e| fmt_err(e.to_string()))?,
            ),
            "x" | "y" | "z" => {
                BindingValue::Term(parse_term(value).map_err(|e| fmt_err(e.to_string()))?)
            }
            _ => return Err(fmt_err(format!("unknown binding key '{key}'"))),
        };
        b.0.insert(key.to_string(), bv);
    }
    Ok(b)
}

fn parse_subst(text: &str) -> Result<BTreeMap<u32, crate::syntax::EqTerm>, ProofError> {
    let inner = text
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| fmt_err("substitution must be bracketed"))?;
    let mut map = BTreeMap::new();
    for item in inner.split(';') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (key, value) = item
            .split_once(":=")
            .ok_or_else(|| fmt_err(format!("substitution item '{item}' lacks ':='")))?;
        let var = key
            .trim()
            .strip_prefix('X')
            .and_then(|d| d.parse::<u32>().ok())
            .ok_or_else(|| fmt_err(format!("bad term variable '{}'", key.trim())))?;
        let term = parse_term(value.trim()).map_err(|e| fmt_err(e.to_string()))?;
        map.insert(var, term);
    }
    Ok(map)
}

fn parse_justification(system: ProofSystem, text: &str) -> Result<Justification, ProofError> {
    let text = text.trim();
    let (head, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let rest = rest.trim();
    match head {
        "HYP" => {
            if rest.is_empty() {
                Err(fmt_err("HYP needs a name"))
            } else {
                Ok(Justification::Hyp(rest.to_string()))
            }
        }
        "AX" => {
            let (schema, tail) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            let tail = tail.trim();
            let bindings = if tail.is_empty() {
                Bindings::new()
            } else {
                parse_bindings(system, tail)?
            };
            Ok(Justification::Axiom {
                schema: schema.to_string(),
                bindings,
            })
        }
        "MP" => {
            let mut it = rest.split_whitespace();
            let minor = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| fmt_err("MP needs two line numbers"))?;
            let major = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| fmt_err("MP needs two line numbers"))?;
            Ok(Justification::Mp { minor, major })
        }
        "GEN" => {
            let mut it = rest.split_whitespace();
            let target = it.next().ok_or_else(|| fmt_err("GEN needs a target"))?;
            let premise = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| fmt_err("GEN needs a premise line"))?;
            let var = match target {
                "x" => GenVar::Var(Var3::X),
                "y" => GenVar::Var(Var3::Y),
                "z" => GenVar::Var(Var3::Z),
                "1" | "2" | "3" => GenVar::Modal(target.parse().unwrap()),
                other => return Err(fmt_err(format!("bad generalization target '{other}'"))),
            };
            Ok(Justification::Gen { var, premise })
        }
        "EQ" => {
            let (rule_tag, tail) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            let rule = EqRule::from_tag(rule_tag)
                .ok_or_else(|| fmt_err(format!("unknown equational rule '{rule_tag}'")))?;
            let tail = tail.trim();
            let (nums, subst_text) = match tail.find('[') {
                Some(i) => (&tail[..i], Some(&tail[i..])),
                None => (tail, None),
            };
            let premises: Vec<usize> = nums
                .split_whitespace()
                .map(|s| s.parse().map_err(|_| fmt_err("bad premise number")))
                .collect::<Result<_, _>>()?;
            let subst = subst_text.map(parse_subst).transpose()?;
            Ok(Justification::Eq {
                rule,
                premises,
                subst,
            })
        }
        other => Err(fmt_err(format!("unknown justification '{other}'"))),
    }
}

/// Parse a proof file. The `system:` header wins over `default`; one of the
/// two must determine the system.
pub fn parse_proof(text: &str, default: Option<ProofSystem>) -> Result<Proof, ProofError> {
    let mut system = default;
    let mut lines = Vec::new();
    for raw in text.lines() {
        let raw = raw.trim();
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        if let Some(tag) = raw.strip_prefix("system:") {
            system = Some(
                ProofSystem::from_tag(tag.trim())
                    .ok_or_else(|| fmt_err(format!("unknown system '{}'", tag.trim())))?,
            );
            continue;
        }
        let system = system.ok_or_else(|| fmt_err("proof system not specified"))?;
        let (no, rest) = raw
            .split_once('.')
            .ok_or_else(|| fmt_err(format!("line lacks an index: '{raw}'")))?;
        let index: usize = no
            .trim()
            .parse()
            .map_err(|_| fmt_err(format!("bad line index '{}'", no.trim())))?;
        let (stmt_text, just_text) = rest
            .split_once(';')
            .ok_or_else(|| fmt_err("line lacks '; <justification>'"))?;
        let statement = parse_statement(system, stmt_text.trim())?;
        let justification = parse_justification(system, just_text)?;
        if index != lines.len() + 1 {
            return Err(fmt_err(format!(
                "line numbered {index} in position {}",
                lines.len() + 1
            )));
        }
        lines.push(ProofLine {
            index,
            statement,
            justification,
        });
    }
    let system = system.ok_or_else(|| fmt_err("proof system not specified"))?;
    if lines.is_empty() {
        return Err(fmt_err("empty proof"));
    }
    Ok(Proof { system, lines })
}

/// Parse a hypotheses file of `name: formula` lines.
pub fn parse_hypotheses(text: &str, system: ProofSystem) -> Result<Hypotheses, ProofError> {
    let mut out = Hypotheses::new();
    for raw in text.lines() {
        let raw = raw.trim();
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        let (name, body) = raw
            .split_once(':')
            .ok_or_else(|| fmt_err(format!("hypothesis line lacks ':': '{raw}'")))?;
        out.insert(name.trim().to_string(), parse_statement(system, body.trim())?);
    }
    Ok(out)
}
