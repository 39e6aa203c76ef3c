//! Shared-structure text format for large formulas.
//!
//! Canonical text rendering expands the syntax tree, which for the generated
//! pairing axioms and translated sentences is larger than memory by many
//! orders of magnitude. The `.dag` format lists each distinct subformula once
//! under a small integer id:
//!
//! ```text
//! dag fmd3
//! 1 P
//! 2 ex z 1
//! 3 not 2
//! root 3
//! ```
//!
//! Node lines are `P`, `in u v`, `eq u v`, `p`, `not i`, `or i j`,
//! `ex v i`, `dia k i`; children always precede parents. The listing order is
//! a deterministic depth-first postorder, so equal formulas dump to equal
//! bytes.

use std::collections::HashMap;
use std::io::{self, Write};

use crate::error::SyntaxError;
use crate::syntax::ast::{Formula, Lang, VarIx, View};

fn var_name(lang: Lang, v: VarIx) -> String {
    if lang == Lang::Fol {
        format!("v{v}")
    } else {
        ["x", "y", "z"][v as usize].to_string()
    }
}

/// Write a formula in `.dag` form.
pub fn write_dag(f: Formula, w: &mut impl Write) -> io::Result<()> {
    let lang = f.lang();
    writeln!(w, "dag {}", lang.tag())?;
    let order = f.postorder();
    let mut ids: HashMap<Formula, usize> = HashMap::with_capacity(order.len());
    for (i, g) in order.iter().enumerate() {
        let id = i + 1;
        ids.insert(*g, id);
        match g.view() {
            View::AtomP => writeln!(w, "{id} P")?,
            View::AtomIn(u, v) => {
                writeln!(w, "{id} in {} {}", var_name(lang, u), var_name(lang, v))?
            }
            View::AtomEq(u, v) => {
                writeln!(w, "{id} eq {} {}", var_name(lang, u), var_name(lang, v))?
            }
            View::AtomModal => writeln!(w, "{id} p")?,
            View::Not(a) => writeln!(w, "{id} not {}", ids[&a])?,
            View::Or(a, b) => writeln!(w, "{id} or {} {}", ids[&a], ids[&b])?,
            View::Exists(v, a) => writeln!(w, "{id} ex {} {}", var_name(lang, v), ids[&a])?,
            View::Diamond(k, a) => writeln!(w, "{id} dia {k} {}", ids[&a])?,
        }
    }
    writeln!(w, "root {}", ids[&f])?;
    Ok(())
}

/// Render a formula to a `.dag` string.
pub fn dag_string(f: Formula) -> String {
    let mut buf = Vec::new();
    write_dag(f, &mut buf).expect("write to Vec cannot fail");
    String::from_utf8(buf).unwrap()
}

fn parse_var(lang: Lang, s: &str, line: usize) -> Result<VarIx, SyntaxError> {
    let v = if lang == Lang::Fol {
        s.strip_prefix('v').and_then(|d| d.parse::<u32>().ok())
    } else {
        match s {
            "x" => Some(0),
            "y" => Some(1),
            "z" => Some(2),
            _ => None,
        }
    };
    v.ok_or_else(|| SyntaxError::parse(line, format!("bad variable '{s}'")))
}

/// Parse a `.dag` dump back into a formula.
pub fn read_dag(text: &str) -> Result<Formula, SyntaxError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| SyntaxError::parse(0, "empty dag input"))?;
    let lang = header
        .strip_prefix("dag ")
        .and_then(Lang::from_tag)
        .ok_or_else(|| SyntaxError::parse(0, "expected 'dag <lang>' header"))?;
    let mut nodes: HashMap<usize, Formula> = HashMap::new();
    let mut root: Option<Formula> = None;
    for (lineno, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let first = parts.next().unwrap();
        let get_node = |parts: &mut dyn Iterator<Item = &str>| -> Result<Formula, SyntaxError> {
            let id: usize = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| SyntaxError::parse(lineno, "expected node id"))?;
            nodes
                .get(&id)
                .copied()
                .ok_or_else(|| SyntaxError::parse(lineno, format!("forward reference to {id}")))
        };
        if first == "root" {
            root = Some(get_node(&mut parts)?);
            continue;
        }
        let id: usize = first
            .parse()
            .map_err(|_| SyntaxError::parse(lineno, "expected node id"))?;
        let op = parts
            .next()
            .ok_or_else(|| SyntaxError::parse(lineno, "expected node kind"))?;
        let f = match op {
            "P" => Formula::atom_p(lang),
            "p" => Formula::atom_modal(),
            "in" | "eq" => {
                let u = parse_var(lang, parts.next().unwrap_or(""), lineno)?;
                let v = parse_var(lang, parts.next().unwrap_or(""), lineno)?;
                if op == "in" {
                    Formula::atom_in(lang, u, v)
                } else {
                    Formula::atom_eq(lang, u, v)
                }
            }
            "not" => Formula::not(get_node(&mut parts)?),
            "or" => {
                let a = get_node(&mut parts)?;
                let b = get_node(&mut parts)?;
                Formula::or(a, b)
            }
            "ex" => {
                let v = parse_var(lang, parts.next().unwrap_or(""), lineno)?;
                Formula::exists(v, get_node(&mut parts)?)
            }
            "dia" => {
                let k: u8 = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| SyntaxError::parse(lineno, "expected modal index"))?;
                Formula::diamond(k, get_node(&mut parts)?)
            }
            other => {
                return Err(SyntaxError::parse(lineno, format!("unknown node kind '{other}'")))
            }
        };
        nodes.insert(id, f);
    }
    root.ok_or_else(|| SyntaxError::parse(0, "missing root line"))
}
