//! Propositional tautology decision by letter abstraction.
//!
//! Each maximal subformula that is not a Boolean combination (an atom, a
//! quantified formula, a modalized formula) is abstracted to a propositional
//! letter; identical subformulas share a letter because formulas are
//! hash-consed. The skeleton is then truth-tabled.

use std::collections::HashMap;

use crate::error::ProofError;
use crate::syntax::{Formula, View};

/// Abstracted letters are capped; axiom instances in practice are tiny and a
/// blow-up indicates a misuse.
pub const LETTER_CAP: usize = 20;

#[derive(Debug, Clone, Copy)]
enum Skel {
    Letter(usize),
    Not(usize),
    Or(usize, usize),
}

fn build_skeleton(f: Formula) -> (Vec<Skel>, usize, usize) {
    // Nodes of the Boolean skeleton in dependency order; letters shared by
    // subformula identity.
    let mut letters: HashMap<Formula, usize> = HashMap::new();
    let mut nodes: Vec<Skel> = Vec::new();
    let mut ids: HashMap<Formula, usize> = HashMap::new();
    fn go(
        g: Formula,
        letters: &mut HashMap<Formula, usize>,
        ids: &mut HashMap<Formula, usize>,
        nodes: &mut Vec<Skel>,
    ) -> usize {
        if let Some(&i) = ids.get(&g) {
            return i;
        }
        let skel = match g.view() {
            View::Not(a) => {
                let ia = go(a, letters, ids, nodes);
                Skel::Not(ia)
            }
            View::Or(a, b) => {
                let ia = go(a, letters, ids, nodes);
                let ib = go(b, letters, ids, nodes);
                Skel::Or(ia, ib)
            }
            _ => {
                let next = letters.len();
                let l = *letters.entry(g).or_insert(next);
                Skel::Letter(l)
            }
        };
        let i = nodes.len();
        nodes.push(skel);
        ids.insert(g, i);
        i
    }
    let root = go(f, &mut letters, &mut ids, &mut nodes);
    let k = letters.len();
    (nodes, root, k)
}

/// Decide whether the formula is a substitution instance of a propositional
/// tautology.
pub fn is_tautology(f: Formula) -> Result<bool, ProofError> {
    let (nodes, root, k) = build_skeleton(f);
    if k > LETTER_CAP {
        return Err(ProofError::TooManyLetters {
            letters: k,
            cap: LETTER_CAP,
        });
    }
    let mut values = vec![false; nodes.len()];
    for mask in 0u32..(1u32 << k) {
        for (i, s) in nodes.iter().enumerate() {
            values[i] = match *s {
                Skel::Letter(l) => (mask >> l) & 1 == 1,
                Skel::Not(a) => !values[a],
                Skel::Or(a, b) => values[a] || values[b],
            };
        }
        if !values[root] {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, Formula, Lang};

    fn fmd3(s: &str) -> Formula {
        parse_formula(Lang::Fmd3, s).unwrap()
    }

    #[test]
    fn excluded_middle() {
        assert!(is_tautology(fmd3("P(x,y,z) | ~P(x,y,z)")).unwrap());
    }

    #[test]
    fn quantified_subformula_is_its_own_letter() {
        assert!(is_tautology(fmd3("(Ex. P(x,y,z)) -> Ex. P(x,y,z)")).unwrap());
        // The atom and its quantification are distinct letters.
        assert!(!is_tautology(fmd3("P(x,y,z) -> Ex. P(x,y,z)")).unwrap());
    }

    #[test]
    fn shared_subformulas_share_letters() {
        // (A -> B) -> (~B -> ~A) with quantified A and B.
        let f = fmd3("((Ex. P(x,y,z)) -> Ey. P(x,y,z)) -> (~(Ey. P(x,y,z)) -> ~(Ex. P(x,y,z)))");
        assert!(is_tautology(f).unwrap());
    }

    #[test]
    fn letter_cap_is_enforced() {
        // 21 distinct quantified letters disjoined.
        let mut letters = Vec::new();
        for i in 0..21 {
            let mut g = Formula::atom_p(Lang::Fmd3);
            for _ in 0..=i {
                g = Formula::exists(0u32, g);
            }
            letters.push(g);
        }
        let g = Formula::or_all(letters);
        assert!(matches!(
            is_tautology(g),
            Err(ProofError::TooManyLetters { .. })
        ));
    }

    #[test]
    fn agrees_with_direct_truth_table_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(97);

        // Independent oracle: random propositional skeletons over at most 6
        // letters, evaluated directly; the implementation sees the skeleton
        // instantiated with distinct non-Boolean formulas.
        #[derive(Clone)]
        enum Sk {
            L(usize),
            N(Box<Sk>),
            O(Box<Sk>, Box<Sk>),
        }
        fn gen<R: Rng>(depth: usize, k: usize, rng: &mut R) -> Sk {
            if depth == 0 || rng.gen_bool(0.3) {
                return Sk::L(rng.gen_range(0..k));
            }
            if rng.gen_bool(0.4) {
                Sk::N(Box::new(gen(depth - 1, k, rng)))
            } else {
                Sk::O(
                    Box::new(gen(depth - 1, k, rng)),
                    Box::new(gen(depth - 1, k, rng)),
                )
            }
        }
        fn eval(s: &Sk, mask: u32) -> bool {
            match s {
                Sk::L(i) => (mask >> i) & 1 == 1,
                Sk::N(a) => !eval(a, mask),
                Sk::O(a, b) => eval(a, mask) || eval(b, mask),
            }
        }
        fn instantiate(s: &Sk, letters: &[Formula]) -> Formula {
            match s {
                Sk::L(i) => letters[*i],
                Sk::N(a) => Formula::not(instantiate(a, letters)),
                Sk::O(a, b) => Formula::or(instantiate(a, letters), instantiate(b, letters)),
            }
        }
        // Distinct non-Boolean letters: nested quantifications of the atom.
        let letters: Vec<Formula> = (0..6)
            .map(|i| {
                let mut g = Formula::atom_p(Lang::Fmd3);
                for _ in 0..=i {
                    g = Formula::exists((i % 3) as u32, g);
                }
                g
            })
            .collect();
        for _ in 0..10_000 {
            let k = rng.gen_range(1..=6);
            let sk = gen(rng.gen_range(1..=5), k, &mut rng);
            let oracle = (0u32..(1 << k)).all(|mask| eval(&sk, mask));
            let f = instantiate(&sk, &letters);
            assert_eq!(is_tautology(f).unwrap(), oracle);
        }
    }
}
