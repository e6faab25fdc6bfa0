//! Rewriting-closure oracles, independent of normal forms.
//!
//! Positive words are compared by exhaustive closure under the defining
//! relations. For Artin–Tits contexts relations preserve length, so the
//! closure of a word is finite and exact. Signed words are first brought to
//! the shape `Δ^{-k}·P` with `P` positive, using an explicitly written Δ word
//! and the explicit action of `Δ`-conjugation on atoms.
//!
//! The same closure machinery enumerates small presented monoids, which is
//! how the bundled `⟨a, b ; aba = b²⟩` table is produced.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::context::{ContextKind, GarsideContext};
use crate::error::{GarsideError, Result};
use crate::table_file::TableFile;
use crate::words::Word;

/// A defining relation between positive words (0-based atoms).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Vec<u8>,
    pub rhs: Vec<u8>,
}

/// `prod(σ, τ, m)` on 0-based atoms.
pub fn alternating(a: u8, b: u8, m: usize) -> Vec<u8> {
    (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect()
}

/// Relations `prod(σ,τ,m) = prod(τ,σ,m)` of an Artin–Tits context.
pub fn artin_relations(ctx: &GarsideContext) -> Result<Vec<Relation>> {
    if !ctx.is_artin() {
        return Err(GarsideError::WrongContext("an Artin–Tits context".into()));
    }
    let n = ctx.atom_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let m = ctx.coxeter_exponent(a, b).unwrap();
            out.push(Relation {
                lhs: alternating(a as u8, b as u8, m),
                rhs: alternating(b as u8, a as u8, m),
            });
        }
    }
    Ok(out)
}

/// All words reachable from `start` by applying relations in either
/// direction, never exceeding `max_len` letters. The flag reports whether a
/// rewrite was cut off by the bound.
pub fn closure(start: &[u8], relations: &[Relation], max_len: usize) -> (HashSet<Vec<u8>>, bool) {
    let mut seen: HashSet<Vec<u8>> = HashSet::from([start.to_vec()]);
    let mut queue = VecDeque::from([start.to_vec()]);
    let mut truncated = false;
    while let Some(w) = queue.pop_front() {
        for rel in relations {
            for (from, to) in [(&rel.lhs, &rel.rhs), (&rel.rhs, &rel.lhs)] {
                if from.len() > w.len() {
                    continue;
                }
                for pos in 0..=w.len() - from.len() {
                    if &w[pos..pos + from.len()] != from.as_slice() {
                        continue;
                    }
                    if w.len() - from.len() + to.len() > max_len {
                        truncated = true;
                        continue;
                    }
                    let mut next = Vec::with_capacity(w.len() - from.len() + to.len());
                    next.extend_from_slice(&w[..pos]);
                    next.extend_from_slice(to);
                    next.extend_from_slice(&w[pos + from.len()..]);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    (seen, truncated)
}

/// Canonical key of a signed word: `(k, P)` for the element `Δ^{-k}·P`
/// with `k` minimal and `P` the least word of its class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OracleKey {
    pub delta_inverse_power: i64,
    pub positive: Vec<u8>,
}

/// Normal-form-free equivalence oracle for Artin–Tits contexts.
pub struct RewritingOracle {
    relations: Vec<Relation>,
    delta_word: Vec<u8>,
    /// `cofactor[s]`: a positive word `c` with `s·c ≡ Δ`.
    cofactor: Vec<Vec<u8>>,
    /// Δ-conjugation on atoms.
    twist: Vec<u8>,
    length_bound: usize,
}

impl RewritingOracle {
    pub fn new(ctx: &GarsideContext, length_bound: usize) -> Result<Self> {
        let relations = artin_relations(ctx)?;
        let n = ctx.atom_count();
        let (delta_word, twist): (Vec<u8>, Vec<u8>) = match ctx.kind() {
            ContextKind::Braid(strands) => {
                let mut w = Vec::new();
                for k in 1..*strands {
                    w.extend((0..k as u8).rev());
                }
                (w, (0..n as u8).map(|a| n as u8 - 1 - a).collect())
            }
            ContextKind::Dihedral(m) => {
                let twist = if m % 2 == 0 { vec![0, 1] } else { vec![1, 0] };
                (alternating(0, 1, *m), twist)
            }
            ContextKind::Table(_) => unreachable!("rejected by artin_relations"),
        };
        let (delta_class, _) = closure(&delta_word, &relations, delta_word.len());
        let cofactor = (0..n as u8)
            .map(|s| {
                delta_class
                    .iter()
                    .filter(|w| w[0] == s)
                    .min()
                    .map(|w| w[1..].to_vec())
                    .ok_or_else(|| GarsideError::Internal(format!("atom {s} does not divide Δ")))
            })
            .collect::<Result<_>>()?;
        Ok(Self { relations, delta_word, cofactor, twist, length_bound })
    }

    pub fn key(&self, word: &Word) -> Result<OracleKey> {
        let mut power: i64 = 0;
        let mut positive: Vec<u8> = Vec::new();
        for l in word.iter() {
            let a = l.atom0();
            if a >= self.twist.len() {
                return Err(GarsideError::UnknownAtom { atom: l.atom(), atoms: self.twist.len() });
            }
            if l.is_positive() {
                positive.push(a as u8);
            } else {
                // P·s⁻¹ = P·c·Δ⁻¹ = Δ⁻¹·twist(P·c)
                positive.extend_from_slice(&self.cofactor[a]);
                for x in positive.iter_mut() {
                    *x = self.twist[*x as usize];
                }
                power += 1;
            }
            if positive.len() > self.length_bound {
                return Err(GarsideError::BoundExceeded(self.length_bound));
            }
        }
        let d = self.delta_word.len();
        let (delta_class, _) = closure(&self.delta_word, &self.relations, d);
        loop {
            let (class, _) = closure(&positive, &self.relations, positive.len());
            if power > 0 && positive.len() >= d {
                if let Some(rest) = class
                    .iter()
                    .filter(|w| delta_class.contains(&w[..d]))
                    .map(|w| w[d..].to_vec())
                    .min()
                {
                    positive = rest;
                    power -= 1;
                    continue;
                }
            }
            let least = class.into_iter().min().unwrap();
            return Ok(OracleKey { delta_inverse_power: power, positive: least });
        }
    }

    pub fn equivalent(&self, w1: &Word, w2: &Word) -> Result<bool> {
        Ok(self.key(w1)? == self.key(w2)?)
    }
}

/// One-shot form of [`RewritingOracle::equivalent`].
pub fn oracle_equivalent(w1: &Word, w2: &Word, ctx: &GarsideContext, length_bound: usize) -> Result<bool> {
    RewritingOracle::new(ctx, length_bound)?.equivalent(w1, w2)
}

/// Positive-word equivalence by closure, for words of equal length in an
/// Artin–Tits context.
pub fn positive_equivalent(u: &[u8], v: &[u8], relations: &[Relation]) -> bool {
    u.len() == v.len() && closure(u, relations, u.len()).0.contains(v)
}

/// Enumerates the monoid `⟨atoms ; relations⟩` through words of length at
/// most `max_len`, locates the minimal element whose left and right divisor
/// sets coincide and contain every atom, and emits the table file of its
/// divisors.
pub fn present_garside_monoid(
    name: &str,
    atom_names: &[&str],
    relations: &[Relation],
    max_len: usize,
) -> Result<TableFile> {
    let atoms = atom_names.len();
    // Partition every word of length ≤ max_len into closure classes.
    let mut class_of: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut classes: Vec<Vec<Vec<u8>>> = Vec::new();
    let mut exact: Vec<bool> = Vec::new();
    let mut frontier: Vec<Vec<u8>> = vec![Vec::new()];
    for len in 0..=max_len {
        for w in &frontier {
            if class_of.contains_key(w) {
                continue;
            }
            let (class, truncated) = closure(w, relations, max_len);
            let id = classes.len();
            let mut members: Vec<Vec<u8>> = class.into_iter().collect();
            members.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
            for m in &members {
                class_of.insert(m.clone(), id);
            }
            // A class touching the bound may have longer members.
            exact.push(!truncated && members.iter().all(|m| m.len() < max_len));
            classes.push(members);
        }
        if len < max_len {
            frontier = frontier
                .iter()
                .flat_map(|w| {
                    (0..atoms as u8).map(move |a| {
                        let mut next = w.clone();
                        next.push(a);
                        next
                    })
                })
                .collect();
        }
    }
    let norm = |id: usize| classes[id].iter().map(Vec::len).max().unwrap();
    let divisors = |id: usize, left: bool| -> BTreeMap<usize, ()> {
        let mut out = BTreeMap::new();
        for w in &classes[id] {
            for cut in 0..=w.len() {
                let part = if left { &w[..cut] } else { &w[cut..] };
                out.insert(class_of[part], ());
            }
        }
        out
    };
    let mut candidates: Vec<usize> = (0..classes.len()).filter(|&id| exact[id]).collect();
    candidates.sort_by_key(|&id| (norm(id), classes[id][0].clone()));
    let atom_ids: Vec<usize> = (0..atoms as u8).map(|a| class_of[&vec![a]]).collect();
    let delta = candidates
        .into_iter()
        .find(|&id| {
            let left = divisors(id, true);
            left == divisors(id, false) && atom_ids.iter().all(|a| left.contains_key(a))
        })
        .ok_or(GarsideError::BoundExceeded(max_len))?;

    let mut simples: Vec<usize> = divisors(delta, true).into_keys().collect();
    simples.sort_by_key(|&id| (norm(id), classes[id][0].clone()));
    let position: HashMap<usize, usize> = simples.iter().enumerate().map(|(k, &id)| (id, k)).collect();
    let left_divides = |x: usize, y: usize| divisors(y, true).contains_key(&x);
    let n = simples.len();
    let mut complement = vec![vec![0usize; n]; n];
    for (i, &x) in simples.iter().enumerate() {
        for (j, &y) in simples.iter().enumerate() {
            let common: Vec<usize> = simples
                .iter()
                .copied()
                .filter(|&m| left_divides(x, m) && left_divides(y, m))
                .collect();
            let lcm = common
                .iter()
                .copied()
                .find(|&m| common.iter().all(|&other| left_divides(m, other)))
                .ok_or_else(|| GarsideError::Internal("no right lcm among simples".into()))?;
            let z = simples
                .iter()
                .copied()
                .find(|&z| class_of.get(&[classes[x][0].clone(), classes[z][0].clone()].concat()) == Some(&lcm))
                .ok_or_else(|| GarsideError::Internal("complement is not simple".into()))?;
            complement[i][j] = position[&z];
        }
    }
    let delta_index = position[&delta];
    let phi: Vec<usize> = (0..n)
        .map(|z| complement[complement[z][delta_index]][delta_index])
        .collect();
    let spell = |id: usize| -> String {
        classes[id][0]
            .iter()
            .map(|&a| atom_names[a as usize])
            .collect::<Vec<_>>()
            .join(" ")
    };
    Ok(TableFile {
        name: name.to_string(),
        atoms: atom_names.iter().map(|s| s.to_string()).collect(),
        simples: simples.iter().map(|&id| spell(id)).collect(),
        left_complement: complement,
        phi,
    })
}

/// The presentation `⟨a, b ; aba = b²⟩`.
pub fn exotic_relations() -> Vec<Relation> {
    vec![Relation { lhs: vec![0, 1, 0], rhs: vec![1, 1] }]
}

/// Regenerates the bundled exotic table with the default closure bound.
pub fn generate_exotic_table() -> Result<TableFile> {
    present_garside_monoid(crate::context::EXOTIC_NAME, &["a", "b"], &exotic_relations(), 12)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn closure_of_braid_delta() {
        let ctx = GarsideContext::braid(3).unwrap();
        let rels = artin_relations(&ctx).unwrap();
        let (class, truncated) = closure(&[0, 1, 0], &rels, 3);
        assert!(!truncated);
        assert_eq!(class.len(), 2);
    }

    #[test]
    fn oracle_basic_answers() {
        let ctx = GarsideContext::braid(3).unwrap();
        let oracle = RewritingOracle::new(&ctx, 64).unwrap();
        assert!(oracle.equivalent(&w("aa"), &w("aa")).unwrap());
        assert!(!oracle.equivalent(&w("a"), &w("b")).unwrap());
        assert!(oracle.equivalent(&w("aba"), &w("bab")).unwrap());
        assert!(!oracle.equivalent(&w("ab"), &w("ba")).unwrap());
        assert!(oracle.equivalent(&w("abaBAB"), &w("")).unwrap());
        assert!(oracle.equivalent(&w("aA"), &w("Bb")).unwrap());
        assert!(oracle.equivalent(&w("Ab"), &w("baaBAB")).unwrap());
    }

    #[test]
    fn oracle_rejects_tables_and_long_words() {
        let exotic = GarsideContext::exotic().unwrap();
        assert!(RewritingOracle::new(&exotic, 10).is_err());
        let ctx = GarsideContext::braid(3).unwrap();
        let oracle = RewritingOracle::new(&ctx, 4).unwrap();
        assert_eq!(oracle.key(&w("AAA")), Err(GarsideError::BoundExceeded(4)));
    }

    #[test]
    fn exotic_closure_is_not_length_preserving() {
        let (class, _) = closure(&[1, 1, 1], &exotic_relations(), 12);
        let mut words: Vec<_> = class.into_iter().collect();
        words.sort();
        assert_eq!(words, vec![vec![0, 1, 0, 1], vec![1, 0, 1, 0], vec![1, 1, 1]]);
    }
}
