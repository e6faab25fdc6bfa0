//! Subword reversing, trivial words built from seeds, the exhaustive seed
//! search and a seeded generator of random trivial words.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::context::GarsideContext;
use crate::disks::has_removable_pair;
use crate::element::PositiveElement;
use crate::error::{GarsideError, Result};
use crate::oracle::{alternating, artin_relations};
use crate::words::{Letter, Word};

/// Default cap on `(strands - 1)^length` for the seed search.
pub const SEARCH_GUARD: u64 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversingResult {
    pub u_prime: Word,
    pub v_prime: Word,
    /// Right lcm of `u` and `v`, equal to `u·v'` and `v·u'`.
    pub lcm: PositiveElement,
}

/// Which `σ⁻¹τ` factor to rewrite next.
#[derive(Clone, Debug)]
pub enum RewriteOrder {
    Leftmost,
    /// Uniformly random among the available factors.
    Random(u64),
}

fn positive_word_checked(ctx: &GarsideContext, w: &Word) -> Result<()> {
    w.check_atoms(ctx.atom_count())?;
    if !w.is_positive() {
        return Err(GarsideError::NotPositive);
    }
    if !ctx.is_artin() {
        return Err(GarsideError::WrongContext(format!("reversing needs an Artin context, got {}", ctx.kind())));
    }
    Ok(())
}

/// Reverses `u⁻¹·v` into `v'·u'⁻¹`.
pub fn reverse(ctx: &GarsideContext, u: &Word, v: &Word) -> Result<ReversingResult> {
    reverse_with(ctx, u, v, RewriteOrder::Leftmost)
}

pub fn reverse_with(ctx: &GarsideContext, u: &Word, v: &Word, order: RewriteOrder) -> Result<ReversingResult> {
    positive_word_checked(ctx, u)?;
    positive_word_checked(ctx, v)?;
    let mut rng = match order {
        RewriteOrder::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        RewriteOrder::Leftmost => None,
    };
    let mut letters: Vec<Letter> = u.invert().word.0;
    letters.extend_from_slice(v.letters());
    loop {
        let sites: Vec<usize> = (0..letters.len().saturating_sub(1))
            .filter(|&k| !letters[k].is_positive() && letters[k + 1].is_positive())
            .collect();
        if sites.is_empty() {
            break;
        }
        let k = match rng.as_mut() {
            Some(rng) => sites[rng.random_range(0..sites.len())],
            None => sites[0],
        };
        let (s, t) = (letters[k].atom0(), letters[k + 1].atom0());
        let replacement: Vec<Letter> = if s == t {
            Vec::new()
        } else {
            let m = ctx.coxeter_exponent(s, t).unwrap();
            let pos = alternating(t as u8, s as u8, m - 1).into_iter().map(|a| Letter::pos(a as usize + 1));
            let neg = alternating(s as u8, t as u8, m - 1)
                .into_iter()
                .rev()
                .map(|a| Letter::neg(a as usize + 1));
            pos.chain(neg).collect()
        };
        letters.splice(k..k + 2, replacement);
    }
    let split = letters.iter().position(|l| !l.is_positive()).unwrap_or(letters.len());
    let v_prime = Word(letters[..split].to_vec());
    let u_prime = Word(letters[split..].to_vec()).invert().word;
    let lcm = ctx.normalize(&u.concat(&v_prime))?;
    Ok(ReversingResult { u_prime, v_prime, lcm })
}

/// `v'⁻¹·u⁻¹·v·u'`, a trivial word.
pub fn seed_word(ctx: &GarsideContext, u: &Word, v: &Word) -> Result<Word> {
    let r = reverse(ctx, u, v)?;
    Ok(r.v_prime.invert().word.concat(&u.invert().word).concat(v).concat(&r.u_prime))
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Worker threads; 0 picks one per core.
    pub jobs: usize,
    /// Examine one seed per orbit of the atom flip.
    pub dedupe_symmetry: bool,
    /// Lifts the [`SEARCH_GUARD`] cap.
    pub override_guard: bool,
    /// Keep one [`SeedResult`] per examined seed.
    pub record_all: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub u: String,
    pub v: String,
    pub word: String,
    /// Number of seeds in the flip orbit, reported when deduplicating.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit_size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedResult {
    pub u: String,
    pub v: String,
    pub removable: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchReport {
    pub strands: usize,
    pub length: usize,
    pub pairs_examined: u64,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub results: Vec<SeedResult>,
    /// Wall-clock time; excluded from the serialized report so runs compare
    /// byte for byte.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchReport {
    /// Summary trailer line.
    pub fn summary_json(&self) -> String {
        serde_json::json!({
            "strands": self.strands,
            "length": self.length,
            "pairs_examined": self.pairs_examined,
            "counterexamples": self.counterexamples.len(),
        })
        .to_string()
    }

    /// Seed results (if recorded), counterexamples, then the summary.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&serde_json::to_string(r).unwrap());
            out.push('\n');
        }
        for c in &self.counterexamples {
            out.push_str(&serde_json::to_string(c).unwrap());
            out.push('\n');
        }
        out.push_str(&self.summary_json());
        out.push('\n');
        out
    }
}

/// Positive words of exactly `length` letters over `atoms` atoms, in
/// lexicographic order.
pub fn positive_words(atoms: usize, length: usize) -> Vec<Word> {
    let mut out = vec![Word::new()];
    for _ in 0..length {
        out = out
            .into_iter()
            .flat_map(|w| (1..=atoms).map(move |a| w.concat(&Word::positive([a]))))
            .collect();
    }
    out
}

/// Examines every unordered pair of distinct positive words of the given
/// length and reports the seeds whose trivial word has no removable pair.
pub fn search_counterexamples(strands: usize, length: usize, options: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    if strands < 3 || length == 0 {
        return Err(GarsideError::OutOfRange(format!("need strands ≥ 3 and length ≥ 1, got {strands}, {length}")));
    }
    let atoms = strands - 1;
    let size = (atoms as u64).checked_pow(length as u32).unwrap_or(u64::MAX);
    if size > SEARCH_GUARD && !options.override_guard {
        return Err(GarsideError::GuardExceeded { size, guard: SEARCH_GUARD });
    }
    let ctx = GarsideContext::braid(strands)?;
    let words = positive_words(atoms, length);
    let index_of = |w: &Word| words.binary_search(w).unwrap();
    let flipped: Vec<usize> = words.iter().map(|w| index_of(&w.flip(atoms).word)).collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| GarsideError::Internal(e.to_string()))?;
    let per_row: Vec<Result<(u64, Vec<SeedResult>, Vec<Counterexample>)>> = pool.install(|| {
        (0..words.len())
            .into_par_iter()
            .map(|a| {
                let mut examined = 0;
                let mut results = Vec::new();
                let mut found = Vec::new();
                for b in a + 1..words.len() {
                    let orbit = {
                        let (fa, fb) = (flipped[a], flipped[b]);
                        let image = (fa.min(fb), fa.max(fb));
                        if options.dedupe_symmetry && image < (a, b) {
                            continue;
                        }
                        if image == (a, b) {
                            1
                        } else {
                            2
                        }
                    };
                    examined += 1;
                    let (u, v) = (&words[a], &words[b]);
                    let word = seed_word(&ctx, u, v)?;
                    let removable = has_removable_pair(&ctx, &word)?;
                    if options.record_all {
                        results.push(SeedResult { u: u.to_string(), v: v.to_string(), removable });
                    }
                    if !removable {
                        found.push(Counterexample {
                            u: u.to_string(),
                            v: v.to_string(),
                            word: word.to_string(),
                            orbit_size: options.dedupe_symmetry.then_some(orbit),
                        });
                    }
                }
                Ok((examined, results, found))
            })
            .collect()
    });
    let mut report = SearchReport {
        strands,
        length,
        pairs_examined: 0,
        counterexamples: Vec::new(),
        results: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for row in per_row {
        let (examined, results, found) = row?;
        report.pairs_examined += examined;
        report.results.extend(results);
        report.counterexamples.extend(found);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// A trivial word built from the empty word by `ops` random moves:
/// inserting `s^e s^{-e}`, conjugating by a letter, or rewriting one side
/// of a defining relation (or its inverse) into the other.
pub fn random_trivial_word(ctx: &GarsideContext, ops: usize, seed: u64) -> Word {
    random_trivial_word_capped(ctx, ops, seed, usize::MAX)
}

/// As [`random_trivial_word`], but growing moves that would exceed
/// `max_len` letters are replaced by relation rewrites.
pub fn random_trivial_word_capped(ctx: &GarsideContext, ops: usize, seed: u64, max_len: usize) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let relations: Vec<(Vec<Letter>, Vec<Letter>)> = artin_relations(ctx)
        .unwrap_or_default()
        .into_iter()
        .flat_map(|r| {
            let lhs = Word::positive(r.lhs.iter().map(|&a| a as usize + 1));
            let rhs = Word::positive(r.rhs.iter().map(|&a| a as usize + 1));
            let (li, ri) = (lhs.invert().word, rhs.invert().word);
            [(lhs.0.clone(), rhs.0.clone()), (rhs.0, lhs.0), (li.0.clone(), ri.0.clone()), (ri.0, li.0)]
        })
        .collect();
    let atoms = ctx.atom_count();
    let mut letters: Vec<Letter> = Vec::new();
    for _ in 0..ops {
        let letter = Letter::new(rng.random_range(1..=atoms), if rng.random_bool(0.5) { 1 } else { -1 });
        let grow_ok = letters.len() + 2 <= max_len;
        let mv = if grow_ok { rng.random_range(0..3) } else { 2 };
        match mv {
            0 => {
                let at = rng.random_range(0..=letters.len());
                letters.splice(at..at, [letter, letter.inverse()]);
            }
            1 => {
                letters.insert(0, letter);
                letters.push(letter.inverse());
            }
            _ => {
                let mut sites = Vec::new();
                for (r, (from, _)) in relations.iter().enumerate() {
                    for k in 0..(letters.len() + 1).saturating_sub(from.len()) {
                        if letters[k..k + from.len()] == from[..] {
                            sites.push((r, k));
                        }
                    }
                }
                if sites.is_empty() {
                    if grow_ok {
                        let at = rng.random_range(0..=letters.len());
                        letters.splice(at..at, [letter, letter.inverse()]);
                    }
                } else {
                    let (r, k) = sites[rng.random_range(0..sites.len())];
                    let (from, to) = &relations[r];
                    letters.splice(k..k + from.len(), to.iter().copied());
                }
            }
        }
    }
    Word(letters)
}
