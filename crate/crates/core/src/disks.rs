//! Removable pairs of letters: detection, the dihedral and simple-fraction
//! finders, transfer across cyclic conjugation, and unbraiding.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::context::GarsideContext;
use crate::element::GroupElement;
use crate::error::{GarsideError, Result};
use crate::valuation::OrderType;
use crate::words::{Letter, Syntax, Word};

/// Letters `i < j` of `word` with `word[i] = σ^e`, `word[j] = τ^{-e}` and
/// `σ^e·u·τ^{-e} ≡ u` for the interior `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovablePair {
    #[serde(with = "compact_word")]
    pub word: Word,
    pub i: usize,
    pub j: usize,
    pub sigma: usize,
    pub tau: usize,
    pub e: i8,
    pub verified: bool,
}

mod compact_word {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::words::{Syntax, Word};

    pub fn serialize<S: Serializer>(w: &Word, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&w.format(Syntax::Compact))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Word, D::Error> {
        let text = String::deserialize(d)?;
        let syntax = if text.contains(|c: char| c.is_ascii_digit()) { Syntax::Numeric } else { Syntax::Compact };
        Word::parse(&text, syntax).map_err(serde::de::Error::custom)
    }
}

impl RemovablePair {
    fn new(word: &Word, i: usize, j: usize, verified: bool) -> Self {
        let (a, b) = (word.letters()[i], word.letters()[j]);
        RemovablePair {
            word: word.clone(),
            i,
            j,
            sigma: a.atom(),
            tau: b.atom(),
            e: a.exponent(),
            verified,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("pair serializes")
    }

    /// The word with both letters removed.
    pub fn deleted(&self) -> Word {
        self.word.delete_pair(self.i, self.j)
    }

    /// Compact rendering of the subword from `i` to `j` inclusive.
    pub fn subword(&self) -> String {
        self.word.subword(self.i, self.j + 1).format(Syntax::Compact)
    }
}

/// The word minus letters `i` and `j`.
pub fn delete(w: &Word, i: usize, j: usize) -> Word {
    w.delete_pair(i, j)
}

/// `P_0, ..., P_L` with `P_k` the element of the first `k` letters.
pub fn prefix_elements(ctx: &GarsideContext, w: &Word) -> Result<Vec<GroupElement>> {
    w.check_atoms(ctx.atom_count())?;
    let mut out = Vec::with_capacity(w.len() + 1);
    let mut x = GroupElement::identity();
    out.push(x.clone());
    for l in w.iter() {
        ctx.mul_letter_in_place(&mut x, l);
        out.push(x.clone());
    }
    Ok(out)
}

fn opposite(a: Letter, b: Letter) -> bool {
    a.exponent() != b.exponent()
}

/// `P_i⁻¹·P_{j+1} = P_{i+1}⁻¹·P_j` on cached prefixes.
fn removable_on_prefixes(ctx: &GarsideContext, prefixes: &[GroupElement], i: usize, j: usize) -> bool {
    let outer = ctx.g_mul(&ctx.g_inv(&prefixes[i]), &prefixes[j + 1]);
    let inner = ctx.g_mul(&ctx.g_inv(&prefixes[i + 1]), &prefixes[j]);
    outer == inner
}

fn check_indices(w: &Word, i: usize, j: usize) -> Result<()> {
    for k in [i, j] {
        if k >= w.len() {
            return Err(GarsideError::IndexOutOfRange { index: k, len: w.len() });
        }
    }
    if i >= j {
        return Err(GarsideError::Precondition(format!("pair indices must satisfy i < j, got ({i}, {j})")));
    }
    Ok(())
}

pub fn is_removable_pair(ctx: &GarsideContext, w: &Word, i: usize, j: usize) -> Result<bool> {
    check_indices(w, i, j)?;
    let letters = w.letters();
    if !opposite(letters[i], letters[j]) {
        return Ok(false);
    }
    let prefixes = prefix_elements(ctx, &w.subword(0, j + 1))?;
    Ok(removable_on_prefixes(ctx, &prefixes, i, j))
}

/// `C_k = P_{k+1}·P_k⁻¹`; `(i, j)` is removable exactly when `C_i·C_j = 1`.
fn letter_conjugates(ctx: &GarsideContext, w: &Word) -> Result<(Vec<GroupElement>, Vec<GroupElement>)> {
    let prefixes = prefix_elements(ctx, w)?;
    let conj = (0..w.len())
        .map(|k| ctx.g_mul(&prefixes[k + 1], &ctx.g_inv(&prefixes[k])))
        .collect();
    Ok((prefixes, conj))
}

/// All removable pairs in lexicographic order, each checked on the
/// literal prefix formula as well.
pub fn find_removable_pairs(ctx: &GarsideContext, w: &Word) -> Result<Vec<RemovablePair>> {
    let (prefixes, conj) = letter_conjugates(ctx, w)?;
    let mut by_element: HashMap<&GroupElement, Vec<usize>> = HashMap::new();
    for (k, c) in conj.iter().enumerate() {
        by_element.entry(c).or_default().push(k);
    }
    let mut out = Vec::new();
    for (i, c) in conj.iter().enumerate() {
        let Some(partners) = by_element.get(&ctx.g_inv(c)) else {
            continue;
        };
        for &j in partners.iter().filter(|&&j| j > i) {
            let verified = removable_on_prefixes(ctx, &prefixes, i, j);
            if !verified {
                return Err(GarsideError::Internal(format!("conjugate scan and prefix check disagree at ({i}, {j})")));
            }
            out.push(RemovablePair::new(w, i, j, verified));
        }
    }
    out.sort_by_key(|p| (p.i, p.j));
    Ok(out)
}

/// Whether any removable pair exists; stops at the first one.
pub fn has_removable_pair(ctx: &GarsideContext, w: &Word) -> Result<bool> {
    let (_, conj) = letter_conjugates(ctx, w)?;
    let mut seen: HashMap<&GroupElement, ()> = HashMap::with_capacity(conj.len());
    for c in &conj {
        if seen.contains_key(&ctx.g_inv(c)) {
            return Ok(true);
        }
        seen.insert(c, ());
    }
    Ok(false)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Lexicographically least `(i, j)`.
    #[default]
    Leftmost,
    /// Least `j - i`, leftmost among those.
    Innermost,
}

impl std::str::FromStr for Strategy {
    type Err = GarsideError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "leftmost" => Ok(Strategy::Leftmost),
            "innermost" => Ok(Strategy::Innermost),
            _ => Err(GarsideError::Precondition(format!("unknown strategy {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnbraidOutcome {
    /// One entry per deletion, with indices into the word at that step.
    pub trace: Vec<RemovablePair>,
    pub residual: Word,
}

impl UnbraidOutcome {
    pub fn success(&self) -> bool {
        self.residual.is_empty()
    }

    pub fn steps(&self) -> usize {
        self.trace.len()
    }
}

/// Deletes one removable pair per step until none is left.
pub fn unbraid(ctx: &GarsideContext, w: &Word, strategy: Strategy) -> Result<UnbraidOutcome> {
    let mut current = w.clone();
    let mut trace = Vec::new();
    loop {
        let pairs = find_removable_pairs(ctx, &current)?;
        let chosen = match strategy {
            Strategy::Leftmost => pairs.into_iter().next(),
            Strategy::Innermost => pairs.into_iter().min_by_key(|p| (p.j - p.i, p.i)),
        };
        let Some(pair) = chosen else {
            break;
        };
        current = pair.deleted();
        trace.push(pair);
    }
    Ok(UnbraidOutcome { trace, residual: current })
}

/// Carries a removable pair of the conjugate `v·u` back to `w = u·v`, where
/// `|u| = u_len`. A pair straddling the seam becomes the pair joining its
/// `τ^{-e}` inside `u` to its `σ^e` inside `v`; that step needs `w` trivial.
pub fn transfer_pair(ctx: &GarsideContext, u_len: usize, w: &Word, i: usize, j: usize) -> Result<RemovablePair> {
    if u_len > w.len() {
        return Err(GarsideError::IndexOutOfRange { index: u_len, len: w.len() });
    }
    let conj = w.cyclic_shift(u_len);
    if !is_removable_pair(ctx, &conj.word, i, j)? {
        return Err(GarsideError::NotRemovable { i, j });
    }
    let v_len = w.len() - u_len;
    let (a, b) = (conj.pull_back(i), conj.pull_back(j));
    let (ti, tj) = if (i < v_len) == (j < v_len) { (a, b) } else { (b, a) };
    debug_assert!(ti < tj);
    if !is_removable_pair(ctx, w, ti, tj)? {
        return Err(GarsideError::Internal(format!(
            "pair ({i}, {j}) of the conjugate does not transfer to ({ti}, {tj})"
        )));
    }
    Ok(RemovablePair::new(w, ti, tj, true))
}

fn require_two_atom_artin(ctx: &GarsideContext) -> Result<()> {
    if ctx.atom_count() == 2 && ctx.is_artin() {
        Ok(())
    } else {
        Err(GarsideError::WrongContext(format!("{} is not a two-atom Artin group", ctx.kind())))
    }
}

fn verified(ctx: &GarsideContext, w: &Word, i: usize, j: usize) -> Result<RemovablePair> {
    if is_removable_pair(ctx, w, i, j)? {
        Ok(RemovablePair::new(w, i, j, true))
    } else {
        Err(GarsideError::Internal(format!("({i}, {j}) failed verification")))
    }
}

/// Constructive pair finder for trivial words in a two-atom Artin group.
pub fn find_pair_dihedral(ctx: &GarsideContext, w: &Word) -> Result<RemovablePair> {
    require_two_atom_artin(ctx)?;
    if w.is_empty() {
        return Err(GarsideError::EmptyWord);
    }
    if !ctx.is_trivial(w)? {
        return Err(GarsideError::NotTrivial);
    }
    let letters = w.letters();
    let len = letters.len();
    if let Some(k) = (0..len - 1).find(|&k| letters[k + 1] == letters[k].inverse()) {
        return verified(ctx, w, k, k + 1);
    }
    // A trivial word has exponent sum zero, so some cyclically adjacent
    // pair reads x⁻¹·y.
    let k = (0..len)
        .find(|&k| !letters[k].is_positive() && letters[(k + 1) % len].is_positive())
        .ok_or_else(|| GarsideError::Internal("trivial word without a sign change".into()))?;
    if letters[k].atom() == letters[(k + 1) % len].atom() {
        // x⁻¹ at the end, x at the start: the interior is trivial too.
        return verified(ctx, w, 0, len - 1);
    }
    // Rename atoms so the transition reads σ1⁻¹·σ2, then rotate it to the front.
    let swapped = if letters[k].atom() == 2 { w.flip(2).word } else { w.clone() };
    let c = swapped.cyclic_shift(k).word;
    let a = ctx.atom(0);
    let b = ctx.atom(1);
    let diagonal = OrderType::of(&[0, 0]);
    let mut q = GroupElement::identity();
    let mut hit = None;
    for (t, l) in c.iter().enumerate().skip(1) {
        ctx.mul_letter_in_place(&mut q, l);
        let ty = OrderType::of(&[ctx.nu_unchecked(a, &q), ctx.nu_unchecked(b, &q)]);
        if ty == diagonal {
            hit = Some(t);
            break;
        }
    }
    let t = hit.ok_or_else(|| GarsideError::Internal("no prefix reaches the diagonal type".into()))?;
    if !q.body().is_empty() {
        return Err(GarsideError::Internal("diagonal prefix is not a power of Δ".into()));
    }
    let candidate = [(0, t), (1, t)]
        .into_iter()
        .find(|&(i, j)| is_removable_pair(ctx, &c, i, j).unwrap_or(false))
        .ok_or_else(|| GarsideError::Internal(format!("neither (0, {t}) nor (1, {t}) is removable")))?;
    let pair = transfer_pair(ctx, k, &swapped, candidate.0, candidate.1)?;
    verified(ctx, w, pair.i, pair.j)
}

/// For equivalent positive words `u`, `v` representing one simple, the pair
/// in `u⁻¹·v` joining the last letter of `u⁻¹` to the end of the shortest
/// prefix of `v` left-divisible by the first letter of `u`.
pub fn find_pair_simple_fraction(ctx: &GarsideContext, u: &Word, v: &Word) -> Result<RemovablePair> {
    if u.is_empty() || v.is_empty() {
        return Err(GarsideError::EmptyWord);
    }
    for x in [u, v] {
        if ctx.normalize(x)?.canonical_length() > 1 {
            return Err(GarsideError::Precondition(format!("{x} is not a simple element")));
        }
    }
    if !ctx.equivalent(u, v)? {
        return Err(GarsideError::Precondition(format!("{u} and {v} are not equivalent")));
    }
    let sigma = ctx.atom(u.letters()[0].atom0());
    let k = (1..=v.len())
        .find(|&k| {
            let head = ctx.head(&ctx.normalize(&v.subword(0, k)).unwrap(), crate::context::Side::Left);
            ctx.divides(sigma, head, crate::context::Side::Left)
        })
        .ok_or_else(|| GarsideError::Internal("first letter of u does not divide v".into()))?;
    let w = u.invert().word.concat(v);
    verified(ctx, &w, u.len() - 1, u.len() + k - 1)
}
