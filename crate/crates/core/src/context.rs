//! Instantiated Garside structures.
//!
//! Every instance is reduced to the same representation: simples are dense
//! indices (identity = 0, Δ = last) and the division lattice is stored as
//! per-atom multiplication and division tables. Lattice operations on
//! simples walk atoms through these tables, which keeps memory linear in the
//! number of simples (`n!·(n-1)` entries for braids) while every step is a
//! table lookup.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{GarsideError, Result};
use crate::table_file::TableFile;

const NONE: u32 = u32::MAX;

/// Largest braid index whose simple tables are materialized.
pub const MAX_BRAID_STRANDS: usize = 8;

/// Name of the bundled table instance `⟨a, b ; aba = b²⟩`.
pub const EXOTIC_NAME: &str = "exotic-aba-bb";
/// Bundled table file for the exotic monoid.
pub const EXOTIC_DATA: &str = include_str!("../data/exotic-aba-bb.toml");

/// A simple element, as an index into its context's tables.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simple(pub(crate) u32);

impl Simple {
    pub const IDENTITY: Simple = Simple(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContextKind {
    Braid(usize),
    Dihedral(usize),
    Table(String),
}

impl fmt::Display for ContextKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContextKind::Braid(n) => write!(f, "braid:{n}"),
            ContextKind::Dihedral(m) => write!(f, "dihedral:{m}"),
            ContextKind::Table(name) => write!(f, "table:{name}"),
        }
    }
}

/// Parsed form of `braid:N`, `dihedral:M` or `table:NAME-OR-FILE`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContextSpec {
    Braid(usize),
    Dihedral(usize),
    Table(String),
}

impl FromStr for ContextSpec {
    type Err = GarsideError;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| GarsideError::OutOfRange(format!("group spec {s:?}")))?;
        let number = || {
            arg.parse::<usize>()
                .map_err(|_| GarsideError::OutOfRange(format!("group spec {s:?}")))
        };
        match kind {
            "braid" => Ok(ContextSpec::Braid(number()?)),
            "dihedral" => Ok(ContextSpec::Dihedral(number()?)),
            "table" if !arg.is_empty() => Ok(ContextSpec::Table(arg.to_string())),
            _ => Err(GarsideError::OutOfRange(format!("group spec {s:?}"))),
        }
    }
}

impl ContextSpec {
    pub fn build(&self) -> Result<GarsideContext> {
        match self {
            ContextSpec::Braid(n) => GarsideContext::braid(*n),
            ContextSpec::Dihedral(m) => GarsideContext::dihedral(*m),
            ContextSpec::Table(name) if name == EXOTIC_NAME => GarsideContext::exotic(),
            ContextSpec::Table(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    GarsideError::MalformedTable(format!("cannot read {path}: {e}"))
                })?;
                GarsideContext::from_table_str(&text)
            }
        }
    }
}

/// Kind-specific view of a simple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimpleRepr {
    /// Braid simple as the permutation `p` with `p[k]` the image of position `k`.
    Permutation(Vec<u8>),
    /// Dihedral simple `prod(first, other, length)`; Δ has `length == m`.
    Dihedral { first: usize, length: usize },
    Index(usize),
}

/// An immutable Garside structure with precomputed simple tables.
#[derive(Clone)]
pub struct GarsideContext {
    kind: ContextKind,
    atom_names: Vec<String>,
    coxeter: Option<Vec<Vec<usize>>>,
    atoms: usize,
    atom_simple: Vec<Simple>,
    rmul: Vec<u32>,
    lmul: Vec<u32>,
    ldiv: Vec<u32>,
    rdiv: Vec<u32>,
    starts: Vec<u64>,
    finishes: Vec<u64>,
    rcomp: Vec<u32>,
    lcomp: Vec<u32>,
    phi: Vec<u32>,
    phi_inv: Vec<u32>,
    phi_order: usize,
    norm: Vec<u32>,
    words: Vec<Vec<u8>>,
    reprs: Vec<SimpleRepr>,
}

impl fmt::Debug for GarsideContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GarsideContext")
            .field("kind", &self.kind)
            .field("atoms", &self.atoms)
            .field("simples", &self.simple_count())
            .finish()
    }
}

/// Raw description shared by all builders: right multiplication by atoms.
struct RawStructure {
    kind: ContextKind,
    atom_names: Vec<String>,
    coxeter: Option<Vec<Vec<usize>>>,
    atom_simple: Vec<u32>,
    /// `rmul[s * atoms + a]` = index of `s·a` when simple.
    rmul: Vec<u32>,
    reprs: Vec<SimpleRepr>,
}

impl GarsideContext {
    /// Classical Garside structure of the braid monoid on `n` strands.
    pub fn braid(n: usize) -> Result<Self> {
        if !(2..=MAX_BRAID_STRANDS).contains(&n) {
            return Err(GarsideError::OutOfRange(format!(
                "braid index {n} (need 2 ≤ n ≤ {MAX_BRAID_STRANDS})"
            )));
        }
        let atoms = n - 1;
        let mut perms = permutations(n);
        perms.sort_by_key(|p| (inversions(p), p.clone()));
        let index: HashMap<Vec<u8>, u32> =
            perms.iter().enumerate().map(|(k, p)| (p.clone(), k as u32)).collect();
        let mut rmul = vec![NONE; perms.len() * atoms];
        for (k, p) in perms.iter().enumerate() {
            for a in 0..atoms {
                if p[a] < p[a + 1] {
                    let mut q = p.clone();
                    q.swap(a, a + 1);
                    rmul[k * atoms + a] = index[&q];
                }
            }
        }
        let coxeter = (0..atoms)
            .map(|i| {
                (0..atoms)
                    .map(|j| match i.abs_diff(j) {
                        0 => 1,
                        1 => 3,
                        _ => 2,
                    })
                    .collect()
            })
            .collect();
        finalize(RawStructure {
            kind: ContextKind::Braid(n),
            atom_names: (1..=atoms).map(|i| format!("s{i}")).collect(),
            coxeter: Some(coxeter),
            atom_simple: (0..atoms).map(|a| index[&transposition(n, a)]).collect(),
            rmul,
            reprs: perms.into_iter().map(SimpleRepr::Permutation).collect(),
        })
    }

    /// Artin–Tits monoid of type `I₂(m)`.
    pub fn dihedral(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(GarsideError::OutOfRange(format!("dihedral parameter {m} (need m ≥ 2)")));
        }
        let total = 2 * m;
        let delta = (total - 1) as u32;
        let idx = |first: usize, length: usize| -> u32 {
            if length == m {
                delta
            } else {
                (1 + 2 * (length - 1) + first) as u32
            }
        };
        let mut rmul = vec![NONE; total * 2];
        let mut reprs = vec![SimpleRepr::Dihedral { first: 0, length: 0 }];
        for a in 0..2 {
            rmul[a] = idx(a, 1);
        }
        for length in 1..m {
            for first in 0..2 {
                let s = idx(first, length) as usize;
                reprs.push(SimpleRepr::Dihedral { first, length });
                let last = if length % 2 == 1 { first } else { 1 - first };
                rmul[s * 2 + (1 - last)] = idx(first, length + 1);
            }
        }
        reprs.push(SimpleRepr::Dihedral { first: 0, length: m });
        finalize(RawStructure {
            kind: ContextKind::Dihedral(m),
            atom_names: vec!["s1".into(), "s2".into()],
            coxeter: Some(vec![vec![1, m], vec![m, 1]]),
            atom_simple: vec![idx(0, 1), idx(1, 1)],
            rmul,
            reprs,
        })
    }

    /// The bundled monoid `⟨a, b ; aba = b²⟩`.
    pub fn exotic() -> Result<Self> {
        Self::from_table_str(EXOTIC_DATA)
    }

    /// Builds a context from the text of a table file.
    pub fn from_table_str(text: &str) -> Result<Self> {
        let file = TableFile::parse(text)?;
        Self::from_table(&file)
    }

    pub fn from_table(file: &TableFile) -> Result<Self> {
        let n = file.simples.len();
        let atoms = file.atoms.len();
        let words = file.simple_words()?;
        if n < 2 || !words[0].is_empty() {
            return Err(GarsideError::MalformedTable(
                "simple 0 must be the identity and at least Δ must follow".into(),
            ));
        }
        let comp = &file.left_complement;
        if comp.len() != n || comp.iter().any(|row| row.len() != n) {
            return Err(GarsideError::MalformedTable(format!(
                "left_complement must be a {n}×{n} matrix"
            )));
        }
        if comp.iter().flatten().any(|&v| v >= n) {
            return Err(GarsideError::MalformedTable("complement index out of range".into()));
        }
        let mut atom_simple = vec![NONE; atoms];
        for (k, w) in words.iter().enumerate() {
            if w.len() == 1 {
                atom_simple[w[0] as usize] = k as u32;
            }
        }
        if atom_simple.contains(&NONE) {
            return Err(GarsideError::MalformedTable("every atom must be listed as a simple".into()));
        }
        // x·z = y exactly when x ≼ y (y\x = 1) and z = x\y.
        let mut rmul = vec![NONE; n * atoms];
        for x in 0..n {
            for y in 0..n {
                if comp[y][x] == 0 {
                    let z = comp[x][y] as u32;
                    if let Some(a) = atom_simple.iter().position(|&s| s == z) {
                        rmul[x * atoms + a] = y as u32;
                    }
                }
            }
        }
        let ctx = finalize(RawStructure {
            kind: ContextKind::Table(file.name.clone()),
            atom_names: file.atoms.clone(),
            coxeter: None,
            atom_simple,
            rmul,
            reprs: (0..n).map(SimpleRepr::Index).collect(),
        })?;
        ctx.check_table_consistency(file, &words)?;
        Ok(ctx)
    }

    fn check_table_consistency(&self, file: &TableFile, words: &[Vec<u8>]) -> Result<()> {
        let n = self.simple_count();
        for (k, w) in words.iter().enumerate() {
            if self.eval_simple_word(w) != Some(Simple(k as u32)) {
                return Err(GarsideError::MalformedTable(format!(
                    "word of simple {k} does not evaluate to it"
                )));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let (sx, sy) = (Simple(x as u32), Simple(y as u32));
                let zx = Simple(file.left_complement[x][y] as u32);
                let zy = Simple(file.left_complement[y][x] as u32);
                let left = self.mul(sx, zx);
                if left.is_none() || left != self.mul(sy, zy) || left != Some(self.right_lcm(sx, sy)) {
                    return Err(GarsideError::MalformedTable(format!(
                        "complement entries ({x},{y}) do not describe a right lcm"
                    )));
                }
            }
        }
        if file.phi.len() != n || (0..n).any(|k| file.phi[k] != self.phi[k] as usize) {
            return Err(GarsideError::MalformedTable("phi does not match (z\\Δ)\\Δ".into()));
        }
        Ok(())
    }

    pub fn kind(&self) -> &ContextKind {
        &self.kind
    }

    pub fn atom_count(&self) -> usize {
        self.atoms
    }

    pub fn atom_names(&self) -> &[String] {
        &self.atom_names
    }

    pub fn simple_count(&self) -> usize {
        self.norm.len()
    }

    pub fn simples(&self) -> impl Iterator<Item = Simple> {
        (0..self.simple_count() as u32).map(Simple)
    }

    pub fn identity(&self) -> Simple {
        Simple::IDENTITY
    }

    pub fn delta(&self) -> Simple {
        Simple((self.simple_count() - 1) as u32)
    }

    pub fn is_delta(&self, s: Simple) -> bool {
        s == self.delta()
    }

    /// Simple for 0-based atom `a`.
    pub fn atom(&self, a: usize) -> Simple {
        self.atom_simple[a]
    }

    /// Whether the context is an Artin–Tits instance with known exponents.
    pub fn is_artin(&self) -> bool {
        self.coxeter.is_some()
    }

    /// `m_{στ}` for 0-based atoms, when the context is Artin–Tits.
    pub fn coxeter_exponent(&self, a: usize, b: usize) -> Option<usize> {
        self.coxeter.as_ref().map(|m| m[a][b])
    }

    pub fn norm(&self, s: Simple) -> usize {
        self.norm[s.index()] as usize
    }

    /// Canonical atom word (0-based atoms) of a simple.
    pub fn simple_word(&self, s: Simple) -> &[u8] {
        &self.words[s.index()]
    }

    pub fn repr(&self, s: Simple) -> &SimpleRepr {
        &self.reprs[s.index()]
    }

    pub fn simple_from_permutation(&self, perm: &[u8]) -> Option<Simple> {
        self.reprs
            .iter()
            .position(|r| matches!(r, SimpleRepr::Permutation(p) if p == perm))
            .map(|k| Simple(k as u32))
    }

    /// Evaluates a positive atom word, if it represents a simple.
    pub fn eval_simple_word(&self, atoms: &[u8]) -> Option<Simple> {
        atoms
            .iter()
            .try_fold(Simple::IDENTITY, |s, &a| self.rmul_atom(s, a as usize))
    }

    fn get(table: &[u32], k: usize) -> Option<Simple> {
        match table[k] {
            NONE => None,
            v => Some(Simple(v)),
        }
    }

    /// `s·a` when simple.
    pub fn rmul_atom(&self, s: Simple, a: usize) -> Option<Simple> {
        Self::get(&self.rmul, s.index() * self.atoms + a)
    }

    /// `a·s` when simple.
    pub fn lmul_atom(&self, a: usize, s: Simple) -> Option<Simple> {
        Self::get(&self.lmul, s.index() * self.atoms + a)
    }

    /// `a⁻¹·s` when `a ≼ s`.
    pub fn ldiv_atom(&self, a: usize, s: Simple) -> Option<Simple> {
        Self::get(&self.ldiv, s.index() * self.atoms + a)
    }

    /// `s·a⁻¹` when `a` right-divides `s`.
    pub fn rdiv_atom(&self, s: Simple, a: usize) -> Option<Simple> {
        Self::get(&self.rdiv, s.index() * self.atoms + a)
    }

    /// Bitmask of atoms left-dividing `s`.
    pub fn starting_set(&self, s: Simple) -> u64 {
        self.starts[s.index()]
    }

    /// Bitmask of atoms right-dividing `s`.
    pub fn finishing_set(&self, s: Simple) -> u64 {
        self.finishes[s.index()]
    }

    /// `x·y` when simple.
    pub fn mul(&self, x: Simple, y: Simple) -> Option<Simple> {
        self.words[y.index()]
            .iter()
            .try_fold(x, |s, &a| self.rmul_atom(s, a as usize))
    }

    /// `x⁻¹·y` when `x ≼ y`.
    pub fn left_quotient(&self, x: Simple, y: Simple) -> Option<Simple> {
        self.words[x.index()]
            .iter()
            .try_fold(y, |s, &a| self.ldiv_atom(a as usize, s))
    }

    /// `y·x⁻¹` when `x` right-divides `y`.
    pub fn right_quotient(&self, y: Simple, x: Simple) -> Option<Simple> {
        self.words[x.index()]
            .iter()
            .rev()
            .try_fold(y, |s, &a| self.rdiv_atom(s, a as usize))
    }

    pub fn divides(&self, x: Simple, y: Simple, side: Side) -> bool {
        match side {
            Side::Left => self.left_quotient(x, y).is_some(),
            Side::Right => self.right_quotient(y, x).is_some(),
        }
    }

    /// Greatest common left divisor.
    pub fn left_gcd(&self, mut x: Simple, mut y: Simple) -> Simple {
        let mut g = Simple::IDENTITY;
        loop {
            let common = self.starting_set(x) & self.starting_set(y);
            if common == 0 {
                return g;
            }
            let a = common.trailing_zeros() as usize;
            x = self.ldiv_atom(a, x).unwrap();
            y = self.ldiv_atom(a, y).unwrap();
            g = self.rmul_atom(g, a).expect("gcd of simples stays simple");
        }
    }

    /// Greatest common right divisor.
    pub fn right_gcd(&self, mut x: Simple, mut y: Simple) -> Simple {
        let mut g = Simple::IDENTITY;
        loop {
            let common = self.finishing_set(x) & self.finishing_set(y);
            if common == 0 {
                return g;
            }
            let a = common.trailing_zeros() as usize;
            x = self.rdiv_atom(x, a).unwrap();
            y = self.rdiv_atom(y, a).unwrap();
            g = self.lmul_atom(a, g).expect("gcd of simples stays simple");
        }
    }

    pub fn gcd(&self, x: Simple, y: Simple, side: Side) -> Simple {
        match side {
            Side::Left => self.left_gcd(x, y),
            Side::Right => self.right_gcd(x, y),
        }
    }

    /// Least common right multiple (`x, y ≼ lcm`). Uses that `s ↦ s⁻¹Δ`
    /// reverses the order, turning it into a right gcd.
    pub fn right_lcm(&self, x: Simple, y: Simple) -> Simple {
        let g = self.right_gcd(self.rcomp(x), self.rcomp(y));
        self.lcomp(g)
    }

    /// Least common left multiple (`lcm ≽ x, y`).
    pub fn left_lcm(&self, x: Simple, y: Simple) -> Simple {
        let g = self.left_gcd(self.lcomp(x), self.lcomp(y));
        self.rcomp(g)
    }

    pub fn lcm(&self, x: Simple, y: Simple, side: Side) -> Simple {
        match side {
            Side::Left => self.left_lcm(x, y),
            Side::Right => self.right_lcm(x, y),
        }
    }

    /// `x\y`: the simple `z` with `x·z` the right lcm of `x` and `y`.
    pub fn complement(&self, x: Simple, y: Simple) -> Simple {
        self.left_quotient(x, self.right_lcm(x, y)).unwrap()
    }

    /// The simple `c` with `s·c = Δ`.
    pub fn rcomp(&self, s: Simple) -> Simple {
        Simple(self.rcomp[s.index()])
    }

    /// The simple `c` with `c·s = Δ`.
    pub fn lcomp(&self, s: Simple) -> Simple {
        Simple(self.lcomp[s.index()])
    }

    pub fn phi(&self, s: Simple) -> Simple {
        Simple(self.phi[s.index()])
    }

    pub fn phi_inv(&self, s: Simple) -> Simple {
        Simple(self.phi_inv[s.index()])
    }

    /// `φ^power(s)`; negative powers apply the inverse.
    pub fn phi_pow(&self, s: Simple, power: i64) -> Simple {
        let order = self.phi_order as i64;
        let k = power.rem_euclid(order);
        if 2 * k > order {
            (0..order - k).fold(s, |acc, _| self.phi_inv(acc))
        } else {
            (0..k).fold(s, |acc, _| self.phi(acc))
        }
    }

    /// Order of φ as a permutation of simples.
    pub fn phi_order(&self) -> usize {
        self.phi_order
    }

    fn compute_phi_order(&self) -> usize {
        let mut order = 1usize;
        let n = self.simple_count();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.phi[k] as usize;
                len += 1;
            }
            order = lcm_usize(order, len);
        }
        order
    }

    /// Turns `(a, b)` into a left-weighted pair `(a', b')` with `a'b' = ab`:
    /// `a'` is the maximal simple left divisor of `ab`.
    pub fn left_weight(&self, a: Simple, b: Simple) -> (Simple, Simple) {
        let t = self.left_gcd(self.rcomp(a), b);
        if t.is_identity() {
            return (a, b);
        }
        (self.mul(a, t).unwrap(), self.left_quotient(t, b).unwrap())
    }

    /// Mirror of [`left_weight`](Self::left_weight): `b'` is the maximal
    /// simple right divisor of `ab`.
    pub fn right_weight(&self, a: Simple, b: Simple) -> (Simple, Simple) {
        let t = self.right_gcd(a, self.lcomp(b));
        if t.is_identity() {
            return (a, b);
        }
        (self.right_quotient(a, t).unwrap(), self.mul(t, b).unwrap())
    }

    /// Display name of a simple: its atom word in compact letters, `Δ` for
    /// the Garside element, `1` for the identity.
    pub fn simple_name(&self, s: Simple) -> String {
        if s.is_identity() {
            "1".into()
        } else if self.is_delta(s) {
            "Δ".into()
        } else {
            self.simple_word(s).iter().map(|&a| self.atom_letter(a as usize)).collect()
        }
    }

    /// Compact letter for a 0-based atom.
    pub fn atom_letter(&self, a: usize) -> String {
        match &self.kind {
            ContextKind::Table(_) => self.atom_names[a].clone(),
            _ if a < 26 => ((b'a' + a as u8) as char).to_string(),
            _ => format!("[{}]", a + 1),
        }
    }
}

fn finalize(raw: RawStructure) -> Result<GarsideContext> {
    let RawStructure { kind, atom_names, coxeter, atom_simple, rmul, reprs } = raw;
    let atoms = atom_names.len();
    if atoms == 0 || atoms > 64 {
        return Err(GarsideError::OutOfRange(format!("{atoms} atoms (need 1..=64)")));
    }
    let n = rmul.len() / atoms;
    let delta = n - 1;

    // Canonical words by breadth-first search from the identity.
    let mut words: Vec<Option<Vec<u8>>> = vec![None; n];
    words[0] = Some(Vec::new());
    let mut queue = VecDeque::from([0usize]);
    while let Some(s) = queue.pop_front() {
        for a in 0..atoms {
            let t = rmul[s * atoms + a];
            if t != NONE && words[t as usize].is_none() {
                let mut w = words[s].clone().unwrap();
                w.push(a as u8);
                words[t as usize] = Some(w);
                queue.push_back(t as usize);
            }
        }
    }
    let words: Vec<Vec<u8>> = words
        .into_iter()
        .enumerate()
        .map(|(k, w)| {
            w.ok_or_else(|| GarsideError::InvariantViolation(format!("simple {k} unreachable from atoms")))
        })
        .collect::<Result<_>>()?;
    for (a, &s) in atom_simple.iter().enumerate() {
        if rmul[a] != s {
            return Err(GarsideError::InvariantViolation(format!("atom {a} table mismatch")));
        }
    }

    let mut rdiv = vec![NONE; n * atoms];
    for s in 0..n {
        for a in 0..atoms {
            let t = rmul[s * atoms + a];
            if t != NONE {
                if rdiv[t as usize * atoms + a] != NONE {
                    return Err(GarsideError::InvariantViolation(
                        "right cancellativity fails in simple tables".into(),
                    ));
                }
                rdiv[t as usize * atoms + a] = s as u32;
            }
        }
    }
    let mut lmul = vec![NONE; n * atoms];
    let mut ldiv = vec![NONE; n * atoms];
    for a in 0..atoms {
        for s in 0..n {
            let prod = words[s]
                .iter()
                .try_fold(atom_simple[a], |acc, &b| match rmul[acc as usize * atoms + b as usize] {
                    NONE => None,
                    v => Some(v),
                });
            if let Some(t) = prod {
                lmul[s * atoms + a] = t;
                if ldiv[t as usize * atoms + a] != NONE {
                    return Err(GarsideError::InvariantViolation(
                        "left cancellativity fails in simple tables".into(),
                    ));
                }
                ldiv[t as usize * atoms + a] = s as u32;
            }
        }
    }
    let mask = |table: &[u32], s: usize| -> u64 {
        (0..atoms).filter(|&a| table[s * atoms + a] != NONE).fold(0, |m, a| m | (1 << a))
    };
    let starts: Vec<u64> = (0..n).map(|s| mask(&ldiv, s)).collect();
    let finishes: Vec<u64> = (0..n).map(|s| mask(&rdiv, s)).collect();

    // Longest atom decomposition, in order of increasing shortest length.
    let mut norm = vec![0u32; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&s| words[s].len());
    let mut changed = true;
    while changed {
        changed = false;
        for &s in &order {
            for a in 0..atoms {
                let t = rdiv[s * atoms + a];
                if t != NONE && norm[t as usize] + 1 > norm[s] {
                    norm[s] = norm[t as usize] + 1;
                    changed = true;
                }
            }
        }
    }

    let mut ctx = GarsideContext {
        kind,
        atom_names,
        coxeter,
        atoms,
        atom_simple: atom_simple.into_iter().map(Simple).collect(),
        rmul,
        lmul,
        ldiv,
        rdiv,
        starts,
        finishes,
        rcomp: vec![NONE; n],
        lcomp: vec![NONE; n],
        phi: vec![NONE; n],
        phi_inv: vec![NONE; n],
        phi_order: 1,
        norm,
        words,
        reprs,
    };
    let d = Simple(delta as u32);
    let full = if atoms == 64 { u64::MAX } else { (1u64 << atoms) - 1 };
    if ctx.starting_set(d) != full || ctx.finishing_set(d) != full {
        return Err(GarsideError::InvariantViolation("every atom must divide Δ on both sides".into()));
    }
    if (0..atoms).any(|a| ctx.rmul_atom(d, a).is_some()) {
        return Err(GarsideError::InvariantViolation("Δ must be the last, maximal simple".into()));
    }
    for s in 0..n {
        let simple = Simple(s as u32);
        let r = ctx.left_quotient(simple, d).ok_or_else(|| {
            GarsideError::InvariantViolation(format!("simple {s} does not left-divide Δ"))
        })?;
        let l = ctx.right_quotient(d, simple).ok_or_else(|| {
            GarsideError::InvariantViolation(format!("simple {s} does not right-divide Δ"))
        })?;
        ctx.rcomp[s] = r.0;
        ctx.lcomp[s] = l.0;
    }
    for s in 0..n {
        ctx.phi[s] = ctx.rcomp[ctx.rcomp[s] as usize];
        ctx.phi_inv[s] = ctx.lcomp[ctx.lcomp[s] as usize];
    }
    for s in 0..n {
        if ctx.phi_inv[ctx.phi[s] as usize] != s as u32 {
            return Err(GarsideError::InvariantViolation("φ is not a bijection on simples".into()));
        }
    }
    ctx.phi_order = ctx.compute_phi_order();
    if ctx.phi[delta] != delta as u32 {
        return Err(GarsideError::InvariantViolation("φ(Δ) ≠ Δ".into()));
    }
    if (0..atoms).any(|a| ctx.norm(ctx.phi(ctx.atom(a))) != ctx.norm(ctx.atom(a)) || ctx.norm(ctx.atom(a)) != 1) {
        return Err(GarsideError::InvariantViolation("φ must permute the atoms".into()));
    }
    match &ctx.kind {
        ContextKind::Braid(n) if ctx.simple_count() != (1..=*n).product::<usize>() => {
            return Err(GarsideError::InvariantViolation("braid simples must number n!".into()))
        }
        ContextKind::Dihedral(m) if ctx.simple_count() != 2 * m => {
            return Err(GarsideError::InvariantViolation("dihedral simples must number 2m".into()))
        }
        _ => {}
    }
    Ok(ctx)
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    heap_permute(n, &mut current, &mut out);
    out
}

fn heap_permute(k: usize, current: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if k <= 1 {
        out.push(current.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, current, out);
        if k.is_multiple_of(2) {
            current.swap(i, k - 1);
        } else {
            current.swap(0, k - 1);
        }
    }
}

pub(crate) fn inversions(p: &[u8]) -> usize {
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

fn transposition(n: usize, a: usize) -> Vec<u8> {
    let mut p: Vec<u8> = (0..n as u8).collect();
    p.swap(a, a + 1);
    p
}

fn gcd_usize(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd_usize(b, a % b)
    }
}

fn lcm_usize(a: usize, b: usize) -> usize {
    a / gcd_usize(a, b) * b
}
