//! Left valuations `ν_s`, valuation sequences, order-types and the
//! neighbour graph on order-types.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::context::{GarsideContext, Simple};
use crate::element::GroupElement;
use crate::error::{GarsideError, Result};

pub const MAX_ARITY: usize = 8;

/// Order-equivalence class of an integer tuple, stored as dense ranks:
/// entry `i` is the number of distinct values strictly below value `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderType {
    ranks: Vec<u8>,
}

impl OrderType {
    pub fn of(values: &[i64]) -> Self {
        let mut distinct: Vec<i64> = values.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let ranks = values
            .iter()
            .map(|v| distinct.binary_search(v).unwrap() as u8)
            .collect();
        OrderType { ranks }
    }

    /// Checks that `ranks` is dense.
    pub fn from_ranks(ranks: Vec<u8>) -> Result<Self> {
        let d = ranks.iter().map(|&r| r as usize + 1).max().unwrap_or(0);
        if (0..d).all(|r| ranks.contains(&(r as u8))) {
            Ok(OrderType { ranks })
        } else {
            Err(GarsideError::Precondition(format!("ranks {ranks:?} are not dense")))
        }
    }

    pub fn ranks(&self) -> &[u8] {
        &self.ranks
    }

    pub fn arity(&self) -> usize {
        self.ranks.len()
    }

    /// Number of distinct values.
    pub fn classes(&self) -> usize {
        self.ranks.iter().map(|&r| r as usize + 1).max().unwrap_or(0)
    }

    /// Canonical representative with values `0..classes()`.
    pub fn representative(&self) -> Vec<i64> {
        self.ranks.iter().map(|&r| r as i64).collect()
    }
}

/// Bracketed chain such as `[1>2=3]`: classes in value order, atoms
/// ascending inside a class, written from the top class down when atom 1
/// sits in the top class.
impl fmt::Display for OrderType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.classes();
        let mut classes: Vec<Vec<usize>> = vec![Vec::new(); d];
        for (i, &r) in self.ranks.iter().enumerate() {
            classes[r as usize].push(i + 1);
        }
        let descending = d > 1 && self.ranks[0] as usize == d - 1;
        if descending {
            classes.reverse();
        }
        let sep = if descending { ">" } else { "<" };
        let body: Vec<String> = classes
            .iter()
            .map(|c| c.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("="))
            .collect();
        write!(f, "[{}]", body.join(sep))
    }
}

impl FromStr for OrderType {
    type Err = GarsideError;

    /// Accepts chains like `[1>2=3]`, `1<2`, with or without brackets.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || GarsideError::Precondition(format!("cannot parse order-type {s:?}"));
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let has_lt = inner.contains('<');
        let has_gt = inner.contains('>');
        if has_lt && has_gt {
            return Err(bad());
        }
        let groups: Vec<&str> = inner.split(['<', '>']).collect();
        let mut values: Vec<Option<i64>> = Vec::new();
        for (level, group) in groups.iter().enumerate() {
            let value = if has_gt { -(level as i64) } else { level as i64 };
            for tok in group.split('=') {
                let i: usize = tok.trim().parse().map_err(|_| bad())?;
                if i == 0 || i > MAX_ARITY {
                    return Err(bad());
                }
                if values.len() < i {
                    values.resize(i, None);
                }
                if values[i - 1].replace(value).is_some() {
                    return Err(bad());
                }
            }
        }
        let values: Option<Vec<i64>> = values.into_iter().collect();
        Ok(OrderType::of(&values.ok_or_else(bad)?))
    }
}

impl GarsideContext {
    fn require_pure(&self, s: Simple) -> Result<()> {
        if self.is_pure(s, None) {
            Ok(())
        } else {
            Err(GarsideError::NotPure(self.simple_name(s)))
        }
    }

    /// `ν_s(x)` for a pure simple `s`.
    pub fn nu(&self, s: Simple, x: &GroupElement) -> Result<i64> {
        self.require_pure(s)?;
        Ok(self.nu_unchecked(s, x))
    }

    pub(crate) fn nu_unchecked(&self, s: Simple, x: &GroupElement) -> i64 {
        // x = z·Δ^inf with z = φ^{-inf}(body); strip s from the left of z.
        let (z, inf) = self.right_form(x);
        let s_inv = self.g_inv(&self.group_from_simple(s));
        let mut g = self.group_from_positive(&z);
        let mut k = 0;
        loop {
            let next = self.g_mul(&s_inv, &g);
            if !next.is_positive() {
                break;
            }
            g = next;
            k += 1;
        }
        k + inf
    }

    /// `(ν_σ(x))` over the atoms in order.
    pub fn valuation_sequence(&self, x: &GroupElement) -> Result<Vec<i64>> {
        for a in 0..self.atom_count() {
            self.require_pure(self.atom(a))?;
        }
        Ok((0..self.atom_count()).map(|a| self.nu_unchecked(self.atom(a), x)).collect())
    }

    pub fn type_of(&self, x: &GroupElement) -> Result<OrderType> {
        Ok(OrderType::of(&self.valuation_sequence(x)?))
    }
}

fn check_arity(n: usize) -> Result<()> {
    if (1..=MAX_ARITY).contains(&n) {
        Ok(())
    } else {
        Err(GarsideError::OutOfRange(format!("arity {n} outside 1..={MAX_ARITY}")))
    }
}

fn binomial(n: u64, k: u64) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// `∑_{p=1}^{n} a_p p^n` with `a_p = ∑_{q=0}^{n-p} (-1)^q C(p+q, q)`.
pub fn ordered_bell(n: usize) -> Result<u64> {
    check_arity(n)?;
    let n = n as u64;
    let mut total: i128 = 0;
    for p in 1..=n {
        let a: i128 = (0..=n - p)
            .map(|q| if q % 2 == 0 { binomial(p + q, q) } else { -binomial(p + q, q) })
            .sum();
        total += a * (p as i128).pow(n as u32);
    }
    Ok(total as u64)
}

/// Every order-type of arity `n`, sorted by rank vector.
pub fn enumerate_order_types(n: usize) -> Result<Vec<OrderType>> {
    check_arity(n)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    extend_dense(n, &mut current, &mut out);
    Ok(out)
}

fn extend_dense(n: usize, current: &mut Vec<u8>, out: &mut Vec<OrderType>) {
    let top = current.iter().map(|&r| r + 1).max().unwrap_or(0);
    let missing = (0..top).filter(|r| !current.contains(r)).count();
    if missing > n - current.len() {
        return;
    }
    if current.len() == n {
        out.push(OrderType { ranks: current.clone() });
        return;
    }
    for r in 0..n as u8 {
        current.push(r);
        extend_dense(n, current, out);
        current.pop();
    }
}

/// Types reachable from `t` by one `{0,1}^n` or `{0,-1}^n` perturbation.
///
/// Whether `k + δ` lands in a given type only depends on which gaps between
/// consecutive distinct values of `k` equal one, so representatives with
/// values in `0..2n` cover every case.
pub fn neighbours_of(t: &OrderType) -> BTreeSet<OrderType> {
    let n = t.arity();
    let d = t.classes();
    let mut out = BTreeSet::new();
    let mut levels = Vec::with_capacity(d);
    choose_levels(2 * n as i64, d, &mut levels, &mut |levels| {
        let k: Vec<i64> = t.ranks.iter().map(|&r| levels[r as usize]).collect();
        for mask in 0u32..(1 << n) {
            for sign in [1, -1] {
                let moved: Vec<i64> = k
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| v + sign * ((mask >> i) & 1) as i64)
                    .collect();
                out.insert(OrderType::of(&moved));
            }
        }
    });
    out
}

fn choose_levels(limit: i64, d: usize, levels: &mut Vec<i64>, visit: &mut impl FnMut(&[i64])) {
    if levels.len() == d {
        visit(levels);
        return;
    }
    let start = levels.last().map_or(0, |&v| v + 1);
    for v in start..limit {
        levels.push(v);
        choose_levels(limit, d, levels, visit);
        levels.pop();
    }
}

pub fn is_neighbour(t: &OrderType, u: &OrderType) -> Result<bool> {
    if t.arity() != u.arity() {
        return Err(GarsideError::Precondition(format!(
            "arity mismatch: {} vs {}",
            t.arity(),
            u.arity()
        )));
    }
    Ok(neighbours_of(t).contains(u))
}

/// Undirected neighbour graph on the order-types of one arity. Loops are
/// left implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeGraph {
    pub nodes: Vec<OrderType>,
    pub edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

pub fn neighbour_graph(n: usize) -> Result<TypeGraph> {
    let nodes = enumerate_order_types(n)?;
    let mut adjacency = vec![Vec::new(); nodes.len()];
    let mut edges = Vec::new();
    for (i, t) in nodes.iter().enumerate() {
        for u in neighbours_of(t) {
            let j = nodes.binary_search(&u).unwrap();
            if i < j {
                edges.push((i, j));
            }
            if i != j {
                adjacency[i].push(j);
            }
        }
    }
    for adj in &mut adjacency {
        adj.sort_unstable();
        adj.dedup();
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(TypeGraph { nodes, edges, adjacency })
}

impl TypeGraph {
    pub fn index_of(&self, t: &OrderType) -> Result<usize> {
        self.nodes
            .binary_search(t)
            .map_err(|_| GarsideError::Precondition(format!("{t} is not a node")))
    }

    pub fn neighbours(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// Shortest path avoiding `removed`, endpoints included.
    pub fn path_avoiding(
        &self,
        source: &OrderType,
        target: &OrderType,
        removed: &[OrderType],
    ) -> Result<Option<Vec<OrderType>>> {
        let s = self.index_of(source)?;
        let t = self.index_of(target)?;
        let mut blocked = vec![false; self.nodes.len()];
        for r in removed {
            blocked[self.index_of(r)?] = true;
        }
        if blocked[s] || blocked[t] {
            return Ok(None);
        }
        let mut prev = vec![usize::MAX; self.nodes.len()];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            if i == t {
                let mut path = vec![self.nodes[t].clone()];
                let mut k = t;
                while k != s {
                    k = prev[k];
                    path.push(self.nodes[k].clone());
                }
                path.reverse();
                return Ok(Some(path));
            }
            for &j in &self.adjacency[i] {
                if !blocked[j] && prev[j] == usize::MAX {
                    prev[j] = i;
                    queue.push_back(j);
                }
            }
        }
        Ok(None)
    }

    /// Whether every path from `source` to `target` meets `removed`.
    pub fn separation(&self, source: &OrderType, target: &OrderType, removed: &[OrderType]) -> Result<bool> {
        Ok(self.path_avoiding(source, target, removed)?.is_none())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph types {\n");
        for t in &self.nodes {
            out.push_str(&format!("  \"{t}\";\n"));
        }
        for &(i, j) in &self.edges {
            out.push_str(&format!("  \"{}\" -- \"{}\";\n", self.nodes[i], self.nodes[j]));
        }
        out.push_str("}\n");
        out
    }
}
