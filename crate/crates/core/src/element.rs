//! Positive and group elements in left-greedy normal form.

use crate::context::{GarsideContext, Side, Simple};
use crate::error::{GarsideError, Result};
use crate::words::{Letter, Word};

/// A monoid element as its left-greedy normal form: no factor is the
/// identity, each factor is the maximal simple left divisor of the product
/// of itself with its successor, any Δ factors come first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveElement {
    factors: Vec<Simple>,
}

/// `Δ^inf · body` with `body` a Δ-free positive normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    inf: i64,
    body: Vec<Simple>,
}

impl PositiveElement {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of normal-form factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }
}

impl GroupElement {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn body(&self) -> &[Simple] {
        &self.body
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.body.is_empty()
    }

    /// Whether the element lies in the positive monoid.
    pub fn is_positive(&self) -> bool {
        self.inf >= 0
    }
}

impl GarsideContext {
    /// Appends a simple to a normal form and restores left-weightedness.
    pub(crate) fn push_back(&self, factors: &mut Vec<Simple>, s: Simple) {
        if s.is_identity() {
            return;
        }
        factors.push(s);
        let mut k = factors.len() - 1;
        while k > 0 {
            let (a, b) = self.left_weight(factors[k - 1], factors[k]);
            if a == factors[k - 1] {
                break;
            }
            factors[k - 1] = a;
            factors[k] = b;
            k -= 1;
        }
        if factors.last().is_some_and(|s| s.is_identity()) {
            factors.pop();
        }
    }

    /// Prepends a simple to a normal form.
    pub(crate) fn push_front(&self, factors: &mut Vec<Simple>, s: Simple) {
        let mut carry = s;
        let mut k = 0;
        while !carry.is_identity() {
            if k == factors.len() {
                factors.push(carry);
                return;
            }
            let (head, rest) = self.left_weight(carry, factors[k]);
            factors[k] = head;
            carry = rest;
            k += 1;
        }
    }

    fn positive_from_factors(&self, factors: impl IntoIterator<Item = Simple>) -> PositiveElement {
        let mut out = Vec::new();
        for s in factors {
            self.push_back(&mut out, s);
        }
        PositiveElement { factors: out }
    }

    /// Normal form of a positive word.
    pub fn normalize(&self, w: &Word) -> Result<PositiveElement> {
        w.check_atoms(self.atom_count())?;
        if !w.is_positive() {
            return Err(GarsideError::NotPositive);
        }
        Ok(self.positive_from_factors(w.iter().map(|l| self.atom(l.atom0()))))
    }

    pub fn positive_from_simple(&self, s: Simple) -> PositiveElement {
        self.positive_from_factors([s])
    }

    pub fn positive_mul(&self, x: &PositiveElement, y: &PositiveElement) -> PositiveElement {
        let mut factors = x.factors.clone();
        for &s in &y.factors {
            self.push_back(&mut factors, s);
        }
        PositiveElement { factors }
    }

    /// `s^k` for a simple `s`.
    pub fn positive_power(&self, s: Simple, k: usize) -> PositiveElement {
        self.positive_from_factors(std::iter::repeat_n(s, k))
    }

    /// Length of the longest atom decomposition of a positive element.
    pub fn positive_norm(&self, x: &PositiveElement) -> usize {
        if self.is_artin() {
            return x.factors.iter().map(|&s| self.norm(s)).sum();
        }
        let mut memo = std::collections::HashMap::new();
        self.norm_rec(x, &mut memo)
    }

    fn norm_rec(&self, x: &PositiveElement, memo: &mut std::collections::HashMap<PositiveElement, usize>) -> usize {
        if x.is_identity() {
            return 0;
        }
        if let Some(&n) = memo.get(x) {
            return n;
        }
        let starts = self.starting_set(x.factors[0]);
        let best = (0..self.atom_count())
            .filter(|a| starts >> a & 1 == 1)
            .map(|a| {
                let rest = self.divide(x, &self.positive_from_simple(self.atom(a)), Side::Left).unwrap();
                1 + self.norm_rec(&rest, memo)
            })
            .max()
            .unwrap();
        memo.insert(x.clone(), best);
        best
    }

    /// Maximal simple divisor on the given side.
    pub fn head(&self, x: &PositiveElement, side: Side) -> Simple {
        match side {
            Side::Left => x.factors.first().copied().unwrap_or(Simple::IDENTITY),
            Side::Right => {
                let mut it = x.factors.iter().copied();
                let Some(mut h) = it.next() else {
                    return Simple::IDENTITY;
                };
                for s in it {
                    h = self.right_weight(h, s).1;
                }
                h
            }
        }
    }

    /// `Left`: the `z` with `x = y·z`; `Right`: the `z` with `x = z·y`.
    pub fn divide(&self, x: &PositiveElement, y: &PositiveElement, side: Side) -> Option<PositiveElement> {
        let gx = self.group_from_positive(x);
        let gy = self.group_from_positive(y);
        let q = match side {
            Side::Left => self.g_mul(&self.g_inv(&gy), &gx),
            Side::Right => self.g_mul(&gx, &self.g_inv(&gy)),
        };
        self.positive_part(&q)
    }

    /// The element as a positive one, when it is positive.
    pub fn positive_part(&self, x: &GroupElement) -> Option<PositiveElement> {
        if x.inf < 0 {
            return None;
        }
        let mut factors = vec![self.delta(); x.inf as usize];
        factors.extend_from_slice(&x.body);
        Some(PositiveElement { factors })
    }

    pub fn divides_positive(&self, y: &PositiveElement, x: &PositiveElement, side: Side) -> bool {
        self.divide(x, y, side).is_some()
    }

    pub fn gcd_positive(&self, x: &PositiveElement, y: &PositiveElement, side: Side) -> PositiveElement {
        let (mut x, mut y) = (x.clone(), y.clone());
        let mut pieces = Vec::new();
        loop {
            let h = self.gcd(self.head(&x, side), self.head(&y, side), side);
            if h.is_identity() {
                break;
            }
            let hp = self.positive_from_simple(h);
            x = self.divide(&x, &hp, side).unwrap();
            y = self.divide(&y, &hp, side).unwrap();
            pieces.push(h);
        }
        if side == Side::Right {
            pieces.reverse();
        }
        self.positive_from_factors(pieces)
    }

    /// `x\y`: the `z` such that `x·z` is the right lcm of `x` and `y`.
    pub fn complement_positive(&self, x: &PositiveElement, y: &PositiveElement) -> PositiveElement {
        let g = self.g_mul(&self.g_inv(&self.group_from_positive(x)), &self.group_from_positive(y));
        if let Some(p) = self.positive_part(&g) {
            return p;
        }
        // x⁻¹y = Δ^{-q}·B = φ^q(B)·(Δ^q)⁻¹; cancel the common right divisor.
        let q = -g.inf;
        let numer = self.positive_from_factors(g.body.iter().map(|&s| self.phi_pow(s, q)));
        let denom = self.positive_power(self.delta(), q as usize);
        let common = self.gcd_positive(&numer, &denom, Side::Right);
        self.divide(&numer, &common, Side::Right).unwrap()
    }

    pub fn lcm_positive(&self, x: &PositiveElement, y: &PositiveElement, side: Side) -> PositiveElement {
        match side {
            Side::Right => self.positive_mul(x, &self.complement_positive(x, y)),
            Side::Left => {
                let g = self.g_mul(&self.group_from_positive(x), &self.g_inv(&self.group_from_positive(y)));
                if g.inf >= 0 {
                    return x.clone();
                }
                // x·y⁻¹ = (Δ^q)⁻¹·B; cancel the common left divisor.
                let q = (-g.inf) as usize;
                let numer = self.positive_power(self.delta(), q);
                let body = PositiveElement { factors: g.body.clone() };
                let common = self.gcd_positive(&numer, &body, Side::Left);
                let reduced = self.divide(&numer, &common, Side::Left).unwrap();
                self.positive_mul(&reduced, x)
            }
        }
    }

    pub fn phi_positive(&self, x: &PositiveElement, power: i64) -> PositiveElement {
        PositiveElement { factors: x.factors.iter().map(|&s| self.phi_pow(s, power)).collect() }
    }

    pub fn phi_group(&self, x: &GroupElement, power: i64) -> GroupElement {
        GroupElement { inf: x.inf, body: x.body.iter().map(|&s| self.phi_pow(s, power)).collect() }
    }

    /// Default number of powers inspected by [`is_pure`](Self::is_pure).
    pub fn default_purity_bound(&self) -> usize {
        self.norm(self.delta()) + 1
    }

    /// Whether `s` is the maximal simple right divisor of `s^k` for
    /// `k = 1..=bound`.
    pub fn is_pure(&self, s: Simple, bound: Option<usize>) -> bool {
        if s.is_identity() {
            return false;
        }
        let bound = bound.unwrap_or_else(|| self.default_purity_bound());
        let mut power = Vec::new();
        for _ in 0..bound {
            self.push_back(&mut power, s);
            if self.head(&PositiveElement { factors: power.clone() }, Side::Right) != s {
                return false;
            }
        }
        true
    }

    pub fn group_from_positive(&self, x: &PositiveElement) -> GroupElement {
        let lead = x.factors.iter().take_while(|&&s| self.is_delta(s)).count();
        GroupElement { inf: lead as i64, body: x.factors[lead..].to_vec() }
    }

    pub fn group_from_simple(&self, s: Simple) -> GroupElement {
        self.group_from_positive(&self.positive_from_simple(s))
    }

    /// `Δ^k`.
    pub fn delta_power(&self, k: i64) -> GroupElement {
        GroupElement { inf: k, body: Vec::new() }
    }

    fn absorb_deltas(&self, inf: i64, body: Vec<Simple>) -> GroupElement {
        let lead = body.iter().take_while(|&&s| self.is_delta(s)).count();
        GroupElement { inf: inf + lead as i64, body: body[lead..].to_vec() }
    }

    /// `σ_i^{±1}` as a group element.
    pub fn group_from_letter(&self, l: Letter) -> GroupElement {
        let a = self.atom(l.atom0());
        if l.is_positive() {
            self.group_from_simple(a)
        } else {
            self.absorb_deltas(-1, vec![self.lcomp(a)])
        }
    }

    /// Right multiplication by one letter, in place.
    pub fn mul_letter_in_place(&self, x: &mut GroupElement, l: Letter) {
        let a = self.atom(l.atom0());
        if l.is_positive() {
            self.push_back(&mut x.body, a);
        } else {
            // Δ^p·A·Δ⁻¹·d = Δ^{p-1}·φ⁻¹(A)·d
            for s in x.body.iter_mut() {
                *s = self.phi_inv(*s);
            }
            x.inf -= 1;
            self.push_back(&mut x.body, self.lcomp(a));
        }
        if x.body.first().is_some_and(|&s| self.is_delta(s)) {
            let body = std::mem::take(&mut x.body);
            *x = self.absorb_deltas(x.inf, body);
        }
    }

    /// Canonical element represented by a signed word.
    pub fn group_element(&self, w: &Word) -> Result<GroupElement> {
        w.check_atoms(self.atom_count())?;
        let mut x = GroupElement::identity();
        for l in w.iter() {
            self.mul_letter_in_place(&mut x, l);
        }
        Ok(x)
    }

    /// Group product.
    pub fn g_mul(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        // Δ^p·A·Δ^q·B = Δ^{p+q}·φ^q(A)·B
        let inf = x.inf + y.inf;
        let twisted = x.body.iter().map(|&s| self.phi_pow(s, y.inf));
        let body = if x.body.len() <= y.body.len() {
            let mut body = y.body.clone();
            let prefix: Vec<Simple> = twisted.collect();
            for &s in prefix.iter().rev() {
                self.push_front(&mut body, s);
            }
            body
        } else {
            let mut body: Vec<Simple> = twisted.collect();
            for &s in &y.body {
                self.push_back(&mut body, s);
            }
            body
        };
        self.absorb_deltas(inf, body)
    }

    /// Group inverse: for `Δ^p·s_1⋯s_k`,
    /// `Δ^{-p-k}·φ^{-p}(φ^{-(k-1)}(d_k)⋯φ^{0}(d_1))` with `d_i·s_i = Δ`.
    pub fn g_inv(&self, x: &GroupElement) -> GroupElement {
        let k = x.body.len() as i64;
        let mut body = Vec::with_capacity(x.body.len());
        for (i, &s) in x.body.iter().enumerate().rev() {
            let d = self.phi_pow(self.lcomp(s), -(i as i64) - x.inf);
            self.push_back(&mut body, d);
        }
        self.absorb_deltas(-x.inf - k, body)
    }

    pub fn g_pow(&self, x: &GroupElement, k: i64) -> GroupElement {
        let base = if k < 0 { self.g_inv(x) } else { x.clone() };
        (0..k.unsigned_abs()).fold(GroupElement::identity(), |acc, _| self.g_mul(&acc, &base))
    }

    /// The same element written as `z·Δ^k` with `z = φ^{-inf}(body)`.
    pub fn right_form(&self, x: &GroupElement) -> (PositiveElement, i64) {
        let z = PositiveElement { factors: x.body.iter().map(|&s| self.phi_pow(s, -x.inf)).collect() };
        (z, x.inf)
    }

    /// The element `z·Δ^k`.
    pub fn from_right_form(&self, z: &PositiveElement, k: i64) -> GroupElement {
        let gz = self.group_from_positive(z);
        self.g_mul(&gz, &self.delta_power(k))
    }

    pub fn equivalent(&self, w1: &Word, w2: &Word) -> Result<bool> {
        Ok(self.group_element(w1)? == self.group_element(w2)?)
    }

    pub fn is_trivial(&self, w: &Word) -> Result<bool> {
        Ok(self.group_element(w)?.is_identity())
    }

    /// Atom word of a positive element, Δ factors expanded.
    pub fn positive_word(&self, x: &PositiveElement) -> Word {
        Word::positive(
            x.factors
                .iter()
                .flat_map(|&s| self.simple_word(s).iter().map(|&a| a as usize + 1)),
        )
    }

    /// A signed word representing a group element.
    pub fn group_word(&self, x: &GroupElement) -> Word {
        let delta: Vec<Letter> = self.simple_word(self.delta()).iter().map(|&a| Letter::pos(a as usize + 1)).collect();
        let mut letters = Vec::new();
        if x.inf >= 0 {
            for _ in 0..x.inf {
                letters.extend_from_slice(&delta);
            }
        } else {
            let inv: Vec<Letter> = delta.iter().rev().map(|l| l.inverse()).collect();
            for _ in 0..-x.inf {
                letters.extend_from_slice(&inv);
            }
        }
        for &s in &x.body {
            letters.extend(self.simple_word(s).iter().map(|&a| Letter::pos(a as usize + 1)));
        }
        Word(letters)
    }

    /// `Δ.ab.a`-style display; `1` for the identity.
    pub fn format_positive(&self, x: &PositiveElement) -> String {
        if x.factors.is_empty() {
            return "1".into();
        }
        x.factors.iter().map(|&s| self.simple_name(s)).collect::<Vec<_>>().join(".")
    }

    /// `(inf, body)` display.
    pub fn format_group(&self, x: &GroupElement) -> String {
        let body = PositiveElement { factors: x.body.clone() };
        format!("({}, {})", x.inf, self.format_positive(&body))
    }
}
