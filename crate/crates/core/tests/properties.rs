//! Property tests for the algebraic invariants.

use std::collections::BTreeSet;
use std::sync::LazyLock;

use garside::disks::{find_removable_pairs, is_removable_pair, transfer_pair};
use garside::oracle::{artin_relations, positive_equivalent};
use garside::reversing::{random_trivial_word, reverse, reverse_with, seed_word, RewriteOrder};
use garside::valuation::neighbours_of;
use garside::{GarsideContext, GroupElement, Letter, PositiveElement, Side, Syntax, Word};
use proptest::prelude::*;

static B3: LazyLock<GarsideContext> = LazyLock::new(|| GarsideContext::braid(3).unwrap());
static B4: LazyLock<GarsideContext> = LazyLock::new(|| GarsideContext::braid(4).unwrap());
static I4: LazyLock<GarsideContext> = LazyLock::new(|| GarsideContext::dihedral(4).unwrap());
static I5: LazyLock<GarsideContext> = LazyLock::new(|| GarsideContext::dihedral(5).unwrap());
static EXOTIC: LazyLock<GarsideContext> = LazyLock::new(|| GarsideContext::exotic().unwrap());

fn ctx(k: usize) -> &'static GarsideContext {
    match k % 4 {
        0 => &B3,
        1 => &B4,
        2 => &I4,
        _ => &I5,
    }
}

fn signed(atoms: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=atoms, any::<bool>()), 0..=max_len)
        .prop_map(|v| Word::from_letters(v.into_iter().map(|(a, p)| if p { Letter::pos(a) } else { Letter::neg(a) })))
}

fn positive(atoms: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=atoms, 0..=max_len).prop_map(Word::positive)
}

/// Context index together with a signed word over its atoms.
fn ctx_and_word(max_len: usize) -> impl Strategy<Value = (usize, Word)> {
    (0usize..4).prop_flat_map(move |k| (Just(k), signed(ctx(k).atom_count(), max_len)))
}

fn ctx_and_positives(max_len: usize, count: usize) -> impl Strategy<Value = (usize, Vec<Word>)> {
    (0usize..4).prop_flat_map(move |k| (Just(k), prop::collection::vec(positive(ctx(k).atom_count(), max_len), count)))
}

/// Applies relation rewrites at the given sites to a positive word.
fn rewrite(ctx: &GarsideContext, w: &Word, choices: &[usize]) -> Word {
    let relations = artin_relations(ctx).unwrap();
    let mut atoms: Vec<u8> = w.iter().map(|l| l.atom0() as u8).collect();
    for &c in choices {
        let mut sites = Vec::new();
        for r in &relations {
            for (from, to) in [(&r.lhs, &r.rhs), (&r.rhs, &r.lhs)] {
                for k in 0..(atoms.len() + 1).saturating_sub(from.len()) {
                    if atoms[k..k + from.len()] == from[..] {
                        sites.push((k, from.len(), to.clone()));
                    }
                }
            }
        }
        if sites.is_empty() {
            break;
        }
        let (k, len, to) = sites[c % sites.len()].clone();
        atoms.splice(k..k + len, to);
    }
    Word::positive(atoms.into_iter().map(|a| a as usize + 1))
}

fn pos(ctx: &GarsideContext, w: &Word) -> PositiveElement {
    ctx.normalize(w).unwrap()
}

fn elem(ctx: &GarsideContext, w: &Word) -> GroupElement {
    ctx.group_element(w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normal_form_is_greedy((k, ws) in ctx_and_positives(12, 1)) {
        let c = ctx(k);
        let x = pos(c, &ws[0]);
        let f = x.factors();
        prop_assert!(f.iter().all(|s| !s.is_identity()));
        for pair in f.windows(2) {
            prop_assert_eq!(c.left_weight(pair[0], pair[1]), (pair[0], pair[1]));
            prop_assert!(!c.is_delta(pair[1]) || c.is_delta(pair[0]));
        }
        prop_assert_eq!(pos(c, &c.positive_word(&x)), x.clone());
        prop_assert_eq!(c.positive_norm(&x), ws[0].len());
    }

    #[test]
    fn normalize_is_a_homomorphism((k, ws) in ctx_and_positives(10, 2)) {
        let c = ctx(k);
        prop_assert_eq!(pos(c, &ws[0].concat(&ws[1])), c.positive_mul(&pos(c, &ws[0]), &pos(c, &ws[1])));
    }

    #[test]
    fn normalize_agrees_with_closure((k, ws) in ctx_and_positives(8, 2), choices in prop::collection::vec(any::<usize>(), 0..6)) {
        let c = ctx(k);
        let relations = artin_relations(c).unwrap();
        let u = &ws[0];
        let v = rewrite(c, u, &choices);
        prop_assert_eq!(pos(c, u), pos(c, &v));
        let atoms = |w: &Word| w.iter().map(|l| l.atom0() as u8).collect::<Vec<_>>();
        let w = &ws[1];
        if u.len() == w.len() {
            prop_assert_eq!(pos(c, u) == pos(c, w), positive_equivalent(&atoms(u), &atoms(w), &relations));
        }
    }

    #[test]
    fn group_laws((k, w1) in ctx_and_word(10), w2 in signed(2, 10), w3 in signed(2, 6)) {
        let c = ctx(k);
        let (x, y, z) = (elem(c, &w1), elem(c, &w2), elem(c, &w3));
        prop_assert_eq!(elem(c, &w1.concat(&w2)), c.g_mul(&x, &y));
        prop_assert_eq!(c.g_mul(&c.g_mul(&x, &y), &z), c.g_mul(&x, &c.g_mul(&y, &z)));
        prop_assert!(c.g_mul(&x, &c.g_inv(&x)).is_identity());
        prop_assert!(c.g_mul(&c.g_inv(&x), &x).is_identity());
        prop_assert_eq!(c.g_inv(&x), elem(c, &w1.invert().word));
        prop_assert_eq!(c.g_mul(&x, &GroupElement::identity()), x.clone());
        prop_assert_eq!(elem(c, &c.group_word(&x)), x.clone());
        let (zr, kr) = c.right_form(&x);
        prop_assert_eq!(c.from_right_form(&zr, kr), x);
    }

    #[test]
    fn cancellativity((k, ws) in ctx_and_positives(8, 2)) {
        let c = ctx(k);
        let (y, z) = (pos(c, &ws[0]), pos(c, &ws[1]));
        prop_assert_eq!(c.divide(&c.positive_mul(&y, &z), &y, Side::Left), Some(z.clone()));
        prop_assert_eq!(c.divide(&c.positive_mul(&z, &y), &y, Side::Right), Some(z));
    }

    #[test]
    fn lattice_laws((k, ws) in ctx_and_positives(6, 3)) {
        let c = ctx(k);
        let (x, y, z) = (pos(c, &ws[0]), pos(c, &ws[1]), pos(c, &ws[2]));
        for side in [Side::Left, Side::Right] {
            // a right lcm is divided on the left, and conversely
            let across = if side == Side::Left { Side::Right } else { Side::Left };
            let l = c.lcm_positive(&x, &y, side);
            prop_assert_eq!(&l, &c.lcm_positive(&y, &x, side));
            prop_assert!(c.divides_positive(&x, &l, across) && c.divides_positive(&y, &l, across));
            let g = c.gcd_positive(&x, &y, side);
            prop_assert_eq!(&g, &c.gcd_positive(&y, &x, side));
            prop_assert!(c.divides_positive(&g, &x, side) && c.divides_positive(&g, &y, side));
            prop_assert_eq!(
                c.lcm_positive(&c.lcm_positive(&x, &y, side), &z, side),
                c.lcm_positive(&x, &c.lcm_positive(&y, &z, side), side)
            );
            prop_assert_eq!(
                c.gcd_positive(&c.gcd_positive(&x, &y, side), &z, side),
                c.gcd_positive(&x, &c.gcd_positive(&y, &z, side), side)
            );
            // any common multiple built by hand is a multiple of the lcm
            let m = match side {
                Side::Right => c.positive_mul(&x, &c.positive_mul(&y, &x)),
                Side::Left => c.positive_mul(&c.positive_mul(&x, &y), &x),
            };
            if c.divides_positive(&y, &m, across) {
                prop_assert!(c.divides_positive(&l, &m, across));
            }
        }
        prop_assert_eq!(c.positive_mul(&x, &c.complement_positive(&x, &y)), c.lcm_positive(&x, &y, Side::Right));
        prop_assert!(c.complement_positive(&x, &x).is_identity());
    }

    #[test]
    fn phi_is_the_delta_twist((k, w1) in ctx_and_word(10), ws in prop::collection::vec(positive(2, 6), 2)) {
        let c = ctx(k);
        let x = elem(c, &w1);
        let d = c.delta_power(1);
        prop_assert_eq!(c.g_mul(&x, &d), c.g_mul(&d, &c.phi_group(&x, 1)));
        let d2 = c.delta_power(2);
        prop_assert_eq!(c.phi_group(&x, 2), c.g_mul(&c.g_inv(&d2), &c.g_mul(&x, &d2)));
        prop_assert_eq!(c.phi_group(&c.phi_group(&x, 3), -3), x);
        let (y, z) = (pos(c, &ws[0]), pos(c, &ws[1]));
        prop_assert_eq!(
            c.phi_positive(&c.positive_mul(&y, &z), 1),
            c.positive_mul(&c.phi_positive(&y, 1), &c.phi_positive(&z, 1))
        );
    }

    #[test]
    fn valuation_laws((k, w1) in ctx_and_word(12), t_index in any::<usize>(), shift in 0i64..4) {
        let c = ctx(k);
        let x = elem(c, &w1);
        let simples: Vec<_> = c.simples().collect();
        let t = simples[t_index % simples.len()];
        let xt = c.g_mul(&x, &c.group_from_simple(t));
        let xd = c.g_mul(&x, &c.delta_power(1));
        for a in 0..c.atom_count() {
            let s = c.atom(a);
            let n = c.nu(s, &x).unwrap();
            let step = c.nu(s, &xt).unwrap() - n;
            prop_assert!(step == 0 || step == 1);
            prop_assert_eq!(c.nu(s, &xd).unwrap(), n + 1);
            // ν(z) + k from a shifted decomposition z·Δ^m, k - m
            let (z, inf) = c.right_form(&x);
            let zm = c.positive_mul(&z, &c.positive_power(c.delta(), shift as usize));
            prop_assert_eq!(c.nu(s, &c.group_from_positive(&zm)).unwrap() + inf - shift, n);
        }
        let delta = c.delta();
        let n = c.nu(delta, &x).unwrap();
        prop_assert!((0..=1).contains(&(c.nu(delta, &xt).unwrap() - n)));
    }

    #[test]
    fn types_move_to_neighbours((k, w1) in ctx_and_word(12), t_index in any::<usize>(), invert in any::<bool>()) {
        let c = ctx(k);
        let x = elem(c, &w1);
        let simples: Vec<_> = c.simples().collect();
        let mut t = c.group_from_simple(simples[t_index % simples.len()]);
        if invert {
            t = c.g_inv(&t);
        }
        let before = c.type_of(&x).unwrap();
        let after = c.type_of(&c.g_mul(&x, &t)).unwrap();
        prop_assert!(neighbours_of(&before).contains(&after));
    }

    #[test]
    fn word_round_trips(w in signed(26, 20)) {
        prop_assert_eq!(Word::parse(&w.format(Syntax::Compact), Syntax::Compact).unwrap(), w.clone());
        prop_assert_eq!(Word::parse(&w.format(Syntax::Numeric), Syntax::Numeric).unwrap(), w.clone());
        let r = w.free_reduce();
        prop_assert!(r.letters().windows(2).all(|p| p[1] != p[0].inverse()));
        prop_assert_eq!(w.invert().word.invert().word, w);
    }

    #[test]
    fn free_reduction_preserves_elements((k, w1) in ctx_and_word(14)) {
        let c = ctx(k);
        prop_assert_eq!(elem(c, &w1.free_reduce()), elem(c, &w1));
    }

    #[test]
    fn transforms_preserve_triviality(k in 0usize..4, seed in any::<u64>(), ops in 1usize..12, shift in any::<usize>()) {
        let c = ctx(k);
        let w = random_trivial_word(c, ops, seed);
        prop_assert!(c.is_trivial(&w).unwrap());
        prop_assert!(c.is_trivial(&w.invert().word).unwrap());
        prop_assert!(c.is_trivial(&w.flip(c.atom_count()).word).unwrap());
        prop_assert!(c.is_trivial(&w.cyclic_shift(shift % (w.len() + 1)).word).unwrap());
    }

    #[test]
    fn pairs_are_sound_and_deletable(k in 0usize..4, seed in any::<u64>(), ops in 1usize..10) {
        let c = ctx(k);
        let w = random_trivial_word(c, ops, seed);
        for p in find_removable_pairs(c, &w).unwrap() {
            prop_assert!(is_removable_pair(c, &w, p.i, p.j).unwrap());
            prop_assert!(c.is_trivial(&p.deleted()).unwrap());
        }
    }

    #[test]
    fn pair_scan_matches_definition((k, w1) in ctx_and_word(9)) {
        let c = ctx(k);
        let found: BTreeSet<(usize, usize)> = find_removable_pairs(c, &w1).unwrap().iter().map(|p| (p.i, p.j)).collect();
        for i in 0..w1.len() {
            for j in i + 1..w1.len() {
                let direct = w1.letters()[i].exponent() != w1.letters()[j].exponent()
                    && elem(c, &w1.subword(i, j + 1)) == elem(c, &w1.subword(i + 1, j));
                prop_assert_eq!(direct, found.contains(&(i, j)));
            }
        }
    }

    #[test]
    fn transferred_pairs_verify(seed in any::<u64>(), ops in 1usize..10, cut in any::<usize>()) {
        let w = random_trivial_word(&B3, ops, seed);
        let u_len = cut % (w.len() + 1);
        let conj = w.cyclic_shift(u_len).word;
        for p in find_removable_pairs(&B3, &conj).unwrap() {
            let q = transfer_pair(&B3, u_len, &w, p.i, p.j).unwrap();
            prop_assert!(q.verified && is_removable_pair(&B3, &w, q.i, q.j).unwrap());
        }
    }

    #[test]
    fn reversing_computes_lcms((k, ws) in ctx_and_positives(6, 2), seed in any::<u64>()) {
        let c = ctx(k);
        let (u, v) = (&ws[0], &ws[1]);
        let r = reverse(c, u, v).unwrap();
        prop_assert!(c.equivalent(&u.concat(&r.v_prime), &v.concat(&r.u_prime)).unwrap());
        prop_assert_eq!(&r.lcm, &c.lcm_positive(&pos(c, u), &pos(c, v), Side::Right));
        let other = reverse_with(c, u, v, RewriteOrder::Random(seed)).unwrap();
        prop_assert_eq!(&other.u_prime, &r.u_prime);
        prop_assert_eq!(&other.v_prime, &r.v_prime);
    }

    #[test]
    fn seed_words_are_trivial_and_symmetric(ws in prop::collection::vec(positive(3, 4), 2)) {
        let (u, v) = (&ws[0], &ws[1]);
        let w = seed_word(&B4, u, v).unwrap();
        prop_assert!(B4.is_trivial(&w).unwrap());
        let count = find_removable_pairs(&B4, &w).unwrap().len();
        let swapped = seed_word(&B4, v, u).unwrap();
        prop_assert_eq!(find_removable_pairs(&B4, &swapped).unwrap().len(), count);
        let flipped = seed_word(&B4, &u.flip(3).word, &v.flip(3).word).unwrap();
        prop_assert_eq!(find_removable_pairs(&B4, &flipped).unwrap().len(), count);
    }
}

fn elements_up_to(ctx: &GarsideContext, max_len: usize) -> Vec<PositiveElement> {
    let mut seen = BTreeSet::new();
    let mut layer = vec![Word::new()];
    seen.insert(PositiveElement::identity());
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 1..=ctx.atom_count() {
                let w2 = w.concat(&Word::positive([a]));
                if seen.insert(pos(ctx, &w2)) {
                    next.push(w2);
                }
            }
        }
        layer = next;
    }
    seen.into_iter().collect()
}

#[test]
fn lattice_agrees_with_brute_force() {
    let c = &*B3;
    let small = elements_up_to(c, 4);
    let large = elements_up_to(c, 8);
    for x in &small {
        for y in &small {
            let l = c.lcm_positive(x, y, Side::Right);
            let g = c.gcd_positive(x, y, Side::Left);
            for m in &large {
                if c.divides_positive(x, m, Side::Left) && c.divides_positive(y, m, Side::Left) {
                    assert!(c.divides_positive(&l, m, Side::Left));
                }
            }
            for d in &small {
                if c.divides_positive(d, x, Side::Left) && c.divides_positive(d, y, Side::Left) {
                    assert!(c.divides_positive(d, &g, Side::Left));
                }
            }
        }
    }
}

fn covers(ctx: &GarsideContext, y: &PositiveElement, z: &PositiveElement) -> bool {
    // every simple right divisor of yz right-divides z
    let h = ctx.head(&ctx.positive_mul(y, z), Side::Right);
    ctx.divides_positive(&ctx.positive_from_simple(h), z, Side::Right)
}

#[test]
fn cover_lemmas_hold_exhaustively() {
    for (c, len) in [(&*B3, 3), (&*B4, 2), (&*I4, 3)] {
        let elements = elements_up_to(c, len);
        let simples: Vec<_> = c.simples().map(|s| c.positive_from_simple(s)).collect();
        let mut checked = 0;
        for y in &elements {
            for z in &elements {
                if !covers(c, y, z) {
                    continue;
                }
                let yz = c.positive_mul(y, z);
                for x in &elements {
                    let y1 = c.complement_positive(x, y);
                    let z1 = c.complement_positive(&c.complement_positive(y, x), z);
                    assert!(covers(c, &y1, &z1));
                    if !c.divides_positive(y, x, Side::Left) {
                        for s in &simples {
                            assert!(!c.divides_positive(&yz, &c.positive_mul(x, s), Side::Left));
                        }
                    }
                    checked += 1;
                }
            }
        }
        assert!(checked > 100);
    }
}

#[test]
fn exotic_table_matches_generator() {
    let generated = garside::oracle::generate_exotic_table().unwrap();
    let bundled = garside::TableFile::parse(garside::context::EXOTIC_DATA).unwrap();
    assert_eq!(generated, bundled);
    let c = &*EXOTIC;
    assert_eq!(c.simple_count(), 8);
    assert_eq!(c.simple_name(c.delta()), "Δ");
    assert_eq!(c.simple_word(c.delta()), &[1, 1, 1]);
    assert_eq!(c.norm(c.delta()), 4);
    assert!(c.simples().all(|s| c.phi(s) == s));
}

#[test]
fn exotic_embeds_in_three_strand_braids() {
    // a ↦ σ1, b ↦ σ1σ2 respects aba = bb
    let b3 = &*B3;
    let image = |w: &Word| {
        Word::from_letters(w.iter().flat_map(|l| match l.atom() {
            1 => vec![Letter::pos(1)],
            _ => vec![Letter::pos(1), Letter::pos(2)],
        }))
    };
    let words: Vec<Word> = (0..=6).flat_map(|n| garside::reversing::positive_words(2, n)).collect();
    for u in &words {
        for v in &words {
            let exotic_eq = EXOTIC.normalize(u).unwrap() == EXOTIC.normalize(v).unwrap();
            let braid_eq = b3.normalize(&image(u)).unwrap() == b3.normalize(&image(v)).unwrap();
            assert_eq!(exotic_eq, braid_eq, "{u} vs {v}");
        }
    }
}

#[test]
fn search_is_independent_of_job_count() {
    use garside::reversing::{search_counterexamples, SearchOptions};
    let one = SearchOptions { jobs: 1, record_all: true, ..Default::default() };
    let four = SearchOptions { jobs: 4, record_all: true, ..Default::default() };
    let a = search_counterexamples(4, 3, &one).unwrap().to_json_lines();
    let b = search_counterexamples(4, 3, &four).unwrap().to_json_lines();
    assert_eq!(a, b);
}

#[test]
fn deduplicated_search_reports_orbits() {
    use garside::reversing::{search_counterexamples, SearchOptions};
    let opts = SearchOptions { jobs: 2, dedupe_symmetry: true, ..Default::default() };
    let report = search_counterexamples(4, 2, &opts).unwrap();
    // 36 unordered pairs, 4 of them fixed by the flip: (36 + 4) / 2 orbits
    assert_eq!(report.pairs_examined, 20);
}
