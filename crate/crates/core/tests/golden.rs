use garside::reversing::random_trivial_word;
use garside::{GarsideContext, Word};

#[test]
fn random_trivial_word_is_pinned() {
    let ctx = GarsideContext::dihedral(3).unwrap();
    let expected: Word = include_str!("golden/random_trivial_dihedral3_seed42_ops20.txt").trim().parse().unwrap();
    let got = random_trivial_word(&ctx, 20, 42);
    assert_eq!(got, expected);
    assert_eq!(random_trivial_word(&ctx, 20, 42), got);
    assert!(ctx.is_trivial(&got).unwrap());
    assert!(random_trivial_word(&ctx, 0, 42).is_empty());
}
