"""Smoke test for the garside Python extension."""

import json

import garside

FIGURE2 = "ABBCABBACBBCBBBAAccbbbabbacbbcabbc"


def main():
    assert garside.ordered_bell(3) == 13
    assert len(garside.enumerate_order_types(4)) == 75

    b3 = garside.Context.braid(3)
    assert b3.valuation_sequence("Ab") == [-1, 0]
    assert b3.type_of("Ab") == "[1<2]"
    assert b3.equivalent("aba", "bab")
    assert not b3.equivalent("ab", "ba")
    assert b3.group_element("aba") == (1, [])

    b4 = garside.Context("braid:4")
    word = b4.seed_word("aabbb", "ccbbb")
    assert word == FIGURE2
    assert b4.is_trivial(word)
    assert b4.find_removable_pairs(word) == []

    pair = b3.find_pair_simple_fraction("aba", "bab")
    assert (pair.i, pair.j, pair.verified) == (2, 5, True)
    trace, residual = b3.unbraid("abaBAB")
    assert residual == "" and trace

    i2 = garside.Context.dihedral(5)
    w = i2.random_trivial_word(12, 7)
    assert i2.is_trivial(w)
    if w:
        assert i2.find_pair_dihedral(w).verified

    assert not garside.Context.exotic().is_pure("b")

    summary = json.loads(garside.search_counterexamples(3, 3).splitlines()[-1])
    assert summary["pairs_examined"] == 28 and summary["counterexamples"] == 0

    try:
        b3.valuation_sequence("a?")
    except ValueError:
        pass
    else:
        raise AssertionError("bad word accepted")
    print("python smoke test ok")


if __name__ == "__main__":
    main()
