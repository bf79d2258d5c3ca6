import pytest

import symgen


def test_permutation_right_action():
    a = symgen.Permutation("(1,2)", 3)
    b = symgen.Permutation("(2,3)", 3)
    ab = a * b
    assert str(ab) == "(1,3,2)"
    assert ab(1) == 3
    assert ab.images() == [3, 1, 2]
    assert (ab ** 3).is_identity()
    assert symgen.Permutation([3, 1, 2]) == ab


def test_bad_input():
    with pytest.raises(ValueError):
        symgen.Permutation("(1,2", 3)
    with pytest.raises(ValueError):
        symgen.Permutation("(1,2)")
    with pytest.raises(ValueError):
        symgen.Permutation([0, 1])


def test_control_group():
    x = symgen.Permutation("(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)", 14)
    y = symgen.Permutation("(1,12)(2,3)(4,11)(5,8)(6,13)(9,10)", 14)
    n = symgen.PermutationGroup([x, y], 14)
    assert n.order() == 168
    assert n.is_transitive()
    assert sorted(n.orbit(1)) == list(range(1, 15))
    assert n.stabilizer(7).order() == 12
    assert x * y in n
    assert n.derived_subgroup().order() == 168


def test_enumerate_strategies_agree():
    felsch = symgen.enumerate("N")
    hlt = symgen.enumerate("N", strategy="hlt")
    assert felsch.index == hlt.index == 2640
    assert felsch == hlt
    assert symgen.enumerate("M").index == 330


def test_cap():
    with pytest.raises(symgen.CapExceeded):
        symgen.enumerate("N", max_cosets=100)


def test_presentation_file(tmp_path):
    f = tmp_path / "s3.pres"
    f.write_text("gens a b\nrel a^2\nrel b^3\nrel (a*b)^2\nsub T\n")
    t = symgen.enumerate("T", pres=str(f))
    assert t.index == 6
    g = symgen.PermutationGroup(t.generator_actions(), 6)
    assert g.order() == 6
    with pytest.raises(KeyError):
        symgen.enumerate("Q", pres=str(f))


def test_double_cosets():
    dcs = symgen.double_cosets()
    assert [d["count"] for d in dcs] == [1, 7, 42, 84, 84, 84, 14, 14]
    assert [d["stabilizer_order"] for d in dcs] == [168, 24, 4, 2, 2, 2, 12, 12]
    assert symgen.cayley_graph_dot().startswith("digraph")


def test_verify_reports_misprints():
    claims = symgen.verify_m22()
    failed = {c["id"] for c in claims if not c["passed"]}
    assert "member-6.1.3-7.1.3" in failed
    assert "labels-two-blocks-of-7" in failed
    assert len(failed) == 8
