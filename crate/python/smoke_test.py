"""Smoke test for the hompbw extension module.

Build and install first:
    cd crates/python && maturin build --release -o dist && pip install dist/hompbw-*.whl
"""

import pathlib

import hompbw

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "crates" / "core" / "fixtures"


def main():
    sl2 = hompbw.Algebra.load(str(FIXTURES / "sl2.json"))
    assert sl2.dim == 3 and sl2.mu == 1
    assert all(c["pass"] for c in sl2.check())
    assert sl2.normal_form("f*e") == "e⊗f - h"
    assert sl2.multiply("f", "e") == "e⊗f - h"
    assert sl2.reduce_step([0, 2], 0) == "e⊗f - h"
    assert sl2.normal_form_terms("f*e") == [([1], "-1"), ([2, 0], "1")]

    tw = hompbw.Algebra.load(str(FIXTURES / "twisted_sl2.json"))
    adapted = tw.adapted()
    assert adapted["mu"] == -1 and adapted["sigma"] == [1, 0, 2]
    assert tw.names == ["X0", "X1", "X2"]
    nf = tw.normal_form("f*e*h")
    assert tw.normal_form(nf) == nf
    assert tw.to_original("X0") == "2*f"
    assert tw.reduce("X1*X0", "leftmost") == tw.reduce("X1*X0", "rightmost")

    reports = tw.verify(max_degree=4, samples=20, seed=1)
    assert all(r["pass"] for r in reports), reports
    ds = reports[0]
    assert ds["ranks"]["j"] == 86 and ds["counts"]["pbw_words"] == 34

    bad = hompbw.Algebra.load(str(FIXTURES / "corrupted_sl2.json"), unchecked=True)
    jac = next(c for c in bad.check() if c["axiom"] == "hom-jacobi")
    assert not jac["pass"] and jac["witness"] == [0, 1, 2]
    control, parts = bad.negative_control(3)
    assert control["pass"] and not all(p["pass"] for p in parts)
    try:
        hompbw.Algebra.load(str(FIXTURES / "corrupted_sl2.json"))
    except ValueError:
        pass
    else:
        raise AssertionError("corrupted algebra passed the gate")

    gl2 = hompbw.Algebra.fixture("twisted-gl2")
    assert gl2.dim == 4 and gl2.sigma == [1, 0, 3, 2]
    assert hompbw.Algebra.from_json(gl2.to_json()).sigma == gl2.sigma

    assert hompbw.is_pbw_word([2, 2, 1, 0]) and not hompbw.is_pbw_word([0, 1])
    assert hompbw.index_of([0, 1, 2]) == 3
    print("python smoke test: ok")


if __name__ == "__main__":
    main()
