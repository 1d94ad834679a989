"""Smoke test for the qsc extension module.

Build and install first, e.g.
    pip install maturin
    maturin build --release -m crates/py/Cargo.toml
    pip install --force-reinstall target/wheels/qsc-*.whl
then run `python python/smoke_test.py`.
"""

import json

import qsc


def main():
    t = qsc.Filling.parse("2/3,4,7/6,8")
    assert t.rows == [[2], [3, 4, 7], [6, 8]]
    assert t.shape == [1, 3, 2]
    assert qsc.Filling([[2], [3, 4, 7], [6, 8]]) == t
    assert t.is_ssyct()

    r = qsc.insert(t, 5)
    assert r.tableau.rows == [[2, 8], [3, 4, 5], [6, 7]]
    assert r.bumping_path == [(3, 2), (2, 3), (2, 1)]
    assert json.loads(r.trace)[-1]["event"] == "place"

    back = qsc.rapture(r.tableau, r.new_cell)
    assert back.tableau == t and back.output == 5
    assert back.escape_route == list(reversed(r.bumping_path))
    try:
        qsc.rapture(r.tableau, (2, 2))
    except ValueError:
        pass
    else:
        raise AssertionError("rapture of an unvirtuous cell must fail")

    word = [4, 6, 9, 2, 8, 1, 3, 5, 7]
    p, q = qsc.insert_word(word)
    assert p.rows == [[1, 9], [2, 3, 5, 7], [4, 6, 8]]
    assert q.rows == [[6, 7], [4, 5, 8, 9], [1, 2, 3]]
    assert q.is_dirt() and q.row_strip_shape() == [3, 2, 4]
    assert qsc.uninsert(p, q) == word

    assert len(qsc.enumerate_tableaux([2, 2])) == 3
    assert len(qsc.enumerate_tableaux([2, 2], "young-composition")) == 2
    assert len(qsc.enumerate_dirts([1, 2, 3], [2, 2, 2])) == 2

    assert qsc.expand("dual-immaculate", [2, 2], "young-qs") == {(2, 2): 1, (1, 3): 1}
    assert list(qsc.dimm_to_yqs([2, 2, 2]).values()) == [1, 1, 1, 2, 1]
    yns = qsc.yns_to_imm([1, 2, 3])
    assert len(yns) == 7 and yns[(2, 2, 2)] == 2
    assert qsc.expand("young-qs", [2, 1], "dual-immaculate") == {(2, 1): 1, (1, 2): -1}

    s21 = qsc.schur([2, 1])
    assert s21 == {(2, 1): 1, (1, 2): 1, (1, 1, 1): 2}
    assert qsc.is_symmetric(s21)
    assert not qsc.is_symmetric(qsc.expand("dual-immaculate", [1, 2], "monomial"))
    product = qsc.quasi_shuffle(s21, qsc.expand("dual-immaculate", [1], "monomial"))
    assert min(qsc.expand_in(product, "dual-immaculate").values()) < 0
    assert min(qsc.expand_in(product, "young-qs").values()) >= 0

    assert qsc.tree([2, 2]).startswith('digraph "2,2"')
    assert json.loads(qsc.tree([1, 2, 3], "dual", "json"))["root"]["children"]

    passed, report = qsc.run_suite("triple-agreement", 4)
    assert passed, report
    holds, report = qsc.conjectures(3)
    assert holds and "no violations" in report

    print("python smoke test passed")


if __name__ == "__main__":
    main()
