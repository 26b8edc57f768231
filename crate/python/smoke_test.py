"""Smoke test for the pysuperplactic extension module.

Build the extension first:

    cargo build -p superplactic-py --release

then run `python3 python/smoke_test.py`. The script imports the freshly built
shared library from target/ (override with PYSUPERPLACTIC_LIB=/path/to/lib).
"""

import importlib.util
import json
import os
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def locate_library() -> Path:
    override = os.environ.get("PYSUPERPLACTIC_LIB")
    if override:
        return Path(override)
    for profile in ("release", "debug"):
        for name in ("libpysuperplactic.so", "libpysuperplactic.dylib", "pysuperplactic.dll"):
            candidate = ROOT / "target" / profile / name
            if candidate.exists():
                return candidate
    sys.exit("extension not built; run `cargo build -p superplactic-py --release`")


def load():
    lib = locate_library()
    tmp = Path(tempfile.mkdtemp())
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    target = tmp / f"pysuperplactic{suffix}"
    shutil.copy(lib, target)
    spec = importlib.util.spec_from_file_location("pysuperplactic", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main() -> None:
    sp = load()

    odd_even = sp.Alphabet.numbered([0, 1, 0, 1, 0, 1])
    word = "3,2,2,2,4,2,4,2,3,3,4,1,1,1,1,4,5".split(",")
    t = sp.tableau_of_word(odd_even, word)
    assert t.render() == "1 1 1 1 4 5\n2 3 3 4\n2 4\n2 4\n2\n2\n3", t.render()
    assert t.word() == word
    assert t.shape == [6, 4, 2, 2, 1, 1, 1]

    base = sp.Tableau(odd_even, [["1", "1", "1", "2", "4", "5"], ["2", "3", "3", "4"], ["2", "4"], ["2", "4"], ["2"], ["3"]])
    bigger, row, col = base.row_insert("6")
    assert (row, col) == (1, 7)
    bigger, row, col = bigger.row_insert("1")
    assert row == 7
    back, letter = bigger.row_delete(7)
    assert letter == "1"

    assert sp.Tableau.from_json(t.to_json()) == t
    assert json.loads(t.to_json())["shape"] == [6, 4, 2, 2, 1, 1, 1]

    a = sp.Alphabet.numbered([0, 0, 1, 1, 1, 1])
    top = ["2", "1", "1", "1", "6", "5", "4", "3"]
    bottom = ["1", "2", "2", "2", "3", "4", "5", "6"]
    T, U = sp.rsk(a, a, top, bottom)
    assert T.rows == [["1", "1", "1", "6"], ["2", "4", "5"], ["3"]]
    assert U.rows == [["1", "2", "2", "6"], ["2", "4", "5"], ["3"]]
    assert sp.rsk_inverse(T, U) == (top, bottom)
    assert sp.has_symmetry(a, a, top, bottom)

    greene_alpha = sp.Alphabet(["1", "2", "3", "4", "5"], [0, 0, 1, 0, 1])
    w = list("1233455")
    assert [sp.greene(greene_alpha, w, k) for k in (1, 2)] == [5, 7]
    assert [sp.greene(greene_alpha, w, k, "col") for k in range(1, 6)] == [2, 4, 5, 6, 7]

    mixed = sp.Alphabet.numbered([0, 1, 1, 0])
    cls = sp.plactic_class(mixed, ["2", "1", "3"])
    assert len(cls) == sp.enumerate_standard(sp.tableau_of_word(mixed, ["2", "1", "3"]).shape)
    assert sp.normal_form(mixed, []) == []
    assert sp.enumerate_standard([3, 2]) == 5

    holds, report = sp.pieri_check([2, 1], 2, sp.Alphabet.numbered([0, 1, 0]))
    assert holds and json.loads(report)["holds"]

    try:
        sp.Tableau(sp.Alphabet.numbered([1]), [["1", "1"]])
    except sp.SuperplacticError as e:
        assert "RowConditionViolation" in str(e)
    else:
        raise AssertionError("odd repeat in a row was accepted")

    print("pysuperplactic smoke test passed")


if __name__ == "__main__":
    main()
