"""Smoke test for the Python bindings.

Build the extension and put it next to this file first:

    cargo build --release -p admissible-py --features extension-module
    cp target/release/libadmissible_py.so python/admissible_py.so
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import admissible_py as adm  # noqa: E402


def main():
    assert adm.corpus_names() == ["suciu_deleted_b3", "c3_all_admissible", "c3_partial"]

    arr = adm.Arrangement.corpus("suciu_deleted_b3")
    assert len(arr) == 8
    k, covers, concurrent = arr.classify()
    assert k == 3 and [0, 1, 2] in covers and concurrent
    assert len(arr.multiple_points()) == 7

    rho = adm.LocalSystem.corpus("suciu_deleted_b3", "rho")
    lift = json.loads(rho.standard_lift(0))
    assert lift[0] == {"re": "-2", "im": "0"}, lift[0]
    verdict = json.loads(arr.decide(rho, bound=1))
    assert verdict["verdict"] == "UNKNOWN"

    pencil = adm.Arrangement.from_json(
        json.dumps({"lines": [{"homog": ["1", "0", "0"]}, {"homog": ["0", "1", "0"]},
                              {"homog": ["1", "-1", "0"]}, {"affine": {"slope": "2", "intercept": "1"}}]})
    )
    ls = adm.LocalSystem.from_json(
        json.dumps({"classes": [{"re": "1/2"}, {"re": "1/3", "im": "1/5"},
                                {"re": "1/6", "im": "-1/5"}, {"re": "0"}]})
    )
    verdict = json.loads(pencil.decide(ls))
    assert verdict["verdict"] == "ADMISSIBLE", verdict
    residues = json.dumps(verdict["certificate"]["residues"])
    assert pencil.verify(residues, ls)
    h = pencil.aomoto(residues, 3)
    assert h[0] - h[1] + h[2] == 1 - 3 + 2, h

    try:
        adm.Arrangement.from_json('{"lines": [{"vertical": "1"}, {"homog": ["2", "0", "-2"]}]}')
    except ValueError as e:
        assert "L0 and L1" in str(e), e
    else:
        raise AssertionError("duplicate lines accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
