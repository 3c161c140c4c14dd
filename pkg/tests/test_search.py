from __future__ import annotations

import itertools
import json
import math

import numpy as np
import pytest

from mahlerctl.measures import LEHMER
from mahlerctl.polycore import IntPolynomial
from mahlerctl.search import (
    NoCandidateError,
    SearchRecord,
    SearchSpaceTooLarge,
    SearchSpec,
    enumerate_and_minimize,
    is_reciprocal,
    iter_candidates,
    shards,
)

GOLDEN = (1 + math.sqrt(5)) / 2


def brute_force_min(degree: int, height: int) -> float:
    """Independent oracle: numpy roots over the whole box, measure > 1 + 1e-6."""
    best = math.inf
    for tail in itertools.product(range(-height, height + 1), repeat=degree):
        cs = (1,) + tail
        m = float(np.prod(np.maximum(1.0, np.abs(np.roots(cs)))))
        if m > 1 + 1e-6:
            best = min(best, m)
    return best


def test_is_reciprocal_examples():
    assert is_reciprocal(LEHMER)
    assert is_reciprocal(IntPolynomial((1, -3, 1)))
    assert not is_reciprocal(IntPolynomial((1, -1, -1)))


def test_spec_validation_and_sizes():
    spec = SearchSpec(degree=10, height=1, reciprocal_only=True)
    assert spec.free_count == 5 and spec.space_size == 243
    with pytest.raises(ValueError):
        SearchSpec(degree=1)
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_and_minimize(SearchSpec(degree=20, height=5, reciprocal_only=False))


def test_shards_partition_the_box():
    spec = SearchSpec(degree=6, height=1, reciprocal_only=True)
    from_shards = [c for pre in shards(spec) for c in iter_candidates(spec, pre)]
    assert sorted(from_shards) == sorted(iter_candidates(spec))
    assert len(set(from_shards)) == spec.space_size
    assert all(is_reciprocal(IntPolynomial(c)) for c in from_shards)


def test_lehmer_search():
    rec = enumerate_and_minimize(SearchSpec(degree=10, height=1, reciprocal_only=True))
    assert rec.witness == LEHMER
    assert abs(rec.best_measure - 1.1762808) < 1e-6
    assert rec.candidates_scanned == 243
    assert rec.cyclotomic_skipped + rec.noncyclotomic_scanned == 243
    # the only other minimizer is the image under X -> -X
    assert {t.coeffs for t in rec.ties} == {LEHMER.coeffs, (1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1)}


@pytest.mark.parametrize("height,scanned", [(1, 9), (3, 49)])
def test_quadratic_search(height, scanned):
    rec = enumerate_and_minimize(SearchSpec(degree=2, height=height, reciprocal_only=False))
    assert rec.witness == IntPolynomial((1, -1, -1))
    assert abs(rec.best_measure - GOLDEN) < 1e-12
    assert rec.candidates_scanned == scanned


@pytest.mark.parametrize("degree,height", [(3, 1), (4, 1), (3, 2)])
def test_search_matches_brute_force(degree, height):
    rec = enumerate_and_minimize(SearchSpec(degree=degree, height=height, reciprocal_only=False))
    assert abs(rec.best_measure - brute_force_min(degree, height)) < 1e-8


def test_workers_do_not_change_result():
    spec1 = SearchSpec(degree=6, height=2, reciprocal_only=True, workers=1)
    spec3 = SearchSpec(degree=6, height=2, reciprocal_only=True, workers=3)
    assert enumerate_and_minimize(spec1).same_result(enumerate_and_minimize(spec3))


def test_record_round_trip():
    rec = enumerate_and_minimize(SearchSpec(degree=4, height=1, reciprocal_only=True))
    back = SearchRecord.from_dict(json.loads(json.dumps(rec.to_dict())))
    assert back == rec


def test_report_rows():
    rows: list = []
    enumerate_and_minimize(SearchSpec(degree=3, height=3, reciprocal_only=False), report_threshold=2.0, rows_out=rows)
    assert rows and all(m > 2.0 for _, m, _ in rows)


def test_all_cyclotomic_box_has_no_candidate():
    with pytest.raises(NoCandidateError):
        enumerate_and_minimize(SearchSpec(degree=2, height=1, reciprocal_only=True))
