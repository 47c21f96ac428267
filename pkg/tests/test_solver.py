import random

import pytest

from hmknf import KnowledgeBase, Partition, brute_force_models, check_model, solve
from hmknf.generators import random_kb
from oracles import Naive


def pairs(kb, models):
    return [(kb.names(m.t), kb.names(m.f)) for m in models]


def test_check_model_examples(ex):
    k2 = ex("example2")
    assert check_model(k2, k2.partition(["b"], ["a"]))
    k4 = ex("example4")
    assert not check_model(k4, k4.partition(["a"]))
    assert not check_model(k4, k4.partition(false=["a"]))
    k3 = ex("example3")
    assert not check_model(k3, k3.partition(["a", "b"]))


def test_check_model_needs_total(ex):
    kb = ex("example2")
    with pytest.raises(ValueError):
        check_model(kb, kb.partition(["b"]))


def test_solve_examples(ex):
    k2 = ex("example2")
    assert pairs(k2, solve(k2, Partition(), all_models=True).models) == [(["b"], ["a"])]
    k4 = ex("example4")
    out = solve(k4)
    assert not out.found and not out.models
    k3 = ex("example3")
    assert sorted(pairs(k3, solve(k3, Partition(), all_models=True).models)) == [(["a"], ["b"]), (["b"], ["a"])]


def test_brute_force_examples(ex):
    assert pairs(ex("example2"), brute_force_models(ex("example2"))) == [(["b"], ["a"])]
    assert brute_force_models(ex("example4")) == []
    assert pairs(ex("example3"), brute_force_models(ex("example3"))) == [(["a"], ["b"]), (["b"], ["a"])]


def test_brute_force_order_and_guard():
    kb = KnowledgeBase.from_names([(["a"], [], ["b"]), (["b"], [], ["a"]), (["c"], [], ["d"]), (["d"], [], ["c"])])
    models = brute_force_models(kb)
    assert [m.tmask for m in models] == sorted(m.tmask for m in models)
    big = KnowledgeBase.from_names([([f"a{i}"], [], []) for i in range(21)])
    with pytest.raises(ValueError):
        brute_force_models(big)


def test_few_decisions_on_examples(ex):
    for name in ("example1", "example2"):
        assert solve(ex(name)).stats.decisions <= 1


def test_example1_model(ex):
    kb = ex("example1")
    out = solve(kb, Partition(), all_models=True)
    assert pairs(kb, out.models) == [(["a", "a_p"], ["b", "b_p", "c", "f"])]


def test_check_model_matches_oracle():
    rng = random.Random(31)
    for _ in range(150):
        kb = random_kb(rng)
        nv = Naive(kb)
        for _ in range(4):
            t = frozenset(a for a in kb.ka if rng.random() < 0.5)
            assert check_model(kb, Partition(t, kb.ka - t)) == nv.check_model(t, kb.ka - t)


def test_solver_properties():
    rng = random.Random(32)
    for _ in range(150):
        kb = random_kb(rng)
        expected = brute_force_models(kb)
        out = solve(kb, Partition(), all_models=True)
        assert set(out.models) == set(expected)
        assert out.found == bool(expected)
        assert out.stats.decisions <= 2 ** len(kb.ka)
        for m in out.models:
            assert m.is_total(kb.ka) and check_model(kb, m)
            assert kb.oracle.dependable(m.tmask, m.fmask)
            t = frozenset(a for a in m.t if rng.random() < 0.5)
            f = frozenset(a for a in m.f if rng.random() < 0.5)
            assert solve(kb, Partition(t, f)).found
