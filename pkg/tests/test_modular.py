import itertools
import json

import pytest

from letterkit import (
    all_graphs,
    bull,
    classify_vertex,
    complete,
    cycle,
    inflate,
    is_isomorphic,
    is_module,
    is_prime,
    matching,
    path,
    quotient,
    reconstruct,
)
from letterkit.modular import (
    BULL_NOSE,
    P4_END,
    P4_MID,
    decomposition_tree,
    verify_role,
)
from tests.conftest import random_graph


def exhaustive_is_prime(g):
    """Oracle: scan every vertex subset for a proper module."""
    for size in range(2, g.n):
        for subset in itertools.combinations(range(g.n), size):
            if is_module(g, subset):
                return False
    return True


def test_is_module_basics():
    g = path(4)
    assert is_module(g, set())
    assert is_module(g, {2})
    assert is_module(g, set(range(4)))
    assert not is_module(g, {0, 3})  # endpoints see different midpoints
    with pytest.raises(ValueError):
        is_module(g, {9})


def test_module_of_inflated_block():
    g, blocks = inflate(path(4), [matching(1), path(1), path(1), path(1)])
    assert is_module(g, blocks[0])


def test_is_prime_matches_exhaustive_oracle():
    for n in range(1, 7):
        for g in all_graphs(n):
            assert is_prime(g) == exhaustive_is_prime(g)


def test_prime_examples():
    assert is_prime(path(4))
    assert is_prime(bull())
    assert not is_prime(complete(3))
    assert all(not is_prime(g) for g in all_graphs(3))


def test_quotient_prime_graph_is_its_own():
    dec = quotient(path(4))
    assert dec.quotient == path(4)
    assert dec.modules == ((0,), (1,), (2,), (3,))


def test_quotient_disconnected_split():
    dec = quotient(matching(2))
    assert dec.quotient.edge_count() == 0 and dec.quotient.n == 2
    assert dec.modules == ((0, 1), (2, 3))


def test_quotient_join_split():
    dec = quotient(complete(3))
    assert dec.quotient.edge_count() == 1
    assert dec.modules[0] == (0,)


def test_quotient_of_nose_inflation():
    g, blocks = inflate(bull(), [path(1)] * 4 + [path(4)])
    dec = quotient(g)
    assert is_isomorphic(dec.quotient, bull())
    assert tuple(blocks[4]) in dec.modules


def test_quotient_rejects_single_vertex():
    with pytest.raises(ValueError):
        quotient(path(1))


def test_quotient_roundtrip_random(rng):
    for _ in range(120):
        n = rng.randint(2, 24)
        g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        dec = quotient(g)
        assert is_prime(dec.quotient)
        rebuilt, mapping = reconstruct(dec)
        for a in range(n):
            for b in range(a + 1, n):
                assert rebuilt.adjacent(a, b) == \
                    g.adjacent(mapping[a], mapping[b])


def test_classify_vertex_examples():
    role = classify_vertex(bull(), 4)
    assert role.role == BULL_NOSE and verify_role(bull(), 4, role)
    role = classify_vertex(path(4), 0)
    assert role.role == P4_END and role.witness == (0, 1, 2, 3)
    role = classify_vertex(path(4), 1)
    assert role.role == P4_MID
    for v in range(5):
        role = classify_vertex(cycle(5), v)
        assert role.role in (P4_END, P4_MID)
        assert verify_role(cycle(5), v, role)


def test_classify_vertex_needs_four_vertices():
    with pytest.raises(ValueError):
        classify_vertex(path(3), 0)


def test_classification_on_all_small_primes():
    for n in range(4, 7):
        for g in all_graphs(n):
            if not is_prime(g):
                continue
            for v in range(g.n):
                role = classify_vertex(g, v)
                assert verify_role(g, v, role)


def test_verify_role_rejects_bogus_witness():
    from letterkit.modular import VertexRole
    assert not verify_role(path(4), 0, VertexRole(P4_END, (1, 0, 2, 3)))
    assert not verify_role(bull(), 4, VertexRole(BULL_NOSE, (0, 1, 2, 3, 0)))


def test_decomposition_serialization():
    obj = json.loads(quotient(matching(2)).to_json())
    assert obj["modules"] == [[0, 1], [2, 3]]
    tree = decomposition_tree(matching(2))
    assert tree["n"] == 4
    assert len(tree["modules"]) == 2
    assert tree["modules"][0]["tree"]["n"] == 2
