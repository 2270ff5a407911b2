"""Path objects and the three vertex-sharing conventions.

Core claims:
    - vertex lists derive correctly from step words and starts
    - a shared vertex of same-start equal-length paths sits at the same index
      in both, so stepwise equality equals vertex-set intersection
    - the three counting conventions give their documented values and differ
      exactly as documented (interior = excluding-start minus one shared end)
    - all three counts are symmetric in the pair order
"""

from itertools import combinations, product

import pytest

from pathpairs.paths import (
    PathNE,
    PathPair,
    intersections_excluding_origin,
    intersections_excluding_start,
    intersections_interior,
)


def pair(a: str, b: str) -> PathPair:
    return PathPair(PathNE.from_word(a), PathNE.from_word(b))


def words(n: int, r: int) -> list[str]:
    out = []
    for epos in combinations(range(n), r):
        out.append("".join("E" if t in epos else "N" for t in range(n)))
    return out


def test_vertices_and_end():
    p = PathNE.from_word("ENN")
    assert p.vertices == ((0, 0), (1, 0), (1, 1), (1, 2))
    assert p.end == (1, 2)
    assert p.n == 3
    assert p.east_steps == 1
    assert p.word == "ENN"


def test_vertices_respect_start():
    p = PathNE.from_word("NE", start=(2, 5))
    assert p.vertices == ((2, 5), (2, 6), (3, 6))


def test_column_heights():
    p = PathNE.from_word("NENNE")
    assert p.column_heights(1) == (1, 2, 3)
    assert p.column_heights(0) == (0, 1)


def test_invalid_step_rejected():
    with pytest.raises(ValueError):
        PathNE(("E", "X"))


def test_pair_requires_equal_lengths_and_starts():
    with pytest.raises(ValueError):
        PathPair(PathNE.from_word("EN"), PathNE.from_word("E"))
    with pytest.raises(ValueError):
        PathPair(PathNE.from_word("EN"), PathNE.from_word("EN", start=(1, 0)))


def test_interior_examples():
    assert intersections_interior(pair("EN", "NE")) == 0
    assert intersections_interior(pair("EN", "EN")) == 1
    assert intersections_interior(pair("ENN", "NEN")) == 1


def test_interior_identical_paths_share_all_inner_vertices():
    word = "ENNEE"
    assert intersections_interior(pair(word, word)) == len(word) - 1


def test_interior_rejects_different_endpoints():
    with pytest.raises(ValueError):
        intersections_interior(pair("EN", "EE"))


def test_excluding_origin_examples():
    assert intersections_excluding_origin(pair("E", "E")) == 1
    assert intersections_excluding_origin(pair("E", "N")) == 0
    assert intersections_excluding_origin(pair("EN", "NE")) == 1  # shared endpoint counts


def test_excluding_origin_one_step_census():
    counts = {}
    for a, b in product(["E", "N"], repeat=2):
        k = intersections_excluding_origin(pair(a, b))
        counts[k] = counts.get(k, 0) + 1
    assert counts == {0: 2, 1: 2}


def test_excluding_origin_rejects_offset_start():
    shifted = PathPair(
        PathNE.from_word("E", start=(1, 1)), PathNE.from_word("N", start=(1, 1))
    )
    with pytest.raises(ValueError):
        intersections_excluding_origin(shifted)


def test_excluding_start_examples():
    assert intersections_excluding_start(pair("NN", "EN")) == 0
    assert intersections_excluding_start(pair("NN", "NE")) == 1
    for word in ("EE", "EN", "NE", "NN"):
        assert intersections_excluding_start(pair(word, word)) == 2


def test_excluding_start_works_away_from_origin():
    a = PathNE.from_word("NE", start=(3, 4))
    b = PathNE.from_word("NN", start=(3, 4))
    assert intersections_excluding_start(PathPair(a, b)) == 1  # both visit (3, 5)


def _vertex_set_interior(p: PathNE, q: PathNE) -> int:
    shared = set(p.vertices) & set(q.vertices)
    shared.discard(p.vertices[0])
    shared.discard(p.vertices[-1])
    return len(shared)


def test_stepwise_equality_matches_vertex_sets():
    # coordinate sums force shared vertices onto equal step indices
    for r in range(4):
        vocab = words(3, r)
        for wa in vocab:
            for wb in vocab:
                p = pair(wa, wb)
                assert intersections_interior(p) == _vertex_set_interior(
                    p.first, p.second
                )


def test_all_conventions_symmetric():
    vocab = [w for r in range(4) for w in words(3, r)]
    for wa in vocab:
        for wb in vocab:
            p = pair(wa, wb)
            assert intersections_excluding_origin(p) == intersections_excluding_origin(
                p.swapped()
            )
            assert intersections_excluding_start(p) == intersections_excluding_start(
                p.swapped()
            )
            if p.first.end == p.second.end:
                assert intersections_interior(p) == intersections_interior(p.swapped())


def test_interior_is_excluding_start_minus_shared_end():
    for wa in words(4, 2):
        for wb in words(4, 2):
            p = pair(wa, wb)
            assert intersections_interior(p) == intersections_excluding_start(p) - 1
