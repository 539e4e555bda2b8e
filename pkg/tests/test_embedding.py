import math
import random
from collections import Counter
from fractions import Fraction

import pytest

from harmonic_codes.embedding import (
    EmbeddedPoint,
    build_code,
    embed_degree2,
    flatten_coordinates,
    float_code_to_text,
    gram_from_text,
    gram_to_text,
    normalized_inner,
)
from harmonic_codes.exact import (
    DimensionError,
    StructureError,
    SymMatrix,
    frobenius_inner,
)
from harmonic_codes.harmonics import gegenbauer
from harmonic_codes.lattice import LatticeCode

# split of the 57120 non-antipodal gram entries, frozen from the exact scan
POSITIVE_SEVENTH_COUNT = 28560
NEGATIVE_SEVENTH_COUNT = 28560


def test_embedded_matrix_of_first_shape(e8_roots):
    idx = e8_roots.points.index((2, 2, 0, 0, 0, 0, 0, 0))
    m = embed_degree2(e8_roots, idx).matrix
    for i in range(8):
        expected = Fraction(3, 8) if i < 2 else Fraction(-1, 8)
        assert m.entries[i][i] == expected
    assert m.entries[0][1] == Fraction(1, 2)
    assert m.entries[0][2] == 0
    assert m.trace() == 0


def test_embedding_identifies_antipodes(e8_roots):
    i = e8_roots.points.index((2, 2, 0, 0, 0, 0, 0, 0))
    j = e8_roots.points.index((-2, -2, 0, 0, 0, 0, 0, 0))
    assert embed_degree2(e8_roots, i).matrix == embed_degree2(e8_roots, j).matrix


def test_embed_index_out_of_range(e8_roots):
    with pytest.raises(IndexError):
        embed_degree2(e8_roots, 240)


def test_normalized_inner_self_is_one(e8_roots):
    a = embed_degree2(e8_roots, 0)
    assert normalized_inner(a, a) == 1


def test_normalized_inner_reproduces_kernel_values(e8_roots):
    pts = e8_roots.points
    i = pts.index((2, 2, 0, 0, 0, 0, 0, 0))
    j = pts.index((2, 0, 2, 0, 0, 0, 0, 0))   # normalized inner product 1/2
    k = pts.index((2, 0, 0, 2, 0, 0, 0, 0))
    orth = pts.index((0, 0, 2, 2, 0, 0, 0, 0))  # orthogonal to pts[i]
    assert e8_roots.normalized_inner(i, j) == Fraction(1, 2)
    assert e8_roots.normalized_inner(i, orth) == 0
    a, b, c = (embed_degree2(e8_roots, t) for t in (i, j, orth))
    assert normalized_inner(a, b) == Fraction(1, 7)
    assert normalized_inner(a, c) == Fraction(-1, 7)
    assert normalized_inner(a, embed_degree2(e8_roots, k)) == Fraction(1, 7)


def test_normalized_inner_order_mismatch(e8_roots):
    small = LatticeCode(2, 1, 1, ((1, 0), (-1, 0)))
    with pytest.raises(DimensionError):
        normalized_inner(embed_degree2(e8_roots, 0), embed_degree2(small, 0))


def test_kernel_identity_on_sampled_pairs(e8_roots):
    # generic Fraction-arithmetic route, independent of the gram fast path
    g2 = gegenbauer(7, 2)
    rng = random.Random(17)
    for _ in range(150):
        i, j = rng.randrange(240), rng.randrange(240)
        a, b = embed_degree2(e8_roots, i), embed_degree2(e8_roots, j)
        assert normalized_inner(a, b) == g2.evaluate(e8_roots.normalized_inner(i, j))


def test_build_code_shape(e8_code):
    assert len(e8_code) == 240
    assert e8_code.ambient_harmonic_dim == 35
    assert len(e8_code.gram) == 240
    assert all(len(row) == 240 for row in e8_code.gram)
    signs = [p.sign for p in e8_code.points]
    assert signs == [1] * 120 + [-1] * 120


def test_build_code_gram_values(e8_code):
    counts = Counter(
        v for i, row in enumerate(e8_code.gram) for j, v in enumerate(row) if i != j
    )
    assert counts == {
        Fraction(-1): 240,
        Fraction(1, 7): POSITIVE_SEVENTH_COUNT,
        Fraction(-1, 7): NEGATIVE_SEVENTH_COUNT,
    }


def test_build_code_diagonal_and_antipodes(e8_code):
    for i in range(240):
        assert e8_code.gram[i][i] == 1
        partner = (i + 120) % 240
        assert e8_code.gram[i][partner] == -1
        row_minus_ones = [j for j in range(240) if e8_code.gram[i][j] == -1]
        assert row_minus_ones == [partner]


def test_gram_matches_pointwise_inner(e8_code):
    rng = random.Random(23)
    for _ in range(60):
        i, j = rng.randrange(240), rng.randrange(240)
        a, b = e8_code.points[i], e8_code.points[j]
        assert e8_code.gram[i][j] == normalized_inner(a, b)


def test_embedded_points_are_equinorm(e8_code):
    norms = {frobenius_inner(p.matrix, p.matrix) for p in e8_code.points}
    assert norms == {Fraction(7, 8)}


def test_build_code_thread_count_does_not_change_output(e8_roots, e8_code):
    assert build_code(e8_roots, threads=4) == e8_code


def test_build_code_rejects_non_antipodal():
    code = LatticeCode(2, 1, 2, ((1, 1), (1, -1)))
    with pytest.raises(StructureError):
        build_code(code)


def test_flatten_length_and_norm(e8_code):
    for p in (e8_code.points[0], e8_code.points[150]):
        coords = flatten_coordinates(p)
        assert len(coords) == 35
        norm = math.sqrt(sum(x * x for x in coords))
        assert abs(norm - 1.0) <= 1e-12


def test_flatten_sign(e8_code):
    plus = flatten_coordinates(e8_code.points[5])
    minus = flatten_coordinates(e8_code.points[125])
    assert minus == [-x for x in plus]


def test_flatten_preserves_inner_products(e8_code):
    rng = random.Random(29)
    flats = {}
    for _ in range(80):
        i, j = rng.randrange(240), rng.randrange(240)
        for t in (i, j):
            if t not in flats:
                flats[t] = flatten_coordinates(e8_code.points[t])
        dot = sum(x * y for x, y in zip(flats[i], flats[j]))
        assert abs(dot - float(e8_code.gram[i][j])) <= 1e-12


def test_float_export_format(e8_code):
    text = float_code_to_text(e8_code)
    lines = text.splitlines()
    assert lines[0] == "35 240 float"
    assert len(lines) == 241
    row = [float(tok) for tok in lines[1].split()]
    assert len(row) == 35


def test_gram_text_round_trip(e8_code):
    text = gram_to_text(e8_code.gram)
    assert text.splitlines()[0] == "240"
    assert gram_from_text(text) == e8_code.gram


def test_gram_text_rejects_malformed():
    with pytest.raises(StructureError):
        gram_from_text("")
    with pytest.raises(StructureError):
        gram_from_text("2\n1 0\n")
    with pytest.raises(StructureError):
        gram_from_text("1\n1 0\n")
    with pytest.raises(StructureError):
        gram_from_text("1\nx\n")


def test_embedded_point_validation():
    with pytest.raises(StructureError):
        EmbeddedPoint(matrix=SymMatrix.identity(2), source_index=0, sign=1)
    traceless = SymMatrix.diagonal([Fraction(1, 2), Fraction(-1, 2)])
    with pytest.raises(StructureError):
        EmbeddedPoint(matrix=traceless, source_index=0, sign=2)
