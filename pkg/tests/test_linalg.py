from shared.algebra.linalg import charpoly, rank, rref, vectors_to_rows


def test_rank(qq, f7):
    assert rank([[1, 2], [2, 4]], qq) == 1
    assert rank([[1, 2], [3, 4]], qq) == 2
    # 8 ≡ 1 em F_7
    assert rank([[1, 1], [1, 8]], f7) == 1
    assert rank([], qq) == 0


def test_rref_pivots(qq):
    reduced, pivots = rref([[0, 2, 4], [1, 1, 1]], qq)
    assert pivots == (0, 1)
    assert reduced[0] == [qq(1), qq(0), qq(-1)]
    assert reduced[1] == [qq(0), qq(1), qq(2)]


def test_charpoly(qq):
    assert charpoly([[1, 1], [0, 2]], qq) == [qq(1), qq(-3), qq(2)]
    assert charpoly([], qq) == [qq(1)]


def test_vectors_to_rows(qq):
    rows, keys = vectors_to_rows([{"b": qq(1)}, {"a": qq(2), "b": qq(3)}], qq)
    assert keys == ["a", "b"]
    assert rows == [[qq(0), qq(1)], [qq(2), qq(3)]]
