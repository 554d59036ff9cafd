from fractions import Fraction

from hypothesis import given, strategies as st

from conftest import rationals
from supercircle.linalg import RowReducer, solve


def test_unique_solution():
    rows = [{0: 1, 1: 1}, {0: 1, 1: -1}]
    particular, null = solve(rows, [3, 1], [0, 1])
    assert particular == {0: 2, 1: 1}
    assert null == []


def test_inconsistent_detected_at_the_offending_row():
    red = RowReducer()
    assert red.add_row({0: 1, 1: 1}, 1)
    assert red.add_row({0: 2, 1: 2}, 2)
    assert not red.add_row({0: 1, 1: 1}, 5)
    assert not red.consistent


def test_nullspace():
    red = RowReducer()
    for c in range(3):
        red.add_column(c)
    red.add_row({0: 1, 1: 2, 2: 3})
    assert red.free_columns() == [1, 2]
    for v in red.nullspace():
        assert v.get(0, 0) + 2 * v.get(1, 0) + 3 * v.get(2, 0) == 0


matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=1, max_size=6)
)


@given(matrices, st.data())
def test_solutions_satisfy_consistent_systems(M, data):
    n = len(M[0])
    x = data.draw(st.lists(rationals, min_size=n, max_size=n))
    rows = [{j: v for j, v in enumerate(r)} for r in M]
    rhs = [sum(v * x[j] for j, v in enumerate(r)) for r in M]
    particular, null = solve(rows, rhs, range(n))
    for row, b in zip(rows, rhs):
        assert sum(v * particular.get(j, Fraction(0)) for j, v in row.items()) == b
        for z in null:
            assert sum(v * z.get(j, Fraction(0)) for j, v in row.items()) == 0
