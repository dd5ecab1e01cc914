from __future__ import annotations

import pytest
from hypothesis import given

from conftest import real_floats_mv
from gacode import mvtx
from gacode.core import Algebra, Multivector


def test_loads_complex_layout():
    text = "mv n=2 complex=1 aux=0\n0.5 010\n-1.25 101\n"
    mv = mvtx.loads(text)
    assert mv.algebra == Algebra(2, complex=True)
    assert mv.terms == {0b010: 0.5, 0b101: -1.25}


def test_loads_real_layout_starts_at_position_one():
    mv = mvtx.loads("mv n=3 complex=0 aux=0\n2 100\n\n3 001\n")
    assert mv.terms == {0b0010: 2.0, 0b1000: 3.0}


@given(real_floats_mv(Algebra(4, complex=True, aux=True), 10))
def test_round_trip(mv):
    assert mvtx.loads(mvtx.dumps(mv)) == mv


def test_dumps_ascending():
    mv = Multivector(Algebra(2), {0b110: 1.0, 0: 2.0})
    assert mvtx.dumps(mv) == "mv n=2 complex=0 aux=0\n2.0 00\n1.0 11\n"


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("mv n=2\n", 1),
        ("mv n=2 complex=0 aux=0\n1.0 101\n", 2),
        ("mv n=2 complex=0 aux=0\n1.0 10\n\n2.0 10\n", 4),
        ("mv n=2 complex=0 aux=0\n1.0 10\nabc 01\n", 3),
        ("mv n=2 complex=0 aux=0\n1.0 1x\n", 2),
        ("mv n=2 complex=0 aux=0\n1.0\n", 2),
    ],
)
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(mvtx.MVTXError) as info:
        mvtx.loads(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_duplicate_mentions_first_line():
    with pytest.raises(mvtx.MVTXError, match="first on line 2"):
        mvtx.loads("mv n=1 complex=0 aux=0\n1 1\n2 1\n")
