from __future__ import annotations

from hypothesis import strategies as st

from gacode.core import Algebra, Multivector

SMALL_INTS = st.sampled_from([-2.0, -1.0, 1.0, 2.0])


@st.composite
def multivectors(draw, algebra: Algebra, coefs=SMALL_INTS, max_terms: int = 6) -> Multivector:
    masks = draw(
        st.lists(
            st.integers(0, algebra.allowed_mask).map(lambda m: m & algebra.allowed_mask),
            max_size=max_terms,
            unique=True,
        )
    )
    return Multivector(algebra, {m: draw(coefs) for m in masks})


@st.composite
def real_floats_mv(draw, algebra: Algebra, max_terms: int = 6) -> Multivector:
    coefs = st.floats(-3, 3, allow_nan=False).filter(lambda x: x == 0 or abs(x) > 1e-9)
    return draw(multivectors(algebra, coefs, max_terms))


def pytest_terminal_summary(terminalreporter):
    acceptance = __import__("sys").modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.RESULTS:
        terminalreporter.write_line(line)
