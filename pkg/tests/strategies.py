"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from stablerep.partitions import Partition

PRIMES = (3, 5, 7, 11, 13)


@st.composite
def partitions(draw, max_size=8, max_len=None):
    n = draw(st.integers(min_value=0, max_value=max_size))
    parts = []
    while n:
        cap = n if not parts else min(n, parts[-1])
        if max_len is not None and len(parts) == max_len:
            break
        x = draw(st.integers(min_value=1, max_value=cap))
        parts.append(x)
        n -= x
    return Partition(tuple(parts))
