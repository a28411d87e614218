import hypothesis.strategies as st
from hypothesis import settings

from sytkit.tableau import insertion_tableau

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


def words_of_size(n: int):
    return st.permutations(tuple(range(1, n + 1))).map(tuple)


@st.composite
def words(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return draw(words_of_size(n))


@st.composite
def tableaux(draw, min_n=1, max_n=7):
    return insertion_tableau(draw(words(min_n=min_n, max_n=max_n)))


@st.composite
def segments(draw, n: int):
    i = draw(st.integers(min_value=1, max_value=n - 1))
    j = draw(st.integers(min_value=i + 1, max_value=n))
    return (i, j)
