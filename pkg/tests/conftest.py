import pytest
from fractions import Fraction
from hypothesis import strategies as st

from flaghilb.qt import QTFraction


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("FLAGHILB_CACHE_DIR", str(tmp_path / "cache"))


_monomials = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(_monomials, st.integers(-4, 4), min_size=1, max_size=4).map(QTFraction.from_terms)
nonzero_polys = polys.filter(lambda f: not f.is_zero())
fractions_qt = st.builds(lambda a, b: a / b, polys, nonzero_polys)
small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(lambda x: x != 0)
