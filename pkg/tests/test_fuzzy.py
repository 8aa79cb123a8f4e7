import json
import math
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from siterank.errors import InputError
from siterank.fuzzy import (
    DEFAULT_SCALE,
    TFN,
    LinguisticScale,
    crisp,
    gmir,
    tfn,
    tfn_mul,
)

tfn_components = st.tuples(
    st.floats(0, 50, allow_nan=False), st.floats(0, 50), st.floats(0, 50)
).map(sorted)
tfns = tfn_components.map(lambda c: TFN(*c))


class TestConstruction:
    def test_crisp_unit(self):
        t = tfn(1, 1, 1)
        assert (t.l, t.m, t.u) == (1, 1, 1)
        assert t.is_crisp

    def test_valid_asymmetric(self):
        t = tfn(0.5, 1, 2.5)
        assert not t.is_crisp
        assert t.spread == 2.0

    def test_l_above_m_rejected(self):
        with pytest.raises(InputError, match="l > m"):
            tfn(2, 1, 3)

    def test_m_above_u_rejected(self):
        with pytest.raises(InputError, match="m > u"):
            tfn(1, 3, 2)

    def test_negative_lower_rejected(self):
        with pytest.raises(InputError, match="nonnegative"):
            tfn(-0.5, 1, 2)

    @pytest.mark.parametrize("bad", [float("nan"), float("inf")])
    def test_nonfinite_rejected(self, bad):
        with pytest.raises(InputError, match="finite"):
            tfn(bad, 1, 2)


class TestMul:
    def test_identity(self):
        phi = tfn(1.5, 2, 2.5)
        assert tfn_mul(tfn(1, 1, 1), phi) == phi

    def test_crisp_scaling(self):
        got = tfn_mul(tfn(0.1, 0.2, 0.3), crisp(2))
        assert (got.l, got.m, got.u) == pytest.approx((0.2, 0.4, 0.6))

    def test_componentwise(self):
        got = tfn_mul(tfn(1, 2, 3), tfn(1.5, 2, 2.5))
        assert (got.l, got.m, got.u) == (1.5, 4, 7.5)

    @given(tfns, tfns)
    def test_commutative(self, a, b):
        assert tfn_mul(a, b) == tfn_mul(b, a)

    @given(tfns, tfns, tfns)
    def test_associative(self, a, b, c):
        lhs = tfn_mul(tfn_mul(a, b), c)
        rhs = tfn_mul(a, tfn_mul(b, c))
        assert (lhs.l, lhs.m, lhs.u) == pytest.approx((rhs.l, rhs.m, rhs.u))


class TestGmir:
    @pytest.mark.parametrize(
        "triple,expected",
        [((1, 1, 1), 1.0), ((0, 1, 2), 1.0), ((0.5, 1, 2.5), 7 / 6)],
    )
    def test_values(self, triple, expected):
        assert gmir(tfn(*triple)) == pytest.approx(expected, abs=1e-12)

    @given(st.floats(0, 100))
    def test_crisp_fixed_point(self, c):
        assert gmir(crisp(c)) == pytest.approx(c)

    @given(tfns, st.floats(0.001, 5))
    def test_monotone_in_each_component(self, t, eps):
        assert gmir(TFN(t.l, t.m, t.u + eps)) > gmir(t)
        assert gmir(TFN(t.l, t.m + eps, t.u + eps)) > gmir(t)
        if t.l + eps <= t.m:
            assert gmir(TFN(t.l + eps, t.m, t.u)) > gmir(t)


class TestLinguisticScale:
    def test_known_terms(self):
        assert DEFAULT_SCALE.lookup("Equally Significant") == tfn(1, 1, 1)
        assert DEFAULT_SCALE.lookup("Moderately Significant") == tfn(1.5, 2, 2.5)

    def test_unknown_term_lists_valid(self):
        with pytest.raises(InputError, match="Moderately Significant"):
            DEFAULT_SCALE.lookup("Quite Significant")

    def test_file_round_trip_exact(self):
        path = Path(__file__).resolve().parent.parent / "src/siterank/data/default_scale.json"
        assert LinguisticScale.load(path) == DEFAULT_SCALE

    def test_duplicate_terms_rejected(self):
        with pytest.raises(InputError, match="unique"):
            LinguisticScale([("A", tfn(1, 1, 1)), ("A", tfn(2, 2, 2))])

    def test_non_increasing_rejected(self):
        with pytest.raises(InputError, match="increasing"):
            LinguisticScale.from_mapping({"A": [1, 2, 3], "B": [1, 2, 3]})

    def test_bad_triple_rejected(self):
        with pytest.raises(InputError, match="triple"):
            LinguisticScale.from_mapping({"A": [1, 2]})
