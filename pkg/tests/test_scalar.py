"""Tests for the numeric backends."""
import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from src.kernel.scalar import BackendError, make_backend


def test_machine_backend_defaults():
    bk = make_backend("machine")
    assert bk.precision_bits == 53
    assert bk.eps == 1e-9
    assert bk.name == "machine"


def test_machine_ignores_precision_bits():
    assert make_backend("machine", 10).precision_bits == 53


def test_bigfloat_eps_follows_precision():
    bk = make_backend("bigfloat", 256)
    assert bk.eps == mpmath.mpf(2) ** -124
    assert bk.name == "bigfloat:256"
    assert make_backend("bigfloat", 512).eps < bk.eps


def test_bigfloat_rejects_low_precision():
    with pytest.raises(BackendError):
        make_backend("bigfloat", 10)


def test_unknown_backend_kind():
    with pytest.raises(BackendError):
        make_backend("decimal", 64)


def test_eps_override():
    assert make_backend("machine", eps=1e-6).eps == 1e-6


def test_deg_rad_conversions(machine, big):
    assert machine.deg_to_rad(180) == pytest.approx(math.pi, abs=1e-15)
    assert machine.deg_to_rad(0) == 0
    assert abs(big.deg_to_rad(180) - big.pi) < big.num("1e-70")
    assert abs(machine.rad_to_deg(machine.deg_to_rad(36.5)) - 36.5) <= machine.eps
    assert abs(big.rad_to_deg(big.deg_to_rad(big.num("36.5"))) - 36.5) <= big.eps


def test_bigfloat_precision_is_private():
    before = mpmath.mp.prec
    bk = make_backend("bigfloat", 300)
    bk.sqrt(bk.num(2))
    assert mpmath.mp.prec == before


def test_identical_backends_are_bit_identical():
    a = make_backend("bigfloat", 128)
    b = make_backend("bigfloat", 128)

    def run(bk):
        x = bk.num("0.3")
        return bk.atan2(bk.sin(x) * bk.sqrt(bk.num(2)), bk.cos(x) + bk.tan(x))

    assert a.exact(run(a)) == b.exact(run(b))


def test_sqrt_square_at_high_precision(big):
    two = big.num(2)
    assert abs(big.sqrt(two) ** 2 - two) < big.num("1e-70")


def test_exact_round_trips(machine, big):
    x = machine.sqrt(2.0)
    assert float(machine.exact(x)) == x
    y = big.sqrt(big.num(2))
    assert big.num(big.exact(y)) == y
    assert isinstance(big.to_json(y), str)
    assert machine.to_json(x) == x


def test_fmt_uses_twelve_significant_digits(machine):
    assert machine.fmt(45.00000000000001) == "45"
    assert machine.fmt(-0.0) == "0"
    assert machine.fmt(18.434948822922) == "18.4349488229"


@given(st.floats(min_value=0, max_value=1e6, allow_nan=False, allow_infinity=False))
def test_sqrt_squared_within_eps(x):
    bk = make_backend("machine")
    assert abs(bk.sqrt(x) ** 2 - x) <= bk.eps
