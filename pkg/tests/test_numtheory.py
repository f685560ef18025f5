import pytest

from sylowcover.errors import NotPrimePower
from sylowcover.numtheory import (
    factorization,
    is_prime,
    is_prime_power,
    p_part,
    prime_power_decomposition,
)


def test_is_prime():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)
    assert not is_prime(0)


def test_factorization():
    assert factorization(181440) == [(2, 6), (3, 4), (5, 1), (7, 1)]
    assert factorization(1) == []
    assert factorization(97) == [(97, 1)]


def test_factorization_round_trip():
    for n in range(1, 2000):
        product = 1
        for p, e in factorization(n):
            product *= p**e
        assert product == n


def test_p_part():
    assert p_part(40320, 2) == 128
    assert p_part(40320, 3) == 9
    assert p_part(35, 2) == 1


def test_prime_power_decomposition():
    assert prime_power_decomposition(8) == (2, 3)
    assert prime_power_decomposition(9) == (3, 2)
    assert prime_power_decomposition(17) == (17, 1)
    with pytest.raises(NotPrimePower):
        prime_power_decomposition(12)


def test_is_prime_power():
    assert is_prime_power(27)
    assert not is_prime_power(6)
