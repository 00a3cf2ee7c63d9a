import random
from fractions import Fraction
from math import ceil

import pytest
import sympy

from apolar.binary import (
    binary_rank,
    max_monomial_rank,
    max_monomial_witness,
    monomial_rank,
    pairwise_independent,
    prop_pre_check,
    squarefree,
    z_divisibility,
)
from apolar.bounds import catalecticant_lower_bound, max_rank_lower_bound
from apolar.errors import ApolarError, ArityError, ZeroFormError
from apolar.forms import Form, linear_power, multiply, scale
from apolar.parsing import parse_form

from conftest import random_form, to_sympy


def B(text):
    return parse_form(text, 2)


def test_binary_rank_examples():
    assert binary_rank(B("z^5")).rank == 1
    cert = binary_rank(B("y*z^3"))
    assert cert.rank == 4 and cert.min_generator_degree == 2
    assert str(cert.witness_generator) == "b^2" and not cert.squarefree_witness_found
    cert = binary_rank(B("y^2*z^2"))
    assert cert.rank == 3 and cert.min_generator_degree == 3 and cert.squarefree_witness_found


def test_binary_rank_errors():
    with pytest.raises(ZeroFormError):
        binary_rank(Form.zero(2, 3))
    with pytest.raises(ApolarError):
        binary_rank(Form(2, 0, {(0, 0): 1}))
    with pytest.raises(ArityError):
        binary_rank(parse_form("x*y"))


def test_certificate_invariant():
    rng = random.Random(12)
    for _ in range(60):
        f = random_form(rng, 2, rng.randint(1, 8), rational=True)
        cert = binary_rank(f)
        e = cert.min_generator_degree
        assert cert.rank in (e, f.degree + 2 - e)
        assert 1 <= cert.rank <= f.degree or (f.degree == 1 and cert.rank == 1)


@pytest.mark.parametrize("d", range(2, 13))
def test_monomial_binary_rank(d):
    for a in range(1, d):
        assert binary_rank(Form.monomial((a, d - a))).rank == max(a, d - a) + 1


def test_two_powers_have_rank_two():
    rng = random.Random(13)
    for d in range(2, 11):
        for _ in range(3):
            while True:
                l1 = (rng.randint(-6, 6), rng.randint(-6, 6))
                l2 = (rng.randint(-6, 6), rng.randint(-6, 6))
                if pairwise_independent([l1, l2]):
                    break
            f = linear_power(l1, d) + scale(rng.choice([-2, 3, 5]), linear_power(l2, d))
            assert binary_rank(f).rank == 2


def test_generic_sums_of_powers():
    rng = random.Random(14)
    for d in range(2, 11):
        for r in range(1, ceil((d + 1) / 2) + 1):
            bases = [(rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(r)]
            if not pairwise_independent(bases):
                continue
            f = Form.zero(2, d)
            for base in bases:
                f = f + scale(rng.randint(1, 50), linear_power(base, d))
            assert binary_rank(f).rank == r


def test_equal_degree_pencil():
    # y^3 z^3: generators b^4 and c^4 in degree 4 = (6 + 2) / 2
    cert = binary_rank(B("y^3*z^3"))
    assert cert.rank == 4 and cert.min_generator_degree == 4


def test_squarefree_examples():
    assert squarefree(multiply(multiply(B("y"), B("z")), B("y + z")))
    assert not squarefree(B("y^2*z"))
    assert not squarefree(B("y^2 + 2*y*z + z^2"))
    assert squarefree(B("y*z")) and squarefree(B("z")) and squarefree(B("y^3 - z^3"))
    assert not squarefree(B("y*z^2"))


def test_squarefree_against_sympy():
    rng = random.Random(15)
    y, z = sympy.symbols("y z")
    for _ in range(150):
        parts = [B(t) for t in rng.sample(["y", "z", "y + z", "y - z", "2*y + z", "y + 3*z", "y^2 + z^2"],
                                          rng.randint(1, 4))]
        f = parts[0]
        for p in parts[1:] + rng.sample(parts, rng.randint(0, 1)):
            f = multiply(f, p)
        f = scale(rng.randint(1, 5), f)
        _, factors = sympy.factor_list(to_sympy(f))
        assert squarefree(f) == all(mult == 1 for _, mult in factors)


def test_z_divisibility_examples():
    assert z_divisibility(B("3*z^4")) == 4
    assert z_divisibility(B("y^2*z^3 + z^5")) == 3
    assert z_divisibility(B("y^4")) == 0
    with pytest.raises(ZeroFormError):
        z_divisibility(Form.zero(2, 3))


def test_prop_pre_examples():
    v = prop_pre_check(2, [1, 0], [(0, 1), (1, 0)], 2)
    assert v.divisible and v.proportional_to_power and v.nonzero_summands == 1
    v = prop_pre_check(2, [1, -1], [(1, 1), (1, 0)], 3)
    assert v.form == B("3*y^2*z + 3*y*z^2 + z^3")
    assert z_divisibility(v.form) == 1 and not v.divisible
    rng = random.Random(16)
    for _ in range(30):
        d = rng.randint(1, 8)
        bases = [(1, t) for t in rng.sample(range(-20, 21), d)]
        coeffs = [rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(d)]
        assert not prop_pre_check(d, coeffs, bases, d).divisible


def test_prop_pre_errors():
    with pytest.raises(ApolarError):
        prop_pre_check(4, [1] * 4, [(0, 1)] * 4, 3)
    with pytest.raises(ArityError):
        prop_pre_check(2, [1], [(0, 1), (1, 0)], 3)


def _pre_trial(rng):
    d = rng.randint(1, 8)
    r = rng.randint(0, d)
    pool = [(0, 1), (1, 0), (1, 1), (1, -1), (2, 1), (1, 2), (0, 2), (3, -1)]
    bases = [rng.choice(pool) if rng.random() < 0.7 else (rng.randint(-4, 4), rng.randint(1, 4))
             for _ in range(r)]
    coeffs = [rng.choice([0, 0, 1, -1, 2, Fraction(1, 3)]) for _ in range(r)]
    return r, coeffs, bases, d


def test_prop_pre_universal_property():
    rng = random.Random(17)
    divisible_seen = 0
    for _ in range(500):
        r, coeffs, bases, d = _pre_trial(rng)
        v = prop_pre_check(r, coeffs, bases, d)
        if v.divisible:
            divisible_seen += 1
            assert v.proportional_to_power
            if pairwise_independent(bases):
                assert v.nonzero_summands <= 1
    assert divisible_seen > 50


def test_monomial_rank_examples():
    assert monomial_rank(1, 1, 2) == 6
    assert catalecticant_lower_bound(parse_form("x*y*z^2")) == 4 <= 6
    assert monomial_rank(0, 1, 3) == 4 == binary_rank(B("y*z^3")).rank
    assert monomial_rank(0, 0, 5) == 1
    with pytest.raises(ApolarError):
        monomial_rank(0, 0, 0)


def test_max_monomial_rank_examples():
    assert max_monomial_rank(4) == 6 and max_monomial_witness(4) == (1, 1, 2)
    assert max_monomial_rank(6) == 12 and max_monomial_witness(6) == (1, 2, 3)
    assert max_monomial_rank(2) == 2 and max_monomial_witness(2) == (0, 1, 1)
    with pytest.raises(ApolarError):
        max_monomial_rank(0)


@pytest.mark.parametrize("k", range(1, 11))
def test_family_beats_monomials(k):
    assert max_monomial_rank(2 * k + 2) == k * k + 3 * k + 2 < max_rank_lower_bound(2 * k + 2)
