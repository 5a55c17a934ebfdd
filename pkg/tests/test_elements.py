"""Element analysis: degrees, minimal polynomials, train elements,
singly generated subalgebras, and composition of polynomial maps."""

import random
from fractions import Fraction

import pytest

from bernstein.core import (AlgebraError, UnivariatePoly, poly_eval, HALF,
                            ONE, ZERO)
from bernstein.elements import (analyze_element, minimal_poly_form_check,
                                singly_generated_subalgebra, train_element_rank,
                                train_f, train_polynomial)
from bernstein import catalog

from conftest import (bernstein_pool, mixed_table, nuclear_table,
                      rand_combination, rand_scalar, rand_unit_element)

F = Fraction


def test_analyze_not_train_golden():
    table = catalog.example_not_train()
    a = table.element_from({"e": 1, "u": 1, "v": 1})
    res = analyze_element(a)
    assert res.degree == 3
    assert res.minimal_poly == UnivariatePoly([0, 0, F(3, 2), F(-5, 2), 1])
    assert res.right_nil_index is None and not res.is_right_nilpotent
    assert len(res.power_basis) == 3
    assert minimal_poly_form_check(res)


def test_analyze_degenerate_elements():
    table = catalog.example_not_train()
    zero = analyze_element(table.zero())
    assert (zero.degree, zero.minimal_poly, zero.right_nil_index) == \
        (0, UnivariatePoly.x(), 2)
    e = analyze_element(table.element_from({"e": 1}))
    assert (e.degree, e.minimal_poly) == (1, UnivariatePoly([0, -1, 1]))
    u = analyze_element(table.element_from({"u": 1}))
    assert (u.degree, u.minimal_poly, u.right_nil_index) == \
        (1, UnivariatePoly([0, 0, 1]), 2)
    for res in (zero, e, u):
        assert minimal_poly_form_check(res)


def test_nil_index_on_shift():
    table = catalog.shift_up_truncated(3)
    x = table.element_from({"u1": 1, "v": 1})
    res = analyze_element(x)
    assert res.right_nil_index == 4
    assert (x ** 3).is_zero() is False and (x ** 4).is_zero()


def test_form_check_across_pool():
    rng = random.Random(41)
    for _ in range(10):
        table = bernstein_pool(rng)
        x = rand_unit_element(table, rng)
        assert minimal_poly_form_check(analyze_element(x))


def test_form_check_weight_zero_branch():
    # u + v has uv = u here, so its powers stabilise at 2u: the minimal
    # polynomial is X^3 - X^2, not X^3, although the weight is zero.
    table = catalog.example_not_train()
    x = table.element_from({"u": 1, "v": 1})
    res = analyze_element(x)
    assert x.weight() == 0
    assert (res.degree, res.right_nil_index) == (2, None)
    assert res.minimal_poly == UnivariatePoly([0, 0, -1, 1])
    assert res.minimal_poly.coeff(1) == 0
    assert minimal_poly_form_check(res)


def test_train_f_matches_closed_form():
    rng = random.Random(42)
    for _ in range(6):
        table = bernstein_pool(rng, max_dim=9)
        x = rand_unit_element(table, rng)
        for k in range(3, 7):
            direct = poly_eval(x, train_polynomial(k, x.weight()))
            assert train_f(x, k) == direct
    with pytest.raises(AlgebraError):
        train_f(x, 2)
    with pytest.raises(AlgebraError):
        train_polynomial(2)


def test_train_f_vanishes_on_jordan():
    rng = random.Random(43)
    for table in (nuclear_table(), mixed_table(), catalog.constant_algebra()):
        for _ in range(8):
            x = rand_unit_element(table, rng)
            assert train_f(x, 3).is_zero()


def test_train_element_ranks():
    three = catalog.three_dim_alpha(F(3, 2))
    gen = three.element_from({"e": 1, "u1": 2, "v1": 1})
    assert train_element_rank(gen) == 4
    other = catalog.three_dim_alpha(F(2))
    assert train_element_rank(other.element_from({"e": 1, "u1": 2, "v1": 1})) \
        is None
    free = catalog.free_single_truncated(5)
    a = free.element_from({"e": 1, "u1": 2, "v1": 1})
    assert train_element_rank(a) == 6
    assert analyze_element(a).minimal_poly == train_polynomial(6)
    assert train_element_rank(three.element_from({"e": 1})) == 3
    const = catalog.constant_algebra()
    assert train_element_rank(const.element_from({"e": 1, "v": 1})) == 3


def test_not_train_has_no_train_elements_beyond_bound():
    table = catalog.example_not_train()
    a = table.element_from({"e": 1, "u": 1, "v": 1})
    for k in range(3, 9):
        assert not train_f(a, k).is_zero()
    assert train_element_rank(a) is None


def test_singly_generated_free_round_trip():
    free = catalog.free_single_truncated(6)
    a = free.element_from({"e": 1, "u1": 2, "v1": 1})
    out, emb = singly_generated_subalgebra(a)
    assert out == free
    assert [repr(x) for x in emb[:1]] == ["e"]
    betas = (F(1), F(-1, 2), ZERO)
    bent = catalog.free_single_truncated(5, betas)
    b = bent.element_from({"e": 1, "u1": 2, "v1": 1})
    out2, _ = singly_generated_subalgebra(b)
    assert out2 == bent


def test_singly_generated_small_degrees():
    table = catalog.free_single_truncated(6)
    e = table.element_from({"e": 1})
    out, emb = singly_generated_subalgebra(e)
    assert out.dim == 1 and emb == [e]
    const = catalog.constant_algebra()
    c = const.element_from({"e": 1, "v": 3})
    out, emb = singly_generated_subalgebra(c)
    assert out.labels == ("e", "v1") and out.dim == 2
    assert emb[0] == c * c and emb[1] == c - c * c
    three = catalog.three_dim_alpha(F(5))
    g = three.element_from({"e": 1, "u1": 2, "v1": 1})
    out, emb = singly_generated_subalgebra(g)
    assert out == three
    assert emb[0] == g ** 2 and emb[1] == g ** 3 - g ** 2


def test_singly_generated_embedding_is_multiplicative():
    rng = random.Random(44)
    for _ in range(6):
        table = bernstein_pool(rng, max_dim=9)
        a = rand_unit_element(table, rng)
        out, emb = singly_generated_subalgebra(a)
        for i in range(out.dim):
            for j in range(i, out.dim):
                image = table.zero()
                for idx, c in out.product_vector(i, j).items():
                    image = image + emb[idx].scale(c)
                assert emb[i] * emb[j] == image


def test_elementary_square_law():
    table = catalog.elementary_algebra(2)
    rng = random.Random(45)
    for _ in range(10):
        x = rand_unit_element(table, rng)
        assert x * x == x.scale(x.weight())
        assert analyze_element(x).degree == 1
        assert train_element_rank(x) == 3


# --- composition of polynomial maps -----------------------------------------
#
# Model commutative nonassociative ring over Q with basis y^a x^k and
#     (y^a x^k)(y^b x^j) = y^(a+b) x^(k+j)                  if min(k, j) <= 1
#                        = (y^(a+b+k) x^j + y^(a+b+j) x^k)/2   otherwise,
# the universal setting for power products of a single element.  Elements
# are dicts {(a, k): coefficient}.

def _model_mul(p, q):
    out = {}
    for (a, k), c1 in p.items():
        for (b, j), c2 in q.items():
            c = c1 * c2
            if k >= 2 and j >= 2:
                for mono in ((a + b + k, j), (a + b + j, k)):
                    out[mono] = out.get(mono, ZERO) + c * HALF
            else:
                mono = (a + b, k + j)
                out[mono] = out.get(mono, ZERO) + c
    return {m: c for m, c in out.items() if c}


def _model_eval(poly, elem):
    assert poly.constant_term == 0
    power = dict(elem)
    out = {}
    for i in range(1, poly.degree + 1):
        c = poly.coeff(i)
        if c:
            for m, v in power.items():
                out[m] = out.get(m, ZERO) + c * v
        if i < poly.degree:
            power = _model_mul(power, elem)
    return {m: c for m, c in out.items() if c}


def _model_weight(p):
    """The specialisation x -> y, a ring map onto Q[y]."""
    coeffs = {}
    for (a, k), c in p.items():
        coeffs[a + k] = coeffs.get(a + k, ZERO) + c
    top = max(coeffs, default=0)
    return UnivariatePoly([coeffs.get(i, ZERO) for i in range(top + 1)])


def _rand_poly(rng, max_deg=4):
    while True:
        coeffs = [ZERO] + [rand_scalar(rng) for _ in range(max_deg)]
        p = UnivariatePoly(coeffs)
        if p.degree >= 1:
            return p


def test_model_weight_map_is_multiplicative():
    rng = random.Random(46)
    for _ in range(40):
        p = {(rng.randint(0, 3), rng.randint(0, 4)): rand_scalar(rng)
             for _ in range(3)}
        q = {(rng.randint(0, 3), rng.randint(0, 4)): rand_scalar(rng)
             for _ in range(3)}
        lhs = _model_weight(_model_mul(p, q))
        rhs = _model_weight(p) * _model_weight(q)
        assert lhs == rhs


def test_composed_polynomials_never_vanish_in_model():
    rng = random.Random(47)
    x = {(0, 1): ONE}
    for _ in range(60):
        p, q = _rand_poly(rng), _rand_poly(rng)
        value = _model_eval(q, _model_eval(p, x))
        assert value, (p, q)
        composed = UnivariatePoly([ZERO])
        for i in range(1, q.degree + 1):
            if q.coeff(i):
                composed = composed + q.coeff(i) * p ** i
        assert _model_weight(value) == composed
        assert composed.degree == p.degree * q.degree


def test_model_evaluation_matches_algebra_powers():
    rng = random.Random(48)
    x = {(0, 1): ONE}
    tables = [catalog.free_single_truncated(7), mixed_table(),
              catalog.zhevlakov_bernstein(3, 2)]
    for table in tables:
        for _ in range(12):
            a = rand_unit_element(table, rng)
            p, q = _rand_poly(rng, 3), _rand_poly(rng, 3)
            model = _model_eval(q, _model_eval(p, x))
            image = table.zero()
            for (_, k), c in model.items():
                image = image + (a ** k).scale(c)
            assert image == poly_eval(poly_eval(a, p), q)
