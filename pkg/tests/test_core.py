from fractions import Fraction

import pytest

from cotoeplitz import (
    Element,
    FormSpec,
    GaussianRational,
    I,
    ManinPlane,
    ONE,
    ProjectionPair,
    TensorElement,
    WeightFamily,
    comul_extend,
    make_form,
    pair_extend,
    pi_action,
    star_extend,
)
from cotoeplitz.core import DividedKey, ManinKey, MatrixKey, NegDegKey
from cotoeplitz.errors import (
    ContextMismatch,
    KeyOutOfRange,
    NotInSubcoalgebra,
    StarUndefined,
    WrongCoalgebra,
)
from cotoeplitz.verification import random_element, random_scalar

FACTORIAL = WeightFamily("factorial")


def x(n):
    return DividedKey(n)


def basis(coalgebra, key):
    return Element.basis(coalgebra, key)


# -- elements ----------------------------------------------------------------

def test_addition_cancels_and_prunes(divpow):
    e = Element(divpow, {x(1): ONE, x(2): ONE})
    f = basis(divpow, x(2)) * GaussianRational(-1)
    total = e + f
    assert total == basis(divpow, x(1))
    assert x(2) not in total.support()


def test_scaling_by_zero_gives_empty_support(divpow):
    e = basis(divpow, x(3)) * GaussianRational(0)
    assert e.is_zero()
    assert len(e) == 0


def test_scalar_distributes(manin):
    e = Element(manin, {ManinKey(1, 0): ONE, ManinKey(0, 1): ONE})
    scaled = e * I
    assert scaled.coefficient(ManinKey(1, 0)) == I
    assert scaled.coefficient(ManinKey(0, 1)) == I


def test_context_mismatch_raises(divpow, negdeg3):
    with pytest.raises(ContextMismatch):
        basis(divpow, x(1)) + basis(negdeg3, NegDegKey(1))
    with pytest.raises(ContextMismatch):
        basis(ManinPlane(ONE), ManinKey(0, 0)) + basis(
            ManinPlane(GaussianRational(Fraction(2, 3))), ManinKey(0, 0)
        )


def test_key_validation_on_construction(divpow, negdeg3, matrix3):
    with pytest.raises(WrongCoalgebra):
        Element(divpow, {ManinKey(1, 0): ONE})
    with pytest.raises(KeyOutOfRange):
        Element(negdeg3, {NegDegKey(4): ONE})
    with pytest.raises(KeyOutOfRange):
        Element(matrix3, {MatrixKey(4, 1): ONE})
    with pytest.raises(KeyOutOfRange):
        DividedKey(-1)


def test_duplicate_keys_are_summed(divpow):
    e = Element(divpow, [(x(1), ONE), (x(1), GaussianRational(2))])
    assert e.coefficient(x(1)) == GaussianRational(3)


# -- comultiplication -----------------------------------------------------------

def test_comul_examples(manin, divpow):
    t = comul_extend(manin, basis(manin, ManinKey(2, 3)))
    assert t == TensorElement(manin, {(ManinKey(2, 3), ManinKey(5, 0)): ONE})

    t = comul_extend(divpow, basis(divpow, x(0)))
    assert t == TensorElement(divpow, {(x(0), x(0)): ONE})

    t = comul_extend(divpow, basis(divpow, x(1)) * GaussianRational(2))
    expected = TensorElement(
        divpow,
        {(x(0), x(1)): GaussianRational(2), (x(1), x(0)): GaussianRational(2)},
    )
    assert t == expected


def test_comul_is_linear(divpow, rng):
    window = divpow.window_keys(10)
    for _ in range(30):
        alpha = random_scalar(rng)
        e = random_element(rng, divpow, window)
        f = random_element(rng, divpow, window)
        lhs = comul_extend(divpow, e * alpha + f)
        rhs = comul_extend(divpow, e) * alpha + comul_extend(divpow, f)
        assert lhs == rhs


def test_comul_context_mismatch(divpow, negdeg3):
    with pytest.raises(ContextMismatch):
        comul_extend(divpow, basis(negdeg3, NegDegKey(0)))


# -- pairing -------------------------------------------------------------------

def test_pair_examples(divpow):
    form = make_form(FormSpec("diag", FACTORIAL), divpow)
    assert pair_extend(form, basis(divpow, x(2)), basis(divpow, x(2))) == GaussianRational(2)
    assert pair_extend(form, basis(divpow, x(1)), basis(divpow, x(2))).is_zero()

    ones = make_form(FormSpec("diag", WeightFamily("one")), divpow)
    g = basis(divpow, x(1)) * I
    assert pair_extend(ones, g, basis(divpow, x(1))) == -I


def test_pairing_is_sesquilinear(divpow, rng):
    form = make_form(FormSpec("diag", FACTORIAL), divpow)
    window = divpow.window_keys(8)
    for _ in range(30):
        alpha = random_scalar(rng)
        g = random_element(rng, divpow, window)
        f = random_element(rng, divpow, window)
        assert pair_extend(form, g * alpha, f) == alpha.conjugate() * pair_extend(form, g, f)
        assert pair_extend(form, g, f * alpha) == alpha * pair_extend(form, g, f)


# -- contraction against the symbol ---------------------------------------------

def test_pi_action_examples(divpow):
    form = make_form(FormSpec("diag", FACTORIAL), divpow)
    t = TensorElement(divpow, {(x(3), x(2)): ONE})
    assert pi_action(form, basis(divpow, x(2)), t) == basis(divpow, x(3)) * GaussianRational(2)

    assert pi_action(form, basis(divpow, x(2)), TensorElement.zero(divpow)).is_zero()

    t = TensorElement(divpow, {(x(1), x(5)): ONE})
    assert pi_action(form, basis(divpow, x(0)), t).is_zero()


def test_pi_action_factors_through_the_pairing(divpow, rng):
    form = make_form(FormSpec("diag", FACTORIAL), divpow)
    window = divpow.window_keys(8)
    for _ in range(30):
        g = random_element(rng, divpow, window)
        phi = random_element(rng, divpow, window)
        f = random_element(rng, divpow, window)
        tensor = TensorElement(
            divpow,
            [
                ((kp, kf), cp * cf)
                for kp, cp in phi.items()
                for kf, cf in f.items()
            ],
        )
        assert pi_action(form, g, tensor) == phi * pair_extend(form, g, f)


# -- star ------------------------------------------------------------------------

def test_star_examples(negdeg3, matrix3):
    assert star_extend(negdeg3, basis(negdeg3, NegDegKey(2))) == basis(
        negdeg3, NegDegKey(-2)
    )
    starred = star_extend(matrix3, basis(matrix3, MatrixKey(1, 2)) * I)
    assert starred == basis(matrix3, MatrixKey(2, 1)) * (-I)


def test_star_is_an_antilinear_involution(negdeg3, rng):
    window = negdeg3.window_keys()
    for _ in range(30):
        e = random_element(rng, negdeg3, window)
        alpha = random_scalar(rng)
        assert star_extend(negdeg3, star_extend(negdeg3, e)) == e
        assert star_extend(negdeg3, e * alpha) == star_extend(negdeg3, e) * alpha.conjugate()


def test_star_undefined(manin, divpow):
    with pytest.raises(StarUndefined):
        star_extend(manin, basis(manin, ManinKey(0, 0)))
    with pytest.raises(StarUndefined):
        star_extend(divpow, basis(divpow, x(0)))


# -- projections -------------------------------------------------------------------

def test_projection_examples(divpow):
    pair = ProjectionPair(divpow, [x(0), x(1)])
    e = basis(divpow, x(0)) + basis(divpow, x(2)) * GaussianRational(3)
    assert pair.project(e) == basis(divpow, x(0))

    inside = basis(divpow, x(0)) + basis(divpow, x(1))
    assert pair.project(inside) == inside

    empty = ProjectionPair(divpow, [])
    assert empty.project(e).is_zero()


def test_projection_idempotent_and_inclusion(divpow, rng):
    window = divpow.window_keys(8)
    for _ in range(30):
        subset = rng.sample(window, rng.randint(0, len(window)))
        pair = ProjectionPair(divpow, subset)
        e = random_element(rng, divpow, window)
        once = pair.project(e)
        assert pair.project(once) == once
        if subset:
            inner = random_element(rng, divpow, subset)
            assert pair.project(pair.include(inner)) == inner


def test_inclusion_surfaces_offending_keys(divpow):
    pair = ProjectionPair(divpow, [x(0)])
    bad = basis(divpow, x(1)) + basis(divpow, x(2))
    with pytest.raises(NotInSubcoalgebra) as info:
        pair.include(bad)
    assert info.value.keys == ("x_1", "x_2")


def test_full_projection_contains_everything(manin):
    pair = ProjectionPair.full(manin)
    assert pair.contains(ManinKey(100, 100))
    e = basis(manin, ManinKey(3, 4))
    assert pair.include(e) == e
    assert pair.project(e) == e


# -- pruning invariant --------------------------------------------------------------

def test_no_operation_stores_zero_coefficients(divpow, rng):
    window = divpow.window_keys(8)
    for _ in range(50):
        e = random_element(rng, divpow, window)
        f = random_element(rng, divpow, window)
        for value in (e + f, e - f, e - e, e * random_scalar(rng)):
            assert all(coeff for _, coeff in value.items())
        tensor = comul_extend(divpow, e - e)
        assert tensor.is_zero()
