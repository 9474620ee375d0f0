"""Shared builders for the test suite: the worked examples and seeded
random instance generators."""

from fractions import Fraction

from dualform import (MetricSpace, QuadraticForm, Matrix, make_field, rank)

FQ = make_field("rational")
F2 = make_field("prime", 2)
F3 = make_field("prime", 3)
F5 = make_field("prime", 5)

ALL_FIELDS = (FQ, F2, F3, F5)


def paper5():
    """Worked 5-dimensional example: S = <e1, e2, e3> inside F^5."""
    basis = [[1 if i == j else 0 for j in range(5)] for i in range(3)]
    form = QuadraticForm(FQ, [0, Fraction(1, 2), Fraction(3, 2)],
                         {(1, 2): 2})
    return MetricSpace(FQ, 5, basis, form)


def rad_char2(field):
    """dim V = 3, S = <e1, e2>, Q = x2^2."""
    return MetricSpace(field, 3, [[1, 0, 0], [0, 1, 0]],
                       QuadraticForm(field, [0, 1], {}))


def hyperbolic_gf2():
    return MetricSpace(F2, 2, [[1, 0], [0, 1]],
                       QuadraticForm(F2, [0, 0], {(0, 1): 1}))


def random_scalar(rng, F, nonzero=False):
    while True:
        if F.characteristic() == 0:
            s = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        else:
            s = rng.randrange(F.p)
        if not nonzero or not F.is_zero(F.scalar(s)):
            return F.scalar(s)


def random_vector(rng, F, n):
    return tuple(random_scalar(rng, F) for _ in range(n))


def random_subspace_basis(rng, F, n, m):
    """m independent rows in F^n."""
    while True:
        rows = [random_vector(rng, F, n) for _ in range(m)]
        if m == 0 or rank(Matrix(F, rows, cols=n)) == m:
            return rows


def random_instance(rng, field=None, n_max=8, require_condition=False):
    """Random metric space; radical dimension is randomized by zeroing all
    coefficients that touch a leading block of basis vectors."""
    F = field if field is not None else rng.choice(ALL_FIELDS)
    n = rng.randint(1, n_max)
    m = rng.randint(0, n)
    rows = random_subspace_basis(rng, F, n, m)
    forced = rng.randint(0, m) if rng.random() < 0.5 else 0
    diag = [F.zero if i < forced else random_scalar(rng, F)
            for i in range(m)]
    upper = {}
    for i in range(forced, m):
        for j in range(i + 1, m):
            if rng.random() < 0.6:
                upper[(i, j)] = random_scalar(rng, F)
    inst = MetricSpace(F, n, rows, QuadraticForm(F, diag, upper))
    if require_condition and not inst.radical_condition_holds():
        return random_instance(rng, field, n_max, require_condition)
    return inst


def random_instance_with_condition(rng, field=None, n_max=8):
    return random_instance(rng, field, n_max, require_condition=True)
