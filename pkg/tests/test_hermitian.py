"""Tests for Hermitian biforms: rank, signature, norm products, and bounds."""

from fractions import Fraction

import pytest

from macaulay.binom import shift_apply
from macaulay.hermitian import (
    GaussianRational,
    HermitianBiform,
    SignedNorm,
    biform_from_squares,
    biform_from_terms,
    biform_rank,
    biform_signature,
    biform_terms,
    decompose,
    divide_norm_power,
    find_min_sos_exponent,
    format_biform,
    is_sum_of_squares,
    multiply_norm_power,
    multiply_signed_norm,
    parse_biform,
    product_rank_interval,
    product_rank_interval_closed_form,
    recompose_squares,
    sos_max_negative_part,
    sos_min_positive_part,
    sos_rank_interval,
    verify_ideal_containment,
    verify_product_rank_bounds,
    zero_biform,
)
from macaulay.oracle import (
    congruence_transform,
    random_hermitian_instance,
    random_invertible_matrix,
    sos_witness,
)
from macaulay.poly import HomogPoly, monomial_poly, variable

i = GaussianRational(0, 1)


def gauss(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


def test_gaussian_rational_field_ops():
    a = gauss(Fraction(1, 2), 3)
    b = gauss(2, -1)
    assert a + b == gauss(Fraction(5, 2), 2)
    assert a * b == gauss(4, Fraction(11, 2))
    assert (a / b) * b == a
    assert a.conjugate().im == -3
    assert (a * a.conjugate()).is_real
    assert str(gauss(1, -2)) == "1-2i"
    assert str(gauss(0, 1)) == "1i"
    with pytest.raises(ZeroDivisionError):
        a / gauss(0)


def test_gaussian_rational_int_parts_stay_exact():
    a = GaussianRational(3, 4)
    b = GaussianRational(1, 2)
    q = a / b
    assert isinstance(q.re, Fraction) and q * b == a
    assert (a / 2) * 2 == a


def test_biform_from_terms_worked_values():
    b = biform_from_terms(2, 1, [((1, 0), (1, 0), 1)])
    assert b.matrix[0][0] == 1 and not b.matrix[1][1]

    signed = biform_from_terms(2, 1, [((1, 0), (1, 0), 1), ((0, 1), (0, 1), -1)])
    assert signed.matrix[0][0] == 1 and signed.matrix[1][1] == -1

    cross = biform_from_terms(2, 1, [((1, 0), (0, 1), 1), ((0, 1), (1, 0), 1)])
    assert biform_signature(cross) == (1, 1)


def test_biform_from_terms_rejects_bad_input():
    with pytest.raises(ValueError):
        biform_from_terms(2, 1, [((1, 0), (0, 1), 1)])  # not Hermitian
    with pytest.raises(ValueError):
        biform_from_terms(2, 1, [((2, 0), (1, 1), 1)])  # wrong degree
    with pytest.raises(ValueError):
        biform_from_terms(2, 1, [((1, 0), (1, 0), i)])  # imaginary diagonal


def test_biform_rank_worked_values():
    assert biform_rank(zero_biform(2, 1)) == 0
    diag = biform_from_terms(2, 1, [((1, 0), (1, 0), 1), ((0, 1), (0, 1), -1)])
    assert biform_rank(diag) == 2
    product = multiply_signed_norm(biform_from_terms(2, 1, [((1, 0), (1, 0), 1)]), (2, 0))
    assert [row[k] for k, row in enumerate(product.matrix)] == [1, 1, 0]
    assert biform_rank(product) == 2


def test_biform_signature_worked_values():
    diag = biform_from_terms(2, 1, [((1, 0), (1, 0), 1), ((0, 1), (0, 1), -1)])
    assert biform_signature(diag) == (1, 1)
    offd = biform_from_terms(2, 1, [((1, 0), (0, 1), 1), ((0, 1), (1, 0), 1)])
    assert biform_signature(offd) == (1, 1)
    ident = biform_from_terms(2, 1, [((1, 0), (1, 0), 1), ((0, 1), (0, 1), 1)])
    assert biform_signature(ident) == (2, 0)


def test_signature_of_zero_diagonal_matrices():
    # [[0, i], [-i, 0]] has eigenvalues +-1
    b = biform_from_terms(2, 1, [((1, 0), (0, 1), i), ((0, 1), (1, 0), -i)])
    assert biform_signature(b) == (1, 1)
    # adjacency matrix of the triangle: eigenvalues 2, -1, -1
    pairs = [((2, 0), (1, 1)), ((2, 0), (0, 2)), ((1, 1), (0, 2))]
    terms = []
    for a, c in pairs:
        terms += [(a, c, 1), (c, a, 1)]
    tri = biform_from_terms(2, 2, terms)
    assert biform_signature(tri) == (1, 2)


def test_signature_rank_consistency_with_elimination():
    for seed in range(30):
        form = random_hermitian_instance(2 + seed % 3, 1 + seed % 2, seed=seed * 7 + 1)
        sig = biform_signature(form)
        assert sig.p + sig.q == biform_rank(form)


def test_decompose_worked_values():
    diag = biform_from_terms(2, 1, [((1, 0), (1, 0), 1), ((0, 1), (0, 1), -1)])
    terms = decompose(diag)
    assert [(t.weight, t.poly.terms) for t in terms] == [
        (Fraction(1), {(1, 0): GaussianRational(1)}),
        (Fraction(-1), {(0, 1): GaussianRational(1)}),
    ]
    assert decompose(zero_biform(2, 2)) == []


def test_decompose_folds_perfect_square_weights():
    quad = biform_from_terms(2, 1, [((1, 0), (1, 0), 4)])
    ((w, p),) = decompose(quad)
    assert w == 1 and p.terms == {(1, 0): GaussianRational(2)}
    # 3 is not a sum of two rational squares, so the weight must survive
    triple = biform_from_terms(2, 1, [((1, 0), (1, 0), 3)])
    ((w, p),) = decompose(triple)
    assert w == 3 and p.terms == {(1, 0): GaussianRational(1)}


def test_decompose_recompose_round_trip():
    for seed in range(25):
        form = random_hermitian_instance(2 + seed % 3, 1 + seed % 2, seed=seed * 13 + 5)
        terms = decompose(form)
        assert recompose_squares(form.n_vars, form.half_degree, terms) == form
        sig = biform_signature(form)
        assert sum(1 for t in terms if t.weight > 0) == sig.p
        assert sum(1 for t in terms if t.weight < 0) == sig.q


def test_signature_invariant_under_congruence():
    for seed in range(20):
        form = random_hermitian_instance(2, 1 + seed % 3, seed=seed * 11 + 3)
        c = random_invertible_matrix(form.dim, seed=seed * 17 + 2)
        assert biform_signature(congruence_transform(form, c)) == biform_signature(form)


def test_signature_additive_under_direct_sum():
    a = random_hermitian_instance(2, 1, seed=11)   # dim 2
    b = random_hermitian_instance(2, 2, seed=12)   # dim 3
    dim = a.dim + b.dim
    rows = [[GaussianRational() for _ in range(dim)] for _ in range(dim)]
    for r in range(a.dim):
        for c in range(a.dim):
            rows[r][c] = a.matrix[r][c]
    for r in range(b.dim):
        for c in range(b.dim):
            rows[a.dim + r][a.dim + c] = b.matrix[r][c]
    block = HermitianBiform(2, 4, rows)  # dim 5 basis hosts the block matrix
    sa, sb, sblock = biform_signature(a), biform_signature(b), biform_signature(block)
    assert sblock == (sa.p + sb.p, sa.q + sb.q)


def _multiply_by_variable_square(form, j, sign):
    n, d = form.n_vars, form.half_degree
    terms = []
    for alpha, beta, coeff in biform_terms(form):
        up_a = alpha[:j] + (alpha[j] + 1,) + alpha[j + 1:]
        up_b = beta[:j] + (beta[j] + 1,) + beta[j + 1:]
        terms.append((up_a, up_b, sign * coeff))
    return biform_from_terms(n, d + 1, terms)


def test_multiply_signed_norm_matches_termwise_oracle():
    for seed in range(12):
        n = 2 + seed % 3
        form = random_hermitian_instance(n, 1, seed=seed * 19 + 4)
        for s in range(n + 1):
            fast = multiply_signed_norm(form, (s, n - s))
            term_products = []
            for j in range(n):
                sign = 1 if j < s else -1
                term_products.extend(biform_terms(_multiply_by_variable_square(form, j, sign)))
            assert biform_from_terms(n, form.half_degree + 1, term_products) == fast


def test_multiply_signed_norm_worked_values():
    b = biform_from_terms(2, 1, [((1, 0), (1, 0), 1)])
    assert biform_rank(multiply_signed_norm(b, SignedNorm(2, 0))) == 2
    assert multiply_signed_norm(zero_biform(2, 1), (2, 0)).is_zero()
    mixed = multiply_signed_norm(b, (1, 1))
    assert biform_signature(mixed) == (1, 1)
    with pytest.raises(ValueError):
        multiply_signed_norm(b, (2, 1))


def test_multiply_norm_power_worked_values():
    b = biform_from_terms(2, 1, [((1, 0), (1, 0), 1)])
    assert biform_rank(multiply_norm_power(b, 1)) == 2
    assert multiply_norm_power(zero_biform(2, 1), 3).is_zero()
    signed = biform_from_terms(2, 1, [((1, 0), (1, 0), 1), ((0, 1), (0, 1), -1)])
    product = multiply_norm_power(signed, 1)
    assert biform_signature(product) == (1, 1)
    assert biform_rank(product) == 2


def test_divide_norm_power_round_trip():
    for seed in range(10):
        n = 2 + seed % 2
        form = random_hermitian_instance(n, 1 + seed % 2, seed=seed * 23 + 9)
        for power in (1, 2):
            product = multiply_norm_power(form, power)
            assert divide_norm_power(product, power) == form


def test_divide_norm_power_detects_non_divisible():
    quartic = biform_from_terms(2, 2, [((2, 0), (2, 0), 1)])  # |z1|^4 alone
    assert divide_norm_power(quartic, 1) is None


def test_product_rank_interval_worked_values():
    assert product_rank_interval(3, 4) == (6, 12)
    assert product_rank_interval(1, 2) == (2, 2)
    with pytest.raises(ValueError):
        product_rank_interval(0, 3)


def test_product_rank_interval_closed_form():
    for n in range(2, 7):
        for r in range(1, n):
            assert product_rank_interval_closed_form(r, n) == (r * n - r * (r - 1), r * n)
            assert product_rank_interval(r, n) == product_rank_interval_closed_form(r, n)
    assert product_rank_interval_closed_form(1, 5) == (5, 5)
    with pytest.raises(ValueError):
        product_rank_interval_closed_form(5, 4)


def test_sos_min_positive_part_worked_values():
    assert sos_min_positive_part(3, 4, 1) == Fraction(9, 4)
    assert sos_min_positive_part(1, 2, 1) == 1
    assert sos_min_positive_part(0, 3, 2) == 0


def test_sos_max_negative_part_worked_values():
    assert sos_max_negative_part(1, 2, 1) == 0
    assert sos_max_negative_part(3, 4, 1) == 3
    # independent recomputation straight from the shift operator
    expected = 1 * 6 - 1 - shift_apply(1, 2, -1, 1)
    assert sos_max_negative_part(1, 3, 2) == expected
    # the two subscript conventions agree at l = 1 and may differ beyond
    assert sos_max_negative_part(3, 4, 1, alternate=True) == 3
    alt = 1 * 6 - 1 - shift_apply(1, 2, -2, 1)
    assert sos_max_negative_part(1, 3, 2, alternate=True) == alt


def test_sos_rank_interval_worked_values():
    assert sos_rank_interval(1, 0, 2, 1) == (2, 2)
    low, high = sos_rank_interval(2, 1, 3, 1)
    assert low == shift_apply(3, 2, 0, 1) - 3 and high == 6
    assert sos_rank_interval(0, 1, 3, 1)[1] == 0


def test_is_sum_of_squares_worked_values():
    psd = biform_from_terms(2, 1, [((1, 0), (1, 0), 1), ((0, 1), (0, 1), 1)])
    assert is_sum_of_squares(psd)
    indef = biform_from_terms(2, 1, [((1, 0), (1, 0), 1), ((0, 1), (0, 1), -1)])
    assert not is_sum_of_squares(indef)
    assert not is_sum_of_squares(multiply_norm_power(indef, 1))


def test_find_min_sos_exponent_on_split_form():
    # |z1|^2 - |z2|^2 is negative at (0, 1), so no norm power can help
    indef = biform_from_terms(2, 1, [((1, 0), (1, 0), 1), ((0, 1), (0, 1), -1)])
    assert find_min_sos_exponent(indef, 5) is None
    psd = biform_from_terms(2, 1, [((1, 0), (1, 0), 1), ((0, 1), (0, 1), 1)])
    assert find_min_sos_exponent(psd, 3) == 1


def _diag_form(weights):
    # diagonal biform on the degree-2 monomials of 2 variables
    basis = [(2, 0), (1, 1), (0, 2)]
    return biform_from_terms(2, 2, [(m, m, w) for m, w in zip(basis, weights)])


def test_find_min_sos_exponent_matches_convolution_oracle():
    # For diagonal M in two variables the product with ||z||^(2l) stays
    # diagonal, with entries the binomial convolution of the weights, so
    # positive semidefiniteness is just nonnegativity of those sums.
    from math import comb

    weights = [Fraction(5, 4), Fraction(-3, 2), Fraction(5, 4)]
    expected = None
    for l in range(1, 9):
        entries = []
        for g1 in range(l + 3):
            total = sum(comb(l, g1 - k) * weights[2 - k] for k in range(3) if 0 <= g1 - k <= l)
            entries.append(total)
        if all(e >= 0 for e in entries):
            expected = l
            break
    assert expected == 3
    assert find_min_sos_exponent(_diag_form(weights), 8) == expected


def test_sos_persists_under_extra_norm_factors():
    form = _diag_form([Fraction(3, 2), Fraction(-1), Fraction(3, 2)])
    l = find_min_sos_exponent(form, 6)
    assert l == 1
    assert is_sum_of_squares(multiply_norm_power(form, l + 1))


def test_verify_product_rank_bounds():
    b = biform_from_terms(2, 1, [((1, 0), (1, 0), 1)])
    report = verify_product_rank_bounds(b, (2, 0))
    assert report == (2, 2, 2, True)
    with pytest.raises(ValueError):
        verify_product_rank_bounds(zero_biform(2, 1), (2, 0))
    for seed in range(25):
        n = 2 + seed % 3
        form = random_hermitian_instance(n, 1 + seed % 2, seed=seed * 29 + 15)
        if form.is_zero():
            continue
        for s in range(n + 1):
            assert verify_product_rank_bounds(form, (s, n - s)).ok


def test_verify_ideal_containment_positive_only():
    z1, z2 = variable(0, 2), variable(1, 2)
    # all degree-2 "words" z_i * z_j witness (|z1|^2 + |z2|^2) * ||z||^2
    words = [z1 * z1, z1 * z2, z2 * z1, z2 * z2]
    assert verify_ideal_containment([z1, z2], [], words, 1)


def test_verify_ideal_containment_mixed_signs():
    half = Fraction(1, 2)
    c = GaussianRational(half, half)  # |c|^2 == 1/2
    sq1 = monomial_poly((2, 0))
    sq2 = monomial_poly((0, 2))
    cross = monomial_poly((1, 1))
    m_plus = [sq1, c * sq1, sq2, c * sq2]
    m_minus = [cross]
    h = [
        monomial_poly((3, 0)),
        c * monomial_poly((3, 0)),
        c * monomial_poly((2, 1)),
        c * monomial_poly((1, 2)),
        monomial_poly((0, 3)),
        c * monomial_poly((0, 3)),
    ]
    assert verify_ideal_containment(m_plus, m_minus, h, 1)


def test_verify_ideal_containment_rejects_bad_witness():
    z1, z2 = variable(0, 2), variable(1, 2)
    with pytest.raises(ValueError):
        verify_ideal_containment([z1, z2], [], [z1 * z1], 1)


def test_no_witness_exists_for_non_psd_product():
    # sum/difference family whose norm product turns out indefinite: no
    # list of squared norms can ever certify it
    plus = [
        HomogPoly(2, 2, {(2, 0): Fraction(1), (0, 2): Fraction(1)}),
        HomogPoly(2, 2, {(1, 1): Fraction(2)}),
    ]
    minus = [HomogPoly(2, 2, {(2, 0): Fraction(1), (0, 2): Fraction(-1)})]
    base = biform_from_squares(2, 2, plus, minus)
    product = multiply_norm_power(base, 1)
    assert biform_signature(product).q > 0
    assert sos_witness(product) is None
    with pytest.raises(ValueError):
        verify_ideal_containment(plus, minus, [], 1)


def test_biform_serialization_round_trip():
    form = random_hermitian_instance(3, 1, seed=314159)
    text = format_biform(form)
    again = parse_biform(text)
    assert again == form
    assert format_biform(again) == text


def test_parse_biform_hermitian_completion():
    text = (
        '{"n_vars": 2, "d": 1, "terms": ['
        '{"alpha": [1, 0], "beta": [0, 1], "coeff": {"re": "2", "im": "3"}}]}'
    )
    form = parse_biform(text)
    assert form.matrix[0][1] == GaussianRational(2, 3)
    assert form.matrix[1][0] == GaussianRational(2, -3)
    bad = (
        '{"n_vars": 2, "d": 1, "terms": ['
        '{"alpha": [1, 0], "beta": [0, 1], "coeff": {"re": "2", "im": "3"}},'
        '{"alpha": [0, 1], "beta": [1, 0], "coeff": {"re": "2", "im": "3"}}]}'
    )
    with pytest.raises(ValueError):
        parse_biform(bad)
