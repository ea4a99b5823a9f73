from fractions import Fraction as Fr
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dml import moments as M
from dml import tables
from dml.exact import mpq, pochhammer


def poch(x, m):
    out = Fr(1)
    for i in range(m):
        out *= x + i
    return out


def f0_gamma_rebit(k):
    # 945 * 4^(3-2k) * Gamma(2k+2) Gamma(2k+4) / Gamma(4k+10)
    return Fr(945) * Fr(4) ** (3 - 2 * k) * factorial(2 * k + 1) * factorial(2 * k + 3) / factorial(4 * k + 9)


def f0_gamma_qubit(k):
    num = factorial(k) * factorial(k + 1) * factorial(k + 2) * factorial(k + 3)
    return Fr(108972864000 * num, factorial(4 * k + 15))


def f1_oracle(a, n, k):
    """Term-by-term finite sum, written out independently with Fractions."""
    a = Fr(a)
    total = Fr(0)
    for j in range(n + 1):
        total += (4**j * comb(n, j) * poch(a, j) * poch(a + Fr(1, 2), j) * poch(k - j + 1, n - j)
                  * poch(-2 * k - 2 * n - 1 - 5 * a, j) * poch(k + 1 + a, n - j) * poch(k + 1 + 2 * a, n - j))
    return total / (Fr(2) ** (6 * n) * poch(k + 3 * a + Fr(3, 2), n) * poch(2 * k + 6 * a + Fr(5, 2), 2 * n))


class TestPochhammer:
    @pytest.mark.parametrize("x, m, want", [(Fr(3, 2), 2, Fr(15, 4)), (7, 0, 1), (Fr(-15, 2), 2, Fr(195, 4))])
    def test_ascending(self, x, m, want):
        assert pochhammer(x, m) == want

    def test_descending(self):
        assert pochhammer(5, 3, "descending") == 60

    @given(st.fractions(min_value=-20, max_value=20, max_denominator=12), st.integers(0, 12))
    def test_rising_falling_relation(self, x, m):
        assert pochhammer(x, m) == pochhammer(x + m - 1, m, "descending")


class TestUnivariate:
    def test_examples(self):
        assert M.f0_det_moment("1/2", 1) == mpq(1, 2288)
        assert M.f0_det_moment(1, 1) == mpq(1, 3876)
        assert M.f0_det_moment("7/3", 0) == 1

    @pytest.mark.parametrize("k", range(21))
    def test_gamma_products(self, k):
        assert M.f0_det_moment("1/2", k) == f0_gamma_rebit(k)
        assert M.f0_det_moment(1, k) == f0_gamma_qubit(k)


class TestFiniteSum:
    @pytest.mark.parametrize("alpha, n, k, want", [
        ("1/2", 1, 0, Fr(-1, 858)),
        ("1/2", 1, 1, 0),
        ("1/2", 2, 0, Fr(27, 2489344)),
        (1, 1, 0, Fr(-7, 3876)),
        (2, 1, 0, Fr(-49, 21576)),
    ])
    def test_examples(self, alpha, n, k, want):
        assert M.f1_adjustment(alpha, n, k) == want

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from([Fr(1, 2), Fr(1), Fr(2), Fr(0), Fr(3, 4)]), st.integers(0, 5), st.integers(0, 6))
    def test_matches_fraction_oracle(self, a, n, k):
        assert M.f1_adjustment(a, n, k) == f1_oracle(a, n, k)

    def test_printed_third_base_fails(self):
        a = Fr(1, 2)
        assert M.f1_adjustment(a, 1, 0, third_base=a + 2) == Fr(-29, 27456)
        assert M.f1_adjustment(a, 1, 0) == Fr(-1, 858)

    def test_bases_agree_for_complex_case(self):
        # k + 2 + alpha and k + 1 + 2 alpha coincide when alpha = 1
        for n in range(1, 4):
            for k in range(4):
                assert M.f1_adjustment(1, n, k) == M.f1_adjustment(1, n, k, third_base=k + 3)

    def test_rejects_negative_alpha(self):
        with pytest.raises(ValueError):
            M.f1_adjustment("-1/2", 1, 0)


class TestBivariate:
    def test_examples(self):
        assert M.bivariate_moment(1, 1, 1) == Fr(-1, 4576264)
        assert M.bivariate_moment("1/2", 2, 2) == Fr(7, 5696343244800)
        assert M.bivariate_moment("1/2", 13, 0) == Fr(-31283325154283, 736092406055063912488279599166259200)
        assert M.pt_moment("1/2", 3) == Fr(-8363, 66216550400)
        assert M.product_moment("1/2", 1) == 0
        assert M.product_moment("1/2", 6) == Fr(3929, 4158654163938276392103553381781471232)

    @pytest.mark.parametrize("n", range(1, 14))
    def test_reference_tables(self, n):
        assert M.pt_moment("1/2", n) == tables.table_lookup("rebit-pt", n)
        assert M.product_moment("1/2", n) == tables.table_lookup("rebit-product", n)

    @pytest.mark.parametrize("n", range(0, 11))
    def test_classical_limit(self, n):
        assert M.classical_product_moment(n) == M.product_moment(0, n)

    def test_classical_first(self):
        assert M.classical_product_moment(1) == Fr(1, 415800)

    @pytest.mark.parametrize("alpha", ["1/2", "1", "2", "0", "5/3"])
    def test_hypergeometric_oracles(self, alpha):
        for n in range(1, 6):
            assert M.pt_moment(alpha, n) == M.pt_moment_hypergeometric(alpha, n)
            assert M.product_moment(alpha, n) == M.product_moment_hypergeometric(alpha, n)
            for k in range(n, n + 3):
                assert M.f1_adjustment(alpha, n, k) == M.f1_hypergeometric(alpha, n, k)

    def test_deterministic(self):
        assert M.pt_moment("1/2", 9) == M.pt_moment("1/2", 9)
        assert str(M.pt_moment("1/2", 9)) == str(M.f1_adjustment("1/2", 9, 0))


class TestRationalFunctions:
    @pytest.mark.parametrize("key", sorted(tables.RATIONAL_FUNCTIONS))
    def test_closed_forms(self, key):
        family, quantity, n = key
        alpha = "1/2" if family == "rebit" else 1
        for k in range(13):
            want = tables.rational_function(family, quantity, n, k)
            if quantity == "f1":
                got = M.f1_adjustment(alpha, n, k)
            elif quantity == "f2":
                got = M.f2_central_adjustment(alpha, n, k)
            else:
                got = M.transformed_unit_interval_factor(alpha, k, order=n)
            assert got == want, (key, k)

    def test_unit_interval_first(self):
        assert M.transformed_unit_interval_factor("1/2", 0) == Fr(6736, 7293)

    def test_f2_examples(self):
        for k in range(7):
            assert M.f2_central_adjustment("1/2", 0, k) == 1 == M.r_ratio("1/2", 0, k)
            assert M.f2_central_adjustment("1/2", 1, k) == Fr(-1, 16 * (4 * k + 13) * (k + 3))
        k = 3
        want = Fr((k + 12) * (2 * k + 7), 256 * (k + 3) * (k + 4) * (4 * k + 11) * (4 * k + 13) * (4 * k + 17))
        assert M.f2_central_adjustment("1/2", 2, 3) == want

    @pytest.mark.parametrize("alpha", ["1/2", "1"])
    def test_decomposition(self, alpha):
        for n in range(6):
            for k in range(6):
                rhs = sum(comb(n, j) * M.f2_central_adjustment(alpha, j, k + n - j) * M.r_ratio(alpha, n - j, k)
                          for j in range(n + 1))
                assert M.f1_adjustment(alpha, n, k) == rhs


class TestNumerators:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_rebit_array(self, n):
        p = M.numerator_polynomial("rebit", n)
        assert p.integer_coefficients() == tables.REBIT_NUMERATORS[n]
        assert p.degree == 3 * n

    @pytest.mark.parametrize("n", range(1, 5))
    def test_qubit_array(self, n):
        assert M.numerator_polynomial("qubit", n).integer_coefficients() == tables.QUBIT_NUMERATORS[n]

    def test_examples(self):
        assert M.numerator_polynomial("rebit", 1).integer_coefficients() == [-16, 5, 9, 2]
        assert M.numerator_polynomial("qubit", 1).integer_coefficients() == [-42, -1, 6, 1]
        assert M.numerator_polynomial("rebit", 4).leading == 16
        q3 = M.numerator_polynomial("qubit", 3)
        assert q3.leading == 1 and q3[8] == 27

    def test_ratio_recovers_f1(self):
        for fam, alpha in (("rebit", "1/2"), ("qubit", 1)):
            p = M.numerator_polynomial(fam, 3)
            for k in (Fr(1, 3), 7, 20):
                assert p(k) / M.denominator_value(fam, 3, k) == M.f1_adjustment(alpha, 3, k)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_leading_coefficients(self, n):
        p = M.numerator_polynomial("rebit", n)
        for depth in range(6):
            if depth >= 4 and n < 2:
                continue
            assert M.leading_coefficients_rebit(n, depth) == p[3 * n - depth]

    def test_leading_examples(self):
        assert M.leading_coefficients_rebit(2, 2) == 203
        assert M.leading_coefficients_rebit(2, 4) == 709
        assert M.leading_coefficients_rebit(2, 5) == 2940

    def test_leading_out_of_range(self):
        with pytest.raises(ValueError):
            M.leading_coefficients_rebit(2, 6)
        with pytest.raises(ValueError):
            M.leading_coefficients_rebit(1, 4)


class TestSixBySix:
    def test_examples(self):
        assert M.sixbysix_adjustment("rebit_retrit", 1, 0) == Fr(-13, 2104960)
        assert M.sixbysix_adjustment("qubit_qutrit", 1, 0) == Fr(-8, 1124097)
        den = 331776 * 5 * 11 * 13 * 14 * 16 * 23 * 25 * 29 * 31
        assert M.sixbysix_adjustment("rebit_retrit", 2, 0) == Fr(3715740, den)

    @pytest.mark.parametrize("kind, n", [("rebit_retrit", 3), ("qubit_qutrit", 2), ("other", 1)])
    def test_unsupported(self, kind, n):
        with pytest.raises(ValueError):
            M.sixbysix_adjustment(kind, n, 0)


class TestNonGeneric:
    @pytest.mark.parametrize("beta", [1, 2, 4])
    def test_matches_double_sum(self, beta):
        for n in range(7):
            for k in range(7):
                assert M.nongeneric_moment(beta, n, k) == M.nongeneric_brute_oracle(beta, n, k)

    def test_examples(self):
        assert M.nongeneric_moment(2, 1, 0) == Fr(-1, 216)
        assert M.nongeneric_brute_oracle(2, 1, 0) == Fr(-1, 216)
        assert M.nongeneric_moment(3, 0, 0) == 1
        assert M.nongeneric_moment(4, 1, 1) == M.nongeneric_brute_oracle(4, 1, 1)
        for k in range(4):
            assert M.nongeneric_brute_oracle(3, 0, k) == M.nongeneric_delta(3, k)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(1, 8), st.integers(0, 8))
    def test_first_moment_display(self, beta, k):
        assert M.nongeneric_first_moment(beta, k) == M.nongeneric_moment(beta, 1, k)


class TestTables:
    def test_lookup(self):
        assert tables.table_lookup("rebit-pt", 1) == Fr(-1, 858)
        assert tables.table_lookup("rebit-product", 1) == 0
        assert tables.table_lookup("rebit-boundary-pt", 1) == Fr(-5, 2376)
        assert len(tables.table_rows("rebit-boundary-pt")) == 10

    def test_errors(self):
        with pytest.raises(IndexError):
            tables.table_lookup("rebit-pt", 14)
        with pytest.raises(KeyError):
            tables.table_lookup("nope", 1)

    @pytest.mark.parametrize("table", ["rebit-pt", "rebit-product", "rebit-boundary-pt"])
    def test_decimals_consistent(self, table):
        for n, q in tables.table_rows(table):
            d = tables.table_decimal(table, n)
            assert abs(float(q) - d) <= 1e-5 * abs(d) + 1e-300
