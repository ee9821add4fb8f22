#include "qmckay/exact_ring.hpp"

#include <doctest.h>

#include <climits>

using namespace qmckay;

namespace {

// Oracle: [n] = (r^n - s^n)/(r - s) at rational points.
mpq_class qnum_at(int n, const mpq_class& r, const mpq_class& s) {
    auto p = [](mpq_class x, int k) {
        mpq_class out = 1;
        if (k < 0) {
            x = 1 / x;
            k = -k;
        }
        for (int i = 0; i < k; ++i) out *= x;
        return out;
    };
    return (p(r, n) - p(s, n)) / (r - s);
}

mpq_class binom_at(int n, int k, const mpq_class& r, const mpq_class& s) {
    mpq_class num = 1, den = 1;
    for (int i = 1; i <= n; ++i) num *= qnum_at(i, r, s);
    for (int i = 1; i <= k; ++i) den *= qnum_at(i, r, s);
    for (int i = 1; i <= n - k; ++i) den *= qnum_at(i, r, s);
    return num / den;
}

}  // namespace

TEST_CASE("small rationals promote to GMP on overflow") {
    SmallRational a(LLONG_MAX), b(LLONG_MAX);
    mpq_class want = mpq_class(mpz_class(std::to_string(LLONG_MAX))) * 2;
    CHECK((a + b).get() == want);
    mpq_class sq = mpq_class(mpz_class(std::to_string(LLONG_MAX))) * mpz_class(std::to_string(LLONG_MAX));
    CHECK((a * b).get() == sq);
    CHECK((a * b).inverse().get() == 1 / sq);
    CHECK((-SmallRational(LLONG_MIN)).get() == -mpq_class(mpz_class(std::to_string(LLONG_MIN))));
}

TEST_CASE("cyclotomic scalars") {
    for (int n : {3, 4, 5, 8, 12}) {
        CycScalar z = CycScalar::zeta(n), p(1), sum;
        for (int k = 0; k < n; ++k) {
            sum += CycScalar::zeta(n, k);
            p *= z;
        }
        CHECK(p == CycScalar(1));
        CHECK(sum.is_zero());
        CHECK(z * z.inverse() == CycScalar(1));
        CHECK(z.conj() == CycScalar::zeta(n, n - 1));
    }
    CHECK(euler_phi(12) == 4);
    CHECK(CycScalar::zeta(6, 2) == CycScalar::zeta(3));
}

TEST_CASE("two-parameter quantum numbers agree with (r^n - s^n)/(r - s)") {
    const mpq_class r(2), s(3);
    for (int n = -5; n <= 6; ++n) {
        if (n == 0) continue;
        CHECK(rs_specialize(rs_quantum_number(n), r, s).rational() == qnum_at(n, r, s));
    }
    // [-m] = -(rs)^{-m} [m]
    for (int m = 1; m <= 4; ++m)
        CHECK(rs_quantum_number(-m) == -(rs_mono(-2 * m, -2 * m) * rs_quantum_number(m)));
}

TEST_CASE("Gaussian binomials match the factorial quotient and the mirrored recursion") {
    const mpq_class r(2), s(5, 3);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            RSLaurent b = rs_gaussian_binomial(n, k);
            CHECK(rs_specialize(b, r, s).rational() == binom_at(n, k, r, s));
            if (n > 0 && k > 0 && k < n)
                CHECK(b == rs_s(k) * rs_gaussian_binomial(n - 1, k) + rs_r(n - k) * rs_gaussian_binomial(n - 1, k - 1));
            CHECK(b == rs_gaussian_binomial(n, n - k));
        }
    CHECK(rs_gaussian_binomial(3, 4).is_zero());
}

TEST_CASE("string round trip and substitutions") {
    RSLaurent f = rs_mono(1, -1, 0, CycScalar(3)) + rs_mono(-2, 4, 2, CycScalar::zeta(3)) - rs_r(2);
    CHECK(rs_parse(rs_str(f)) == f);
    CHECK(rs_bar(rs_bar(f)) == f);
    CHECK(rs_substitute(rs_r(), 3) == rs_r(3));
    CHECK(rs_substitute(rs_r() + rs_s(), -1) == rs_r(-1) + rs_s(-1));
    CHECK(rs_monomial_sqrt(rs_mono(2, -2)) == rs_mono(1, -1));
    CHECK(rs_pretty(rs_d()) == "(r^-1 s)^(1/2) + (r s^-1)^(1/2)");
}

TEST_CASE("specialization at (q, q^-1)") {
    // r s^{-1} -> q^2, so the doubled q exponent is 4
    QLaurent v = rs_specialize_qq(rs_mono(2, -2));
    REQUIRE(v.terms().size() == 1);
    CHECK(v.terms()[0].first[0] == 4);
    CHECK_THROWS_AS(rs_specialize(rs_mono(1, 0), 2, 3), ring_error);
}
