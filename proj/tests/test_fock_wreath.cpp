#include "qmckay/char_map.hpp"

#include <doctest.h>

using namespace qmckay;

namespace {

// Coefficient of x^n in prod_k (1 - x^k)^{-c}: partitions coloured by c classes.
long coloured_partitions(int c, int n) {
    std::vector<long> f(n + 1, 0);
    f[0] = 1;
    for (int col = 0; col < c; ++col)
        for (int k = 1; k <= n; ++k)
            for (int m = k; m <= n; ++m) f[m] += f[m - k];
    return f[n];
}

mpz_class z_oracle(const Partition& p) {
    mpz_class z = 1;
    std::map<int, int> mult;
    for (int x : p) ++mult[x];
    for (auto [part, m] : mult) {
        for (int i = 0; i < m; ++i) z *= part;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

}  // namespace

TEST_CASE("type counts") {
    auto z2 = group_from_spec("cyclic:2");
    CHECK(enumerate_types(z2, 2).size() == 5);
    for (const char* g : {"trivial", "cyclic:2", "cyclic:3", "binary_dihedral:2"}) {
        auto t = group_from_spec(g);
        for (int n = 0; n <= 4; ++n)
            CHECK(static_cast<long>(enumerate_types(t, n).size()) == coloured_partitions(t->num_classes(), n));
    }
}

TEST_CASE("class equation of the wreath product") {
    for (const char* g : {"trivial", "cyclic:2", "cyclic:3", "binary_tetrahedral"}) {
        auto t = group_from_spec(g);
        for (int n = 1; n <= 4; ++n) {
            mpz_class size = 1;
            for (int i = 0; i < n; ++i) size *= t->order;
            for (int i = 2; i <= n; ++i) size *= i;
            mpq_class sum = 0;
            for (const auto& rho : enumerate_types(t, n)) sum += mpq_class(size) / centralizer_order(rho);
            CHECK(sum == mpq_class(size));
        }
    }
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : partitions(n)) CHECK(z_lambda(p) == z_oracle(p));
}

TEST_CASE("trivial group: power sums are orthogonal with norms z_lambda") {
    auto t = group_from_spec("trivial");
    FockSpace fs(t, trivial_weight(t));
    for (int n = 1; n <= 4; ++n) {
        auto types = enumerate_types(t, n);
        for (const auto& a : types)
            for (const auto& b : types) {
                RSLaurent want = a == b ? RSLaurent(CycScalar(mpq_class(z_oracle(a.parts[0])))) : RSLaurent();
                CHECK(fs.form(ch(sigma_rho(a), fs), ch(sigma_rho(b), fs)) == want);
                CHECK(wreath_form(sigma_rho(a), sigma_rho(b), fs.weight()) == want);
            }
    }
}

TEST_CASE("Heisenberg commutator on the vacuum") {
    auto t = group_from_spec("cyclic:3");
    FockSpace fs(t, mckay_weight(t));
    FockVector vac = FockVector::vacuum(fs.rank());
    for (int m = 1; m <= 3; ++m) {
        FockVector v = fs.heis_apply(m, 0, fs.heis_apply(-m, 0, vac));
        CHECK(v == vac.scaled(rs_substitute(rs_d(), m) * RSLaurent(m)));
        FockVector w = fs.heis_apply(m, 1, fs.heis_apply(-m, 0, vac));
        CHECK(w == vac.scaled(RSLaurent(-m)));
    }
    CHECK(fs.form(fs.heis_apply(-1, 0, vac), fs.heis_apply(-1, 0, vac)) == rs_d());
    CHECK(heis_suite(fs, 2, 3, true).pass);
    auto z2 = group_from_spec("cyclic:2");
    CHECK(heis_suite(FockSpace(z2, mckay_weight(z2)), 2, 3, true).pass);
}

TEST_CASE("characteristic map") {
    auto t = group_from_spec("cyclic:2");
    FockSpace fs(t, mckay_weight(t));
    FockVector vac = FockVector::vacuum(fs.rank());
    for (int i = 0; i < 2; ++i)
        for (int n = 1; n <= 3; ++n) CHECK(ch(sigma_char(t, i, n), fs) == fs.heis_apply(-n, i, vac));
    for (int n = 1; n <= 3; ++n) {
        CHECK(verify_isometry(fs, n).pass);
        CHECK(verify_generating_functions(fs, n).pass);
    }
    CHECK(verify_hopf(fs, 2).pass);
    auto z3 = group_from_spec("cyclic:3");
    FockSpace f3(z3, mckay_weight(z3));
    CHECK(verify_isometry(f3, 3).pass);
}

TEST_CASE("twisted isometry holds with r, s inverted on the wreath side") {
    for (const char* g : {"cyclic:2", "cyclic:3"}) {
        auto t = group_from_spec(g);
        FockSpace fs(t, mckay_weight(t));
        for (int n = 1; n <= 3; ++n) {
            auto rep = verify_isometry(fs, n);
            REQUIRE(rep.details.contains("twisted_gram"));
            for (const auto& s : rep.details["twisted_gram"]) CHECK(s["pass_inverted"] == true);
        }
        for (int n = 1; n <= 3; ++n)
            for (const auto& rho : enumerate_types(t, n))
                for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {2, -1}})
                    CHECK(ch(sigma_rho(rho, k, l), fs) == a_prime(fs, rho, -k, -l));
    }
}
