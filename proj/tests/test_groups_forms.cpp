#include "qmckay/mckay_form.hpp"

#include <doctest.h>

using namespace qmckay;

namespace {

const char* kGroups[] = {"cyclic:2",          "cyclic:3",          "cyclic:5",           "binary_dihedral:2",
                         "binary_dihedral:3", "binary_tetrahedral", "binary_octahedral", "binary_icosahedral"};

}  // namespace

TEST_CASE("catalogued tables satisfy both orthogonality relations") {
    for (const char* g : kGroups) {
        CAPTURE(g);
        auto t = group_from_spec(g);
        const int k = t->num_chars();
        REQUIRE(t->num_classes() == k);
        long dims = 0;
        for (int i = 0; i < k; ++i) {
            long d = t->value(i, 0).rational().get_num().get_si();
            dims += d * d;
        }
        CHECK(dims == t->order);
        for (int c = 0; c < k; ++c)
            for (int c2 = 0; c2 < k; ++c2) {
                CycScalar s;
                for (int i = 0; i < k; ++i) s += t->value(i, c) * t->value(i, c2).conj();
                CHECK(s == CycScalar(c == c2 ? t->classes[c].centralizer : 0));
            }
        CHECK(t->value(0, 0) == CycScalar(1));
        for (int c = 0; c < k; ++c) CHECK(t->value(0, c) == CycScalar(1));
    }
}

TEST_CASE("builtin examples") {
    auto z2 = group_from_spec("cyclic:2");
    CHECK(z2->order == 2);
    CHECK(z2->value(1, 1) == CycScalar(-1));
    auto ico = group_from_spec("binary_icosahedral");
    CHECK(ico->order == 120);
    CHECK(ico->num_chars() == 9);
    CHECK(ico->affine_type == "E8");
    CHECK_THROWS_AS(group_from_spec("cyclic"), table_error);
    CHECK_THROWS_AS(group_from_spec("nonsense:3"), table_error);
}

TEST_CASE("table documents round trip and corrupted ones are rejected") {
    auto t = group_from_spec("cyclic:3");
    CharacterTable back = load_table(table_to_json(*t));
    CHECK(back.chars == t->chars);
    CharacterTable bad = *group_from_spec("cyclic:2");
    bad.chars[1][1] = CycScalar(1);
    CHECK_THROWS_AS(validate_table(bad), table_error);
    CharacterTable bad_size = *group_from_spec("cyclic:2");
    bad_size.classes[1].centralizer = 3;
    CHECK_THROWS_AS(validate_table(bad_size), table_error);
}

TEST_CASE("McKay-weighted Cartan matrices") {
    auto z2 = group_from_spec("cyclic:2");
    CHECK(cartan_at_one(quantum_cartan(z2, mckay_weight(z2))) == Matrix<long>{{2, -2}, {-2, 2}});

    // Z/n oracle: xi * gamma_i = d gamma_i - gamma_{i+1} - gamma_{i-1}
    for (int n : {3, 4, 5}) {
        auto t = group_from_spec("cyclic:" + std::to_string(n));
        auto a = quantum_cartan(t, mckay_weight(t));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                RSLaurent want;
                if (i == j) want = rs_d();
                if ((i + 1) % n == j || (j + 1) % n == i) want -= RSLaurent(1);
                CHECK(a(i, j) == want);
            }
    }

    for (const char* g : kGroups) {
        CAPTURE(g);
        auto t = group_from_spec(g);
        auto a = quantum_cartan(t, mckay_weight(t));
        for (int i = 0; i < a.size(); ++i)
            for (int j = 0; j < a.size(); ++j) CHECK(a(i, j) == rs_bar(a(j, i)));
        auto id = quantum_cartan(t, trivial_weight(t));
        for (int i = 0; i < id.size(); ++i)
            for (int j = 0; j < id.size(); ++j) CHECK(id(i, j) == RSLaurent(i == j ? 1 : 0));
        CHECK(verify_eigenvectors(t, mckay_weight(t)).pass());
    }
}

TEST_CASE("eigenvalue at the identity class is d - 2") {
    auto t = group_from_spec("binary_octahedral");
    auto rep = verify_eigenvectors(t, mckay_weight(t));
    REQUIRE(!rep.entries.empty());
    CHECK(rep.entries[0].eigenvalue == rs_d() - RSLaurent(2));
}

TEST_CASE("McKay graphs and determinants") {
    auto e6 = group_from_spec("binary_tetrahedral");
    auto g = mckay_graph(e6, mckay_weight(e6));
    CHECK(g.vertices == 7);
    CHECK(g.edges.size() == 6);
    auto rep = nondegeneracy_spot_check(e6, mckay_weight(e6), {{mpq_class(2), mpq_class(1, 2)}, {1, 1}});
    REQUIRE(rep.samples.size() == 2);
    CHECK(rep.samples[0].nonsingular);
    CHECK(rep.samples[0].positive_definite);
    CHECK_FALSE(rep.samples[1].nonsingular);
    CHECK(determinant(Matrix<mpq_class>{{2, -1}, {-1, 2}}) == 3);
}
