#include "qmckay/toroidal_rep.hpp"

#include <doctest.h>

using namespace qmckay;

namespace {

ToroidalRep make_rep(const char* g, RepVariant v = RepVariant::plain, int dictionary = 1, int degree = 2,
                     int modes = 1) {
    RepOptions o;
    o.variant = v;
    o.dictionary = dictionary;
    o.trunc = TruncationParams{degree, modes, 1};
    return ToroidalRep(group_from_spec(g), o);
}

// Doubled q exponent of a monomial at (r, s) = (q, q^{-1}).
int q2(const RSLaurent& m) {
    QLaurent v = rs_specialize_qq(m);
    REQUIRE(v.terms().size() == 1);
    REQUIRE(v.terms()[0].second == CycScalar(1));
    return v.terms()[0].first[0];
}

}  // namespace

TEST_CASE("cocycle basis values and bimultiplicativity") {
    auto t = group_from_spec("cyclic:4");
    FockSpace fs(t, mckay_weight(t));
    Cocycle eps(fs.lattice_form());
    for (int i = 0; i < 4; ++i) {
        CHECK(eps.basis(i, i) == rs_mono(1, 1));
        for (int j = i + 1; j < 4; ++j) CHECK(eps.basis(i, j) == RSLaurent(1));
    }
    std::vector<std::vector<int>> vs = {{1, 0, 0, 0}, {0, 1, -1, 0}, {2, 0, 1, -1}, {0, -1, 0, 2}};
    for (const auto& a : vs)
        for (const auto& b : vs)
            for (const auto& c : vs) {
                std::vector<int> ab(4);
                for (int k = 0; k < 4; ++k) ab[k] = a[k] + b[k];
                CHECK(eps.eval(ab, c) == eps.eval(a, c) * eps.eval(b, c));
                CHECK(eps.eval(c, ab) == eps.eval(c, a) * eps.eval(c, b));
            }
}

TEST_CASE("vertex modes lower degree by their index") {
    auto rep = make_rep("cyclic:3", RepVariant::plain, 1, 2, 2);
    const auto& fs = rep.space();
    for (const auto& k : rep.spanning(2))
        for (int n = -2; n <= 2; ++n)
            for (int sign : {1, -1}) {
                FockVector out = rep.x(sign, 1, n, FockVector::basis(k));
                for (const auto& [key, c] : out.terms()) CHECK(fs.degree(key) == fs.degree(k) - n);
            }
}

TEST_CASE("contraction-derived products hold on spanning vectors") {
    for (const char* g : {"cyclic:2", "cyclic:3"}) {
        auto rep = make_rep(g);
        TruncationParams tr{2, 1, 1};
        const int n = rep.space().rank();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (const auto& r : ope_check(rep.engine(), i, j, tr, OpeMode::derived)) {
                    CAPTURE(r.display);
                    CHECK(r.pass);
                }
    }
    auto kap = make_rep("cyclic:3", RepVariant::kappa);
    for (const auto& r : ope_check(kap.engine(), 0, 1, TruncationParams{2, 1, 1}, OpeMode::derived)) CHECK(r.pass);
}

TEST_CASE("adjointness holds up to a uniform (rs)^(1/2)") {
    auto rep = make_rep("cyclic:3");
    auto a = adjointness_check(rep.engine(), 0, 1, -1, TruncationParams{2, 1, 1});
    CHECK(a.checked > 0);
    CHECK(a.uniform_ratio == rs_str(rs_mono(1, 1)));
}

TEST_CASE("structure matrices") {
    auto a3 = structure_matrix({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, EdgeOrientation::cyclic);
    for (int i = 0; i < 3; ++i) {
        CHECK(a3.A[i][i] == rs_mono(2, -2));
        CHECK(a3.A[i][(i + 1) % 3] == rs_r(-1));
        CHECK(a3.A[(i + 1) % 3][i] == rs_s());
    }
    auto a1 = structure_matrix({{2, -2}, {-2, 2}}, EdgeOrientation::cyclic);
    CHECK(a1.A[0][1] == rs_r(-1) * rs_s());
    CHECK(a1.A[1][0] == rs_r(-1) * rs_s());

    // at (q, q^{-1}) every entry is q^{a_ij}
    for (const char* g : {"cyclic:2", "cyclic:3", "cyclic:5", "binary_dihedral:2", "binary_icosahedral"}) {
        CAPTURE(g);
        auto t = group_from_spec(g);
        FockSpace fs(t, mckay_weight(t));
        auto sm = structure_matrix(fs.lattice_form(), t->is_cyclic() ? EdgeOrientation::cyclic
                                                                     : EdgeOrientation::lower_to_higher);
        for (int i = 0; i < sm.size(); ++i)
            for (int j = 0; j < sm.size(); ++j) CHECK(q2(sm.A[i][j]) == 2 * sm.a[i][j]);
    }
    auto d4 = structure_matrix([] { Matrix<long> m; for (auto& row : affine_cartan("D4")) m.emplace_back(row.begin(), row.end()); return m; }(), EdgeOrientation::lower_to_higher);
    CHECK(d4.A[0][2] == rs_r(-1));
    CHECK(d4.A[2][0] == rs_s());
    CHECK(d4.A[0][1] == RSLaurent(1));
}

TEST_CASE("heisenberg pairing at q is q + q^-1 on the diagonal") {
    QLaurent d = rs_specialize_qq(rs_d());
    REQUIRE(d.terms().size() == 2);
    CHECK(d.terms()[0].first[0] == -2);
    CHECK(d.terms()[1].first[0] == 2);
}

TEST_CASE("relations holding in two parameters on Z/3") {
    auto rep = make_rep("cyclic:3");
    for (const char* rel : {"D1", "D2", "D3", "D4", "D5", "D6a", "D6b"}) {
        CAPTURE(rel);
        auto r = verify_relation(rep, rel);
        CHECK(r.pass);
        CHECK(r.checked > 0);
        CHECK(r.anchor == "toroidal_relations");
    }
    auto kap = make_rep("cyclic:3", RepVariant::kappa);
    for (const char* rel : {"T2", "T5", "T6a", "T6b"}) {
        CAPTURE(rel);
        CHECK(verify_relation(kap, rel).pass);
    }
    CHECK_THROWS_AS(verify_relation(rep, "T1"), toroidal_error);
}

TEST_CASE("D7, D8 and cubic Serre agree after r = q, s = q^-1") {
    auto rep = make_rep("cyclic:3");
    for (const char* rel : {"D7", "D8", "D9_2", "D9_3"}) {
        CAPTURE(rel);
        CHECK(verify_relation(rep, rel, 1).holds_at_one_parameter);
    }
}

TEST_CASE("affine restriction of Z/2 satisfies every relation") {
    auto rep = make_rep("cyclic:2", RepVariant::affine, 1, 3, 2);
    CHECK(rep.nodes() == std::vector<int>{1});
    for (const auto& r : verify_all_relations(rep)) {
        CAPTURE(r.relation);
        CHECK(r.pass);
        const bool affine_anchor = r.anchor.find("affine") != std::string::npos;
        CHECK((affine_anchor || r.skipped));
    }
}

TEST_CASE("Serre bookkeeping") {
    auto z2 = make_rep("cyclic:2");
    auto r = verify_relation(z2, "D9_2");
    CHECK(r.skipped);
    CHECK(r.skip_reason.find("quartic") != std::string::npos);
    auto z4 = make_rep("cyclic:4");
    auto c = verify_relation(z4, "D9_1");
    CHECK(c.pass);
    CHECK(c.note.find("A_ji") != std::string::npos);
}

TEST_CASE("one-parameter oracle agrees with the two-parameter operators at (q, q^-1)") {
    for (const char* g : {"cyclic:2", "cyclic:3", "binary_dihedral:2"})
        for (int d : {1, 2}) {
            CAPTURE(g);
            CAPTURE(d);
            auto rep = make_rep(g, RepVariant::plain, d, 2, 2);
            auto o = specialize_one_param(rep, 2);
            CHECK(o.pass);
            CHECK(o.checked > 0);
        }
    RepOptions raw;
    raw.unit_weight_modes = false;
    raw.trunc = TruncationParams{2, 1, 1};
    CHECK(specialize_one_param(ToroidalRep(group_from_spec("cyclic:3"), raw), 2).pass);
}
