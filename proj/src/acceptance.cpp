#include "qmckay/acceptance.hpp"

#include "qmckay/char_map.hpp"
#include "qmckay/toroidal_rep.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

namespace qmckay {

namespace {

using json = nlohmann::json;

struct Catalogued {
    std::string spec;
    std::vector<std::pair<int, int>> edges;  // simple edges in the catalogue numbering
};

std::vector<std::pair<int, int>> cycle_edges(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return e;
}

// Expected McKay graphs, typed out per group; cyclic:2 is handled as the double edge.
const std::vector<Catalogued>& catalogue() {
    static const std::vector<Catalogued> c = {
        {"cyclic:2", {{0, 1}, {1, 0}}},
        {"cyclic:3", cycle_edges(3)},
        {"cyclic:4", cycle_edges(4)},
        {"cyclic:5", cycle_edges(5)},
        {"cyclic:6", cycle_edges(6)},
        {"binary_dihedral:2", {{0, 2}, {1, 2}, {2, 3}, {2, 4}}},
        {"binary_dihedral:3", {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}},
        {"binary_dihedral:4", {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}},
        {"binary_tetrahedral", {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}, {0, 2}}},
        {"binary_octahedral", {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}, {0, 1}}},
        {"binary_icosahedral", {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}, {0, 8}}},
    };
    return c;
}

Matrix<long> expected_cartan(int n, const std::vector<std::pair<int, int>>& edges) {
    Matrix<long> a(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    if (n == 2) {
        a[0][1] = a[1][0] = -2;
        return a;
    }
    for (auto [i, j] : edges) {
        a[i][j] -= 1;
        a[j][i] -= 1;
    }
    return a;
}

CriterionResult start(int id, std::string title) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    return r;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CriterionResult c1() {
    CriterionResult r = start(1, "McKay specialization at r = s = 1");
    r.limit_seconds = 5;
    r.exact_pass = true;
    int groups = 0;
    for (const auto& g : catalogue()) {
        auto t = group_from_spec(g.spec);
        auto a = cartan_at_one(quantum_cartan(t, mckay_weight(t)));
        const int n = t->num_chars();
        bool ok = a == expected_cartan(n, g.edges);
        // the degree vector spans the null space of an affine Cartan matrix
        for (int i = 0; i < n && ok; ++i) {
            long s = 0;
            for (int j = 0; j < n; ++j) s += a[i][j] * t->value(j, 0).rational().get_num().get_si();
            ok = s == 0;
        }
        r.detail[g.spec] = json{{"type", t->affine_type}, {"pass", ok}};
        if (!ok) r.exact_pass = false;
        ++groups;
    }
    r.summary = std::to_string(groups) + " catalogued groups against typed-out affine Cartan matrices";
    return r;
}

CriterionResult c2() {
    CriterionResult r = start(2, "eigenvector identity");
    r.limit_seconds = 10;
    r.exact_pass = true;
    long classes = 0;
    for (const auto& g : catalogue()) {
        auto t = group_from_spec(g.spec);
        auto rep = verify_eigenvectors(t, mckay_weight(t));
        classes += static_cast<long>(rep.entries.size());
        r.detail[g.spec] = rep.pass();
        if (!rep.pass()) r.exact_pass = false;
    }
    r.summary = std::to_string(classes) + " classes over " + std::to_string(catalogue().size()) + " groups";
    return r;
}

CriterionResult c3() {
    CriterionResult r = start(3, "Heisenberg commutators (heisenberg_char)");
    r.limit_seconds = 120;
    r.exact_pass = true;
    long checked = 0;
    for (const char* g : {"cyclic:2", "cyclic:3"}) {
        auto t = group_from_spec(g);
        FockSpace fs(t, mckay_weight(t));
        auto rep = heis_suite(fs, 4, 6, true);
        checked += rep.checked;
        r.detail[g] = rep.to_json();
        if (!rep.pass) r.exact_pass = false;
    }
    r.summary = std::to_string(checked) + " operator identities, |m|,|n| <= 4, degree <= 6";
    return r;
}

CriterionResult c4() {
    CriterionResult r = start(4, "isometry of the characteristic map");
    r.limit_seconds = 120;
    r.exact_pass = true;
    long checked = 0;
    for (const char* g : {"trivial", "cyclic:2", "cyclic:3"}) {
        auto t = group_from_spec(g);
        for (int w = 0; w < 2; ++w) {
            WeightFunction xi = w == 0 ? mckay_weight(t) : trivial_weight(t);
            FockSpace fs(t, xi);
            for (int n = 1; n <= 4; ++n) {
                auto rep = verify_isometry(fs, n);
                checked += rep.checked;
                r.detail[std::string(g) + "/" + xi.label + "/n=" + std::to_string(n)] = rep.pass;
                if (!rep.pass) {
                    r.exact_pass = false;
                    r.detail["witness"] = rep.witness;
                }
            }
        }
    }
    r.summary = std::to_string(checked) + " Gram entries, n <= 4, McKay and trivial weights";
    return r;
}

CriterionResult c5() {
    CriterionResult r = start(5, "generating functions of eta_n and eps_n");
    r.limit_seconds = 60;
    r.exact_pass = true;
    long checked = 0;
    for (const char* g : {"trivial", "cyclic:2", "cyclic:3"}) {
        auto t = group_from_spec(g);
        FockSpace fs(t, mckay_weight(t));
        auto rep = verify_generating_functions(fs, 5);
        checked += rep.checked;
        r.detail[g] = rep.pass;
        if (!rep.pass) {
            r.exact_pass = false;
            r.detail["witness"] = rep.witness;
        }
    }
    r.summary = std::to_string(checked) + " coefficient identities, n <= 5";
    return r;
}

// OPE literal prefactors on every pair; derived prefactors recorded alongside.
CriterionResult c6() {
    CriterionResult r = start(6, "vertex operator products (vertex_ope, vertex_ope_kappa)");
    r.limit_seconds = 300;
    r.exact_pass = true;
    TruncationParams tr{4, 2, 1};
    long checked = 0, failed = 0, derived_failed = 0;
    json fails = json::array();
    struct Run {
        const char* group;
        RepVariant variant;
    };
    for (Run run : {Run{"cyclic:2", RepVariant::plain}, Run{"cyclic:3", RepVariant::plain},
                    Run{"cyclic:3", RepVariant::kappa}}) {
        RepOptions o;
        o.variant = run.variant;
        o.trunc = tr;
        ToroidalRep rep(group_from_spec(run.group), o);
        const int n = rep.space().rank();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                for (auto mode : {OpeMode::literal, OpeMode::derived}) {
                    for (const auto& x : ope_check(rep.engine(), i, j, tr, mode)) {
                        if (x.skipped) continue;
                        if (mode == OpeMode::derived) {
                            if (!x.pass) ++derived_failed;
                            continue;
                        }
                        checked += x.checked;
                        if (x.pass) continue;
                        ++failed;
                        r.exact_pass = false;
                        if (fails.size() < 12)
                            fails.push_back(json{{"group", run.group},
                                                 {"anchor", x.anchor},
                                                 {"i", i},
                                                 {"j", j},
                                                 {"pairing", x.pairing},
                                                 {"display", x.display},
                                                 {"scalar_ratio", x.scalar_ratio}});
                    }
                }
            }
    }
    r.detail["literal_failures"] = failed;
    r.detail["derived_failures"] = derived_failed;
    r.detail["first_failures"] = fails;
    std::ostringstream os;
    os << checked << " coefficient checks with the stated prefactors, " << failed
       << " display(s) off; contraction-derived prefactors: " << derived_failed << " off";
    r.summary = os.str();
    return r;
}

struct SuiteRun {
    std::string group;
    RepVariant variant;
    int dictionary;
    std::vector<std::string> relations;
};

std::vector<std::string> d_series(const std::string& p, bool serre) {
    std::vector<std::string> v;
    for (const char* s : {"1", "2", "3", "4", "5", "6a", "6b", "7", "8"}) v.push_back(p + s);
    if (serre) {
        v.push_back(p + "9_2");
        v.push_back(p + "9_3");
    }
    return v;
}

void run_suites(CriterionResult& r, const std::vector<SuiteRun>& runs) {
    r.exact_pass = true;
    long checked = 0;
    std::vector<std::string> failed;
    json per = json::array();
    for (const auto& run : runs) {
        RepOptions o;
        o.variant = run.variant;
        o.dictionary = run.dictionary;
        o.trunc = TruncationParams{4, 2, 1};
        ToroidalRep rep(group_from_spec(run.group), o);
        for (const auto& rel : run.relations) {
            auto x = verify_relation(rep, rel, 2);
            checked += x.checked;
            json e{{"group", run.group},
                   {"variant", to_string(run.variant)},
                   {"dictionary", run.dictionary},
                   {"relation", rel},
                   {"pass", x.pass},
                   {"skipped", x.skipped},
                   {"checked", x.checked}};
            if (!x.pass) {
                e["holds_at_one_parameter"] = x.holds_at_one_parameter;
                r.exact_pass = false;
                failed.push_back(run.group + "/d" + std::to_string(run.dictionary) + "/" + rel);
            }
            per.push_back(std::move(e));
        }
    }
    r.detail["reports"] = per;
    std::ostringstream os;
    os << checked << " checks; failing:";
    if (failed.empty()) os << " none";
    for (const auto& f : failed) os << " " << f;
    r.summary = os.str();
}

CriterionResult c7() {
    CriterionResult r = start(7, "toroidal relations (toroidal_relations, toroidal_kappa_relations, toroidal_serre)");
    r.limit_seconds = 600;
    std::vector<SuiteRun> runs;
    for (int d : {1, 2}) {
        runs.push_back({"cyclic:2", RepVariant::plain, d, d_series("D", false)});
        runs.push_back({"cyclic:3", RepVariant::plain, d, d_series("D", true)});
    }
    runs.push_back({"cyclic:3", RepVariant::kappa, 1, d_series("T", false)});
    run_suites(r, runs);
    return r;
}

CriterionResult c8() {
    CriterionResult r = start(8, "affine restriction (affine_relations)");
    r.limit_seconds = 300;
    std::vector<SuiteRun> runs;
    for (int d : {1, 2}) {
        runs.push_back({"cyclic:2", RepVariant::affine, d, d_series("D", false)});
        runs.push_back({"cyclic:3", RepVariant::affine, d, d_series("D", true)});
    }
    run_suites(r, runs);
    return r;
}

CriterionResult c9() {
    CriterionResult r = start(9, "one-parameter degeneration against an independent oracle");
    r.limit_seconds = 120;
    r.exact_pass = true;
    long checked = 0;
    for (const char* g : {"cyclic:2", "cyclic:3"})
        for (int d : {1, 2}) {
            RepOptions o;
            o.dictionary = d;
            o.trunc = TruncationParams{3, 2, 1};
            ToroidalRep rep(group_from_spec(g), o);
            auto x = specialize_one_param(rep, 3);
            checked += x.checked;
            r.detail[std::string(g) + "/d" + std::to_string(d)] = x.to_json();
            if (!x.pass) r.exact_pass = false;
        }
    r.summary = std::to_string(checked) + " matrix coefficients through degree 3";
    return r;
}

CriterionResult c10() {
    CriterionResult r = start(10, "non-degeneracy spot check");
    r.limit_seconds = 1;
    r.exact_pass = true;
    constexpr double tol = 1e-9;
    std::vector<std::pair<mpq_class, mpq_class>> samples;
    for (int t : {2, 3, 5}) samples.push_back({mpq_class(t), mpq_class(1, t)});
    samples.push_back({mpq_class(1), mpq_class(1)});
    for (const auto& g : catalogue()) {
        auto t = group_from_spec(g.spec);
        auto rep = nondegeneracy_spot_check(t, mckay_weight(t), samples);
        bool ok = rep.samples.size() == 4;
        for (size_t k = 0; k + 1 < rep.samples.size() && ok; ++k) {
            const auto& s = rep.samples[k];
            ok = std::fabs(s.det) > tol && s.nonsingular && s.positive_definite;
            for (double m : s.minors) ok = ok && m > tol;
        }
        if (ok) ok = std::fabs(rep.samples.back().det) <= tol;
        r.detail[g.spec] = ok;
        if (!ok) r.exact_pass = false;
    }
    r.summary = "t in {2, 3, 5} and t = 1, tolerance 1e-9";
    return r;
}

}  // namespace

std::string CriterionResult::line() const {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "criterion " << id << " " << (pass() ? "PASS" : "FAIL") << " [" << seconds << "s, limit "
       << limit_seconds << "s" << (within_limit() ? "" : ", over limit") << "] " << title << ": " << summary;
    return os.str();
}

nlohmann::json CriterionResult::to_json() const {
    return json{{"criterion", id},   {"title", title},           {"pass", pass()},
                {"exact", exact_pass}, {"seconds", seconds},     {"limit_seconds", limit_seconds},
                {"summary", summary}, {"detail", detail}};
}

const std::vector<int>& acceptance_ids() {
    static const std::vector<int> ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    return ids;
}

CriterionResult run_criterion(int id) {
    static const std::vector<std::function<CriterionResult()>> fns = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
    if (id < 1 || id > static_cast<int>(fns.size()))
        throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = fns[id - 1]();
    r.seconds = elapsed(t0);
    return r;
}

}  // namespace qmckay
