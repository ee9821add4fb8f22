#include "qmckay/cli.hpp"

#include "qmckay/acceptance.hpp"
#include "qmckay/char_map.hpp"
#include "qmckay/toroidal_rep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

namespace qmckay::cli {

namespace {

using json = nlohmann::json;

TablePtr load_group(const std::string& spec) {
    try {
        return group_from_spec(spec);
    } catch (const table_error& e) {
        throw usage_error(std::string("bad group: ") + e.what());
    }
}

WeightFunction pick_weight(const TablePtr& t, const std::string& name, bool kappa) {
    if (kappa) return kappa_weight(t, rs_kappa());
    if (name == "mckay") return mckay_weight(t);
    if (name == "trivial") return trivial_weight(t);
    throw usage_error("unknown weight '" + name + "' (mckay, trivial)");
}

bool parse_kappa(const std::string& v) {
    if (v.empty()) return false;
    if (v == "k" || v == "kappa" || v == "symbolic") return true;
    throw usage_error("only a symbolic kappa is supported (--kappa k)");
}

json rs_matrix(const Matrix<RSLaurent>& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(rs_str(x));
        out.push_back(r);
    }
    return out;
}

mpq_class qpow(const mpq_class& x, int k) {
    mpq_class out = 1, b = k < 0 ? mpq_class(1 / x) : x;
    for (int i = 0; i < std::abs(k); ++i) out *= b;
    return out;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& x) {
    if (sgn(x) < 0) return std::nullopt;
    mpz_class n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    return mpq_class(sqrt(n), sqrt(d));
}

// r^{e0/2} s^{e1/2} at rational (r, s); needs the product to be a rational square when odd.
CycScalar specialize_entry(const RSLaurent& f, const mpq_class& r, const mpq_class& s) {
    CycScalar total;
    const RSLaurent g = rs_set_kappa(f, RSLaurent(1));
    for (const auto& [e, c] : g.terms()) {
        mpq_class v;
        if (e[0] % 2 == 0 && e[1] % 2 == 0) {
            v = qpow(r, e[0] / 2) * qpow(s, e[1] / 2);
        } else {
            auto root = rational_sqrt(qpow(r, e[0]) * qpow(s, e[1]));
            if (!root) throw usage_error("specialization leaves an irrational square root; pick r s^{-1} a square");
            v = *root;
        }
        total += c * CycScalar(v);
    }
    return total;
}

json scalar_json(const CycScalar& c) {
    if (c.is_rational()) {
        const mpq_class& q = c.rational();
        if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
        return rational_str(q);
    }
    return c.str();
}

std::pair<mpq_class, mpq_class> parse_rs_spec(const std::string& text) {
    std::optional<mpq_class> r, s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw usage_error("--spec expects r=<q>,s=<q>");
        std::string k = item.substr(0, eq);
        mpq_class v;
        try {
            v = rational_parse(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw usage_error("bad rational in --spec: " + item);
        }
        if (sgn(v) == 0) throw usage_error("--spec values must be nonzero");
        if (k == "r") r = v;
        else if (k == "s") s = v;
        else throw usage_error("--spec keys are r and s");
    }
    if (!r || !s) throw usage_error("--spec needs both r and s");
    return {*r, *s};
}

std::pair<int, int> parse_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw usage_error("expected i,j");
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw usage_error("expected i,j");
    }
}

json eigen_json(const EigenReport& r) {
    json e = json::array();
    for (const auto& x : r.entries)
        e.push_back({{"class", x.class_id}, {"eigenvalue", rs_str(x.eigenvalue)}, {"pass", x.pass}});
    return {{"anchor", "quantum_mckay_eigenvectors"}, {"group", r.group}, {"pass", r.pass()}, {"entries", e}};
}

json ch_json(const ChReport& r, const std::string& anchor) {
    json j = r.to_json();
    j["anchor"] = anchor;
    return j;
}

// Random Laurent combinations f, g of sigma_rho: <ch f, ch g> against <f, g> with r, s inverted, since ch
// inverts Laurent coefficients.
json isometry_samples(const FockSpace& fs, int n, unsigned long seed, int samples, bool& pass) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2);
    auto space = type_space(fs.table(), n);
    auto random_fn = [&] {
        WreathClassFunction f = WreathClassFunction::zero(fs.table(), n);
        for (const auto& rho : space->types) {
            int c = coef(rng);
            if (c == 0) continue;
            f = f + sigma_rho(rho).scaled(rs_mono(2 * ex(rng), 2 * ex(rng), 0, CycScalar(c)));
        }
        return f;
    };
    json out = json::array();
    for (int k = 0; k < samples; ++k) {
        auto f = random_fn(), g = random_fn();
        RSLaurent lhs = rs_inv(wreath_form(f, g, fs.weight()));
        RSLaurent rhs = fs.form(ch(f, fs), ch(g, fs));
        bool ok = lhs == rhs;
        if (!ok) pass = false;
        json s{{"sample", k}, {"pass", ok}};
        if (!ok) s["witness"] = rs_str(lhs) + " vs " + rs_str(rhs);
        out.push_back(s);
    }
    return out;
}

struct Common {
    std::string group;
    int degree = -1;
    int modes = -1;
    std::string kappa;
    unsigned long seed = 1;
};

void add_group(CLI::App* sub, Common& c, bool required = true) {
    auto* o = sub->add_option("--group", c.group, "group spec, e.g. cyclic:3 or binary_icosahedral");
    if (required) o->required();
}

// Parse helpers from the library throw domain_error subclasses; on user input that is a usage error.
template <class F>
auto as_usage(F&& f) {
    try {
        return f();
    } catch (const std::domain_error& e) {
        throw usage_error(e.what());
    }
}

int pick(int value, int fallback) { return value < 0 ? fallback : value; }

json toroidal_payload(const ToroidalRep& rep, const std::vector<std::string>& relations, int serre_degree,
                      bool quartic, bool one_param, bool& pass) {
    json reports = json::array();
    for (const auto& rel : relations) {
        auto r = verify_relation(rep, rel, serre_degree, quartic);
        if (!r.pass) pass = false;
        reports.push_back(r.to_json());
    }
    json out{{"group", rep.space().table()->name},
             {"variant", to_string(rep.options().variant)},
             {"dictionary", rep.options().dictionary},
             {"structure", rep.structure().to_json()},
             {"window", rep.options().trunc.to_json()},
             {"relations", reports}};
    if (one_param) {
        auto op = specialize_one_param(rep, std::min(rep.options().trunc.degree, 3));
        if (!op.pass) pass = false;
        out["one_parameter"] = op.to_json();
    }
    return out;
}

}  // namespace

json CommandResult::to_json() const { return json{{"command", command}, {"status", status}, {"result", payload}}; }

json prettify(const json& j) {
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s.size() > 3 && s.find("]@") != std::string::npos && s.front() == '[') {
            try {
                return rs_pretty(rs_parse(s));
            } catch (const std::exception&) {
                return j;
            }
        }
        return j;
    }
    if (j.is_array()) {
        json out = json::array();
        for (const auto& x : j) out.push_back(prettify(x));
        return out;
    }
    if (j.is_object()) {
        json out = json::object();
        for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = prettify(it.value());
        return out;
    }
    return j;
}

std::string CommandResult::render() const {
    if (pretty) return prettify(to_json()).dump(2);
    return to_json().dump();
}

CommandResult run(const std::vector<std::string>& args) {
    CommandResult res;
    res.command = args;

    CLI::App app{"qmckay: two-parameter McKay correspondence and toroidal vertex representations", "qmckay"};
    app.require_subcommand(1);
    bool json_flag = false, pretty = false;
    app.add_flag("--json", json_flag, "machine output (default)");
    app.add_flag("--pretty", pretty, "indented output, RSLaurent values in human notation");
    app.fallthrough();
    Common c;

    // table
    auto* table = app.add_subcommand("table", "character tables");
    table->require_subcommand(1);
    std::string table_arg;
    auto* t_validate = table->add_subcommand("validate", "load a table JSON file (or builtin spec) and validate it");
    t_validate->add_option("source", table_arg, "path or builtin spec")->required();
    auto* t_builtin = table->add_subcommand("builtin", "print a catalogued table");
    t_builtin->add_option("group", table_arg, "builtin spec")->required();

    // cartan
    auto* cartan = app.add_subcommand("cartan", "quantum Cartan matrix <gamma_i, gamma_j>_xi");
    std::string spec_rs, weight = "mckay";
    cartan->add_option("group", c.group)->required();
    cartan->add_option("--spec", spec_rs, "specialize, e.g. r=1,s=1");
    cartan->add_option("--weight", weight, "mckay or trivial");
    cartan->add_option("--kappa", c.kappa, "use the kappa weight (symbolic: k)");
    int level = 1;
    cartan->add_option("--level", level, "pairing at (r^m, s^m)");

    // graph
    auto* graph = app.add_subcommand("graph", "McKay graph at r = s = 1");
    graph->add_option("group", c.group)->required();
    bool dot = false;
    graph->add_flag("--dot", dot, "include Graphviz text");

    // wreath
    auto* wreath = app.add_subcommand("wreath", "wreath product types and forms");
    wreath->require_subcommand(1);
    int wn = 0;
    auto* w_types = wreath->add_subcommand("types", "partition-valued types of weight n");
    w_types->add_option("group", c.group)->required();
    w_types->add_option("n", wn)->required()->check(CLI::NonNegativeNumber);
    auto* w_form = wreath->add_subcommand("form", "Gram matrix of the sigma_rho basis");
    w_form->add_option("group", c.group)->required();
    w_form->add_option("n", wn)->required()->check(CLI::PositiveNumber);
    w_form->add_option("--weight", weight, "mckay or trivial");

    // ch
    auto* chc = app.add_subcommand("ch", "characteristic map image");
    std::string family = "sigma";
    int index = 0, tk = 0, tl = 0;
    chc->add_option("group", c.group)->required();
    chc->add_option("n", wn)->required()->check(CLI::PositiveNumber);
    chc->add_option("--family", family, "sigma (type index), eta or eps (character index)");
    chc->add_option("--index", index, "type or character index");
    chc->add_option("--twist", tk, "k in r^k");
    chc->add_option("--twist-s", tl, "l in s^l");

    // verify
    auto* verify = app.add_subcommand("verify", "identity checks");
    verify->require_subcommand(1);
    auto* v_eig = verify->add_subcommand("eigenvectors", "quantum McKay eigenvector identity");
    add_group(v_eig, c);
    v_eig->add_option("--weight", weight);
    v_eig->add_option("--kappa", c.kappa);

    auto* v_heis = verify->add_subcommand("heisenberg", "Heisenberg commutators on the Fock space");
    add_group(v_heis, c);
    v_heis->add_option("--degree", c.degree, "basis degree bound (default 4)");
    v_heis->add_option("--modes", c.modes, "|m|, |n| bound (default 3)");
    v_heis->add_option("--weight", weight);

    auto* v_iso = verify->add_subcommand("isometry", "characteristic map isometry");
    add_group(v_iso, c);
    v_iso->add_option("--degree", c.degree, "weights 1..n (default 3)");
    v_iso->add_option("--weight", weight);
    v_iso->add_option("--seed", c.seed, "seed for random Laurent combinations");
    int samples = 4;
    v_iso->add_option("--samples", samples, "random combinations per weight");

    auto* v_hopf = verify->add_subcommand("hopf", "Hopf compatibility and generating functions");
    add_group(v_hopf, c);
    v_hopf->add_option("--degree", c.degree, "weight bound (default 3)");
    v_hopf->add_option("--weight", weight);

    auto* v_ope = verify->add_subcommand("ope", "vertex operator products");
    add_group(v_ope, c);
    v_ope->add_option("--degree", c.degree, "spanning degree (default 3)");
    v_ope->add_option("--modes", c.modes, "mode bound (default 2)");
    v_ope->add_option("--kappa", c.kappa);
    std::string ope_mode = "literal", pair_arg;
    v_ope->add_option("--mode", ope_mode, "literal or derived prefactors");
    v_ope->add_option("--pair", pair_arg, "restrict to i,j");
    bool adjoint = false;
    v_ope->add_flag("--adjoint", adjoint, "also check <X^+_n u, v> = <u, X^-_{-n} v>");

    auto* v_tor = verify->add_subcommand("toroidal", "toroidal relations on the vertex representation");
    add_group(v_tor, c);
    v_tor->add_option("--degree", c.degree, "spanning degree (default 3)");
    v_tor->add_option("--modes", c.modes, "mode bound (default 2)");
    v_tor->add_option("--kappa", c.kappa, "kappa variant (symbolic: k)");
    bool affine = false, quartic = false, one_param = false, raw_modes = false;
    int dictionary = 1, serre_degree = 2, ball = 1;
    std::string orientation, cocycle = "sign_split";
    std::vector<std::string> relations;
    v_tor->add_flag("--affine", affine, "restrict to nodes 1..N");
    v_tor->add_option("--dictionary", dictionary, "1 or 2")->check(CLI::IsMember({1, 2}));
    v_tor->add_option("--orientation", orientation, "cyclic or lower_to_higher");
    v_tor->add_option("--cocycle", cocycle, "sign_split or principal");
    v_tor->add_option("--relation", relations, "relation ids (default: all)");
    v_tor->add_option("--serre-degree", serre_degree, "vector degree for Serre checks");
    v_tor->add_option("--ball", ball, "lattice ball radius");
    v_tor->add_flag("--quartic", quartic, "include quartic Serre pairs");
    v_tor->add_flag("--one-param", one_param, "also compare with the one-parameter oracle");
    v_tor->add_flag("--raw-modes", raw_modes, "x(k) as the z^{-k-1} coefficient of X(cz)");

    auto* v_all = verify->add_subcommand("all", "per-group suite, or the numbered acceptance criteria without --group");
    add_group(v_all, c, false);
    v_all->add_option("--degree", c.degree, "degree bound (default 3)");
    v_all->add_option("--modes", c.modes, "mode bound (default 2)");
    std::vector<int> criteria;
    v_all->add_option("--criterion", criteria, "acceptance criteria to run (default all)");

    for (auto* s : {table, t_validate, t_builtin, cartan, graph, wreath, w_types, w_form, chc, verify, v_eig, v_heis,
                    v_iso, v_hopf, v_ope, v_tor, v_all})
        s->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(std::move(rev));
    } catch (const CLI::CallForHelp&) {
        res.payload = {{"help", app.help()}};
        return res;
    } catch (const CLI::CallForAllHelp&) {
        res.payload = {{"help", app.help("", CLI::AppFormatMode::All)}};
        return res;
    } catch (const CLI::ParseError& e) {
        res.status = usage;
        res.payload = {{"error", e.what()}};
        return res;
    }
    res.pretty = pretty;
    (void)json_flag;

    try {
        if (t_validate->parsed()) {
            CharacterTable tbl;
            std::ifstream in(table_arg);
            if (in) {
                json doc;
                try {
                    doc = json::parse(in);
                } catch (const json::exception& e) {
                    throw usage_error(std::string("table file is not JSON: ") + e.what());
                }
                try {
                    tbl = load_table(doc);
                    validate_table(tbl);
                } catch (const table_error& e) {
                    res.status = verify_failed;
                    res.payload = {{"valid", false}, {"witness", e.what()}};
                    return res;
                }
            } else {
                tbl = *load_group(table_arg);
            }
            res.payload = {{"valid", true},
                           {"name", tbl.name},
                           {"order", tbl.order},
                           {"classes", tbl.num_classes()},
                           {"characters", tbl.num_chars()}};
        } else if (t_builtin->parsed()) {
            res.payload = table_to_json(*load_group(table_arg));
        } else if (cartan->parsed()) {
            auto t = load_group(c.group);
            auto xi = pick_weight(t, weight, parse_kappa(c.kappa));
            auto a = quantum_cartan(t, xi);
            Matrix<RSLaurent> m = level == 1 ? a.entries : twisted_cartan(a, level);
            res.payload = {{"group", t->name}, {"weight", xi.label}, {"level", level}};
            if (spec_rs.empty()) {
                res.payload["matrix"] = rs_matrix(m);
            } else {
                auto [r, s] = parse_rs_spec(spec_rs);
                json out = json::array();
                for (const auto& row : m) {
                    json jr = json::array();
                    for (const auto& x : row) jr.push_back(scalar_json(specialize_entry(x, r, s)));
                    out.push_back(jr);
                }
                res.payload["spec"] = {{"r", rational_str(r)}, {"s", rational_str(s)}};
                res.payload["matrix"] = out;
            }
        } else if (graph->parsed()) {
            auto t = load_group(c.group);
            auto g = mckay_graph(t, mckay_weight(t));
            json edges = json::array();
            for (auto [i, j, m] : g.edges) edges.push_back({i, j, m});
            res.payload = {{"group", t->name}, {"type", t->affine_type}, {"vertices", g.vertices}, {"edges", edges}};
            if (dot) res.payload["dot"] = g.to_dot(t->name);
        } else if (w_types->parsed()) {
            auto t = load_group(c.group);
            auto types = enumerate_types(t, wn);
            json list = json::array();
            for (const auto& rho : types)
                list.push_back({{"type", rho.to_json()}, {"centralizer", centralizer_order(rho).get_str()}});
            res.payload = {{"group", t->name}, {"n", wn}, {"count", types.size()}, {"types", list}};
        } else if (w_form->parsed()) {
            auto t = load_group(c.group);
            auto xi = pick_weight(t, weight, false);
            auto space = type_space(t, wn);
            Matrix<RSLaurent> g;
            for (const auto& a : space->types) {
                std::vector<RSLaurent> row;
                for (const auto& b : space->types) row.push_back(wreath_form(sigma_rho(a), sigma_rho(b), xi));
                g.push_back(row);
            }
            json types = json::array();
            for (const auto& rho : space->types) types.push_back(rho.to_json());
            res.payload = {{"group", t->name}, {"n", wn}, {"weight", xi.label}, {"types", types}, {"gram", rs_matrix(g)}};
        } else if (chc->parsed()) {
            auto t = load_group(c.group);
            FockSpace fs(t, mckay_weight(t));
            FockVector v;
            if (family == "sigma") {
                auto space = type_space(t, wn);
                if (index < 0 || index >= static_cast<int>(space->types.size()))
                    throw usage_error("type index out of range (0.." + std::to_string(space->types.size() - 1) + ")");
                v = ch(sigma_rho(space->types[index], tk, tl), fs);
                res.payload["type"] = space->types[index].to_json();
            } else if (family == "eta" || family == "eps") {
                if (index < 0 || index >= t->num_chars()) throw usage_error("character index out of range");
                auto g = ClassFunctionRS::character(t, index);
                v = family == "eta" ? ch(eta_fn(g, tk, tl, wn), fs) : ch(eps_fn(g, tk, tl, wn), fs);
            } else {
                throw usage_error("--family must be sigma, eta or eps");
            }
            res.payload["group"] = t->name;
            res.payload["family"] = family;
            res.payload["n"] = wn;
            res.payload["index"] = index;
            res.payload["vector"] = v.to_json();
        } else if (v_eig->parsed()) {
            auto t = load_group(c.group);
            auto r = verify_eigenvectors(t, pick_weight(t, weight, parse_kappa(c.kappa)));
            res.payload = eigen_json(r);
            if (!r.pass()) res.status = verify_failed;
        } else if (v_heis->parsed()) {
            auto t = load_group(c.group);
            FockSpace fs(t, pick_weight(t, weight, false));
            auto r = heis_suite(fs, pick(c.modes, 3), pick(c.degree, 4), true);
            res.payload = r.to_json();
            res.payload["group"] = t->name;
            if (!r.pass) res.status = verify_failed;
        } else if (v_iso->parsed()) {
            auto t = load_group(c.group);
            FockSpace fs(t, pick_weight(t, weight, false));
            bool pass = true;
            json reps = json::array();
            for (int n = 1; n <= pick(c.degree, 3); ++n) {
                auto r = verify_isometry(fs, n);
                if (!r.pass) pass = false;
                json j = ch_json(r, "char_map_isometry");
                j["random_samples"] = isometry_samples(fs, n, c.seed + n, samples, pass);
                reps.push_back(j);
            }
            res.payload = {{"anchor", "char_map_isometry"}, {"group", t->name}, {"seed", c.seed},
                           {"pass", pass}, {"reports", reps}};
            if (!pass) res.status = verify_failed;
        } else if (v_hopf->parsed()) {
            auto t = load_group(c.group);
            FockSpace fs(t, pick_weight(t, weight, false));
            const int n = pick(c.degree, 3);
            auto h = verify_hopf(fs, n);
            auto g = verify_generating_functions(fs, n);
            res.payload = {{"group", t->name},
                           {"hopf", ch_json(h, "char_map_hopf")},
                           {"generating_functions", ch_json(g, "char_map_generating_functions")},
                           {"pass", h.pass && g.pass}};
            if (!(h.pass && g.pass)) res.status = verify_failed;
        } else if (v_ope->parsed()) {
            auto t = load_group(c.group);
            RepOptions o;
            o.variant = parse_kappa(c.kappa) ? RepVariant::kappa : RepVariant::plain;
            o.trunc = TruncationParams{pick(c.degree, 3), pick(c.modes, 2), 1};
            ToroidalRep rep(t, o);
            OpeMode mode;
            if (ope_mode == "literal") mode = OpeMode::literal;
            else if (ope_mode == "derived") mode = OpeMode::derived;
            else throw usage_error("--mode must be literal or derived");
            std::vector<std::pair<int, int>> pairs;
            const int n = rep.space().rank();
            if (!pair_arg.empty()) {
                auto p = parse_pair(pair_arg);
                if (p.first < 0 || p.first >= n || p.second < 0 || p.second >= n)
                    throw usage_error("pair index out of range");
                pairs.push_back(p);
            } else {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) pairs.push_back({i, j});
            }
            bool pass = true;
            json reps = json::array();
            for (auto [i, j] : pairs)
                for (const auto& r : ope_check(rep.engine(), i, j, o.trunc, mode)) {
                    if (!r.skipped && !r.pass) pass = false;
                    reps.push_back(r.to_json());
                }
            res.payload = {{"group", t->name}, {"mode", ope_mode}, {"window", o.trunc.to_json()}, {"reports", reps}};
            if (adjoint) {
                json adj = json::array();
                for (int i = 0; i < n; ++i) {
                    auto a = adjointness_check(rep.engine(), i, 1, -1, o.trunc);
                    if (!a.pass) pass = false;
                    json j = a.to_json();
                    j["i"] = i;
                    j["anchor"] = "vertex_adjoint";
                    adj.push_back(j);
                }
                res.payload["adjointness"] = adj;
            }
            res.payload["pass"] = pass;
            if (!pass) res.status = verify_failed;
        } else if (v_tor->parsed()) {
            auto t = load_group(c.group);
            RepOptions o;
            const bool kap = parse_kappa(c.kappa);
            if (kap && affine) throw usage_error("--kappa and --affine are exclusive");
            o.variant = kap ? RepVariant::kappa : affine ? RepVariant::affine : RepVariant::plain;
            o.dictionary = dictionary;
            if (!orientation.empty()) o.orientation = as_usage([&] { return parse_edge_orientation(orientation); });
            o.cocycle = as_usage([&] { return parse_cocycle_convention(cocycle); });
            o.unit_weight_modes = !raw_modes;
            o.trunc = TruncationParams{pick(c.degree, 3), pick(c.modes, 2), ball};
            ToroidalRep rep(t, o);
            const std::string prefix = kap ? "T" : "D";
            if (relations.empty())
                for (const auto& stem : relation_names()) relations.push_back(prefix + stem);
            for (const auto& rel : relations) {
                const auto& names = relation_names();
                if (rel.size() < 2 || rel.substr(0, 1) != prefix ||
                    std::find(names.begin(), names.end(), rel.substr(1)) == names.end())
                    throw usage_error("unknown relation '" + rel + "' for this variant (" + prefix + "1.." + prefix +
                                      "9_3)");
            }
            bool pass = true;
            res.payload = toroidal_payload(rep, relations, serre_degree, quartic, one_param, pass);
            res.payload["pass"] = pass;
            if (!pass) res.status = verify_failed;
        } else if (v_all->parsed()) {
            if (c.group.empty()) {
                if (criteria.empty()) criteria = acceptance_ids();
                json reps = json::array();
                bool pass = true;
                for (int id : criteria) {
                    auto r = run_criterion(id);
                    if (!r.pass()) pass = false;
                    reps.push_back(r.to_json());
                }
                res.payload = {{"acceptance", reps}, {"pass", pass}};
                if (!pass) res.status = verify_failed;
                return res;
            }
            auto t = load_group(c.group);
            const int D = pick(c.degree, 3), M = pick(c.modes, 2);
            bool pass = true;
            json out{{"group", t->name}, {"degree", D}, {"modes", M}};
            auto xi = mckay_weight(t);
            auto eig = verify_eigenvectors(t, xi);
            pass = pass && eig.pass();
            out["eigenvectors"] = eigen_json(eig);
            FockSpace fs(t, xi);
            auto heis = heis_suite(fs, M, D, true);
            pass = pass && heis.pass;
            out["heisenberg"] = heis.to_json();
            json iso = json::array();
            for (int n = 1; n <= D; ++n) {
                auto r = verify_isometry(fs, n);
                pass = pass && r.pass;
                iso.push_back(ch_json(r, "char_map_isometry"));
            }
            out["isometry"] = iso;
            auto h = verify_hopf(fs, D);
            auto g = verify_generating_functions(fs, D);
            pass = pass && h.pass && g.pass;
            out["hopf"] = ch_json(h, "char_map_hopf");
            out["generating_functions"] = ch_json(g, "char_map_generating_functions");
            RepOptions o;
            o.trunc = TruncationParams{D, M, 1};
            ToroidalRep rep(t, o);
            json ope = json::array();
            const int n = rep.space().rank();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (const auto& r : ope_check(rep.engine(), i, j, o.trunc, OpeMode::literal)) {
                        if (!r.skipped && !r.pass) pass = false;
                        ope.push_back(r.to_json());
                    }
            out["ope"] = ope;
            std::vector<std::string> rels;
            for (const auto& stem : relation_names()) rels.push_back("D" + stem);
            out["toroidal"] = toroidal_payload(rep, rels, 2, false, true, pass);
            out["pass"] = pass;
            res.payload = out;
            if (!pass) res.status = verify_failed;
        }
    } catch (const usage_error& e) {
        res.status = usage;
        res.payload = {{"error", e.what()}};
    } catch (const std::exception& e) {
        res.status = internal;
        res.payload = {{"error", e.what()}};
    }
    return res;
}

}  // namespace qmckay::cli
