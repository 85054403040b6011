#include "complements/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "complements/adjunction.hpp"
#include "complements/arrangement.hpp"
#include "complements/curve.hpp"

#ifndef COMPLEMENTS_DATA_DIR
#define COMPLEMENTS_DATA_DIR "data"
#endif

namespace complements::cli {

using io::json;

namespace {

constexpr const char* kInequalityNote =
    "hyperplane candidates use the degree computation on P^d: nef iff sum 1/m_i >= 1, "
    "and raising m_j's coefficient to 1 breaks nef iff sum_{i!=j} 1/m_i < 1; "
    "the reading with both inequalities reversed gives different answers";

std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
    std::vector<Rational> out;
    for (const auto& s : items) out.push_back(Rational::parse(s));
    return out;
}

json indices_to_json(const std::vector<long>& m) { return json(m); }

bool all_standard(const Boundary& b) {
    for (const auto& e : b.entries())
        if (!is_standard(e.coeff)) return false;
    return true;
}

std::vector<long> standard_indices(const Boundary& b) {
    std::vector<long> out;
    for (const auto& e : b.entries()) {
        auto m = standard_index(e.coeff);
        out.push_back(m ? m->get_si() : 0);
    }
    return out;
}

json report_json(const ComplementReport& r) {
    return {{"n", r.n}, {"witness", io::to_json(r.witness)}, {"klt", r.klt}};
}

/// Options shared by the boundary-taking commands.
struct BoundaryInput {
    std::vector<long> points;
    std::vector<std::string> coeffs;
    std::string file;

    void attach(CLI::App* cmd) {
        auto* p = cmd->add_option("--points", points, "standard indices m_i (coefficients 1 - 1/m_i)")
                      ->delimiter(',');
        auto* c = cmd->add_option("--coeffs", coeffs, "rational coefficients p/q")->delimiter(',');
        auto* f = cmd->add_option("--boundary", file, "boundary JSON file");
        p->excludes(c)->excludes(f);
        c->excludes(f);
    }

    Boundary resolve() const {
        if (!file.empty()) return io::boundary_from_json(io::read_document(file));
        if (!coeffs.empty()) return Boundary::from_coefficients(parse_rationals(coeffs));
        return Boundary::from_standard_indices(points);
    }
};

struct Context {
    const RunOptions& options;
    CommandResult result;
    bool table = false;
    std::string registry_file;

    ComplementRegistry registry() const {
        if (registry_file.empty()) return ComplementRegistry::defaults();
        return io::registry_from_json(io::read_document(registry_file));
    }
};

void add_compl(CLI::App& app, Context& ctx) {
    auto* compl_cmd = app.add_subcommand("compl", "minimal complement indices");
    compl_cmd->require_subcommand(1);

    auto curve_in = std::make_shared<BoundaryInput>();
    auto curve_cap = std::make_shared<long>(0);
    auto* curve_cmd = compl_cmd->add_subcommand("curve", "boundary on P^1");
    curve_in->attach(curve_cmd);
    curve_cmd->add_option("--cap", *curve_cap, "search cap for non-standard boundaries");
    curve_cmd->callback([&ctx, curve_in, curve_cap] {
        const long cap = *curve_cap > 0 ? *curve_cap : ctx.options.search_cap;
        const Boundary b = curve_in->resolve();
        const auto best = curve::minimal_complement(b, cap);
        const bool exceptional = curve::is_exceptional(b);
        json out = report_json(best);
        out["degree"] = io::to_json(b.degree());
        out["exceptional"] = exceptional;
        if (exceptional) {
            out["non_klt"] = nullptr;
        } else {
            try {
                out["non_klt"] = report_json(curve::minimal_non_klt_complement(b, cap));
            } catch (const CapExceededError&) {
                out["non_klt"] = nullptr;
                ctx.result.diagnostics.push_back("no non-klt complement up to cap " + std::to_string(cap));
            }
        }
        ctx.result.payload = out;
    });

    auto arr_in = std::make_shared<BoundaryInput>();
    auto arr_dim = std::make_shared<int>(0);
    auto arr_cap = std::make_shared<long>(0);
    auto* arr_cmd = compl_cmd->add_subcommand("arrangement", "hyperplanes in general position on P^d");
    arr_cmd->add_option("--dim", *arr_dim, "dimension d")->required()->check(CLI::PositiveNumber);
    arr_in->attach(arr_cmd);
    arr_cmd->add_option("--cap", *arr_cap, "search cap");
    arr_cmd->callback([&ctx, arr_in, arr_dim, arr_cap] {
        const long cap = *arr_cap > 0 ? *arr_cap : ctx.options.search_cap;
        const arrangement::ArrangementPair pair{*arr_dim, arr_in->resolve()};
        const auto best = arrangement::minimal_complement(pair, cap);
        json out = report_json(best);
        out["dim"] = pair.dim;
        out["degree"] = io::to_json(pair.boundary.degree());
        out["volume"] = io::to_json(arrangement::anticanonical_volume(pair));
        out["exceeds_volume_bound"] = arrangement::exceeds_volume_bound(pair);
        out["standard"] = all_standard(pair.boundary);
        if (all_standard(pair.boundary)) {
            const bool candidate = arrangement::candidate_exceptional(pair);
            out["candidate_exceptional"] = candidate;
            const auto m = standard_indices(pair.boundary);
            const bool finite = std::find(m.begin(), m.end(), 0) == m.end();
            if (finite && m.size() == static_cast<std::size_t>(pair.dim) + 2 &&
                arrangement::reversed_candidate_exceptional(pair.dim, m) != candidate) {
                ctx.result.diagnostics.push_back(kInequalityNote);
            }
        }
        ctx.result.payload = out;
    });
}

void add_except(CLI::App& app, Context& ctx) {
    auto* except_cmd = app.add_subcommand("except", "exceptional collections");
    except_cmd->require_subcommand(1);
    auto dim = std::make_shared<int>(0);
    auto max_points = std::make_shared<int>(0);
    auto out_file = std::make_shared<std::string>();
    auto* en = except_cmd->add_subcommand("enumerate", "enumerate candidate exceptional collections");
    en->add_option("--dim", *dim, "dimension d")->required()->check(CLI::PositiveNumber);
    en->add_option("--max-points", *max_points,
                   "with --dim 1: all exceptional standard collections with at most this many points");
    en->add_option("--out", *out_file, "also write the table to this JSON file");
    en->callback([&ctx, dim, max_points, out_file] {
        json out;
        if (*max_points > 0) {
            if (*dim != 1) throw DomainError("--max-points applies to --dim 1 only");
            auto collections = curve::enumerate_exceptional_standard(*max_points);
            long max_index = 0;
            for (const auto& c : collections) max_index = std::max(max_index, c.back());
            out = {{"dim", 1}, {"max_points", *max_points}, {"count", collections.size()},
                   {"const", max_index}, {"collections", collections}};
        } else {
            const auto summary = arrangement::summarize_candidate_exceptional(*dim);
            out = {{"dim", *dim}, {"count", summary.count.get_si()}, {"const", summary.max_index}};
            if (summary.count <= arrangement::kDefaultEnumerationLimit) {
                out["collections"] = arrangement::enumerate_candidate_exceptional(*dim).collections;
            } else {
                out["collections"] = nullptr;
                ctx.result.diagnostics.push_back("too many collections to list; count and const only");
            }
            if (*dim >= 2) ctx.result.diagnostics.push_back(kInequalityNote);
        }
        if (!out_file->empty()) {
            std::ofstream f(*out_file, std::ios::binary);
            if (!f) throw Error("cannot write '" + *out_file + "'");
            f << out.dump(2) << '\n';
        }
        ctx.result.payload = out;
    });
}

void add_coeffs(CLI::App& app, Context& ctx) {
    auto* coeffs_cmd = app.add_subcommand("coeffs", "coefficient arithmetic");
    coeffs_cmd->require_subcommand(1);

    auto alpha = std::make_shared<std::string>();
    auto set_text = std::make_shared<std::string>("Msm");
    auto n = std::make_shared<long>(0);
    auto* check = coeffs_cmd->add_subcommand("check", "membership, rounding lemma, complement coefficient");
    check->add_option("--alpha", *alpha, "coefficient p/q")->required();
    check->add_option("--set", *set_text, "Msm, Mm<d>, or a '|'-union of Msm, [a,b] and points");
    check->add_option("--n", *n, "complement index for the rounding checks");
    check->add_option("--registry", ctx.registry_file, "registry JSON with further N_d values");
    check->callback([&ctx, alpha, set_text, n] {
        const Rational a = Rational::parse(*alpha);
        const auto set = CoefficientSet::parse(*set_text, ctx.registry());
        json out = {{"alpha", io::to_json(a)}, {"set", set.describe()}, {"member", is_member(a, set)}};
        if (*n > 0) {
            out["n"] = *n;
            out["rounding_lemma"] = rounding_lemma_holds(a, *n);
            out["complement_coeff"] = complement_coeff(a, *n).get_si();
        }
        ctx.result.payload = out;
    });

    auto m = std::make_shared<long>(1);
    auto terms = std::make_shared<std::vector<std::string>>();
    auto diff_set = std::make_shared<std::string>();
    auto* diff = coeffs_cmd->add_subcommand("different", "coefficient of the different");
    diff->add_option("--m", *m, "local index m")->required()->check(CLI::PositiveNumber);
    diff->add_option("--terms", *terms, "b:n pairs, e.g. 2/3:1")->delimiter(',');
    diff->add_option("--set", *diff_set, "also check closure in this coefficient set");
    diff->add_option("--registry", ctx.registry_file, "registry JSON with further N_d values");
    diff->callback([&ctx, m, terms, diff_set] {
        adjunction::DifferentInput input{*m, {}};
        for (const auto& t : *terms) {
            auto colon = t.find(':');
            if (colon == std::string::npos) throw ParseError("term '" + t + "' is not of the form b:n");
            input.terms.push_back({Rational::parse(t.substr(0, colon)), std::stol(t.substr(colon + 1))});
        }
        const Rational value = adjunction::different_coefficient(input);
        json out = {{"m", *m}, {"alpha", io::to_json(value)}, {"standard", is_standard(value)}};
        if (!diff_set->empty()) {
            const auto set = CoefficientSet::parse(*diff_set, ctx.registry());
            out["set"] = set.describe();
            out["closed"] = adjunction::closure_check(input, set);
        }
        for (auto& w : adjunction::different_warnings(input)) ctx.result.diagnostics.push_back(w);
        ctx.result.payload = out;
    });
}

json graph_analysis(const dualgraph::DualGraph& g) {
    json out = {{"vertices", g.size()}};
    auto minus = g.intersection_matrix();
    for (auto& row : minus)
        for (auto& x : row) x = -x;
    out["determinant"] = dualgraph::determinant(minus).get_str();
    const bool nd = dualgraph::is_negative_definite(g);
    out["negative_definite"] = nd;
    if (!nd) return out;
    const auto a = dualgraph::discrepancies(g);
    json dis = json::object();
    bool duval = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
        dis[g.vertices()[i].id] = io::to_json(a[i]);
        duval = duval && a[i].sign() == 0;
    }
    out["discrepancies"] = dis;
    out["klt"] = dualgraph::is_klt(a);
    out["lc"] = dualgraph::is_lc(a);
    out["duval"] = duval;
    if (duval) out["type"] = dualgraph::duval_type(g).name();
    return out;
}

void add_dualgraph(CLI::App& app, Context& ctx) {
    auto* dg = app.add_subcommand("dualgraph", "resolution dual graphs");
    dg->require_subcommand(1);

    auto file = std::make_shared<std::string>();
    auto removed = std::make_shared<std::vector<std::string>>();
    auto* analyze = dg->add_subcommand("analyze", "negative definiteness, discrepancies, klt/lc");
    analyze->add_option("graph", *file, "graph JSON file")->required();
    analyze->add_option("--remove", *removed, "vertex ids to delete before analysing the pieces")
        ->delimiter(',');
    analyze->callback([&ctx, file, removed] {
        const auto doc = io::graph_from_json(io::read_document(*file));
        json out = graph_analysis(doc.graph);
        if (doc.center) {
            out["center"] = *doc.center;
            out["collection"] = dualgraph::central_branch_collection(doc.graph, *doc.center);
            out["plt_center"] = dualgraph::is_plt_center(doc.graph, *doc.center);
        }
        if (!removed->empty()) {
            json parts = json::array();
            for (const auto& piece : doc.graph.components_without(*removed)) {
                json p = graph_analysis(piece);
                json ids = json::array();
                for (const auto& v : piece.vertices()) ids.push_back(v.id);
                p["ids"] = ids;
                parts.push_back(p);
            }
            out["components"] = parts;
        }
        ctx.result.payload = out;
    });

    auto duval_file = std::make_shared<std::string>();
    auto center = std::make_shared<std::string>();
    auto* duval = dg->add_subcommand("duval", "DuVal type, branch collection, exceptionality");
    duval->add_option("graph", *duval_file, "graph JSON file")->required();
    duval->add_option("--center", *center, "central vertex (defaults to the file's or the canonical one)");
    duval->callback([&ctx, duval_file, center] {
        const auto doc = io::graph_from_json(io::read_document(*duval_file));
        std::optional<std::string> c = doc.center;
        if (!center->empty()) c = *center;
        const auto r = dualgraph::classify_exceptional_duval(doc.graph, c);
        ctx.result.payload = {{"type", r.type.name()}, {"center", r.center},
                              {"collection", indices_to_json(r.collection)},
                              {"exceptional", r.exceptional}, {"compl", r.compl_index}};
    });
}

void add_lct(CLI::App& app, Context& ctx) {
    auto* lct_cmd = app.add_subcommand("lct", "piecewise-linear threshold engine");
    lct_cmd->require_subcommand(1);
    auto file = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>();
    auto* table = lct_cmd->add_subcommand("table", "sigma, alpha_0 and active divisors of a table");
    table->add_option("table", *file, "threshold table JSON file")->required();
    table->add_option("--alpha", *alpha, "also evaluate at this parameter");
    table->callback([&ctx, file, alpha] {
        const auto problem = io::problem_from_json(io::read_document(*file));
        const auto s = lct::sigma(problem);
        const Rational a0 = lct::alpha0(problem);
        json out = {{"sigma", io::to_json(s)}, {"alpha0", io::to_json(a0)},
                    {"active_at_alpha0", lct::active_labels(problem, a0)}};
        if (!alpha->empty()) {
            const Rational a = Rational::parse(*alpha);
            const auto values = lct::discrepancies_at(problem, a);
            json dis = json::object();
            for (std::size_t i = 0; i < values.size(); ++i)
                dis[problem.rows()[i].label] = io::to_json(values[i]);
            out["alpha"] = io::to_json(a);
            out["sigma_at_alpha"] = io::to_json(s(a));
            out["active"] = lct::active_labels(problem, a);
            out["discrepancies"] = dis;
        }
        ctx.result.payload = out;
    });
}

void add_fixtures(CLI::App& app, Context& ctx) {
    auto* fx = app.add_subcommand("fixtures", "named inputs shipped with the project");
    fx->require_subcommand(1);
    auto* list = fx->add_subcommand("list", "list fixtures from the manifest");
    list->callback([&ctx] {
        const std::string dir = ctx.options.data_dir + "/fixtures";
        json manifest = io::read_document(dir + "/manifest.json");
        json out = json::array();
        for (const auto& f : manifest.at("fixtures")) {
            json item = f;
            item["path"] = dir + "/" + f.at("file").get<std::string>();
            out.push_back(item);
        }
        ctx.result.payload = {{"fixtures", out}};
    });
}

CommandResult failure(ExitCode code, const std::string& kind, const std::string& message) {
    CommandResult r;
    r.ok = false;
    r.exit_code = code;
    r.payload = {{"error", {{"kind", kind}, {"message", message}}}};
    return r;
}

void render_table(std::ostream& os, const json& value, const std::string& indent) {
    if (value.is_object()) {
        for (const auto& [k, v] : value.items()) {
            if (v.is_structured()) {
                os << indent << k << ":\n";
                render_table(os, v, indent + "  ");
            } else {
                os << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
            }
        }
    } else if (value.is_array()) {
        for (const auto& v : value) {
            if (v.is_object()) {
                std::string line;
                for (const auto& [k, x] : v.items())
                    line += (line.empty() ? "" : "  ") + k + "=" +
                            (x.is_string() ? x.get<std::string>() : x.dump());
                os << indent << line << '\n';
            } else {
                os << indent << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
            }
        }
    } else {
        os << indent << value.dump() << '\n';
    }
}

}  // namespace

RunOptions RunOptions::from_environment() {
    RunOptions o;
    if (const char* cap = std::getenv("COMPLEMENT_SEARCH_CAP")) {
        try {
            long v = std::stol(cap);
            if (v > 0) o.search_cap = v;
        } catch (const std::exception&) {
        }
    }
    const char* data = std::getenv("COMPLEMENTS_DATA_DIR");
    o.data_dir = data ? data : COMPLEMENTS_DATA_DIR;
    return o;
}

CommandResult run(const std::vector<std::string>& args, const RunOptions& options) {
    Context ctx{options, {}, false, {}};
    CLI::App app{"Exact complement calculus for log pairs", "complements"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--table", ctx.table, "render a human-readable table instead of JSON");
    app.add_option_function<std::string>(
           "--format",
           [&ctx](const std::string& f) { ctx.table = f == "table"; },
           "output format: json (default) or table")
        ->check(CLI::IsMember({"json", "table"}));
    add_compl(app, ctx);
    add_except(app, ctx);
    add_coeffs(app, ctx);
    add_dualgraph(app, ctx);
    add_lct(app, ctx);
    add_fixtures(app, ctx);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        int code = app.exit(e, out, err);
        CommandResult r;
        if (code == 0) {
            r.text = out.str();
            return r;
        }
        r = failure(ExitCode::usage, "usage", e.what());
        r.text = err.str() + out.str() + app.help();
        return r;
    } catch (const io::InputFormatError& e) {
        return failure(ExitCode::malformed_input, "malformed_input", e.what());
    } catch (const ParseError& e) {
        return failure(ExitCode::usage, "usage", e.what());
    } catch (const RegistryIncompleteError& e) {
        return failure(ExitCode::domain, "registry_incomplete", e.what());
    } catch (const CapExceededError& e) {
        return failure(ExitCode::domain, "cap_exceeded", e.what());
    } catch (const NotNefError& e) {
        return failure(ExitCode::domain, "not_nef", e.what());
    } catch (const Error& e) {
        return failure(ExitCode::domain, "domain", e.what());
    } catch (const std::invalid_argument& e) {
        return failure(ExitCode::usage, "usage", e.what());
    } catch (const std::out_of_range& e) {
        return failure(ExitCode::usage, "usage", e.what());
    }
    ctx.result.table = ctx.table;
    return std::move(ctx.result);
}

std::string render(const CommandResult& result) {
    if (result.text && result.ok) return *result.text;
    json out = result.payload;
    out["status"] = result.ok ? "ok" : "error";
    if (!result.diagnostics.empty()) out["diagnostics"] = result.diagnostics;
    if (result.table && result.ok) {
        std::ostringstream os;
        render_table(os, out, "");
        return os.str();
    }
    return out.dump(2) + "\n";
}

}  // namespace complements::cli
