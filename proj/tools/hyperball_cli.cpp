// hyperball: kernel evaluation on grids and the verification harness.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "hyperball/config.hpp"
#include "hyperball/format.hpp"
#include "hyperball/kernels.hpp"
#include "hyperball/sweep.hpp"
#include "hyperball/transform.hpp"
#include "hyperball/verify.hpp"

using namespace hyperball;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFlagged = 2;
constexpr int kExitChecksFailed = 3;

// An input error that names the offending flag.
struct UsageError : std::invalid_argument {
    UsageError(const std::string& flag, const std::string& what) : std::invalid_argument(flag + ": " + what) {}
};

const char* kGridHelp = R"(Grid and value syntax:
  numbers         1.5, -2e-3
  complex         2, 0.5+1i, 3-2i, 5i
  points          one complex per coordinate, separated by ';' (0.3;0.1i for n = 2);
                  a single value is padded with zeros for n > 1
  --w-grid        radial:start:stop:count  points r e_1, r evenly spaced in [start, stop]
                  list:p1,p2,...          explicit points
  --t --s --xi --mu --j --lambda
                  a single value or list:v1,v2,...
Exit codes: 0 success, 1 input error, 2 quadrature flagged (output still written),
  3 verify: at least one check failed.)";

struct Flags {
    std::optional<int> n;
    std::optional<double> nu;
    std::optional<std::string> t, xi, mu, s, j, lambda, x;
    std::optional<std::string> z, w, w_grid;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> config, out, format;
    std::optional<double> lambda_max, rel_tol;
};

void add_flags(CLI::App* app, Flags& f) {
    app->add_option("--n", f.n, "complex dimension n");
    app->add_option("--nu", f.nu, "magnetic parameter nu (> n, not an integer)");
    app->add_option("--t", f.t, "time (heat, wave); verify: t for prop61");
    app->add_option("--xi", f.xi, "resolvent parameter xi (complex)");
    app->add_option("--mu", f.mu, "Green kernel parameter mu (complex)");
    app->add_option("--s", f.s, "spectral variable s (density)");
    app->add_option("--j", f.j, "eigenspace index j (projector)");
    app->add_option("--lambda", f.lambda, "spectral parameter lambda (poisson)");
    app->add_option("--x", f.x, "verify: x for prop61/prop62");
    app->add_option("--z", f.z, "first point (default: origin)");
    app->add_option("--w", f.w, "second point; boundary point for poisson");
    app->add_option("--w-grid", f.w_grid, "grid of second points");
    app->add_option("--seed", f.seed, "random seed");
    app->add_option("--config", f.config, "JSON run config; flags override it");
    app->add_option("--out", f.out, "output file (eval) or directory (verify)");
    app->add_option("--format", f.format, "csv or json");
    app->add_option("--lambda-max", f.lambda_max, "spectral cutoff");
    app->add_option("--rel-tol", f.rel_tol, "quadrature relative tolerance");
}

RunConfig resolve_config(const Flags& f) {
    RunConfig c = f.config ? load_run_config(*f.config) : RunConfig{};
    if (f.n) {
        c.params.n = *f.n;
        c.params_given = true;
    }
    if (f.nu) {
        c.params.nu = *f.nu;
        c.params_given = true;
    }
    if (f.seed) c.seed = *f.seed;
    if (f.out) c.output = *f.out;
    if (f.format) {
        if (*f.format == "csv")
            c.format = OutputFormat::csv;
        else if (*f.format == "json")
            c.format = OutputFormat::json;
        else
            throw UsageError("--format", "expected csv or json");
    }
    if (f.lambda_max) c.spec.lambda_max = *f.lambda_max;
    if (f.rel_tol) c.spec.rel_tol = *f.rel_tol;
    try {
        validate(c);
    } catch (const DomainError& e) {
        throw UsageError(f.n || f.nu ? "--n/--nu" : "--config", e.what());
    }
    return c;
}

// ---------------------------------------------------------------- parsing

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double parse_real(const std::string& flag, const std::string& s) {
    try {
        return parse_double(s);
    } catch (const std::invalid_argument&) {
        throw UsageError(flag, "not a number: '" + s + "'");
    }
}

cplx parse_complex(const std::string& flag, std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw UsageError(flag, "empty value");
    if (s.back() != 'i') return parse_real(flag, s);
    s.pop_back();
    // split at the last sign that is not a leading sign or an exponent sign
    std::size_t cut = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            cut = k;
            break;
        }
    auto imag = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real(flag, t);
    };
    if (cut == std::string::npos) return cplx(0.0, imag(s));
    return cplx(parse_real(flag, s.substr(0, cut)), imag(s.substr(cut)));
}

CVec parse_vector(const std::string& flag, const std::string& s, int n) {
    const std::vector<std::string> parts = split(s, ';');
    if (parts.size() != 1 && static_cast<int>(parts.size()) != n)
        throw UsageError(flag, "expected 1 or " + std::to_string(n) + " components, got " + std::to_string(parts.size()));
    CVec v = CVec::Zero(n);
    for (std::size_t k = 0; k < parts.size(); ++k) v(k) = parse_complex(flag, parts[k]);
    return v;
}

BallPoint parse_point(const std::string& flag, const std::string& s, int n) {
    try {
        return BallPoint(parse_vector(flag, s, n));
    } catch (const DomainError& e) {
        throw UsageError(flag, e.what());
    }
}

std::vector<std::string> value_list(const std::string& flag, const std::optional<std::string>& s) {
    if (!s) return {};
    std::vector<std::string> out = s->rfind("list:", 0) == 0 ? split(s->substr(5), ',') : std::vector<std::string>{*s};
    if (out.empty()) throw UsageError(flag, "empty list");
    return out;
}

std::vector<CVec> point_grid(const Flags& f, int n) {
    if (f.w && f.w_grid) throw UsageError("--w-grid", "give either --w or --w-grid");
    if (f.w) return {parse_vector("--w", *f.w, n)};
    if (!f.w_grid) throw UsageError("--w", "required (or --w-grid)");
    const std::string& g = *f.w_grid;
    std::vector<CVec> out;
    if (g.rfind("radial:", 0) == 0) {
        const std::vector<std::string> parts = split(g.substr(7), ':');
        if (parts.size() != 3) throw UsageError("--w-grid", "expected radial:start:stop:count");
        const double a = parse_real("--w-grid", parts[0]), b = parse_real("--w-grid", parts[1]);
        int count = 0;
        try {
            count = std::stoi(parts[2]);
        } catch (const std::exception&) {
            throw UsageError("--w-grid", "count must be an integer");
        }
        if (count < 1) throw UsageError("--w-grid", "count must be positive");
        for (int k = 0; k < count; ++k) {
            CVec v = CVec::Zero(n);
            v(0) = count == 1 ? a : a + (b - a) * k / (count - 1);
            out.push_back(v);
        }
    } else if (g.rfind("list:", 0) == 0) {
        for (const std::string& s : split(g.substr(5), ',')) out.push_back(parse_vector("--w-grid", s, n));
    } else {
        throw UsageError("--w-grid", "expected radial:start:stop:count or list:p1,p2,...");
    }
    return out;
}

// ---------------------------------------------------------------- eval

struct EvalPlan {
    std::vector<std::string> param_columns;
    std::vector<std::vector<double>> param_values;  // [k] → one entry per param column
    std::function<KernelValue(std::size_t k, const BallPoint& z, const CVec& w)> eval;
};

EvalPlan plan_eval(const std::string& kind, const Flags& f, const RunConfig& c) {
    const Parameters& p = c.params;
    const QuadratureSpec spec = c.spec;
    EvalPlan plan;
    auto require = [&](const char* flag, const std::optional<std::string>& v) {
        if (!v) throw UsageError(flag, "required for eval " + kind);
        return value_list(flag, v);
    };
    auto reals = [&](const char* flag, const std::optional<std::string>& v) {
        std::vector<double> out;
        for (const std::string& s : require(flag, v)) out.push_back(parse_real(flag, s));
        return out;
    };
    auto complexes = [&](const char* flag, const std::optional<std::string>& v) {
        std::vector<cplx> out;
        for (const std::string& s : require(flag, v)) out.push_back(parse_complex(flag, s));
        return out;
    };
    if (kind == "heat" || kind == "wave") {
        const std::vector<double> ts = reals("--t", f.t);
        plan.param_columns = {"t"};
        for (double t : ts) plan.param_values.push_back({t});
        const bool heat = kind == "heat";
        plan.eval = [=](std::size_t k, const BallPoint& z, const CVec& w) {
            return heat ? heat_kernel(p, ts[k], z, BallPoint(w), spec) : wave_kernel(p, ts[k], z, BallPoint(w), spec);
        };
    } else if (kind == "resolvent" || kind == "green") {
        const bool res = kind == "resolvent";
        const std::vector<cplx> vs = res ? complexes("--xi", f.xi) : complexes("--mu", f.mu);
        plan.param_columns = res ? std::vector<std::string>{"xi_re", "xi_im"} : std::vector<std::string>{"mu_re", "mu_im"};
        for (cplx v : vs) plan.param_values.push_back({v.real(), v.imag()});
        plan.eval = [=](std::size_t k, const BallPoint& z, const CVec& w) {
            return res ? resolvent_kernel(p, vs[k], z, BallPoint(w), spec) : green_kernel(p, vs[k], z, BallPoint(w));
        };
    } else if (kind == "density") {
        const std::vector<double> ss = reals("--s", f.s);
        plan.param_columns = {"s"};
        for (double s : ss) plan.param_values.push_back({s});
        plan.eval = [=](std::size_t k, const BallPoint& z, const CVec& w) {
            return spectral_density_continuous(p, ss[k], z, BallPoint(w));
        };
    } else if (kind == "projector") {
        const std::vector<SpectrumAtom> atoms = discrete_spectrum(p);
        std::vector<int> js;
        for (const std::string& s : require("--j", f.j)) {
            const double v = parse_real("--j", s);
            if (v != std::floor(v) || v < 0 || v >= static_cast<double>(atoms.size()))
                throw UsageError("--j", "must be an integer in [0, " + std::to_string(atoms.size()) + ")");
            js.push_back(static_cast<int>(v));
        }
        plan.param_columns = {"j"};
        for (int j : js) plan.param_values.push_back({double(j)});
        plan.eval = [=](std::size_t k, const BallPoint& z, const CVec& w) {
            return projector_kernel(p, atoms[js[k]], z, BallPoint(w));
        };
    } else if (kind == "poisson") {
        const std::vector<double> ls = reals("--lambda", f.lambda);
        plan.param_columns = {"lambda"};
        for (double l : ls) plan.param_values.push_back({l});
        plan.eval = [=](std::size_t k, const BallPoint& z, const CVec& w) {
            KernelValue kv{};
            kv.value = poisson_kernel(p, ls[k], z, BoundaryPoint(w));
            kv.radial = kv.value;
            return kv;
        };
    } else {
        throw UsageError("eval", "unknown kind '" + kind + "' (heat, wave, resolvent, density, projector, green, poisson)");
    }
    return plan;
}

std::string header_comment(const std::string& what, const RunConfig& c) {
    nlohmann::ordered_json h = to_json(c);
    h.erase("output");
    h.erase("format");
    return "# hyperball " HYPERBALL_VERSION " " + what + " " + h.dump() + "\n";
}

int cmd_eval(const std::string& kind, const Flags& f) {
    const RunConfig c = resolve_config(f);
    const int n = c.params.n;
    const BallPoint z = f.z ? parse_point("--z", *f.z, n) : BallPoint::origin(n);
    const std::vector<CVec> ws = point_grid(f, n);
    const EvalPlan plan = plan_eval(kind, f, c);

    const std::size_t rows = plan.param_values.size() * ws.size();
    const std::vector<KernelValue> values = map_indices<KernelValue>(
        rows, [&](std::size_t i) { return plan.eval(i / ws.size(), z, ws[i % ws.size()]); }, Execution::parallel);

    bool flagged = false;
    std::ostringstream os;
    if (c.format == OutputFormat::csv) {
        os << header_comment("eval " + kind, c);
        std::vector<std::string> cols = plan.param_columns;
        for (const char* pt : {"z", "w"})
            for (int k = 1; k <= n; ++k) {
                cols.push_back(std::string(pt) + std::to_string(k) + "_re");
                cols.push_back(std::string(pt) + std::to_string(k) + "_im");
            }
        for (const char* s : {"value_re", "value_im", "diag_nodes", "diag_flag"}) cols.emplace_back(s);
        for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << cols[k];
        os << '\n';
    }
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rows; ++i) {
        const std::vector<double>& pv = plan.param_values[i / ws.size()];
        const CVec& w = ws[i % ws.size()];
        const KernelValue& kv = values[i];
        flagged = flagged || !kv.diagnostics.converged;
        if (c.format == OutputFormat::csv) {
            std::string line;
            auto put = [&](const std::string& s) { line += (line.empty() ? "" : ",") + s; };
            for (double v : pv) put(format_g17(v));
            for (const CVec* v : {&z.z(), &w})
                for (int k = 0; k < n; ++k) {
                    put(format_g17((*v)(k).real()));
                    put(format_g17((*v)(k).imag()));
                }
            put(format_g17(kv.value.real()));
            put(format_g17(kv.value.imag()));
            put(std::to_string(kv.diagnostics.nodes));
            put(kv.diagnostics.converged ? "0" : "1");
            os << line << '\n';
        } else {
            nlohmann::ordered_json r;
            for (std::size_t k = 0; k < pv.size(); ++k) r[plan.param_columns[k]] = pv[k];
            for (const auto& [name, v] : {std::pair{"z", &z.z()}, std::pair{"w", &w}}) {
                nlohmann::ordered_json a = nlohmann::ordered_json::array();
                for (int k = 0; k < n; ++k) a.push_back({{"re", (*v)(k).real()}, {"im", (*v)(k).imag()}});
                r[name] = a;
            }
            r["value"] = {{"re", kv.value.real()}, {"im", kv.value.imag()}};
            r["diag_nodes"] = kv.diagnostics.nodes;
            r["diag_flag"] = !kv.diagnostics.converged;
            if (!kv.diagnostics.converged) r["diag_message"] = kv.diagnostics.message;
            jrows.push_back(r);
        }
    }
    if (c.format == OutputFormat::json) {
        nlohmann::ordered_json doc;
        doc["artifact"] = "hyperball " HYPERBALL_VERSION;
        doc["kind"] = kind;
        doc["config"] = to_json(c);
        doc["config"].erase("output");
        doc["rows"] = jrows;
        os << doc.dump(2) << '\n';
    }
    if (c.output.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(c.output, std::ios::binary);
        if (!out) throw UsageError("--out", "cannot write " + c.output);
        out << os.str();
    }
    if (flagged) std::cerr << "warning: quadrature flagged on at least one row (diag_flag = 1)\n";
    return flagged ? kExitFlagged : kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& name, const Flags& f) {
    const RunConfig c = resolve_config(f);
    CheckRequest rq;
    if (c.params_given) rq.params = c.params;
    rq.spec = c.spec;
    rq.seed = c.seed;
    if (f.t) rq.t = parse_real("--t", *f.t);
    if (f.x) rq.x = parse_real("--x", *f.x);
    if (f.mu) rq.mu = parse_complex("--mu", *f.mu);
    if (f.xi) rq.xi = parse_complex("--xi", *f.xi);

    std::vector<VerificationReport> reports;
    if (name == "all") {
        reports = run_all(rq);
    } else {
        const auto& names = check_names();
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw UsageError("verify", "unknown check '" + name + "'");
        reports.push_back(run_check(name, rq));
    }

    const std::filesystem::path dir = c.output.empty() ? std::filesystem::path(".") : std::filesystem::path(c.output);
    std::filesystem::create_directories(dir);
    bool all_passed = true;
    std::cout << std::left << std::setw(20) << "check" << std::setw(50) << "ratio" << std::setw(26) << "cv"
              << "passed\n";
    for (const VerificationReport& r : reports) {
        std::ofstream out(dir / (r.check + ".json"), std::ios::binary);
        if (!out) throw UsageError("--out", "cannot write into " + dir.string());
        out << to_json_string(r);
        const std::string ratio = format_g17(r.ratio.real()) + (r.ratio.imag() < 0 ? "" : "+") +
                                  format_g17(r.ratio.imag()) + "i";
        std::cout << std::left << std::setw(20) << r.check << std::setw(50) << ratio << std::setw(26)
                  << format_g17(r.ratio_cv) << (r.passed ? "yes" : "no") << '\n';
        all_passed = all_passed && r.passed;
    }
    return all_passed ? kExitOk : kExitChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kernels of the magnetic Laplacian on the complex unit ball, and their verification harness"};
    app.footer(kGridHelp);
    app.require_subcommand(1);

    Flags f;
    std::string kind, check;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a kernel on a grid, CSV or JSON output");
    eval->add_option("kind", kind, "heat, wave, resolvent, density, projector, green, poisson")->required();
    add_flags(eval, f);
    CLI::App* verify = app.add_subcommand("verify", "run one check (or 'all'); one JSON report per check");
    verify->add_option("check", check, "check name or 'all'")->required();
    add_flags(verify, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }
    try {
        if (eval->parsed()) return cmd_eval(kind, f);
        return cmd_verify(check, f);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}
