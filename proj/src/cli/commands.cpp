#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tzeta/cli/cli.hpp"
#include "tzeta/core/errors.hpp"
#include "tzeta/core/parallel.hpp"
#include "tzeta/modular/eta.hpp"
#include "tzeta/opdet/operator.hpp"
#include "tzeta/special/special.hpp"
#include "tzeta/torus/torus_zeta.hpp"

namespace tzeta::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// + 0.0 folds negative zero
Json to_json(Complex z) { return Json{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

Json diagnostics_json(const Diagnostics& d) {
    return Json{{"terms_used", d.terms_used}, {"quad_evals", d.quad_evals}, {"warnings", d.warnings}};
}

std::string shortest(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string text_complex(Complex z) {
    std::string out = shortest(z.real());
    if (z.imag() != 0.0) out += (std::signbit(z.imag()) ? "-" : "+") + shortest(std::abs(z.imag())) + "i";
    return out;
}

struct Common {
    std::string format;
    std::string out_file;
    bool timing = false;
    Precision prec;
};

void add_common(CLI::App* app, Common& c, const std::string& default_format,
                const std::vector<std::string>& formats) {
    c.format = default_format;
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
    app->add_option("--out", c.out_file, "write output to FILE");
    app->add_flag("--timing", c.timing, "include wall-clock times");
    app->add_option("--tol-quad", c.prec.quad_rel_tol, "relative quadrature tolerance");
    app->add_option("--tol-series", c.prec.series_tail_tol, "series tail tolerance");
    app->add_option("--n-max", c.prec.n_max, "series term cap");
    app->add_option("--diff-step", c.prec.diff_step, "numerical differentiation step");
}

void check_precision(const Precision& p) {
    try {
        p.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

Json error_json(const Error& e) {
    return Json{{"schema", kSchemaVersion}, {"error", {{"kind", e.kind()}, {"message", e.what()}}}};
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ---- eval -----------------------------------------------------------------

struct EvalArgs {
    Common common;
    std::string what = "eisenstein";
    std::string s_text, tau_text, method_text, potential = "0";
    double x = 1.0;
};

const std::vector<std::string> kWhat = {"eisenstein", "zeta-laplacian", "remainder", "eta", "zeta-p",
                                        "zeta-operator", "riemann-zeta", "gamma", "heat-kernel"};

Complex require_s(const EvalArgs& a) {
    if (a.s_text.empty()) throw UsageError("--s is required for --what " + a.what);
    return parse_complex(a.s_text);
}

TauPoint require_tau(const std::string& text, const std::string& what) {
    if (text.empty()) throw UsageError("--tau is required for " + what);
    return TauPoint(parse_complex(text));
}

Json cmd_eval(const EvalArgs& a) {
    const Precision& p = a.common.prec;
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "eval";
    j["what"] = a.what;
    std::optional<Method> method;
    if (!a.method_text.empty()) method = parse_method(a.method_text);

    EvalResult res;
    bool has_result = false;
    if (a.what == "eisenstein" || a.what == "zeta-laplacian" || a.what == "remainder") {
        const Complex s = require_s(a);
        const TauPoint tau = require_tau(a.tau_text, "--what " + a.what);
        j["s"] = to_json(s);
        j["tau"] = to_json(tau.value());
        const Method m = method.value_or(Method::chowla_selberg);
        if (a.what == "eisenstein") {
            res = torus::eisenstein(s, tau, m, p);
        } else if (a.what == "zeta-laplacian") {
            res = torus::zeta_laplacian(s, tau, m, p);
        } else {
            res.method = m;
            if (m == Method::chowla_selberg) {
                res.value = torus::remainder_bessel(s, tau, p, &res.diagnostics);
            } else if (m == Method::contour) {
                res.value = torus::remainder_integral(s, tau, p, &res.diagnostics);
            } else {
                throw DomainError("the remainder has no direct representation");
            }
        }
        has_result = true;
    } else if (a.what == "eta") {
        const TauPoint tau = require_tau(a.tau_text, "--what eta");
        j["tau"] = to_json(tau.value());
        res.value = modular::eta(tau, p, &res.diagnostics);
        j["value"] = to_json(res.value);
        j["diagnostics"] = diagnostics_json(res.diagnostics);
    } else if (a.what == "zeta-p") {
        const Complex s = require_s(a);
        j["s"] = to_json(s);
        const Method m = method.value_or(s.real() < 1.0 ? Method::contour : Method::direct);
        if (m == Method::contour) {
            j["method"] = "contour";
            j["value"] = to_json(opdet::zeta_p_contour(s, p));
        } else {
            j["method"] = "riemann_zeta";
            j["value"] = to_json(opdet::zeta_p(s));
        }
    } else if (a.what == "zeta-operator") {
        const Complex s = require_s(a);
        j["s"] = to_json(s);
        j["potential"] = a.potential;
        res = opdet::zeta_operator(opdet::OperatorSpec(parse_expression(a.potential), a.potential), s, p);
        has_result = true;
    } else if (a.what == "riemann-zeta" || a.what == "gamma") {
        const Complex s = require_s(a);
        j["s"] = to_json(s);
        j["value"] = to_json(a.what == "gamma" ? special::gamma(s) : special::riemann_zeta(s));
    } else {  // heat-kernel
        const TauPoint tau = require_tau(a.tau_text, "--what heat-kernel");
        j["x"] = a.x;
        j["tau"] = to_json(tau.value());
        j["value"] = torus::heat_kernel(a.x, tau, p);
    }
    if (has_result) {
        j["method"] = std::string(to_string(res.method));
        j["value"] = to_json(res.value);
        j["err_estimate"] = res.err_estimate;
        j["diagnostics"] = diagnostics_json(res.diagnostics);
    }
    return j;
}

// ---- det ------------------------------------------------------------------

struct DetArgs {
    Common common;
    std::string kind;
    std::string tau_text;
    std::string potential = "0";
};

Json cmd_det(const DetArgs& a) {
    const Precision& p = a.common.prec;
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "det";
    j["kind"] = a.kind;
    double closed = 0.0;
    Extrapolated<double> d0;
    if (a.kind == "torus") {
        const TauPoint tau = require_tau(a.tau_text, "det torus");
        j["tau"] = to_json(tau.value());
        closed = torus::determinant_torus(tau, p);
        d0 = torus::zeta_laplacian_deriv0_numeric(tau, p);
    } else {
        const opdet::OperatorSpec spec(parse_expression(a.potential), a.potential);
        j["potential"] = a.potential;
        closed = std::exp(opdet::log_det(spec, p));
        // zeta_O'(0) = -log det
        d0 = opdet::zeta_operator_deriv0_numeric(spec, p);
    }
    const double numerical = std::exp(-d0.value);
    j["closed_form"] = closed;
    j["numerical"] = numerical;
    j["difference"] = std::abs(numerical - closed);
    j["derivative_error"] = d0.error;
    return j;
}

// ---- identities -----------------------------------------------------------

struct IdentityArgs {
    Common common;
    std::string filter;
    double tol_scale = 1.0;
    bool list = false;
};

std::string render_identities(const IdentityArgs& a, const std::vector<IdentityEntry>& entries) {
    std::size_t passed = 0;
    for (const auto& e : entries) passed += e.pass ? 1 : 0;
    const std::string& fmt = a.common.format;
    std::ostringstream os;
    if (fmt == "json") {
        Json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "identities";
        j["filter"] = a.filter;
        Json list = Json::array();
        for (const auto& e : entries) {
            Json row;
            row["id"] = e.id;
            row["anchor"] = e.anchor;
            row["lhs"] = to_json(e.lhs);
            row["rhs"] = to_json(e.rhs);
            row["residual"] = e.residual;
            row["tolerance"] = e.tolerance;
            row["pass"] = e.pass;
            if (!e.error.empty()) row["error"] = e.error;
            if (a.common.timing) row["runtime_ms"] = e.runtime_ms;
            list.push_back(std::move(row));
        }
        j["entries"] = std::move(list);
        j["summary"] = {{"total", entries.size()}, {"passed", passed}, {"failed", entries.size() - passed}};
        os << j.dump(2) << '\n';
    } else if (fmt == "csv") {
        os << "id,pass,residual,tolerance,lhs_re,lhs_im,rhs_re,rhs_im";
        if (a.common.timing) os << ",runtime_ms";
        os << '\n';
        for (const auto& e : entries) {
            os << e.id << ',' << (e.pass ? "true" : "false") << ',' << shortest(e.residual) << ','
               << shortest(e.tolerance) << ',' << shortest(e.lhs.real()) << ',' << shortest(e.lhs.imag()) << ','
               << shortest(e.rhs.real()) << ',' << shortest(e.rhs.imag());
            if (a.common.timing) os << ',' << shortest(e.runtime_ms);
            os << '\n';
        }
    } else {
        for (const auto& e : entries) {
            os << (e.pass ? "PASS " : "FAIL ") << e.id << "  residual=" << shortest(e.residual)
               << " tol=" << shortest(e.tolerance);
            if (!e.error.empty()) os << "  [" << e.error << ']';
            if (a.common.timing) os << "  " << shortest(e.runtime_ms) << "ms";
            os << '\n';
        }
        os << passed << '/' << entries.size() << " identities passed\n";
    }
    return os.str();
}

// ---- table ----------------------------------------------------------------

struct TableArgs {
    Common common;
    std::string s_grid, s_text;
    std::vector<std::string> taus;
    int tau_arc = 0;
    std::string columns = "cs";
};

const std::vector<std::string> kColumns = {"direct", "cs", "contour", "remainder", "det"};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

double parse_real_arg(const std::string& text, const std::string& what) {
    const Complex z = parse_complex(text);
    if (z.imag() != 0.0) throw UsageError(what + " must be real");
    return z.real();
}

std::string render_table(const TableArgs& a) {
    const Precision& p = a.common.prec;
    const auto cols = split(a.columns, ',');
    for (const auto& c : cols) {
        if (std::find(kColumns.begin(), kColumns.end(), c) == kColumns.end()) {
            throw UsageError("unknown column '" + c + "'");
        }
    }
    const bool needs_s = std::any_of(cols.begin(), cols.end(), [](const std::string& c) { return c != "det"; });

    std::vector<std::optional<Complex>> s_values;
    if (!a.s_grid.empty()) {
        const auto parts = split(a.s_grid, ':');
        if (parts.size() != 3) throw UsageError("--s-grid expects start:stop:step");
        const double lo = parse_real_arg(parts[0], "grid start");
        const double hi = parse_real_arg(parts[1], "grid stop");
        const double step = parse_real_arg(parts[2], "grid step");
        if (!(step > 0.0)) throw UsageError("--s-grid step must be positive");
        if (hi >= lo) {
            const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
            for (long k = 0; k < count; ++k) {
                const double s = lo + static_cast<double>(k) * step;
                if (s != 1.0) s_values.emplace_back(Complex(s));
            }
        }
    } else if (!a.s_text.empty()) {
        s_values.emplace_back(parse_complex(a.s_text));
    } else if (needs_s) {
        throw UsageError("table needs --s or --s-grid for columns other than det");
    } else {
        s_values.emplace_back(std::nullopt);
    }

    std::vector<TauPoint> taus;
    for (const auto& t : a.taus) taus.emplace_back(parse_complex(t));
    if (a.tau_arc > 0) {
        // |tau| = 1 between the corners e^{i pi/3} and e^{2 i pi/3}
        for (int k = 0; k < a.tau_arc; ++k) {
            const double theta = a.tau_arc == 1 ? kPi / 2.0 : kPi / 3.0 + (kPi / 3.0) * k / (a.tau_arc - 1);
            taus.emplace_back(std::cos(theta), std::sin(theta));
        }
    }
    if (taus.empty()) throw UsageError("table needs --tau or --tau-arc");

    struct Row {
        std::optional<Complex> s;
        TauPoint tau;
        std::vector<std::optional<Complex>> cells;
    };
    std::vector<Row> rows;
    for (const auto& t : taus) {
        for (const auto& s : s_values) rows.push_back({s, t, {}});
    }
    parallel_for(rows.size(), [&](std::size_t i) {
        Row& row = rows[i];
        for (const auto& c : cols) {
            std::optional<Complex> v;
            try {
                if (c == "det") {
                    v = torus::determinant_torus(row.tau, p);
                } else {
                    const Complex s = *row.s;
                    if (c == "direct" && s.real() > 1.0) v = torus::eisenstein_direct(s, row.tau, p).value;
                    if (c == "cs") v = torus::eisenstein_cs(s, row.tau, p).value;
                    if (c == "contour" && s.real() < 1.0) v = torus::eisenstein_contour(s, row.tau, p).value;
                    if (c == "remainder") v = torus::remainder_bessel(s, row.tau, p);
                }
            } catch (const DomainError&) {
                v.reset();
            }
            row.cells.push_back(v);
        }
    });

    std::ostringstream os;
    if (a.common.format == "json") {
        Json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "table";
        j["columns"] = cols;
        Json list = Json::array();
        for (const auto& r : rows) {
            Json row;
            row["s"] = r.s ? to_json(*r.s) : Json();
            row["tau"] = to_json(r.tau.value());
            for (std::size_t k = 0; k < cols.size(); ++k) row[cols[k]] = r.cells[k] ? to_json(*r.cells[k]) : Json();
            list.push_back(std::move(row));
        }
        j["rows"] = std::move(list);
        os << j.dump(2) << '\n';
    } else {
        os << "s_re,s_im,tau_re,tau_im";
        for (const auto& c : cols) os << ',' << c << "_re," << c << "_im";
        os << '\n';
        for (const auto& r : rows) {
            if (r.s) {
                os << shortest(r.s->real()) << ',' << shortest(r.s->imag());
            } else {
                os << ',';
            }
            os << ',' << shortest(r.tau.tau1) << ',' << shortest(r.tau.tau2);
            for (const auto& cell : r.cells) {
                if (cell) {
                    os << ',' << shortest(cell->real()) << ',' << shortest(cell->imag());
                } else {
                    os << ",,";
                }
            }
            os << '\n';
        }
    }
    return os.str();
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out_file, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + c.out_file);
    f << text;
}

std::string render_json_or_text(const Common& c, Json j, double ms) {
    if (c.timing) j["runtime_ms"] = ms;
    if (c.format == "json") return j.dump(2) + "\n";
    std::ostringstream os;
    for (const auto& [key, value] : j.items()) {
        if (key == "schema" || key == "command") continue;
        if (value.is_object() && value.contains("re") && value.contains("im")) {
            os << key << " = " << text_complex({value["re"].get<double>(), value["im"].get<double>()}) << '\n';
        } else if (value.is_number_float()) {
            os << key << " = " << shortest(value.get<double>()) << '\n';
        } else {
            os << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    }
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral zeta functions and determinants on the torus and the interval", "tzeta"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "evaluate one quantity at a point");
    add_common(eval, ev.common, "json", {"json", "text"});
    eval->add_option("--what", ev.what, "quantity")->check(CLI::IsMember(kWhat));
    eval->add_option("--s", ev.s_text, "argument s as a+bi");
    eval->add_option("--tau", ev.tau_text, "modulus tau as a+bi with Im tau > 0");
    eval->add_option("--method", ev.method_text, "direct | cs | contour");
    eval->add_option("--potential", ev.potential, "V(x) for --what zeta-operator");
    eval->add_option("--x", ev.x, "heat-kernel argument");

    DetArgs dt;
    auto* det = app.add_subcommand("det", "closed-form and numerically differentiated determinant");
    add_common(det, dt.common, "json", {"json", "text"});
    det->add_option("kind", dt.kind, "torus | operator")->required()->check(CLI::IsMember({"torus", "operator"}));
    det->add_option("--tau", dt.tau_text, "modulus for the torus");
    det->add_option("--potential", dt.potential, "V(x) on [0, 1] for the operator");

    IdentityArgs id;
    auto* ids = app.add_subcommand("identities", "run the identity suite");
    add_common(ids, id.common, "text", {"json", "csv", "text"});
    ids->add_option("--filter", id.filter, "substring of the identity id");
    ids->add_option("--tol-identity", id.tol_scale, "factor applied to every identity tolerance");
    ids->add_flag("--list", id.list, "print the registered ids and exit");

    TableArgs tb;
    auto* table = app.add_subcommand("table", "tabulate E*, Q and det over a grid");
    add_common(table, tb.common, "csv", {"csv", "json"});
    table->add_option("--s-grid", tb.s_grid, "real grid start:stop:step (s = 1 is skipped)");
    table->add_option("--s", tb.s_text, "single point s");
    table->add_option("--tau", tb.taus, "modulus (repeatable)");
    table->add_option("--tau-arc", tb.tau_arc, "N points on the arc |tau| = 1 of the fundamental domain")
        ->check(CLI::NonNegativeNumber);
    table->add_option("--columns", tb.columns, "comma-separated subset of direct,cs,contour,remainder,det");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "tzeta: " << e.what() << '\n';
        return kExitUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Common* common = nullptr;
    try {
        if (eval->parsed()) {
            common = &ev.common;
            check_precision(ev.common.prec);
            const Json j = cmd_eval(ev);
            emit(ev.common, render_json_or_text(ev.common, j, elapsed_ms(t0)), out);
            return kExitOk;
        }
        if (det->parsed()) {
            common = &dt.common;
            check_precision(dt.common.prec);
            const Json j = cmd_det(dt);
            emit(dt.common, render_json_or_text(dt.common, j, elapsed_ms(t0)), out);
            return kExitOk;
        }
        if (ids->parsed()) {
            common = &id.common;
            if (id.list) {
                std::string text;
                for (const auto& name : identity_ids()) text += name + "\n";
                emit(id.common, text, out);
                return kExitOk;
            }
            SuiteOptions opt;
            opt.precision = id.common.prec;
            opt.filter = id.filter;
            opt.tol_scale = id.tol_scale;
            const auto entries = run_identities(opt);
            emit(id.common, render_identities(id, entries), out);
            const bool ok = std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
            return ok ? kExitOk : kExitFailure;
        }
        common = &tb.common;
        check_precision(tb.common.prec);
        emit(tb.common, render_table(tb), out);
        return kExitOk;
    } catch (const UsageError& e) {
        err << "tzeta: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "tzeta: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        const std::string text = error_json(e).dump(2) + "\n";
        try {
            emit(*common, text, out);
        } catch (const UsageError&) {
            out << text;
        }
        return kExitDomain;
    }
}

}  // namespace tzeta::cli
