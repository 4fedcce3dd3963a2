#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <system_error>

#include <CLI11.hpp>

#include "pcf/contours.hpp"
#include "pcf/errors.hpp"
#include "pcf/scalar.hpp"
#include "pcf/ureg.hpp"

namespace pcf::cli {

namespace {

bool parse_real(const std::string& s, double& v) {
    const char* b = s.data();
    const char* e = b + s.size();
    if (b != e && *b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    return ec == std::errc() && p == e;
}

struct FuncSel {
    Func func;
    bool derivative;
};

const std::map<std::string, FuncSel>& func_table() {
    static const std::map<std::string, FuncSel> m{
        {"U", {Func::U, false}}, {"V", {Func::V, false}}, {"W", {Func::W, false}},
        {"Up", {Func::U, true}}, {"Vp", {Func::V, true}}, {"Wp", {Func::W, true}},
    };
    return m;
}

// Runs f and maps library exceptions to exit codes.
template <class F>
int guarded(std::ostream& err, F&& f) {
    try {
        return f();
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << '\n';
        return kDomain;
    } catch (const WindowError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const ConvergenceError& e) {
        err << "convergence failure: " << e.what() << " (error estimate " << fmt(e.err_estimate()) << ", "
            << e.evaluations() << " evaluations)\n";
        return kConvergence;
    } catch (const TraceError& e) {
        err << "trace failure: " << e.what() << " (worst residual " << fmt(e.worst_residual()) << ")\n";
        return kConvergence;
    }
}

struct Rendered {
    double value = 0.0;
    double log_scale = 0.0;
};

Rendered render(const ScaledReal& v, bool scaled) {
    if (scaled) return {v.significand(), v.log_scale()};
    return {v.to_double(), 0.0};
}

long range_count(const Range& r) {
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !std::isfinite(r.step))
        throw DomainError("table ranges must be finite");
    if (!(r.step > 0.0)) throw DomainError("table step must be positive");
    if (r.hi < r.lo) throw DomainError("table range needs lo <= hi");
    double n = std::floor((r.hi - r.lo) / r.step * (1.0 + 1e-12)) + 1.0;
    if (n > double(kMaxRows)) throw DomainError("table row count exceeds the cap");
    return long(n);
}

Regime regime_from_name(const std::string& name) {
    static const Regime all[] = {Regime::UPos,     Regime::UNegMid,   Regime::UNegNear1, Regime::UNegRight,
                                 Regime::UNegLeft, Regime::WNeg,      Regime::WPosRight, Regime::WPosTurn,
                                 Regime::WPosMid};
    for (Regime r : all)
        if (regime_name(r) == name) return r;
    throw DomainError("unknown regime " + name);
}

}  // namespace

double default_tol() {
    const char* env = std::getenv("PCF_TOL");
    double v = 0.0;
    if (env != nullptr && parse_real(env, v)) return v;
    return kDefaultTol;
}

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, p);
}

int cmd_eval(const EvalRequest& req, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        EvalOutput o = evaluate(req);
        const ScaledReal& v = req.want_derivative ? *o.derivative : o.value;
        Rendered r = render(v, req.want_scaled);
        out << fmt(r.value);
        if (req.want_scaled) out << ',' << fmt(r.log_scale);
        out << ',' << regime_name(o.regime) << ',' << fmt(o.diagnostics.wronskian_residual) << '\n';
        return int(kOk);
    });
}

int cmd_table(const TableSpec& spec, std::ostream& out, std::ostream& err) {
    long na = 0, nx = 0;
    int code = guarded(err, [&] {
        na = range_count(spec.a_range);
        nx = range_count(spec.x_range);
        if (double(na) * double(nx) > double(kMaxRows)) throw DomainError("table row count exceeds the cap");
        if (!(spec.tol >= 1e-14 && spec.tol <= 1e-6)) throw DomainError("tol must lie in [1e-14, 1e-6]");
        return int(kOk);
    });
    if (code != kOk) return code;

    const bool json = spec.format == Format::Json;
    int first_error = kOk;
    if (json) {
        out << "[\n";
    } else {
        out << "a,x,value,log_scale,regime,residual\n";
    }
    auto jnum = [](double v) { return std::isfinite(v) ? fmt(v) : std::string("null"); };
    for (long i = 0; i < na; ++i) {
        double a = spec.a_range.lo + double(i) * spec.a_range.step;
        for (long j = 0; j < nx; ++j) {
            double x = spec.x_range.lo + double(j) * spec.x_range.step;
            EvalRequest req{spec.func, a, x, spec.derivative, spec.scaled, spec.tol};
            Rendered r{NAN, NAN};
            std::string regime = "ERROR";
            double residual = NAN;
            std::ostringstream row_err;
            int rc = guarded(row_err, [&] {
                EvalOutput o = evaluate(req);
                r = render(spec.derivative ? *o.derivative : o.value, spec.scaled);
                regime = std::string(regime_name(o.regime));
                residual = o.diagnostics.wronskian_residual;
                return int(kOk);
            });
            if (rc != kOk) {
                err << "a=" << fmt(a) << " x=" << fmt(x) << ": " << row_err.str();
                if (first_error == kOk) first_error = rc;
            }
            if (json) {
                out << "  {\"a\": " << jnum(a) << ", \"x\": " << jnum(x) << ", \"value\": " << jnum(r.value)
                    << ", \"log_scale\": " << jnum(r.log_scale) << ", \"regime\": \"" << regime
                    << "\", \"residual\": " << jnum(residual) << '}' << (i + 1 == na && j + 1 == nx ? "" : ",")
                    << '\n';
            } else {
                out << fmt(a) << ',' << fmt(x) << ',' << fmt(r.value) << ',' << fmt(r.log_scale) << ',' << regime
                    << ',' << fmt(residual) << '\n';
            }
        }
    }
    if (json) out << "]\n";
    return first_error;
}

int cmd_contour(const std::string& regime, double t, int samples, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!std::isfinite(t)) throw DomainError("t must be finite");
        TracedPath path = contour_samples(regime_from_name(regime), t, samples);
        out << "param,u,v,r,residual\n";
        for (const auto& p : path.points)
            out << fmt(p.param) << ',' << fmt(p.u) << ',' << fmt(p.v) << ',' << fmt(p.r) << ','
                << fmt(p.on_path_residual) << '\n';
        return int(kOk);
    });
}

bool SelftestReport::pass() const {
    for (const auto& c : cells)
        if (!c.pass()) return false;
    return true;
}

SelftestReport run_selftest(double gamma_perturbation) {
    struct HookGuard {
        explicit HookGuard(double rel) { set_gamma_aux_perturbation(rel); }
        ~HookGuard() { set_gamma_aux_perturbation(0.0); }
    } hook(gamma_perturbation);

    constexpr double kLimit = 1e-8;
    SelftestReport rep;
    auto cell = [&](const std::string& family, double a, double t, auto&& f) {
        SelftestCell c{family, a, t, 0.0, kLimit, {}};
        try {
            c.residual = f(c);
        } catch (const std::exception& e) {
            c.residual = INFINITY;
            c.note = e.what();
        }
        rep.cells.push_back(c);
    };
    auto xt = [](double a, double t) { return 2.0 * t * std::sqrt(std::fabs(a)); };

    for (double a : {1.0, 5.0, 25.0, 100.0, 1e3})
        for (double t : {0.01, 0.1, 1.0, 5.0})
            cell("U_POS integral Wronskian", a, t,
                 [&](SelftestCell&) { return u_pos_assemble(a, xt(a, t)).wronskian_residual; });
    for (double a : {5.0, 25.0, 100.0, 1e3})
        for (double t : {-0.85, -0.5, -0.2, 0.2, 0.5, 0.85})
            cell("U_NEG_MID integral Wronskian", -a, t,
                 [&](SelftestCell&) { return uv_neg_mid(a, xt(a, t)).wronskian_residual; });
    for (double a : {5.0, 100.0})
        for (double t : {1.2, 3.0, 10.0})
            cell("U_NEG_RIGHT integral Wronskian", -a, t,
                 [&](SelftestCell&) { return uv_neg_right(a, xt(a, t)).wronskian_residual; });
    for (double a : {-1e3, -10.0, -2.0, 2.0, 10.0, 1e3})
        for (double t : {0.0, 0.5, 3.0})
            cell("W Wronskian", a, t, [&](SelftestCell& c) {
                PairOutput p = evaluate_pair(Func::W, a, xt(a, t));
                double loss = std::max(p.plus.diagnostics.accuracy_loss_digits,
                                       p.minus.diagnostics.accuracy_loss_digits);
                if (loss > 4.0) {
                    c.note = "skipped: accuracy loss " + fmt(loss) + " digits";
                    return 0.0;
                }
                return p.plus.diagnostics.wronskian_residual;
            });
    struct Pt {
        double a, t;
    };
    for (Pt p : {Pt{0.3, 0.8}, Pt{-0.3, -1.5}, Pt{1.5, 0.4}, Pt{3.0, -0.6}, Pt{8.0, 1.5}, Pt{-2.0, 0.3},
                 Pt{-5.0, -0.6}, Pt{-5.0, 0.95}, Pt{-3.0, -0.93}, Pt{-3.0, 2.2}, Pt{-2.3, -1.4}, Pt{-3.0, -1.05}})
        cell("U/V Wronskians and connection", p.a, p.t, [&](SelftestCell&) {
            ConnectionResiduals r = connection_residuals(p.a, xt(p.a, p.t));
            return std::max({r.wronskian_uv, r.wronskian_uu, r.connection_v, r.connection_u});
        });
    return rep;
}

int cmd_selftest(double gamma_perturbation, std::ostream& out, std::ostream&) {
    SelftestReport rep = run_selftest(gamma_perturbation);
    struct Summary {
        int cells = 0, skipped = 0;
        double worst = 0.0;
        bool pass = true;
    };
    std::vector<std::pair<std::string, Summary>> fam;
    for (const auto& c : rep.cells) {
        auto it = std::find_if(fam.begin(), fam.end(), [&](const auto& f) { return f.first == c.family; });
        if (it == fam.end()) it = fam.insert(fam.end(), {c.family, Summary{}});
        Summary& s = it->second;
        ++s.cells;
        if (c.note.rfind("skipped", 0) == 0) ++s.skipped;
        s.worst = std::max(s.worst, c.residual);
        s.pass = s.pass && c.pass();
    }
    out << "family,cells,skipped,max_residual,limit,status\n";
    for (const auto& [name, s] : fam)
        out << name << ',' << s.cells << ',' << s.skipped << ',' << fmt(s.worst) << ',' << fmt(1e-8) << ','
            << (s.pass ? "PASS" : "FAIL") << '\n';
    for (const auto& c : rep.cells)
        if (!c.pass())
            out << "FAIL," << c.family << ",a=" << fmt(c.a) << ",t=" << fmt(c.t) << ",residual=" << fmt(c.residual)
                << (c.note.empty() ? "" : "," + c.note) << '\n';
    return rep.pass() ? kOk : kSelftest;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parabolic cylinder functions U(a,x), V(a,x), W(a,x) by steepest-descent quadrature"};
    app.require_subcommand(1);
    std::vector<std::string> funcs;
    for (const auto& [k, v] : func_table()) funcs.push_back(k);

    std::string func = "U", a_s, x_s, tol_s;
    bool scaled = false;
    auto* eval = app.add_subcommand("eval", "Evaluate one function value");
    eval->add_option("--func", func, "U, V, W or a derivative Up, Vp, Wp")->required()->check(CLI::IsMember(funcs));
    eval->add_option("--a", a_s, "Parameter a")->required();
    eval->add_option("--x", x_s, "Argument x")->required();
    eval->add_flag("--scaled", scaled, "Print significand and log scale");
    eval->add_option("--tol", tol_s, "Relative quadrature tolerance");

    std::string t_func = "U", a_range, x_range, format = "csv", t_tol;
    bool t_scaled = false;
    auto* table = app.add_subcommand("table", "Tabulate on an (a, x) grid, a-major");
    table->add_option("--func", t_func, "U, V, W, Up, Vp or Wp")->required()->check(CLI::IsMember(funcs));
    table->add_option("--a-range", a_range, "lo,hi,step")->required();
    table->add_option("--x-range", x_range, "lo,hi,step")->required();
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_flag("--scaled", t_scaled, "Significand and log scale columns");
    table->add_option("--tol", t_tol, "Relative quadrature tolerance");

    std::string regime, t_s;
    int samples = 64;
    auto* contour = app.add_subcommand("contour", "Dump contour samples as CSV");
    contour->add_option("--regime", regime, "Regime name, e.g. U_NEG_MID")->required();
    contour->add_option("--t", t_s, "Scaled argument t = x / (2 sqrt|a|)")->required();
    contour->add_option("--samples", samples, "Number of samples")->check(CLI::Range(2, 1000000));

    std::string perturb_s = "0";
    auto* selftest = app.add_subcommand("selftest", "Run the Wronskian and connection self-test grid");
    selftest->add_option("--perturb-gamma", perturb_s, "Relative perturbation of gamma(a) (test hook)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kUsage;
    }

    auto usage = [&](const std::string& what) {
        err << "invalid number: " << what << "\n" << app.help();
        return int(kUsage);
    };
    auto get_tol = [&](const std::string& s, double& v) {
        v = default_tol();
        return s.empty() || parse_real(s, v);
    };

    if (*eval) {
        EvalRequest req;
        if (!parse_real(a_s, req.a)) return usage(a_s);
        if (!parse_real(x_s, req.x)) return usage(x_s);
        if (!get_tol(tol_s, req.tol)) return usage(tol_s);
        const FuncSel& f = func_table().at(func);
        req.func = f.func;
        req.want_derivative = f.derivative;
        req.want_scaled = scaled;
        return cmd_eval(req, out, err);
    }
    if (*table) {
        TableSpec spec;
        auto parse_range = [&](const std::string& s, Range& r) {
            std::vector<std::string> parts;
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, ',')) parts.push_back(item);
            return parts.size() == 3 && parse_real(parts[0], r.lo) && parse_real(parts[1], r.hi) &&
                   parse_real(parts[2], r.step);
        };
        if (!parse_range(a_range, spec.a_range)) return usage(a_range);
        if (!parse_range(x_range, spec.x_range)) return usage(x_range);
        if (!get_tol(t_tol, spec.tol)) return usage(t_tol);
        const FuncSel& f = func_table().at(t_func);
        spec.func = f.func;
        spec.derivative = f.derivative;
        spec.format = format == "json" ? Format::Json : Format::Csv;
        spec.scaled = t_scaled;
        return cmd_table(spec, out, err);
    }
    if (*contour) {
        double t = 0.0;
        if (!parse_real(t_s, t)) return usage(t_s);
        return cmd_contour(regime, t, samples, out, err);
    }
    double rel = 0.0;
    if (!parse_real(perturb_s, rel)) return usage(perturb_s);
    return cmd_selftest(rel, out, err);
}

}  // namespace pcf::cli
