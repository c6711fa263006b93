#include "vmp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "vmp/verify.hpp"
#include "vmp/vmp.hpp"

namespace vmp {

std::string format_double(double x) {
    if (x == 0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;
    std::optional<double> lambda;
    std::optional<int> N;
    int n_max = 12;
    int points = 200;
    double tol = default_quad_tol;
    std::string out_path;
    std::string format = "csv";
    double lambda_min = 0.05, lambda_max = 5;
    int lambda_steps = 100;
    bool n_max_given = false;
};

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Writes to --out when given, otherwise to the command's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw usage_error("cannot open output file " + path);
            os_ = &file_;
        }
    }
    std::ostream& operator*() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw usage_error("cannot open output file " + path);
    f << text;
}

int cmd_moments(const RunConfig& c, std::ostream& out) {
    if (c.lambda && !c.N) throw usage_error("moments: --lambda needs --N");
    Sink s(c.out_path, out);
    *s << "n,exact,limit\n";
    for (int n = 0; n <= c.n_max; ++n) {
        const UPoly lim = limit_moment(n);
        if (c.lambda) {
            const UPoly ex = at_N(exact_moment(*c.N, n), *c.N);
            *s << n << ',' << format_double(ex.eval(*c.lambda)) << ',' << format_double(lim.eval(*c.lambda)) << '\n';
        } else {
            const std::string ex = c.N ? at_N(exact_moment(*c.N, n), *c.N).to_string("lambda")
                                       : exact_moment_symbolic(n).to_string("lambda", "nu");
            *s << n << ',' << ex << ',' << lim.to_string("lambda") << '\n';
        }
    }
    return exit_ok;
}

int cmd_counts(const RunConfig& c, std::ostream& out) {
    Sink s(c.out_path, out);
    *s << "n,k,nc2p,ordered_v" << (c.N ? ",vl" : "") << '\n';
    for (int n = 0; n <= c.n_max; ++n)
        for (int k = 0; 2 * k <= n; ++k) {
            *s << n << ',' << k << ',' << enumerate_nc2p(n, k).size() << ',' << count_ordered_v(n, k);
            if (c.N) *s << ',' << vl_count(n, k, *c.N);
            *s << '\n';
        }
    return exit_ok;
}

int cmd_mgf(const RunConfig& c, std::ostream& out) {
    if (!c.N) throw usage_error("mgf: --N is required");
    const auto series = mgf_exact_series(*c.N, *c.N + 1, c.n_max);
    Sink s(c.out_path, out);
    *s << "n,coefficient\n";
    for (int n = 0; n <= c.n_max; ++n)
        *s << n << ',' << (c.lambda ? format_double(series[n].eval(*c.lambda)) : series[n].to_string("lambda")) << '\n';
    return exit_ok;
}

std::string svg_chart(const std::vector<double>& xs, const std::vector<double>& ys, double lambda) {
    const double W = 640, H = 400, m = 40;
    const double xlo = xs.front(), xhi = xs.back();
    double yhi = 0;
    for (double y : ys) yhi = std::max(yhi, y);
    if (yhi <= 0) yhi = 1;
    auto px = [&](double x) { return m + (W - 2 * m) * (x - xlo) / (xhi - xlo); };
    auto py = [&](double y) { return H - m - (H - 2 * m) * std::min(y, yhi) / yhi; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    os << "<line x1=\"" << m << "\" y1=\"" << H - m << "\" x2=\"" << W - m << "\" y2=\"" << H - m << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << m << "\" y1=\"" << m << "\" x2=\"" << m << "\" y2=\"" << H - m << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << m << "\" y=\"" << H - m / 4 << "\">" << format_double(xlo) << "</text>\n";
    os << "<text x=\"" << W - 3 * m << "\" y=\"" << H - m / 4 << "\">" << format_double(xhi) << "</text>\n";
    os << "<text x=\"" << m << "\" y=\"" << m * 0.75 << "\">density, lambda = " << format_double(lambda)
       << ", max " << format_double(yhi) << "</text>\n";
    os << "<polyline fill=\"none\" stroke=\"steelblue\" points=\"";
    for (size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << px(xs[i]) << ',' << py(ys[i]);
    os << "\"/>\n</svg>\n";
    return os.str();
}

int cmd_density(const RunConfig& c, std::ostream& out) {
    const double lambda = c.lambda.value_or(0);
    if (c.points < 2) throw usage_error("density: --points must be >= 2");
    MeasureSpec m;
    try {
        m = build_measure(lambda, c.tol);
    } catch (const numeric_failure& e) {
        throw numeric_failure(std::string("density at lambda = ") + format_double(lambda) + ": " + e.what());
    }
    // grid mirrored about lambda exactly, so the reflection symmetry survives rounding
    const double x0 = support_half_width();
    const double half = x0 * (1 - 1e-6);
    std::vector<double> xs(c.points), ys(c.points);
    for (int i = 0; i < c.points; ++i) {
        const double t = double(2 * i - (c.points - 1)) / (c.points - 1);
        xs[i] = lambda + half * t;
        ys[i] = density(xs[i], lambda);
    }
    json side;
    side["lambda"] = lambda;
    side["atom_position"] = m.atom ? json(m.atom->position) : json(nullptr);
    side["atom_weight"] = m.atom ? json(m.atom->weight) : json(0.0);
    side["support"] = json::array({m.support_lo, m.support_hi});
    side["mass_check"] = m.mass_check;

    if (c.format == "json") {
        json doc = side;
        doc["x"] = xs;
        doc["density"] = ys;
        Sink s(c.out_path, out);
        *s << doc.dump(2) << '\n';
        return exit_ok;
    }
    if (c.format == "svg") {
        Sink s(c.out_path, out);
        *s << svg_chart(xs, ys, lambda);
    } else {
        Sink s(c.out_path, out);
        *s << "x,density\n";
        for (int i = 0; i < c.points; ++i) *s << format_double(xs[i]) << ',' << format_double(ys[i]) << '\n';
    }
    if (!c.out_path.empty()) write_file(c.out_path + ".json", side.dump(2) + "\n");
    return exit_ok;
}

int cmd_atom(const RunConfig& c, std::ostream& out) {
    if (!(c.lambda_min > 0) || !(c.lambda_max >= c.lambda_min)) throw usage_error("atom: need 0 < lambda-min <= lambda-max");
    if (c.lambda_steps < 2) throw usage_error("atom: --lambda-steps must be >= 2");
    Sink s(c.out_path, out);
    *s << "lambda,position,weight\n";
    for (int i = 0; i < c.lambda_steps; ++i) {
        const double l = c.lambda_min + (c.lambda_max - c.lambda_min) * i / (c.lambda_steps - 1);
        const AtomInfo a = atom_info(l, 1e-14);
        *s << format_double(l) << ',' << format_double(a.position) << ',' << format_double(a.weight) << '\n';
    }
    return exit_ok;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    VerifyConfig vc;
    if (c.N) vc.oracle_N_max = *c.N;
    if (c.n_max_given) vc.oracle_n_max = c.n_max;
    vc.quad_tol = c.tol;
    const auto results = run_acceptance(vc);
    json report = json::array();
    bool ok = true;
    for (const auto& r : results) {
        report.push_back({{"check_name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"residual", r.residual}});
        if (!r.pass) {
            ok = false;
            err << r.name << " failed: residual " << format_double(r.residual) << (r.detail.empty() ? "" : "; ") << r.detail
                << '\n';
        }
    }
    Sink s(c.out_path, out);
    *s << report.dump(2) << '\n';
    return ok ? exit_ok : exit_verify_failed;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"V-monotone Poisson limit: moments, generating functions, densities and atoms"};
    app.require_subcommand(1);
    RunConfig c;
    double lambda = 0;
    int N = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--lambda", lambda, "coupling lambda");
        sub->add_option("--N", N, "number of summands")->check(CLI::PositiveNumber);
        sub->add_option("--n-max", c.n_max, "largest moment order")->check(CLI::NonNegativeNumber);
        sub->add_option("--points", c.points, "grid points")->check(CLI::Range(2, 10000000));
        sub->add_option("--tol", c.tol, "quadrature tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--out", c.out_path, "output path (stdout when omitted)");
        sub->add_option("--format", c.format, "csv, json or svg")->check(CLI::IsMember({"csv", "json", "svg"}));
        sub->add_option("--lambda-min", c.lambda_min, "smallest lambda");
        sub->add_option("--lambda-max", c.lambda_max, "largest lambda");
        sub->add_option("--lambda-steps", c.lambda_steps, "number of lambda values");
    };
    const std::vector<std::pair<std::string, std::string>> cmds = {
        {"moments", "exact and limit moments, as CSV n,exact,limit"},
        {"counts", "partition counts NC2+, ordered V-monotone, V-monotone labelings"},
        {"mgf", "coefficients of the finite-N moment generating function"},
        {"density", "density grid of the limit law with a JSON sidecar"},
        {"atom", "position and weight of the atom over a lambda grid"},
        {"verify", "run every acceptance check and print a JSON report"}};
    std::vector<CLI::App*> subs;
    for (const auto& [name, help] : cmds) {
        subs.push_back(app.add_subcommand(name, help));
        common(subs.back());
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    for (auto* s : subs)
        if (s->parsed()) {
            c.command = s->get_name();
            if (s->count("--lambda")) c.lambda = lambda;
            if (s->count("--N")) c.N = N;
            c.n_max_given = s->count("--n-max") > 0;
        }

    try {
        if (c.command == "moments") return cmd_moments(c, out);
        if (c.command == "counts") return cmd_counts(c, out);
        if (c.command == "mgf") return cmd_mgf(c, out);
        if (c.command == "density") return cmd_density(c, out);
        if (c.command == "atom") return cmd_atom(c, out);
        return cmd_verify(c, out, err);
    } catch (const numeric_failure& e) {
        err << "numeric failure: " << e.what() << '\n';
        return exit_numeric;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "usage: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace vmp
