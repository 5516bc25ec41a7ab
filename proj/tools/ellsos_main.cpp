// Command-line front end: evaluation and verification for scripts and CI.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical-domain error.
#include "CLI11.hpp"
#include "json.hpp"

#include "ellsos/detrep.hpp"
#include "ellsos/errors.hpp"
#include "ellsos/funceq.hpp"
#include "ellsos/harness.hpp"
#include "ellsos/monodromy.hpp"
#include "ellsos/theta.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace ellsos;
using nlohmann::json;

namespace {

struct cli_usage : std::runtime_error {
    explicit cli_usage(const std::string& what) : std::runtime_error(what) {}
};

double to_double(const std::string& t) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw cli_usage("bad numeric literal: " + t);
    }
    if (pos != t.size()) throw cli_usage("bad numeric literal: " + t);
    return v;
}

// Strict "a", "bi", or "a+bi" / "a-bi" form, whitespace-free.
scalar parse_complex(const std::string& s) {
    if (s.empty() || s.find_first_of(" \t") != std::string::npos)
        throw cli_usage("bad complex literal: '" + s + "'");
    std::string body = s;
    const bool has_im = body.back() == 'i';
    if (has_im) body.pop_back();
    if (!has_im) return {to_double(body), 0.0};
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
    std::string im_part = split == std::string::npos ? body : body.substr(split);
    double im = 0.0;
    if (im_part.empty() || im_part == "+")
        im = 1.0;
    else if (im_part == "-")
        im = -1.0;
    else
        im = to_double(im_part);
    return {re_part.empty() ? 0.0 : to_double(re_part), im};
}

std::string format_complex(scalar v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", v.real(), v.imag());
    return buf;
}

struct common_inputs {
    int L = 1;
    double p = 0.2;
    std::string gamma = "random";
    std::string tau = "random";
    std::string x0 = "random";
    std::string x0bar = "random";
    std::vector<std::string> mu;
    std::vector<std::string> x;
    std::uint64_t seed = 12345;
    double tol = 1e-8;
    std::string format = "text";
    std::string output;
};

void add_common(CLI::App* sub, common_inputs& in, bool with_tau) {
    sub->add_option("--L", in.L, "chain length")->check(CLI::Range(1, 6));
    sub->add_option("--p", in.p, "elliptic nome (0 <= p < 1)");
    sub->add_option("--gamma", in.gamma, "crossing parameter, complex literal or 'random'");
    if (with_tau) sub->add_option("--tau", in.tau, "dynamical parameter, complex literal or 'random'");
    sub->add_option("--mu", in.mu, "inhomogeneities, L complex literals (omit for random)");
    sub->add_option("--x", in.x, "spectral points, L complex literals (omit for random)");
    sub->add_option("--x0", in.x0, "first auxiliary point, complex literal or 'random'");
    sub->add_option("--x0bar", in.x0bar, "second auxiliary point, complex literal or 'random'");
    sub->add_option("--seed", in.seed, "seed for any random completion")->envname("ELLSOS_SEED");
    sub->add_option("--tol", in.tol, "tolerance for requested comparisons");
    sub->add_option("--format", in.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output", in.output, "write the report to this path instead of stdout");
    sub->set_config("--config");
}

std::vector<scalar> parse_list(const std::vector<std::string>& given,
                               const std::vector<scalar>& drawn, int L, const char* name) {
    if (given.empty() || (given.size() == 1 && given[0] == "random")) return drawn;
    if (static_cast<int>(given.size()) != L)
        throw cli_usage(std::string(name) + ": expected " + std::to_string(L) + " values, got " +
                        std::to_string(given.size()));
    std::vector<scalar> out;
    out.reserve(given.size());
    for (const std::string& s : given) out.push_back(parse_complex(s));
    return out;
}

drawn_configuration resolve_inputs(const common_inputs& in) {
    if (in.p <= 0.0 || in.p >= 1.0) throw cli_usage("p must lie in (0, 1)");
    sample_policy pol;
    pol.seed = in.seed;
    drawn_configuration d = draw_configuration(in.L, pol, in.p);
    if (in.gamma != "random") d.params.gamma = parse_complex(in.gamma);
    if (in.tau != "random") d.params.tau = parse_complex(in.tau);
    if (in.x0 != "random") d.cfg.x0 = parse_complex(in.x0);
    if (in.x0bar != "random") d.cfg.x0bar = parse_complex(in.x0bar);
    d.params.mu = parse_list(in.mu, d.params.mu, in.L, "--mu");
    d.cfg.x = parse_list(in.x, d.cfg.x, in.L, "--x");
    return d;
}

json params_json(const common_inputs& in, const drawn_configuration& d) {
    json p;
    p["L"] = in.L;
    p["p"] = in.p;
    p["seed"] = in.seed;
    p["gamma"] = format_complex(d.params.gamma);
    p["tau"] = format_complex(d.params.tau);
    p["x0"] = format_complex(d.cfg.x0);
    p["x0bar"] = format_complex(d.cfg.x0bar);
    json mu = json::array(), x = json::array();
    for (const scalar& v : d.params.mu) mu.push_back(format_complex(v));
    for (const scalar& v : d.cfg.x) x.push_back(format_complex(v));
    p["mu"] = mu;
    p["x"] = x;
    return p;
}

json check_json(const std::string& id, double residual, double tol, bool pass,
                const std::string& anchor) {
    json c;
    c["id"] = id;
    c["residual"] = residual;
    c["tolerance"] = tol;
    c["pass"] = pass;
    c["anchors"] = json::array({anchor});
    return c;
}

std::string report_csv(const json& report) {
    std::ostringstream out;
    if (report.contains("values")) {
        out << "quantity,value\n";
        for (const auto& [k, v] : report["values"].items())
            out << k << "," << v.get<std::string>() << "\n";
    }
    if (report.contains("checks") && !report["checks"].empty()) {
        out << "id,residual,tolerance,pass,seconds\n";
        for (const auto& c : report["checks"])
            out << c["id"].get<std::string>() << "," << c["residual"].get<double>() << ","
                << c["tolerance"].get<double>() << "," << (c["pass"].get<bool>() ? 1 : 0) << ","
                << (c.contains("seconds") ? c["seconds"].get<double>() : 0.0) << "\n";
    }
    return out.str();
}

void emit(const common_inputs& in, const std::string& text, const json& report) {
    std::string payload;
    if (in.format == "json")
        payload = report.dump(2) + "\n";
    else if (in.format == "csv")
        payload = report_csv(report);
    else
        payload = text;
    if (in.output.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(in.output);
        if (!f) throw cli_usage("cannot open output path: " + in.output);
        f << payload;
    }
}

int run_theta_eval(const std::vector<std::string>& points, double p, bool limit_check,
                   const common_inputs& in) {
    int rc = 0;
    std::ostringstream text;
    json report;
    report["params"] = {{"p", p}};
    report["checks"] = json::array();
    json values;
    theta_context ctx;
    ctx.p = p;
    if (!ctx.valid()) throw cli_usage("p must lie in [0, 1)");
    for (const std::string& s : points) {
        const scalar x = parse_complex(s);
        const scalar v = theta1(x, ctx);
        text << "theta1(" << s << ") = " << format_complex(v) << "\n";
        values["theta1(" + s + ")"] = format_complex(v);
    }
    if (limit_check) {
        theta_context small;
        small.p = 1e-6;
        const double norm = std::pow(small.p, -0.25);
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            const double xr = -1.0 + 2.0 * static_cast<double>(k) / 19.0;
            const scalar x{xr, 0.0};
            worst = std::max(worst,
                             std::abs(scalar{0.0, -1.0} * norm * theta1(x, small) - std::sinh(x)));
        }
        const bool pass = worst < 1e-10;
        text << "limit-check sup-diff = " << worst << " (tol 1e-10) " << (pass ? "PASS" : "FAIL")
             << "\n";
        report["checks"].push_back(check_json("theta-limit", worst, 1e-10, pass,
                                              "small-nome normalization against sinh"));
        if (!pass) rc = 1;
    }
    report["values"] = values.is_null() ? json::object() : values;
    report["summary"] = {{"pass", rc == 0}, {"seconds", 0.0}};
    emit(in, text.str(), report);
    return rc;
}

int run_z(const common_inputs& in, const std::string& method) {
    const drawn_configuration d = resolve_inputs(in);
    std::ostringstream text;
    json report;
    report["params"] = params_json(in, d);
    report["checks"] = json::array();
    json values;
    int rc = 0;
    scalar z_oracle{}, z_determinant{};
    if (method == "oracle" || method == "both") {
        z_oracle = partition_function(d.cfg.x, d.params.tau, d.params);
        text << "z-oracle = " << format_complex(z_oracle) << "\n";
        values["z_oracle"] = format_complex(z_oracle);
    }
    if (method == "det" || method == "both") {
        z_determinant = z_det(value_label::none(), d.cfg, d.params);
        text << "z-det = " << format_complex(z_determinant) << "\n";
        values["z_det"] = format_complex(z_determinant);
    }
    if (method == "both") {
        const double diff = std::abs(z_oracle - z_determinant) / std::abs(z_oracle);
        const bool pass = diff < in.tol;
        text << "rel-diff = " << diff << " (tol " << in.tol << ") " << (pass ? "PASS" : "FAIL")
             << "\n";
        report["checks"].push_back(check_json("oracle-vs-det", diff, in.tol, pass,
                                              "relative difference between evaluation routes"));
        if (!pass) rc = 1;
    }
    report["values"] = values;
    report["summary"] = {{"pass", rc == 0}, {"seconds", 0.0}};
    emit(in, text.str(), report);
    return rc;
}

int run_z_det(const common_inputs& in, bool check_oracle) {
    const drawn_configuration d = resolve_inputs(in);
    std::ostringstream text;
    json report;
    report["params"] = params_json(in, d);
    report["checks"] = json::array();
    json values;
    int rc = 0;
    const scalar v = z_det(value_label::none(), d.cfg, d.params);
    text << "z-det = " << format_complex(v) << "\n";
    values["z_det"] = format_complex(v);
    if (check_oracle) {
        const scalar o = partition_function(d.cfg.x, d.params.tau, d.params);
        const double diff = std::abs(v - o) / std::abs(o);
        const bool pass = diff < in.tol;
        text << "z-oracle = " << format_complex(o) << "\n";
        text << "rel-diff = " << diff << " (tol " << in.tol << ") " << (pass ? "PASS" : "FAIL")
             << "\n";
        values["z_oracle"] = format_complex(o);
        report["checks"].push_back(check_json("oracle-vs-det", diff, in.tol, pass,
                                              "relative difference between evaluation routes"));
        if (!pass) rc = 1;
    }
    report["values"] = values;
    report["summary"] = {{"pass", rc == 0}, {"seconds", 0.0}};
    emit(in, text.str(), report);
    return rc;
}

int run_z_6v(const common_inputs& in, const std::string& family, bool check_oracle) {
    const drawn_configuration d = resolve_inputs(in);
    std::ostringstream text;
    json report;
    report["params"] = params_json(in, d);
    report["checks"] = json::array();
    json values;
    int rc = 0;
    scalar za{}, zd{};
    const scalar oracle = sixv_partition_function(d.cfg.x, d.params.gamma, d.params.mu);
    if (family == "a" || family == "both") {
        za = sixv_z_det(false, 0, d.cfg.x0, d.cfg.x, d.params.gamma, d.params.mu);
        text << "z-6v-a = " << format_complex(za) << "\n";
        values["z_6v_a"] = format_complex(za);
    }
    if (family == "d" || family == "both") {
        zd = sixv_z_det(true, 0, d.cfg.x0, d.cfg.x, d.params.gamma, d.params.mu);
        text << "z-6v-d = " << format_complex(zd) << "\n";
        values["z_6v_d"] = format_complex(zd);
    }
    if (family == "both") {
        const double diff = std::abs(za - zd) / std::abs(za);
        const bool pass = diff < in.tol;
        text << "a-vs-d rel-diff = " << diff << " (tol " << in.tol << ") "
             << (pass ? "PASS" : "FAIL") << "\n";
        report["checks"].push_back(
            check_json("a-kind-vs-d-kind", diff, in.tol, pass,
                       "relative difference between the two reduced determinant families"));
        if (!pass) rc = 1;
    }
    if (check_oracle) {
        const scalar ref = family == "d" ? zd : za;
        const double diff = std::abs(ref - oracle) / std::abs(oracle);
        const bool pass = diff < in.tol;
        text << "z-oracle = " << format_complex(oracle) << "\n";
        text << "rel-diff = " << diff << " (tol " << in.tol << ") " << (pass ? "PASS" : "FAIL")
             << "\n";
        values["z_oracle"] = format_complex(oracle);
        report["checks"].push_back(check_json("det-vs-oracle", diff, in.tol, pass,
                                              "relative difference between evaluation routes"));
        if (!pass) rc = 1;
    }
    report["values"] = values;
    report["summary"] = {{"pass", rc == 0}, {"seconds", 0.0}};
    emit(in, text.str(), report);
    return rc;
}

int run_verify(const common_inputs& in, const std::string& suite, const std::string& fault) {
    sample_policy pol;
    pol.seed = in.seed;
    pol.fault_tag = fault;
    const suite_result r = run_suite(suite == "full" ? suite_kind::full : suite_kind::quick, pol);
    std::ostringstream text;
    json report;
    report["params"] = {{"suite", suite}, {"seed", in.seed}};
    if (!fault.empty()) report["params"]["injected_fault"] = fault;
    report["checks"] = json::array();
    std::vector<std::string> failing;
    for (const check_result& c : r.checks) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-28s %-4s residual=%.3e tol=%.0e %.3fs\n",
                      c.id.c_str(), c.pass ? "PASS" : "FAIL", c.residual, c.tolerance, c.seconds);
        text << line;
        json cj = check_json(c.id, c.residual, c.tolerance, c.pass, c.anchors);
        cj["seconds"] = c.seconds;
        report["checks"].push_back(cj);
        if (!c.pass) failing.push_back(c.id);
    }
    text << "suite: " << (r.pass ? "PASS" : "FAIL") << " in " << r.seconds << "s\n";
    if (!failing.empty()) {
        text << "failing:";
        for (const std::string& id : failing) text << " " << id;
        text << "\n";
    }
    report["summary"] = {{"pass", r.pass}, {"seconds", r.seconds}};
    emit(in, text.str(), report);
    return r.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptic SOS model with domain-wall boundaries: desk-scale evaluation "
                 "and verification"};
    app.require_subcommand(1);

    common_inputs theta_in;
    std::vector<std::string> theta_points;
    double theta_p = 0.2;
    bool limit_check = false;
    CLI::App* theta_cmd = app.add_subcommand("theta-eval", "evaluate theta1 at given points");
    theta_cmd->add_option("--p", theta_p, "elliptic nome");
    theta_cmd->add_option("--x", theta_points, "evaluation points, complex literals");
    theta_cmd->add_flag("--limit-check", limit_check, "run the small-nome normalization check");
    theta_cmd->add_option("--format", theta_in.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    theta_cmd->add_option("--output", theta_in.output, "write the report to this path");

    common_inputs z_in;
    std::string z_method = "oracle";
    CLI::App* z_cmd = app.add_subcommand("z", "evaluate the partition function");
    add_common(z_cmd, z_in, true);
    z_cmd->add_option("--method", z_method, "evaluation route")
        ->check(CLI::IsMember({"oracle", "det", "both"}));

    common_inputs zdet_in;
    bool zdet_check = false;
    CLI::App* zdet_cmd =
        app.add_subcommand("z-det", "evaluate the single-determinant representation");
    add_common(zdet_cmd, zdet_in, true);
    zdet_cmd->add_flag("--check-oracle", zdet_check, "also compare against the oracle");

    common_inputs z6v_in;
    std::string z6v_family = "both";
    bool z6v_check = false;
    CLI::App* z6v_cmd =
        app.add_subcommand("z-6v", "evaluate the trigonometric determinant representation");
    add_common(z6v_cmd, z6v_in, false);
    z6v_cmd->add_option("--family", z6v_family, "reduced determinant family")
        ->check(CLI::IsMember({"a", "d", "both"}));
    z6v_cmd->add_flag("--check-oracle", z6v_check, "also compare against the oracle");

    common_inputs verify_in;
    std::string verify_suite = "quick";
    std::string verify_fault;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_option("--suite", verify_suite, "which suite to run")
        ->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_option("--seed", verify_in.seed, "suite seed")->envname("ELLSOS_SEED");
    verify_cmd->add_option("--inject-fault", verify_fault,
                           "test hook: inflate the residual of this check id");
    verify_cmd->add_option("--format", verify_in.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify_cmd->add_option("--output", verify_in.output, "write the report to this path");
    verify_cmd->set_config("--config");

    int rc = 0;
    theta_cmd->callback([&] { rc = run_theta_eval(theta_points, theta_p, limit_check, theta_in); });
    z_cmd->callback([&] { rc = run_z(z_in, z_method); });
    zdet_cmd->callback([&] { rc = run_z_det(zdet_in, zdet_check); });
    z6v_cmd->callback([&] { rc = run_z_6v(z6v_in, z6v_family, z6v_check); });
    verify_cmd->callback([&] { rc = run_verify(verify_in, verify_suite, verify_fault); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const cli_usage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ellsos::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ellsos::numerics_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
