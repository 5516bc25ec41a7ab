// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds at its stated tolerance.
#include "ellsos/harness.hpp"

#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

using namespace ellsos;

namespace {

struct picked {
    bool all_pass = true;
    double worst = 0.0;
    double seconds = 0.0;
};

picked pick(const suite_result& s, const std::vector<std::string>& ids) {
    picked out;
    for (const std::string& id : ids) {
        const auto it = std::find_if(s.checks.begin(), s.checks.end(),
                                     [&](const check_result& c) { return c.id == id; });
        if (it == s.checks.end()) {
            out.all_pass = false;
            continue;
        }
        out.all_pass = out.all_pass && it->pass;
        out.worst = std::max(out.worst, it->residual);
        out.seconds += it->seconds;
    }
    return out;
}

bool same_residuals(const suite_result& a, const suite_result& b) {
    if (a.checks.size() != b.checks.size()) return false;
    for (std::size_t i = 0; i < a.checks.size(); ++i)
        if (a.checks[i].id != b.checks[i].id || a.checks[i].residual != b.checks[i].residual)
            return false;
    return true;
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

int failures = 0;

void line(int n, bool pass, const char* title, const std::string& detail) {
    if (!pass) ++failures;
    std::printf("[%2d] %s  %-44s %s\n", n, pass ? "PASS" : "FAIL", title, detail.c_str());
}

std::vector<std::string> cross(const std::vector<std::string>& stems,
                               const std::vector<int>& Ls) {
    std::vector<std::string> out;
    for (const std::string& stem : stems)
        for (const int L : Ls) out.push_back(stem + "-L" + std::to_string(L));
    return out;
}

} // namespace

int main() {
    const suite_result full = run_suite(suite_kind::full);
    const suite_result full_repeat = run_suite(suite_kind::full);
    const suite_result quick = run_suite(suite_kind::quick);
    const suite_result quick_repeat = run_suite(suite_kind::quick);

    {
        const picked p = pick(full, {"theta-limit"});
        line(1, p.all_pass && p.seconds < 0.1, "theta normalization limit",
             fmt("worst %.2e (tol 1e-10), %.3fs", p.worst, p.seconds));
    }
    {
        const picked p = pick(full, {"dyb"});
        line(2, p.all_pass && p.seconds < 1.0, "dynamical Yang-Baxter identity",
             fmt("worst %.2e (tol 1e-12), %.3fs of 1s", p.worst, p.seconds));
    }
    {
        const picked p = pick(full, cross({"algebra"}, {2, 3}));
        line(3, p.all_pass && p.seconds < 30.0, "operator identities, L = 2 and 3",
             fmt("worst %.2e (tol 1e-10 / 1e-8), %.2fs of 30s", p.worst, p.seconds));
    }
    {
        const picked p = pick(full, cross({"hw-annihilation", "hw-eigenvalues"}, {1, 2, 3}));
        line(4, p.all_pass, "extremal-state annihilation and eigenvalues",
             fmt("worst %.2e (tol 1e-13 / 1e-11)", p.worst));
    }
    {
        const picked p =
            pick(full, cross({"funceq-A", "funceq-D", "funceq-AD", "funceq-AD-perm"}, {1, 2, 3, 4}));
        line(5, p.all_pass && p.seconds < 120.0, "functional relations, L <= 4",
             fmt("worst %.2e (tol 1e-9 / 1e-6), %.2fs of 120s", p.worst, p.seconds));
    }
    {
        const picked p = pick(full, {"cramer-tau-shift-L1", "cramer-tau-shift-L2",
                                     "cramer-value-ratios-L2"});
        line(6, p.all_pass, "eliminated shift solution and value ratios",
             fmt("worst %.2e (tol 1e-9 / 1e-8)", p.worst));
    }
    {
        std::vector<std::string> ids = cross({"detrep-main", "detrep-special-tau"}, {1, 2, 3});
        for (const std::string& id : cross({"detrep-invariance"}, {2, 3})) ids.push_back(id);
        const picked p = pick(full, ids);
        line(7, p.all_pass, "determinant representations, invariance, special parameter",
             fmt("worst %.2e (tol 1e-8 / 1e-6 / 1e-9)", p.worst));
    }
    {
        const picked p = pick(full, cross({"sixv-det", "sixv-singular"}, {1, 2, 3}));
        line(8, p.all_pass, "trigonometric determinants and singular systems",
             fmt("worst %.2e (tol 1e-9)", p.worst));
    }
    {
        const picked p = pick(full, {"structural-pair-index", "omega-dual-route", "omega-sparsity"});
        line(9, p.all_pass, "structural invariants and dual assembly routes",
             fmt("worst %.2e (exact / 1e-12)", p.worst));
    }
    {
        const bool deterministic =
            same_residuals(full, full_repeat) && same_residuals(quick, quick_repeat);
        const bool budgets = quick.seconds < 10.0 && full.seconds < 300.0;
        line(10, deterministic && budgets && full.pass, "determinism and runtime budgets",
             fmt("bitwise %s, quick %.2fs of 10s, full %.2fs of 300s",
                 deterministic ? "stable" : "UNSTABLE", quick.seconds, full.seconds));
    }

    std::printf("acceptance: %d/10 criteria pass\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
