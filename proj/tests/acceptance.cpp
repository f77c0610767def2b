// Acceptance checks. One line per criterion; exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dara/error.hpp"
#include "dara/experiment.hpp"
#include "dara/metrics.hpp"
#include "dara/policies.hpp"
#include "dara/rate_alloc.hpp"
#include "dara/weights.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dara;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

RateVector infinite_target(const std::vector<double>& v, double delta) {
    RateVector r;
    for (const double x : v) r.r.push_back(x / (1.0 - delta));
    return r;
}

Outcome threshold() {
    Outcome out;
    std::mt19937_64 rng(1);
    for (int N = 2; N <= 5; ++N) {
        const double delta = 1.0 - 1.0 / N;
        const auto trace = decomposition_allocate(delta, N, 200, infinite_target(std::vector<double>(N, 1.0 / N), delta));
        double lo = *std::min_element(trace.final_residuals.begin(), trace.final_residuals.end());
        for (const auto& row : trace.residuals) lo = std::min(lo, *std::min_element(row.begin(), row.end()));
        if (lo < -1e-9) out.fail(fmt("N=%d: residual %.3g", N, lo));

        const double below = delta - 0.05;
        for (int k = 0; k < 20; ++k) {
            const auto v = test::random_simplex(rng, N);
            try {
                decomposition_allocate(below, N, 200, infinite_target(v, below));
                out.fail(fmt("N=%d delta=%.3f accepted", N, below));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::InfeasibleDelta) out.fail(fmt("N=%d: wrong error %s", N, e.what()));
            }
        }
    }
    if (out.ok) out.detail = "residuals >= -1e-9 at the threshold; InfeasibleDelta below it";
    return out;
}

Outcome finite_horizon_bound() {
    Outcome out;
    std::mt19937_64 rng(2);
    const int horizons[] = {50, 200, 500};
    double worst = -1.0;
    for (int k = 0; k < 100; ++k) {
        const int N = std::uniform_int_distribution<int>(2, 6)(rng);
        const int T = horizons[std::uniform_int_distribution<int>(0, 2)(rng)];
        const double delta = std::max(1.0 - 1.0 / N, 0.9);
        const auto v = test::random_simplex(rng, N);
        const auto target = infinite_target(v, delta);
        const auto cfg = test::exponential_block(delta, N, T);
        const double bound = std::pow(delta, T);
        for (const auto& alloc : {dara_allocate(cfg, target).allocation,
                                  decomposition_allocate(delta, N, T, target).allocation}) {
            const auto vT = normalized_rates(delta, T, rates_of_allocation(cfg, alloc)).v;
            for (int n = 0; n < N; ++n) {
                const double gap = std::abs(vT[static_cast<std::size_t>(n)] - v[static_cast<std::size_t>(n)]);
                worst = std::max(worst, gap - bound);
                if (gap > bound + 1e-9) out.fail(fmt("N=%d T=%d: gap %.3g > %.3g", N, T, gap, bound));
            }
        }
    }
    if (out.ok) out.detail = fmt("largest |v^T - v| - delta^T = %.3g", worst);
    return out;
}

Outcome equivalence() {
    Outcome out;
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        const int N = std::uniform_int_distribution<int>(1, 5)(rng);
        const int T = std::uniform_int_distribution<int>(1, 50)(rng);
        const double delta = std::uniform_real_distribution<double>(1.0 - 1.0 / N, 0.999)(rng);
        const auto target = infinite_target(test::random_simplex(rng, N), delta);
        const auto a = dara_allocate(test::exponential_block(delta, N, T), target).allocation;
        const auto b = decomposition_allocate(delta, N, T, target).allocation;
        if (!(a == b)) {
            std::size_t t = 0;
            while (a.slots[t] == b.slots[t]) ++t;
            out.fail(fmt("instance %d (N=%d T=%d delta=%.4f) differs at slot %zu", k, N, T, delta, t + 1));
        }
    }
    if (out.ok) out.detail = "200 instances, identical slot sequences";
    return out;
}

Outcome near_optimality() {
    Outcome out;
    double slack = 1e300;
    for (const int N : {2, 3}) {
        const double delta = 1.0 - 1.0 / N;
        for (const int T : {6, 8, 10}) {
            const auto cfg = test::exponential_block(delta, N, T);
            const double budget = achievable_budget(cfg).rmin;
            const auto target = maxmin_rates(cfg, budget);
            const double w_dara =
                utility(cfg, dara_allocate(cfg, target).allocation, Objective::MaxMin).objective_value;
            const double w_opt = optimal_exhaustive(cfg, Objective::MaxMin).value;
            const double c = (1.0 / N) * (1 - std::pow(delta, T)) / (1 - delta);
            const double allowed = c * std::pow(delta, T);
            slack = std::min(slack, w_dara - (w_opt - allowed));
            if (w_dara < w_opt - allowed) {
                out.fail(fmt("N=%d T=%d: W(dara)=%.6g W(opt)=%.6g allowed %.3g", N, T, w_dara, w_opt, allowed));
            }
        }
    }
    if (out.ok) out.detail = fmt("smallest slack %.3g", slack);
    return out;
}

Outcome maxmin_solver() {
    Outcome out;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coef(0.05, 5.0);
    for (int k = 0; k < 50; ++k) {
        const int N = std::uniform_int_distribution<int>(2, 4)(rng);
        const double budget = std::uniform_real_distribution<double>(0.5, 100)(rng);
        std::vector<double> h(static_cast<std::size_t>(N));
        for (double& x : h) x = coef(rng);
        const auto cfg = test::exponential_block(0.9, N, 4, h);
        std::vector<double> c;
        for (const auto& s : cfg.sensors()) c.push_back(s.utility_coefficient());
        const auto r = maxmin_rates(cfg, budget);

        double w = 1e300, hi = 0;
        for (int n = 0; n < N; ++n) {
            const double u = c[static_cast<std::size_t>(n)] * r.r[static_cast<std::size_t>(n)];
            w = std::min(w, u);
            hi = std::max(hi, u);
        }
        if (hi - w > 1e-9 * hi) out.fail(fmt("set %d: utilities spread %.3g", k, hi - w));

        const auto grid = test::grid_maxmin(c, budget, 1000);
        const double step_value = *std::max_element(c.begin(), c.end()) * budget / 1000;
        if (grid.value > w * (1 + 1e-12) || w > grid.value + step_value) {
            out.fail(fmt("set %d: solver %.9g vs grid %.9g", k, w, grid.value));
        }
        if (std::abs(r.sum() - budget) > 1e-9 * budget) out.fail(fmt("set %d: budget not spent", k));
    }
    if (out.ok) out.detail = "50 coefficient sets within one grid step";
    return out;
}

ExperimentConfig contention_config(double delta) {
    ExperimentConfig c;
    c.scenario = "contention";
    c.N = 2;
    c.T = 500;
    c.profiles.delta = delta;
    c.h.kind = HDistribution::Kind::Normal;
    c.h.mean = 200;
    c.h.stddev = 20;
    c.seed = 2024;
    c.policies = {Policy::Dara, Policy::RoundRobin, Policy::RateRoundRobin};
    return c;
}

double spread(const std::vector<double>& q) {
    return *std::max_element(q.begin(), q.end()) - *std::min_element(q.begin(), q.end());
}

Outcome contention_sweep() {
    Outcome out;
    const SweepAxis axis{SweepAxis::Kind::N, {2, 3, 4, 5, 6, 7, 8, 9, 10}};
    std::vector<std::vector<double>> w_dara;
    double min_margin = 1e300;
    for (const double delta : {0.99, 0.995}) {
        const auto base = contention_config(delta);
        const auto rows = sweep(base, axis, 1).rows;
        std::vector<double> w;
        for (std::size_t i = 0; i < axis.values.size(); ++i) {
            const auto& d = rows[3 * i];
            const auto& rr = rows[3 * i + 1];
            const auto& rrr = rows[3 * i + 2];
            if (d.policy != Policy::Dara || rr.policy != Policy::RoundRobin || rrr.policy != Policy::RateRoundRobin) {
                out.fail("unexpected row order");
                return out;
            }
            const int N = d.N;
            if (!(d.W > rr.W && d.W > rrr.W)) {
                out.fail(fmt("delta=%.3f N=%d: W dara %.6g rr %.6g rrr %.6g", delta, N, d.W, rr.W, rrr.W));
            }
            min_margin = std::min(min_margin, d.W / std::max(rr.W, rrr.W));

            auto cell = base;
            cell.N = N;
            cell.seed = d.seed;
            const auto rab = build_rab(cell);
            const double budget = scenario_budget(cell, rab);
            for (int n = 1; n <= N; ++n) {
                const auto& s = rab.sensor(n);
                const auto k = static_cast<std::size_t>(n - 1);
                const double target_q = s.qbar * s.h * d.r_target[k];
                const double allowed = *d.gap_bound * s.qbar * s.h * budget;
                if (std::abs(d.Q[k] - target_q) > allowed) {
                    out.fail(fmt("delta=%.3f N=%d sensor %d: |Q - Q*| = %.3g > %.3g", delta, N, n,
                                 std::abs(d.Q[k] - target_q), allowed));
                }
            }
            if (!(spread(rr.Q) > spread(d.Q) && spread(rrr.Q) > spread(d.Q))) {
                out.fail(fmt("delta=%.3f N=%d: spread dara %.3g rr %.3g rrr %.3g", delta, N, spread(d.Q),
                             spread(rr.Q), spread(rrr.Q)));
            }
            w.push_back(d.W);
        }
        for (std::size_t i = 1; i < w.size(); ++i) {
            if (w[i] > w[i - 1]) out.fail(fmt("delta=%.3f: W rises from N=%d to N=%d", delta, int(i + 1), int(i + 2)));
        }
        w_dara.push_back(std::move(w));
    }
    for (std::size_t i = 0; i < axis.values.size(); ++i) {
        if (!(w_dara[1][i] > w_dara[0][i])) out.fail(fmt("N=%d: W not increasing in delta", int(i + 2)));
    }
    if (out.ok) out.detail = fmt("18 grid points; smallest W(dara)/W(best baseline) = %.3f", min_margin);
    return out;
}

Outcome heterogeneous() {
    Outcome out;
    double min_margin = 1e300;
    for (const auto& [lo, hi] : {std::pair{0.990, 0.992}, std::pair{0.995, 0.997}}) {
        ExperimentConfig c = contention_config(0.99);
        c.scenario = "heterogeneous";
        c.N = 6;
        c.profiles.kind = ProfileSpec::Kind::Range;
        c.profiles.delta_lo = lo;
        c.profiles.delta_hi = hi;
        c.policies = {Policy::Dara, Policy::RoundRobin, Policy::RateRoundRobin, Policy::RateDelayRoundRobin};
        const auto rows = run_scenario(c);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            min_margin = std::min(min_margin, rows[0].W / rows[i].W);
            if (rows[0].W < rows[i].W) {
                out.fail(fmt("[%.3f, %.3f]: W dara %.6g < %s %.6g", lo, hi, rows[0].W,
                             std::string(to_string(rows[i].policy)).c_str(), rows[i].W));
            }
        }
    }
    if (out.ok) out.detail = fmt("smallest W(dara)/W(baseline) = %.3f", min_margin);
    return out;
}

Outcome profile_pipeline() {
    Outcome out;
    std::mt19937_64 rng(8);
    for (int k = 0; k < 1000; ++k) {
        const int T = std::uniform_int_distribution<int>(1, 200)(rng);
        DeadlineHistogram h;
        for (int t = 0; t < T; ++t) {
            const bool empty = std::uniform_int_distribution<int>(0, 3)(rng) == 0;
            h.bytes_by_deadline.push_back(empty ? 0.0 : std::uniform_real_distribution<double>(0, 1e6)(rng));
        }
        h.bytes_by_deadline[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, T - 1)(rng))] += 1.0;
        try {
            validate_profile(profile_from_histogram(h));
        } catch (const Error& e) {
            out.fail(fmt("histogram %d: %s", k, e.what()));
        }
    }
    double worst = 0.0;
    for (const double delta : {0.0, 0.3, 0.9, 0.995}) {
        for (const int T : {2, 10, 100, 500}) {
            const double err = std::abs(fit_exponential(exponential_profile(delta, T)) - delta);
            worst = std::max(worst, err);
            if (err > 1e-9) out.fail(fmt("delta=%.3f T=%d: error %.3g", delta, T, err));
        }
    }
    if (out.ok) out.detail = fmt("1000 histograms valid; worst fit error %.3g", worst);
    return out;
}

Outcome determinism() {
    Outcome out;
    auto base = contention_config(0.99);
    base.policies = {Policy::Dara, Policy::RoundRobin, Policy::RateRoundRobin, Policy::RateDelayRoundRobin};
    const SweepAxis axis{SweepAxis::Kind::N, {2, 4, 6, 8}};
    auto csv = [&] {
        std::ostringstream s;
        const auto r = sweep(base, axis, 3);
        write_csv(s, r.rows);
        write_aggregate_csv(s, r.aggregates);
        return s.str();
    };
    const auto a = csv();
    const auto b = csv();
    if (a != b) out.fail("CSV bytes differ between runs");
    if (out.ok) out.detail = fmt("%zu bytes identical", a.size());
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "feasibility threshold", 1.0, threshold},
        {2, "finite-horizon rate bound", 10.0, finite_horizon_bound},
        {3, "decomposition/residual equivalence", 5.0, equivalence},
        {4, "near-optimality vs exhaustive oracle", 60.0, near_optimality},
        {5, "max-min solver vs grid search", 10.0, maxmin_solver},
        {6, "identical-profile contention sweep", 30.0, contention_sweep},
        {7, "heterogeneous-profile comparison", 10.0, heterogeneous},
        {8, "weight-profile pipeline", 2.0, profile_pipeline},
        {9, "sweep determinism", 5.0, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_s) o.fail(fmt("took %.2f s, limit %.0f s", secs, c.limit_s));
        if (!o.ok) ++failures;
        std::printf("[%s] %d %s (%.3f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
