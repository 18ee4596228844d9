#include "uavnoma/sweep.hpp"

#include <cstdio>

#include "uavnoma/parallel.hpp"
#include "uavnoma/uav_centric.hpp"
#include "uavnoma/user_centric.hpp"

namespace uavnoma {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

struct Point {
    NetworkConfig cfg;
    NomaLink link;
    std::string axis;
    double value = 0.0;
};

}  // namespace

std::vector<SweepRow> evaluate_point(const NetworkConfig& cfg, const NomaLink& link, const RunSpec& run,
                                     unsigned mc_threads) {
    const bool uc = run.strategy == Strategy::user_centric;
    std::vector<SweepRow> rows(2);
    rows[0].user_role = uc ? "typical" : "near";
    rows[1].user_role = uc ? "fixed" : "far";
    for (auto& r : rows) {
        r.strategy = run.strategy;
        r.access = run.access;
    }
    if (run.mode != RunMode::mc) {
        if (uc) {
            const UcOptions o{run.method, run.fixed_model};
            rows[0].p_analytic = coverage_typical(cfg, link, run.access, o);
            rows[1].p_analytic = coverage_fixed(cfg, link, run.access, o);
        } else {
            const UavCentricOptions o{run.method, true};
            rows[0].p_analytic = coverage_pair(PairUser::near_w, cfg, link, run.access, o);
            rows[1].p_analytic = coverage_pair(PairUser::far_v, cfg, link, run.access, o);
        }
    }
    if (run.mode != RunMode::analytic) {
        McOptions mo;
        mo.threads = mc_threads;
        const PairEstimate e = uc ? run_user_centric(cfg, link, run.access, run.trials, run.seed, mo)
                                  : run_uav_centric(cfg, link, run.access, run.trials, run.seed, mo);
        rows[0].mc = e.first;
        rows[1].mc = e.second;
    }
    return rows;
}

std::vector<SweepRow> run_sweep(const Experiment& ex, unsigned threads) {
    std::vector<Point> points;
    if (!ex.sweep) {
        points.push_back({ex.network, ex.link, "", 0.0});
    } else {
        const std::vector<double> outer = ex.series ? ex.series->values : std::vector<double>{0.0};
        for (double sv : outer) {
            for (double v : ex.sweep->values) {
                Point p{ex.network, ex.link, ex.sweep->name, v};
                if (ex.series) {
                    apply_axis(p.cfg, p.link, ex.series->name, sv);
                    p.axis += ";" + ex.series->name + "=" + fmt(sv);
                }
                apply_axis(p.cfg, p.link, ex.sweep->name, v);
                points.push_back(std::move(p));
            }
        }
    }
    std::vector<std::vector<SweepRow>> results(points.size());
    // Points run in parallel; each MC run stays on its worker.
    parallel_for(points.size(), threads, [&](std::size_t i) {
        results[i] = evaluate_point(points[i].cfg, points[i].link, ex.run, points.size() > 1 ? 1 : threads);
        for (auto& row : results[i]) {
            row.axis = points[i].axis;
            if (ex.sweep) {
                row.value = points[i].value;
            }
        }
    });
    std::vector<SweepRow> rows;
    for (auto& r : results) {
        rows.insert(rows.end(), r.begin(), r.end());
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << to_string(r.strategy) << ',' << to_string(r.access) << ',' << r.user_role << ',' << r.axis << ','
            << (r.value ? fmt(*r.value) : "") << ',' << (r.p_analytic ? fmt(*r.p_analytic) : "") << ',';
        if (r.mc) {
            out << fmt(r.mc->p_hat) << ',' << fmt(r.mc->ci_low) << ',' << fmt(r.mc->ci_high) << ','
                << r.mc->trials << ',' << r.mc->seed;
        } else {
            out << ",,,,";
        }
        out << '\n';
    }
}

}  // namespace uavnoma
