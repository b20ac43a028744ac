#include "zpd/sweep.hpp"

#include "zpd/case_analysis.hpp"
#include "zpd/errors.hpp"
#include "zpd/json_io.hpp"
#include "zpd/orbits.hpp"
#include "zpd/spectrum.hpp"
#include "zpd/tiling.hpp"
#include "zpd/weak_tiling.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <random>
#include <thread>

namespace zpd {

std::string_view to_string(SweepMode m) {
    switch (m) {
    case SweepMode::Exhaustive:
        return "exhaustive";
    case SweepMode::Orbit:
        return "orbit";
    case SweepMode::Sample:
        return "sample";
    }
    return "?";
}

SweepMode parse_sweep_mode(std::string_view s) {
    if (s == "exhaustive") {
        return SweepMode::Exhaustive;
    }
    if (s == "orbit") {
        return SweepMode::Orbit;
    }
    if (s == "sample") {
        return SweepMode::Sample;
    }
    throw InputError("unknown sweep mode \"" + std::string(s) + "\" (exhaustive, orbit, sample)");
}

unsigned default_jobs() {
    if (const char *env = std::getenv("ZPD_JOBS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0) {
            return static_cast<unsigned>(n);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::vector<PointSet> enumerate(const GroupParams &g, const SweepOptions &opts) {
    const auto geo = Geometry::of(g);
    std::vector<PointSet> sets;
    switch (opts.mode) {
    case SweepMode::Exhaustive: {
        if (g.order() > 16) {
            throw InputError("exhaustive sweep of " + to_string(g) + " would visit 2^" + std::to_string(g.order()) +
                             " subsets (limit 2^16); use --mode orbit or sample");
        }
        for (std::uint32_t mask = 1; mask < (1u << g.order()); ++mask) {
            std::vector<std::uint32_t> elems;
            for (std::uint32_t x = 0; x < g.order(); ++x) {
                if (mask & (1u << x)) {
                    elems.push_back(x);
                }
            }
            sets.emplace_back(geo, std::move(elems));
        }
        break;
    }
    case SweepMode::Orbit: {
        auto sizes = opts.sizes;
        if (sizes.empty()) {
            for (std::uint32_t s = 1; s <= g.order(); ++s) {
                sizes.push_back(s);
            }
        }
        auto reps = orbit_reps(g, sizes, opts.orbit_budget);
        for (auto s : sizes) {
            for (const auto &r : reps.at(s)) {
                sets.push_back(r);
            }
            if (sets.size() > opts.orbit_budget) {
                throw BudgetExceeded("orbit sweep: more than " + std::to_string(opts.orbit_budget) + " sets",
                                     sets.size());
            }
        }
        break;
    }
    case SweepMode::Sample: {
        // Raw engine output only, so draws are identical on every platform.
        std::mt19937_64 rng(opts.seed);
        while (sets.size() < opts.samples) {
            std::vector<std::uint32_t> elems;
            std::uint64_t bits = 0;
            for (std::uint32_t x = 0; x < g.order(); ++x) {
                if (x % 64 == 0) {
                    bits = rng();
                }
                if (bits & 1) {
                    elems.push_back(x);
                }
                bits >>= 1;
            }
            if (!elems.empty()) {
                sets.emplace_back(geo, std::move(elems));
            }
        }
        break;
    }
    }
    return sets;
}

SweepRecord evaluate(PointSet a, const SweepOptions &opts) {
    SweepRecord r(std::move(a));
    const auto cert = pd_tiling_feasible(r.set);
    r.feasible = cert.has_value();
    r.complement = find_tiling_complement(r.set);
    r.tiles = r.complement.has_value();
    if (opts.spectral) {
        r.spectral = find_spectrum(r.set).has_value();
    }
    if (r.feasible && r.set.params().d() == 3) {
        const auto t = average_from_weak_tiling(r.set, cert->h);
        const auto rep = verify_four_tuple(t);
        if (!rep.passed() || rep.mass != Rational(r.set.size())) {
            throw InvariantViolation("averaged 4-tuple of a feasible set fails its axioms");
        }
        r.dispersive = std::array<bool, 4>{
            is_dispersive(t.f, Side::Primal).dispersive, is_dispersive(t.h, Side::Primal).dispersive,
            is_dispersive(t.fhat, Side::Dual).dispersive, is_dispersive(t.hhat, Side::Dual).dispersive};
        auto c = classify_case(r.set, t);
        r.case_label = std::move(c.label);
        r.partner = std::move(c.partner);
    }
    return r;
}

} // namespace

SweepReport pd_flat_sweep(const GroupParams &g, const SweepOptions &opts) {
    auto sets = enumerate(g, opts);
    std::vector<std::optional<SweepRecord>> slots(sets.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;

    auto work = [&] {
        for (;;) {
            const auto i = next.fetch_add(1);
            if (i >= sets.size()) {
                return;
            }
            try {
                slots[i] = evaluate(sets[i], opts);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) {
                    error = std::current_exception();
                }
                next = sets.size();
                return;
            }
        }
    };
    const unsigned jobs = std::min<std::size_t>(opts.jobs ? opts.jobs : default_jobs(), std::max<std::size_t>(1, sets.size()));
    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(work);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    SweepReport report{g, opts, {}, {}, {}};
    report.records.reserve(slots.size());
    for (auto &s : slots) {
        auto &r = *s;
        if (r.feasible) {
            report.feasible_sizes.insert(r.set.size());
            if (!r.tiles) {
                report.counterexamples.push_back(r.set);
            }
        }
        report.records.push_back(std::move(r));
    }
    return report;
}

namespace {

json::Json points_json(const PointSet &a) {
    json::Json arr = json::Json::array();
    for (const auto &x : a.points()) {
        arr.push_back(json::to_json(x));
    }
    return arr;
}

} // namespace

nlohmann::json sweep_summary(const SweepReport &report) {
    using json::Json;
    std::size_t feasible = 0, tiles = 0, spectral = 0;
    std::map<std::string, std::size_t> cases;
    for (const auto &r : report.records) {
        feasible += r.feasible;
        tiles += r.tiles;
        spectral += r.spectral;
        if (r.case_label) {
            cases[*r.case_label]++;
        }
    }
    Json counter = Json::array();
    for (const auto &c : report.counterexamples) {
        counter.push_back(points_json(c));
    }
    Json summary{{"p", report.params.p()},
                 {"d", report.params.d()},
                 {"mode", std::string(to_string(report.options.mode))},
                 {"sets", report.records.size()},
                 {"weak_pd_feasible", feasible},
                 {"tiles", tiles},
                 {"feasible_sizes", Json(std::vector<std::uint32_t>(report.feasible_sizes.begin(),
                                                                    report.feasible_sizes.end()))},
                 {"counterexamples", counter},
                 {"pd_flat_confirmed", report.pd_flat_confirmed()}};
    if (report.options.spectral) {
        summary["spectral"] = spectral;
    }
    if (report.options.mode == SweepMode::Sample) {
        summary["seed"] = report.options.seed;
        summary["samples"] = report.options.samples;
    }
    if (report.options.mode == SweepMode::Orbit && !report.options.sizes.empty()) {
        summary["sizes"] = report.options.sizes;
    }
    if (!cases.empty()) {
        summary["cases"] = cases;
    }
    return summary;
}

void write_ndjson(std::ostream &os, const SweepReport &report) {
    using json::Json;
    for (const auto &r : report.records) {
        Json j{{"set", points_json(r.set)},
               {"size", r.set.size()},
               {"tiles", r.tiles},
               {"weak_pd_feasible", r.feasible}};
        if (report.options.spectral) {
            j["spectral"] = r.spectral;
        }
        if (r.complement) {
            j["complement"] = points_json(*r.complement);
        }
        if (r.case_label) {
            j["case"] = *r.case_label;
        }
        if (r.dispersive) {
            j["dispersive"] = {{"f", (*r.dispersive)[0]},
                               {"h", (*r.dispersive)[1]},
                               {"fhat", (*r.dispersive)[2]},
                               {"hhat", (*r.dispersive)[3]}};
        }
        if (r.partner) {
            j["partner"] = points_json(*r.partner);
        }
        os << j.dump() << '\n';
    }
    os << Json{{"summary", sweep_summary(report)}}.dump() << '\n';
}

} // namespace zpd
