#pragma once

#include "zpd/point_set.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace zpd {

enum class SweepMode { Exhaustive, Orbit, Sample };

std::string_view to_string(SweepMode m);
SweepMode parse_sweep_mode(std::string_view s);

struct SweepOptions {
    SweepMode mode = SweepMode::Orbit;
    std::vector<std::uint32_t> sizes; // orbit mode; empty means 1..|G|
    std::uint64_t seed = 0;           // sample mode
    std::size_t samples = 1000;       // sample mode
    unsigned jobs = 0;                // 0: $ZPD_JOBS, else hardware concurrency
    bool spectral = true;             // also search for a spectrum
    std::size_t orbit_budget = 100'000;
};

struct SweepRecord {
    explicit SweepRecord(PointSet s) : set(std::move(s)) {}

    PointSet set;
    bool feasible = false;
    bool tiles = false;
    bool spectral = false;
    std::optional<PointSet> complement;
    // d = 3 and feasible only:
    std::optional<std::string> case_label;
    std::optional<std::array<bool, 4>> dispersive; // f, h, fhat, hhat
    std::optional<PointSet> partner;
};

struct SweepReport {
    GroupParams params;
    SweepOptions options;
    std::vector<SweepRecord> records;
    std::vector<PointSet> counterexamples; // feasible but not a tile
    std::set<std::uint32_t> feasible_sizes;

    bool pd_flat_confirmed() const noexcept { return counterexamples.empty(); }
};

// Every record is computed independently: the LP verdict, the tiling search
// and the spectrum search do not consult one another. For d = 3 each feasible
// set also gets its averaged 4-tuple, which must pass all nine axioms with
// mass |A|, and a classify_case verdict. Records come back in enumeration
// order (bitmask order, canonical order by size, or draw order) whatever the
// number of workers. Throws InputError when an exhaustive sweep would exceed
// 2^16 subsets and BudgetExceeded when orbit enumeration outgrows its budget.
SweepReport pd_flat_sweep(const GroupParams &g, const SweepOptions &opts);

unsigned default_jobs();

// Aggregate counts, feasible sizes, counterexamples and case histogram.
nlohmann::json sweep_summary(const SweepReport &report);

// One JSON object per record, then one {"summary": ...} line.
void write_ndjson(std::ostream &os, const SweepReport &report);

} // namespace zpd
