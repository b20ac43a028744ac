#include "cli.hpp"

#include "zpd/case_analysis.hpp"
#include "zpd/constructions.hpp"
#include "zpd/decomposition.hpp"
#include "zpd/dispersive.hpp"
#include "zpd/errors.hpp"
#include "zpd/integrality.hpp"
#include "zpd/json_io.hpp"
#include "zpd/orbits.hpp"
#include "zpd/spectrum.hpp"
#include "zpd/sweep.hpp"
#include "zpd/tiling.hpp"
#include "zpd/weak_tiling.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace zpd::cli {

namespace {

using json::Json;

struct Io {
    std::string input = "-";
    std::string out;
    std::string format = "json";
};

std::string read_all(const std::string &path, std::istream &in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) {
            throw InputError("cannot open input file " + path);
        }
        buf << f.rdbuf();
    }
    return buf.str();
}

void render_human(const Json &j, std::ostream &os, int indent) {
    const std::string pad(indent, ' ');
    std::size_t width = 0;
    for (const auto &[k, v] : j.items()) {
        width = std::max(width, k.size());
    }
    for (const auto &[k, v] : j.items()) {
        if (v.is_object()) {
            os << pad << k << ":\n";
            render_human(v, os, indent + 2);
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            os << pad << k << ":\n";
            for (const auto &e : v) {
                os << pad << "  - " << e.dump() << '\n';
            }
        } else {
            os << pad << std::left << std::setw(static_cast<int>(width)) << k << "  "
               << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        }
    }
}

void emit(const Json &j, const Io &io, std::ostream &out) {
    std::ofstream file;
    std::ostream *os = &out;
    if (!io.out.empty()) {
        file.open(io.out);
        if (!file) {
            throw InputError("cannot open output file " + io.out);
        }
        os = &file;
    }
    if (io.format == "human") {
        render_human(j, *os, 0);
    } else {
        *os << j.dump(2) << '\n';
    }
}

Json points_json(const Geometry &geo, const std::vector<std::uint32_t> &idx) {
    Json arr = Json::array();
    for (auto x : idx) {
        arr.push_back(json::to_json(geo.point(x)));
    }
    return arr;
}

Json verified_complement(const PointSet &a) {
    Json j;
    const auto b = find_tiling_complement(a);
    j["tiles"] = b.has_value();
    if (b) {
        if (!is_tiling(a, *b)) {
            throw InvariantViolation("tiling complement fails is_tiling");
        }
        j["complement"] = points_json(a.geometry(), b->elems());
    }
    return j;
}

Json verified_spectrum(const PointSet &a) {
    Json j;
    const auto s = find_spectrum(a);
    j["spectral"] = s.has_value();
    if (s) {
        if (!is_spectrum(a, *s)) {
            throw InvariantViolation("spectrum fails is_spectrum");
        }
        j["spectrum"] = points_json(a.geometry(), s->points);
    }
    return j;
}

void check_certificate(const PointSet &a, const Certificate &c) {
    const auto r = verify_pd_tiling(a, c.h);
    if (!r.passed()) {
        throw InvariantViolation("certificate fails verification: " + r.detail);
    }
}

std::optional<Certificate> certificate_via(const PointSet &a, const std::string &via) {
    if (via == "tiling") {
        const auto b = find_tiling_complement(a);
        return b ? std::optional(h_from_tiling(*b)) : std::nullopt;
    }
    if (via == "spectrum") {
        const auto s = find_spectrum(a);
        return s ? std::optional(h_from_spectrum(a, *s)) : std::nullopt;
    }
    return pd_tiling_feasible(a);
}

Json dispersive_json(const RayFn &fn, Side side) {
    const auto v = is_dispersive(fn, side);
    Json j{{"dispersive", v.dispersive}, {"side", std::string(to_string(side))}};
    if (v.witness) {
        j["witness"] = {{"plane_normal", json::to_json(fn.geometry().line_id(v.witness->normal).rep)},
                        {"meet", std::string(to_string(v.witness->meet))}};
    }
    return j;
}

Json tuple_checked(const FourTuple &t) {
    const auto r = verify_four_tuple(t);
    if (!r.passed()) {
        throw InvariantViolation("constructed tuple fails its axioms");
    }
    return json::to_json(t);
}

std::vector<std::uint32_t> parse_sizes(const std::string &text) {
    std::vector<std::uint32_t> out;
    auto num = [&](const std::string &s) {
        try {
            std::size_t used = 0;
            const auto v = std::stoul(s, &used);
            if (used != s.size() || v == 0) {
                throw std::invalid_argument(s);
            }
            return static_cast<std::uint32_t>(v);
        } catch (const std::exception &) {
            throw InputError("--sizes: bad size \"" + s + "\"");
        }
    };
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const auto lo = num(text.substr(0, dots));
        const auto hi = num(text.substr(dots + 2));
        for (auto s = lo; s <= hi; ++s) {
            out.push_back(s);
        }
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(num(item));
    }
    return out;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact tiling, spectral and weak pd-tiling computations in (Z_p)^d", "zpd"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Io io;
    std::uint32_t p = 0, d = 0, k = 0;
    std::uint64_t seed = 0;
    std::size_t count = 1000;
    unsigned jobs = 0;
    std::string mode = "orbit", sizes, via = "lp", side = "primal";
    std::function<void()> action;

    auto with_io = [&](CLI::App *sub, bool input) {
        if (input) {
            sub->add_option("-i,--input", io.input, "JSON input file, - for stdin")->capture_default_str();
        }
        sub->add_option("-o,--out", io.out, "output file (default stdout)");
        sub->add_option("--format", io.format, "json or human")
            ->check(CLI::IsMember({"json", "human"}))
            ->capture_default_str();
        return sub;
    };
    auto read_json = [&] { return json::parse(read_all(io.input, in)); };
    auto read_set = [&] { return json::point_set_from_json(read_json()); };

    auto *analyze = with_io(app.add_subcommand("analyze", "tile, spectral and weak pd verdicts for one set"), true);
    analyze->callback([&] {
        action = [&] {
            const auto a = read_set();
            Json j{{"set", json::to_json(a)}};
            j.update(verified_complement(a));
            j.update(verified_spectrum(a));
            const auto cert = pd_tiling_feasible(a);
            j["weak_pd_feasible"] = cert.has_value();
            if (cert) {
                check_certificate(a, *cert);
                j["certificate"] = {{"h", json::to_json(cert->h)},
                                    {"provenance", std::string(to_string(cert->provenance))}};
            }
            if ((j["tiles"].get<bool>() || j["spectral"].get<bool>()) && !cert) {
                throw InvariantViolation("a tile or spectral set came out weak-pd infeasible");
            }
            emit(j, io, out);
        };
    });

    auto *tile_check = with_io(app.add_subcommand("tile-check", "is A + B = G a tiling? input {\"A\":..,\"B\":..}"), true);
    tile_check->callback([&] {
        action = [&] {
            const auto j = read_json();
            if (!j.is_object() || !j.contains("A") || !j.contains("B")) {
                throw InputError("input: expected an object with fields \"A\" and \"B\"");
            }
            const auto a = json::point_set_from_json(j["A"], "A");
            const auto b = json::point_set_from_json(j["B"], "B");
            emit(Json{{"tiling", is_tiling(a, b)}}, io, out);
        };
    });

    auto *tile_complement = with_io(app.add_subcommand("tile-complement", "search for B with A + B = G"), true);
    tile_complement->callback([&] { action = [&] { emit(verified_complement(read_set()), io, out); }; });

    auto *spectrum = with_io(app.add_subcommand("spectrum", "search for a spectrum of A"), true);
    spectrum->callback([&] { action = [&] { emit(verified_spectrum(read_set()), io, out); }; });

    auto *weak_pd = with_io(app.add_subcommand("weak-pd", "weak pd-tiling feasibility with certificate"), true);
    weak_pd->add_option("--via", via, "lp (decides feasibility), tiling or spectrum (build h from a witness)")
        ->check(CLI::IsMember({"lp", "tiling", "spectrum"}))
        ->capture_default_str();
    weak_pd->callback([&] {
        action = [&] {
            const auto a = read_set();
            const auto cert = certificate_via(a, via);
            Json j;
            if (cert) {
                check_certificate(a, *cert);
                j = json::to_json(a, *cert);
                j["feasible"] = true;
            } else if (via == "lp") {
                j["feasible"] = false;
            } else {
                j["feasible"] = nullptr;
                j["note"] = "A has no " + std::string(via == "tiling" ? "tiling complement" : "spectrum");
            }
            emit(j, io, out);
        };
    });

    auto *four_tuple = with_io(
        app.add_subcommand("four-tuple", "averaged 4-tuple from a certificate {A,h,provenance} or from a set"), true);
    four_tuple->callback([&] {
        action = [&] {
            const auto j = read_json();
            std::optional<PointSet> a;
            std::optional<Certificate> cert;
            if (j.is_object() && j.contains("h")) {
                auto [set, c] = json::certificate_from_json(j);
                a = std::move(set);
                cert = std::move(c);
            } else {
                a = json::point_set_from_json(j);
                cert = pd_tiling_feasible(*a);
                if (!cert) {
                    emit(Json{{"feasible", false}}, io, out);
                    return;
                }
            }
            const auto t = average_from_weak_tiling(*a, cert->h);
            const auto r = verify_four_tuple(t);
            if (!r.passed() || r.mass != Rational(a->size())) {
                throw InvariantViolation("averaged tuple fails its axioms or has mass != |A|");
            }
            emit(json::to_json(t), io, out);
        };
    });

    auto *verify_tuple = with_io(app.add_subcommand("verify-tuple", "check the nine 4-tuple conditions"), true);
    verify_tuple->callback([&] {
        action = [&] { emit(json::to_json(verify_four_tuple(json::four_tuple_from_json(read_json()))), io, out); };
    });

    auto *dispersive = with_io(app.add_subcommand("dispersive", "plane sweep for a 4-tuple or a single function (d = 3)"), true);
    dispersive->add_option("--side", side, "side of a single function")
        ->check(CLI::IsMember({"primal", "dual"}))
        ->capture_default_str();
    dispersive->callback([&] {
        action = [&] {
            const auto j = read_json();
            if (j.is_object() && j.contains("at_zero")) {
                emit(dispersive_json(json::ray_fn_from_json(j), side == "dual" ? Side::Dual : Side::Primal), io,
                     out);
                return;
            }
            const auto t = json::four_tuple_from_json(j);
            emit(Json{{"f", dispersive_json(t.f, Side::Primal)},
                      {"h", dispersive_json(t.h, Side::Primal)},
                      {"fhat", dispersive_json(t.fhat, Side::Dual)},
                      {"hhat", dispersive_json(t.hhat, Side::Dual)},
                      {"case", classify_case(t).label}},
                 io, out);
        };
    });

    auto *decompose = with_io(app.add_subcommand("decompose", "greedy plane/line decomposition of a ray-type function"), true);
    decompose->callback([&] {
        action = [&] {
            const auto f = json::ray_fn_from_json(read_json());
            const auto dec = greedy_decompose(f);
            if (!(reconstruct(dec) == f)) {
                throw InvariantViolation("decomposition does not reconstruct its input");
            }
            emit(json::to_json(dec), io, out);
        };
    });

    auto *david = with_io(app.add_subcommand("david", "the triangle 4-tuple in (Z_p)^3"), false);
    david->add_option("--p", p, "odd prime")->required();
    david->callback([&] {
        action = [&] {
            (void)GroupParams(p, 3);
            emit(tuple_checked(example_david(p)), io, out);
        };
    });

    auto *near_pencil = with_io(app.add_subcommand("near-pencil", "the near-pencil 4-tuple in (Z_p)^3"), false);
    near_pencil->add_option("--p", p, "odd prime")->required();
    near_pencil->add_option("--k", k, "number of points, 3..p+1")->required();
    near_pencil->callback([&] {
        action = [&] {
            (void)GroupParams(p, 3);
            emit(tuple_checked(near_pencil_tuple(p, k)), io, out);
        };
    });

    auto *classify = with_io(app.add_subcommand("classify", "pd-flatness sweep, NDJSON records plus a summary"), false);
    classify->add_option("--p", p, "prime")->required();
    classify->add_option("--d", d, "dimension 1..4")->required();
    classify->add_option("--mode", mode, "exhaustive, orbit or sample")
        ->check(CLI::IsMember({"exhaustive", "orbit", "sample"}))
        ->capture_default_str();
    classify->add_option("--sizes", sizes, "orbit mode: 1..9 or 1,5,25 (default all)");
    classify->add_option("--seed", seed, "sample mode seed")->capture_default_str();
    classify->add_option("--count", count, "sample mode: number of sets")->capture_default_str();
    classify->add_option("--jobs", jobs, "workers (default $ZPD_JOBS or all cores)");
    classify->callback([&] {
        action = [&] {
            const GroupParams g(p, d);
            SweepOptions opts;
            opts.mode = parse_sweep_mode(mode);
            opts.sizes = sizes.empty() ? std::vector<std::uint32_t>{} : parse_sizes(sizes);
            opts.seed = seed;
            opts.samples = count;
            opts.jobs = jobs;
            const auto report = pd_flat_sweep(g, opts);
            if (io.format == "human") {
                emit(sweep_summary(report), io, out);
                return;
            }
            std::ostringstream nd;
            write_ndjson(nd, report);
            if (io.out.empty()) {
                out << nd.str();
            } else {
                std::ofstream f(io.out);
                if (!f) {
                    throw InputError("cannot open output file " + io.out);
                }
                f << nd.str();
            }
        };
    });

    auto *exclusion = with_io(app.add_subcommand("david-p3-exclusion", "finite check that no set averages to the triangle tuple"), false);
    p = 3;
    exclusion->add_option("--p", p, "2 or 3")->capture_default_str();
    exclusion->callback([&] {
        action = [&] {
            (void)GroupParams(p, 3);
            const auto r = david_p3_exclusion(p);
            Json sizes_json = Json::array();
            for (const auto &s : r.sizes_checked) {
                sizes_json.push_back(s.get_str());
            }
            Json matches = Json::array();
            for (const auto &a : r.matches) {
                matches.push_back(points_json(a.geometry(), a.elems()));
            }
            emit(Json{{"p", r.p},
                      {"vacuous", r.vacuous},
                      {"sizes_checked", sizes_json},
                      {"representatives", r.representatives},
                      {"matches", matches},
                      {"positive_control_matched", r.positive_control_matched},
                      {"excluded", r.excluded()}},
                 io, out);
        };
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        action();
        return kOk;
    } catch (const InvariantViolation &e) {
        err << "zpd: invariant violation: " << e.what() << '\n';
        return kInvariant;
    } catch (const InputError &e) {
        err << "zpd: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const DomainError &e) {
        err << "zpd: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const BudgetExceeded &e) {
        err << "zpd: " << e.what() << " (count " << e.count() << ")\n";
        return kInvalidInput;
    } catch (const std::exception &e) {
        err << "zpd: internal error: " << e.what() << '\n';
        return kInvariant;
    }
}

} // namespace zpd::cli
