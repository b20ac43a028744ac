#include "zpd/json_io.hpp"

#include "zpd/errors.hpp"

#include <algorithm>

namespace zpd::json {

namespace {

[[noreturn]] void fail(const std::string &path, const std::string &msg) { throw InputError(path + ": " + msg); }

const Json &field(const Json &j, const char *key, const std::string &path) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        fail(path, std::string("missing field \"") + key + "\"");
    }
    return *it;
}

std::uint32_t uint_from_json(const Json &j, const std::string &path) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0 || j.get<std::int64_t>() > UINT32_MAX) {
        fail(path, "expected a nonnegative integer");
    }
    return j.get<std::uint32_t>();
}

GroupParams params_from_json(const Json &j, const std::string &path) {
    const auto p = uint_from_json(field(j, "p", path), path + ".p");
    const auto d = uint_from_json(field(j, "d", path), path + ".d");
    try {
        return GroupParams(p, d);
    } catch (const InputError &e) {
        fail(path, e.what());
    }
}

void put_params(Json &j, const GroupParams &g) {
    j["p"] = g.p();
    j["d"] = g.d();
}

std::vector<std::uint32_t> indices_from_json(const Json &j, const GeometryPtr &geo, const std::string &path) {
    if (!j.is_array()) {
        fail(path, "expected an array of points");
    }
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(geo->index(point_from_json(j[i], geo->params(), path + "[" + std::to_string(i) + "]")));
    }
    return out;
}

} // namespace

Json parse(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error &e) {
        const auto upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
        const auto nl = text.rfind('\n', upto == 0 ? 0 : upto - 1);
        const auto col = nl == std::string_view::npos ? upto + 1 : upto - nl;
        throw InputError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
}

Json to_json(const Rational &q) { return to_string(q); }

Rational rational_from_json(const Json &j, const std::string &path) {
    if (j.is_number_integer()) {
        return Rational(std::to_string(j.get<std::int64_t>()));
    }
    if (!j.is_string()) {
        fail(path, "expected a rational string such as \"3/7\"");
    }
    try {
        return parse_rational(j.get<std::string>());
    } catch (const InputError &e) {
        fail(path, e.what());
    }
}

Json to_json(const Point &x) {
    Json j = Json::array();
    for (auto c : x.coords()) {
        j.push_back(c);
    }
    return j;
}

Point point_from_json(const Json &j, const GroupParams &g, const std::string &path) {
    if (!j.is_array() || j.size() != g.d()) {
        fail(path, "expected an array of " + std::to_string(g.d()) + " coordinates");
    }
    std::vector<std::uint32_t> c;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto v = uint_from_json(j[i], path + "[" + std::to_string(i) + "]");
        if (v >= g.p()) {
            fail(path + "[" + std::to_string(i) + "]", "coordinate out of range 0.." + std::to_string(g.p() - 1));
        }
        c.push_back(v);
    }
    return Point(c);
}

Json to_json(const PointSet &a) {
    Json j;
    put_params(j, a.params());
    j["elems"] = Json::array();
    for (const auto &x : a.points()) {
        j["elems"].push_back(to_json(x));
    }
    return j;
}

PointSet point_set_from_json(const Json &j, const std::string &path) {
    const auto geo = Geometry::of(params_from_json(j, path));
    auto idx = indices_from_json(field(j, "elems", path), geo, path + ".elems");
    if (idx.empty()) {
        fail(path + ".elems", "the set must be nonempty");
    }
    return PointSet(geo, std::move(idx));
}

Json to_json(const RayFn &f) {
    Json j;
    put_params(j, f.params());
    j["at_zero"] = to_json(f.at_zero());
    j["lines"] = Json::array();
    const auto &geo = f.geometry();
    for (std::uint32_t l = 0; l < geo.line_count(); ++l) {
        if (f.supported_on(l)) {
            j["lines"].push_back(Json{{"rep", to_json(geo.line_id(l).rep)}, {"value", to_json(f.on_line(l))}});
        }
    }
    return j;
}

RayFn ray_fn_from_json(const Json &j, const std::string &path) {
    const auto geo = Geometry::of(params_from_json(j, path));
    RayFn f(geo);
    f.at_zero() = rational_from_json(field(j, "at_zero", path), path + ".at_zero");
    const auto &lines = field(j, "lines", path);
    if (!lines.is_array()) {
        fail(path + ".lines", "expected an array");
    }
    std::vector<bool> seen(geo->line_count());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto here = path + ".lines[" + std::to_string(i) + "]";
        const auto rep = point_from_json(field(lines[i], "rep", here), geo->params(), here + ".rep");
        if (rep.is_zero()) {
            fail(here + ".rep", "the origin is not on a punctured line");
        }
        const auto l = geo->line_index(geo->index(rep));
        if (seen[l]) {
            fail(here + ".rep", "line " + to_string(geo->line_id(l).rep) + " given twice");
        }
        seen[l] = true;
        f.on_line(l) = rational_from_json(field(lines[i], "value", here), here + ".value");
    }
    return f;
}

Json to_json(const Spectrum &s) {
    Json j;
    put_params(j, s.geo->params());
    j["points"] = Json::array();
    for (auto t : s.points) {
        j["points"].push_back(to_json(s.geo->point(t)));
    }
    return j;
}

Spectrum spectrum_from_json(const Json &j, const std::string &path) {
    const auto geo = Geometry::of(params_from_json(j, path));
    return Spectrum{geo, indices_from_json(field(j, "points", path), geo, path + ".points")};
}

Json to_json(const PointSet &a, const Certificate &c) {
    return Json{{"A", to_json(a)}, {"h", to_json(c.h)}, {"provenance", std::string(to_string(c.provenance))}};
}

std::pair<PointSet, Certificate> certificate_from_json(const Json &j) {
    auto a = point_set_from_json(field(j, "A", "certificate"), "certificate.A");
    auto h = ray_fn_from_json(field(j, "h", "certificate"), "certificate.h");
    if (!(a.params() == h.params())) {
        fail("certificate", "A and h live on different groups");
    }
    const auto &prov = field(j, "provenance", "certificate");
    if (!prov.is_string()) {
        fail("certificate.provenance", "expected a string");
    }
    Provenance p;
    try {
        p = parse_provenance(prov.get<std::string>());
    } catch (const InputError &e) {
        fail("certificate.provenance", e.what());
    }
    return {std::move(a), Certificate{std::move(h), p}};
}

Json to_json(const FourTuple &t) {
    return Json{{"f", to_json(t.f)}, {"h", to_json(t.h)}, {"fhat", to_json(t.fhat)}, {"hhat", to_json(t.hhat)}};
}

FourTuple four_tuple_from_json(const Json &j) {
    auto f = ray_fn_from_json(field(j, "f", "tuple"), "tuple.f");
    auto h = ray_fn_from_json(field(j, "h", "tuple"), "tuple.h");
    auto fhat = ray_fn_from_json(field(j, "fhat", "tuple"), "tuple.fhat");
    auto hhat = ray_fn_from_json(field(j, "hhat", "tuple"), "tuple.hhat");
    return FourTuple{std::move(f), std::move(h), std::move(fhat), std::move(hhat)};
}

Json to_json(const Decomposition &dec) {
    Json j;
    put_params(j, dec.geo->params());
    j["w"] = to_json(dec.w);
    j["m"] = to_json(dec.m);
    auto by_line = [&](const std::vector<Rational> &vals, const char *key) {
        Json arr = Json::array();
        for (std::uint32_t l = 0; l < vals.size(); ++l) {
            if (sgn(vals[l]) != 0) {
                arr.push_back(Json{{key, to_json(dec.geo->line_id(l).rep)}, {"value", to_json(vals[l])}});
            }
        }
        return arr;
    };
    j["planes"] = by_line(dec.planes, "normal");
    j["lines"] = by_line(dec.lines, "rep");
    return j;
}

Json to_json(const AxiomReport &r) {
    static constexpr const char *kNames[9] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"};
    Json axioms;
    for (std::size_t i = 0; i < 9; ++i) {
        Json a{{"holds", r.axiom[i]}};
        if (!r.axiom[i]) {
            a["detail"] = r.detail[i];
        }
        axioms[kNames[i]] = a;
    }
    Json j{{"axioms", axioms}, {"mass", to_json(r.mass)}, {"passed", r.passed()}};
    if (r.set_size) {
        j["set_size"] = r.set_size->get_str();
    }
    return j;
}

} // namespace zpd::json
