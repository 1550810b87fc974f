#include "radsplit/json_io.hpp"

#include <cctype>

#include "radsplit/errors.hpp"

namespace radsplit {

namespace {

const Z kJsonSafe = (Z(1) << 53) - 1;

Json coeff_list(const std::vector<Z>& c) {
    Json arr = Json::array();
    for (const Z& x : c) arr.push_back(zjson(x));
    return arr;
}

Json coeff_list(const std::vector<long>& c) {
    Json arr = Json::array();
    for (long x : c) arr.push_back(x);
    return arr;
}

std::vector<long> long_list(const Json& j) {
    std::vector<long> out;
    for (const auto& x : j) out.push_back(x.get<long>());
    return out;
}

}  // namespace

Json zjson(const Z& x) {
    if (abs(x) <= kJsonSafe) return Json(static_cast<std::int64_t>(to_long(x)));
    return Json(x.get_str());
}

Z zparse(const Json& j) {
    if (j.is_number_integer()) return Z(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_integer_expr(j.get<std::string>());
    throw RangeError("expected an integer (number or decimal string)");
}

Z parse_integer_expr(const std::string& text) {
    // grammar: ['-'] term ('*' term)*, term = digits ['^' digits]
    size_t pos = 0;
    auto fail = [&]() { throw RangeError("cannot parse integer expression: " + text); };
    auto read_digits = [&]() -> Z {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail();
        return Z(text.substr(start, pos - start));
    };
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    Z value = 1;
    for (;;) {
        Z base = read_digits();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            Z e = read_digits();
            if (!e.fits_ulong_p()) fail();
            base = zpow(base, e.get_ui());
        }
        value *= base;
        if (pos == text.size()) break;
        if (text[pos] != '*') fail();
        ++pos;
    }
    return negative ? Z(-value) : value;
}

Json to_json(const Reducible& r) {
    Json w;
    if (r.q) {
        w["q"] = zjson(*r.q);
        w["root"] = zjson(*r.root);
    } else {
        w["t"] = zjson(*r.sophie_t);
    }
    return Json{{"irreducible", false}, {"witness", w}};
}

namespace {

Json params_json(const CaseParams& params) {
    Json j = Json::object();
    if (const auto* t = std::get_if<TameParams>(&params)) {
        j["v"] = static_cast<std::int64_t>(t->v);
        j["g"] = zjson(t->g);
        j["e"] = zjson(t->e);
        j["a0"] = zjson(t->a0);
    } else if (const auto* w = std::get_if<WildParams>(&params)) {
        j["m"] = static_cast<std::int64_t>(w->m);
        j["n0"] = zjson(w->n0);
        j["w"] = static_cast<std::int64_t>(w->w);
        j["b"] = static_cast<std::int64_t>(w->b);
    } else if (const auto* d = std::get_if<DeepParams>(&params)) {
        j["a0"] = zjson(d->a0);
        j["h"] = static_cast<std::int64_t>(d->h);
        j["k"] = static_cast<std::int64_t>(d->k);
        j["m"] = static_cast<std::int64_t>(d->m);
        j["n0"] = zjson(d->n0);
        j["w0"] = static_cast<std::int64_t>(d->w0);
        j["c"] = static_cast<std::int64_t>(d->c);
        j["g0"] = zjson(d->g0);
        j["g"] = zjson(d->g);
    }
    return j;
}

CaseParams params_from_json(SplitCase kase, const Json& j) {
    switch (kase) {
        case SplitCase::TameRadicand:
            return TameParams{j.at("v").get<unsigned long>(), zparse(j.at("g")),
                              zparse(j.at("e")), zparse(j.at("a0"))};
        case SplitCase::WildIndex:
            return WildParams{j.at("m").get<unsigned long>(), zparse(j.at("n0")),
                              j.at("w").get<unsigned long>(), j.at("b").get<unsigned long>()};
        case SplitCase::Deep:
            return DeepParams{zparse(j.at("a0")),          j.at("h").get<unsigned long>(),
                              j.at("k").get<unsigned long>(), j.at("m").get<unsigned long>(),
                              zparse(j.at("n0")),          j.at("w0").get<unsigned long>(),
                              j.at("c").get<unsigned long>(), zparse(j.at("g0")),
                              zparse(j.at("g"))};
        default:
            return std::monostate{};
    }
}

SplitCase case_from_string(const std::string& s) {
    for (SplitCase c : {SplitCase::Unramified, SplitCase::TameRadicand, SplitCase::WildIndex,
                        SplitCase::Deep, SplitCase::UnsupportedEven})
        if (s == to_string(c)) return c;
    throw RangeError("unknown case tag: " + s);
}

}  // namespace

Json to_json(const Decomposition& d, std::optional<bool> is_cid) {
    Json factors = Json::array();
    for (const auto& g : d.factors)
        factors.push_back(Json{{"e", zjson(g.e)},
                               {"f", static_cast<std::int64_t>(g.f)},
                               {"count", static_cast<std::int64_t>(g.count)},
                               {"label", g.label}});
    Json j{{"p", zjson(d.p)},
           {"case", to_string(d.kase)},
           {"params", params_json(d.params)},
           {"factors", factors},
           {"labeling", d.labeling}};
    if (is_cid) j["is_cid"] = *is_cid;
    return j;
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    d.p = zparse(j.at("p"));
    d.kase = case_from_string(j.at("case").get<std::string>());
    d.params = params_from_json(d.kase, j.at("params"));
    d.labeling = j.value("labeling", "");
    for (const auto& g : j.at("factors"))
        d.factors.push_back({zparse(g.at("e")), g.at("f").get<long>(), g.at("count").get<long>(),
                             g.value("label", "")});
    return d;
}

Json to_json(const CidReport& r) {
    Json j{{"p", zjson(r.p)}};
    switch (r.verdict) {
        case CidVerdict::Yes: j["is_cid"] = true; break;
        case CidVerdict::No: j["is_cid"] = false; break;
        case CidVerdict::Undetermined: j["is_cid"] = "undetermined"; break;
    }
    j["method"] = r.method ? Json(to_string(*r.method)) : Json(nullptr);
    if (r.witness)
        j["witness"] = Json{{"f", static_cast<std::int64_t>(r.witness->f)},
                            {"prime_count", static_cast<std::int64_t>(r.witness->prime_count)},
                            {"irred_count", zjson(r.witness->irreducible_count)}};
    else
        j["witness"] = nullptr;
    return j;
}

Json to_json(const std::vector<CidReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

CidReport cid_report_from_json(const Json& j) {
    CidReport r;
    r.p = zparse(j.at("p"));
    const Json& v = j.at("is_cid");
    if (v.is_boolean())
        r.verdict = v.get<bool>() ? CidVerdict::Yes : CidVerdict::No;
    else
        r.verdict = CidVerdict::Undetermined;
    if (!j.at("method").is_null()) {
        std::string m = j.at("method").get<std::string>();
        for (CidMethod cand : {CidMethod::HenselCount, CidMethod::ClosedFormWild,
                               CidMethod::ClosedFormDeep, CidMethod::NeverByCase})
            if (m == to_string(cand)) r.method = cand;
    }
    if (!j.at("witness").is_null()) {
        const Json& w = j.at("witness");
        r.witness = CidWitness{w.at("f").get<long>(), w.at("prime_count").get<long>(),
                               zparse(w.at("irred_count"))};
    }
    return r;
}

std::vector<CidReport> cid_reports_from_json(const Json& j) {
    std::vector<CidReport> out;
    for (const auto& r : j) out.push_back(cid_report_from_json(r));
    return out;
}

Json to_json(const PolygonReport& pr) {
    Json sides = Json::array();
    for (size_t i = 0; i < pr.polygon.sides.size(); ++i) {
        const Side& s = pr.polygon.sides[i];
        sides.push_back(Json{{"slope", Json::array({-s.h, s.e})},
                             {"length", s.length},
                             {"degree", s.degree},
                             {"residual", coeff_list(pr.residuals[i].poly.coeffs())},
                             {"separable", static_cast<bool>(pr.separable[i])}});
    }
    Json vertices = Json::array();
    for (const auto& [x, y] : pr.polygon.vertices) vertices.push_back(Json::array({x, y}));
    return Json{{"phi", coeff_list(pr.phi.c)}, {"vertices", vertices}, {"sides", sides}};
}

PolygonReport polygon_from_json(const Json& j, long p) {
    PolygonReport pr;
    std::vector<Z> phic;
    for (const auto& c : j.at("phi")) phic.push_back(zparse(c));
    pr.phi = IntPoly(std::move(phic));
    for (const auto& v : j.at("vertices"))
        pr.polygon.vertices.emplace_back(v.at(0).get<long>(), v.at(1).get<long>());
    long x0 = pr.polygon.vertices.empty() ? 0 : pr.polygon.vertices[0].first;
    long y0 = pr.polygon.vertices.empty() ? 0 : pr.polygon.vertices[0].second;
    size_t vi = 1;
    for (const auto& s : j.at("sides")) {
        Side side;
        side.h = -s.at("slope").at(0).get<long>();
        side.e = s.at("slope").at(1).get<long>();
        side.length = s.at("length").get<long>();
        side.degree = s.at("degree").get<long>();
        side.x0 = x0;
        side.y0 = y0;
        side.x1 = pr.polygon.vertices[vi].first;
        side.y1 = pr.polygon.vertices[vi].second;
        x0 = side.x1;
        y0 = side.y1;
        ++vi;
        pr.polygon.sides.push_back(side);
        pr.separable.push_back(s.at("separable").get<bool>());
        pr.residuals.push_back(ResidualPoly{side, FpPoly(p, long_list(s.at("residual")))});
    }
    return pr;
}

}  // namespace radsplit
