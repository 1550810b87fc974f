#include "radsplit/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "radsplit/arith.hpp"
#include "radsplit/cid.hpp"
#include "radsplit/errors.hpp"
#include "radsplit/json_io.hpp"
#include "radsplit/newton.hpp"
#include "radsplit/splitting.hpp"

namespace radsplit::cli {

namespace {

std::string error_line(const std::string& code, const std::string& message,
                       const Json& detail = Json(nullptr)) {
    Json e{{"code", code}, {"message", message}};
    if (!detail.is_null()) e["detail"] = detail;
    return Json{{"error", e}}.dump();
}

Response fail(int exit_code, const std::string& code, const std::string& message,
              const Json& detail = Json(nullptr)) {
    return {exit_code, "", error_line(code, message, detail)};
}

std::uint64_t effective_seed(const Request& req) {
    if (req.seed) return *req.seed;
    if (const char* env = std::getenv("RADSPLIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw RangeError("RADSPLIT_SEED is not an unsigned integer");
        }
    }
    return kDefaultFactorSeed;
}

void require_prime(const Z& p) {
    if (p < 2 || !is_probable_prime(p)) throw RangeError("p must be prime, got " + to_string(p));
}

std::string text_factor_table(const Decomposition& d) {
    std::ostringstream os;
    os << "case: " << to_string(d.kase) << "\n";
    os << "labeling: " << d.labeling << "\n";
    for (const auto& g : d.factors) {
        os << "  " << g.label << "  e=" << to_string(g.e) << "  f=" << g.f;
        if (g.count != 1) os << "  count=" << g.count;
        os << "\n";
    }
    return os.str();
}

Response respond_decomposition(const Request& req, const Decomposition& d, const CidReport& cid) {
    bool yes = cid.verdict == CidVerdict::Yes;
    if (req.format == "text") {
        std::ostringstream os;
        os << text_factor_table(d);
        os << "is_cid: " << (yes ? "yes" : "no");
        if (cid.witness)
            os << " (f=" << cid.witness->f << ": " << cid.witness->prime_count << " primes > "
               << to_string(cid.witness->irreducible_count) << " monic irreducibles)";
        return {kExitOk, os.str(), ""};
    }
    return {kExitOk, to_json(d, yes).dump(), ""};
}

Response run_irreducible(const Request& req) {
    auto cert = check_irreducible(req.n, req.a);
    if (const auto* red = std::get_if<Reducible>(&cert)) {
        if (req.format == "text") {
            std::ostringstream os;
            os << "irreducible: no";
            if (red->q)
                os << " (a = (" << to_string(*red->root) << ")^" << to_string(*red->q) << ")";
            else
                os << " (a = -4*(" << to_string(*red->sophie_t) << ")^4)";
            return {kExitReducible, os.str(), ""};
        }
        return {kExitReducible, to_json(*red).dump(), ""};
    }
    if (req.format == "text") return {kExitOk, "irreducible: yes", ""};
    return {kExitOk, Json{{"irreducible", true}}.dump(), ""};
}

Response run_split(const Request& req) {
    require_prime(*req.p);
    auto cert = check_irreducible(req.n, req.a);
    if (const auto* red = std::get_if<Reducible>(&cert))
        return fail(kExitReducible, "reducible", "x^n - a is reducible over Q",
                    to_json(*red)["witness"]);
    const RadicalInput& input = std::get<RadicalInput>(cert);
    Decomposition d = split(input, *req.p, effective_seed(req));
    return respond_decomposition(req, d, is_cid_hensel(d));
}

Response run_cids(const Request& req) {
    auto cert = check_irreducible(req.n, req.a);
    if (const auto* red = std::get_if<Reducible>(&cert))
        return fail(kExitReducible, "reducible", "x^n - a is reducible over Q",
                    to_json(*red)["witness"]);
    const RadicalInput& input = std::get<RadicalInput>(cert);
    std::vector<CidReport> reports = enumerate_cids(input, effective_seed(req));
    if (req.format == "text") {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << "p=" << to_string(r.p) << ": " << to_string(r.verdict);
            if (r.method) os << " [" << to_string(*r.method) << "]";
            if (r.witness)
                os << " (f=" << r.witness->f << ": " << r.witness->prime_count << " > "
                   << to_string(r.witness->irreducible_count) << ")";
            os << "\n";
        }
        std::string s = os.str();
        if (!s.empty()) s.pop_back();
        return {kExitOk, s, ""};
    }
    return {kExitOk, to_json(reports).dump(), ""};
}

Response run_polygon(const Request& req) {
    require_prime(*req.p);
    auto cert = check_irreducible(req.n, req.a);
    if (const auto* red = std::get_if<Reducible>(&cert))
        return fail(kExitReducible, "reducible", "x^n - a is reducible over Q",
                    to_json(*red)["witness"]);
    Z r;
    if (req.phi_root) {
        r = *req.phi_root;
    } else {
        r = req.a % *req.p;
        if (sgn(r) < 0) r += *req.p;
    }
    PolygonReport pr;
    pr.phi = IntPoly::linear(r);
    Development dev = develop(IntPoly::xn_minus_a(to_long(req.n), req.a), pr.phi, *req.p);
    try {
        pr.polygon = principal_polygon(dev);
    } catch (const EmptyPolygon& e) {
        return fail(kExitUnsupported, "empty_polygon",
                    std::string(e.what()) + "; x - r must divide x^n - a mod p (try --phi)");
    }
    bool all_separable = true;
    for (const auto& side : pr.polygon.sides) {
        ResidualPoly rp = residual_poly(dev, side);
        bool sep = is_separable(rp.poly);
        all_separable = all_separable && sep;
        pr.residuals.push_back(std::move(rp));
        pr.separable.push_back(sep);
    }
    std::string out;
    if (req.format == "text") {
        std::ostringstream os;
        os << "phi: " << pr.phi.str() << "\nvertices:";
        for (const auto& [x, y] : pr.polygon.vertices) os << " (" << x << "," << y << ")";
        os << "\n";
        for (size_t i = 0; i < pr.polygon.sides.size(); ++i) {
            const Side& s = pr.polygon.sides[i];
            os << "side " << i + 1 << ": slope -" << s.h << "/" << s.e << "  length " << s.length
               << "  degree " << s.degree << "  residual " << pr.residuals[i].poly.str('y')
               << (pr.separable[i] ? "" : "  (inseparable)") << "\n";
        }
        out = os.str();
        if (!out.empty()) out.pop_back();
    } else {
        out = to_json(pr).dump();
    }
    if (!all_separable)
        return {kExitUnsupported, out,
                error_line("requires_further_dissection",
                           "a residual polynomial is inseparable; the first dissection cannot "
                           "refine this prime")};
    return {kExitOk, out, ""};
}

Response run_single(const Request& req);

Response run_batch(const Request& req) {
    std::ifstream in(req.batch_path);
    if (!in) return fail(kExitMalformed, "malformed", "cannot open batch file " + req.batch_path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back(line);
    }
    std::vector<std::string> results(lines.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= lines.size()) return;
            try {
                Request line_req = parse_request_json(lines[i]);
                if (line_req.command == "batch") {
                    results[i] = error_line("malformed", "batch requests cannot nest");
                    continue;
                }
                if (!line_req.seed) line_req.seed = req.seed;
                line_req.format = "json";  // responses must stay one line each
                Response r = run_single(line_req);
                // one line per request: a structured error wins over partial output
                if (r.exit_code == kExitOk)
                    results[i] = r.out;
                else
                    results[i] = r.err.empty() ? r.out : r.err;
            } catch (const std::exception& e) {
                results[i] = error_line("malformed", e.what());
            }
        }
    };
    size_t nthreads = std::min<size_t>(lines.size(),
                                       std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::ostringstream os;
    for (size_t i = 0; i < results.size(); ++i) {
        if (i) os << "\n";
        os << results[i];
    }
    return {kExitOk, os.str(), ""};
}

Response run_single(const Request& req) {
    try {
        if (req.command == "irreducible") return run_irreducible(req);
        if (req.command == "split" || req.command == "polygon") {
            if (!req.p) return fail(kExitMalformed, "malformed", req.command + " requires p");
            return req.command == "split" ? run_split(req) : run_polygon(req);
        }
        if (req.command == "cids") return run_cids(req);
        return fail(kExitMalformed, "malformed", "unknown command: " + req.command);
    } catch (const UnsupportedEvenPrime& e) {
        return fail(kExitUnsupported, "unsupported_even", e.what());
    } catch (const WieferichOverflow& e) {
        return fail(kExitUnsupported, "wieferich_overflow", e.what());
    } catch (const InternalError& e) {
        return fail(kExitMalformed, "internal", e.what());
    } catch (const Error& e) {
        return fail(kExitMalformed, "malformed", e.what());
    } catch (const std::exception& e) {
        return fail(kExitMalformed, "malformed", e.what());
    }
}

}  // namespace

Response run(const Request& req) {
    if (req.command == "batch") return run_batch(req);
    return run_single(req);
}

Request parse_request_json(const std::string& line) {
    Json j;
    try {
        j = Json::parse(line);
    } catch (const Json::exception& e) {
        throw RangeError(std::string("invalid request document: ") + e.what());
    }
    if (!j.is_object() || !j.contains("command"))
        throw RangeError("request must be an object with a \"command\" field");
    Request req;
    req.command = j.at("command").get<std::string>();
    if (j.contains("n")) req.n = zparse(j.at("n"));
    if (j.contains("a")) req.a = zparse(j.at("a"));
    if (j.contains("p")) req.p = zparse(j.at("p"));
    if (j.contains("phi")) req.phi_root = zparse(j.at("phi"));
    if (j.contains("format")) req.format = j.at("format").get<std::string>();
    if (j.contains("seed")) req.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("file")) req.batch_path = j.at("file").get<std::string>();
    return req;
}

int main_entry(int argc, char** argv) {
    CLI::App app{"prime ideal splitting and common index divisors of Q(a^(1/n))"};
    app.require_subcommand(1);

    std::string nstr, astr, pstr, phistr, format = "json", batch_file;
    std::uint64_t seed = 0;
    bool have_seed = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option_function<std::uint64_t>(
            "--seed", [&](std::uint64_t s) { seed = s; have_seed = true; },
            "seed for the randomized factorization splitter");
    };

    CLI::App* c_irr = app.add_subcommand("irreducible", "certify x^n - a irreducible over Q");
    c_irr->add_option("n", nstr)->required();
    c_irr->add_option("a", astr)->required();
    add_common(c_irr);

    CLI::App* c_split = app.add_subcommand("split", "decomposition of (p) in Q(a^(1/n))");
    c_split->add_option("n", nstr)->required();
    c_split->add_option("a", astr)->required();
    c_split->add_option("p", pstr)->required();
    add_common(c_split);

    CLI::App* c_cids = app.add_subcommand("cids", "all common index divisors of Q(a^(1/n))");
    c_cids->add_option("n", nstr)->required();
    c_cids->add_option("a", astr)->required();
    add_common(c_cids);

    CLI::App* c_poly = app.add_subcommand("polygon", "principal (x - r)-polygon of x^n - a at p");
    c_poly->add_option("n", nstr)->required();
    c_poly->add_option("a", astr)->required();
    c_poly->add_option("p", pstr)->required();
    c_poly->add_option("--phi", phistr, "develop at x - r (default r = a mod p)");
    add_common(c_poly);

    CLI::App* c_batch = app.add_subcommand("batch", "newline-delimited JSON requests from a file");
    c_batch->add_option("file", batch_file)->required();
    add_common(c_batch);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << error_line("malformed", e.what()) << "\n";
        return kExitMalformed;
    }

    Request req;
    try {
        if (c_irr->parsed()) req.command = "irreducible";
        if (c_split->parsed()) req.command = "split";
        if (c_cids->parsed()) req.command = "cids";
        if (c_poly->parsed()) req.command = "polygon";
        if (c_batch->parsed()) {
            req.command = "batch";
            req.batch_path = batch_file;
        }
        if (!nstr.empty()) req.n = parse_integer_expr(nstr);
        if (!astr.empty()) req.a = parse_integer_expr(astr);
        if (!pstr.empty()) req.p = parse_integer_expr(pstr);
        if (!phistr.empty()) req.phi_root = parse_integer_expr(phistr);
        req.format = format;
        if (have_seed) req.seed = seed;
    } catch (const std::exception& e) {
        std::cerr << error_line("malformed", e.what()) << "\n";
        return kExitMalformed;
    }

    Response resp = run(req);
    if (!resp.out.empty()) std::cout << resp.out << "\n";
    if (!resp.err.empty()) std::cerr << resp.err << "\n";
    return resp.exit_code;
}

}  // namespace radsplit::cli
