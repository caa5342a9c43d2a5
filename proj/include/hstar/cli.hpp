// Command-line front end. `run` is the whole program minus main(), so tests
// can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 domain error (JSON error object on stderr),
// 2 resource cap exceeded, 64 usage error.

#pragma once

#include "hstar/bernoulli.hpp"
#include "hstar/caps.hpp"
#include "hstar/codes.hpp"
#include "hstar/error.hpp"
#include "hstar/json_io.hpp"
#include "hstar/lattice.hpp"
#include "hstar/torus.hpp"
#include "hstar/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hstar::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kResourceLimit = 2, kUsage = 64 };

/// Thrown for malformed flags or cap overrides; maps to exit code 64.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Applies a JSON object of cap overrides, e.g. {"max_volume": 5000}.
inline ResourceCaps caps_from_json(const std::string& text, ResourceCaps caps = {}) {
    io::Json j;
    try {
        j = io::Json::parse(text);
    } catch (const io::Json::parse_error& e) {
        throw UsageError(std::string("caps override is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw UsageError("caps override must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_integer() || value.get<std::int64_t>() <= 0)
            throw UsageError("cap \"" + key + "\" must be a positive integer");
        const auto v = value.get<std::int64_t>();
        if (key == "max_volume") caps.max_volume = v;
        else if (key == "max_box_points") caps.max_box_points = v;
        else if (key == "max_codewords") caps.max_codewords = v;
        else if (key == "max_field_order") caps.max_field_order = v;
        else if (key == "max_search_nodes") caps.max_search_nodes = v;
        else throw UsageError("unknown cap \"" + key + "\"");
    }
    return caps;
}

namespace detail {

inline std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) fail("FileNotFound", "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

struct Options {
    std::string format = "json";
    std::string caps_json;
    std::string file;
    int p = 0;
    int r = 0;
    std::int64_t k = 0;
    std::int64_t d = 0;
    std::string scale = "small";
};

class Runner {
  public:
    Runner(const Options& opt, const ResourceCaps& caps, std::ostream& out) : opt_(opt), caps_(caps), out_(out) {}

    int hstar_cmd() {
        const auto s = io::simplex_from_json(io::parse_json(read_input(opt_.file)));
        const auto a = hstar::hstar(s, caps_);
        const auto b = hstar_via_ehrhart(s, caps_);
        io::Json j = io::to_json(a);
        j["ehrhart_coeffs"] = io::to_json(b)["coeffs"];
        j["agreement"] = a == b;
        j["volume"] = io::to_json(s.volume());
        if (text()) {
            out_ << "h* (parallelepiped): " << to_string(a) << "\n"
                 << "h* (Ehrhart):        " << to_string(b) << "\n"
                 << "volume: " << s.volume() << "\nagreement: " << (a == b ? "true" : "false") << "\n";
        } else {
            out_ << j.dump() << "\n";
        }
        return a == b ? kOk : kDomainError;
    }

    int lambda_cmd() {
        const auto g = lambda_of(io::simplex_from_json(io::parse_json(read_input(opt_.file))), caps_);
        if (text()) {
            out_ << "order " << g.order() << ", exponent " << g.denominator() << "\n";
            for (std::size_t e = 0; e < g.order(); ++e) {
                for (std::size_t i = 0; i < g.ambient(); ++i) out_ << (i ? " " : "") << to_string(g.coordinate(e, i));
                out_ << "\n";
            }
            return kOk;
        }
        return emit(io::to_json(g));
    }

    int simplex_from_group_cmd() {
        const auto g = io::group_from_json(io::parse_json(read_input(opt_.file)));
        if (static_cast<std::int64_t>(g.order()) > caps_.max_volume)
            throw ResourceLimit("group order exceeds max_volume");
        return emit(io::to_json(simplex_of(g)));
    }

    int code_from_simplex_cmd() {
        const auto sc = code_of_simplex(io::simplex_from_json(io::parse_json(read_input(opt_.file))), caps_);
        io::Json j = io::to_json(sc.code);
        j["k"] = sc.k;
        j["r"] = sc.code.dimension();
        return emit(j);
    }

    int simplex_from_code_cmd() {
        const auto code = io::code_from_text(read_input(opt_.file), prime());
        return emit(io::to_json(simplex_of_code(code, caps_)));
    }

    int simplex_code_cmd() {
        if (opt_.r < 1) throw UsageError("--r must be >= 1");
        if (!is_prime(opt_.p)) fail("InvalidPrime", std::to_string(opt_.p) + " is not prime");
        if (ipow(BigInt(opt_.p), static_cast<unsigned>(opt_.r)) > caps_.max_codewords)
            throw ResourceLimit("p^r exceeds max_codewords");
        return emit(io::to_json(simplex_code(opt_.p, static_cast<std::size_t>(opt_.r))));
    }

    int decompose_cmd() {
        const auto code = io::code_from_text(read_input(opt_.file), prime());
        return emit(io::to_json(pair_decompose(code, caps_)));
    }

    int param_check_cmd() {
        const bool ok = param_check(opt_.p, opt_.r, opt_.k, opt_.d);
        if (text()) {
            out_ << (ok ? "true" : "false") << "\n";
            return kOk;
        }
        return emit(io::Json{{"valid", ok}});
    }

    int bernoulli_sweep_cmd() {
        const FqField f = make_field(opt_.p, opt_.r);
        const auto rep = nonvanishing_sweep(f, caps_);
        if (text()) {
            out_ << "F_" << f.q() << ": " << rep.characters.size() << " characters, " << rep.odd_zero_count()
                 << " odd zeros\n";
            for (const auto& c : rep.characters)
                out_ << "j=" << c.j << (c.odd ? " odd " : " even ") << (c.is_zero ? "zero" : "nonzero")
                     << " |B|^2 = " << to_string(c.norm_square) << "\n";
            return kOk;
        }
        return emit(io::to_json(rep));
    }

    int verify_all_cmd() {
        const auto scale = opt_.scale == "full" ? verify::Scale::Full : verify::Scale::Small;
        bool ok = true;
        io::Json rows = io::Json::array();
        for (const auto& r : verify::run_all(scale)) {
            ok = ok && r.passed();
            if (text()) out_ << verify::format_line(r) << "\n";
            rows.push_back({{"criterion", r.id},
                            {"title", r.title},
                            {"status", verify::status_label(r.status)},
                            {"detail", r.detail}});
        }
        if (!text()) out_ << io::Json{{"scale", opt_.scale}, {"passed", ok}, {"criteria", rows}}.dump(2) << "\n";
        return ok ? kOk : kDomainError;
    }

  private:
    bool text() const { return opt_.format == "text"; }
    std::optional<int> prime() const { return opt_.p > 0 ? std::optional<int>(opt_.p) : std::nullopt; }

    int emit(const io::Json& j) {
        out_ << (text() ? j.dump(2) : j.dump()) << "\n";
        return kOk;
    }

    const Options& opt_;
    const ResourceCaps& caps_;
    std::ostream& out_;
};

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    detail::Options opt;
    CLI::App app{"Exact h*-polynomials, torus groups, constant-age codes and Bernoulli sums", "hstar"};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--caps", opt.caps_json, "JSON object of resource-cap overrides (also HSTAR_CAPS)");

    auto file_cmd = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", opt.file, "input file, or - for stdin")->required();
        return sub;
    };
    auto* c_hstar = file_cmd("hstar", "h* of a simplex by both algorithms");
    auto* c_lambda = file_cmd("lambda", "the finite group of a simplex");
    auto* c_sfg = file_cmd("simplex-from-group", "a simplex realizing a torus subgroup");
    auto* c_cfs = file_cmd("code-from-simplex", "the linear code of a binomial simplex");
    auto* c_sfc = file_cmd("simplex-from-code", "the simplex of a linear code");
    c_sfc->add_option("--p", opt.p, "prime (required for plain-text matrices)");
    auto* c_dec = file_cmd("decompose", "Bonisoli blocks and (A, -A) pairs of a constant-age code");
    c_dec->add_option("--p", opt.p, "prime (required for plain-text matrices)");
    auto* c_sc = app.add_subcommand("simplex-code", "generator matrix of the simplex code");
    c_sc->add_option("--p", opt.p)->required();
    c_sc->add_option("--r", opt.r)->required();
    auto* c_pc = app.add_subcommand("param-check", "2k(p^r - 1) == (d + 1)(p - 1)p^(r-1)");
    c_pc->add_option("--p", opt.p)->required();
    c_pc->add_option("--r", opt.r)->required();
    c_pc->add_option("--k", opt.k)->required();
    c_pc->add_option("--d", opt.d)->required();
    auto* c_bs = app.add_subcommand("bernoulli-sweep", "B_1,chi for every character of F_(p^r)");
    c_bs->add_option("--p", opt.p)->required();
    c_bs->add_option("--r", opt.r)->required();
    auto* c_va = app.add_subcommand("verify-all", "run the acceptance checks");
    c_va->add_option("--scale", opt.scale)->check(CLI::IsMember({"small", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        ResourceCaps caps;
        if (const char* env = std::getenv("HSTAR_CAPS"); env && *env) caps = caps_from_json(env, caps);
        if (!opt.caps_json.empty()) caps = caps_from_json(opt.caps_json, caps);
        detail::Runner run(opt, caps, out);
        if (c_hstar->parsed()) return run.hstar_cmd();
        if (c_lambda->parsed()) return run.lambda_cmd();
        if (c_sfg->parsed()) return run.simplex_from_group_cmd();
        if (c_cfs->parsed()) return run.code_from_simplex_cmd();
        if (c_sfc->parsed()) return run.simplex_from_code_cmd();
        if (c_dec->parsed()) return run.decompose_cmd();
        if (c_sc->parsed()) return run.simplex_code_cmd();
        if (c_pc->parsed()) return run.param_check_cmd();
        if (c_bs->parsed()) return run.bernoulli_sweep_cmd();
        if (c_va->parsed()) return run.verify_all_cmd();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    } catch (const ResourceLimit& e) {
        err << io::error_json(e.code(), e.what()).dump() << "\n";
        return kResourceLimit;
    } catch (const Error& e) {
        err << io::error_json(e.code(), e.what()).dump() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        err << io::error_json("InternalError", e.what()).dump() << "\n";
        return kDomainError;
    }
    err << app.help();
    return kUsage;
}

}  // namespace hstar::cli
