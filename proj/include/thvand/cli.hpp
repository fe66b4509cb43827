#pragma once

#include "thvand/bij.hpp"
#include "thvand/json_io.hpp"
#include "thvand/params.hpp"
#include "thvand/random.hpp"
#include "thvand/thsystem.hpp"
#include "thvand/transition.hpp"
#include "thvand/vand.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace thvand::cli {

using json_io::json;

enum Exit { ok = 0, input_error = 1, property_failure = 2 };

// q, Q, rational -> ℚ; gf101, GF(101), p101, 101 -> GF(101)
inline Field parse_field(std::string s) {
    std::string low;
    for (char c : s)
        if (c != '(' && c != ')') low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (low == "q" || low == "rational") return Field::rational();
    std::string digits = low;
    if (digits.rfind("gf", 0) == 0)
        digits = digits.substr(2);
    else if (digits.rfind("p", 0) == 0)
        digits = digits.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 19)
        throw FieldError("unknown field \"" + s + "\"");
    return Field::prime(std::stoull(digits));
}

struct Options {
    std::string in;
    std::string emit = "matrices";
    std::string g;
    std::string alpha = "1", beta = "0", alpha_star = "1", beta_star = "0";
    std::string vand_action;
    std::size_t samples = 100;
    std::size_t d = 4;
    std::string field = "q";
    std::uint64_t seed = 1;
};

class Failure : public std::runtime_error {
public:
    Failure(const std::string& msg, json detail) : std::runtime_error(msg), detail(std::move(detail)) {}
    json detail;
};

namespace detail {

inline json read_input(const Options& o, std::istream& in) {
    std::string text;
    if (o.in.empty() || o.in == "-") {
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::ifstream file(o.in);
        if (!file) throw json_io::FormatError("cannot open input file \"" + o.in + "\"");
        std::stringstream ss;
        ss << file.rdbuf();
        text = ss.str();
    }
    return json::parse(text);
}

inline json error_object(const std::string& kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

struct Tally {
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
    std::vector<std::string> order;
    json counterexample;

    void record(const std::string& name, bool pass, std::size_t sample, const ParameterArray* pa,
                const std::string& detail = "") {
        if (!counts.count(name)) order.push_back(name);
        auto& c = counts[name];
        (pass ? c.first : c.second)++;
        if (!pass && counterexample.is_null()) {
            counterexample = {{"sample", sample}, {"check", name}};
            if (!detail.empty()) counterexample["detail"] = detail;
            if (pa) counterexample["parameter_array"] = json_io::pa_to_json(*pa);
        }
    }

    bool ok() const { return counterexample.is_null(); }

    json summary() const {
        json s = json::object();
        for (const auto& name : order) s[name] = {{"pass", counts.at(name).first}, {"fail", counts.at(name).second}};
        return s;
    }
};

// Runs fn and records an exception as a failure of the named check.
template <class Fn>
void guarded(Tally& t, const std::string& name, std::size_t k, const ParameterArray* pa, Fn fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        t.record(name, false, k, pa, e.what());
    }
}

inline void report_identities(Tally& t, const std::string& name, std::size_t k, const ParameterArray& pa,
                              const IdentityReport& r) {
    t.record(name, r.ok(), k, &pa, r.ok() ? "" : r.first_failure());
}

}  // namespace detail

inline int cmd_validate(const json& j, std::ostream& out) {
    ParameterArray pa = json_io::pa_from_json(j);
    try {
        validate(pa);
    } catch (const ValidationError& e) {
        out << json{{"valid", false},
                    {"error", {{"code", ValidationError::code_name(e.code)}, {"i", e.i}, {"j", e.j}, {"message", e.what()}}}}
            << "\n";
        return input_error;
    }
    out << json{{"valid", true}} << "\n";
    return ok;
}

inline int cmd_build(const json& j, const Options& o, std::ostream& out) {
    ParameterArray pa = validate(json_io::pa_from_json(j));
    if (o.emit == "scalars") {
        ScalarData sc = scalars(pa);
        out << json{{"field", json_io::field_to_json(pa.field)},
                    {"ell", json_io::vec_to_json(sc.ell)},
                    {"ell_star", json_io::vec_to_json(sc.ell_star)},
                    {"ell_tilde", json_io::vec_to_json(sc.ell_tilde)},
                    {"ell_tilde_star", json_io::vec_to_json(sc.ell_tilde_star)},
                    {"nu", json_io::scalar_to_json(sc.nu)},
                    {"nu_tilde", json_io::scalar_to_json(sc.nu_tilde)}}
            << "\n";
        return ok;
    }
    THSystemRep s = build(pa);
    out << json{{"field", json_io::field_to_json(pa.field)},
                {"A", json_io::matrix_to_json(s.A)},
                {"A_star", json_io::matrix_to_json(s.A_star)},
                {"E", json_io::matrices_to_json(s.E)},
                {"E_star", json_io::matrices_to_json(s.E_star)}}
        << "\n";
    return ok;
}

inline int cmd_transition(const json& j, std::ostream& out) {
    ParameterArray pa = validate(json_io::pa_from_json(j));
    TransitionData t = build_transition(pa);
    out << json{{"field", json_io::field_to_json(pa.field)},
                {"P", json_io::matrix_to_json(t.P)},
                {"scriptP", json_io::matrix_to_json(t.scriptP)},
                {"L", json_io::matrix_to_json(t.L)},
                {"ell", json_io::vec_to_json(t.ell)},
                {"nu", json_io::scalar_to_json(t.nu)},
                {"p", json_io::bipoly_to_json(t.p)},
                {"t_polys", json_io::polys_to_json(t.t_polys.polys)},
                {"s_polys", json_io::polys_to_json(t.s_polys.polys)}}
        << "\n";
    return ok;
}

inline int cmd_relatives(const json& j, const Options& o, std::ostream& out) {
    auto g = parse_group(o.g);
    if (!g) throw std::invalid_argument("--g must be id, star, tilde or tilde_star");
    out << json_io::pa_to_json(relative(validate(json_io::pa_from_json(j)), *g)) << "\n";
    return ok;
}

inline int cmd_affine(const json& j, const Options& o, std::ostream& out) {
    ParameterArray pa = validate(json_io::pa_from_json(j));
    const Field& f = pa.field;
    out << json_io::pa_to_json(affine(pa, Scalar::parse(f, o.alpha), Scalar::parse(f, o.beta), Scalar::parse(f, o.alpha_star),
                                      Scalar::parse(f, o.beta_star)))
        << "\n";
    return ok;
}

inline int cmd_vand(const json& j, const Options& o, std::ostream& out) {
    if (!j.is_object() || !j.contains("field")) throw json_io::FormatError("vand input needs a \"field\"");
    Field f = json_io::field_from_json(j.at("field"));
    if (o.vand_action == "diag") {
        if (!j.contains("H")) throw json_io::FormatError("diag input needs \"H\"");
        std::optional<Vec> thetas;
        if (j.contains("theta")) thetas = json_io::vec_from_json(f, j.at("theta"));
        Diagonalization dg = diag_west(json_io::matrix_from_json(f, j.at("H")), thetas);
        out << json{{"field", json_io::field_to_json(f)},
                    {"X", json_io::matrix_to_json(dg.X)},
                    {"D", json_io::matrix_to_json(dg.D)},
                    {"theta", json_io::vec_to_json(dg.west.thetas)},
                    {"polys", json_io::polys_to_json(dg.west.polys.polys)}}
            << "\n";
        return ok;
    }
    for (const char* key : {"X", "theta"})
        if (!j.contains(key)) throw json_io::FormatError(std::string("vand input needs \"") + key + "\"");
    Matrix X = json_io::matrix_from_json(f, j.at("X"));
    Vec thetas = json_io::vec_from_json(f, j.at("theta"));
    WestVandSystem w = extract_west(X, thetas);
    if (o.vand_action == "extract") {
        json r{{"field", json_io::field_to_json(f)},
               {"west_polys", json_io::polys_to_json(w.polys.polys)},
               {"standard", w.polys.standard()}};
        if (j.contains("theta_star")) {
            SouthVandSystem s = extract_south(X, json_io::vec_from_json(f, j.at("theta_star")));
            r["south_polys"] = json_io::polys_to_json(s.polys.polys);
        }
        out << r << "\n";
        return ok;
    }
    InverseStructure inv = inverse_structure(w);
    json r{{"field", json_io::field_to_json(f)},
           {"inverse", json_io::matrix_to_json(inv.south.X)},
           {"south_polys", json_io::polys_to_json(inv.south.polys.polys)},
           {"associated_polys", json_io::polys_to_json(inv.associated.polys)},
           {"polys_match", inv.polys_match},
           {"bottom_row_ok", inv.bottom_row_ok},
           {"similarity_ok", inv.similarity_ok}};
    out << r << "\n";
    return inv.ok() ? ok : property_failure;
}

inline json sample_header(const std::string& command, const Options& o, const Field& f) {
    return {{"command", command}, {"field", json_io::field_to_json(f)}, {"d", o.d}, {"samples", o.samples}, {"seed", o.seed}};
}

inline int finish(json r, const detail::Tally& t, const std::string& command, const Options& o, const Field& f,
                  std::ostream& out, std::ostream& err) {
    r["checks"] = t.summary();
    r["ok"] = t.ok();
    if (!t.ok()) r["counterexample"] = t.counterexample;
    out << r << "\n";
    err << command << ": " << o.samples << " samples, d=" << o.d << ", " << f.name() << ": "
        << (t.ok() ? "all checks pass" : "FAILED at " + t.counterexample.at("check").get<std::string>()) << "\n";
    return t.ok() ? ok : property_failure;
}

// ρ/χ inverse pair, split-sequence recovery and the five-set correspondence.
inline int cmd_roundtrip(const Options& o, std::ostream& out, std::ostream& err) {
    Field f = parse_field(o.field);
    SplitMix64 g(o.seed);
    detail::Tally t;
    for (std::size_t k = 0; k < o.samples; ++k) {
        ParameterArray pa = random_pa(o.d, f, g);
        detail::guarded(t, "chi_rho_identity", k, &pa, [&] {
            NormalizedWSVand ws = rho(pa);
            t.record("chi_rho_identity", chi(ws) == pa, k, &pa);
            t.record("rho_chi_identity", rho(chi(ws)) == ws, k, &pa);
        });
        detail::guarded(t, "split_from_traces", k, &pa, [&] {
            t.record("split_from_traces", split_from_traces(build(pa)) == pa.phi, k, &pa);
        });
        ParameterArray q = affine(pa, random_nonzero(g, f), random_scalar(g, f), random_nonzero(g, f), random_scalar(g, f));
        detail::guarded(t, "five_set_affine", k, &pa, [&] {
            FiveSetReport r = five_set_roundtrip(pa, q);
            t.record("five_set_affine", r.affine_related && r.consistent(), k, &pa);
        });
    }
    return finish(sample_header("roundtrip", o, f), t, "roundtrip", o, f, out, err);
}

// Every identity suite on each random sample.
inline int cmd_selftest(const Options& o, std::ostream& out, std::ostream& err) {
    Field f = parse_field(o.field);
    SplitMix64 g(o.seed);
    detail::Tally t;
    for (std::size_t k = 0; k < o.samples; ++k) {
        ParameterArray pa = random_pa(o.d, f, g);
        const ParameterArray* p = &pa;
        detail::guarded(t, "axioms", k, p, [&] {
            THSystemRep s = build(pa, {.cross_check = true, .verify = false});
            AxiomReport ax = verify_axioms(s);
            t.record("axioms", ax.ok, k, p, ax.ok ? "" : ax.condition);
            bool split = true;
            for (auto v : {SplitVariant::main, SplitVariant::i, SplitVariant::ii, SplitVariant::iii})
                split = split && split_from_traces(s, v) == pa.phi;
            t.record("split_from_traces", split, k, p);
            detail::report_identities(t, "scalar_identities", k, pa, check_identities(s, scalars(pa)));
            t.record("basis_transition", transition_from_bases(s) == build_transition(pa).P, k, p);
        });
        detail::guarded(t, "pp_star", k, p, [&] { detail::report_identities(t, "pp_star", k, pa, verify_pp_star(pa)); });
        detail::guarded(t, "zeta_relations", k, p,
                        [&] { detail::report_identities(t, "zeta_relations", k, pa, verify_zeta_relations(pa)); });
        detail::guarded(t, "vand_structure", k, p,
                        [&] { detail::report_identities(t, "vand_structure", k, pa, verify_vand_structure(pa)); });
        detail::guarded(t, "orthogonality", k, p,
                        [&] { detail::report_identities(t, "orthogonality", k, pa, verify_orthogonality(pa)); });
        detail::guarded(t, "hessenberg", k, p, [&] {
            WestVandSystem w = random_west(o.d, f, g);
            Matrix H = connection_matrix(w.polys);
            bool good = polys_of_hessenberg(H).polys == w.polys && connection_matrix(polys_of_hessenberg(H).polys) == H &&
                        w.polys.polys.back()(H).is_zero() && inverse_structure(w).ok();
            t.record("hessenberg", good, k, p);
        });
    }
    return finish(sample_header("selftest", o, f), t, "selftest", o, f, out, err);
}

// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    if (const char* env = std::getenv("THVAND_SEED")) {
        try {
            std::size_t used = 0;
            o.seed = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            out << detail::error_object("usage", std::string("THVAND_SEED is not an unsigned integer: ") + env) << "\n";
            return input_error;
        }
    }

    CLI::App app{"Exact TH-system and double Vandermonde computations"};
    app.require_subcommand(1);
    auto add_in = [&](CLI::App* c) { c->add_option("--in", o.in, "input JSON file (default: standard input)"); };
    auto add_sampling = [&](CLI::App* c) {
        c->add_option("--samples", o.samples, "number of random samples");
        c->add_option("--d", o.d, "diameter of the sampled arrays")->check(CLI::Range(0, 64));
        c->add_option("--field", o.field, "q, or gfP / pP / P for a prime P");
        c->add_option("--seed", o.seed, "SplitMix64 seed (default: THVAND_SEED or 1)");
    };
    auto* c_validate = app.add_subcommand("validate", "check a parameter array");
    auto* c_build = app.add_subcommand("build", "split-basis TH system or its scalars");
    c_build->add_option("--emit", o.emit)->check(CLI::IsMember({"matrices", "scalars"}));
    auto* c_transition = app.add_subcommand("transition", "transition matrices and polynomials");
    auto* c_relatives = app.add_subcommand("relatives", "apply an element of the relatives group");
    c_relatives->add_option("--g", o.g)->required()->check(CLI::IsMember({"id", "star", "tilde", "tilde_star"}));
    auto* c_affine = app.add_subcommand("affine", "affine transformation of a parameter array");
    c_affine->add_option("--alpha", o.alpha);
    c_affine->add_option("--beta", o.beta);
    c_affine->add_option("--alpha-star", o.alpha_star);
    c_affine->add_option("--beta-star", o.beta_star);
    auto* c_vand = app.add_subcommand("vand", "west Vandermonde extraction, inversion, diagonalization");
    c_vand->add_option("action", o.vand_action)->required()->check(CLI::IsMember({"extract", "invert", "diag"}));
    auto* c_roundtrip = app.add_subcommand("roundtrip", "randomized bijection round trips");
    auto* c_selftest = app.add_subcommand("selftest", "randomized identity suites");
    for (auto* c : {c_validate, c_build, c_transition, c_relatives, c_affine, c_vand}) add_in(c);
    add_sampling(c_roundtrip);
    add_sampling(c_selftest);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        out << detail::error_object("usage", e.what()) << "\n";
        err << app.help();
        return input_error;
    }

    try {
        if (c_roundtrip->parsed()) return cmd_roundtrip(o, out, err);
        if (c_selftest->parsed()) return cmd_selftest(o, out, err);
        json j = detail::read_input(o, in);
        if (c_validate->parsed()) return cmd_validate(j, out);
        if (c_build->parsed()) return cmd_build(j, o, out);
        if (c_transition->parsed()) return cmd_transition(j, out);
        if (c_relatives->parsed()) return cmd_relatives(j, o, out);
        if (c_affine->parsed()) return cmd_affine(j, o, out);
        if (c_vand->parsed()) return cmd_vand(j, o, out);
    } catch (const json::exception& e) {
        out << detail::error_object("json", e.what()) << "\n";
        return input_error;
    } catch (const json_io::FormatError& e) {
        out << detail::error_object("format", e.what()) << "\n";
        return input_error;
    } catch (const ValidationError& e) {
        json r = detail::error_object("validation", e.what());
        r["error"]["code"] = ValidationError::code_name(e.code);
        out << r << "\n";
        return input_error;
    } catch (const VandError& e) {
        json r = detail::error_object("vandermonde", e.what());
        r["error"]["code"] = VandError::code_name(e.code);
        r["error"]["index"] = e.index;
        out << r << "\n";
        return input_error;
    } catch (const FieldError& e) {
        out << detail::error_object("field", e.what()) << "\n";
        return input_error;
    } catch (const InternalError& e) {
        out << detail::error_object("internal", e.what()) << "\n";
        return property_failure;
    } catch (const std::invalid_argument& e) {
        out << detail::error_object("usage", e.what()) << "\n";
        return input_error;
    }
    return input_error;
}

}  // namespace thvand::cli
