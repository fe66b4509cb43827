// Acceptance run: one PASS/FAIL line per criterion. `acceptance N` runs only criterion N.
#include "thvand/bij.hpp"
#include "thvand/random.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace thvand;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& what) {
        if (pass) detail = what;
        pass = false;
    }
};

const std::size_t kMaxD = 8;
const std::size_t kSamples = 200;

std::vector<Field> fields() { return {Field::rational(), Field::prime(101)}; }

std::string where(const Field& f, std::size_t d, std::size_t k) {
    return f.name() + " d=" + std::to_string(d) + " sample " + std::to_string(k);
}

// The shared sample set of the classification, transition, Vandermonde, bijection and oracle criteria.
template <class Fn>
std::size_t for_each_sample(Outcome& out, Fn fn) {
    std::size_t count = 0;
    for (const Field& f : fields())
        for (std::size_t d = 0; d <= kMaxD; ++d) {
            SplitMix64 g(0x5EED0000 + 97 * d + (f.is_rational() ? 0 : 1));
            for (std::size_t k = 0; k < kSamples; ++k, ++count) {
                ParameterArray pa = random_pa(d, f, g);
                try {
                    if (!fn(pa)) out.fail(where(f, d, k));
                } catch (const std::exception& e) {
                    out.fail(where(f, d, k) + ": " + e.what());
                }
            }
        }
    return count;
}

Outcome worked_example() {
    Outcome out;
    Field Q = Field::rational();
    ParameterArray pa = validate(Q, make_vec(Q, {0, 1, 2}), make_vec(Q, {0, 1, 2}), make_vec(Q, {1, 1}));
    const Vec &t = pa.theta, &s = pa.theta_star, &p = pa.phi;
    Scalar z(Q), o = Scalar::one(Q);
    // the symbolic displays, entry by entry
    std::vector<Matrix> E{
        Matrix(Q, std::vector<Vec>{{z, z, z}, {z, z, z}, {p[0] * p[1] / ((t[0] - t[2]) * (t[0] - t[1])), p[1] / (t[0] - t[1]), o}}),
        Matrix(Q, std::vector<Vec>{{z, z, z}, {p[0] / (t[1] - t[2]), o, z}, {p[0] * p[1] / ((t[1] - t[0]) * (t[1] - t[2])), p[1] / (t[1] - t[0]), z}}),
        Matrix(Q, std::vector<Vec>{{o, z, z}, {p[0] / (t[2] - t[1]), z, z}, {p[0] * p[1] / ((t[2] - t[0]) * (t[2] - t[1])), z, z}})};
    std::vector<Matrix> Es{
        Matrix(Q, std::vector<Vec>{{o, o / (s[0] - s[1]), o / ((s[0] - s[1]) * (s[0] - s[2]))}, {z, z, z}, {z, z, z}}),
        Matrix(Q, std::vector<Vec>{{z, o / (s[1] - s[0]), o / ((s[1] - s[0]) * (s[1] - s[2]))}, {z, o, o / (s[1] - s[2])}, {z, z, z}}),
        Matrix(Q, std::vector<Vec>{{z, z, o / ((s[2] - s[1]) * (s[2] - s[0]))}, {z, z, o / (s[2] - s[1])}, {z, z, o}})};
    Matrix scriptP(Q, {{o, o + (t[0] - t[2]) * (s[1] - s[0]) / p[0],
                        o + (t[0] - t[2]) * (s[2] - s[0]) / p[0] +
                            (t[0] - t[2]) * (t[0] - t[1]) * (s[2] - s[0]) * (s[2] - s[1]) / (p[0] * p[1])},
                       {o, o + (t[1] - t[2]) * (s[1] - s[0]) / p[0], o + (t[1] - t[2]) * (s[2] - s[0]) / p[0]},
                       {o, o, o}});
    THSystemRep sys = build(pa);
    for (std::size_t r = 0; r < 3; ++r) {
        if (sys.E[r] != E[r]) out.fail("E_" + std::to_string(r) + " = " + sys.E[r].str());
        if (sys.E_star[r] != Es[r]) out.fail("E*_" + std::to_string(r) + " = " + sys.E_star[r].str());
    }
    Matrix got = build_transition(pa).scriptP;
    if (got != scriptP) out.fail("scriptP = " + got.str());
    if (out.pass) out.detail = "6 idempotents and scriptP at d=2";
    return out;
}

Outcome classification() {
    Outcome out;
    std::size_t n = for_each_sample(out, [](const ParameterArray& pa) {
        THSystemRep s = build(validate(pa), {.cross_check = true, .verify = false});
        if (!verify_axioms(s).ok) return false;
        for (auto v : {SplitVariant::main, SplitVariant::i, SplitVariant::ii, SplitVariant::iii})
            if (split_from_traces(s, v) != pa.phi) return false;
        return true;
    });
    if (out.pass) out.detail = std::to_string(n) + " arrays, 4 trace formulas each";
    return out;
}

Outcome transition_identities() {
    Outcome out;
    std::size_t n = for_each_sample(out, [](const ParameterArray& pa) {
        RelativeTransitions rt = relative_transitions(pa);
        return verify_pp_star(rt).ok() && verify_zeta_relations(rt).ok();
    });
    if (out.pass) out.detail = std::to_string(n) + " arrays";
    return out;
}

Outcome double_vandermonde() {
    Outcome out;
    std::size_t n = for_each_sample(out, [](const ParameterArray& pa) {
        TransitionData T = build_transition(pa);
        TransitionData Tts = build_transition(relative(pa, Group::tilde_star));
        if (extract_west(T.scriptP, pa.theta).polys != T.t_polys) return false;
        if (extract_south(T.scriptP, pa.theta_star).polys != Tts.t_polys) return false;
        std::size_t d = pa.d;
        for (std::size_t i = 0; i <= d; ++i)
            if (!T.scriptP(i, 0).is_one() || !T.scriptP(d, i).is_one() || T.P(d, i) != T.ell[i]) return false;
        return true;
    });
    if (out.pass) out.detail = std::to_string(n) + " arrays";
    return out;
}

Outcome orthogonality() {
    Outcome out;
    std::size_t n = 0;
    for (const Field& f : fields())
        for (std::size_t d = 0; d <= 6; ++d) {
            SplitMix64 g(0x0AB0 + d);
            for (std::size_t k = 0; k < 100; ++k, ++n) {
                ParameterArray pa = random_pa(d, f, g);
                IdentityReport r = verify_orthogonality(pa);
                if (!r.ok()) out.fail(where(f, d, k) + ": " + r.first_failure());
            }
        }
    if (out.pass) out.detail = std::to_string(n) + " arrays, 4 families";
    return out;
}

Outcome bijection() {
    Outcome out;
    std::size_t n = for_each_sample(out, [](const ParameterArray& pa) {
        NormalizedWSVand ws = rho(pa);
        ParameterArray back = chi(ws);
        return back == pa && rho(back) == ws;
    });
    if (out.pass) out.detail = std::to_string(n) + " arrays";
    return out;
}

Outcome five_sets() {
    Outcome out;
    std::size_t related = 0, unrelated = 0;
    for (const Field& f : fields()) {
        SplitMix64 g(f.is_rational() ? 0xF1E : 0xF1F);
        for (std::size_t k = 0; k < 100; ++k) {
            std::size_t d = k % 7;
            ParameterArray pa = random_pa(d, f, g);
            ParameterArray q = affine(pa, random_nonzero(g, f), random_scalar(g, f), random_nonzero(g, f), random_scalar(g, f));
            FiveSetReport r = five_set_roundtrip(pa, q);
            if (!(r.affine_related && r.canonical_equal && r.matrix_equal && r.reduction_equal))
                out.fail("related pair " + where(f, d, k));
            ++related;

            // unrelated pairs need d >= 2; resample the partner until it is unrelated
            std::size_t e = 2 + k % 5;
            ParameterArray a = random_pa(e, f, g), b = random_pa(e, f, g);
            while (is_affine_related(a, b)) b = random_pa(e, f, g);
            r = five_set_roundtrip(a, b);
            if (r.canonical_equal || r.matrix_equal || r.reduction_equal) out.fail("unrelated pair " + where(f, e, k));
            ++unrelated;
        }
    }
    if (out.pass) out.detail = std::to_string(related) + " related, " + std::to_string(unrelated) + " unrelated pairs";
    return out;
}

Outcome hessenberg_apparatus() {
    Outcome out;
    std::size_t n = 0;
    for (const Field& f : fields())
        for (std::size_t d = 0; d <= 6; ++d) {
            SplitMix64 g(0x4E55 + d);
            for (std::size_t k = 0; k < kSamples; ++k, ++n) {
                try {
                    WestVandSystem w = random_west(d, f, g);
                    if (polys_of_hessenberg(connection_matrix(w.polys)).polys != w.polys) out.fail("polys(conn) " + where(f, d, k));
                    Matrix H = random_hessenberg(d, f, g);
                    HessenbergPolyData hp = polys_of_hessenberg(H);
                    if (connection_matrix(hp.polys) != H) out.fail("conn(polys) " + where(f, d, k));
                    if (!hp.polys.polys.back()(H).is_zero()) out.fail("f_{d+1}(H) " + where(f, d, k));
                    InverseStructure inv = inverse_structure(w);
                    if (!inv.ok()) out.fail("inverse " + where(f, d, k));
                } catch (const std::exception& e) {
                    out.fail(where(f, d, k) + ": " + e.what());
                }
            }
        }
    if (out.pass) out.detail = std::to_string(n) + " west systems and Hessenberg matrices";
    return out;
}

Outcome basis_oracle() {
    Outcome out;
    std::size_t n = for_each_sample(out, [](const ParameterArray& pa) {
        return transition_from_bases(build(pa, {.cross_check = false, .verify = false})) == build_transition(pa).P;
    });
    if (out.pass) out.detail = std::to_string(n) + " arrays";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"worked example", worked_example},
        {"classification round trip", classification},
        {"transition identities", transition_identities},
        {"double Vandermonde structure", double_vandermonde},
        {"orthogonality sums", orthogonality},
        {"rho/chi bijection", bijection},
        {"five-set correspondence", five_sets},
        {"Hessenberg/Vandermonde apparatus", hessenberg_apparatus},
        {"basis construction vs sum formula", basis_oracle}};
    std::size_t only = argc > 1 ? std::stoul(argv[1]) : 0;
    int failures = 0;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        if (only && only != c + 1) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[c].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %zu: %s  %s (%s) [%.2fs]\n", c + 1, o.pass ? "PASS" : "FAIL", criteria[c].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures ? 1 : 0;
}
