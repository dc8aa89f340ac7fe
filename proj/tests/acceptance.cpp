// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits non-zero if any criterion fails. Tolerances are pinned in code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "quintsect/catalog.hpp"
#include "quintsect/gamma.hpp"
#include "quintsect/hypergeom.hpp"
#include "quintsect/identities.hpp"
#include "quintsect/oracles.hpp"
#include "quintsect/pochhammer.hpp"
#include "quintsect/roots.hpp"
#include "quintsect/series.hpp"

using namespace quintsect;

namespace {

int failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail = "") {
    std::printf("criterion %d (%s): %s%s%s\n", index, name, pass ? "PASS" : "FAIL",
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

BoundedSequence hashed_sequence(std::uint64_t seed) {
    return {[seed](std::int64_t r) {
                const std::uint64_t h = splitmix64(
                    seed ^ (0x5851f42d4c957f2dULL * (static_cast<std::uint64_t>(r) + 1)));
                const double theta =
                    2.0 * std::numbers::pi * (static_cast<double>(h >> 11) / 9007199254740992.0);
                const double amp =
                    0.2 + 0.8 * (static_cast<double>(splitmix64(h) >> 11) / 9007199254740992.0);
                return amp * Cplx{std::cos(theta), std::sin(theta)};
            },
            1.0};
}

// 1. Theorem pair equivalence over seeded random bounded sequences,
//    relative residual <= 1e-10, |x| <= 0.9.
void criterion_multisection() {
    const std::vector<Cplx> c_values{{1.0, 0.0}, {-1.0, 0.0}, {0.25, 0.0}, {-0.25, 0.0}, {0.0, 1.0}};
    bool ok = true;
    std::string detail;
    for (std::uint64_t seed = 1; seed <= 50 && ok; ++seed) {
        const BoundedSequence phi = hashed_sequence(seed * 7919);
        const Cplx c = c_values[seed % c_values.size()];
        const double xr =
            0.9 * (static_cast<double>(splitmix64(seed) >> 11) / 9007199254740992.0);
        const double xt = 2.0 * std::numbers::pi *
                          (static_cast<double>(splitmix64(seed ^ 0x9ULL) >> 11) / 9007199254740992.0);
        const MultisectionArgs args{c, xr * Cplx{std::cos(xt), std::sin(xt)}};

        const auto l21 = theorem21_lhs(phi, args);
        const auto r21 = theorem21_rhs(phi, args);
        const auto l22 = theorem22_lhs(phi, args);
        const auto r22 = theorem22_rhs(phi, args);
        const bool conv = l21.status == SeriesStatus::converged &&
                          r21.status == SeriesStatus::converged &&
                          l22.status == SeriesStatus::converged &&
                          r22.status == SeriesStatus::converged;
        const bool close =
            std::abs(l21.value - r21.value) <= 1e-10 * (1.0 + std::abs(l21.value)) &&
            std::abs(l22.value - r22.value) <= 1e-10 * (1.0 + std::abs(l22.value));
        if (!conv || !close) {
            ok = false;
            detail = "seed " + std::to_string(seed);
        }
    }
    report(1, "multisection oracle equivalence", ok, detail);
}

// 2. arctan(x^5) closed form at x = 0.1 .. 0.9.
void criterion_arctan_closed_form() {
    const ApplicationCase app = make_application_case("eq4.6-arctan");
    bool ok = true;
    std::string detail;
    for (int i = 1; i <= 9; ++i) {
        const double x = 0.1 * i;
        const auto r = verify_case(app, Cplx{x, 0.0}, {}, 1e-10);
        const double closed = std::atan(std::pow(x, 5));
        if (r.verdict != Verdict::pass || r.residual > 1e-10 ||
            std::abs(r.rhs.real() - closed) > 1e-12 || std::abs(r.rhs.imag()) > 1e-12) {
            ok = false;
            detail = "x = " + std::to_string(x) + ", residual " + std::to_string(r.residual);
        }
    }
    report(2, "eq4.6 closed-form identity", ok, detail);
}

// 3. Trigonometric multisections at x in {0.5, 1.0, 2.0} within 1e-9; any
//    discrepancy is printed with the measured LHS/RHS ratio.
void criterion_trig() {
    bool ok = true;
    std::string detail;
    for (const char* id : {"eq4.1a-sin", "eq4.1b-cos", "eq4.2-sin", "eq4.2-cos"}) {
        const ApplicationCase app = make_application_case(id);
        for (double x : {0.5, 1.0, 2.0}) {
            const auto r = verify_case(app, Cplx{x, 0.0}, {}, 1e-9);
            if (r.verdict != Verdict::pass) {
                ok = false;
                char buf[160];
                const Cplx ratio = (std::abs(r.rhs) > 1e-300) ? r.lhs / r.rhs : Cplx{0.0, 0.0};
                std::snprintf(buf, sizeof(buf), "%s discrepant at x=%g, lhs/rhs = %.12g%+.12gi",
                              id, x, ratio.real(), ratio.imag());
                detail = buf;
            }
        }
    }
    report(3, "trigonometric multisections", ok, detail);
}

// 4. Gauss multiplication residual < 1e-11 over 200 random (b, m, n).
void criterion_gauss() {
    std::mt19937 rng(1797);
    std::uniform_real_distribution<double> re(0.1, 4.0);
    std::uniform_real_distribution<double> im(-2.0, 2.0);
    std::uniform_int_distribution<int> m_dist(1, 5);
    std::uniform_int_distribution<int> n_dist(0, 8);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 200; ++trial) {
        const MultiplicationQuery q{Cplx{re(rng), im(rng)}, m_dist(rng), n_dist(rng)};
        const double res = gauss_multiplication_residual(q);
        if (!(res < 1e-11)) {
            ok = false;
            detail = "residual " + std::to_string(res);
        }
    }
    report(4, "gauss multiplication", ok, detail);
}

// 5. psi = (prod Gamma(a)/prod Gamma(b)) psi* to 1e-11 over random specs;
//    all-weights-one psi* equals pFq to 1e-12.
void criterion_coherence() {
    std::mt19937 rng(550);
    std::uniform_real_distribution<double> par(0.3, 2.5);
    std::uniform_real_distribution<double> zr(-0.5, 0.5);
    const double weight_choices[3] = {1.0, 2.0, 0.5};
    bool ok = true;
    std::string detail;

    int accepted = 0;
    while (accepted < 20) {
        std::vector<FoxWrightParam> num{{Cplx{par(rng), 0.0}, weight_choices[rng() % 3]}};
        std::vector<FoxWrightParam> den{{Cplx{par(rng) + 0.3, 0.0}, weight_choices[rng() % 3]},
                                        {Cplx{par(rng) + 0.3, 0.0}, weight_choices[rng() % 3]}};
        const FoxWrightSpec spec(num, den);
        const Cplx z{zr(rng), zr(rng)};
        const auto diag = classify_fox_wright(spec, z);
        if (diag.classification != SeriesDomain::entire &&
            diag.classification != SeriesDomain::unit_disk) {
            continue;
        }
        const auto psi = eval_fox_wright(spec, z);
        const auto star = eval_fox_wright_normalized(spec, z);
        Cplx gamma_ratio{1.0, 0.0};
        for (const auto& p : num) gamma_ratio *= std::exp(log_gamma(p.a));
        for (const auto& p : den) gamma_ratio /= std::exp(log_gamma(p.a));
        if (psi.status != SeriesStatus::converged || star.status != SeriesStatus::converged ||
            std::abs(psi.value - gamma_ratio * star.value) >
                1e-11 * (1.0 + std::abs(psi.value))) {
            ok = false;
            detail = "psi/psi* relation";
        }
        ++accepted;
    }

    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<Cplx> num{{par(rng), 0.0}, {par(rng), 0.0}};
        const std::vector<Cplx> den{{par(rng) + 0.5, 0.0}};
        std::vector<FoxWrightParam> fw_num;
        std::vector<FoxWrightParam> fw_den;
        for (const Cplx& a : num) fw_num.push_back({a, 1.0});
        for (const Cplx& b : den) fw_den.push_back({b, 1.0});
        const Cplx z{zr(rng), zr(rng)};
        const auto pfq = eval_pfq(PFQSpec(num, den), z);
        const auto star = eval_fox_wright_normalized(FoxWrightSpec(fw_num, fw_den), z);
        if (std::abs(pfq.value - star.value) > 1e-12 * (1.0 + std::abs(pfq.value))) {
            ok = false;
            detail = "weights-one reduction";
        }
    }
    report(5, "psi / psi* / pFq coherence", ok, detail);
}

// 6. Representation vs oracle for all 11 functions at 50 domain points each.
void criterion_representations() {
    std::mt19937 rng(366);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    bool ok = true;
    std::string detail;

    // Closed-form anchors first.
    if (std::abs(eval_by_representation(SpecialFunctionId::arcsin_fn, Cplx{0.5, 0.0}).real() -
                 std::numbers::pi / 6.0) > 1e-12) {
        ok = false;
        detail = "arcsin(1/2) anchor";
    }
    if (std::abs(eval_oracle(SpecialFunctionId::lower_incomplete_gamma_fn, Cplx{1.3, 0.0}, 1.0)
                     .real() -
                 (1.0 - std::exp(-1.69))) > 1e-12) {
        ok = false;
        detail = "gamma(1, t) anchor";
    }

    for (SpecialFunctionId f : all_special_functions()) {
        const bool entire = f == SpecialFunctionId::sin_fn || f == SpecialFunctionId::cos_fn ||
                            f == SpecialFunctionId::erf_fn ||
                            f == SpecialFunctionId::lower_incomplete_gamma_fn;
        const double radius = entire ? 3.0 : 0.7;
        const double param = (f == SpecialFunctionId::conformal_power_fn) ? 0.75 : 1.0;
        for (int trial = 0; trial < 50; ++trial) {
            const double r = radius * unit(rng);
            const double theta = 2.0 * std::numbers::pi * unit(rng);
            const Cplx x = r * Cplx{std::cos(theta), std::sin(theta)};
            const Cplx want = eval_oracle(f, x, param);
            const Cplx got = eval_by_representation(f, x, {}, param);
            if (std::abs(got - want) > 1e-10 * (1.0 + std::abs(want))) {
                ok = false;
                detail = std::string(to_string(f)) + " at |x| = " + std::to_string(r);
            }
        }
    }
    report(6, "representation vs oracle (11 functions)", ok, detail);
}

// 7. Convergence classification verdicts on constructed specs.
void criterion_classification() {
    bool ok = true;
    std::string detail;
    auto expect = [&](const ConvergenceDiagnostics& diag, SeriesDomain want, const char* what) {
        if (diag.classification != want) {
            ok = false;
            detail = what;
        }
    };

    std::vector<Cplx> one{{1.0, 0.0}};
    std::vector<Cplx> half{{0.5, 0.0}};

    // p <= q: entire at any z.
    expect(classify_pfq(PFQSpec({}, half), Cplx{250.0, 40.0}), SeriesDomain::entire, "0F1 entire");
    expect(classify_pfq(PFQSpec(one, {{1.3, 0.0}, {0.7, 0.0}}), Cplx{-90.0, 0.0}),
           SeriesDomain::entire, "1F2 entire");

    // p = q + 1 inside, on, and outside the disk; omega from the parameters.
    const PFQSpec gauss({{1.0, 0.0}, {0.5, 0.0}}, {{1.5, 0.0}});
    expect(classify_pfq(gauss, Cplx{0.5, 0.0}), SeriesDomain::unit_disk, "2F1 unit disk");
    expect(classify_pfq(gauss, Cplx{-2.0, 0.0}), SeriesDomain::divergent, "2F1 outside");

    // Boundary cases driven by Re(omega).
    const PFQSpec abs_conv({{0.25, 0.0}, {0.25, 0.0}}, {{1.5, 0.0}}); // omega = 1
    expect(classify_pfq(abs_conv, Cplx{1.0, 0.0}), SeriesDomain::boundary_abs, "boundary abs");
    const PFQSpec k_params({{0.5, 0.0}, {0.5, 0.0}}, {{1.0, 0.0}}); // omega = 0
    expect(classify_pfq(k_params, Cplx{1.0, 0.0}), SeriesDomain::divergent, "omega 0 at z = 1");
    expect(classify_pfq(k_params, Cplx{0.0, 1.0}), SeriesDomain::boundary_cond,
           "omega 0 off z = 1");
    const PFQSpec too_big({{2.0, 0.0}, {1.5, 0.0}}, {{1.5, 0.0}}); // omega = -2
    expect(classify_pfq(too_big, Cplx{0.0, 1.0}), SeriesDomain::divergent, "omega -2 boundary");

    // Terminating numerator wins.
    expect(classify_pfq(PFQSpec({{-4.0, 0.0}, {2.5, 0.0}, {3.0, 0.0}}, one), Cplx{7.0, 0.0}),
           SeriesDomain::entire, "terminating");

    // Fox-Wright cases.
    expect(classify_fox_wright(FoxWrightSpec({{Cplx{1.0, 0.0}, 1.0}}, {{Cplx{1.0, 0.0}, 1.5}}),
                               Cplx{3.0, 0.0}),
           SeriesDomain::entire, "FW entire");
    expect(classify_fox_wright(FoxWrightSpec({{Cplx{1.0, 0.0}, 1.0}}, {}), Cplx{0.3, 0.0}),
           SeriesDomain::unit_disk, "FW edge disk");
    expect(classify_fox_wright(FoxWrightSpec({{Cplx{1.0, 0.0}, 2.0}}, {}), Cplx{0.3, 0.0}),
           SeriesDomain::case_ii_iii_unsupported, "FW unsupported");

    // sigma* = 1 - Delta* to machine precision on random weights.
    std::mt19937 rng(14);
    std::uniform_real_distribution<double> w(0.25, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const FoxWrightSpec spec({{Cplx{1.0, 0.0}, w(rng)}}, {{Cplx{1.2, 0.0}, w(rng)}});
        const auto diag = classify_fox_wright(spec, Cplx{0.2, 0.0});
        if (diag.sigma_star != 1.0 - diag.delta_star) {
            ok = false;
            detail = "sigma* relation";
        }
    }
    report(7, "convergence classification", ok, detail);
}

// 8. Full catalog run: every case verified or discrepant, ratios printed for
//    the discrepant ones.
void criterion_catalog() {
    auto catalog = builtin_catalog();
    const auto rep = verify_all(catalog, 1e-9);
    bool ok = rep.rows.size() == catalog.size();
    std::string detail;
    int discrepant = 0;
    for (const auto& row : rep.rows) {
        if (row.status == CaseStatus::unverified) {
            ok = false;
            detail = row.case_id + " unverified";
        }
        if (row.status == CaseStatus::discrepant) {
            ++discrepant;
            std::printf("    discrepant: %s %s  max residual %.3e  measured lhs/rhs = "
                        "%.12g%+.12gi\n",
                        row.case_id.c_str(), row.printed_label.c_str(), row.max_residual,
                        row.worst_ratio.real(), row.worst_ratio.imag());
        }
    }
    report(8, "full catalog adjudication", ok, detail);
}

} // namespace

int main() {
    std::printf("quintsect acceptance suite\n");
    criterion_multisection();
    criterion_arctan_closed_form();
    criterion_trig();
    criterion_gauss();
    criterion_coherence();
    criterion_representations();
    criterion_classification();
    criterion_catalog();
    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
