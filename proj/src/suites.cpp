#include "isodyn/suites.hpp"

#include "isodyn/errors.hpp"
#include "isodyn/picard.hpp"

#include <array>
#include <chrono>

namespace isodyn {

namespace {

constexpr int kMaxRedraws = 500;

Rat small_rat(Rng& rng) { return rng.rational(-20, 20, 1, 20); }

Rat small_nonzero(Rng& rng) {
    for (;;) {
        Rat v = small_rat(rng);
        if (v != 0) return v;
    }
}

bool all_distinct(const std::vector<Rat>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (values[i] == values[j]) return false;
    return true;
}

std::vector<Rat> draw_distinct_nonzero(Rng& rng, std::size_t count) {
    for (;;) {
        std::vector<Rat> values;
        for (std::size_t i = 0; i < count; ++i) values.push_back(small_nonzero(rng));
        if (all_distinct(values)) return values;
    }
}

bool scheme_eq(const RiemannScheme& a, const RiemannScheme& b) {
    return a.poles == b.poles && a.indices == b.indices && a.infinity_indices == b.infinity_indices;
}

bool systems_eq(const FuchsianSystem& a, const FuchsianSystem& b) {
    if (a.residues.size() != b.residues.size()) return false;
    for (std::size_t i = 0; i < a.residues.size(); ++i)
        if (a.residues[i].first != b.residues[i].first || !equal(a.residues[i].second, b.residues[i].second))
            return false;
    return equal(a.a_inf, b.a_inf);
}

/// retries f() on genericity failures, counting rejections; f draws fresh
/// randomness on every call, so the retry sequence is deterministic
template <typename F>
auto with_redraws(long long& rejections, F&& f) {
    for (int attempt = 0;; ++attempt) {
        try {
            return f();
        } catch (const DegenerateParameter&) {
        } catch (const DegenerateFrame&) {
        } catch (const NoAccessorySolution&) {
        } catch (const SingularMatrix&) {
        } catch (const ResidualGaugeUnsolvable&) {
        } catch (const BasePointHit&) {
        }
        ++rejections;
        if (attempt >= kMaxRedraws) throw ConfigError("could not draw a generic instance");
    }
}

struct TrialReporter {
    SuiteReport& report;
    std::uint64_t subseed;
    int instance;
    void check(bool ok, const std::string& expression) const {
        if (!ok) report.failures.push_back({subseed, instance, expression});
    }
};

void run_rank1_checks(const DecompositionPoint& point, const TransformSpec& spec,
                      const DecompositionPoint& out, const Multiplier& mult, Rng& rng,
                      const TrialReporter& trial) {
    trial.check(check_orthogonality(out), "rank1 output orthogonality");
    trial.check(scheme_eq(scheme_of(out), riemann_action(scheme_of(point), spec.scheme_action())),
                "rank1 scheme shift");
    const FuchsianSystem before = assemble(point);
    const FuchsianSystem after = assemble(out);
    trial.check(equal(before.a_inf, after.a_inf), "rank1 A_inf invariance");
    trial.check(systems_eq(after, residue_transform(before, mult, spec.alpha, spec.beta)),
                "rank1 residue/decomposition agreement");
    trial.check(compatibility_check(before, after, mult, SamplePlan{20, rng.next(), {}}),
                "rank1 compatibility identity");
    // the transformed projector relations
    const auto& [mu, nu] = spec.pairs[0];
    const RatMat& a_alpha_new = after.residues[spec.alpha].second;
    const RatMat& a_beta_new = after.residues[spec.beta].second;
    trial.check(equal(RatMat(a_alpha_new * mult.p), RatMat((point.poles[spec.alpha].theta[mu] - 1) * mult.p)),
                "rank1 Abar_alpha P identity");
    trial.check(equal(RatMat(mult.p * a_beta_new), RatMat((point.poles[spec.beta].theta[nu] + 1) * mult.p)),
                "rank1 P Abar_beta identity");
    trial.check(equal(RatMat(mult.p * mult.p), mult.p) && rank(mult.p) == 1, "rank1 projector idempotent");
}

void suite_rank1(const SuiteConfig& config, SuiteReport& report) {
    for (int t = 0; t < config.trials; ++t) {
        const std::uint64_t subseed = config.seed ^ static_cast<std::uint64_t>(t);
        Rng rng(subseed);
        const TrialReporter trial{report, subseed, t};
        const auto instance = with_redraws(report.rejections, [&] {
            const RiemannScheme scheme = random_a2_scheme(rng);
            const DecompositionPoint point = a2_point_from_xy(scheme, random_xy(rng));
            TransformSpec spec;
            spec.alpha = static_cast<std::size_t>(rng.uniform(0, 1));
            spec.beta = 1 - spec.alpha;
            spec.pairs = {{static_cast<std::size_t>(rng.uniform(0, 1)),
                           static_cast<std::size_t>(rng.uniform(0, 1))}};
            const Multiplier mult = rank1_projector(point, spec);
            const DecompositionPoint out = rank1_transform(point, spec);
            return std::tuple{point, spec, out, mult};
        });
        const auto& [point, spec, out, mult] = instance;
        run_rank1_checks(point, spec, out, mult, rng, trial);
        ++report.trials_run;
    }
}

void suite_rank2(const SuiteConfig& config, SuiteReport& report) {
    for (int t = 0; t < config.trials; ++t) {
        const std::uint64_t subseed = config.seed ^ static_cast<std::uint64_t>(t);
        Rng rng(subseed);
        const TrialReporter trial{report, subseed, t};
        const auto instance = with_redraws(report.rejections, [&] {
            const RiemannScheme scheme = random_a1_scheme(rng);
            const DecompositionPoint point = a1_point_from_xy(scheme, random_xy(rng));
            TransformSpec spec;
            spec.alpha = 1;
            spec.beta = 2;
            const std::size_t mu1 = static_cast<std::size_t>(rng.uniform(0, 3));
            std::size_t mu2 = static_cast<std::size_t>(rng.uniform(0, 3));
            while (mu2 == mu1) mu2 = static_cast<std::size_t>(rng.uniform(0, 3));
            spec.pairs = {{mu1, 0}, {mu2, 1}};
            const Rank2Projectors proj = rank2_projectors(point, spec);
            const Multiplier mult = rank2_multiplier(point, spec);
            const DecompositionPoint out = rank2_transform(point, spec);
            return std::tuple{point, spec, out, mult, proj};
        });
        const auto& [point, spec, out, mult, proj] = instance;

        trial.check(check_orthogonality(out), "rank2 output orthogonality");
        trial.check(scheme_eq(scheme_of(out), riemann_action(scheme_of(point), spec.scheme_action())),
                    "rank2 scheme shift");
        trial.check(spectral_type(scheme_of(out)) == spectral_type(scheme_of(point)),
                    "rank2 spectral type preserved");
        const FuchsianSystem before = assemble(point);
        const FuchsianSystem after = assemble(out);
        trial.check(equal(before.a_inf, after.a_inf), "rank2 A_inf invariance");
        trial.check(systems_eq(after, residue_transform(before, mult, spec.alpha, spec.beta)),
                    "rank2 residue/decomposition agreement");
        trial.check(compatibility_check(before, after, mult, SamplePlan{20, rng.next(), {}}),
                    "rank2 compatibility identity");

        trial.check(equal(RatMat(proj.cal_p * proj.cal_p), proj.cal_p) && rank(proj.cal_p) == 2,
                    "rank2 projector idempotent of rank 2");
        trial.check(is_zero(RatMat(proj.cal_p1 * proj.cal_p2)) && is_zero(RatMat(proj.cal_p2 * proj.cal_p1)),
                    "rank2 orthogonal rank-1 parts");
        trial.check(equal(RatMat(proj.cal_pt1 + proj.cal_pt2), proj.cal_p), "rank2 tilde splitting");
        trial.check(RatMat((identity(4) - proj.p2) * proj.p1).trace() ==
                        RatMat((identity(4) - proj.p1) * proj.p2).trace(),
                    "rank2 trace identity");
        // the eigenvector lists of the rank-2 projector
        bool eigen_ok = true;
        for (std::size_t k = 0; k < 2; ++k) {
            const RatRowVec c =
                point.poles[spec.alpha].c_dag.row(static_cast<Eigen::Index>(spec.pairs[k].first));
            eigen_ok = eigen_ok && equal(RatMat(c * proj.cal_p), RatMat(c));
        }
        for (std::size_t j = 0; j < point.poles[spec.alpha].theta.size(); ++j) {
            if (j == spec.pairs[0].first || j == spec.pairs[1].first) continue;
            const RatVec b = point.poles[spec.alpha].b.col(static_cast<Eigen::Index>(j));
            eigen_ok = eigen_ok && is_zero(RatMat(proj.cal_p * b));
        }
        trial.check(eigen_ok, "rank2 projector eigenvector lists");

        if (t % 5 == 0) {
            // simple-spectrum cross-check: rank 2 equals the two rank-1 steps
            const auto oracle = with_redraws(report.rejections, [&] {
                const DecompositionPoint pt = random_distinct_4x4_point(rng);
                TransformSpec full;
                full.alpha = 0;
                full.beta = 1;
                const std::size_t m1 = static_cast<std::size_t>(rng.uniform(0, 2));
                std::size_t m2 = static_cast<std::size_t>(rng.uniform(0, 2));
                while (m2 == m1) m2 = static_cast<std::size_t>(rng.uniform(0, 2));
                const std::size_t n1 = static_cast<std::size_t>(rng.uniform(0, 2));
                std::size_t n2 = static_cast<std::size_t>(rng.uniform(0, 2));
                while (n2 == n1) n2 = static_cast<std::size_t>(rng.uniform(0, 2));
                full.pairs = {{m1, n1}, {m2, n2}};
                TransformSpec first{full.alpha, full.beta, {full.pairs[1]}};
                TransformSpec second{full.alpha, full.beta, {full.pairs[0]}};
                const FuchsianSystem via_rank2 = assemble(rank2_transform(pt, full));
                const FuchsianSystem via_rank1 =
                    assemble(rank1_transform(rank1_transform(pt, first), second));
                return std::pair{via_rank2, via_rank1};
            });
            trial.check(systems_eq(oracle.first, oracle.second),
                        "rank2 equals composed rank-1 transforms on simple spectra");
        }
        ++report.trials_run;
    }
}

void suite_a2_composition(const SuiteConfig& config, SuiteReport& report) {
    for (int t = 0; t < config.trials; ++t) {
        const std::uint64_t subseed = config.seed ^ static_cast<std::uint64_t>(t);
        Rng rng(subseed);
        const TrialReporter trial{report, subseed, t};
        const auto result = with_redraws(report.rejections, [&] {
            const RiemannScheme scheme = random_a2_scheme(rng);
            const XYCoords xy = random_xy(rng);
            const bool composed = a2_verify_composition(scheme, xy);
            const XYCoords closed = a2_psi_closed(scheme, xy);
            const XYCoords pipeline =
                a2_xy_from_point(rank1_transform(a2_point_from_xy(scheme, xy), {0, 1, {{0, 0}}}));
            return std::tuple{scheme, composed, closed, pipeline};
        });
        const auto& [scheme, composed, closed, pipeline] = result;
        trial.check(composed, "a2 composition identity");
        trial.check(closed == pipeline, "a2 closed form equals pipeline");
        const ParamsA2 dict = a2_param_dict(scheme);
        trial.check(dict.delta() == -1, "a2 dictionary delta = -1");
        trial.check(dict.b[3] == 0, "a2 dictionary b4 = 0");
        trial.check(dict.b[7] == -scheme.indices[0][1] - 1, "a2 dictionary b8 = -theta_1^2 - 1");
        ++report.trials_run;
    }
}

void suite_a1_composition(const SuiteConfig& config, SuiteReport& report) {
    for (int t = 0; t < config.trials; ++t) {
        const std::uint64_t subseed = config.seed ^ static_cast<std::uint64_t>(t);
        Rng rng(subseed);
        const TrialReporter trial{report, subseed, t};
        const auto result = with_redraws(report.rejections, [&] {
            const RiemannScheme scheme = random_a1_scheme(rng);
            const XYCoords xy = random_xy(rng);
            return std::pair{scheme, a1_verify_composition(scheme, xy)};
        });
        trial.check(result.second, "a1 composition identity");
        const ParamsA1 dict = a1_param_dict(result.first);
        trial.check(2 * dict.b == result.first.indices[2][0], "a1 dictionary theta_3 = 2b");
        trial.check(dict.bi[7] == -1, "a1 dictionary b8 = -1");
        ++report.trials_run;
    }
}

const std::vector<std::pair<std::string, std::vector<std::int64_t>>> kExpectedTranslations = {
    {"phi_a2", {0, 0, 0, 1, 0, -1, 0}},
    {"psi_a2", {0, 0, 0, -1, 1, 1, -1}},
    {"phi_a1", {0, 0, 0, 0, 1, 0, 0, -2}},
    {"psi11_a1", {0, 0, 0, -1, 0, 1, 0, 0}},
    {"psi12_a1", {0, 0, 1, 0, 0, 0, 0, -1}},
    {"psi34_a1", {0, 0, -1, 0, 1, 0, 0, -1}},
};

void suite_picard(const SuiteConfig& config, SuiteReport& report) {
    for (int t = 0; t < config.trials; ++t) {
        const TrialReporter trial{report, config.seed, t};
        for (const auto& [name, expected] : kExpectedTranslations) {
            const LatticeMap map = pushforward(name);
            trial.check(check_isometry(map), "isometry " + name);
            const RootBasis roots =
                root_basis(name.ends_with("a2") ? RootLabel::E6Affine : RootLabel::E7Affine);
            try {
                trial.check(translation_vector(map, roots) == expected, "translation vector " + name);
            } catch (const NotTranslation&) {
                trial.check(false, "translation vector " + name);
            }
        }
        // the two rank-2 translations compose to the model translation
        const RootBasis e7 = root_basis(RootLabel::E7Affine);
        std::vector<std::int64_t> sum;
        const auto v12 = translation_vector(pushforward("psi12_a1"), e7);
        const auto v34 = translation_vector(pushforward("psi34_a1"), e7);
        for (std::size_t i = 0; i < v12.size(); ++i) sum.push_back(v12[i] + v34[i]);
        trial.check(sum == translation_vector(pushforward("phi_a1"), e7),
                    "psi34 + psi12 translation equals phi_a1");

        // the model map permutes the surface components cyclically
        const LatticeMap phi = pushforward("phi_a2");
        const RootBasis a2_surface = root_basis(RootLabel::A2Surface);
        trial.check(apply(phi, a2_surface.roots[0]).coeffs == a2_surface.roots[1].coeffs &&
                        apply(phi, a2_surface.roots[1]).coeffs == a2_surface.roots[2].coeffs &&
                        apply(phi, a2_surface.roots[2]).coeffs == a2_surface.roots[0].coeffs,
                    "phi_a2 permutes (D0 D1 D2)");

        // symmetry roots are orthogonal to the surface roots
        const RootBasis e6 = root_basis(RootLabel::E6Affine);
        bool orth = true;
        for (const auto& alpha : e6.roots)
            for (const auto& d : a2_surface.roots) orth = orth && pairing(alpha, d) == 0;
        const RootBasis a1_surface = root_basis(RootLabel::A1Surface);
        for (const auto& alpha : e7.roots)
            for (const auto& d : a1_surface.roots) orth = orth && pairing(alpha, d) == 0;
        trial.check(orth, "symmetry roots orthogonal to surface roots");

        for (const BlowdownCase which : {BlowdownCase::A2Schlesinger, BlowdownCase::A1Schlesinger}) {
            try {
                const LatticeMap blowdown = blowdown_change_of_basis(which);
                bool genus_ok = true;
                for (int j = 0; j < 10; ++j)
                    genus_ok = genus_ok &&
                               virtual_genus(PicClass{blowdown.basis, PicVec(blowdown.matrix.col(j))}) == 0;
                trial.check(genus_ok, "blowdown classes have virtual genus 0");
            } catch (const Error& e) {
                trial.check(false, std::string("blowdown validation: ") + e.what());
            }
        }
        trial.check(pairing(anticanonical(PicBasisKind::P1xP1_8), anticanonical(PicBasisKind::P1xP1_8)) == 0 &&
                        pairing(anticanonical(PicBasisKind::P2_9), anticanonical(PicBasisKind::P2_9)) == 0,
                    "anticanonical self-pairing");
        ++report.trials_run;
    }
}

void suite_base_points(const SuiteConfig& config, SuiteReport& report) {
    for (int t = 0; t < config.trials; ++t) {
        const std::uint64_t subseed = config.seed ^ static_cast<std::uint64_t>(t);
        Rng rng(subseed);
        const TrialReporter trial{report, subseed, t};

        {  // 3x3 family
            const auto result = with_redraws(report.rejections, [&] {
                const RiemannScheme scheme = random_a2_scheme(rng);
                const Rat t11 = scheme.indices[0][0], t12 = scheme.indices[0][1];
                const Rat t21 = scheme.indices[1][0], t22 = scheme.indices[1][1];
                std::vector<XYCoords> base;
                for (int j = 0; j < 3; ++j) {
                    const Rat k = scheme.infinity_indices[static_cast<std::size_t>(j)];
                    base.push_back({Rat((t11 + t21 + k) * (t12 + k) / (t11 - t12)),
                                    Rat(-(t11 + t22 + k) * (t12 + k) / (t11 - t12))});
                }
                base.push_back({Rat(0), Rat(0)});
                base.push_back({Rat(-t21), t22});
                bool on_curve = true;
                for (const XYCoords& p : base) on_curve = on_curve && a2_curve_q(scheme, p) == 0;

                const ParamsA2 dict = a2_param_dict(scheme);
                const std::vector<LabeledPoint> model = dpa2_base_points(dict);
                bool images_ok = true;
                for (int j = 0; j < 4; ++j)
                    images_ok = images_ok &&
                                a2_to_fg(scheme, base[static_cast<std::size_t>(j)]) ==
                                    model[static_cast<std::size_t>(j)].point;
                images_ok =
                    images_ok && a2_to_fg_homogeneous(scheme, Rat(0), Rat(1), Rat(0)) == model[4].point;
                images_ok =
                    images_ok && a2_to_fg_homogeneous(scheme, Rat(1), Rat(0), Rat(0)) == model[5].point;

                bool zero_over_zero = true;
                bool raises = true;
                for (const auto& lp : model) {
                    try {
                        dpa2_step(dict, lp.point);
                        raises = false;
                    } catch (const BasePointHit&) {
                    }
                    if (lp.label == "p7" || lp.label == "p8") {
                        const auto f_bar = dpa2_first_solve(dict, lp.point.g).apply(lp.point.f);
                        zero_over_zero = zero_over_zero && f_bar.has_value() &&
                                         dpa2_second_solve(dict, *f_bar).indeterminate_at(lp.point.g);
                    } else {
                        zero_over_zero = zero_over_zero &&
                                         dpa2_first_solve(dict, lp.point.g).indeterminate_at(lp.point.f);
                    }
                }
                return std::array<bool, 4>{on_curve, images_ok, raises, zero_over_zero};
            });
            trial.check(result[0], "a2 finite base points on the (2,2)-curve");
            trial.check(result[1], "a2 base points map to the model base points");
            trial.check(result[2], "dpa2 base points are rejected");
            trial.check(result[3], "dpa2 base points give 0/0 in the product-equation solve");
        }

        {  // 4x4 family
            const auto result = with_redraws(report.rejections, [&] {
                const RiemannScheme scheme = random_a1_scheme(rng);
                const Rat t11 = scheme.indices[0][0], t12 = scheme.indices[0][1],
                          t13 = scheme.indices[0][2];
                const Rat t3 = scheme.indices[2][0];
                std::vector<XYCoords> base;
                for (int j = 0; j < 4; ++j) {
                    const Rat t2j = scheme.indices[1][static_cast<std::size_t>(j)];
                    base.push_back({Rat((t11 + t2j + t3) * (t13 + t2j) / (t11 - t13)),
                                    Rat(-(t12 + t2j + t3) * (t13 + t2j) / (t12 - t13))});
                }
                base.push_back({Rat(0), Rat(0)});
                base.push_back({Rat(-t3), t3});
                bool on_curve = true;
                for (const XYCoords& p : base) on_curve = on_curve && a1_curve_q(scheme, p) == 0;

                const ParamsA1 dict = a1_param_dict(scheme);
                const std::vector<LabeledPoint> model = dpa1_base_points(dict);
                bool images_ok = true;
                for (int j = 0; j < 4; ++j)
                    images_ok = images_ok &&
                                a1_to_fg(scheme, base[static_cast<std::size_t>(j)]) ==
                                    model[static_cast<std::size_t>(j)].point;

                bool zero_over_zero = true;
                bool raises = true;
                for (const auto& lp : model) {
                    try {
                        dpa1_step(dict, lp.point);
                        raises = false;
                    } catch (const BasePointHit&) {
                    }
                    zero_over_zero =
                        zero_over_zero && dpa1_first_solve(dict, lp.point.g).indeterminate_at(lp.point.f);
                }
                return std::array<bool, 4>{on_curve, images_ok, raises, zero_over_zero};
            });
            trial.check(result[0], "a1 finite base points on the (2,2)-curve");
            trial.check(result[1], "a1 base points map to the model base points");
            trial.check(result[2], "dpa1 base points are rejected");
            trial.check(result[3], "dpa1 base points give 0/0 in the product-equation solve");
        }
        ++report.trials_run;
    }
}

void suite_compatibility(const SuiteConfig& config, SuiteReport& report) {
    for (int t = 0; t < config.trials; ++t) {
        const std::uint64_t subseed = config.seed ^ static_cast<std::uint64_t>(t);
        Rng rng(subseed);
        const TrialReporter trial{report, subseed, t};
        const auto rank1_instance = with_redraws(report.rejections, [&] {
            const DecompositionPoint point = a2_point_from_xy(random_a2_scheme(rng), random_xy(rng));
            const TransformSpec spec{0, 1, {{0, 0}}};
            return std::tuple{assemble(point), assemble(rank1_transform(point, spec)),
                              rank1_projector(point, spec)};
        });
        const auto& [before1, after1, mult1] = rank1_instance;
        trial.check(compatibility_check(before1, after1, mult1, SamplePlan{20, rng.next(), {}}),
                    "rank1 compatibility");
        FuchsianSystem broken1 = after1;
        broken1.residues[0].second(0, 0) += 1;
        trial.check(!compatibility_check(before1, broken1, mult1, SamplePlan{20, rng.next(), {}}),
                    "rank1 compatibility rejects a perturbed system");

        const auto rank2_instance = with_redraws(report.rejections, [&] {
            const DecompositionPoint point = a1_point_from_xy(random_a1_scheme(rng), random_xy(rng));
            const TransformSpec spec{1, 2, {{0, 0}, {1, 1}}};
            return std::tuple{assemble(point), assemble(rank2_transform(point, spec)),
                              rank2_multiplier(point, spec)};
        });
        const auto& [before2, after2, mult2] = rank2_instance;
        trial.check(compatibility_check(before2, after2, mult2, SamplePlan{20, rng.next(), {}}),
                    "rank2 compatibility");
        FuchsianSystem broken2 = after2;
        broken2.residues[1].second(2, 3) += 1;
        trial.check(!compatibility_check(before2, broken2, mult2, SamplePlan{20, rng.next(), {}}),
                    "rank2 compatibility rejects a perturbed system");
        ++report.trials_run;
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "schlesinger-rank1", "schlesinger-rank2", "a2-composition", "a1-composition",
        "picard",            "base-points",       "compatibility"};
    return names;
}

SuiteReport run_suite(const SuiteConfig& config) {
    SuiteReport report;
    report.suite = config.suite;
    report.seed = config.seed;
    report.trials_requested = config.trials;
    if (config.trials < 1) throw ConfigError("trials must be positive");
    const auto start = std::chrono::steady_clock::now();
    if (config.suite == "schlesinger-rank1") {
        suite_rank1(config, report);
    } else if (config.suite == "schlesinger-rank2") {
        suite_rank2(config, report);
    } else if (config.suite == "a2-composition") {
        suite_a2_composition(config, report);
    } else if (config.suite == "a1-composition") {
        suite_a1_composition(config, report);
    } else if (config.suite == "picard") {
        suite_picard(config, report);
    } else if (config.suite == "base-points") {
        suite_base_points(config, report);
    } else if (config.suite == "compatibility") {
        suite_compatibility(config, report);
    } else {
        throw ConfigError("unknown suite '" + config.suite + "'");
    }
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

Json report_to_json(const SuiteReport& report) {
    Json failures = Json::array();
    for (const auto& f : report.failures)
        failures.push_back(Json{{"seed", std::to_string(f.seed)},
                                {"instance", f.instance},
                                {"expression", f.expression}});
    return Json{{"isodyn-schema", kSchemaVersion},
                {"suite", report.suite},
                {"seed", std::to_string(report.seed)},
                {"trials", report.trials_requested},
                {"trials_run", report.trials_run},
                {"failures", std::move(failures)},
                {"metadata", Json{{"rejections", report.rejections}}}};
}

RiemannScheme random_a2_scheme(Rng& rng) {
    for (;;) {
        const std::vector<Rat> t1 = draw_distinct_nonzero(rng, 2);
        const std::vector<Rat> t2 = draw_distinct_nonzero(rng, 2);
        const Rat k1 = small_rat(rng), k2 = small_rat(rng);
        const Rat k3 = -(t1[0] + t1[1] + t2[0] + t2[1] + k1 + k2);
        if (!all_distinct({k1, k2, k3})) continue;
        RiemannScheme scheme;
        scheme.poles = {Rat(0), Rat(1)};
        scheme.indices = {{t1[0], t1[1], Rat(0)}, {t2[0], t2[1], Rat(0)}};
        scheme.infinity_indices = {k1, k2, k3};
        return scheme;
    }
}

RiemannScheme random_a1_scheme(Rng& rng) {
    for (;;) {
        const std::vector<Rat> t1 = draw_distinct_nonzero(rng, 3);
        const std::vector<Rat> t2 = draw_distinct_nonzero(rng, 4);
        const Rat t3 = Rat(-(t1[0] + t1[1] + t1[2] + t2[0] + t2[1] + t2[2] + t2[3])) / 2;
        if (t3 == 0) continue;
        RiemannScheme scheme;
        scheme.poles = {Rat(0), Rat(1), Rat(2)};
        scheme.indices = {{t1[0], t1[1], t1[2], Rat(0)}, {t2[0], t2[1], t2[2], t2[3]}, {t3, t3, Rat(0), Rat(0)}};
        scheme.infinity_indices = {Rat(0), Rat(0), Rat(0), Rat(0)};
        return scheme;
    }
}

XYCoords random_xy(Rng& rng) { return {small_rat(rng), small_rat(rng)}; }

DecompositionPoint random_distinct_4x4_point(Rng& rng) {
    const std::vector<Rat> t1 = draw_distinct_nonzero(rng, 3);
    const std::vector<Rat> t2 = draw_distinct_nonzero(rng, 3);
    std::vector<Rat> kappa = {small_rat(rng), small_rat(rng), small_rat(rng)};
    kappa.push_back(-(t1[0] + t1[1] + t1[2] + t2[0] + t2[1] + t2[2] + kappa[0] + kappa[1] + kappa[2]));
    if (!all_distinct(kappa)) throw DegenerateParameter("random spectrum at infinity");

    RatMat b1 = RatMat::Zero(4, 3);
    b1(0, 0) = b1(1, 1) = b1(2, 2) = 1;

    RatMat b2(4, 3);
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) b2(i, j) = rng.rational(-10, 10, 1, 5);
    RatMat extended(4, 4);
    extended.leftCols(3) = b2;
    for (Eigen::Index i = 0; i < 4; ++i) extended(i, 3) = rng.rational(-10, 10, 1, 5);
    if (det(extended) == 0) throw DegenerateParameter("random eigenvector frame");
    const RatMat ext_inv = mat_inverse(extended);
    RatMat c2(3, 4);
    for (Eigen::Index j = 0; j < 3; ++j) {
        const Rat mix = rng.rational(-5, 5, 1, 3);
        c2.row(j) = t2[static_cast<std::size_t>(j)] * ext_inv.row(j) + mix * ext_inv.row(3);
    }

    const RatMat a2_fixed = RatMat(-(b2 * c2));
    const auto coeffs = [&](const std::vector<Rat>& v) {
        RatMat c1 = RatMat::Zero(3, 4);
        c1(0, 0) = t1[0];
        c1(1, 1) = t1[1];
        c1(2, 2) = t1[2];
        c1(0, 3) = v[0];
        c1(1, 3) = v[1];
        c1(2, 3) = v[2];
        const RatMat a_inf = RatMat(a2_fixed - b1 * c1);
        const std::vector<Rat> e = elem_sym_of_spectrum(a_inf);
        return std::vector<Rat>{e[1], e[2], e[3]};
    };
    const std::vector<Rat> target = elem_sym(kappa);
    std::vector<Rat> fill;
    {
        const std::vector<Rat> at_zero = coeffs({Rat(0), Rat(0), Rat(0)});
        RatMat m(3, 3), rhs(3, 1);
        for (int j = 0; j < 3; ++j) {
            std::vector<Rat> probe(3, Rat(0));
            probe[static_cast<std::size_t>(j)] = 1;
            const std::vector<Rat> at_probe = coeffs(probe);
            for (int i = 0; i < 3; ++i)
                m(i, j) = at_probe[static_cast<std::size_t>(i)] - at_zero[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < 3; ++i)
            rhs(i, 0) = target[static_cast<std::size_t>(i) + 1] - at_zero[static_cast<std::size_t>(i)];
        const RatMat solution = solve_linear(m, rhs);
        fill = {solution(0, 0), solution(1, 0), solution(2, 0)};
    }
    RatMat c1 = RatMat::Zero(3, 4);
    c1(0, 0) = t1[0];
    c1(1, 1) = t1[1];
    c1(2, 2) = t1[2];
    c1(0, 3) = fill[0];
    c1(1, 3) = fill[1];
    c1(2, 3) = fill[2];

    DecompositionPoint point;
    point.size = 4;
    point.poles.push_back({Rat(0), b1, c1, {t1[0], t1[1], t1[2]}});
    point.poles.push_back({Rat(1), b2, c2, {t2[0], t2[1], t2[2]}});
    point.theta_inf = kappa;
    assemble(point);
    return point;
}

namespace {

template <typename Params, typename StepFn, typename ParamsToJson>
std::vector<Json> run_orbit(Params params, FGPoint pt, int steps, StepFn step, ParamsToJson params_json) {
    std::vector<Json> records;
    for (int n = 0;; ++n) {
        records.push_back(Json{{"n", n},
                               {"f", p1_to_json(pt.f)},
                               {"g", p1_to_json(pt.g)},
                               {"params", params_json(params)}});
        if (n == steps) break;
        try {
            std::tie(params, pt) = step(params, pt);
        } catch (const BasePointHit& hit) {
            throw BasePointHit(hit.label, n);
        }
    }
    return records;
}

}  // namespace

std::vector<Json> orbit_a2(const ParamsA2& params, const FGPoint& start, int steps) {
    return run_orbit(params, start, steps, [](const ParamsA2& p, const FGPoint& q) { return dpa2_step(p, q); },
                     params_a2_to_json);
}

std::vector<Json> orbit_a1(const ParamsA1& params, const FGPoint& start, int steps) {
    return run_orbit(params, start, steps, [](const ParamsA1& p, const FGPoint& q) { return dpa1_step(p, q); },
                     params_a1_to_json);
}

Json picard_report() {
    Json maps = Json::array();
    for (const auto& [name, expected] : kExpectedTranslations) {
        const LatticeMap map = pushforward(name);
        const RootBasis roots =
            root_basis(name.ends_with("a2") ? RootLabel::E6Affine : RootLabel::E7Affine);
        Json entry{{"name", name},
                   {"basis", name.ends_with("a2") ? "E6_affine" : "E7_affine"},
                   {"isometry", check_isometry(map)}};
        Json images = Json::array();
        for (const auto& root : roots.roots) {
            Json image = Json::array();
            const PicVec v = apply(map, root).coeffs;
            for (int i = 0; i < 10; ++i) image.push_back(v(i));
            images.push_back(std::move(image));
        }
        entry["root_images"] = std::move(images);
        try {
            entry["translation"] = translation_vector(map, roots);
        } catch (const NotTranslation&) {
            entry["translation"] = nullptr;
        }
        maps.push_back(std::move(entry));
    }
    const PicMat composed = pushforward("psi34_a1").matrix * pushforward("psi12_a1").matrix;
    const bool full_matrix_equal = composed == pushforward("phi_a1").matrix;
    return Json{{"isodyn-schema", kSchemaVersion},
                {"maps", std::move(maps)},
                {"composition_check", Json{{"psi34_psi12_equals_phi_a1_matrix", full_matrix_equal}}}};
}

}  // namespace isodyn
