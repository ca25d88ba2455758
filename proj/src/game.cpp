#include "biot/game.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace biot::game {

namespace {

void require_finite_nonneg(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
        throw ConfigError(std::string(name) + " must be finite and >= 0, got " +
                          std::to_string(v));
    }
}

void require_probability(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ConfigError(std::string(name) + " must lie in [0,1], got " +
                          std::to_string(v));
    }
}

} // namespace

void GameParameters::validate() const {
    require_finite_nonneg(cost_honeypot, "game.cost_honeypot");
    require_finite_nonneg(cost_attack_soph, "game.cost_attack_soph");
    require_finite_nonneg(cost_attack_naive, "game.cost_attack_naive");
    require_finite_nonneg(benefit_attacker_soph, "game.benefit_attacker_soph");
    require_finite_nonneg(benefit_attacker_naive, "game.benefit_attacker_naive");
    require_finite_nonneg(cost_detected_soph, "game.cost_detected_soph");
    require_finite_nonneg(cost_detected_naive, "game.cost_detected_naive");
    require_finite_nonneg(benefit_detect_soph, "game.benefit_detect_soph");
    require_finite_nonneg(benefit_detect_naive, "game.benefit_detect_naive");
    require_finite_nonneg(penalty_false_positive, "game.penalty_false_positive");
    require_probability(prior_soph, "game.prior_soph");
}

void StrategyProfile::validate() const {
    if (!(beta >= 0.0 && beta <= 1.0) || !(alpha_soph >= 0.0 && alpha_soph <= 1.0) ||
        !(alpha_naive >= 0.0 && alpha_naive <= 1.0)) {
        throw std::invalid_argument("strategy profile probabilities must lie in [0,1]");
    }
}

void SignalModel::validate() const {
    require_probability(p_suspicious_given_soph, "signal.p_suspicious_given_soph");
    require_probability(p_suspicious_given_naive, "signal.p_suspicious_given_naive");
    require_probability(p_suspicious_given_legit, "signal.p_suspicious_given_legit");
}

const char* to_string(EquilibriumKind k) {
    switch (k) {
    case EquilibriumKind::Pure: return "pure";
    case EquilibriumKind::FullyMixed: return "fully_mixed";
    case EquilibriumKind::PartiallyMixed: return "partially_mixed";
    case EquilibriumKind::Continuum: return "continuum";
    }
    return "unknown";
}

PayoffPair payoff(AttackerType type, DefenderAction d, AttackerAction a,
                  const GameParameters& params) {
    if (d == DefenderAction::Deploy) {
        if (a == AttackerAction::Attack) {
            return {params.detect_benefit(type) - params.cost_honeypot,
                    -params.detected_cost(type)};
        }
        return {-params.cost_honeypot, 0.0};
    }
    if (a == AttackerAction::Attack) {
        return {-params.attack_cost(type), params.attacker_benefit(type)};
    }
    return {0.0, 0.0};
}

double expected_defender_utility(const StrategyProfile& profile,
                                 const GameParameters& params) {
    const double p = params.prior_soph;
    const double deploy_eu = p * profile.alpha_soph * params.benefit_detect_soph +
                             (1.0 - p) * profile.alpha_naive * params.benefit_detect_naive -
                             params.cost_honeypot;
    const double no_deploy_eu = -p * profile.alpha_soph * params.cost_attack_soph -
                                (1.0 - p) * profile.alpha_naive * params.cost_attack_naive;
    return profile.beta * deploy_eu + (1.0 - profile.beta) * no_deploy_eu;
}

double expected_attacker_utility(AttackerType type, AttackerAction action,
                                 double beta, const GameParameters& params) {
    if (action == AttackerAction::Abstain) return 0.0;
    return beta * (-params.detected_cost(type)) +
           (1.0 - beta) * params.attacker_benefit(type);
}

double deploy_gain(double alpha_soph, double alpha_naive, const GameParameters& params) {
    const double p = params.prior_soph;
    return p * alpha_soph * (params.benefit_detect_soph + params.cost_attack_soph) +
           (1.0 - p) * alpha_naive * (params.benefit_detect_naive + params.cost_attack_naive);
}

bool pure_deploy_condition(double alpha_soph, double alpha_naive,
                           const GameParameters& params) {
    return params.cost_honeypot < deploy_gain(alpha_soph, alpha_naive, params);
}

double attacker_indifference_beta(AttackerType type, const GameParameters& params) {
    const double benefit = params.attacker_benefit(type);
    const double detected = params.detected_cost(type);
    const double total = benefit + detected;
    if (total <= 0.0) {
        throw DegenerateParametersError(
            std::string("attacker type '") + to_string(type) +
            "' has B_a + C_d = 0: indifferent at every deployment probability");
    }
    return benefit / total;
}

ResponseSet best_response_defender(double alpha_soph, double alpha_naive,
                                   const GameParameters& params, double epsilon) {
    const double gain = deploy_gain(alpha_soph, alpha_naive, params);
    const double cost = params.cost_honeypot;
    const double scale = std::max({1.0, std::abs(gain), std::abs(cost)});
    if (gain > cost + epsilon * scale) return {1.0, 1.0};
    if (gain < cost - epsilon * scale) return {0.0, 0.0};
    return {0.0, 1.0};
}

ResponseSet best_response_attacker(AttackerType type, double beta,
                                   const GameParameters& params, double epsilon) {
    const double threshold = attacker_indifference_beta(type, params);
    if (beta < threshold - epsilon) return {1.0, 1.0};
    if (beta > threshold + epsilon) return {0.0, 0.0};
    return {0.0, 1.0};
}

double VerificationReport::max_gain() const {
    return std::max({defender_gain, soph_gain, naive_gain});
}

VerificationReport verify_equilibrium(const StrategyProfile& profile,
                                      const GameParameters& params,
                                      int grid_resolution, double epsilon) {
    (void)epsilon;
    if (grid_resolution < 101) {
        throw std::invalid_argument("verify_equilibrium requires grid_resolution >= 101");
    }
    profile.validate();
    params.validate();

    VerificationReport report;
    const int n = grid_resolution;

    const double base_defender = expected_defender_utility(profile, params);
    for (int i = 0; i < n; ++i) {
        StrategyProfile deviated = profile;
        deviated.beta = static_cast<double>(i) / (n - 1);
        const double gain = expected_defender_utility(deviated, params) - base_defender;
        report.defender_gain = std::max(report.defender_gain, gain);
    }

    for (AttackerType type : {AttackerType::Sophisticated, AttackerType::Naive}) {
        const double attack_eu =
            expected_attacker_utility(type, AttackerAction::Attack, profile.beta, params);
        const double base = profile.alpha(type) * attack_eu;
        double best_gain = 0.0;
        for (int i = 0; i < n; ++i) {
            const double alpha = static_cast<double>(i) / (n - 1);
            best_gain = std::max(best_gain, alpha * attack_eu - base);
        }
        (type == AttackerType::Sophisticated ? report.soph_gain : report.naive_gain) =
            best_gain;
    }
    return report;
}

StrategyProfile ContinuumFamily::sample(double t) const {
    t = std::clamp(t, 0.0, 1.0);
    return {endpoint_a.beta + t * (endpoint_b.beta - endpoint_a.beta),
            endpoint_a.alpha_soph + t * (endpoint_b.alpha_soph - endpoint_a.alpha_soph),
            endpoint_a.alpha_naive + t * (endpoint_b.alpha_naive - endpoint_a.alpha_naive)};
}

double ContinuumFamily::distance_linf(const StrategyProfile& p) const {
    auto dist_at = [&](double t) {
        const StrategyProfile q = sample(t);
        return std::max({std::abs(q.beta - p.beta), std::abs(q.alpha_soph - p.alpha_soph),
                         std::abs(q.alpha_naive - p.alpha_naive)});
    };
    // Coarse scan followed by a local refinement; the objective is convex in t.
    const int coarse = 512;
    double best_t = 0.0, best = dist_at(0.0);
    for (int i = 1; i <= coarse; ++i) {
        const double t = static_cast<double>(i) / coarse;
        const double d = dist_at(t);
        if (d < best) { best = d; best_t = t; }
    }
    double lo = std::max(0.0, best_t - 1.0 / coarse);
    double hi = std::min(1.0, best_t + 1.0 / coarse);
    for (int iter = 0; iter < 60; ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (dist_at(m1) <= dist_at(m2)) hi = m2; else lo = m1;
    }
    return std::min(best, dist_at(0.5 * (lo + hi)));
}

std::string ContinuumFamily::describe() const {
    std::ostringstream out;
    if (beta_lo == beta_hi) {
        out << "beta = " << beta_lo;
    } else {
        out << "beta in [" << beta_lo << ", " << beta_hi << "]";
    }
    out << ", " << coeff_soph << "*alpha_soph + " << coeff_naive << "*alpha_naive ";
    switch (sense) {
    case ConstraintSense::Equal: out << "= "; break;
    case ConstraintSense::AtMost: out << "<= "; break;
    case ConstraintSense::AtLeast: out << ">= "; break;
    }
    out << rhs;
    out << ", alpha_soph in [" << alpha_soph_lo << ", " << alpha_soph_hi << "]";
    out << ", alpha_naive in [" << alpha_naive_lo << ", " << alpha_naive_hi << "]";
    return out.str();
}

namespace {

enum class AlphaState { Free, ForcedZero, ForcedOne };

struct SolverContext {
    const GameParameters& params;
    double epsilon;     // dimensionless tolerance on probabilities
    double eps_util;    // tolerance on utility-scale comparisons
    double coeff_soph;  // p(S) * (B_ds + C_as)
    double coeff_naive; // (1 - p(S)) * (B_dn + C_an)
    double beta_soph;
    double beta_naive;
};

AlphaState alpha_state(double beta, double indifference_beta, double epsilon) {
    if (std::abs(beta - indifference_beta) <= epsilon) return AlphaState::Free;
    return beta < indifference_beta ? AlphaState::ForcedOne : AlphaState::ForcedZero;
}

double forced_value(AlphaState s) { return s == AlphaState::ForcedOne ? 1.0 : 0.0; }

EquilibriumKind classify_point(const StrategyProfile& p, double epsilon) {
    auto at_bound = [&](double v) { return v <= epsilon || v >= 1.0 - epsilon; };
    const int bounds = at_bound(p.beta) + at_bound(p.alpha_soph) + at_bound(p.alpha_naive);
    if (bounds == 3) return EquilibriumKind::Pure;
    if (bounds == 0) return EquilibriumKind::FullyMixed;
    return EquilibriumKind::PartiallyMixed;
}

Equilibrium make_point(const SolverContext& ctx, double beta, double a_soph,
                       double a_naive) {
    Equilibrium eq;
    eq.profile = {std::clamp(beta, 0.0, 1.0), std::clamp(a_soph, 0.0, 1.0),
                  std::clamp(a_naive, 0.0, 1.0)};
    eq.kind = classify_point(eq.profile, ctx.epsilon);
    return eq;
}

Equilibrium make_family(const SolverContext& ctx, ContinuumFamily fam) {
    fam.coeff_soph = ctx.coeff_soph;
    fam.coeff_naive = ctx.coeff_naive;
    fam.rhs = ctx.params.cost_honeypot;
    Equilibrium eq;
    eq.kind = EquilibriumKind::Continuum;
    eq.profile = fam.sample(0.5);
    eq.continuum = std::move(fam);
    return eq;
}

ContinuumFamily box_family(double beta_lo, double beta_hi, double as_lo, double as_hi,
                           double an_lo, double an_hi, ConstraintSense sense,
                           StrategyProfile a, StrategyProfile b) {
    ContinuumFamily fam;
    fam.beta_lo = beta_lo;
    fam.beta_hi = beta_hi;
    fam.alpha_soph_lo = as_lo;
    fam.alpha_soph_hi = as_hi;
    fam.alpha_naive_lo = an_lo;
    fam.alpha_naive_hi = an_hi;
    fam.sense = sense;
    fam.endpoint_a = a;
    fam.endpoint_b = b;
    return fam;
}

// Equilibria at one candidate deployment level with one attacker type free
// (indifferent) and the other forced. The free alpha must satisfy the
// defender-side constraint, whose sense depends on whether beta sits at a
// boundary or strictly inside (indifference).
void solve_one_free(const SolverContext& ctx, double beta, AttackerType free_type,
                    double forced_alpha, ConstraintSense sense,
                    std::vector<Equilibrium>& out) {
    const bool soph_free = free_type == AttackerType::Sophisticated;
    const double cf = soph_free ? ctx.coeff_soph : ctx.coeff_naive;   // free coefficient
    const double cx = soph_free ? ctx.coeff_naive : ctx.coeff_soph;   // forced coefficient
    const double budget = ctx.params.cost_honeypot - cx * forced_alpha;

    auto emit_point = [&](double v) {
        if (soph_free) out.push_back(make_point(ctx, beta, v, forced_alpha));
        else out.push_back(make_point(ctx, beta, forced_alpha, v));
    };
    auto emit_interval = [&](double lo, double hi, ConstraintSense s) {
        if (hi - lo <= ctx.epsilon) { emit_point(0.5 * (lo + hi)); return; }
        StrategyProfile a{beta, soph_free ? lo : forced_alpha, soph_free ? forced_alpha : lo};
        StrategyProfile b{beta, soph_free ? hi : forced_alpha, soph_free ? forced_alpha : hi};
        out.push_back(make_family(
            ctx, box_family(beta, beta, a.alpha_soph, b.alpha_soph, a.alpha_naive,
                            b.alpha_naive, s, a, b)));
    };

    if (cf <= ctx.eps_util) {
        // The free alpha does not move the defender's utility; the constraint
        // is decided by the forced side alone and any alpha in [0,1] works.
        const bool ok = sense == ConstraintSense::Equal ? std::abs(budget) <= ctx.eps_util
                        : sense == ConstraintSense::AtMost ? budget >= -ctx.eps_util
                                                           : budget <= ctx.eps_util;
        if (ok) emit_interval(0.0, 1.0, sense);
        return;
    }

    const double pivot = budget / cf;
    switch (sense) {
    case ConstraintSense::Equal:
        if (pivot >= -ctx.epsilon && pivot <= 1.0 + ctx.epsilon) emit_point(pivot);
        break;
    case ConstraintSense::AtMost: {
        const double hi = std::min(1.0, pivot);
        if (hi >= -ctx.epsilon) emit_interval(0.0, std::max(0.0, hi), sense);
        break;
    }
    case ConstraintSense::AtLeast: {
        const double lo = std::max(0.0, pivot);
        if (lo <= 1.0 + ctx.epsilon) emit_interval(std::min(1.0, lo), 1.0, sense);
        break;
    }
    }
}

// Equilibria at a candidate level where both attacker types are indifferent.
// With an interior beta the defender-indifference line clipped to the unit
// square is the equilibrium family; at a boundary beta the feasible set is a
// half-plane intersection and is reported as a box-with-constraint record.
void solve_both_free(const SolverContext& ctx, double beta, ConstraintSense sense,
                     std::vector<Equilibrium>& out) {
    const double cs = ctx.coeff_soph;
    const double cn = ctx.coeff_naive;
    const double rhs = ctx.params.cost_honeypot;

    if (cs <= ctx.eps_util && cn <= ctx.eps_util) {
        const bool ok = sense == ConstraintSense::Equal ? std::abs(rhs) <= ctx.eps_util
                        : sense == ConstraintSense::AtMost ? rhs >= -ctx.eps_util
                                                           : rhs <= ctx.eps_util;
        if (ok) {
            out.push_back(make_family(
                ctx, box_family(beta, beta, 0.0, 1.0, 0.0, 1.0, sense,
                                {beta, 0.0, 0.0}, {beta, 1.0, 1.0})));
        }
        return;
    }
    if (cs <= ctx.eps_util || cn <= ctx.eps_util) {
        // Only one alpha matters; delegate to the single-free solver with the
        // irrelevant alpha spanning [0,1] via two sub-families.
        const AttackerType relevant =
            cs > ctx.eps_util ? AttackerType::Sophisticated : AttackerType::Naive;
        const double c = cs > ctx.eps_util ? cs : cn;
        const double pivot = rhs / c;
        auto profile_at = [&](double rel, double irr) {
            return relevant == AttackerType::Sophisticated
                       ? StrategyProfile{beta, rel, irr}
                       : StrategyProfile{beta, irr, rel};
        };
        auto emit_rect = [&](double rel_lo, double rel_hi) {
            StrategyProfile a = profile_at(rel_lo, 0.0);
            StrategyProfile b = profile_at(rel_hi, 1.0);
            out.push_back(make_family(
                ctx, box_family(beta, beta, std::min(a.alpha_soph, b.alpha_soph),
                                std::max(a.alpha_soph, b.alpha_soph),
                                std::min(a.alpha_naive, b.alpha_naive),
                                std::max(a.alpha_naive, b.alpha_naive), sense, a, b)));
        };
        switch (sense) {
        case ConstraintSense::Equal:
            if (pivot >= -ctx.epsilon && pivot <= 1.0 + ctx.epsilon) {
                const double v = std::clamp(pivot, 0.0, 1.0);
                emit_rect(v, v);
            }
            break;
        case ConstraintSense::AtMost:
            if (pivot >= -ctx.epsilon) emit_rect(0.0, std::clamp(pivot, 0.0, 1.0));
            break;
        case ConstraintSense::AtLeast:
            if (pivot <= 1.0 + ctx.epsilon) emit_rect(std::clamp(pivot, 0.0, 1.0), 1.0);
            break;
        }
        return;
    }

    // Both coefficients positive: clip the line cs*aS + cn*aN = rhs to the
    // unit square.
    std::vector<std::pair<double, double>> pts;
    auto push_unique = [&](double as, double an) {
        for (const auto& [x, y] : pts) {
            if (std::abs(x - as) <= ctx.epsilon && std::abs(y - an) <= ctx.epsilon) return;
        }
        pts.emplace_back(as, an);
    };
    for (double as : {0.0, 1.0}) {
        const double an = (rhs - cs * as) / cn;
        if (an >= -ctx.epsilon && an <= 1.0 + ctx.epsilon)
            push_unique(as, std::clamp(an, 0.0, 1.0));
    }
    for (double an : {0.0, 1.0}) {
        const double as = (rhs - cn * an) / cs;
        if (as >= -ctx.epsilon && as <= 1.0 + ctx.epsilon)
            push_unique(std::clamp(as, 0.0, 1.0), an);
    }
    if (pts.empty()) {
        if (sense == ConstraintSense::AtMost && rhs >= cs + cn) {
            out.push_back(make_family(ctx, box_family(beta, beta, 0.0, 1.0, 0.0, 1.0,
                                                      sense, {beta, 0.0, 0.0},
                                                      {beta, 1.0, 1.0})));
        } else if (sense == ConstraintSense::AtLeast && rhs <= 0.0) {
            out.push_back(make_family(ctx, box_family(beta, beta, 0.0, 1.0, 0.0, 1.0,
                                                      sense, {beta, 0.0, 0.0},
                                                      {beta, 1.0, 1.0})));
        }
        return;
    }
    if (sense == ConstraintSense::Equal) {
        if (pts.size() == 1) {
            out.push_back(make_point(ctx, beta, pts[0].first, pts[0].second));
            return;
        }
        StrategyProfile a{beta, pts[0].first, pts[0].second};
        StrategyProfile b{beta, pts[1].first, pts[1].second};
        out.push_back(make_family(
            ctx, box_family(beta, beta, std::min(a.alpha_soph, b.alpha_soph),
                            std::max(a.alpha_soph, b.alpha_soph),
                            std::min(a.alpha_naive, b.alpha_naive),
                            std::max(a.alpha_naive, b.alpha_naive), sense, a, b)));
        return;
    }
    // Half-plane at a boundary beta: report the feasible region via its
    // bounding box and the inequality; endpoints follow the main diagonal of
    // the feasible set so sampled profiles remain inside it.
    const bool below = sense == ConstraintSense::AtMost;
    StrategyProfile corner = below ? StrategyProfile{beta, 0.0, 0.0}
                                   : StrategyProfile{beta, 1.0, 1.0};
    const double diag_t = std::clamp(rhs / (cs + cn), 0.0, 1.0);
    StrategyProfile diag{beta, diag_t, diag_t};
    const double as_lo = below ? 0.0 : std::clamp((rhs - cn) / cs, 0.0, 1.0);
    const double as_hi = below ? std::clamp(rhs / cs, 0.0, 1.0) : 1.0;
    const double an_lo = below ? 0.0 : std::clamp((rhs - cs) / cn, 0.0, 1.0);
    const double an_hi = below ? std::clamp(rhs / cn, 0.0, 1.0) : 1.0;
    out.push_back(make_family(
        ctx, box_family(beta, beta, as_lo, as_hi, an_lo, an_hi, sense, corner, diag)));
}

bool same_point(const StrategyProfile& a, const StrategyProfile& b, double tol) {
    return std::abs(a.beta - b.beta) <= tol &&
           std::abs(a.alpha_soph - b.alpha_soph) <= tol &&
           std::abs(a.alpha_naive - b.alpha_naive) <= tol;
}

} // namespace

std::vector<Equilibrium> enumerate_equilibria(const GameParameters& params,
                                              double epsilon) {
    params.validate();
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("enumerate_equilibria requires epsilon > 0");
    }

    const double p = params.prior_soph;
    SolverContext ctx{
        params,
        epsilon,
        0.0,
        p * (params.benefit_detect_soph + params.cost_attack_soph),
        (1.0 - p) * (params.benefit_detect_naive + params.cost_attack_naive),
        attacker_indifference_beta(AttackerType::Sophisticated, params),
        attacker_indifference_beta(AttackerType::Naive, params),
    };
    const double uscale =
        std::max({1.0, params.cost_honeypot, ctx.coeff_soph, ctx.coeff_naive});
    ctx.eps_util = epsilon * uscale;

    // Candidate deployment levels: the boundaries plus each type's
    // indifference point (deduplicated within tolerance).
    std::vector<double> candidates{0.0, 1.0};
    for (double b : {ctx.beta_soph, ctx.beta_naive}) {
        bool dup = false;
        for (double c : candidates) {
            if (std::abs(c - b) <= epsilon) { dup = true; break; }
        }
        if (!dup) candidates.push_back(b);
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<Equilibrium> found;
    for (double beta : candidates) {
        const AlphaState ss = alpha_state(beta, ctx.beta_soph, epsilon);
        const AlphaState sn = alpha_state(beta, ctx.beta_naive, epsilon);
        const bool boundary = beta <= epsilon || beta >= 1.0 - epsilon;
        const ConstraintSense sense =
            !boundary ? ConstraintSense::Equal
                      : (beta <= epsilon ? ConstraintSense::AtMost
                                         : ConstraintSense::AtLeast);

        if (ss != AlphaState::Free && sn != AlphaState::Free) {
            const double a_s = forced_value(ss);
            const double a_n = forced_value(sn);
            const double gain = deploy_gain(a_s, a_n, params);
            const double diff = gain - params.cost_honeypot;
            const bool ok = sense == ConstraintSense::Equal ? std::abs(diff) <= ctx.eps_util
                            : sense == ConstraintSense::AtMost ? diff <= ctx.eps_util
                                                               : diff >= -ctx.eps_util;
            if (ok) found.push_back(make_point(ctx, beta, a_s, a_n));
        } else if (ss == AlphaState::Free && sn == AlphaState::Free) {
            solve_both_free(ctx, beta, sense, found);
        } else if (ss == AlphaState::Free) {
            solve_one_free(ctx, beta, AttackerType::Sophisticated, forced_value(sn),
                           sense, found);
        } else {
            solve_one_free(ctx, beta, AttackerType::Naive, forced_value(ss), sense,
                           found);
        }
    }

    // Open intervals between consecutive candidates: alphas are forced on the
    // whole stretch; if the forced profile happens to make the defender
    // exactly indifferent, every interior beta is an equilibrium.
    for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
        const double lo = candidates[i], hi = candidates[i + 1];
        if (hi - lo <= 2 * epsilon || hi <= 0.0 || lo >= 1.0) continue;
        const double mid = 0.5 * (lo + hi);
        const double a_s = forced_value(alpha_state(mid, ctx.beta_soph, epsilon));
        const double a_n = forced_value(alpha_state(mid, ctx.beta_naive, epsilon));
        if (std::abs(deploy_gain(a_s, a_n, params) - params.cost_honeypot) <=
            ctx.eps_util) {
            const double blo = std::max(0.0, lo);
            const double bhi = std::min(1.0, hi);
            found.push_back(make_family(
                ctx, box_family(blo, bhi, a_s, a_s, a_n, a_n, ConstraintSense::Equal,
                                {blo, a_s, a_n}, {bhi, a_s, a_n})));
        }
    }

    // Deduplicate: drop repeated points and points already inside a family.
    const double tol = std::max(16.0 * epsilon, 1e-12);
    std::vector<Equilibrium> result;
    for (auto& eq : found) {
        if (eq.kind == EquilibriumKind::Continuum) {
            bool dup = false;
            for (const auto& kept : result) {
                if (kept.kind == EquilibriumKind::Continuum &&
                    same_point(kept.continuum->endpoint_a, eq.continuum->endpoint_a, tol) &&
                    same_point(kept.continuum->endpoint_b, eq.continuum->endpoint_b, tol)) {
                    dup = true;
                    break;
                }
            }
            if (!dup) result.push_back(std::move(eq));
        }
    }
    for (auto& eq : found) {
        if (eq.kind == EquilibriumKind::Continuum) continue;
        bool dup = false;
        for (const auto& kept : result) {
            if (kept.kind == EquilibriumKind::Continuum) {
                if (kept.continuum->distance_linf(eq.profile) <= tol) { dup = true; break; }
            } else if (same_point(kept.profile, eq.profile, tol)) {
                dup = true;
                break;
            }
        }
        if (!dup) result.push_back(std::move(eq));
    }

    if (result.empty()) {
        throw InternalError(
            "equilibrium enumeration returned no profiles; a finite Bayesian game "
            "always has a mixed equilibrium");
    }

    // Certify everything we are about to return. Families are certified at
    // their endpoints and midpoint.
    const double certify_eps = std::max(epsilon * uscale, epsilon);
    for (auto& eq : result) {
        VerificationReport worst;
        if (eq.continuum) {
            for (double t : {0.0, 0.5, 1.0}) {
                const VerificationReport r =
                    verify_equilibrium(eq.continuum->sample(t), params);
                worst.defender_gain = std::max(worst.defender_gain, r.defender_gain);
                worst.soph_gain = std::max(worst.soph_gain, r.soph_gain);
                worst.naive_gain = std::max(worst.naive_gain, r.naive_gain);
            }
        } else {
            worst = verify_equilibrium(eq.profile, params);
        }
        eq.verification = worst;
        eq.max_deviation_gain = worst.max_gain();
        if (eq.max_deviation_gain > certify_eps) {
            throw InternalError("solver produced an uncertified equilibrium (gain " +
                                std::to_string(eq.max_deviation_gain) + ")");
        }
    }
    return result;
}

double posterior_type_given_signal(double prior_soph, Signal signal,
                                   const SignalModel& model) {
    model.validate();
    if (!(prior_soph >= 0.0 && prior_soph <= 1.0)) {
        throw ConfigError("prior_soph must lie in [0,1]");
    }
    const bool suspicious = signal == Signal::AppearsSuspicious;
    const double like_soph =
        suspicious ? model.p_suspicious_given_soph : 1.0 - model.p_suspicious_given_soph;
    const double like_naive = suspicious ? model.p_suspicious_given_naive
                                         : 1.0 - model.p_suspicious_given_naive;
    const double denom = prior_soph * like_soph + (1.0 - prior_soph) * like_naive;
    if (denom <= 0.0) {
        throw UndefinedPosteriorError(
            "signal has zero probability under the prior; posterior undefined");
    }
    return prior_soph * like_soph / denom;
}

} // namespace biot::game
