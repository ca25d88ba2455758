#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biot/errors.hpp"

namespace biot::game {

enum class AttackerType { Sophisticated, Naive };
enum class DefenderAction { Deploy, NotDeploy };
enum class AttackerAction { Attack, Abstain };

inline const char* to_string(AttackerType t) {
    return t == AttackerType::Sophisticated ? "sophisticated" : "naive";
}

/// All costs, benefits and the type prior of the deception game.
/// Utilities are in a common dimensionless unit; only ratios matter for
/// equilibrium structure (see the scale-covariance tests).
struct GameParameters {
    double cost_honeypot = 2.0;          ///< defender's cost of deploying a honeypot
    double cost_attack_soph = 50.0;      ///< defender's loss to an unopposed sophisticated attack
    double cost_attack_naive = 30.0;     ///< defender's loss to an unopposed naive attack
    double benefit_attacker_soph = 10.0; ///< sophisticated attacker's gain from a successful attack
    double benefit_attacker_naive = 10.0;///< naive attacker's gain from a successful attack
    double cost_detected_soph = 15.0;    ///< sophisticated attacker's loss when caught by a honeypot
    double cost_detected_naive = 5.0;    ///< naive attacker's loss when caught by a honeypot
    double benefit_detect_soph = 10.0;   ///< defender's gain from catching a sophisticated attacker
    double benefit_detect_naive = 8.0;   ///< defender's gain from catching a naive attacker
    double penalty_false_positive = 1.0; ///< defender's penalty for trapping a legitimate user
    double prior_soph = 0.4;             ///< probability that an attacker is sophisticated

    double attack_cost(AttackerType t) const {
        return t == AttackerType::Sophisticated ? cost_attack_soph : cost_attack_naive;
    }
    double attacker_benefit(AttackerType t) const {
        return t == AttackerType::Sophisticated ? benefit_attacker_soph : benefit_attacker_naive;
    }
    double detected_cost(AttackerType t) const {
        return t == AttackerType::Sophisticated ? cost_detected_soph : cost_detected_naive;
    }
    double detect_benefit(AttackerType t) const {
        return t == AttackerType::Sophisticated ? benefit_detect_soph : benefit_detect_naive;
    }
    double type_probability(AttackerType t) const {
        return t == AttackerType::Sophisticated ? prior_soph : 1.0 - prior_soph;
    }

    /// Throws ConfigError if any cost/benefit is negative, non-finite,
    /// or the prior is outside [0,1].
    void validate() const;
};

struct PayoffPair {
    double defender = 0.0;
    double attacker = 0.0;
};

/// Mixed strategies of both players: the defender deploys with probability
/// beta, an attacker of each type attacks with its own probability.
struct StrategyProfile {
    double beta = 0.0;
    double alpha_soph = 0.0;
    double alpha_naive = 0.0;

    double alpha(AttackerType t) const {
        return t == AttackerType::Sophisticated ? alpha_soph : alpha_naive;
    }
    void validate() const;
};

enum class EquilibriumKind { Pure, FullyMixed, PartiallyMixed, Continuum };

const char* to_string(EquilibriumKind k);

/// Sense of the defender-side constraint that members of a continuum family
/// satisfy: deploy_gain(alpha) compared against the honeypot cost.
enum class ConstraintSense { Equal, AtMost, AtLeast };

/// A connected family of equilibria, described losslessly as box bounds on
/// each probability plus the binding defender constraint
///   coeff_soph * alpha_soph + coeff_naive * alpha_naive  (sense)  rhs.
/// The generic case (both attacker types indifferent at the same beta) is a
/// line segment in the alpha square at fixed beta; segment endpoints are
/// stored for sampling and distance queries.
struct ContinuumFamily {
    double beta_lo = 0.0, beta_hi = 0.0;
    double alpha_soph_lo = 0.0, alpha_soph_hi = 0.0;
    double alpha_naive_lo = 0.0, alpha_naive_hi = 0.0;
    ConstraintSense sense = ConstraintSense::Equal;
    double coeff_soph = 0.0;   ///< prior_soph * (B_ds + C_as)
    double coeff_naive = 0.0;  ///< (1 - prior_soph) * (B_dn + C_an)
    double rhs = 0.0;          ///< cost_honeypot
    StrategyProfile endpoint_a; ///< one extreme profile of the family
    StrategyProfile endpoint_b; ///< the opposite extreme

    /// Profile at fraction t in [0,1] along the endpoint_a -> endpoint_b segment.
    StrategyProfile sample(double t) const;
    /// Minimum L-infinity distance from `p` to the segment (sampled search).
    double distance_linf(const StrategyProfile& p) const;
    std::string describe() const;
};

/// Largest expected-utility gain each player could obtain by a unilateral
/// deviation. All gains are clamped below at 0.
struct VerificationReport {
    double defender_gain = 0.0;
    double soph_gain = 0.0;
    double naive_gain = 0.0;

    double max_gain() const;
    bool certified(double epsilon) const { return max_gain() <= epsilon; }
};

struct Equilibrium {
    StrategyProfile profile; ///< the point itself, or a representative of a continuum
    EquilibriumKind kind = EquilibriumKind::Pure;
    double max_deviation_gain = 0.0;
    VerificationReport verification;
    std::optional<ContinuumFamily> continuum;
};

inline constexpr double kDefaultSolverEpsilon = 1e-9;
inline constexpr double kDefaultVerifyEpsilon = 1e-6;
inline constexpr int kDefaultVerifyGrid = 1001;

/// Terminal payoff cell for one attacker type and one action pair.
PayoffPair payoff(AttackerType type, DefenderAction d, AttackerAction a,
                  const GameParameters& params);

/// Ex-ante defender utility of the mixed profile:
///   beta * EU(deploy | alpha) + (1 - beta) * EU(not deploy | alpha).
double expected_defender_utility(const StrategyProfile& profile,
                                 const GameParameters& params);

/// Attacker utility of the given action against deployment probability beta:
/// Attack -> beta * (-C_d) + (1 - beta) * B_a, Abstain -> 0.
double expected_attacker_utility(AttackerType type, AttackerAction action,
                                 double beta, const GameParameters& params);

/// Expected defender gain from deploying against attack probabilities alpha:
///   p(S) * alpha_S * (B_ds + C_as) + (1 - p(S)) * alpha_N * (B_dn + C_an).
/// Deployment is strictly preferred exactly when this exceeds cost_honeypot.
double deploy_gain(double alpha_soph, double alpha_naive,
                   const GameParameters& params);

/// Whether the defender strictly prefers always-deploy over never-deploy.
bool pure_deploy_condition(double alpha_soph, double alpha_naive,
                           const GameParameters& params);

/// The deployment probability at which an attacker of the given type is
/// exactly indifferent between attacking and abstaining:
///   beta_theta = B_a / (B_a + C_d).
/// Attack is strictly preferred below, abstain above.
/// Throws DegenerateParametersError when B_a + C_d = 0.
double attacker_indifference_beta(AttackerType type, const GameParameters& params);

/// Closed interval of best-response probabilities; a point unless the
/// player is indifferent, in which case it is all of [0,1].
struct ResponseSet {
    double lo = 0.0;
    double hi = 0.0;

    bool is_point() const { return lo == hi; }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

ResponseSet best_response_defender(double alpha_soph, double alpha_naive,
                                   const GameParameters& params,
                                   double epsilon = kDefaultSolverEpsilon);

ResponseSet best_response_attacker(AttackerType type, double beta,
                                   const GameParameters& params,
                                   double epsilon = kDefaultSolverEpsilon);

/// All Bayesian Nash equilibria of the game. Support patterns of the three
/// probabilities are enumerated via the candidate deployment levels
/// {0, beta_S, beta_N, 1} and the intervals between them; interior variables
/// are pinned by the indifference equations and boundary variables are
/// checked to be best responses. Families (e.g. both attacker types
/// indifferent at the same beta) are returned as a single Continuum record.
/// Every returned equilibrium is certified against verify_equilibrium.
/// Throws DegenerateParametersError if either attacker type has
/// B_a + C_d = 0, and InternalError if the result would be empty or fail
/// certification (a finite Bayesian game always has an equilibrium).
std::vector<Equilibrium> enumerate_equilibria(const GameParameters& params,
                                              double epsilon = kDefaultSolverEpsilon);

/// Independent brute-force check: scans each player's unilateral deviations
/// over a uniform grid of the deviating probability and reports the largest
/// expected-utility gain found. grid_resolution must be >= 101.
VerificationReport verify_equilibrium(const StrategyProfile& profile,
                                      const GameParameters& params,
                                      int grid_resolution = kDefaultVerifyGrid,
                                      double epsilon = kDefaultVerifyEpsilon);

enum class Signal { AppearsSuspicious, AppearsNormal };

/// How each traffic source presents to the defender's monitoring:
/// probability of looking suspicious per attacker type and for legitimate
/// users. Defaults reuse the IDS operating point.
struct SignalModel {
    double p_suspicious_given_soph = 0.6;
    double p_suspicious_given_naive = 0.9;
    double p_suspicious_given_legit = 0.05;

    void validate() const;
};

/// Bayes posterior that an attacker is sophisticated given its appearance.
/// Throws UndefinedPosteriorError when the signal has zero probability.
double posterior_type_given_signal(double prior_soph, Signal signal,
                                   const SignalModel& model);

} // namespace biot::game
