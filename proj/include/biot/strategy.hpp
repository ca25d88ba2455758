#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "biot/game.hpp"
#include "biot/rng.hpp"

namespace biot::strategy {

enum class PolicyKind { FixedThreshold, Variable, AlwaysDeploy, NeverDeploy, FixedBeta };

enum class F1Window { Cumulative, Sliding };

/// A deployment policy: maps the defender's per-event observation (IDS alert
/// plus running F1 estimate) to a deploy decision.
///
///   FixedThreshold(t)  deploy iff alert and F1 >= t     ("fs50".."fs90")
///   Variable           on alert, deploy with probability slope*F1+intercept
///   AlwaysDeploy       deploy unconditionally
///   NeverDeploy        never deploy
///   FixedBeta(b)       deploy with probability b, ignoring the alert
///                      (ex-ante mixing; bridges equilibrium solutions in)
struct DeploymentPolicy {
    PolicyKind kind = PolicyKind::NeverDeploy;
    double threshold = 0.0;          ///< FixedThreshold only
    double beta = 0.0;               ///< FixedBeta only
    std::uint64_t warmup_events = 100;
    F1Window f1_window = F1Window::Cumulative;
    std::uint64_t window_size = 0;   ///< Sliding only
    double vs_slope = 1.0;           ///< Variable probability map
    double vs_intercept = 0.0;

    static DeploymentPolicy fixed_threshold(double t);
    static DeploymentPolicy variable();
    static DeploymentPolicy always();
    static DeploymentPolicy never();
    static DeploymentPolicy fixed_beta(double b);

    /// Whether decisions read the F1 estimate at all.
    bool uses_f1() const {
        return kind == PolicyKind::FixedThreshold || kind == PolicyKind::Variable;
    }
    void validate() const;
};

/// What the defender sees when deciding on one event. f1_estimate is the
/// effective estimate: the trial runner substitutes the analytic expected F1
/// while events_seen < warmup_events.
struct DefenderObservation {
    bool alert = false;
    double f1_estimate = 0.0;
    std::uint64_t events_seen = 0;
};

/// One deployment decision. Pure given the observation and stream state.
/// Draw discipline: FixedBeta consumes one uniform per call, Variable one
/// uniform per alerted call, all other kinds none.
bool decide(const DeploymentPolicy& policy, const DefenderObservation& obs,
            RandomStream& rng);

/// FixedBeta policy at the equilibrium deployment probability.
/// Throws std::invalid_argument for a continuum without a selected point.
DeploymentPolicy policy_from_equilibrium(const game::Equilibrium& eq);

/// Parses a policy spec string: fs50 | fs60 | fs70 | fs80 | fs90 | vs |
/// always | never | beta:<float>. Case-insensitive.
/// Throws ConfigError listing the valid specs.
DeploymentPolicy parse_policy_spec(std::string_view spec);

/// Canonical spec string for a policy ("fs70", "beta:0.5", ...).
std::string policy_spec_name(const DeploymentPolicy& policy);

} // namespace biot::strategy
