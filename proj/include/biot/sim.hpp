#pragma once

#include <cstdint>
#include <vector>

#include "biot/game.hpp"
#include "biot/ids.hpp"
#include "biot/rng.hpp"
#include "biot/strategy.hpp"

namespace biot::sim {

/// Shape of one simulated "day": event count, attacker presence rate, type
/// prior and per-type attack propensities, plus the trial's base seed.
struct TrialConfig {
    std::uint64_t n_events = 10000;
    double attack_rate = 0.1;    ///< fraction of events with an attacker present
    double p_soph = 0.4;         ///< attacker type prior
    double p_attack_soph = 0.5;
    double p_attack_naive = 0.9;
    std::uint64_t seed = 42;

    void validate() const;
    /// Long-run event-class mix implied by these rates (abstaining attackers
    /// count as benign traffic).
    ids::EventMix event_mix() const;
};

/// One network event: legitimate traffic, or an attacker of some type who
/// either attacked or held back.
struct Event {
    bool attacker_present = false;
    game::AttackerType type = game::AttackerType::Naive;
    bool attacked = false;

    static Event legitimate() { return {}; }
    static Event attacker(game::AttackerType t, bool did_attack) {
        return {true, t, did_attack};
    }

    bool is_attack() const { return attacker_present && attacked; }
    ids::TrafficClass traffic_class() const {
        if (!is_attack()) return ids::TrafficClass::Benign;
        return type == game::AttackerType::Sophisticated
                   ? ids::TrafficClass::SophisticatedAttack
                   : ids::TrafficClass::NaiveAttack;
    }
};

struct EventOutcome {
    Event event;
    bool alert = false;
    bool deployed = false;
    bool detected = false;
    double utility = 0.0;
};

struct TrialResult {
    double average_utility = 0.0;
    double total_utility = 0.0;
    ids::ConfusionCounts confusion;
    std::uint64_t n_events = 0;
    std::uint64_t deployments = 0;
    std::uint64_t detections = 0;
    std::uint64_t successful_attacks = 0;
    std::uint64_t false_positive_deployments = 0;
    double final_f1 = 0.0;
    std::uint64_t seed = 0;
};

struct MonteCarloSummary {
    std::uint64_t n_trials = 0;
    double mean_utility = 0.0;
    double std_error = 0.0;
    std::vector<TrialResult> per_trial;
};

/// Draws one event. Always consumes exactly three uniforms (attacker
/// presence, type, attack decision) so event streams stay aligned across
/// configurations sharing a seed.
Event generate_event(const TrialConfig& cfg, RandomStream& rng);

/// Defender utility of one scored event:
///   legitimate:            deployed -> -P_n, else 0
///   attack by type theta:  deployed & detected -> B_d - C_h
///                          deployed & missed   -> -C_h
///                          not deployed        -> -C_a
///   abstaining attacker:   deployed -> -C_h, else 0
/// Throws std::invalid_argument if detected without deployed & attacked.
double event_utility(const Event& event, bool deployed, bool detected,
                     const game::GameParameters& params);

/// Runs one trial. Per event, in order: generate event (3 world draws),
/// alert draw, detection draw (consumed regardless of use), policy decision
/// (separate policy stream), scoring, confusion/F1 update. The world and
/// policy streams are derived from cfg.seed, so the event/alert/detection
/// sequence is identical for every policy under the same seed.
TrialResult run_trial(const TrialConfig& cfg, const strategy::DeploymentPolicy& policy,
                      const game::GameParameters& params, const ids::IdsParameters& ids);

/// Exact expected per-event utility of an alert-independent FixedBeta(beta)
/// policy, by total expectation over the event/detection tree. Analytic
/// oracle for the Monte Carlo path.
double closed_form_expected_utility(double beta, const TrialConfig& cfg,
                                    const game::GameParameters& params,
                                    const ids::IdsParameters& ids);

/// Independent trials with per-trial seeds derive_stream_seed(cfg.seed, i).
/// Bit-identical results for identical inputs regardless of `jobs`.
MonteCarloSummary run_monte_carlo(std::uint64_t n_trials, const TrialConfig& cfg,
                                  const strategy::DeploymentPolicy& policy,
                                  const game::GameParameters& params,
                                  const ids::IdsParameters& ids, unsigned jobs = 1);

} // namespace biot::sim
