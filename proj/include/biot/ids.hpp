#pragma once

#include <cstdint>

#include "biot/game.hpp"
#include "biot/rng.hpp"

namespace biot::ids {

/// Operating point of the intrusion detection signal: per-type true-positive
/// rates and the false-positive rate on benign traffic.
struct IdsParameters {
    double tpr_soph = 0.6;
    double tpr_naive = 0.9;
    double fpr = 0.05;

    double tpr(game::AttackerType t) const {
        return t == game::AttackerType::Sophisticated ? tpr_soph : tpr_naive;
    }
    void validate() const;
};

/// What the IDS is looking at for one event. Abstaining attackers generate
/// traffic indistinguishable from legitimate users and fall under Benign.
enum class TrafficClass { SophisticatedAttack, NaiveAttack, Benign };

/// Alert probability for one event class under the given operating point.
double alert_probability(TrafficClass cls, const IdsParameters& ids);

/// One Bernoulli alert draw. Deterministic given the stream state.
bool sample_alert(TrafficClass cls, const IdsParameters& ids, RandomStream& rng);

struct ConfusionCounts {
    std::uint64_t true_positives = 0;
    std::uint64_t false_positives = 0;
    std::uint64_t true_negatives = 0;
    std::uint64_t false_negatives = 0;

    std::uint64_t total() const {
        return true_positives + false_positives + true_negatives + false_negatives;
    }
};

/// Functional update: returns the counts with exactly one cell incremented.
/// Alerts are scored against "was an attack launched", not attacker type.
[[nodiscard]] ConfusionCounts update_confusion(ConfusionCounts counts, bool alert,
                                               bool was_attack);

/// Zero-denominator convention: a precision/recall whose denominator is 0 is
/// taken as 0, and F1 = 0 when precision + recall = 0. Totals over all inputs.
double precision(const ConfusionCounts& counts);
double recall(const ConfusionCounts& counts);
double f1_score(const ConfusionCounts& counts);

/// Long-run fractions of each event class in a stream.
struct EventMix {
    double p_soph_attack = 0.0;
    double p_naive_attack = 0.0;
    double p_benign = 1.0;

    void validate() const;
};

/// Asymptotic F1 implied by the operating point and the event mix: expected
/// confusion rates fed through the same F1 conventions. Used to warm-start
/// F1-driven policies before empirical counts accumulate.
double expected_f1(const IdsParameters& ids, const EventMix& mix);

} // namespace biot::ids
