#include "biot/ids.hpp"

#include <cmath>
#include <string>

namespace biot::ids {

namespace {

void require_probability(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ConfigError(std::string(name) + " must lie in [0,1], got " +
                          std::to_string(v));
    }
}

double safe_ratio(double num, double denom) { return denom > 0.0 ? num / denom : 0.0; }

double f1_from_rates(double tp, double fp, double fn) {
    const double prec = safe_ratio(tp, tp + fp);
    const double rec = safe_ratio(tp, tp + fn);
    return safe_ratio(2.0 * prec * rec, prec + rec);
}

} // namespace

void IdsParameters::validate() const {
    require_probability(tpr_soph, "ids.tpr_soph");
    require_probability(tpr_naive, "ids.tpr_naive");
    require_probability(fpr, "ids.fpr");
}

double alert_probability(TrafficClass cls, const IdsParameters& ids) {
    switch (cls) {
    case TrafficClass::SophisticatedAttack: return ids.tpr_soph;
    case TrafficClass::NaiveAttack: return ids.tpr_naive;
    case TrafficClass::Benign: return ids.fpr;
    }
    return 0.0;
}

bool sample_alert(TrafficClass cls, const IdsParameters& ids, RandomStream& rng) {
    return rng.bernoulli(alert_probability(cls, ids));
}

ConfusionCounts update_confusion(ConfusionCounts counts, bool alert, bool was_attack) {
    if (alert) {
        if (was_attack) ++counts.true_positives;
        else ++counts.false_positives;
    } else {
        if (was_attack) ++counts.false_negatives;
        else ++counts.true_negatives;
    }
    return counts;
}

double precision(const ConfusionCounts& counts) {
    return safe_ratio(static_cast<double>(counts.true_positives),
                      static_cast<double>(counts.true_positives + counts.false_positives));
}

double recall(const ConfusionCounts& counts) {
    return safe_ratio(static_cast<double>(counts.true_positives),
                      static_cast<double>(counts.true_positives + counts.false_negatives));
}

double f1_score(const ConfusionCounts& counts) {
    return f1_from_rates(static_cast<double>(counts.true_positives),
                         static_cast<double>(counts.false_positives),
                         static_cast<double>(counts.false_negatives));
}

void EventMix::validate() const {
    require_probability(p_soph_attack, "mix.p_soph_attack");
    require_probability(p_naive_attack, "mix.p_naive_attack");
    require_probability(p_benign, "mix.p_benign");
    const double sum = p_soph_attack + p_naive_attack + p_benign;
    if (std::abs(sum - 1.0) > 1e-9) {
        throw ConfigError("event mix probabilities must sum to 1, got " +
                          std::to_string(sum));
    }
}

double expected_f1(const IdsParameters& ids, const EventMix& mix) {
    ids.validate();
    mix.validate();
    const double tp = mix.p_soph_attack * ids.tpr_soph + mix.p_naive_attack * ids.tpr_naive;
    const double fn = mix.p_soph_attack * (1.0 - ids.tpr_soph) +
                      mix.p_naive_attack * (1.0 - ids.tpr_naive);
    const double fp = mix.p_benign * ids.fpr;
    return f1_from_rates(tp, fp, fn);
}

} // namespace biot::ids
