#include "biot/strategy.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace biot::strategy {

DeploymentPolicy DeploymentPolicy::fixed_threshold(double t) {
    DeploymentPolicy p;
    p.kind = PolicyKind::FixedThreshold;
    p.threshold = t;
    return p;
}

DeploymentPolicy DeploymentPolicy::variable() {
    DeploymentPolicy p;
    p.kind = PolicyKind::Variable;
    return p;
}

DeploymentPolicy DeploymentPolicy::always() {
    DeploymentPolicy p;
    p.kind = PolicyKind::AlwaysDeploy;
    return p;
}

DeploymentPolicy DeploymentPolicy::never() {
    DeploymentPolicy p;
    p.kind = PolicyKind::NeverDeploy;
    return p;
}

DeploymentPolicy DeploymentPolicy::fixed_beta(double b) {
    DeploymentPolicy p;
    p.kind = PolicyKind::FixedBeta;
    p.beta = b;
    return p;
}

void DeploymentPolicy::validate() const {
    if (kind == PolicyKind::FixedThreshold && !(threshold >= 0.0 && threshold <= 1.0)) {
        throw ConfigError("policy threshold must lie in [0,1], got " +
                          std::to_string(threshold));
    }
    if (kind == PolicyKind::FixedBeta && !(beta >= 0.0 && beta <= 1.0)) {
        throw ConfigError("policy beta must lie in [0,1], got " + std::to_string(beta));
    }
    if (f1_window == F1Window::Sliding && window_size == 0) {
        throw ConfigError("sliding F1 window requires a positive window size");
    }
    if (!std::isfinite(vs_slope) || !std::isfinite(vs_intercept)) {
        throw ConfigError("variable-strategy map coefficients must be finite");
    }
}

bool decide(const DeploymentPolicy& policy, const DefenderObservation& obs,
            RandomStream& rng) {
    switch (policy.kind) {
    case PolicyKind::AlwaysDeploy:
        return true;
    case PolicyKind::NeverDeploy:
        return false;
    case PolicyKind::FixedBeta:
        return rng.bernoulli(policy.beta);
    case PolicyKind::FixedThreshold:
        return obs.alert && obs.f1_estimate >= policy.threshold;
    case PolicyKind::Variable: {
        if (!obs.alert) return false;
        const double prob = std::clamp(
            policy.vs_slope * obs.f1_estimate + policy.vs_intercept, 0.0, 1.0);
        return rng.bernoulli(prob);
    }
    }
    return false;
}

DeploymentPolicy policy_from_equilibrium(const game::Equilibrium& eq) {
    if (eq.kind == game::EquilibriumKind::Continuum) {
        throw std::invalid_argument(
            "equilibrium is a continuum; select a point on it (e.g. via "
            "ContinuumFamily::sample) before building a policy");
    }
    return DeploymentPolicy::fixed_beta(eq.profile.beta);
}

namespace {

const char* kValidSpecs =
    "fs50, fs60, fs70, fs80, fs90, vs, always, never, beta:<float in [0,1]>";

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

[[noreturn]] void bad_spec(std::string_view spec) {
    throw ConfigError("unknown policy spec '" + std::string(spec) +
                      "'; valid specs: " + kValidSpecs);
}

} // namespace

DeploymentPolicy parse_policy_spec(std::string_view spec) {
    const std::string s = to_lower(spec);
    if (s == "vs") return DeploymentPolicy::variable();
    if (s == "always") return DeploymentPolicy::always();
    if (s == "never") return DeploymentPolicy::never();
    if (s.rfind("fs", 0) == 0) {
        if (s == "fs50") return DeploymentPolicy::fixed_threshold(0.50);
        if (s == "fs60") return DeploymentPolicy::fixed_threshold(0.60);
        if (s == "fs70") return DeploymentPolicy::fixed_threshold(0.70);
        if (s == "fs80") return DeploymentPolicy::fixed_threshold(0.80);
        if (s == "fs90") return DeploymentPolicy::fixed_threshold(0.90);
        bad_spec(spec);
    }
    if (s.rfind("beta:", 0) == 0) {
        const std::string value = s.substr(5);
        double b = 0.0;
        const auto* first = value.data();
        const auto* last = value.data() + value.size();
        const auto [ptr, ec] = std::from_chars(first, last, b);
        if (ec != std::errc{} || ptr != last || !(b >= 0.0 && b <= 1.0)) bad_spec(spec);
        return DeploymentPolicy::fixed_beta(b);
    }
    bad_spec(spec);
}

std::string policy_spec_name(const DeploymentPolicy& policy) {
    switch (policy.kind) {
    case PolicyKind::AlwaysDeploy: return "always";
    case PolicyKind::NeverDeploy: return "never";
    case PolicyKind::Variable: return "vs";
    case PolicyKind::FixedThreshold: {
        const int pct = static_cast<int>(std::lround(policy.threshold * 100.0));
        return "fs" + std::to_string(pct);
    }
    case PolicyKind::FixedBeta: {
        std::ostringstream out;
        out << "beta:" << policy.beta;
        return out.str();
    }
    }
    return "unknown";
}

} // namespace biot::strategy
