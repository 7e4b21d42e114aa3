#pragma once

#include <stdexcept>
#include <string>

namespace littlewood {

/// Input violates a hard size/range limit (exhaustive-search caps,
/// support-spread caps, element magnitude caps).
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// A tolerance-driven computation failed to reach its target accuracy.
/// Carries the best estimate obtained before giving up.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double best_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

/// A search finished on a point that fails its local-optimum certificate.
class optimization_error : public std::runtime_error {
public:
    explicit optimization_error(const std::string& what) : std::runtime_error(what) {}
};

/// A certified construction (test function, damped factor) failed its
/// acceptance checks. The certificate JSON is attached for diagnostics.
class construction_error : public std::runtime_error {
public:
    construction_error(const std::string& what, std::string certificate_json)
        : std::runtime_error(what), certificate_json_(std::move(certificate_json)) {}

    const std::string& certificate_json() const noexcept { return certificate_json_; }

private:
    std::string certificate_json_;
};

}  // namespace littlewood
