#ifndef LEVELCOMB_CERTIFICATE_HPP
#define LEVELCOMB_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "levelcomb/common.hpp"

namespace levelcomb {

inline constexpr const char* kToolVersion = "1.0.0";

struct CertificateItem {
    std::string id;
    std::string params;
    std::string status; // pass | fail | error
    std::string details;
    nat duration_ms = 0;
};

struct Certificate {
    std::string version = kToolVersion;
    std::string scope;
    nat depth = 0;
    nat seed = 0;
    std::vector<CertificateItem> checks;
    bool pass = false;

    std::string to_json() const;
    static Certificate from_json(const std::string& text);
};

/// Names of the registered invariant checks, in execution order.
std::vector<std::string> certificate_check_ids();

/// Runs every registered check whose id starts with the scope (or all when
/// scope is "all"). Individual check failures and errors are recorded in the
/// certificate and never abort the run.
Certificate run_certificate(const std::string& scope, nat depth, nat seed);

} // namespace levelcomb

#endif
