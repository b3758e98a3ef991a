#pragma once

#include <stdexcept>
#include <string>

namespace trojan {

/// Parameter lies outside the Trojan stability window 8/9 < q <= 1.
class stability_domain_error : public std::domain_error {
public:
    explicit stability_domain_error(const std::string& what)
        : std::domain_error(what) {}
};

/// Quantity diverges at a stability border (B = 0 at q = 1, A = B = 0 at q = 8/9).
class border_singularity_error : public std::domain_error {
public:
    explicit border_singularity_error(const std::string& what)
        : std::domain_error(what) {}
};

} // namespace trojan
