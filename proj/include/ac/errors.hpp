#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ac {

// Error hierarchy shared by the whole library.  Each class maps onto one
// stable CLI exit code (see tools/actool.cpp and README): parse 3,
// precondition 4, invariant 5; dimension and capacity problems are caller
// mistakes and surface as usage-level failures.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched tuple widths, wrong input length, out-of-range coordinate.
struct dimension_error : error {
    using error::error;
};

// A request outside the supported problem sizes (explicit 2^n blowups).
struct capacity_error : error {
    using error::error;
};

// Malformed text input (circuit or certificate files, table strings).
struct parse_error : error {
    using error::error;
};

// A documented operation precondition does not hold (e.g. a circuit fed to
// the parity adversary does not compute parity).
struct precondition_error : error {
    using error::error;
};

// A "must never happen" internal check failed; carries context such as the
// adversary transcript so the failure is auditable.
struct invariant_violation : error {
    explicit invariant_violation(const std::string& what, std::string context = {})
        : error(what), context_(std::move(context)) {}

    const std::string& context() const noexcept { return context_; }

private:
    std::string context_;
};

}  // namespace ac
