#ifndef QBVP_CONDITION_HPP
#define QBVP_CONDITION_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "poly.hpp"
#include "real.hpp"

namespace qbvp {

// Raised when a method is asked for a boundary configuration it cannot
// express (e.g. a plain truncated-sum condition at an infinite boundary).
struct method_mismatch : std::runtime_error {
    explicit method_mismatch(const std::string& what) : std::runtime_error(what) {}
};

// An order-indexed auxiliary condition: a function of the connection
// parameter whose zeros are the per-order estimates of k*. Exact
// conditions also carry their polynomial form.
struct ConditionFn {
    std::string method;
    std::string problem;
    int order = 0;
    bool degenerate = false;  // identically zero; reported, never root-found
    std::optional<KPoly> exact;
    std::function<Real(const Real&)> numeric;

    Real operator()(const Real& k) const {
        if (degenerate) return Real(0);
        return numeric(k);
    }
};

}  // namespace qbvp

#endif
