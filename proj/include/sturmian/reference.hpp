#pragma once

// Reference implementations used only to cross-check the main code paths.
// They deliberately take different routes: rational Gaussian elimination
// instead of fraction-free integer elimination, trial division for phi.

#include <cstdint>

#include "sturmian/gram.hpp"

namespace sturmian::reference {

// Rank-based kernel dimension via textbook Gaussian elimination over mpq.
std::int64_t nullity_rational(const IntMatrix& m);

std::int64_t euler_phi(std::int64_t n);

// phi(1) + ... + phi(n).
std::int64_t phi_sum(std::int64_t n);

}  // namespace sturmian::reference
