#pragma once

#include <span>

#include "opmono/bmatrix.hpp"
#include "opmono/moment_system.hpp"

namespace opmono {

/// Throws std::invalid_argument unless X has one component, and
/// std::domain_error unless phi(X) = 0.
void validate_clt_input(const MomentSystem& x);

/// Limit of phi(b_1 X(N) b_2 ... b_n X(N)) for X(N) = (X_1 + ... + X_N)/sqrt(N):
/// the sum over monotone pair partitions pi of K_pi / |pi|!, zero for odd n.
BMatrix clt_limit(const MomentSystem& x, std::span<const BMatrix> args);

/// The same limit read off the dot polynomial P(N): its coefficient of
/// N^(n/2). Throws std::logic_error if deg P > floor(n/2).
BMatrix clt_oracle(const MomentSystem& x, std::span<const BMatrix> args);

}  // namespace opmono
