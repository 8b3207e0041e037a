#pragma once

#include "tanaka/algebra.hpp"
#include "tanaka/pencil.hpp"

#include <map>
#include <string>
#include <vector>

namespace tanaka::catalog {

/// X:-1, Z_i:-i (i = 1..n-1), [X, Z_i] = Z_{i+1}. Requires n >= 2.
Algebra goursat(std::size_t n);
/// dim = 2n+1: [X_i, Y_i] = Z (X, Y, Z when n = 1).
Algebra heisenberg(std::size_t dim);
/// Trivial special extension of heisenberg(3) of length k: X, Z1, Z2, Y1..Yk.
Algebra mixedjet(std::size_t k);
/// The non-trivial special extension of heisenberg(3) with [Z1, Z2] = Y3.
Algebra nontrivial6();
/// Free 2-step algebra on X1, X2, X3 with [X_i, X_j] = X_ij.
Algebra free2step3();
/// X1..Xk, Y1..Y3 with [X_i, X_{k+1-i}] = Y1, [X_i, X_{k-i}] = Y2, [X_i, X_{k+2-i}] = Y3 (i >= 2).
Algebra kgen(std::size_t k);
Algebra from_pencil(const PencilSpec& spec);

/// Names accepted by `build`, with their parameter keys.
const std::vector<std::string>& names();

/// Builds a named algebra; params are n (goursat), dim (heisenberg),
/// k (mixedjet, kgen) and blocks (from_pencil). Throws std::invalid_argument.
Algebra build(const std::string& name, const std::map<std::string, std::string>& params = {});

} // namespace tanaka::catalog
