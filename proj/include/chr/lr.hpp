#pragma once

#include <cstddef>

#include "chr/expr.hpp"
#include "chr/partition.hpp"

namespace chr {

// Littlewood-Richardson engine. Both entry points are backed by a
// process-wide read-through cache that is safe to hit from several threads;
// results are pure functions of the arguments, so the cache contents never
// depend on interleaving. Returned references stay valid for the lifetime
// of the program.

/// Expansion of the skew Schur function s_{outer/inner} in the Schur basis:
/// the coefficient of nu is c^{outer}_{inner,nu}. Zero expression when
/// inner is not contained in outer.
const SymExpr& skew_expansion(const Partition& outer, const Partition& inner);

/// Expansion of s_mu * s_nu in the Schur basis.
const SymExpr& product_expansion(const Partition& mu, const Partition& nu);

/// The Littlewood-Richardson coefficient c^lambda_{mu,nu}.
Int lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda);

std::size_t lr_cache_size();
void lr_cache_clear();

} // namespace chr
