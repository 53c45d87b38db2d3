#pragma once

namespace gda::limits {

// Hard ceilings for construction; everything downstream is sized for desk
// scale (codimension work grows like |T|^m).
inline constexpr int kMaxGroupOrder = 1024;
inline constexpr int kMaxSymmetricN = 5;
inline constexpr long kMaxRootOrder = 1024;

// Default number of lift attempts in cohomologous / solve_compatibility is
// 2*|T|; no sharp bound is known, so callers can raise it.
inline int default_max_lift(int group_order) { return 2 * group_order; }

// Rank oracle refuses degree sequences longer than this unless overridden.
inline constexpr int kDefaultOracleCap = 6;

// Work budget for codimension computations, compared against |T|^m.
inline constexpr long long kDefaultCodimBudget = 1'000'000'000LL;

}  // namespace gda::limits
