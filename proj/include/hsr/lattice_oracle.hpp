#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <span>

namespace hsr {

/// |m Delta(d, n) cap Z^n|, or the relative-interior count when strict.
///
/// m Delta(d, n) is the set of x in R^n with 0 <= x_i <= m and sum x_i = d m;
/// its relative interior replaces the bounds by 1 <= x_i <= m - 1.
struct CountQuery {
  int d = 1;
  int n = 2;
  long m = 0;
  bool strict = false;
};

/// Dynamic program over coordinates and partial sums.  Never touches the
/// closed-form Ehrhart polynomial.  Throws InvalidParams on bad (d, n) or m < 0.
[[nodiscard]] mpz_class count_points(const CountQuery& q);

/// Largest search space accepted by the naive enumerators.
inline constexpr std::uint64_t kNaiveEnumerationLimit = 10'000'000;

/// Full (m+1)^n enumeration; throws DomainViolation above kNaiveEnumerationLimit.
[[nodiscard]] mpz_class count_points_naive(const CountQuery& q);

/// Calls visit(x) for every lattice point counted by q, in lexicographic order.
void for_each_point(const CountQuery& q, const std::function<void(std::span<const long>)>& visit);

/// Membership in the lattice generated by the vertices of Delta(d, n), read as
/// {x in Z^n : sum x_i = 0 mod d}.  Throws DimensionMismatch if x.size() <= d.
[[nodiscard]] bool in_sublattice(std::span<const long> x, int d);

}  // namespace hsr
