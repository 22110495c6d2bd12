#include "hsr/lattice_oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "hsr/ehrhart.hpp"
#include "hsr/error.hpp"

namespace hsr {

namespace {

struct Box {
  long lo;
  long hi;
  long target;
};

Box box_for(const CountQuery& q) {
  HypersimplexParams params(q.d, q.n);  // validates
  if (q.m < 0) throw InvalidParams("dilation m must be nonnegative");
  const long target = static_cast<long>(q.d) * q.m;
  if (q.strict) return {1, q.m - 1, target};
  return {0, q.m, target};
}

void check_naive_size(const CountQuery& q) {
  const double space = std::pow(static_cast<double>(q.m + 1), q.n);
  if (space > static_cast<double>(kNaiveEnumerationLimit)) {
    throw DomainViolation("naive enumeration of " + std::to_string(q.n) + " coordinates in [0," +
                          std::to_string(q.m) + "] exceeds the size guard");
  }
}

}  // namespace

mpz_class count_points(const CountQuery& q) {
  const Box box = box_for(q);
  if (box.hi < box.lo) return 0;
  // Shift every coordinate to y_i = x_i - lo in [0, width].
  const long width = box.hi - box.lo;
  const long target = box.target - static_cast<long>(q.n) * box.lo;
  if (target < 0 || target > width * q.n) return 0;

  // ways[t] = number of prefixes with coordinate sum t.
  std::vector<mpz_class> ways(static_cast<std::size_t>(target) + 1);
  ways[0] = 1;
  std::vector<mpz_class> prefix(ways.size() + 1);
  for (int coord = 0; coord < q.n; ++coord) {
    prefix[0] = 0;
    for (std::size_t t = 0; t < ways.size(); ++t) prefix[t + 1] = prefix[t] + ways[t];
    for (long t = 0; t <= target; ++t) {
      const long from = std::max(0L, t - width);
      ways[t] = prefix[t + 1] - prefix[from];
    }
  }
  return ways[target];
}

void for_each_point(const CountQuery& q, const std::function<void(std::span<const long>)>& visit) {
  const Box box = box_for(q);
  check_naive_size(q);
  if (box.hi < box.lo) return;
  std::vector<long> x(static_cast<std::size_t>(q.n), box.lo);
  while (true) {
    long sum = 0;
    for (long v : x) sum += v;
    if (sum == box.target) visit(x);
    // Odometer increment, last coordinate fastest.
    int i = q.n - 1;
    while (i >= 0 && x[i] == box.hi) {
      x[i] = box.lo;
      --i;
    }
    if (i < 0) break;
    ++x[i];
  }
}

mpz_class count_points_naive(const CountQuery& q) {
  mpz_class count = 0;
  for_each_point(q, [&count](std::span<const long>) { ++count; });
  return count;
}

bool in_sublattice(std::span<const long> x, int d) {
  if (d < 1) throw InvalidParams("d must be positive");
  if (x.size() <= static_cast<std::size_t>(d)) {
    throw DimensionMismatch("sublattice test needs n >= d + 1 coordinates, got " +
                            std::to_string(x.size()) + " for d=" + std::to_string(d));
  }
  long sum = 0;
  for (long v : x) sum += v;
  return sum % d == 0;
}

}  // namespace hsr
