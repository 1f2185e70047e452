#pragma once

#include <cstdint>
#include <vector>

#include "avgindep/graph.hpp"
#include "avgindep/rational.hpp"

namespace avgindep {

/// Explicit family of distinct subsets of a ground set, both as bitmasks
/// over elements 0..63.
class SetFamily {
 public:
  /// Throws std::invalid_argument if `members` is empty, contains a
  /// duplicate, or has a member outside `ground`.
  SetFamily(std::uint64_t ground, std::vector<std::uint64_t> members);

  std::uint64_t ground() const { return ground_; }
  const std::vector<std::uint64_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  /// n_k: number of members of cardinality k, for k = 0..64.
  std::vector<std::uint64_t> size_profile() const;
  /// S: summed member cardinality.
  Integer total_size() const;
  /// Members avoiding element x, i.e. the family intersected with P(X - x).
  /// Empty when every member contains x.
  std::vector<std::uint64_t> restricted_members(int x) const;
  bool all_same_cardinality() const;

 private:
  std::uint64_t ground_;
  std::vector<std::uint64_t> members_;
};

/// av(B) = S(B) / |B|.
Rational family_average(const SetFamily& f);

/// Right-hand side of the averaged inequality: the summed sizes of all
/// single-element restrictions over their summed cardinalities.
Rational averaged_restriction_ratio(const SetFamily& f);

/// Closed forms for the two sums in averaged_restriction_ratio:
/// |X| S(B) - sum_k k^2 n_k(B) and |X| |B| - S(B).
struct RestrictionSums {
  Integer sizes;
  Integer counts;
};
RestrictionSums restriction_sums_direct(const SetFamily& f);
RestrictionSums restriction_sums_closed_form(const SetFamily& f);

/// Element x0 whose restriction is nonempty with strictly smaller average,
/// chosen as the argmin of the restricted average (smallest element on
/// ties). std::invalid_argument("degenerate family") if all members have
/// equal cardinality.
int find_decreasing_element(const SetFamily& f);

/// All independent sets of g, ground set g.present(). CapacityError above
/// 25 vertices.
SetFamily independent_family(const Graph& g);

}  // namespace avgindep
