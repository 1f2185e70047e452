#include "avgindep/set_family.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "avgindep/independence.hpp"

namespace avgindep {

SetFamily::SetFamily(std::uint64_t ground, std::vector<std::uint64_t> members)
    : ground_(ground), members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("empty set family");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(members_.size());
  for (std::uint64_t m : members_) {
    if ((m & ~ground_) != 0)
      throw std::invalid_argument("family member outside the ground set");
    if (!seen.insert(m).second)
      throw std::invalid_argument("duplicate family member");
  }
}

std::vector<std::uint64_t> SetFamily::size_profile() const {
  std::vector<std::uint64_t> n(65, 0);
  for (std::uint64_t m : members_) ++n[static_cast<std::size_t>(std::popcount(m))];
  return n;
}

Integer SetFamily::total_size() const {
  Integer s = 0;
  for (std::uint64_t m : members_) s += std::popcount(m);
  return s;
}

std::vector<std::uint64_t> SetFamily::restricted_members(int x) const {
  std::vector<std::uint64_t> out;
  const std::uint64_t b = std::uint64_t{1} << x;
  for (std::uint64_t m : members_)
    if ((m & b) == 0) out.push_back(m);
  return out;
}

bool SetFamily::all_same_cardinality() const {
  const int k = std::popcount(members_.front());
  return std::all_of(members_.begin(), members_.end(),
                     [k](std::uint64_t m) { return std::popcount(m) == k; });
}

Rational family_average(const SetFamily& f) {
  return Rational(f.total_size(), Integer(static_cast<unsigned long>(f.size())));
}

RestrictionSums restriction_sums_direct(const SetFamily& f) {
  RestrictionSums r{0, 0};
  for (std::uint64_t g = f.ground(); g != 0; g &= g - 1) {
    const int x = std::countr_zero(g);
    for (std::uint64_t m : f.restricted_members(x)) {
      r.sizes += std::popcount(m);
      r.counts += 1;
    }
  }
  return r;
}

RestrictionSums restriction_sums_closed_form(const SetFamily& f) {
  const Integer ground_size = std::popcount(f.ground());
  const Integer s = f.total_size();
  const auto n = f.size_profile();
  Integer squares = 0;
  for (std::size_t k = 0; k < n.size(); ++k)
    squares += Integer(static_cast<unsigned long>(k * k)) * static_cast<unsigned long>(n[k]);
  const Integer members = static_cast<unsigned long>(f.size());
  return {ground_size * s - squares, ground_size * members - s};
}

Rational averaged_restriction_ratio(const SetFamily& f) {
  const RestrictionSums r = restriction_sums_direct(f);
  if (r.counts == 0)
    throw std::invalid_argument("every restriction of the family is empty");
  return Rational(r.sizes, r.counts);
}

int find_decreasing_element(const SetFamily& f) {
  if (f.all_same_cardinality())
    throw std::invalid_argument("degenerate family: all members have the same cardinality");
  int best = -1;
  Rational best_avg;
  for (std::uint64_t g = f.ground(); g != 0; g &= g - 1) {
    const int x = std::countr_zero(g);
    Integer sizes = 0;
    unsigned long count = 0;
    for (std::uint64_t m : f.members()) {
      if (m & (std::uint64_t{1} << x)) continue;
      sizes += std::popcount(m);
      ++count;
    }
    if (count == 0) continue;
    const Rational avg(sizes, Integer(count));
    if (best < 0 || avg < best_avg) {
      best = x;
      best_avg = avg;
    }
  }
  if (best < 0 || !(best_avg < family_average(f)))
    throw std::logic_error("no decreasing element found for a non-degenerate family");
  return best;
}

SetFamily independent_family(const Graph& g) {
  if (g.order() > kBruteForceLimit)
    throw CapacityError("independent_family is limited to 25 vertices, got " +
                        std::to_string(g.order()));
  const VertexMask all = g.present();
  std::vector<std::uint64_t> members;
  VertexMask s = 0;
  do {
    if (g.is_independent(s)) members.push_back(s);
    s = (s - all) & all;
  } while (s != 0);
  return SetFamily(all, std::move(members));
}

}  // namespace avgindep
