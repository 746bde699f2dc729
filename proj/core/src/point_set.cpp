#include "doily/point_set.hpp"

#include <algorithm>
#include <sstream>

namespace doily {

namespace {

void check_universe(int universe) {
  if (universe < 0 || universe > kMaxPoints) {
    throw CapacityError("point universe of size " + std::to_string(universe) +
                        " exceeds the limit of " + std::to_string(kMaxPoints));
  }
}

}  // namespace

PointSet::PointSet(int universe) : universe_(universe) { check_universe(universe); }

PointSet::PointSet(int universe, std::uint64_t bits) : universe_(universe), bits_(bits) {
  check_universe(universe);
  if ((bits & ~full_mask(universe)) != 0) {
    throw DomainError("point set has members outside [0, " + std::to_string(universe) + ")");
  }
}

PointSet::PointSet(int universe, std::initializer_list<int> members)
    : PointSet(universe, std::vector<int>(members)) {}

PointSet::PointSet(int universe, const std::vector<int>& members) : universe_(universe) {
  check_universe(universe);
  for (int p : members) {
    if (p < 0 || p >= universe) {
      throw DomainError("point " + std::to_string(p) + " outside [0, " +
                        std::to_string(universe) + ")");
    }
    bits_ |= std::uint64_t{1} << p;
  }
}

bool PointSet::is_subset_of(const PointSet& other) const {
  require_same_universe(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

std::vector<int> PointSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

PointSet PointSet::with(int p) const {
  if (p < 0 || p >= universe_) throw DomainError("point " + std::to_string(p) + " out of range");
  return PointSet(universe_, bits_ | (std::uint64_t{1} << p));
}

PointSet PointSet::without(int p) const {
  if (p < 0 || p >= universe_) throw DomainError("point " + std::to_string(p) + " out of range");
  return PointSet(universe_, bits_ & ~(std::uint64_t{1} << p));
}

PointSet operator|(const PointSet& a, const PointSet& b) {
  PointSet::require_same_universe(a, b);
  return PointSet(a.universe_, a.bits_ | b.bits_);
}

PointSet operator&(const PointSet& a, const PointSet& b) {
  PointSet::require_same_universe(a, b);
  return PointSet(a.universe_, a.bits_ & b.bits_);
}

PointSet operator^(const PointSet& a, const PointSet& b) {
  PointSet::require_same_universe(a, b);
  return PointSet(a.universe_, a.bits_ ^ b.bits_);
}

bool PointSet::lex_less(const PointSet& a, const PointSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string PointSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int p : members()) {
    if (!first) out << ',';
    out << p;
    first = false;
  }
  out << '}';
  return out.str();
}

void PointSet::require_same_universe(const PointSet& a, const PointSet& b) {
  if (a.universe_ != b.universe_) {
    throw DomainError("point sets over different universes (" + std::to_string(a.universe_) +
                      " vs " + std::to_string(b.universe_) + ")");
  }
}

}  // namespace doily
