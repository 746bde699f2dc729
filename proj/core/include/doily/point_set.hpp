#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "doily/errors.hpp"

namespace doily {

inline constexpr int kMaxPoints = 64;

// Mask with the low `v` bits set.
constexpr std::uint64_t full_mask(int v) {
  return v >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1;
}

// A subset of the points {0, ..., universe-1}, stored as one machine word.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int universe);
  PointSet(int universe, std::uint64_t bits);
  PointSet(int universe, std::initializer_list<int> members);
  PointSet(int universe, const std::vector<int>& members);

  static PointSet full(int universe) { return PointSet(universe, full_mask(universe)); }

  int universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == full_mask(universe_); }

  bool contains(int p) const {
    return p >= 0 && p < universe_ && ((bits_ >> p) & 1u) != 0;
  }
  bool is_subset_of(const PointSet& other) const;

  // Ascending member list.
  std::vector<int> members() const;

  PointSet complement() const { return PointSet(universe_, ~bits_ & full_mask(universe_)); }
  PointSet with(int p) const;
  PointSet without(int p) const;

  friend PointSet operator|(const PointSet& a, const PointSet& b);
  friend PointSet operator&(const PointSet& a, const PointSet& b);
  friend PointSet operator^(const PointSet& a, const PointSet& b);

  friend bool operator==(const PointSet& a, const PointSet& b) = default;

  // Lexicographic comparison of the ascending member lists.
  static bool lex_less(const PointSet& a, const PointSet& b);

  std::string to_string() const;

 private:
  static void require_same_universe(const PointSet& a, const PointSet& b);

  int universe_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace doily
