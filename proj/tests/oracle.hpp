#pragma once

// Brute-force reference computations for the tests. Everything here works on
// plain line lists and deliberately avoids the library's bitset machinery and
// search code, so agreement between the two is meaningful.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "doily/incidence.hpp"

namespace oracle {

using Lines = std::vector<std::vector<int>>;

inline bool on_line(const std::vector<int>& line, int p) {
  return std::find(line.begin(), line.end(), p) != line.end();
}

inline bool collinear(const Lines& lines, int p, int q) {
  for (const auto& l : lines) {
    if (on_line(l, p) && on_line(l, q)) return true;
  }
  return false;
}

inline std::vector<int> non_collinear(const Lines& lines, int v, int p) {
  std::vector<int> out;
  for (int q = 0; q < v; ++q) {
    if (q != p && !collinear(lines, p, q)) out.push_back(q);
  }
  return out;
}

inline int intersection_size(const std::vector<int>& line, const std::vector<bool>& in) {
  int n = 0;
  for (int p : line) n += in[p] ? 1 : 0;
  return n;
}

inline bool is_hyperplane(const Lines& lines, const std::vector<bool>& in) {
  const auto members = std::count(in.begin(), in.end(), true);
  if (members == 0 || members == static_cast<long>(in.size())) return false;
  for (const auto& l : lines) {
    const int hit = intersection_size(l, in);
    if (hit != 1 && hit != static_cast<int>(l.size())) return false;
  }
  return true;
}

// All hyperplanes as ascending member lists, ordered by size then lexically.
inline std::vector<std::vector<int>> hyperplanes(const Lines& lines, int v) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t m = 0; m < (1u << v); ++m) {
    std::vector<bool> in(v);
    for (int p = 0; p < v; ++p) in[p] = (m >> p) & 1u;
    if (!is_hyperplane(lines, in)) continue;
    std::vector<int> members;
    for (int p = 0; p < v; ++p) {
      if (in[p]) members.push_back(p);
    }
    out.push_back(members);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

inline long triangles(const Lines& lines, int v) {
  long count = 0;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      for (int c = b + 1; c < v; ++c) {
        if (!collinear(lines, a, b) || !collinear(lines, a, c) || !collinear(lines, b, c)) continue;
        bool common = false;
        for (const auto& l : lines) {
          if (on_line(l, a) && on_line(l, b) && on_line(l, c)) common = true;
        }
        if (!common) ++count;
      }
    }
  }
  return count;
}

inline bool gq_axiom(const Lines& lines, int v) {
  for (const auto& l : lines) {
    for (int p = 0; p < v; ++p) {
      if (on_line(l, p)) continue;
      int seen = 0;
      for (int q : l) seen += collinear(lines, p, q) ? 1 : 0;
      if (seen != 1) return false;
    }
  }
  return true;
}

inline std::set<std::vector<int>> normalized(const Lines& lines) {
  std::set<std::vector<int>> out;
  for (auto l : lines) {
    std::sort(l.begin(), l.end());
    out.insert(l);
  }
  return out;
}

inline Lines relabel(const Lines& lines, const std::vector<int>& perm) {
  Lines out;
  for (const auto& l : lines) {
    std::vector<int> image;
    for (int p : l) image.push_back(perm[p]);
    std::sort(image.begin(), image.end());
    out.push_back(image);
  }
  return out;
}

inline bool is_automorphism(const Lines& lines, const std::vector<int>& perm) {
  return normalized(relabel(lines, perm)) == normalized(lines);
}

// Group order by trying every point permutation (v <= 10). Each candidate is
// rejected at the first line whose image is not a line.
inline long automorphism_count(const Lines& lines, int v) {
  std::vector<std::uint64_t> keys;
  for (const auto& l : lines) {
    std::uint64_t m = 0;
    for (int p : l) m |= std::uint64_t{1} << p;
    keys.push_back(m);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < lines.size() && ok; ++i) {
      std::uint64_t m = 0;
      for (int p : lines[i]) m |= std::uint64_t{1} << perm[p];
      ok = std::binary_search(keys.begin(), keys.end(), m);
    }
    count += ok ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Smallest sorted relabeled mask list over every permutation (v <= 9).
inline std::vector<std::uint64_t> brute_canonical(const Lines& lines, int v) {
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::uint64_t> masks;
    for (const auto& l : lines) {
      std::uint64_t m = 0;
      for (int p : l) m |= std::uint64_t{1} << perm[p];
      masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    if (best.empty() || masks < best) best = masks;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every labeled v_3 configuration on {0..v-1}: line sets chosen in
// increasing lexicographic order with degree and linearity constraints.
inline std::vector<Lines> labeled_v3(int v) {
  std::vector<std::vector<int>> triples;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      for (int c = b + 1; c < v; ++c) triples.push_back({a, b, c});
    }
  }
  std::vector<Lines> out;
  Lines current;
  std::vector<int> degree(v, 0);
  std::vector<std::vector<int>> together(v, std::vector<int>(v, 0));
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(current.size()) == v) {
      out.push_back(current);
      return;
    }
    // The smallest point still short of degree 3 must be on the next line,
    // since later lines start at larger points.
    int low = -1;
    for (int p = 0; p < v; ++p) {
      if (degree[p] < 3) {
        low = p;
        break;
      }
    }
    for (std::size_t t = from; t < triples.size(); ++t) {
      const auto& tr = triples[t];
      if (tr[0] > low) break;
      if (tr[0] != low) continue;
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        if (degree[tr[i]] >= 3) ok = false;
        for (int j = i + 1; j < 3 && ok; ++j) {
          if (together[tr[i]][tr[j]] > 0) ok = false;
        }
      }
      if (!ok) continue;
      auto touch = [&](int delta) {
        for (int i = 0; i < 3; ++i) {
          degree[tr[i]] += delta;
          for (int j = 0; j < 3; ++j) {
            if (i != j) together[tr[i]][tr[j]] += delta;
          }
        }
      };
      touch(+1);
      current.push_back(tr);
      self(self, t + 1);
      current.pop_back();
      touch(-1);
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<int> random_permutation(int v, std::mt19937& rng) {
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
