#pragma once

// k-strict partitions in the (n-k) x (n+k) rectangle: the index set of the
// Schubert bases of IG(n-k, 2n) and OG(n-k, 2n+1).

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "isogr/errors.hpp"

namespace isogr {

struct RectangleBound {
  int rows = 0;
  int cols = 0;

  bool fits(const std::vector<int>& parts) const {
    return static_cast<int>(parts.size()) <= rows && (parts.empty() || parts.front() <= cols);
  }
};

inline void check_partition_shape(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw StructuralError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw StructuralError("partition parts must be weakly decreasing");
  }
}

/// No part larger than k is repeated.
inline bool is_k_strict(const std::vector<int>& parts, int k) {
  check_partition_shape(parts);
  for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
    if (parts[j] > k && parts[j + 1] == parts[j]) return false;
  }
  return true;
}

class KStrictPartition {
 public:
  KStrictPartition(int k, std::vector<int> parts) : k_(k), parts_(std::move(parts)) {
    if (k_ < 0) throw DomainError("k must be non-negative");
    if (!is_k_strict(parts_, k_)) throw DomainError("partition " + to_string() + " is not " + std::to_string(k_) + "-strict");
  }

  int k() const { return k_; }
  const std::vector<int>& parts() const { return parts_; }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  int length() const { return static_cast<int>(parts_.size()); }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const KStrictPartition&, const KStrictPartition&) = default;

 private:
  int k_;
  std::vector<int> parts_;
};

inline RectangleBound rectangle_for(int k, int n) { return {n - k, n + k}; }

inline void check_kn(int k, int n) {
  if (k < 0 || n < 0) throw DomainError("k and n must be non-negative");
  if (k > n) throw DomainError("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
}

/// Partitions of the (n-k) x (n+k) rectangle, ordered by size then
/// lexicographically on the parts; strictness is enforced while generating.
/// With size set, only partitions of exactly that size are generated.
inline std::vector<KStrictPartition> enumerate_partitions(int k, int n, std::optional<int> size = std::nullopt) {
  check_kn(k, n);
  const RectangleBound box = rectangle_for(k, n);
  std::vector<std::vector<int>> found;
  std::vector<int> cur;
  const int budget = size.value_or(box.rows * box.cols);
  std::function<void(int, int)> rec = [&](int max_part, int remaining) {
    if (!size || remaining == 0) found.push_back(cur);
    if (static_cast<int>(cur.size()) == box.rows || remaining == 0) return;
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
      // parts above k may not repeat
      if (!cur.empty() && p == cur.back() && p > k) continue;
      cur.push_back(p);
      rec(p, remaining - p);
      cur.pop_back();
    }
  };
  rec(box.cols, budget);
  std::sort(found.begin(), found.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    if (sa != sb) return sa < sb;
    return a < b;
  });
  std::vector<KStrictPartition> out;
  out.reserve(found.size());
  for (auto& parts : found) {
    out.emplace_back(k, std::move(parts));
  }
  return out;
}

/// Cohomological degree 2|lambda| -> number of partitions of that size.
inline std::map<int, int> betti_profile(int k, int n) {
  std::map<int, int> profile;
  for (const auto& p : enumerate_partitions(k, n)) ++profile[2 * p.size()];
  return profile;
}

/// Complex dimension of IG(n-k, 2n), the size of the largest k-strict
/// partition in the rectangle.
inline int grassmannian_dimension(int k, int n) {
  check_kn(k, n);
  return (n - k) * (n + k) - (n - k) * (n - k - 1) / 2;
}

/// All k-strict partitions of size d with no bound on rows or columns; these
/// index the degree-2d part of the stable rings.
inline std::vector<std::vector<int>> stable_partitions_of_size(int k, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int max_part, int remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
      if (!cur.empty() && p == cur.back() && p > k) continue;
      cur.push_back(p);
      rec(p, remaining - p);
      cur.pop_back();
    }
  };
  rec(d, d);
  std::sort(out.begin(), out.end());
  return out;
}

/// Every partition of d, lexicographically increasing.
inline std::vector<std::vector<int>> partitions_of(int d) { return stable_partitions_of_size(d, d); }

inline nlohmann::json to_json(const KStrictPartition& p) { return p.parts(); }

}  // namespace isogr
