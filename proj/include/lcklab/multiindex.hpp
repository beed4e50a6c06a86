#pragma once

#include <algorithm>
#include <map>
#include <vector>

namespace lck {

using MultiIndex = std::vector<int>;  // strictly increasing entries in [0, m)

/// Enumeration and ranking of strictly increasing multi-indices, the
/// storage order for form components. Tables are tiny (m <= 8 in practice)
/// and cached per (m, k).
class IndexTable {
 public:
  IndexTable(int m, int k) : m_(m), k_(k) {
    MultiIndex cur(k);
    build(cur, 0, 0);
    for (int i = 0; i < static_cast<int>(list_.size()); ++i) rank_[list_[i]] = i;
  }

  static const IndexTable& get(int m, int k);

  int size() const { return static_cast<int>(list_.size()); }
  const MultiIndex& at(int i) const { return list_[i]; }
  int rank(const MultiIndex& J) const { return rank_.at(J); }

 private:
  void build(MultiIndex& cur, int pos, int start) {
    if (pos == k_) {
      list_.push_back(cur);
      return;
    }
    for (int v = start; v < m_; ++v) {
      cur[pos] = v;
      build(cur, pos + 1, v + 1);
    }
  }

  int m_, k_;
  std::vector<MultiIndex> list_;
  std::map<MultiIndex, int> rank_;
};

inline int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

/// Sorts `idx` in place, returns the sign of the permutation, or 0 if a
/// repeated entry occurs.
inline int sort_sign(MultiIndex& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

}  // namespace lck
