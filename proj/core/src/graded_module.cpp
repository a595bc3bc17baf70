#include "gbh/graded_module.hpp"

#include <algorithm>
#include <sstream>

namespace gbh {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

namespace detail {

std::vector<std::vector<int>> edge_subsets(int edges, int size) {
  std::vector<std::vector<int>> out;
  if (size < 0 || size > edges) return out;
  std::vector<int> current(size);
  for (int i = 0; i < size; ++i) current[i] = i;
  for (;;) {
    out.push_back(current);
    int i = size - 1;
    while (i >= 0 && current[i] == edges - size + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < size; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

int subset_index(const std::vector<std::vector<int>>& subsets, const std::vector<int>& s) {
  auto it = std::lower_bound(subsets.begin(), subsets.end(), s);
  return static_cast<int>(it - subsets.begin());
}

}  // namespace detail

std::string betti_table_csv(const BettiTable& t) {
  std::ostringstream os;
  os << "p,j,beta\n";
  for (const auto& [pj, beta] : t.entries) os << pj.first << "," << pj.second << "," << beta << "\n";
  return os.str();
}

}  // namespace gbh
