#include "toric/series.hpp"

#include <algorithm>

namespace toric {

bool Truncation::admits(const std::vector<long>& e) const {
  if (static_cast<int>(e.size()) != vars()) return false;
  long tot = 0;
  for (int i = 0; i < vars(); ++i) {
    if (e[i] < 0 || e[i] > max_exp[i]) return false;
    tot += e[i];
  }
  return total < 0 || tot <= total;
}

int Truncation::max_degree() const {
  int m = max_exp.empty() ? 0 : *std::max_element(max_exp.begin(), max_exp.end());
  return total >= 0 ? std::min(m, total) : m;
}

}  // namespace toric
