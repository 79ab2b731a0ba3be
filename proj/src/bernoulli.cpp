#include "lsv/bernoulli.hpp"

#include <mutex>

namespace lsv {

namespace {

std::mutex table_mutex;
std::vector<Rational> table;  // guarded by table_mutex

// Solve -n B_n = sum_{k=1}^{n} C(n,k) B_k B_{n-k} + n B_{n-1} for B_n:
// the k = n term on the right is B_n itself, so
//
//   B_n = -( sum_{k=1}^{n-1} C(n,k) B_k B_{n-k} + n B_{n-1} ) / (n+1).
void extend_locked(std::size_t n) {
  if (table.empty()) table.emplace_back(1);
  for (std::size_t m = table.size(); m <= n; ++m) {
    Rational sum(0);
    for (std::size_t k = 1; k < m; ++k)
      sum += binomial(m, static_cast<long>(k)) * table[k] * table[m - k];
    sum += Rational(static_cast<long>(m)) * table[m - 1];
    table.push_back(-sum / Rational(static_cast<long>(m) + 1));
  }
}

}  // namespace

Rational bernoulli(std::size_t n) {
  std::lock_guard<std::mutex> lock(table_mutex);
  extend_locked(n);
  return table[n];
}

std::vector<Rational> bernoulli_table(std::size_t max) {
  std::lock_guard<std::mutex> lock(table_mutex);
  extend_locked(max);
  return std::vector<Rational>(table.begin(), table.begin() + max + 1);
}

}  // namespace lsv
