#include "lrkit/tableaux.hpp"

#include <algorithm>
#include <vector>

namespace lrkit::oracle {

namespace {

struct Cell {
  int row;
  int col;
};

class TableauCounter {
 public:
  TableauCounter(const Partition& lambda, const Partition& mu, const Partition& nu) : lambda_(lambda) {
    for (int i = 0; i < mu.rank(); ++i) {
      if (mu[i] > 0) content_.push_back(mu[i]);
    }
    used_.assign(content_.size(), 0);
    // Reading order: rows top to bottom, each row right to left.
    for (int r = 0; r < nu.rank(); ++r) {
      for (Int c = nu[r] - 1; c >= (r < lambda.rank() ? lambda[r] : 0); --c) {
        cells_.push_back({r, static_cast<int>(c)});
      }
    }
    rows_.resize(static_cast<std::size_t>(nu.rank()));
    for (int r = 0; r < nu.rank(); ++r) rows_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[r]), 0);
  }

  Int count(std::size_t k) {
    if (k == cells_.size()) return 1;
    const Cell cell = cells_[k];
    const auto row = static_cast<std::size_t>(cell.row);
    const auto col = static_cast<std::size_t>(cell.col);
    // Row weakly increases left to right: bounded above by the entry to the right.
    int hi = static_cast<int>(content_.size());
    if (col + 1 < rows_[row].size()) hi = std::min(hi, rows_[row][col + 1]);
    // Column strictly increases downward: bounded below by the entry above,
    // when that cell belongs to the skew shape.
    int lo = 1;
    if (row > 0 && static_cast<Int>(col) >= lambda_inner(cell.row - 1)) lo = rows_[row - 1][col] + 1;
    Int total = 0;
    for (int v = lo; v <= hi; ++v) {
      const auto slot = static_cast<std::size_t>(v - 1);
      if (used_[slot] >= content_[slot]) continue;
      if (v > 1 && used_[slot] + 1 > used_[slot - 1]) continue;  // lattice condition
      ++used_[slot];
      rows_[row][col] = v;
      total = checked::add(total, count(k + 1));
      rows_[row][col] = 0;
      --used_[slot];
    }
    return total;
  }

 private:
  Int lambda_inner(int r) const { return r < lambda_.rank() ? lambda_[r] : 0; }

  const Partition& lambda_;
  std::vector<Int> content_;
  std::vector<Int> used_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> rows_;
};

}  // namespace

Int lr_tableaux_count(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != checked::add(lambda.size(), mu.size())) return 0;
  if (!nu.contains(lambda)) return 0;
  if (lambda.length() > nu.rank()) return 0;
  TableauCounter counter(lambda, mu, nu);
  return counter.count(0);
}

bool lr_conjugation_check(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const int rank = static_cast<int>(std::max({lambda.first(), mu.first(), nu.first(), Int{1}}));
  const Int direct = lr_tableaux_count(lambda, mu, nu);
  const Int conjugated =
      lr_tableaux_count(conjugate(lambda, rank), conjugate(mu, rank), conjugate(nu, rank));
  return direct == conjugated;
}

}  // namespace lrkit::oracle
