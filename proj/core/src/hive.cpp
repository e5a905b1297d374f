#include "lrkit/hive.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace lrkit {

Hive::Hive(int n) : n_(n), labels_(static_cast<std::size_t>(vertex_count(n))) {
  if (n < 1) throw InvalidArgument("hive size must be >= 1");
}

Int Hive::at(Vertex v) const {
  const auto& label = labels_[static_cast<std::size_t>(index(v))];
  if (!label) {
    throw InvalidArgument("hive vertex (" + std::to_string(v.row) + "," + std::to_string(v.col) + ") is unset");
  }
  return *label;
}

bool Hive::complete() const {
  for (const auto& l : labels_) {
    if (!l) return false;
  }
  return true;
}

bool Hive::valid() const {
  if (!complete()) return false;
  for (const auto& r : rhombus_constraints(n_)) {
    if (checked::add(at(r.b), at(r.c)) < checked::add(at(r.a), at(r.d))) return false;
  }
  return true;
}

std::string Hive::to_text() const {
  std::ostringstream os;
  for (int r = 0; r <= n_; ++r) {
    for (int c = 0; c <= r; ++c) {
      if (c) os << ' ';
      const auto& l = labels_[static_cast<std::size_t>(index({r, c}))];
      if (l) {
        os << *l;
      } else {
        os << '.';
      }
    }
    os << '\n';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Hive& h) { return os << h.to_text(); }

Hive hive_boundary(const Partition& lambda, const Partition& mu, const Partition& nu) {
  LRTriple triple(lambda, mu, nu);
  if (!triple.balanced()) {
    throw InvalidArgument("unbalanced triple: |ν| = " + std::to_string(nu.size()) + " but |λ|+|μ| = " +
                          std::to_string(lambda.size() + mu.size()));
  }
  const int n = lambda.rank();
  Hive h(n);
  Int sum = 0;
  for (int i = 0; i <= n; ++i) {
    h.set({n - i, 0}, sum);
    if (i < n) sum = checked::add(sum, lambda[i]);
  }
  sum = lambda.size();
  for (int i = 0; i <= n; ++i) {
    h.set({i, i}, sum);
    if (i < n) sum = checked::add(sum, mu[i]);
  }
  sum = 0;
  for (int i = 0; i <= n; ++i) {
    h.set({n, i}, sum);
    if (i < n) sum = checked::add(sum, nu[i]);
  }
  return h;
}

std::vector<RhombusConstraint> rhombus_constraints(int n) {
  std::vector<RhombusConstraint> out;
  if (n < 2) return out;
  out.reserve(static_cast<std::size_t>(3 * n * (n - 1) / 2));
  for (int r = 1; r < n; ++r) {
    // R1: shared edge (r,c)-(r+1,c).
    for (int c = 1; c <= r; ++c) {
      out.push_back({RhombusKind::R1, {r, c - 1}, {r, c}, {r + 1, c}, {r + 1, c + 1}});
    }
    // R2: shared edge (r,c)-(r,c+1).
    for (int c = 0; c < r; ++c) {
      out.push_back({RhombusKind::R2, {r - 1, c}, {r, c}, {r, c + 1}, {r + 1, c + 1}});
    }
    // R3: shared edge (r,c)-(r+1,c+1).
    for (int c = 0; c < r; ++c) {
      out.push_back({RhombusKind::R3, {r + 1, c}, {r, c}, {r + 1, c + 1}, {r, c + 1}});
    }
  }
  return out;
}

namespace {

/// label[plus1] + label[plus2] − label[minus], as a bound on one vertex.
struct Bound {
  int plus1, plus2, minus;
};

struct SearchPlan {
  std::vector<int> order;  // interior vertex indices, row-major from the apex
  std::vector<std::vector<Bound>> lower, upper;
  std::vector<RhombusConstraint> boundary_only;
};

bool is_interior(int n, Vertex v) { return v.row < n && v.col > 0 && v.col < v.row; }

SearchPlan build_plan(int n) {
  SearchPlan plan;
  std::vector<int> position(static_cast<std::size_t>(Hive::vertex_count(n)), -1);
  for (int r = 2; r < n; ++r) {
    for (int c = 1; c < r; ++c) {
      position[static_cast<std::size_t>(Hive::index({r, c}))] = static_cast<int>(plan.order.size());
      plan.order.push_back(Hive::index({r, c}));
    }
  }
  plan.lower.resize(plan.order.size());
  plan.upper.resize(plan.order.size());
  for (const auto& rc : rhombus_constraints(n)) {
    const std::array<Vertex, 4> vs{rc.a, rc.b, rc.c, rc.d};
    int last_slot = -1;
    int last_pos = -1;
    for (int s = 0; s < 4; ++s) {
      if (!is_interior(n, vs[static_cast<std::size_t>(s)])) continue;
      int p = position[static_cast<std::size_t>(Hive::index(vs[static_cast<std::size_t>(s)]))];
      if (p > last_pos) {
        last_pos = p;
        last_slot = s;
      }
    }
    if (last_slot < 0) {
      plan.boundary_only.push_back(rc);
      continue;
    }
    const int a = Hive::index(rc.a), b = Hive::index(rc.b), c = Hive::index(rc.c), d = Hive::index(rc.d);
    auto& lo = plan.lower[static_cast<std::size_t>(last_pos)];
    auto& hi = plan.upper[static_cast<std::size_t>(last_pos)];
    switch (last_slot) {
      case 0: hi.push_back({b, c, d}); break;  // a <= b + c − d
      case 1: lo.push_back({a, d, c}); break;  // b >= a + d − c
      case 2: lo.push_back({a, d, b}); break;  // c >= a + d − b
      case 3: hi.push_back({b, c, a}); break;  // d <= b + c − a
    }
  }
  return plan;
}

const SearchPlan& plan_for(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<SearchPlan>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SearchPlan>(build_plan(n));
  return *slot;
}

class HiveSearch {
 public:
  HiveSearch(const SearchPlan& plan, std::vector<Int> labels) : plan_(plan), labels_(std::move(labels)) {}

  bool boundary_feasible() const {
    for (const auto& rc : plan_.boundary_only) {
      if (checked::add(value(Hive::index(rc.b)), value(Hive::index(rc.c))) <
          checked::add(value(Hive::index(rc.a)), value(Hive::index(rc.d)))) {
        return false;
      }
    }
    return true;
  }

  /// Interval of admissible labels for the k-th interior vertex; empty when lo > hi.
  std::pair<Int, Int> interval(std::size_t k) const {
    Int lo = INT64_MIN;
    Int hi = INT64_MAX;
    for (const auto& b : plan_.lower[k]) lo = std::max(lo, eval(b));
    for (const auto& b : plan_.upper[k]) hi = std::min(hi, eval(b));
    return {lo, hi};
  }

  Int count(std::size_t k) {
    auto [lo, hi] = interval(k);
    if (lo > hi) return 0;
    if (k + 1 == plan_.order.size()) return checked::add(checked::sub(hi, lo), 1);
    Int total = 0;
    for (Int x = lo; x <= hi; ++x) {
      labels_[static_cast<std::size_t>(plan_.order[k])] = x;
      total = checked::add(total, count(k + 1));
    }
    return total;
  }

  void visit(std::size_t k, Hive& hive, const std::function<void(const Hive&)>& fn) {
    if (k == plan_.order.size()) {
      fn(hive);
      return;
    }
    auto [lo, hi] = interval(k);
    const int idx = plan_.order[k];
    const Vertex v = vertex_of(idx);
    for (Int x = lo; x <= hi; ++x) {
      labels_[static_cast<std::size_t>(idx)] = x;
      hive.set(v, x);
      visit(k + 1, hive, fn);
    }
    hive.clear(v);
  }

 private:
  static Vertex vertex_of(int idx) {
    int r = 0;
    while ((r + 1) * (r + 2) / 2 <= idx) ++r;
    return {r, idx - r * (r + 1) / 2};
  }

  Int value(int idx) const { return labels_[static_cast<std::size_t>(idx)]; }

  Int eval(const Bound& b) const {
    return checked::sub(checked::add(value(b.plus1), value(b.plus2)), value(b.minus));
  }

  const SearchPlan& plan_;
  std::vector<Int> labels_;
};

std::vector<Int> flat_labels(const Hive& h) {
  std::vector<Int> out(static_cast<std::size_t>(Hive::vertex_count(h.size())), 0);
  for (int r = 0; r <= h.size(); ++r) {
    for (int c = 0; c <= r; ++c) {
      if (h.is_set({r, c})) out[static_cast<std::size_t>(Hive::index({r, c}))] = h.at({r, c});
    }
  }
  return out;
}

}  // namespace

Int count_hives(const Partition& lambda, const Partition& mu, const Partition& nu) {
  LRTriple triple(lambda, mu, nu);
  if (!triple.balanced()) return 0;
  const Hive boundary = hive_boundary(lambda, mu, nu);
  const auto& plan = plan_for(lambda.rank());
  HiveSearch search(plan, flat_labels(boundary));
  if (!search.boundary_feasible()) return 0;
  if (plan.order.empty()) return 1;
  return search.count(0);
}

void enumerate_hives(const Partition& lambda, const Partition& mu, const Partition& nu,
                     const std::function<void(const Hive&)>& visit) {
  LRTriple triple(lambda, mu, nu);
  if (!triple.balanced()) return;
  Hive hive = hive_boundary(lambda, mu, nu);
  const auto& plan = plan_for(lambda.rank());
  HiveSearch search(plan, flat_labels(hive));
  if (!search.boundary_feasible()) return;
  search.visit(0, hive, visit);
}

LRTriple boundary_triple(const Hive& hive) {
  const int n = hive.size();
  std::vector<Int> lambda, mu, nu;
  for (int i = 1; i <= n; ++i) {
    lambda.push_back(hive.edge({n - i + 1, 0}, {n - i, 0}));
    mu.push_back(hive.edge({i - 1, i - 1}, {i, i}));
    nu.push_back(hive.edge({n, i - 1}, {n, i}));
  }
  return LRTriple(Partition(std::move(lambda)), Partition(std::move(mu)), Partition(std::move(nu)));
}

Hive restrict_hive(const Hive& hive) {
  const int n = hive.size();
  if (n < 4) throw InvalidArgument("restrict_hive needs a hive of size >= 4");
  if (!hive.complete()) throw InvalidArgument("restrict_hive needs a fully labelled hive");
  const LRTriple t = boundary_triple(hive);
  if (!is_near_rectangular(t.lambda) || !is_near_rectangular(t.mu) || t.lambda.last() != 0 || t.mu.last() != 0) {
    throw InvalidArgument("restrict_hive needs near-rectangular λ and μ with last part 0");
  }
  const int shift = n - 4;
  Hive out(4);
  auto place = [&](Vertex target, Int value) {
    if (out.is_set(target) && out.at(target) != value) {
      throw InvalidArgument("hive regions disagree at restricted vertex (" + std::to_string(target.row) + "," +
                            std::to_string(target.col) + ")");
    }
    out.set(target, value);
  };

  // North corner: top size-2 triangle, anchored at the apex label |λ'|.
  const Int target_apex = checked::add(t.lambda[0], checked::mul(2, t.lambda[1]));
  const Int north_offset = checked::sub(target_apex, hive.at({0, 0}));
  for (int r = 0; r <= 2; ++r) {
    for (int c = 0; c <= r; ++c) place({r, c}, checked::add(hive.at({r, c}), north_offset));
  }
  // South-east corner: bottom-right size-2 triangle, anchored at |ν'|.
  const Int target_corner = checked::add(checked::add(t.nu[0], t.nu[1]), checked::add(t.nu[n - 2], t.nu[n - 1]));
  const Int south_east_offset = checked::sub(target_corner, hive.at({n, n}));
  for (int r = n - 2; r <= n; ++r) {
    for (int c = n - 2; c <= r; ++c) place({r - shift, c - shift}, checked::add(hive.at({r, c}), south_east_offset));
  }
  // South-west corner: seven triangles next to the 0-labelled corner.
  const std::array<Vertex, 8> south_west{{{n - 2, 0}, {n - 2, 1}, {n - 1, 0}, {n - 1, 1}, {n - 1, 2},
                                          {n, 0}, {n, 1}, {n, 2}}};
  for (const auto& v : south_west) place({v.row - shift, v.col}, hive.at(v));

  if (!out.complete()) throw InvalidArgument("restricted hive is incomplete");
  const Partition lambda4 = near_rectangular(t.lambda[0], t.lambda[1], 0, 4);
  const Partition mu4 = near_rectangular(t.mu[0], t.mu[1], 0, 4);
  const Partition nu4({t.nu[0], t.nu[1], t.nu[n - 2], t.nu[n - 1]});
  if (!(boundary_triple(out).nu == nu4) || !(boundary_triple(out).lambda == lambda4) ||
      !(boundary_triple(out).mu == mu4)) {
    throw InvalidArgument("restricted hive does not carry the truncated boundary");
  }
  return out;
}

}  // namespace lrkit
