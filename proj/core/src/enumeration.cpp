#include "lrkit/enumeration.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "lrkit/error.hpp"
#include "lrkit/formulas.hpp"
#include "lrkit/hive.hpp"
#include "lrkit/piecewise.hpp"
#include "lrkit/tableaux.hpp"

namespace lrkit {

namespace {

void require_same_rank(const Partition& lambda, const Partition& mu) {
  if (lambda.rank() != mu.rank()) throw InvalidArgument("λ and μ have different ranks");
}

bool closed_form_applies(const Partition& lambda_bar, const Partition& mu_bar) {
  const int n = lambda_bar.rank();
  if (n == 3) return true;
  return n >= 4 && is_near_rectangular(lambda_bar) && is_near_rectangular(mu_bar);
}

/// ν − (shift)^n, or nothing if a part goes negative.
std::optional<Partition> shift_down(const Partition& nu, Int shift) {
  std::vector<Int> parts(nu.parts().begin(), nu.parts().end());
  for (auto& p : parts) {
    p = checked::sub(p, shift);
    if (p < 0) return std::nullopt;
  }
  return Partition(std::move(parts));
}

Int closed_coefficient(const Partition& lambda_bar, const Partition& mu_bar, const Partition& nu_bar) {
  if (lambda_bar.rank() == 3) return gl3_coefficient(lambda_bar, mu_bar, nu_bar);
  return nr_coefficient(lambda_bar, mu_bar, nu_bar);
}

Partition fundamental(Int k1, Int k2, int n) { return from_fundamental({k1, k2, n}); }

}  // namespace

Backend parse_backend(const std::string& name) {
  if (name == "auto") return Backend::Auto;
  if (name == "hive") return Backend::Hive;
  if (name == "tableaux") return Backend::Tableaux;
  if (name == "closed") return Backend::Closed;
  throw InvalidArgument("unknown backend '" + name + "'");
}

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::Auto: return "auto";
    case Backend::Hive: return "hive";
    case Backend::Tableaux: return "tableaux";
    case Backend::Closed: return "closed";
  }
  return "auto";
}

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, Backend backend) {
  require_same_rank(lambda, mu);
  if (nu.rank() != lambda.rank()) throw InvalidArgument("ν has a different rank");
  if (nu.size() != checked::add(lambda.size(), mu.size())) return 0;
  switch (backend) {
    case Backend::Hive: return count_hives(lambda, mu, nu);
    case Backend::Tableaux: return oracle::lr_tableaux_count(lambda, mu, nu);
    case Backend::Auto:
    case Backend::Closed: {
      const Partition lb = bar_reduce(lambda), mb = bar_reduce(mu);
      if (!closed_form_applies(lb, mb)) {
        if (backend == Backend::Closed) throw InvalidArgument("no closed form for these shapes");
        return count_hives(lambda, mu, nu);
      }
      auto nb = shift_down(nu, checked::add(lambda.last(), mu.last()));
      return nb ? closed_coefficient(lb, mb, *nb) : 0;
    }
  }
  return 0;
}

void MultiplicityMultiset::add(Int coefficient) {
  if (coefficient < 0) throw DataIntegrityError("negative coefficient");
  if (coefficient == 0) return;
  counts[coefficient] = checked::add(counts[coefficient], 1);
  components = checked::add(components, 1);
  mult_sum = checked::add(mult_sum, coefficient);
}

Int MultiplicityMultiset::count_above(Int c) const {
  Int total = 0;
  for (auto it = counts.upper_bound(c); it != counts.end(); ++it) total = checked::add(total, it->second);
  return total;
}

std::string MultiplicityMultiset::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [value, count] : counts) {
    out << (first ? "" : ", ") << value << ":" << count;
    first = false;
  }
  out << "}";
  return out.str();
}

nlohmann::json to_json(const MultiplicityMultiset& m) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [value, count] : m.counts) counts[std::to_string(value)] = count;
  return {{"counts", counts}, {"components", m.components}, {"mult_sum", m.mult_sum}};
}

MultiplicityMultiset multiplicity_multiset(const Partition& lambda, const Partition& mu, Backend backend) {
  require_same_rank(lambda, mu);
  MultiplicityMultiset out;
  if (backend == Backend::Auto || backend == Backend::Closed) {
    const Partition lb = bar_reduce(lambda), mb = bar_reduce(mu);
    if (closed_form_applies(lb, mb)) {
      if (lb.rank() >= 4) {
        for (const auto& [nu, coefficient] : nr_support(lb, mb)) out.add(coefficient);
      } else {
        for (const auto& nu : enumerate_nu_candidates(lb, mb)) out.add(gl3_coefficient(lb, mb, nu));
      }
      return out;
    }
    if (backend == Backend::Closed) throw InvalidArgument("no closed form for these shapes");
    backend = Backend::Hive;
  }
  for (const auto& nu : enumerate_nu_candidates(lambda, mu)) {
    // Both factors must fit inside ν; skipping the rest saves most of the work.
    if (!nu.contains(lambda) || !nu.contains(mu)) continue;
    out.add(lr_coefficient(lambda, mu, nu, backend));
  }
  return out;
}

Int count_above_enum(const Partition& lambda, const Partition& mu, Int c, Backend backend) {
  if (c < 0) throw InvalidArgument("threshold must be nonnegative");
  return multiplicity_multiset(lambda, mu, backend).count_above(c);
}

nlohmann::json to_json(const ScanResult& r) {
  nlohmann::json hits = nlohmann::json::object();
  for (const auto& [label, counts] : r.branch_hits) hits[label] = counts;
  nlohmann::json j = {{"family", r.family},   {"bound", r.bound},   {"points", r.points},
                      {"compared", r.compared}, {"ok", r.ok()},     {"branch_hits", hits}};
  j["mismatch"] = r.mismatch ? nlohmann::json(*r.mismatch) : nlohmann::json(nullptr);
  return j;
}

namespace {

std::string point_text(const std::vector<Int>& point) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < point.size(); ++i) out << (i ? "," : "") << point[i];
  out << ")";
  return out.str();
}

void scan_count_function(ScanResult& r, const PiecewiseFunction& f, int rank, Int c_bound, Backend reference) {
  const Int b = r.bound;
  for (Int k1 = 0; k1 <= b; ++k1) {
    for (Int k2 = 0; k2 <= b; ++k2) {
      for (Int l1 = 0; l1 <= b; ++l1) {
        for (Int l2 = 0; l2 <= b; ++l2) {
          const auto m = multiplicity_multiset(fundamental(k1, k2, rank), fundamental(l1, l2, rank), reference);
          for (Int c = 0; c <= c_bound; ++c) {
            const std::vector<Int> point = {k1, k2, l1, l2, c};
            const std::vector<Int> swapped = {k2, k1, l1, l2, c};
            ++r.points;
            try {
              const Evaluation e = eval_piecewise(f, point);
              const Evaluation s = eval_piecewise(f, swapped);
              const Int expected = m.count_above(c);
              ++r.compared;
              if (e.piece) {
                auto& hits = r.branch_hits[f.pieces[*e.piece].label];
                hits.resize(1);
                ++hits[0];
              }
              if (e.value != expected) {
                r.mismatch = "value " + std::to_string(e.value) + " at " + point_text(point) + ", enumeration gives " +
                             std::to_string(expected);
                return;
              }
              if (s.value != e.value) {
                r.mismatch = "swapping k1 and k2 at " + point_text(point) + " changes the value from " +
                             std::to_string(e.value) + " to " + std::to_string(s.value);
                return;
              }
            } catch (const DataIntegrityError& err) {
              r.mismatch = err.what();
              return;
            }
          }
        }
      }
    }
  }
}

void scan_samples(ScanResult& r, Backend reference) {
  const Int b = r.bound;
  std::map<std::pair<Partition, Partition>, Int> cache;
  for (const Piece& piece : gl4nr_sample_pieces()) {
    auto& hits = r.branch_hits[piece.label];
    hits.assign(static_cast<std::size_t>(piece.function.modulus), 0);
    std::vector<Int> x(5, 0);
    for (x[0] = 0; x[0] <= b; ++x[0]) {
      for (x[1] = 0; x[1] <= b; ++x[1]) {
        for (x[2] = 0; x[2] <= b; ++x[2]) {
          for (x[3] = 0; x[3] <= x[2]; ++x[3]) {
            for (x[4] = 0; x[4] <= x[3]; ++x[4]) {
              ++r.points;
              if (!piece.cone.contains(x)) continue;
              const Partition lambda = fundamental(x[0], x[1], 4);
              const Partition mu({x[2], x[3], x[4], 0});
              auto [it, inserted] = cache.try_emplace({lambda, mu}, 0);
              if (inserted) it->second = count_above_enum(lambda, mu, 0, reference);
              const Rational value = eval_piece(piece, x);
              ++r.compared;
              ++hits[piece.function.branch_index(x)];
              if (value != Rational(it->second)) {
                r.mismatch = "piece " + piece.label + " gives " + value.to_string() + " at " + point_text(x) +
                             ", enumeration gives " + std::to_string(it->second);
                return;
              }
            }
          }
        }
      }
    }
  }
}

}  // namespace

ScanResult verify_family_range(const std::string& family, Int bound, Int c_bound, Backend reference) {
  if (bound < 0 || c_bound < 0) throw InvalidArgument("scan bounds must be nonnegative");
  ScanResult r;
  r.family = family;
  r.bound = bound;
  if (family == "gl3") {
    scan_count_function(r, gl3_count_function(), 3, c_bound, reference);
  } else if (family == "gl4nr2") {
    scan_count_function(r, gl4nr2_count_function(), 4, c_bound, reference);
  } else if (family == "gl4nr-samples") {
    scan_samples(r, reference);
  } else {
    throw InvalidArgument("unknown family '" + family + "' (expected gl3, gl4nr2 or gl4nr-samples)");
  }
  return r;
}

}  // namespace lrkit
