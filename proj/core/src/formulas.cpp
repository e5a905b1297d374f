#include "lrkit/formulas.hpp"

#include <algorithm>

#include "lrkit/rational.hpp"

namespace lrkit {

namespace {

void require_gl3_shape(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.rank() != 3 || mu.rank() != 3 || nu.rank() != 3) throw InvalidArgument("GL3 formula needs rank 3");
  if (lambda.last() != 0 || mu.last() != 0) {
    throw InvalidArgument("GL3 formula needs λ3 = μ3 = 0; bar-reduce first");
  }
}

void require_nr_shape(const Partition& lambda, const Partition& mu) {
  if (lambda.rank() != mu.rank()) throw InvalidArgument("λ and μ have different ranks");
  if (lambda.rank() < 4) throw InvalidArgument("near-rectangular formula needs rank >= 4");
  if (!is_near_rectangular(lambda) || !is_near_rectangular(mu)) {
    throw InvalidArgument("near-rectangular formula needs near-rectangular λ and μ");
  }
  if (lambda.last() != 0 || mu.last() != 0) {
    throw InvalidArgument("near-rectangular formula needs λn = μn = 0; bar-reduce first");
  }
}

using checked::add;
using checked::sub;

}  // namespace

IntegerInterval gl3_interval(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_gl3_shape(lambda, mu, nu);
  const Int l1 = lambda[0], l2 = lambda[1];
  const Int m1 = mu[0], m2 = mu[1];
  const Int n1 = nu[0], n2 = nu[1], n3 = nu[2];
  const Int lo = std::max({sub(m1, l2), m2, sub(n1, l1), sub(m1, n3), sub(n2, l2), sub(add(m1, m2), n2)});
  const Int hi = std::min({m1, sub(n1, l2), sub(add(m1, m2), n3)});
  return {lo, hi};
}

Int gl3_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_gl3_shape(lambda, mu, nu);
  if (nu.size() != add(lambda.size(), mu.size())) return 0;
  return gl3_interval(lambda, mu, nu).cardinality();
}

bool gl3_exceeds(const Partition& lambda, const Partition& mu, const Partition& nu, Int c) {
  require_gl3_shape(lambda, mu, nu);
  if (c < 0) throw InvalidArgument("threshold must be nonnegative");
  if (nu.size() != add(lambda.size(), mu.size())) return false;
  using Wide = Int128;
  const Wide l1 = lambda[0], l2 = lambda[1];
  const Wide m1 = mu[0], m2 = mu[1];
  const Wide n1 = nu[0], n2 = nu[1], n3 = nu[2];
  const Wide forms[18] = {
      l1 - l2,                    l2,
      m1 - m2,                    m2,
      n1 - n2,                    n2 - n3,
      l1 + m1 - n1,               l1 + m1 - n2 - n3,
      l1 + m2 - n2,               l1 + l2 + m1 - n1 - n3,
      l1 - n3,                    l1 + l2 + m2 - n2 - n3,
      l2 + m1 - n2,               l1 + m1 + m2 - n1 - n3,
      m1 - n3,                    l2 + m1 + m2 - n2 - n3,
      l2 + m2 - n3,               l1 + l2 + m1 + m2 - n1 - n2,
  };
  return std::all_of(std::begin(forms), std::end(forms), [c](Wide f) { return f >= c; });
}

bool nr_shape(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_nr_shape(lambda, mu);
  if (nu.rank() != lambda.rank()) throw InvalidArgument("ν has a different rank");
  const int n = nu.rank();
  const Int middle = add(lambda[1], mu[1]);
  for (int i = 2; i < n - 2; ++i) {
    if (nu[i] != middle) return false;
  }
  return nu[1] >= middle && middle >= nu[n - 2];
}

Int nr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!nr_shape(lambda, mu, nu)) return 0;
  if (nu.size() != add(lambda.size(), mu.size())) return 0;
  const int n = nu.rank();
  const Int l1 = lambda[0], l2 = lambda[1];
  const Int m1 = mu[0], m2 = mu[1];
  const Int v1 = nu[0], v2 = nu[1], v_pen = nu[n - 2], v_last = nu[n - 1];
  IntegerInterval interval;
  interval.lo = std::max({Int{0}, sub(add(l2, m1), v1), sub(v_last, m2)});
  interval.hi = std::min({sub(add(l1, m1), v1), sub(add(l2, m1), v2), sub(add(v_pen, v_last), add(l2, m2)),
                          sub(v_pen, m2)});
  return interval.cardinality();
}

std::vector<std::pair<Partition, Int>> nr_support(const Partition& lambda, const Partition& mu) {
  require_nr_shape(lambda, mu);
  const int n = lambda.rank();
  const Int middle = add(lambda[1], mu[1]);
  const Int total = add(lambda.size(), mu.size());
  // The four free parts carry what the n−4 middle copies do not.
  const Int free_total = sub(total, checked::mul(n - 4, middle));
  const Int top = add(lambda[0], mu[0]);
  std::vector<std::pair<Partition, Int>> out;
  for (Int v1 = top; v1 >= middle; --v1) {
    for (Int v2 = std::min(v1, free_total - v1); v2 >= middle; --v2) {
      for (Int v3 = middle; v3 >= 0; --v3) {
        const Int v4 = free_total - v1 - v2 - v3;
        if (v4 < 0 || v4 > v3) continue;
        std::vector<Int> parts(static_cast<std::size_t>(n), middle);
        parts[0] = v1;
        parts[1] = v2;
        parts[static_cast<std::size_t>(n - 2)] = v3;
        parts[static_cast<std::size_t>(n - 1)] = v4;
        Partition nu(std::move(parts));
        const Int c = nr_coefficient(lambda, mu, nu);
        if (c > 0) out.emplace_back(std::move(nu), c);
      }
    }
  }
  return out;
}

Int isotypic_count_cubic_branch(Int k, Int l) {
  const Rational K(k), L(l);
  const Rational value = Rational(1, 3) * K * K * K - Rational(2) * K * K * L + Rational(4) * K * L * L -
                         Rational(5, 3) * L * L * L - K * K + Rational(4) * K * L - L * L + Rational(2, 3) * K +
                         Rational(5, 3) * L + Rational(1);
  return value.to_integer();
}

Int isotypic_count_selfdual_family(Int k, Int l) {
  if (k < 0 || l < 0) throw InvalidArgument("k and l must be nonnegative");
  if (l > k) std::swap(k, l);
  if (2 * l <= k) {
    const Int m = add(l, 1);
    return checked::mul(checked::mul(m, m), m);
  }
  return isotypic_count_cubic_branch(k, l);
}

Int selfdual_component_count(Int k, Int l) {
  if (k < 0 || l < 0) throw InvalidArgument("k and l must be nonnegative");
  const Int m = add(std::min(k, l), 1);
  return checked::mul(m, m);
}

Int selfdual_family_condition_count(Int k, Int l, bool self_dual) {
  if (k < 0 || l < 0) throw InvalidArgument("k and l must be nonnegative");
  if (l > k) std::swap(k, l);
  const Int total = 4 * (k + l);
  Int count = 0;
  for (Int v2 = k + l; v2 <= k + 2 * l; ++v2) {
    for (Int v3 = k; v3 <= k + l; ++v3) {
      for (Int v4 = 0; v4 <= v3; ++v4) {
        const Int v1 = total - v2 - v3 - v4;
        if (v1 < v2 || v3 + v4 < k + l || v1 + v3 < 3 * k + l) continue;
        if (self_dual && v1 + v4 != v2 + v3) continue;
        ++count;
      }
    }
  }
  return count;
}

}  // namespace lrkit
