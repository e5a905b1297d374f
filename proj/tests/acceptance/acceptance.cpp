// Acceptance runner. `lrkit_acceptance` runs every criterion, `lrkit_acceptance N`
// runs one. Prints one PASS/FAIL line per criterion; exits 1 if any failed or
// ran over its time budget.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lrkit/enumeration.hpp"
#include "lrkit/formulas.hpp"
#include "lrkit/hive.hpp"
#include "lrkit/horn.hpp"
#include "lrkit/piecewise.hpp"
#include "lrkit/tableaux.hpp"
#include "lrkit/verify.hpp"

namespace {

using namespace lrkit;

/// Collects the first few failure messages of a criterion.
class Failures {
 public:
  template <class... Args>
  void add(const Args&... parts) {
    ++count_;
    if (messages_.size() >= 5) return;
    std::ostringstream os;
    (os << ... << parts);
    messages_.push_back(os.str());
  }
  template <class A, class B, class... Ctx>
  void expect_eq(const A& got, const B& want, const Ctx&... context) {
    if (!(got == want)) add(context..., ": got ", got, ", want ", want);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) add(what);
  }
  std::size_t count() const { return count_; }
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> messages_;
};

Partition P(std::vector<Int> parts) { return Partition(std::move(parts)); }

std::vector<Partition> partitions_up_to(Int max_size, int rank, Int max_part) {
  std::vector<Partition> out;
  for (Int s = 0; s <= max_size; ++s) {
    for (auto& p : partitions_of(s, rank, max_part)) out.push_back(std::move(p));
  }
  return out;
}

/// Near-rectangular (a, b^(n-2), 0) with a, b <= bound.
std::vector<Partition> near_rectangular_grid(Int bound, int rank) {
  std::vector<Partition> out;
  for (Int a = 0; a <= bound; ++a) {
    for (Int b = 0; b <= a; ++b) out.push_back(near_rectangular(a, b, 0, rank));
  }
  return out;
}

// 1. The worked rank-3 example, against both printed expansions.
void gl3_worked_example(Failures& f) {
  struct Term {
    Int c;
    std::vector<Int> nu;
  };
  const std::vector<Term> first = {
      {1, {7, 5, 5}},  {1, {7, 7, 3}},  {1, {8, 8, 1}},  {1, {9, 4, 4}},  {1, {9, 8, 0}},  {1, {10, 7, 0}},
      {1, {11, 6, 0}}, {1, {11, 3, 3}}, {1, {11, 4, 2}}, {1, {11, 5, 1}}, {1, {6, 6, 5}},  {2, {7, 6, 4}},
      {2, {8, 5, 4}},  {2, {8, 7, 2}},  {2, {9, 7, 1}},  {2, {10, 4, 3}}, {2, {10, 5, 2}}, {2, {10, 6, 1}},
      {3, {8, 6, 3}},  {3, {9, 5, 3}},  {3, {9, 6, 2}},
  };
  const std::vector<Term> second = {
      {1, {7, 7, 2}},  {1, {8, 4, 4}},  {1, {10, 3, 3}}, {1, {8, 8, 0}},  {1, {9, 7, 0}},  {1, {10, 6, 0}},
      {1, {11, 3, 2}}, {1, {11, 4, 1}}, {1, {6, 5, 5}},  {1, {6, 6, 4}},  {2, {7, 5, 4}},  {2, {7, 6, 3}},
      {2, {8, 7, 1}},  {2, {9, 4, 3}},  {2, {9, 6, 1}},  {2, {10, 4, 2}}, {2, {10, 5, 1}}, {3, {8, 5, 3}},
      {3, {8, 6, 2}},  {3, {9, 5, 2}},  {1, {11, 5, 0}},
  };
  const Partition lambda = P({5, 3, 0}), mu = P({6, 3, 0});
  const Partition lambda_star = dual_star(bar_reduce(lambda));
  f.expect_eq(lambda_star, P({5, 2, 0}), "lambda*");

  MultiplicityMultiset expected;
  for (Int c : {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3}) expected.add(c);

  for (const auto& [l, terms] : {std::pair{lambda, first}, std::pair{lambda_star, second}}) {
    for (Backend b : {Backend::Hive, Backend::Tableaux, Backend::Closed}) {
      f.expect_eq(multiplicity_multiset(l, mu, b).to_string(), expected.to_string(), "multiset ", l, " ", backend_name(b));
    }
    std::set<Partition> listed;
    for (const auto& t : terms) {
      const Partition nu(t.nu);
      listed.insert(nu);
      f.expect_eq(count_hives(l, mu, nu), t.c, "hives ", l, mu, nu);
      f.expect_eq(oracle::lr_tableaux_count(l, mu, nu), t.c, "tableaux ", l, mu, nu);
      f.expect_eq(gl3_coefficient(l, mu, nu), t.c, "gl3 ", l, mu, nu);
    }
    f.expect_eq(listed.size(), std::size_t{21}, "distinct listed nu");
    for (const auto& nu : enumerate_nu_candidates(l, mu)) {
      if (!listed.count(nu)) f.expect_eq(count_hives(l, mu, nu), 0, "unlisted ", l, mu, nu);
    }
  }
}

// 2. Hives against LR tableaux, exhaustively.
void oracle_equivalence(Failures& f) {
  std::size_t triples = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto shapes = partitions_up_to(12, n, 12);
    for (const auto& lambda : shapes) {
      for (const auto& mu : shapes) {
        if (lambda.size() + mu.size() > 12) continue;
        const Int total = lambda.size() + mu.size();
        for (const auto& nu : partitions_of(total, n, total)) {
          ++triples;
          const Int h = count_hives(lambda, mu, nu);
          const Int t = oracle::lr_tableaux_count(lambda, mu, nu);
          if (h != t) f.add("n=", n, " ", lambda, mu, nu, ": hives ", h, ", tableaux ", t);
        }
      }
    }
  }
  std::cout << "    " << triples << " triples\n";
}

// 3. Rank-3 interval formula and threshold inequalities.
void gl3_closed_form(Failures& f) {
  std::vector<Partition> shapes;
  for (Int a = 0; a <= 8; ++a) {
    for (Int b = 0; b <= a; ++b) shapes.push_back(P({a, b, 0}));
  }
  std::size_t triples = 0;
  for (const auto& lambda : shapes) {
    for (const auto& mu : shapes) {
      for (const auto& nu : enumerate_nu_candidates(lambda, mu)) {
        ++triples;
        const Int h = count_hives(lambda, mu, nu);
        f.expect_eq(gl3_coefficient(lambda, mu, nu), h, "gl3_coefficient ", lambda, mu, nu);
        for (Int c = 0; c <= 5; ++c) {
          if (gl3_exceeds(lambda, mu, nu, c) != (h > c)) f.add("gl3_exceeds ", lambda, mu, nu, " c=", c);
        }
      }
    }
  }
  std::cout << "    " << triples << " triples\n";
}

// 4. Rank independence for near-rectangular pairs.
void stability(Failures& f) {
  for (Int l1 = 0; l1 <= 4; ++l1) {
    for (Int l2 = 0; l2 <= l1; ++l2) {
      for (Int m1 = 0; m1 <= 4; ++m1) {
        for (Int m2 = 0; m2 <= m1; ++m2) {
          const Verdict v = stability_scan(l1, l2, m1, m2, 4, 6);
          if (v.status != Status::Pass) f.add(l1, ",", l2, " ", m1, ",", m2, ": ", v.witness.value_or("?"));
        }
      }
    }
  }
}

void report_scan(Failures& f, const ScanResult& r) {
  std::cout << "    " << r.family << ": " << r.points << " points, " << r.compared << " compared\n";
  if (!r.ok()) f.add(r.family, ": ", *r.mismatch);
}

// 5. Rank-3 piecewise counting function.
void gl3_piecewise(Failures& f) {
  const ScanResult r = verify_family_range("gl3", 6, 6, Backend::Hive);
  f.expect_eq(r.points, std::size_t{16807}, "points");
  report_scan(f, r);
}

// 6. Rank-4 near-rectangular piecewise counting function.
void gl4nr2_piecewise(Failures& f) {
  const OrbitExpansion& e = gl4nr2_expansion();
  f.expect_eq(e.pieces.size(), std::size_t{36}, "pieces");
  f.expect_eq(gl4nr2_count_function().pieces.size(), std::size_t{36}, "function pieces");
  f.expect_eq(gl4nr2_group().size(), std::size_t{8}, "group order");
  const std::vector<std::size_t> sizes = {2, 4, 2, 8, 8, 4, 4, 4};
  f.expect(e.orbit_sizes == sizes, "orbit sizes");
  std::vector<int> s1;
  for (const auto& g : gl4nr2_group()) {
    if (g.word == "s1") s1 = g.perm;
  }
  std::size_t fixed = 0;
  for (const auto& piece : e.pieces) {
    if (piece.cone.permuted(s1).normalized() == piece.cone.normalized() &&
        piece.function.permuted(s1) == piece.function) {
      ++fixed;
    }
  }
  f.expect_eq(fixed, std::size_t{12}, "s1-fixed pieces");
  const ScanResult r = verify_family_range("gl4nr2", 4, 3, Backend::Hive);
  f.expect_eq(r.points, std::size_t{2500}, "points");
  report_scan(f, r);
}

// 7. Facet lists against positivity, and the Hilbert generators.
void horn_faces(Failures& f) {
  const auto nr = near_rectangular_grid(5, 4);
  std::vector<Partition> any_mu;
  for (const auto& p : partitions_up_to(15, 4, 5)) {
    if (p.last() == 0) any_mu.push_back(p);
  }
  std::size_t checked = 0;
  for (const auto& lambda : nr) {
    for (const auto& mu : any_mu) {
      const bool mu_nr = is_near_rectangular(mu);
      for (const auto& nu : enumerate_nu_candidates(lambda, mu)) {
        const bool positive = count_hives(lambda, mu, nu) > 0;
        ++checked;
        if (horn4_nr_member(lambda, mu, nu).member != positive) f.add("nr ", lambda, mu, nu);
        if (mu_nr && horn4_nr2_member(lambda, mu, nu).member != positive) f.add("nr2 ", lambda, mu, nu);
      }
    }
  }
  std::cout << "    " << checked << " triples\n";

  for (const auto& [face, expected] : {std::pair{std::string("nr2"), 8u}, std::pair{std::string("nr"), 12u}}) {
    const auto gens = hilbert_generators(face);
    f.expect_eq(gens.size(), std::size_t{expected}, face, " generators");
    for (const auto& g : gens) {
      const auto& t = g.triple;
      f.expect_eq(count_hives(t.lambda, t.mu, t.nu), 1, face, " generator ", g.description);
      const Membership m = face == "nr2" ? horn4_nr2_member(t.lambda, t.mu, t.nu) : horn4_nr_member(t.lambda, t.mu, t.nu);
      f.expect(m.member, face + " generator outside the face: " + g.description);
    }
  }
}

// 8. The (2k)k^2 x (2l)l^2 family.
void selfdual_family(Failures& f) {
  for (Int k = 0; k <= 4; ++k) {
    for (Int l = 0; l <= 4; ++l) {
      for (int n : {4, 5}) {
        const Partition lambda = near_rectangular(2 * k, k, 0, n), mu = near_rectangular(2 * l, l, 0, n);
        const auto m = multiplicity_multiset(lambda, mu, Backend::Hive);
        f.expect_eq(isotypic_count_selfdual_family(k, l), m.components, "count k=", k, " l=", l, " n=", n);
      }
      const Partition lambda = near_rectangular(2 * k, k, 0, 4), mu = near_rectangular(2 * l, l, 0, 4);
      Int self_dual = 0;
      for (const auto& nu : enumerate_nu_candidates(lambda, mu)) {
        if (nu[0] + nu[3] == nu[1] + nu[2] && count_hives(lambda, mu, nu) > 0) ++self_dual;
      }
      f.expect_eq(selfdual_component_count(k, l), self_dual, "self-dual k=", k, " l=", l);
      f.expect_eq(selfdual_family_condition_count(k, l, true), self_dual, "self-dual conditions k=", k, " l=", l);
      f.expect_eq(selfdual_family_condition_count(k, l, false), isotypic_count_selfdual_family(k, l),
                  "conditions k=", k, " l=", l);
    }
  }
  for (Int l = 0; l <= 10; ++l) {
    f.expect_eq(isotypic_count_cubic_branch(2 * l, l), (l + 1) * (l + 1) * (l + 1), "boundary l=", l);
  }
}

// 9. Sample pieces of the rank-4 near-rectangular counting function.
void sample_pieces(Failures& f) {
  const ScanResult r = verify_family_range("gl4nr-samples", 6, 0, Backend::Hive);
  report_scan(f, r);
  f.expect_eq(r.branch_hits.size(), std::size_t{3}, "pieces hit");
  for (const auto& [label, hits] : r.branch_hits) {
    std::cout << "    " << label << ":";
    for (auto h : hits) std::cout << ' ' << h;
    std::cout << '\n';
    for (std::size_t b = 0; b < hits.size(); ++b) {
      if (hits[b] == 0) f.add(label, " branch ", b, " never exercised");
    }
  }
  const auto parity = r.branch_hits.find("P+parity");
  f.expect(parity != r.branch_hits.end() && parity->second.size() == 2, "parity piece has two branches");
}

// 10. The rank-5 counterexample.
void gl5_counterexample(Failures& f) {
  const Partition lambda = P({3, 3, 2, 0, 0}), mu = P({4, 4, 1, 0, 0});
  const Partition lambda_star = dual_star(bar_reduce(lambda));
  f.expect_eq(lambda_star, P({3, 3, 1, 0, 0}), "lambda*");
  f.expect_eq(multiplicity_multiset(lambda, mu, Backend::Hive).components, 34, "components of lambda");
  f.expect_eq(multiplicity_multiset(lambda_star, mu, Backend::Hive).components, 33, "components of lambda*");
  const Verdict repro = reproduce_gl5_counterexample();
  f.expect(repro.status == Status::Pass, "reproduce_gl5_counterexample");
  const Verdict sums = cz_sum_check(lambda, mu, {.waive_near_rectangular = true, .backend = Backend::Hive});
  f.expect(sums.status == Status::Pass, "cz_sum_check");
  std::cout << "    components 34/33, multiplicity sums " << sums.left << "/" << sums.right << '\n';
}

// 11. Conjecture 1 sweeps.
void sweeps(Failures& f) {
  struct Range {
    int n;
    Int lambda_bound, mu_bound;
  };
  for (const Range& range : {Range{4, 3, 8}, Range{5, 2, 6}}) {
    SweepConfig config;
    config.n = range.n;
    config.lambda_bound = range.lambda_bound;
    config.mu_bound = range.mu_bound;
    config.check = CheckKind::Conj1;
    config.backend = Backend::Hive;
    config.jobs = 4;
    const auto report = sweep(config);
    const auto& s = report.summary;
    std::cout << "    n=" << range.n << ": " << s.cases << " cases, " << s.passes << " pass, " << s.fails << " fail, "
              << s.skips << " skip\n";
    f.expect_eq(s.fails, std::size_t{0}, "fails at n=", range.n);
    f.expect_eq(s.skips, std::size_t{0}, "skips at n=", range.n);
    for (const auto& v : report.cases) {
      if (v.status == Status::Fail) f.add(v.lambda, v.mu, ": ", v.witness.value_or(""));
    }
  }
}

// 12. Invariants.
void properties(Failures& f) {
  // Symmetries of the threshold counts on the rank-3 range.
  for (Int k1 = 0; k1 <= 6; ++k1) {
    for (Int k2 = 0; k2 <= 6; ++k2) {
      for (Int l1 = 0; l1 <= 6; ++l1) {
        for (Int l2 = 0; l2 <= 6; ++l2) {
          const Partition lambda = from_fundamental({k1, k2, 3}), mu = from_fundamental({l1, l2, 3});
          const auto a = multiplicity_multiset(lambda, mu, Backend::Hive);
          const auto b = multiplicity_multiset(mu, lambda, Backend::Hive);
          const auto c = multiplicity_multiset(dual_star(lambda), dual_star(mu), Backend::Hive);
          for (Int t = 0; t <= 6; ++t) {
            if (a.count_above(t) != b.count_above(t) || a.count_above(t) != c.count_above(t)) {
              f.add("symmetry ", lambda, mu, " c=", t);
            }
          }
        }
      }
    }
  }

  // Bar reduction and swap symmetry of single coefficients.
  for (int n = 2; n <= 4; ++n) {
    const auto shapes = partitions_up_to(8, n, 3);
    for (const auto& lambda : shapes) {
      for (const auto& mu : shapes) {
        if (lambda.size() + mu.size() > 12) continue;
        const Partition lb = bar_reduce(lambda), mb = bar_reduce(mu);
        const Int shift = lambda.last() + mu.last();
        for (const auto& nu : enumerate_nu_candidates(lambda, mu)) {
          const Int h = count_hives(lambda, mu, nu);
          f.expect_eq(count_hives(mu, lambda, nu), h, "swap ", lambda, mu, nu);
          std::vector<Int> shifted(nu.parts().begin(), nu.parts().end());
          if (shifted.back() < shift) {
            f.expect_eq(h, 0, "bar reduction ", lambda, mu, nu);
            continue;
          }
          for (auto& x : shifted) x -= shift;
          f.expect_eq(count_hives(lb, mb, Partition(shifted)), h, "bar reduction ", lambda, mu, nu);
        }
      }
    }
  }

  // dual_star is an involution on partitions with a zero last part.
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : partitions_up_to(18, n, 6)) {
      if (p.last() != 0) continue;
      const Partition d = dual_star(p);
      f.expect_eq(d.last(), 0, "dual_star last part ", p);
      f.expect_eq(dual_star(d), p, "dual_star involution ", p);
    }
  }

  // Simultaneous conjugation.
  for (int n = 1; n <= 4; ++n) {
    const auto shapes = partitions_up_to(8, n, 8);
    for (const auto& lambda : shapes) {
      for (const auto& mu : shapes) {
        if (lambda.size() + mu.size() > 8) continue;
        for (const auto& nu : enumerate_nu_candidates(lambda, mu)) {
          if (!oracle::lr_conjugation_check(lambda, mu, nu)) f.add("conjugation ", lambda, mu, nu);
        }
      }
    }
  }

  // restrict_hive: injective, and onto the hives of the truncated triple.
  std::size_t boundaries = 0;
  for (int n = 5; n <= 6; ++n) {
    for (const auto& lambda : near_rectangular_grid(2, n)) {
      for (const auto& mu : near_rectangular_grid(2, n)) {
        for (const auto& nu : enumerate_nu_candidates(lambda, mu)) {
          if (!nr_shape(lambda, mu, nu)) continue;
          const Int big = count_hives(lambda, mu, nu);
          if (big == 0) continue;
          ++boundaries;
          const Partition l4 = P({lambda[0], lambda[1], lambda[1], 0});
          const Partition m4 = P({mu[0], mu[1], mu[1], 0});
          const Partition v4 = P({nu[0], nu[1], nu[n - 2], nu[n - 1]});
          std::set<std::string> images;
          bool valid = true;
          enumerate_hives(lambda, mu, nu, [&](const Hive& h) {
            const Hive r = restrict_hive(h);
            valid = valid && r.valid();
            const LRTriple t = boundary_triple(r);
            valid = valid && t.lambda == l4 && t.mu == m4 && t.nu == v4;
            images.insert(r.to_text());
          });
          f.expect(valid, "restricted hive invalid for " + lambda.to_string() + mu.to_string() + nu.to_string());
          f.expect_eq(static_cast<Int>(images.size()), big, "restriction not injective ", lambda, mu, nu);
          f.expect_eq(count_hives(l4, m4, v4), big, "restriction not onto ", lambda, mu, nu);
        }
      }
    }
  }
  std::cout << "    " << boundaries << " restricted boundaries\n";
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0: no budget
  std::function<void(Failures&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "rank-3 worked example", 1, gl3_worked_example},
      {2, "hives agree with LR tableaux", 300, oracle_equivalence},
      {3, "rank-3 interval formula", 120, gl3_closed_form},
      {4, "near-rectangular stability", 300, stability},
      {5, "rank-3 piecewise function", 120, gl3_piecewise},
      {6, "rank-4 near-rectangular piecewise function", 600, gl4nr2_piecewise},
      {7, "Horn faces and Hilbert generators", 300, horn_faces},
      {8, "self-dual family counts", 120, selfdual_family},
      {9, "rank-4 sample pieces", 300, sample_pieces},
      {10, "rank-5 counterexample", 60, gl5_counterexample},
      {11, "conjecture sweeps", 900, sweeps},
      {12, "property suite", 0, properties},
  };
  return all;
}

bool run(const Criterion& c) {
  Failures f;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(f);
  } catch (const std::exception& e) {
    f.add("exception: ", e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool over = c.budget_seconds > 0 && elapsed > c.budget_seconds;
  const bool ok = f.count() == 0 && !over;
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << " (" << std::fixed << std::setprecision(2)
            << elapsed << "s";
  if (c.budget_seconds > 0) std::cout << ", budget " << c.budget_seconds << "s";
  std::cout << ")\n";
  for (const auto& m : f.messages()) std::cout << "    " << m << '\n';
  if (f.count() > f.messages().size()) std::cout << "    ... " << f.count() << " failures in total\n";
  if (over) std::cout << "    over budget\n";
  std::cout.unsetf(std::ios::fixed);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  bool ok = true;
  bool any = false;
  for (const auto& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    any = true;
    ok = run(c) && ok;
  }
  if (!any) {
    std::cerr << "no such criterion\n";
    return 2;
  }
  return ok ? 0 : 1;
}
