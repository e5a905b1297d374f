#include "lrkit/verify.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lrkit/error.hpp"
#include "lrkit/formulas.hpp"
#include "lrkit/hive.hpp"

namespace lrkit {

const char* version() { return LRKIT_VERSION; }
const char* tables_revision() { return "2"; }

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "SKIP";
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j = {{"lambda", v.lambda.to_string()}, {"mu", v.mu.to_string()}, {"n", v.rank()},
                      {"check", v.check},               {"status", status_name(v.status)},
                      {"left", v.left},                 {"right", v.right}};
  j["witness"] = v.witness ? nlohmann::json(*v.witness) : nlohmann::json(nullptr);
  j["micros"] = v.micros;
  return j;
}

namespace {

Verdict start(const std::string& check, const Partition& lambda, const Partition& mu) {
  Verdict v;
  v.check = check;
  v.lambda = lambda;
  v.mu = mu;
  return v;
}

/// Fills in a SKIP and returns true when the hypothesis fails.
bool skip_unless_near_rectangular(Verdict& v, const CheckOptions& options) {
  if (v.lambda.rank() != v.mu.rank()) throw InvalidArgument("λ and μ have different ranks");
  if (options.waive_near_rectangular || is_near_rectangular(v.lambda)) return false;
  v.status = Status::Skip;
  v.witness = "λ = " + v.lambda.to_string() + " is not near-rectangular";
  return true;
}

Partition star(const Partition& lambda) { return dual_star(bar_reduce(lambda)); }

}  // namespace

Verdict check_conjecture1(const Partition& lambda, const Partition& mu, const CheckOptions& options) {
  Verdict v = start("conj1", lambda, mu);
  if (skip_unless_near_rectangular(v, options)) return v;
  const auto left = multiplicity_multiset(lambda, mu, options.backend);
  const auto right = multiplicity_multiset(star(lambda), mu, options.backend);
  v.left = to_json(left);
  v.right = to_json(right);
  if (left == right) {
    v.status = Status::Pass;
    return v;
  }
  v.status = Status::Fail;
  // First coefficient value whose count differs.
  auto l = left.counts.begin();
  auto r = right.counts.begin();
  while (true) {
    Int lv = l == left.counts.end() ? -1 : l->first;
    Int rv = r == right.counts.end() ? -1 : r->first;
    if (lv == rv && l != left.counts.end() && l->second == r->second) {
      ++l;
      ++r;
      continue;
    }
    Int value = lv < 0 ? rv : rv < 0 ? lv : std::min(lv, rv);
    auto count = [value](const MultiplicityMultiset& m) {
      auto it = m.counts.find(value);
      return it == m.counts.end() ? Int{0} : it->second;
    };
    v.witness = "coefficient " + std::to_string(value) + " occurs " + std::to_string(count(left)) + " vs " +
                std::to_string(count(right)) + " times";
    break;
  }
  return v;
}

Verdict check_conjecture2(const Partition& lambda, const Partition& mu, const CheckOptions& options) {
  Verdict v = start("conj2", lambda, mu);
  if (skip_unless_near_rectangular(v, options)) return v;
  const Int left = count_above_enum(lambda, mu, 0, options.backend);
  const Int right = count_above_enum(star(lambda), mu, 0, options.backend);
  v.left = left;
  v.right = right;
  v.status = left == right ? Status::Pass : Status::Fail;
  if (v.status == Status::Fail) {
    v.witness = std::to_string(left) + " components for λ, " + std::to_string(right) + " for λ* = " +
                star(lambda).to_string();
  }
  return v;
}

Verdict cz_sum_check(const Partition& lambda, const Partition& mu, const CheckOptions& options) {
  Verdict v = start("cz_sum", lambda, mu);
  if (lambda.rank() != mu.rank()) throw InvalidArgument("λ and μ have different ranks");
  const Int left = multiplicity_multiset(lambda, mu, options.backend).mult_sum;
  const Int right = multiplicity_multiset(star(lambda), mu, options.backend).mult_sum;
  v.left = left;
  v.right = right;
  v.status = left == right ? Status::Pass : Status::Fail;
  if (v.status == Status::Fail) v.witness = "sums " + std::to_string(left) + " and " + std::to_string(right);
  return v;
}

Verdict reproduce_gl5_counterexample() {
  const Partition lambda({3, 3, 2, 0, 0});
  const Partition mu({4, 4, 1, 0, 0});
  Verdict v = check_conjecture2(lambda, mu, {.waive_near_rectangular = true});
  v.check = "repro_gl5";
  const bool reproduced = v.left == nlohmann::json(34) && v.right == nlohmann::json(33);
  v.status = reproduced ? Status::Pass : Status::Fail;
  v.witness = "expected 34 and 33";
  return v;
}

Verdict stability_check(Int lambda1, Int lambda2, Int mu1, Int mu2, const std::array<Int, 4>& nu, int n_lo,
                        int n_hi) {
  if (n_lo < 4 || n_hi > 8 || n_lo > n_hi) throw InvalidArgument("rank range must lie within [4, 8]");
  if (lambda1 < lambda2 || lambda2 < 0 || mu1 < mu2 || mu2 < 0) throw InvalidArgument("malformed λ or μ");
  const Int middle = checked::add(lambda2, mu2);
  auto build = [&](int n) {
    std::vector<Int> parts(static_cast<std::size_t>(n), middle);
    parts[0] = nu[0];
    parts[1] = nu[1];
    parts[static_cast<std::size_t>(n - 2)] = nu[2];
    parts[static_cast<std::size_t>(n - 1)] = nu[3];
    return Partition(std::move(parts));
  };
  Verdict v = start("stability", near_rectangular(lambda1, lambda2, 0, n_lo), near_rectangular(mu1, mu2, 0, n_lo));
  nlohmann::json values = nlohmann::json::object();
  std::optional<Int> common;
  bool agree = true;
  for (int n = n_lo; n <= n_hi; ++n) {
    const Int value =
        count_hives(near_rectangular(lambda1, lambda2, 0, n), near_rectangular(mu1, mu2, 0, n), build(n));
    values[std::to_string(n)] = value;
    if (common && *common != value) agree = false;
    if (!common) common = value;
  }
  const Int formula = nr_coefficient(v.lambda, v.mu, build(n_lo));
  v.left = values;
  v.right = formula;
  v.status = agree && *common == formula ? Status::Pass : Status::Fail;
  if (v.status == Status::Fail) {
    v.witness = "ν = " + build(n_lo).to_string() + ": hive counts " + values.dump() + ", formula " +
                std::to_string(formula);
  }
  return v;
}

Verdict stability_scan(Int lambda1, Int lambda2, Int mu1, Int mu2, int n_lo, int n_hi) {
  const Partition lambda = near_rectangular(lambda1, lambda2, 0, 4);
  const Partition mu = near_rectangular(mu1, mu2, 0, 4);
  Verdict v = start("stability", lambda, mu);
  Int checked_count = 0;
  for (const auto& [nu, coefficient] : nr_support(lambda, mu)) {
    Verdict one = stability_check(lambda1, lambda2, mu1, mu2, {nu[0], nu[1], nu[2], nu[3]}, n_lo, n_hi);
    if (one.status != Status::Pass) {
      one.lambda = lambda;
      one.mu = mu;
      return one;
    }
    ++checked_count;
  }
  v.left = checked_count;
  v.right = checked_count;
  v.status = Status::Pass;
  return v;
}

CheckKind parse_check(const std::string& name) {
  if (name == "conj1") return CheckKind::Conj1;
  if (name == "conj2") return CheckKind::Conj2;
  if (name == "cz_sum" || name == "czsum") return CheckKind::CzSum;
  if (name == "stability") return CheckKind::Stability;
  throw InvalidArgument("unknown check '" + name + "'");
}

std::string check_name(CheckKind k) {
  switch (k) {
    case CheckKind::Conj1: return "conj1";
    case CheckKind::Conj2: return "conj2";
    case CheckKind::CzSum: return "cz_sum";
    case CheckKind::Stability: return "stability";
  }
  return "conj1";
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  SweepConfig c;
  c.n = j.value("n", c.n);
  c.lambda_bound = j.value("lambda_bound", c.lambda_bound);
  c.mu_bound = j.value("mu_bound", c.mu_bound);
  c.check = parse_check(j.value("check", check_name(c.check)));
  c.jobs = j.value("jobs", c.jobs);
  c.output = j.value("output", c.output);
  c.format = j.value("format", c.format);
  c.timing = j.value("timing", c.timing);
  c.backend = parse_backend(j.value("backend", backend_name(c.backend)));
  if (j.contains("extra_cases")) {
    for (const auto& e : j.at("extra_cases")) {
      c.extra_cases.push_back({Partition::parse(e.at("lambda").get<std::string>(), c.n),
                               Partition::parse(e.at("mu").get<std::string>(), c.n),
                               e.value("expect", std::string("PASS")) == "FAIL"});
    }
  }
  if (c.n < 1 || c.lambda_bound < 0 || c.mu_bound < 0 || c.jobs < 1) {
    throw InvalidArgument("sweep bounds must be nonnegative, rank and jobs positive");
  }
  if (c.format != "json" && c.format != "csv") throw InvalidArgument("format must be json or csv");
  if (c.check == CheckKind::Stability && c.n != 4) throw InvalidArgument("stability sweeps are defined at rank 4");
  return c;
}

nlohmann::json to_json(const SweepConfig& c) {
  nlohmann::json extras = nlohmann::json::array();
  for (const auto& e : c.extra_cases) {
    extras.push_back({{"lambda", e.lambda.to_string()}, {"mu", e.mu.to_string()},
                      {"expect", e.expect_fail ? "FAIL" : "PASS"}});
  }
  return {{"n", c.n},         {"lambda_bound", c.lambda_bound},  {"mu_bound", c.mu_bound},
          {"check", check_name(c.check)}, {"format", c.format}, {"timing", c.timing},
          {"backend", backend_name(c.backend)}, {"extra_cases", extras}};
}

std::vector<std::pair<Partition, Partition>> sweep_cases(const SweepConfig& config) {
  std::vector<Partition> lambdas;
  for (Int a = 0; a <= config.lambda_bound; ++a) {
    for (Int b = 0; b <= config.lambda_bound; ++b) {
      lambdas.push_back(config.n == 1 ? Partition({a}) : near_rectangular(a + b, b, 0, config.n));
    }
  }
  std::vector<Partition> mus;
  if (config.check == CheckKind::Stability) {
    mus = lambdas;
  } else {
    for (Int size = 0; size <= config.mu_bound; ++size) {
      auto batch = partitions_of(size, config.n, size);
      mus.insert(mus.end(), batch.begin(), batch.end());
    }
  }
  std::vector<std::pair<Partition, Partition>> out;
  for (const auto& l : lambdas) {
    for (const auto& m : mus) out.emplace_back(l, m);
  }
  return out;
}

namespace {

Verdict run_case(const SweepConfig& config, const Partition& lambda, const Partition& mu, bool waive) {
  const CheckOptions options{waive, config.backend};
  try {
    switch (config.check) {
      case CheckKind::Conj1: return check_conjecture1(lambda, mu, options);
      case CheckKind::Conj2: return check_conjecture2(lambda, mu, options);
      case CheckKind::CzSum: return cz_sum_check(lambda, mu, options);
      case CheckKind::Stability: return stability_scan(lambda[0], lambda[1], mu[0], mu[1], 4, 6);
    }
  } catch (const std::exception& err) {
    Verdict v = start(check_name(config.check), lambda, mu);
    v.status = Status::Fail;
    v.witness = std::string("error: ") + err.what();
    return v;
  }
  return {};
}

}  // namespace

VerificationReport sweep(const SweepConfig& config) {
  using Clock = std::chrono::steady_clock;
  const auto begin = Clock::now();
  auto cases = sweep_cases(config);
  const std::size_t grid = cases.size();
  for (const auto& e : config.extra_cases) cases.emplace_back(e.lambda, e.mu);

  VerificationReport report;
  report.config = config;
  report.version = std::string(version()) + "+tables." + tables_revision();
  report.cases.resize(cases.size());
  report.expected_fail.assign(cases.size(), false);
  for (std::size_t i = grid; i < cases.size(); ++i) report.expected_fail[i] = config.extra_cases[i - grid].expect_fail;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      const auto t0 = Clock::now();
      Verdict v = run_case(config, cases[i].first, cases[i].second, i >= grid);
      if (config.timing) {
        v.micros = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
      }
      report.cases[i] = std::move(v);
    }
  };
  const int jobs = std::max(1, config.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  auto& s = report.summary;
  s.cases = report.cases.size();
  for (std::size_t i = 0; i < report.cases.size(); ++i) {
    switch (report.cases[i].status) {
      case Status::Pass: ++s.passes; break;
      case Status::Skip: ++s.skips; break;
      case Status::Fail:
        ++s.fails;
        if (report.expected_fail[i]) ++s.expected_fails;
        break;
    }
  }
  if (config.timing) {
    s.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - begin).count();
  }
  return report;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (std::size_t i = 0; i < r.cases.size(); ++i) {
    auto j = to_json(r.cases[i]);
    j["expected_fail"] = static_cast<bool>(r.expected_fail[i]);
    cases.push_back(std::move(j));
  }
  const auto& s = r.summary;
  return {{"config", to_json(r.config)},
          {"cases", cases},
          {"summary",
           {{"cases", s.cases},
            {"passes", s.passes},
            {"fails", s.fails},
            {"skips", s.skips},
            {"expected_fails", s.expected_fails},
            {"elapsed_ms", s.elapsed_ms}}},
          {"version", r.version}};
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "lambda,mu,n,check,status,left,right,witness,micros,expected_fail\n";
  for (std::size_t i = 0; i < r.cases.size(); ++i) {
    const Verdict& v = r.cases[i];
    out << csv_field(v.lambda.to_string()) << ',' << csv_field(v.mu.to_string()) << ',' << v.rank() << ','
        << v.check << ',' << status_name(v.status) << ',' << csv_field(v.left.dump()) << ','
        << csv_field(v.right.dump()) << ',' << csv_field(v.witness.value_or("")) << ',' << v.micros << ','
        << (r.expected_fail[i] ? "true" : "false") << '\n';
  }
  return out.str();
}

void write_report(const VerificationReport& r) {
  if (r.config.output.empty()) return;
  std::ofstream out(r.config.output);
  if (!out) throw std::runtime_error("cannot open " + r.config.output + " for writing");
  if (r.config.format == "csv") {
    out << to_csv(r);
  } else {
    out << to_json(r).dump(2) << '\n';
  }
  if (!out) throw std::runtime_error("failed writing " + r.config.output);
}

}  // namespace lrkit
