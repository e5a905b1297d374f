#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lrkit/enumeration.hpp"

namespace lrkit {

/// Version of the library and of the hard-coded tables (facet lists, pieces,
/// generators). The second changes whenever a transcription is corrected.
const char* version();
const char* tables_revision();

enum class Status { Pass, Fail, Skip };
std::string status_name(Status s);

struct Verdict {
  Status status = Status::Skip;
  std::string check;
  Partition lambda = Partition::zero(1);
  Partition mu = Partition::zero(1);
  nlohmann::json left;
  nlohmann::json right;
  /// Set on every FAIL, and on SKIP to give the reason.
  std::optional<std::string> witness;
  Int micros = 0;

  int rank() const { return lambda.rank(); }
};

nlohmann::json to_json(const Verdict& v);

struct CheckOptions {
  /// Run the comparison even when λ is not near-rectangular.
  bool waive_near_rectangular = false;
  Backend backend = Backend::Auto;
};

/// Multisets of positive coefficients of V(λ)⊗V(μ) and V(λ*)⊗V(μ) agree,
/// where λ* = dual_star(bar_reduce(λ)).
Verdict check_conjecture1(const Partition& lambda, const Partition& mu, const CheckOptions& options = {});
/// The numbers of components agree.
Verdict check_conjecture2(const Partition& lambda, const Partition& mu, const CheckOptions& options = {});
/// The sums of multiplicities agree. Holds for every λ.
Verdict cz_sum_check(const Partition& lambda, const Partition& mu, const CheckOptions& options = {});

/// λ = (3,3,2,0,0), μ = (4,4,1,0,0) at rank 5: PASS when the component counts
/// come out as 34 for λ and 33 for λ*.
Verdict reproduce_gl5_counterexample();

/// For each n in [n_lo, n_hi] ⊆ [4, 8], builds λ = λ1 λ2^(n−2) 0,
/// μ = μ1 μ2^(n−2) 0 and ν = ν1 ν2 (λ2+μ2)^(n−4) ν3 ν4 and compares
/// count_hives across n and with nr_coefficient.
Verdict stability_check(Int lambda1, Int lambda2, Int mu1, Int mu2, const std::array<Int, 4>& nu, int n_lo, int n_hi);

/// stability_check over every ν in nr_support of the rank-4 pair.
Verdict stability_scan(Int lambda1, Int lambda2, Int mu1, Int mu2, int n_lo, int n_hi);

enum class CheckKind { Conj1, Conj2, CzSum, Stability };
CheckKind parse_check(const std::string& name);
std::string check_name(CheckKind k);

struct ExtraCase {
  Partition lambda;
  Partition mu;
  /// A FAIL on this case is expected and does not affect the exit status.
  bool expect_fail = false;
};

struct SweepConfig {
  int n = 4;
  Int lambda_bound = 3;  // max(λ1−λ2, λ2)
  Int mu_bound = 8;      // |μ|
  CheckKind check = CheckKind::Conj1;
  int jobs = 1;
  std::string output;            // empty: no file
  std::string format = "json";   // json | csv
  bool timing = false;
  /// Cases appended after the grid, checked without the near-rectangular
  /// hypothesis.
  std::vector<ExtraCase> extra_cases;
  Backend backend = Backend::Auto;
};

SweepConfig sweep_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SweepConfig& c);

struct SweepSummary {
  std::size_t cases = 0;
  std::size_t passes = 0;
  std::size_t fails = 0;
  std::size_t skips = 0;
  std::size_t expected_fails = 0;
  Int elapsed_ms = 0;
};

struct VerificationReport {
  SweepConfig config;
  std::vector<Verdict> cases;
  std::vector<bool> expected_fail;  // parallel to cases
  SweepSummary summary;
  std::string version;

  std::size_t unexpected_failures() const { return summary.fails - summary.expected_fails; }
};

/// The (λ, μ) pairs of the grid, in canonical order: λ by (λ1−λ2, λ2), then μ
/// by size and lexicographically decreasing. For the stability check μ runs
/// over the same near-rectangular grid as λ, at rank 4.
std::vector<std::pair<Partition, Partition>> sweep_cases(const SweepConfig& config);

/// Runs every case on `config.jobs` workers. Results are stored in canonical
/// case order. A case that throws becomes a FAIL carrying the message.
VerificationReport sweep(const SweepConfig& config);

nlohmann::json to_json(const VerificationReport& r);
std::string to_csv(const VerificationReport& r);
/// Writes the report to config.output in config.format. Throws
/// std::runtime_error on I/O failure.
void write_report(const VerificationReport& r);

}  // namespace lrkit
