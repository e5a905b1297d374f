#include "lrkit_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>

#include "lrkit/error.hpp"
#include "lrkit/formulas.hpp"
#include "lrkit/hive.hpp"
#include "lrkit/horn.hpp"
#include "lrkit/piecewise.hpp"
#include "lrkit/tableaux.hpp"
#include "lrkit/verify.hpp"

namespace lrkit::cli {

namespace {

struct Globals {
  int n = 0;
  bool json = false;
};

int count_parts(const std::string& text) {
  if (text.empty()) return 1;
  return static_cast<int>(std::count(text.begin(), text.end(), ',')) + 1;
}

/// Parses every partition at the rank given by --n, or at the longest listed
/// length when --n is absent.
std::vector<Partition> partitions(const Globals& g, std::initializer_list<const std::string*> texts) {
  int rank = g.n;
  if (rank <= 0) {
    for (const auto* t : texts) rank = std::max(rank, count_parts(*t));
  }
  std::vector<Partition> out;
  for (const auto* t : texts) out.push_back(Partition::parse(*t, rank));
  return out;
}

std::vector<Int> parse_point(const std::string& text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string field = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad coordinate '" + field + "' in point");
    }
    pos = comma + 1;
  }
  return out;
}

int verdict_exit(const Verdict& v) { return v.status == Status::Fail ? 1 : 0; }

void print_verdict(std::ostream& out, const Globals& g, const Verdict& v) {
  if (g.json) {
    out << to_json(v).dump(2) << '\n';
    return;
  }
  out << status_name(v.status) << ' ' << v.check << " lambda=" << v.lambda << " mu=" << v.mu << " left=" << v.left.dump()
      << " right=" << v.right.dump();
  if (v.witness) out << " (" << *v.witness << ')';
  out << '\n';
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Littlewood-Richardson coefficients, near-rectangular counting functions and conjecture checks",
               "lrkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--n", g.n, "Rank; partitions are zero-padded to it")->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "Print structured results as JSON");
  app.set_version_flag("--version", std::string(version()) + " (tables revision " + tables_revision() + ")");
  app.fallthrough();

  std::function<int()> action;

  // lr
  std::string lambda_text, mu_text, nu_text, method = "auto";
  auto* lr = app.add_subcommand("lr", "One coefficient c^nu_{lambda mu}");
  lr->add_option("--lambda", lambda_text)->required();
  lr->add_option("--mu", mu_text)->required();
  lr->add_option("--nu", nu_text)->required();
  lr->add_option("--method", method)->check(CLI::IsMember({"hive", "tableaux", "gl3", "nr", "auto"}));
  lr->callback([&] {
    action = [&] {
      auto p = partitions(g, {&lambda_text, &mu_text, &nu_text});
      Int value = 0;
      if (method == "gl3") {
        value = gl3_coefficient(p[0], p[1], p[2]);
      } else if (method == "nr") {
        value = nr_coefficient(p[0], p[1], p[2]);
      } else {
        value = lr_coefficient(p[0], p[1], p[2], parse_backend(method));
      }
      if (g.json) {
        out << nlohmann::json{{"lambda", p[0].to_string()}, {"mu", p[1].to_string()}, {"nu", p[2].to_string()},
                              {"method", method}, {"value", value}}
                   .dump()
            << '\n';
      } else {
        out << value << '\n';
      }
      return 0;
    };
  });

  // multiset
  auto* ms = app.add_subcommand("multiset", "Histogram of the positive coefficients of V(lambda) x V(mu)");
  ms->add_option("--lambda", lambda_text)->required();
  ms->add_option("--mu", mu_text)->required();
  ms->add_option("--method", method)->check(CLI::IsMember({"hive", "tableaux", "closed", "auto"}));
  Int threshold = -1;
  ms->add_option("--above", threshold, "Print only the number of nu with coefficient above this value");
  ms->callback([&] {
    action = [&] {
      auto p = partitions(g, {&lambda_text, &mu_text});
      auto m = multiplicity_multiset(p[0], p[1], parse_backend(method));
      if (threshold >= 0) {
        out << m.count_above(threshold) << '\n';
      } else if (g.json) {
        out << to_json(m).dump() << '\n';
      } else {
        out << m.to_string() << " components=" << m.components << " sum=" << m.mult_sum << '\n';
      }
      return 0;
    };
  });

  // conj1 / conj2 / czsum
  bool waive = false;
  auto add_check = [&](const char* name, const char* help,
                       Verdict (*run)(const Partition&, const Partition&, const CheckOptions&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--lambda", lambda_text)->required();
    sub->add_option("--mu", mu_text)->required();
    sub->add_option("--method", method)->check(CLI::IsMember({"hive", "tableaux", "closed", "auto"}));
    sub->add_flag("--waive", waive, "Run even when lambda is not near-rectangular");
    sub->callback([&, run] {
      action = [&, run] {
        auto p = partitions(g, {&lambda_text, &mu_text});
        Verdict v = run(p[0], p[1], {waive, parse_backend(method)});
        print_verdict(out, g, v);
        return verdict_exit(v);
      };
    });
  };
  add_check("conj1", "Compare coefficient multisets for lambda and lambda*", check_conjecture1);
  add_check("conj2", "Compare component counts for lambda and lambda*", check_conjecture2);
  add_check("czsum", "Compare multiplicity sums for lambda and lambda*", cz_sum_check);

  // stability
  std::string ranks = "4-6";
  auto* st = app.add_subcommand("stability", "Rank independence for near-rectangular lambda, mu");
  st->add_option("--lambda", lambda_text, "lambda1,lambda2")->required();
  st->add_option("--mu", mu_text, "mu1,mu2")->required();
  st->add_option("--nu", nu_text, "nu1,nu2,nu3,nu4; omit to scan the whole support");
  st->add_option("--ranks", ranks, "Range such as 4-6");
  st->callback([&] {
    action = [&] {
      auto l = parse_point(lambda_text), m = parse_point(mu_text);
      if (l.size() != 2 || m.size() != 2) throw InvalidArgument("--lambda and --mu take two parts");
      const auto dash = ranks.find('-');
      if (dash == std::string::npos) throw InvalidArgument("--ranks takes lo-hi");
      const int lo = std::stoi(ranks.substr(0, dash)), hi = std::stoi(ranks.substr(dash + 1));
      Verdict v;
      if (nu_text.empty()) {
        v = stability_scan(l[0], l[1], m[0], m[1], lo, hi);
      } else {
        auto nu = parse_point(nu_text);
        if (nu.size() != 4) throw InvalidArgument("--nu takes four parts");
        v = stability_check(l[0], l[1], m[0], m[1], {nu[0], nu[1], nu[2], nu[3]}, lo, hi);
      }
      print_verdict(out, g, v);
      return verdict_exit(v);
    };
  });

  // horn
  std::string family;
  bool generators = false;
  auto* horn = app.add_subcommand("horn", "Membership in a near-rectangular face of the rank-4 Horn cone");
  horn->add_option("--family", family)->required()->check(CLI::IsMember({"nr", "nr2"}));
  horn->add_option("--lambda", lambda_text);
  horn->add_option("--mu", mu_text);
  horn->add_option("--nu", nu_text);
  horn->add_flag("--generators", generators, "List the Hilbert basis instead");
  horn->callback([&] {
    action = [&] {
      if (generators) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& r : hilbert_generators(family)) {
          const Int c = count_hives(r.triple.lambda, r.triple.mu, r.triple.nu);
          if (g.json) {
            list.push_back({{"lambda", r.triple.lambda.to_string()}, {"mu", r.triple.mu.to_string()},
                            {"nu", r.triple.nu.to_string()}, {"description", r.description}, {"coefficient", c}});
          } else {
            out << r.triple.lambda << " | " << r.triple.mu << " | " << r.triple.nu << "  c=" << c << "  "
                << r.description << '\n';
          }
        }
        if (g.json) out << list.dump(2) << '\n';
        return 0;
      }
      if (lambda_text.empty() || mu_text.empty() || nu_text.empty()) {
        throw InvalidArgument("horn needs --lambda, --mu and --nu (or --generators)");
      }
      Globals rank4 = g;
      rank4.n = 4;
      auto p = partitions(rank4, {&lambda_text, &mu_text, &nu_text});
      const Membership m = family == "nr2" ? horn4_nr2_member(p[0], p[1], p[2]) : horn4_nr_member(p[0], p[1], p[2]);
      const auto& system = family == "nr2" ? horn4_nr2_facets() : horn4_nr_facets();
      if (g.json) {
        nlohmann::json violated = nlohmann::json::array();
        for (auto i : m.violated) violated.push_back({{"index", i}, {"facet", system.inequalities[i].text}});
        out << nlohmann::json{{"member", m.member}, {"balanced", m.balanced}, {"violated", violated}}.dump(2) << '\n';
      } else {
        out << (m.member ? "member" : "not a member") << '\n';
        if (!m.balanced) out << "  unbalanced: |lambda|+|mu| != |nu|\n";
        for (auto i : m.violated) out << "  violates #" << i << ": " << system.inequalities[i].text << '\n';
      }
      return 0;
    };
  });

  // piecewise
  std::string point_text, dump_path;
  Int verify_range = -1, c_range = -1;
  auto* pw = app.add_subcommand("piecewise", "Hard-coded piecewise counting functions");
  pw->add_option("--family", family)->required()->check(CLI::IsMember({"gl3", "gl4nr2", "gl4nr-samples"}));
  pw->add_option("--point", point_text, "k1,k2,l1,l2,c (k1,k2,mu1,mu2,mu3 for gl4nr-samples)");
  pw->add_option("--verify-range", verify_range, "Compare against enumeration on coordinates up to B");
  pw->add_option("--c-range", c_range, "Threshold bound for --verify-range (default B)");
  pw->add_option("--dump", dump_path, "Write the function as JSON ('-' for standard output)");
  pw->callback([&] {
    action = [&] {
      int status = 0;
      if (!dump_path.empty()) {
        nlohmann::json j;
        if (family == "gl4nr-samples") {
          j = to_json(PiecewiseFunction{gl4nr_sample_variables(), Cone{}, gl4nr_sample_pieces()});
        } else {
          j = to_json(family == "gl3" ? gl3_count_function() : gl4nr2_count_function());
        }
        if (dump_path == "-") {
          out << j.dump(2) << '\n';
        } else {
          std::ofstream file(dump_path);
          file << j.dump(2) << '\n';
          if (!file) throw std::runtime_error("cannot write " + dump_path);
        }
      }
      if (!point_text.empty()) {
        const auto point = parse_point(point_text);
        if (point.size() != 5) throw InvalidArgument("--point takes five coordinates");
        if (family == "gl4nr-samples") {
          bool any = false;
          for (std::size_t i = 0; i < gl4nr_sample_pieces().size(); ++i) {
            const Piece& piece = gl4nr_sample_pieces()[i];
            if (!piece.cone.contains(point)) continue;
            any = true;
            out << eval_piece(piece, point).to_string() << " piece " << i << " (" << piece.label << ")\n";
          }
          if (!any) out << "outside every sample cone\n";
        } else {
          const auto& f = family == "gl3" ? gl3_count_function() : gl4nr2_count_function();
          const Evaluation e = eval_piecewise(f, point);
          if (g.json) {
            nlohmann::json j = {{"value", e.value}};
            j["piece"] = e.piece ? nlohmann::json(*e.piece) : nlohmann::json(nullptr);
            if (e.piece) j["label"] = f.pieces[*e.piece].label;
            out << j.dump() << '\n';
          } else if (e.piece) {
            out << e.value << " piece " << *e.piece << " (" << f.pieces[*e.piece].label << ")\n";
          } else {
            out << e.value << " outside support\n";
          }
        }
      }
      if (verify_range >= 0) {
        const ScanResult r = verify_family_range(family, verify_range, c_range >= 0 ? c_range : verify_range);
        if (g.json) {
          out << to_json(r).dump(2) << '\n';
        } else {
          out << (r.ok() ? "PASS" : "FAIL") << ' ' << r.family << " bound=" << r.bound << " points=" << r.points
              << " compared=" << r.compared;
          if (r.mismatch) out << " first mismatch: " << *r.mismatch;
          out << '\n';
        }
        if (!r.ok()) status = 1;
      }
      if (dump_path.empty() && point_text.empty() && verify_range < 0) {
        const auto& f = family == "gl4nr-samples" ? gl4nr_sample_pieces()
                        : family == "gl3"         ? gl3_count_function().pieces
                                                  : gl4nr2_count_function().pieces;
        out << f.size() << " pieces\n";
      }
      return status;
    };
  });

  // sweep
  std::string config_path, check = "conj1", format = "json", output;
  Int lambda_bound = 3, mu_bound = 8;
  int jobs = 0;
  bool timing = false;
  auto* sw = app.add_subcommand("sweep", "Run a check over a grid of near-rectangular lambda and all small mu");
  sw->add_option("--config", config_path, "JSON sweep configuration");
  sw->add_option("--check", check)->check(CLI::IsMember({"conj1", "conj2", "cz_sum", "czsum", "stability"}));
  sw->add_option("--lambda-bound", lambda_bound, "Bound on max(lambda1-lambda2, lambda2)");
  sw->add_option("--mu-bound", mu_bound, "Bound on |mu|");
  sw->add_option("--jobs", jobs, "Worker threads (default: LRKIT_JOBS or 1)");
  sw->add_option("--output", output, "Report file");
  sw->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  sw->add_flag("--timing", timing, "Record per-case timings in the report");
  sw->callback([&] {
    action = [&] {
      SweepConfig config;
      if (!config_path.empty()) {
        std::ifstream file(config_path);
        if (!file) throw InvalidArgument("cannot read " + config_path);
        nlohmann::json j;
        try {
          file >> j;
        } catch (const nlohmann::json::exception& e) {
          throw InvalidArgument(std::string("bad config: ") + e.what());
        }
        if (g.n > 0 && !j.contains("n")) j["n"] = g.n;
        config = sweep_config_from_json(j);
      } else {
        nlohmann::json j = {{"n", g.n > 0 ? g.n : 4}, {"lambda_bound", lambda_bound}, {"mu_bound", mu_bound},
                            {"check", check}, {"format", format}, {"timing", timing}};
        config = sweep_config_from_json(j);
      }
      if (!output.empty()) config.output = output;
      if (jobs > 0) {
        config.jobs = jobs;
      } else if (config_path.empty()) {
        const char* env = std::getenv("LRKIT_JOBS");
        config.jobs = env ? std::max(1, std::atoi(env)) : 1;
      }
      const VerificationReport report = sweep(config);
      write_report(report);
      const auto& s = report.summary;
      if (g.json && config.output.empty()) {
        out << to_json(report).dump(2) << '\n';
      } else {
        out << "cases=" << s.cases << " pass=" << s.passes << " fail=" << s.fails << " skip=" << s.skips
            << " expected_fail=" << s.expected_fails << '\n';
        for (std::size_t i = 0; i < report.cases.size(); ++i) {
          if (report.cases[i].status == Status::Fail) print_verdict(out, Globals{}, report.cases[i]);
        }
      }
      return report.unexpected_failures() == 0 ? 0 : 1;
    };
  });

  // repro-gl5
  auto* repro = app.add_subcommand("repro-gl5", "Reproduce the rank-5 component count mismatch 34 vs 33");
  repro->callback([&] {
    action = [&] {
      Verdict v = reproduce_gl5_counterexample();
      print_verdict(out, g, v);
      return verdict_exit(v);
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace lrkit::cli
