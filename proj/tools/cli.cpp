#include "polysum/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polysum/certify.hpp"
#include "polysum/errors.hpp"
#include "polysum/pipelines.hpp"
#include "polysum/universality.hpp"

namespace polysum::cli {

namespace {

unsigned default_jobs() {
  if (const char* env = std::getenv("POLYSUM_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  return 1;
}

Domain parse_domain(const std::string& s) {
  if (s == "Z") return Domain::integers;
  if (s == "N") return Domain::naturals;
  throw PreconditionError("--over must be Z or N");
}

std::string triple(const std::array<Int, 3>& t) {
  return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

std::string pair_text(std::pair<Int, Int> p) {
  return std::to_string(p.first) + "," + std::to_string(p.second);
}

std::string outcome(const ScanReport& r) {
  return r.first_failure ? "first-failure " + std::to_string(*r.first_failure) : "no-failure";
}

DiagonalForm form_of(const std::vector<Int>& coef) {
  if (coef.size() != 3) throw PreconditionError("--form takes three coefficients a,b,c");
  return DiagonalForm(coef[0], coef[1], coef[2]);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sums of generalized polygonal numbers: witnesses, scans and certificates",
               "polysum"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string sum_text, over = "Z", cert_path, out_dir, file;
  Int n = 0, bound = 0, b_max = 10, c_max = 10;
  std::vector<Int> form;
  unsigned jobs = default_jobs();
  bool use_pipeline = false;

  auto nonneg = CLI::Range(Int{0}, std::numeric_limits<Int>::max() / 1024);
  auto positive = CLI::Range(Int{1}, std::numeric_limits<Int>::max() / 1024);
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "Worker threads (default $POLYSUM_JOBS or 1)")
        ->check(CLI::Range(1u, 1024u));
  };

  auto* witness_cmd = app.add_subcommand("witness", "Constructive witness for one n");
  witness_cmd->add_option("--sum", sum_text, "Sum such as p5+2p5+6p5")->required();
  witness_cmd->add_option("--n", n, "Integer to represent")->required()->check(nonneg);
  witness_cmd->add_option("--over", over, "Index domain Z or N")->check(CLI::IsMember({"Z", "N"}));
  witness_cmd->add_option("--cert", cert_path, "Write the certificate to this file");

  auto* range_cmd = app.add_subcommand("check-range", "Decide representability of every n <= max");
  range_cmd->add_option("--sum", sum_text)->required();
  range_cmd->add_option("--max", bound)->required()->check(nonneg);
  range_cmd->add_option("--over", over)->check(CLI::IsMember({"Z", "N"}));
  range_cmd->add_flag("--pipeline", use_pipeline, "Witness each n with its constructive chain");
  add_jobs(range_cmd);

  auto* excluded_cmd = app.add_subcommand("excluded", "Integers <= max missed by a ternary form");
  excluded_cmd->add_option("--form", form, "Coefficients a,b,c")->required()->delimiter(',')->check(positive);
  excluded_cmd->add_option("--max", bound)->required()->check(nonneg);

  auto* dickson_cmd = app.add_subcommand("dickson", "Closed-form excluded-set membership");
  dickson_cmd->add_option("--form", form)->required()->delimiter(',')->check(positive);
  dickson_cmd->add_option("--n", n)->required()->check(nonneg);

  auto* filter_cmd = app.add_subcommand("filter", "Pairs (b,c) with p5+bp5+cp5 surviving to max");
  filter_cmd->add_option("--b-max", b_max)->check(positive);
  filter_cmd->add_option("--c-max", c_max)->check(positive);
  filter_cmd->add_option("--max", bound)->required()->check(nonneg);
  add_jobs(filter_cmd);

  auto* conjecture_cmd = app.add_subcommand("conjecture", "Scan the fourteen conjectured pairs");
  conjecture_cmd->add_option("--max", bound)->required()->check(nonneg);
  add_jobs(conjecture_cmd);

  auto* certify_cmd = app.add_subcommand("certify-range", "Build and verify certificates for n <= max");
  certify_cmd->add_option("--sum", sum_text)->required();
  certify_cmd->add_option("--max", bound)->required()->check(nonneg);
  certify_cmd->add_option("--out", out_dir, "Directory for <n>.json files");
  add_jobs(certify_cmd);

  auto* verify_cmd = app.add_subcommand("verify-cert", "Verify a certificate file");
  verify_cmd->add_option("--file", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*witness_cmd) {
      const auto sum = parse_sum(sum_text, parse_domain(over));
      const auto w = witness(sum, n);
      out << "n=" << n << " indices=" << triple(w.indices) << "\n";
      if (!cert_path.empty()) {
        std::ofstream f(cert_path);
        if (!f) {
          err << "error: cannot write " << cert_path << "\n";
          return kUsage;
        }
        f << serialize(w.certificate);
        err << "wrote " << cert_path << "\n";
      }
      return kOk;
    }

    if (*range_cmd) {
      const auto sum = parse_sum(sum_text, parse_domain(over));
      err << "scanning n <= " << bound << " for " << sum.to_string() << " over " << over
          << " with " << jobs << " job(s)\n";
      const auto report = use_pipeline ? check_range_pipeline(sum, bound, jobs)
                                       : check_range(sum, bound, jobs);
      out << "sum=" << sum.to_string() << " over=" << over << " max=" << bound << " "
          << outcome(report) << "\n";
      return report.no_failure() ? kOk : kNegative;
    }

    if (*excluded_cmd) {
      const auto missed = excluded_set_bruteforce(form_of(form), bound);
      for (std::size_t i = 0; i < missed.size(); ++i) out << (i ? " " : "") << missed[i];
      out << "\n";
      return kOk;
    }

    if (*dickson_cmd) {
      const bool member = dickson_member(form_of(form), n);
      out << (member ? "true" : "false") << "\n";
      return member ? kOk : kNegative;
    }

    if (*filter_cmd) {
      for (Int b = 1; b <= b_max; ++b) {
        for (Int c = b; c <= c_max; ++c) {
          const auto f = find_counterexample(pentagonal_sum(b, c), bound, jobs);
          out << pair_text({b, c}) << " "
              << (f ? "first-failure " + std::to_string(*f) : std::string("no-failure")) << "\n";
        }
      }
      return kOk;
    }

    if (*conjecture_cmd) {
      const auto reports = check_open_pairs(bound, jobs);
      bool all_ok = true;
      for (std::size_t i = 0; i < reports.size(); ++i) {
        out << pair_text(open_pairs()[i]) << " " << outcome(reports[i]) << "\n";
        all_ok = all_ok && reports[i].no_failure();
      }
      return all_ok ? kOk : kNegative;
    }

    if (*certify_cmd) {
      const auto sum = parse_sum(sum_text);
      if (!has_pipeline(sum)) throw PreconditionError("no constructive chain for " + sum.to_string());
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      Int verified = 0;
      std::optional<Int> first_bad;
      for (Int k = 0; k <= bound; ++k) {
        const auto w = witness(sum, k);
        const auto text = serialize(w.certificate);
        const auto verdict = verify_text(text);
        if (verdict) {
          ++verified;
        } else if (!first_bad) {
          first_bad = k;
          err << "n=" << k << ": " << verdict.reason << "\n";
        }
        if (!out_dir.empty()) {
          std::ofstream(std::filesystem::path(out_dir) / (std::to_string(k) + ".json")) << text;
        }
        if (k > 0 && k % 10000 == 0) err << "certified n <= " << k << "\n";
      }
      out << "sum=" << sum.to_string() << " max=" << bound << " verified=" << verified
          << " total=" << bound + 1 << "\n";
      return first_bad ? kNegative : kOk;
    }

    if (*verify_cmd) {
      std::ifstream f(file);
      if (!f) {
        err << "error: cannot read " << file << "\n";
        return kUsage;
      }
      std::stringstream buf;
      buf << f.rdbuf();
      const auto verdict = verify_text(buf.str());
      if (verdict) {
        out << "valid\n";
        return kOk;
      }
      out << "invalid: " << verdict.reason << "\n";
      return kNegative;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PipelineFailure& e) {
    err << "internal error in step " << e.step() << ": " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}

}  // namespace polysum::cli
