// Acceptance runner: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "golden.hpp"
#include "mutations.hpp"
#include "polysum/certify.hpp"
#include "polysum/pipelines.hpp"
#include "polysum/ternary.hpp"
#include "polysum/universality.hpp"
#include "transform_sweeps.hpp"

using namespace polysum;
using sweeps::Tally;

namespace {

const unsigned kJobs = std::max(1u, std::thread::hardware_concurrency());

// Runs body(n, tally) for n in [0, bound] across kJobs threads.
Tally parallel_range(Int bound, const std::function<void(Int, Tally&)>& body) {
  std::vector<Tally> parts(kJobs);
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < kJobs; ++j) {
    pool.emplace_back([&, j] {
      for (Int n = j; n <= bound; n += kJobs) {
        try {
          body(n, parts[j]);
        } catch (const std::exception& e) {
          parts[j].expect(false, "n=" + std::to_string(n) + " threw: " + e.what());
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  Tally total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

Int poly(Int m, Int x) { return ((m - 2) * x * x - (m - 4) * x) / 2; }

// Witness, verify and re-evaluate with an independent closed form.
void check_witness(const SumForm& sum, Int n, Tally& t) {
  auto w = witness(sum, n);
  Int total = 0;
  for (std::size_t i = 0; i < 3; ++i)
    total += sum.terms()[i].coef * poly(sum.terms()[i].kind.order(), w.indices[i]);
  auto v = verify(w.certificate);
  t.expect(v.ok && total == n && w.certificate.indices == w.indices,
           sum.to_string() + " n=" + std::to_string(n) + " " + v.reason);
}

struct Criterion {
  int id;
  const char* title;
  std::function<Tally()> run;
};

std::vector<Criterion> criteria() {
  return {
      {1, "pentagonal chains verify for n <= 100000",
       [] {
         Tally all;
         for (auto [b, c] : std::vector<std::pair<Int, Int>>{{1, 3}, {2, 3}, {2, 6}, {3, 3}, {3, 4}, {3, 9}}) {
           const SumForm s = pentagonal_sum(b, c);
           all.merge(parallel_range(100'000, [&](Int n, Tally& t) { check_witness(s, n, t); }));
         }
         return all;
       }},
      {2, "p3+p5+p11 and 3p3+p5+p7 chains verify for n <= 100000",
       [] {
         Tally all;
         for (const char* text : {"p3+p5+p11", "3p3+p5+p7"}) {
           const SumForm s = parse_sum(text);
           all.merge(parallel_range(100'000, [&](Int n, Tally& t) { check_witness(s, n, t); }));
         }
         return all;
       }},
      {3, "closed-form excluded sets match the sieve for n <= 100000",
       [] {
         Tally t;
         for (auto f : {DiagonalForm(1, 1, 3), DiagonalForm(1, 2, 3), DiagonalForm(1, 3, 3)}) {
           auto ex = excluded_set_bruteforce(f, 100'000);
           std::vector<char> in(100'001, 0);
           for (Int n : ex) in[n] = 1;
           for (Int n = 0; n <= 100'000; ++n)
             t.expect(dickson_member(f, n) == static_cast<bool>(in[n]), "form n=" + std::to_string(n));
         }
         return t;
       }},
      {4, "known-universal sums have no failure up to 100000",
       [] {
         Tally t;
         for (const char* text : golden::kKnownUniversal)
           t.expect(check_range(parse_sum(text), 100'000, kJobs).no_failure(), text);
         return t;
       }},
      {5, "candidate filter to 10000 keeps exactly the twenty pairs",
       [] {
         Tally t;
         t.expect(surviving_pairs(10, 10, 10'000, kJobs) == golden::kSurvivors, "survivor set");
         for (const auto& [pair, n] : golden::counterexamples()) {
           auto found = find_counterexample(pentagonal_sum(pair.first, pair.second), 10'000, kJobs);
           t.expect(found == n, "pair " + std::to_string(pair.first) + "," + std::to_string(pair.second));
         }
         return t;
       }},
      {6, "fourteen open pairs have no failure up to 100000",
       [] {
         Tally t;
         for (const auto& r : check_open_pairs(100'000, kJobs)) t.expect(r.no_failure(), r.sum.to_string());
         return t;
       }},
      {7, "rewrite properties within 50 and exhaustive sweeps to 10000",
       [] {
         Tally t = sweeps::bounded_properties(50);
         t.merge(sweeps::exhaustive_sweeps(10'000));
         return t;
       }},
      {8, "certificates verify, mutants fail, serialization is canonical",
       [] {
         Tally all;
         for (const char* text : {"p5+p5+3p5", "p5+2p5+3p5", "p5+2p5+6p5", "p5+3p5+3p5",
                                  "p5+3p5+4p5", "p5+3p5+9p5", "p3+p5+p11", "3p3+p5+p7"}) {
           const SumForm s = parse_sum(text);
           all.merge(parallel_range(10'000, [&](Int n, Tally& t) {
             const auto c = witness(s, n).certificate;
             const std::string label = s.to_string() + " n=" + std::to_string(n);
             const std::string once = serialize(c);
             t.expect(verify_text(once).ok, label + " does not verify");
             t.expect(roundtrip(c) == c && serialize(parse_certificate(once)) == once &&
                          serialize(c) == once,
                      label + " roundtrip");
             if (n <= 300) {
               for (const auto& m : mutations::generate(c))
                 t.expect(!verify_text(m.text).ok, label + " mutant survives: " + m.label);
             }
           }));
         }
         return all;
       }},
  };
}

}  // namespace

int main() {
  std::printf("acceptance: %u worker thread(s)\n", kJobs);
  int failed = 0;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.expect(false, std::string("threw: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = t.failures == 0 && t.checked > 0;
    failed += !pass;
    std::printf("[%s] criterion %d: %s (checked %ld, failures %ld, %.1fs)%s%s\n", pass ? "PASS" : "FAIL",
                c.id, c.title, t.checked, t.failures, secs, pass ? "" : " first: ",
                pass ? "" : t.first.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
