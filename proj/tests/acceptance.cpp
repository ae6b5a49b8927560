// Acceptance runner: one PASS/FAIL line per criterion.

#include "jordanc/suites.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using namespace jordanc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome from_report(const VerificationReport& r, bool allow_info = true) {
  std::ostringstream os;
  os << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, " << r.count(Status::Info) << " info";
  const bool ok = r.ok() && r.count(Status::Pass) > 0 && (allow_info || r.count(Status::Info) == 0);
  return {ok, os.str()};
}

Outcome composite_table(const SuiteConfig& base) {
  SuiteConfig cfg = base;
  cfg.max_n = 3;
  // Every pair drawn from R2, R3, C2, C3, Q3 must carry a verdict.
  return from_report(run_table(cfg), false);
}

Outcome quaternionic_pair(const SuiteConfig& cfg) {
  const Ejc q = parse_algebra("Q2@univ");
  ProductOptions o;
  o.seed = cfg.seed;
  const CompositeResult p = canonical_product(q, q, o);
  const CenterDecomposition c = center_and_summands(p.product, cfg.seed);
  bool all_r16 = c.summands.size() == 4;
  for (std::size_t i = 0; i < c.summands.size(); ++i) {
    const SummandClass s = classify_invariants(c.summands[i].dim(), c.summand_ranks[i]);
    all_r16 = all_r16 && s.family == "R" && s.n == 16;
  }
  std::ostringstream os;
  os << "dim " << p.dim() << ", central idempotents " << c.central_idempotents.size() << ", type "
     << classification_string(p.classification);
  return {p.dim() == 544 && c.central_idempotents.size() == 4 && all_r16, os.str()};
}

Outcome low_rank(const SuiteConfig& cfg) {
  const std::pair<const char*, const char*> pairs[] = {{"V2", "R2"}, {"V3", "C2"}, {"V5", "Q2"}};
  bool ok = true;
  std::ostringstream os;
  for (const auto& [v, m] : pairs) {
    const Ejc a = parse_algebra(v);
    const Ejc b = parse_algebra(m);
    const int ra = rank(a, cfg.seed);
    const int rb = rank(b, cfg.seed);
    ok = ok && a.dim() == b.dim() && ra == rb;
    os << v << "=(" << a.dim() << "," << ra << ") " << m << "=(" << b.dim() << "," << rb << ") ";
  }
  return {ok, os.str()};
}

Outcome with_suite(const char* name, const SuiteConfig& cfg) { return from_report(run_suite(name, cfg)); }

}  // namespace

int main(int argc, char** argv) {
  SuiteConfig cfg;
  if (argc > 1) cfg.seed = std::stoull(argv[1]);
  cfg.draws = 100;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"composite table", [&] { return composite_table(cfg); }},
      {"Q2 universal square", [&] { return quaternionic_pair(cfg); }},
      {"low-rank isomorphisms", [&] { return low_rank(cfg); }},
      {"reversibility no-go", [&] { return with_suite("nogo", cfg); }},
      {"compact structure", [&] { return with_suite("compact", cfg); }},
      {"dagger-compact suite", [&] { return with_suite("dagger", cfg); }},
      {"local tomography", [&] { return with_suite("tomography", cfg); }},
      {"supermultiplicativity", [&] { return with_suite("distinguishability", cfg); }},
      {"mixed states with pure marginals", [&] { return with_suite("marginals", cfg); }},
      {"oracle equivalence for state morphisms", [&] { return with_suite("witness", cfg); }},
      {"property suites", [&] { return with_suite("properties", cfg); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << i + 1 << "] " << criteria[i].first << ": "
              << o.detail << " (" << std::fixed << std::setprecision(1) << secs << " s)" << std::endl;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failures) << "/" << criteria.size() << " criteria pass"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
