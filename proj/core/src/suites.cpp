#include "jordanc/suites.hpp"

#include "jordanc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <set>

namespace jordanc {

namespace {

using json = nlohmann::json;

SummandClass make_class(const std::string& family, int n) {
  int dim = 0;
  if (family == "R") dim = n * (n + 1) / 2;
  if (family == "C") dim = n * n;
  if (family == "Q") dim = n * (2 * n - 1);
  return {family, n, dim, n};
}

json classes_json(const std::vector<SummandClass>& cs) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back({{"type", c.name()}, {"dim", c.dim}, {"rank", c.rank}});
  return arr;
}

bool same_classes(std::vector<SummandClass> a, std::vector<SummandClass> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

ProductOptions product_options(const SuiteConfig& cfg, bool classify = true) {
  ProductOptions o;
  o.tol = cfg.tol;
  o.seed = cfg.seed;
  o.classify = classify;
  o.fixed_point_check = classify;
  return o;
}

VerificationReport new_report(const std::string& suite, const SuiteConfig& cfg) {
  VerificationReport r;
  r.suite = suite;
  r.seed = cfg.seed;
  r.tolerances = {{"dependency", cfg.tol}, {"eigen_group", kEigenGroupTol}, {"trace_form", "unweighted"}};
  return r;
}

struct Term {
  char family = 'R';
  int n = 0;
  bool universal = false;
};

std::optional<Term> parse_term(const std::string& s) {
  static const std::regex re(R"(^\s*([RCQV])(\d+)(@std|@univ)?\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) return std::nullopt;
  Term t;
  t.family = m[1].str()[0];
  t.n = std::stoi(m[2].str());
  t.universal = m[3].matched ? m[3].str() == "@univ" : t.family == 'V';
  return t;
}

json composite_json(const CompositeResult& p) {
  json j = {{"dim", p.dim()},
            {"dim_tensor", p.dim_tensor()},
            {"rank", p.rank()},
            {"summands", static_cast<int>(p.classification.size())},
            {"classification", classes_json(p.classification)},
            {"closure_rounds", p.closure_rounds},
            {"closure_residual", p.closure_residual}};
  if (p.fixed_point_dim) {
    j["fixed_point_dim"] = *p.fixed_point_dim;
    j["fixed_point_residual"] = *p.fixed_point_residual;
  }
  return j;
}

bool fixed_point_ok(const CompositeResult& p, double tol) {
  if (!p.fixed_point_dim) return true;
  return *p.fixed_point_dim == p.dim() && *p.fixed_point_residual < tol;
}

}  // namespace

std::optional<std::vector<SummandClass>> expected_product(const std::string& left, const std::string& right) {
  auto a = parse_term(left);
  auto b = parse_term(right);
  if (!a || !b) return std::nullopt;
  if (a->family == 'V' || b->family == 'V') return std::nullopt;
  if (a->n < 2 || b->n < 2) return std::nullopt;
  if ((a->family == 'Q' && a->n == 2) || (b->family == 'Q' && b->n == 2)) {
    if (a->family == 'Q' && b->family == 'Q' && a->n == 2 && b->n == 2 && a->universal && b->universal)
      return std::vector<SummandClass>(4, make_class("R", 16));
    return std::nullopt;
  }
  auto order = [](char f) { return f == 'R' ? 0 : f == 'C' ? 1 : 2; };
  if (order(a->family) > order(b->family)) std::swap(a, b);
  const int nm = a->n * b->n;
  const std::string pair{a->family, b->family};
  if (pair == "RR") return std::vector<SummandClass>{make_class("R", nm)};
  if (pair == "RC") return std::vector<SummandClass>{make_class("C", nm)};
  if (pair == "RQ") return std::vector<SummandClass>{make_class("Q", nm)};
  if (pair == "CC") {
    if (a->universal && b->universal) return std::vector<SummandClass>(2, make_class("C", nm));
    if (!a->universal && !b->universal) return std::vector<SummandClass>{make_class("C", nm)};
    return std::nullopt;
  }
  if (pair == "CQ") return std::vector<SummandClass>{make_class("C", 2 * nm)};
  if (pair == "QQ") return std::vector<SummandClass>{make_class("R", 4 * nm)};
  return std::nullopt;
}

VerificationReport run_product(const std::string& left, const std::string& right, const SuiteConfig& cfg) {
  VerificationReport rep = new_report("product", cfg);
  const Ejc a = parse_algebra(left);
  const Ejc b = parse_algebra(right);
  const CompositeResult p = canonical_product(a, b, product_options(cfg));
  const auto expected = expected_product(left, right);
  const json measured = composite_json(p);
  if (expected) {
    const bool ok = same_classes(p.classification, *expected) && p.closure_residual < cfg.tol && fixed_point_ok(p, cfg.tol);
    rep.check("product", {left, right}, {{"classification", classes_json(*expected)}}, measured, ok);
  } else {
    rep.add("product", {left, right}, nullptr, measured, Status::Info);
  }
  rep.check("product.closure_residual", {left, right}, "< tol", p.closure_residual, p.closure_residual < cfg.tol);
  return rep;
}

VerificationReport run_catalog(const SuiteConfig& cfg) {
  VerificationReport rep = new_report("catalog", cfg);
  struct Item {
    std::string spec;
    int dim;
    int rank;
  };
  std::vector<Item> items;
  for (int n = 1; n <= 4; ++n) {
    items.push_back({"R" + std::to_string(n), n * (n + 1) / 2, n});
    items.push_back({"C" + std::to_string(n), n * n, n});
    items.push_back({"C" + std::to_string(n) + "@univ", n * n, n});
  }
  for (int n = 1; n <= 3; ++n) items.push_back({"Q" + std::to_string(n), n * (2 * n - 1), n});
  items.push_back({"Q2@univ", 6, 2});
  items.push_back({"Q3@univ", 15, 3});
  for (int n = 2; n <= 6; ++n) items.push_back({"V" + std::to_string(n), n + 1, 2});
  for (int n : {2, 3, 5}) items.push_back({"V" + std::to_string(n) + "@std", n + 1, 2});
  items.push_back({"R2+C3", 12, 5});

  for (const auto& it : items) {
    const Ejc a = parse_algebra(it.spec);
    const int r = rank(a, cfg.seed);
    json m = {{"dim", a.dim()},
              {"rank", r},
              {"ambient", a.ambient().label()},
              {"embedding", to_string(a.embedding())},
              {"classification", classes_json(classify(a, cfg.seed))}};
    if (a.involution()) m["reversibility_gap"] = reversibility_gap(a);
    rep.check("catalog", {it.spec}, {{"dim", it.dim}, {"rank", it.rank}}, m, a.dim() == it.dim && r == it.rank);
  }
  try {
    parse_algebra("O3");
    rep.check("exceptional_refused", {"O3"}, "refused", "constructed", false);
  } catch (const NotSpecialError& e) {
    rep.check("exceptional_refused", {"O3"}, "refused", e.what(), true);
  }
  return rep;
}

VerificationReport run_table(const SuiteConfig& cfg) {
  VerificationReport rep = new_report("table", cfg);
  std::vector<std::string> objs;
  for (int n = 2; n <= cfg.max_n; ++n) objs.push_back("R" + std::to_string(n) + "@univ");
  for (int n = 2; n <= cfg.max_n; ++n) objs.push_back("C" + std::to_string(n) + "@univ");
  for (int n = 3; n <= cfg.max_n; ++n) objs.push_back("Q" + std::to_string(n) + "@univ");

  auto run_pair = [&](const std::string& l, const std::string& r, const std::string& id) {
    const CompositeResult p = canonical_product(parse_algebra(l), parse_algebra(r), product_options(cfg));
    const auto expected = expected_product(l, r);
    json m = composite_json(p);
    if (!expected) {
      rep.add(id, {l, r}, nullptr, m, Status::Info);
      return;
    }
    const bool ok = same_classes(p.classification, *expected) && p.closure_residual < 1e-8 && fixed_point_ok(p, 1e-8);
    int dim = 0;
    int rk = 0;
    for (const auto& c : *expected) {
      dim += c.dim;
      rk += c.rank;
    }
    rep.check(id, {l, r}, {{"classification", classes_json(*expected)}, {"dim", dim}, {"rank", rk}}, m, ok);
  };
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = i; j < objs.size(); ++j) run_pair(objs[i], objs[j], "table.universal");
  for (int n = 2; n <= cfg.max_n; ++n)
    for (int m = n; m <= cfg.max_n; ++m)
      run_pair("C" + std::to_string(n) + "@std", "C" + std::to_string(m) + "@std", "table.standard");
  return rep;
}

VerificationReport run_compact(const SuiteConfig& cfg) {
  VerificationReport rep = new_report("compact", cfg);
  rep.tolerances["basis_independence"] = 1e-10;
  rep.tolerances["positivity"] = 1e-10;
  rep.tolerances["snake"] = 1e-9;
  rep.tolerances["cup_dagger"] = 1e-11;
  ProductCache cache(product_options(cfg, false));
  std::vector<std::string> specs;
  for (const char* base : {"R2", "R3", "C2", "C3", "Q2", "Q3"}) specs.emplace_back(base);
  for (const char* base : {"R2", "R3", "C2", "C3", "Q2", "Q3"}) specs.emplace_back(std::string(base) + "@univ");
  for (const auto& s : specs) {
    const Ejc a = parse_algebra(s);
    const bool ur = s.rfind("Q2", 0) != 0;
    const CompactStructure cs = compact_structure(a, cfg.seed);
    rep.check("compact.basis_independence", {s}, "< 1e-10", cs.basis_independence_residual,
              cs.basis_independence_residual < 1e-10);
    rep.check("compact.positivity", {s}, ">= -1e-10", cs.min_eigenvalue, cs.min_eigenvalue >= -1e-10);
    const SnakeReport sn = snake_check(a, cfg.seed);
    rep.check("compact.snake", {s}, "< 1e-9", {{"left", sn.left_residual}, {"right", sn.right_residual}},
              sn.residual() < 1e-9);
    const double dag = distance(dagger(cup_map(a)), counit_map(a));
    rep.check("compact.cup_dagger_is_counit", {s}, "< 1e-11", dag, dag < 1e-11);
    const CupMembership cm = cup_membership(a, cache, cfg.tol, cfg.seed);
    const json m = {{"member", cm.member}, {"residual", cm.residual}};
    if (ur)
      rep.check("compact.cup_membership", {s}, true, m, cm.member);
    else
      rep.add("compact.cup_membership", {s}, nullptr, m, Status::Info);
  }
  return rep;
}

VerificationReport run_dagger(const SuiteConfig& cfg) {
  VerificationReport rep = new_report("dagger", cfg);
  ProductCache cache(product_options(cfg, false));
  SuiteOptions so;
  so.seed = cfg.seed;
  so.tol = cfg.tol;
  so.random_pairs = 20;

  auto objects = [](std::initializer_list<std::pair<const char*, Expectation>> list) {
    std::vector<SuiteObject> out;
    for (const auto& [s, e] : list) out.push_back({parse_algebra(s), e});
    return out;
  };
  const auto H = Expectation::Holds;
  struct Set {
    std::string name;
    std::vector<SuiteObject> objects;
  };
  const std::vector<Set> sets{
      {"standard", objects({{"R2", H}, {"R3", H}, {"C2", H}, {"C3", H}, {"Q3", H}, {"Q2", Expectation::ReportOnly}})},
      {"universal", objects({{"R2@univ", H}, {"R3@univ", H}, {"C2@univ", H}, {"C3@univ", H}, {"Q3@univ", H}})},
      {"spin", objects({{"R2@univ", H}, {"V4", Expectation::Violated}})},
  };
  for (const auto& set : sets) {
    VerificationReport part = dagger_compact_suite(set.objects, cache, so);
    for (auto& e : part.entries) e.check_id = set.name + "." + e.check_id;
    rep.append(part);
    rep.tolerances = part.tolerances;
  }
  return rep;
}

VerificationReport run_nogo(const SuiteConfig& cfg) {
  VerificationReport rep = new_report("nogo", cfg);
  rep.tolerances["genuine_violation"] = 1e-3;
  rep.tolerances["control_leak"] = 1e-8;
  ProductCache cache(product_options(cfg, false));
  const Ejc b = parse_algebra(cfg.factor);
  if (!b.involution()) {
    rep.check("nogo.involution", {cfg.factor}, "canonical involution present", false, false);
    return rep;
  }
  const int gap = reversibility_gap(b);
  if (cfg.factor == "V4")
    rep.check("nogo.gap", {cfg.factor}, 1, gap, gap == 1);
  else
    rep.add("nogo.gap", {cfg.factor}, nullptr, gap, Status::Info);

  const std::vector<std::string> lefts{"R2", "C2@univ"};
  if (gap > 0) {
    for (const auto& l : lefts) {
      const Ejc a = parse_algebra(l);
      const NoGoReport ng = reversibility_nogo(a, b, cache, cfg.seed);
      rep.check("nogo.hat_in_product", {l, cfg.factor}, "< tol",
                {{"residual", ng.hat_membership_residual}, {"product_dim", ng.product_dim}},
                ng.hat_membership_residual < cfg.tol);
      rep.check("nogo.leak", {l, cfg.factor}, "violation > 1e-3 (expected failure)",
                {{"max_leak", ng.max_leak}, {"leaks", ng.leaks}}, ng.max_leak > 1e-3);
    }
  } else {
    rep.add("nogo.premise", {cfg.factor}, nullptr, "factor is reversible; no leak expected", Status::Info);
  }

  const std::string control = gap > 0 ? "V3" : cfg.factor;
  const Ejc c = parse_algebra(control);
  rep.check("nogo.control_gap", {control}, 0, reversibility_gap(c), reversibility_gap(c) == 0);
  for (const auto& l : lefts) {
    const Ejc a = parse_algebra(l);
    Rng rng(cfg.seed);
    double worst = state_leak(a, c, (1.0 / real_inner(a.unit(), a.unit())) * a.unit(), cache);
    for (int s = 0; s < 10; ++s) worst = std::max(worst, state_leak(a, c, random_state_density(a, rng), cache));
    rep.check("nogo.control_leak", {l, control}, "<= 1e-8", worst, worst <= 1e-8);
  }
  return rep;
}

VerificationReport run_tomography(const SuiteConfig& cfg) {
  VerificationReport rep = new_report("tomography", cfg);
  struct Case {
    std::string l, r;
    int dt, dp;
    bool lt;
  };
  for (const Case& c : {Case{"R2", "R2", 9, 10, false}, Case{"C2", "C2", 16, 16, true},
                        Case{"Q2@univ", "Q2@univ", 36, 544, false}}) {
    const TomographyAudit t = tomography_audit(parse_algebra(c.l), parse_algebra(c.r), product_options(cfg, false));
    rep.check("tomography", {c.l, c.r}, {{"dim_tensor", c.dt}, {"dim_product", c.dp}, {"locally_tomographic", c.lt}},
              {{"dim_tensor", t.dim_tensor}, {"dim_product", t.dim_product}, {"locally_tomographic", t.locally_tomographic}},
              t.dim_tensor == c.dt && t.dim_product == c.dp && t.locally_tomographic == c.lt);
  }
  return rep;
}

VerificationReport run_distinguishability(const SuiteConfig& cfg) {
  VerificationReport rep = new_report("distinguishability", cfg);
  struct Case {
    std::string l, r;
    int bound, composite;
  };
  for (const Case& c : {Case{"R2", "R2", 4, 4}, Case{"Q2@univ", "Q2@univ", 4, 64}, Case{"C3", "R1", 3, 3}}) {
    const DistinguishabilityAudit d =
        distinguishability_audit(parse_algebra(c.l), parse_algebra(c.r), product_options(cfg, false));
    rep.check("distinguishability", {c.l, c.r},
              {{"rank_product_bound", c.bound}, {"rank_composite", c.composite},
               {"supermultiplicative", c.composite > c.bound}},
              {{"rank_product_bound", d.rank_product_bound}, {"rank_composite", d.rank_composite},
               {"supermultiplicative", d.supermultiplicative()}},
              d.rank_product_bound == c.bound && d.rank_composite == c.composite);
  }
  return rep;
}

namespace {

json product_state_json(const ProductState& ps) {
  return {{"gamma_support", ps.support_gamma},         {"gamma_min_eigenvalue", ps.min_eigenvalue_gamma},
          {"marginal_left_residual", ps.marginal_left_residual}, {"marginal_right_residual", ps.marginal_right_residual},
          {"marginal_left_support", ps.support_left},    {"marginal_right_support", ps.support_right}};
}

}  // namespace

VerificationReport run_marginals(const SuiteConfig& cfg) {
  VerificationReport rep = new_report("marginals", cfg);
  rep.tolerances["marginal"] = 1e-8;
  auto attempt = [&](const Ejc& a, const CompositeResult& p, std::uint64_t k) {
    const AlgebraElement alpha = pure_density(a, random_jordan_frame(a, cfg.seed + k).front());
    const AlgebraElement beta = pure_density(a, random_jordan_frame(a, cfg.seed + k + 1000).front());
    return product_state(a, a, p, alpha, beta, cfg.seed);
  };
  {
    const Ejc a = parse_algebra("Q2@univ");
    const CompositeResult p = canonical_product(a, a, product_options(cfg, false));
    std::optional<ProductState> found;
    ProductState last;
    for (std::uint64_t k = 0; k < 10 && !found; ++k) {
      last = attempt(a, p, k);
      if (last.support_gamma >= 2 && last.left_pure() && last.right_pure() && last.marginal_left_residual < 1e-8 &&
          last.marginal_right_residual < 1e-8)
        found = last;
    }
    rep.check("marginals.mixed_with_pure_marginals", {"Q2@univ", "Q2@univ"},
              "gamma support >= 2, pure marginals equal to alpha and beta", product_state_json(found ? *found : last),
              found.has_value());
  }
  {
    const Ejc a = parse_algebra("C2");
    const CompositeResult p = canonical_product(a, a, product_options(cfg, false));
    const ProductState ps = attempt(a, p, 0);
    rep.check("marginals.control_pure", {"C2", "C2"}, "gamma pure, pure marginals", product_state_json(ps),
              ps.gamma_pure() && ps.left_pure() && ps.right_pure() && ps.marginal_left_residual < 1e-8 &&
                  ps.marginal_right_residual < 1e-8);
  }
  return rep;
}

VerificationReport run_associativity(const SuiteConfig& cfg) {
  VerificationReport rep = new_report("associativity", cfg);
  struct Case {
    std::string a, b, c;
    SummandClass expected;
  };
  for (const Case& c : {Case{"R2", "R2", "R2", make_class("R", 8)}, Case{"R2", "C2", "R2", make_class("C", 8)},
                        Case{"C2@univ", "R2", "R1", make_class("C", 4)}}) {
    const AssociativityReport r =
        associativity_check(parse_algebra(c.a), parse_algebra(c.b), parse_algebra(c.c), product_options(cfg));
    const bool ok = r.dim_left_nested == c.expected.dim && r.dim_right_nested == c.expected.dim &&
                    r.residual < cfg.tol && r.reverse_residual < cfg.tol &&
                    same_classes(r.classification, {c.expected});
    rep.check("associativity", {c.a, c.b, c.c}, {{"dim", c.expected.dim}, {"type", c.expected.name()}},
              {{"dim_left_nested", r.dim_left_nested},
               {"dim_right_nested", r.dim_right_nested},
               {"residual", r.residual},
               {"reverse_residual", r.reverse_residual},
               {"classification", classes_json(r.classification)}},
              ok);
  }
  return rep;
}

VerificationReport run_witness(const SuiteConfig& cfg) {
  VerificationReport rep = new_report("witness", cfg);
  rep.tolerances["outside_component_min"] = 1e-2;
  ProductCache cache(product_options(cfg, false));
  const Ejc unit = unit_object();
  for (const char* s : {"R3@univ", "C2@univ"}) {
    const Ejc a = parse_algebra(s);
    Rng rng(cfg.seed);
    std::uniform_real_distribution<double> size(0.02, 0.5);
    int inside_pass = 0;
    int outside_fail = 0;
    double inside_worst = 0.0;
    double outside_best = std::numeric_limits<double>::infinity();
    constexpr int kCount = 50;
    for (int i = 0; i < kCount; ++i) {
      const AlgebraElement d = random_state_density(a, rng);
      const CjpResult in = is_cjp_relative(MorphismMap::functional(a.ambient(), d), a, unit, {}, cache, cfg.tol);
      inside_worst = std::max(inside_worst, in.max_residual);
      if (in.cjp_relative) ++inside_pass;

      const AlgebraElement h = random_hermitian(a.ambient(), rng);
      const AlgebraElement w = h - a.basis().project(h);
      const AlgebraElement d_out = d + (size(rng) / w.norm()) * w;
      const CjpResult out = is_cjp_relative(MorphismMap::functional(a.ambient(), d_out), a, unit, {}, cache, cfg.tol);
      outside_best = std::min(outside_best, out.max_residual);
      if (!out.cjp_relative) ++outside_fail;
    }
    rep.check("witness.inside_pass", {s}, kCount, {{"passed", inside_pass}, {"max_residual", inside_worst}},
              inside_pass == kCount);
    rep.check("witness.outside_fail", {s}, kCount, {{"failed", outside_fail}, {"min_residual", outside_best}},
              outside_fail == kCount);
  }
  return rep;
}

VerificationReport run_properties(const SuiteConfig& cfg) {
  VerificationReport rep = new_report("properties", cfg);
  rep.tolerances["jordan_identity"] = 1e-9;
  rep.tolerances["form_associativity"] = 1e-9;
  rep.tolerances["reconstruction"] = 1e-8;
  rep.tolerances["adjoint"] = 1e-10;
  const int n = cfg.draws;
  for (const char* s : {"R3", "C3@univ", "Q3", "V4", "Q2@univ", "R2+C2"}) {
    const Ejc a = parse_algebra(s);
    Rng rng(cfg.seed);
    auto unit_draw = [&] {
      AlgebraElement x = a.random_element(rng);
      return (1.0 / x.norm()) * x;
    };
    double jid = 0.0;
    double form = 0.0;
    for (int i = 0; i < n; ++i) {
      const AlgebraElement x = unit_draw();
      const AlgebraElement y = unit_draw();
      const AlgebraElement z = unit_draw();
      const AlgebraElement x2 = jordan(x, x);
      jid = std::max(jid, (jordan(x2, jordan(x, y)) - jordan(x, jordan(x2, y))).norm());
      form = std::max(form, std::abs(real_inner(jordan(x, y), z) - real_inner(y, jordan(x, z))));
    }
    rep.check("jordan_identity", {s}, "< 1e-9", {{"draws", n}, {"max_residual", jid}}, jid < 1e-9);
    rep.check("form_associativity", {s}, "< 1e-9", {{"draws", n}, {"max_residual", form}}, form < 1e-9);

    double recon = 0.0;
    double frame_defect = 0.0;
    std::set<int> sizes;
    for (int i = 0; i < n; ++i) {
      const AlgebraElement x = a.random_element(rng);
      const SpectralDecomposition sd = spectral(a, x, cfg.seed + static_cast<std::uint64_t>(i));
      recon = std::max(recon, (x - sd.reconstruct()).norm() / x.norm());
      AlgebraElement sum = AlgebraElement::zero(a.ambient());
      for (std::size_t p = 0; p < sd.frame.size(); ++p) {
        sum += sd.frame[p];
        frame_defect = std::max(frame_defect, (jordan(sd.frame[p], sd.frame[p]) - sd.frame[p]).norm());
        for (std::size_t q = p + 1; q < sd.frame.size(); ++q)
          frame_defect = std::max(frame_defect, jordan(sd.frame[p], sd.frame[q]).norm());
      }
      frame_defect = std::max(frame_defect, (sum - a.unit()).norm());
      sizes.insert(static_cast<int>(sd.frame.size()));
    }
    rep.check("spectral_reconstruction", {s}, "< 1e-8",
              {{"draws", n}, {"max_residual", recon}, {"frame_defect", frame_defect}},
              recon < 1e-8 && frame_defect < 1e-8);
    rep.check("rank_constancy", {s}, "one frame size", {{"draws", n}, {"frame_sizes", sizes}}, sizes.size() == 1);

    int mismatches = 0;
    int inside = 0;
    std::uniform_real_distribution<double> shift(-1.0, 1.0);
    for (int i = 0; i < n; ++i) {
      AlgebraElement x = a.random_element(rng);
      const double radius = std::max(std::abs(min_eigenvalue(x)), std::abs(min_eigenvalue(-1.0 * x)));
      x += (shift(rng) * radius + radius * 0.5) * a.unit();
      const bool cone = in_cone(a, x);
      if (cone) ++inside;
      double lowest = std::numeric_limits<double>::infinity();
      for (const auto& p : spectral(a, x, cfg.seed).frame) lowest = std::min(lowest, real_inner(x, p));
      for (int k = 0; k < 20; ++k) {
        const AlgebraElement y = a.random_element(rng);
        const AlgebraElement b = jordan(y, y);
        lowest = std::min(lowest, real_inner(x, b) / b.norm());
      }
      const bool dual = lowest >= -1e-9 * std::max(1.0, x.norm());
      if (dual != cone) ++mismatches;
    }
    rep.check("cone_self_duality", {s}, 0, {{"draws", n}, {"in_cone", inside}, {"mismatches", mismatches}},
              mismatches == 0);

    double involutive = 0.0;
    double adjoint = 0.0;
    const StarAlgebra& m = a.ambient();
    for (int i = 0; i < n; ++i) {
      RMatrix g(m.dim(), m.dim());
      for (Eigen::Index r = 0; r < g.rows(); ++r)
        for (Eigen::Index c = 0; c < g.cols(); ++c) g(r, c) = standard_normal(rng);
      const MorphismMap phi = i % 2 == 0 ? MorphismMap(m, m, g) : random_cp_map(m, m, rng);
      involutive = std::max(involutive, distance(dagger(dagger(phi)), phi));
      const AlgebraElement x = random_hermitian(m, rng);
      const AlgebraElement y = random_hermitian(m, rng);
      const double scale = x.norm() * y.norm() * std::max(1.0, phi.matrix().norm());
      adjoint = std::max(adjoint, std::abs(real_inner(phi.apply(x), y) - real_inner(x, dagger(phi).apply(y))) / scale);
    }
    rep.check("dagger_involutivity", {s}, "< 1e-10", {{"draws", n}, {"involution", involutive}, {"adjoint", adjoint}},
              involutive < 1e-10 && adjoint < 1e-10);
  }
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"catalog",   "table",         "compact", "dagger",
                                              "nogo",      "tomography",    "distinguishability",
                                              "marginals", "associativity", "witness", "properties"};
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "catalog") return run_catalog(cfg);
  if (name == "table") return run_table(cfg);
  if (name == "compact") return run_compact(cfg);
  if (name == "dagger") return run_dagger(cfg);
  if (name == "nogo") return run_nogo(cfg);
  if (name == "tomography") return run_tomography(cfg);
  if (name == "distinguishability") return run_distinguishability(cfg);
  if (name == "marginals") return run_marginals(cfg);
  if (name == "associativity") return run_associativity(cfg);
  if (name == "witness") return run_witness(cfg);
  if (name == "properties") return run_properties(cfg);
  throw ValidationError("unknown suite '" + name + "'");
}

}  // namespace jordanc
