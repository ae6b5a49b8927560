// jordanc: build canonical products of embedded Jordan algebras and run the
// verification suites.

#include "jordanc/errors.hpp"
#include "jordanc/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

struct Output {
  std::string format = "json";
  std::string out;
};

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << text;
}

void emit(const jordanc::VerificationReport& rep, const Output& o) {
  const std::string js = rep.to_json().dump(2) + "\n";
  const std::string md = rep.to_markdown();
  if (o.out.empty()) {
    if (o.format == "md" || o.format == "both") std::cout << md;
    if (o.format == "both") std::cout << "\n";
    if (o.format == "json" || o.format == "both") std::cout << js;
    return;
  }
  std::filesystem::path base(o.out);
  if (o.format == "json") {
    write_file(base, js);
  } else if (o.format == "md") {
    write_file(base, md);
  } else {
    base.replace_extension();
    write_file(base.string() + ".json", js);
    write_file(base.string() + ".md", md);
  }
  std::cerr << rep.suite << ": " << rep.count(jordanc::Status::Pass) << " pass, "
            << rep.count(jordanc::Status::Fail) << " fail, " << rep.count(jordanc::Status::Info) << " info\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euclidean Jordan algebras embedded in complex *-algebras: canonical products and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();

  jordanc::SuiteConfig cfg;
  Output output;
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Linear-dependency tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", output.format, "Report format")
      ->check(CLI::IsMember({"json", "md", "both"}))
      ->capture_default_str();
  app.add_option("--out", output.out, "Report path (both: writes <path>.json and <path>.md)");

  std::string left;
  std::string right;
  auto* product = app.add_subcommand("product", "Canonical product of two algebras, e.g. --left Q2@univ --right Q2@univ");
  product->add_option("--left", left, "Left algebra spec")->required();
  product->add_option("--right", right, "Right algebra spec")->required();

  app.add_subcommand("catalog", "Constructors with dimension, rank, type and reversibility gap");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(jordanc::suite_names()));
  verify->add_option("--max", cfg.max_n, "Largest matrix size in the table suite")
      ->capture_default_str()
      ->check(CLI::Range(2, 6));
  verify->add_option("--factor", cfg.factor, "Spin factor for the no-go suite")->capture_default_str();
  verify->add_option("--draws", cfg.draws, "Random draws per object in the property suite")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    jordanc::set_default_tolerance(cfg.tol);
    const auto t0 = std::chrono::steady_clock::now();
    jordanc::VerificationReport rep;
    if (*product)
      rep = jordanc::run_product(left, right, cfg);
    else if (app.got_subcommand("catalog"))
      rep = jordanc::run_catalog(cfg);
    else
      rep = jordanc::run_suite(suite, cfg);
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(rep, output);
    return rep.ok() ? 0 : 1;
  } catch (const jordanc::NotSpecialError& e) {
    std::cerr << "jordanc: " << e.what() << "\n";
    return 2;
  } catch (const jordanc::ValidationError& e) {
    std::cerr << "jordanc: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const jordanc::NumericalError& e) {
    std::cerr << "jordanc: numerical inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "jordanc: " << e.what() << "\n";
    return 3;
  }
}
