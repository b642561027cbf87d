#include "sgforge/cli.hpp"

#include "sgforge/classify.hpp"
#include "sgforge/enumerate.hpp"
#include "sgforge/error.hpp"
#include "sgforge/search.hpp"
#include "sgforge/serialize.hpp"
#include "sgforge/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

namespace sgforge::cli {
namespace {

constexpr int kUsage = 2;
constexpr int kCounterexample = 1;

struct UsageError : Error {
  using Error::Error;
};

void check_genus(int g) {
  if (g < 0) throw UsageError("--genus must be >= 0");
  if (g > max_genus()) {
    throw UsageError("--genus " + std::to_string(g) + " exceeds SGFORGE_MAX_GENUS=" +
                     std::to_string(max_genus()));
  }
}

bool passes_filter(const ClassificationReport& r, const std::string& filter) {
  if (filter.empty()) return true;
  if (filter == "uesy") return r.uesy.has_value();
  if (filter == "selfdual") return r.self_dual_max;
  if (filter == "almost") return r.almost_symmetric;
  if (filter == "nearly") return r.nearly_gorenstein;
  if (filter == "minmult") return r.minimal_multiplicity;
  if (filter == "symmetric") return r.symmetric;
  throw UsageError("unknown filter '" + filter + "'");
}

std::vector<NumericalSemigroup> read_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::vector<NumericalSemigroup> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    out.push_back(parse_semigroup(line));
  }
  return out;
}

// Computes f over items in parallel and writes results in input order,
// one chunk at a time so that memory stays bounded.
template <class T, class F>
void ordered_parallel_write(const std::vector<T>& items, int jobs, std::ostream& out, F&& f) {
  constexpr std::size_t kChunk = 1024;
  std::vector<std::string> lines;
  for (std::size_t begin = 0; begin < items.size(); begin += kChunk) {
    const std::size_t end = std::min(items.size(), begin + kChunk);
    lines.assign(end - begin, std::string());
    std::optional<std::string> failure;
    const auto n = static_cast<std::ptrdiff_t>(end - begin);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        lines[static_cast<std::size_t>(i)] = f(items[begin + static_cast<std::size_t>(i)]);
      } catch (const std::exception& e) {
#pragma omp critical(sgforge_cli_failure)
        if (!failure) failure = e.what();
      }
    }
    if (failure) throw Error(*failure);
    for (const auto& l : lines) out << l << '\n';
  }
}

}  // namespace

int max_genus() {
  if (const char* env = std::getenv("SGFORGE_MAX_GENUS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      return 18;
    }
  }
  return 18;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants, classification and theorem checks for numerical semigroup rings",
               "sgforge"};
  app.require_subcommand(1);

  std::string gens;
  std::string ideal_text;
  std::string file;
  std::string filter;
  std::string format = "json";
  std::string theorem;
  int genus = -1;
  int jobs = default_jobs();
  std::optional<int> bound;
  bool all = false;

  auto* inv = app.add_subcommand("invariants", "core invariants of a semigroup");
  inv->add_option("GENS", gens, "generators, e.g. 4,5,7")->required();

  auto* cls = app.add_subcommand("classify", "full classification report");
  cls->add_option("GENS", gens, "generators, e.g. 4,5,7");
  cls->add_option("--file", file, "batch file, one generator list per line");
  cls->add_option("--jobs", jobs, "worker threads for batch mode")->check(CLI::PositiveNumber);

  auto* dual_cmd = app.add_subcommand("dual", "canonical dual of a relative ideal");
  dual_cmd->add_option("GENS", gens, "generators of H")->required();
  dual_cmd->add_option("--ideal", ideal_text, "ideal generators, or gens@H")->required();

  auto* bg_cmd = app.add_subcommand("bg", "certified interval for bg");
  bg_cmd->add_option("GENS", gens, "generators of H")->required();
  bg_cmd->add_option("--bound", bound, "largest colength to search")->check(CLI::NonNegativeNumber);

  auto* en = app.add_subcommand("enumerate", "stream reports for every semigroup up to a genus");
  en->add_option("--genus", genus, "genus bound")->required();
  en->add_option("--filter", filter, "uesy|selfdual|almost|nearly|minmult|symmetric")
      ->check(CLI::IsMember({"uesy", "selfdual", "almost", "nearly", "minmult", "symmetric"}));
  en->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  auto* ver = app.add_subcommand("verify", "run theorem checks over all semigroups up to a genus");
  auto* theorem_opt = ver->add_option("--theorem", theorem, "check id");
  auto* all_opt = ver->add_flag("--all", all, "run every registered check");
  theorem_opt->excludes(all_opt);
  ver->add_option("--genus", genus, "genus bound")->required();
  ver->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* sur = app.add_subcommand("survey", "trace / self-dual / bg survey rows");
  sur->add_option("--genus", genus, "genus bound")->required();
  sur->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.push_back("sgforge");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (inv->parsed()) {
      const NumericalSemigroup h = parse_semigroup(gens);
      out << to_json(h, h.invariants()).dump() << '\n';
      return 0;
    }
    if (cls->parsed()) {
      if (gens.empty() == file.empty()) throw UsageError("classify needs exactly one of GENS or --file");
      if (!file.empty()) {
        const auto batch = read_batch(file);
        ordered_parallel_write(batch, jobs, out,
                               [](const NumericalSemigroup& h) { return to_json(classify(h)).dump(); });
        return 0;
      }
      out << to_json(classify(parse_semigroup(gens))).dump() << '\n';
      return 0;
    }
    if (dual_cmd->parsed()) {
      const NumericalSemigroup h = parse_semigroup(gens);
      std::string ideal_gens = ideal_text;
      if (const auto at = ideal_text.find('@'); at != std::string::npos) {
        if (!(parse_semigroup(ideal_text.substr(at + 1)) == h)) {
          throw UsageError("ideal ambient " + ideal_text.substr(at + 1) + " differs from " + gens);
        }
        ideal_gens = ideal_text.substr(0, at);
      }
      const RelativeIdeal e = ideal_from_generators(h, parse_int_list(ideal_gens));
      const RelativeIdeal d = dual(h, e);
      const auto shift = is_isomorphic(e, d);
      nlohmann::json j = {{"semigroup", h.to_string()},
                          {"ideal", to_json(e)},
                          {"dual", to_json(d)},
                          {"shift", shift ? nlohmann::json(*shift) : nlohmann::json(nullptr)}};
      out << j.dump() << '\n';
      return 0;
    }
    if (bg_cmd->parsed()) {
      const NumericalSemigroup h = parse_semigroup(gens);
      nlohmann::json j = to_json(bg_bounds(h, bound));
      j["gens"] = h.min_generators();
      out << j.dump() << '\n';
      return 0;
    }
    if (en->parsed()) {
      check_genus(genus);
      if (format == "csv") out << report_csv_header() << '\n';
      enumerate_by_genus_serial(genus, [&](const NumericalSemigroup& h) {
        const ClassificationReport r = classify(h);
        if (!passes_filter(r, filter)) return true;
        if (format == "csv") {
          out << to_csv(r) << '\n';
        } else {
          out << to_json(r).dump() << '\n';
        }
        return true;
      });
      return 0;
    }
    if (ver->parsed()) {
      check_genus(genus);
      if (!all && theorem.empty()) throw UsageError("verify needs --theorem ID or --all");
      std::vector<VerificationOutcome> outcomes;
      if (all) {
        outcomes = verify_all(genus, jobs);
      } else {
        outcomes.push_back(verify(theorem, genus, jobs));
      }
      bool ok = true;
      for (const auto& o : outcomes) {
        out << to_json(o).dump() << '\n';
        ok = ok && o.pass;
      }
      return ok ? 0 : kCounterexample;
    }
    if (sur->parsed()) {
      check_genus(genus);
      const auto all_h = collect_by_genus(genus);
      std::size_t violations = 0;
      ordered_parallel_write(all_h, jobs, out, [&](const NumericalSemigroup& h) {
        const SurveyRow row = survey_questions(h);
        if (row.violation()) {
#pragma omp atomic
          ++violations;
        }
        return to_json(row).dump();
      });
      err << "survey: " << all_h.size() << " rows, " << violations << " flagged\n";
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownTheorem& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GcdNotOne& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotMember& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCounterexample;
  }
  return kUsage;
}

}  // namespace sgforge::cli
