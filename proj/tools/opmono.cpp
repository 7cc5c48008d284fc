// opmono: command-line front end. Every subcommand prints one JSON document
// on stdout; diagnostics go to stderr. Exit 1 on invalid input, 2 when a
// reported check fails.

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "opmono/checks.hpp"
#include "opmono/clt.hpp"
#include "opmono/cumulants.hpp"
#include "opmono/json_io.hpp"
#include "opmono/moment_oracle.hpp"
#include "opmono/partitions.hpp"
#include "opmono/series.hpp"

using nlohmann::json;
using namespace opmono;

namespace {

constexpr std::size_t kMaxDegree = 6;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::size_t check_degree(std::size_t degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw UsageError("--degree must be between 1 and " + std::to_string(kMaxDegree));
  }
  return degree;
}

// "[1,2,1]" -> {0,1,0}
std::vector<int> parse_word(const std::string& text, std::size_t components) {
  const json j = parse_json(text, "--word");
  if (!j.is_array() || j.empty()) throw UsageError("--word: expected a nonempty array such as [1,2,1]");
  std::vector<int> word;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long>() < 1 || x.get<std::size_t>() > components) {
      throw UsageError("--word: indices must be integers between 1 and " + std::to_string(components));
    }
    word.push_back(x.get<int>() - 1);
  }
  return word;
}

std::vector<BMatrix> parse_args(const std::string& text, std::size_t n, std::size_t dim) {
  const json j = parse_json(text, "--args");
  if (!j.is_array() || j.size() != n) {
    throw UsageError("--args: expected an array of " + std::to_string(n) + " matrices");
  }
  std::vector<BMatrix> args;
  for (std::size_t i = 0; i < n; ++i) args.push_back(bmatrix_from_json(j[i], dim, "--args/" + std::to_string(i)));
  return args;
}

json word_json(std::span<const int> word) {
  json out = json::array();
  for (int i : word) out.push_back(i + 1);
  return out;
}

PartitionKind parse_kind(const std::string& kind) {
  static const std::map<std::string, PartitionKind> kinds{
      {"all", PartitionKind::All},           {"nc", PartitionKind::NonCrossing},
      {"interval", PartitionKind::IntervalBlocks}, {"ordered", PartitionKind::Ordered},
      {"monotone", PartitionKind::Monotone}, {"monotone-pair", PartitionKind::MonotonePair}};
  return kinds.at(kind);
}

// A word and optional arguments: one value, or a table over matrix units.
json evaluate_word(const std::function<BMatrix(std::span<const int>, std::span<const BMatrix>)>& f,
                   const std::vector<int>& word, const std::optional<std::string>& args_text, std::size_t dim) {
  json out{{"word", word_json(word)}};
  if (args_text) {
    out["value"] = to_json(f(word, parse_args(*args_text, word.size(), dim)));
  } else {
    json values = json::array();
    for (const auto& tuple : basis_tuples(dim, word.size())) values.push_back(to_json(f(word, tuple)));
    out["values"] = std::move(values);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact operator-valued monotone probability"};
  app.require_subcommand(1);

  std::string kind;
  int n = 0;
  bool count_only = false;
  auto* partitions = app.add_subcommand("partitions", "Enumerate a partition family");
  partitions->add_option("--kind", kind, "all | nc | interval | ordered | monotone | monotone-pair")
      ->required()
      ->check(CLI::IsMember({"all", "nc", "interval", "ordered", "monotone", "monotone-pair"}));
  partitions->add_option("--n", n, "Ground set size")->required();
  partitions->add_flag("--count-only", count_only, "Print only the number of partitions");

  std::string ordered;
  auto* qmap = app.add_subcommand("qmap", "Collapse an ordered partition to a non-crossing partition");
  qmap->add_option("--ordered", ordered, "Ordered partition as JSON, outermost block first")->required();

  std::string model_path;
  std::string cumulants_path;
  std::size_t degree = 4;
  std::optional<std::string> word_text;
  std::optional<std::string> args_text;
  std::string method = "interpolation";

  auto add_word_options = [&](CLI::App* sub) {
    sub->add_option("--word", word_text, "Index word, 1-based, e.g. [1,2,1]");
    sub->add_option("--args", args_text, "Arguments b_1..b_n as JSON matrices (default: all matrix units)");
  };

  auto* moments = app.add_subcommand("moments", "Joint moments of a model");
  auto* moments_source = moments->add_option("--model", model_path, "Model JSON file");
  moments->add_option("--from-cumulants", cumulants_path, "Cumulant series JSON (as printed by `cumulants`)")
      ->excludes(moments_source);
  moments->add_option("--degree", degree, "Maximal word length (1-6)");
  add_word_options(moments);

  auto* cumulants = app.add_subcommand("cumulants", "Monotone cumulants of a model");
  cumulants->add_option("--model", model_path, "Model JSON file")->required();
  cumulants->add_option("--degree", degree, "Maximal word length (1-6)");
  cumulants->add_option("--method", method, "interpolation | inversion")
      ->check(CLI::IsMember({"interpolation", "inversion"}));
  add_word_options(cumulants);

  std::string model_y;
  std::uint64_t seed = 0;
  auto* muraki = app.add_subcommand("muraki", "Compare mu^X odot mu^Y with the mixed-moment oracle for X + Y");
  muraki->add_option("--model", model_path, "Model for X")->required();
  muraki->add_option("--model-y", model_y, "Model for Y, monotone independent after X")->required();
  muraki->add_option("--degree", degree, "Maximal word length (1-6); above 4 checked on seeded random arguments");
  muraki->add_option("--seed", seed, "Seed for randomized checks");

  long copies = 0;
  std::string dot_method = "qmap";
  auto* dot = app.add_subcommand("dot", "Moments of N.X, the sum of N monotone i.i.d. copies");
  dot->add_option("--model", model_path, "Model JSON file")->required();
  dot->add_option("--N", copies, "Number of copies")->required()->check(CLI::NonNegativeNumber);
  dot->add_option("--method", dot_method, "qmap | reduction")->check(CLI::IsMember({"qmap", "reduction"}));
  add_word_options(dot);

  auto* clt = app.add_subcommand("clt", "Central limit moments of a centered single-variable model");
  clt->add_option("--model", model_path, "Model JSON file with one variable")->required();
  clt->add_option("--degree", degree, "Maximal word length (1-6)");

  std::string suite = "all";
  auto* check = app.add_subcommand("check", "Run invariant suites");
  check->add_option("--suite", suite, "all | partitions | oracle | cumulants | series | clt")
      ->check(CLI::IsMember({"all", "partitions", "oracle", "cumulants", "series", "clt"}));
  check->add_option("--seed", seed, "Seed for the generated models");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (partitions->parsed()) {
      const auto list = enumerate(parse_kind(kind), n);
      json out{{"count", list.size()}};
      if (!count_only) {
        json items = json::array();
        for (const auto& p : list) items.push_back(to_json(p));
        out["kind"] = kind;
        out["n"] = n;
        out["partitions"] = std::move(items);
      }
      emit(out);
      return 0;
    }
    if (qmap->parsed()) {
      const BlockList blocks = blocks_from_json(parse_json(ordered, "--ordered"), "--ordered");
      int ground = 0;
      for (const auto& b : blocks) ground = std::max(ground, b.back());
      emit(to_json(q_map(OrderedPartition(ground, blocks)).blocks()));
      return 0;
    }
    if (moments->parsed() || cumulants->parsed() || dot->parsed()) {
      check_degree(degree);
      std::optional<BSeries> source;
      std::size_t components = 0;
      std::size_t dim = 0;
      if (moments->parsed() && !cumulants_path.empty()) {
        // Rebuild moments from a cumulant series through the moment-cumulant formula.
        const json doc = read_json_file(cumulants_path);
        if (!doc.contains("components") || !doc["components"].is_number_integer() || !doc.contains("series")) {
          throw JsonInputError(cumulants_path + ": expected the output of `cumulants`");
        }
        const BSeries kappa = series_from_json(doc["series"], doc["components"].get<std::size_t>());
        if (degree > kappa.degree_cap()) throw UsageError("--degree exceeds the degree of the cumulant file");
        const CumulantSystem k(kappa.components(), kappa.dim(), kappa.degree_cap(), kappa.entry());
        source = from_moments(moment_system_from_cumulants(k));
      } else {
        if (model_path.empty()) throw UsageError("--model or --from-cumulants is required");
        const MatrixModel model = read_model_file(model_path);
        const MomentSystem x = moments_of(model, dot->parsed() ? kMaxDegree : degree);
        if (cumulants->parsed()) {
          source = from_cumulants(method == "inversion" ? cumulants_from_moments(x) : memoize(cumulant(x)));
        } else if (dot->parsed()) {
          if (!word_text) throw UsageError("dot: --word is required");
          const MomentSystem nx = dot_system(x, copies, dot_method == "reduction" ? DotMethod::Reduction : DotMethod::QMap);
          source = BSeries(x.components(), x.dim(), kMaxDegree, BMatrix::identity(x.dim()), nx.evaluator());
        } else {
          source = from_moments(x);
        }
      }
      components = source->components();
      dim = source->dim();
      json out{{"components", components}, {"d", dim}};
      if (word_text) {
        const auto word = parse_word(*word_text, components);
        if (word.size() > source->degree_cap()) throw UsageError("--word is longer than the degree");
        out["result"] = evaluate_word([&](auto w, auto b) { return (*source)(w, b); }, word, args_text, dim);
      } else {
        if (args_text) throw UsageError("--args requires --word");
        out["degree"] = degree;
        out["series"] = series_to_json(*source, degree);
      }
      if (dot->parsed()) out["N"] = copies;
      if (cumulants->parsed()) out["method"] = method;
      emit(out);
      return 0;
    }
    if (muraki->parsed()) {
      check_degree(degree);
      const MomentSystem x = moments_of(read_model_file(model_path), degree);
      const MomentSystem y = moments_of(read_model_file(model_y), degree);
      const BSeries lhs = muraki_sum(x, y);
      const BSeries rhs = muraki_oracle(x, y);
      std::optional<Mismatch> m = first_mismatch(lhs, rhs, Exhaustive{std::min<std::size_t>(degree, 4)});
      if (!m && degree > 4) m = first_mismatch(lhs, rhs, Randomized{seed, degree, 2});
      json out{{"degree", degree}, {"equal", !m.has_value()}, {"exhaustive_degree", std::min<std::size_t>(degree, 4)}};
      if (m) out["mismatch_word"] = word_json(m->indices);
      emit(out);
      return m ? 2 : 0;
    }
    if (clt->parsed()) {
      check_degree(degree);
      const MomentSystem x = memoize(moments_of(read_model_file(model_path), degree));
      validate_clt_input(x);
      json limits = json::object();
      bool agree = true;
      for (std::size_t len = 1; len <= degree; ++len) {
        json values = json::array();
        for (const auto& tuple : basis_tuples(x.dim(), len)) {
          const BMatrix v = clt_limit(x, tuple);
          agree = agree && v == clt_oracle(x, tuple);
          values.push_back(to_json(v));
        }
        limits[std::to_string(len)] = std::move(values);
      }
      emit({{"d", x.dim()}, {"degree", degree}, {"limit_moments", limits}, {"oracle_agrees", agree}});
      return agree ? 0 : 2;
    }
    if (check->parsed()) {
      bool all_passed = true;
      json results = json::array();
      run_suite(suite, CheckOptions{seed}, [&](const CheckResult& r) {
        std::cerr << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name << " (" << r.seconds << " s)"
                  << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
        all_passed = all_passed && r.passed;
        results.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      });
      emit({{"passed", all_passed}, {"results", results}, {"seed", seed}, {"suite", suite}});
      return all_passed ? 0 : 2;
    }
  } catch (const std::exception& e) {
    // Invalid input of any kind: files, JSON, shapes, degrees.
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
