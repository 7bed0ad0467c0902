// Command-line front end.  Exit codes: 0 success / equal verdict, 1 parse
// error, 2 internal invariant breach, 3 negative verdict (not-equal, or a
// failed axiom / oracle suite).

#include <algorithm>
#include <chrono>
#include <functional>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffr/export.hpp"
#include "ffr/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInternal = 2;
constexpr int kExitNegative = 3;

ffr::Variety parse_variety(std::string const& name) {
  if (name == "ffr") return ffr::Variety::ffr;
  if (name == "ffrs") return ffr::Variety::ffr_s;
  if (name == "ffrp") return ffr::Variety::ffr_p;
  throw CLI::ValidationError("--variety", "must be one of ffr, ffrs, ffrp");
}

std::vector<ffr::Generator> parse_alphabet(std::string const& spec) {
  std::vector<ffr::Generator> out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) {
      out.emplace_back(item);
    }
  }
  return out;
}

// Parses the term and, when a pinned alphabet was given, rejects
// generators outside it.
ffr::TermPtr parse_pinned(std::string const& text, std::string const& alphabet_spec) {
  ffr::TermPtr t = ffr::parse(text);
  if (alphabet_spec.empty()) {
    return t;
  }
  std::vector<ffr::Generator> allowed = parse_alphabet(alphabet_spec);
  std::function<void(ffr::TermPtr const&)> walk = [&](ffr::TermPtr const& s) {
    switch (s->kind()) {
      case ffr::TermKind::gen:
        if (std::find(allowed.begin(), allowed.end(), s->generator()) ==
            allowed.end()) {
          throw ffr::ParseError(
              "generator '" + s->generator().name() + "' not in the alphabet", 0);
        }
        return;
      case ffr::TermKind::lambda:
        return;
      case ffr::TermKind::prod:
        walk(s->left());
        walk(s->right());
        return;
      case ffr::TermKind::plus:
      case ffr::TermKind::max:
        walk(s->arg());
        return;
    }
  };
  walk(t);
  return t;
}

double decide_seconds(ffr::Variety variety, std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ffr::Generator> alphabet{ffr::Generator("x"), ffr::Generator("y")};
  ffr::TermPtr u = ffr::random_term(rng, alphabet, size);
  ffr::TermPtr v = ffr::random_term(rng, alphabet, size);
  auto start = std::chrono::steady_clock::now();
  volatile bool sink = ffr::decide(u, v, variety);
  (void)sink;
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

int run(int argc, char** argv) {
  CLI::App app{"Word problems in the free F-restriction semigroups"};
  app.require_subcommand(1);

  std::string variety_flag = "ffr";
  app.add_option("--variety", variety_flag, "ffr, ffrs or ffrp (default ffr)")
      ->capture_default_str();

  std::string term_text;
  std::string term_text_v;
  std::string alphabet_spec = "x";
  std::size_t samples = 5000;
  std::size_t max_complexity = 5;
  std::size_t sample_pairs = 0;
  std::uint64_t seed = 0;
  std::string sizes_spec = "250,500,1000,2000";

  std::string pinned_alphabet;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term to its canonical element (JSON)");
  eval_cmd->add_option("term", term_text, "term text")->required();
  eval_cmd->add_option("--alphabet", pinned_alphabet,
                       "restrict generators to this comma-separated set");

  auto* eq_cmd = app.add_subcommand("eq", "Decide equality of two terms");
  eq_cmd->add_option("u", term_text, "first term")->required();
  eq_cmd->add_option("v", term_text_v, "second term")->required();
  eq_cmd->add_option("--alphabet", pinned_alphabet,
                     "restrict generators to this comma-separated set");

  auto* dot_cmd = app.add_subcommand("dot", "Evaluate a term and print its graph as DOT");
  dot_cmd->add_option("term", term_text, "term text")->required();
  dot_cmd->add_option("--alphabet", pinned_alphabet,
                      "restrict generators to this comma-separated set");

  auto* axioms_cmd = app.add_subcommand("axioms", "Randomized axiom checks");
  axioms_cmd->add_option("--samples", samples, "random triples to draw")
      ->capture_default_str();
  axioms_cmd->add_option("--max-complexity", max_complexity, "term complexity bound")
      ->capture_default_str();
  axioms_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();

  auto* oracle_cmd =
      app.add_subcommand("oracle-check", "Compare decide with the rewrite-search oracle");
  oracle_cmd->add_option("--alphabet", alphabet_spec, "comma-separated generators")
      ->capture_default_str();
  oracle_cmd->add_option("--max-complexity", max_complexity, "corpus complexity bound")
      ->capture_default_str();
  oracle_cmd
      ->add_option("--sample-pairs", sample_pairs,
                   "0 = exhaustive, otherwise number of sampled pairs")
      ->capture_default_str();
  oracle_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();

  auto* bench_cmd = app.add_subcommand("bench", "Time decide on random term pairs");
  bench_cmd->add_option("--sizes", sizes_spec, "comma-separated complexities")
      ->capture_default_str();
  bench_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();

  // Let --variety appear after the subcommand too.
  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  ffr::Variety variety = parse_variety(variety_flag);

  if (*eval_cmd) {
    std::cout << ffr::to_json(ffr::eval(parse_pinned(term_text, pinned_alphabet), variety));
    return kExitOk;
  }
  if (*eq_cmd) {
    bool eq = ffr::decide(parse_pinned(term_text, pinned_alphabet),
                          parse_pinned(term_text_v, pinned_alphabet), variety);
    std::cout << (eq ? "equal" : "not-equal") << "\n";
    return eq ? kExitOk : kExitNegative;
  }
  if (*dot_cmd) {
    std::cout << ffr::to_dot(ffr::eval(parse_pinned(term_text, pinned_alphabet), variety));
    return kExitOk;
  }
  if (*axioms_cmd) {
    ffr::AxiomReport report =
        ffr::check_axioms(variety, samples, max_complexity, seed);
    std::cout << "variety " << ffr::variety_name(report.variety) << ", seed "
              << report.seed << ": " << report.samples << " samples, "
              << report.checks << " checks, " << report.violations.size()
              << " violations, " << report.informational.size()
              << " informational failures\n";
    for (auto const& v : report.violations) {
      std::cout << "violation: " << v.law << "  on  " << v.witness << "\n";
    }
    for (auto const& v : report.informational) {
      std::cout << "informational: " << v.law << "  on  " << v.witness << "\n";
    }
    nlohmann::ordered_json summary{
        {"variety", ffr::variety_name(report.variety)},
        {"seed", report.seed},
        {"samples", report.samples},
        {"checks", report.checks},
        {"violations", nlohmann::ordered_json::array()},
        {"informational", report.informational.size()}};
    for (auto const& v : report.violations) {
      summary["violations"].push_back({{"law", v.law}, {"witness", v.witness}});
    }
    std::cout << summary.dump() << "\n";
    return report.ok() ? kExitOk : kExitNegative;
  }
  if (*oracle_cmd) {
    ffr::CorpusResult result = ffr::corpus_check(
        variety, parse_alphabet(alphabet_spec), max_complexity, sample_pairs, seed);
    std::cout << "variety " << ffr::variety_name(variety) << ": "
              << result.pairs_checked << " pairs, " << result.disagreements.size()
              << " disagreements\n";
    for (auto const& d : result.disagreements) {
      std::cout << "disagreement: " << d.u << "  vs  " << d.v << " (decide says "
                << (d.decide_verdict ? "equal" : "not-equal") << ")\n";
    }
    nlohmann::ordered_json summary{
        {"variety", ffr::variety_name(variety)},
        {"seed", seed},
        {"pairs_checked", result.pairs_checked},
        {"disagreements", nlohmann::ordered_json::array()}};
    for (auto const& d : result.disagreements) {
      summary["disagreements"].push_back(
          {{"u", d.u}, {"v", d.v}, {"decide", d.decide_verdict}});
    }
    std::cout << summary.dump() << "\n";
    return result.ok() ? kExitOk : kExitNegative;
  }
  if (*bench_cmd) {
    std::vector<std::size_t> sizes;
    std::istringstream in(sizes_spec);
    std::string item;
    while (std::getline(in, item, ',')) {
      sizes.push_back(static_cast<std::size_t>(std::stoull(item)));
    }
    std::cout << "variety " << ffr::variety_name(variety) << "\n";
    std::cout << "size\tseconds\n";
    for (std::size_t size : sizes) {
      std::cout << size << "\t" << decide_seconds(variety, size, seed) << "\n";
    }
    return kExitOk;
  }
  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (ffr::ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (ffr::WordError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (std::invalid_argument const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
