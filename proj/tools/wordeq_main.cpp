#include <wordeq/wordeq.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using wordeq::Json;

Json matrix_json(const wordeq::UnipotentMatrix& m) {
  Json j;
  j["dim"] = m.dim();
  j["entries"] = m.serialize_entries();
  return j;
}

wordeq::UnipotentMatrix matrix_from_json(const Json& j) {
  return wordeq::UnipotentMatrix::deserialize(j.at("dim").get<int>(),
                                              j.at("entries").get<std::vector<std::string>>());
}

Json series_json(const wordeq::NCSeries& s) {
  Json j;
  j["degree"] = s.trunc();
  Json terms = Json::array();
  for (const auto& [w, c] : s.terms()) terms.push_back(Json::array({w.str(), wordeq::rat_str(c)}));
  j["terms"] = terms;
  return j;
}

wordeq::NCSeries series_from_json(const Json& j) {
  wordeq::NCSeries s(j.at("degree").get<int>());
  for (const auto& term : j.at("terms"))
    s.set_coeff(wordeq::NCWord::parse(term.at(0).get<std::string>()), wordeq::Rat(term.at(1).get<std::string>()));
  return s;
}

Json element_json(const wordeq::GpGroup& g, const wordeq::GpElement& e) {
  Json j;
  j["p"] = g.p();
  j["gamma"] = e.gamma;
  j["beta"] = e.beta;
  return j;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

std::string witness_text(const wordeq::DecompositionWitness& w) {
  if (w.morphisms.empty()) return "(empty; the word is X itself)";
  return to_string(w) + "  (applied to X innermost-first)";
}

int cmd_classify(const std::string& word_text, std::uint32_t pmin, std::uint32_t pmax, std::uint32_t cutoff,
                 bool as_json) {
  wordeq::SurveyOptions opts;
  opts.p_min = pmin;
  opts.p_max = pmax;
  opts.small_prime_cutoff = cutoff;
  const wordeq::Word w = wordeq::parse_word(word_text);
  if (w.x_count() == 0) {
    std::cerr << "error: the word must contain at least one X\n";
    return 1;
  }
  const wordeq::SurveyRow row = wordeq::classify_word(w, opts);
  if (as_json) {
    std::cout << to_json(row).dump(2) << "\n";
    return 0;
  }
  std::cout << "word: " << render(w) << "  (length " << w.length() << ", " << w.x_count() << " X's)\n";
  if (row.verdict == wordeq::SurveyRow::Verdict::Decomposable) {
    std::cout << "totally decomposable\n";
    std::cout << "witness: " << witness_text(*row.witness) << "\n";
    std::cout << "radical solution X = " << solve_decomposable(*row.witness).str() << "\n";
  } else {
    std::cout << "not totally decomposable\n";
    std::cout << "prime scan [" << pmin << ", " << pmax << "]: " << row.profile->entries.size()
              << " primes, exceptional:";
    if (row.profile->exceptional.empty()) std::cout << " none";
    for (auto p : row.profile->exceptional) std::cout << " " << p;
    std::cout << "\n";
    for (const auto& cert : row.certificates)
      std::cout << "certificate " << to_json(cert)["family"].get<std::string>() << ": " << cert.summary << "\n";
    std::cout << "verdict: " << to_string(row.verdict) << "\n";
  }
  return 0;
}

int cmd_decompose(const std::string& word_text, bool as_json) {
  const wordeq::Word w = wordeq::parse_word(word_text);
  const auto witness = wordeq::decompose(w);
  if (as_json) {
    Json j;
    j["word"] = render(w);
    j["decomposable"] = witness.has_value();
    j["witness"] = witness ? wordeq::to_json(*witness) : Json(nullptr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (!witness) {
    std::cout << render(w) << " is not totally decomposable\n";
  } else {
    std::cout << render(w) << " is totally decomposable\n";
    std::cout << "witness: " << witness_text(*witness) << "\n";
    wordeq::Word acc = wordeq::Word::letter_x();
    std::cout << "replay: X";
    for (const auto& phi : witness->morphisms) {
      acc = apply_morphism(phi, acc);
      std::cout << " -" << to_string(phi) << "-> " << render(acc);
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_poly(const std::string& word_text, bool squares, bool as_json) {
  const wordeq::Word w = wordeq::parse_word(word_text);
  const wordeq::BivarPoly p = wordeq::word_polynomial(w);
  const wordeq::BivarPoly psq = wordeq::substitute_squares(p);
  if (as_json) {
    Json j;
    j["word"] = render(w);
    j["P"] = p.to_string();
    if (squares) j["P_squares"] = psq.to_string();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "P(x,y) = " << p.to_string() << "\n";
  if (squares) std::cout << "P(x^2,y^2) = " << psq.to_string() << "\n";
  return 0;
}

int cmd_scan(const std::string& word_text, std::uint32_t pmin, std::uint32_t pmax, bool as_json, bool csv,
             const std::string& out_path) {
  const wordeq::Word w = wordeq::parse_word(word_text);
  if (w.x_count() == 0) {
    std::cerr << "error: the word must contain at least one X\n";
    return 1;
  }
  const wordeq::PrimeProfile profile = wordeq::prime_profile(w, pmin, pmax);
  if (csv) {
    emit(wordeq::profile_csv(profile), out_path);
    return 0;
  }
  if (as_json || !out_path.empty()) {
    emit(to_json(profile).dump(2) + "\n", out_path);
    return 0;
  }
  std::cout << "word " << render(w) << ", scan [" << pmin << ", " << pmax << "]\n";
  for (const auto& e : profile.entries) {
    std::cout << e.p << ": " << (e.solvable ? "solvable" : "exceptional");
    if (e.witness) std::cout << "  (x,y) = (" << e.witness->first << ", " << e.witness->second << ")";
    std::cout << "\n";
  }
  std::cout << "exceptional primes:";
  if (profile.exceptional.empty()) std::cout << " none";
  for (auto p : profile.exceptional) std::cout << " " << p;
  std::cout << "\n";
  return 0;
}

int cmd_counterexample(const std::string& word_text, std::uint32_t pmin, std::uint32_t cap, int max_attempts,
                       bool as_json) {
  const wordeq::Word w = wordeq::parse_word(word_text);
  if (w.x_count() == 0) {
    std::cerr << "error: the word must contain at least one X\n";
    return 1;
  }
  if (wordeq::decompose(w)) {
    std::cerr << "refusing: " << render(w)
              << " is totally decomposable, its equation is solvable in every uniquely divisible group\n";
    return 1;
  }
  std::uint32_t lower = pmin > 0 ? pmin - 1 : 0;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint32_t p = wordeq::find_suitable_prime(static_cast<std::uint64_t>(w.x_count()), lower,
                                                        std::nullopt, cap);
    lower = p;
    const wordeq::GpGroup g(p);
    const auto ce = g.construct_counterexample(w);
    if (!ce) continue;
    const bool verified = g.verify_no_solution(w, ce->a, ce->b);
    const auto collision = g.find_collision(w, ce->a);
    if (as_json) {
      Json j;
      j["word"] = render(w);
      j["p"] = p;
      j["q"] = g.q();
      j["t"] = g.t();
      j["witness"] = {{"x", ce->x}, {"y", ce->y}, {"delta", ce->delta}, {"alpha", ce->alpha}};
      j["a"] = element_json(g, ce->a);
      j["b"] = element_json(g, ce->b);
      j["no_solution_verified"] = verified;
      if (collision) {
        const auto& [g1, g2, bprime] = *collision;
        j["collision"] = {{"g1", element_json(g, g1)}, {"g2", element_json(g, g2)}, {"b_prime", element_json(g, bprime)}};
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "word " << render(w) << ": counterexample in G_" << p << " (order " << g.order() << ", t = "
                << g.t() << ")\n";
      std::cout << "mod-p witness (x,y) = (" << ce->x << ", " << ce->y << "), x^2 = t^" << ce->delta
                << ", y^2 = t^" << ce->alpha << "\n";
      std::cout << "a = T^" << ce->alpha << " = (gamma=" << ce->a.gamma << ", beta=" << ce->a.beta << ")\n";
      std::cout << "b = S T^" << ce->b.beta << " = (gamma=" << ce->b.gamma << ", beta=" << ce->b.beta << ")\n";
      std::cout << "exhaustive check over " << g.order() << " elements: w(X,a) = b has "
                << (verified ? "no solution" : "a solution (unexpected)") << "\n";
      if (collision) {
        const auto& [g1, g2, bprime] = *collision;
        std::cout << "collision: w(X,a) = (gamma=" << bprime.gamma << ", beta=" << bprime.beta
                  << ") for X = (" << g1.gamma << "," << g1.beta << ") and X = (" << g2.gamma << "," << g2.beta
                  << ")\n";
      }
    }
    if (!verified) {
      std::cerr << "internal error: exhaustive verification failed\n";
      return 1;
    }
    return 0;
  }
  std::cerr << "error: no suitable prime with a mod-p witness found (attempts=" << max_attempts << ", cap=" << cap
            << ")\n";
  return 1;
}

struct BackendSpec {
  enum class Kind { Ut, Series } kind = Kind::Ut;
  int size = 3;
};

BackendSpec parse_backend(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--backend", "expected ut:<dim> or series:<degree>");
  const std::string name = text.substr(0, colon);
  const int size = std::stoi(text.substr(colon + 1));
  if (name == "ut") {
    if (size < 1 || size > 12) throw CLI::ValidationError("--backend", "ut dimension must be in [1, 12]");
    return {BackendSpec::Kind::Ut, size};
  }
  if (name == "series") {
    if (size < 0 || size > 10) throw CLI::ValidationError("--backend", "series degree must be in [0, 10]");
    return {BackendSpec::Kind::Series, size};
  }
  throw CLI::ValidationError("--backend", "unknown backend '" + name + "'");
}

template <class Backend, class Solve, class Serialize, class Deserialize>
int solve_in_backend(const wordeq::Word& w, const Backend& backend, Solve solve, Serialize serialize,
                     Deserialize deserialize, const std::string& instance_path, std::uint64_t seed, bool as_json) {
  typename Backend::Element a = backend.identity();
  typename Backend::Element b = backend.identity();
  if (!instance_path.empty()) {
    std::ifstream f(instance_path);
    if (!f) throw std::runtime_error("cannot open instance file: " + instance_path);
    Json j = Json::parse(f);
    a = deserialize(j.at("A"));
    b = deserialize(j.at("B"));
  } else {
    std::mt19937_64 rng(seed);
    a = backend.random_element(rng);
    b = backend.random_element(rng);
  }
  const auto [factors, rhs] = wordeq::product_form(backend, w, a, b);
  const auto x = solve(factors, rhs);
  const bool exact = backend.equal(wordeq::eval_word_in(backend, w, x, a), b);

  std::optional<bool> radical_agrees;
  std::string radical_text;
  if (const auto witness = wordeq::decompose(w)) {
    const wordeq::RadicalExpr expr = wordeq::solve_decomposable(*witness);
    radical_text = expr.str();
    radical_agrees = backend.equal(evaluate(expr, backend, a, b), x);
  }

  if (as_json) {
    Json j;
    j["word"] = render(w);
    j["A"] = serialize(a);
    j["B"] = serialize(b);
    j["X"] = serialize(x);
    j["equation_check_exact"] = exact;
    if (radical_agrees) {
      j["radical_solution"] = radical_text;
      j["radical_agrees"] = *radical_agrees;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "word " << render(w) << "\n";
    std::cout << "A = " << serialize(a).dump() << "\n";
    std::cout << "B = " << serialize(b).dump() << "\n";
    std::cout << "X = " << serialize(x).dump() << "\n";
    std::cout << "substituting back: w(X,A) " << (exact ? "=" : "!=") << " B\n";
    if (radical_agrees)
      std::cout << "radical formula X = " << radical_text << (*radical_agrees ? " evaluates to the same element\n"
                                                                              : " DISAGREES (unexpected)\n");
  }
  if (!exact || (radical_agrees && !*radical_agrees)) {
    std::cerr << "internal error: solver output failed verification\n";
    return 1;
  }
  return 0;
}

int cmd_solve(const std::string& word_text, const std::string& backend_text, const std::string& instance_path,
              std::uint64_t seed, bool as_json) {
  const wordeq::Word w = wordeq::parse_word(word_text);
  if (w.x_count() == 0) {
    std::cerr << "error: the word must contain at least one X\n";
    return 1;
  }
  const BackendSpec spec = parse_backend(backend_text);
  if (spec.kind == BackendSpec::Kind::Ut) {
    const wordeq::UtBackend backend{spec.size};
    return solve_in_backend(
        w, backend,
        [](const std::vector<wordeq::UnipotentMatrix>& factors, const wordeq::UnipotentMatrix& rhs) {
          return wordeq::ut_solve_product(factors, rhs);
        },
        matrix_json, matrix_from_json, instance_path, seed, as_json);
  }
  const wordeq::SeriesBackend backend{spec.size};
  return solve_in_backend(
      w, backend,
      [&](const std::vector<wordeq::NCSeries>& factors, const wordeq::NCSeries& rhs) {
        return wordeq::series_solve_product(factors, rhs, backend.degree);
      },
      series_json, series_from_json, instance_path, seed, as_json);
}

int cmd_survey(int max_len, std::uint32_t pmin, std::uint32_t pmax, std::uint32_t cutoff, int budget,
               const std::string& out_stem) {
  wordeq::SurveyOptions opts;
  opts.max_len = max_len;
  opts.p_min = pmin;
  opts.p_max = pmax;
  opts.small_prime_cutoff = cutoff;
  opts.length_budget = budget;
  const wordeq::SurveyResult result = wordeq::run_survey(opts);

  const std::string jsonl = wordeq::survey_jsonl(result);
  const std::string csv = wordeq::survey_csv(result);
  if (out_stem.empty() || out_stem == "-") {
    std::cout << jsonl;
  } else {
    std::string stem = out_stem;
    const std::string suffix = ".jsonl";
    if (stem.size() > suffix.size() && stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0)
      stem.resize(stem.size() - suffix.size());
    emit(jsonl, stem + ".jsonl");
    emit(csv, stem + ".csv");
    std::cerr << "wrote " << stem << ".jsonl and " << stem << ".csv (" << result.rows.size() << " words, "
              << result.unresolved << " unresolved)\n";
  }
  return result.unresolved > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classifier for word equations w(X,A) = B over uniquely divisible groups"};
  app.require_subcommand(1);

  std::string word_text, backend_text = "ut:3", instance_path, out_path;
  std::uint32_t pmin = 5, pmax = 499, cutoff = 13, cap = 100000;
  std::uint64_t seed = 1;
  int max_len = 10, budget = 12, max_attempts = 30;
  bool as_json = false, squares = false, csv = false;

  auto* classify = app.add_subcommand("classify", "decompose or gather non-universality evidence");
  classify->add_option("word", word_text)->required();
  classify->add_option("--pmin", pmin);
  classify->add_option("--pmax", pmax);
  classify->add_option("--cutoff", cutoff);
  classify->add_flag("--json", as_json);

  auto* decomp = app.add_subcommand("decompose", "search for a total decomposition witness");
  decomp->add_option("word", word_text)->required();
  decomp->add_flag("--json", as_json);

  auto* poly = app.add_subcommand("poly", "print the word polynomial");
  poly->add_option("word", word_text)->required();
  poly->add_flag("--squares", squares);
  poly->add_flag("--json", as_json);

  auto* scan = app.add_subcommand("scan", "scan P_w(x^2,y^2) = 0 over nonzero residues mod p");
  scan->add_option("word", word_text)->required();
  scan->add_option("--pmin", pmin);
  scan->add_option("--pmax", pmax);
  scan->add_option("--out", out_path);
  scan->add_flag("--json", as_json);
  scan->add_flag("--csv", csv);

  auto* counter = app.add_subcommand("counterexample", "construct a finite group where the equation fails");
  counter->add_option("word", word_text)->required();
  counter->add_option("--pmin", pmin);
  counter->add_option("--cap", cap);
  counter->add_option("--attempts", max_attempts);
  counter->add_flag("--json", as_json);

  auto* solve = app.add_subcommand("solve", "solve the equation exactly in a chosen backend");
  solve->add_option("word", word_text)->required();
  solve->add_option("--backend", backend_text, "ut:<dim> or series:<degree>");
  solve->add_option("--seed", seed);
  solve->add_option("--instance", instance_path, "JSON file with A and B");
  solve->add_flag("--json", as_json);

  auto* survey = app.add_subcommand("survey", "classify all canonical words up to a length");
  survey->add_option("--max-len", max_len);
  survey->add_option("--pmin", pmin);
  survey->add_option("--pmax", pmax);
  survey->add_option("--cutoff", cutoff);
  survey->add_option("--budget", budget);
  survey->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (classify->parsed()) return cmd_classify(word_text, pmin, pmax, cutoff, as_json);
    if (decomp->parsed()) return cmd_decompose(word_text, as_json);
    if (poly->parsed()) return cmd_poly(word_text, squares, as_json);
    if (scan->parsed()) return cmd_scan(word_text, pmin, pmax, as_json, csv, out_path);
    if (counter->parsed()) return cmd_counterexample(word_text, pmin, cap, max_attempts, as_json);
    if (solve->parsed()) return cmd_solve(word_text, backend_text, instance_path, seed, as_json);
    if (survey->parsed()) return cmd_survey(max_len, pmin, pmax, cutoff, budget, out_path);
  } catch (const wordeq::WordParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
