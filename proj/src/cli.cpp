#include "broomrec/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "broomrec/class_names.hpp"
#include "broomrec/deck.hpp"
#include "broomrec/errors.hpp"
#include "broomrec/graph_io.hpp"
#include "broomrec/random_graphs.hpp"
#include "broomrec/reconstruct.hpp"

namespace broomrec {

namespace {

constexpr int kOk = 0;
constexpr int kDisagreement = 1;
constexpr int kInvalidInput = 2;
constexpr int kInconclusive = 3;

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// DOT block for one graph, vertices renamed into canonical order so the
// emitted diagram does not depend on construction labels.
void emit_dot_graph(std::ostream& os, const Graph& g, const std::string& name,
                    const std::string& label, const std::string& indent) {
  const Graph c = canonicalized(g);
  os << indent << "graph " << name << " {\n";
  if (!label.empty()) os << indent << "  label=\"" << label << "\";\n";
  for (Vertex v = 0; v < c.vertex_count(); ++v) {
    os << indent << "  " << name << "_" << v << " [label=\"" << v << "\"];\n";
  }
  for (const Edge& e : c.edges()) {
    os << indent << "  " << name << "_" << e.u << " -- " << name << "_" << e.v << ";\n";
  }
  os << indent << "}\n";
}

struct OutputTarget {
  std::ofstream file;
  std::ostream* os = nullptr;

  OutputTarget(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      os = &fallback;
      return;
    }
    file.open(path);
    if (!file) throw InputError("cannot open output file: " + path);
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

// ---- deck -----------------------------------------------------------------

int cmd_deck(const std::string& spec_text, const std::string& format, const std::string& out_path,
             std::ostream& stdout_stream) {
  const BroomSpec spec = parse_spec(spec_text);
  const Graph g = build(spec);
  const ClassifiedDeck deck = da_edeck(g);
  const std::vector<std::string> labels = card_class_labels(spec, deck);
  OutputTarget target(out_path, stdout_stream);
  std::ostream& os = target.stream();

  if (format == "json") {
    nlohmann::json j = deck_to_json(deck);
    for (std::size_t i = 0; i < labels.size(); ++i) j["classes"][i]["label"] = labels[i];
    j["spec"] = render_spec(spec);
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "label,d,mult,card_graph6\n";
    for (std::size_t i = 0; i < deck.classes.size(); ++i) {
      const DeckClass& c = deck.classes[i];
      os << labels[i] << "," << c.rep.d << "," << c.mult << "," << graph_to_graph6(c.rep.card)
         << "\n";
    }
  } else if (format == "dot") {
    os << "// da-edeck of " << render_spec(spec) << "\n";
    for (std::size_t i = 0; i < deck.classes.size(); ++i) {
      const DeckClass& c = deck.classes[i];
      emit_dot_graph(os, c.rep.card, "card" + std::to_string(i),
                     labels[i] + "  d=" + std::to_string(c.rep.d) +
                         "  mult=" + std::to_string(c.mult),
                     "");
    }
  } else if (format == "graph6") {
    for (const DeckClass& c : deck.classes) os << graph_to_graph6(c.rep.card) << "\n";
  } else {
    throw InputError("deck: unknown format \"" + format + "\"");
  }
  return kOk;
}

// ---- compute ----------------------------------------------------------------

int cmd_compute(const std::string& which, const std::string& spec_text, const std::string& method,
                double budget_seconds, bool timing, const std::string& out_path,
                std::ostream& stdout_stream) {
  const BroomSpec spec = parse_spec(spec_text);
  const Graph g = build(spec);
  const auto start = Clock::now();

  nlohmann::json report{{"spec", render_spec(spec)}, {"which", which}, {"method", method}};
  std::optional<Prediction> pred;
  if (method == "formula" || method == "both") {
    pred = (which == "dern") ? dern_formula(spec) : adern_formula(spec);
    report["formula"] = prediction_to_json(*pred);
    report[which] = pred->value;
  }
  if (method == "brute" || method == "both") {
    Reconstructor engine(g, Budget::seconds(budget_seconds));
    const Reconstructor::SearchResult r = (which == "dern") ? engine.dern() : engine.adern();
    report["brute"] = r.value;
    report[which] = r.value;  // brute force wins over a case-derived preference
    if (which == "dern") {
      report["witness_set"] = deck_to_json(engine.subdeck(r.counts));
    } else {
      report["bad_max"] = deck_to_json(engine.subdeck(r.counts));
    }
    if (pred) report["agree"] = pred->exactness == Exactness::Exact ? pred->value == r.value
                                                                    : pred->admits(r.value);
  }
  report["elapsed_ms"] = timing ? ms_since(start) : 0;

  OutputTarget target(out_path, stdout_stream);
  target.stream() << report.dump(2) << "\n";
  return kOk;
}

// ---- witness ----------------------------------------------------------------

int cmd_witness(const std::string& spec_text, const std::string& collection,
                const std::string& format, double budget_seconds, const std::string& out_path,
                std::ostream& stdout_stream) {
  const BroomSpec spec = parse_spec(spec_text);
  const Graph g = build(spec);
  Reconstructor engine(g, Budget::seconds(budget_seconds));
  const std::vector<std::string> labels = card_class_labels(spec, engine.deck());
  const std::vector<int> counts = parse_collection(collection, spec, engine.deck());
  const Verdict verdict = engine.determines(counts);

  OutputTarget target(out_path, stdout_stream);
  std::ostream& os = target.stream();

  nlohmann::json shared = nlohmann::json::array();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) {
      shared.push_back({{"label", labels[i]},
                        {"d", engine.deck().classes[i].rep.d},
                        {"count", counts[i]}});
    }
  }

  if (verdict.determines) {
    if (format == "json") {
      os << nlohmann::json{{"spec", render_spec(spec)},
                           {"collection", collection},
                           {"determines", true}}
                .dump(2)
         << "\n";
    } else {
      os << "determines\n";
    }
    return kOk;
  }

  const Graph& h = *verdict.witness;
  if (format == "json") {
    os << nlohmann::json{{"spec", render_spec(spec)},
                         {"collection", collection},
                         {"determines", false},
                         {"shared", shared},
                         {"witness", graph_to_json(canonicalized(h))}}
              .dump(2)
       << "\n";
  } else if (format == "dot") {
    emit_dot_graph(os, h, "witness", "shares " + collection + " with " + render_spec(spec), "");
  } else if (format == "graph6") {
    os << graph_to_graph6(canonicalized(h)) << "\n";
  } else {
    throw InputError("witness: unknown format \"" + format + "\"");
  }
  return kOk;
}

}  // namespace

// ---- verify -----------------------------------------------------------------

Range parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return Range{v, v};
    }
    Range r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    if (r.empty()) throw InputError("range: empty interval \"" + text + "\"");
    return r;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("range: expected \"a..b\" or \"a\", got \"" + text + "\"");
  }
}

VerifyDeps VerifyDeps::real() {
  return VerifyDeps{[](const BroomSpec& s) { return dern_formula(s); },
                    [](const BroomSpec& s) { return adern_formula(s); }};
}

std::vector<BroomSpec> sweep_specs(const SweepConfig& config, std::ostream& log) {
  std::vector<BroomSpec> specs;
  auto try_add = [&](int n1, int n2, std::vector<PathGroup> paths) {
    try {
      specs.push_back(make_spec(n1, n2, std::move(paths)));
    } catch (const InputError& e) {
      log << "skip: " << e.what() << "\n";
    }
  };
  const Range n1 = config.n1, n2 = config.n2, m = config.m, k = config.k;
  switch (config.family) {
    case SweepConfig::Family::TwoPk:
      if (n1.empty() || k.empty()) throw InputError("family 2pk needs --n1 and --k ranges");
      for (int n = n1.lo; n <= n1.hi; ++n) {
        for (int kk = k.lo; kk <= k.hi; ++kk) try_add(n, n, {{2, kk}});
      }
      break;
    case SweepConfig::Family::MPk:
      if (n1.empty() || m.empty() || k.empty()) {
        throw InputError("family mpk needs --n1, --m and --k ranges");
      }
      for (int n = n1.lo; n <= n1.hi; ++n) {
        for (int mm = m.lo; mm <= m.hi; ++mm) {
          for (int kk = k.lo; kk <= k.hi; ++kk) try_add(n, n, {{mm, kk}});
        }
      }
      break;
    case SweepConfig::Family::Multi:
      if (n1.empty() || n2.empty() || k.empty()) {
        throw InputError("family multi needs --n1, --n2 and --k ranges");
      }
      for (int a = n1.lo; a <= n1.hi; ++a) {
        for (int b = n2.lo; b <= n2.hi; ++b) {
          for (int ka = k.lo; ka <= k.hi; ++ka) {
            for (int kb = ka + 1; kb <= k.hi; ++kb) try_add(a, b, {{1, ka}, {1, kb}});
          }
        }
      }
      break;
    case SweepConfig::Family::Unequal:
      if (n1.empty() || n2.empty() || m.empty() || k.empty()) {
        throw InputError("family unequal needs --n1, --n2, --m and --k ranges");
      }
      for (int a = n1.lo; a <= n1.hi; ++a) {
        for (int b = n2.lo; b <= n2.hi; ++b) {
          if (a >= b) continue;
          for (int mm = m.lo; mm <= m.hi; ++mm) {
            for (int kk = k.lo; kk <= k.hi; ++kk) try_add(a, b, {{mm, kk}});
          }
        }
      }
      break;
  }
  return specs;
}

namespace {

struct VerifyRow {
  std::string spec;
  std::optional<int> dern_brute, adern_brute;
  std::optional<Prediction> dern_formula, adern_formula;
  std::string agree;  // yes | no | finding | inconclusive | ""
  std::int64_t elapsed_ms = 0;
};

std::string formula_cell(const std::optional<Prediction>& p) {
  if (!p) return "";
  std::string s = std::to_string(p->value);
  if (p->exactness == Exactness::CaseDerived) s += "~";
  return s;
}

std::string int_cell(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

int verify_sweep(const SweepConfig& config, const std::string& format, std::ostream& out,
                 std::ostream& log, const VerifyDeps& deps) {
  if (format != "csv" && format != "json") {
    throw InputError("verify: unknown format \"" + format + "\"");
  }
  const std::vector<BroomSpec> specs = sweep_specs(config, log);
  if (specs.empty()) throw InputError("verify: sweep generated no valid specs");

  std::vector<VerifyRow> rows;
  int exact_mismatches = 0, findings = 0, inconclusive = 0;
  for (const BroomSpec& spec : specs) {
    VerifyRow row;
    row.spec = render_spec(spec);
    const auto start = Clock::now();
    if (config.method != SweepConfig::Method::Brute) {
      row.dern_formula = deps.dern(spec);
      try {
        row.adern_formula = deps.adern(spec);
      } catch (const UnsupportedError&) {
      }
    }
    if (config.method != SweepConfig::Method::Formula) {
      try {
        Reconstructor engine(build(spec), Budget::seconds(config.budget_seconds));
        row.dern_brute = engine.dern().value;
        row.adern_brute = engine.adern().value;
      } catch (const BudgetExceeded&) {
        row.agree = "inconclusive";
        ++inconclusive;
      }
    }
    row.elapsed_ms = config.timing ? ms_since(start) : 0;
    if (row.agree.empty() && config.method == SweepConfig::Method::Both && row.dern_brute) {
      bool mismatch = false, finding = false;
      auto judge = [&](const std::optional<Prediction>& p, int brute) {
        if (!p) return;
        if (!p->admits(brute)) {
          mismatch = true;
        } else if (p->exactness == Exactness::CaseDerived && p->value != brute) {
          finding = true;
        }
      };
      judge(row.dern_formula, *row.dern_brute);
      judge(row.adern_formula, *row.adern_brute);
      if (mismatch) {
        row.agree = "no";
        ++exact_mismatches;
        log << "mismatch: " << row.spec << "\n";
      } else if (finding) {
        row.agree = "finding";
        ++findings;
        log << "finding: " << row.spec << " brute dern " << *row.dern_brute
            << " differs from the case-derived preference\n";
      } else {
        row.agree = "yes";
      }
    }
    rows.push_back(std::move(row));
  }

  if (format == "csv") {
    out << "spec,dern_brute,dern_formula,adern_brute,adern_formula,agree,elapsed_ms\n";
    for (const VerifyRow& r : rows) {
      out << csv_quote(r.spec) << "," << int_cell(r.dern_brute) << ","
          << formula_cell(r.dern_formula) << "," << int_cell(r.adern_brute) << ","
          << formula_cell(r.adern_formula) << "," << r.agree << "," << r.elapsed_ms << "\n";
    }
  } else {
    nlohmann::json j = nlohmann::json::array();
    for (const VerifyRow& r : rows) {
      nlohmann::json item{{"spec", r.spec}, {"agree", r.agree}, {"elapsed_ms", r.elapsed_ms}};
      if (r.dern_brute) item["dern_brute"] = *r.dern_brute;
      if (r.adern_brute) item["adern_brute"] = *r.adern_brute;
      if (r.dern_formula) item["dern_formula"] = prediction_to_json(*r.dern_formula);
      if (r.adern_formula) item["adern_formula"] = prediction_to_json(*r.adern_formula);
      j.push_back(std::move(item));
    }
    out << j.dump(2) << "\n";
  }
  log << "verified " << rows.size() << " specs: " << exact_mismatches << " exact mismatches, "
      << findings << " findings, " << inconclusive << " inconclusive\n";
  if (exact_mismatches > 0) return kDisagreement;
  if (inconclusive > 0) return kInconclusive;
  return kOk;
}

// ---- entry point --------------------------------------------------------------

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"degree associated edge reconstruction of strong double brooms"};
  app.name("broomrec");
  app.require_subcommand(1);

  std::string spec_text, out_path, collection, family, method, which;
  std::string deck_format = "json", verify_format = "csv", witness_format = "json";
  std::string n1_text, n2_text, m_text, k_text;
  double budget_seconds = 120.0;
  bool no_timing = false;
  std::uint64_t seed = 0;
  int trials = 1000, max_n = 8;

  CLI::App* deck = app.add_subcommand("deck", "classified da-edeck of a broom");
  deck->add_option("--spec", spec_text, "broom spec, e.g. B(1,1,2P4)")->required();
  deck->add_option("--format", deck_format, "json|csv|dot|graph6");
  deck->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* compute = app.add_subcommand("compute", "dern or adern of a broom");
  compute->add_option("which", which, "dern|adern")
      ->required()
      ->check(CLI::IsMember({"dern", "adern"}));
  compute->add_option("--spec", spec_text, "broom spec")->required();
  compute->add_option("--method", method, "brute|formula|both")->default_val("both");
  compute->add_option("--budget", budget_seconds, "wall-clock budget per graph, seconds")
      ->default_val(120.0);
  compute->add_flag("--no-timing", no_timing, "zero the elapsed field for byte-stable output");
  compute->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "diff brute force against the formulas");
  verify->add_option("--family", family, "2pk|mpk|multi|unequal")->required();
  verify->add_option("--n1", n1_text, "range a..b for n1 (or n for equal-leaf families)");
  verify->add_option("--n2", n2_text, "range a..b for n2");
  verify->add_option("--m", m_text, "range a..b for the path multiplicity");
  verify->add_option("--k", k_text, "range a..b for the path order");
  verify->add_option("--method", method, "brute|formula|both")->default_val("both");
  verify->add_option("--budget", budget_seconds, "per-graph budget, seconds")->default_val(120.0);
  verify->add_option("--format", verify_format, "csv|json");
  verify->add_flag("--no-timing", no_timing, "zero elapsed fields for byte-stable output");
  verify->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* witness = app.add_subcommand("witness", "counterexample for a card collection");
  witness->add_option("--spec", spec_text, "broom spec")->required();
  witness->add_option("--collection", collection, "class counts, e.g. L:2,K:2")->required();
  witness->add_option("--format", witness_format, "json|dot|graph6");
  witness->add_option("--budget", budget_seconds, "wall-clock budget, seconds")->default_val(120.0);
  witness->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* fuzz = app.add_subcommand("fuzz", "randomized invariant checks");
  fuzz->add_option("--seed", seed, "rng seed")->default_val(0);
  fuzz->add_option("--trials", trials, "number of trials")->default_val(1000);
  fuzz->add_option("--max-n", max_n, "largest vertex count")->default_val(8);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (deck->parsed()) return cmd_deck(spec_text, deck_format, out_path, out);
    if (compute->parsed()) {
      if (method != "brute" && method != "formula" && method != "both") {
        throw InputError("compute: unknown method \"" + method + "\"");
      }
      return cmd_compute(which, spec_text, method, budget_seconds, !no_timing, out_path, out);
    }
    if (verify->parsed()) {
      SweepConfig config;
      if (family == "2pk") {
        config.family = SweepConfig::Family::TwoPk;
      } else if (family == "mpk") {
        config.family = SweepConfig::Family::MPk;
      } else if (family == "multi") {
        config.family = SweepConfig::Family::Multi;
      } else if (family == "unequal") {
        config.family = SweepConfig::Family::Unequal;
      } else {
        throw InputError("verify: unknown family \"" + family + "\"");
      }
      if (!n1_text.empty()) config.n1 = parse_range(n1_text);
      if (!n2_text.empty()) config.n2 = parse_range(n2_text);
      if (!m_text.empty()) config.m = parse_range(m_text);
      if (!k_text.empty()) config.k = parse_range(k_text);
      if (method == "brute") {
        config.method = SweepConfig::Method::Brute;
      } else if (method == "formula") {
        config.method = SweepConfig::Method::Formula;
      } else if (method == "both") {
        config.method = SweepConfig::Method::Both;
      } else {
        throw InputError("verify: unknown method \"" + method + "\"");
      }
      config.budget_seconds = budget_seconds;
      config.timing = !no_timing;
      OutputTarget target(out_path, out);
      return verify_sweep(config, verify_format, target.stream(), err);
    }
    if (witness->parsed()) {
      return cmd_witness(spec_text, collection, witness_format, budget_seconds, out_path, out);
    }
    if (fuzz->parsed()) return run_selfcheck(seed, trials, max_n, out) ? kOk : kDisagreement;
  } catch (const BudgetExceeded& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NotReconstructible& e) {
    err << "error: " << e.what() << "\n";
    return kDisagreement;
  }
  return kInvalidInput;
}

}  // namespace broomrec
