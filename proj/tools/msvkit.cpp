// msvkit: command-line front end for the matrix Schubert toolkit.
//
// Exit status: 0 on success or a true verdict, 1 when a verifier (or the CI
// classifier) answers false, 2 on usage and capability errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "msv/census.hpp"
#include "msv/ci.hpp"
#include "msv/detideal.hpp"
#include "msv/frlab.hpp"
#include "msv/perm.hpp"
#include "msv/report.hpp"

using namespace msv;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

// Largest n each family of subcommands accepts.
constexpr int kMaxGenerators = 7;   // 7×7 grid + t fits the 64-variable ring
constexpr int kMaxGroebner = 6;
constexpr int kMaxLocalize = 5;
constexpr int kMaxCensus = 7;
constexpr int kMaxCensusMu = 6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Target {
  std::string inline_text;
  std::string file;

  PartialPermutation load() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot read " + file);
      std::stringstream buf;
      buf << in.rdbuf();
      return parse_partial_permutation(buf.str());
    }
    if (inline_text.empty()) throw UsageError("missing permutation");
    return parse_permutation(inline_text);
  }

  Permutation load_full() const {
    auto w = load();
    if (!w.is_permutation()) {
      throw UsageError("this subcommand needs a full permutation");
    }
    return w;
  }
};

void require_size(int n, int bound, const std::string& what) {
  if (n > bound) {
    throw UsageError(what + " supports n <= " + std::to_string(bound) +
                     ", got n = " + std::to_string(n));
  }
}

int grid_size(const PartialPermutation& w) {
  return w.is_permutation() ? w.rows() : w.rows() + w.cols();
}

std::string cell_text(Cell c) { return to_string(c); }

void emit(const json& j) { std::cout << j.dump() << '\n'; }

int cmd_diagram(const Target& t, bool as_json) {
  const auto w = t.load();
  const Diagram d = diagram(w);
  if (as_json) {
    json cells = json::array();
    for (const Cell& c : d.cells)
      cells.push_back({{"cell", report::cell_json(c)}, {"rank", d.rank(c)}});
    json grid = json::array();
    std::istringstream rows(report::render_diagram(w));
    for (std::string line; std::getline(rows, line);)
      if (line[0] == '|') grid.push_back(line);
    emit({{"w", report::label(w)},
          {"rows", w.rows()},
          {"cols", w.cols()},
          {"size", d.size()},
          {"cells", cells},
          {"grid", grid}});
  } else {
    std::cout << report::render_diagram(w);
    std::cout << "|D(w)| = " << d.size() << '\n';
  }
  return kExitOk;
}

int cmd_essential(const Target& t, bool as_json) {
  const auto w = t.load();
  const auto ess = essential_set(w);
  if (as_json) {
    json cells = json::array();
    for (const auto& rc : ess)
      cells.push_back({{"cell", report::cell_json(rc.cell)}, {"rank", rc.rank}});
    emit({{"w", report::label(w)}, {"essential", cells}});
  } else {
    for (const auto& rc : ess)
      std::cout << cell_text(rc.cell) << " rank " << rc.rank << '\n';
  }
  return kExitOk;
}

int cmd_gens(const Target& t, bool as_json, bool pruned) {
  const auto w = t.load();
  require_size(std::max(w.rows(), w.cols()), kMaxGenerators, "gens");
  const SchubertIdeal ideal = fulton_generators(w);
  const auto gens = pruned ? ideal.pruned_generators() : ideal.generators();
  if (as_json) {
    json list = json::array();
    for (const auto& g : gens) list.push_back(g.to_string());
    emit({{"w", report::label(w)},
          {"pruned", pruned},
          {"count", gens.size()},
          {"generators", list}});
  } else {
    for (const auto& g : gens) std::cout << g.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_ci(const Target& t, bool as_json, bool with_mu, RankOptions rank) {
  const auto w = t.load();
  require_size(grid_size(w), kMaxGenerators, "ci");
  CIReport r = is_complete_intersection(w);
  if (with_mu) {
    require_size(r.w.rows(), kMaxCensusMu, "ci --mu");
    r.mu = minimal_generator_count(r.w, rank);
  }
  if (as_json) {
    emit(report::to_json(r));
  } else {
    std::cout << report::render_text(r);
  }
  return r.verdict ? kExitOk : kExitFalse;
}

int cmd_verify_gb(const Target& t, bool as_json, bool corrupt) {
  const auto w = t.load();
  require_size(std::max(w.rows(), w.cols()), kMaxGroebner, "verify-gb");
  auto gens = fulton_generators(w).generators();
  // Test hook: dropping the last minor must make the check fail.
  if (corrupt && !gens.empty()) gens.pop_back();
  const GroebnerCheck check = verify_groebner(w, gens);
  if (as_json) {
    emit(report::to_json(w, check));
  } else {
    std::cout << "groebner: " << (check.match ? "ok" : "FAILED") << '\n';
    if (!check.match) {
      std::cout << "in(I_w):";
      for (const auto& m : check.gb_leading.rendered()) std::cout << ' ' << m;
      std::cout << "\nJ_w:";
      for (const auto& m : check.antidiagonal.rendered()) std::cout << ' ' << m;
      std::cout << '\n';
    }
  }
  return check.match ? kExitOk : kExitFalse;
}

json c_json(const std::optional<Cell>& c) {
  return c ? report::cell_json(*c) : json(nullptr);
}

int cmd_verify_lemma2(const Target& t, bool as_json) {
  const auto w = t.load_full();
  require_size(w.rows(), kMaxGroebner, "verify-lemma2");
  const auto c = frlab::find_c(w);
  if (!c) {
    if (as_json) {
      emit({{"w", report::label(w)}, {"c", nullptr}, {"lemma2", true},
            {"initial", json::array()}, {"expected", json::array()},
            {"skipped", true}});
    } else {
      std::cout << "skipped: w is regular\n";
    }
    return kExitOk;
  }
  const auto r = frlab::verify_lemma2(w);
  if (as_json) {
    emit({{"w", report::label(w)}, {"c", c_json(c)}, {"lemma2", r.ok},
          {"initial", r.initial.rendered()}, {"expected", r.expected.rendered()},
          {"skipped", false}});
  } else {
    std::cout << "c = " << cell_text(*c) << '\n';
    std::cout << "lemma2: " << (r.ok ? "ok" : "FAILED") << '\n';
  }
  return r.ok ? kExitOk : kExitFalse;
}

int cmd_verify_localize(const Target& t, bool as_json) {
  const auto w = t.load_full();
  require_size(w.rows(), kMaxLocalize, "verify-localize");
  const auto c = frlab::find_c(w);
  if (!c) {
    if (as_json) {
      emit({{"w", report::label(w)}, {"c", nullptr}, {"I_eq_Iprime", true},
            {"iprime", json::array()}, {"skipped", true}});
    } else {
      std::cout << "skipped: w is regular\n";
    }
    return kExitOk;
  }
  const auto setup = frlab::build_localization(w);
  const auto r = frlab::verify_I_equals_Iprime(w);
  if (as_json) {
    emit({{"w", report::label(w)}, {"c", c_json(c)}, {"I_eq_Iprime", r.ok},
          {"iprime", setup.primed_names}, {"skipped", false}});
  } else {
    std::cout << "c = " << cell_text(*c) << "\nw' = "
              << to_string(setup.deletion.reduced) << "\nI' generators:";
    for (const auto& name : setup.primed_names) std::cout << ' ' << name;
    std::cout << "\nI = I': " << (r.ok ? "ok" : "FAILED") << '\n';
  }
  return r.ok ? kExitOk : kExitFalse;
}

int cmd_verify_all(const Target& t, bool as_json) {
  const auto w = t.load_full();
  require_size(w.rows(), kMaxLocalize, "verify-all");
  const auto r = frlab::verify_all(w);
  if (as_json) {
    emit(report::to_json(r));
  } else if (r.skipped) {
    std::cout << "skipped: w is regular\n";
  } else {
    auto line = [](const char* name, bool ok) {
      std::cout << name << ": " << (ok ? "ok" : "FAILED") << '\n';
    };
    std::cout << "c = " << cell_text(*r.c) << '\n';
    line("D0 window", r.d0_window);
    line("lemma1", r.lemma1);
    line("lemma2", r.lemma2);
    line("lemma3 nzd", r.lemma3_nzd);
    line("I = I'", r.i_eq_iprime);
  }
  return r.all_ok() ? kExitOk : kExitFalse;
}

int cmd_census(CensusOptions opts, bool as_json, bool parallel) {
  require_size(opts.n, opts.with_mu ? kMaxCensusMu : kMaxCensus, "census");
  if (opts.n < 1) throw UsageError("census needs n >= 1");
  const auto rows = parallel ? census_parallel(opts) : census_serial(opts);
  bool agree = true;
  std::size_t ci_count = 0;
  for (const auto& r : rows) {
    agree = agree && r.oracle_agrees() && r.gb_match.value_or(true);
    if (r.verdict) ++ci_count;
    if (as_json) {
      emit(report::to_json(r));
    } else {
      std::cout << to_string(r.w) << "  len " << r.length << "  "
                << (r.verdict ? "CI    " : "non-CI");
      if (r.mu) std::cout << "  mu " << *r.mu;
      if (r.gb_match) std::cout << "  gb " << (*r.gb_match ? "ok" : "FAILED");
      std::cout << '\n';
    }
  }
  if (!as_json) {
    std::cout << rows.size() << " permutations, " << ci_count << " CI\n";
  }
  return agree ? kExitOk : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"msvkit: diagrams, determinantal ideals and CI checks for "
               "matrix Schubert varieties"};
  app.require_subcommand(1);

  Target target;
  bool as_json = false;
  std::string coeff = "rational";

  auto add_target = [&](CLI::App* sub) {
    auto* pos = sub->add_option("w", target.inline_text,
                                "permutation, e.g. 35142 or \"10 2 1 3 ...\"");
    auto* file = sub->add_option("--file", target.file,
                                 "partial permutation as rows of 0/1 entries");
    pos->excludes(file);
    sub->add_flag("--json", as_json, "emit JSON");
  };

  auto* diagram_cmd = app.add_subcommand("diagram", "render D(w)");
  add_target(diagram_cmd);
  auto* essential_cmd = app.add_subcommand("essential", "list E(w) with ranks");
  add_target(essential_cmd);

  bool pruned = false;
  auto* gens_cmd = app.add_subcommand("gens", "Fulton generators of I_w");
  add_target(gens_cmd);
  gens_cmd->add_flag("--pruned", pruned,
                     "drop minors lying in the ideal of the linear ones");

  bool with_mu = false;
  auto* ci_cmd = app.add_subcommand("ci", "complete intersection classifier");
  add_target(ci_cmd);
  ci_cmd->add_flag("--mu", with_mu, "also compute mu(I_w) by linear algebra");
  ci_cmd->add_option("--coeff", coeff, "field for mu: rational or prime")
      ->check(CLI::IsMember({"rational", "prime"}));

  bool corrupt = false;
  auto* gb_cmd = app.add_subcommand("verify-gb", "in(I_w) = J_w");
  add_target(gb_cmd);
  gb_cmd->add_flag("--corrupt-generators", corrupt)->group("");

  auto* lemma2_cmd =
      app.add_subcommand("verify-lemma2", "in(<c> + I_w) = <c> + J_w");
  add_target(lemma2_cmd);
  auto* localize_cmd =
      app.add_subcommand("verify-localize", "I_w = I' after inverting c");
  add_target(localize_cmd);
  auto* all_cmd = app.add_subcommand("verify-all", "every check around c");
  add_target(all_cmd);

  CensusOptions census;
  std::string filter = "all";
  bool no_mu = false, with_gb = false, serial = false;
  auto* census_cmd = app.add_subcommand("census", "sweep S_n");
  census_cmd->add_option("--n", census.n, "permutation size")->required();
  census_cmd->add_option("--filter", filter, "ci, non-ci or all")
      ->check(CLI::IsMember({"ci", "non-ci", "all"}));
  census_cmd->add_option("--threads", census.threads,
                         "worker threads (default: all cores)");
  census_cmd->add_option("--coeff", coeff, "field for mu: rational or prime")
      ->check(CLI::IsMember({"rational", "prime"}));
  census_cmd->add_flag("--no-mu", no_mu, "skip the Nakayama oracle");
  census_cmd->add_flag("--gb", with_gb, "also run verify-gb on every w");
  census_cmd->add_flag("--serial", serial, "use the serial reference sweep");
  census_cmd->add_flag("--json", as_json, "one JSON object per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  RankOptions rank;
  if (coeff == "prime") {
    rank.field = CoefficientField::Prime;
    rank.prime = default_prime();
  }

  try {
    if (*diagram_cmd) return cmd_diagram(target, as_json);
    if (*essential_cmd) return cmd_essential(target, as_json);
    if (*gens_cmd) return cmd_gens(target, as_json, pruned);
    if (*ci_cmd) return cmd_ci(target, as_json, with_mu, rank);
    if (*gb_cmd) return cmd_verify_gb(target, as_json, corrupt);
    if (*lemma2_cmd) return cmd_verify_lemma2(target, as_json);
    if (*localize_cmd) return cmd_verify_localize(target, as_json);
    if (*all_cmd) return cmd_verify_all(target, as_json);
    if (*census_cmd) {
      census.filter = filter == "ci"       ? CensusFilter::CI
                      : filter == "non-ci" ? CensusFilter::NonCI
                                           : CensusFilter::All;
      census.with_mu = !no_mu;
      census.with_groebner = with_gb;
      census.rank = rank;
      return cmd_census(census, as_json, !serial);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
