#include "msv/report.hpp"

#include <sstream>

namespace msv::report {

namespace {

json monomials(const MonomialIdeal& ideal) { return ideal.rendered(); }

}  // namespace

std::string label(const PartialPermutation& w) {
  if (w.is_permutation()) return to_string(w);
  std::string out;
  for (int p = 1; p <= w.rows(); ++p) {
    if (p > 1) out += ';';
    for (int q = 1; q <= w.cols(); ++q) out += w.entry(p, q) ? '1' : '0';
  }
  return out;
}

char diagram_char(const PartialPermutation& w, const Diagram& d, Cell c) {
  if (w.entry(c.p, c.q)) return '1';
  if (!d.contains(c)) return ' ';
  return d.rank(c) > 0 ? '*' : '.';
}

std::string render_diagram(const PartialPermutation& w) {
  const Diagram d = diagram(w);
  std::string rule = "+";
  for (int q = 1; q <= w.cols(); ++q) rule += "-+";
  std::ostringstream out;
  out << rule << '\n';
  for (int p = 1; p <= w.rows(); ++p) {
    out << '|';
    for (int q = 1; q <= w.cols(); ++q) out << diagram_char(w, d, {p, q}) << '|';
    out << '\n' << rule << '\n';
  }
  return out.str();
}

json cell_json(Cell c) { return json::array({c.p, c.q}); }

json to_json(const PartialPermutation& w, const GroebnerCheck& check) {
  return {{"w", label(w)},
          {"match", check.match},
          {"gb_leading", monomials(check.gb_leading)},
          {"antidiagonal", monomials(check.antidiagonal)}};
}

json to_json(const CIReport& r) {
  json j;
  j["w"] = label(r.w);
  j["verdict"] = r.verdict;
  j["codim"] = r.codim;
  j["mu"] = r.mu ? json(*r.mu) : json(nullptr);
  if (r.generators) {
    json gens = json::array();
    for (const auto& g : *r.generators) gens.push_back(g.to_string());
    j["generators"] = gens;
  } else {
    j["generators"] = nullptr;
  }
  if (r.witness) {
    j["witness"] = {{"cell", cell_json(r.witness->cell)},
                    {"reason", r.witness->reason},
                    {"lemma51", r.witness->lemma51}};
  } else {
    j["witness"] = nullptr;
  }
  json cert = json::array();
  for (const auto& node : r.certificate) {
    cert.push_back({{"cell", cell_json(node.cell)},
                    {"rank", node.rank},
                    {"is_permutation", node.is_permutation},
                    {"child", node.child ? to_json(*node.child) : json(nullptr)}});
  }
  j["certificate"] = cert;
  return j;
}

json to_json(const frlab::VerificationReport& r) {
  return {{"w", label(r.w)},
          {"c", r.c ? cell_json(*r.c) : json(nullptr)},
          {"lemma1", r.lemma1},
          {"lemma2", r.lemma2},
          {"lemma3_nzd", r.lemma3_nzd},
          {"I_eq_Iprime", r.i_eq_iprime},
          {"skipped", r.skipped}};
}

json to_json(const CensusRow& r) {
  json j{{"w", label(r.w)},
         {"length", r.length},
         {"codim", r.codim},
         {"verdict", r.verdict},
         {"mu", r.mu ? json(*r.mu) : json(nullptr)}};
  if (r.gb_match) j["gb_match"] = *r.gb_match;
  return j;
}

std::string render_text(const CIReport& r) {
  std::ostringstream out;
  out << "w = " << label(r.w) << '\n';
  out << "complete intersection: " << (r.verdict ? "yes" : "no") << '\n';
  out << "codim = " << r.codim << '\n';
  if (r.mu) out << "mu = " << *r.mu << '\n';
  for (const auto& node : r.certificate) {
    out << "  " << to_string(node.cell) << " rank " << node.rank
        << (node.is_permutation ? " block is a permutation"
                                : " block is not a permutation");
    if (node.child) out << " (" << (node.child->verdict ? "CI" : "not CI") << ")";
    out << '\n';
  }
  if (r.witness) {
    out << "witness: " << to_string(r.witness->cell) << ' ' << r.witness->reason;
    if (r.witness->lemma51) out << ", diagram cell within r steps north or west";
    out << '\n';
  }
  if (r.generators) {
    out << "generators (" << r.generators->size() << "):\n";
    for (const auto& g : *r.generators) out << "  " << g.to_string() << '\n';
  }
  return out.str();
}

}  // namespace msv::report
