#ifndef MSV_REPORT_HPP
#define MSV_REPORT_HPP

// Text and JSON renderings shared by the CLI and the tests.

#include <string>

#include <json.hpp>

#include "msv/census.hpp"
#include "msv/ci.hpp"
#include "msv/detideal.hpp"
#include "msv/frlab.hpp"
#include "msv/perm.hpp"

namespace msv::report {

using nlohmann::json;

/// One-line notation; partial permutations as 0/1 rows joined by ';'.
std::string label(const PartialPermutation& w);

/// Boxed l×m grid: '1' at entries of w, '*' on D_{>0}, '.' on D_{=0}.
std::string render_diagram(const PartialPermutation& w);

/// The character at (p,q) in render_diagram().
char diagram_char(const PartialPermutation& w, const Diagram& d, Cell c);

json cell_json(Cell c);
json to_json(const PartialPermutation& w, const GroebnerCheck& check);
json to_json(const CIReport& r);
json to_json(const frlab::VerificationReport& r);
json to_json(const CensusRow& r);

std::string render_text(const CIReport& r);

}  // namespace msv::report

#endif  // MSV_REPORT_HPP
