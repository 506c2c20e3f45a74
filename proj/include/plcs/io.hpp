#ifndef PLCS_IO_HPP
#define PLCS_IO_HPP

#include <string>
#include <vector>

#include "plcs/bounds.hpp"
#include "plcs/oracle.hpp"
#include "plcs/scheme.hpp"

namespace plcs {

/* Canonical JSON serialization: alphabetical keys, rationals as "p/q" strings. */

std::string rational_to_string(const Rat& v);
Rat rational_from_string(const std::string& s);

/* {branches:[{den, extra_depth, terms:[[num,"coeff"],...]},...], centre:"origin"} */
std::string scheme_to_json(const GSScheme& x);
GSScheme scheme_from_json(const std::string& text);

/* Accepts a single scheme object or an array of them. */
std::vector<GSScheme> schemes_from_json(const std::string& text);

/* {nodes:[{id, parent, m, mhat, essential, onL, branches},...]} */
std::string tree_to_json(const GSScheme& x);

/* {deg, delta, mt, mts, mu, gs1, s, tree} */
std::string invariants_to_json(const GSScheme& x);

std::string bound_report_to_json(const BoundReport& r);
std::string cohomology_to_json(const Cohomology& c);
std::string matrix_to_csv(const std::vector<std::vector<Rat>>& rows);

} // namespace plcs

#endif
