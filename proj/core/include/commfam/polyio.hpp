#ifndef COMMFAM_POLYIO_HPP
#define COMMFAM_POLYIO_HPP

#include <map>
#include <string>

#include "commfam/ratfunc.hpp"

namespace commfam {

using LabelMap = std::map<std::string, VarId>;

/// Canonical polynomial grammar: terms joined by `+`/`-`, each term
/// `[coeff][*]var[^exp][*var[^exp]...]` with `p/q` coefficients, variables
/// named by basis labels and parameters as `t<k>`. Terms print leading-first.
std::string poly_to_string(const Poly& p);
std::string ratfunc_to_string(const RatFunc& f);

/// Parses the canonical grammar; every variable name must resolve through
/// `labels`. Throws Parse on malformed input or unknown names.
Poly poly_parse(const std::string& text, const LabelMap& labels);

}  // namespace commfam

#endif
