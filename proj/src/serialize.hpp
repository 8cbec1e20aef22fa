#pragma once

#include "applications.hpp"
#include "bases.hpp"
#include "series.hpp"

#include <string>
#include <vector>

namespace bisym {

// Renderers shared by the CLI and the C API.  All output is deterministic:
// keys in canonical order, t-exponents ascending, no locale dependence.
//
// Text forms are written in hbar, not t: a stored term c * t^k turns into the
// displayed coefficient c * (-1)^k on hbar^k, so that feeding the text back
// through the expression language (where `hbar` evaluates to -t) reproduces
// the series exactly.  JSON keeps the raw t-exponents instead — the "t" field
// is storage, not display.

std::string series_to_json(const bisym_series& f);
std::string series_to_text_p(const bisym_series& f);
// Schur-pair basis rendering; internally a schur_pair_expansion.
std::string series_to_text_schur(const bisym_series& f);
// Schur-basis JSON uses the report row schema below.
std::string series_to_json_schur(const bisym_series& f);

// Report rows: {"x_part":[...], "y_part":[...], "hbar_deg":d, "mult":"m"}.
// hbar_deg equals the stored t-exponent (see series.hpp) and mult is the
// graded multiplicity itself — no sign adjustment, reports label degrees
// rather than multiplying out hbar powers.
std::string report_to_json(const decomposition_report& r);
std::string report_to_text(const decomposition_report& r);

std::string counts_to_csv(const std::vector<counts_row>& rows);
std::string counts_to_json(const std::vector<counts_row>& rows);

} // namespace bisym
