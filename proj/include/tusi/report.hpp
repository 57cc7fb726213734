#pragma once

#include <string>

#include "tusi/solver.hpp"

namespace tusi {

/// Human-readable report; with trace=true every pipeline stage gets its own
/// block (form, domain, maximum, case, reductions, extraction) in order.
std::string render_text(const SolveReport& rep, bool trace);

/// One JSON object per equation with canonical field order and lowercase
/// keys: input, form, x0, c0, case, lemma2, chain, roots, oracle. Re-parsing
/// and re-rendering the output is byte-identical.
std::string render_json(const SolveReport& rep);

} // namespace tusi
