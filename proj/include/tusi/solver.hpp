#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tusi/analysis.hpp"
#include "tusi/extraction.hpp"
#include "tusi/forms.hpp"
#include "tusi/oracle.hpp"
#include "tusi/reduction.hpp"

namespace tusi {

struct SolveOptions {
    unsigned digits = 12;
    unsigned base = 10;
    bool use_oracle = true;
    bool trace = false;
};

struct RootReport {
    std::string label; // "x1", "x2", "x"
    DigitString digits;
    int multiplicity = 1;
    std::string exact_form; // exact rendering when the root is known exactly
};

struct SolveReport {
    std::string input;
    Classified classification;
    std::string form_label;          // canonical tag, e.g. "C21"
    std::string case_label;          // impossible/double_root/two_roots/unique_root/multiple_roots
    std::optional<CaseKind> case_kind;
    std::optional<MaximumReport> maximum;
    std::optional<CaseOutcome> outcome;
    std::optional<Lemma2Class> lemma2;
    ReductionChain chain;
    std::vector<RootReport> roots;
    std::string oracle_verdict; // "agree", "skipped", or "mismatch: ..."
    std::vector<std::string> notes;
    unsigned digits_requested = 12;
    unsigned base = 10;
    double elapsed_ms = 0;
};

/// Full pipeline on parsed input: classify, analyze the maximum, decide the
/// case, reduce, extract digits, and (unless disabled) audit everything
/// against the oracle. Oracle disagreement raises InternalError.
SolveReport solve_general(const GeneralPoly& p, const std::string& input_echo,
                          const SolveOptions& opt);

/// Parse + solve.
SolveReport solve_text(const std::string& text, const SolveOptions& opt);

} // namespace tusi
