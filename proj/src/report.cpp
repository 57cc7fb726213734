#include "tusi/report.hpp"

#include <json.hpp>

#include <sstream>

namespace tusi {

namespace {

std::string qe_with_decimal(const QuadExt& v, unsigned digits) {
    std::string s = v.to_string();
    if (!v.is_rational() || !v.rational_value().is_integer()) {
        s += " (= " + v.to_decimal(digits) + ")";
    }
    return s;
}

std::string interval_decimal(const Interval& iv, unsigned digits) {
    return "[" + iv.lo.to_decimal(digits) + ", " + iv.hi.to_decimal(digits) + "]";
}

} // namespace

std::string render_text(const SolveReport& rep, bool trace) {
    std::ostringstream os;
    unsigned nd = rep.digits_requested;
    os << "input:   " << rep.input << "\n";

    const auto& cls = rep.classification;
    if (cls.terminal == Classified::Terminal::Equation) {
        const auto& eq = *cls.equation;
        os << "form:    " << form_name(eq.form) << "   (" << form_pattern(eq.form)
           << ")\n";
        os << "         " << eq.to_string() << "\n";
    } else {
        os << "form:    degenerate (" << rep.case_label << ")\n";
    }

    if (trace && rep.maximum) {
        os << "-- domain --\n";
        os << "  positivity domain: 0 < x < "
           << qe_with_decimal(rep.maximum->domain_hi, nd) << "\n";
    }
    if (rep.maximum) {
        const auto& mr = *rep.maximum;
        if (trace) os << "-- maximum --\n";
        os << "maximum: x0 = " << qe_with_decimal(mr.x0, nd)
           << ",  c0 = " << qe_with_decimal(mr.c0, nd)
           << ",  d = " << mr.d.to_string() << "\n";
    }

    if (trace) os << "-- case --\n";
    os << "case:    " << rep.case_label << "\n";
    if (rep.lemma2) {
        os << "lemma2:  " << lemma2_name(*rep.lemma2) << "\n";
    }
    if (trace && rep.outcome && rep.outcome->kind == CaseKind::TwoRoots) {
        os << "  x1 bracketed in " << interval_decimal(rep.outcome->bracket_small, nd)
           << "\n";
        os << "  x2 bracketed in " << interval_decimal(rep.outcome->bracket_large, nd)
           << "\n";
    }

    if (!rep.chain.steps.empty()) {
        if (trace) os << "-- reductions --\n";
        os << "chain:\n";
        for (std::size_t i = 0; i < rep.chain.steps.size(); ++i) {
            const auto& s = rep.chain.steps[i];
            os << "  " << (i + 1) << ". [" << subst_name(s.kind) << "] "
               << form_name(s.source_form) << " -> " << form_name(s.target_form)
               << ":  " << s.target << "\n";
            os << "     back: " << s.back_map << "\n";
        }
    }

    if (!rep.roots.empty()) {
        if (trace) os << "-- extraction --\n";
        os << "roots:\n";
        for (const auto& r : rep.roots) {
            os << "  " << r.label << " = " << r.digits.str();
            if (r.digits.exact) os << " (exact)";
            if (!r.exact_form.empty()) os << "  [= " << r.exact_form << " exactly]";
            if (r.multiplicity > 1) os << "  (multiplicity " << r.multiplicity << ")";
            os << "\n";
            if (trace) {
                os << "     enclosure " << interval_decimal(r.digits.enclosure, nd + 2)
                   << "\n";
            }
        }
    }

    for (const auto& n : rep.notes) os << "note:    " << n << "\n";
    os << "oracle:  " << rep.oracle_verdict << "\n";
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(2);
    ms << rep.elapsed_ms;
    os << "time:    " << ms.str() << " ms\n";
    return os.str();
}

std::string render_json(const SolveReport& rep) {
    using json = nlohmann::ordered_json;
    json j;
    j["input"] = rep.input;
    j["form"] = rep.form_label.empty() ? json() : json(rep.form_label);

    auto qe = [](const QuadExt& v) {
        json o;
        o["p"] = v.p().to_string();
        o["q"] = v.q().to_string();
        o["d"] = v.radicand().to_string();
        return o;
    };
    j["x0"] = rep.maximum ? qe(rep.maximum->x0) : json();
    j["c0"] = rep.maximum ? qe(rep.maximum->c0) : json();
    j["case"] = rep.case_label;
    j["lemma2"] = rep.lemma2 ? json(std::string(lemma2_name(*rep.lemma2))) : json();

    json chain = json::array();
    for (const auto& s : rep.chain.steps) {
        json o;
        o["kind"] = std::string(subst_name(s.kind));
        o["pivot"] = s.pivot;
        o["target"] = s.target;
        chain.push_back(o);
    }
    j["chain"] = chain;

    json roots = json::array();
    for (const auto& r : rep.roots) {
        json o;
        o["digits"] = r.digits.str();
        o["base"] = r.digits.base;
        o["enclosure"] = {r.digits.enclosure.lo.to_string(),
                          r.digits.enclosure.hi.to_string()};
        o["multiplicity"] = r.multiplicity;
        roots.push_back(o);
    }
    j["roots"] = roots;
    j["oracle"] = json{{"verdict", rep.oracle_verdict}};
    return j.dump();
}

} // namespace tusi
