#include "arcline/report.hpp"

#include <json.hpp>

namespace arcline {

std::string Report::text() const {
    std::string out;
    for (const auto& [key, value] : rows_) {
        out += key;
        out += " = ";
        if (const auto* s = std::get_if<std::string>(&value))
            out += *s;
        else if (const auto* b = std::get_if<bool>(&value))
            out += *b ? "true" : "false";
        else
            out += std::to_string(std::get<long long>(value));
        out += '\n';
    }
    return out;
}

std::string Report::json() const {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& [key, value] : rows_) {
        if (const auto* s = std::get_if<std::string>(&value))
            doc[key] = *s;
        else if (const auto* b = std::get_if<bool>(&value))
            doc[key] = *b;
        else
            doc[key] = std::get<long long>(value);
    }
    return doc.dump(2) + "\n";
}

std::string describe(const ConditionIVerdict& v) {
    std::string s = v.window_checked ? "window-approximate " : "";
    if (v.holds) return s + "holds";
    s += "fails";
    if (v.pair)
        s += " witness=(" + to_string(v.pair->first) + "," + to_string(v.pair->second) + ")";
    if (v.missing) s += " missing=" + to_string(*v.missing);
    return s;
}

std::string describe(const ConditionIIVerdict& v) {
    if (v.holds) return "holds";
    std::string s = "fails";
    if (v.missing) s += " missing=" + to_string(*v.missing);
    return s;
}

Report to_report(const ClassificationReport& c) {
    Report r;
    r.add("fountains.left", to_string(c.fountains.left));
    r.add("fountains.right", to_string(c.fountains.right));
    r.add("locally_finite", c.locally_finite);
    r.add("condition_i", describe(c.condition_i));
    r.add("condition_ii", describe(c.condition_ii));
    r.add("ort_closed", c.ort_closed);
    r.add("precovering", c.precovering);
    r.add("preenveloping", c.preenveloping);
    r.add("torsion_class", c.torsion_class);
    r.add("t_structure", to_string(c.t_structure));
    r.add("co_t_structure", to_string(c.co_t_structure));
    r.add("canonical_parts", static_cast<long long>(c.canonical_parts));
    return r;
}

Report to_report(const AgreementSummary& s) {
    Report r;
    r.add("ort.cases", s.ort_cases);
    r.add("ort.failures", s.ort_failures);
    r.add("condition.cases", s.condition_cases);
    r.add("condition.failures", s.condition_failures);
    r.add("fountain.cases", s.fountain_cases);
    r.add("fountain.failures", s.fountain_failures);
    r.add("failures", s.failures());
    r.add("passed", s.passed());
    for (std::size_t i = 0; i < s.counterexamples.size(); ++i) {
        const auto& ce = s.counterexamples[i];
        std::string p = "counterexample." + std::to_string(i) + ".";
        r.add(p + "suite", ce.suite);
        r.add(p + "region", ce.region);
        r.add(p + "detail", ce.detail);
    }
    return r;
}

}  // namespace arcline
