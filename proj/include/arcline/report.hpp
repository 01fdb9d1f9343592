#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arcline/classify.hpp"
#include "arcline/oracle.hpp"

namespace arcline {

// Flat ordered key/value document; one "key = value" line in text mode, one
// object in json mode. Flat on purpose: golden tests diff it line by line.
class Report {
  public:
    using Value = std::variant<std::string, bool, long long>;

    void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
    void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
    void add(std::string key, bool value) { rows_.emplace_back(std::move(key), Value(value)); }
    void add(std::string key, long long value) { rows_.emplace_back(std::move(key), Value(value)); }

    const std::vector<std::pair<std::string, Value>>& rows() const { return rows_; }

    std::string text() const;
    std::string json() const;

  private:
    std::vector<std::pair<std::string, Value>> rows_;
};

std::string describe(const ConditionIVerdict& v);
std::string describe(const ConditionIIVerdict& v);

Report to_report(const ClassificationReport& c);
Report to_report(const AgreementSummary& s);

}  // namespace arcline
