#pragma once

#include "gsp2/rational.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace gsp2 {

// Line-delimited structured records: fixed field order, "key=value" pairs
// separated by single spaces, exact rationals serialized as "num/den".
struct Record {
    std::vector<std::pair<std::string, std::string>> fields;

    Record& add(const std::string& k, const std::string& v) {
        fields.push_back({k, v});
        return *this;
    }
    Record& add(const std::string& k, const char* v) { return add(k, std::string(v)); }
    Record& add(const std::string& k, long long v) { return add(k, std::to_string(v)); }
    Record& add(const std::string& k, int v) { return add(k, (long long)v); }
    Record& add(const std::string& k, const Rational& v) { return add(k, v.str()); }
    Record& add(const std::string& k, bool v) { return add(k, std::string(v ? "pass" : "FAIL")); }

    void emit(std::ostream& os) const {
        bool first = true;
        for (auto& [k, v] : fields) {
            if (!first) os << ' ';
            first = false;
            os << k << '=' << v;
        }
        os << '\n';
    }
};

}  // namespace gsp2
