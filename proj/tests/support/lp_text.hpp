// Small LP-format reader used to round-trip emitted models: sections,
// constraint senses, term lists, declared variable sets. Collects
// diagnostics instead of throwing so tests can assert emptiness.
#ifndef BINROUTE_TESTS_LP_TEXT_HPP
#define BINROUTE_TESTS_LP_TEXT_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

namespace testlp {

struct ParsedConstraint {
    std::string name;
    std::vector<std::pair<std::string, double>> terms;
    std::string sense;  // "<=", ">=", "="
    double rhs = 0.0;
};

struct ParsedLp {
    std::vector<std::pair<std::string, double>> objective;
    std::vector<ParsedConstraint> constraints;
    std::set<std::string> bounded;   // variables named in Bounds
    std::set<std::string> binaries;  // variables named in Binaries
    std::vector<std::string> diagnostics;

    // Number of constraints whose name starts with the prefix.
    int count_family(const std::string& prefix) const {
        int n = 0;
        for (const auto& c : constraints)
            if (c.name.rfind(prefix, 0) == 0) ++n;
        return n;
    }
    size_t variable_count() const { return bounded.size() + binaries.size(); }
};

ParsedLp parse_lp(const std::string& text);

}  // namespace testlp

#endif
