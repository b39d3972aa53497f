#include "support/lp_text.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace testlp {

namespace {

bool is_number(const std::string& tok, double* out) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0') return false;
    *out = v;
    return true;
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line[0] == '\\') continue;  // comment
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

}  // namespace

ParsedLp parse_lp(const std::string& text) {
    ParsedLp lp;
    const std::vector<std::string> tokens = tokenize(text);
    size_t i = 0;
    auto diag = [&](const std::string& msg) { lp.diagnostics.push_back(msg); };

    auto accept = [&](const std::string& word) {
        if (i < tokens.size() && tokens[i] == word) {
            ++i;
            return true;
        }
        return false;
    };

    if (!accept("Minimize")) diag("expected Minimize");

    enum class Section { Objective, Constraints, Bounds, Binaries, Done };
    Section section = Section::Objective;

    std::string pending_name;
    std::vector<std::pair<std::string, double>> terms;
    double sign = 1.0;
    bool have_coeff = false;
    double coeff = 1.0;

    auto flush_term = [&](const std::string& var) {
        terms.emplace_back(var, sign * (have_coeff ? coeff : 1.0));
        sign = 1.0;
        have_coeff = false;
    };

    while (i < tokens.size() && section != Section::Done) {
        const std::string& tok = tokens[i];
        if (tok == "Subject" && i + 1 < tokens.size() && tokens[i + 1] == "To") {
            if (section != Section::Objective) diag("Subject To out of order");
            lp.objective = terms;
            terms.clear();
            pending_name.clear();
            section = Section::Constraints;
            i += 2;
            continue;
        }
        if (tok == "Bounds") {
            if (!terms.empty()) diag("constraint without sense before Bounds");
            section = Section::Bounds;
            ++i;
            continue;
        }
        if (tok == "Binaries") {
            section = Section::Binaries;
            ++i;
            continue;
        }
        if (tok == "End") {
            section = Section::Done;
            ++i;
            continue;
        }

        switch (section) {
            case Section::Objective:
            case Section::Constraints: {
                if (!tok.empty() && tok.back() == ':') {
                    if (!terms.empty()) diag("constraint " + pending_name + " missing sense");
                    pending_name = tok.substr(0, tok.size() - 1);
                    terms.clear();
                    sign = 1.0;
                    have_coeff = false;
                    ++i;
                    break;
                }
                if (tok == "+" || tok == "-") {
                    sign = tok == "+" ? 1.0 : -1.0;
                    ++i;
                    break;
                }
                if (tok == "<=" || tok == ">=" || tok == "=") {
                    double rhs = 0.0;
                    if (i + 1 >= tokens.size() || !is_number(tokens[i + 1], &rhs)) {
                        diag("missing rhs after sense in " + pending_name);
                        ++i;
                        break;
                    }
                    if (section == Section::Objective) {
                        diag("sense token inside objective");
                    } else {
                        lp.constraints.push_back({pending_name, terms, tok, rhs});
                    }
                    terms.clear();
                    pending_name.clear();
                    i += 2;
                    break;
                }
                double value = 0.0;
                if (is_number(tok, &value)) {
                    if (have_coeff) diag("two coefficients in a row near " + tok);
                    coeff = value;
                    have_coeff = true;
                    ++i;
                    break;
                }
                flush_term(tok);
                ++i;
                break;
            }
            case Section::Bounds: {
                // "<lo> <= <name>" lines.
                double lo = 0.0;
                if (!is_number(tok, &lo)) {
                    diag("bad bounds line near " + tok);
                    ++i;
                    break;
                }
                if (i + 2 >= tokens.size() || tokens[i + 1] != "<=") {
                    diag("bad bounds line near " + tok);
                    ++i;
                    break;
                }
                if (!lp.bounded.insert(tokens[i + 2]).second)
                    diag("duplicate bound for " + tokens[i + 2]);
                i += 3;
                break;
            }
            case Section::Binaries: {
                if (!lp.binaries.insert(tok).second) diag("duplicate binary " + tok);
                ++i;
                break;
            }
            case Section::Done: break;
        }
    }
    if (section != Section::Done) diag("missing End");

    // Every referenced variable must be declared exactly once.
    auto declared = [&](const std::string& var) {
        return lp.bounded.count(var) + lp.binaries.count(var) == 1;
    };
    for (const auto& [var, c] : lp.objective)
        if (!declared(var)) diag("objective references undeclared " + var);
    for (const auto& c : lp.constraints)
        for (const auto& [var, v] : c.terms)
            if (!declared(var)) diag("constraint " + c.name + " references undeclared " + var);
    for (const auto& var : lp.bounded)
        if (lp.binaries.count(var)) diag("variable in both Bounds and Binaries: " + var);

    return lp;
}

}  // namespace testlp
