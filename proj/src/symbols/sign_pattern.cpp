#include "wwlab/symbols/sign_pattern.hpp"

#include "wwlab/errors.hpp"

namespace wwlab {

SignPattern::SignPattern(std::initializer_list<int> signs) : SignPattern(std::vector<int>(signs)) {}

SignPattern::SignPattern(std::vector<int> signs) : signs_(std::move(signs)) {
    if (signs_.size() != 2 && signs_.size() != 3) throw ConfigError("sign pattern must have length 2 or 3");
    for (int s : signs_)
        if (s != 1 && s != -1) throw ConfigError("sign pattern entries must be +1 or -1");
}

SignPattern SignPattern::parse(std::string_view text) {
    std::vector<int> s;
    for (char c : text) {
        if (c == '+' || c == 'p') s.push_back(1);
        else if (c == '-' || c == 'm') s.push_back(-1);
        else if (c == ',' || c == '(' || c == ')' || c == ' ') continue;
        else throw ConfigError("bad character in sign pattern: " + std::string(text));
    }
    return SignPattern(std::move(s));
}

std::vector<SignPattern> SignPattern::all(std::size_t length) {
    std::vector<SignPattern> out;
    for (unsigned bits = 0; bits < (1U << length); ++bits) {
        std::vector<int> s(length);
        for (std::size_t i = 0; i < length; ++i) s[i] = (bits >> (length - 1 - i)) & 1U ? -1 : 1;
        out.emplace_back(std::move(s));
    }
    return out;
}

std::string SignPattern::str() const {
    std::string out;
    for (int s : signs_) out.push_back(s > 0 ? '+' : '-');
    return out;
}

}  // namespace wwlab
