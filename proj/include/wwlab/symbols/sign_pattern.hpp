#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace wwlab {

/// Signs (each +1 or -1) selecting phi_{s1 s2} or phi_{s1 s2 s3}.
class SignPattern {
public:
    SignPattern(std::initializer_list<int> signs);
    explicit SignPattern(std::vector<int> signs);
    /// Accepts "--+", "-,-,+", "(-,-,+)", "mmp".
    static SignPattern parse(std::string_view text);
    /// All 2^length patterns, lexicographic with '+' first.
    static std::vector<SignPattern> all(std::size_t length);

    std::size_t size() const noexcept { return signs_.size(); }
    int operator[](std::size_t i) const { return signs_.at(i); }
    std::string str() const;
    friend bool operator==(const SignPattern&, const SignPattern&) = default;

private:
    std::vector<int> signs_;
};

}  // namespace wwlab
