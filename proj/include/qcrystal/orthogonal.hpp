#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcrystal/fpf.hpp"
#include "qcrystal/words.hpp"

namespace qcrystal {

// An involution of S_infinity (fixed points allowed) acting as the identity
// outside its window.
class Involution {
  public:
    static Involution identity(int window = 1);
    static Involution from_oneline(const std::vector<int>& oneline);

    int window() const { return static_cast<int>(map_.size()); }
    int operator()(int i) const;
    const std::vector<int>& one_line() const { return map_; }

    bool is_ascent(int u) const;

    // s_u z s_u if that differs from z, else z s_u; requires z(u) < z(u+1),
    // throws DescentError otherwise.
    Involution apply_letter(int u) const;
    std::optional<Involution> try_apply_letter(int u) const;

    Involution normalized() const;  // trailing fixed points stripped, window >= 1

    bool operator==(const Involution& o) const;
    bool operator!=(const Involution& o) const { return !(*this == o); }
    bool operator<(const Involution& o) const;

    std::string to_string() const;

  private:
    explicit Involution(std::vector<int> m) : map_(std::move(m)) {}
    Involution extended(int window) const;
    std::vector<int> map_;
};

Involution parse_involution(const std::string& s);

Involution word_to_involution_o(const Word& w);
bool is_involution_word(const Word& w);

std::vector<Word> enumerate_words_o(const Involution& z);
std::vector<Factorization> enumerate_factorizations_o(const Involution& z, int m);

// All involutions with minimal window <= window, sorted.
std::vector<Involution> all_involutions(int window);

}  // namespace qcrystal
