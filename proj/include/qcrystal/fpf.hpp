#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcrystal/words.hpp"

namespace qcrystal {

// Raised when a letter u is applied to an involution z with z(u) >= z(u+1),
// i.e. the step would not be length-increasing.
struct DescentError : std::runtime_error {
    int position;  // 1-based index of the failing letter within a word, 0 if single step
    int letter;
    DescentError(int pos, int u)
        : std::runtime_error("descent at position " + std::to_string(pos) +
                             " (letter " + std::to_string(u) + ")"),
          position(pos), letter(u) {}
};

// A fixed-point-free involution that agrees with theta = (12)(34)(56)... outside
// its window. Stored as the one-line word z(1)..z(N) for an even window N; the
// window is explicit, and two values compare equal iff they agree after
// extending both by theta.
class FpfInvolution {
  public:
    // theta restricted to an even window.
    static FpfInvolution theta(int window);
    // Validates that `oneline` is a fixed-point-free involution on an even window.
    static FpfInvolution from_oneline(const std::vector<int>& oneline);

    int window() const { return static_cast<int>(map_.size()); }
    int operator()(int i) const;  // z(i), defined for all i >= 1 via theta outside
    const std::vector<int>& one_line() const { return map_; }

    bool is_ascent(int u) const;  // z(u) < z(u+1)

    // s_u z s_u when z(u) < z(u+1); throws DescentError otherwise. The window
    // grows by steps of 2 as needed to cover u+1.
    FpfInvolution apply_letter(int u) const;
    std::optional<FpfInvolution> try_apply_letter(int u) const;

    // Unconditional conjugation s_u z s_u (length may drop); used by the
    // backward enumeration and the brute-force cross-check.
    FpfInvolution conjugate(int u) const;

    // Copy with all trailing theta pairs stripped (minimal window, >= 2).
    FpfInvolution normalized() const;

    bool operator==(const FpfInvolution& o) const;
    bool operator!=(const FpfInvolution& o) const { return !(*this == o); }
    bool operator<(const FpfInvolution& o) const;  // on normalized one-line words

    std::string to_string() const;  // space-separated one-line word

  private:
    explicit FpfInvolution(std::vector<int> m) : map_(std::move(m)) {}
    FpfInvolution extended(int window) const;
    std::vector<int> map_;
};

FpfInvolution parse_fpf_involution(const std::string& s);

struct FpfInvolutionHash {
    std::size_t operator()(const FpfInvolution& z) const noexcept {
        std::size_t h = 14695981039346656037ull;
        for (int v : z.normalized().one_line()) h = h * 1099511628211ull + static_cast<std::size_t>(v);
        return h;
    }
};

// Folds apply_letter over w starting from theta. Throws DescentError carrying
// the 1-based failing position when w is not an FPF-involution word.
FpfInvolution word_to_involution(const Word& w);
bool is_fpf_involution_word(const Word& w);

// All FPF-involution words for z, sorted. Every word has the same length.
std::vector<Word> enumerate_words(const FpfInvolution& z);

// An increasing factorization: m blocks, each strictly increasing, possibly empty.
class Factorization {
  public:
    Factorization() = default;
    explicit Factorization(std::vector<Word> blocks);  // validates increasing blocks

    int block_count() const { return static_cast<int>(blocks_.size()); }
    const Word& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
    const std::vector<Word>& blocks() const { return blocks_; }

    Word word() const;  // concatenation of blocks

    bool operator==(const Factorization& o) const { return blocks_ == o.blocks_; }
    bool operator<(const Factorization& o) const { return blocks_ < o.blocks_; }

    // "(24)(13)()" form; letters > 9 are space-separated inside their block.
    std::string to_string() const;

  private:
    std::vector<Word> blocks_;
};

Factorization parse_factorization(const std::string& s);

struct FactorizationHash {
    std::size_t operator()(const Factorization& f) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        WordHash wh;
        for (const Word& b : f.blocks()) h = h * 31 + wh(b) + 0x9e3779b9u;
        return h;
    }
};

// Every way to cut every word of z into m strictly increasing consecutive
// blocks (empty blocks allowed), sorted.
std::vector<Factorization> enumerate_factorizations(const FpfInvolution& z, int m);
// Cuts of a single word.
std::vector<Factorization> increasing_cuts(const Word& w, int m);

// All z in F_infinity whose minimal window is <= window, sorted.
std::vector<FpfInvolution> all_fpf_involutions(int window);

}  // namespace qcrystal
