#include "qcrystal/fpf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace qcrystal {

namespace {

std::vector<int> theta_map(int window) {
    std::vector<int> m(static_cast<std::size_t>(window));
    for (int i = 1; i <= window; ++i) m[static_cast<std::size_t>(i - 1)] = (i % 2 == 1) ? i + 1 : i - 1;
    return m;
}

}  // namespace

FpfInvolution FpfInvolution::theta(int window) {
    if (window < 2 || window % 2 != 0) throw std::invalid_argument("window must be even and >= 2");
    return FpfInvolution(theta_map(window));
}

FpfInvolution FpfInvolution::from_oneline(const std::vector<int>& oneline) {
    const int n = static_cast<int>(oneline.size());
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("one-line word must have even length >= 2");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : oneline) {
        if (v < 1 || v > n) throw std::invalid_argument("not a permutation of its window");
        if (seen[static_cast<std::size_t>(v)]++) throw std::invalid_argument("repeated value in one-line word");
    }
    for (int i = 1; i <= n; ++i) {
        const int zi = oneline[static_cast<std::size_t>(i - 1)];
        if (zi == i) throw std::invalid_argument("fixed point at " + std::to_string(i));
        if (oneline[static_cast<std::size_t>(zi - 1)] != i)
            throw std::invalid_argument("not an involution at " + std::to_string(i));
    }
    return FpfInvolution(oneline);
}

int FpfInvolution::operator()(int i) const {
    if (i < 1) throw std::out_of_range("positions are 1-based");
    if (i <= window()) return map_[static_cast<std::size_t>(i - 1)];
    return (i % 2 == 1) ? i + 1 : i - 1;  // theta outside the window
}

FpfInvolution FpfInvolution::extended(int w) const {
    std::vector<int> m = map_;
    while (static_cast<int>(m.size()) < w) {
        const int k = static_cast<int>(m.size());
        m.push_back(k + 2);
        m.push_back(k + 1);
    }
    return FpfInvolution(std::move(m));
}

FpfInvolution FpfInvolution::normalized() const {
    std::vector<int> m = map_;
    while (m.size() > 2) {
        const int n = static_cast<int>(m.size());
        if (m[static_cast<std::size_t>(n - 1)] == n - 1 && m[static_cast<std::size_t>(n - 2)] == n) {
            m.pop_back();
            m.pop_back();
        } else {
            break;
        }
    }
    return FpfInvolution(std::move(m));
}

bool FpfInvolution::is_ascent(int u) const {
    if (u < 1) throw std::out_of_range("letters are positive");
    return (*this)(u) < (*this)(u + 1);
}

FpfInvolution FpfInvolution::conjugate(int u) const {
    const int need = (u + 1) % 2 == 0 ? u + 1 : u + 2;
    FpfInvolution z = extended(std::max(window(), need));
    std::vector<int>& m = z.map_;
    std::swap(m[static_cast<std::size_t>(u - 1)], m[static_cast<std::size_t>(u)]);
    for (int& v : m) {
        if (v == u) v = u + 1;
        else if (v == u + 1) v = u;
    }
    return z;
}

FpfInvolution FpfInvolution::apply_letter(int u) const {
    if (!is_ascent(u)) throw DescentError(0, u);
    return conjugate(u);
}

std::optional<FpfInvolution> FpfInvolution::try_apply_letter(int u) const {
    if (!is_ascent(u)) return std::nullopt;
    return conjugate(u);
}

bool FpfInvolution::operator==(const FpfInvolution& o) const {
    return normalized().map_ == o.normalized().map_;
}

bool FpfInvolution::operator<(const FpfInvolution& o) const {
    return normalized().map_ < o.normalized().map_;
}

std::string FpfInvolution::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(map_[i]);
    }
    return out;
}

FpfInvolution parse_fpf_involution(const std::string& s) {
    return FpfInvolution::from_oneline(parse_word(s));
}

FpfInvolution word_to_involution(const Word& w) {
    FpfInvolution z = FpfInvolution::theta(2);
    for (std::size_t k = 0; k < w.size(); ++k) {
        auto next = z.try_apply_letter(w[k]);
        if (!next) throw DescentError(static_cast<int>(k) + 1, w[k]);
        z = std::move(*next);
    }
    return z;
}

bool is_fpf_involution_word(const Word& w) {
    FpfInvolution z = FpfInvolution::theta(2);
    for (Letter u : w) {
        auto next = z.try_apply_letter(u);
        if (!next) return false;
        z = std::move(*next);
    }
    return true;
}

namespace {

using WordList = std::vector<Word>;

// Backward recursion: a predecessor of z is s_u z s_u for a descent u of z,
// except when z swaps u and u+1 (that step would not shorten).
const WordList& words_rec(const FpfInvolution& z,
                          std::map<std::vector<int>, WordList>& memo) {
    const FpfInvolution nz = z.normalized();
    auto it = memo.find(nz.one_line());
    if (it != memo.end()) return it->second;
    WordList out;
    if (nz.window() == 2) {
        out.push_back(Word{});
    } else {
        const int n = nz.window();
        for (int u = 1; u < n; ++u) {
            if (nz(u) > nz(u + 1) && !(nz(u) == u + 1 && nz(u + 1) == u)) {
                const FpfInvolution y = nz.conjugate(u);
                for (const Word& w : words_rec(y, memo)) {
                    Word v = w;
                    v.push_back(u);
                    out.push_back(std::move(v));
                }
            }
        }
        std::sort(out.begin(), out.end());
    }
    return memo.emplace(nz.one_line(), std::move(out)).first->second;
}

}  // namespace

std::vector<Word> enumerate_words(const FpfInvolution& z) {
    std::map<std::vector<int>, std::vector<Word>> memo;
    return words_rec(z, memo);
}

Factorization::Factorization(std::vector<Word> blocks) : blocks_(std::move(blocks)) {
    for (const Word& b : blocks_)
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if (b[i] >= b[i + 1]) throw std::invalid_argument("block not strictly increasing");
}

Word Factorization::word() const {
    Word w;
    for (const Word& b : blocks_) w.insert(w.end(), b.begin(), b.end());
    return w;
}

// Blocks of single-digit letters print compactly, "(24)(13)()". Any letter
// above 9 switches the whole factorization to space-separated letters, and a
// trailing space is forced when no block would otherwise contain one, so the
// parse below can tell 11 from 1 1.
std::string Factorization::to_string() const {
    bool wide = false;
    for (const Word& b : blocks_)
        for (Letter x : b) wide |= x > 9;
    std::string out;
    bool separated = false;
    for (const Word& b : blocks_) {
        out += '(';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (wide && i) { out += ' '; separated = true; }
            out += std::to_string(b[i]);
        }
        out += ')';
    }
    if (wide && !separated) {
        const std::size_t close = out.find(')', out.find_first_not_of("()"));
        out.insert(close, " ");
    }
    return out;
}

Factorization parse_factorization(const std::string& s) {
    std::vector<std::string> bodies;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
        if (s[i] != '(') throw std::invalid_argument("expected '(' in factorization: " + s);
        const std::size_t close = s.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced factorization: " + s);
        bodies.push_back(s.substr(i + 1, close - i - 1));
        i = close + 1;
    }
    if (bodies.empty()) throw std::invalid_argument("factorization needs at least one block");
    bool spaced = false;
    for (const std::string& body : bodies)
        spaced |= body.find(' ') != std::string::npos || body.find(',') != std::string::npos;
    std::vector<Word> blocks;
    for (std::string body : bodies) {
        if (body.find_first_not_of(" ,") == std::string::npos) {
            blocks.emplace_back();
        } else if (spaced) {
            std::replace(body.begin(), body.end(), ',', ' ');
            Word b;
            std::istringstream in(body);
            int x;
            while (in >> x) b.push_back(x);
            if (!in.eof()) throw std::invalid_argument("cannot parse block: " + body);
            blocks.push_back(std::move(b));
        } else {
            blocks.push_back(parse_word(body));
        }
    }
    return Factorization(std::move(blocks));
}

std::vector<Factorization> increasing_cuts(const Word& w, int m) {
    if (m < 1) throw std::invalid_argument("block count must be >= 1");
    std::vector<Factorization> out;
    std::vector<Word> blocks;
    const int n = static_cast<int>(w.size());
    auto rec = [&](auto&& self, int i) -> void {
        const int placed = static_cast<int>(blocks.size());
        if (placed == m) {
            if (i == n) out.emplace_back(blocks);
            return;
        }
        int jmax = i;  // end of the maximal strictly increasing run from i
        while (jmax < n && (jmax == i || w[static_cast<std::size_t>(jmax - 1)] < w[static_cast<std::size_t>(jmax)]))
            ++jmax;
        for (int j = i; j <= jmax; ++j) {
            blocks.emplace_back(w.begin() + i, w.begin() + j);
            self(self, j);
            blocks.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Factorization> enumerate_factorizations(const FpfInvolution& z, int m) {
    std::vector<Factorization> out;
    for (const Word& w : enumerate_words(z)) {
        std::vector<Factorization> cuts = increasing_cuts(w, m);
        out.insert(out.end(), cuts.begin(), cuts.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FpfInvolution> all_fpf_involutions(int window) {
    if (window < 2 || window % 2 != 0) throw std::invalid_argument("window must be even and >= 2");
    std::vector<FpfInvolution> out;
    std::vector<int> map(static_cast<std::size_t>(window), 0);
    auto rec = [&](auto&& self) -> void {
        int a = 0;
        for (int i = 1; i <= window; ++i)
            if (map[static_cast<std::size_t>(i - 1)] == 0) { a = i; break; }
        if (a == 0) {
            out.push_back(FpfInvolution::from_oneline(map).normalized());
            return;
        }
        for (int b = a + 1; b <= window; ++b) {
            if (map[static_cast<std::size_t>(b - 1)] != 0) continue;
            map[static_cast<std::size_t>(a - 1)] = b;
            map[static_cast<std::size_t>(b - 1)] = a;
            self(self);
            map[static_cast<std::size_t>(a - 1)] = 0;
            map[static_cast<std::size_t>(b - 1)] = 0;
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace qcrystal
