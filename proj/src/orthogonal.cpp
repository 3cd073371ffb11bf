#include "qcrystal/orthogonal.hpp"

#include <algorithm>
#include <map>

namespace qcrystal {

Involution Involution::identity(int window) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    std::vector<int> m(static_cast<std::size_t>(window));
    for (int i = 1; i <= window; ++i) m[static_cast<std::size_t>(i - 1)] = i;
    return Involution(std::move(m));
}

Involution Involution::from_oneline(const std::vector<int>& oneline) {
    const int n = static_cast<int>(oneline.size());
    if (n < 1) throw std::invalid_argument("one-line word must be nonempty");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : oneline) {
        if (v < 1 || v > n) throw std::invalid_argument("not a permutation of its window");
        if (seen[static_cast<std::size_t>(v)]++) throw std::invalid_argument("repeated value");
    }
    for (int i = 1; i <= n; ++i)
        if (oneline[static_cast<std::size_t>(oneline[static_cast<std::size_t>(i - 1)] - 1)] != i)
            throw std::invalid_argument("not an involution at " + std::to_string(i));
    return Involution(oneline);
}

int Involution::operator()(int i) const {
    if (i < 1) throw std::out_of_range("positions are 1-based");
    if (i <= window()) return map_[static_cast<std::size_t>(i - 1)];
    return i;
}

Involution Involution::extended(int w) const {
    std::vector<int> m = map_;
    while (static_cast<int>(m.size()) < w) m.push_back(static_cast<int>(m.size()) + 1);
    return Involution(std::move(m));
}

Involution Involution::normalized() const {
    std::vector<int> m = map_;
    while (m.size() > 1 && m.back() == static_cast<int>(m.size())) m.pop_back();
    return Involution(std::move(m));
}

bool Involution::is_ascent(int u) const { return (*this)(u) < (*this)(u + 1); }

Involution Involution::apply_letter(int u) const {
    auto r = try_apply_letter(u);
    if (!r) throw DescentError(0, u);
    return *r;
}

std::optional<Involution> Involution::try_apply_letter(int u) const {
    if (!is_ascent(u)) return std::nullopt;
    Involution z = extended(std::max(window(), u + 1));
    std::vector<int> m = z.map_;
    std::swap(m[static_cast<std::size_t>(u - 1)], m[static_cast<std::size_t>(u)]);
    for (int& v : m) {
        if (v == u) v = u + 1;
        else if (v == u + 1) v = u;
    }
    if (m == z.map_) {  // s_u z s_u = z: multiply instead
        std::swap(m[static_cast<std::size_t>(u - 1)], m[static_cast<std::size_t>(u)]);
    }
    return Involution(std::move(m));
}

bool Involution::operator==(const Involution& o) const {
    return normalized().map_ == o.normalized().map_;
}

bool Involution::operator<(const Involution& o) const {
    return normalized().map_ < o.normalized().map_;
}

std::string Involution::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(map_[i]);
    }
    return out;
}

Involution parse_involution(const std::string& s) {
    return Involution::from_oneline(parse_word(s));
}

Involution word_to_involution_o(const Word& w) {
    Involution z = Involution::identity();
    for (std::size_t k = 0; k < w.size(); ++k) {
        auto next = z.try_apply_letter(w[k]);
        if (!next) throw DescentError(static_cast<int>(k) + 1, w[k]);
        z = std::move(*next);
    }
    return z;
}

bool is_involution_word(const Word& w) {
    Involution z = Involution::identity();
    for (Letter u : w) {
        auto next = z.try_apply_letter(u);
        if (!next) return false;
        z = std::move(*next);
    }
    return true;
}

namespace {

const std::vector<Word>& o_words_rec(const Involution& z,
                                     std::map<std::vector<int>, std::vector<Word>>& memo) {
    const Involution nz = z.normalized();
    auto it = memo.find(nz.one_line());
    if (it != memo.end()) return it->second;
    std::vector<Word> out;
    if (nz.window() == 1) {
        out.push_back(Word{});
    } else {
        const int n = nz.window();
        for (int u = 1; u < n; ++u) {
            if (nz(u) <= nz(u + 1)) continue;
            Involution y = [&] {
                if (nz(u) == u + 1 && nz(u + 1) == u) {
                    // z transposes u, u+1: the predecessor drops the transposition.
                    std::vector<int> m = nz.one_line();
                    std::swap(m[static_cast<std::size_t>(u - 1)], m[static_cast<std::size_t>(u)]);
                    return Involution::from_oneline(m);
                }
                std::vector<int> m = nz.one_line();
                std::swap(m[static_cast<std::size_t>(u - 1)], m[static_cast<std::size_t>(u)]);
                for (int& v : m) {
                    if (v == u) v = u + 1;
                    else if (v == u + 1) v = u;
                }
                return Involution::from_oneline(m);
            }();
            for (const Word& w : o_words_rec(y, memo)) {
                Word v = w;
                v.push_back(u);
                out.push_back(std::move(v));
            }
        }
        std::sort(out.begin(), out.end());
    }
    return memo.emplace(nz.one_line(), std::move(out)).first->second;
}

}  // namespace

std::vector<Word> enumerate_words_o(const Involution& z) {
    std::map<std::vector<int>, std::vector<Word>> memo;
    return o_words_rec(z, memo);
}

std::vector<Factorization> enumerate_factorizations_o(const Involution& z, int m) {
    std::vector<Factorization> out;
    for (const Word& w : enumerate_words_o(z)) {
        std::vector<Factorization> cuts = increasing_cuts(w, m);
        out.insert(out.end(), cuts.begin(), cuts.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Involution> all_involutions(int window) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    std::vector<Involution> out;
    std::vector<int> map(static_cast<std::size_t>(window), 0);
    auto rec = [&](auto&& self) -> void {
        int a = 0;
        for (int i = 1; i <= window; ++i)
            if (map[static_cast<std::size_t>(i - 1)] == 0) { a = i; break; }
        if (a == 0) {
            out.push_back(Involution::from_oneline(map).normalized());
            return;
        }
        map[static_cast<std::size_t>(a - 1)] = a;  // fixed point
        self(self);
        map[static_cast<std::size_t>(a - 1)] = 0;
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
