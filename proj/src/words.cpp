#include "qcrystal/words.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace qcrystal {

std::string word_to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_word(const std::string& s) {
    const bool compact = !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c);
    });
    Word w;
    if (compact) {
        for (char c : s) w.push_back(c - '0');
    } else {
        std::string t = s;
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream in(t);
        int x;
        while (in >> x) w.push_back(x);
        if (!in.eof()) throw std::invalid_argument("cannot parse word: " + s);
    }
    for (Letter x : w)
        if (x < 1) throw std::invalid_argument("letters must be positive: " + s);
    return w;
}

std::set<Word> ck_neighbors(const Word& w) {
    std::set<Word> out;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i + 2 < n; ++i) {
        const Letter x = w[i], y = w[i + 1], z = w[i + 2];
        auto emit = [&](Letter a, Letter b, Letter c) {
            Word v = w;
            v[i] = a; v[i + 1] = b; v[i + 2] = c;
            out.insert(std::move(v));
        };
        if (x == z && (y == x + 1 || y + 1 == x)) emit(y, x, y);  // braid
        if (y < x && x < z) emit(x, z, y);                        // bac -> bca
        if (z < x && x < y) emit(x, z, y);                        // bca -> bac
        if (x < z && z < y) emit(y, x, z);                        // acb -> cab
        if (y < z && z < x) emit(y, x, z);                        // cab -> acb
    }
    return out;
}

std::set<Word> sp_neighbors(const Word& w) {
    std::set<Word> out;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(w[i] - w[i + 1]) > 1) {
            Word v = w;
            std::swap(v[i], v[i + 1]);
            out.insert(std::move(v));
        }
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        const Letter x = w[i], y = w[i + 1], z = w[i + 2];
        if (x == z && (y == x + 1 || y + 1 == x)) {
            Word v = w;
            v[i] = y; v[i + 1] = x; v[i + 2] = y;
            out.insert(std::move(v));
        }
    }
    if (n >= 2 && w[0] >= 2) {
        if (w[1] == w[0] - 1) {
            Word v = w;
            v[1] = w[0] + 1;
            out.insert(std::move(v));
        }
        if (w[1] == w[0] + 1) {
            Word v = w;
            v[1] = w[0] - 1;
            out.insert(std::move(v));
        }
    }
    return out;
}

std::set<Word> o_neighbors(const Word& w) {
    std::set<Word> out;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(w[i] - w[i + 1]) > 1) {
            Word v = w;
            std::swap(v[i], v[i + 1]);
            out.insert(std::move(v));
        }
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        const Letter x = w[i], y = w[i + 1], z = w[i + 2];
        if (x == z && (y == x + 1 || y + 1 == x)) {
            Word v = w;
            v[i] = y; v[i + 1] = x; v[i + 2] = y;
            out.insert(std::move(v));
        }
    }
    if (n >= 2 && w[0] != w[1]) {
        Word v = w;
        std::swap(v[0], v[1]);
        out.insert(std::move(v));
    }
    return out;
}

std::set<Word> word_closure(const Word& w, std::set<Word> (*neighbors)(const Word&),
                            std::size_t cap) {
    std::set<Word> seen{w};
    std::deque<Word> todo{w};
    while (!todo.empty()) {
        Word cur = std::move(todo.front());
        todo.pop_front();
        for (const Word& v : neighbors(cur)) {
            if (seen.insert(v).second) {
                if (seen.size() > cap) throw std::runtime_error("equivalence class exceeds cap");
                todo.push_back(v);
            }
        }
    }
    return seen;
}

namespace {

Word canonical_of(const Word& w, std::set<Word> (*nbr)(const Word&),
                  std::unordered_map<Word, Word, WordHash>& cache, std::mutex& mu) {
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
    }
    std::set<Word> cls = word_closure(w, nbr);
    Word canon = *cls.begin();
    {
        std::lock_guard<std::mutex> lock(mu);
        for (const Word& v : cls) cache.emplace(v, canon);
    }
    return canon;
}

}  // namespace

bool ck_equivalent(const Word& a, const Word& b) {
    static std::unordered_map<Word, Word, WordHash> cache;
    static std::mutex mu;
    if (a == b) return true;
    return canonical_of(a, &ck_neighbors, cache, mu) == canonical_of(b, &ck_neighbors, cache, mu);
}

bool sp_equivalent(const Word& a, const Word& b) {
    static std::unordered_map<Word, Word, WordHash> cache;
    static std::mutex mu;
    if (a == b) return true;
    return canonical_of(a, &sp_neighbors, cache, mu) == canonical_of(b, &sp_neighbors, cache, mu);
}

bool o_equivalent(const Word& a, const Word& b) {
    static std::unordered_map<Word, Word, WordHash> cache;
    static std::mutex mu;
    if (a == b) return true;
    return canonical_of(a, &o_neighbors, cache, mu) == canonical_of(b, &o_neighbors, cache, mu);
}

}  // namespace qcrystal
