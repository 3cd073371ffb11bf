#include "qcrystal/crystal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qcrystal {

using nlohmann::json;

Weight alpha(int i, int m) {
    Weight v(static_cast<std::size_t>(m), 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    v[static_cast<std::size_t>(i)] = -1;
    return v;
}

Weight weight(const Factorization& f) {
    Weight w;
    w.reserve(static_cast<std::size_t>(f.block_count()));
    for (const Word& b : f.blocks()) w.push_back(static_cast<int>(b.size()));
    return w;
}

std::pair<Word, Word> pairing(const Word& left, const Word& right) {
    std::vector<char> used(left.size(), 0);
    Word unpaired_right;
    for (auto it = right.rbegin(); it != right.rend(); ++it) {
        int best = -1;
        for (std::size_t k = 0; k < left.size(); ++k) {
            if (!used[k] && left[k] > *it && (best < 0 || left[k] < left[static_cast<std::size_t>(best)]))
                best = static_cast<int>(k);
        }
        if (best >= 0) used[static_cast<std::size_t>(best)] = 1;
        else unpaired_right.push_back(*it);
    }
    Word unpaired_left;
    for (std::size_t k = 0; k < left.size(); ++k)
        if (!used[k]) unpaired_left.push_back(left[k]);
    std::sort(unpaired_right.begin(), unpaired_right.end());
    return {unpaired_left, unpaired_right};
}

namespace {

bool contains(const Word& w, Letter x) { return std::find(w.begin(), w.end(), x) != w.end(); }

Word with_letter(const Word& w, Letter x) {
    Word out = w;
    out.insert(std::upper_bound(out.begin(), out.end(), x), x);
    return out;
}

Word without_letter(const Word& w, Letter x) {
    Word out = w;
    out.erase(std::find(out.begin(), out.end(), x));
    return out;
}

Factorization replace_blocks(const Factorization& f, int i, Word a, Word b) {
    std::vector<Word> blocks = f.blocks();
    blocks[static_cast<std::size_t>(i - 1)] = std::move(a);
    blocks[static_cast<std::size_t>(i)] = std::move(b);
    return Factorization(std::move(blocks));
}

}  // namespace

std::optional<Factorization> f_even(const Factorization& f, int i) {
    if (i < 1 || i >= f.block_count()) throw std::invalid_argument("operator index out of range");
    const Word& wi = f.block(i - 1);
    const Word& wj = f.block(i);
    auto [L, R] = pairing(wi, wj);
    if (L.empty()) return std::nullopt;
    const Letter c = L.back();
    int s = 0;
    while (contains(wi, c + s + 1)) ++s;
    return replace_blocks(f, i, without_letter(wi, c), with_letter(wj, c + s));
}

std::optional<Factorization> e_even(const Factorization& f, int i) {
    if (i < 1 || i >= f.block_count()) throw std::invalid_argument("operator index out of range");
    const Word& wi = f.block(i - 1);
    const Word& wj = f.block(i);
    auto [L, R] = pairing(wi, wj);
    if (R.empty()) return std::nullopt;
    const Letter c = R.front();
    int t = 0;
    while (contains(wj, c - t - 1)) ++t;
    return replace_blocks(f, i, with_letter(wi, c - t), without_letter(wj, c));
}

std::optional<Factorization> f_odd(const Factorization& f) {
    if (f.block_count() < 2) return std::nullopt;
    const Word& w1 = f.block(0);
    const Word& w2 = f.block(1);
    if (w1.empty()) return std::nullopt;
    const Letter u1 = w1.front();
    if (!w2.empty() && !(u1 < w2.front())) return std::nullopt;
    if (w1.size() == 1) return replace_blocks(f, 1, Word{}, with_letter(w2, u1));
    const Letter u2 = w1[1];
    if (u2 > u1 + 1) return replace_blocks(f, 1, without_letter(w1, u1), with_letter(w2, u1));
    // u2 == u1 + 1: drop the successor and send the predecessor down
    return replace_blocks(f, 1, without_letter(w1, u1 + 1), with_letter(w2, u1 - 1));
}

std::optional<Factorization> e_odd(const Factorization& f) {
    if (f.block_count() < 2) return std::nullopt;
    const Word& w1 = f.block(0);
    const Word& w2 = f.block(1);
    if (w2.empty()) return std::nullopt;
    const Letter v1 = w2.front();
    if (w1.empty()) return replace_blocks(f, 1, Word{v1}, without_letter(w2, v1));
    const Letter u1 = w1.front();
    if (u1 > v1 + 1) return replace_blocks(f, 1, with_letter(w1, v1), without_letter(w2, v1));
    if (u1 == v1 + 1)
        return replace_blocks(f, 1, with_letter(w1, u1 + 1), without_letter(w2, u1 - 1));
    return std::nullopt;
}

std::optional<Factorization> f_odd_o(const Factorization& f) {
    if (f.block_count() < 2) return std::nullopt;
    const Word& w1 = f.block(0);
    const Word& w2 = f.block(1);
    if (w1.empty()) return std::nullopt;
    const Letter u1 = w1.front();
    if (!w2.empty() && !(u1 < w2.front())) return std::nullopt;
    return replace_blocks(f, 1, without_letter(w1, u1), with_letter(w2, u1));
}

std::optional<Factorization> e_odd_o(const Factorization& f) {
    if (f.block_count() < 2) return std::nullopt;
    const Word& w1 = f.block(0);
    const Word& w2 = f.block(1);
    if (w2.empty()) return std::nullopt;
    const Letter v1 = w2.front();
    if (!w1.empty() && !(v1 < w1.front())) return std::nullopt;
    return replace_blocks(f, 1, with_letter(w1, v1), without_letter(w2, v1));
}

std::optional<PrimedTableau> f_odd_pt(const PrimedTableau& q) {
    if (q.empty() || q.rows()[0].empty()) return std::nullopt;
    const auto& row = q.rows()[0];
    int pos = -1;
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] == PrimedEntry{1, false}) pos = static_cast<int>(j);
    if (pos < 0) return std::nullopt;
    if (pos + 1 < static_cast<int>(row.size()) &&
        row[static_cast<std::size_t>(pos + 1)] == PrimedEntry{2, true})
        return std::nullopt;
    auto rows = q.rows();
    rows[0][static_cast<std::size_t>(pos)] = (pos == 0) ? PrimedEntry{2, false} : PrimedEntry{2, true};
    return PrimedTableau(std::move(rows));
}

std::optional<PrimedTableau> e_odd_pt(const PrimedTableau& q) {
    if (q.empty() || q.rows()[0].empty()) return std::nullopt;
    auto rows = q.rows();
    if (rows[0][0] == PrimedEntry{2, false}) {
        rows[0][0] = PrimedEntry{1, false};
        return PrimedTableau(std::move(rows));
    }
    for (std::size_t j = 1; j < rows[0].size(); ++j) {
        if (rows[0][j] == PrimedEntry{2, true}) {
            rows[0][j] = PrimedEntry{1, false};
            return PrimedTableau(std::move(rows));
        }
    }
    return std::nullopt;
}

// ---- FactorizationCrystal ----

FactorizationCrystal::FactorizationCrystal(const FpfInvolution& z, int m)
    : m_(m), variant_(Variant::sp), verts_(enumerate_factorizations(z, m)) {
    if (m < 1) throw std::invalid_argument("block count must be >= 1");
    build_index();
}

FactorizationCrystal::FactorizationCrystal(const Involution& z, int m)
    : m_(m), variant_(Variant::o), verts_(enumerate_factorizations_o(z, m)) {
    if (m < 1) throw std::invalid_argument("block count must be >= 1");
    build_index();
}

void FactorizationCrystal::build_index() {
    std::sort(verts_.begin(), verts_.end(),
              [](const Factorization& a, const Factorization& b) {
                  return a.to_string() < b.to_string();
              });
    index_.reserve(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i)
        index_.emplace_back(verts_[i].to_string(), static_cast<int>(i));
    std::sort(index_.begin(), index_.end());
}

std::optional<int> FactorizationCrystal::index_of(const Factorization& f) const {
    const std::string key = f.to_string();
    auto it = std::lower_bound(index_.begin(), index_.end(), key,
                               [](const auto& p, const std::string& k) { return p.first < k; });
    if (it == index_.end() || it->first != key) return std::nullopt;
    return it->second;
}

Weight FactorizationCrystal::weight_of(int v) const { return weight(vertex(v)); }

std::optional<int> FactorizationCrystal::apply_f(int v, int i) const {
    auto r = f_even(vertex(v), i);
    if (!r) return std::nullopt;
    auto idx = index_of(*r);
    if (!idx) throw std::logic_error("even operator left the vertex set: " + r->to_string());
    return idx;
}

std::optional<int> FactorizationCrystal::apply_e(int v, int i) const {
    auto r = e_even(vertex(v), i);
    if (!r) return std::nullopt;
    auto idx = index_of(*r);
    if (!idx) throw std::logic_error("even operator left the vertex set: " + r->to_string());
    return idx;
}

std::optional<int> FactorizationCrystal::apply_f_odd(int v) const {
    auto r = variant_ == Variant::sp ? f_odd(vertex(v)) : f_odd_o(vertex(v));
    if (!r) return std::nullopt;
    auto idx = index_of(*r);
    if (!idx) throw std::logic_error("odd operator left the vertex set: " + r->to_string());
    return idx;
}

std::optional<int> FactorizationCrystal::apply_e_odd(int v) const {
    auto r = variant_ == Variant::sp ? e_odd(vertex(v)) : e_odd_o(vertex(v));
    if (!r) return std::nullopt;
    auto idx = index_of(*r);
    if (!idx) throw std::logic_error("odd operator left the vertex set: " + r->to_string());
    return idx;
}

std::string FactorizationCrystal::label(int v) const { return vertex(v).to_string(); }

// ---- StandardCrystal ----

StandardCrystal::StandardCrystal(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("letter crystal needs n >= 2");
}

Weight StandardCrystal::weight_of(int v) const {
    Weight w(static_cast<std::size_t>(n_), 0);
    w[static_cast<std::size_t>(v)] = 1;
    return w;
}

std::optional<int> StandardCrystal::apply_f(int v, int i) const {
    return v + 1 == i ? std::optional<int>(v + 1) : std::nullopt;
}

std::optional<int> StandardCrystal::apply_e(int v, int i) const {
    return v + 1 == i + 1 ? std::optional<int>(v - 1) : std::nullopt;
}

std::optional<int> StandardCrystal::apply_f_odd(int v) const {
    return v == 0 ? std::optional<int>(1) : std::nullopt;
}

std::optional<int> StandardCrystal::apply_e_odd(int v) const {
    return v == 1 ? std::optional<int>(0) : std::nullopt;
}

std::string StandardCrystal::label(int v) const { return std::to_string(v + 1); }

// ---- TensorCrystal ----

TensorCrystal::TensorCrystal(std::shared_ptr<const AbstractCrystal> a,
                             std::shared_ptr<const AbstractCrystal> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_->rank() != b_->rank()) throw std::invalid_argument("tensor factors must share rank");
}

std::pair<int, int> TensorCrystal::split(int v) const { return {v / b_->size(), v % b_->size()}; }

Weight TensorCrystal::weight_of(int v) const {
    auto [x, y] = split(v);
    Weight wa = a_->weight_of(x);
    const Weight wb = b_->weight_of(y);
    for (std::size_t i = 0; i < wa.size(); ++i) wa[i] += wb[i];
    return wa;
}

std::optional<int> TensorCrystal::apply_f(int v, int i) const {
    auto [x, y] = split(v);
    if (phi(*b_, y, i) <= epsilon(*a_, x, i)) {
        auto r = a_->apply_f(x, i);
        if (!r) return std::nullopt;
        return join(*r, y);
    }
    auto r = b_->apply_f(y, i);
    if (!r) return std::nullopt;
    return join(x, *r);
}

std::optional<int> TensorCrystal::apply_e(int v, int i) const {
    auto [x, y] = split(v);
    if (phi(*b_, y, i) < epsilon(*a_, x, i)) {
        auto r = a_->apply_e(x, i);
        if (!r) return std::nullopt;
        return join(*r, y);
    }
    auto r = b_->apply_e(y, i);
    if (!r) return std::nullopt;
    return join(x, *r);
}

std::optional<int> TensorCrystal::apply_f_odd(int v) const {
    auto [x, y] = split(v);
    const Weight wa = a_->weight_of(x);
    if (pair_k(wa, 1) == 0 && pair_k(wa, 2) == 0) {
        auto r = b_->apply_f_odd(y);
        if (!r) return std::nullopt;
        return join(x, *r);
    }
    auto r = a_->apply_f_odd(x);
    if (!r) return std::nullopt;
    return join(*r, y);
}

std::optional<int> TensorCrystal::apply_e_odd(int v) const {
    auto [x, y] = split(v);
    const Weight wa = a_->weight_of(x);
    if (pair_k(wa, 1) == 0 && pair_k(wa, 2) == 0) {
        auto r = b_->apply_e_odd(y);
        if (!r) return std::nullopt;
        return join(x, *r);
    }
    auto r = a_->apply_e_odd(x);
    if (!r) return std::nullopt;
    return join(*r, y);
}

std::string TensorCrystal::label(int v) const {
    auto [x, y] = split(v);
    return a_->label(x) + "(x)" + b_->label(y);
}

// ---- generic operations ----

int epsilon(const AbstractCrystal& c, int v, int i) {
    int k = 0;
    for (auto cur = c.apply_e(v, i); cur; cur = c.apply_e(*cur, i)) ++k;
    return k;
}

int phi(const AbstractCrystal& c, int v, int i) {
    int k = 0;
    for (auto cur = c.apply_f(v, i); cur; cur = c.apply_f(*cur, i)) ++k;
    return k;
}

int s_action(const AbstractCrystal& c, int v, int i) {
    const int k = pair_h(c.weight_of(v), i);
    std::optional<int> cur = v;
    if (k >= 0)
        for (int t = 0; t < k && cur; ++t) cur = c.apply_f(*cur, i);
    else
        for (int t = 0; t < -k && cur; ++t) cur = c.apply_e(*cur, i);
    if (!cur) throw std::logic_error("Weyl action fell off the crystal (non-seminormal data)");
    return *cur;
}

int s_word_action(const AbstractCrystal& c, int v, const std::vector<int>& word) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = s_action(c, v, *it);
    return v;
}

namespace {

// w_i = s_2 ... s_i s_1 ... s_{i-1}, the shortest element carrying alpha_i to alpha_1.
std::vector<int> w_i_word(int i) {
    std::vector<int> w;
    for (int j = 2; j <= i; ++j) w.push_back(j);
    for (int j = 1; j <= i - 1; ++j) w.push_back(j);
    return w;
}

}  // namespace

std::optional<int> derived_f_odd(const AbstractCrystal& c, int v, int i) {
    if (i == 1) return c.apply_f_odd(v);
    const std::vector<int> wi = w_i_word(i);
    const std::vector<int> wi_inv(wi.rbegin(), wi.rend());
    int u = s_word_action(c, v, wi);
    auto r = c.apply_f_odd(u);
    if (!r) return std::nullopt;
    return s_word_action(c, *r, wi_inv);
}

std::optional<int> derived_e_odd(const AbstractCrystal& c, int v, int i) {
    if (i == 1) return c.apply_e_odd(v);
    const std::vector<int> wi = w_i_word(i);
    const std::vector<int> wi_inv(wi.rbegin(), wi.rend());
    int u = s_word_action(c, v, wi);
    auto r = c.apply_e_odd(u);
    if (!r) return std::nullopt;
    return s_word_action(c, *r, wi_inv);
}

bool is_highest_weight(const AbstractCrystal& c, int v) {
    for (int i = 1; i < c.rank(); ++i)
        if (c.apply_e(v, i)) return false;
    for (int i = 1; i < c.rank(); ++i)
        if (derived_e_odd(c, v, i)) return false;
    return true;
}

std::vector<int> highest_weight_vectors(const AbstractCrystal& c) {
    std::vector<int> out;
    for (int v = 0; v < c.size(); ++v)
        if (is_highest_weight(c, v)) out.push_back(v);
    return out;
}

std::vector<int> longest_element_word(int m) {
    std::vector<int> w;
    for (int k = 1; k < m; ++k)
        for (int j = k; j >= 1; --j) w.push_back(j);
    return w;
}

namespace {

std::vector<std::vector<int>> components(const AbstractCrystal& c, bool include_odd) {
    std::vector<int> parent(static_cast<std::size_t>(c.size()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    auto unite = [&](int a, int b) {
        a = find(a); b = find(b);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    };
    for (int v = 0; v < c.size(); ++v) {
        for (int i = 1; i < c.rank(); ++i)
            if (auto w = c.apply_f(v, i)) unite(v, *w);
        if (include_odd)
            if (auto w = c.apply_f_odd(v)) unite(v, *w);
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> where(static_cast<std::size_t>(c.size()), -1);
    for (int v = 0; v < c.size(); ++v) {
        const int r = find(v);
        if (where[static_cast<std::size_t>(r)] < 0) {
            where[static_cast<std::size_t>(r)] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<std::size_t>(where[static_cast<std::size_t>(r)])].push_back(v);
    }
    return comps;
}

}  // namespace

std::vector<std::vector<int>> gl_components(const AbstractCrystal& c) { return components(c, false); }
std::vector<std::vector<int>> q_components(const AbstractCrystal& c) { return components(c, true); }

namespace {

Weight sub(const Weight& a, const Weight& b) {
    Weight out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

}  // namespace

std::vector<std::string> verify_gl_axioms(const AbstractCrystal& c) {
    std::vector<std::string> bad;
    const int m = c.rank();
    for (int v = 0; v < c.size(); ++v) {
        for (int i = 1; i < m; ++i) {
            const int eps = epsilon(c, v, i), ph = phi(c, v, i);
            if (ph != eps + pair_h(c.weight_of(v), i))
                bad.push_back("phi != eps + <wt,h> at " + c.label(v) + " i=" + std::to_string(i));
            if (auto w = c.apply_f(v, i)) {
                if (sub(c.weight_of(v), c.weight_of(*w)) != alpha(i, m))
                    bad.push_back("wt(f b) != wt(b) - alpha at " + c.label(v) + " i=" + std::to_string(i));
                if (c.apply_e(*w, i) != std::optional<int>(v))
                    bad.push_back("e(f b) != b at " + c.label(v) + " i=" + std::to_string(i));
                if (epsilon(c, *w, i) != eps + 1 || phi(c, *w, i) != ph - 1)
                    bad.push_back("eps/phi bookkeeping under f at " + c.label(v) + " i=" + std::to_string(i));
            }
            if (auto w = c.apply_e(v, i)) {
                if (sub(c.weight_of(*w), c.weight_of(v)) != alpha(i, m))
                    bad.push_back("wt(e b) != wt(b) + alpha at " + c.label(v) + " i=" + std::to_string(i));
                if (c.apply_f(*w, i) != std::optional<int>(v))
                    bad.push_back("f(e b) != b at " + c.label(v) + " i=" + std::to_string(i));
                if (epsilon(c, *w, i) != eps - 1 || phi(c, *w, i) != ph + 1)
                    bad.push_back("eps/phi bookkeeping under e at " + c.label(v) + " i=" + std::to_string(i));
            }
        }
    }
    return bad;
}

std::vector<std::string> verify_q_axioms(const AbstractCrystal& c) {
    std::vector<std::string> bad;
    const int m = c.rank();
    for (int v = 0; v < c.size(); ++v) {
        const Weight wt = c.weight_of(v);
        if (std::any_of(wt.begin(), wt.end(), [](int x) { return x < 0; }))
            bad.push_back("negative weight coordinate at " + c.label(v));
        if (auto w = c.apply_f_odd(v)) {
            if (sub(wt, c.weight_of(*w)) != alpha(1, m))
                bad.push_back("wt shift of odd f wrong at " + c.label(v));
            if (c.apply_e_odd(*w) != std::optional<int>(v))
                bad.push_back("odd adjunction e(f b) != b at " + c.label(v));
        }
        if (auto w = c.apply_e_odd(v)) {
            if (sub(c.weight_of(*w), wt) != alpha(1, m))
                bad.push_back("wt shift of odd e wrong at " + c.label(v));
            if (c.apply_f_odd(*w) != std::optional<int>(v))
                bad.push_back("odd adjunction f(e b) != b at " + c.label(v));
        }
        for (int i = 3; i < m; ++i) {
            using Op = std::optional<int>;
            auto compose_odd_even = [&](bool odd_f, bool even_f) {
                Op a = odd_f ? c.apply_f_odd(v) : c.apply_e_odd(v);
                if (a) a = even_f ? c.apply_f(*a, i) : c.apply_e(*a, i);
                Op b = even_f ? c.apply_f(v, i) : c.apply_e(v, i);
                if (b) b = odd_f ? c.apply_f_odd(*b) : c.apply_e_odd(*b);
                return a == b;
            };
            for (bool odd_f : {false, true})
                for (bool even_f : {false, true})
                    if (!compose_odd_even(odd_f, even_f))
                        bad.push_back("odd/even operators fail to commute at " + c.label(v) +
                                      " i=" + std::to_string(i));
            if (auto w = c.apply_e_odd(v)) {
                if (epsilon(c, *w, i) != epsilon(c, v, i) || phi(c, *w, i) != phi(c, v, i))
                    bad.push_back("odd e changes eps/phi at " + c.label(v) + " i=" + std::to_string(i));
            }
        }
    }
    return bad;
}

// ---- graphs ----

CrystalGraph graph_of(const AbstractCrystal& c) {
    CrystalGraph g;
    g.m = c.rank();
    for (int v = 0; v < c.size(); ++v) g.vertices.push_back(c.label(v));
    std::sort(g.vertices.begin(), g.vertices.end());
    for (int v = 0; v < c.size(); ++v) {
        for (int i = 1; i < c.rank(); ++i)
            if (auto w = c.apply_f(v, i))
                g.edges.push_back({c.label(v), std::to_string(i), c.label(*w)});
        if (auto w = c.apply_f_odd(v)) g.edges.push_back({c.label(v), "~1", c.label(*w)});
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

CrystalGraph build_graph(const FpfInvolution& z, int m) {
    return graph_of(FactorizationCrystal(z, m));
}

CrystalGraph build_graph_o(const Involution& z, int m) {
    return graph_of(FactorizationCrystal(z, m));
}

std::string graph_to_dot(const CrystalGraph& g) {
    std::ostringstream out;
    out << "digraph crystal {\n";
    for (const auto& v : g.vertices) out << "  \"" << v << "\";\n";
    for (const auto& e : g.edges)
        out << "  \"" << e.src << "\" -> \"" << e.dst << "\" [label=\"" << e.label << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string graph_to_json(const CrystalGraph& g) {
    json j;
    j["vertices"] = g.vertices;
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"src", e.src}, {"label", e.label}, {"dst", e.dst}});
    j["edges"] = std::move(edges);
    return j.dump(1);
}

CrystalGraph graph_from_json(const std::string& text) {
    json j = json::parse(text);
    CrystalGraph g;
    for (const auto& v : j.at("vertices")) g.vertices.push_back(v.get<std::string>());
    for (const auto& e : j.at("edges"))
        g.edges.push_back({e.at("src").get<std::string>(), e.at("label").get<std::string>(),
                           e.at("dst").get<std::string>()});
    std::sort(g.vertices.begin(), g.vertices.end());
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

}  // namespace qcrystal
