#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qcrystal/crystal.hpp"
#include "qcrystal/insertion.hpp"
#include "qcrystal/verify.hpp"

using namespace qcrystal;

namespace {

Factorization F(const std::string& s) { return parse_factorization(s); }
PrimedEntry up(int v) { return PrimedEntry{v, false}; }
PrimedEntry pr(int v) { return PrimedEntry{v, true}; }

const FpfInvolution& z546213() {
    static const FpfInvolution z = FpfInvolution::from_oneline({5, 4, 6, 2, 1, 3});
    return z;
}

std::string fixture_path(const std::string& name) {
    return std::string(QCRYSTAL_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("weights") {
    CHECK(weight(F("(24)(34)()")) == Weight{2, 2, 0});
    CHECK(weight(F("()()()")) == Weight{0, 0, 0});
    CHECK(weight(F("(2)(14)(3)")) == Weight{1, 2, 1});
}

TEST_CASE("pairing") {
    CHECK(pairing({2, 3, 4}, {3}) == std::make_pair(Word{2, 3}, Word{}));
    CHECK(pairing({2, 4}, {3, 4}) == std::make_pair(Word{2}, Word{4}));
    CHECK(pairing({}, {1, 5}) == std::make_pair(Word{}, Word{1, 5}));
}

TEST_CASE("even operators") {
    CHECK(f_even(F("(234)(3)()"), 1) == F("(24)(34)()"));
    CHECK(f_even(F("(4)(234)()"), 2) == F("(4)(23)(4)"));
    CHECK(f_even(F("(4)(2)(34)"), 2) == F("(4)()(234)"));
    CHECK_FALSE(f_even(F("(4)(23)(4)"), 1).has_value());

    CHECK(e_even(F("(24)(34)()"), 1) == F("(234)(3)()"));
    CHECK_FALSE(e_even(F("(234)(3)()"), 1).has_value());
    CHECK_FALSE(e_even(F("()()()"), 1).has_value());
    CHECK_FALSE(e_even(F("()()()"), 2).has_value());
}

TEST_CASE("odd operators") {
    CHECK(f_odd(F("(234)(3)()")) == F("(24)(13)()"));
    CHECK(f_odd(F("(2)(4)(34)")) == F("()(24)(34)"));
    CHECK_FALSE(f_odd(F("(4)(23)(4)")).has_value());

    CHECK(e_odd(F("(24)(13)()")) == F("(234)(3)()"));
    CHECK(e_odd(F("()(4)(234)")) == F("(4)()(234)"));
    CHECK_FALSE(e_odd(F("(234)(3)()")).has_value());

    // images start with an even letter
    const auto img = f_odd(F("(234)(3)()"));
    REQUIRE(img.has_value());
    CHECK(img->word().front() % 2 == 0);
}

TEST_CASE("string lengths by repeated application") {
    FactorizationCrystal empty(FpfInvolution::theta(2), 3);
    for (int i = 1; i < 3; ++i) CHECK(epsilon(empty, 0, i) == 0);

    FactorizationCrystal c(z546213(), 3);
    const int v = *c.index_of(F("(24)(34)()"));
    CHECK(epsilon(c, v, 1) == 1);
    const int w = *c.index_of(F("(234)(3)()"));
    CHECK(phi(c, w, 1) == 2);
    CHECK(epsilon(c, w, 1) == 0);
    // phi = eps + <wt, h_i> everywhere
    for (int x = 0; x < c.size(); ++x)
        for (int i = 1; i < c.rank(); ++i)
            CHECK(phi(c, x, i) == epsilon(c, x, i) + pair_h(c.weight_of(x), i));
}

TEST_CASE("odd operators on recording tableaux") {
    const PrimedTableau t11({{up(1), up(1)}});
    const auto f1 = f_odd_pt(t11);
    REQUIRE(f1.has_value());
    CHECK(*f1 == PrimedTableau({{up(1), pr(2)}}));
    CHECK_FALSE(f_odd_pt(PrimedTableau({{up(1), pr(2)}})).has_value());
    const auto e1 = e_odd_pt(PrimedTableau({{up(2)}}));
    REQUIRE(e1.has_value());
    CHECK(*e1 == PrimedTableau({{up(1)}}));
    CHECK_FALSE(e_odd_pt(PrimedTableau({{up(1)}})).has_value());
}

TEST_CASE("odd operators transport through the insertion") {
    long n = 0;
    CHECK(verify::check_recording_transport(4, {2, 3}, &n).empty());
    // spot check on the larger graph
    FactorizationCrystal c(z546213(), 3);
    for (int v = 0; v < c.size(); ++v) {
        const Factorization& f = c.vertex(v);
        const PrimedTableau q = insert_factorization_sp(f).recording;
        const auto ff = f_odd(f);
        const auto qf = f_odd_pt(q);
        CHECK(ff.has_value() == qf.has_value());
        if (ff) CHECK(insert_factorization_sp(*ff).recording == *qf);
    }
}

TEST_CASE("weyl action") {
    FactorizationCrystal c(z546213(), 3);
    const int v = *c.index_of(F("(234)(3)()"));
    CHECK(c.label(s_action(c, v, 1)) == "(4)(234)()");
    for (int x = 0; x < c.size(); ++x) {
        for (int i = 1; i < 3; ++i) {
            if (pair_h(c.weight_of(x), i) == 0) CHECK(s_action(c, x, i) == x);
            CHECK(s_action(c, s_action(c, x, i), i) == x);
        }
        CHECK(s_word_action(c, x, {1, 2, 1}) == s_word_action(c, x, {2, 1, 2}));
    }
}

TEST_CASE("derived odd operators") {
    FactorizationCrystal c(z546213(), 3);
    for (int v = 0; v < c.size(); ++v) {
        for (int i = 1; i < 3; ++i) {
            if (auto w = derived_f_odd(c, v, i)) {
                Weight d = c.weight_of(v);
                const Weight dw = c.weight_of(*w);
                for (std::size_t k = 0; k < d.size(); ++k) d[k] -= dw[k];
                CHECK(d == alpha(i, 3));
                CHECK(derived_e_odd(c, *w, i) == std::optional<int>(v));
            }
        }
    }
    // the single-vertex crystal of theta has no derived images
    FactorizationCrystal t(FpfInvolution::theta(2), 3);
    REQUIRE(t.size() == 1);
    CHECK_FALSE(derived_f_odd(t, 0, 2).has_value());
    CHECK_FALSE(derived_e_odd(t, 0, 2).has_value());
}

TEST_CASE("graph construction") {
    const CrystalGraph g = build_graph(z546213(), 3);
    CHECK(g.vertices.size() == 24);
    CHECK(g.edges.size() == 38);

    std::ifstream in(fixture_path("crystal_546213_m3.json"));
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    const CrystalGraph expected = graph_from_json(ss.str());
    CHECK(g == expected);

    // named edges
    CHECK(std::count(g.edges.begin(), g.edges.end(),
                     CrystalEdge{"(234)(3)()", "1", "(24)(34)()"}) == 1);
    CHECK(std::count(g.edges.begin(), g.edges.end(),
                     CrystalEdge{"(234)(3)()", "~1", "(24)(13)()"}) == 1);
    CHECK(std::count(g.edges.begin(), g.edges.end(),
                     CrystalEdge{"(234)(3)()", "2", "(234)()(3)"}) == 1);
    // double even/odd edges
    CHECK(std::count(g.edges.begin(), g.edges.end(),
                     CrystalEdge{"(4)()(234)", "1", "()(4)(234)"}) == 1);
    CHECK(std::count(g.edges.begin(), g.edges.end(),
                     CrystalEdge{"(4)()(234)", "~1", "()(4)(234)"}) == 1);

    const CrystalGraph single = build_graph(FpfInvolution::theta(2), 3);
    CHECK(single.vertices == std::vector<std::string>{"()()()"});
    CHECK(single.edges.empty());

    // two-block vertex counts across the window-6 involutions
    CHECK(build_graph(FpfInvolution::from_oneline({6, 3, 2, 5, 4, 1}), 2).vertices.size() == 8);
    CHECK(build_graph(FpfInvolution::from_oneline({6, 5, 4, 3, 2, 1}), 2).vertices.size() == 4);
    CHECK(build_graph(FpfInvolution::from_oneline({4, 3, 2, 1}), 2).vertices.size() == 4);
}

TEST_CASE("graph serialization") {
    const CrystalGraph g = build_graph(z546213(), 3);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    const std::string dot = graph_to_dot(g);
    CHECK(dot.find("\"(234)(3)()\" -> \"(24)(34)()\" [label=\"1\"];") != std::string::npos);
    CHECK(dot.find("[label=\"~1\"]") != std::string::npos);
}

TEST_CASE("axiom checks pass on the factorization crystals") {
    FactorizationCrystal c(z546213(), 3);
    CHECK(verify_gl_axioms(c).empty());
    CHECK(verify_q_axioms(c).empty());
}

namespace {

// Decorator that hides one specific f-edge; used to show the detector works.
class EdgeDropped : public AbstractCrystal {
  public:
    EdgeDropped(const AbstractCrystal& base, int src, int i) : base_(base), src_(src), i_(i) {}
    int rank() const override { return base_.rank(); }
    int size() const override { return base_.size(); }
    Weight weight_of(int v) const override { return base_.weight_of(v); }
    std::optional<int> apply_f(int v, int i) const override {
        if (v == src_ && i == i_) return std::nullopt;
        return base_.apply_f(v, i);
    }
    std::optional<int> apply_e(int v, int i) const override { return base_.apply_e(v, i); }
    std::optional<int> apply_f_odd(int v) const override { return base_.apply_f_odd(v); }
    std::optional<int> apply_e_odd(int v) const override { return base_.apply_e_odd(v); }
    std::string label(int v) const override { return base_.label(v); }

  private:
    const AbstractCrystal& base_;
    int src_, i_;
};

}  // namespace

TEST_CASE("a deleted edge is reported as an adjunction violation") {
    FactorizationCrystal c(z546213(), 3);
    int src = -1;
    for (int v = 0; v < c.size() && src < 0; ++v)
        if (c.apply_f(v, 1)) src = v;
    REQUIRE(src >= 0);
    EdgeDropped broken(c, src, 1);
    const auto bad = verify_gl_axioms(broken);
    CHECK_FALSE(bad.empty());
}

TEST_CASE("highest weight vectors") {
    FactorizationCrystal c(z546213(), 3);
    const auto hw = highest_weight_vectors(c);
    REQUIRE(hw.size() == 1);
    CHECK(c.label(hw.front()) == "(234)(3)()");
    CHECK(q_components(c).size() == 1);

    FactorizationCrystal t(FpfInvolution::theta(2), 3);
    CHECK(highest_weight_vectors(t) == std::vector<int>{0});

    // unique vertex sent to a highest-weight vertex by the longest Weyl element
    const std::vector<int> w0 = longest_element_word(3);
    int count = 0;
    for (int v = 0; v < c.size(); ++v)
        if (is_highest_weight(c, s_word_action(c, v, w0))) ++count;
    CHECK(count == 1);
}

TEST_CASE("letter crystal") {
    StandardCrystal b2(2);
    const CrystalGraph g = graph_of(b2);
    CHECK(g.vertices == std::vector<std::string>{"1", "2"});
    CHECK(g.edges == std::vector<CrystalEdge>{{"1", "1", "2"}, {"1", "~1", "2"}});
    for (int k = 0; k < 3; ++k) {
        StandardCrystal b3(3);
        Weight w = b3.weight_of(k);
        CHECK(w[static_cast<std::size_t>(k)] == 1);
    }
    CHECK(verify_q_axioms(b2).empty());
    CHECK(verify_gl_axioms(StandardCrystal(3)).empty());
}

TEST_CASE("tensor powers") {
    auto b2 = std::make_shared<StandardCrystal>(2);
    TensorCrystal t(b2, b2);
    // the lowering operator acts on the right factor here
    const int v = 0;  // 1 (x) 1
    const auto fv = t.apply_f(v, 1);
    REQUIRE(fv.has_value());
    CHECK(t.label(*fv) == "1(x)2");
    // weights add
    const Weight w = t.weight_of(*fv);
    CHECK(w == Weight{1, 1});

    for (int n = 2; n <= 3; ++n) {
        std::shared_ptr<const AbstractCrystal> c = std::make_shared<StandardCrystal>(n);
        for (int k = 2; k <= 3; ++k) {
            c = std::make_shared<TensorCrystal>(c, std::make_shared<StandardCrystal>(n));
            CHECK(verify_gl_axioms(*c).empty());
            CHECK(verify_q_axioms(*c).empty());
        }
    }
}

TEST_CASE("component structure") {
    FactorizationCrystal c(z546213(), 3);
    // even components share the insertion tableau; odd edges do too
    for (const auto& comp : gl_components(c)) {
        const auto p0 = insert_word_sp(c.vertex(comp.front()).word()).insertion;
        for (int v : comp) CHECK(insert_word_sp(c.vertex(v).word()).insertion == p0);
    }
    for (int v = 0; v < c.size(); ++v)
        if (auto w = c.apply_f_odd(v))
            CHECK(insert_word_sp(c.vertex(v).word()).insertion ==
                  insert_word_sp(c.vertex(*w).word()).insertion);
}
