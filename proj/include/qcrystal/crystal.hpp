#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcrystal/fpf.hpp"
#include "qcrystal/orthogonal.hpp"
#include "qcrystal/tableaux.hpp"

namespace qcrystal {

// Weight vector: coordinate i is the coefficient of epsilon_i.
using Weight = std::vector<int>;

inline int pair_h(const Weight& wt, int i) { return wt[i - 1] - wt[i]; }  // <wt, h_i>
inline int pair_k(const Weight& wt, int i) { return wt[i - 1]; }          // <wt, k_i>
Weight alpha(int i, int m);                                               // e_i - e_{i+1}

Weight weight(const Factorization& f);  // block lengths

// Pairing of two strictly increasing words: each letter of `right`, taken in
// decreasing order, grabs the smallest still-unpaired larger letter of `left`.
// Returns the unpaired letters (L, R), both sorted increasingly.
std::pair<Word, Word> pairing(const Word& left, const Word& right);

// Even operators on factorizations (i = 1..m-1, acting on blocks i, i+1).
std::optional<Factorization> f_even(const Factorization& f, int i);
std::optional<Factorization> e_even(const Factorization& f, int i);

// Odd operators: act on the first two blocks.
std::optional<Factorization> f_odd(const Factorization& f);
std::optional<Factorization> e_odd(const Factorization& f);

// Orthogonal-variant odd operators (minimum-letter transfer).
std::optional<Factorization> f_odd_o(const Factorization& f);
std::optional<Factorization> e_odd_o(const Factorization& f);

// Odd operators on primed tableaux (first-row surgery on 1/2/2').
std::optional<PrimedTableau> f_odd_pt(const PrimedTableau& q);
std::optional<PrimedTableau> e_odd_pt(const PrimedTableau& q);

// A finite seminormal queer crystal presented through its operators; elements
// are indices 0..size()-1.
class AbstractCrystal {
  public:
    virtual ~AbstractCrystal() = default;
    virtual int rank() const = 0;  // m: even labels 1..m-1, plus the odd label
    virtual int size() const = 0;
    virtual Weight weight_of(int v) const = 0;
    virtual std::optional<int> apply_f(int v, int i) const = 0;
    virtual std::optional<int> apply_e(int v, int i) const = 0;
    virtual std::optional<int> apply_f_odd(int v) const = 0;
    virtual std::optional<int> apply_e_odd(int v) const = 0;
    virtual std::string label(int v) const = 0;
};

enum class Variant { sp, o };

// The crystal on all m-block increasing factorizations of the words of z.
class FactorizationCrystal : public AbstractCrystal {
  public:
    FactorizationCrystal(const FpfInvolution& z, int m);  // symplectic variant
    FactorizationCrystal(const Involution& z, int m);     // orthogonal variant

    int rank() const override { return m_; }
    int size() const override { return static_cast<int>(verts_.size()); }
    Weight weight_of(int v) const override;
    std::optional<int> apply_f(int v, int i) const override;
    std::optional<int> apply_e(int v, int i) const override;
    std::optional<int> apply_f_odd(int v) const override;
    std::optional<int> apply_e_odd(int v) const override;
    std::string label(int v) const override;

    Variant variant() const { return variant_; }
    const std::vector<Factorization>& vertices() const { return verts_; }
    const Factorization& vertex(int v) const { return verts_[static_cast<std::size_t>(v)]; }
    std::optional<int> index_of(const Factorization& f) const;

  private:
    void build_index();
    int m_;
    Variant variant_;
    std::vector<Factorization> verts_;
    std::vector<std::pair<std::string, int>> index_;  // sorted label -> vertex
};

// The letter crystal on 1..n: a path of even edges plus one odd edge 1 -> 2.
class StandardCrystal : public AbstractCrystal {
  public:
    explicit StandardCrystal(int n);
    int rank() const override { return n_; }
    int size() const override { return n_; }
    Weight weight_of(int v) const override;
    std::optional<int> apply_f(int v, int i) const override;
    std::optional<int> apply_e(int v, int i) const override;
    std::optional<int> apply_f_odd(int v) const override;
    std::optional<int> apply_e_odd(int v) const override;
    std::string label(int v) const override;

  private:
    int n_;
};

// Tensor product of two crystals of equal rank. Even operators use the
// anti-Kashiwara convention; odd operators act on the right factor exactly
// when the left factor's weight has zero first and second coordinates.
class TensorCrystal : public AbstractCrystal {
  public:
    TensorCrystal(std::shared_ptr<const AbstractCrystal> a,
                  std::shared_ptr<const AbstractCrystal> b);
    int rank() const override { return a_->rank(); }
    int size() const override { return a_->size() * b_->size(); }
    Weight weight_of(int v) const override;
    std::optional<int> apply_f(int v, int i) const override;
    std::optional<int> apply_e(int v, int i) const override;
    std::optional<int> apply_f_odd(int v) const override;
    std::optional<int> apply_e_odd(int v) const override;
    std::string label(int v) const override;

  private:
    std::pair<int, int> split(int v) const;
    int join(int a, int b) const { return a * b_->size() + b; }
    std::shared_ptr<const AbstractCrystal> a_, b_;
};

// Seminormal string lengths by repeated application.
int epsilon(const AbstractCrystal& c, int v, int i);
int phi(const AbstractCrystal& c, int v, int i);

// Weyl action S_i = f_i^{<wt,h_i>} or e_i^{-<wt,h_i>}. Throws on non-seminormal data.
int s_action(const AbstractCrystal& c, int v, int i);
// S_w for w given as a word in the s_i, rightmost letter applied first.
int s_word_action(const AbstractCrystal& c, int v, const std::vector<int>& word);

// Derived odd operators for i in 2..m-1 (i = 1 falls back to the plain ones).
std::optional<int> derived_f_odd(const AbstractCrystal& c, int v, int i);
std::optional<int> derived_e_odd(const AbstractCrystal& c, int v, int i);

// Killed by every even raising operator and every (derived) odd raising operator.
bool is_highest_weight(const AbstractCrystal& c, int v);
std::vector<int> highest_weight_vectors(const AbstractCrystal& c);

// Staircase reduced word of the longest Weyl element of rank m.
std::vector<int> longest_element_word(int m);

// Connected components as sorted vertex lists: gl uses even edges only,
// q uses all edges including the odd ones.
std::vector<std::vector<int>> gl_components(const AbstractCrystal& c);
std::vector<std::vector<int>> q_components(const AbstractCrystal& c);

// Axiom checks; returned strings describe violations (empty = pass).
std::vector<std::string> verify_gl_axioms(const AbstractCrystal& c);
std::vector<std::string> verify_q_axioms(const AbstractCrystal& c);

// An explicit labelled graph: vertices sorted by serialized form; edge labels
// are 1..m-1 for the even operators and "~1" for the odd one.
struct CrystalEdge {
    std::string src;
    std::string label;
    std::string dst;
    bool operator==(const CrystalEdge& o) const = default;
    bool operator<(const CrystalEdge& o) const {
        return std::tie(src, label, dst) < std::tie(o.src, o.label, o.dst);
    }
};

struct CrystalGraph {
    int m = 0;
    std::vector<std::string> vertices;  // sorted
    std::vector<CrystalEdge> edges;     // sorted
    bool operator==(const CrystalGraph& o) const {
        return vertices == o.vertices && edges == o.edges;
    }
};

CrystalGraph build_graph(const FpfInvolution& z, int m);
CrystalGraph build_graph_o(const Involution& z, int m);
CrystalGraph graph_of(const AbstractCrystal& c);

std::string graph_to_dot(const CrystalGraph& g);
std::string graph_to_json(const CrystalGraph& g);
CrystalGraph graph_from_json(const std::string& json);

}  // namespace qcrystal
