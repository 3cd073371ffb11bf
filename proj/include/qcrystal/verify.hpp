#pragma once

#include <string>
#include <vector>

#include "qcrystal/crystal.hpp"

namespace qcrystal::verify {

struct Options {
    Variant variant = Variant::sp;
    int window = 6;                    // sweep all z with minimal window <= this
    std::vector<int> ms = {2, 3, 4};   // block counts for factorization-level sweeps
    int max_len = 8;                   // word-length cap for the relation sweeps
    int threads = 0;                   // 0: QCRYSTAL_THREADS env var, else hardware
    bool inject_fault = false;         // corrupt one expected value (self-test mode)
};

struct Section {
    std::string name;
    long checks = 0;
    std::vector<std::string> violations;
};

struct Report {
    std::vector<Section> sections;
    bool passed() const;
    long total_checks() const;
    std::string to_text() const;
};

// Runs the invariant suite for the chosen variant and bounds.
Report run(const Options& opt);

// Individual sweeps (each returns violation messages; *checks accumulates the
// number of individual assertions made).

// Word-level facts: first letters even, equal lengths, relation closures.
std::vector<std::string> check_word_invariants(int window, long* checks);
// forward/reverse identity at word and factorization level.
std::vector<std::string> check_roundtrips(int window, const std::vector<int>& ms, long* checks);
// Equal insertion tableaux across Coxeter-Knuth neighbours.
std::vector<std::string> check_ck_invariance(int window, int max_len, long* checks);
// Single-box exhaustive sweeps of the three-letter relations, matched against
// the frozen case tables.
std::vector<std::string> check_single_box_tables(int max_letter, long* checks);
// gl/q axioms, operator closure, constant insertion tableau per component,
// and unique highest weight per q-component.
std::vector<std::string> check_crystal_axioms(int window, const std::vector<int>& ms, int threads,
                                              long* checks);
// Commutation of the odd operators with the recording-tableau odd operators.
std::vector<std::string> check_recording_transport(int window, const std::vector<int>& ms,
                                                   long* checks);
// Recording tableaux over RF^m(z) with fixed P are exactly the primed
// tableaux of that shape with entries <= m.
std::vector<std::string> check_image_characterization(int window, const std::vector<int>& ms,
                                                      long* checks);
// Orthogonal variant: axioms, constant P per component, injectivity, no
// equal-adjacent words in any equivalence class.
std::vector<std::string> check_orthogonal(int window, const std::vector<int>& ms, int threads,
                                          long* checks);
// Ascent-criterion enumeration agrees with brute-force minimal-length search.
std::vector<std::string> check_bruteforce_agreement_sp(int window, long* checks);
std::vector<std::string> check_bruteforce_agreement_o(int window, long* checks);

int thread_count(int requested);  // resolves 0 against QCRYSTAL_THREADS / hardware

}  // namespace qcrystal::verify
