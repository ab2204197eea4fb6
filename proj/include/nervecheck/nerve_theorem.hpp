#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nervecheck/cover.hpp"
#include "nervecheck/double_complex.hpp"

namespace nervecheck {

/// One failed instance of the goodness hypothesis: the intersection over
/// sigma has nonvanishing reduced homology in the listed degree.
struct HypothesisViolation {
    std::vector<std::string> sigma;
    int degree = 0;
    HomologyGroup group;
};

/// Outcome of the level-k hypothesis check: every nonempty intersection
/// U_sigma with dim sigma <= k must satisfy H~_j(U_sigma) = 0 for
/// j <= k - dim sigma.
struct HypothesisReport {
    int k = 0;
    bool passed = false;
    std::vector<HypothesisViolation> violations;
};

HypothesisReport check_hypotheses(const Cover& cover, int k);

/// Degree-m comparison map from the E^1 bottom row to the nerve chains:
/// rows are the m-simplices of the nerve, columns the pairs (sigma,
/// component of U_sigma), and each column has a single 1 in the row of its
/// sigma.  Under the level-k hypotheses it is an isomorphism for m <= k.
IntMatrix g_map(const Cover& cover, int m);

/// The single chain-map square g_{m-1} d^1_m = d^N_m g_m.
bool g_square_commutes(const IntMatrix& g_prev, const IntMatrix& e1_d,
                       const IntMatrix& nerve_d, const IntMatrix& g_cur);

/// Verifies the chain-map identity in every degree 1..m_max.
bool check_g_chain_map(const Cover& cover, int m_max);

enum class Conclusion2 { vacuous, confirmed, violated };

struct GMapCheck {
    int m = 0;
    int rows = 0;
    int cols = 0;
    int rank = 0;   // rational rank
    bool iso = false;  // square with all invariant factors 1
};

/// Mechanics of the comparison argument, recorded degree by degree: the
/// homology of the E^1 bottom row (that is, the E^2 bottom row), the g maps,
/// and the three derived facts the argument needs.
struct ProofTrace {
    std::vector<HomologyGroup> e2_bottom;  // degrees 0..k+1
    std::vector<GMapCheck> g_maps;         // degrees 0..k+1
    bool chain_map_ok = false;
    bool e2_matches_nerve = false;   // degrees <= k
    /// Necessary conditions for the surjection E^2_{k+1,0} ->> H_{k+1}(N):
    /// the source has at least the rational rank and at least the minimal
    /// generator count of the target.
    bool surjection_rank_ok = false;
};

struct TheoremReport {
    int k = 0;
    HypothesisReport hypothesis;
    std::vector<HomologyGroup> h_base;   // degrees 0..k+1
    std::vector<HomologyGroup> h_nerve;  // degrees 0..k+1
    std::vector<bool> conclusion1;       // degrees 0..k: groups isomorphic
    Conclusion2 conclusion2 = Conclusion2::vacuous;
    std::optional<ProofTrace> trace;
};

/// A hypothesis-passed run whose conclusions fail would be a counterexample;
/// the harness aborts loudly rather than reporting it as data.
class TheoremFalsified : public std::runtime_error {
public:
    TheoremFalsified(const std::string& message, TheoremReport rep)
        : std::runtime_error(message), report(std::move(rep))
    {
    }

    TheoremReport report;
};

/// Checks the level-k statement on a cover: hypotheses, the degreewise
/// comparison H_j(X) vs H_j(N) for j <= k, and the degree-(k+1) implication
/// H_{k+1}(N) != 0 => H_{k+1}(X) != 0.  The nerve is truncated at dimension
/// k+2, which leaves all compared degrees intact.  Throws TheoremFalsified
/// when the hypotheses hold but a conclusion fails.
TheoremReport check_theorem(const Cover& cover, int k, bool with_trace = false);

}  // namespace nervecheck
