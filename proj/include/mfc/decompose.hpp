#pragma once

#include "mfc/complex.hpp"
#include "mfc/presentation.hpp"
#include "mfc/series.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mfc {

struct WhiteheadLabel {
    enum class Kind { Coordinate, Higher, Iterated };
    Kind kind = Kind::Higher;
    Target target = Target::Cp;
    int vertex = 0;        // Coordinate
    Simplex sigma;         // Higher, Iterated
    std::vector<int> js;   // Iterated: increasing subset of J_sigma (cp) or multiset over [n] (spheres)

    static WhiteheadLabel higher(Target t, Simplex sigma);
    static WhiteheadLabel iterated(Target t, Simplex sigma, std::vector<int> js);
    /// "w~(1,2,3)", "[w~(1,2,3),a~4]" (cp) or "w(1,2,3)", "[[w(1,2,3),a1],a1]" (spheres).
    std::string str() const;
    bool operator==(const WhiteheadLabel&) const = default;
};

enum class Provenance { Enumeration, Series, Porter, James };
const char* provenance_name(Provenance p);

struct SphereSummand {
    int dimension = 0;
    std::optional<WhiteheadLabel> label;  // empty for series-certified or oracle summands
    Provenance provenance = Provenance::Enumeration;
};

struct ConsistencyRow {
    int dimension = 0;
    std::vector<std::pair<std::string, std::int64_t>> counts;  // in route order
    bool agree = true;
};

struct ConsistencyReport {
    int max_dim = 0;
    std::vector<std::string> routes;  // "enumeration", "series", then "porter" / "james" when applicable
    std::vector<ConsistencyRow> rows;
    bool all_agree() const;
};

struct RouteFlag {
    int dimension = 0;
    std::vector<std::pair<std::string, std::int64_t>> routes;
    std::string str() const;  // "FLAG dim 6: enumeration=4 series=4 porter=3"
};

struct WedgeDecomposition {
    Target target = Target::Cp;
    std::vector<int> dims;
    int max_dim = 0;
    bool truncated = false;
    std::vector<SphereSummand> summands;     // sorted by dimension, labeled before unlabeled
    std::vector<WhiteheadLabel> rejected;    // two-vertex candidates that were dependent
    std::vector<RouteFlag> flags;
    ConsistencyReport report;

    std::map<int, std::int64_t> counts() const;
    /// "S^3 ∨ 2S^5 ∨ 2S^6", "pt" when empty, " (truncated)" appended when truncated.
    std::string wedge_string() const;
};

/// Default cutoff for the cp target: two above the largest enumerated summand dimension.
int default_cp_max_dim(const SimplicialComplex& k);

/// Labeled decomposition of Z_K through max_dim (default: default_cp_max_dim).
WedgeDecomposition decompose_cp(const SimplicialComplex& k, std::optional<int> max_dim = std::nullopt,
                                std::int64_t word_budget = 2'000'000);
/// Labeled decomposition of Z_K(S^{m+1}) truncated at max_dim.
WedgeDecomposition decompose_spheres(const SimplicialComplex& k, const std::vector<int>& dims, int max_dim,
                                     Convention convention = Convention::ExteriorOnOdd,
                                     std::int64_t word_budget = 2'000'000);

/// The F^n_k splitting: C(j-1, n-k) copies of the (n-k)-fold suspended smash for every
/// j-subset, j = n-k+1..n. `dims` empty means the cp target. Requires 1 <= k <= n-1.
WedgeDecomposition porter_fnk(int n, int k, const std::vector<int>& dims, int max_dim);

/// Counts for K = boundary of the full simplex on [n] (the only MF-complex with one
/// missing face): #{(d_1..d_n) >= 1 : (n-1) + sum d_i m_i = dim}; cp: one S^{2n-1}.
std::map<int, std::int64_t> james_counts(int n, const std::vector<int>& dims, int max_dim);

ConsistencyReport consistency_report(const SimplicialComplex& k, Target target, const std::vector<int>& dims,
                                     int max_dim, Convention convention = Convention::ExteriorOnOdd);

nlohmann::ordered_json label_to_json(const WhiteheadLabel& l);
nlohmann::ordered_json decomposition_to_json(const SimplicialComplex& k, const WedgeDecomposition& d);
nlohmann::ordered_json report_to_json(const ConsistencyReport& r);

}  // namespace mfc
