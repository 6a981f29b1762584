#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace mfc {

/// Vertex sets are bitmasks: bit (i-1) stands for vertex i.
using VertexMask = std::uint64_t;
/// A strictly increasing sequence of 1-based vertices.
using Simplex = std::vector<int>;

inline constexpr int kMaxVertices = 62;

VertexMask to_mask(const Simplex& s);
Simplex to_simplex(VertexMask m);
int cardinality(VertexMask m);
std::string format_simplex(const Simplex& s);  // "(1,2,3)"

/// Finite abstract simplicial complex on [n] containing every singleton.
class SimplicialComplex {
public:
    /// Downward closure of `generators` on [n], with all singletons added.
    /// Throws PreconditionError on out-of-range vertices or n outside 1..kMaxVertices.
    SimplicialComplex(int n, const std::vector<Simplex>& generators);

    int vertex_count() const noexcept { return n_; }
    bool contains(VertexMask face) const { return face == 0 || faces_.count(face) > 0; }
    bool contains(const Simplex& face) const { return contains(to_mask(face)); }

    /// Nonempty faces ordered by (cardinality, lexicographic).
    const std::vector<VertexMask>& faces() const noexcept { return ordered_; }
    /// Faces contained in no larger face, same order.
    std::vector<VertexMask> maximal_faces() const;
    /// Face counts indexed by dimension (entry d counts faces with d+1 vertices).
    std::vector<int> f_vector() const;

    bool operator==(const SimplicialComplex& other) const { return n_ == other.n_ && ordered_ == other.ordered_; }

private:
    int n_;
    std::unordered_set<VertexMask> faces_;
    std::vector<VertexMask> ordered_;
};

/// Minimal non-face with at least two vertices.
struct MissingFace {
    Simplex vertices;
    int dimension() const { return static_cast<int>(vertices.size()) - 1; }
    VertexMask mask() const { return to_mask(vertices); }
    bool operator==(const MissingFace&) const = default;
};

/// Parses the line-oriented complex format (or its JSON equivalent, detected by a leading '{').
SimplicialComplex parse_complex(std::string_view text);
/// Inverse of parse_complex: `vertices:` line followed by one `face:` line per facet.
std::string serialize_complex(const SimplicialComplex& k);

/// Minimal non-faces, sorted by (cardinality, lexicographic).
std::vector<MissingFace> missing_faces(const SimplicialComplex& k);

struct MfVerdict {
    bool is_mf = false;
    std::optional<Simplex> witness;  // a maximal face lying in no missing face
};
/// Every nonempty face is a proper subset of some missing face. A full simplex
/// (no missing faces) is reported as not MF.
MfVerdict is_mf_complex(const SimplicialComplex& k);

/// `ordering` lists the vertices from first (smallest) to last.
bool is_shifted(const SimplicialComplex& k, const std::vector<int>& ordering);

struct ShiftedVerdict {
    bool shifted = false;
    std::optional<std::vector<int>> ordering;
};
/// Exhaustive search over all vertex orderings; requires n <= search_bound.
ShiftedVerdict is_shifted_any(const SimplicialComplex& k, int search_bound = 8);

/// Complex on [n] whose faces are all subsets with at most n-k vertices (1 <= k <= n-1).
SimplicialComplex skeleton_complex(int n, int k);
/// If `k` equals skeleton_complex(n, j) for some j, returns j.
std::optional<int> detect_skeleton(const SimplicialComplex& k);

/// Sorted complement of the missing face in [n].
Simplex j_complement(const MissingFace& sigma, int n);

}  // namespace mfc
