#pragma once

#include "mfc/complex.hpp"
#include "mfc/series.hpp"
#include "mfc/tensor.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mfc {

/// cp: loops on DJ_K over CP^infinity; spheres: loops on DJ_K(S) over spheres S^{m_i+1}.
enum class Target { Cp, Spheres };
const char* target_name(Target t);  // "cp" / "spheres"

struct PresentationGenerator {
    enum class Kind { Coordinate, Higher, Free };
    std::string name;
    int degree = 0;
    Kind kind = Kind::Free;
    int vertex = 0;                 // Coordinate: b_vertex
    Simplex sigma;                  // Higher: u_sigma
    std::vector<int> multidegree;   // occurrences of each vertex, length n (empty for Free)
};

/// Graded associative algebra given by generators and homogeneous relations
/// with integer coefficients.
struct Presentation {
    Target target = Target::Cp;
    Convention convention = Convention::ExteriorOnOdd;
    int vertex_count = 0;
    std::vector<int> dims;  // sphere case only
    std::vector<PresentationGenerator> generators;
    std::vector<Tensor> relations;

    std::vector<int> degrees() const;
    std::string letter_name(Letter l) const { return generators.at(l).name; }
    std::string str(const Tensor& t) const;
    /// Letter of b_i (1-based vertex).
    Letter coordinate(int vertex) const;
    /// Letter of u_sigma for a missing face with at least three vertices.
    std::optional<Letter> higher_letter(const Simplex& sigma) const;
    int degree_of(const Tensor& t) const;
};

/// A presentation on arbitrary letters; `names` may be empty (x1, x2, ...).
Presentation make_presentation(const std::vector<int>& degrees, const std::vector<Tensor>& relations,
                               std::vector<std::string> names = {});

/// Requires an MF-complex or a full simplex (which has no missing faces and gives an exterior algebra).
Presentation build_cp_presentation(const SimplicialComplex& k);
Presentation build_sphere_presentation(const SimplicialComplex& k, const std::vector<int>& dims, Convention convention);

/// Degree of u_sigma: 2|sigma| - 2 (cp) or sum_{i in sigma}(m_i + 1) - 2 (spheres).
int higher_degree(const Simplex& sigma, Target target, const std::vector<int>& dims);

/// Image of the higher product for sigma: u_sigma, or the graded commutator [b_i, b_j]
/// when sigma has two vertices.
Tensor higher_element(const Presentation& p, const Simplex& sigma);
/// [[x, b_{j_1}], ..., b_{j_l}] with graded commutators; `x_degree` is |x|.
Tensor iterated_bracket(const Presentation& p, const Tensor& x, int x_degree, const std::vector<int>& js);

struct BracketGenerator {
    enum class Flavor { Multiset, StrictSubset };
    MissingFace sigma;
    std::vector<int> js;
    int degree = 0;
    Flavor flavor = Flavor::StrictSubset;
    bool operator==(const BracketGenerator&) const = default;
};

/// For each missing face sigma and each increasing subset of J_sigma (including the
/// empty one): degree 2|sigma| - 2 + l. Throws PreconditionError on 2-vertex missing faces.
std::vector<BracketGenerator> enumerate_R_tilde(const SimplicialComplex& k);
/// For each sigma and each multiset j_1 <= ... <= j_l over [n]: degree N_sigma + sum m_j,
/// kept when at most max_degree. Same precondition.
std::vector<BracketGenerator> enumerate_R(const SimplicialComplex& k, const std::vector<int>& dims, int max_degree);

/// {generators:[{name,degree,label}], relations:[[[coeff,[names...]],...],...]}
nlohmann::ordered_json presentation_to_json(const Presentation& p);

}  // namespace mfc
