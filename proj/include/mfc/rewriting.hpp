#pragma once

#include "mfc/presentation.hpp"
#include "mfc/series.hpp"
#include "mfc/tensor.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace mfc {

/// Homogeneous rational polynomial in noncommuting letters. For homogeneous
/// elements the map order (lexicographic on words) coincides with the monomial
/// order (weighted degree, then lexicographic), so the leading word is the last key.
using Polynomial = std::map<Word, mpq_class>;

Polynomial to_polynomial(const Tensor& t);

/// Degree-truncated Groebner basis of a two-sided ideal generated by homogeneous
/// relations, under weighted-degree-lexicographic order with letters ordered by index.
/// Elements are added degree by degree; only overlap ambiguities arise because
/// every new element is fully reduced against the earlier ones.
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<int> degrees, const std::vector<Tensor>& relations, int max_degree,
                  std::int64_t element_budget = 2'000'000);
    ~GroebnerBasis();
    GroebnerBasis(GroebnerBasis&&) noexcept;
    GroebnerBasis& operator=(GroebnerBasis&&) noexcept;

    int max_degree() const noexcept { return max_degree_; }
    size_t size() const noexcept;
    std::vector<Word> leading_words() const;

    /// Normal form; exact for elements of degree <= max_degree.
    Polynomial normal_form(const Polynomial& p) const;
    Polynomial normal_form(const Tensor& t) const { return normal_form(to_polynomial(t)); }

    /// Number of words of each degree <= max_degree avoiding every leading word.
    /// Throws BudgetExceeded when a degree holds more than `word_budget` normal words.
    TruncatedSeries normal_word_counts(std::int64_t word_budget = 2'000'000) const;
    /// All normal words of a degree, sorted.
    std::vector<Word> normal_words(int degree) const;

private:
    struct Index;
    std::vector<int> degrees_;
    int max_degree_;
    std::vector<Polynomial> elements_;  // monic
    std::unique_ptr<Index> index_;
    void add_element(Polynomial p);
    bool reduce_step(Polynomial& p, Polynomial& out) const;
};

enum class DimensionRoute { Rewriting, LinearAlgebra };

/// Hilbert series of the presented algebra through degree max_degree.
TruncatedSeries graded_dimensions(const Presentation& p, int max_degree,
                                  DimensionRoute route = DimensionRoute::Rewriting,
                                  std::int64_t word_budget = 2'000'000);

/// Multiplies out and normalizes: the zero test used by label checks.
bool is_zero_in(const GroebnerBasis& gb, const Tensor& t);

}  // namespace mfc
