#pragma once

#include "mfc/complex.hpp"
#include "mfc/series.hpp"
#include "mfc/tensor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mfc {

/// Sign attached to the bracket [b_J, b_J'] inside a_I = -sum (-1)^s [b_J, b_J'].
/// `Literal` uses s = |b_I| + eps(J,J'); `Corrected` uses s = |b_J| + eps(J,J').
/// Only `Corrected` squares to zero when some z-degree m_i + 1 is odd.
enum class SignRule { Corrected, Literal };

struct ModelGenerator {
    Simplex index_set;
    int degree = 0;
    std::string name() const;  // "b1", "b23", "b{1,10}" (braces once a vertex exceeds 9)
};

/// Free associative dg-algebra on generators b_I. Letter k is generators[k];
/// generators are ordered by (|I|, lex), so the top generator of a product model comes last.
struct DGAModel {
    std::vector<int> dims;  // m_1..m_n
    std::vector<ModelGenerator> generators;
    std::vector<Tensor> differential;  // d(letter)
    bool has_top = false;

    int vertex_count() const { return static_cast<int>(dims.size()); }
    std::vector<int> degrees() const;
    std::string letter_name(Letter l) const { return generators.at(l).name(); }
};

/// |b_I| = sum_{i in I} (m_i + 1) - 1.
int generator_degree(const Simplex& index_set, const std::vector<int>& dims);

/// a_I expanded in the tensor algebra, letters following the (|I|, lex) order of all
/// nonempty subsets of [n]. Requires |I| >= 2.
Tensor a_element(const Simplex& index_set, const std::vector<int>& dims, SignRule rule = SignRule::Corrected);

/// Generators b_I for nonempty proper I; requires n >= 2 and every m_i >= 1.
DGAModel build_fat_wedge_model(const std::vector<int>& dims, SignRule rule = SignRule::Corrected);
/// Fat-wedge model plus b_{(1..n)} with d(b) = a_{(1..n)}.
DGAModel build_product_model(const std::vector<int>& dims, SignRule rule = SignRule::Corrected);

/// Extends d to words as a graded derivation: d(xy) = d(x) y + (-1)^{|x|} x d(y).
Tensor apply_differential(const DGAModel& model, const Tensor& t);

struct DSquaredVerdict {
    bool ok = true;
    std::optional<Word> witness;  // first word w with d(d(w)) != 0
    std::string witness_text;     // "b123 -> 2 b1 b2 b3 - ..."
    long words_checked = 0;
};
/// Verifies d(d(w)) = 0 for every generator of degree <= max_degree; with
/// `exhaustive` also for every word of degree <= max_degree.
DSquaredVerdict check_d_squared(const DGAModel& model, int max_degree, bool exhaustive = false);

struct HomologyReport {
    TruncatedSeries series;             // dim H_d for d <= max_degree - 1
    std::vector<std::int64_t> words;    // word counts for d <= max_degree
    std::vector<std::int64_t> ranks;    // rank of d: degree d -> degree d-1, for d <= max_degree
    int blocks = 0;                     // multidegree blocks processed
};
/// Homology of the model through degree max_degree - 1 by exact integer ranks,
/// block by block over vertex multidegrees. Throws BudgetExceeded if a degree
/// holds more than `word_budget` words.
HomologyReport homology_report(const DGAModel& model, int max_degree, std::int64_t word_budget = 2'000'000);
TruncatedSeries homology_series(const DGAModel& model, int max_degree, std::int64_t word_budget = 2'000'000);

/// N = sum (m_i + 1) - 2.
int bubenik_top_degree(const std::vector<int>& dims);
/// free_gc(b_i of degree m_i) * 1/(1 - g) with g = t^N prod_i 1/(1 - t^{m_i}); requires n >= 3.
TruncatedSeries bubenik_series(const std::vector<int>& dims, Convention convention, int cutoff);

/// Loop-space homology series of S^{m+1}: Q[x_m] for m even, Lambda(x_m) (x) Q[y_{2m}] for m odd.
TruncatedSeries sphere_loop_series(int m, int cutoff);

}  // namespace mfc
