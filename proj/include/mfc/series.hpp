#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace mfc {

/// Integer power series c_0 + c_1 t + ... + c_D t^D. Binary operations on
/// series with different cutoffs truncate to the smaller one. Arithmetic is
/// overflow-checked (std::overflow_error).
class TruncatedSeries {
public:
    explicit TruncatedSeries(int cutoff = 0);
    TruncatedSeries(int cutoff, std::vector<std::int64_t> coefficients);
    TruncatedSeries(int cutoff, std::initializer_list<std::int64_t> coefficients);

    static TruncatedSeries one(int cutoff);
    static TruncatedSeries monomial(int degree, std::int64_t coefficient, int cutoff);

    int cutoff() const noexcept { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of t^d; 0 for d outside [0, cutoff].
    std::int64_t operator[](int d) const { return d >= 0 && d <= cutoff() ? c_[d] : 0; }
    void set(int d, std::int64_t v);
    void add_to(int d, std::int64_t v);
    const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }

    TruncatedSeries truncated(int cutoff) const;
    bool is_zero() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    /// Coefficientwise equality up to the smaller cutoff.
    bool agrees_with(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    std::string str() const;  // "1 + 4t + 6t^2"

private:
    std::vector<std::int64_t> c_;
};

/// Cauchy product truncated at the smaller cutoff.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// 1/(1-g); g must have zero constant term.
TruncatedSeries geometric_series(const TruncatedSeries& g);
/// 1/a for a with constant term 1.
TruncatedSeries series_inverse(const TruncatedSeries& a);

/// Multiset of generator degrees.
class DegreeList {
public:
    DegreeList() = default;
    /// Entries are (degree, multiplicity); both must be positive.
    DegreeList(std::initializer_list<std::pair<int, int>> entries);
    static DegreeList from_degrees(const std::vector<int>& degrees);

    void add(int degree, int multiplicity = 1);
    const std::vector<std::pair<int, int>>& entries() const noexcept { return entries_; }

private:
    std::vector<std::pair<int, int>> entries_;  // sorted by degree, merged
};

/// How odd-degree abelian generators behave: `ExteriorOnOdd` forces b^2 = 0 for
/// odd b; `PolynomialAll` treats every generator as polynomial.
enum class Convention { ExteriorOnOdd, PolynomialAll };

const char* convention_name(Convention c);
Convention parse_convention(const std::string& name);  // PreconditionError on unknown names

/// Hilbert series of the free graded-commutative algebra on `gens` under `convention`.
TruncatedSeries free_gc_series(const DegreeList& gens, Convention convention, int cutoff);

/// The unique g with total = abelian_part * 1/(1-g). Throws FactorizationError at
/// the first degree where g would be negative. Both inputs need constant term 1.
TruncatedSeries kernel_generator_series(const TruncatedSeries& total, const TruncatedSeries& abelian_part);

}  // namespace mfc
