#include "mfc/series.hpp"

#include "mfc/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mfc {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("series coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("series coefficient overflow");
    return r;
}

void check_cutoff(int cutoff)
{
    if (cutoff < 0)
        throw PreconditionError("series cutoff must be nonnegative");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int cutoff)
{
    check_cutoff(cutoff);
    c_.assign(cutoff + 1, 0);
}

TruncatedSeries::TruncatedSeries(int cutoff, std::vector<std::int64_t> coefficients) : TruncatedSeries(cutoff)
{
    for (size_t i = 0; i < coefficients.size() && i < c_.size(); ++i)
        c_[i] = coefficients[i];
}

TruncatedSeries::TruncatedSeries(int cutoff, std::initializer_list<std::int64_t> coefficients)
    : TruncatedSeries(cutoff, std::vector<std::int64_t>(coefficients))
{
}

TruncatedSeries TruncatedSeries::one(int cutoff) { return monomial(0, 1, cutoff); }

TruncatedSeries TruncatedSeries::monomial(int degree, std::int64_t coefficient, int cutoff)
{
    TruncatedSeries s(cutoff);
    if (degree >= 0 && degree <= cutoff)
        s.c_[degree] = coefficient;
    return s;
}

void TruncatedSeries::set(int d, std::int64_t v)
{
    if (d >= 0 && d <= cutoff())
        c_[d] = v;
}

void TruncatedSeries::add_to(int d, std::int64_t v)
{
    if (d >= 0 && d <= cutoff())
        c_[d] = checked_add(c_[d], v);
}

TruncatedSeries TruncatedSeries::truncated(int cutoff) const
{
    return TruncatedSeries(std::min(cutoff, this->cutoff()), c_);
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const
{
    TruncatedSeries r(std::min(cutoff(), o.cutoff()));
    for (int d = 0; d <= r.cutoff(); ++d)
        r.c_[d] = checked_add(c_[d], o.c_[d]);
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries r(cutoff());
    for (int d = 0; d <= cutoff(); ++d)
        r.c_[d] = checked_mul(c_[d], -1);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + (-o); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const
{
    TruncatedSeries r(std::min(cutoff(), o.cutoff()));
    for (int i = 0; i <= r.cutoff(); ++i) {
        if (c_[i] == 0)
            continue;
        for (int j = 0; i + j <= r.cutoff(); ++j)
            if (o.c_[j])
                r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(c_[i], o.c_[j]));
    }
    return r;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& o) const
{
    int d = std::min(cutoff(), o.cutoff());
    return std::equal(c_.begin(), c_.begin() + d + 1, o.c_.begin());
}

std::string TruncatedSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= cutoff(); ++d) {
        std::int64_t c = c_[d];
        if (c == 0)
            continue;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << '-';
        std::int64_t a = c < 0 ? -c : c;
        if (d == 0 || a != 1)
            os << a;
        if (d >= 1)
            os << 't';
        if (d >= 2)
            os << '^' << d;
        first = false;
    }
    if (first)
        os << '0';
    os << " + O(t^" << cutoff() + 1 << ')';
    return os.str();
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries geometric_series(const TruncatedSeries& g)
{
    if (g[0] != 0)
        throw PreconditionError("geometric_series needs a zero constant term");
    // r = 1 + g r, solved degree by degree
    TruncatedSeries r(g.cutoff());
    r.set(0, 1);
    for (int d = 1; d <= g.cutoff(); ++d) {
        std::int64_t acc = 0;
        for (int i = 1; i <= d; ++i)
            if (g[i])
                acc = checked_add(acc, checked_mul(g[i], r[d - i]));
        r.set(d, acc);
    }
    return r;
}

TruncatedSeries series_inverse(const TruncatedSeries& a)
{
    if (a[0] != 1)
        throw PreconditionError("series_inverse needs constant term 1");
    return geometric_series(TruncatedSeries::one(a.cutoff()) - a);
}

DegreeList::DegreeList(std::initializer_list<std::pair<int, int>> entries)
{
    for (auto [d, m] : entries)
        add(d, m);
}

DegreeList DegreeList::from_degrees(const std::vector<int>& degrees)
{
    DegreeList l;
    for (int d : degrees)
        l.add(d, 1);
    return l;
}

void DegreeList::add(int degree, int multiplicity)
{
    if (degree <= 0 || multiplicity <= 0)
        throw PreconditionError("degree list entries need positive degree and multiplicity");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{degree, 0});
    if (it != entries_.end() && it->first == degree)
        it->second += multiplicity;
    else
        entries_.insert(it, {degree, multiplicity});
}

const char* convention_name(Convention c)
{
    return c == Convention::ExteriorOnOdd ? "exterior-on-odd" : "polynomial-all";
}

Convention parse_convention(const std::string& name)
{
    if (name == "exterior-on-odd")
        return Convention::ExteriorOnOdd;
    if (name == "polynomial-all")
        return Convention::PolynomialAll;
    throw PreconditionError("unknown convention '" + name + "' (expected exterior-on-odd or polynomial-all)");
}

TruncatedSeries free_gc_series(const DegreeList& gens, Convention convention, int cutoff)
{
    TruncatedSeries r = TruncatedSeries::one(cutoff);
    for (auto [deg, mult] : gens.entries()) {
        const bool exterior = convention == Convention::ExteriorOnOdd && deg % 2 == 1;
        TruncatedSeries factor = exterior ? TruncatedSeries::one(cutoff) + TruncatedSeries::monomial(deg, 1, cutoff)
                                          : geometric_series(TruncatedSeries::monomial(deg, 1, cutoff));
        for (int i = 0; i < mult; ++i)
            r = r * factor;
    }
    return r;
}

TruncatedSeries kernel_generator_series(const TruncatedSeries& total, const TruncatedSeries& abelian_part)
{
    if (total[0] != 1 || abelian_part[0] != 1)
        throw PreconditionError("kernel_generator_series needs series with constant term 1");
    int cutoff = std::min(total.cutoff(), abelian_part.cutoff());
    // 1 - g = abelian / total
    TruncatedSeries g = TruncatedSeries::one(cutoff) - abelian_part.truncated(cutoff) * series_inverse(total.truncated(cutoff));
    for (int d = 1; d <= cutoff; ++d)
        if (g[d] < 0)
            throw FactorizationError(d, "kernel generator count would be " + std::to_string(g[d]) + " in degree " +
                                            std::to_string(d));
    return g;
}

}  // namespace mfc
