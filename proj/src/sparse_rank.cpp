#include "mfc/sparse_rank.hpp"

#include <cstdlib>
#include <numeric>
#include <unordered_map>

namespace mfc {

namespace {

struct Overflow {};

std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

std::int64_t gcd_of(std::int64_t a, std::int64_t b)
{
    if (a == INT64_MIN || b == INT64_MIN)
        throw Overflow{};
    return std::gcd(a, b);
}

mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
mpz_class gcd_of(const mpz_class& a, const mpz_class& b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool is_zero(std::int64_t a) { return a == 0; }
bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
bool is_one(std::int64_t a) { return a == 1; }
bool is_one(const mpz_class& a) { return a == 1; }
bool negative(std::int64_t a) { return a < 0; }
bool negative(const mpz_class& a) { return sgn(a) < 0; }

template <class T>
using Row = std::vector<std::pair<int, T>>;

// alpha * r - beta * p
template <class T>
Row<T> combine(const Row<T>& r, const T& alpha, const Row<T>& p, const T& beta)
{
    Row<T> out;
    out.reserve(r.size() + p.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, mul(alpha, r[i].second));
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, sub(T(0), mul(beta, p[j].second)));
            ++j;
        } else {
            T v = sub(mul(alpha, r[i].second), mul(beta, p[j].second));
            if (!is_zero(v))
                out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

template <class T>
void normalize(Row<T>& r)
{
    if (r.empty())
        return;
    T g(0);
    for (const auto& e : r) {
        g = gcd_of(g, e.second);
        if (is_one(g))
            break;
    }
    if (negative(r.front().second))
        g = sub(T(0), g);
    if (!is_one(g))
        for (auto& e : r)
            e.second /= g;
}

template <class T>
struct Echelon {
    std::unordered_map<int, size_t> pivot;  // leading column -> row index
    std::vector<Row<T>> rows;

    Row<T> reduce(Row<T> r) const
    {
        while (!r.empty()) {
            auto it = pivot.find(r.front().first);
            if (it == pivot.end())
                break;
            const Row<T>& p = rows[it->second];
            T a = r.front().second;
            T b = p.front().second;
            T g = gcd_of(a, b);
            a /= g;
            b /= g;
            r = combine(r, b, p, a);
            normalize(r);
        }
        return r;
    }

    bool add(Row<T> r)
    {
        normalize(r);
        r = reduce(std::move(r));
        if (r.empty())
            return false;
        pivot.emplace(r.front().first, rows.size());
        rows.push_back(std::move(r));
        return true;
    }
};

}  // namespace

struct RankAccumulator::Small : Echelon<std::int64_t> {};
struct RankAccumulator::Big : Echelon<mpz_class> {};

namespace {

Row<mpz_class> widen(const Row<std::int64_t>& r)
{
    Row<mpz_class> out;
    out.reserve(r.size());
    for (const auto& [c, v] : r)
        out.emplace_back(c, mpz_class(static_cast<long>(v)));
    return out;
}

bool narrow(const BigSparseRow& r, SparseRow& out)
{
    out.clear();
    for (const auto& [c, v] : r) {
        if (!v.fits_slong_p())
            return false;
        out.emplace_back(c, static_cast<std::int64_t>(v.get_si()));
    }
    return true;
}

}  // namespace

RankAccumulator::RankAccumulator() : small_(std::make_unique<Small>()) {}
RankAccumulator::~RankAccumulator() = default;
RankAccumulator::RankAccumulator(RankAccumulator&&) noexcept = default;
RankAccumulator& RankAccumulator::operator=(RankAccumulator&&) noexcept = default;

void RankAccumulator::promote()
{
    big_ = std::make_unique<Big>();
    big_->pivot = small_->pivot;
    big_->rows.reserve(small_->rows.size());
    for (const auto& r : small_->rows)
        big_->rows.push_back(widen(r));
    small_.reset();
}

bool RankAccumulator::add_row(const SparseRow& row)
{
    if (small_) {
        try {
            return small_->add(row);
        } catch (const Overflow&) {
            promote();
        }
    }
    return big_->add(widen(row));
}

bool RankAccumulator::add_row(const BigSparseRow& row)
{
    if (small_) {
        SparseRow s;
        if (narrow(row, s))
            return add_row(s);
        promote();
    }
    return big_->add(row);
}

bool RankAccumulator::in_span(const BigSparseRow& row) const
{
    if (small_) {
        SparseRow s;
        if (narrow(row, s)) {
            try {
                Row<std::int64_t> r = s;
                normalize(r);
                return small_->reduce(std::move(r)).empty();
            } catch (const Overflow&) {
            }
        }
        Big tmp;
        tmp.pivot = small_->pivot;
        for (const auto& r : small_->rows)
            tmp.rows.push_back(widen(r));
        Row<mpz_class> r = row;
        normalize(r);
        return tmp.reduce(std::move(r)).empty();
    }
    Row<mpz_class> r = row;
    normalize(r);
    return big_->reduce(std::move(r)).empty();
}

int RankAccumulator::rank() const noexcept
{
    return static_cast<int>(small_ ? small_->rows.size() : big_->rows.size());
}

bool RankAccumulator::promoted() const noexcept { return big_ != nullptr; }

int sparse_rank(const std::vector<SparseRow>& rows)
{
    RankAccumulator acc;
    for (const auto& r : rows)
        acc.add_row(r);
    return acc.rank();
}

SparseRow make_row(const std::map<int, std::int64_t>& entries)
{
    SparseRow r;
    for (const auto& [c, v] : entries)
        if (v != 0)
            r.emplace_back(c, v);
    return r;
}

}  // namespace mfc
