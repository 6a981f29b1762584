#include "mfc/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace mfc {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("tensor coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("tensor coefficient overflow");
    return r;
}

}  // namespace

int word_degree(const Word& w, std::span<const int> degrees)
{
    int d = 0;
    for (Letter l : w)
        d += degrees[l];
    return d;
}

Tensor Tensor::letter(Letter l, std::int64_t coefficient) { return of_word(Word{l}, coefficient); }

Tensor Tensor::of_word(Word w, std::int64_t coefficient)
{
    Tensor t;
    t.add(w, coefficient);
    return t;
}

void Tensor::add(const Word& w, std::int64_t coefficient)
{
    if (coefficient == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, coefficient);
    if (!inserted) {
        it->second = checked_add(it->second, coefficient);
        if (it->second == 0)
            terms_.erase(it);
    }
}

Tensor& Tensor::operator+=(const Tensor& o)
{
    for (const auto& [w, c] : o.terms_)
        add(w, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o)
{
    for (const auto& [w, c] : o.terms_)
        add(w, checked_mul(c, -1));
    return *this;
}

Tensor Tensor::operator+(const Tensor& o) const
{
    Tensor r = *this;
    r += o;
    return r;
}

Tensor Tensor::operator-(const Tensor& o) const
{
    Tensor r = *this;
    r -= o;
    return r;
}

Tensor Tensor::scaled(std::int64_t c) const
{
    Tensor r;
    if (c == 0)
        return r;
    for (const auto& [w, x] : terms_)
        r.terms_.emplace(w, checked_mul(x, c));
    return r;
}

Tensor Tensor::operator*(const Tensor& o) const
{
    Tensor r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add(w, checked_mul(c1, c2));
        }
    return r;
}

std::optional<int> Tensor::homogeneous_degree(std::span<const int> degrees) const
{
    std::optional<int> d;
    for (const auto& [w, c] : terms_) {
        int wd = word_degree(w, degrees);
        if (d && *d != wd)
            return std::nullopt;
        d = wd;
    }
    return d;
}

std::string Tensor::str(const std::function<std::string(Letter)>& name) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::int64_t a = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (a != 1 || w.empty())
            os << a << (w.empty() ? "" : " ");
        for (size_t i = 0; i < w.size(); ++i)
            os << (i ? " " : "") << name(w[i]);
        first = false;
    }
    return os.str();
}

Tensor graded_commutator(const Tensor& x, int deg_x, const Tensor& y, int deg_y)
{
    Tensor r = x * y;
    Tensor yx = y * x;
    if ((deg_x * deg_y) % 2 == 0)
        r -= yx;
    else
        r += yx;
    return r;
}

}  // namespace mfc
