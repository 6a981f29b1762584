#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mfc {

/// Generator index inside a free associative algebra.
using Letter = std::uint16_t;
using Word = std::vector<Letter>;

struct WordHash {
    size_t operator()(const Word& w) const noexcept
    {
        size_t h = 1469598103934665603ull;
        for (Letter l : w)
            h = (h ^ l) * 1099511628211ull;
        return h;
    }
};

/// Sum of generator degrees along the word.
int word_degree(const Word& w, std::span<const int> degrees);

/// Integer linear combination of words in a free associative algebra.
/// Zero coefficients are never stored; arithmetic is overflow-checked.
class Tensor {
public:
    Tensor() = default;
    static Tensor letter(Letter l, std::int64_t coefficient = 1);
    static Tensor of_word(Word w, std::int64_t coefficient = 1);

    void add(const Word& w, std::int64_t coefficient);
    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor scaled(std::int64_t c) const;
    /// Concatenation product.
    Tensor operator*(const Tensor& o) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    size_t size() const noexcept { return terms_.size(); }
    const std::map<Word, std::int64_t>& terms() const noexcept { return terms_; }
    bool operator==(const Tensor&) const = default;

    /// Degree shared by all terms; nullopt when empty or inhomogeneous.
    std::optional<int> homogeneous_degree(std::span<const int> degrees) const;

    /// "2 b1 b2 - b2 b1" using `name(letter)`.
    std::string str(const std::function<std::string(Letter)>& name) const;

private:
    std::map<Word, std::int64_t> terms_;
};

/// [x, y] = xy - (-1)^{|x||y|} yx for homogeneous x, y.
Tensor graded_commutator(const Tensor& x, int deg_x, const Tensor& y, int deg_y);

}  // namespace mfc
