#include "mfc/allday.hpp"

#include "mfc/error.hpp"
#include "mfc/shuffle.hpp"
#include "mfc/sparse_rank.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace mfc {

namespace {

void check_dims(const std::vector<int>& dims)
{
    if (dims.size() < 2)
        throw PreconditionError("the model needs at least two spheres");
    if (dims.size() > 16)
        throw PreconditionError("the model supports at most 16 spheres");
    for (int m : dims)
        if (m < 1)
            throw PreconditionError("sphere dimensions m_i must be at least 1");
}

// All nonempty subsets of [n] ordered by (cardinality, lexicographic).
std::vector<VertexMask> ordered_subsets(int n)
{
    std::vector<VertexMask> masks;
    for (VertexMask m = 1; m < (VertexMask{1} << n); ++m)
        masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](VertexMask a, VertexMask b) {
        int ca = cardinality(a), cb = cardinality(b);
        if (ca != cb)
            return ca < cb;
        return to_simplex(a) < to_simplex(b);
    });
    return masks;
}

std::map<VertexMask, Letter> subset_letters(int n)
{
    std::map<VertexMask, Letter> idx;
    auto masks = ordered_subsets(n);
    for (size_t i = 0; i < masks.size(); ++i)
        idx[masks[i]] = static_cast<Letter>(i);
    return idx;
}

DGAModel build_model(const std::vector<int>& dims, SignRule rule, bool top)
{
    check_dims(dims);
    const int n = static_cast<int>(dims.size());
    DGAModel model;
    model.dims = dims;
    model.has_top = top;
    const VertexMask full = (VertexMask{1} << n) - 1;
    for (VertexMask m : ordered_subsets(n)) {
        if (m == full && !top)
            continue;
        Simplex s = to_simplex(m);
        model.generators.push_back({s, generator_degree(s, dims)});
        model.differential.push_back(s.size() >= 2 ? a_element(s, dims, rule) : Tensor{});
    }
    return model;
}

}  // namespace

std::string ModelGenerator::name() const
{
    bool small = std::all_of(index_set.begin(), index_set.end(), [](int v) { return v <= 9; });
    std::string s = "b";
    if (!small)
        s += '{';
    for (size_t i = 0; i < index_set.size(); ++i) {
        if (!small && i)
            s += ',';
        s += std::to_string(index_set[i]);
    }
    if (!small)
        s += '}';
    return s;
}

std::vector<int> DGAModel::degrees() const
{
    std::vector<int> d;
    for (const auto& g : generators)
        d.push_back(g.degree);
    return d;
}

int generator_degree(const Simplex& index_set, const std::vector<int>& dims)
{
    int d = -1;
    for (int v : index_set) {
        if (v < 1 || v > static_cast<int>(dims.size()))
            throw PreconditionError("index " + std::to_string(v) + " outside the vertex range");
        d += dims[v - 1] + 1;
    }
    return d;
}

Tensor a_element(const Simplex& index_set, const std::vector<int>& dims, SignRule rule)
{
    if (index_set.size() < 2)
        throw PreconditionError("a_I needs |I| >= 2; singleton generators are cycles");
    check_dims(dims);
    const int n = static_cast<int>(dims.size());
    auto letters = subset_letters(n);
    std::map<int, int> z;
    for (int v : index_set)
        z[v] = dims.at(v - 1) + 1;
    const int deg_i = generator_degree(index_set, dims);

    Tensor a;
    for (const ShufflePair& p : type2_shuffles(index_set)) {
        const int eps = shuffle_sign(index_set, p, z);
        const int dj = generator_degree(p.left, dims);
        const int dj2 = generator_degree(p.right, dims);
        const int s = (rule == SignRule::Literal ? deg_i : dj) + eps;
        Tensor bracket = graded_commutator(Tensor::letter(letters.at(to_mask(p.left))), dj,
                                           Tensor::letter(letters.at(to_mask(p.right))), dj2);
        if (s % 2 == 0)
            a -= bracket;
        else
            a += bracket;
    }
    return a;
}

DGAModel build_fat_wedge_model(const std::vector<int>& dims, SignRule rule) { return build_model(dims, rule, false); }

DGAModel build_product_model(const std::vector<int>& dims, SignRule rule) { return build_model(dims, rule, true); }

Tensor apply_differential(const DGAModel& model, const Tensor& t)
{
    const auto degrees = model.degrees();
    Tensor out;
    for (const auto& [w, c] : t.terms()) {
        int prefix_degree = 0;
        for (size_t k = 0; k < w.size(); ++k) {
            const Tensor& dl = model.differential.at(w[k]);
            const std::int64_t sign = prefix_degree % 2 ? -c : c;
            for (const auto& [dw, dc] : dl.terms()) {
                Word nw(w.begin(), w.begin() + k);
                nw.insert(nw.end(), dw.begin(), dw.end());
                nw.insert(nw.end(), w.begin() + k + 1, w.end());
                out.add(nw, sign * dc);
            }
            prefix_degree += degrees[w[k]];
        }
    }
    return out;
}

DSquaredVerdict check_d_squared(const DGAModel& model, int max_degree, bool exhaustive)
{
    DSquaredVerdict v;
    auto name = [&](Letter l) { return model.letter_name(l); };
    auto test = [&](const Word& w) {
        ++v.words_checked;
        Tensor dd = apply_differential(model, apply_differential(model, Tensor::of_word(w)));
        if (!dd.is_zero() && v.ok) {
            v.ok = false;
            v.witness = w;
            v.witness_text = Tensor::of_word(w).str(name) + " -> " + dd.str(name);
        }
        return v.ok;
    };
    const auto degrees = model.degrees();
    if (!exhaustive) {
        for (size_t l = 0; l < model.generators.size(); ++l)
            if (degrees[l] <= max_degree && !test(Word{static_cast<Letter>(l)}))
                break;
        return v;
    }
    // depth-first over all words of degree <= max_degree
    std::vector<Word> stack{Word{}};
    while (!stack.empty() && v.ok) {
        Word w = std::move(stack.back());
        stack.pop_back();
        if (!w.empty())
            test(w);
        const int d = word_degree(w, degrees);
        for (size_t l = model.generators.size(); l-- > 0;)
            if (d + degrees[l] <= max_degree) {
                Word nw = w;
                nw.push_back(static_cast<Letter>(l));
                stack.push_back(std::move(nw));
            }
    }
    return v;
}

HomologyReport homology_report(const DGAModel& model, int max_degree, std::int64_t word_budget)
{
    if (max_degree < 1)
        throw PreconditionError("homology needs max_degree >= 1 (degree max_degree ranks feed H_{max_degree-1})");
    const auto degrees = model.degrees();
    const int n = model.vertex_count();
    const size_t letters = model.generators.size();

    // word counts per degree, checked against the budget before enumerating
    std::vector<std::int64_t> counts(max_degree + 1, 0);
    counts[0] = 1;
    for (int d = 1; d <= max_degree; ++d) {
        for (size_t l = 0; l < letters; ++l)
            if (degrees[l] <= d)
                counts[d] += counts[d - degrees[l]];
        if (counts[d] > word_budget)
            throw BudgetExceeded(d - 1, "degree " + std::to_string(d) + " has " + std::to_string(counts[d]) +
                                            " words, over the budget of " + std::to_string(word_budget));
    }

    // multidegree (occurrences of each vertex) -> degree -> words
    using Key = std::vector<std::uint8_t>;
    std::map<Key, std::map<int, std::vector<Word>>> blocks;
    struct Frame {
        Word w;
        Key key;
        int degree;
    };
    std::vector<Frame> stack{{Word{}, Key(n, 0), 0}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (!f.w.empty())
            blocks[f.key][f.degree].push_back(f.w);
        for (size_t l = 0; l < letters; ++l) {
            if (f.degree + degrees[l] > max_degree)
                continue;
            Frame g{f.w, f.key, f.degree + degrees[l]};
            g.w.push_back(static_cast<Letter>(l));
            for (int v : model.generators[l].index_set)
                ++g.key[v - 1];
            stack.push_back(std::move(g));
        }
    }

    HomologyReport rep;
    rep.words = counts;
    rep.ranks.assign(max_degree + 1, 0);
    rep.blocks = static_cast<int>(blocks.size());
    for (auto& [key, by_degree] : blocks) {
        for (auto& [d, words] : by_degree)
            std::sort(words.begin(), words.end());
        for (auto& [d, words] : by_degree) {
            auto target = by_degree.find(d - 1);
            if (target == by_degree.end())
                continue;
            std::unordered_map<Word, int, WordHash> column;
            for (size_t i = 0; i < target->second.size(); ++i)
                column.emplace(target->second[i], static_cast<int>(i));
            RankAccumulator acc;
            for (const Word& w : words) {
                Tensor img = apply_differential(model, Tensor::of_word(w));
                std::map<int, std::int64_t> entries;
                for (const auto& [iw, c] : img.terms())
                    entries[column.at(iw)] = c;
                if (!entries.empty())
                    acc.add_row(make_row(entries));
            }
            rep.ranks[d] += acc.rank();
        }
    }
    rep.series = TruncatedSeries(max_degree - 1);
    for (int d = 0; d < max_degree; ++d)
        rep.series.set(d, counts[d] - rep.ranks[d] - rep.ranks[d + 1]);
    return rep;
}

TruncatedSeries homology_series(const DGAModel& model, int max_degree, std::int64_t word_budget)
{
    return homology_report(model, max_degree, word_budget).series;
}

int bubenik_top_degree(const std::vector<int>& dims)
{
    int s = -2;
    for (int m : dims)
        s += m + 1;
    return s;
}

TruncatedSeries bubenik_series(const std::vector<int>& dims, Convention convention, int cutoff)
{
    if (dims.size() < 3)
        throw PreconditionError("the closed form needs n >= 3; for two spheres the model is free");
    check_dims(dims);
    TruncatedSeries g = TruncatedSeries::monomial(bubenik_top_degree(dims), 1, cutoff);
    for (int m : dims)
        g = g * geometric_series(TruncatedSeries::monomial(m, 1, cutoff));
    return free_gc_series(DegreeList::from_degrees(dims), convention, cutoff) * geometric_series(g);
}

TruncatedSeries sphere_loop_series(int m, int cutoff)
{
    if (m < 1)
        throw PreconditionError("sphere dimension must be at least 2");
    if (m % 2 == 0)
        return geometric_series(TruncatedSeries::monomial(m, 1, cutoff));
    return (TruncatedSeries::one(cutoff) + TruncatedSeries::monomial(m, 1, cutoff)) *
           geometric_series(TruncatedSeries::monomial(2 * m, 1, cutoff));
}

}  // namespace mfc
