#include "mfc/rewriting.hpp"

#include "mfc/error.hpp"
#include "mfc/sparse_rank.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace mfc {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("normal word count overflow");
    return r;
}

// Pending work for one degree: an input relation or an overlap of two elements.
struct Pending {
    int relation = -1;  // index into the relation list, or -1 for an overlap
    size_t left = 0, right = 0;
    size_t shared = 0;  // length of the overlap
};

}  // namespace

Polynomial to_polynomial(const Tensor& t)
{
    Polynomial p;
    for (const auto& [w, c] : t.terms())
        p.emplace(w, mpq_class(static_cast<long>(c)));
    return p;
}

// Trie over leading words.
struct GroebnerBasis::Index {
    size_t alphabet;
    std::vector<std::vector<int>> next;  // node x letter -> node or -1
    std::vector<int> terminal;           // element index or -1

    explicit Index(size_t a) : alphabet(a), next(1, std::vector<int>(a, -1)), terminal(1, -1) {}

    void insert(const Word& w, int element)
    {
        int node = 0;
        for (Letter l : w) {
            if (next[node][l] < 0) {
                next[node][l] = static_cast<int>(next.size());
                next.emplace_back(alphabet, -1);
                terminal.push_back(-1);
            }
            node = next[node][l];
        }
        terminal[node] = element;
    }

    // First (position, element) with a leading word occurring at that position.
    std::optional<std::pair<size_t, int>> find(const Word& w) const
    {
        for (size_t start = 0; start < w.size(); ++start) {
            int node = 0;
            for (size_t i = start; i < w.size(); ++i) {
                node = next[node][w[i]];
                if (node < 0)
                    break;
                if (terminal[node] >= 0)
                    return std::pair{start, terminal[node]};
            }
        }
        return std::nullopt;
    }
};

GroebnerBasis::GroebnerBasis(std::vector<int> degrees, const std::vector<Tensor>& relations, int max_degree,
                             std::int64_t element_budget)
    : degrees_(std::move(degrees)), max_degree_(max_degree), index_(std::make_unique<Index>(degrees_.size()))
{
    if (max_degree < 0)
        throw PreconditionError("max_degree must be nonnegative");
    for (int d : degrees_)
        if (d <= 0)
            throw PreconditionError("generator degrees must be positive");
    std::vector<std::vector<Pending>> buckets(max_degree + 1);
    for (size_t r = 0; r < relations.size(); ++r) {
        if (relations[r].is_zero())
            continue;
        auto d = relations[r].homogeneous_degree(degrees_);
        if (!d)
            throw PreconditionError("relation " + std::to_string(r + 1) + " is not homogeneous");
        if (*d <= max_degree)
            buckets[*d].push_back({static_cast<int>(r)});
    }

    auto word_deg = [this](const Word& w, size_t from, size_t to) {
        int d = 0;
        for (size_t i = from; i < to; ++i)
            d += degrees_[w[i]];
        return d;
    };
    auto queue_overlaps = [&](size_t a, size_t b) {
        const Word& A = elements_[a].rbegin()->first;
        const Word& B = elements_[b].rbegin()->first;
        const size_t lim = std::min(A.size(), B.size());
        const int da = word_deg(A, 0, A.size());
        for (size_t k = 1; k < lim; ++k) {
            if (!std::equal(A.end() - k, A.end(), B.begin()))
                continue;
            const int d = da + word_deg(B, k, B.size());
            if (d <= max_degree_)
                buckets[d].push_back({-1, a, b, k});
        }
    };

    for (int d = 1; d <= max_degree; ++d) {
        for (size_t q = 0; q < buckets[d].size(); ++q) {
            const Pending job = buckets[d][q];
            Polynomial s;
            if (job.relation >= 0) {
                s = to_polynomial(relations[job.relation]);
            } else {
                // g_a * B[k:] - A[:-k] * g_b
                const Polynomial& ga = elements_[job.left];
                const Polynomial& gb = elements_[job.right];
                const Word& A = ga.rbegin()->first;
                const Word& B = gb.rbegin()->first;
                Word tail(B.begin() + job.shared, B.end());
                Word head(A.begin(), A.end() - job.shared);
                for (const auto& [w, c] : ga) {
                    Word nw = w;
                    nw.insert(nw.end(), tail.begin(), tail.end());
                    s[nw] += c;
                }
                for (const auto& [w, c] : gb) {
                    Word nw = head;
                    nw.insert(nw.end(), w.begin(), w.end());
                    mpq_class& v = s[nw];
                    v -= c;
                }
                for (auto it = s.begin(); it != s.end();)
                    it = sgn(it->second) == 0 ? s.erase(it) : std::next(it);
            }
            Polynomial r = normal_form(s);
            if (r.empty())
                continue;
            if (static_cast<std::int64_t>(elements_.size()) >= element_budget)
                throw BudgetExceeded(d - 1, "rewriting system exceeded " + std::to_string(element_budget) +
                                                " elements in degree " + std::to_string(d));
            add_element(std::move(r));
            const size_t fresh = elements_.size() - 1;
            for (size_t e = 0; e <= fresh; ++e) {
                queue_overlaps(e, fresh);
                if (e != fresh)
                    queue_overlaps(fresh, e);
            }
        }
        buckets[d].clear();
        buckets[d].shrink_to_fit();
    }
}

GroebnerBasis::~GroebnerBasis() = default;
GroebnerBasis::GroebnerBasis(GroebnerBasis&&) noexcept = default;
GroebnerBasis& GroebnerBasis::operator=(GroebnerBasis&&) noexcept = default;

size_t GroebnerBasis::size() const noexcept { return elements_.size(); }

std::vector<Word> GroebnerBasis::leading_words() const
{
    std::vector<Word> out;
    for (const auto& e : elements_)
        out.push_back(e.rbegin()->first);
    return out;
}

void GroebnerBasis::add_element(Polynomial p)
{
    const mpq_class lead = p.rbegin()->second;
    for (auto& [w, c] : p)
        c /= lead;
    index_->insert(p.rbegin()->first, static_cast<int>(elements_.size()));
    elements_.push_back(std::move(p));
}

Polynomial GroebnerBasis::normal_form(const Polynomial& input) const
{
    Polynomial p = input;
    Polynomial out;
    while (!p.empty()) {
        auto it = std::prev(p.end());
        auto occ = index_->find(it->first);
        if (!occ) {
            out.emplace(it->first, it->second);
            p.erase(it);
            continue;
        }
        const Word w = it->first;
        const mpq_class c = it->second;
        const Polynomial& g = elements_[occ->second];
        const size_t len = g.rbegin()->first.size();
        for (const auto& [gw, gc] : g) {
            Word nw(w.begin(), w.begin() + occ->first);
            nw.insert(nw.end(), gw.begin(), gw.end());
            nw.insert(nw.end(), w.begin() + occ->first + len, w.end());
            auto [slot, fresh] = p.try_emplace(std::move(nw), 0);
            slot->second -= c * gc;
            if (sgn(slot->second) == 0)
                p.erase(slot);
        }
    }
    return out;
}

namespace {

// Aho-Corasick automaton over the leading words; `bad` marks states where some leading word ends.
struct Automaton {
    std::vector<std::vector<int>> go;
    std::vector<char> bad;

    Automaton(const std::vector<Word>& patterns, size_t alphabet)
    {
        go.emplace_back(alphabet, -1);
        bad.push_back(0);
        for (const Word& w : patterns) {
            int node = 0;
            for (Letter l : w) {
                if (go[node][l] < 0) {
                    go[node][l] = static_cast<int>(go.size());
                    go.emplace_back(alphabet, -1);
                    bad.push_back(0);
                }
                node = go[node][l];
            }
            bad[node] = 1;
        }
        std::vector<int> fail(go.size(), 0);
        std::deque<int> q;
        for (size_t l = 0; l < alphabet; ++l) {
            int& t = go[0][l];
            if (t < 0)
                t = 0;
            else
                q.push_back(t);
        }
        while (!q.empty()) {
            int s = q.front();
            q.pop_front();
            bad[s] = bad[s] || bad[fail[s]];
            for (size_t l = 0; l < alphabet; ++l) {
                int& t = go[s][l];
                if (t < 0) {
                    t = go[fail[s]][l];
                } else {
                    fail[t] = go[fail[s]][l];
                    q.push_back(t);
                }
            }
        }
    }
};

}  // namespace

TruncatedSeries GroebnerBasis::normal_word_counts(std::int64_t word_budget) const
{
    Automaton au(leading_words(), degrees_.size());
    const size_t states = au.go.size();
    std::vector<std::vector<std::int64_t>> dp(max_degree_ + 1, std::vector<std::int64_t>(states, 0));
    dp[0][0] = 1;
    TruncatedSeries out(max_degree_);
    out.set(0, 1);
    for (int d = 1; d <= max_degree_; ++d) {
        for (size_t l = 0; l < degrees_.size(); ++l) {
            const int prev = d - degrees_[l];
            if (prev < 0)
                continue;
            for (size_t s = 0; s < states; ++s) {
                if (dp[prev][s] == 0)
                    continue;
                const int t = au.go[s][l];
                if (!au.bad[t])
                    dp[d][t] = checked_add(dp[d][t], dp[prev][s]);
            }
        }
        std::int64_t total = 0;
        for (std::int64_t v : dp[d])
            total = checked_add(total, v);
        if (total > word_budget)
            throw BudgetExceeded(d - 1, "degree " + std::to_string(d) + " has " + std::to_string(total) +
                                            " normal words, over the budget of " + std::to_string(word_budget));
        out.set(d, total);
    }
    return out;
}

std::vector<Word> GroebnerBasis::normal_words(int degree) const
{
    Automaton au(leading_words(), degrees_.size());
    std::vector<Word> out;
    Word w;
    auto rec = [&](auto&& self, int state, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(w);
            return;
        }
        for (size_t l = 0; l < degrees_.size(); ++l) {
            if (degrees_[l] > remaining)
                continue;
            const int t = au.go[state][l];
            if (au.bad[t])
                continue;
            w.push_back(static_cast<Letter>(l));
            self(self, t, remaining - degrees_[l]);
            w.pop_back();
        }
    };
    if (degree >= 0)
        rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_zero_in(const GroebnerBasis& gb, const Tensor& t) { return gb.normal_form(t).empty(); }

namespace {

using ContentKey = std::vector<std::uint8_t>;

ContentKey content(const Word& w, size_t alphabet)
{
    ContentKey k(alphabet, 0);
    for (Letter l : w)
        ++k[l];
    return k;
}

bool content_homogeneous(const std::vector<Tensor>& relations, size_t alphabet)
{
    for (const auto& r : relations) {
        std::optional<ContentKey> key;
        for (const auto& [w, c] : r.terms()) {
            ContentKey k = content(w, alphabet);
            if (key && *key != k)
                return false;
            key = k;
        }
    }
    return true;
}

// Dimension of (free algebra / ideal) in each degree from the span of w r w'.
TruncatedSeries linear_algebra_dimensions(const Presentation& p, int max_degree, std::int64_t word_budget)
{
    const auto degrees = p.degrees();
    const size_t alphabet = degrees.size();
    const bool by_content = content_homogeneous(p.relations, alphabet);
    std::vector<std::pair<int, const Tensor*>> rels;
    for (const auto& r : p.relations)
        if (!r.is_zero())
            rels.emplace_back(p.degree_of(r), &r);

    std::vector<std::vector<Word>> words(max_degree + 1);
    words[0].push_back(Word{});
    TruncatedSeries out(max_degree);
    out.set(0, 1);
    for (int d = 1; d <= max_degree; ++d) {
        std::int64_t count = 0;
        for (size_t l = 0; l < alphabet; ++l)
            if (degrees[l] <= d)
                count += static_cast<std::int64_t>(words[d - degrees[l]].size());
        if (count > word_budget)
            throw BudgetExceeded(d - 1, "degree " + std::to_string(d) + " has " + std::to_string(count) +
                                            " words, over the budget of " + std::to_string(word_budget));
        for (size_t l = 0; l < alphabet; ++l)
            if (degrees[l] <= d)
                for (const Word& w : words[d - degrees[l]]) {
                    Word nw = w;
                    nw.push_back(static_cast<Letter>(l));
                    words[d].push_back(std::move(nw));
                }

        struct Block {
            std::unordered_map<Word, int, WordHash> column;
            RankAccumulator acc;
        };
        std::map<ContentKey, Block> blocks;
        for (const Word& w : words[d]) {
            Block& b = blocks[by_content ? content(w, alphabet) : ContentKey{}];
            b.column.emplace(w, static_cast<int>(b.column.size()));
        }
        std::int64_t rank = 0;
        for (const auto& [e, r] : rels) {
            for (int a = 0; a + e <= d; ++a)
                for (const Word& left : words[a])
                    for (const Word& right : words[d - e - a]) {
                        std::map<int, std::int64_t> entries;
                        Block* block = nullptr;
                        for (const auto& [rw, c] : r->terms()) {
                            Word w = left;
                            w.insert(w.end(), rw.begin(), rw.end());
                            w.insert(w.end(), right.begin(), right.end());
                            if (!block)
                                block = &blocks.at(by_content ? content(w, alphabet) : ContentKey{});
                            entries[block->column.at(w)] += c;
                        }
                        SparseRow row = make_row(entries);
                        if (!row.empty() && block->acc.add_row(row))
                            ++rank;
                    }
        }
        out.set(d, static_cast<std::int64_t>(words[d].size()) - rank);
    }
    return out;
}

}  // namespace

TruncatedSeries graded_dimensions(const Presentation& p, int max_degree, DimensionRoute route,
                                  std::int64_t word_budget)
{
    if (route == DimensionRoute::LinearAlgebra)
        return linear_algebra_dimensions(p, max_degree, word_budget);
    GroebnerBasis gb(p.degrees(), p.relations, max_degree, word_budget);
    return gb.normal_word_counts(word_budget);
}

}  // namespace mfc
