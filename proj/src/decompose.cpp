#include "mfc/decompose.hpp"

#include "mfc/error.hpp"
#include "mfc/rewriting.hpp"
#include "mfc/sparse_rank.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <numeric>

namespace mfc {

namespace {

std::int64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// #{(d_1..d_r) >= 1 : offset + sum d_t m_t = dim} for every dim <= max_dim.
std::map<int, std::int64_t> composition_counts(const std::vector<int>& ms, int offset, int max_dim)
{
    std::vector<std::int64_t> ways(std::max(max_dim - offset, 0) + 1, 0);
    if (max_dim < offset)
        return {};
    ways[0] = 1;
    for (int m : ms) {
        std::vector<std::int64_t> next(ways.size(), 0);
        for (size_t s = 0; s < ways.size(); ++s)
            if (ways[s])
                for (size_t t = s + m; t < ways.size(); t += m)
                    next[t] += ways[s];
        ways = std::move(next);
    }
    std::map<int, std::int64_t> out;
    for (size_t s = 0; s < ways.size(); ++s)
        if (ways[s])
            out[offset + static_cast<int>(s)] = ways[s];
    return out;
}

BigSparseRow to_row(const Polynomial& p, std::map<Word, int>& columns)
{
    mpz_class lcm = 1;
    for (const auto& [w, c] : p)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::map<int, mpz_class> entries;
    for (const auto& [w, c] : p) {
        auto [it, fresh] = columns.try_emplace(w, static_cast<int>(columns.size()));
        mpz_class v = c.get_num() * (lcm / c.get_den());
        entries[it->second] = v;
    }
    return BigSparseRow(entries.begin(), entries.end());
}

Polynomial multiply(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            mpq_class& slot = out[w];
            slot += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

struct Labeled {
    WhiteheadLabel label;
    int dimension;
    Tensor image;
};

void for_each_multiset(int n, const std::vector<int>& dims, int budget, const std::function<void(const std::vector<int>&, int)>& f)
{
    std::vector<int> js;
    std::function<void(int, int)> rec = [&](int first, int used) {
        if (!js.empty())
            f(js, used);
        for (int j = first; j <= n; ++j)
            if (used + dims[j - 1] <= budget) {
                js.push_back(j);
                rec(j, used + dims[j - 1]);
                js.pop_back();
            }
    };
    rec(1, 0);
}

std::vector<std::vector<int>> nonempty_subsets(const Simplex& s)
{
    std::vector<std::vector<int>> out;
    const int c = static_cast<int>(s.size());
    for (unsigned bits = 1; bits < (1u << c); ++bits) {
        std::vector<int> js;
        for (int t = 0; t < c; ++t)
            if (bits >> t & 1u)
                js.push_back(s[t]);
        out.push_back(std::move(js));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

int higher_dimension(const Simplex& sigma, Target t, const std::vector<int>& dims)
{
    return higher_degree(sigma, t, dims) + 1;
}

// Shared driver: enumerated labels, two-vertex candidate selection against the presented algebra,
// and the kernel series route.
WedgeDecomposition decompose_impl(const SimplicialComplex& k, const Presentation& p, int max_dim,
                                  std::int64_t budget)
{
    const int n = k.vertex_count();
    const Target target = p.target;
    const auto mfs = missing_faces(k);
    WedgeDecomposition out;
    out.target = target;
    out.dims = p.dims;
    out.max_dim = max_dim;
    out.truncated = target == Target::Spheres;

    auto b_degree = [&](int j) { return target == Target::Cp ? 1 : p.dims[j - 1]; };
    auto js_dimension = [&](const Simplex& sigma, const std::vector<int>& js) {
        int d = higher_dimension(sigma, target, p.dims);
        for (int j : js)
            d += b_degree(j);
        return d;
    };

    std::vector<Labeled> enumerated;  // higher products and brackets on faces with >= 3 vertices
    std::vector<Labeled> candidates;  // brackets on two-vertex faces
    for (const auto& mf : mfs) {
        const Simplex& s = mf.vertices;
        const int hd = higher_dimension(s, target, p.dims);
        const Tensor h = higher_element(p, s);
        if (hd <= max_dim)
            enumerated.push_back({WhiteheadLabel::higher(target, s), hd, h});
        else
            out.truncated = true;
        std::vector<std::vector<int>> lists;
        if (target == Target::Cp) {
            lists = nonempty_subsets(j_complement(mf, n));
        } else {
            for_each_multiset(n, p.dims, max_dim - hd, [&](const std::vector<int>& js, int) { lists.push_back(js); });
            std::stable_sort(lists.begin(), lists.end(), [&](const auto& a, const auto& b) {
                int da = js_dimension(s, a), db = js_dimension(s, b);
                if (da != db)
                    return da < db;
                return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
        }
        for (const auto& js : lists) {
            const int dim = js_dimension(s, js);
            if (dim > max_dim) {
                out.truncated = true;
                continue;
            }
            Labeled l{WhiteheadLabel::iterated(target, s, js), dim,
                      iterated_bracket(p, h, higher_degree(s, target, p.dims), js)};
            (s.size() >= 3 ? enumerated : candidates).push_back(std::move(l));
        }
    }

    const int top_degree = std::max(max_dim - 1, 0);
    GroebnerBasis gb(p.degrees(), p.relations, top_degree, budget);
    const TruncatedSeries total = gb.normal_word_counts(budget);
    DegreeList abelian_gens;
    for (int j = 1; j <= n; ++j)
        abelian_gens.add(b_degree(j));
    const Convention conv = target == Target::Cp ? Convention::ExteriorOnOdd : p.convention;
    const TruncatedSeries g = kernel_generator_series(total, free_gc_series(abelian_gens, conv, top_degree));

    // two-vertex faces: keep a candidate iff it is independent of the decomposables of the
    // kernel subalgebra, the enumerated labels and earlier picks of the same degree
    std::vector<const Labeled*> selected;
    if (!candidates.empty()) {
        int max_cand = 0;
        for (const auto& c : candidates)
            max_cand = std::max(max_cand, c.dimension - 1);
        std::vector<std::vector<Polynomial>> gens(max_cand + 1), basis(max_cand + 1);
        for (const auto& t : enumerated)
            if (t.dimension - 1 <= max_cand)
                gens[t.dimension - 1].push_back(gb.normal_form(t.image));
        for (int e = 1; e <= max_cand; ++e) {
            std::map<Word, int> columns;
            RankAccumulator acc;
            auto offer = [&](const Polynomial& q) {
                if (q.empty())
                    return false;
                if (!acc.add_row(to_row(q, columns)))
                    return false;
                basis[e].push_back(q);
                return true;
            };
            for (int a = 1; a < e; ++a)
                for (const auto& x : gens[a])
                    for (const auto& y : basis[e - a])
                        offer(gb.normal_form(multiply(x, y)));
            for (const auto& q : gens[e])
                offer(q);
            for (const auto& c : candidates) {
                if (c.dimension - 1 != e)
                    continue;
                Polynomial q = gb.normal_form(c.image);
                if (offer(q)) {
                    selected.push_back(&c);
                    gens[e].push_back(std::move(q));
                } else {
                    out.rejected.push_back(c.label);
                }
            }
        }
    }

    std::map<int, std::int64_t> enumeration, series;
    for (const auto& t : enumerated) {
        out.summands.push_back({t.dimension, t.label, Provenance::Enumeration});
        ++enumeration[t.dimension];
    }
    for (const Labeled* c : selected) {
        out.summands.push_back({c->dimension, c->label, Provenance::Enumeration});
        ++enumeration[c->dimension];
    }
    for (int d = 1; d <= top_degree; ++d)
        if (g[d])
            series[d + 1] = g[d];
    for (const auto& [dim, c] : series) {
        const std::int64_t have = enumeration.count(dim) ? enumeration[dim] : 0;
        for (std::int64_t i = have; i < c; ++i)
            out.summands.push_back({dim, std::nullopt, Provenance::Series});
    }
    std::stable_sort(out.summands.begin(), out.summands.end(),
                     [](const SphereSummand& a, const SphereSummand& b) { return a.dimension < b.dimension; });

    // route table
    std::vector<std::pair<std::string, std::map<int, std::int64_t>>> routes{{"enumeration", enumeration},
                                                                            {"series", series}};
    if (auto sk = detect_skeleton(k))
        routes.emplace_back("porter", porter_fnk(n, *sk, p.dims, max_dim).counts());
    if (mfs.size() == 1)
        routes.emplace_back("james", james_counts(n, p.dims, max_dim));
    out.report.max_dim = max_dim;
    for (const auto& r : routes)
        out.report.routes.push_back(r.first);
    int lowest = 3;
    for (const auto& r : routes)
        if (!r.second.empty())
            lowest = std::min(lowest, r.second.begin()->first);
    for (int dim = lowest; dim <= max_dim; ++dim) {
        ConsistencyRow row;
        row.dimension = dim;
        for (const auto& [name, table] : routes) {
            auto it = table.find(dim);
            row.counts.emplace_back(name, it == table.end() ? 0 : it->second);
        }
        row.agree = std::all_of(row.counts.begin(), row.counts.end(),
                                [&](const auto& c) { return c.second == row.counts.front().second; });
        if (!row.agree)
            out.flags.push_back({dim, row.counts});
        out.report.rows.push_back(std::move(row));
    }
    return out;
}

void require_mf(const SimplicialComplex& k)
{
    if (missing_faces(k).empty())
        return;
    auto v = is_mf_complex(k);
    if (!v.is_mf)
        throw PreconditionError("not an MF-complex: face " + format_simplex(*v.witness) + " lies in no missing face");
}

}  // namespace

WhiteheadLabel WhiteheadLabel::higher(Target t, Simplex sigma)
{
    WhiteheadLabel l;
    l.kind = Kind::Higher;
    l.target = t;
    l.sigma = std::move(sigma);
    return l;
}

WhiteheadLabel WhiteheadLabel::iterated(Target t, Simplex sigma, std::vector<int> js)
{
    WhiteheadLabel l;
    l.kind = Kind::Iterated;
    l.target = t;
    l.sigma = std::move(sigma);
    l.js = std::move(js);
    return l;
}

std::string WhiteheadLabel::str() const
{
    const char* tilde = target == Target::Cp ? "~" : "";
    if (kind == Kind::Coordinate)
        return fmt::format("a{}{}", tilde, vertex);
    std::string s = fmt::format("w{}{}", tilde, format_simplex(sigma));
    for (int j : js)
        s = fmt::format("[{},a{}{}]", s, tilde, j);
    return s;
}

const char* provenance_name(Provenance p)
{
    switch (p) {
    case Provenance::Enumeration:
        return "enumeration";
    case Provenance::Series:
        return "series";
    case Provenance::Porter:
        return "porter";
    case Provenance::James:
        return "james";
    }
    return "?";
}

bool ConsistencyReport::all_agree() const
{
    return std::all_of(rows.begin(), rows.end(), [](const ConsistencyRow& r) { return r.agree; });
}

std::string RouteFlag::str() const
{
    std::string s = fmt::format("FLAG dim {}:", dimension);
    for (const auto& [name, c] : routes)
        s += fmt::format(" {}={}", name, c);
    return s;
}

std::map<int, std::int64_t> WedgeDecomposition::counts() const
{
    std::map<int, std::int64_t> c;
    for (const auto& s : summands)
        ++c[s.dimension];
    return c;
}

std::string WedgeDecomposition::wedge_string() const
{
    std::string s;
    for (const auto& [dim, c] : counts()) {
        if (!s.empty())
            s += " ∨ ";
        s += c == 1 ? fmt::format("S^{}", dim) : fmt::format("{}S^{}", c, dim);
    }
    if (s.empty())
        s = "pt";
    if (truncated)
        s += " (truncated)";
    return s;
}

int default_cp_max_dim(const SimplicialComplex& k)
{
    int best = 1;
    const int n = k.vertex_count();
    for (const auto& mf : missing_faces(k)) {
        const int extra = static_cast<int>(j_complement(mf, n).size());
        best = std::max(best, 2 * mf.dimension() + 1 + extra);
    }
    return best + 2;
}

WedgeDecomposition decompose_cp(const SimplicialComplex& k, std::optional<int> max_dim, std::int64_t word_budget)
{
    require_mf(k);
    const int cutoff = max_dim ? *max_dim : default_cp_max_dim(k);
    if (cutoff < 1)
        throw PreconditionError("max_dim must be positive");
    return decompose_impl(k, build_cp_presentation(k), cutoff, word_budget);
}

WedgeDecomposition decompose_spheres(const SimplicialComplex& k, const std::vector<int>& dims, int max_dim,
                                     Convention convention, std::int64_t word_budget)
{
    require_mf(k);
    if (max_dim < 1)
        throw PreconditionError("max_dim must be positive");
    return decompose_impl(k, build_sphere_presentation(k, dims, convention), max_dim, word_budget);
}

WedgeDecomposition porter_fnk(int n, int k, const std::vector<int>& dims, int max_dim)
{
    if (n < 2 || k < 1 || k > n - 1)
        throw PreconditionError(fmt::format("porter splitting needs 1 <= k <= n-1 (got n={}, k={})", n, k));
    const bool cp = dims.empty();
    if (!cp && static_cast<int>(dims.size()) != n)
        throw PreconditionError("dims length must equal n");
    WedgeDecomposition out;
    out.target = cp ? Target::Cp : Target::Spheres;
    out.dims = dims;
    out.max_dim = max_dim;
    out.truncated = !cp;
    std::map<int, std::int64_t> counts;
    for (int j = n - k + 1; j <= n; ++j) {
        const std::int64_t copies = binomial(j - 1, n - k);
        for (unsigned bits = 0; bits < (1u << n); ++bits) {
            if (__builtin_popcount(bits) != j)
                continue;
            if (cp) {
                if (n - k + j <= max_dim)
                    counts[n - k + j] += copies;
                else
                    out.truncated = true;
                continue;
            }
            std::vector<int> ms;
            for (int i = 0; i < n; ++i)
                if (bits >> i & 1u)
                    ms.push_back(dims[i]);
            for (const auto& [dim, c] : composition_counts(ms, n - k, max_dim))
                counts[dim] += copies * c;
        }
    }
    for (const auto& [dim, c] : counts)
        for (std::int64_t i = 0; i < c; ++i)
            out.summands.push_back({dim, std::nullopt, Provenance::Porter});
    return out;
}

std::map<int, std::int64_t> james_counts(int n, const std::vector<int>& dims, int max_dim)
{
    if (dims.empty())
        return 2 * n - 1 <= max_dim ? std::map<int, std::int64_t>{{2 * n - 1, 1}} : std::map<int, std::int64_t>{};
    return composition_counts(dims, n - 1, max_dim);
}

ConsistencyReport consistency_report(const SimplicialComplex& k, Target target, const std::vector<int>& dims,
                                     int max_dim, Convention convention)
{
    if (target == Target::Cp)
        return decompose_cp(k, max_dim).report;
    return decompose_spheres(k, dims, max_dim, convention).report;
}

nlohmann::ordered_json label_to_json(const WhiteheadLabel& l)
{
    nlohmann::ordered_json j;
    switch (l.kind) {
    case WhiteheadLabel::Kind::Coordinate:
        j["kind"] = "coordinate";
        j["vertex"] = l.vertex;
        break;
    case WhiteheadLabel::Kind::Higher:
        j["kind"] = "higher";
        j["sigma"] = l.sigma;
        break;
    case WhiteheadLabel::Kind::Iterated:
        j["kind"] = "iterated";
        j["sigma"] = l.sigma;
        j["js"] = l.js;
        break;
    }
    j["text"] = l.str();
    return j;
}

nlohmann::ordered_json report_to_json(const ConsistencyReport& r)
{
    nlohmann::ordered_json j;
    j["max_dim"] = r.max_dim;
    j["routes"] = r.routes;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json counts;
        for (const auto& [name, c] : row.counts)
            counts[name] = c;
        rows.push_back({{"dimension", row.dimension}, {"counts", counts}, {"agree", row.agree}});
    }
    j["rows"] = rows;
    j["all_agree"] = r.all_agree();
    return j;
}

nlohmann::ordered_json decomposition_to_json(const SimplicialComplex& k, const WedgeDecomposition& d)
{
    using nlohmann::ordered_json;
    ordered_json j;
    ordered_json facets = ordered_json::array();
    for (VertexMask f : k.maximal_faces())
        facets.push_back(to_simplex(f));
    j["complex"] = {{"vertices", k.vertex_count()}, {"faces", facets}};
    j["target"] = target_name(d.target);
    j["dims"] = d.dims;
    j["max_dim"] = d.max_dim;
    j["truncated"] = d.truncated;
    ordered_json summands = ordered_json::array();
    for (size_t i = 0; i < d.summands.size();) {
        size_t e = i;
        ordered_json labels = ordered_json::array();
        while (e < d.summands.size() && d.summands[e].dimension == d.summands[i].dimension &&
               d.summands[e].provenance == d.summands[i].provenance) {
            if (d.summands[e].label)
                labels.push_back(label_to_json(*d.summands[e].label));
            ++e;
        }
        summands.push_back({{"dimension", d.summands[i].dimension},
                            {"count", e - i},
                            {"labels", labels},
                            {"provenance", provenance_name(d.summands[i].provenance)}});
        i = e;
    }
    j["summands"] = summands;
    ordered_json rejected = ordered_json::array();
    for (const auto& l : d.rejected)
        rejected.push_back(label_to_json(l));
    j["rejected"] = rejected;
    ordered_json flags = ordered_json::array();
    for (const auto& f : d.flags) {
        ordered_json routes;
        for (const auto& [name, c] : f.routes)
            routes[name] = c;
        flags.push_back({{"dimension", f.dimension}, {"routes", routes}});
    }
    j["flags"] = flags;
    j["consistency"] = report_to_json(d.report);
    return j;
}

}  // namespace mfc
