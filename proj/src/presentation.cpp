#include "mfc/presentation.hpp"

#include "mfc/error.hpp"

#include <algorithm>
#include <functional>

namespace mfc {

namespace {

void require_mf_or_simplex(const SimplicialComplex& k)
{
    if (missing_faces(k).empty())
        return;
    auto v = is_mf_complex(k);
    if (!v.is_mf)
        throw PreconditionError("not an MF-complex: face " + format_simplex(*v.witness) +
                                " lies in no missing face");
}

std::vector<int> indicator(const Simplex& s, int n)
{
    std::vector<int> m(n, 0);
    for (int v : s)
        m[v - 1] = 1;
    return m;
}

void require_no_edges_missing(const SimplicialComplex& k)
{
    for (const auto& mf : missing_faces(k))
        if (mf.vertices.size() == 2)
            throw PreconditionError("missing face " + format_simplex(mf.vertices) +
                                    " has two vertices; use the series route instead");
}

std::vector<std::pair<int, int>> edges(const SimplicialComplex& k)
{
    std::vector<std::pair<int, int>> out;
    const int n = k.vertex_count();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (k.contains(Simplex{i, j}))
                out.emplace_back(i, j);
    return out;
}

Presentation skeleton_presentation(const SimplicialComplex& k, Target target, const std::vector<int>& dims,
                                   Convention convention)
{
    Presentation p;
    p.target = target;
    p.convention = convention;
    p.vertex_count = k.vertex_count();
    p.dims = dims;
    const int n = k.vertex_count();
    for (int i = 1; i <= n; ++i) {
        PresentationGenerator g;
        g.name = "b" + std::to_string(i);
        g.degree = target == Target::Cp ? 1 : dims[i - 1];
        g.kind = PresentationGenerator::Kind::Coordinate;
        g.vertex = i;
        g.multidegree = indicator(Simplex{i}, n);
        p.generators.push_back(std::move(g));
    }
    for (const auto& mf : missing_faces(k)) {
        if (mf.vertices.size() < 3)
            continue;
        PresentationGenerator g;
        g.name = "u" + format_simplex(mf.vertices);
        g.degree = higher_degree(mf.vertices, target, dims);
        g.kind = PresentationGenerator::Kind::Higher;
        g.sigma = mf.vertices;
        g.multidegree = indicator(mf.vertices, n);
        p.generators.push_back(std::move(g));
    }
    return p;
}

}  // namespace

const char* target_name(Target t) { return t == Target::Cp ? "cp" : "spheres"; }

std::vector<int> Presentation::degrees() const
{
    std::vector<int> d;
    for (const auto& g : generators)
        d.push_back(g.degree);
    return d;
}

std::string Presentation::str(const Tensor& t) const
{
    return t.str([this](Letter l) { return letter_name(l); });
}

Letter Presentation::coordinate(int vertex) const
{
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i].kind == PresentationGenerator::Kind::Coordinate && generators[i].vertex == vertex)
            return static_cast<Letter>(i);
    throw PreconditionError("no coordinate generator b" + std::to_string(vertex));
}

std::optional<Letter> Presentation::higher_letter(const Simplex& sigma) const
{
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i].kind == PresentationGenerator::Kind::Higher && generators[i].sigma == sigma)
            return static_cast<Letter>(i);
    return std::nullopt;
}

int Presentation::degree_of(const Tensor& t) const
{
    auto d = t.homogeneous_degree(degrees());
    if (!d)
        throw PreconditionError("element is zero or not homogeneous");
    return *d;
}

Presentation make_presentation(const std::vector<int>& degrees, const std::vector<Tensor>& relations,
                               std::vector<std::string> names)
{
    Presentation p;
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] <= 0)
            throw PreconditionError("generator degrees must be positive");
        PresentationGenerator g;
        g.name = i < names.size() ? names[i] : "x" + std::to_string(i + 1);
        g.degree = degrees[i];
        p.generators.push_back(std::move(g));
    }
    for (const auto& r : relations) {
        for (const auto& [w, c] : r.terms())
            for (Letter l : w)
                if (l >= degrees.size())
                    throw PreconditionError("relation uses an undeclared generator");
        if (!r.is_zero() && !r.homogeneous_degree(degrees))
            throw PreconditionError("relations must be homogeneous");
    }
    p.relations = relations;
    return p;
}

int higher_degree(const Simplex& sigma, Target target, const std::vector<int>& dims)
{
    if (target == Target::Cp)
        return 2 * static_cast<int>(sigma.size()) - 2;
    int d = -2;
    for (int v : sigma)
        d += dims.at(v - 1) + 1;
    return d;
}

Presentation build_cp_presentation(const SimplicialComplex& k)
{
    require_mf_or_simplex(k);
    Presentation p = skeleton_presentation(k, Target::Cp, {}, Convention::ExteriorOnOdd);
    const int n = k.vertex_count();
    for (int i = 1; i <= n; ++i) {
        Tensor b = Tensor::letter(p.coordinate(i));
        p.relations.push_back(b * b);
    }
    for (auto [i, j] : edges(k))
        p.relations.push_back(graded_commutator(Tensor::letter(p.coordinate(i)), 1, Tensor::letter(p.coordinate(j)), 1));
    for (size_t l = 0; l < p.generators.size(); ++l) {
        const auto& g = p.generators[l];
        if (g.kind != PresentationGenerator::Kind::Higher)
            continue;
        for (int j : g.sigma)
            p.relations.push_back(graded_commutator(Tensor::letter(static_cast<Letter>(l)), g.degree,
                                                    Tensor::letter(p.coordinate(j)), 1));
    }
    return p;
}

Presentation build_sphere_presentation(const SimplicialComplex& k, const std::vector<int>& dims, Convention convention)
{
    require_mf_or_simplex(k);
    if (static_cast<int>(dims.size()) != k.vertex_count())
        throw PreconditionError("dims has " + std::to_string(dims.size()) + " entries but the complex has " +
                                std::to_string(k.vertex_count()) + " vertices");
    for (int m : dims)
        if (m < 1)
            throw PreconditionError("sphere dimensions m_i must be at least 1");
    Presentation p = skeleton_presentation(k, Target::Spheres, dims, convention);
    const int n = k.vertex_count();
    if (convention == Convention::ExteriorOnOdd)
        for (int i = 1; i <= n; ++i)
            if (dims[i - 1] % 2 == 1) {
                Tensor b = Tensor::letter(p.coordinate(i));
                p.relations.push_back(graded_commutator(b, dims[i - 1], b, dims[i - 1]));
            }
    for (auto [i, j] : edges(k))
        p.relations.push_back(graded_commutator(Tensor::letter(p.coordinate(i)), dims[i - 1],
                                                Tensor::letter(p.coordinate(j)), dims[j - 1]));
    return p;
}

Tensor higher_element(const Presentation& p, const Simplex& sigma)
{
    if (sigma.size() == 2) {
        Letter a = p.coordinate(sigma[0]), b = p.coordinate(sigma[1]);
        return graded_commutator(Tensor::letter(a), p.generators[a].degree, Tensor::letter(b), p.generators[b].degree);
    }
    auto l = p.higher_letter(sigma);
    if (!l)
        throw PreconditionError("no generator for missing face " + format_simplex(sigma));
    return Tensor::letter(*l);
}

Tensor iterated_bracket(const Presentation& p, const Tensor& x, int x_degree, const std::vector<int>& js)
{
    Tensor t = x;
    int d = x_degree;
    for (int j : js) {
        Letter b = p.coordinate(j);
        t = graded_commutator(t, d, Tensor::letter(b), p.generators[b].degree);
        d += p.generators[b].degree;
    }
    return t;
}

std::vector<BracketGenerator> enumerate_R_tilde(const SimplicialComplex& k)
{
    require_no_edges_missing(k);
    std::vector<BracketGenerator> out;
    const int n = k.vertex_count();
    for (const auto& mf : missing_faces(k)) {
        Simplex comp = j_complement(mf, n);
        const int c = static_cast<int>(comp.size());
        std::vector<std::vector<int>> subsets;
        for (unsigned bits = 0; bits < (1u << c); ++bits) {
            std::vector<int> js;
            for (int t = 0; t < c; ++t)
                if (bits >> t & 1u)
                    js.push_back(comp[t]);
            subsets.push_back(std::move(js));
        }
        std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        for (auto& js : subsets) {
            int deg = higher_degree(mf.vertices, Target::Cp, {}) + static_cast<int>(js.size());
            out.push_back({mf, std::move(js), deg, BracketGenerator::Flavor::StrictSubset});
        }
    }
    return out;
}

std::vector<BracketGenerator> enumerate_R(const SimplicialComplex& k, const std::vector<int>& dims, int max_degree)
{
    require_no_edges_missing(k);
    const int n = k.vertex_count();
    if (static_cast<int>(dims.size()) != n)
        throw PreconditionError("dims length must equal the vertex count");
    std::vector<BracketGenerator> out;
    for (const auto& mf : missing_faces(k)) {
        const int base = higher_degree(mf.vertices, Target::Spheres, dims);
        std::vector<int> js;
        std::vector<BracketGenerator> local;
        std::function<void(int, int)> rec = [&](int first, int deg) {
            local.push_back({mf, js, deg, BracketGenerator::Flavor::Multiset});
            for (int j = first; j <= n; ++j)
                if (deg + dims[j - 1] <= max_degree) {
                    js.push_back(j);
                    rec(j, deg + dims[j - 1]);
                    js.pop_back();
                }
        };
        if (base <= max_degree)
            rec(1, base);
        std::stable_sort(local.begin(), local.end(), [](const auto& a, const auto& b) {
            if (a.degree != b.degree)
                return a.degree < b.degree;
            return a.js.size() != b.js.size() ? a.js.size() < b.js.size() : a.js < b.js;
        });
        out.insert(out.end(), local.begin(), local.end());
    }
    return out;
}

nlohmann::ordered_json presentation_to_json(const Presentation& p)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["target"] = target_name(p.target);
    j["convention"] = convention_name(p.convention);
    ordered_json gens = ordered_json::array();
    for (const auto& g : p.generators) {
        ordered_json label;
        switch (g.kind) {
        case PresentationGenerator::Kind::Coordinate:
            label = {{"kind", "coordinate"}, {"vertex", g.vertex}};
            break;
        case PresentationGenerator::Kind::Higher:
            label = {{"kind", "higher"}, {"sigma", g.sigma}};
            break;
        case PresentationGenerator::Kind::Free:
            label = {{"kind", "free"}};
            break;
        }
        gens.push_back({{"name", g.name}, {"degree", g.degree}, {"label", label}});
    }
    j["generators"] = gens;
    ordered_json rels = ordered_json::array();
    for (const auto& r : p.relations) {
        ordered_json terms = ordered_json::array();
        for (const auto& [w, c] : r.terms()) {
            ordered_json names = ordered_json::array();
            for (Letter l : w)
                names.push_back(p.letter_name(l));
            terms.push_back(ordered_json::array({c, names}));
        }
        rels.push_back(terms);
    }
    j["relations"] = rels;
    return j;
}

}  // namespace mfc
