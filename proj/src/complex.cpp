#include "mfc/complex.hpp"

#include "mfc/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <json.hpp>
#include <numeric>
#include <sstream>

namespace mfc {

VertexMask to_mask(const Simplex& s)
{
    VertexMask m = 0;
    for (int v : s) {
        if (v < 1 || v > kMaxVertices)
            throw PreconditionError("vertex " + std::to_string(v) + " out of range");
        m |= VertexMask{1} << (v - 1);
    }
    return m;
}

Simplex to_simplex(VertexMask m)
{
    Simplex s;
    while (m) {
        s.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return s;
}

int cardinality(VertexMask m) { return std::popcount(m); }

std::string format_simplex(const Simplex& s)
{
    std::string out = "(";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(s[i]);
    }
    return out + ")";
}

namespace {

/* (cardinality, lexicographic on the increasing vertex list) */
bool face_less(VertexMask a, VertexMask b)
{
    int ca = cardinality(a), cb = cardinality(b);
    if (ca != cb)
        return ca < cb;
    return to_simplex(a) < to_simplex(b);
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n, const std::vector<Simplex>& generators) : n_(n)
{
    if (n < 1 || n > kMaxVertices)
        throw PreconditionError("vertex count must lie in 1.." + std::to_string(kMaxVertices));
    for (int i = 0; i < n; ++i)
        faces_.insert(VertexMask{1} << i);
    for (const auto& g : generators) {
        for (int v : g)
            if (v < 1 || v > n)
                throw PreconditionError("vertex index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        VertexMask m = to_mask(g);
        if (m == 0 || faces_.count(m))
            continue;
        // enumerate all nonempty submasks
        for (VertexMask s = m; s; s = (s - 1) & m)
            faces_.insert(s);
    }
    ordered_.assign(faces_.begin(), faces_.end());
    std::sort(ordered_.begin(), ordered_.end(), face_less);
}

std::vector<VertexMask> SimplicialComplex::maximal_faces() const
{
    std::vector<VertexMask> out;
    for (VertexMask f : ordered_) {
        bool maximal = true;
        for (int v = 0; v < n_ && maximal; ++v) {
            VertexMask bit = VertexMask{1} << v;
            if (!(f & bit) && faces_.count(f | bit))
                maximal = false;
        }
        if (maximal)
            out.push_back(f);
    }
    return out;
}

std::vector<int> SimplicialComplex::f_vector() const
{
    std::vector<int> f;
    for (VertexMask m : ordered_) {
        size_t d = cardinality(m) - 1;
        if (f.size() <= d)
            f.resize(d + 1, 0);
        ++f[d];
    }
    return f;
}

/* ---------------------------------------------------------------- parsing */

namespace {

std::string_view trim(std::string_view s)
{
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<long> parse_ints(std::string_view s, int line)
{
    std::vector<long> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        if (i >= s.size())
            break;
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        long v = 0;
        auto tok = s.substr(i, j - i);
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
        out.push_back(v);
        i = j;
    }
    return out;
}

SimplicialComplex parse_json_complex(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_number_integer())
        throw ParseError(0, "JSON complex needs an integer \"vertices\" field");
    long n = doc["vertices"].get<long>();
    if (n < 1)
        throw ParseError(0, "vertex count must be positive");
    if (n > kMaxVertices)
        throw ParseError(0, "vertex count exceeds " + std::to_string(kMaxVertices));
    std::vector<Simplex> gens;
    if (doc.contains("faces")) {
        if (!doc["faces"].is_array())
            throw ParseError(0, "\"faces\" must be an array of arrays");
        for (const auto& f : doc["faces"]) {
            if (!f.is_array())
                throw ParseError(0, "\"faces\" must be an array of arrays");
            Simplex s;
            for (const auto& v : f) {
                if (!v.is_number_integer())
                    throw ParseError(0, "face entries must be integers");
                long x = v.get<long>();
                if (x < 1 || x > n)
                    throw ParseError(0, "vertex index " + std::to_string(x) + " out of range 1.." + std::to_string(n));
                s.push_back(static_cast<int>(x));
            }
            gens.push_back(std::move(s));
        }
    }
    return SimplicialComplex(static_cast<int>(n), gens);
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text)
{
    if (auto t = trim(text); !t.empty() && t.front() == '{')
        return parse_json_complex(t);

    std::optional<long> n;
    int n_line = 0;
    struct PendingFace {
        int line;
        std::vector<long> vertices;
    };
    std::vector<PendingFace> pending;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        // ';' separates declarations sharing one physical line
        size_t dpos = 0;
        while (dpos <= line.size()) {
            size_t semi = line.find(';', dpos);
            std::string_view decl =
                trim(line.substr(dpos, semi == std::string_view::npos ? std::string_view::npos : semi - dpos));
            dpos = semi == std::string_view::npos ? line.size() + 1 : semi + 1;
            if (decl.empty())
                continue;
            size_t colon = decl.find(':');
            if (colon == std::string_view::npos)
                throw ParseError(line_no, "expected 'vertices:' or 'face:' declaration");
            auto key = trim(decl.substr(0, colon));
            auto rest = decl.substr(colon + 1);
            if (key == "vertices") {
                if (n)
                    throw ParseError(line_no, "duplicate 'vertices:' declaration (first on line " +
                                                  std::to_string(n_line) + ")");
                auto vals = parse_ints(rest, line_no);
                if (vals.size() != 1)
                    throw ParseError(line_no, "'vertices:' takes exactly one integer");
                if (vals[0] < 1)
                    throw ParseError(line_no, "vertex count must be positive");
                if (vals[0] > kMaxVertices)
                    throw ParseError(line_no, "vertex count exceeds " + std::to_string(kMaxVertices));
                n = vals[0];
                n_line = line_no;
            } else if (key == "face") {
                auto vals = parse_ints(rest, line_no);
                if (vals.empty())
                    throw ParseError(line_no, "'face:' needs at least one vertex");
                pending.push_back({line_no, std::move(vals)});
            } else {
                throw ParseError(line_no, "unknown declaration '" + std::string(key) + "'");
            }
        }
    }
    if (!n)
        throw ParseError(0, "missing 'vertices:' declaration");

    std::vector<Simplex> gens;
    for (const auto& f : pending) {
        Simplex s;
        for (long v : f.vertices) {
            if (v < 1 || v > *n)
                throw ParseError(f.line, "vertex index " + std::to_string(v) + " out of range 1.." + std::to_string(*n));
            s.push_back(static_cast<int>(v));
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ParseError(f.line, "repeated vertex in face");
        gens.push_back(std::move(s));
    }
    return SimplicialComplex(static_cast<int>(*n), gens);
}

std::string serialize_complex(const SimplicialComplex& k)
{
    std::ostringstream os;
    os << "vertices: " << k.vertex_count() << '\n';
    for (VertexMask f : k.maximal_faces()) {
        if (cardinality(f) < 2)
            continue;
        os << "face:";
        for (int v : to_simplex(f))
            os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

/* ------------------------------------------------------------ combinatorics */

std::vector<MissingFace> missing_faces(const SimplicialComplex& k)
{
    // A minimal non-face sigma is grown exactly once, from the face sigma - max(sigma).
    const int n = k.vertex_count();
    std::vector<VertexMask> found;
    for (VertexMask f : k.faces()) {
        int top = 64 - std::countl_zero(f);  // highest vertex in f (1-based)
        for (int v = top + 1; v <= n; ++v) {
            VertexMask cand = f | (VertexMask{1} << (v - 1));
            if (k.contains(cand))
                continue;
            bool minimal = true;
            for (VertexMask rest = cand; rest && minimal; rest &= rest - 1) {
                VertexMask bit = rest & -rest;
                if (!k.contains(cand & ~bit))
                    minimal = false;
            }
            if (minimal)
                found.push_back(cand);
        }
    }
    std::sort(found.begin(), found.end(), face_less);
    std::vector<MissingFace> out;
    out.reserve(found.size());
    for (VertexMask m : found)
        out.push_back({to_simplex(m)});
    return out;
}

MfVerdict is_mf_complex(const SimplicialComplex& k)
{
    auto mf = missing_faces(k);
    std::vector<VertexMask> masks;
    for (const auto& s : mf)
        masks.push_back(s.mask());
    for (VertexMask f : k.maximal_faces()) {
        bool covered = std::any_of(masks.begin(), masks.end(), [f](VertexMask s) { return (f & s) == f && f != s; });
        if (!covered)
            return {false, to_simplex(f)};
    }
    return {true, std::nullopt};
}

namespace {

void check_ordering(int n, const std::vector<int>& ordering)
{
    if (static_cast<int>(ordering.size()) != n)
        throw PreconditionError("ordering must list all " + std::to_string(n) + " vertices");
    std::vector<bool> seen(n + 1, false);
    for (int v : ordering) {
        if (v < 1 || v > n || seen[v])
            throw PreconditionError("ordering is not a permutation of 1..n");
        seen[v] = true;
    }
}

bool shifted_unchecked(const SimplicialComplex& k, const std::vector<int>& ordering)
{
    const int n = k.vertex_count();
    std::vector<int> pos(n + 1);
    for (int i = 0; i < n; ++i)
        pos[ordering[i]] = i;
    for (VertexMask f : k.faces()) {
        for (int v : to_simplex(f)) {
            VertexMask without = f & ~(VertexMask{1} << (v - 1));
            for (int i = 0; i < pos[v]; ++i) {
                int w = ordering[i];
                VertexMask wb = VertexMask{1} << (w - 1);
                if (f & wb)
                    continue;
                if (!k.contains(without | wb))
                    return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_shifted(const SimplicialComplex& k, const std::vector<int>& ordering)
{
    check_ordering(k.vertex_count(), ordering);
    return shifted_unchecked(k, ordering);
}

ShiftedVerdict is_shifted_any(const SimplicialComplex& k, int search_bound)
{
    if (k.vertex_count() > search_bound)
        throw PreconditionError("shifted search needs n <= " + std::to_string(search_bound) + " (n = " +
                                std::to_string(k.vertex_count()) + ")");
    std::vector<int> order(k.vertex_count());
    std::iota(order.begin(), order.end(), 1);
    do {
        if (shifted_unchecked(k, order))
            return {true, order};
    } while (std::next_permutation(order.begin(), order.end()));
    return {false, std::nullopt};
}

SimplicialComplex skeleton_complex(int n, int k)
{
    if (n < 2 || n > kMaxVertices || k < 1 || k > n - 1)
        throw PreconditionError("skeleton_complex needs 1 <= k <= n-1 (got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
    const int size = n - k;
    std::vector<Simplex> gens;
    // all `size`-subsets of [n] in lexicographic order
    Simplex s(size);
    std::iota(s.begin(), s.end(), 1);
    while (true) {
        gens.push_back(s);
        int i = size - 1;
        while (i >= 0 && s[i] == n - size + i + 1)
            --i;
        if (i < 0)
            break;
        ++s[i];
        for (int j = i + 1; j < size; ++j)
            s[j] = s[j - 1] + 1;
    }
    return SimplicialComplex(n, gens);
}

std::optional<int> detect_skeleton(const SimplicialComplex& k)
{
    const int n = k.vertex_count();
    if (n < 2)
        return std::nullopt;
    auto f = k.f_vector();
    int top = static_cast<int>(f.size());  // vertices in the largest face
    int j = n - top;
    if (j < 1 || j > n - 1)
        return std::nullopt;
    // all subsets of size <= top must be present: compare face counts with binomials
    long total = 0, binom = 1;
    for (int s = 1; s <= top; ++s) {
        binom = binom * (n - s + 1) / s;
        total += binom;
    }
    if (static_cast<long>(k.faces().size()) != total)
        return std::nullopt;
    return j;
}

Simplex j_complement(const MissingFace& sigma, int n)
{
    Simplex out;
    for (int v = 1; v <= n; ++v)
        if (!std::binary_search(sigma.vertices.begin(), sigma.vertices.end(), v))
            out.push_back(v);
    return out;
}

}  // namespace mfc
