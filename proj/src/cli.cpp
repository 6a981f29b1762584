#include "mfc/cli.hpp"

#include "mfc/allday.hpp"
#include "mfc/complex.hpp"
#include "mfc/decompose.hpp"
#include "mfc/error.hpp"
#include "mfc/rewriting.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mfc {

namespace {

using nlohmann::ordered_json;

SimplicialComplex load_complex(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_complex(ss.str());
}

ordered_json series_json(const TruncatedSeries& s) { return s.coefficients(); }

std::string coefficient_list(const TruncatedSeries& s) { return fmt::format("{}", fmt::join(s.coefficients(), " ")); }

void require_dims(const RunConfig& c, int n)
{
    if (c.target != Target::Spheres)
        return;
    if (static_cast<int>(c.dims.size()) != n)
        throw PreconditionError(fmt::format("--dims needs {} entries for this complex (got {})", n, c.dims.size()));
}

std::string mf_list(const std::vector<MissingFace>& mfs)
{
    std::vector<std::string> parts;
    for (const auto& m : mfs)
        parts.push_back(format_simplex(m.vertices));
    return parts.empty() ? "none" : fmt::format("{}", fmt::join(parts, " "));
}

ordered_json complex_json(const SimplicialComplex& k)
{
    ordered_json facets = ordered_json::array();
    for (VertexMask f : k.maximal_faces())
        facets.push_back(to_simplex(f));
    return {{"vertices", k.vertex_count()}, {"faces", facets}};
}

void print_decomposition(const WedgeDecomposition& d, std::ostream& out)
{
    out << (d.target == Target::Cp ? "Z_K ≃ " : "Z_K(S) ≃ ") << d.wedge_string() << '\n';
    for (const auto& s : d.summands) {
        out << fmt::format("  S^{:<3} ", s.dimension);
        if (s.label)
            out << s.label->str() << '\n';
        else
            out << "(unlabeled, " << provenance_name(s.provenance) << ")\n";
    }
    if (!d.rejected.empty()) {
        std::vector<std::string> r;
        for (const auto& l : d.rejected)
            r.push_back(l.str());
        out << "rejected candidates: " << fmt::format("{}", fmt::join(r, " ")) << '\n';
    }
    out << "routes: " << fmt::format("{}", fmt::join(d.report.routes, " ")) << '\n';
    for (const auto& row : d.report.rows) {
        out << fmt::format("  dim {:>2}:", row.dimension);
        for (const auto& [name, c] : row.counts)
            out << fmt::format(" {}={}", name, c);
        out << (row.agree ? "  agree" : "  MISMATCH") << '\n';
    }
    for (const auto& f : d.flags)
        out << f.str() << '\n';
}

}  // namespace

int run_analyze(const RunConfig& c, std::ostream& out, std::ostream&)
{
    SimplicialComplex k = load_complex(c.input);
    auto mfs = missing_faces(k);
    auto mf = is_mf_complex(k);
    std::vector<int> identity(k.vertex_count());
    for (int i = 0; i < k.vertex_count(); ++i)
        identity[i] = i + 1;
    const bool shifted_id = is_shifted(k, identity);
    std::optional<ShiftedVerdict> any;
    if (k.vertex_count() <= c.shift_search_bound)
        any = is_shifted_any(k, c.shift_search_bound);

    if (c.json) {
        ordered_json j;
        j["command"] = "analyze";
        j["complex"] = complex_json(k);
        j["f_vector"] = k.f_vector();
        ordered_json m = ordered_json::array();
        for (const auto& f : mfs)
            m.push_back(f.vertices);
        j["missing_faces"] = m;
        j["mf_complex"] = mf.is_mf;
        j["witness"] = mf.witness ? ordered_json(*mf.witness) : ordered_json(nullptr);
        j["shifted_identity"] = shifted_id;
        if (any)
            j["shifted_any"] = {{"checked", true},
                                {"shifted", any->shifted},
                                {"ordering", any->ordering ? ordered_json(*any->ordering) : ordered_json(nullptr)}};
        else
            j["shifted_any"] = {{"checked", false}, {"shifted", nullptr}, {"ordering", nullptr}};
        out << j.dump(2) << '\n';
        return kExitClean;
    }
    out << "vertices: " << k.vertex_count() << '\n';
    auto f = k.f_vector();
    out << "faces by dimension:";
    for (size_t d = 0; d < f.size(); ++d)
        out << ' ' << d << ':' << f[d];
    out << '\n';
    out << "MF(K): " << mf_list(mfs) << '\n';
    if (mf.is_mf)
        out << "MF-complex: yes\n";
    else if (mf.witness)
        out << "MF-complex: no (witness face " << format_simplex(*mf.witness) << ")\n";
    else
        out << "MF-complex: no (no missing faces)\n";
    out << "shifted(identity): " << (shifted_id ? "yes" : "no") << '\n';
    if (!any)
        out << "shifted(any): not checked (n > " << c.shift_search_bound << ")\n";
    else if (any->shifted)
        out << "shifted(any): yes (ordering " << fmt::format("{}", fmt::join(*any->ordering, " ")) << ")\n";
    else
        out << "shifted(any): no\n";
    return kExitClean;
}

int run_decompose(const RunConfig& c, std::ostream& out, std::ostream&)
{
    SimplicialComplex k = load_complex(c.input);
    require_dims(c, k.vertex_count());
    WedgeDecomposition d;
    if (c.target == Target::Cp) {
        d = decompose_cp(k, c.max_dim, c.budget_words);
    } else {
        if (!c.max_dim)
            throw PreconditionError("--target spheres needs --max-dim");
        d = decompose_spheres(k, c.dims, *c.max_dim, c.convention, c.budget_words);
    }
    if (c.json) {
        ordered_json j;
        j["command"] = "decompose";
        ordered_json body = decomposition_to_json(k, d);
        for (auto& [key, v] : body.items())
            j[key] = v;
        if (c.target == Target::Spheres)
            j["convention"] = convention_name(c.convention);
        out << j.dump(2) << '\n';
    } else {
        print_decomposition(d, out);
    }
    return d.flags.empty() ? kExitClean : kExitFlagged;
}

int run_loop_homology(const RunConfig& c, std::ostream& out, std::ostream&)
{
    SimplicialComplex k = load_complex(c.input);
    require_dims(c, k.vertex_count());
    Presentation p = c.target == Target::Cp ? build_cp_presentation(k) : build_sphere_presentation(k, c.dims, c.convention);
    const TruncatedSeries total = graded_dimensions(p, c.max_degree, DimensionRoute::Rewriting, c.budget_words);
    DegreeList abelian_gens;
    for (int i = 1; i <= k.vertex_count(); ++i)
        abelian_gens.add(c.target == Target::Cp ? 1 : c.dims[i - 1]);
    const Convention conv = c.target == Target::Cp ? Convention::ExteriorOnOdd : c.convention;
    const TruncatedSeries abelian = free_gc_series(abelian_gens, conv, c.max_degree);
    std::optional<TruncatedSeries> g;
    std::optional<FactorizationError> failure;
    try {
        g = kernel_generator_series(total, abelian);
    } catch (const FactorizationError& e) {
        failure = e;
    }

    if (c.json) {
        ordered_json j;
        j["command"] = "loop-homology";
        j["complex"] = complex_json(k);
        j["max_degree"] = c.max_degree;
        j["presentation"] = presentation_to_json(p);
        j["dimensions"] = series_json(total);
        j["abelian"] = series_json(abelian);
        if (g)
            j["kernel_generators"] = series_json(*g);
        else
            j["kernel_generators"] = nullptr;
        j["factorization"] = failure ? ordered_json{{"ok", false}, {"degree", failure->degree()}, {"message", failure->what()}}
                                     : ordered_json{{"ok", true}, {"degree", nullptr}, {"message", nullptr}};
        out << j.dump(2) << '\n';
    } else {
        out << "target: " << target_name(p.target);
        if (p.target == Target::Spheres)
            out << "  convention: " << convention_name(p.convention);
        out << '\n';
        out << "generators:\n";
        for (const auto& gen : p.generators)
            out << fmt::format("  {:<12} degree {}\n", gen.name, gen.degree);
        out << "relations (" << p.relations.size() << "):\n";
        for (const auto& r : p.relations)
            out << "  " << p.str(r) << '\n';
        out << "graded dimensions (d <= " << c.max_degree << "): " << coefficient_list(total) << '\n';
        out << "abelian part: " << abelian.str() << '\n';
        if (g)
            out << "kernel generators g = " << g->str() << '\n';
        else
            out << "factorization FAILED at degree " << failure->degree() << ": " << failure->what() << '\n';
    }
    return failure ? kExitFlagged : kExitClean;
}

int run_allday(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    if (c.dims.empty())
        throw PreconditionError("allday needs --dims");
    DGAModel model = c.product ? build_product_model(c.dims) : build_fat_wedge_model(c.dims);
    std::map<int, int> by_degree;
    for (const auto& g : model.generators)
        ++by_degree[g.degree];
    DSquaredVerdict dd = check_d_squared(model, c.max_degree + 1);
    HomologyReport h = homology_report(model, c.max_degree + 1, c.budget_words);
    for (size_t d = 0; d < h.words.size(); ++d)
        if (h.words[d] > 1'000'000)
            err << "warning: degree " << d << " has " << h.words[d] << " words\n";
    std::optional<TruncatedSeries> bub;
    std::optional<int> mismatch;
    if (c.check_bubenik) {
        bub = bubenik_series(c.dims, c.convention, c.max_degree);
        for (int d = 0; d <= c.max_degree && !mismatch; ++d)
            if ((*bub)[d] != h.series[d])
                mismatch = d;
    }
    if (c.json) {
        ordered_json j;
        j["command"] = "allday";
        j["model"] = c.product ? "product" : "fat-wedge";
        j["dims"] = c.dims;
        j["max_degree"] = c.max_degree;
        ordered_json gens = ordered_json::object();
        for (auto [d, n] : by_degree)
            gens[std::to_string(d)] = n;
        j["generators_by_degree"] = gens;
        j["d_squared"] = {{"ok", dd.ok}, {"witness", dd.ok ? ordered_json(nullptr) : ordered_json(dd.witness_text)}};
        j["homology"] = series_json(h.series);
        if (bub)
            j["bubenik"] = {{"convention", convention_name(c.convention)},
                            {"series", series_json(*bub)},
                            {"agree", !mismatch},
                            {"first_mismatch", mismatch ? ordered_json(*mismatch) : ordered_json(nullptr)}};
        out << j.dump(2) << '\n';
    } else {
        out << "model: " << (c.product ? "product" : "fat wedge") << ", dims " << fmt::format("{}", fmt::join(c.dims, ","))
            << ", max degree " << c.max_degree << '\n';
        out << "generators by degree:";
        for (auto [d, n] : by_degree)
            out << ' ' << d << ':' << n;
        out << '\n';
        out << "d^2=0: " << (dd.ok ? "ok" : "FAILED at " + dd.witness_text) << '\n';
        out << "homology (d <= " << c.max_degree << "): " << coefficient_list(h.series) << '\n';
        if (bub) {
            out << "closed form (" << convention_name(c.convention) << "): " << coefficient_list(*bub) << '\n';
            out << "homology == Bubenik closed form: "
                << (mismatch ? fmt::format("MISMATCH at degree {}", *mismatch) : std::string("ok")) << '\n';
        }
    }
    return dd.ok && !mismatch ? kExitClean : kExitFlagged;
}

int run_porter(const RunConfig& c, std::ostream& out, std::ostream&)
{
    if (!c.dims.empty() && static_cast<int>(c.dims.size()) != c.porter_n)
        throw PreconditionError("--dims needs n entries");
    const int max_dim = c.max_dim.value_or(2 * c.porter_n + 1);
    WedgeDecomposition d = porter_fnk(c.porter_n, c.porter_k, c.dims, max_dim);
    if (c.json) {
        ordered_json j;
        j["command"] = "porter";
        j["n"] = c.porter_n;
        j["k"] = c.porter_k;
        ordered_json body = decomposition_to_json(skeleton_complex(c.porter_n, c.porter_k), d);
        for (auto& [key, v] : body.items())
            j[key] = v;
        out << j.dump(2) << '\n';
    } else {
        out << fmt::format("F^{}_{} ≃ ", c.porter_n, c.porter_k) << d.wedge_string() << '\n';
    }
    return kExitClean;
}

int run_check(const RunConfig& c, std::ostream& out, std::ostream&)
{
    SimplicialComplex k = load_complex(c.input);
    require_dims(c, k.vertex_count());
    int max_dim;
    if (c.max_dim)
        max_dim = *c.max_dim;
    else if (c.target == Target::Cp)
        max_dim = default_cp_max_dim(k);
    else
        throw PreconditionError("--target spheres needs --max-dim");
    ConsistencyReport r = consistency_report(k, c.target, c.dims, max_dim, c.convention);
    if (c.json) {
        ordered_json j;
        j["command"] = "check";
        j["complex"] = complex_json(k);
        j["target"] = target_name(c.target);
        ordered_json body = report_to_json(r);
        for (auto& [key, v] : body.items())
            j[key] = v;
        out << j.dump(2) << '\n';
    } else {
        out << "routes: " << fmt::format("{}", fmt::join(r.routes, " ")) << '\n';
        for (const auto& row : r.rows) {
            out << fmt::format("dim {:>2}:", row.dimension);
            for (const auto& [name, n] : row.counts)
                out << fmt::format(" {}={}", name, n);
            out << (row.agree ? "  agree" : "  MISMATCH") << '\n';
        }
        out << "verdict: " << (r.all_agree() ? "all routes agree" : "routes disagree") << '\n';
    }
    return r.all_agree() ? kExitClean : kExitFlagged;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Missing-face combinatorics, loop homology and wedge decompositions of moment-angle complexes"};
    app.require_subcommand(1);
    RunConfig c;
    std::string target = "cp", convention = "exterior-on-odd";
    std::optional<int> max_dim;

    auto common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("input", c.input, "complex file (text or JSON)")->required();
        sub->add_flag("--json", c.json, "machine-readable output");
    };
    auto targeted = [&](CLI::App* sub) {
        sub->add_option("--target", target, "cp or spheres")->check(CLI::IsMember({"cp", "spheres"}));
        sub->add_option("--dims", c.dims, "sphere dimensions m_1,...,m_n (spheres target)")->delimiter(',');
        sub->add_option("--convention", convention, "exterior-on-odd or polynomial-all")
            ->check(CLI::IsMember({"exterior-on-odd", "polynomial-all"}));
        sub->add_option("--budget-words", c.budget_words, "cap on words per degree")->check(CLI::PositiveNumber);
    };

    auto* analyze = app.add_subcommand("analyze", "missing faces, MF-complex and shifted tests (a full simplex is not MF)");
    common(analyze, true);
    analyze->add_option("--shift-search-bound", c.shift_search_bound, "largest n for the exhaustive ordering search")
        ->check(CLI::PositiveNumber);

    auto* decompose = app.add_subcommand("decompose", "labeled wedge decomposition of the moment-angle complex");
    common(decompose, true);
    targeted(decompose);
    decompose->add_option("--max-dim", max_dim, "largest sphere dimension")->check(CLI::PositiveNumber);

    auto* loop = app.add_subcommand("loop-homology", "presentation and graded dimensions of the loop homology");
    common(loop, true);
    targeted(loop);
    loop->add_option("--max-degree", c.max_degree, "largest degree")->check(CLI::NonNegativeNumber);

    auto* allday = app.add_subcommand("allday", "dg model of a fat wedge of spheres");
    common(allday, false);
    allday->add_option("--dims", c.dims, "sphere dimensions m_1,...,m_n")->delimiter(',')->required();
    allday->add_option("--max-degree", c.max_degree, "largest homology degree")->check(CLI::NonNegativeNumber);
    allday->add_option("--convention", convention, "convention of the closed form")
        ->check(CLI::IsMember({"exterior-on-odd", "polynomial-all"}));
    allday->add_flag("--check-bubenik", c.check_bubenik, "compare with the closed form (n >= 3)");
    allday->add_flag("--product", c.product, "add the top generator (product of spheres)");
    allday->add_option("--budget-words", c.budget_words, "cap on words per degree")->check(CLI::PositiveNumber);

    auto* porter = app.add_subcommand("porter", "wedge decomposition of F^n_k");
    common(porter, false);
    porter->add_option("n", c.porter_n, "number of factors")->required();
    porter->add_option("k", c.porter_k, "at least k coordinates at the basepoint")->required();
    porter->add_option("--dims", c.dims, "sphere dimensions (default: CP^infinity factors)")->delimiter(',');
    porter->add_option("--max-dim", max_dim, "largest sphere dimension")->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check", "consistency report across all counting routes");
    common(check, true);
    targeted(check);
    check->add_option("--max-dim", max_dim, "largest sphere dimension")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitClean;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitClean;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }
    c.target = target == "spheres" ? Target::Spheres : Target::Cp;
    c.convention = parse_convention(convention);
    c.max_dim = max_dim;

    try {
        CLI::App* sub = app.get_subcommands().front();
        c.command = sub->get_name();
        if (c.command == "analyze")
            return run_analyze(c, out, err);
        if (c.command == "decompose")
            return run_decompose(c, out, err);
        if (c.command == "loop-homology")
            return run_loop_homology(c, out, err);
        if (c.command == "allday")
            return run_allday(c, out, err);
        if (c.command == "porter")
            return run_porter(c, out, err);
        return run_check(c, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const FactorizationError& e) {
        err << "factorization failed at degree " << e.degree() << ": " << e.what() << '\n';
        return kExitFlagged;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded (complete through degree " << e.reached_degree() << "): " << e.what() << '\n';
        return kExitFlagged;
    } catch (const std::overflow_error& e) {
        err << "arithmetic overflow: " << e.what() << '\n';
        return kExitFlagged;
    }
}

}  // namespace mfc
