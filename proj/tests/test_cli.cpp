#include "mfc/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace mfc;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(MFC_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("analyze reports the classification")
{
    auto r = run({"analyze", fixture("K1.sc")});
    CHECK(r.code == kExitClean);
    CHECK(r.out.find("MF(K): (3,4) (1,2,3) (1,2,4)") != std::string::npos);
    CHECK(r.out.find("faces by dimension: 0:4 1:5") != std::string::npos);
    auto k2 = run({"analyze", fixture("K2.sc")});
    CHECK(k2.out.find("MF-complex: no (witness face (1,4))") != std::string::npos);
    auto bounded = run({"analyze", fixture("K3.sc"), "--shift-search-bound", "4"});
    CHECK(bounded.code == kExitClean);
    CHECK(bounded.out.find("shifted(any): not checked") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run({"decompose", fixture("K1.sc")}).code == kExitClean);
    CHECK(run({"decompose", fixture("skel_4_2.sc")}).code == kExitFlagged);
    CHECK(run({"check", fixture("skel_4_2.sc"), "--max-dim", "8"}).code == kExitFlagged);
    CHECK(run({"analyze", fixture("bad_syntax.sc")}).code == kExitParse);
    CHECK(run({"analyze", fixture("bad_range.sc")}).code == kExitParse);
    CHECK(run({"analyze", "--json"}).code == kExitParse);
    CHECK(run({"decompose", fixture("K2.sc")}).code == kExitPrecondition);
    CHECK(run({"porter", "5", "0"}).code == kExitPrecondition);
    CHECK(run({"allday", "--dims", "1,1,1", "--max-degree", "12", "--budget-words", "50"}).code == kExitFlagged);
    CHECK(run({"--help"}).code == kExitClean);
    CHECK(run({}).code == kExitParse);
    auto e = run({"decompose", fixture("K2.sc")});
    CHECK(e.out.empty());
    CHECK(e.err.find("(1,4)") != std::string::npos);
}

TEST_CASE("loop-homology reports factorization")
{
    auto r = run({"loop-homology", fixture("K1.sc"), "--max-degree", "6"});
    CHECK(r.code == kExitClean);
    CHECK(r.out.find("kernel generators g = t^2 + 2t^4 + 2t^5 + O(t^7)") != std::string::npos);
    auto s = run({"loop-homology", fixture("tri.sc"), "--target", "spheres", "--dims", "1,1,1", "--max-degree", "8"});
    CHECK(s.code == kExitClean);
    auto j = nlohmann::json::parse(run({"loop-homology", fixture("skel_4_2.sc"), "--max-degree", "6", "--json"}).out);
    CHECK(j["kernel_generators"] == nlohmann::json::array({0, 0, 0, 0, 4, 4, 0}));
}

TEST_CASE("allday compares conventions")
{
    auto ext = run({"allday", "--dims", "1,1,1", "--max-degree", "8", "--check-bubenik", "--json"});
    auto poly = run({"allday", "--dims", "1,1,1", "--max-degree", "8", "--check-bubenik", "--convention",
                     "polynomial-all", "--json"});
    CHECK(ext.code == kExitFlagged);
    CHECK(poly.code == kExitClean);
    auto je = nlohmann::json::parse(ext.out), jp = nlohmann::json::parse(poly.out);
    CHECK(je["homology"] == jp["homology"]);
    CHECK(je["bubenik"]["first_mismatch"] == 2);
    CHECK(jp["bubenik"]["agree"] == true);
    auto prod = run({"allday", "--dims", "1,1", "--product", "--max-degree", "6"});
    CHECK(prod.out.find("homology (d <= 6): 1 2 3 4 5 6 7") != std::string::npos);
}

TEST_CASE("output is deterministic")
{
    for (std::vector<std::string> args : {std::vector<std::string>{"decompose", fixture("K3.sc"), "--json"},
                                          std::vector<std::string>{"check", fixture("K1.sc")},
                                          std::vector<std::string>{"porter", "5", "2", "--json"}}) {
        auto a = run(args), b = run(args);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}
