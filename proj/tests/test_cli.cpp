#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "revolve/cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = revolve::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    explicit TempDir(const std::string& tag)
        : path_(fs::temp_directory_path() / ("revolve_cli_" + std::to_string(::getpid()) + "_" + tag))
    {
        fs::remove_all(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string str() const { return path_.string(); }
    fs::path operator/(const std::string& name) const { return path_ / name; }
    bool exists() const { return fs::exists(path_); }

    std::vector<std::string> listing() const
    {
        std::vector<std::string> names;
        if (fs::exists(path_))
            for (const auto& e : fs::directory_iterator(path_))
                names.push_back(e.path().filename().string());
        std::sort(names.begin(), names.end());
        return names;
    }

private:
    fs::path path_;
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("classify-mean-inverse prints the branch")
{
    auto r = run({"classify-mean-inverse", "--mu", "0.5"});
    CHECK(r.code == 0);
    CHECK(r.out == "Parabolic\n");

    r = run({"classify-mean-inverse", "--mu", "0.25"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("Trigonometric theta=0.52359877559829", 0) == 0);

    r = run({"classify-mean-inverse", "--mu", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("Hyperbolic delta=1.3169578969248", 0) == 0);

    r = run({"classify-mean-inverse", "--mu", "0"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("kp = 1/x^2 verifies as a minimal surface")
{
    TempDir dir("catenoid");
    auto r = run({"prescribe", "--kind", "kp", "--expr", "1/x^2", "--domain", "1.001:3", "--out", dir.str()});
    REQUIRE(r.code == 0);
    CHECK(dir.listing() == std::vector<std::string>{"momentum.csv", "surface.json"});

    r = run({"verify", "--out", dir.str(), "--q", "-1"});
    REQUIRE_MESSAGE(r.code == 0, r.err);
    const Json report = Json::parse(r.out);
    CHECK(report == Json::parse(slurp(dir / "verify.json")));
    CHECK(report["mean_curvature"]["max_abs_analytic"].get<double>() < 1e-12);
    CHECK(report["mean_curvature"]["max_abs_discrete"].get<double>() < 1e-6);
    CHECK(report["checks"]["momentum_round_trip"]["max"].get<double>() < 1e-6);
    CHECK(report["checks"]["weingarten"]["max"].get<double>() < 1e-12);
    CHECK(report["pass"].get<bool>());
}

TEST_CASE("sampled cycloid has K_G x = 1/4")
{
    TempDir dir("cycloid");
    auto r = run({"catalog", "build", "transonducycloid", "--param", "R=1", "--param", "a=0",
                  "--out", dir.str()});
    REQUIRE_MESSAGE(r.code == 0, r.err);
    r = run({"verify", "--out", dir.str()});
    REQUIRE_MESSAGE(r.code == 0, r.err);
    const Json report = Json::parse(r.out);
    CHECK(std::abs(report["gauss_times_x"]["min"].get<double>() - 0.25) <= 1e-3);
    CHECK(std::abs(report["gauss_times_x"]["max"].get<double>() - 0.25) <= 1e-3);
}

TEST_CASE("constraint check separates coupled and mismatched constants")
{
    TempDir dir("torus");
    REQUIRE(run({"prescribe", "--kind", "km", "--expr", "1", "--const", "-2", "--domain", "1.1:2.9",
                 "--anchor", "0", "--out", dir.str()})
                .code == 0);
    // Torus a = 2, R = 1: H = 1 - 1/x, K_G = 1 - 2/x; the constants couple as gamma_h = 0, c_g = 2.
    auto r = run({"verify", "--out", dir.str(), "--expr-h", "1 - 1/x", "--expr-kg", "1 - 2/x",
                  "--gamma-h", "0", "--const-g", "2"});
    REQUIRE_MESSAGE(r.code == 0, r.err);
    Json report = Json::parse(r.out);
    CHECK(report["checks"]["constraint"]["max"].get<double>() < 1e-9);

    r = run({"verify", "--out", dir.str(), "--expr-h", "1 - 1/x", "--expr-kg", "1 - 2/x",
             "--gamma-h", "0.1", "--const-g", "2"});
    REQUIRE(r.code == 0);
    report = Json::parse(r.out);
    CHECK(report["checks"]["constraint"]["max"].get<double>() > 1e-3);
    CHECK_FALSE(report["checks"]["constraint"]["pass"].get<bool>());
    CHECK_FALSE(report["pass"].get<bool>());
}

TEST_CASE("identical command lines give identical artifacts")
{
    TempDir a("det_a");
    TempDir b("det_b");
    for (const TempDir* d : {&a, &b}) {
        // Unduloid K = x/2 + 0.1/x, turning at x = 1 -+ sqrt(0.8).
        REQUIRE(run({"prescribe", "--kind", "mean", "--expr", "0.5", "--const", "0.2", "--domain", "0.05:3",
                     "--anchor", "0", "--out", d->str()})
                    .code == 0);
        REQUIRE(run({"profile", "--out", d->str(), "--start", "0.5", "--s-max", "5"}).code == 0);
        REQUIRE(run({"mesh", "--out", d->str(), "--ntheta", "24"}).code == 0);
        REQUIRE(run({"mesh", "--out", d->str(), "--ntheta", "24", "--format", "stl"}).code == 0);
        REQUIRE(run({"verify", "--out", d->str()}).code == 0);
    }
    const auto names = a.listing();
    CHECK(names == std::vector<std::string>{"mesh.obj", "mesh.stl", "momentum.csv", "profile.csv",
                                            "surface.json", "verify.json"});
    for (const auto& n : names)
        CHECK_MESSAGE(slurp(a / n) == slurp(b / n), n);

    const std::string stl = slurp(a / "mesh.stl");
    REQUIRE(stl.size() >= 84);
    std::uint32_t count = 0;
    for (int i = 3; i >= 0; --i)
        count = (count << 8) | static_cast<unsigned char>(stl[80 + i]);
    CHECK(stl.size() == 84 + 50 * std::size_t(count));
    CHECK(slurp(a / "profile.csv").rfind("s,x,z,tx,tz\n", 0) == 0);
}

TEST_CASE("validation errors exit 2 and write nothing")
{
    TempDir dir("invalid");
    const std::vector<std::vector<std::string>> cases{
        {"prescribe", "--kind", "kp", "--expr", "1/x^", "--domain", "1:2"},
        {"prescribe", "--kind", "kp", "--expr", "1/y", "--domain", "1:2"},
        {"prescribe", "--kind", "kp", "--expr", "1/x^2", "--domain", "0.5:3"},
        {"prescribe", "--kind", "kq", "--expr", "1", "--domain", "1:2"},
        {"prescribe", "--kind", "kp", "--expr", "1", "--domain", "2:1"},
        {"prescribe", "--kind", "gauss", "--expr", "-1", "--const", "0.5", "--domain", "0:2"},
        {"prescribe", "--kind", "mean", "--expr", "1", "--const", "0.5", "--domain", "-1:1"},
        {"prescribe", "--kind", "kp", "--expr", "a/x", "--param", "a", "--domain", "1:2"},
        {"catalog", "build", "no_such_surface"},
        {"catalog", "build", "sphere", "--param", "radius=2"},
        {"catalog", "build", "torus", "--param", "R=0"},
        {"profile"},
        {"verify"},
        {"mesh", "--format", "ply"},
        {"bogus"},
        {"prescribe", "--expr", "1"},
    };
    for (auto args : cases) {
        args.push_back("--out");
        args.push_back(dir.str());
        const auto r = run(args);
        CHECK_MESSAGE(r.code == 2, args[0], " ", args.size() > 2 ? args[2] : "", ": ", r.err);
        CHECK_FALSE(r.err.empty());
        CHECK_FALSE(dir.exists());
    }
    CHECK(run({"prescribe", "--kind", "kp", "--expr", "1", "--domain", "0.1:0.5"}).code == 2);
}

TEST_CASE("numerical failures exit 3 and keep earlier state untouched")
{
    TempDir dir("numerical");
    // K = 1 - (x - 1)^2 touches 1 with zero slope at x = 1: a degenerate turning point.
    REQUIRE(run({"prescribe", "--kind", "kp", "--expr", "(1 - (x - 1)^2)/x", "--domain", "0.5:1.5",
                 "--out", dir.str()})
                .code == 0);
    const auto before = dir.listing();
    const std::string state = slurp(dir / "surface.json");
    const auto r = run({"profile", "--out", dir.str(), "--start", "1"});
    CHECK(r.code == 3);
    CHECK_FALSE(r.err.empty());
    CHECK(dir.listing() == before);
    CHECK(slurp(dir / "surface.json") == state);
}

TEST_CASE("catalog list")
{
    const auto r = run({"catalog", "list"});
    REQUIRE(r.code == 0);
    const Json list = Json::parse(r.out);
    REQUIRE(list.is_array());
    CHECK(list.size() == 16);
    for (const auto& e : list) {
        CHECK(e.size() == 4);
        CHECK(e["name"].is_string());
        CHECK(e["params"].is_object());
        CHECK(e["provenance"].is_string());
        CHECK(e["momentum-expression"].is_string());
    }
    CHECK(list[0]["name"] == "plane");
    CHECK(run({"catalog", "list"}).out == r.out);
}

TEST_CASE("help exits 0")
{
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("prescribe") != std::string::npos);
}

TEST_CASE("every catalog entry builds and verifies")
{
    const Json list = Json::parse(run({"catalog", "list"}).out);
    for (const auto& e : list) {
        const std::string name = e["name"].get<std::string>();
        INFO(name);
        TempDir dir("entry_" + name);
        auto r = run({"catalog", "build", name, "--out", dir.str()});
        REQUIRE_MESSAGE(r.code == 0, r.err);
        r = run({"verify", "--out", dir.str()});
        REQUIRE_MESSAGE(r.code == 0, r.err);
        CHECK(Json::parse(r.out)["pass"].get<bool>());
        r = run({"mesh", "--out", dir.str(), "--ntheta", "16"});
        CHECK_MESSAGE(r.code == 0, r.err);
    }
}
