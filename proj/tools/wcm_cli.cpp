// Command-line surface: enumeration, psi, evaluation, verification suites,
// and SVG rendering. Exit codes: 0 success, 1 verification failure, 2 input
// error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wcm/json_io.hpp"
#include "wcm/svg.hpp"

namespace {

using namespace wcm;

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty())
        return std::cout;
    file.open(path);
    require(file.good(), errc::io, "cannot open output file: " + path);
    return file;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::io, "cannot open input file: " + path);
    return Json::parse(in);
}

int cmd_enumerate(int k, int n, const std::string& format, const std::string& out_path) {
    std::vector<Rank2Web> webs = enumerate_webs(k, n);
    std::map<ClassKey, long long> table = count_by_class(webs);
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    if (format == "tsv") {
        out << "a\tb\tc\td\tcount\n";
        for (const auto& [key, count] : table)
            out << key.abc[0] << "\t" << key.abc[1] << "\t" << key.abc[2] << "\t" << key.d << "\t"
                << count << "\n";
        out << "total\t\t\t\t" << webs.size() << "\n";
        return 0;
    }
    Json jwebs = Json::array();
    for (const Rank2Web& w : webs)
        jwebs.push_back(web_to_json(w));
    Json jtable = Json::array();
    for (const auto& [key, count] : table)
        jtable.push_back(Json{{"a", key.abc[0]},
                              {"b", key.abc[1]},
                              {"c", key.abc[2]},
                              {"d", key.d},
                              {"count", count}});
    out << Json{{"k", k}, {"n", n}, {"total", webs.size()}, {"classes", jtable}, {"webs", jwebs}}
               .dump(2)
        << "\n";
    return 0;
}

int cmd_psi(const std::string& in_path, const std::string& out_path) {
    Web w = web_from_json(load_json(in_path));
    const auto* r2 = std::get_if<Rank2Web>(&w);
    require(r2 != nullptr, errc::parameter, "psi needs a rank-2 web");
    Rank2Profile p = psi(*r2);
    std::ofstream file;
    open_out(file, out_path) << profile_to_json(p).dump(2) << "\n";
    return 0;
}

int cmd_psi_inverse(const std::string& in_path, const std::string& out_path) {
    Rank2Profile p = profile_from_json(load_json(in_path));
    Rank2Web w = psi_inverse(p);
    std::ofstream file;
    open_out(file, out_path) << web_to_json(w).dump(2) << "\n";
    return 0;
}

int cmd_eval(const std::string& web_path, const std::string& point_path,
             const std::string& out_path) {
    Web w = web_from_json(load_json(web_path));
    std::ifstream pin(point_path);
    require(pin.good(), errc::io, "cannot open point file: " + point_path);
    GrassPoint p = read_point_tsv(pin);
    Rat value = eval_web(w, p);
    std::ofstream file;
    open_out(file, out_path) << Json{{"value", rat_str(value)}}.dump(2) << "\n";
    return 0;
}

int cmd_render(const std::string& in_path, const std::string& out_path) {
    Json j = load_json(in_path);
    std::string svg;
    if (j.contains("kind"))
        svg = render_web_svg(web_from_json(j));
    else
        svg = render_profile_svg(profile_from_json(j));
    std::ofstream file;
    open_out(file, out_path) << svg;
    return 0;
}

int cmd_verify_identity(int k, int samples, std::uint64_t seed, const std::string& expr_path,
                        const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    if (!expr_path.empty()) {
        std::ifstream in(expr_path);
        require(in.good(), errc::io, "cannot open expression file: " + expr_path);
        FunctionExpr e = read_expr_file(in);
        SignContext ctx;
        IdentityReport r = verify_identity("expression file", e, samples, seed, ctx);
        out << identity_report_to_json(r).dump(2) << "\n";
        return r.ok ? 0 : 1;
    }
    SuiteReport suite = run_identity_suite(k, samples, seed);
    out << suite_report_to_json(suite).dump(2) << "\n";
    for (const auto& id : suite.identities)
        std::cerr << (id.ok ? "pass  " : "FAIL  ") << id.name << "\n";
    return suite.ok ? 0 : 1;
}

int cmd_verify_ses(int k, const std::string& case_str, bool chain, int truncation,
                   std::uint64_t seed, const std::string& out_path) {
    SesSuiteReport suite;
    if (!case_str.empty()) {
        int a, d, b, c;
        require(std::sscanf(case_str.c_str(), "%d,%d,%d,%d", &a, &b, &c, &d) == 4, errc::io,
                "--case expects a,b,c,d");
        suite = run_ses_case(k, a, d, b, c, truncation, seed, true);
    } else {
        require(chain, errc::parameter, "verify ses needs --case or --chain");
        suite = run_ses_chain(k, truncation > 0 ? truncation : default_truncation(3 * (k - 1)),
                              seed);
    }
    std::ofstream file;
    open_out(file, out_path) << ses_suite_to_json(suite).dump(2) << "\n";
    for (const auto& c : suite.cases)
        std::cerr << (c.ok ? "pass  " : "FAIL  ") << c.name << "\n";
    return suite.ok ? 0 : 1;
}

int cmd_verify_relations(int k, int n, int truncation, const std::string& out_path) {
    int N = truncation > 0 ? truncation : default_truncation(n);
    Json failures = Json::array();
    long long checked = 0;
    // all rank-1 modules
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i)
        full[i] = i + 1;
    for (const auto& sub : combinations(full, k)) {
        ExplicitModule m = module_from_rank1(make_rank1_profile(n, LabelSet(n, sub)), k, N);
        ++checked;
        if (auto bad = relations_failure(m))
            failures.push_back(*bad);
    }
    // all psi images
    for (const Rank2Web& w : enumerate_webs(k, n)) {
        ExplicitModule m = module_from_profile(psi(w), N);
        ++checked;
        if (auto bad = relations_failure(m))
            failures.push_back(*bad);
    }
    std::ofstream file;
    open_out(file, out_path) << Json{{"k", k},
                                     {"n", n},
                                     {"truncation", N},
                                     {"modules_checked", checked},
                                     {"failures", failures},
                                     {"ok", failures.empty()}}
                                    .dump(2)
                             << "\n";
    return failures.empty() ? 0 : 1;
}

int cmd_verify_counts(int k, int n, const std::string& out_path) {
    ModuleCounts counts = enumerate_modules(k, n);
    Json checks = Json::array();
    bool ok = true;
    auto check = [&](const std::string& name, long long got, long long want) {
        bool good = got == want;
        ok = ok && good;
        checks.push_back(Json{{"name", name}, {"got", got}, {"expected", want}, {"ok", good}});
    };
    if (k >= 3 && n >= 6) {
        Int real = 2 * binomial(n, 6) * binomial(n - 6, k - 3);
        check("real-root subcount 2*C(n,6)*C(n-6,k-3)", counts.real_root, real.get_si());
    }
    if (k == 3 && n == 6)
        check("Gr(3,6) total", counts.total, 2);
    if (k == 5 && n == 12) {
        std::map<ClassKey, long long> table = count_by_class(k, n);
        check("class (2,2,2,d=2)", table[ClassKey{{2, 2, 2}, 2}], 27720);
        check("class (3,3,2,d=1)", table[ClassKey{{3, 3, 2}, 1}], 15840);
        check("classes (4,3,3,0)+(4,4,2,0)",
              table[ClassKey{{4, 3, 3}, 0}] + table[ClassKey{{4, 4, 2}, 0}], 1320);
        check("total N_{5,12}", counts.total, 44880);
    }
    std::ofstream file;
    open_out(file, out_path) << Json{{"k", k},
                                     {"n", n},
                                     {"total", counts.total},
                                     {"real_root", counts.real_root},
                                     {"checks", checks},
                                     {"ok", ok}}
                                    .dump(2)
                             << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"webs and rank-2 modules on Grassmannians"};
    app.require_subcommand(1);

    int k = 3, n = 6, samples = 20, truncation = 0;
    std::uint64_t seed = 0;
    std::string format = "json", out_path, in_path, web_path, point_path, expr_path, case_str;
    bool chain = false;

    auto* enumerate = app.add_subcommand("enumerate", "enumerate canonical rank-2 webs");
    enumerate->add_option("--k", k)->required();
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
    enumerate->add_option("--out", out_path);

    auto* psi_cmd = app.add_subcommand("psi", "web json -> profile json");
    psi_cmd->add_option("--in", in_path)->required();
    psi_cmd->add_option("--out", out_path);

    auto* psi_inv = app.add_subcommand("psi-inverse", "profile json -> canonical web json");
    psi_inv->add_option("--in", in_path)->required();
    psi_inv->add_option("--out", out_path);

    auto* eval = app.add_subcommand("eval", "evaluate a web at a rational point");
    eval->add_option("--web", web_path)->required();
    eval->add_option("--point", point_path)->required();
    eval->add_option("--out", out_path);

    auto* render = app.add_subcommand("render", "render a web or profile to SVG");
    render->add_option("--in", in_path)->required();
    render->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    // randomized commands refuse to run unseeded
    auto add_seed = [&](CLI::App* cmd) { cmd->add_option("--seed", seed)->required(); };
    auto* vid = verify->add_subcommand("identity", "degeneracy + cactus identities");
    vid->add_option("--k", k);
    vid->add_option("--samples", samples);
    vid->add_option("--expr", expr_path);
    vid->add_option("--out", out_path);
    add_seed(vid);
    auto* vses = verify->add_subcommand("ses", "short exact sequence certificates");
    vses->add_option("--k", k)->required();
    vses->add_option("--case", case_str);
    vses->add_flag("--chain", chain);
    vses->add_option("--truncation", truncation);
    vses->add_option("--out", out_path);
    add_seed(vses);
    auto* vrel = verify->add_subcommand("relations", "module relation families");
    vrel->add_option("--k", k)->required();
    vrel->add_option("--n", n)->required();
    vrel->add_option("--truncation", truncation);
    vrel->add_option("--out", out_path);
    auto* vcnt = verify->add_subcommand("counts", "enumeration count identities");
    vcnt->add_option("--k", k)->required();
    vcnt->add_option("--n", n)->required();
    vcnt->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate)
            return cmd_enumerate(k, n, format, out_path);
        if (*psi_cmd)
            return cmd_psi(in_path, out_path);
        if (*psi_inv)
            return cmd_psi_inverse(in_path, out_path);
        if (*eval)
            return cmd_eval(web_path, point_path, out_path);
        if (*render)
            return cmd_render(in_path, out_path);
        if (*vid)
            return cmd_verify_identity(k, samples, seed, expr_path, out_path);
        if (*vses)
            return cmd_verify_ses(k, case_str, chain, truncation, seed, out_path);
        if (*vrel)
            return cmd_verify_relations(k, n, truncation, out_path);
        if (*vcnt)
            return cmd_verify_counts(k, n, out_path);
    } catch (const wcm::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
