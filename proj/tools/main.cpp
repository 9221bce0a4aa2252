// sumprod: exact-arithmetic workbench for sum, product, and ratio set growth.
//
// Subcommands: eval, verify, witness, mst, scan, render. Exit codes:
//   0  all checks passed
//   1  a verified inequality failed or an internal consistency check tripped
//   2  usage or input error
//   3  size cap exceeded

#include <algorithm>
#include <fstream>
#include <iostream>
#include <unordered_set>

#include "CLI11.hpp"
#include "sumprod/expr.hpp"
#include "sumprod/report.hpp"
#include "sumprod/set_io.hpp"
#include "sumprod/svg.hpp"
#include "sumprod/verify.hpp"

namespace {

using namespace sumprod;

struct CommonOpts {
    std::vector<std::string> set_files;    // NAME=FILE
    std::vector<std::string> inline_sets;  // NAME={...}
    std::string random_spec;               // size=N,trials=T,seed=S,domain=D
    std::string report_path;
    std::string wedge_slope = "1/8";
    int sectors = 8;
    std::size_t size_cap = 10'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--set", o.set_files, "bind a set: NAME=FILE (repeatable)");
    cmd->add_option("--inline", o.inline_sets, "bind a set inline: NAME={...} (repeatable)");
    cmd->add_option("--random", o.random_spec, "random trials: size=N,trials=T,seed=S,domain=D");
    cmd->add_option("--report", o.report_path, "write a JSON report to this file");
    cmd->add_option("--wedge-slope", o.wedge_slope, "wedge slope bound tan(2*eps), default 1/8");
    cmd->add_option("--sectors", o.sectors, "sector count for pigeonholing (4 or 8)");
    cmd->add_option("--size-cap", o.size_cap, "projected-size cap for set operations");
}

Environment bind_environment(const CommonOpts& o) {
    Environment env;
    for (const auto& spec : o.set_files) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--set expects NAME=FILE: " + spec);
        LoadedSet loaded = load_set_file(spec.substr(eq + 1));
        if (loaded.duplicates_ignored > 0)
            std::cerr << "warning: " << loaded.duplicates_ignored
                      << " duplicate value(s) ignored in " << spec.substr(eq + 1) << "\n";
        env[spec.substr(0, eq)] = std::move(loaded.set);
    }
    for (const auto& spec : o.inline_sets) {
        auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--inline expects NAME={...}: " + spec);
        env[spec.substr(0, eq)] = parse_set_literal(spec.substr(eq + 1));
    }
    return env;
}

TrialSpec parse_trial_spec(const std::string& text) {
    TrialSpec spec;
    spec.domain = Domain{DomainKind::positive_rationals, 10};
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--random expects key=value items, got: " + item);
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "size")
            spec.set_size = static_cast<unsigned>(std::stoul(val));
        else if (key == "trials")
            spec.trials = static_cast<unsigned>(std::stoul(val));
        else if (key == "seed")
            spec.seed = std::stoull(val);
        else if (key == "domain")
            spec.domain = parse_domain(val);
        else
            throw std::invalid_argument("unknown --random key: " + key);
    }
    return spec;
}

const ScalarSet& need_set(const Environment& env, const std::string& name) {
    auto it = env.find(name);
    if (it == env.end())
        throw std::invalid_argument("no set named '" + name + "' bound (use --set/--inline)");
    return it->second;
}

std::vector<GridPoint> points_from_set(const ScalarSet& s) {
    ScalarSet lifted = s.lifted_to_complex();
    std::vector<GridPoint> pts;
    for (const auto& z : lifted.complexes()) pts.push_back(GridPoint{z.re(), z.im()});
    return pts;
}

void write_report_file(const std::string& path, const nlohmann::json& doc) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write report: " + path);
    out << doc.dump(2) << "\n";
}

nlohmann::json report_document(const CommonOpts& o, const std::vector<VerificationReport>& reports) {
    nlohmann::json doc;
    doc["tool"] = "sumprod";
    doc["version"] = "0.1.0";
    doc["config"] = {{"wedge_slope", o.wedge_slope}, {"sectors", o.sectors}, {"size_cap", o.size_cap}};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    doc["reports"] = arr;
    return doc;
}

// generated point set for thm2 trials: positive rational coordinates,
// reseeded until it spans two slopes
std::vector<GridPoint> random_point_set(const TrialSpec& spec) {
    for (std::uint64_t bump = 0; bump < 100; ++bump) {
        Lcg rng(spec.seed + bump);
        std::vector<GridPoint> pts;
        for (unsigned i = 0; i < spec.set_size; ++i) {
            BigRational x(BigInt(static_cast<long long>(rng.draw(spec.domain.bound))),
                          BigInt(static_cast<long long>(rng.draw(spec.domain.bound))));
            BigRational y(BigInt(static_cast<long long>(rng.draw(spec.domain.bound))),
                          BigInt(static_cast<long long>(rng.draw(spec.domain.bound))));
            pts.push_back(GridPoint{x, y});
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        std::unordered_set<BigRational> slopes;
        for (const auto& p : pts) slopes.insert(p.slope_from_origin());
        if (pts.size() >= 2 && slopes.size() >= 2) return pts;
    }
    throw std::invalid_argument("could not generate a point set with two slopes");
}

int run_verify(const std::string& task, const CommonOpts& o, unsigned k, unsigned n_param) {
    WedgeSpec wedge(BigRational::from_string(o.wedge_slope));
    SetOpOptions opt;
    opt.size_cap = o.size_cap;
    Environment env = bind_environment(o);
    std::vector<VerificationReport> reports;

    auto one = [&](const Environment& e, const TrialSpec* spec) -> VerificationReport {
        if (task == "thm1") return verify_thm1(need_set(e, "A"));
        if (task == "thm2") {
            if (spec) return verify_thm2(random_point_set(*spec));
            return verify_thm2(points_from_set(need_set(e, "P")));
        }
        if (task == "lemma3")
            return verify_lemma3(need_set(e, "A"), need_set(e, "B"), need_set(e, "C"),
                                 need_set(e, "D"));
        if (task == "thm4") return verify_thm4(need_set(e, "A"), k, opt);
        if (task == "corollary5") return verify_corollary5(need_set(e, "A"), opt);
        if (task == "thm6") return verify_thm6(need_set(e, "A"), wedge, o.sectors);
        if (task == "lemma7")
            return verify_lemma7(need_set(e, "A"), need_set(e, "B"), need_set(e, "C"), wedge,
                                 o.sectors);
        if (task == "thm9") return verify_thm9(need_set(e, "A"), k, opt);
        if (task == "ungar") return ungar_check(need_set(e, "A"));
        if (task == "energy") return verify_energy(need_set(e, "A"));
        if (task == "coprime") return coprime_density(n_param);
        throw std::invalid_argument("unknown verify task: " + task);
    };

    if (!o.random_spec.empty()) {
        TrialSpec spec = parse_trial_spec(o.random_spec);
        for (unsigned t = 0; t < spec.trials; ++t) {
            Environment e;
            if (task == "lemma3" || task == "lemma7") {
                const unsigned sets = task == "lemma3" ? 4 : 3;
                const char* names[] = {"A", "B", "C", "D"};
                for (unsigned j = 0; j < sets; ++j) {
                    TrialSpec s = spec;
                    s.seed = trial_seed(spec, sets * t + j);
                    e[names[j]] = random_set(s);
                }
            } else if (task != "thm2" && task != "coprime") {
                TrialSpec s = spec;
                s.seed = trial_seed(spec, t);
                e["A"] = random_set(s);
            }
            TrialSpec s = spec;
            s.seed = trial_seed(spec, t);
            reports.push_back(one(e, &s));
        }
    } else {
        reports.push_back(one(env, nullptr));
    }

    bool all_pass = true;
    for (const auto& r : reports) {
        std::cout << report_line(r) << "\n";
        all_pass = all_pass && r.pass;
    }
    if (!o.report_path.empty()) write_report_file(o.report_path, report_document(o, reports));
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sumprod: exact verification of sum/product/ratio set growth"};
    app.require_subcommand(1);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a set expression");
    CommonOpts eval_opts;
    std::string expr_text;
    bool dump_elements = false;
    eval_cmd->add_option("expr", expr_text, "set expression, e.g. \"(A+A)/(A+A)\"")->required();
    eval_cmd->add_flag("--elements", dump_elements, "print the full element list");
    add_common(eval_cmd, eval_opts);

    auto* verify_cmd = app.add_subcommand("verify", "verify a bound");
    CommonOpts verify_opts;
    std::string verify_task;
    unsigned verify_k = 2;
    unsigned verify_n = 100;
    verify_cmd
        ->add_option("task", verify_task,
                     "thm1|thm2|lemma3|thm4|corollary5|thm6|lemma7|thm9|ungar|energy|coprime")
        ->required();
    verify_cmd->add_option("--k", verify_k, "fold parameter for thm4/thm9");
    verify_cmd->add_option("--n", verify_n, "n for coprime density");
    add_common(verify_cmd, verify_opts);

    auto* witness_cmd = app.add_subcommand("witness", "dump constructive witnesses");
    CommonOpts witness_opts;
    std::string witness_kind;
    std::string witness_out;
    witness_cmd->add_option("kind", witness_kind, "thm1|thm2|thm6")->required();
    witness_cmd->add_option("--out", witness_out, "write the dump to this file");
    add_common(witness_cmd, witness_opts);

    auto* mst_cmd = app.add_subcommand("mst", "Euclidean MST of a complex set");
    CommonOpts mst_opts;
    bool mst_ratio_points = false;
    bool mst_probe = false;
    int mst_resolution = 256;
    mst_cmd->add_flag("--ratio-points", mst_ratio_points, "span A/A instead of A");
    mst_cmd->add_flag("--probe", mst_probe, "run the advisory region-disjointness probe");
    mst_cmd->add_option("--resolution", mst_resolution, "probe samples per boundary arc");
    add_common(mst_cmd, mst_opts);

    auto* scan_cmd = app.add_subcommand("scan", "conjecture exploration");
    CommonOpts scan_opts;
    std::string scan_kind = "kak";
    unsigned scan_k = 2;
    scan_cmd->add_option("--kind", scan_kind, "kak|triple-product");
    scan_cmd->add_option("--k", scan_k, "fold parameter for kind=kak");
    add_common(scan_cmd, scan_opts);

    auto* render_cmd = app.add_subcommand("render", "render an SVG figure");
    CommonOpts render_opts;
    std::string render_kind;
    std::string render_out;
    render_cmd->add_option("--kind", render_kind, "slope-cover|complex-mst")->required();
    render_cmd->add_option("--out", render_out, "output SVG path")->required();
    add_common(render_cmd, render_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help stays 0, every usage error is 2
    }

    try {
        if (*eval_cmd) {
            Environment env = bind_environment(eval_opts);
            SetOpOptions opt;
            opt.size_cap = eval_opts.size_cap;
            auto ast = parse_expr(expr_text);
            auto res = eval_expr(*ast, env, opt);
            std::cout << "cardinality: " << res.set.size() << "\n";
            if (res.skipped_zero_divisors > 0)
                std::cout << "skipped zero-divisor pairs: " << res.skipped_zero_divisors << "\n";
            if (dump_elements) std::cout << "elements: {" << res.set.canonical_string() << "}\n";
            if (!eval_opts.report_path.empty()) {
                nlohmann::json doc;
                doc["task"] = "eval";
                doc["expr"] = print_expr(*ast);
                doc["cardinality"] = res.set.size();
                doc["skipped_zero_divisors"] = res.skipped_zero_divisors;
                if (dump_elements) doc["elements"] = res.set.canonical_string();
                write_report_file(eval_opts.report_path, doc);
            }
            return 0;
        }
        if (*verify_cmd) return run_verify(verify_task, verify_opts, verify_k, verify_n);
        if (*witness_cmd) {
            Environment env = bind_environment(witness_opts);
            WedgeSpec wedge(BigRational::from_string(witness_opts.wedge_slope));
            std::string dump;
            if (witness_kind == "thm1") {
                for (const auto& w : thm1_witnesses(need_set(env, "A")).witnesses)
                    dump += w.ratio.to_string() + "\t" + w.provenance + "\n";
            } else if (witness_kind == "thm2") {
                for (const auto& w : thm2_witnesses(points_from_set(need_set(env, "P"))).witnesses)
                    dump += w.ratio.to_string() + "\t" + w.provenance + "\n";
            } else if (witness_kind == "thm6") {
                auto res = thm6_witnesses(need_set(env, "A"), wedge, witness_opts.sectors);
                for (const auto& w : res.witnesses)
                    dump += w.ratio.to_string() + "\t" + w.provenance + "\n";
            } else {
                throw std::invalid_argument("unknown witness kind: " + witness_kind);
            }
            if (witness_out.empty())
                std::cout << dump;
            else
                write_text_file(witness_out, dump);
            return 0;
        }
        if (*mst_cmd) {
            Environment env = bind_environment(mst_opts);
            WedgeSpec wedge(BigRational::from_string(mst_opts.wedge_slope));
            ScalarSet a = need_set(env, "A").lifted_to_complex();
            std::vector<GaussianRational> pts;
            if (mst_ratio_points) {
                ScalarSet nz = a.without_zero();
                pts = pairwise(nz, nz, PairOp::div).set.complexes();
            } else {
                pts = a.complexes();
            }
            MstEdges mst = euclidean_mst(pts);
            for (std::size_t e = 0; e < mst.edges.size(); ++e)
                std::cout << mst.edges[e].first << "\t" << mst.edges[e].second << "\t"
                          << mst.squared_weights[e].to_string() << "\n";
            if (mst_probe) {
                auto probe = region_disjointness_probe(mst, wedge, mst_resolution);
                nlohmann::json pj;
                pj["edges"] = nlohmann::json::array();
                for (std::size_t e = 0; e < mst.edges.size(); ++e)
                    pj["edges"].push_back({mst.edges[e].first, mst.edges[e].second,
                                           mst.squared_weights[e].to_string()});
                pj["wedgeSlope"] = wedge.slope_bound.to_string();
                pj["resolution"] = probe.resolution;
                pj["overlaps"] = nlohmann::json::array();
                for (const auto& ov : probe.overlaps)
                    pj["overlaps"].push_back(
                        {{"edgeA", ov.edge_a}, {"edgeB", ov.edge_b}, {"x", ov.x}, {"y", ov.y}});
                if (mst_opts.report_path.empty())
                    std::cout << pj.dump(2) << "\n";
                else
                    write_report_file(mst_opts.report_path, pj);
            }
            return 0;
        }
        if (*scan_cmd) {
            if (scan_opts.random_spec.empty())
                throw std::invalid_argument("scan needs --random trials");
            TrialSpec spec = parse_trial_spec(scan_opts.random_spec);
            SetOpOptions opt;
            opt.size_cap = scan_opts.size_cap;
            ScanKind kind;
            if (scan_kind == "kak")
                kind = ScanKind::k_fold_product_sum;
            else if (scan_kind == "triple-product")
                kind = ScanKind::triple_product;
            else
                throw std::invalid_argument("unknown scan kind: " + scan_kind);
            auto doc = conjecture_scan(kind, spec, scan_k, opt);
            if (scan_opts.report_path.empty())
                std::cout << doc.dump(2) << "\n";
            else
                write_report_file(scan_opts.report_path, doc);
            return 0;
        }
        if (*render_cmd) {
            Environment env = bind_environment(render_opts);
            WedgeSpec wedge(BigRational::from_string(render_opts.wedge_slope));
            std::string svg;
            if (render_kind == "slope-cover")
                svg = render_slope_cover_svg(need_set(env, "A"));
            else if (render_kind == "complex-mst")
                svg = render_complex_mst_svg(need_set(env, "A"), wedge);
            else
                throw std::invalid_argument("unknown render kind: " + render_kind);
            write_text_file(render_out, svg);
            std::cout << "wrote " << render_out << "\n";
            return 0;
        }
    } catch (const sumprod::size_cap_error& e) {
        std::cerr << "size cap: " << e.what() << "\n";
        return 3;
    } catch (const sumprod::verification_error& e) {
        std::cerr << "VERIFICATION FAILURE (this indicates a bug, not a property of the input):\n  "
                  << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
