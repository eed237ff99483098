// Command line surface: verification suites and JSON exports for the
// periodic resolution, Ext dimension tables and the minimal model.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ainf/verify.hpp"

using nlohmann::json;

namespace {

struct CommonOpts {
    ainf::RunConfig cfg;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--p", o.cfg.p, "prime p")->required();
    cmd->add_option("--window", o.cfg.window, "exactness window (default 3l)");
    cmd->add_option("--jmax", o.cfg.j_max, "randomized j bound");
    cmd->add_option("--samples", o.cfg.samples, "random tensor count");
    cmd->add_option("--seed", o.cfg.seed, "RNG seed");
    cmd->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_flag("--exhaustive-j", o.cfg.exhaustive_j, "exhaustive j in {0,1} grid (p <= 5)");
}

int validate(const CommonOpts& o) {
    if (!ainf::PrimeField::is_prime(o.cfg.p)) {
        std::cerr << "error: --p must be prime, got " << o.cfg.p << "\n";
        return 2;
    }
    if (o.cfg.exhaustive_j && o.cfg.p > 5) {
        std::cerr << "error: --exhaustive-j is only supported for p <= 5\n";
        return 2;
    }
    if (o.cfg.window != 0 && o.cfg.window < 2 * (o.cfg.p - 1) + 2) {
        std::cerr << "error: --window must be at least l+2\n";
        return 2;
    }
    return 0;
}

unsigned thread_count() {
    const char* env = std::getenv("AINF_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    return v > 0 ? (unsigned)v : 1;
}

int emit(const CommonOpts& o, const json& j, const std::string& text) {
    std::string payload = o.format == "json" ? j.dump(2) + "\n" : text;
    if (o.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "error: cannot open " << o.out << "\n";
            return 2;
        }
        f << payload;
    }
    return 0;
}

json config_json(const ainf::RunConfig& cfg) {
    return json{{"p", cfg.p},
                {"window", cfg.window},
                {"jmax", cfg.j_max},
                {"samples", cfg.samples},
                {"seed", cfg.seed},
                {"exhaustive_j", cfg.exhaustive_j}};
}

int cmd_verify(CommonOpts& o) {
    if (int rc = validate(o)) return rc;
    o.cfg.threads = thread_count();
    ainf::VerifyReport rep = ainf::run_verify(o.cfg);

    json suites = json::array();
    std::ostringstream text;
    text << "verify p=" << rep.p << "\n";
    for (const auto& s : rep.suites) {
        json checks = json::array();
        for (const auto& c : s.checks) {
            json jc{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
            if (!c.pass && !c.detail.empty()) jc["counterexample"] = c.detail;
            checks.push_back(jc);
        }
        suites.push_back(json{{"name", s.name},
                              {"status", s.ok ? "pass" : "fail"},
                              {"checks", checks}});
        text << "  [" << (s.ok ? "pass" : "FAIL") << "] " << s.name << " ("
             << (long long)s.millis << " ms)\n";
        for (const auto& c : s.checks)
            if (!c.pass) text << "    failed: " << c.name << " " << c.detail << "\n";
    }
    text << (rep.ok ? "all suites passed" : "verification FAILED") << "\n";
    json j{{"schema", "ainf/1"},
           {"command", "verify"},
           {"p", rep.p},
           {"config", config_json(o.cfg)},
           {"suites", suites},
           {"status", rep.ok ? "pass" : "fail"}};
    if (int rc = emit(o, j, text.str())) return rc;
    return rep.ok ? 0 : 1;
}

int cmd_ext_table(CommonOpts& o, long long degree_max) {
    if (int rc = validate(o)) return rc;
    ainf::Workspace ws(o.cfg.p);
    long long l = ws.profile.l;
    json rows = json::array();
    std::ostringstream text;
    text << "ext table p=" << o.cfg.p << " (l=" << l << ")\n";
    for (long long k = 0; k <= degree_max; ++k) {
        long long r = k % l;
        bool cls = (r == 0 || r == l - 1);
        json row{{"k", k}, {"dim", cls ? 1 : 0}};
        if (cls) {
            long long a = r == 0 ? 0 : 1;
            row["rep"] = json{{"a", a}, {"j", k / l}};
            text << "  k=" << k << " dim=1 rep=(a=" << a << ",j=" << k / l << ")\n";
        } else {
            row["rep"] = nullptr;
            text << "  k=" << k << " dim=0\n";
        }
        rows.push_back(row);
    }
    // cross-check the emitted pattern against the computed homology
    long long hbound = std::max(2 * l, std::min(degree_max, 4 * l));
    ainf::HomologyClassTable tab = ainf::homology_table(ws, hbound);
    for (const auto& row : tab.rows) {
        long long r = row.k % l;
        long long expect = (r == 0 || r == l - 1) ? 1 : 0;
        if (row.dim != expect) {
            std::cerr << "error: homology pattern mismatch at k=" << row.k << "\n";
            return 1;
        }
    }
    json j{{"schema", "ainf/1"},
           {"command", "ext-table"},
           {"p", o.cfg.p},
           {"degree_max", degree_max},
           {"rows", rows}};
    return emit(o, j, text.str());
}

int cmd_model_table(CommonOpts& o, std::vector<long long> n_list) {
    if (int rc = validate(o)) return rc;
    ainf::Workspace ws(o.cfg.p);
    ainf::MinimalModel model(ws);
    if (n_list.empty()) n_list = {2, ws.profile.p};
    std::sort(n_list.begin(), n_list.end());
    n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());
    json tables = json::array();
    std::ostringstream text;
    text << "m' tables p=" << o.cfg.p << "\n";
    for (long long n : n_list) {
        json entries = json::array();
        // all argument tuples with j <= jmax
        std::vector<ainf::ExtTensor> args{ainf::ExtTensor{}};
        for (long long i = 0; i < n; ++i) {
            std::vector<ainf::ExtTensor> next;
            for (const auto& partial : args)
                for (long long a = 0; a <= 1; ++a)
                    for (long long jj = 0; jj <= o.cfg.j_max; ++jj) {
                        ainf::ExtTensor t = partial;
                        t.push_back(ainf::ExtBasisElement{a, jj});
                        next.push_back(std::move(t));
                    }
            args = std::move(next);
        }
        for (const auto& t : args) {
            json jargs = json::array();
            for (const auto& x : t) jargs.push_back(json{{"a", x.a}, {"j", x.j}});
            ainf::ExtVector v = model.mprime(n, t);
            json result;
            if (v.is_zero()) {
                result = nullptr;
            } else {
                const auto& [b, c] = *v.terms.begin();
                result = json{{"coeff", c}, {"a", b.a}, {"j", b.j}};
            }
            entries.push_back(json{{"n", n}, {"args", jargs}, {"result", result}});
        }
        tables.push_back(json{{"n", n}, {"entries", entries}});
        text << "  n=" << n << ": " << entries.size() << " entries\n";
    }
    json j{{"schema", "ainf/1"},
           {"command", "model-table"},
           {"p", o.cfg.p},
           {"jmax", o.cfg.j_max},
           {"tables", tables}};
    return emit(o, j, text.str());
}

int cmd_export_resolution(CommonOpts& o) {
    if (int rc = validate(o)) return rc;
    ainf::Workspace ws(o.cfg.p);
    long long W = o.cfg.window > 0 ? o.cfg.window : 3 * ws.profile.l;
    ainf::PeriodicResolution res = ainf::build_resolution(ws);
    json modules = json::array();
    for (long long i = 0; i <= W; ++i) {
        long long k = res.module_at(i);
        modules.push_back(json{{"i", i}, {"k", k}, {"dim", ws.module_dim(k)}});
    }
    json diffs = json::array();
    std::ostringstream text;
    text << "resolution p=" << o.cfg.p << " window=" << W << "\n";
    for (long long i = 1; i <= W; ++i) {
        ainf::FpMatrix M = res.diff_matrix(i);
        json rows = json::array();
        for (std::size_t r = 0; r < M.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(M.at(r, c));
            rows.push_back(row);
        }
        diffs.push_back(json{{"i", i},
                             {"rows", (long long)M.rows()},
                             {"cols", (long long)M.cols()},
                             {"matrix", rows}});
        text << "  d_" << i << ": " << M.rows() << "x" << M.cols() << " rank "
             << ainf::rank(M) << "\n";
    }
    json j{{"schema", "ainf/1"},
           {"command", "export-resolution"},
           {"p", o.cfg.p},
           {"window", W},
           {"modules", modules},
           {"differentials", diffs}};
    return emit(o, j, text.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the minimal model on Ext of the symmetric group"};
    app.require_subcommand(1);

    CommonOpts vo, eo, mo, ro;
    long long degree_max = 16;
    std::vector<long long> n_list;

    CLI::App* verify = app.add_subcommand("verify", "run all verification suites");
    add_common(verify, vo);
    CLI::App* ext = app.add_subcommand("ext-table", "Ext dimension table");
    add_common(ext, eo);
    ext->add_option("--degree-max", degree_max, "top cohomological degree");
    CLI::App* mt = app.add_subcommand("model-table", "m' multiplication tables");
    add_common(mt, mo);
    mt->add_option("--n", n_list, "arities to tabulate (default 2 and p)");
    CLI::App* er = app.add_subcommand("export-resolution", "differential matrices as JSON");
    add_common(er, ro);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(vo);
        if (ext->parsed()) return cmd_ext_table(eo, degree_max);
        if (mt->parsed()) return cmd_model_table(mo, n_list);
        if (er->parsed()) return cmd_export_resolution(ro);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
