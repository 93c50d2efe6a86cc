#include "crsym/blowup.hpp"
#include "crsym/catalog.hpp"
#include "crsym/expr.hpp"
#include "crsym/model_io.hpp"
#include "crsym/pseudo_unitary.hpp"
#include "crsym/symmetry_solver.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace crsym;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ModelRecord model_by_name(const std::string& name) {
    auto r = find_model(name);
    if (!r) throw UsageError("unknown model: " + name + " (see `crsym list`)");
    return *r;
}

// a model file, or a text file holding just the defining function
DefiningFunction defining_from(const std::string& file, const std::string& text, const std::string& model, int n) {
    int given = !file.empty() + !text.empty() + !model.empty();
    if (given != 1) throw UsageError("give exactly one of --file, --defining, --model");
    if (!model.empty()) {
        auto r = model_by_name(model);
        if (!r.rho) throw UsageError("model " + model + " has no defining function");
        return *r.rho;
    }
    std::string src = text;
    if (!file.empty()) {
        src = slurp(file);
        auto first = src.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && src[first] == '{') {
            auto r = model_from_json(json::parse(src));
            if (!r.rho) throw UsageError(file + " has no defining function");
            return *r.rho;
        }
    }
    return parse_defining(src, n);
}

std::vector<HoloField> algebra_of(const ModelRecord& r) {
    if (!r.generators.empty()) return r.generators;
    if (!r.rho || r.solver_degree < 0) throw UsageError("model " + r.name + " has neither generators nor a solver degree");
    return solve_polynomial_symmetries(*r.rho, r.solver_degree);
}

std::vector<VerificationReport> verify_all(const std::vector<ModelRecord>& models, const VerifyOptions& opts, int threads) {
    std::vector<VerificationReport> out(models.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < models.size();) out[i] = verify_model(models[i], opts);
    };
    threads = std::max(1, std::min<int>(threads, int(models.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

void print_report(const VerificationReport& rep) {
    std::cout << (rep.pass() ? "PASS " : "FAIL ") << rep.model << " [" << rep.mode << "] dim " << rep.dim << "\n";
    for (const auto& c : rep.checks) std::cout << "  " << status_name(c.status) << " " << c.name << ": " << c.detail << "\n";
}

int default_threads() {
    unsigned h = std::thread::hardware_concurrency();
    return h ? int(std::min(h, 8u)) : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Infinitesimal CR symmetries of real hypersurfaces"};
    app.require_subcommand(1);
    bool as_json = false;

    // verify
    auto* verify = app.add_subcommand("verify", "verify a catalog model or a model file");
    std::string v_model, v_file;
    bool v_nosolver = false;
    verify->add_option("--model", v_model, "builtin model name");
    verify->add_option("--file", v_file, "model JSON file");
    verify->add_flag("--json", as_json);
    verify->add_flag("--no-solver", v_nosolver, "skip the solver cross-check");

    // solve
    auto* solve = app.add_subcommand("solve", "polynomial symmetry fields up to a degree");
    std::string s_file, s_def, s_model;
    int s_degree = 2, s_n = -1;
    solve->add_option("--file", s_file, "model JSON file or text file with a defining function");
    solve->add_option("--defining", s_def, "defining function text");
    solve->add_option("--model", s_model, "builtin model name");
    solve->add_option("--n", s_n, "number of z coordinates (default: inferred)");
    solve->add_option("--degree", s_degree, "coefficient degree bound")->required()->check(CLI::Range(0, 40));
    solve->add_flag("--json", as_json);

    // dim-table
    auto* dimt = app.add_subcommand("dim-table", "dimensions of maximal parabolics d_n(s)");
    int d_nmax = 7;
    bool d_check = false;
    dimt->add_option("--n-max", d_nmax)->check(CLI::Range(1, 200));
    dimt->add_flag("--check-reference", d_check, "compare n <= 7 with the reference values");
    dimt->add_flag("--json", as_json);

    // thresholds
    auto* thr = app.add_subcommand("thresholds", "d_max, submaximal and next thresholds");
    int t_n = 2;
    thr->add_option("--n", t_n)->required()->check(CLI::Range(1, 10000));
    thr->add_flag("--json", as_json);

    // stabilizer
    auto* stab = app.add_subcommand("stabilizer", "stabilizer of a coordinate subspace");
    std::string st_model, st_sub;
    stab->add_option("--model", st_model)->required();
    stab->add_option("--subspace", st_sub, "e.g. \"z2=0,w=0\"")->required();
    stab->add_flag("--json", as_json);

    // blowup
    auto* blow = app.add_subcommand("blowup", "pull a defining function back by a blow-up map");
    std::string b_file, b_def, b_model, b_map;
    int b_n = -1;
    bool b_sing = false;
    blow->add_option("--file", b_file);
    blow->add_option("--defining", b_def);
    blow->add_option("--model", b_model);
    blow->add_option("--n", b_n);
    blow->add_option("--map", b_map, "e.g. \"psi(3,+1);pi_o^2\"")->required();
    blow->add_flag("--singular", b_sing, "also print the singular locus");
    blow->add_flag("--json", as_json);

    // levi
    auto* levi = app.add_subcommand("levi", "Levi form signature at a point");
    std::string l_file, l_def, l_model, l_point;
    int l_n = -1;
    levi->add_option("--file", l_file);
    levi->add_option("--defining", l_def);
    levi->add_option("--model", l_model);
    levi->add_option("--n", l_n);
    levi->add_option("--point", l_point, "e.g. \"z1=1, w=i\"")->required();
    levi->add_flag("--json", as_json);

    // audit
    auto* aud = app.add_subcommand("audit", "subalgebra dimension bounds against the gap threshold");
    int a_nmax = 30;
    aud->add_option("--n-max", a_nmax)->check(CLI::Range(1, 1000));
    aud->add_flag("--json", as_json);

    // report
    auto* rep = app.add_subcommand("report", "verify the whole catalog");
    int r_threads = default_threads();
    bool r_nosolver = false;
    rep->add_option("--threads", r_threads)->check(CLI::Range(1, 256));
    rep->add_flag("--no-solver", r_nosolver);
    rep->add_flag("--json", as_json);

    // list / export
    auto* list = app.add_subcommand("list", "builtin model names");
    list->add_flag("--json", as_json);
    auto* exp = app.add_subcommand("export", "write a builtin model as JSON");
    std::string e_model, e_out;
    exp->add_option("--model", e_model)->required();
    exp->add_option("--out", e_out, "file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            if (v_model.empty() == v_file.empty()) throw UsageError("give exactly one of --model, --file");
            ModelRecord r = v_model.empty() ? load_model_file(v_file) : model_by_name(v_model);
            VerifyOptions opts;
            opts.run_solver = !v_nosolver;
            auto out = verify_model(r, opts);
            if (as_json) emit(report_to_json(out));
            else print_report(out);
            return out.pass() ? 0 : 1;
        }
        if (*solve) {
            auto rho = defining_from(s_file, s_def, s_model, s_n);
            SolverStats st;
            auto basis = solve_polynomial_symmetries(rho, s_degree, {}, &st);
            if (as_json) {
                json j{{"schema_version", kSchemaVersion},
                       {"defining", rho.rho().str()},
                       {"degree", s_degree},
                       {"dim", basis.size()},
                       {"basis", fields_to_json(basis)},
                       {"unknowns", st.unknowns},
                       {"blocks", st.blocks}};
                if (!basis.empty()) {
                    try {
                        j["fingerprint"] = fingerprint_to_json(fingerprint(structure_constants(basis)));
                    } catch (const LieError&) {
                        j["fingerprint"] = nullptr;
                    }
                }
                emit(j);
            } else {
                std::cout << "dimension " << basis.size() << " at degree " << s_degree << "\n";
                for (const auto& x : basis) std::cout << "  " << x.str() << "\n";
            }
            return 0;
        }
        if (*dimt) {
            const auto& ref = dimension_table_reference();
            int cells = 0, ok = 0;
            json rows = json::array();
            for (int n = 1; n <= d_nmax; ++n) {
                std::vector<long> row;
                for (int s = 1; s <= n / 2 + 1; ++s) row.push_back(parabolic_dimension(n, s));
                rows.push_back(json{{"n", n}, {"d", row}});
                if (!as_json) {
                    std::cout << "n=" << n << ":";
                    for (long d : row) std::cout << " " << d;
                    std::cout << "\n";
                }
                if (d_check && n <= int(ref.size()))
                    for (std::size_t s = 0; s < row.size(); ++s) {
                        ++cells;
                        bool same = s < ref[n - 1].size() && ref[n - 1][s] == row[s];
                        ok += same;
                        if (!same && !as_json)
                            std::cout << "MISMATCH n=" << n << " s=" << s + 1 << ": " << row[s] << "\n";
                    }
            }
            bool pass = ok == cells;
            if (as_json) {
                json j{{"schema_version", kSchemaVersion}, {"rows", rows}};
                if (d_check) j["check"] = json{{"cells", cells}, {"matching", ok}, {"pass", pass}};
                emit(j);
            } else if (d_check) {
                std::cout << (pass ? "OK: " : "FAIL: ") << ok << "/" << cells << " cells match\n";
            }
            return pass ? 0 : 1;
        }
        if (*thr) {
            auto g = gap_thresholds(t_n);
            if (as_json)
                emit(json{{"schema_version", kSchemaVersion}, {"n", t_n}, {"d_max", g.d_max}, {"d_smax", g.d_smax}, {"d_0", g.d_0}});
            else
                std::cout << g.d_max << " " << g.d_smax << " " << g.d_0 << "\n";
            return 0;
        }
        if (*stab) {
            auto r = model_by_name(st_model);
            auto coords = parse_subspace(st_sub, r.n);
            auto res = stabilizer_of_subspace(algebra_of(r), coords);
            if (as_json)
                emit(json{{"schema_version", kSchemaVersion}, {"model", r.name}, {"subspace", st_sub}, {"dim", res.dim()},
                          {"basis", fields_to_json(res.basis)}});
            else {
                std::cout << "stabilizer dimension " << res.dim() << "\n";
                for (const auto& x : res.basis) std::cout << "  " << x.str() << "\n";
            }
            return 0;
        }
        if (*blow) {
            auto rho = defining_from(b_file, b_def, b_model, b_n);
            auto got = pullback(rho, parse_map_spec(b_map, rho.n()));
            std::optional<SingularLocus> sing;
            int cert = -1;
            if (b_sing) {
                sing = singular_locus(got);
                for (int d = 0; d <= 3 && cert < 0; ++d)
                    if (certify_empty(*sing, d)) cert = d;
            }
            if (as_json) {
                json j{{"schema_version", kSchemaVersion}, {"map", b_map}, {"defining", got.rho().str()}};
                if (sing) {
                    json g = json::array();
                    for (const auto& p : sing->generators) g.push_back(p.str());
                    j["singular"] = json{{"empty", cert >= 0}, {"certificate_degree", cert}, {"generators", g}};
                }
                emit(j);
            } else {
                std::cout << got.rho().str() << "\n";
                if (sing) {
                    if (cert >= 0) std::cout << "singular locus: empty (multipliers of degree " << cert << ")\n";
                    else std::cout << "singular locus: " << sing->str() << " (no emptiness certificate up to degree 3)\n";
                }
            }
            return 0;
        }
        if (*levi) {
            auto rho = defining_from(l_file, l_def, l_model, l_n);
            auto pt = parse_point(l_point, rho.n());
            auto v = evaluate(rho.rho(), conj_point(rho.vars(), pt));
            if (!v.is_zero()) throw UsageError("point is not on the hypersurface: rho = " + v.str());
            auto got = levi_signature_at(rho, pt);
            if (as_json)
                emit(json{{"schema_version", kSchemaVersion},
                          {"point", point_str(pt)},
                          {"nondegenerate", got.nondegenerate},
                          {"pbar", got.pbar},
                          {"qbar", got.qbar},
                          {"rank", got.rank}});
            else
                std::cout << verdict_str(got) << "\n";
            return 0;
        }
        if (*aud) {
            bool all = true;
            json rows = json::array();
            for (int n = 1; n <= a_nmax; ++n) {
                auto a = audit_subalgebra_bound(n);
                all = all && a.pass();
                if (as_json) {
                    json c = json::array();
                    for (const auto& x : a.candidates)
                        c.push_back(json{{"name", x.name}, {"value", rational_str(x.value)}, {"pass", x.pass}});
                    rows.push_back(json{{"n", n}, {"threshold", a.threshold}, {"pass", a.pass()}, {"candidates", c}});
                } else {
                    std::cout << "n=" << n << " threshold " << a.threshold << ": " << (a.pass() ? "pass" : "FAIL");
                    for (const auto& x : a.candidates)
                        if (!x.pass) std::cout << " [" << x.name << " = " << rational_str(x.value) << "]";
                    std::cout << "\n";
                }
            }
            if (as_json) emit(json{{"schema_version", kSchemaVersion}, {"pass", all}, {"rows", rows}});
            return all ? 0 : 1;
        }
        if (*rep) {
            VerifyOptions opts;
            opts.run_solver = !r_nosolver;
            auto models = builtin_models();
            auto reports = verify_all(models, opts, r_threads);
            int passed = 0;
            for (const auto& r : reports) passed += r.pass();
            bool all = passed == int(reports.size());
            if (as_json) {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(report_to_json(r));
                emit(json{{"schema_version", kSchemaVersion},
                          {"pass", all},
                          {"passed", passed},
                          {"total", reports.size()},
                          {"models", arr}});
            } else {
                for (const auto& r : reports) {
                    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.model << " dim " << r.dim << "\n";
                    for (const auto& c : r.checks)
                        if (!c.ok()) std::cout << "  fail " << c.name << ": " << c.detail << "\n";
                }
                std::cout << passed << "/" << reports.size() << " models pass\n";
            }
            return all ? 0 : 1;
        }
        if (*list) {
            auto models = builtin_models();
            if (as_json) {
                json arr = json::array();
                for (const auto& r : models)
                    arr.push_back(json{{"name", r.name}, {"mode", mode_name(r.mode)}, {"expected_dim", r.expected_dim}});
                emit(arr);
            } else {
                for (const auto& r : models) std::cout << r.name << "  " << mode_name(r.mode) << "  " << r.expected_dim << "\n";
            }
            return 0;
        }
        if (*exp) {
            auto r = model_by_name(e_model);
            if (e_out.empty()) emit(model_to_json(r));
            else save_model_file(r, e_out);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ModelFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
