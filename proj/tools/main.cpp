// deltasets command line: difference-set combinatorics, Diophantine scans,
// avoider certificates, Ramsey pipelines and the separation gallery, all in
// exact arithmetic with certified mod-1 bounds.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "delta/avoider.hpp"
#include "delta/cantor.hpp"
#include "delta/certificate_io.hpp"
#include "delta/errors.hpp"
#include "delta/hierarchy.hpp"
#include "delta/manifest.hpp"
#include "delta/ramsey.hpp"
#include "delta/structure_search.hpp"
#include "delta/witness.hpp"

using namespace delta;

namespace {

struct GlobalOpts {
    unsigned precision_cap = 4096;
    unsigned threads = 1;
    unsigned long seed = 0;
    std::string constant_dir;

    PrecisionPolicy policy() const { return PrecisionPolicy{128, precision_cap}; }
};

std::set<Int> load_int_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open set file: " + path);
    std::set<Int> out;
    std::string line;
    while (std::getline(in, line)) {
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        size_t b = line.find_last_not_of(" \t\r");
        out.emplace(line.substr(a, b - a + 1), 10);
    }
    return out;
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        write_text_file(out_path, payload);
        std::cout << "wrote " << out_path << "\n";
    }
}

RealValue alpha_value(const std::string& spec, const GlobalOpts& g) {
    return RealValue::named(resolve_constant(spec, g.constant_dir));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deltasets: iterated difference sets and diophantine approximation toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--precision-cap", g.precision_cap, "working precision cap in bits");
    app.add_option("--threads", g.threads, "worker threads for manifest runs");
    app.add_option("--seed", g.seed, "seed for generated test sequences only");
    app.add_option("--constants", g.constant_dir,
                   "named-constant directory (default $DELTASETS_CONSTANTS)");

    // ---- diff ----------------------------------------------------------
    auto* diff = app.add_subcommand("diff", "iterated differences and finite sums");
    std::vector<std::string> diff_vals;
    auto* diff_eval = diff->add_subcommand("eval", "evaluate the d operator on a tuple");
    diff_eval->add_option("values", diff_vals, "2^l integers")->required();

    std::string seq_path, set_path, out_path;
    unsigned level = 1, count = 2;
    bool positive_only = false;
    std::string bound_str = "1000";
    auto* diff_set_cmd = diff->add_subcommand("set", "the level-l difference set of a sequence");
    diff_set_cmd->add_option("--seq", seq_path)->required();
    diff_set_cmd->add_option("--level", level)->required();
    diff_set_cmd->add_flag("--positive-only", positive_only);

    auto* diff_fs = diff->add_subcommand("fs", "the finite sums set of the first r elements");
    diff_fs->add_option("--seq", seq_path)->required();
    diff_fs->add_option("-r,--count", count)->required();

    auto* diff_ps = diff->add_subcommand("partial-sums", "partial sums of a sequence");
    diff_ps->add_option("--seq", seq_path)->required();

    auto* diff_fd = diff->add_subcommand("find-delta", "bounded Delta_{l,r} witness search");
    diff_fd->add_option("--set", set_path)->required();
    diff_fd->add_option("--level", level)->required();
    diff_fd->add_option("-r,--count", count)->required();
    diff_fd->add_option("--bound", bound_str)->required();
    diff_fd->add_option("--out", out_path);

    auto* diff_ff = diff->add_subcommand("find-fs", "bounded IP_r witness search");
    diff_ff->add_option("--set", set_path)->required();
    diff_ff->add_option("-r,--count", count)->required();
    diff_ff->add_option("--bound", bound_str)->required();
    diff_ff->add_option("--out", out_path);

    // ---- witness -------------------------------------------------------
    auto* wit = app.add_subcommand("witness", "recurrence witnesses and avoider certificates");
    std::string poly_str, alpha_str = "sqrt2", eps_str = "1/10", aux_str;
    unsigned length = 8, level_max = 2;
    std::string scan_bound_str = "1000000000000000000000000000000000000000";

    auto* wit_find = wit->add_subcommand("find", "lex-least tuple with ||v(d)|| < eps");
    wit_find->add_option("--seq", seq_path)->required();
    wit_find->add_option("--poly", poly_str)->required();
    wit_find->add_option("--eps", eps_str)->required();
    wit_find->add_option("--level", level)->required();
    wit_find->add_option("--out", out_path);

    auto* wit_sq = wit->add_subcommand("avoid-square", "square avoider certificate");
    wit_sq->add_option("--alpha", alpha_str);
    wit_sq->add_option("--eps", eps_str);
    wit_sq->add_option("--length", length);
    wit_sq->add_option("--scan-bound", scan_bound_str);
    wit_sq->add_option("--out", out_path);

    auto* wit_even = wit->add_subcommand("avoid-even", "even-polynomial avoider certificate");
    wit_even->add_option("--poly", poly_str)->required();
    wit_even->add_option("--eps", eps_str)->required();
    wit_even->add_option("--level-max", level_max);
    wit_even->add_option("--length", length);
    wit_even->add_option("--scan-bound", scan_bound_str);
    wit_even->add_option("--out", out_path);

    auto* wit_hd = wit->add_subcommand("avoid-highdeg", "high-degree odd avoider certificate");
    wit_hd->add_option("--poly", poly_str)->required();
    wit_hd->add_option("--level", level)->required();
    wit_hd->add_option("--length", length);
    wit_hd->add_option("--scan-bound", scan_bound_str);
    wit_hd->add_option("--aux", aux_str, "comma-separated constants, last = leading coefficient")
        ->required();
    wit_hd->add_option("--out", out_path);

    unsigned gen_count = 6;
    std::string intervals_path;
    auto* wit_ns = wit->add_subcommand("nonsyndetic", "syndeticity-obstruction certificate");
    wit_ns->add_option("--generate", gen_count, "use the standard generated interval system");
    wit_ns->add_option("--intervals", intervals_path, "file with 'L R' per line");
    wit_ns->add_option("--level", level);
    wit_ns->add_option("--out", out_path);

    std::string max_str = "100";
    auto* wit_sark = wit->add_subcommand("sarkozy", "v(n) in E-E enumeration");
    wit_sark->add_option("--set", set_path)->required();
    wit_sark->add_option("--max", max_str)->required();
    wit_sark->add_option("--poly", poly_str)->required();
    wit_sark->add_option("--out", out_path);

    // ---- ramsey --------------------------------------------------------
    auto* ram = app.add_subcommand("ramsey", "finitistic Ramsey machinery");
    std::string colors_str = "2";
    unsigned target_r = 3;
    auto* ram_bound = ram->add_subcommand("bound", "certified upper bound for R(l, M, r)");
    ram_bound->add_option("--level", level)->required();
    ram_bound->add_option("-M,--colors", colors_str)->required();
    ram_bound->add_option("-r,--target", target_r)->required();

    std::string coloring_path;
    auto* ram_mono = ram->add_subcommand("mono", "lex-least monochromatic subset");
    ram_mono->add_option("--coloring", coloring_path, "JSON coloring file")->required();
    ram_mono->add_option("-r,--target", target_r)->required();

    auto* ram_pipe = ram->add_subcommand("cubic-pipeline", "the finitary cubic argument");
    ram_pipe->add_option("--seq", seq_path)->required();
    ram_pipe->add_option("--alpha", alpha_str);
    ram_pipe->add_option("--eps", eps_str)->required();
    ram_pipe->add_option("--out", out_path);

    // ---- hierarchy -----------------------------------------------------
    auto* hier = app.add_subcommand("hierarchy", "the separation gallery");
    std::string name, check;
    unsigned K = 4;
    std::string cb_str = "200", m_str = "3", from_str = "0", to_str = "100";
    size_t target_len = 5;
    auto* hier_build = hier->add_subcommand("build", "construct a separator set");
    hier_build->add_option("name", name, "strict-inclusion | powers-of-ten")->required();
    hier_build->add_option("--K", K)->required();
    hier_build->add_option("--out", out_path);

    auto* hier_check = hier->add_subcommand("check", "run a separation check");
    hier_check->add_option("check", check, "gap | ip3 | delta-witnesses | lacunary")->required();
    hier_check->add_option("--K", K);
    hier_check->add_option("--bound", bound_str);
    hier_check->add_option("--seq", seq_path);
    hier_check->add_option("--c-bound", cb_str);
    hier_check->add_option("--out", out_path);

    auto* hier_mult = hier->add_subcommand("multiples", "residue-class subsequence");
    hier_mult->add_option("--seq", seq_path)->required();
    hier_mult->add_option("-m,--modulus", m_str)->required();
    hier_mult->add_option("--target-len", target_len)->required();

    auto* hier_dens = hier->add_subcommand("density", "finite-window density");
    hier_dens->add_option("--set", set_path)->required();
    hier_dens->add_option("--from", from_str)->required();
    hier_dens->add_option("--to", to_str)->required();

    // ---- measure -------------------------------------------------------
    auto* meas = app.add_subcommand("measure", "the weak-mixing example, exactly");
    std::string word_str = "1111", m_val_str = "0";
    unsigned k_min = 1, k_max = 3, depth = 3, bits = 192;
    auto* meas_lim = meas->add_subcommand("limits", "certified mod-1 limit table");
    meas_lim->add_option("--word", word_str)->required();
    meas_lim->add_option("--k-min", k_min);
    meas_lim->add_option("--k-max", k_max);
    meas_lim->add_option("-M", m_str);
    meas_lim->add_option("--out", out_path);

    auto* meas_char = meas->add_subcommand("char", "character integral over the product measure");
    meas_char->add_option("-m", m_val_str)->required();
    meas_char->add_option("--depth", depth)->required();
    meas_char->add_option("--bits", bits);
    meas_char->add_option("--out", out_path);

    // ---- gen / run -----------------------------------------------------
    std::string kind = "mixed";
    auto* gen = app.add_subcommand("gen", "generate a deterministic test sequence");
    gen->add_option("--kind", kind, "mixed | lacunary | poly");
    gen->add_option("--length", length)->required();
    gen->add_option("--out", out_path);

    std::string manifest_path, run_out = "artifacts";
    auto* run = app.add_subcommand("run", "execute an experiment manifest");
    run->add_option("manifest", manifest_path)->required();
    run->add_option("--out", run_out, "artifact directory");

    // let global flags appear after a subcommand name too
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    try {
        if (diff_eval->parsed()) {
            std::vector<Int> vals;
            for (const auto& s : diff_vals) vals.emplace_back(s, 10);
            std::cout << iterated_diff(vals).get_str() << "\n";
            return 0;
        }
        if (diff_set_cmd->parsed()) {
            auto d = diff_set(load_sequence_file(seq_path), level, positive_only);
            for (const Int& v : d.value_set) std::cout << v.get_str() << "\n";
            std::cerr << d.values.size() << " tuples, " << d.value_set.size()
                      << " distinct values\n";
            return 0;
        }
        if (diff_fs->parsed()) {
            auto f = fs_set(load_sequence_file(seq_path), count);
            for (const Int& v : f.value_set) std::cout << v.get_str() << "\n";
            return 0;
        }
        if (diff_ps->parsed()) {
            auto p = partial_sums(load_sequence_file(seq_path));
            for (const Int& v : p.elements) std::cout << v.get_str() << "\n";
            return 0;
        }
        if (diff_fd->parsed()) {
            auto res = contains_diff_structure(load_int_set(set_path), level, count,
                                               Int(bound_str, 10));
            emit(search_result_to_json(res), out_path);
            return res.found() ? 0 : 1;
        }
        if (diff_ff->parsed()) {
            auto res = contains_fs_structure(load_int_set(set_path), count, Int(bound_str, 10));
            emit(search_result_to_json(res), out_path);
            return res.found() ? 0 : 1;
        }
        if (wit_find->parsed()) {
            auto s = load_sequence_file(seq_path);
            auto v = parse_poly(poly_str, g.constant_dir);
            auto rep = find_delta_witness(s, v, rat_from_string(eps_str), level, g.policy());
            emit(witness_to_json(rep), out_path);
            return rep.found ? 0 : 1;
        }
        if (wit_sq->parsed()) {
            auto cert = build_square_avoider(alpha_value(alpha_str, g), rat_from_string(eps_str),
                                             length, Int(scan_bound_str, 10), g.policy());
            emit(avoider_to_json(cert), out_path);
            return cert.complete && cert.verified ? 0 : 1;
        }
        if (wit_even->parsed()) {
            auto cert = build_even_avoider(parse_poly(poly_str, g.constant_dir),
                                           rat_from_string(eps_str), level_max, length,
                                           Int(scan_bound_str, 10), g.policy());
            emit(avoider_to_json(cert), out_path);
            return cert.complete && cert.verified ? 0 : 1;
        }
        if (wit_hd->parsed()) {
            std::vector<ConstantPtr> aux;
            std::stringstream ss(aux_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) aux.push_back(resolve_constant(tok, g.constant_dir));
            auto cert = build_high_degree_avoider(parse_poly(poly_str, g.constant_dir), level,
                                                  length, Int(scan_bound_str, 10), aux, g.policy());
            emit(avoider_to_json(cert), out_path);
            return cert.complete && cert.verified ? 0 : 1;
        }
        if (wit_ns->parsed()) {
            std::vector<std::pair<Int, Int>> intervals;
            if (!intervals_path.empty()) {
                std::ifstream in(intervals_path);
                if (!in) throw MalformedInput("cannot open " + intervals_path);
                std::string l, r;
                while (in >> l >> r) intervals.emplace_back(Int(l, 10), Int(r, 10));
            } else {
                intervals = generate_nonsyndetic_intervals(gen_count);
            }
            auto cert = build_nonsyndetic_avoider(intervals, level);
            emit(avoider_to_json(cert), out_path);
            return cert.verified ? 0 : 1;
        }
        if (wit_sark->parsed()) {
            auto rep = sarkozy_search(load_int_set(set_path), Int(max_str, 10),
                                      parse_poly(poly_str, g.constant_dir));
            emit(sarkozy_to_json(rep), out_path);
            return 0;
        }
        if (ram_bound->parsed()) {
            std::cout << ramsey_upper_bound(level, Int(colors_str, 10), target_r).get_str()
                      << "\n";
            return 0;
        }
        if (ram_mono->parsed()) {
            std::ifstream in(coloring_path);
            if (!in) throw MalformedInput("cannot open " + coloring_path);
            nlohmann::json cj = nlohmann::json::parse(in);
            Coloring col;
            col.ground = cj.at("ground").get<unsigned>();
            col.arity = cj.at("arity").get<unsigned>();
            for (const auto& [key, val] : cj.at("colors").items()) {
                std::vector<unsigned> subset;
                std::stringstream ks(key);
                std::string tok;
                while (std::getline(ks, tok, ',')) subset.push_back(unsigned(std::stoul(tok)));
                col.colors[subset] = val.get<unsigned>();
            }
            auto d = monochromatic_search(col, target_r);
            if (!d) {
                std::cout << "not-found\n";
                return 1;
            }
            for (unsigned e : *d) std::cout << e << " ";
            std::cout << "\n";
            return 0;
        }
        if (ram_pipe->parsed()) {
            auto rep = finitistic_cubic_pipeline(alpha_value(alpha_str, g),
                                                 rat_from_string(eps_str),
                                                 load_sequence_file(seq_path), g.policy());
            emit(pipeline_to_json(rep), out_path);
            return rep.status == PipelineStatus::Ok ? 0 : 1;
        }
        if (hier_build->parsed()) {
            SeparatorSet sep = name == "strict-inclusion" ? strict_inclusion_set(K)
                               : name == "powers-of-ten"
                                   ? powers_of_ten_set(K)
                                   : throw MalformedInput("unknown separator '" + name + "'");
            emit(separator_to_json(sep), out_path);
            return 0;
        }
        if (hier_check->parsed()) {
            if (check == "gap") {
                bool ok = strict_inclusion_gap_check(K);
                std::cout << (ok ? "gap holds" : "gap FAILS") << " for K=" << K << "\n";
                return ok ? 0 : 1;
            }
            if (check == "ip3") {
                auto res = contains_fs_structure(powers_of_ten_set(K).as_set(), 3,
                                                 Int(bound_str, 10));
                emit(search_result_to_json(res), out_path);
                return res.found() ? 1 : 0;
            }
            if (check == "delta-witnesses") {
                auto sep = strict_inclusion_set(K);
                bool all = true;
                for (unsigned r = 2; r <= K; ++r) {
                    auto res = contains_diff_structure(sep.as_set(), 1, r, Int(bound_str, 10));
                    std::cout << "r=" << r << ": " << (res.found() ? "witness" : "none") << "\n";
                    all = all && res.found();
                }
                return all ? 0 : 1;
            }
            if (check == "lacunary") {
                auto rep = lacunary_fs_check(load_sequence_file(seq_path), 2, Int(cb_str, 10));
                emit(search_result_to_json(rep.search), out_path);
                return rep.search.found() ? 1 : 0;
            }
            throw MalformedInput("unknown check '" + check + "'");
        }
        if (hier_mult->parsed()) {
            auto sub = multiples_subsequence(load_sequence_file(seq_path), Int(m_str, 10),
                                             target_len);
            for (const Int& v : sub.elements) std::cout << v.get_str() << "\n";
            return 0;
        }
        if (hier_dens->parsed()) {
            Rat d = window_density(load_int_set(set_path), Int(from_str, 10), Int(to_str, 10));
            std::cout << rat_to_string(d) << " (" << rat_to_decimal(d, 12) << ")\n";
            return 0;
        }
        if (meas_lim->parsed()) {
            std::vector<bool> bits_v;
            for (char c : word_str) bits_v.push_back(c == '1');
            BitWord w(bits_v);
            auto rows = limit_table(w, k_min, k_max, Int(m_str, 10));
            emit(limit_table_to_json(w, Int(m_str, 10), rows), out_path);
            return 0;
        }
        if (meas_char->parsed()) {
            Int m(m_val_str, 10);
            auto c = char_integral(m, depth, bits);
            emit(char_integral_to_json(m, depth, c), out_path);
            return 0;
        }
        if (gen->parsed()) {
            auto s = generate_test_sequence(kind, length, g.seed);
            if (out_path.empty()) {
                for (const Int& v : s.elements) std::cout << v.get_str() << "\n";
            } else {
                save_sequence_file(s, out_path);
            }
            return 0;
        }
        if (run->parsed()) {
            ManifestOptions opts;
            opts.output_dir = run_out;
            opts.threads = g.threads;
            opts.policy = g.policy();
            opts.constant_dir = g.constant_dir;
            auto t0 = std::chrono::steady_clock::now();
            auto res = run_manifest_file(manifest_path, opts);
            auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
            for (const auto& o : res.outcomes) {
                std::cout << (o.achieved ? "ok   " : o.unknown ? "???  " : "FAIL ") << o.id
                          << "  [" << o.op << "] " << o.detail
                          << (o.artifact.empty() ? "" : "  -> " + o.artifact) << "\n";
            }
            std::cout << res.outcomes.size() << " claims in " << dt.count() << " s\n";
            return res.exit_code();
        }
    } catch (const MalformedInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedQuery& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
