#include "delta/manifest.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "delta/avoider.hpp"
#include "delta/cantor.hpp"
#include "delta/certificate_io.hpp"
#include "delta/errors.hpp"
#include "delta/hierarchy.hpp"
#include "delta/ramsey.hpp"
#include "delta/sequence.hpp"
#include "delta/structure_search.hpp"
#include "delta/witness.hpp"

namespace delta {

using json = nlohmann::json;

namespace {

const json& require_field(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw MalformedInput("manifest claim missing field '" + key + "'");
    return *it;
}

Rat get_rat(const json& j, const std::string& key) {
    const json& v = require_field(j, key);
    if (v.is_number_integer()) return Rat(long(v.get<long>()));
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    throw MalformedInput("field '" + key + "' must be a rational string");
}

Int get_int(const json& j, const std::string& key) {
    const json& v = require_field(j, key);
    if (v.is_number_integer()) return Int(long(v.get<long>()));
    if (v.is_string()) return Int(v.get<std::string>(), 10);
    throw MalformedInput("field '" + key + "' must be an integer or decimal string");
}

unsigned get_unsigned(const json& j, const std::string& key) {
    const json& v = require_field(j, key);
    if (!v.is_number_unsigned() && !v.is_number_integer())
        throw MalformedInput("field '" + key + "' must be a small integer");
    long x = v.get<long>();
    if (x < 0) throw MalformedInput("field '" + key + "' must be nonnegative");
    return unsigned(x);
}

FiniteSequence get_sequence(const json& j) {
    if (j.contains("sequence_file"))
        return load_sequence_file(j["sequence_file"].get<std::string>());
    const json& v = require_field(j, "sequence");
    std::vector<Int> elems;
    for (const auto& e : v) {
        if (e.is_number_integer())
            elems.emplace_back(long(e.get<long>()));
        else
            elems.emplace_back(e.get<std::string>(), 10);
    }
    return FiniteSequence(std::move(elems), "manifest");
}

std::set<Int> get_int_set(const json& j, const std::string& key) {
    std::set<Int> out;
    for (const auto& e : require_field(j, key)) {
        if (e.is_number_integer())
            out.emplace(long(e.get<long>()));
        else
            out.emplace(e.get<std::string>(), 10);
    }
    return out;
}

PrecisionPolicy doubled(const PrecisionPolicy& p) {
    return PrecisionPolicy{p.start_bits * 2, p.cap_bits * 2};
}

ClaimOutcome run_claim(const json& claim, const ManifestOptions& opts) {
    ClaimOutcome out;
    out.id = require_field(claim, "id").get<std::string>();
    out.op = require_field(claim, "op").get<std::string>();
    const std::string& op = out.op;
    std::string artifact_path = opts.output_dir + "/" + out.id + ".json";
    const PrecisionPolicy& policy = opts.policy;

    if (op == "witness-find") {
        FiniteSequence s = get_sequence(claim);
        PolySpec v = parse_poly(require_field(claim, "poly").get<std::string>(),
                                opts.constant_dir);
        Rat eps = get_rat(claim, "eps");
        unsigned level = get_unsigned(claim, "level");
        auto rep = find_delta_witness(s, v, eps, level, policy);
        write_text_file(artifact_path, witness_to_json(rep));
        out.artifact = artifact_path;
        out.achieved = rep.found && verify_witness(s, v, eps, rep, doubled(policy));
        out.unknown = !rep.found && rep.unknown_diffs > 0;
        out.detail = rep.found ? "witness at diff " + rep.diff_value.get_str() : "no witness";
        return out;
    }
    if (op == "avoid-square" || op == "avoid-even" || op == "avoid-highdeg" ||
        op == "nonsyndetic") {
        AvoiderCertificate cert;
        if (op == "avoid-square") {
            auto alpha = RealValue::named(resolve_constant(
                require_field(claim, "alpha").get<std::string>(), opts.constant_dir));
            cert = build_square_avoider(alpha, get_rat(claim, "eps"),
                                        get_unsigned(claim, "length"),
                                        get_int(claim, "scan_bound"), policy);
        } else if (op == "avoid-even") {
            PolySpec v = parse_poly(require_field(claim, "poly").get<std::string>(),
                                    opts.constant_dir);
            cert = build_even_avoider(v, get_rat(claim, "eps"), get_unsigned(claim, "level_max"),
                                      get_unsigned(claim, "length"),
                                      get_int(claim, "scan_bound"), policy);
        } else if (op == "avoid-highdeg") {
            PolySpec v = parse_poly(require_field(claim, "poly").get<std::string>(),
                                    opts.constant_dir);
            std::vector<ConstantPtr> aux;
            for (const auto& a : require_field(claim, "aux"))
                aux.push_back(resolve_constant(a.get<std::string>(), opts.constant_dir));
            cert = build_high_degree_avoider(v, get_unsigned(claim, "level"),
                                             get_unsigned(claim, "length"),
                                             get_int(claim, "scan_bound"), aux, policy);
        } else {
            std::vector<std::pair<Int, Int>> intervals;
            if (claim.contains("generate")) {
                intervals = generate_nonsyndetic_intervals(get_unsigned(claim, "generate"));
            } else {
                for (const auto& iv : require_field(claim, "intervals"))
                    intervals.emplace_back(Int(iv.at(0).get<std::string>(), 10),
                                           Int(iv.at(1).get<std::string>(), 10));
            }
            cert = build_nonsyndetic_avoider(intervals, get_unsigned(claim, "level"));
        }
        write_text_file(artifact_path, avoider_to_json(cert));
        out.artifact = artifact_path;
        bool reverified = verify_avoider(cert, doubled(policy));
        out.achieved = cert.complete && cert.verified && reverified;
        std::ostringstream det;
        det << cert.sequence.size() << " elements, " << cert.tuple_bounds.size()
            << " tuple bounds" << (cert.complete ? "" : " (partial)");
        out.detail = det.str();
        return out;
    }
    if (op == "hierarchy-build") {
        std::string name = require_field(claim, "name").get<std::string>();
        unsigned K = get_unsigned(claim, "K");
        SeparatorSet sep;
        bool extra_ok = true;
        if (name == "strict-inclusion") {
            sep = strict_inclusion_set(K);
            extra_ok = strict_inclusion_gap_check(K);
        } else if (name == "powers-of-ten") {
            sep = powers_of_ten_set(K);
        } else {
            throw MalformedInput("unknown separator set '" + name + "'");
        }
        write_text_file(artifact_path, separator_to_json(sep));
        out.artifact = artifact_path;
        out.achieved = extra_ok;
        out.detail = std::to_string(sep.elements.size()) + " elements";
        return out;
    }
    if (op == "hierarchy-check") {
        std::string check = require_field(claim, "check").get<std::string>();
        if (check == "gap") {
            unsigned K = get_unsigned(claim, "K");
            bool ok = strict_inclusion_gap_check(K);
            write_text_file(artifact_path,
                            std::string("{\n  \"kind\": \"gap-check\",\n  \"K\": ") +
                                std::to_string(K) + ",\n  \"ok\": " + (ok ? "true" : "false") +
                                "\n}\n");
            out.artifact = artifact_path;
            out.achieved = ok;
            return out;
        }
        if (check == "ip3") {
            unsigned K = get_unsigned(claim, "K");
            auto sep = powers_of_ten_set(K);
            auto res = contains_fs_structure(sep.as_set(), 3, get_int(claim, "bound"));
            write_text_file(artifact_path, search_result_to_json(res));
            out.artifact = artifact_path;
            out.achieved = !res.found();
            out.detail = "candidates examined: " + res.candidates_examined.get_str();
            return out;
        }
        if (check == "delta-witnesses") {
            unsigned K = get_unsigned(claim, "K");
            auto sep = strict_inclusion_set(K);
            Int bound = get_int(claim, "bound");
            bool all = true;
            std::string parts;
            for (unsigned r = 2; r <= K; ++r) {
                auto res = contains_diff_structure(sep.as_set(), 1, r, bound);
                all = all && res.found();
                parts += search_result_to_json(res);
            }
            write_text_file(artifact_path, parts);
            out.artifact = artifact_path;
            out.achieved = all;
            return out;
        }
        if (check == "lacunary") {
            FiniteSequence s = get_sequence(claim);
            auto rep = lacunary_fs_check(s, 2, get_int(claim, "c_bound"));
            write_text_file(artifact_path, search_result_to_json(rep.search));
            out.artifact = artifact_path;
            out.achieved = !rep.search.found();
            out.detail = "FS size " + std::to_string(rep.fs_size);
            return out;
        }
        throw MalformedInput("unknown hierarchy check '" + check + "'");
    }
    if (op == "sarkozy") {
        auto E = get_int_set(claim, "set");
        PolySpec v = parse_poly(require_field(claim, "poly").get<std::string>(),
                                opts.constant_dir);
        auto rep = sarkozy_search(E, get_int(claim, "max"), v);
        write_text_file(artifact_path, sarkozy_to_json(rep));
        out.artifact = artifact_path;
        out.achieved = true;
        if (claim.contains("expect_contains")) {
            for (const auto& e : claim["expect_contains"]) {
                Int want(e.get<std::string>(), 10);
                bool has = std::find(rep.hits.begin(), rep.hits.end(), want) != rep.hits.end();
                out.achieved = out.achieved && has;
            }
        }
        return out;
    }
    if (op == "char-integral") {
        Int m = get_int(claim, "m");
        unsigned depth = get_unsigned(claim, "depth");
        unsigned bits = claim.contains("bits") ? get_unsigned(claim, "bits") : 192;
        auto c = char_integral(m, depth, bits);
        write_text_file(artifact_path, char_integral_to_json(m, depth, c));
        out.artifact = artifact_path;
        out.achieved = true;
        if (claim.contains("expect") && claim["expect"].is_object()) {
            const json& exp = claim["expect"];
            if (exp.value("finite_exact_one", false)) {
                out.achieved = c.finite_product.re.lo == 1 && c.finite_product.re.hi == 1 &&
                               c.finite_product.im.lo == 0 && c.finite_product.im.hi == 0;
            }
            if (exp.contains("near_one_log2")) {
                unsigned long L = exp["near_one_log2"].get<unsigned long>();
                Rat target = pow2_inv(L) * pow2_inv(L);
                Rat upper = c.value.dist_to_one_sq_upper();
                if (upper > target) {
                    out.achieved = false;
                    // the enclosure may simply be too wide to certify
                    Rat dre = std::max(Rat(0), std::max(Rat(c.value.re.lo - 1), Rat(1 - c.value.re.hi)));
                    Rat dim = std::max(Rat(0), std::max(Rat(c.value.im.lo), Rat(-c.value.im.hi)));
                    Rat lower = dre * dre + dim * dim;
                    out.unknown = lower <= target;
                }
            }
        }
        return out;
    }
    if (op == "measure-limits") {
        std::string word = require_field(claim, "word").get<std::string>();
        std::vector<bool> bits;
        for (char c : word) bits.push_back(c == '1');
        BitWord w(bits);
        Int M = get_int(claim, "M");
        auto rows = limit_table(w, get_unsigned(claim, "k_min"), get_unsigned(claim, "k_max"), M);
        write_text_file(artifact_path, limit_table_to_json(w, M, rows));
        out.artifact = artifact_path;
        out.achieved = true;
        for (const auto& r : rows)
            out.achieved = out.achieved && r.cubic_certified && r.quadratic_certified &&
                           r.linear_certified;
        return out;
    }
    if (op == "cubic-pipeline") {
        auto alpha = RealValue::named(resolve_constant(
            require_field(claim, "alpha").get<std::string>(), opts.constant_dir));
        FiniteSequence s = get_sequence(claim);
        auto rep = finitistic_cubic_pipeline(alpha, get_rat(claim, "eps"), s, policy);
        write_text_file(artifact_path, pipeline_to_json(rep));
        out.artifact = artifact_path;
        out.achieved = rep.status == PipelineStatus::Ok;
        out.detail = "N=" + std::to_string(rep.N);
        return out;
    }
    throw MalformedInput("unknown manifest op '" + op + "'");
}

}  // namespace

bool ManifestRunResult::all_achieved() const {
    for (const auto& o : outcomes)
        if (!o.achieved) return false;
    return true;
}

bool ManifestRunResult::any_unknown() const {
    for (const auto& o : outcomes)
        if (o.unknown) return true;
    return false;
}

int ManifestRunResult::exit_code() const {
    if (all_achieved()) return 0;
    return any_unknown() ? 3 : 1;
}

ManifestRunResult run_manifest_json(const std::string& json_text, const ManifestOptions& opts) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("manifest parse error: ") + e.what());
    }
    if (!root.contains("claims") || !root["claims"].is_array())
        throw MalformedInput("manifest must contain a 'claims' array");
    const json& claims = root["claims"];

    std::filesystem::create_directories(opts.output_dir);

    ManifestRunResult result;
    result.outcomes.resize(claims.size());
    unsigned threads = std::max(1u, opts.threads);
    if (threads == 1 || claims.size() <= 1) {
        for (size_t i = 0; i < claims.size(); ++i) result.outcomes[i] = run_claim(claims[i], opts);
        return result;
    }
    // claims are independent: each resolves its own constants, so parallel
    // execution cannot perturb any claim's serial refinement trace
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= claims.size()) break;
                    result.outcomes[i] = run_claim(claims[i], opts);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return result;
}

ManifestRunResult run_manifest_file(const std::string& path, const ManifestOptions& opts) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open manifest: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return run_manifest_json(ss.str(), opts);
}

}  // namespace delta
