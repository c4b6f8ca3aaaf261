#include "delta/certificate_io.hpp"

#include <fstream>

#include <json.hpp>

#include "delta/errors.hpp"

namespace delta {

using json = nlohmann::ordered_json;

namespace {

json rat_json(const Rat& q) { return rat_to_string(q); }

json interval_json(const Interval& iv) {
    return json{{"lo", rat_json(iv.lo)}, {"hi", rat_json(iv.hi)}};
}

json bound_json(const Mod1Bound& b) {
    json j;
    j["value"] = interval_json(b.value);
    j["verdict"] = verdict_name(b.verdict);
    j["eps"] = rat_json(b.eps);
    j["bits_used"] = b.bits_used;
    return j;
}

json int_list_json(const std::vector<Int>& v) {
    json out = json::array();
    for (const Int& n : v) out.push_back(n.get_str());
    return out;
}

json index_list_json(const std::vector<size_t>& v) {
    json out = json::array();
    for (size_t i : v) out.push_back(i);
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string witness_to_json(const WitnessReport& rep) {
    json j;
    j["kind"] = "witness-report";
    j["found"] = rep.found;
    if (rep.found) {
        j["level"] = rep.indices.level;
        j["indices"] = index_list_json(rep.indices.indices);
        j["diff_value"] = rep.diff_value.get_str();
        j["bound"] = bound_json(rep.bound);
    }
    j["tuples_examined"] = rep.tuples_examined.get_str();
    j["distinct_diffs"] = rep.distinct_diffs.get_str();
    j["unknown_diffs"] = rep.unknown_diffs.get_str();
    j["sequence_id"] = rep.sequence_id;
    if (rep.suspected_implementation_error) j["suspected_implementation_error"] = true;
    return dump(j);
}

std::string avoider_to_json(const AvoiderCertificate& cert) {
    json j;
    j["kind"] = "avoider-certificate";
    j["claim"] = cert.claim;
    switch (cert.kind) {
        case TupleCheckKind::ShiftedIn:
            j["check"] = "shifted-in";
            j["check_poly"] = cert.check_poly.describe();
            j["shift"] = rat_json(cert.shift);
            break;
        case TupleCheckKind::DistOutStrict:
            j["check"] = "dist-out-strict";
            j["check_poly"] = cert.check_poly.describe();
            break;
        case TupleCheckKind::InIntervalUnion: {
            j["check"] = "in-interval-union";
            json ivs = json::array();
            for (const auto& [lo, hi] : cert.intervals)
                ivs.push_back(json::array({lo.get_str(), hi.get_str()}));
            j["intervals"] = ivs;
            break;
        }
    }
    j["eps"] = rat_json(cert.eps);
    j["levels"] = cert.levels;
    j["sequence"] = int_list_json(cert.sequence.elements);
    j["sequence_source"] = cert.sequence.source;
    j["complete"] = cert.complete;
    j["verified"] = cert.verified;
    json tuples = json::array();
    for (const auto& rec : cert.tuple_bounds) {
        json t;
        t["level"] = rec.level;
        t["indices"] = index_list_json(rec.indices);
        t["diff_value"] = rec.diff_value.get_str();
        if (cert.kind == TupleCheckKind::InIntervalUnion) {
            t["interval_index"] = rec.interval_index;
        } else {
            t["bound"] = bound_json(rec.bound);
        }
        t["ok"] = rec.ok;
        tuples.push_back(std::move(t));
    }
    j["tuple_bounds"] = std::move(tuples);
    json scans = json::array();
    for (const auto& s : cert.scans) {
        json sc;
        sc["chosen"] = s.chosen.get_str();
        sc["strategy"] = s.strategy;
        sc["candidates_examined"] = s.candidates_examined.get_str();
        sc["tolerance_used"] = rat_json(s.tolerance_used);
        scans.push_back(std::move(sc));
    }
    j["scans"] = std::move(scans);
    return dump(j);
}

std::string separator_to_json(const SeparatorSet& sep) {
    json j;
    j["kind"] = "separator-set";
    j["name"] = sep.name;
    j["truncation"] = sep.truncation;
    j["elements"] = int_list_json(sep.elements);
    j["claimed_in"] = sep.claimed_in;
    j["claimed_not_in"] = sep.claimed_not_in;
    return dump(j);
}

std::string pipeline_to_json(const PipelineReport& rep) {
    json j;
    j["kind"] = "cubic-pipeline-report";
    j["status"] = rep.status == PipelineStatus::Ok ? "ok" : "incomplete";
    j["N"] = rep.N;
    j["quadruples_colored"] = rep.quadruples_colored.get_str();
    j["mono_set"] = rep.mono_set;
    if (rep.status == PipelineStatus::Ok) {
        j["cube_diff_bound"] = bound_json(rep.cube_diff_bound);
        j["mixed_bound_1"] = bound_json(rep.mixed_bound_1);
        j["mixed_bound_2"] = bound_json(rep.mixed_bound_2);
        json w;
        w["indices"] = index_list_json(rep.witness.indices.indices);
        w["diff_value"] = rep.witness.diff_value.get_str();
        w["bound"] = bound_json(rep.witness.bound);
        j["witness"] = std::move(w);
    }
    return dump(j);
}

std::string sarkozy_to_json(const SarkozyReport& rep) {
    json j;
    j["kind"] = "sarkozy-report";
    j["hits"] = int_list_json(rep.hits);
    j["hit_density"] = rat_json(rep.hit_density);
    j["input_density"] = rat_json(rep.input_density);
    j["difference_count"] = rep.difference_count.get_str();
    return dump(j);
}

std::string char_integral_to_json(const Int& m, unsigned depth, const CharIntegral& c) {
    json j;
    j["kind"] = "char-integral";
    j["m"] = m.get_str();
    j["depth"] = depth;
    j["finite_product"] = {{"re", interval_json(c.finite_product.re)},
                           {"im", interval_json(c.finite_product.im)}};
    j["tail_radius"] = rat_json(c.tail_radius);
    j["value"] = {{"re", interval_json(c.value.re)}, {"im", interval_json(c.value.im)}};
    // side-by-side decimal rendering for human consumption
    j["value_decimal"] = {{"re", rat_to_decimal(c.value.re.center(), 40)},
                          {"im", rat_to_decimal(c.value.im.center(), 40)}};
    return dump(j);
}

std::string search_result_to_json(const StructureSearchResult& res) {
    json j;
    j["kind"] = "structure-search";
    j["found"] = res.found();
    if (res.found()) j["witness"] = int_list_json(res.witness->elements);
    j["candidates_examined"] = res.candidates_examined.get_str();
    j["bound"] = res.bound.get_str();
    return dump(j);
}

std::string limit_table_to_json(const BitWord& w, const Int& M,
                                const std::vector<LimitTableEntry>& rows) {
    json j;
    j["kind"] = "limit-table";
    std::string bits;
    for (unsigned s = 1; s <= w.depth(); ++s) bits += w(s) ? '1' : '0';
    j["word"] = bits;
    j["M"] = M.get_str();
    json out = json::array();
    for (const auto& r : rows) {
        json row;
        row["k"] = r.k;
        row["cubic"] = interval_json(r.cubic);
        row["cubic_certified"] = r.cubic_certified;
        row["quadratic"] = interval_json(r.quadratic);
        row["quadratic_certified"] = r.quadratic_certified;
        row["linear"] = interval_json(r.linear);
        row["linear_certified"] = r.linear_certified;
        out.push_back(std::move(row));
    }
    j["rows"] = std::move(out);
    return dump(j);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MalformedInput("cannot write file: " + path);
    out << content;
}

}  // namespace delta
