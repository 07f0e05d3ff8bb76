#include "planekit/json_io.hpp"

#include <json.hpp>

#include "planekit/matpoly.hpp"

namespace planekit {

using nlohmann::json;

std::string json_of_scalar(const Scalar& s) { return json(s.str()).dump(); }
std::string json_of_unipoly(const UniPoly& f) { return json(f.str()).dump(); }
std::string json_of_mat2(const Mat2& m) { return json(m.str()).dump(); }
std::string json_of_matpoly(const MatPoly2& m) { return json(m.str()).dump(); }
std::string json_of_aut(const PolyAut& p) { return json(p.str()).dump(); }

std::string json_of_vdk(const VdkWord& w) {
    json out;
    out["factors"] = json::array();
    for (const VdkFactor& f : w.factors) {
        out["factors"].push_back(
            {{"kind", f.kind == Membership::Affine ? "affine" : "elementary"},
             {"map", f.value.str()}});
    }
    out["tail"] = w.tail.str();
    return out.dump();
}

std::string json_of_tau_word(const TauWord& w) {
    json out;
    out["factors"] = json::array();
    for (const TauFactor& f : w.factors) {
        out["factors"].push_back({{"delta", f.delta.str()}, {"f", f.f.str()}});
    }
    return out.dump();
}

std::string json_of_e_word(const EWord& w) {
    json out;
    out["factors"] = json::array();
    for (const EFactor& f : w.factors) {
        out["factors"].push_back({{"delta", f.delta.str()}, {"f", f.f.str()}});
    }
    return out.dump();
}

std::string json_of_classification(const Classification& c) {
    json out;
    out["k_reducible"] = c.k_reducible;
    out["unipotent"] = c.unipotent;
    out["quasi_unipotent"] = c.quasi_unipotent;
    if (c.quasi_unipotent) {
        out["quasi_order"] = c.quasi_order;
    } else {
        out["quasi_order"] = nullptr;
    }
    return out.dump();
}

std::string json_of_degree_report(const DegreeLawReport& r) {
    json out;
    out["aut_degree"] = r.aut_degree;
    out["mat_degree"] = r.mat_degree;
    out["factor_degrees"] = r.factor_degrees;
    return out.dump();
}

std::string json_of_check_report(const CheckReport& r) {
    json out;
    out["checks"] = json::array();
    for (const auto& [name, ok] : r.checks) {
        out["checks"].push_back({{"name", name}, {"pass", ok}});
    }
    out["all_pass"] = r.all_pass();
    return out.dump();
}

std::string json_of_distinctness(const DistinctnessReport& r) {
    json out;
    out["words_enumerated"] = r.words_enumerated;
    out["normal_forms"] = r.normal_forms;
    out["collisions"] = r.collisions;
    out["mismatches"] = r.mismatches;
    out["clean"] = r.clean();
    return out.dump();
}

std::string json_of_pingpong(const PingPongReport& r) {
    json out;
    out["checks"] = r.checks;
    out["violations"] = r.violations;
    out["clean"] = r.clean();
    return out.dump();
}

std::string json_of_congruence(const CongruenceData& c) {
    json out;
    out["modulus"] = c.modulus;
    out["index"] = c.index;
    out["generators"] = json::array();
    for (const Mat2& g : c.generators) out["generators"].push_back(g.str());
    out["transversal"] = json::array();
    for (const Mat2& g : c.transversal) out["transversal"].push_back(g.str());
    return out.dump();
}

std::string json_of_blockmat(const BlockMat& b) {
    json rows = json::array();
    for (int i = 0; i < b.blocks; ++i) {
        json row = json::array();
        for (int j = 0; j < b.blocks; ++j) row.push_back(b.at(i, j).str());
        rows.push_back(row);
    }
    json out;
    out["blocks"] = b.blocks;
    out["entries"] = rows;
    return out.dump();
}

std::string json_of_verdict(const HypothesisVerdict& v) {
    json out;
    out["counterexample_found"] = v.counterexample_found;
    if (v.counterexample_found) {
        out["word"] = v.word;
        out["witness"] = v.witness ? json(v.witness->str()) : json(nullptr);
    }
    return out.dump();
}

std::string json_envelope(const std::string& verb, const FieldSpec& field,
                          const std::string& result_json) {
    json out;
    out["schema"] = "planekit/1";
    out["verb"] = verb;
    out["field"] = field.str();
    out["result"] = json::parse(result_json);
    return out.dump();
}

} // namespace planekit
