#include "mgt/json_io.hpp"

namespace mgt {

json to_json(const ConditionWitness& cw) {
    json j;
    j["kind"] = std::string(condition_name(cw.kind));
    j["u"] = cw.u;
    if (cw.kind == Condition::QC)
        j["base"] = {cw.v, cw.w, cw.y};
    else
        j["base"] = {cw.v, cw.w};
    if (cw.kind == Condition::TDC) j["pair"] = {cw.x, cw.y2};
    j["missing"] = cw.missing;
    return j;
}

json to_json(const ClassificationReport& r) {
    json out = json::array();
    auto entry = [&](const char* name, bool verdict, json witness) {
        json e;
        e["class"] = name;
        e["verdict"] = verdict;
        e["witness"] = verdict ? json(nullptr) : std::move(witness);
        out.push_back(std::move(e));
    };

    json modular_witness;
    if (r.qc_witness)
        modular_witness = to_json(*r.qc_witness);
    else if (r.odd_cycle)
        modular_witness = json{{"odd_cycle", *r.odd_cycle}};
    entry("modular", r.modular, std::move(modular_witness));

    json wm_witness;
    if (r.tc_witness)
        wm_witness = to_json(*r.tc_witness);
    else if (r.qc_witness)
        wm_witness = to_json(*r.qc_witness);
    entry("weakly-modular", r.weakly_modular, std::move(wm_witness));

    json dwm_witness;
    if (r.qc_witness)
        dwm_witness = to_json(*r.qc_witness);
    else if (r.tdc_witness)
        dwm_witness = to_json(*r.tdc_witness);
    entry("diamond-weakly-modular", r.diamond_weakly_modular, std::move(dwm_witness));

    json bridged_witness;
    if (r.isometric_cycle) bridged_witness = json{{"isometric_cycle", *r.isometric_cycle}};
    entry("bridged", r.bridged, std::move(bridged_witness));

    json wb_witness;
    if (r.tc_witness)
        wb_witness = to_json(*r.tc_witness);
    else if (r.qc_witness)
        wb_witness = to_json(*r.qc_witness);
    else if (r.induced_c4)
        wb_witness = json{{"induced_c4", r.induced_c4->to_vector()}};
    entry("weakly-bridged", r.weakly_bridged, std::move(wb_witness));

    return out;
}

json to_json(const AxiomReport& r) {
    json j;
    j["axiom"] = std::string(axiom_name(r.axiom));
    j["holds"] = r.holds;
    j["witness"] = r.witness;
    return j;
}

json to_json(const AmalgamSpec& spec) {
    json j;
    j["g1"] = emit_graph6(spec.g1);
    j["g2"] = emit_graph6(spec.g2);
    json pairs = json::array();
    for (auto [a, b] : spec.iso) pairs.push_back({a, b});
    j["iso"] = std::move(pairs);
    return j;
}

AmalgamSpec amalgam_spec_from_json(const json& j) {
    AmalgamSpec spec;
    spec.g1 = parse_graph6(j.at("g1").get<std::string>());
    spec.g2 = parse_graph6(j.at("g2").get<std::string>());
    for (const auto& p : j.at("iso")) {
        if (!p.is_array() || p.size() != 2)
            throw std::invalid_argument("amalgam spec: iso entries must be [a,b] pairs");
        spec.iso.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return spec;
}

} // namespace mgt
