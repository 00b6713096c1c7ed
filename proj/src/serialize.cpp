#include "nilorb/serialize.hpp"

#include "nilorb/errors.hpp"

namespace nilorb {

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Bipartition& b) { return Json{{"mu", to_json(b.mu)}, {"nu", to_json(b.nu)}}; }

Json to_json(const OrbitSymbol& s) {
    Json j;
    j["type"] = std::string(1, type_char(s.type));
    j["n"] = s.n;
    if (s.type == LieType::B) j["m"] = s.m;
    j["lambda"] = to_json(s.lambda);
    Json chi = Json::object();
    // Largest part first, matching the lambda order.
    for (auto it = s.chi.rbegin(); it != s.chi.rend(); ++it) chi[std::to_string(it->first)] = it->second;
    j["chi"] = chi;
    if (s.type == LieType::D && s.label != DLabel::None) j["label"] = s.label == DLabel::I ? "I" : "II";
    return j;
}

OrbitSymbol symbol_from_json(const Json& j) {
    try {
        const LieType t = parse_type(j.at("type").get<std::string>());
        Partition lambda(j.at("lambda").get<std::vector<int>>());
        std::map<int, int> chi;
        for (const auto& [k, v] : j.at("chi").items()) chi[std::stoi(k)] = v.get<int>();
        OrbitSymbol s;
        switch (t) {
            case LieType::C: s = make_c(lambda, chi); break;
            case LieType::B: s = make_b(j.at("m").get<int>(), lambda, chi); break;
            case LieType::D: {
                DLabel label = DLabel::None;
                if (j.contains("label")) label = j["label"] == "I" ? DLabel::I : DLabel::II;
                s = make_d(lambda, chi, label);
                break;
            }
        }
        if (j.contains("n") && j["n"].get<int>() != s.n) throw Error(ErrorKind::Parse, "symbol json: n disagrees with lambda");
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("symbol json: ") + e.what());
    }
}

Json to_json(const UnipotentClass& u) {
    return Json{{"type", std::string(1, type_char(u.type))}, {"parts", to_json(u.parts)}};
}

Json to_json(const UpsilonSeq& f) { return Json(f); }

Json to_json(const PieceReport& r) {
    Json j;
    j["type"] = std::string(1, type_char(r.type));
    j["n"] = r.n;
    j["agree"] = r.agree;
    j["ms_computed"] = r.ms_computed;
    Json pieces = Json::array();
    for (const auto& block : r.by_psi) {
        const OrbitSymbol& first = r.orbits.at(block.front());
        Json p;
        p["unipotent"] = to_json(psi_star(first).parts);
        p["upsilon"] = to_json(upsilon(first));
        Json members = Json::array();
        for (std::size_t i : block) members.push_back(to_json(r.orbits.at(i)));
        p["members"] = members;
        pieces.push_back(p);
    }
    j["pieces"] = pieces;
    j["witnesses"] = r.witnesses;
    return j;
}

Json census_json(const std::map<std::uint64_t, int>& histogram) {
    Json j = Json::object();
    for (auto it = histogram.rbegin(); it != histogram.rend(); ++it) j[std::to_string(it->first)] = it->second;
    return j;
}

}  // namespace nilorb
