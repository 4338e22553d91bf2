#include "uoplab/datum_io.hpp"

#include <algorithm>
#include <fstream>

namespace uop {

using nlohmann::json;

namespace {

std::vector<std::vector<int>> read_vectors(const json& j, const std::string& key, int rank) {
    if (!j.contains(key) || !j[key].is_array())
        throw parse_error("missing or non-array field '" + key + "'");
    std::vector<std::vector<int>> out;
    for (const auto& row : j[key]) {
        if (!row.is_array()) throw parse_error("field '" + key + "' must hold integer vectors");
        std::vector<int> v;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw parse_error("non-integer entry in '" + key + "'");
            v.push_back(x.get<int>());
        }
        if (static_cast<int>(v.size()) != rank)
            throw parse_error("vector of length " + std::to_string(v.size()) + " in '" + key +
                              "', expected rank " + std::to_string(rank));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

RootDatum root_datum_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("datum file must hold a JSON object");
    if (!j.contains("name") || !j["name"].is_string()) throw parse_error("missing 'name'");
    if (!j.contains("rank") || !j["rank"].is_number_integer()) throw parse_error("missing 'rank'");
    const int rank = j["rank"].get<int>();
    auto positive = read_vectors(j, "positive_roots", rank);
    auto simple = read_vectors(j, "simple_roots", rank);
    auto coroots = read_vectors(j, "positive_coroots", rank);

    std::vector<int> simple_indices;
    for (const auto& s : simple) {
        auto it = std::find(positive.begin(), positive.end(), s);
        if (it == positive.end())
            throw invalid_datum("simple root not listed among the positive roots");
        simple_indices.push_back(static_cast<int>(it - positive.begin()));
    }
    return RootDatum(j["name"].get<std::string>(), rank, std::move(positive),
                     std::move(simple_indices), std::move(coroots));
}

RootDatum load_root_datum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open datum file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error("malformed JSON in '" + path + "': " + e.what());
    }
    return root_datum_from_json(j);
}

json root_datum_to_json(const RootDatum& d) {
    json j;
    j["name"] = d.name();
    j["rank"] = d.rank();
    j["positive_roots"] = d.positive_roots();
    json simple = json::array();
    for (int i : d.simple_indices()) simple.push_back(d.positive_roots()[i]);
    j["simple_roots"] = simple;
    j["positive_coroots"] = d.positive_coroots();
    return j;
}

RootDatum resolve_group(const std::string& name_or_path) {
    for (const auto& p : RootDatum::preset_names())
        if (p == name_or_path) return RootDatum::preset(name_or_path);
    if (name_or_path.find('/') == std::string::npos &&
        name_or_path.find('.') == std::string::npos) {
        std::string known;
        for (const auto& p : RootDatum::preset_names()) known += (known.empty() ? "" : ", ") + p;
        throw config_error("unknown preset group '" + name_or_path + "' (presets: " + known +
                           "); pass a path to load a custom datum file");
    }
    return load_root_datum(name_or_path);
}

json certificate_to_json(const IntegralityCertificate& cert) {
    json j;
    j["group"] = cert.group;
    j["lambda"] = cert.lambda;
    j["degree"] = cert.degree;
    json coeffs = json::array();
    for (const auto& c : cert.coefficients) {
        json e;
        e["power"] = c.power;
        json sph = json::array();
        for (const auto& [cw, w] : c.spherical) {
            json s;
            s["coweight"] = cw;
            s["weight"] = w.to_string();
            sph.push_back(std::move(s));
        }
        e["spherical"] = std::move(sph);
        e["raw"] = c.raw.to_string();
        coeffs.push_back(std::move(e));
    }
    j["coefficients"] = std::move(coeffs);
    j["checks"] = {{"hecke_identity", cert.checks.hecke_identity},
                   {"projected_identity", cert.checks.projected_identity},
                   {"satake_roundtrip", cert.checks.satake_roundtrip}};
    json specs = json::array();
    for (const auto& [q, ok] : cert.q_specializations)
        specs.push_back({{"q", q}, {"ok", ok}});
    j["q_specializations"] = std::move(specs);
    return j;
}

void write_certificate(const IntegralityCertificate& cert, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot write certificate to '" + path + "'");
    out << certificate_to_json(cert).dump(2) << "\n";
}

}  // namespace uop
