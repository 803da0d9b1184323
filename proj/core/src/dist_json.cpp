#include "kelly/dist_json.hpp"

#include "kelly/errors.hpp"

#include <string>

namespace kelly {

namespace {

using nlohmann::json;

double number(const json& obj, const char* key, const std::string& type) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw InvalidDistribution(type + " spec is missing \"" + key + "\"");
    if (!it->is_number()) throw InvalidDistribution(type + " field \"" + key + "\" must be a number");
    return it->get<double>();
}

const json& array_field(const json& obj, const char* key, const std::string& type) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw InvalidDistribution(type + " spec is missing \"" + key + "\"");
    if (!it->is_array()) throw InvalidDistribution(type + " field \"" + key + "\" must be an array");
    return *it;
}

std::vector<double> number_list(const json& arr, const std::string& what) {
    std::vector<double> out;
    out.reserve(arr.size());
    for (const json& v : arr) {
        if (!v.is_number()) throw InvalidDistribution(what + " must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

const json& pair_at(const json& item, const std::string& what) {
    if (!item.is_array() || item.size() != 2) {
        throw InvalidDistribution(what + " entries must be two-element arrays");
    }
    return item;
}

}  // namespace

PayoffDistribution dist_from_json(const json& spec) {
    if (!spec.is_object()) throw InvalidDistribution("distribution spec must be a JSON object");
    const auto type_it = spec.find("type");
    if (type_it == spec.end() || !type_it->is_string()) {
        throw InvalidDistribution("distribution spec needs a string \"type\"");
    }
    const std::string type = type_it->get<std::string>();

    if (type == "dirac") return PayoffDistribution::dirac(number(spec, "b", type));
    if (type == "uniform") {
        return PayoffDistribution::uniform(number(spec, "lo", type), number(spec, "hi", type));
    }
    if (type == "pareto") {
        return PayoffDistribution::pareto(number(spec, "alpha", type), number(spec, "xmin", type));
    }
    if (type == "histogram") {
        return PayoffDistribution::histogram(
            number_list(array_field(spec, "edges", type), "histogram edges"),
            number_list(array_field(spec, "masses", type), "histogram masses"));
    }
    if (type == "atoms") {
        std::vector<Atom> points;
        for (const json& item : array_field(spec, "points", type)) {
            const json& pair = pair_at(item, "atoms points");
            if (!pair[0].is_number() || !pair[1].is_number()) {
                throw InvalidDistribution("atoms points must be [payoff, weight] numbers");
            }
            points.push_back({pair[0].get<double>(), pair[1].get<double>()});
        }
        return PayoffDistribution::atoms(std::move(points));
    }
    if (type == "mixture") {
        std::vector<MixtureComponent> parts;
        for (const json& item : array_field(spec, "parts", type)) {
            const json& pair = pair_at(item, "mixture parts");
            if (!pair[0].is_number()) throw InvalidDistribution("mixture weight must be a number");
            parts.push_back({pair[0].get<double>(), dist_from_json(pair[1])});
        }
        return PayoffDistribution::mixture(std::move(parts));
    }
    throw InvalidDistribution("unknown distribution type \"" + type + "\"");
}

PayoffDistribution parse_dist(std::string_view text) {
    json spec;
    try {
        spec = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidDistribution(std::string("distribution spec is not valid JSON: ") + e.what());
    }
    return dist_from_json(spec);
}

json dist_to_json(const PayoffDistribution& dist) {
    struct Encoder {
        json operator()(const Dirac& d) const { return {{"type", "dirac"}, {"b", d.b0}}; }
        json operator()(const Atoms& a) const {
            json points = json::array();
            for (const Atom& atom : a.points) points.push_back({atom.payoff, atom.weight});
            return {{"type", "atoms"}, {"points", points}};
        }
        json operator()(const Uniform& u) const {
            return {{"type", "uniform"}, {"lo", u.lo}, {"hi", u.hi}};
        }
        json operator()(const Histogram& h) const {
            return {{"type", "histogram"}, {"edges", h.edges}, {"masses", h.masses}};
        }
        json operator()(const Pareto& p) const {
            return {{"type", "pareto"}, {"alpha", p.alpha}, {"xmin", p.xmin}};
        }
        json operator()(const Mixture& m) const {
            json parts = json::array();
            for (const MixtureComponent& c : m.parts) {
                parts.push_back(json::array({c.weight, dist_to_json(c.dist)}));
            }
            return {{"type", "mixture"}, {"parts", parts}};
        }
    };
    return std::visit(Encoder{}, dist.variant());
}

}  // namespace kelly
