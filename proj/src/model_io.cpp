#include "credal/model_io.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace credal {

namespace {

using nlohmann::json;

constexpr double kParseTol = 1e-6;

const json& field(const json& j, const char* name, const std::string& where) {
    auto it = j.find(name);
    if (it == j.end())
        throw malformed_document(where + ": missing field '" + name + "'");
    return *it;
}

} // namespace

ModelDocument parse_model(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw malformed_document(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object())
        throw malformed_document("document root must be an object");

    ModelDocument doc;
    const json& jframe = field(j, "frame", "document");
    if (!jframe.is_array() || jframe.empty())
        throw malformed_document("frame: expected a non-empty array of labels");
    std::vector<std::string> labels;
    for (const auto& l : jframe) {
        if (!l.is_string())
            throw malformed_document("frame: labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    doc.frame = make_frame(std::move(labels));

    const json& jmodel = field(j, "model", "document");
    std::string kind = field(jmodel, "kind", "model").get<std::string>();
    if (kind == "credal") {
        doc.kind = ModelDocument::Kind::credal;
        const json& pts = field(jmodel, "extreme_points", "model");
        if (!pts.is_array() || pts.empty())
            throw malformed_document("model.extreme_points: expected a non-empty array");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& row = pts[i];
            std::string where = "model.extreme_points[" + std::to_string(i) + "]";
            if (!row.is_array() || row.size() != doc.frame->size())
                throw malformed_document(where + ": expected " +
                                         std::to_string(doc.frame->size()) + " weights");
            std::vector<double> w;
            double sum = 0.0;
            for (const auto& v : row) {
                if (!v.is_number())
                    throw malformed_document(where + ": weights must be numbers");
                double d = v.get<double>();
                if (d < -kParseTol)
                    throw invalid_model(where + ": negative weight");
                w.push_back(std::max(d, 0.0));
                sum += std::max(d, 0.0);
            }
            if (std::abs(sum - 1.0) > kParseTol)
                throw invalid_model(where + ": weights sum to " + std::to_string(sum) +
                                    ", expected 1");
            doc.extreme_points.push_back(std::move(w));
        }
    } else if (kind == "mass") {
        doc.kind = ModelDocument::Kind::mass;
        const json& focal = field(jmodel, "focal", "model");
        if (!focal.is_array() || focal.empty())
            throw malformed_document("model.focal: expected a non-empty array");
        double sum = 0.0;
        for (std::size_t i = 0; i < focal.size(); ++i) {
            std::string where = "model.focal[" + std::to_string(i) + "]";
            const auto& entry = focal[i];
            const json& set = field(entry, "set", where);
            const json& mass = field(entry, "mass", where);
            if (!set.is_array() || set.empty())
                throw malformed_document(where + ".set: expected a non-empty array");
            std::vector<std::string> members;
            for (const auto& l : set) {
                if (!l.is_string())
                    throw malformed_document(where + ".set: labels must be strings");
                std::string label = l.get<std::string>();
                doc.frame->index_of(label); // throws unknown_outcome
                members.push_back(std::move(label));
            }
            if (!mass.is_number())
                throw malformed_document(where + ".mass: expected a number");
            double m = mass.get<double>();
            if (m <= 0.0 || m > 1.0 + kParseTol)
                throw invalid_model(where + ".mass: must lie in (0,1]");
            sum += m;
            doc.focal.push_back({std::move(members), m});
        }
        if (std::abs(sum - 1.0) > kParseTol)
            throw invalid_model("model.focal: masses sum to " + std::to_string(sum) +
                                ", expected 1");
    } else {
        throw malformed_document("model.kind: expected \"credal\" or \"mass\"");
    }
    return doc;
}

std::string serialize_model(const ModelDocument& doc) {
    json j;
    j["frame"] = doc.frame->outcomes();
    if (doc.kind == ModelDocument::Kind::credal) {
        j["model"]["kind"] = "credal";
        j["model"]["extreme_points"] = doc.extreme_points;
    } else {
        j["model"]["kind"] = "mass";
        json focal = json::array();
        for (const auto& [set, mass] : doc.focal)
            focal.push_back({{"set", set}, {"mass", mass}});
        j["model"]["focal"] = std::move(focal);
    }
    return j.dump(2) + "\n";
}

CredalSet model_credal(const ModelDocument& doc) {
    if (doc.kind == ModelDocument::Kind::mass)
        return credal_from_mass(model_mass(doc));
    std::vector<Distribution> gens;
    for (auto w : doc.extreme_points) {
        double sum = std::accumulate(w.begin(), w.end(), 0.0);
        for (double& v : w)
            v /= sum; // renormalize to the internal 1e-9 tolerance
        gens.emplace_back(doc.frame, std::move(w));
    }
    return CredalSet(std::move(gens));
}

MassAssignment model_mass(const ModelDocument& doc) {
    if (doc.kind != ModelDocument::Kind::mass)
        throw invalid_model("document does not hold a mass model");
    double sum = 0.0;
    for (const auto& [set, mass] : doc.focal)
        sum += mass;
    std::vector<std::pair<Event, double>> focal;
    for (const auto& [set, mass] : doc.focal)
        focal.push_back({Event(doc.frame, set), mass / sum});
    return MassAssignment(doc.frame, std::move(focal));
}

Event parse_event(const FramePtr& frame, const std::string& csv) {
    std::vector<std::string> members;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto begin = item.find_first_not_of(" \t");
        if (begin == std::string::npos)
            continue;
        auto end = item.find_last_not_of(" \t");
        members.push_back(item.substr(begin, end - begin + 1));
    }
    return Event(frame, members);
}

} // namespace credal
