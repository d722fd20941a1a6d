#include "stacky/fan_io.hpp"

#include <fstream>
#include <sstream>

#include "stacky/errors.hpp"

namespace stacky {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

long long to_int64(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<long long>();
}

IntVector parse_vector(const json& j, int rank, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != rank)
        throw ParseError(std::string(what) + " must be an array of " + std::to_string(rank) +
                         " integers");
    IntVector v(rank);
    for (int i = 0; i < rank; ++i) v(i) = Int(to_int64(j[static_cast<std::size_t>(i)], what));
    return v;
}

IndexSet parse_index_set(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of ray indices");
    IndexSet s;
    for (const json& entry : j) s.push_back(static_cast<int>(to_int64(entry, what)));
    return s;
}

long long int_to_int64(const Int& value, const char* what) {
    if (value > Int(std::numeric_limits<long long>::max()) ||
        value < Int(std::numeric_limits<long long>::min()))
        throw IoError(std::string(what) + " does not fit a 64-bit JSON integer");
    return value.convert_to<long long>();
}

ordered_json vector_to_json(const IntVector& v) {
    ordered_json out = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(int_to_int64(v(i), "ray coordinate"));
    return out;
}

} // namespace

FanDocument parse_fan_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("fan file is not valid JSON: ") + err.what());
    }
    if (!doc.is_object()) throw ParseError("fan file must be a JSON object");
    if (!doc.contains("rank") || !doc.contains("rays") || !doc.contains("max_cones"))
        throw ParseError("fan file needs the keys \"rank\", \"rays\" and \"max_cones\"");

    const int rank = static_cast<int>(to_int64(doc["rank"], "rank"));
    if (rank < 0) throw ParseError("rank must be nonnegative");

    if (!doc["rays"].is_array()) throw ParseError("\"rays\" must be an array");
    std::vector<IntVector> rays;
    for (const json& r : doc["rays"]) rays.push_back(parse_vector(r, rank, "ray"));

    if (!doc["max_cones"].is_array()) throw ParseError("\"max_cones\" must be an array");
    std::vector<IndexSet> cones;
    for (const json& c : doc["max_cones"]) cones.push_back(parse_index_set(c, "cone"));

    FanDocument result{StackyFan(rank, std::move(rays), std::move(cones)), {}, {}};

    if (doc.contains("labels")) {
        if (!doc["labels"].is_array()) throw ParseError("\"labels\" must be an array of strings");
        for (const json& l : doc["labels"]) {
            if (!l.is_string()) throw ParseError("\"labels\" must be an array of strings");
            result.labels.push_back(l.get<std::string>());
        }
    }
    if (doc.contains("history")) {
        if (!doc["history"].is_array()) throw ParseError("\"history\" must be an array");
        for (const json& h : doc["history"]) {
            if (!h.is_object() || !h.contains("cone") || !h.contains("new_ray_index") ||
                !h.contains("new_ray"))
                throw ParseError("history entries need \"cone\", \"new_ray_index\", \"new_ray\"");
            SubdivisionStep step;
            step.cone = parse_index_set(h["cone"], "history cone");
            step.new_ray_index = static_cast<int>(to_int64(h["new_ray_index"], "new_ray_index"));
            step.new_ray = parse_vector(h["new_ray"], rank, "new_ray");
            result.history.push_back(std::move(step));
        }
    }
    return result;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("error while reading '" + path + "'");
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw IoError("error while writing '" + path + "'");
}

FanDocument read_fan_file(const std::string& path) {
    return parse_fan_json(read_text_file(path));
}

FanDocument load_fan_file(const std::string& path) {
    FanDocument doc = read_fan_file(path);
    const ValidationReport& report = doc.fan.validate();
    if (!report.ok)
        throw ValidationError("'" + path + "' failed validation (" + report.axiom +
                              "): " + report.message);
    return doc;
}

ordered_json fan_to_json(const StackyFan& fan, const std::vector<std::string>& labels,
                         const std::vector<SubdivisionStep>& history) {
    ordered_json doc;
    doc["rank"] = fan.rank();
    doc["rays"] = ordered_json::array();
    for (int j = 0; j < fan.num_rays(); ++j)
        doc["rays"].push_back(vector_to_json(fan.ray(j)));
    doc["max_cones"] = ordered_json::array();
    for (const IndexSet& c : fan.max_cones()) doc["max_cones"].push_back(c);
    if (!labels.empty()) doc["labels"] = labels;
    if (!history.empty()) doc["history"] = steps_to_json(history);
    return doc;
}

ordered_json steps_to_json(const std::vector<SubdivisionStep>& steps) {
    ordered_json out = ordered_json::array();
    for (const SubdivisionStep& step : steps) {
        ordered_json entry;
        entry["cone"] = step.cone;
        entry["new_ray_index"] = step.new_ray_index;
        entry["new_ray"] = vector_to_json(step.new_ray);
        out.push_back(std::move(entry));
    }
    return out;
}

namespace {

bool all_scalars(const ordered_json& array) {
    for (const auto& item : array)
        if (item.is_structured()) return false;
    return true;
}

void pretty_print(const ordered_json& node, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string pad_inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    if (node.is_object()) {
        if (node.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : node.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad_inner + "\"" + key + "\": ";
            pretty_print(value, out, indent + 1);
        }
        out += "\n" + pad + "}";
    } else if (node.is_array()) {
        if (node.empty()) {
            out += "[]";
            return;
        }
        if (all_scalars(node)) {
            out += node.dump();
            return;
        }
        out += "[\n";
        bool first = true;
        for (const auto& item : node) {
            if (!first) out += ",\n";
            first = false;
            out += pad_inner;
            pretty_print(item, out, indent + 1);
        }
        out += "\n" + pad + "]";
    } else {
        out += node.dump();
    }
}

} // namespace

std::string pretty_json(const ordered_json& doc) {
    std::string out;
    pretty_print(doc, out, 0);
    return out;
}

ordered_json pullback_to_json(const PullbackMap& map) {
    ordered_json out = ordered_json::array();
    for (std::size_t rho = 0; rho < map.images.size(); ++rho) {
        ordered_json entry;
        entry["generator"] = rho;
        entry["image"] = ordered_json::array();
        for (const auto& [tgt, coeff] : map.images[rho]) {
            ordered_json term;
            term["ray"] = tgt;
            term["coeff"] = int_to_int64(coeff, "pullback coefficient");
            entry["image"].push_back(std::move(term));
        }
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace stacky
