#ifndef STACKY_FAN_IO_HPP
#define STACKY_FAN_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stacky/artin.hpp"
#include "stacky/fan.hpp"

namespace stacky {

/// A fan file: `{"rank": d, "rays": [[...], ...], "max_cones": [[...], ...]}`
/// plus the optional keys "labels" (one name per ray) and "history"
/// (subdivision steps); unknown keys are ignored.
struct FanDocument {
    StackyFan fan;
    std::vector<std::string> labels;        // empty when absent
    std::vector<SubdivisionStep> history;   // empty when absent
};

/// Parse only; the fan is not validated.
FanDocument parse_fan_json(const std::string& text);

/// Read and parse; throws IoError on filesystem problems, ParseError on
/// malformed documents.  The fan is not validated.
FanDocument read_fan_file(const std::string& path);

/// Read, parse and validate; throws ValidationError naming the violated
/// axiom if the fan is not a fan.
FanDocument load_fan_file(const std::string& path);

nlohmann::ordered_json fan_to_json(const StackyFan& fan,
                                   const std::vector<std::string>& labels = {},
                                   const std::vector<SubdivisionStep>& history = {});

nlohmann::ordered_json steps_to_json(const std::vector<SubdivisionStep>& steps);
nlohmann::ordered_json pullback_to_json(const PullbackMap& map);

/// Two-space-indented JSON with arrays of scalars kept on one line, so ray
/// vectors and cone index sets stay readable.
std::string pretty_json(const nlohmann::ordered_json& doc);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

} // namespace stacky

#endif
