#pragma once

#include "crsym/catalog.hpp"

#include <json.hpp>

#include <string>

namespace crsym {

inline constexpr int kSchemaVersion = 1;

class ModelFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

nlohmann::ordered_json model_to_json(const ModelRecord& rec);
ModelRecord model_from_json(const nlohmann::ordered_json& j);
ModelRecord load_model_file(const std::string& path);
void save_model_file(const ModelRecord& rec, const std::string& path);

nlohmann::ordered_json report_to_json(const VerificationReport& rep);
nlohmann::ordered_json fingerprint_to_json(const Fingerprint& fp);
nlohmann::ordered_json fields_to_json(const std::vector<HoloField>& fields);

}  // namespace crsym
