#pragma once

#include <string>

#include <json.hpp>

#include "ddp/model.hpp"

namespace ddp {

nlohmann::json to_json(const Instance& inst);
nlohmann::json to_json(const Schedule& sched);

// Throw std::invalid_argument on malformed documents.
Instance instance_from_json(const nlohmann::json& j);
Schedule schedule_from_json(const nlohmann::json& j);

Instance load_instance(const std::string& path);
Schedule load_schedule(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

}  // namespace ddp
