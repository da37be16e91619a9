// Copyright 2026 The summon-qec Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "summon/spacetime/configuration.hpp"

namespace summon::spacetime {

/// {"t": …, "x": […]}
nlohmann::json event_to_json(const Event &e);
Event event_from_json(const nlohmann::json &j);

/// {"dim": d, "start": {...}, "diamonds": [{"id": k, "request": {...}, "reveal": {...}}, …]}
/// Schema problems raise InvalidConfiguration; geometry is not validated here.
Configuration configuration_from_json(const nlohmann::json &j);
nlohmann::json configuration_to_json(const Configuration &c);

Configuration parse_configuration(std::string_view text);
Configuration load_configuration(const std::filesystem::path &path);

} // namespace summon::spacetime
