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
#include "summon/spacetime/config_json.hpp"

#include <fstream>
#include <sstream>

#include "summon/error.hpp"

namespace summon::spacetime {

using nlohmann::json;

json event_to_json(const Event &e) { return json{{"t", e.t}, {"x", e.x}}; }

Event event_from_json(const json &j) {
    if (!j.is_object() || !j.contains("t") || !j.contains("x") || !j.at("t").is_number() ||
        !j.at("x").is_array()) {
        throw InvalidConfiguration("event needs a numeric \"t\" and an array \"x\"");
    }
    Event e;
    e.t = j.at("t").get<double>();
    for (const auto &c : j.at("x")) {
        if (!c.is_number()) {
            throw InvalidConfiguration("event coordinates must be numbers");
        }
        e.x.push_back(c.get<double>());
    }
    return e;
}

Configuration configuration_from_json(const json &j) {
    if (!j.is_object()) {
        throw InvalidConfiguration("configuration must be a JSON object");
    }
    for (const char *key : {"dim", "start", "diamonds"}) {
        if (!j.contains(key)) {
            throw InvalidConfiguration(std::string("configuration is missing \"") + key + "\"");
        }
    }
    if (!j.at("dim").is_number_unsigned()) {
        throw InvalidConfiguration("\"dim\" must be a non-negative integer");
    }
    if (!j.at("diamonds").is_array()) {
        throw InvalidConfiguration("\"diamonds\" must be an array");
    }
    Configuration c;
    c.dim = j.at("dim").get<std::size_t>();
    c.start = event_from_json(j.at("start"));
    for (const auto &d : j.at("diamonds")) {
        if (!d.is_object() || !d.contains("id") || !d.at("id").is_number_unsigned() ||
            !d.contains("request") || !d.contains("reveal")) {
            throw InvalidConfiguration("each diamond needs \"id\", \"request\" and \"reveal\"");
        }
        c.diamonds.push_back({d.at("id").get<std::size_t>(), event_from_json(d.at("request")),
                              event_from_json(d.at("reveal"))});
    }
    return c;
}

json configuration_to_json(const Configuration &c) {
    json diamonds = json::array();
    for (const auto &d : c.diamonds) {
        diamonds.push_back(
            {{"id", d.id}, {"request", event_to_json(d.request)}, {"reveal", event_to_json(d.reveal)}});
    }
    return json{{"dim", c.dim}, {"start", event_to_json(c.start)}, {"diamonds", diamonds}};
}

Configuration parse_configuration(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InvalidConfiguration(std::string("malformed configuration JSON: ") + e.what());
    }
    return configuration_from_json(j);
}

Configuration load_configuration(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidConfiguration("cannot open configuration " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_configuration(buf.str());
}

} // namespace summon::spacetime
