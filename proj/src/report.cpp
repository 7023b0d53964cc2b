#include "ijdom/report.hpp"

#include <sstream>

#include <json.hpp>

#include "ijdom/errors.hpp"

namespace ijdom {

void RunReport::add(const std::string& key, double value) {
    std::ostringstream ss;
    ss << value;
    add(key, ss.str());
}

std::string RunReport::text() const {
    std::ostringstream ss;
    for (const auto& [k, v] : fields_) ss << k << ": " << v << "\n";
    return ss.str();
}

std::string RunReport::json() const {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : fields_) j[k] = v;
    return j.dump(2) + "\n";
}

RunReport RunReport::parse_text(const std::string& body) {
    RunReport r;
    std::istringstream ss(body);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        auto pos = line.find(": ");
        if (pos == std::string::npos) throw InputError("malformed report line: " + line);
        r.add(line.substr(0, pos), line.substr(pos + 2));
    }
    return r;
}

RunReport RunReport::parse_json(const std::string& body) {
    RunReport r;
    auto j = nlohmann::ordered_json::parse(body);
    for (auto it = j.begin(); it != j.end(); ++it) r.add(it.key(), it.value().get<std::string>());
    return r;
}

}  // namespace ijdom
