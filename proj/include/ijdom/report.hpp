#ifndef IJDOM_REPORT_HPP
#define IJDOM_REPORT_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ijdom {

/// Line-oriented run report with a stable field order, also emittable as
/// a single JSON document. parse(emit(r)) == r in both modes.
class RunReport {
  public:
    void add(const std::string& key, const std::string& value) { fields_.emplace_back(key, value); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add(const std::string& key, double value);
    void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }

    const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

    std::string text() const;
    std::string json() const;

    static RunReport parse_text(const std::string& body);
    static RunReport parse_json(const std::string& body);

    bool operator==(const RunReport& o) const = default;

  private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace ijdom

#endif
