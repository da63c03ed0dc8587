#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace gre {

using std::int64_t;

/// Minimal JSON value with insertion-ordered objects and doubles printed with
/// 17 significant digits, so serialized reports are byte-stable across runs.
class Json {
public:
    Json();
    Json(bool b);
    Json(int v);
    Json(int64_t v);
    Json(double v);
    Json(const char* s);
    Json(std::string s);

    static Json object();
    static Json array();

    bool is_object() const noexcept;
    bool is_array() const noexcept;

    /// Object access; inserts a null member when the key is new.
    Json& operator[](const std::string& key);

    void push_back(Json v);
    size_t size() const noexcept;

    /// Read-only element access. items() requires an array, members() an
    /// object; both throw std::logic_error otherwise.
    const std::vector<Json>& items() const;
    const std::vector<std::pair<std::string, Json>>& members() const;

    /// Typed value access; throws std::logic_error on a kind mismatch.
    /// as_double() also accepts integers.
    bool as_bool() const;
    int64_t as_int() const;
    double as_double() const;
    const std::string& as_string() const;

    /// Object member lookup without insertion; nullptr when absent.
    const Json* find(const std::string& key) const;

    std::string dump(int indent = 2) const;
    void dump(std::ostream& os, int indent = 2) const;

private:
    enum class Kind { Null, Bool, Int, Double, String, Array, Object };

    void dump_impl(std::ostream& os, int indent, int depth) const;

    Kind kind_;
    bool bool_ = false;
    int64_t int_ = 0;
    double double_ = 0.0;
    std::string string_;
    std::vector<Json> items_;
    std::vector<std::pair<std::string, Json>> members_;
};

enum class Verdict { Pass, Fail, HypothesisNotMet, TrendOnly };

const char* to_string(Verdict v);

/// Outcome of one verification: the claim checked, the hypothesis actually
/// used, the measured statistics, and a verdict. A report may aggregate
/// sub-reports in `parts`; pass/fail then reflects the whole tree.
struct Report {
    std::string claim;
    Json hypothesis = Json::object();
    Json statistics = Json::array();
    Verdict verdict = Verdict::Pass;
    std::vector<std::string> notes;
    std::vector<Report> parts;

    /// Pass and trend-only both count as success.
    bool passed() const noexcept {
        return verdict == Verdict::Pass || verdict == Verdict::TrendOnly;
    }

    Json to_json() const;
};

/// CSV projection of a report's statistics rows. The header comes from the
/// first row's keys (rows must be flat objects sharing one shape); bools are
/// encoded as 0/1 and doubles keep 17 significant digits.
void write_statistics_csv(const Report& report, std::ostream& os);

} // namespace gre
