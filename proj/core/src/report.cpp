#include "gre/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gre {

namespace {

void write_escaped(std::ostream& os, const std::string& s) {
    os << '"';
    for (const char c : s) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\r': os << "\\r"; break;
            case '\t': os << "\\t"; break;
            case '\b': os << "\\b"; break;
            case '\f': os << "\\f"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    os << buf;
                } else {
                    os << c;
                }
        }
    }
    os << '"';
}

void write_double(std::ostream& os, double v) {
    if (!std::isfinite(v)) {
        os << "null";
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

} // namespace

Json::Json() : kind_(Kind::Null) {}
Json::Json(bool b) : kind_(Kind::Bool), bool_(b) {}
Json::Json(int v) : kind_(Kind::Int), int_(v) {}
Json::Json(int64_t v) : kind_(Kind::Int), int_(v) {}
Json::Json(double v) : kind_(Kind::Double), double_(v) {}
Json::Json(const char* s) : kind_(Kind::String), string_(s) {}
Json::Json(std::string s) : kind_(Kind::String), string_(std::move(s)) {}

Json Json::object() {
    Json j;
    j.kind_ = Kind::Object;
    return j;
}

Json Json::array() {
    Json j;
    j.kind_ = Kind::Array;
    return j;
}

bool Json::is_object() const noexcept { return kind_ == Kind::Object; }
bool Json::is_array() const noexcept { return kind_ == Kind::Array; }

Json& Json::operator[](const std::string& key) {
    if (kind_ == Kind::Null) kind_ = Kind::Object;
    if (kind_ != Kind::Object) {
        throw std::logic_error("Json::operator[] on a non-object");
    }
    for (auto& [k, v] : members_) {
        if (k == key) return v;
    }
    members_.emplace_back(key, Json());
    return members_.back().second;
}

void Json::push_back(Json v) {
    if (kind_ == Kind::Null) kind_ = Kind::Array;
    if (kind_ != Kind::Array) {
        throw std::logic_error("Json::push_back on a non-array");
    }
    items_.push_back(std::move(v));
}

size_t Json::size() const noexcept {
    if (kind_ == Kind::Array) return items_.size();
    if (kind_ == Kind::Object) return members_.size();
    return 0;
}

const std::vector<Json>& Json::items() const {
    if (kind_ != Kind::Array) throw std::logic_error("Json::items on a non-array");
    return items_;
}

const std::vector<std::pair<std::string, Json>>& Json::members() const {
    if (kind_ != Kind::Object) throw std::logic_error("Json::members on a non-object");
    return members_;
}

bool Json::as_bool() const {
    if (kind_ != Kind::Bool) throw std::logic_error("Json::as_bool on a non-boolean");
    return bool_;
}

int64_t Json::as_int() const {
    if (kind_ != Kind::Int) throw std::logic_error("Json::as_int on a non-integer");
    return int_;
}

double Json::as_double() const {
    if (kind_ == Kind::Int) return static_cast<double>(int_);
    if (kind_ != Kind::Double) throw std::logic_error("Json::as_double on a non-number");
    return double_;
}

const std::string& Json::as_string() const {
    if (kind_ != Kind::String) throw std::logic_error("Json::as_string on a non-string");
    return string_;
}

const Json* Json::find(const std::string& key) const {
    if (kind_ != Kind::Object) throw std::logic_error("Json::find on a non-object");
    for (const auto& [k, v] : members_) {
        if (k == key) return &v;
    }
    return nullptr;
}

void Json::dump_impl(std::ostream& os, int indent, int depth) const {
    const std::string pad(static_cast<size_t>(indent) * (depth + 1), ' ');
    const std::string closing_pad(static_cast<size_t>(indent) * depth, ' ');
    switch (kind_) {
        case Kind::Null: os << "null"; break;
        case Kind::Bool: os << (bool_ ? "true" : "false"); break;
        case Kind::Int: os << int_; break;
        case Kind::Double: write_double(os, double_); break;
        case Kind::String: write_escaped(os, string_); break;
        case Kind::Array:
            if (items_.empty()) {
                os << "[]";
                break;
            }
            os << "[\n";
            for (size_t i = 0; i < items_.size(); ++i) {
                os << pad;
                items_[i].dump_impl(os, indent, depth + 1);
                os << (i + 1 < items_.size() ? ",\n" : "\n");
            }
            os << closing_pad << ']';
            break;
        case Kind::Object:
            if (members_.empty()) {
                os << "{}";
                break;
            }
            os << "{\n";
            for (size_t i = 0; i < members_.size(); ++i) {
                os << pad;
                write_escaped(os, members_[i].first);
                os << ": ";
                members_[i].second.dump_impl(os, indent, depth + 1);
                os << (i + 1 < members_.size() ? ",\n" : "\n");
            }
            os << closing_pad << '}';
            break;
    }
}

void Json::dump(std::ostream& os, int indent) const { dump_impl(os, indent, 0); }

std::string Json::dump(int indent) const {
    std::ostringstream os;
    dump(os, indent);
    return os.str();
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::HypothesisNotMet: return "hypothesis-not-met";
        case Verdict::TrendOnly: return "trend-only";
    }
    return "fail";
}

Json Report::to_json() const {
    Json j = Json::object();
    j["claim"] = claim;
    j["hypothesis"] = hypothesis;
    j["statistics"] = statistics;
    j["verdict"] = to_string(verdict);
    if (!notes.empty()) {
        Json n = Json::array();
        for (const auto& note : notes) n.push_back(note);
        j["notes"] = std::move(n);
    }
    if (!parts.empty()) {
        Json p = Json::array();
        for (const auto& part : parts) p.push_back(part.to_json());
        j["parts"] = std::move(p);
    }
    return j;
}

namespace {

std::string csv_cell(const Json& v) {
    if (v.is_array() || v.is_object()) {
        throw std::logic_error("CSV statistics rows must be flat");
    }
    std::string s = v.dump(0);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        s = s.substr(1, s.size() - 2);
    }
    if (s == "true") return "1";
    if (s == "false") return "0";
    return s;
}

} // namespace

void write_statistics_csv(const Report& report, std::ostream& os) {
    const Json& stats = report.statistics;
    if (!stats.is_array() || stats.size() == 0) return;

    const auto& header_row = stats.items().front().members();
    for (size_t i = 0; i < header_row.size(); ++i) {
        os << (i ? "," : "") << header_row[i].first;
    }
    os << '\n';
    for (const Json& row : stats.items()) {
        const auto& cells = row.members();
        if (cells.size() != header_row.size()) {
            throw std::logic_error("CSV statistics rows must share one shape");
        }
        for (size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].first != header_row[i].first) {
                throw std::logic_error("CSV statistics rows must share one shape");
            }
            os << (i ? "," : "") << csv_cell(cells[i].second);
        }
        os << '\n';
    }
}

} // namespace gre
