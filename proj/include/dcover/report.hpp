#pragma once

/// @file report.hpp
/// Deterministic command reports. Every value is an exact string; the three
/// renderings are an aligned table, tab-separated records and JSON.

#include "dcover/exactmath/rational.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcover {

enum class ReportFormat { table, records, json };

inline ReportFormat parse_report_format(const std::string& s) {
    if (s == "table") return ReportFormat::table;
    if (s == "records") return ReportFormat::records;
    if (s == "json") return ReportFormat::json;
    throw std::invalid_argument("unknown format '" + s + "' (expected table, records or json)");
}

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    return s;
}

inline std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Field {
    std::string name;
    std::string value;
};

struct Record {
    std::string kind;
    std::vector<Field> fields;

    Record& add(std::string name, std::string value) {
        fields.push_back({std::move(name), std::move(value)});
        return *this;
    }
    Record& add(std::string name, const Rational& value) { return add(std::move(name), value.str()); }
    Record& add(std::string name, const BigInt& value) { return add(std::move(name), value.str()); }
    Record& add(std::string name, long long value) { return add(std::move(name), std::to_string(value)); }
    Record& add(std::string name, unsigned long long value) { return add(std::move(name), std::to_string(value)); }
    Record& add(std::string name, unsigned long value) { return add(std::move(name), std::to_string(value)); }
    Record& add(std::string name, unsigned value) { return add(std::move(name), std::to_string(value)); }
    Record& add(std::string name, int value) { return add(std::move(name), std::to_string(value)); }
    Record& add(std::string name, bool value) { return add(std::move(name), std::string(value ? "yes" : "no")); }
    Record& add(std::string name, const char* value) { return add(std::move(name), std::string(value)); }
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

class Report {
public:
    Report(std::string command, std::string input, std::string label = "")
        : command_(std::move(command)), input_(std::move(input)), label_(std::move(label)) {
        if (label_.empty()) label_ = input_;
    }

    void stamp(std::string ts) { timestamp_ = std::move(ts); }

    Record& record(std::string kind) {
        records_.push_back({std::move(kind), {}});
        return records_.back();
    }
    void check(std::string name, bool pass, std::string detail = "") {
        checks_.push_back({std::move(name), pass, std::move(detail)});
    }
    void note(std::string text) { notes_.push_back(std::move(text)); }

    const std::vector<Record>& records() const { return records_; }
    const std::vector<CheckResult>& checks() const { return checks_; }
    bool ok() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.pass; }));
    }
    std::string digest() const { return "fnv1a:" + hex64(fnv1a(input_)); }

    std::string render(ReportFormat f) const {
        switch (f) {
            case ReportFormat::table: return render_table();
            case ReportFormat::records: return render_records();
            case ReportFormat::json: return render_json();
        }
        return {};
    }

private:
    static std::string status(bool pass) { return pass ? "PASS" : "FAIL"; }

    std::string render_records() const {
        std::ostringstream os;
        os << "command\t" << command_ << "\n";
        os << "input\t" << escape(input_) << "\n";
        os << "digest\t" << digest() << "\n";
        if (timestamp_) os << "timestamp\t" << *timestamp_ << "\n";
        for (const auto& r : records_) {
            os << "record\t" << r.kind;
            for (const auto& [k, v] : r.fields) os << "\t" << k << "=" << escape(v);
            os << "\n";
        }
        for (const auto& n : notes_) os << "note\t" << escape(n) << "\n";
        for (const auto& c : checks_) {
            os << "check\t" << escape(c.name) << "\t" << status(c.pass);
            if (!c.detail.empty()) os << "\t" << escape(c.detail);
            os << "\n";
        }
        os << "status\t" << status(ok()) << "\n";
        return os.str();
    }

    std::string render_table() const {
        std::ostringstream os;
        os << "# " << command_ << "\n";
        os << "# input " << label_ << " (" << digest() << ")\n";
        if (timestamp_) os << "# at " << *timestamp_ << "\n";
        // Consecutive records of one kind with the same columns form one table.
        for (std::size_t i = 0; i < records_.size();) {
            std::size_t j = i + 1;
            while (j < records_.size() && records_[j].kind == records_[i].kind && same_columns(records_[i], records_[j])) ++j;
            os << "\n[" << records_[i].kind << "]\n";
            if (j - i == 1) {
                std::size_t w = 0;
                for (const auto& fl : records_[i].fields) w = std::max(w, fl.name.size());
                for (const auto& fl : records_[i].fields) os << "  " << pad(fl.name, w) << "  " << fl.value << "\n";
            } else {
                const auto& head = records_[i].fields;
                std::vector<std::size_t> w(head.size());
                for (std::size_t c = 0; c < head.size(); ++c) {
                    w[c] = head[c].name.size();
                    for (std::size_t r = i; r < j; ++r) w[c] = std::max(w[c], records_[r].fields[c].value.size());
                }
                os << " ";
                for (std::size_t c = 0; c < head.size(); ++c) os << " " << cell(head[c].name, w[c], c + 1 == head.size());
                os << "\n";
                for (std::size_t r = i; r < j; ++r) {
                    os << " ";
                    for (std::size_t c = 0; c < head.size(); ++c) {
                        os << " " << cell(records_[r].fields[c].value, w[c], c + 1 == head.size());
                    }
                    os << "\n";
                }
            }
            i = j;
        }
        if (!notes_.empty()) {
            os << "\n";
            for (const auto& n : notes_) os << "note: " << n << "\n";
        }
        if (!checks_.empty()) {
            os << "\n[checks]\n";
            for (const auto& c : checks_) {
                os << "  " << status(c.pass) << "  " << c.name;
                if (!c.detail.empty()) os << "  (" << c.detail << ")";
                os << "\n";
            }
        }
        os << "\n" << status(ok()) << ": " << (checks_.size() - failures()) << "/" << checks_.size()
           << " checks passed\n";
        return os.str();
    }

    std::string render_json() const {
        nlohmann::ordered_json j;
        j["command"] = command_;
        j["input"] = input_;
        j["digest"] = digest();
        if (timestamp_) j["timestamp"] = *timestamp_;
        auto recs = nlohmann::ordered_json::array();
        for (const auto& r : records_) {
            nlohmann::ordered_json o;
            o["kind"] = r.kind;
            for (const auto& [k, v] : r.fields) o[k] = v;
            recs.push_back(std::move(o));
        }
        j["records"] = std::move(recs);
        if (!notes_.empty()) j["notes"] = notes_;
        auto cs = nlohmann::ordered_json::array();
        for (const auto& c : checks_) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["checks"] = std::move(cs);
        j["status"] = status(ok());
        return j.dump(2) + "\n";
    }

    static bool same_columns(const Record& a, const Record& b) {
        if (a.fields.size() != b.fields.size()) return false;
        for (std::size_t i = 0; i < a.fields.size(); ++i) {
            if (a.fields[i].name != b.fields[i].name) return false;
        }
        return true;
    }
    static std::string pad(const std::string& s, std::size_t w) {
        return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
    }
    static std::string cell(const std::string& s, std::size_t w, bool last) { return last ? s : pad(s, w); }
    static std::string escape(const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '\t') {
                out += "\\t";
            } else if (c == '\n') {
                out += "\\n";
            } else if (c == '\\') {
                out += "\\\\";
            } else {
                out += c;
            }
        }
        return out;
    }

    std::string command_;
    std::string input_;
    std::string label_;
    std::optional<std::string> timestamp_;
    std::vector<Record> records_;
    std::vector<CheckResult> checks_;
    std::vector<std::string> notes_;
};

}  // namespace dcover
