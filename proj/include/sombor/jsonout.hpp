#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace sombor {

/// Doubles rendered with 12 significant digits; output is byte-stable for
/// identical inputs.
inline std::string format_number(double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

/// Minimal ordered JSON builder: fields appear in insertion order so
/// emitted lines diff cleanly.
class JsonWriter {
public:
    JsonWriter& begin_object() {
        sep();
        out_ += '{';
        need_comma_ = false;
        return *this;
    }
    JsonWriter& end_object() {
        out_ += '}';
        need_comma_ = true;
        return *this;
    }
    JsonWriter& begin_array() {
        sep();
        out_ += '[';
        need_comma_ = false;
        return *this;
    }
    JsonWriter& end_array() {
        out_ += ']';
        need_comma_ = true;
        return *this;
    }

    JsonWriter& key(const std::string& k) {
        sep();
        out_ += '"';
        out_ += json_escape(k);
        out_ += "\":";
        need_comma_ = false;
        return *this;
    }

    JsonWriter& value(double v) { return raw(format_number(v)); }
    JsonWriter& value(long v) { return raw(std::to_string(v)); }
    JsonWriter& value(int v) { return raw(std::to_string(v)); }
    JsonWriter& value(bool v) { return raw(v ? "true" : "false"); }
    JsonWriter& value(const std::string& v) { return raw('"' + json_escape(v) + '"'); }
    JsonWriter& value(const char* v) { return value(std::string(v)); }

    const std::string& str() const { return out_; }

private:
    JsonWriter& raw(const std::string& s) {
        sep();
        out_ += s;
        need_comma_ = true;
        return *this;
    }
    void sep() {
        if (need_comma_) out_ += ',';
        need_comma_ = false;
    }

    std::string out_;
    bool need_comma_ = false;
};

} // namespace sombor
