#pragma once

// CSV emission with round-trip-exact floats: every double is printed with
// 17 significant digits, rows end in LF regardless of platform, and field
// order is fixed by the caller's header.  Identical inputs must yield
// byte-identical files.

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace zetabound {

inline constexpr const char* library_version = "0.1.0";

inline std::string csv_field(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& header)
        : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open for writing: " + path);
        out_ << header << '\n';
    }

    // row assembled left to right; templated so mixed field types stay terse
    template <class... Fields>
    void row(const Fields&... fields) {
        bool first = true;
        ((out_ << (first ? (first = false, "") : ",") << format(fields)), ...);
        out_ << '\n';
    }

    void close() {
        out_.close();
        if (!out_) throw std::runtime_error("write failure on CSV close");
    }

private:
    static std::string format(double v) { return csv_field(v); }
    static std::string format(int v) { return std::to_string(v); }
    static std::string format(std::size_t v) { return std::to_string(v); }
    static std::string format(const std::string& v) { return v; }
    static std::string format(const char* v) { return v; }

    std::ofstream out_;
};

} // namespace zetabound
