#pragma once

// Zero-ordinate tables.  Files follow the common convention: plain text,
// one positive ordinate per line in ascending order, '#' starting a
// comment line.  Validation is strict; a table that loads is safe to use
// unchecked everywhere downstream.

#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetabound {

struct ZeroTable {
    std::vector<double> ordinates;
    std::string source;

    std::size_t count() const { return ordinates.size(); }
};

inline ZeroTable load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_zeros: cannot open " + path);
    ZeroTable table;
    table.source = path;
    std::string line;
    std::size_t lineno = 0;
    double prev = 0.0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        const char* begin = line.c_str() + pos;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        while (end && *end && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
        if (end == begin || (end && *end))
            throw std::runtime_error("load_zeros: parse error at " + path + ":" +
                                     std::to_string(lineno));
        if (!(v > prev))
            throw std::runtime_error("load_zeros: ordinates not ascending at " + path +
                                     ":" + std::to_string(lineno));
        table.ordinates.push_back(v);
        prev = v;
    }
    if (table.ordinates.empty())
        throw std::runtime_error("load_zeros: no ordinates in " + path);
    if (!(table.ordinates.front() > 14.0))
        throw std::runtime_error("load_zeros: first ordinate below 14 in " + path);
    if (std::fabs(table.ordinates.front() - 14.134725) > 1e-6)
        throw std::runtime_error("load_zeros: first ordinate is not the first zero in " +
                                 path);
    return table;
}

} // namespace zetabound
