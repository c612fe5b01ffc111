#include "monoword/cli/grid.hpp"

#include <cmath>
#include <sstream>

namespace monoword::cli {

namespace {

double parse_number(const std::string& token)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + token + "'");
    }
    if (used != token.size())
        throw UsageError("not a number: '" + token + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(item);
    if (!text.empty() && text.back() == sep)
        out.emplace_back();
    return out;
}

void require_increasing(const std::vector<double>& g, const std::string& text)
{
    if (g.empty())
        throw UsageError("empty grid");
    for (std::size_t i = 1; i < g.size(); ++i)
        if (!(g[i] > g[i - 1]))
            throw UsageError("grid '" + text + "' is not strictly increasing");
}

}  // namespace

std::vector<double> parse_real_grid(const std::string& text)
{
    std::vector<double> g;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3)
            throw UsageError("range grid must be start:stop:step, got '" + text + "'");
        const double a = parse_number(parts[0]);
        const double b = parse_number(parts[1]);
        const double h = parse_number(parts[2]);
        if (!(h > 0.0) || !(b >= a))
            throw UsageError("range grid needs step > 0 and stop >= start");
        const double count = std::floor((b - a) / h + 1e-9);
        if (count > 1e6)
            throw UsageError("range grid has too many points");
        for (long i = 0; i <= static_cast<long>(count); ++i)
            g.push_back(a + static_cast<double>(i) * h);
    } else {
        for (const auto& token : split(text, ','))
            g.push_back(parse_number(token));
    }
    require_increasing(g, text);
    return g;
}

std::vector<int> parse_int_grid(const std::string& text)
{
    std::vector<int> out;
    for (double v : parse_real_grid(text)) {
        if (v != std::floor(v) || std::abs(v) > 1e9)
            throw UsageError("grid '" + text + "' must contain integers");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

}  // namespace monoword::cli
