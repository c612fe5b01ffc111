#pragma once

// Output rows shared by every subcommand. CSV columns are fixed:
// route, which, n, k, N_or_t_or_s, value, err_bar, exact_flag.
// Exact values render as "p/q" in both CSV and JSON; floats with 17
// significant digits.

#include "monoword/rational.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace monoword::cli {

struct Record {
    std::string route;
    std::string which = "-";
    std::optional<int> n;
    std::optional<int> k;
    double param = 0.0;  // N, t or s
    std::variant<Rational, double> value;
    double err_bar = 0.0;

    bool exact() const { return std::holds_alternative<Rational>(value); }
};

enum class Format { Csv, Json };

std::string format_double(double v);

// Sorted by (route, which, n, k, param) so output never depends on scheduling.
void sort_records(std::vector<Record>& records);

void write_csv(std::ostream& out, const std::vector<Record>& records);
void write_json(std::ostream& out, const std::vector<Record>& records);
void write_records(std::ostream& out, std::vector<Record> records, Format format);

}  // namespace monoword::cli
