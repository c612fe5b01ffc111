#include "monoword/cli/records.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>

namespace monoword::cli {

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string param_text(double v)
{
    if (v == static_cast<double>(static_cast<long long>(v)) && std::abs(v) < 1e15)
        return std::to_string(static_cast<long long>(v));
    return format_double(v);
}

std::string value_text(const Record& r)
{
    if (const auto* q = std::get_if<Rational>(&r.value))
        return to_fraction_string(*q);
    return format_double(std::get<double>(r.value));
}

}  // namespace

void sort_records(std::vector<Record>& records)
{
    std::stable_sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
        return std::tie(a.route, a.which, a.n, a.k, a.param) < std::tie(b.route, b.which, b.n, b.k, b.param);
    });
}

void write_csv(std::ostream& out, const std::vector<Record>& records)
{
    out << "route,which,n,k,N_or_t_or_s,value,err_bar,exact_flag\n";
    for (const auto& r : records) {
        out << r.route << ',' << r.which << ',' << (r.n ? std::to_string(*r.n) : "") << ','
            << (r.k ? std::to_string(*r.k) : "") << ',' << param_text(r.param) << ',' << value_text(r) << ','
            << format_double(r.err_bar) << ',' << (r.exact() ? 1 : 0) << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<Record>& records)
{
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json row;
        row["route"] = r.route;
        row["which"] = r.which;
        row["n"] = r.n ? nlohmann::ordered_json(*r.n) : nlohmann::ordered_json(nullptr);
        row["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
        row["N_or_t_or_s"] = r.param;
        if (r.exact())
            row["value"] = value_text(r);
        else
            row["value"] = std::get<double>(r.value);
        row["err_bar"] = r.err_bar;
        row["exact_flag"] = r.exact();
        rows.push_back(std::move(row));
    }
    out << rows.dump(2) << '\n';
}

void write_records(std::ostream& out, std::vector<Record> records, Format format)
{
    sort_records(records);
    if (format == Format::Csv)
        write_csv(out, records);
    else
        write_json(out, records);
}

}  // namespace monoword::cli
