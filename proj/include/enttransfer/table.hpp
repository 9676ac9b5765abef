#ifndef ENTTRANSFER_TABLE_HPP
#define ENTTRANSFER_TABLE_HPP

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "enttransfer/errors.hpp"

namespace enttransfer {

/// Empty cell (absent value). Written as an empty CSV field / JSON null.
struct Missing {};

using Cell = std::variant<Missing, double, long long, bool, std::string>;

/*
  Column-ordered result table with deterministic CSV and JSON renderings.
  Reals are written with 12 significant digits.
*/
class Table {
public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add_row(std::vector<Cell> row)
    {
        if (row.size() != columns_.size())
            throw DomainError("Table: row has " + std::to_string(row.size()) + " cells, expected " +
                              std::to_string(columns_.size()));
        rows_.push_back(std::move(row));
    }

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

    static std::string format_real(double x)
    {
        if (std::isnan(x))
            return "nan";
        if (std::isinf(x))
            return x > 0 ? "inf" : "-inf";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", x);
        return buf;
    }

    static std::string csv_escape(const std::string& s)
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c == '\n' ? ' ' : c;
        }
        return out + "\"";
    }

    void write_csv(std::ostream& os) const
    {
        for (std::size_t i = 0; i < columns_.size(); ++i)
            os << (i ? "," : "") << csv_escape(columns_[i]);
        os << '\n';
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << cell_text(row[i]);
            os << '\n';
        }
    }

    nlohmann::ordered_json to_json() const
    {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : rows_) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < row.size(); ++i)
                obj[columns_[i]] = cell_json(row[i]);
            rows.push_back(std::move(obj));
        }
        return rows;
    }

    void write_json(std::ostream& os) const { os << to_json().dump(2) << '\n'; }

private:
    static std::string cell_text(const Cell& c)
    {
        struct Visitor {
            std::string operator()(Missing) const { return ""; }
            std::string operator()(double x) const { return format_real(x); }
            std::string operator()(long long x) const { return std::to_string(x); }
            std::string operator()(bool x) const { return x ? "true" : "false"; }
            std::string operator()(const std::string& s) const { return csv_escape(s); }
        };
        return std::visit(Visitor{}, c);
    }

    static nlohmann::ordered_json cell_json(const Cell& c)
    {
        struct Visitor {
            nlohmann::ordered_json operator()(Missing) const { return nullptr; }
            nlohmann::ordered_json operator()(double x) const
            {
                if (!std::isfinite(x))
                    return nullptr;
                return std::stod(format_real(x));
            }
            nlohmann::ordered_json operator()(long long x) const { return x; }
            nlohmann::ordered_json operator()(bool x) const { return x; }
            nlohmann::ordered_json operator()(const std::string& s) const { return s; }
        };
        return std::visit(Visitor{}, c);
    }

    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

} // namespace enttransfer

#endif // ENTTRANSFER_TABLE_HPP
