#include "partlat/table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace partlat {

namespace {

using Grid = std::vector<std::vector<std::string>>;

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view line, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> lines_of(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start < text.size()) {
        auto pos = text.find('\n', start);
        if (pos == std::string_view::npos)
            pos = text.size();
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

long long parse_integer(const std::string& s)
{
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_table: '" + s + "' is not an integer");
    }
    if (used != s.size())
        throw std::invalid_argument("parse_table: '" + s + "' is not an integer");
    return v;
}

Grid render_grid(const IntTable& t)
{
    Grid g;
    std::vector<std::string> header{t.row_label() + "\\" + t.col_label()};
    for (int c : t.cols())
        header.push_back(std::to_string(c));
    header.emplace_back("sum");
    for (const auto& [name, values] : t.annotations())
        header.push_back(name);
    g.push_back(std::move(header));

    const auto row_sums = t.row_sums();
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        std::vector<std::string> line{std::to_string(t.rows()[i])};
        for (Eigen::Index j = 0; j < t.cells().cols(); ++j)
            line.push_back(std::to_string(t.cells()(static_cast<Eigen::Index>(i), j)));
        line.push_back(std::to_string(row_sums[i]));
        for (const auto& [name, values] : t.annotations())
            line.push_back(std::to_string(values[i]));
        g.push_back(std::move(line));
    }

    std::vector<std::string> footer{"sum"};
    for (Integer s : t.col_sums())
        footer.push_back(std::to_string(s));
    footer.push_back(std::to_string(t.total()));
    for (std::size_t k = 0; k < t.annotations().size(); ++k)
        footer.emplace_back();
    g.push_back(std::move(footer));
    return g;
}

IntTable decode_grid(const std::string& name, const Grid& g)
{
    if (g.size() < 2)
        throw std::invalid_argument("parse_table: missing header or sum row");
    const auto& header = g.front();
    auto slash = header.at(0).find('\\');
    if (slash == std::string::npos)
        throw std::invalid_argument("parse_table: header corner must read 'row\\col'");
    std::string row_label = header[0].substr(0, slash);
    std::string col_label = header[0].substr(slash + 1);

    auto sum_at = std::find(header.begin() + 1, header.end(), "sum");
    if (sum_at == header.end())
        throw std::invalid_argument("parse_table: header has no sum column");
    std::vector<int> cols;
    for (auto it = header.begin() + 1; it != sum_at; ++it)
        cols.push_back(static_cast<int>(parse_integer(*it)));
    std::vector<std::string> annotation_names(sum_at + 1, header.end());

    const std::size_t n_rows = g.size() - 2;
    const std::size_t width = header.size();
    std::vector<int> rows;
    IntMatrix cells(static_cast<Eigen::Index>(n_rows), static_cast<Eigen::Index>(cols.size()));
    std::vector<Integer> printed_row_sums;
    std::vector<std::vector<Integer>> annotation_values(annotation_names.size());
    for (std::size_t i = 0; i < n_rows; ++i) {
        const auto& line = g[i + 1];
        if (line.size() != width)
            throw std::invalid_argument("parse_table: row " + std::to_string(i) + " has the wrong width");
        rows.push_back(static_cast<int>(parse_integer(line[0])));
        for (std::size_t j = 0; j < cols.size(); ++j)
            cells(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_integer(line[j + 1]);
        printed_row_sums.push_back(parse_integer(line[cols.size() + 1]));
        for (std::size_t k = 0; k < annotation_names.size(); ++k)
            annotation_values[k].push_back(parse_integer(line[cols.size() + 2 + k]));
    }

    IntTable t(name, row_label, col_label, rows, cols, cells);
    for (std::size_t k = 0; k < annotation_names.size(); ++k)
        t.annotate(annotation_names[k], annotation_values[k]);

    const auto& footer = g.back();
    if (footer.size() != width || footer[0] != "sum")
        throw std::invalid_argument("parse_table: malformed sum row");
    std::vector<Integer> printed_col_sums;
    for (std::size_t j = 0; j < cols.size(); ++j)
        printed_col_sums.push_back(parse_integer(footer[j + 1]));
    if (printed_row_sums != t.row_sums() || printed_col_sums != t.col_sums()
        || parse_integer(footer[cols.size() + 1]) != t.total())
        throw std::invalid_argument("parse_table: printed sums disagree with the cells");
    return t;
}

std::string join_grid(const Grid& g, char sep)
{
    std::ostringstream os;
    for (const auto& line : g) {
        for (std::size_t j = 0; j < line.size(); ++j)
            os << (j ? std::string(1, sep) : "") << line[j];
        os << '\n';
    }
    return os.str();
}

nlohmann::ordered_json to_json(const IntTable& t)
{
    nlohmann::ordered_json j;
    j["name"] = t.name();
    j["row_label"] = t.row_label();
    j["col_label"] = t.col_label();
    j["rows"] = t.rows();
    j["cols"] = t.cols();
    auto cells = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < t.cells().rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (Eigen::Index c = 0; c < t.cells().cols(); ++c)
            row.push_back(t.cells()(i, c));
        cells.push_back(std::move(row));
    }
    j["cells"] = std::move(cells);
    j["row_sums"] = t.row_sums();
    j["col_sums"] = t.col_sums();
    if (!t.annotations().empty()) {
        auto ann = nlohmann::ordered_json::object();
        for (const auto& [name, values] : t.annotations())
            ann[name] = values;
        j["annotations"] = std::move(ann);
    }
    return j;
}

IntTable from_json(std::string_view text)
{
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
        auto rows = j.at("rows").get<std::vector<int>>();
        auto cols = j.at("cols").get<std::vector<int>>();
        auto cell_rows = j.at("cells").get<std::vector<std::vector<Integer>>>();
        IntMatrix cells(static_cast<Eigen::Index>(cell_rows.size()), static_cast<Eigen::Index>(cols.size()));
        for (std::size_t i = 0; i < cell_rows.size(); ++i) {
            if (cell_rows[i].size() != cols.size())
                throw std::invalid_argument("parse_table: json cell row has the wrong width");
            for (std::size_t c = 0; c < cols.size(); ++c)
                cells(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = cell_rows[i][c];
        }
        IntTable t(j.at("name").get<std::string>(), j.at("row_label").get<std::string>(),
                   j.at("col_label").get<std::string>(), rows, cols, cells);
        if (j.contains("annotations"))
            for (const auto& [name, values] : j["annotations"].items())
                t.annotate(name, values.get<std::vector<Integer>>());
        if (j.at("row_sums").get<std::vector<Integer>>() != t.row_sums()
            || j.at("col_sums").get<std::vector<Integer>>() != t.col_sums())
            throw std::invalid_argument("parse_table: printed sums disagree with the cells");
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("parse_table: bad json: ") + e.what());
    }
}

} // namespace

IntTable::IntTable(std::string name, std::string row_label, std::string col_label, std::vector<int> rows,
                   std::vector<int> cols, IntMatrix cells)
    : name_(std::move(name)), row_label_(std::move(row_label)), col_label_(std::move(col_label)),
      rows_(std::move(rows)), cols_(std::move(cols)), cells_(std::move(cells))
{
    if (static_cast<Eigen::Index>(rows_.size()) != cells_.rows()
        || static_cast<Eigen::Index>(cols_.size()) != cells_.cols())
        throw std::invalid_argument("IntTable: labels do not match the " + std::to_string(cells_.rows()) + "x"
                                    + std::to_string(cells_.cols()) + " cells");
}

Integer IntTable::at(int row, int col) const
{
    auto r = std::find(rows_.begin(), rows_.end(), row);
    auto c = std::find(cols_.begin(), cols_.end(), col);
    if (r == rows_.end() || c == cols_.end())
        throw std::out_of_range("IntTable::at: no cell (" + std::to_string(row) + "," + std::to_string(col) + ") in "
                                + name_);
    return cells_(r - rows_.begin(), c - cols_.begin());
}

std::vector<Integer> IntTable::row(int row) const
{
    auto r = std::find(rows_.begin(), rows_.end(), row);
    if (r == rows_.end())
        throw std::out_of_range("IntTable::row: no row " + std::to_string(row) + " in " + name_);
    std::vector<Integer> out(cols_.size());
    for (std::size_t j = 0; j < cols_.size(); ++j)
        out[j] = cells_(r - rows_.begin(), static_cast<Eigen::Index>(j));
    return out;
}

const std::vector<Integer>& IntTable::annotation(std::string_view name) const
{
    for (const auto& a : annotations_)
        if (a.first == name)
            return a.second;
    throw std::out_of_range("IntTable::annotation: no column '" + std::string(name) + "' in " + name_);
}

std::vector<Integer> IntTable::row_sums() const
{
    std::vector<Integer> s(rows_.size(), 0);
    for (Eigen::Index i = 0; i < cells_.rows(); ++i)
        for (Eigen::Index j = 0; j < cells_.cols(); ++j)
            s[static_cast<std::size_t>(i)] = checked_add(s[static_cast<std::size_t>(i)], cells_(i, j));
    return s;
}

std::vector<Integer> IntTable::col_sums() const
{
    std::vector<Integer> s(cols_.size(), 0);
    for (Eigen::Index i = 0; i < cells_.rows(); ++i)
        for (Eigen::Index j = 0; j < cells_.cols(); ++j)
            s[static_cast<std::size_t>(j)] = checked_add(s[static_cast<std::size_t>(j)], cells_(i, j));
    return s;
}

Integer IntTable::total() const
{
    Integer t = 0;
    for (Integer s : row_sums())
        t = checked_add(t, s);
    return t;
}

void IntTable::annotate(std::string name, std::vector<Integer> values)
{
    if (values.size() != rows_.size())
        throw std::invalid_argument("IntTable::annotate: need one value per row");
    annotations_.emplace_back(std::move(name), std::move(values));
}

bool operator==(const IntTable& a, const IntTable& b)
{
    return a.name_ == b.name_ && a.row_label_ == b.row_label_ && a.col_label_ == b.col_label_ && a.rows_ == b.rows_
        && a.cols_ == b.cols_ && a.cells_.rows() == b.cells_.rows() && a.cells_.cols() == b.cells_.cols()
        && a.cells_ == b.cells_ && a.annotations_ == b.annotations_;
}

std::vector<int> label_range(int first, int count)
{
    std::vector<int> out(static_cast<std::size_t>(std::max(count, 0)));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = first + static_cast<int>(i);
    return out;
}

TableFormat parse_table_format(std::string_view name)
{
    if (name == "tsv") return TableFormat::tsv;
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    if (name == "md") return TableFormat::md;
    throw std::invalid_argument("unknown table format '" + std::string(name) + "' (tsv, csv, json, md)");
}

std::string format_table(const IntTable& t, TableFormat format)
{
    switch (format) {
    case TableFormat::tsv: return "# " + t.name() + "\n" + join_grid(render_grid(t), '\t');
    case TableFormat::csv: return "# " + t.name() + "\n" + join_grid(render_grid(t), ',');
    case TableFormat::json: return to_json(t).dump() + "\n";
    case TableFormat::md: {
        const Grid g = render_grid(t);
        std::ostringstream os;
        os << "### " << t.name() << "\n\n";
        for (std::size_t i = 0; i < g.size(); ++i) {
            os << '|';
            for (const auto& cell : g[i])
                os << ' ' << cell << " |";
            os << '\n';
            if (i == 0) {
                os << '|';
                for (std::size_t j = 0; j < g[i].size(); ++j)
                    os << " ---: |";
                os << '\n';
            }
        }
        return os.str();
    }
    }
    throw std::invalid_argument("format_table: unknown format");
}

IntTable parse_table(std::string_view text, TableFormat format)
{
    if (format == TableFormat::json)
        return from_json(text);

    std::string name;
    Grid g;
    for (std::string_view line : lines_of(text)) {
        if (trim(line).empty())
            continue;
        if (format == TableFormat::md) {
            if (line.starts_with("### ")) {
                name = trim(line.substr(4));
                continue;
            }
            std::string body = trim(line);
            if (body.size() < 2 || body.front() != '|' || body.back() != '|')
                throw std::invalid_argument("parse_table: markdown row must be wrapped in '|'");
            auto cells = split(std::string_view(body).substr(1, body.size() - 2), '|');
            if (!cells.empty() && cells[0].starts_with("---"))
                continue;
            g.push_back(std::move(cells));
            continue;
        }
        if (line.starts_with("# ")) {
            name = trim(line.substr(2));
            continue;
        }
        g.push_back(split(line, format == TableFormat::tsv ? '\t' : ','));
    }
    return decode_grid(name, g);
}

} // namespace partlat
