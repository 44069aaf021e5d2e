#ifndef PARTLAT_TABLE_HPP
#define PARTLAT_TABLE_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partlat/int_matrix.hpp"
#include "partlat/integer.hpp"

namespace partlat {

/// Exact-integer 2D table with labeled axes.
///
/// Rows and columns carry the integer labels the table is indexed by (a
/// total m, a number of parts n, ...), which need not start at 0. Row and
/// column sums are always recomputed from the cells. Some tables carry extra
/// per-row summary columns (e.g. odd / even / mixed totals); those live in
/// `annotations` and are not part of the cell sums.
class IntTable {
public:
    using Annotation = std::pair<std::string, std::vector<Integer>>;

    IntTable() = default;
    /// Throws std::invalid_argument if the label counts disagree with the
    /// cell shape.
    IntTable(std::string name, std::string row_label, std::string col_label, std::vector<int> rows,
             std::vector<int> cols, IntMatrix cells);

    const std::string& name() const noexcept { return name_; }
    const std::string& row_label() const noexcept { return row_label_; }
    const std::string& col_label() const noexcept { return col_label_; }
    const std::vector<int>& rows() const noexcept { return rows_; }
    const std::vector<int>& cols() const noexcept { return cols_; }
    const IntMatrix& cells() const noexcept { return cells_; }
    const std::vector<Annotation>& annotations() const noexcept { return annotations_; }

    /// Cell by row/column label. Throws std::out_of_range for unknown labels.
    Integer at(int row, int col) const;
    /// Cells of the row labeled `row`.
    std::vector<Integer> row(int row) const;
    /// The annotation column called `name`. Throws std::out_of_range.
    const std::vector<Integer>& annotation(std::string_view name) const;

    std::vector<Integer> row_sums() const;
    std::vector<Integer> col_sums() const;
    Integer total() const;

    bool nonnegative() const { return (cells_.array() >= 0).all(); }

    /// Appends a summary column; one value per row.
    void annotate(std::string name, std::vector<Integer> values);

    friend bool operator==(const IntTable& a, const IntTable& b);

private:
    std::string name_;
    std::string row_label_;
    std::string col_label_;
    std::vector<int> rows_;
    std::vector<int> cols_;
    IntMatrix cells_;
    std::vector<Annotation> annotations_;
};

/// Contiguous labels first, first+1, ..., first+count-1.
std::vector<int> label_range(int first, int count);

enum class TableFormat { tsv, csv, json, md };

/// Throws std::invalid_argument for anything but tsv/csv/json/md.
TableFormat parse_table_format(std::string_view name);

/// Deterministic text rendering. Text formats end with a "sum" row holding
/// the column sums and grand total; each row ends with its row sum.
std::string format_table(const IntTable& t, TableFormat format);

/// Inverse of format_table. Throws std::invalid_argument on malformed input
/// or when the printed sums disagree with the cells.
IntTable parse_table(std::string_view text, TableFormat format);

} // namespace partlat

#endif // PARTLAT_TABLE_HPP
