#include "sigma/checkpoint.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sigma {

namespace {

constexpr const char* version_token = "sigma-coeffs-v1";

bool is_canonical_integer(const std::string& s) {
    std::size_t pos = 0;
    if (s.empty()) return false;
    if (s[0] == '-') {
        if (s.size() == 1) return false;
        pos = 1;
    }
    for (std::size_t k = pos; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    if (s.size() - pos > 1 && s[pos] == '0') return false;
    if (s == "-0") return false;
    return true;
}

long parse_long(const std::string& s, std::size_t line, const char* what) {
    if (!is_canonical_integer(s))
        throw ParseError(std::string(what) + " is not a canonical integer: '" +
                             s + "'",
                         line);
    long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(std::string(what) + " out of range: '" + s + "'", line);
    return value;
}

}  // namespace

Checkpoint::Checkpoint(long max_i, long max_j, std::vector<Row> rows)
    : max_i_(max_i), max_j_(max_j), rows_(std::move(rows)) {}

std::string Checkpoint::text() const {
    std::string out = version_token;
    out += ' ';
    out += std::to_string(max_i_);
    out += ' ';
    out += std::to_string(max_j_);
    out += '\n';
    for (const Row& row : rows_) {
        out += std::to_string(row.i);
        out += '\t';
        out += std::to_string(row.j);
        out += '\t';
        out += row.value;
        out += '\n';
    }
    return out;
}

Checkpoint Checkpoint::parse(const std::string& text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;

    const auto next_line = [&](std::string& out) {
        if (pos >= text.size()) return false;
        ++line_no;
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos)
            throw ParseError("missing LF at end of line", line_no);
        out.assign(text, pos, nl - pos);
        if (out.find('\r') != std::string::npos)
            throw ParseError("CR line endings are not accepted", line_no);
        pos = nl + 1;
        return true;
    };

    std::string line;
    if (!next_line(line)) throw ParseError("empty input", 1);

    // Header: "<version-token> <max_i> <max_j>", single spaces.
    const std::size_t sp1 = line.find(' ');
    if (sp1 == std::string::npos)
        throw ParseError("malformed header: '" + line + "'", 1);
    const std::string token = line.substr(0, sp1);
    const std::string prefix = "sigma-coeffs-v";
    if (token.compare(0, prefix.size(), prefix) != 0)
        throw ParseError("unrecognized header token: '" + token + "'", 1);
    if (token != version_token) throw VersionError(token);
    const std::size_t sp2 = line.find(' ', sp1 + 1);
    if (sp2 == std::string::npos || line.find(' ', sp2 + 1) != std::string::npos)
        throw ParseError("header must be '<version> <max_i> <max_j>'", 1);
    const long max_i =
        parse_long(line.substr(sp1 + 1, sp2 - sp1 - 1), 1, "max_i");
    const long max_j = parse_long(line.substr(sp2 + 1), 1, "max_j");
    if (max_i < 0 || max_j < 0)
        throw ParseError("bounds must be non-negative", 1);
    const long weight_cap = 2 * max_i + 3 * max_j;

    std::vector<Row> rows;
    bool have_prev = false;
    long prev_weight = 0;
    long prev_i = 0;
    while (next_line(line)) {
        const std::size_t t1 = line.find('\t');
        if (t1 == std::string::npos)
            throw ParseError("expected '<i>\\t<j>\\t<value>'", line_no);
        const std::size_t t2 = line.find('\t', t1 + 1);
        if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos)
            throw ParseError("expected exactly three tab-separated fields",
                             line_no);
        Row row;
        row.i = parse_long(line.substr(0, t1), line_no, "i");
        row.j = parse_long(line.substr(t1 + 1, t2 - t1 - 1), line_no, "j");
        row.value = line.substr(t2 + 1);
        if (!is_canonical_integer(row.value))
            throw ParseError("value is not a canonical decimal: '" + row.value +
                                 "'",
                             line_no);
        if (row.i < 0 || row.j < 0 || 2 * row.i + 3 * row.j > weight_cap)
            throw ParseError("index (" + std::to_string(row.i) + ", " +
                                 std::to_string(row.j) +
                                 ") lies outside the working set",
                             line_no);
        const long w = 2 * row.i + 3 * row.j;
        if (have_prev) {
            if (w < prev_weight || (w == prev_weight && row.i < prev_i))
                throw ParseError("rows are not sorted by (weight, i)", line_no);
            if (w == prev_weight && row.i == prev_i)
                throw ParseError("duplicate index (" + std::to_string(row.i) +
                                     ", " + std::to_string(row.j) + ")",
                                 line_no);
        }
        if (row.i == 0 && row.j == 0 && row.value != "1")
            throw ParseError("entry (0, 0) must be 1", line_no);
        prev_weight = w;
        prev_i = row.i;
        have_prev = true;
        rows.push_back(std::move(row));
    }
    return Checkpoint(max_i, max_j, std::move(rows));
}

Checkpoint Checkpoint::parse(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

Checkpoint checkpoint_from_table(const CoeffTable& table) {
    std::vector<Checkpoint::Row> rows;
    rows.reserve(table.size());
    table.for_each([&](Index idx, const mpz_class& value) {
        rows.push_back({idx.i, idx.j, value.get_str()});
    });
    return Checkpoint(table.max_i(), table.max_j(), std::move(rows));
}

CoeffTable table_from_checkpoint(const Checkpoint& checkpoint) {
    CoeffTable table = [&] {
        try {
            return CoeffTable(checkpoint.max_i(), checkpoint.max_j());
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), 1);
        }
    }();
    for (const Checkpoint::Row& row : checkpoint.rows()) {
        if (!table.in_working_set({row.i, row.j}))
            throw std::invalid_argument("checkpoint row outside working set");
        table.set({row.i, row.j}, mpz_class(row.value));
    }
    return table;
}

Checkpoint save_checkpoint(const CoeffTable& table,
                           const std::filesystem::path& destination) {
    Checkpoint checkpoint = checkpoint_from_table(table);
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + destination.string() +
                                   "' for writing",
                               0);
    out << checkpoint.text();
    out.flush();
    if (!out)
        throw ParseError("failed writing '" + destination.string() + "'", 0);
    return checkpoint;
}

CoeffTable load_checkpoint(const std::filesystem::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + source.string() + "'", 0);
    return table_from_checkpoint(Checkpoint::parse(in));
}

}  // namespace sigma
