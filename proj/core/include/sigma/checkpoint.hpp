#ifndef SIGMA_CHECKPOINT_HPP
#define SIGMA_CHECKPOINT_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sigma/coeff_table.hpp"

namespace sigma {

// In-memory image of the on-disk snapshot format:
//
//   sigma-coeffs-v1 <max_i> <max_j>
//   <i>\t<j>\t<signed decimal>
//   ...
//
// LF line endings, rows sorted by (weight, i) ascending, no duplicates, no
// trailing whitespace. Partial snapshots (complete through some weight) are
// valid. The text form is canonical: equal tables serialize byte-identically.
class Checkpoint {
public:
    struct Row {
        long i;
        long j;
        std::string value;  // canonical decimal, as written by mpz
    };

    static constexpr int format_version = 1;

    Checkpoint(long max_i, long max_j, std::vector<Row> rows);

    long max_i() const { return max_i_; }
    long max_j() const { return max_j_; }
    const std::vector<Row>& rows() const { return rows_; }

    // Serializes to the exact on-disk byte sequence.
    std::string text() const;

    // Parses and structurally validates checkpoint text: header, strict row
    // grammar, canonical decimals, (weight, i) ordering, no duplicates,
    // rows inside the working set, and the (0,0) = 1 invariant. Throws
    // ParseError (with 1-based line number) or VersionError.
    static Checkpoint parse(std::istream& in);
    static Checkpoint parse(const std::string& text);

private:
    long max_i_;
    long max_j_;
    std::vector<Row> rows_;
};

// Snapshot of every present entry of the table, in (weight, i) order.
Checkpoint checkpoint_from_table(const CoeffTable& table);

// Materializes the rows into a table over the snapshot's working set.
CoeffTable table_from_checkpoint(const Checkpoint& checkpoint);

// Writes the table's snapshot to `destination` and returns it.
// Throws ParseError(line 0) when the destination is not writable.
Checkpoint save_checkpoint(const CoeffTable& table,
                           const std::filesystem::path& destination);

// Reads a snapshot back into a table. Throws ParseError / VersionError.
CoeffTable load_checkpoint(const std::filesystem::path& source);

}  // namespace sigma

#endif  // SIGMA_CHECKPOINT_HPP
