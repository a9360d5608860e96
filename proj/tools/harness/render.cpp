#include "harness/render.hpp"

#include <functional>
#include <vector>

namespace sigma::harness {

namespace {

constexpr const char* infinity_symbol = "∞";

std::string render_grid(
    long max_i, long max_j, TableFormat format,
    const std::function<std::string(long, long)>& cell) {
    std::string out;
    if (format == TableFormat::Markdown) {
        std::string header = "|";
        std::string rule = "|";
        for (long i = 0; i <= max_i; ++i) {
            header += " " + std::to_string(i) + " |";
            rule += " --- |";
        }
        out += header + "\n" + rule + "\n";
    }
    const char* separator = format == TableFormat::Csv      ? ","
                            : format == TableFormat::Markdown ? " | "
                                                              : " ";
    for (long j = 0; j <= max_j; ++j) {
        std::string row;
        for (long i = 0; i <= max_i; ++i) {
            if (i > 0) row += separator;
            row += cell(i, j);
        }
        if (format == TableFormat::Markdown) row = "| " + row + " |";
        out += row + "\n";
    }
    return out;
}

}  // namespace

std::string emit_table(const CoeffTable& table, unsigned long p, long max_i,
                       long max_j, TableMode mode, TableFormat format) {
    if (!is_prime(p)) throw NotPrime(p);
    return render_grid(max_i, max_j, format, [&](long i, long j) {
        const mpz_class& a = table.coefficient({i, j});
        if (a == 0) return std::string(infinity_symbol);
        long value = static_cast<long>(nu(a, p));
        if (mode == TableMode::NuMinusJ) value -= j;
        return std::to_string(value);
    });
}

std::string render_residual(const ResidualMatrix& matrix, TableFormat format) {
    return render_grid(matrix.max_i, matrix.max_j, format, [&](long i, long j) {
        const auto& cell = matrix.at(i, j);
        return cell ? std::to_string(*cell) : std::string(infinity_symbol);
    });
}

}  // namespace sigma::harness
