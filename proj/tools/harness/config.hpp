#ifndef SIGMA_HARNESS_CONFIG_HPP
#define SIGMA_HARNESS_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "harness/render.hpp"

namespace sigma::harness {

struct RunConfig {
    enum class Command { Compute, Verify, Tables, OracleCheck, Report };

    Command command = Command::Report;
    long max_i = 20;
    long max_j = 20;
    std::vector<unsigned long> primes = {2, 3, 5};
    unsigned workers = 0;  // 0 = use available parallelism
    std::optional<std::string> checkpoint_path;
    std::optional<std::string> json_path;
    TableFormat output_format = TableFormat::Plain;
    TableMode table_mode = TableMode::Nu;
    unsigned long table_prime = 2;
    long oracle_order = 30;
};

}  // namespace sigma::harness

#endif  // SIGMA_HARNESS_CONFIG_HPP
