#ifndef BRAIDINV_REPRODUCE_HPP
#define BRAIDINV_REPRODUCE_HPP

#include <braidinv/table.hpp>

#include <string>
#include <vector>

namespace braidinv {

/*
 * Published reference tables recomputed from scratch. Each item is
 *   PASS     computed value equals the published value
 *   FLAGGED  published value is a known misprint; the computed value agrees
 *            with the recorded correction and with an independent second route
 *   FAIL     anything else
 */
enum class ReproStatus { pass, flagged, fail };

std::string to_string(ReproStatus status);

struct ReproduceResult {
    std::vector<Table> tables;
    std::size_t passed = 0;
    std::size_t flagged = 0;
    std::size_t failed = 0;
};

// Table names accepted by reproduce().
const std::vector<std::string>& reproduce_table_names();

// Empty `names` selects every table. Throws std::invalid_argument for an
// unknown name.
ReproduceResult reproduce(const std::vector<std::string>& names);

} // namespace braidinv

#endif // BRAIDINV_REPRODUCE_HPP
