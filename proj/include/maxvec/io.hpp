/**
 * @file io.hpp
 * @brief Instance files, random instance generation, and report rendering.
 *
 * Instance file format (line oriented, exact decimal strings):
 *
 *     n k
 *     <k values per line, n bid lines>
 *                               <- optional blank line
 *     <n valuation lines>      <- optional block
 *
 * Values parse exactly: "2.5" is 5/2. serialize_instance(parse_instance(f))
 * reproduces canonical files byte for byte.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "maxvec/mechanism.hpp"
#include "maxvec/vec.hpp"

namespace maxvec {

/**
 * @brief Parses an instance from a stream.
 *
 * With `require_strictly_positive` set (mechanism use), any value <= 0 is
 * rejected with a line-numbered NonPositiveError. Malformed lines raise
 * ParseError, wrong row lengths DimensionError.
 */
Instance parse_instance(std::istream& in, bool require_strictly_positive = true);

/// Reads and parses a file; Error on unreadable paths.
Instance load_instance(const std::string& path, bool require_strictly_positive = true);

/// Canonical text form of an instance (shortest exact decimals).
std::string serialize_instance(const Instance& instance);

/// Space-separated canonical coordinates of one vector ("3 2.5").
std::string format_row(const Vec& v);

/// Comma-separated canonical coordinates ("3,2.5"), used in reports.
std::string format_tuple(const Vec& v);

struct GenerateConfig {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    bool enforce_dv = false;        ///< draw per-dimension values without replacement
    std::int64_t max_value = 1000;  ///< coordinates drawn from [1, max_value]
    bool with_valuations = false;   ///< copy bids into a truthful valuation block
};

/**
 * @brief Reproducible random instance: integer coordinates in
 *        [1, max_value], the same instance for the same seed everywhere.
 *
 * With enforce_dv the n values of each dimension are drawn without
 * replacement, so the distinct-values check holds; needs max_value >= n
 * (DomainError otherwise).
 */
Instance generate_instance(const GenerateConfig& config);

/// Human-readable per-agent report of a mechanism run.
std::string render_outcome_text(const MechanismOutcome& outcome);

/**
 * @brief Machine-readable report: one flat key/value record per agent,
 *        fields in fixed order:
 *        `agent=<id> removed=<0|1> winner=<0|1> payment=<c,..,c>
 *         candidates=<count>` plus `utility=<c,..,c>` when available.
 */
std::string render_outcome_machine(const MechanismOutcome& outcome, bool with_utilities);

}  // namespace maxvec
