#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logpot/infinite.hpp"
#include "logpot/majorization.hpp"
#include "logpot/potential.hpp"

namespace logpot {

/// Parsed input file. Formats (one record per line, `#` starts a comment):
///
///   finite                  family <name> key=value ...      tuples
///   re im charge            [re im charge  for name=points]   x re im weight
///   ...                                                       y re im weight
///
/// Families: geometric-real, geometric-spiral, harmonic-unbounded, complex-charge, points.
/// Keys: rho, base, twist, spin, n (count or `auto`), region (disk:cx,cy,r or annulus:cx,cy,r1,r2).
struct ParsedConfig {
    enum class Kind { Finite, Family, Tuples } kind = Kind::Finite;

    std::optional<ChargeConfiguration> finite;   ///< charges as written (not renormalized)
    std::optional<SequenceFamily> family;
    std::string family_name;
    std::map<std::string, std::string> family_keys;
    std::optional<std::size_t> family_n;         ///< absent for n=auto
    std::optional<Region> region;
    std::optional<WeightedTuple> x, y;

    std::vector<std::string> diagnostics;        ///< weight-sum and merge notes
};

/// Throws InputError prefixed with "line N:" on syntax or validation errors.
ParsedConfig parse_config(std::string_view text, CoincidentPolicy policy = CoincidentPolicy::Reject);

/// Text that parses back to the same data (17 significant digits).
std::string emit_config(const ParsedConfig& config);
std::string emit_finite(const ChargeConfiguration& config);

/// %.17g
std::string format_real(double x);

} // namespace logpot
