#pragma once

// Point counts of the smooth projective models of u^a = f over F_{p^i}.
//
// A single sweep over P^1(F_q) evaluates every place of f once per point. Away
// from the zeroes of f the fiber has #{u : u^a = f(P)} points; above a zero
// of multiplicity m the smooth model has #{Y : Y^d = c(P)} rational points,
// d = gcd(a, m), c(P) the local unit (see forms::local_unit).

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "constj/curve.hpp"
#include "constj/gf.hpp"

namespace constj::count {

struct SweepOptions {
  /// Worker threads for the sweep; results do not depend on it.
  int jobs = 1;
};

/// Counts for several cover orders of the same form in one sweep.
std::vector<Int> count_points_multi(const forms::FactoredForm& f, std::span<const int> covers, const gf::Field& ctx,
                                    const SweepOptions& opts = {});

Int count_points(const curve::CurveSpec& curve, const gf::Field& ctx, const SweepOptions& opts = {});

/// Point-by-point evaluation through forms::evaluate / forms::local_unit and
/// gf::nth_power_count. No tables; used for huge fields and as a cross-check.
Int count_points_reference(const curve::CurveSpec& curve, const gf::Field& ctx);

/// |N - r (q + 1)| <= 2 (h1/2) sqrt(q), r = number of F_q-rational components.
bool within_weil_bound(const curve::CurveSpec& curve, UInt q, Int count);

/// FNV-1a of "a<a>|" + canonical form key, as 16 hex digits.
std::string curve_key(const curve::CurveSpec& curve);

/// Append-only line store of (p, i, curve_key, count, tool_version); the last
/// record for a key wins. Only records of the current tool version are used.
class CountCache {
 public:
  explicit CountCache(std::filesystem::path dir);

  std::optional<Int> lookup(std::uint64_t p, int level, const std::string& key) const;
  void store(std::uint64_t p, int level, const std::string& key, Int count);

  const std::filesystem::path& file() const { return file_; }
  std::vector<std::string> take_warnings();

  static constexpr const char* kFileName = "counts.cache";

 private:
  using Key = std::tuple<std::uint64_t, int, std::string>;

  std::filesystem::path file_;
  mutable std::mutex mu_;
  std::map<Key, Int> records_;
  std::vector<std::string> warnings_;
};

struct CountSeries {
  curve::CurveSpec curve;
  std::uint64_t p = 0;
  /// counts[i - 1] = N(p^i)
  std::vector<Int> counts;

  int levels() const { return static_cast<int>(counts.size()); }
  Int at(int level) const { return counts.at(static_cast<std::size_t>(level - 1)); }
};

struct SeriesStats {
  int sweeps = 0;
  int cache_hits = 0;
  std::vector<std::string> warnings;
};

struct SeriesRequest {
  int a = 0;
  int i_max = 0;
};

/// Counts levels 1..i_max for each requested cover, sharing sweeps between
/// covers of the same level. cache may be null.
std::vector<CountSeries> count_series_multi(const forms::FactoredForm& f, std::span<const SeriesRequest> requests,
                                            std::uint64_t p, CountCache* cache, const SweepOptions& opts = {},
                                            SeriesStats* stats = nullptr);

CountSeries count_series(const curve::CurveSpec& curve, std::uint64_t p, int i_max, CountCache* cache,
                         const SweepOptions& opts = {}, SeriesStats* stats = nullptr);

}  // namespace constj::count
