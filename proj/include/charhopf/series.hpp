#pragma once

// Truncated S-function series
//
//   M_π = Σ_n h_n[s_π],      L_π = Σ_n (−1)^n e_n[s_π],
//
// and the branching maps f ↦ f / M_π and f ↦ f / L_π.
//
// Setting CHARHOPF_CACHE_DIR persists computed series as JSON files in that
// directory, one per (π, kind, D).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "charhopf/io.hpp"
#include "charhopf/plethysm.hpp"
#include "charhopf/schur_ring.hpp"

namespace charhopf {

enum class SeriesKind { M, L };

inline const char* to_string(SeriesKind k) { return k == SeriesKind::M ? "M" : "L"; }

inline SeriesKind parse_series_kind(const std::string& s) {
  if (s == "M" || s == "m") return SeriesKind::M;
  if (s == "L" || s == "l") return SeriesKind::L;
  throw parse_error("series kind must be M or L, got \"" + s + "\"");
}

struct TruncatedSeries {
  Partition pi;
  SeriesKind kind;
  int degree;
  SymFunc value;
};

namespace detail {

inline SymFunc compute_series(const Partition& pi, SeriesKind kind, int degree) {
  SymFunc out = SymFunc::one();
  const int w = pi.weight();
  for (int n = 1; n * w <= degree; ++n) {
    if (kind == SeriesKind::M) {
      out += schur_plethysm(Partition{n}, pi);
    } else {
      const SymFunc& e = schur_plethysm(Partition(std::vector<int>(n, 1)), pi);
      if (n % 2)
        out -= e;
      else
        out += e;
    }
  }
  return out;
}

inline std::filesystem::path series_cache_file(const std::filesystem::path& dir, const Partition& pi, SeriesKind kind,
                                               int degree) {
  std::string name = std::string("series_") + to_string(kind) + "_";
  for (std::size_t i = 0; i < pi.length(); ++i) name += (i ? "-" : "") + std::to_string(pi[i]);
  name += "_D" + std::to_string(degree) + ".json";
  return dir / name;
}

inline SymFunc series_value(const Partition& pi, SeriesKind kind, int degree) {
  const char* env = std::getenv("CHARHOPF_CACHE_DIR");
  if (!env || !*env) return compute_series(pi, kind, degree);
  const std::filesystem::path dir(env);
  const auto file = series_cache_file(dir, pi, kind, degree);
  if (std::ifstream in(file); in) {
    try {
      return symfunc_from_json(Json::parse(in));
    } catch (const std::exception&) {
      // Unreadable cache entries are recomputed and overwritten.
    }
  }
  SymFunc value = compute_series(pi, kind, degree);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto tmp = file.string() + ".tmp";
  if (std::ofstream out(tmp); out) {
    out << to_json(value).dump() << '\n';
    out.close();
    std::filesystem::rename(tmp, file, ec);
  }
  return value;
}

}  // namespace detail

/// M_π or L_π with every grade ≤ degree. Results are cached per process.
inline const TruncatedSeries& series(const Partition& pi, SeriesKind kind, int degree) {
  if (pi.empty()) throw std::invalid_argument("series: π must be a nonzero partition");
  if (degree < 0) throw std::invalid_argument("series: degree must be non-negative");
  using Key = std::tuple<Partition, SeriesKind, int>;
  static std::mutex mtx;
  static std::map<Key, TruncatedSeries> cache;
  const Key key{pi, kind, degree};
  {
    std::lock_guard lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  TruncatedSeries value{pi, kind, degree, detail::series_value(pi, kind, degree)};
  std::lock_guard lock(mtx);
  return cache.try_emplace(key, std::move(value)).first->second;
}

/// f / M_π: restriction from GL to the subgroup of type π.
inline SymFunc branch_to_subgroup(const SymFunc& f, const Partition& pi, int degree) {
  return skew(f, series(pi, SeriesKind::M, degree).value);
}

/// f / L_π: the inverse branching.
inline SymFunc branch_to_group(const SymFunc& f, const Partition& pi, int degree) {
  return skew(f, series(pi, SeriesKind::L, degree).value);
}

}  // namespace charhopf
