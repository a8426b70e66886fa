#pragma once

#include "flowpoly/flow.hpp"

#include <filesystem>
#include <ostream>
#include <set>
#include <string>

namespace flowpoly {

/// Append-only file of memoized flow polynomials, one record per line:
///
///   <canonical key hex> TAB <coefficients, space separated> TAB <fnv1a64 hex>
///
/// The checksum covers the first two fields. Records that fail to parse or
/// verify are skipped with a warning and never enter the cache.
class MemoStore {
 public:
  static constexpr const char* kFileName = "flowpoly-memo.tsv";

  explicit MemoStore(std::filesystem::path dir);

  [[nodiscard]] const std::filesystem::path& path() const noexcept { return path_; }

  /// Reads the file (if any) into `cache`; returns the number of records
  /// accepted. Warnings for bad records go to `warn`.
  std::size_t load(MemoCache& cache, std::ostream& warn);

  /// Appends every cache entry not already on disk, sorted by key. Returns the
  /// number of records written. Call from a single thread.
  std::size_t flush(const MemoCache& cache);

  static std::string format_record(const CanonicalKey& key, const IntPoly& poly);

 private:
  std::filesystem::path path_;
  std::set<std::string> on_disk_;
};

std::uint64_t fnv1a64(std::string_view data);

}  // namespace flowpoly
