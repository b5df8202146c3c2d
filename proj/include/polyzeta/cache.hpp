#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "polyzeta/bases.hpp"
#include "polyzeta/identify.hpp"

namespace polyzeta {

// On-disk cache of basis tables and identification results. One JSON-lines file per entry:
// a header line {"format", "version", "entry", "checksum"} followed by the records, the
// checksum being FNV-1a 64 over the record bytes. Entries with a bad header, version or
// checksum are treated as absent and overwritten. Writes go through a temporary file and a
// rename, so concurrent runs never observe a partial file.
class Cache {
 public:
  static constexpr int kVersion = 1;

  Cache() = default;  // disabled
  explicit Cache(std::filesystem::path dir);

  // $POLYZETA_CACHE_DIR, else $XDG_CACHE_HOME/polyzeta, else ~/.cache/polyzeta.
  static std::filesystem::path default_dir();

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry_path(std::string_view entry) const;

  std::optional<Identification> load_identification(unsigned max_weight) const;
  void store_identification(const Identification& id) const;

  // Installs a cached complete weight of one table; false when absent or invalid.
  bool load_basis(Bases& bases, Alphabet a, BasisKind k, unsigned weight) const;
  void store_basis(const Bases& bases, Alphabet a, BasisKind k, unsigned weight) const;

  // Loads every cached table of weight <= max_weight.
  void prime(Bases& bases, unsigned max_weight) const;
  // Stores every complete weight not yet on disk.
  void persist(const Bases& bases) const;

  // Cached identification, computed and stored on a miss.
  Identification identification(unsigned max_weight, Bases& bases) const;

 private:
  std::optional<std::string> read_entry(std::string_view entry) const;
  void write_entry(std::string_view entry, const std::string& body) const;

  std::filesystem::path dir_;
};

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace polyzeta
