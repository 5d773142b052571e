#pragma once

// Append-only on-disk store of KL polynomials.
//
//   bruhat-forge-cache v1 A2~
//   <x word>\t<y word>\t<c0,c1,...>
//
// Coefficients are listed ascending from q^0. The identity is the empty word.

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "bruhat/laurent.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

inline constexpr const char* cache_header = "bruhat-forge-cache v1 A2~";
inline constexpr const char* cache_env_var = "BRUHAT_FORGE_CACHE";

class CacheFile {
public:
  /// Loads every record of an existing file. A missing file is created on the
  /// first store. Throws std::runtime_error on a bad header or record.
  explicit CacheFile(std::filesystem::path path);

  std::optional<QPoly> lookup(const Element& x, const Element& y) const;
  /// Appends a record unless (x, y) is already present. Returns whether a
  /// line was written.
  bool store(const Element& x, const Element& y, const QPoly& p);

  std::size_t size() const;
  const std::filesystem::path& path() const { return path_; }

private:
  std::filesystem::path path_;
  std::map<std::pair<Element, Element>, QPoly> records_;
  mutable std::mutex mutex_;
};

/// The path named by BRUHAT_FORGE_CACHE, if set and non-empty.
std::optional<std::filesystem::path> cache_path_from_env();

/// Dense coefficient list "c0,c1,..."; "0" for the zero polynomial.
std::string format_coefficients(const QPoly& p);
QPoly parse_coefficients(const std::string& text);

} // namespace bruhat
