#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace stabilab {

// The cache directory could not be created, written or cleared.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// On-disk store of JSON documents grouped by category ("characters",
// "groebner"). Writes go to a temporary file that is then renamed into place.
class CacheDirectory {
 public:
  static constexpr const char* kCategories[] = {"characters", "groebner"};

  explicit CacheDirectory(std::filesystem::path root);

  // STABILAB_CACHE if set, otherwise ./.stabilab-cache.
  static std::filesystem::path default_root();

  const std::filesystem::path& root() const { return root_; }

  std::optional<nlohmann::json> read(const std::string& category,
                                     const std::string& name) const;
  void write(const std::string& category, const std::string& name,
             const nlohmann::json& document) const;

  // "category/name" for every stored document, sorted.
  std::vector<std::string> list() const;
  // Removes the known categories; a missing root is not an error.
  void clear() const;

 private:
  std::filesystem::path file_for(const std::string& category, const std::string& name) const;

  std::filesystem::path root_;
};

}  // namespace stabilab
