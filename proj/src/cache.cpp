#include "stabilab/cache.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace stabilab {

namespace fs = std::filesystem;

CacheDirectory::CacheDirectory(fs::path root) : root_(std::move(root)) {}

fs::path CacheDirectory::default_root() {
  if (const char* env = std::getenv("STABILAB_CACHE"); env != nullptr && *env != '\0') {
    return fs::path(env);
  }
  return fs::path(".stabilab-cache");
}

fs::path CacheDirectory::file_for(const std::string& category, const std::string& name) const {
  return root_ / category / (name + ".json");
}

std::optional<nlohmann::json> CacheDirectory::read(const std::string& category,
                                                   const std::string& name) const {
  const fs::path file = file_for(category, name);
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error&) {
    // A torn or foreign file is treated as a miss.
    return std::nullopt;
  }
}

void CacheDirectory::write(const std::string& category, const std::string& name,
                           const nlohmann::json& document) const {
  static std::atomic<unsigned long> counter{0};
  const fs::path target = file_for(category, name);
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  if (ec) throw CacheError("cannot create cache directory " + target.parent_path().string());

  const auto tid = std::hash<std::thread::id>{}(std::this_thread::get_id());
  fs::path temp = target;
  temp += ".tmp." + std::to_string(tid) + "." + std::to_string(counter++);
  {
    std::ofstream out(temp);
    if (!out) throw CacheError("cannot write cache file " + temp.string());
    out << document.dump() << '\n';
    if (!out) throw CacheError("short write to cache file " + temp.string());
  }
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw CacheError("cannot install cache file " + target.string());
  }
}

std::vector<std::string> CacheDirectory::list() const {
  std::vector<std::string> out;
  std::error_code ec;
  if (!fs::is_directory(root_, ec)) return out;
  for (const auto& entry : fs::recursive_directory_iterator(root_, ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    fs::path rel = fs::relative(entry.path(), root_, ec);
    rel.replace_extension();
    out.push_back(rel.generic_string());
  }
  std::ranges::sort(out);
  return out;
}

void CacheDirectory::clear() const {
  std::error_code ec;
  if (!fs::exists(root_, ec)) return;
  for (const char* category : kCategories) {
    fs::remove_all(root_ / category, ec);
    if (ec) throw CacheError("cannot clear " + (root_ / category).string());
  }
}

}  // namespace stabilab
