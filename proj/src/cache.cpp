#include "bruhat/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bruhat {

std::string format_coefficients(const QPoly& p) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (int e = 0; e <= p.max_exponent(); ++e) {
    if (e > 0)
      out += ',';
    out += p.coefficient(e).str();
  }
  return out;
}

QPoly parse_coefficients(const std::string& text) {
  QPoly p;
  std::stringstream ss(text);
  std::string item;
  for (int e = 0; std::getline(ss, item, ','); ++e) {
    if (item.empty())
      throw std::runtime_error("empty coefficient in cache record");
    p.add_term(e, Integer(item));
  }
  return p;
}

CacheFile::CacheFile(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in)
    return;
  std::string line;
  if (!std::getline(in, line))
    return;
  if (line != cache_header)
    throw std::runtime_error("not a bruhat-forge cache: " + path_.string());
  for (int lineno = 2; std::getline(in, line); ++lineno) {
    if (line.empty())
      continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      throw std::runtime_error("malformed cache record at line " + std::to_string(lineno));
    try {
      records_.emplace(std::pair{from_word(line.substr(0, t1)), from_word(line.substr(t1 + 1, t2 - t1 - 1))},
                       parse_coefficients(line.substr(t2 + 1)));
    } catch (const std::exception& e) {
      throw std::runtime_error("malformed cache record at line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

std::optional<QPoly> CacheFile::lookup(const Element& x, const Element& y) const {
  std::lock_guard lock(mutex_);
  auto it = records_.find({x, y});
  if (it == records_.end())
    return std::nullopt;
  return it->second;
}

bool CacheFile::store(const Element& x, const Element& y, const QPoly& p) {
  std::lock_guard lock(mutex_);
  if (!records_.emplace(std::pair{x, y}, p).second)
    return false;
  const bool fresh = !std::filesystem::exists(path_) || std::filesystem::file_size(path_) == 0;
  std::ofstream out(path_, std::ios::app);
  if (!out)
    throw std::runtime_error("cannot write cache: " + path_.string());
  if (fresh)
    out << cache_header << '\n';
  out << x.to_string() << '\t' << y.to_string() << '\t' << format_coefficients(p) << '\n';
  return true;
}

std::size_t CacheFile::size() const {
  std::lock_guard lock(mutex_);
  return records_.size();
}

std::optional<std::filesystem::path> cache_path_from_env() {
  const char* value = std::getenv(cache_env_var);
  if (value == nullptr || *value == '\0')
    return std::nullopt;
  return std::filesystem::path(value);
}

} // namespace bruhat
