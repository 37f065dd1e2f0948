#pragma once

// Append-only JSON-lines cache of class groups and class polynomials,
// one entry per line, keyed by discriminant.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wj/binforms.hpp"
#include "wj/precision.hpp"

namespace wj::cli {

struct CacheEntry {
  BigInt D;
  std::vector<Form> forms;
  std::vector<long> structure;
  std::vector<BigInt> hcp;  // empty when only the class group is stored
  prec_t prec = 0;          // precision the polynomial was requested at
};

std::string encode(const CacheEntry& e);
// nullopt on any malformed or inconsistent line
std::optional<CacheEntry> decode(const std::string& line);

class ClassCache {
 public:
  // Creates the file when missing.  Malformed lines are dropped and the
  // file is rewritten from the remaining entries.
  explicit ClassCache(std::filesystem::path path);

  const CacheEntry* class_data(const BigInt& D) const;
  // Latest entry with a polynomial computed at precision >= prec; entries
  // at lower precision are never used.
  const CacheEntry* class_polynomial(const BigInt& D, prec_t prec) const;
  void append(const CacheEntry& e);

  bool recovered() const { return recovered_; }
  const std::vector<CacheEntry>& entries() const { return entries_; }

 private:
  std::filesystem::path path_;
  std::vector<CacheEntry> entries_;
  bool recovered_ = false;
};

}  // namespace wj::cli
