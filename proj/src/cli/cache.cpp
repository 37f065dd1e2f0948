#include "wj/cli/cache.hpp"

#include <fstream>

#include "wj/cli/json.hpp"

namespace wj::cli {

namespace {

std::optional<BigInt> int_from(const json& j) {
  BigInt v;
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string() && v.set_str(j.get<std::string>(), 10) == 0) return v;
  return std::nullopt;
}

}  // namespace

std::string encode(const CacheEntry& e) {
  json j;
  j["D"] = int_json(e.D);
  j["forms"] = json::array();
  for (const auto& f : e.forms) j["forms"].push_back(form_json(f));
  j["structure"] = e.structure;
  if (!e.hcp.empty()) {
    j["hcp"] = json::array();
    for (const auto& c : e.hcp) j["hcp"].push_back(int_json(c));
    j["prec"] = e.prec;
  }
  return j.dump();
}

std::optional<CacheEntry> decode(const std::string& line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (!j.contains("D") || !j.contains("forms") || !j.contains("structure")) return std::nullopt;
  CacheEntry e;
  auto D = int_from(j["D"]);
  if (!D || !j["forms"].is_array() || !j["structure"].is_array()) return std::nullopt;
  e.D = *D;
  try {
    for (const auto& f : j["forms"]) {
      if (!f.is_array() || f.size() != 3) return std::nullopt;
      auto a = int_from(f[0]), b = int_from(f[1]), c = int_from(f[2]);
      if (!a || !b || !c) return std::nullopt;
      Form form(*a, *b, *c);
      if (form.discriminant() != e.D || !is_reduced(form)) return std::nullopt;
      e.forms.push_back(form);
    }
    long order = 1;
    for (const auto& d : j["structure"]) {
      if (!d.is_number_integer() || d.get<long>() < 1) return std::nullopt;
      e.structure.push_back(d.get<long>());
      order *= d.get<long>();
    }
    if (e.forms.empty() || order != static_cast<long>(e.forms.size())) return std::nullopt;
    if (j.contains("hcp")) {
      if (!j["hcp"].is_array() || j["hcp"].size() != e.forms.size() + 1) return std::nullopt;
      for (const auto& c : j["hcp"]) {
        auto v = int_from(c);
        if (!v) return std::nullopt;
        e.hcp.push_back(*v);
      }
      if (e.hcp.back() != 1 || !j.contains("prec") || !j["prec"].is_number_unsigned()) return std::nullopt;
      e.prec = j["prec"].get<prec_t>();
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return e;
}

ClassCache::ClassCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) {
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    std::ofstream create(path_);
    if (!create) fail(Errc::InvalidArgument, "cannot create cache file " + path_.string());
    return;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (auto e = decode(line)) {
      entries_.push_back(std::move(*e));
    } else {
      recovered_ = true;
    }
  }
  in.close();
  if (recovered_) {
    std::ofstream out(path_, std::ios::trunc);
    for (const auto& e : entries_) out << encode(e) << '\n';
  }
}

const CacheEntry* ClassCache::class_data(const BigInt& D) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->D == D) return &*it;
  }
  return nullptr;
}

const CacheEntry* ClassCache::class_polynomial(const BigInt& D, prec_t prec) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->D == D && !it->hcp.empty() && it->prec >= prec) return &*it;
  }
  return nullptr;
}

void ClassCache::append(const CacheEntry& e) {
  std::ofstream out(path_, std::ios::app);
  if (!out) fail(Errc::InvalidArgument, "cannot write cache file " + path_.string());
  out << encode(e) << '\n';
  entries_.push_back(e);
}

}  // namespace wj::cli
