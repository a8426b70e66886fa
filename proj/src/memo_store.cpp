#include "flowpoly/memo_store.hpp"

#include "flowpoly/errors.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace flowpoly {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << v;
  return out.str();
}

}  // namespace

MemoStore::MemoStore(std::filesystem::path dir) : path_(std::move(dir) / kFileName) {}

std::string MemoStore::format_record(const CanonicalKey& key, const IntPoly& poly) {
  std::string body = key.hex() + "\t" + poly.to_string();
  return body + "\t" + hex64(fnv1a64(body));
}

std::size_t MemoStore::load(MemoCache& cache, std::ostream& warn) {
  std::ifstream in(path_);
  if (!in) return 0;
  std::string line;
  std::size_t line_no = 0;
  std::size_t accepted = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    auto skip = [&](const std::string& why) {
      warn << "warning: " << path_.string() << ":" << line_no << ": skipping cache record (" << why << ")\n";
    };
    if (tab2 == std::string::npos) {
      skip("wrong field count");
      continue;
    }
    const std::string body = line.substr(0, tab2);
    if (line.substr(tab2 + 1) != hex64(fnv1a64(body))) {
      skip("checksum mismatch");
      continue;
    }
    try {
      const auto key = CanonicalKey::from_hex(line.substr(0, tab1));
      const auto poly = IntPoly::parse(line.substr(tab1 + 1, tab2 - tab1 - 1));
      cache.insert(key, poly);
      on_disk_.insert(key.bytes);
      ++accepted;
    } catch (const std::exception& e) {
      skip(e.what());
    }
  }
  return accepted;
}

std::size_t MemoStore::flush(const MemoCache& cache) {
  std::vector<std::string> records;
  for (const auto& [key, poly] : cache.snapshot()) {
    if (on_disk_.count(key.bytes)) continue;
    records.push_back(format_record(key, poly));
    on_disk_.insert(key.bytes);
  }
  if (records.empty()) return 0;
  std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file " + path_.string() + " for writing");
  for (const auto& r : records) out << r << '\n';
  return records.size();
}

}  // namespace flowpoly
