#include "lambertfact/partition_store.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "lambertfact/arith.hpp"

namespace lambertfact {

namespace {

constexpr const char* kFileName = "partitions.bin";

void write_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes{};
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(bytes.data(), bytes.size());
}

std::uint64_t read_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw std::runtime_error("partition table: truncated file");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[i];
  return v;
}

}  // namespace

std::optional<std::filesystem::path> cache_directory() {
  const char* dir = std::getenv(kCacheDirEnv);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

void save_partition_table(const std::filesystem::path& file, const std::vector<BigInt>& values) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("partition table: cannot write " + file.string());
  write_u64(out, values.size());
  std::vector<unsigned char> buf;
  for (const auto& v : values) {
    if (sgn(v) < 0) throw std::invalid_argument("partition table: negative entry");
    const std::size_t len = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
    buf.assign(len, 0);
    std::size_t written = 0;
    if (sgn(v) != 0) mpz_export(buf.data(), &written, -1, 1, 0, 0, v.get_mpz_t());
    write_u64(out, written);
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(written));
  }
  if (!out) throw std::runtime_error("partition table: write failed for " + file.string());
}

std::vector<BigInt> load_partition_table(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("partition table: cannot read " + file.string());
  const std::uint64_t count = read_u64(in);
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, 1u << 20)));
  std::vector<unsigned char> buf;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t len = read_u64(in);
    if (len > (1u << 24)) throw std::runtime_error("partition table: implausible entry size");
    buf.resize(len);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(len));
    if (!in) throw std::runtime_error("partition table: truncated file");
    BigInt v = 0;
    if (len > 0) mpz_import(v.get_mpz_t(), len, -1, 1, 0, 0, buf.data());
    values.push_back(std::move(v));
  }
  return values;
}

std::size_t warm_partition_cache() {
  const auto dir = cache_directory();
  if (!dir) return 0;
  const auto file = *dir / kFileName;
  std::error_code ec;
  if (!std::filesystem::exists(file, ec)) return 0;
  auto values = load_partition_table(file);
  const std::size_t n = values.size();
  if (n <= PartitionCache::global().size()) return 0;
  PartitionCache::global().adopt(std::move(values));
  return n;
}

bool persist_partition_cache() {
  const auto dir = cache_directory();
  if (!dir) return false;
  std::filesystem::create_directories(*dir);
  auto& cache = PartitionCache::global();
  const auto size = static_cast<std::int64_t>(cache.size());
  save_partition_table(*dir / kFileName, cache.table(size - 1));
  return true;
}

}  // namespace lambertfact
