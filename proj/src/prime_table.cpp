#include "pbsq/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "pbsq/errors.hpp"

namespace pbsq {

uint64_t isqrt(uint64_t n) {
  if (n == 0) return 0;
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

bool is_prime_trial(uint64_t h) {
  if (h < 2) return false;
  for (uint64_t i = 2; i * i <= h; ++i) {
    if (h % i == 0) return false;
  }
  return true;
}

uint64_t least_prime_factor(uint64_t m) {
  if (m < 2) throw std::domain_error("least_prime_factor: m must be >= 2");
  if (m % 2 == 0) return 2;
  if (m % 3 == 0) return 3;
  for (uint64_t i = 5; i * i <= m; i += 6) {
    if (m % i == 0) return i;
    if (m % (i + 2) == 0) return i + 2;
  }
  return m;
}

uint64_t primorial_hash(double x) {
  if (x < 0 || std::isnan(x)) throw std::domain_error("primorial_hash: x must be >= 0");
  uint64_t bound = x < 2.0 ? 0 : static_cast<uint64_t>(std::floor(x));
  uint64_t value = 1;
  for (uint64_t p = 2; p <= bound; ++p) {
    if (!is_prime_trial(p)) continue;
    if (__builtin_mul_overflow(value, p, &value)) {
      throw std::overflow_error("primorial_hash: product exceeds 64 bits");
    }
  }
  return value;
}

void sieve_odd_block(uint64_t lo, uint64_t hi, std::span<const uint64_t> base_primes,
                     std::vector<uint8_t>& flags) {
  uint64_t lo_odd = (lo & 1) ? lo : lo + 1;
  size_t n = lo_odd > hi ? 0 : (hi - lo_odd) / 2 + 1;
  flags.assign(n, 0);
  if (n == 0) return;
  uint64_t root = isqrt(hi);
  for (uint64_t p : base_primes) {
    if (p < 3) continue;
    if (p > root) break;
    uint64_t start = p * p;
    if (start < lo_odd) {
      uint64_t k = (lo_odd + p - 1) / p;
      if (!(k & 1)) ++k;  // odd multiples only
      start = k * p;
    }
    for (uint64_t m = start; m <= hi; m += 2 * p) {
      flags[(m - lo_odd) >> 1] = 1;
    }
  }
  if (lo_odd == 1) flags[0] = 1;  // 1 is not prime
}

void sieve_odd_block_lpf(uint64_t lo, uint64_t hi, std::span<const uint64_t> base_primes,
                         std::vector<uint32_t>& labels) {
  uint64_t lo_odd = (lo & 1) ? lo : lo + 1;
  size_t n = lo_odd > hi ? 0 : (hi - lo_odd) / 2 + 1;
  labels.assign(n, 0);
  if (n == 0) return;
  uint64_t root = isqrt(hi);
  for (uint64_t p : base_primes) {
    if (p < 3) continue;
    if (p > root) break;
    uint64_t start = p * p;
    if (start < lo_odd) {
      uint64_t k = (lo_odd + p - 1) / p;
      if (!(k & 1)) ++k;
      start = k * p;
    }
    for (uint64_t m = start; m <= hi; m += 2 * p) {
      uint32_t& slot = labels[(m - lo_odd) >> 1];
      if (slot == 0) slot = static_cast<uint32_t>(p);
    }
  }
  if (lo_odd == 1) labels[0] = 1;  // 1 is neither prime nor struck by a prime
}

PrimeTable PrimeTable::sieve_upto(uint64_t n, uint64_t segmented_threshold) {
  if (n < 2) throw std::domain_error("sieve_upto: n must be >= 2");
  PrimeTable t;
  if (n <= segmented_threshold) {
    if (isqrt(n) >= 65536) {
      throw CapacityError("sieve_upto: dense lpf storage caps at limit < 2^32; "
                          "lower the segmented threshold");
    }
    t.build_dense(n);
  } else {
    t.build_segmented(n);
  }
  return t;
}

void PrimeTable::build_dense(uint64_t n) {
  limit_ = n;
  segmented_ = false;
  odd_lpf_.assign((n >> 1) + 1, 0);
  for (uint64_t i = 3; i * i <= n; i += 2) {
    if (odd_lpf_[i >> 1] != 0) continue;
    for (uint64_t j = i * i; j <= n; j += 2 * i) {
      if (odd_lpf_[j >> 1] == 0) odd_lpf_[j >> 1] = static_cast<uint16_t>(i);
    }
  }
  primes_.clear();
  primes_.reserve(n > 16 ? static_cast<size_t>(1.2 * n / std::log(static_cast<double>(n))) : 8);
  primes_.push_back(2);
  for (uint64_t m = 3; m <= n; m += 2) {
    if (odd_lpf_[m >> 1] == 0) primes_.push_back(m);
  }
}

void PrimeTable::build_segmented(uint64_t n) {
  limit_ = n;
  segmented_ = true;
  base_.reset(new PrimeTable());
  base_->build_dense(isqrt(n) + 1);

  size_t nblocks = static_cast<size_t>(n / kBlockSpan) + 1;
  block_pi_.assign(nblocks + 1, 0);
  std::vector<uint8_t> flags;
  uint64_t count = 0;
  for (size_t b = 0; b < nblocks; ++b) {
    block_pi_[b] = count;
    uint64_t lo = b * kBlockSpan;
    uint64_t hi = std::min(n, lo + kBlockSpan - 1);
    if (hi < 2) continue;
    if (lo <= 2) ++count;  // the prime 2
    sieve_odd_block(std::max<uint64_t>(lo, 3), hi, base_->primes(), flags);
    for (uint8_t f : flags) count += !f;
  }
  block_pi_[nblocks] = count;
}

uint64_t PrimeTable::count_in_block(uint64_t block_lo, uint64_t x) const {
  uint64_t hi = std::min(limit_, block_lo + kBlockSpan - 1);
  uint64_t count = 0;
  if (block_lo <= 2 && x >= 2) ++count;
  uint64_t lo = std::max<uint64_t>(block_lo, 3);
  if (lo > hi) return count;
  std::vector<uint8_t> flags;
  sieve_odd_block(lo, hi, base_->primes(), flags);
  uint64_t lo_odd = (lo & 1) ? lo : lo + 1;
  for (uint64_t m = lo_odd; m <= x && m <= hi; m += 2) {
    count += !flags[(m - lo_odd) >> 1];
  }
  return count;
}

bool PrimeTable::is_prime(uint64_t m) const {
  if (m > limit_) throw std::out_of_range("is_prime: beyond table limit");
  if (m < 2) return false;
  if (m == 2) return true;
  if (!(m & 1)) return false;
  if (!segmented_) return odd_lpf_[m >> 1] == 0;
  return lpf(m) == m;
}

uint64_t PrimeTable::lpf(uint64_t m) const {
  if (m < 2) throw std::domain_error("lpf: m must be >= 2");
  if (m > limit_) throw std::out_of_range("lpf: beyond table limit");
  if (!(m & 1)) return 2;
  if (!segmented_) {
    uint16_t v = odd_lpf_[m >> 1];
    return v == 0 ? m : v;
  }
  uint64_t root = isqrt(m);
  for (uint64_t p : base_->primes()) {
    if (p > root) break;
    if (m % p == 0) return p;
  }
  return m;
}

uint64_t PrimeTable::pi(uint64_t x) const {
  if (x > limit_) throw std::out_of_range("pi: beyond table limit");
  if (x < 2) return 0;
  if (!segmented_) {
    return static_cast<uint64_t>(
        std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
  }
  size_t b = static_cast<size_t>(x / kBlockSpan);
  return block_pi_[b] + count_in_block(b * kBlockSpan, x);
}

const std::vector<uint64_t>& PrimeTable::primes() const {
  if (segmented_) {
    throw CapacityError("primes(): full prime list is not stored in segmented mode");
  }
  return primes_;
}

std::span<const uint64_t> PrimeTable::base_primes() const {
  const std::vector<uint64_t>& ps = segmented_ ? base_->primes_ : primes_;
  auto end = std::upper_bound(ps.begin(), ps.end(), isqrt(limit_));
  return {ps.data(), static_cast<size_t>(end - ps.begin())};
}

uint64_t PrimeTable::nth_prime(uint64_t j) const {
  const auto& ps = primes();
  if (j == 0 || j > ps.size()) throw std::out_of_range("nth_prime: index outside table");
  return ps[j - 1];
}

uint64_t PrimeTable::prime_index(uint64_t p) const {
  const auto& ps = primes();
  auto it = std::lower_bound(ps.begin(), ps.end(), p);
  if (it == ps.end() || *it != p) throw std::out_of_range("prime_index: not a prime in table");
  return static_cast<uint64_t>(it - ps.begin()) + 1;
}

std::optional<uint64_t> PrimeTable::prev_prime(uint64_t m) const {
  if (m > limit_) throw std::out_of_range("prev_prime: beyond table limit");
  if (m < 2) return std::nullopt;
  if (!segmented_) {
    auto it = std::upper_bound(primes_.begin(), primes_.end(), m);
    if (it == primes_.begin()) return std::nullopt;
    return *(it - 1);
  }
  for (uint64_t x = m;;) {
    if (is_prime(x)) return x;
    if (x == 2) return std::nullopt;
    --x;
  }
}

std::optional<uint64_t> PrimeTable::next_prime(uint64_t m) const {
  if (m > limit_) return std::nullopt;
  if (!segmented_) {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), m);
    if (it == primes_.end()) return std::nullopt;
    return *it;
  }
  for (uint64_t x = std::max<uint64_t>(m, 2); x <= limit_; ++x) {
    if (is_prime(x)) return x;
  }
  return std::nullopt;
}

namespace {

constexpr char kCacheMagic[4] = {'P', 'B', 'S', 'Q'};
constexpr uint32_t kCacheVersion = 1;

void write_u32(std::ostream& out, uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

void write_u64(std::ostream& out, uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

uint32_t read_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
  return v;
}

uint64_t read_u64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
  return v;
}

void write_varint(std::ostream& out, uint64_t v) {
  while (v >= 0x80) {
    out.put(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.put(static_cast<char>(v));
}

uint64_t read_varint(std::istream& in) {
  uint64_t v = 0;
  int shift = 0;
  while (true) {
    int c = in.get();
    if (c == EOF) throw std::runtime_error("prime cache: truncated varint");
    v |= static_cast<uint64_t>(c & 0x7f) << shift;
    if (!(c & 0x80)) return v;
    shift += 7;
    if (shift > 63) throw std::runtime_error("prime cache: varint overflow");
  }
}

}  // namespace

void PrimeTable::save_cache(const std::filesystem::path& file) const {
  if (segmented_) throw CapacityError("save_cache: only dense tables are cached");
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("save_cache: cannot open " + file.string());
  out.write(kCacheMagic, 4);
  write_u32(out, kCacheVersion);
  write_u64(out, limit_);
  write_u64(out, primes_.size());
  uint64_t prev = 0;
  for (uint64_t p : primes_) {
    write_varint(out, p - prev);
    prev = p;
  }
  if (!out) throw std::runtime_error("save_cache: write failed");
}

PrimeTable PrimeTable::load_cache(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("load_cache: cannot open " + file.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kCacheMagic, 4) != 0) {
    throw std::runtime_error("load_cache: bad magic");
  }
  uint32_t version = read_u32(in);
  if (version != kCacheVersion) throw std::runtime_error("load_cache: unsupported version");
  uint64_t limit = read_u64(in);
  uint64_t count = read_u64(in);
  if (limit < 2) throw std::runtime_error("load_cache: corrupt limit");
  PrimeTable t;
  t.limit_ = limit;
  t.segmented_ = false;
  t.primes_.reserve(count);
  uint64_t prev = 0;
  for (uint64_t i = 0; i < count; ++i) {
    uint64_t p = prev + read_varint(in);
    if (p <= prev || p > limit) throw std::runtime_error("load_cache: corrupt prime list");
    t.primes_.push_back(p);
    prev = p;
  }
  if (t.primes_.empty() || t.primes_[0] != 2) {
    throw std::runtime_error("load_cache: corrupt prime list");
  }
  t.rebuild_lpf_from_primes();
  return t;
}

void PrimeTable::rebuild_lpf_from_primes() {
  odd_lpf_.assign((limit_ >> 1) + 1, 0);
  uint64_t root = isqrt(limit_);
  for (uint64_t p : primes_) {
    if (p > root) break;
    if (p < 3) continue;
    for (uint64_t j = p * p; j <= limit_; j += 2 * p) {
      if (odd_lpf_[j >> 1] == 0) odd_lpf_[j >> 1] = static_cast<uint16_t>(p);
    }
  }
}

uint64_t pi_legendre(uint64_t n, const PrimeTable& table, uint64_t node_budget) {
  if (n < 2) return 0;
  uint64_t root = isqrt(n);
  if (root > table.limit()) throw std::out_of_range("pi_legendre: table must cover sqrt(n)");
  std::span<const uint64_t> ps = table.base_primes();
  // restrict to primes <= sqrt(n)
  size_t a = 0;
  while (a < ps.size() && ps[a] <= root) ++a;

  int64_t sum = static_cast<int64_t>(n - 1);  // d = 1 term, floor((n-1)/1)
  uint64_t nodes = 0;

  // DFS over squarefree products of ps[0..a); sign alternates with depth.
  struct Frame { size_t idx; uint64_t d; int sign; };
  std::vector<Frame> stack;
  stack.push_back({0, 1, -1});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    for (size_t i = f.idx; i < a; ++i) {
      if (ps[i] > n / f.d) break;  // product would exceed n; later primes larger
      uint64_t d = f.d * ps[i];
      if (++nodes > node_budget) {
        throw CapacityError("pi_legendre: subset enumeration exceeds node budget");
      }
      sum += f.sign * static_cast<int64_t>(n / d);
      stack.push_back({i + 1, d, -f.sign});
    }
  }
  return table.pi(root) + static_cast<uint64_t>(sum);
}

}  // namespace pbsq
