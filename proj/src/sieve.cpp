#include "primecert/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <thread>

#include "primecert/errors.hpp"
#include "primecert/transcendental.hpp"

namespace primecert {

namespace {

constexpr std::size_t kBlockWords = 8;
// Chunks of the primorial are closed once they pass this many bits.
constexpr std::size_t kChunkBits = 4096;

std::vector<std::uint32_t> small_odd_primes(std::uint64_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 3; i <= limit; i += 2) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += 2 * i) composite[j] = 1;
  }
  return out;
}

void sieve_segment(std::vector<std::uint64_t>& bits, std::uint64_t i0, std::uint64_t i1,
                   const std::vector<std::uint32_t>& base) {
  // entries [i0, i1) represent the odd numbers 2i+1
  const std::uint64_t lo = 2 * i0 + 1;
  const std::uint64_t hi = 2 * (i1 - 1) + 1;
  for (std::uint32_t p32 : base) {
    const std::uint64_t p = p32;
    if (p * p > hi) break;
    std::uint64_t m = std::max(p * p, (lo + p - 1) / p * p);
    if ((m & 1) == 0) m += p;
    for (std::uint64_t i = (m - 1) / 2; i < i1; i += p) bits[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
}

}  // namespace

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_prime_trial(std::uint64_t m) {
  if (m < 2) return false;
  if (m < 4) return true;
  if (m % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

PrimeTable::PrimeTable(std::uint64_t limit, unsigned jobs, std::size_t segment) : limit_(limit) {
  if (limit < 2) throw UsageError("prime table limit must be >= 2, got " + std::to_string(limit));
  segment = std::max<std::size_t>(64, segment / 64 * 64);

  const std::uint64_t entries = (limit - 1) / 2 + 1;  // odd numbers 1, 3, ..., <= limit
  bits_.assign((entries + 63) / 64, ~std::uint64_t{0});
  bits_[0] &= ~std::uint64_t{1};  // 1 is not prime
  if (entries % 64) bits_.back() &= (std::uint64_t{1} << (entries % 64)) - 1;

  const auto base = small_odd_primes(isqrt_u64(limit));
  const std::uint64_t segments = (entries + segment - 1) / segment;
  auto work = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t s = first; s < segments; s += stride) {
      std::uint64_t i0 = s * segment;
      std::uint64_t i1 = std::min<std::uint64_t>(entries, i0 + segment);
      sieve_segment(bits_, i0, i1, base);
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(segments)));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned j = 0; j < jobs; ++j) workers.emplace_back(work, j, jobs);
  }

  block_counts_.resize(bits_.size() / kBlockWords + 1);
  std::uint64_t running = 0;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (w % kBlockWords == 0) block_counts_[w / kBlockWords] = running;
    running += static_cast<std::uint64_t>(std::popcount(bits_[w]));
  }
}

void PrimeTable::check_range(std::uint64_t x) const {
  if (x > limit_)
    throw UsageError("query " + std::to_string(x) + " beyond prime table limit " + std::to_string(limit_));
}

bool PrimeTable::is_prime(std::uint64_t m) const {
  check_range(m);
  if (m == 2) return true;
  if (m < 2 || m % 2 == 0) return false;
  const std::uint64_t i = (m - 1) / 2;
  return (bits_[i >> 6] >> (i & 63)) & 1;
}

std::uint64_t PrimeTable::odd_count_through(std::uint64_t idx) const {
  const std::uint64_t w = idx >> 6;
  std::uint64_t c = block_counts_[w / kBlockWords];
  for (std::uint64_t k = w / kBlockWords * kBlockWords; k < w; ++k)
    c += static_cast<std::uint64_t>(std::popcount(bits_[k]));
  const unsigned b = static_cast<unsigned>(idx & 63);
  const std::uint64_t mask = b == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (b + 1)) - 1);
  return c + static_cast<std::uint64_t>(std::popcount(bits_[w] & mask));
}

std::uint64_t PrimeTable::prime_count(std::uint64_t x) const {
  if (x < 2) return 0;
  check_range(x);
  if (x == 2) return 1;
  return 1 + odd_count_through((x - 1) / 2);
}

std::uint64_t PrimeTable::count_in_range(std::uint64_t lo, std::uint64_t hi) const {
  if (lo > hi) throw UsageError("empty range: lo " + std::to_string(lo) + " > hi " + std::to_string(hi));
  return prime_count(hi) - (lo == 0 ? 0 : prime_count(lo - 1));
}

std::optional<std::uint64_t> PrimeTable::first_at_least(std::uint64_t lo) const {
  if (lo <= 2) return limit_ >= 2 ? std::optional<std::uint64_t>(2) : std::nullopt;
  return next_prime(lo - 1);
}

std::optional<std::uint64_t> PrimeTable::next_prime(std::uint64_t after) const {
  if (after < 2) return 2;
  if (after >= limit_) return std::nullopt;
  std::uint64_t i = (after + 1) / 2;  // first odd > after is 2i+1
  std::uint64_t w = i >> 6;
  std::uint64_t word = bits_[w] & (~std::uint64_t{0} << (i & 63));
  while (word == 0) {
    if (++w >= bits_.size()) return std::nullopt;
    word = bits_[w];
  }
  const std::uint64_t p = 2 * ((w << 6) + static_cast<std::uint64_t>(std::countr_zero(word))) + 1;
  if (p > limit_) return std::nullopt;
  return p;
}

std::vector<std::uint64_t> PrimeTable::primes_in_range(std::uint64_t lo, std::uint64_t hi,
                                                       std::size_t max_count) const {
  if (lo > hi) throw UsageError("empty range: lo " + std::to_string(lo) + " > hi " + std::to_string(hi));
  check_range(hi);
  std::vector<std::uint64_t> out;
  for (auto p = first_at_least(lo); p && *p <= hi && out.size() < max_count; p = next_prime(*p))
    out.push_back(*p);
  return out;
}

PrimeTable build_table(std::uint64_t limit, unsigned jobs) { return PrimeTable(limit, jobs); }

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw UsageError("empty range: lo " + std::to_string(lo) + " > hi " + std::to_string(hi));
  if (lo < 2) throw UsageError("range must start at 2 or above");
  return PrimeTable(hi).primes_in_range(lo, hi);
}

std::uint64_t prime_count(std::uint64_t x) {
  if (x < 2) return 0;
  return PrimeTable(x).prime_count(x);
}

namespace {

// Sum of log over a multiset of factors, multiplied into chunks of about
// kChunkBits bits so the number of log evaluations stays small.
template <class Visit>
Enclosure sum_of_logs(Visit&& visit, long precision) {
  const long bits = precision + 32;
  Enclosure total(BigRational(0));
  BigInt chunk = 1;
  auto flush = [&] {
    if (chunk == 1) return;
    total = interval::add(total, log_enclosure(BigRational(chunk), bits), bits);
    chunk = 1;
  };
  visit([&](std::uint64_t factor) {
    chunk *= static_cast<unsigned long>(factor);
    if (bit_length(chunk) >= kChunkBits) flush();
  });
  flush();
  return interval::round_outward(total, precision + 16);
}

}  // namespace

Enclosure chebyshev_theta(const PrimeTable& table, std::uint64_t x, long precision) {
  if (x < 2) throw UsageError("chebyshev_theta needs x >= 2");
  table.prime_count(x);  // range check
  return sum_of_logs([&](auto&& emit) { table.for_each_prime(2, x, emit); }, precision);
}

Enclosure chebyshev_psi(const PrimeTable& table, std::uint64_t x, long precision) {
  if (x < 2) throw UsageError("chebyshev_psi needs x >= 2");
  table.prime_count(x);
  return sum_of_logs(
      [&](auto&& emit) {
        table.for_each_prime(2, x, [&](std::uint64_t p) {
          std::uint64_t pk = p;
          while (pk <= x / p) pk *= p;
          emit(pk);
        });
      },
      precision);
}

Enclosure chebyshev_theta(std::uint64_t x, long precision) {
  return chebyshev_theta(PrimeTable(std::max<std::uint64_t>(x, 2)), x, precision);
}

Enclosure chebyshev_psi(std::uint64_t x, long precision) {
  return chebyshev_psi(PrimeTable(std::max<std::uint64_t>(x, 2)), x, precision);
}

}  // namespace primecert
