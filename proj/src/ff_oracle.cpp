#include "ff_oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "arith.hpp"

namespace detsurf {

namespace {

uint64_t mulmod_wide(uint64_t x, uint64_t y, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

uint64_t powmod_wide(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_wide(r, b, m);
    b = mulmod_wide(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // Deterministic Miller-Rabin bases for all 64-bit integers.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_wide(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_wide(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

uint64_t default_fermat_modulus(int64_t d) {
  if (d < 1) throw std::invalid_argument("default_fermat_modulus: requires d >= 1");
  const uint64_t step = 2 * static_cast<uint64_t>(d);
  uint64_t p = 10001;
  p += (step - (p - 1) % step) % step;  // least p > 10^4 with p = 1 mod 2d
  while (!is_prime(p)) p += step;
  return p;
}

PrimeField::PrimeField(uint64_t p) : p_(p) {
  if (p < 3 || p >= (1ull << 31) || !is_prime(p))
    throw std::domain_error("PrimeField: modulus must be an odd prime below 2^31");
}

uint64_t PrimeField::pow(uint64_t x, uint64_t e) const { return powmod_wide(x % p_, e, p_); }

uint64_t PrimeField::inv(uint64_t x) const {
  x %= p_;
  if (x == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow(x, p_ - 2);
}

uint64_t PrimeField::root_of_unity(uint64_t n) const {
  if (n == 0 || (p_ - 1) % n != 0) throw std::domain_error("PrimeField: order does not divide p - 1");
  // Factor p - 1 by trial division, then find a generator of the unit group.
  std::vector<uint64_t> prime_factors;
  uint64_t m = p_ - 1;
  for (uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      prime_factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  for (uint64_t g = 2; g < p_; ++g) {
    bool generator = true;
    for (uint64_t q : prime_factors) {
      if (pow(g, (p_ - 1) / q) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return pow(g, (p_ - 1) / n);
  }
  throw std::logic_error("PrimeField: no generator found");
}

int64_t monomial_count(int64_t degree) { return binom(degree + 3, 3); }

int64_t monomial_index(int64_t degree, const std::array<int64_t, 4>& e) {
  const int64_t after_x = degree - e[0];
  const int64_t after_y = after_x - e[1];
  return binom(after_x + 2, 3) + binom(after_y + 1, 2) + (after_y - e[2]);
}

std::vector<std::array<int64_t, 4>> monomial_exponents(int64_t degree) {
  std::vector<std::array<int64_t, 4>> out;
  out.reserve(static_cast<size_t>(monomial_count(degree)));
  for (int64_t ex = degree; ex >= 0; --ex)
    for (int64_t ey = degree - ex; ey >= 0; --ey)
      for (int64_t ez = degree - ex - ey; ez >= 0; --ez) out.push_back({ex, ey, ez, degree - ex - ey - ez});
  return out;
}

bool PrimeFieldPoly::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](uint64_t c) { return c == 0; });
}

PrimeFieldPoly zero_poly(uint64_t modulus, int64_t degree) {
  if (degree < 0) throw std::invalid_argument("zero_poly: negative degree");
  return {modulus, degree, std::vector<uint64_t>(static_cast<size_t>(monomial_count(degree)), 0)};
}

PrimeFieldPoly constant_poly(uint64_t modulus, uint64_t value) {
  PrimeFieldPoly f = zero_poly(modulus, 0);
  f.coeffs[0] = value % modulus;
  return f;
}

PrimeFieldPoly monomial_poly(uint64_t modulus, uint64_t c, const std::array<int64_t, 4>& exps) {
  const int64_t degree = exps[0] + exps[1] + exps[2] + exps[3];
  PrimeFieldPoly f = zero_poly(modulus, degree);
  f.coeffs[static_cast<size_t>(monomial_index(degree, exps))] = c % modulus;
  return f;
}

PrimeFieldPoly poly_add(const PrimeFieldPoly& f, const PrimeFieldPoly& g) {
  if (f.modulus != g.modulus) throw std::invalid_argument("poly_add: modulus mismatch");
  if (f.degree != g.degree) throw std::invalid_argument("poly_add: degree mismatch");
  PrimeFieldPoly h = f;
  for (size_t i = 0; i < h.coeffs.size(); ++i) h.coeffs[i] = (h.coeffs[i] + g.coeffs[i]) % f.modulus;
  return h;
}

PrimeFieldPoly poly_scale(const PrimeFieldPoly& f, uint64_t c) {
  PrimeFieldPoly h = f;
  c %= f.modulus;
  for (auto& x : h.coeffs) x = x * c % f.modulus;
  return h;
}

PrimeFieldPoly poly_mul(const PrimeFieldPoly& f, const PrimeFieldPoly& g) {
  if (f.modulus != g.modulus) throw std::invalid_argument("poly_mul: modulus mismatch");
  const uint64_t p = f.modulus;
  PrimeFieldPoly h = zero_poly(p, f.degree + g.degree);
  const auto fe = monomial_exponents(f.degree);
  const auto ge = monomial_exponents(g.degree);
  for (size_t i = 0; i < fe.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    for (size_t j = 0; j < ge.size(); ++j) {
      if (g.coeffs[j] == 0) continue;
      const std::array<int64_t, 4> e{fe[i][0] + ge[j][0], fe[i][1] + ge[j][1], fe[i][2] + ge[j][2],
                                     fe[i][3] + ge[j][3]};
      auto& slot = h.coeffs[static_cast<size_t>(monomial_index(h.degree, e))];
      slot = (slot + f.coeffs[i] * g.coeffs[j]) % p;
    }
  }
  return h;
}

void validate(const DetMatrix& m) {
  validate(m.pair);
  const int64_t t = m.t();
  if (static_cast<int64_t>(m.entries.size()) != t * t) throw std::invalid_argument("DetMatrix: wrong entry count");
  for (int64_t i = 0; i < t; ++i)
    for (int64_t j = 0; j < t; ++j) {
      const PrimeFieldPoly& e = m.at(i, j);
      if (e.modulus != m.modulus || e.degree != m.pair.b[static_cast<size_t>(j)] - m.pair.a[static_cast<size_t>(i)])
        throw std::invalid_argument("DetMatrix: entry degree or modulus mismatch");
    }
}

namespace {

// Determinant of the rows r.. of m restricted to the columns in `mask`,
// expanding along row r; r is determined by popcount(mask).
const PrimeFieldPoly& det_masked(const DetMatrix& m, uint32_t mask,
                                 std::unordered_map<uint32_t, PrimeFieldPoly>& memo) {
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  const int64_t t = m.t();
  const int64_t r = t - __builtin_popcount(mask);
  int64_t deg = 0;
  for (int64_t i = r; i < t; ++i) deg -= m.pair.a[static_cast<size_t>(i)];
  for (int64_t j = 0; j < t; ++j)
    if (mask & (1u << j)) deg += m.pair.b[static_cast<size_t>(j)];
  PrimeFieldPoly result = mask == 0 ? constant_poly(m.modulus, 1) : zero_poly(m.modulus, deg);
  int sign = 0;
  for (int64_t j = 0; j < t && mask; ++j) {
    if (!(mask & (1u << j))) continue;
    const PrimeFieldPoly& entry = m.at(r, j);
    if (!entry.is_zero()) {
      const PrimeFieldPoly& sub = det_masked(m, mask & ~(1u << j), memo);
      PrimeFieldPoly term = poly_mul(entry, sub);
      if (sign & 1) term = poly_scale(term, m.modulus - 1);
      result = poly_add(result, term);
    }
    ++sign;
  }
  return memo.emplace(mask, std::move(result)).first->second;
}

}  // namespace

PrimeFieldPoly det(const DetMatrix& m) {
  validate(m);
  const int64_t t = m.t();
  if (t > 8) throw std::invalid_argument("det: supported up to t = 8");
  std::unordered_map<uint32_t, PrimeFieldPoly> memo;
  return det_masked(m, (1u << t) - 1, memo);
}

PrimeFieldPoly cofactor(const DetMatrix& m, int64_t i, int64_t j) {
  const int64_t t = m.t();
  DetMatrix minor;
  minor.modulus = m.modulus;
  minor.pair.a.reserve(static_cast<size_t>(t - 1));
  minor.pair.b.reserve(static_cast<size_t>(t - 1));
  for (int64_t r = 0; r < t; ++r)
    if (r != i) minor.pair.a.push_back(m.pair.a[static_cast<size_t>(r)]);
  for (int64_t c = 0; c < t; ++c)
    if (c != j) minor.pair.b.push_back(m.pair.b[static_cast<size_t>(c)]);
  for (int64_t r = 0; r < t; ++r)
    for (int64_t c = 0; c < t; ++c)
      if (r != i && c != j) minor.entries.push_back(m.at(r, c));
  std::unordered_map<uint32_t, PrimeFieldPoly> memo;
  PrimeFieldPoly result = det_masked(minor, (1u << (t - 1)) - 1, memo);
  if ((i + j) & 1) result = poly_scale(result, m.modulus - 1);
  return result;
}

PrimeFieldPoly fermat_poly(uint64_t modulus, int64_t d) {
  PrimeFieldPoly f = zero_poly(modulus, d);
  f.coeffs[static_cast<size_t>(monomial_index(d, {d, 0, 0, 0}))] = 1;
  f.coeffs[static_cast<size_t>(monomial_index(d, {0, d, 0, 0}))] = 1;
  f.coeffs[static_cast<size_t>(monomial_index(d, {0, 0, d, 0}))] = 1;
  f.coeffs[static_cast<size_t>(monomial_index(d, {0, 0, 0, d}))] = 1;
  return f;
}

namespace {

// Linear factors of u^d + v^d: u - zeta*v over the d-th roots of -1, which
// are the odd powers of a primitive 2d-th root of unity.
std::vector<PrimeFieldPoly> power_sum_factors(const PrimeField& F, int64_t d, int var_u, int var_v) {
  const uint64_t omega = F.root_of_unity(2 * static_cast<uint64_t>(d));
  std::vector<PrimeFieldPoly> factors;
  uint64_t zeta = omega;
  for (int64_t k = 0; k < d; ++k) {
    std::array<int64_t, 4> eu{0, 0, 0, 0}, ev{0, 0, 0, 0};
    eu[static_cast<size_t>(var_u)] = 1;
    ev[static_cast<size_t>(var_v)] = 1;
    PrimeFieldPoly lin = poly_add(monomial_poly(F.p(), 1, eu), monomial_poly(F.p(), F.neg(zeta), ev));
    factors.push_back(std::move(lin));
    zeta = F.mul(zeta, F.mul(omega, omega));  // next odd power
  }
  return factors;
}

PrimeFieldPoly product_of(const PrimeField& F, const std::vector<PrimeFieldPoly>& factors, size_t from, size_t count) {
  PrimeFieldPoly prod = constant_poly(F.p(), 1);
  for (size_t i = from; i < from + count; ++i) prod = poly_mul(prod, factors[i]);
  return prod;
}

}  // namespace

DetMatrix fermat_matrix(const AdmissiblePair& p, uint64_t modulus) {
  if (!is_reduced(p)) throw std::invalid_argument("fermat_matrix: pair is not reduced");
  const int64_t d = p.degree();
  const PrimeField F(modulus);
  if ((modulus - 1) % (2 * static_cast<uint64_t>(d)) != 0)
    throw std::domain_error("fermat_matrix: modulus must be = 1 mod 2d");
  const AdmissiblePair q = shift_normalize(p, 0);
  const int64_t t = q.length();

  const auto xy = power_sum_factors(F, d, 0, 1);
  const auto zw = power_sum_factors(F, d, 2, 3);

  DetMatrix m;
  m.pair = q;
  m.modulus = modulus;
  m.entries.reserve(static_cast<size_t>(t * t));
  for (int64_t i = 0; i < t; ++i)
    for (int64_t j = 0; j < t; ++j)
      m.entries.push_back(zero_poly(modulus, q.b[static_cast<size_t>(j)] - q.a[static_cast<size_t>(i)]));

  auto entry = [&](int64_t i, int64_t j) -> PrimeFieldPoly& { return m.entries[static_cast<size_t>(i * t + j)]; };

  // Diagonal f_i of degree b_i - a_i, consuming the factors of x^d + y^d.
  size_t used = 0;
  for (int64_t i = 0; i < t; ++i) {
    const size_t deg = static_cast<size_t>(q.b[static_cast<size_t>(i)] - q.a[static_cast<size_t>(i)]);
    entry(i, i) = product_of(F, xy, used, deg);
    used += deg;
  }

  // Subdiagonal g_1..g_{t-1} and corner g_t from the factors of z^d + w^d;
  // expansion along the first row gives det = prod f + (-1)^(t+1) prod g, so
  // the corner factor absorbs a sign of (-1)^(t+1) to make det exactly the
  // Fermat form.
  used = 0;
  for (int64_t i = 0; i + 1 < t; ++i) {
    const size_t deg = static_cast<size_t>(q.b[static_cast<size_t>(i)] - q.a[static_cast<size_t>(i + 1)]);
    entry(i + 1, i) = product_of(F, zw, used, deg);
    used += deg;
  }
  PrimeFieldPoly corner = product_of(F, zw, used, static_cast<size_t>(d) - used);
  if (t % 2 == 0) corner = poly_scale(corner, modulus - 1);
  entry(0, t - 1) = std::move(corner);

  validate(m);
  return m;
}

bool fermat_check(const AdmissiblePair& p, uint64_t modulus) {
  const DetMatrix m = fermat_matrix(p, modulus);
  return det(m) == fermat_poly(modulus, p.degree());
}

namespace {

uint64_t uniform_mod(std::mt19937_64& gen, uint64_t p) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % p;
  uint64_t v;
  do {
    v = gen();
  } while (v >= limit);
  return v % p;
}

// Maintains a row-echelon basis mod p; rank() is the number of pivots.
class RowReducer {
 public:
  explicit RowReducer(const PrimeField& F, size_t width) : F_(F), width_(width) {}

  void insert(std::vector<uint64_t> row) {
    for (size_t k = 0; k < rows_.size(); ++k) {
      const uint64_t c = row[pivots_[k]];
      if (c == 0) continue;
      const auto& basis = rows_[k];
      for (size_t i = pivots_[k]; i < width_; ++i)
        if (basis[i]) row[i] = F_.sub(row[i], F_.mul(c, basis[i]));
    }
    size_t lead = width_;
    for (size_t i = 0; i < width_; ++i)
      if (row[i]) {
        lead = i;
        break;
      }
    if (lead == width_) return;
    const uint64_t scale = F_.inv(row[lead]);
    for (size_t i = lead; i < width_; ++i) row[i] = F_.mul(row[i], scale);
    rows_.push_back(std::move(row));
    pivots_.push_back(lead);
  }

  int64_t rank() const { return static_cast<int64_t>(rows_.size()); }

 private:
  const PrimeField& F_;
  size_t width_;
  std::vector<std::vector<uint64_t>> rows_;
  std::vector<size_t> pivots_;
};

}  // namespace

int64_t jacobian_rank(const AdmissiblePair& p, uint64_t modulus, uint64_t seed) {
  if (!is_reduced(p)) throw std::invalid_argument("jacobian_rank: pair is not reduced");
  if (p.length() > 8) throw std::invalid_argument("jacobian_rank: supported up to t = 8");
  const int64_t d = p.degree();
  if (monomial_count(d) > 10000) throw std::domain_error("jacobian_rank: binom(d+3,3) exceeds the 10^4 bound");
  const PrimeField F(modulus);
  const AdmissiblePair q = shift_normalize(p, 0);
  const int64_t t = q.length();

  for (uint64_t attempt = 0; attempt <= 8; ++attempt) {
    std::mt19937_64 gen(seed + attempt);
    DetMatrix m;
    m.pair = q;
    m.modulus = modulus;
    m.entries.reserve(static_cast<size_t>(t * t));
    // Entries are drawn row-major, coefficients in monomial order, so a
    // given (pair, modulus, seed) always produces the same sample.
    for (int64_t i = 0; i < t; ++i)
      for (int64_t j = 0; j < t; ++j) {
        PrimeFieldPoly e = zero_poly(modulus, q.b[static_cast<size_t>(j)] - q.a[static_cast<size_t>(i)]);
        for (auto& c : e.coeffs) c = uniform_mod(gen, modulus);
        m.entries.push_back(std::move(e));
      }
    if (det(m).is_zero()) continue;  // degenerate sample, retry with next seed

    const size_t width = static_cast<size_t>(monomial_count(d));
    RowReducer reducer(F, width);
    for (int64_t i = 0; i < t; ++i)
      for (int64_t j = 0; j < t; ++j) {
        const PrimeFieldPoly cof = cofactor(m, i, j);
        const int64_t edeg = q.b[static_cast<size_t>(j)] - q.a[static_cast<size_t>(i)];
        const auto cof_exps = monomial_exponents(cof.degree);
        for (const auto& mu_exps : monomial_exponents(edeg)) {
          std::vector<uint64_t> row(width, 0);
          for (size_t k = 0; k < cof_exps.size(); ++k) {
            if (cof.coeffs[k] == 0) continue;
            const std::array<int64_t, 4> e{cof_exps[k][0] + mu_exps[0], cof_exps[k][1] + mu_exps[1],
                                           cof_exps[k][2] + mu_exps[2], cof_exps[k][3] + mu_exps[3]};
            row[static_cast<size_t>(monomial_index(d, e))] = cof.coeffs[k];
          }
          reducer.insert(std::move(row));
          if (reducer.rank() == static_cast<int64_t>(width)) return reducer.rank();
        }
      }
    return reducer.rank();
  }
  throw std::runtime_error("jacobian_rank: all samples degenerate after 8 reseeds");
}

}  // namespace detsurf
