#include "qpos/laurent_poly.hpp"

#include <algorithm>
#include <sstream>

#include "qpos/errors.hpp"

namespace qpos {

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(Exponent min_exp, std::vector<Integer> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const Integer& c, Exponent e) {
  return LaurentPoly(e, std::vector<Integer>{c});
}

Integer LaurentPoly::coeff(Exponent e) const {
  if (coeffs_.empty() || e < min_exp_ || e > max_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Integer& c) { return c != 0; });
  min_exp_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) min_exp_ = 0;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  const Exponent lo = std::min(min_exp_, b.min_exp_);
  const Exponent hi = std::max(max_exp(), b.max_exp());
  if (lo < min_exp_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_ - lo), Integer(0));
    min_exp_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  const auto off = static_cast<std::size_t>(b.min_exp_ - lo);
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[off + i] += b.coeffs_[i];
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) { return *this += -b; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& b) { return *this = mul(*this, b); }

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return a - b; }

namespace detail {

void mul_schoolbook(std::span<const Integer> a, std::span<const Integer> b,
                    std::span<Integer> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
}

namespace {

void add_into(std::span<Integer> out, std::span<const Integer> x) {
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
}

void sub_into(std::span<Integer> out, std::span<const Integer> x) {
  for (std::size_t i = 0; i < x.size(); ++i) out[i] -= x[i];
}

std::vector<Integer> sum_halves(std::span<const Integer> lo, std::span<const Integer> hi) {
  std::vector<Integer> s(std::max(lo.size(), hi.size()));
  for (std::size_t i = 0; i < lo.size(); ++i) s[i] = lo[i];
  for (std::size_t i = 0; i < hi.size(); ++i) s[i] += hi[i];
  return s;
}

}  // namespace

void mul_karatsuba(std::span<const Integer> a, std::span<const Integer> b,
                   std::span<Integer> out, std::size_t threshold) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (nb == 0) return;
  if (nb < std::max<std::size_t>(threshold, 2)) {
    mul_schoolbook(a, b, out);
    return;
  }
  if (na >= 2 * nb) {
    // Unbalanced: cut a into nb-sized blocks.
    for (std::size_t off = 0; off < na; off += nb) {
      const auto chunk = a.subspan(off, std::min(nb, na - off));
      mul_karatsuba(chunk, b, out.subspan(off), threshold);
    }
    return;
  }

  // nb <= na < 2*nb, so both high halves are non-empty.
  const std::size_t m = na / 2;
  const auto a0 = a.first(m), a1 = a.subspan(m);
  const auto b0 = b.first(m), b1 = b.subspan(m);

  std::vector<Integer> z0(2 * m - 1);
  mul_karatsuba(a0, b0, z0, threshold);
  std::vector<Integer> z2(a1.size() + b1.size() - 1);
  mul_karatsuba(a1, b1, z2, threshold);

  const auto sa = sum_halves(a0, a1);
  const auto sb = sum_halves(b0, b1);
  std::vector<Integer> z1(sa.size() + sb.size() - 1);
  mul_karatsuba(sa, sb, z1, threshold);
  sub_into(z1, z0);
  sub_into(z1, z2);
  while (!z1.empty() && z1.back() == 0) z1.pop_back();

  add_into(out, z0);
  add_into(out.subspan(m), z1);
  add_into(out.subspan(2 * m), z2);
}

}  // namespace detail

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  detail::mul_karatsuba(a.coeffs(), b.coeffs(), out);
  return LaurentPoly(a.min_exp() + b.min_exp(), std::move(out));
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("exact_div by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.size() < b.size()) {
    throw NotDivisible("exact_div: divisor " + to_string(b) + " has larger span than dividend");
  }

  // The divisor is often a sparse product of (1 - q^k) factors.
  std::vector<std::pair<std::size_t, mpz_srcptr>> terms;
  const auto bc = b.coeffs();
  for (std::size_t k = 1; k < bc.size(); ++k) {
    if (bc[k] != 0) terms.emplace_back(k, bc[k].get_mpz_t());
  }
  const Integer& lead = bc[0];
  const bool unit_lead = (lead == 1 || lead == -1);

  std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t nq = a.size() - b.size() + 1;
  std::vector<Integer> quot(nq);
  for (std::size_t i = 0; i < nq; ++i) {
    if (rem[i] == 0) continue;
    if (unit_lead) {
      quot[i] = lead == 1 ? rem[i] : Integer(-rem[i]);
    } else {
      if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t())) {
        throw NotDivisible("exact_div: coefficient not divisible by leading term");
      }
      mpz_divexact(quot[i].get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
    }
    const mpz_srcptr qi = quot[i].get_mpz_t();
    for (const auto& [k, bk] : terms) mpz_submul(rem[i + k].get_mpz_t(), qi, bk);
  }
  for (std::size_t i = nq; i < rem.size(); ++i) {
    if (rem[i] != 0) throw NotDivisible("exact_div: nonzero remainder dividing by " + to_string(b));
  }
  return LaurentPoly(a.min_exp() - b.min_exp(), std::move(quot));
}

LaurentPoly dilate(const LaurentPoly& a, Exponent k) {
  if (k < 1) throw RangeError("dilate: factor must be positive");
  if (k == 1 || a.is_zero()) return a;
  const auto c = a.coeffs();
  std::vector<Integer> out((c.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i * static_cast<std::size_t>(k)] = c[i];
  return LaurentPoly(a.min_exp() * k, std::move(out));
}

LaurentPoly invert_variable(const LaurentPoly& a) {
  if (a.is_zero()) return a;
  std::vector<Integer> out(a.coeffs().rbegin(), a.coeffs().rend());
  return LaurentPoly(-a.max_exp(), std::move(out));
}

LaurentPoly monomial_mul(const LaurentPoly& a, int sign, Exponent e) {
  if (sign != 1 && sign != -1) throw RangeError("monomial_mul: sign must be +1 or -1");
  if (a.is_zero()) return a;
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  if (sign < 0) {
    for (auto& c : out) c = -c;
  }
  return LaurentPoly(a.min_exp() + e, std::move(out));
}

LaurentPoly scale(const LaurentPoly& a, const Integer& c) {
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x *= c;
  return LaurentPoly(a.min_exp(), std::move(out));
}

bool is_nonneg(const LaurentPoly& a) {
  return std::all_of(a.coeffs().begin(), a.coeffs().end(),
                     [](const Integer& c) { return sgn(c) >= 0; });
}

Integer eval_at_one(const LaurentPoly& a) {
  Integer s = 0;
  for (const auto& c : a.coeffs()) s += c;
  return s;
}

std::string to_string(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  Exponent e = a.min_exp();
  for (const auto& c : a.coeffs()) {
    const Exponent exp = e++;
    if (c == 0) continue;
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    if (exp == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 'q';
    if (exp != 1) os << '^' << exp;
  }
  return os.str();
}

}  // namespace qpos
