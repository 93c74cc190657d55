#include "dgrep/scalar.hpp"

#include <ostream>

#include "dgrep/error.hpp"

namespace dgrep {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint32_t p) {
  if (a % p == 0) throw Error("division by zero in F_" + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

std::uint64_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  return {p};
}

std::string Field::str() const {
  return p == 0 ? std::string("rational") : std::to_string(p);
}

Scalar::Scalar(long v, Field f) : p_(f.p) {
  if (p_ == 0) {
    q_ = v;
  } else {
    long m = v % static_cast<long>(p_);
    if (m < 0) m += p_;
    r_ = static_cast<std::uint64_t>(m);
  }
}

Scalar::Scalar(const mpq_class& q, Field f) : p_(f.p) {
  if (p_ == 0) {
    q_ = q;
    q_.canonicalize();
  } else {
    r_ = reduce(q.get_num(), p_) * mod_inverse(reduce(q.get_den(), p_), p_) % p_;
  }
}

Scalar Scalar::parse(std::string_view text, Field f) {
  std::string s(text);
  auto bad = [&] { return Error("malformed scalar \"" + s + "\""); };
  if (s.empty()) throw bad();
  std::size_t start = (s[0] == '-') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto digits = [&](std::size_t b, std::size_t e) {
    if (b >= e) return false;
    for (std::size_t i = b; i < e; ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(start, s.size())) throw bad();
  } else if (!digits(start, slash) || !digits(slash + 1, s.size())) {
    throw bad();
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw bad();
  q.canonicalize();
  return Scalar(q, f);
}

mpq_class Scalar::value() const {
  if (p_ == 0) return q_;
  return mpq_class(mpz_class(static_cast<unsigned long>(r_)));
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(r_);
  return q_.get_str();
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_)
    throw FieldMismatch("scalar field mismatch: " + Field{p_}.str() + " vs " + Field{o.p_}.str());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) q_ += o.q_;
  else r_ = (r_ + o.r_) % p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) q_ -= o.q_;
  else r_ = (r_ + p_ - o.r_) % p_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) q_ *= o.q_;
  else r_ = r_ * o.r_ % p_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) throw Error("division by zero");
  if (p_ == 0) q_ /= o.q_;
  else r_ = r_ * mod_inverse(o.r_, p_) % p_;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ == 0) r.q_ = -q_;
  else r.r_ = (p_ - r_) % p_;
  return r;
}

void Scalar::sub_mul(const Scalar& b, const Scalar& c) {
  check_same(b);
  check_same(c);
  if (p_ == 0) {
    if (sgn(b.q_) == 0 || sgn(c.q_) == 0) return;
    q_ -= b.q_ * c.q_;
  } else {
    r_ = (r_ + p_ - b.r_ * c.r_ % p_) % p_;
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace dgrep
